#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symalg/combi.hpp"
#include "symalg/decide.hpp"
#include "symalg/poly.hpp"

namespace symalg {

// phi_a = sum_i c_i p_{i,l_i+1} + sum_{i,j} a_{i,j} p_{i,j} over the blocks of
// lambda (block i has l_i variables), with c_i = 1 exactly when l_i is odd so
// that phi_a has even degree and is proper.
struct ObjectiveSpec {
    Partition lambda;
    std::vector<std::vector<Rational>> a;
    std::vector<int> c;
    Polynomial phi;
};

ObjectiveSpec build_objective(const Partition& lambda, std::mt19937_64& rng);
ObjectiveSpec build_objective(const Partition& lambda, std::vector<std::vector<Rational>> a);

// g_1..g_s together with [L_1 ... L_s 1] * Jac(g, phi) = 0. Variables are the
// m variables of g and phi, followed by L_1..L_s.
struct LagrangeSystem {
    std::vector<Polynomial> equations;
    unsigned nvars = 0;
    unsigned multipliers = 0;
};

LagrangeSystem lagrange_system(const std::vector<Polynomial>& gs, const Polynomial& phi, unsigned nvars);

// Critical points of phi on V(gs), both block symmetric for lambda_blocks(lambda),
// computed in block elementary coordinates. Throws PositiveDimensional when
// the critical set is infinite.
OrbitParam critical_points_sym(const std::vector<Polynomial>& gs, const Polynomial& phi, const Partition& lambda,
                               std::uint64_t seed);

// True iff fs together with all s x s minors of Jac(fs) has no complex zero.
bool verify_regularity(const std::vector<Polynomial>& fs, unsigned nvars);

struct EmptinessOptions {
    std::uint64_t seed = 0x5eed;
    bool check_regularity = false;
};

// True iff the symmetric system fs has no real zero in n variables. Assumes
// Jac(fs) has rank s on V(fs); with check_regularity the assumption is
// verified first and AssumptionViolated is thrown when it fails.
bool real_emptiness(const std::vector<Polynomial>& fs, unsigned n, const EmptinessOptions& opts = {});

enum class Nonneg { Nonnegative, Witness, Unknown };

struct NonnegResult {
    Nonneg status = Nonneg::Unknown;
    std::vector<Rational> witness;  // n coordinates, when status is Witness
    Rational value;                 // f(witness)
    std::string note;
};

const char* to_string(Nonneg s);

// Three-valued nonnegativity test for a symmetric f in n variables, checking
// every pattern with at most max(2, deg f / 2) distinct coordinates.
NonnegResult nonneg_degree_principle(const Polynomial& f, unsigned n, std::uint64_t seed = 0x5eed);

// Signs of f at the real points of a parametrization, in root order.
std::vector<int> signs_at_points(const Polynomial& f, const ZeroDimParam& param);

}  // namespace symalg
