#pragma once

#include <vector>

#include "symalg/combi.hpp"
#include "symalg/realroot.hpp"
#include "symalg/zerodim.hpp"

namespace symalg {

// A parametrized finite set W in the compressed coordinates of a partition:
// coordinates come block by block (part sizes ascending), block i holding
// e_{i,1}, ..., e_{i,l_i}.
struct OrbitParam {
    Partition lambda;
    ZeroDimParam param;
};

// Per block, the elementary symmetric values of the block's distinct entries.
// u must be laid out as repeated runs: l_1 runs of length n_1, then l_2 runs
// of length n_2, and so on.
std::vector<Rational> orbit_compress(const std::vector<Rational>& u, const Partition& lambda);

// rho_i(u, T) = d*u^{l_i} - v_{i,1}*u^{l_i-1} + ... + (-1)^{l_i} v_{i,l_i},
// d the denominator of the parametrization.
struct VietaLift {
    std::vector<BiPoly> rho;
};

VietaLift vieta_lift(const OrbitParam& op);

// True iff some point of W has a real preimage, i.e. for some real root t of
// q every rho_i(., t) splits over the reals (roots counted with multiplicity).
bool decide_real_preimage(const OrbitParam& op);

}  // namespace symalg
