#pragma once

#include <optional>
#include <vector>

#include "symalg/combi.hpp"
#include "symalg/linalg.hpp"
#include "symalg/poly.hpp"

namespace symalg {

enum class BasisKind { Elementary, PowerSum, CompleteHomogeneous, Monomial };

const char* basis_letter(BasisKind k);
BasisKind parse_basis(const std::string& s);

// Consecutive blocks of variables: block k (1-based) owns sizes[k-1] variables.
struct BlockStructure {
    std::vector<unsigned> sizes;

    unsigned total() const;
    // 1-based index of the first variable of block k.
    unsigned first(unsigned k) const;
    std::size_t count() const { return sizes.size(); }
};

// e_k, p_k or h_k in nvars variables; e_0 = h_0 = 1, p_0 = nvars.
Polynomial basis_polynomial(BasisKind kind, unsigned k, unsigned nvars);
// m_lambda; the partition needs at most nvars parts.
Polynomial monomial_symmetric(const Partition& lambda, unsigned nvars);
// The same family restricted to block `block`, embedded in bs.total() variables.
Polynomial block_basis_polynomial(BasisKind kind, unsigned block, unsigned k, const BlockStructure& bs);

bool is_symmetric(const Polynomial& f);
bool is_block_symmetric(const Polynomial& f, const BlockStructure& bs);

// F is a polynomial in y_k standing for the k-th basis element of `from` in
// nvars variables; returns the same element written in `to`.
Polynomial newton_convert(const Polynomial& F, BasisKind from, BasisKind to, unsigned nvars);

// Returns F in y-variables with F(basis) = f. y_k is the k-th basis element;
// with blocks, the y-variables run block by block (y for block 1 first).
Polynomial ftsp_rewrite(const Polynomial& f, BasisKind target, const std::optional<BlockStructure>& bs = std::nullopt);

// F with F(gens) = f and deg F <= degree_bound, or nullopt when the linear
// system has no solution in that range (a too small bound looks the same).
std::optional<Polynomial> subring_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                             unsigned degree_bound);

// Print names for y-variables: e1.., or e{i,j} with blocks.
Names y_names(BasisKind kind, unsigned nvars, const std::optional<BlockStructure>& bs = std::nullopt);

// f^[lambda]: the variables of part k all become y_k.
Polynomial lambda_substitute(const Polynomial& f, const Composition& lambda);
Polynomial lambda_substitute(const Polynomial& f, const Partition& lambda);

// Blocks of f^[lambda] for a partition: one block per distinct part size.
BlockStructure lambda_blocks(const Partition& lambda);

// l x n matrix, row k carries 1/n_k on the columns of part k.
QMatrix distribution_matrix(const Partition& lambda);

// sum_i sum_sigma sigma(f_i)^2; refuses more than max_vars variables.
Polynomial symmetric_closure_gate(const std::vector<Polynomial>& fs, unsigned max_vars = 6);

// sum_i m_i x_i^j
Polynomial weighted_power_sum(unsigned j, const std::vector<unsigned>& m);

}  // namespace symalg
