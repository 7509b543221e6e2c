#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symalg/rational.hpp"

namespace symalg {

struct Composition {
    std::vector<unsigned> parts;

    Composition() = default;
    explicit Composition(std::vector<unsigned> p);
    unsigned n() const;
    std::size_t length() const { return parts.size(); }
    bool operator==(const Composition& o) const { return parts == o.parts; }
    bool operator!=(const Composition& o) const { return parts != o.parts; }
};

// Parts kept ascending. Multiplicity form groups equal parts: (n_1^l_1 ... n_r^l_r).
struct Partition {
    std::vector<unsigned> parts;

    Partition() = default;
    // Sorts the input.
    explicit Partition(std::vector<unsigned> p);
    static Partition from_multiplicities(const std::vector<std::pair<unsigned, unsigned>>& nl);

    unsigned n() const;
    std::size_t length() const { return parts.size(); }
    // (n_i, l_i) with n_1 < ... < n_r.
    std::vector<std::pair<unsigned, unsigned>> multiplicities() const;
    Composition as_composition() const { return Composition(parts); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
};

std::string to_string(const Composition& c);
// Multiplicity form, e.g. "(2^2 3^1)".
std::string to_string(const Partition& p);
// Accepts "2,2,3", "(2,2,3)" or the multiplicity form "2^2 3^1".
Partition parse_partition(const std::string& text);

// Descending lexicographic order, so n = 4, length 3 gives (2,1,1), (1,2,1), (1,1,2).
// alternate_odd keeps the compositions with 1 at every odd (1-based) position.
std::vector<Composition> enumerate_compositions(unsigned n, std::optional<unsigned> length = std::nullopt,
                                                bool alternate_odd = false);

// Increasing length, then lexicographic in the ascending parts.
std::vector<Partition> enumerate_partitions(unsigned n, std::optional<unsigned> min_length = std::nullopt);

enum class Order { Precedes, Follows, Equal, Incomparable };
const char* to_string(Order o);

// a precedes b when b is obtained from a by merging adjacent parts.
Order composition_order(const Composition& a, const Composition& b);
Composition join(const Composition& a, const Composition& b);

// True iff the parts of a can be grouped into partitions of the parts of b.
bool refines(const Partition& a, const Partition& b);

Partition type_of_point(const std::vector<Rational>& u);
// u must be ascending; run lengths of equal values.
Composition largest_composition(const std::vector<Rational>& u);

// n! / prod n_i!^{l_i}
Integer orbit_size(const Partition& p);

struct TranspositionSeq {
    // Adjacent 1-based positions (j, j+1), in application order.
    std::vector<std::pair<unsigned, unsigned>> swaps;
};

std::pair<TranspositionSeq, std::vector<Rational>> minimal_adjacent_transpositions(std::vector<Rational> a);

}  // namespace symalg
