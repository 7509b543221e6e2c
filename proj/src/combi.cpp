#include "symalg/combi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "symalg/error.hpp"

namespace symalg {

namespace {

void check_parts(const std::vector<unsigned>& p) {
    for (unsigned x : p)
        if (x == 0) throw Error(ErrorCode::IndexOutOfRange, "parts must be positive");
}

std::set<unsigned> cuts(const Composition& c) {
    std::set<unsigned> s;
    unsigned acc = 0;
    for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) s.insert(acc += c.parts[i]);
    return s;
}

Composition from_cuts(const std::set<unsigned>& s, unsigned n) {
    std::vector<unsigned> parts;
    unsigned prev = 0;
    for (unsigned c : s) {
        parts.push_back(c - prev);
        prev = c;
    }
    parts.push_back(n - prev);
    return Composition(parts);
}

void check_same_sum(unsigned a, unsigned b) {
    if (a != b)
        throw Error(ErrorCode::SumMismatch, "sizes differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Composition::Composition(std::vector<unsigned> p) : parts(std::move(p)) { check_parts(parts); }

unsigned Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
    check_parts(parts);
    std::sort(parts.begin(), parts.end());
}

Partition Partition::from_multiplicities(const std::vector<std::pair<unsigned, unsigned>>& nl) {
    std::vector<unsigned> p;
    for (auto [ni, li] : nl) p.insert(p.end(), li, ni);
    return Partition(p);
}

unsigned Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

std::vector<std::pair<unsigned, unsigned>> Partition::multiplicities() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned x : parts) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

std::string to_string(const Composition& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.parts.size(); ++i) s += (i ? "," : "") + std::to_string(c.parts[i]);
    return s + ")";
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    bool first = true;
    for (auto [ni, li] : p.multiplicities()) {
        if (!first) s += " ";
        first = false;
        s += std::to_string(ni) + "^" + std::to_string(li);
    }
    return s + ")";
}

Partition parse_partition(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '(' && c != ')') t += (c == ',' ? ' ' : c);
    std::istringstream in(t);
    std::vector<unsigned> parts;
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                parts.push_back(static_cast<unsigned>(std::stoul(tok)));
            } else {
                unsigned ni = static_cast<unsigned>(std::stoul(tok.substr(0, caret)));
                unsigned li = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
                parts.insert(parts.end(), li, ni);
            }
        } catch (const std::logic_error&) {
            throw SyntaxError(0, "malformed partition '" + text + "'");
        }
    }
    if (parts.empty()) throw SyntaxError(0, "empty partition");
    return Partition(parts);
}

std::vector<Composition> enumerate_compositions(unsigned n, std::optional<unsigned> length, bool alternate_odd) {
    std::vector<Composition> out;
    if (n == 0) return out;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned rest) {
        if (rest == 0) {
            if (!length || cur.size() == *length) out.emplace_back(cur);
            return;
        }
        if (length && cur.size() >= *length) return;
        for (unsigned first = rest; first >= 1; --first) {
            if (alternate_odd && cur.size() % 2 == 0 && first != 1) continue;
            cur.push_back(first);
            rec(rest - first);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Partition> enumerate_partitions(unsigned n, std::optional<unsigned> min_length) {
    std::vector<Partition> out;
    if (n == 0) return out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned min_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned x = min_part; x <= rest; ++x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(n, 1);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.parts < b.parts;
    });
    if (min_length) {
        std::vector<Partition> kept;
        for (auto& p : out)
            if (p.length() >= *min_length) kept.push_back(p);
        return kept;
    }
    return out;
}

const char* to_string(Order o) {
    switch (o) {
        case Order::Precedes: return "precedes";
        case Order::Follows: return "follows";
        case Order::Equal: return "equal";
        case Order::Incomparable: return "incomparable";
    }
    return "?";
}

Order composition_order(const Composition& a, const Composition& b) {
    check_same_sum(a.n(), b.n());
    auto ca = cuts(a), cb = cuts(b);
    if (ca == cb) return Order::Equal;
    if (std::includes(ca.begin(), ca.end(), cb.begin(), cb.end())) return Order::Precedes;
    if (std::includes(cb.begin(), cb.end(), ca.begin(), ca.end())) return Order::Follows;
    return Order::Incomparable;
}

Composition join(const Composition& a, const Composition& b) {
    check_same_sum(a.n(), b.n());
    auto ca = cuts(a), cb = cuts(b);
    std::set<unsigned> both;
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::inserter(both, both.end()));
    return from_cuts(both, a.n());
}

bool refines(const Partition& a, const Partition& b) {
    check_same_sum(a.n(), b.n());
    // Pack the parts of a, largest first, into bins sized by the parts of b.
    std::vector<unsigned> items(a.parts.rbegin(), a.parts.rend());
    std::vector<unsigned> bins = b.parts;
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == items.size()) return true;
        for (std::size_t j = 0; j < bins.size(); ++j) {
            if (bins[j] < items[k]) continue;
            bool seen = false;
            for (std::size_t i = 0; i < j; ++i)
                if (bins[i] == bins[j]) seen = true;
            if (seen) continue;  // symmetric bins give the same search tree
            bins[j] -= items[k];
            bool ok = place(k + 1);
            bins[j] += items[k];
            if (ok) return true;
        }
        return false;
    };
    return place(0);
}

Partition type_of_point(const std::vector<Rational>& u) {
    if (u.empty()) throw Error(ErrorCode::IndexOutOfRange, "empty point");
    std::map<Rational, unsigned> count;
    for (const auto& x : u) ++count[x];
    std::vector<unsigned> parts;
    for (const auto& [v, c] : count) parts.push_back(c);
    return Partition(parts);
}

Composition largest_composition(const std::vector<Rational>& u) {
    if (u.empty()) throw Error(ErrorCode::IndexOutOfRange, "empty point");
    std::vector<unsigned> parts{1};
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (u[i] < u[i - 1]) throw Error(ErrorCode::NotSorted, "point is not ascending at index " + std::to_string(i + 1));
        if (u[i] == u[i - 1])
            ++parts.back();
        else
            parts.push_back(1);
    }
    return Composition(parts);
}

Integer orbit_size(const Partition& p) {
    Integer num, f;
    mpz_fac_ui(num.get_mpz_t(), p.n());
    for (unsigned x : p.parts) {
        mpz_fac_ui(f.get_mpz_t(), x);
        num /= f;
    }
    return num;
}

std::pair<TranspositionSeq, std::vector<Rational>> minimal_adjacent_transpositions(std::vector<Rational> a) {
    TranspositionSeq t;
    const std::size_t n = a.size();
    for (std::size_t pass = 0; pass + 1 < n; ++pass) {
        bool swapped = false;
        for (std::size_t j = 0; j + 1 < n - pass; ++j) {
            // strict comparison: equal values never move past each other
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                t.swaps.emplace_back(static_cast<unsigned>(j + 1), static_cast<unsigned>(j + 2));
                swapped = true;
            }
        }
        if (!swapped) break;
    }
    return {t, a};
}

}  // namespace symalg
