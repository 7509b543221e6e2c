#include "symalg/decide.hpp"

#include "symalg/error.hpp"

namespace symalg {

namespace {

void check(const OrbitParam& op) {
    auto v = validate(op.param);
    if (!v) throw Error(ErrorCode::InvalidParam, v.diagnostic);
    if (op.param.dimension() != op.lambda.length())
        throw Error(ErrorCode::InvalidParam, "parametrization has " + std::to_string(op.param.dimension()) +
                                                 " coordinates, partition " + to_string(op.lambda) + " has length " +
                                                 std::to_string(op.lambda.length()));
}

}  // namespace

std::vector<Rational> orbit_compress(const std::vector<Rational>& u, const Partition& lambda) {
    if (u.size() != lambda.n())
        throw Error(ErrorCode::PatternMismatch, "point has " + std::to_string(u.size()) + " coordinates, partition " +
                                                    to_string(lambda) + " needs " + std::to_string(lambda.n()));
    std::vector<Rational> out;
    std::size_t pos = 0;
    for (auto [ni, li] : lambda.multiplicities()) {
        // e_0..e_li of the run values, built one value at a time.
        std::vector<Rational> e{1};
        for (unsigned j = 0; j < li; ++j) {
            const Rational& x = u[pos];
            for (unsigned k = 1; k < ni; ++k)
                if (u[pos + k] != x)
                    throw Error(ErrorCode::PatternMismatch,
                                "coordinates " + std::to_string(pos + 1) + ".." + std::to_string(pos + ni) +
                                    " should be equal for " + to_string(lambda));
            pos += ni;
            e.push_back(0);
            for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += x * e[k - 1];
        }
        out.insert(out.end(), e.begin() + 1, e.end());
    }
    return out;
}

VietaLift vieta_lift(const OrbitParam& op) {
    check(op);
    VietaLift out;
    std::size_t coord = 0;
    for (auto [ni, li] : op.lambda.multiplicities()) {
        (void)ni;
        BiPoly rho(li + 1);
        rho[li] = op.param.denominator;
        for (unsigned j = 1; j <= li; ++j) {
            const UniPoly& v = op.param.v[coord + j - 1];
            rho[li - j] = j % 2 ? -v : v;
        }
        coord += li;
        out.rho.push_back(std::move(rho));
    }
    return out;
}

bool decide_real_preimage(const OrbitParam& op) {
    VietaLift lift = vieta_lift(op);
    if (op.param.q.degree() <= 0) return false;
    ThomContext ctx(op.param.q);
    auto lead = ctx.signs_at_roots(op.param.denominator);
    for (std::size_t r = 0; r < ctx.root_count(); ++r) {
        if (lead[r] == 0) throw Error(ErrorCode::InvalidParam, "denominator vanishes at a real root of q");
        const ThomEncoding& enc = ctx.encodings()[r];
        bool all_real = true;
        for (std::size_t i = 0; i < lift.rho.size() && all_real; ++i) {
            int degree = static_cast<int>(lift.rho[i].size()) - 1;
            all_real = parametric_real_root_count_mult(lift.rho[i], ctx, enc) == degree;
        }
        if (all_real) return true;
    }
    return false;
}

}  // namespace symalg
