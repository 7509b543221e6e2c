#include "symalg/rational.hpp"

#include "symalg/error.hpp"

namespace symalg {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw SyntaxError(0, "empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        Integer num;
        if (num.set_str(digits, 10) != 0) throw SyntaxError(0, "malformed decimal '" + s + "'");
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw SyntaxError(0, "malformed rational '" + s + "'");
        if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + s + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    Integer num;
    if (num.set_str(s, 10) != 0) throw SyntaxError(0, "malformed integer '" + s + "'");
    return Rational(num);
}

Rational rational_pow(const Rational& r, unsigned k) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), k);
    out.canonicalize();
    return out;
}

}  // namespace symalg
