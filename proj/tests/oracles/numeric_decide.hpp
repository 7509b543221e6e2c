#pragma once

// Floating-point reference for the real-preimage question: roots of q and of
// the Vieta polynomials come from companion-matrix eigenvalues.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "symalg/decide.hpp"

namespace symalg::oracle {

inline std::vector<std::complex<double>> numeric_roots(const std::vector<double>& c) {
    // c ascending, c.back() != 0
    const int d = static_cast<int>(c.size()) - 1;
    if (d <= 0) return {};
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) M(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) M(i, d - 1) = -c[i] / c[d];
    Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

inline std::complex<double> eval(const UniPoly& p, std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p[i].get_d();
    return acc;
}

// Imaginary parts below tol count as real.
inline bool numeric_real_preimage(const OrbitParam& op, double tol = 1e-6) {
    std::vector<double> qc;
    for (const auto& c : op.param.q.coeffs()) qc.push_back(c.get_d());
    for (auto t : numeric_roots(qc)) {
        if (std::abs(t.imag()) > tol * (1 + std::abs(t))) continue;
        double theta = t.real();
        std::complex<double> d = eval(op.param.denominator, theta);
        std::size_t coord = 0;
        bool real = true;
        for (auto [ni, li] : op.lambda.multiplicities()) {
            (void)ni;
            // u^l - e1 u^{l-1} + e2 u^{l-2} - ...
            std::vector<double> c(li + 1);
            c[li] = 1;
            for (unsigned j = 1; j <= li; ++j) {
                double e = (eval(op.param.v[coord + j - 1], theta) / d).real();
                c[li - j] = j % 2 ? -e : e;
            }
            coord += li;
            for (auto z : numeric_roots(c))
                if (std::abs(z.imag()) > std::sqrt(tol) * (1 + std::abs(z))) real = false;
        }
        if (real) return true;
    }
    return false;
}

}  // namespace symalg::oracle
