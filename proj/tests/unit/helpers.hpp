#pragma once

#include <functional>

#include "autjet/automorphism.hpp"

namespace autjet::testing {

inline CVector vec(std::initializer_list<Complex> xs) {
    CVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) v[i++] = x;
    return v;
}

inline CMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.begin()->size());
    CMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (auto x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Shear z_{k+1} <- z_{k+1} + c * z_{from+1}^power.
inline Generator monomial_shear(std::size_t n, std::size_t k, std::size_t from, unsigned power, Complex c = 1.0) {
    Exponent e(n, 0);
    e[from] = power;
    return Generator::shear(k, ComplexPolynomial::monomial(n, e, c));
}

/// Central-difference Jacobian of a holomorphic map: column j is dF/dz_j,
/// estimated along the real direction of z_j.
inline CMatrix fd_jacobian(const std::function<CVector(const CVector&)>& f, const CVector& z, double h = 1e-5) {
    const auto n = z.size();
    CMatrix j(f(z).size(), n);
    for (Eigen::Index c = 0; c < n; ++c) {
        CVector up = z, down = z;
        up[c] += h;
        down[c] -= h;
        j.col(c) = (f(up) - f(down)) / (2.0 * h);
    }
    return j;
}

}  // namespace autjet::testing
