#include "autjet/levi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace autjet {

HermitianMatrix::HermitianMatrix(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("Hermitian matrix must be square");
    for (Eigen::Index i = 0; i < m_.rows(); ++i)
        for (Eigen::Index j = 0; j <= i; ++j)
            if (std::abs(m_(i, j) - std::conj(m_(j, i))) > kHermitianTolerance)
                throw std::invalid_argument("matrix is not Hermitian");
}

HermitianMatrix HermitianMatrix::symmetrized(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("Hermitian matrix must be square");
    CMatrix h = 0.5 * (m + m.adjoint());
    // Exact real diagonal.
    for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = h(i, i).real();
    return HermitianMatrix(std::move(h), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return HermitianMatrix(CMatrix::Zero(k, k), Unchecked{});
}

Eigen::VectorXd HermitianMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double HermitianMatrix::min_eigenvalue() const { return eigenvalues()(0); }

double frobenius_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
    require_dimension(a.dimension(), b.dimension(), "frobenius distance");
    return (a.matrix() - b.matrix()).norm();
}

namespace {

HermitianMatrix levi_from_value_and_jacobian(const CVector& w, const CMatrix& j) {
    const double s = w.squaredNorm();
    if (!std::isfinite(s)) throw NumericError("log-norm Levi matrix: F(z) is not finite");
    if (s < kMinSquaredNorm) throw NumericError("log-norm Levi matrix: F(z) vanishes");
    if (!j.allFinite()) throw NumericError("log-norm Levi matrix: DF(z) is not finite");
    const CVector a = j.adjoint() * w;
    const CMatrix numerator = s * (j.adjoint() * j) - a * a.adjoint();
    return HermitianMatrix::symmetrized(numerator / (2.0 * s * s));
}

}  // namespace

HermitianMatrix levi_log_norm(const AutomorphismWord& w, const CVector& z) {
    const auto [value, jac] = evaluate_with_jacobian(w, z);
    return levi_from_value_and_jacobian(value, jac);
}

HermitianMatrix levi_log_norm_identity(const CVector& z) {
    const auto n = z.size();
    return levi_from_value_and_jacobian(z, CMatrix::Identity(n, n));
}

HermitianMatrix wirtinger_levi_fd(const RealSampler& g, const CVector& z, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
    const Eigen::Index n = z.size();
    const Eigen::Index m = 2 * n;

    // Real coordinates: u[i] = Re z_i, u[n + i] = Im z_i.
    Eigen::VectorXd u(m);
    u << z.real(), z.imag();
    auto sample = [&](const Eigen::VectorXd& v) {
        CVector p(n);
        for (Eigen::Index i = 0; i < n; ++i) p[i] = Complex(v[i], v[n + i]);
        const double value = g(p);
        if (!std::isfinite(value)) throw NumericError("finite-difference Levi: non-finite sample");
        return value;
    };

    const double center = sample(u);
    Eigen::MatrixXd hess(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
        Eigen::VectorXd up = u, down = u;
        up[a] += h;
        down[a] -= h;
        hess(a, a) = (sample(up) - 2.0 * center + sample(down)) / (h * h);
        for (Eigen::Index b = 0; b < a; ++b) {
            Eigen::VectorXd pp = u, pm = u, mp = u, mm = u;
            pp[a] += h; pp[b] += h;
            pm[a] += h; pm[b] -= h;
            mp[a] -= h; mp[b] += h;
            mm[a] -= h; mm[b] -= h;
            hess(a, b) = hess(b, a) = (sample(pp) - sample(pm) - sample(mp) + sample(mm)) / (4.0 * h * h);
        }
    }

    CMatrix levi(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = hess(i, j) + hess(n + i, n + j);
            const double im = hess(n + i, j) - hess(i, n + j);
            levi(i, j) = 0.25 * Complex(re, im);
        }
    }
    return HermitianMatrix::symmetrized(levi);
}

RealSampler log_norm_sampler(const AutomorphismWord& w) {
    return [w](const CVector& z) { return std::log(evaluate(w, z).norm()); };
}

bool is_psd(const HermitianMatrix& m, double tol) { return m.min_eigenvalue() >= -tol; }

bool is_pluriharmonic_at(const HermitianMatrix& m, double tol) { return m.frobenius_norm() < tol; }

std::size_t numerical_rank(const HermitianMatrix& m, double tol) {
    const double cutoff = tol * std::max(1.0, m.frobenius_norm());
    const Eigen::VectorXd ev = m.eigenvalues();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i]) > cutoff) ++rank;
    return rank;
}

double kernel_residual(const AutomorphismWord& w, const CVector& z) {
    const auto [value, jac] = evaluate_with_jacobian(w, z);
    const HermitianMatrix levi = levi_from_value_and_jacobian(value, jac);
    const CVector v = jac.fullPivLu().solve(value);
    return (levi.matrix() * v).norm() / v.norm();
}

}  // namespace autjet
