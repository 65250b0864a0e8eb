#pragma once

// Levi matrices (complex Hessians) of real-valued functions on C^n.
//
// Index convention: L_ij = d^2 g / (d conj(z_i) d z_j). The other common
// convention, d^2 g / (d z_i d conj(z_j)), is the transpose (equivalently the
// entrywise conjugate) of this one. Eigenvalues, rank and vanishing do not
// depend on the choice.
//
// For g = log ||F|| with w = F(z), J = DF(z), S = ||w||^2, a = J^* w:
//
//     L = (S J^*J - a a^*) / (2 S^2),
//
// and v^* L v = (S ||Jv||^2 - |<w, Jv>|^2) / (2 S^2) >= 0 by Cauchy-Schwarz,
// with equality along v = J^{-1} w.

#include <functional>

#include "autjet/automorphism.hpp"
#include "autjet/types.hpp"

namespace autjet {

/// Complex n x n matrix equal to its own conjugate transpose.
class HermitianMatrix {
public:
    /// Throws std::invalid_argument unless m is square and Hermitian within kHermitianTolerance entrywise.
    explicit HermitianMatrix(CMatrix m);
    /// (m + m^*) / 2; m must be square.
    static HermitianMatrix symmetrized(const CMatrix& m);
    static HermitianMatrix zero(std::size_t n);

    static constexpr double kHermitianTolerance = 1e-12;

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const noexcept { return m_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    /// Ascending real eigenvalues.
    Eigen::VectorXd eigenvalues() const;
    double min_eigenvalue() const;
    double frobenius_norm() const { return m_.norm(); }

private:
    struct Unchecked {};
    HermitianMatrix(CMatrix m, Unchecked) : m_(std::move(m)) {}

    CMatrix m_;
};

double frobenius_distance(const HermitianMatrix& a, const HermitianMatrix& b);

/// A Levi matrix attached to the nonzero point where it was evaluated.
struct LeviSample {
    CVector point;
    HermitianMatrix levi;
};

/// Squared norms of F(z) below this are treated as F(z) = 0.
inline constexpr double kMinSquaredNorm = 1e-300;

/// Closed-form Levi matrix of log ||F|| at z. Throws NumericError when
/// ||F(z)||^2 < kMinSquaredNorm or the evaluation overflows.
HermitianMatrix levi_log_norm(const AutomorphismWord& w, const CVector& z);

/// Levi matrix of log ||z||: (S I - z z^*) / (2 S^2) with S = ||z||^2.
HermitianMatrix levi_log_norm_identity(const CVector& z);

using RealSampler = std::function<double(const CVector&)>;

inline constexpr double kDefaultFdStep = 1e-4;

/// Levi matrix of an arbitrary real-valued g by central second differences on
/// the 2n real coordinates, using
///   d^2/(d conj(z_i) d z_j) = 1/4 (dxi dxj + dyi dyj + i (dyi dxj - dxi dyj)).
/// The Hermitian part of the stencil estimate is returned. Throws
/// NumericError if g is non-finite at a stencil point; std::invalid_argument
/// if h <= 0.
HermitianMatrix wirtinger_levi_fd(const RealSampler& g, const CVector& z, double h = kDefaultFdStep);

/// log ||F(z)|| as a sampler, for use with wirtinger_levi_fd.
RealSampler log_norm_sampler(const AutomorphismWord& w);

inline constexpr double kDefaultPsdTolerance = 1e-9;

/// Smallest eigenvalue >= -tol.
bool is_psd(const HermitianMatrix& m, double tol = kDefaultPsdTolerance);

/// Frobenius norm < tol.
bool is_pluriharmonic_at(const HermitianMatrix& m, double tol);

/// Number of eigenvalues with |lambda| > tol * max(1, ||m||_F).
std::size_t numerical_rank(const HermitianMatrix& m, double tol = 1e-9);

/// ||L v|| / ||v|| for v = DF(z)^{-1} F(z), the analytic kernel direction of
/// levi_log_norm(w, z). Throws NumericError when F(z) vanishes.
double kernel_residual(const AutomorphismWord& w, const CVector& z);

}  // namespace autjet
