#pragma once

// Tame polynomial automorphisms of C^n.
//
// A word [g_1, g_2, ..., g_m] denotes the map g_m o ... o g_1: the first listed
// generator is applied first. Words are never expanded into a single
// polynomial map; values and Jacobians are propagated generator by generator.
//
// Coordinates are 0-based in this API. The text format (see lang.hpp) uses the
// 1-based names z1..zn.

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "autjet/polynomial.hpp"
#include "autjet/types.hpp"

namespace autjet {

/// z -> A z + b with A invertible.
struct AffineMap {
    CMatrix linear;
    CVector translation;
};

/// z_k -> z_k + p(z), all other coordinates fixed; p does not involve z_k.
struct ShearMap {
    std::size_t coordinate;
    ComplexPolynomial polynomial;
};

/// Invertibility ratio |det A| / prod_i ||row_i(A)||, in [0, 1] by Hadamard's
/// inequality. Affine generators require it to reach kMinInvertibility.
double invertibility_ratio(const CMatrix& a);
inline constexpr double kMinInvertibility = 1e-12;

class Generator {
public:
    /// Throws InvalidGenerator(singular_matrix) when invertibility_ratio(a) < kMinInvertibility.
    static Generator affine(CMatrix a, CVector b);
    /// Throws InvalidGenerator(self_referential_shear) when p depends on z_{coordinate+1}.
    static Generator shear(std::size_t coordinate, ComplexPolynomial p);

    std::size_t dimension() const;
    bool is_affine() const noexcept { return std::holds_alternative<AffineMap>(map_); }
    const AffineMap* as_affine() const noexcept { return std::get_if<AffineMap>(&map_); }
    const ShearMap* as_shear() const noexcept { return std::get_if<ShearMap>(&map_); }

    CVector apply(const CVector& z) const;
    CMatrix jacobian(const CVector& z) const;
    Generator inverse() const;

private:
    explicit Generator(std::variant<AffineMap, ShearMap> map) : map_(std::move(map)) {}

    std::variant<AffineMap, ShearMap> map_;
};

/// An element of the tame automorphism group. The empty word is the identity.
class AutomorphismWord {
public:
    explicit AutomorphismWord(std::size_t dimension) : dimension_(dimension) {
        if (dimension == 0) throw DimensionError("automorphism dimension must be positive");
    }
    AutomorphismWord(std::size_t dimension, std::vector<Generator> generators);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<Generator>& generators() const noexcept { return generators_; }
    bool empty() const noexcept { return generators_.empty(); }
    std::size_t size() const noexcept { return generators_.size(); }

    /// Appends g, to be applied after everything already in the word.
    AutomorphismWord& then(Generator g);

private:
    std::size_t dimension_;
    std::vector<Generator> generators_;
};

/// F(0) and DF(0).
struct Jet1 {
    CVector value_at_zero;
    CMatrix derivative_at_zero;
};

CVector evaluate(const AutomorphismWord& w, const CVector& z);
/// DF(z) by the chain rule along the partial images.
CMatrix jacobian(const AutomorphismWord& w, const CVector& z);
/// Value and Jacobian in a single pass.
std::pair<CVector, CMatrix> evaluate_with_jacobian(const AutomorphismWord& w, const CVector& z);

AutomorphismWord invert(const AutomorphismWord& w);
/// The word for outer o inner (inner applied first).
AutomorphismWord compose(const AutomorphismWord& outer, const AutomorphismWord& inner);

Jet1 jet1(const AutomorphismWord& w);

/// The normalization retraction F -> DF(0)^{-1} (F - F(0)), realized by
/// appending one affine generator. The result fixes the origin with identity
/// derivative there, and theta(H o F) = theta(F) for every affine H.
AutomorphismWord theta_normalize(const AutomorphismWord& w);

/// True if every generator is an affine map (shears of degree <= 1 count).
bool is_purely_affine(const AutomorphismWord& w);

}  // namespace autjet
