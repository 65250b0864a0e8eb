#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "autjet/types.hpp"

namespace autjet {

/// Exponent multi-index of a monomial; entry i is the power of z_{i+1}.
using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded-lexicographic order, largest first: higher total degree sorts
/// first, ties broken lexicographically with a larger leading exponent first.
struct GradedLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in n complex variables with complex coefficients.
///
/// Terms are kept in canonical form: every exponent has length n and no stored
/// coefficient is exactly zero. Iteration order is graded-lexicographic,
/// highest degree first.
class ComplexPolynomial {
public:
    using TermMap = std::map<Exponent, Complex, GradedLexGreater>;

    explicit ComplexPolynomial(std::size_t dimension);

    static ComplexPolynomial constant(std::size_t dimension, Complex c);
    /// The coordinate function z_{index+1}.
    static ComplexPolynomial variable(std::size_t dimension, std::size_t index);
    static ComplexPolynomial monomial(std::size_t dimension, Exponent exponent, Complex c);

    std::size_t dimension() const noexcept { return dimension_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned degree() const;
    /// True if some monomial has a positive power of z_{index+1}.
    bool depends_on(std::size_t index) const;

    Complex evaluate(const CVector& z) const;
    /// Holomorphic partial derivatives (dp/dz_1, ..., dp/dz_n) at z.
    CVector gradient(const CVector& z) const;

    ComplexPolynomial operator-() const;
    ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator*=(Complex c);

    friend ComplexPolynomial operator+(ComplexPolynomial lhs, const ComplexPolynomial& rhs) { return lhs += rhs; }
    friend ComplexPolynomial operator-(ComplexPolynomial lhs, const ComplexPolynomial& rhs) { return lhs -= rhs; }
    friend ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs);
    friend ComplexPolynomial operator*(ComplexPolynomial p, Complex c) { return p *= c; }
    friend ComplexPolynomial operator*(Complex c, ComplexPolynomial p) { return p *= c; }

    ComplexPolynomial pow(unsigned exponent) const;

    friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

private:
    void add_term(const Exponent& e, Complex c);

    std::size_t dimension_;
    TermMap terms_;
};

}  // namespace autjet
