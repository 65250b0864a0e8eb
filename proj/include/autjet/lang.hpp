#pragma once

// Text format for automorphism words.
//
//   word  := atom ( "." atom )*
//   atom  := "id"
//          | "affine" "(" row ( ";" row )* ")"     n rows of A, then b, each n entries
//          | "shear" "(" index "," poly ")"        z_index <- z_index + poly
//   poly  := term ( ("+" | "-") term )*
//   term  := unary ( "*"? unary )*                 juxtaposition multiplies
//   unary := ("+" | "-") unary | power
//   power := primary ( "^" integer )?
//   primary := number | number "i" | "i" | "z" integer | "(" poly ")"
//
// "A . B" is the composition A o B: B is applied first, so the text reads in
// the usual right-to-left order while the word stores generators in
// application order.
//
//   affine(2,0;0,1; 1,0) . shear(2, z1^2)    is  z -> (2 z1 + 1, z2 + z1^2)

#include <cstddef>
#include <string>
#include <string_view>

#include "autjet/automorphism.hpp"
#include "autjet/polynomial.hpp"

namespace autjet {

struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

enum class ParseErrorKind { syntax, unknown_variable, self_referential_shear, singular_matrix, dimension_mismatch };

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message);

    ParseErrorKind kind() const noexcept { return kind_; }
    SourceSpan span() const noexcept { return span_; }
    const std::string& message() const noexcept { return message_; }

private:
    ParseErrorKind kind_;
    SourceSpan span_;
    std::string message_;
};

AutomorphismWord parse_automorphism(std::string_view text, std::size_t n);

/// A polynomial expression in z1..zn.
ComplexPolynomial parse_polynomial(std::string_view text, std::size_t n);

/// Comma-separated constant expressions, e.g. "1, (2-i)".
CVector parse_point(std::string_view text, std::size_t n);

std::string serialize(const AutomorphismWord& w);
std::string serialize(const ComplexPolynomial& p);
std::string serialize(const Generator& g);

/// Constant literal with 17 significant digits: "2", "-0.5", "(1+2i)", "(3i)".
std::string format_complex(Complex c);

}  // namespace autjet
