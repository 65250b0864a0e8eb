#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace autjet {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension were combined.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A numerically singular situation: log of a vanishing norm, a non-finite
/// sample, overflow during evaluation.
class NumericError : public Error {
public:
    using Error::Error;
};

/// A generator that would not be an automorphism (singular affine part,
/// shear polynomial depending on its own coordinate).
class InvalidGenerator : public Error {
public:
    enum class Reason { singular_matrix, self_referential_shear, bad_index };

    InvalidGenerator(Reason reason, const std::string& what) : Error(what), reason_(reason) {}

    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

/// Two fingerprints built from different sampling configurations were compared.
class ConfigError : public Error {
public:
    using Error::Error;
};

inline void require_dimension(std::size_t expected, std::size_t actual, const char* what) {
    if (expected != actual) {
        throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                             ", got " + std::to_string(actual));
    }
}

}  // namespace autjet
