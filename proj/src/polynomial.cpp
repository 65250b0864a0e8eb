#include "autjet/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace autjet {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

// powers[i][k] = z_i^k for k up to the largest exponent of variable i.
std::vector<std::vector<Complex>> power_table(const ComplexPolynomial::TermMap& terms, const CVector& z) {
    const auto n = static_cast<std::size_t>(z.size());
    std::vector<unsigned> max_exp(n, 0);
    for (const auto& [e, c] : terms)
        for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], e[i]);

    std::vector<std::vector<Complex>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        powers[i].resize(max_exp[i] + 1);
        powers[i][0] = 1.0;
        for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i][k] = powers[i][k - 1] * z[static_cast<Eigen::Index>(i)];
    }
    return powers;
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::size_t dimension) : dimension_(dimension) {
    if (dimension == 0) throw DimensionError("polynomial dimension must be positive");
}

ComplexPolynomial ComplexPolynomial::constant(std::size_t dimension, Complex c) {
    ComplexPolynomial p(dimension);
    p.add_term(Exponent(dimension, 0), c);
    return p;
}

ComplexPolynomial ComplexPolynomial::variable(std::size_t dimension, std::size_t index) {
    if (index >= dimension) {
        throw DimensionError("variable z" + std::to_string(index + 1) + " out of range for dimension " +
                             std::to_string(dimension));
    }
    Exponent e(dimension, 0);
    e[index] = 1;
    return monomial(dimension, std::move(e), 1.0);
}

ComplexPolynomial ComplexPolynomial::monomial(std::size_t dimension, Exponent exponent, Complex c) {
    require_dimension(dimension, exponent.size(), "monomial exponent");
    ComplexPolynomial p(dimension);
    p.add_term(exponent, c);
    return p;
}

unsigned ComplexPolynomial::degree() const {
    // Graded order puts the highest degree first.
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

bool ComplexPolynomial::depends_on(std::size_t index) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.at(index) > 0; });
}

Complex ComplexPolynomial::evaluate(const CVector& z) const {
    require_dimension(dimension_, static_cast<std::size_t>(z.size()), "polynomial evaluation");
    const auto powers = power_table(terms_, z);
    Complex sum = 0.0;
    for (const auto& [e, c] : terms_) {
        Complex term = c;
        for (std::size_t i = 0; i < dimension_; ++i)
            if (e[i] != 0) term *= powers[i][e[i]];
        sum += term;
    }
    return sum;
}

CVector ComplexPolynomial::gradient(const CVector& z) const {
    require_dimension(dimension_, static_cast<std::size_t>(z.size()), "polynomial gradient");
    const auto powers = power_table(terms_, z);
    CVector grad = CVector::Zero(static_cast<Eigen::Index>(dimension_));
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < dimension_; ++i) {
            if (e[i] == 0) continue;
            Complex term = c * static_cast<double>(e[i]) * powers[i][e[i] - 1];
            for (std::size_t j = 0; j < dimension_; ++j)
                if (j != i && e[j] != 0) term *= powers[j][e[j]];
            grad[static_cast<Eigen::Index>(i)] += term;
        }
    }
    return grad;
}

ComplexPolynomial ComplexPolynomial::operator-() const {
    ComplexPolynomial out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
    require_dimension(dimension_, rhs.dimension_, "polynomial addition");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
    require_dimension(dimension_, rhs.dimension_, "polynomial subtraction");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Complex c) {
    if (c == Complex(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    std::erase_if(terms_, [](const auto& t) { return t.second == Complex(0.0); });
    return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs) {
    require_dimension(lhs.dimension_, rhs.dimension_, "polynomial multiplication");
    ComplexPolynomial out(lhs.dimension_);
    Exponent e(lhs.dimension_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

ComplexPolynomial ComplexPolynomial::pow(unsigned exponent) const {
    ComplexPolynomial result = constant(dimension_, 1.0);
    ComplexPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

void ComplexPolynomial::add_term(const Exponent& e, Complex c) {
    if (c == Complex(0.0)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex(0.0)) terms_.erase(it);
    }
}

}  // namespace autjet
