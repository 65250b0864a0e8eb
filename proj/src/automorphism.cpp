#include "autjet/automorphism.hpp"

#include <string>

namespace autjet {

double invertibility_ratio(const CMatrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0) return 0.0;
    double bound = 1.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const double row = a.row(i).norm();
        if (row == 0.0) return 0.0;
        bound *= row;
    }
    return std::abs(a.fullPivLu().determinant()) / bound;
}

Generator Generator::affine(CMatrix a, CVector b) {
    if (a.rows() != a.cols()) throw DimensionError("affine generator: matrix is not square");
    require_dimension(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(b.size()),
                      "affine generator translation");
    if (a.rows() == 0) throw DimensionError("affine generator: empty matrix");
    if (invertibility_ratio(a) < kMinInvertibility)
        throw InvalidGenerator(InvalidGenerator::Reason::singular_matrix, "affine generator: matrix is singular");
    return Generator(AffineMap{std::move(a), std::move(b)});
}

Generator Generator::shear(std::size_t coordinate, ComplexPolynomial p) {
    if (coordinate >= p.dimension()) {
        throw InvalidGenerator(InvalidGenerator::Reason::bad_index,
                               "shear coordinate z" + std::to_string(coordinate + 1) + " out of range");
    }
    if (p.depends_on(coordinate)) {
        throw InvalidGenerator(InvalidGenerator::Reason::self_referential_shear,
                               "shear polynomial depends on its own coordinate z" + std::to_string(coordinate + 1));
    }
    return Generator(ShearMap{coordinate, std::move(p)});
}

std::size_t Generator::dimension() const {
    if (const auto* a = as_affine()) return static_cast<std::size_t>(a->linear.rows());
    return as_shear()->polynomial.dimension();
}

CVector Generator::apply(const CVector& z) const {
    require_dimension(dimension(), static_cast<std::size_t>(z.size()), "generator application");
    if (const auto* a = as_affine()) return a->linear * z + a->translation;
    const auto* s = as_shear();
    CVector out = z;
    out[static_cast<Eigen::Index>(s->coordinate)] += s->polynomial.evaluate(z);
    return out;
}

CMatrix Generator::jacobian(const CVector& z) const {
    require_dimension(dimension(), static_cast<std::size_t>(z.size()), "generator jacobian");
    if (const auto* a = as_affine()) return a->linear;
    const auto* s = as_shear();
    const auto n = static_cast<Eigen::Index>(dimension());
    CMatrix j = CMatrix::Identity(n, n);
    // Row k gains the partials of p; the diagonal entry stays 1 since p ignores z_k.
    j.row(static_cast<Eigen::Index>(s->coordinate)) += s->polynomial.gradient(z).transpose();
    return j;
}

Generator Generator::inverse() const {
    if (const auto* a = as_affine()) {
        CMatrix inv = a->linear.fullPivLu().inverse();
        CVector shift = -(inv * a->translation);
        return Generator(AffineMap{std::move(inv), std::move(shift)});
    }
    const auto* s = as_shear();
    return Generator(ShearMap{s->coordinate, -s->polynomial});
}

AutomorphismWord::AutomorphismWord(std::size_t dimension, std::vector<Generator> generators)
    : AutomorphismWord(dimension) {
    for (auto& g : generators) then(std::move(g));
}

AutomorphismWord& AutomorphismWord::then(Generator g) {
    require_dimension(dimension_, g.dimension(), "word generator");
    generators_.push_back(std::move(g));
    return *this;
}

CVector evaluate(const AutomorphismWord& w, const CVector& z) {
    require_dimension(w.dimension(), static_cast<std::size_t>(z.size()), "evaluate");
    CVector x = z;
    for (const auto& g : w.generators()) x = g.apply(x);
    return x;
}

std::pair<CVector, CMatrix> evaluate_with_jacobian(const AutomorphismWord& w, const CVector& z) {
    require_dimension(w.dimension(), static_cast<std::size_t>(z.size()), "jacobian");
    const auto n = static_cast<Eigen::Index>(w.dimension());
    CVector x = z;
    CMatrix j = CMatrix::Identity(n, n);
    for (const auto& g : w.generators()) {
        j = g.jacobian(x) * j;
        x = g.apply(x);
    }
    return {std::move(x), std::move(j)};
}

CMatrix jacobian(const AutomorphismWord& w, const CVector& z) { return evaluate_with_jacobian(w, z).second; }

AutomorphismWord invert(const AutomorphismWord& w) {
    AutomorphismWord out(w.dimension());
    const auto& gens = w.generators();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) out.then(it->inverse());
    return out;
}

AutomorphismWord compose(const AutomorphismWord& outer, const AutomorphismWord& inner) {
    require_dimension(outer.dimension(), inner.dimension(), "compose");
    AutomorphismWord out = inner;
    for (const auto& g : outer.generators()) out.then(g);
    return out;
}

Jet1 jet1(const AutomorphismWord& w) {
    auto [value, derivative] = evaluate_with_jacobian(w, CVector::Zero(static_cast<Eigen::Index>(w.dimension())));
    return Jet1{std::move(value), std::move(derivative)};
}

AutomorphismWord theta_normalize(const AutomorphismWord& w) {
    const Jet1 jet = jet1(w);
    CMatrix inv = jet.derivative_at_zero.fullPivLu().inverse();
    CVector shift = -(inv * jet.value_at_zero);
    AutomorphismWord out = w;
    out.then(Generator::affine(std::move(inv), std::move(shift)));
    return out;
}

bool is_purely_affine(const AutomorphismWord& w) {
    for (const auto& g : w.generators()) {
        if (const auto* s = g.as_shear(); s && s->polynomial.degree() > 1) return false;
    }
    return true;
}

}  // namespace autjet
