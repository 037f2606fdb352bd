#include "assocform/milnor.hpp"

#include "assocform/errors.hpp"

#include <string>

namespace assocform {

namespace {

void require_model_shape(const Form& q) {
    if (q.vars() < 2) throw DimensionError("Milnor model needs at least two variables");
    if (q.is_zero()) throw DegenerateFormError("the zero form is degenerate");
    if (q.degree() < 3)
        throw DegreeError("Milnor model needs degree >= 3, got " + std::to_string(q.degree()));
}

int dim_forms(int vars, int degree) {
    if (degree < 0) return 0;
    return static_cast<int>(binomial(degree + vars - 1, degree));
}

} // namespace

Subspace<Rational> ideal_piece(const Form& q, int j) {
    if (q.degree() < 1) throw DegreeError("ideal piece needs a form of positive degree");
    const int n = q.vars();
    const MonomialBasis target(n, j);
    const int shift = j - (q.degree() - 1);
    if (shift < 0) return Subspace<Rational>(target.size());

    std::vector<Form> partials;
    for (int i = 0; i < n; ++i) partials.push_back(partial_derivative(q, i));
    const auto multipliers = monomials_of_degree(n, shift);

    Matrix<Rational> gens = Matrix<Rational>::Zero(
        static_cast<Index>(multipliers.size() * partials.size()), target.size());
    Index row = 0;
    for (const auto& p : partials) {
        for (const auto& a : multipliers) {
            for (const auto& [e, c] : p.terms()) {
                Exponents s = e;
                for (std::size_t k = 0; k < s.size(); ++k) s[k] += a[k];
                gens(row, target.index_of(s)) = c;
            }
            ++row;
        }
    }
    return Subspace<Rational>::span(std::move(gens));
}

const DegreePiece& MilnorModel::piece(int j) const {
    if (j < 0 || j >= static_cast<int>(pieces_.size()))
        throw DegreeError("no piece of degree " + std::to_string(j) + " in the model");
    return pieces_[static_cast<std::size_t>(j)];
}

Vector<Rational> MilnorModel::normal_form(int j, const Vector<Rational>& v) const {
    return piece(j).ideal.residual(v);
}

MilnorModel build_model(const Form& q) {
    require_model_shape(q);
    const int n = q.vars();
    const int m = q.degree();
    const int top = n * (m - 2);

    MilnorModel model(q, top);
    for (int j = 0; j <= top + 1; ++j) {
        MonomialBasis basis(n, j);
        Subspace<Rational> ideal = ideal_piece(q, j);
        std::vector<Exponents> standard;
        for (Index c : ideal.free_columns()) standard.push_back(basis.monomial(c));
        model.hilbert_.push_back(static_cast<int>(ideal.codim()));
        model.pieces_.push_back(DegreePiece{std::move(basis), std::move(ideal), std::move(standard)});
    }

    const auto& h = model.hilbert_;
    if (h[static_cast<std::size_t>(top)] != 1 || h[static_cast<std::size_t>(top + 1)] != 0)
        throw DegenerateFormError("form " + render(q) + " is degenerate: quotient dimensions " +
                                  std::to_string(h[static_cast<std::size_t>(top)]) + " and " +
                                  std::to_string(h[static_cast<std::size_t>(top + 1)]) +
                                  " in degrees " + std::to_string(top) + " and " +
                                  std::to_string(top + 1));
    model.hilbert_.pop_back();

    for (int j = 0; j <= top; ++j) {
        const int got = h[static_cast<std::size_t>(j)];
        if (j <= m - 2 && got != dim_forms(n, j))
            throw VerificationFailure("dim L_" + std::to_string(j) + " = " + std::to_string(got) +
                                      ", expected the full space");
        if (j == m - 1 && got != dim_forms(n, j) - n)
            throw VerificationFailure("dim L_" + std::to_string(j) + " = " + std::to_string(got) +
                                      ", expected codimension " + std::to_string(n));
        if (got != h[static_cast<std::size_t>(top - j)])
            throw VerificationFailure("Hilbert function is not symmetric at degree " +
                                      std::to_string(j));
    }

    model.hessian_ = hessian_determinant(q);
    const DegreePiece& socle = model.piece(top);
    model.socle_column_ = socle.ideal.free_columns().front();
    const Vector<Rational> reduced =
        socle.ideal.residual(socle.basis.coordinates(model.hessian_));
    model.hessian_value_ = reduced(model.socle_column_);
    if (model.hessian_value_ == 0)
        throw VerificationFailure("Hessian class vanishes in the top degree");
    return model;
}

bool is_nondegenerate(const Form& q) {
    try {
        build_model(q);
        return true;
    } catch (const DegenerateFormError&) {
        return false;
    }
}

Rational socle_coefficient(const Form& f, const MilnorModel& model) {
    if (f.vars() != model.vars())
        throw DimensionMismatch("form in " + std::to_string(f.vars()) + " variables, model in " +
                                std::to_string(model.vars()));
    if (f.is_zero()) return Rational(0);
    if (f.degree() != model.socle_degree())
        throw DegreeError("socle coefficient needs degree " + std::to_string(model.socle_degree()) +
                          ", got " + std::to_string(f.degree()));
    const DegreePiece& top = model.piece(model.socle_degree());
    const Vector<Rational> r = top.ideal.residual(top.basis.coordinates(f));
    return r(model.socle_column()) / model.hessian_socle_value();
}

} // namespace assocform
