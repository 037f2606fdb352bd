#include "assocform/associated.hpp"

#include "assocform/errors.hpp"

#include <string>

namespace assocform {

Rational mu(const MilnorModel& model, const Exponents& k) {
    if (static_cast<int>(k.size()) != model.vars())
        throw DimensionMismatch("exponent vector length differs from the variable count");
    if (total_degree(k) != model.socle_degree())
        throw DegreeError("mu needs |k| = " + std::to_string(model.socle_degree()) + ", got " +
                          std::to_string(total_degree(k)));
    return socle_coefficient(Form::monomial(k), model);
}

AssociatedForm associated_form(const MilnorModel& model) {
    const int top = model.socle_degree();
    AssociatedForm out{Form(model.vars(), top), {}};

    // The reduction of z^k is read straight off the rref basis: a standard
    // column reduces to itself, a pivot column to minus its row entry.
    const DegreePiece& piece = model.piece(top);
    const Index socle = model.socle_column();
    const auto& pivots = piece.ideal.pivots();
    std::vector<Index> row_of(static_cast<std::size_t>(piece.basis.size()), -1);
    for (Index r = 0; r < static_cast<Index>(pivots.size()); ++r)
        row_of[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = r;

    Form::Terms terms;
    for (Index c = 0; c < piece.basis.size(); ++c) {
        const Exponents& k = piece.basis.monomial(c);
        const Index r = row_of[static_cast<std::size_t>(c)];
        Rational residual = r < 0 ? Rational(c == socle ? 1 : 0) : Rational(-piece.ideal.basis()(r, socle));
        Rational value = residual / model.hessian_socle_value();
        terms.emplace(k, value * Rational(multinomial(top, k)));
        out.mu_table.emplace(k, std::move(value));
    }
    out.form = Form(model.vars(), top, std::move(terms));

    for (const auto& [k, value] : out.mu_table)
        if (out.form.coefficient(k) != value * Rational(multinomial(top, k)))
            throw VerificationFailure("associated form coefficient mismatch");
    if (out.form.is_zero()) throw VerificationFailure("associated form vanished");
    return out;
}

AssociatedForm associated_form(const Form& q) { return associated_form(build_model(q)); }

AssociatedForm second_associated_form(const Form& q) {
    if (q.vars() >= 2 && q.degree() >= 3 && q.vars() * (q.degree() - 2) < 3)
        throw UnsupportedDegreeError("associated form has degree " +
                                     std::to_string(q.vars() * (q.degree() - 2)) +
                                     " < 3; the second associated form is undefined");
    const AssociatedForm first = associated_form(q);
    return associated_form(first.form);
}

bool check_equivariance(const Form& q, const LinearChange& c) {
    const Form lhs = associated_form(apply_linear_change(q, c)).form;
    const Form phi = associated_form(q).form;
    const Form rhs = (c.determinant() * c.determinant()) *
                     apply_linear_change(phi, c.inverse().transpose());
    return lhs == rhs;
}

LinearChange random_linear_change(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    for (;;) {
        Matrix<Rational> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
        if (determinant(m) != 0) return LinearChange(std::move(m));
    }
}

} // namespace assocform
