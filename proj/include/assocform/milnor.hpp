#pragma once

// Graded model of the Milnor algebra M(Q) = Q[z]/J(Q) of a form Q of degree
// m >= 3, built one degree at a time. In degree j the Jacobian ideal is the
// span of z^a * dQ/dz_i with |a| = j - (m-1); its complement is spanned by the
// standard monomials (non-pivot columns of the rref basis).
//
// Q is nondegenerate exactly when the piece of degree n(m-2) has codimension
// one and the next piece is everything; the model refuses anything else.

#include "assocform/form.hpp"
#include "assocform/linalg.hpp"

#include <vector>

namespace assocform {

/// Span of {z^a * Q_i : |a| = j - (deg Q - 1)} inside the degree-j forms.
/// Zero when j < deg Q - 1. No nondegeneracy assumption.
Subspace<Rational> ideal_piece(const Form& q, int j);

struct DegreePiece {
    MonomialBasis basis;
    Subspace<Rational> ideal;
    std::vector<Exponents> standard_monomials;

    int degree() const { return basis.degree(); }
    Index quotient_dim() const { return ideal.codim(); }
};

class MilnorModel {
public:
    const Form& form() const { return form_; }
    int vars() const { return form_.vars(); }
    int form_degree() const { return form_.degree(); }
    /// n(m-2), the top nonzero degree.
    int socle_degree() const { return socle_degree_; }

    /// Pieces for degrees 0 .. socle_degree()+1.
    const DegreePiece& piece(int j) const;
    const std::vector<int>& hilbert() const { return hilbert_; }

    const Form& hessian() const { return hessian_; }
    /// Column (in the top-degree basis) of the single standard monomial.
    Index socle_column() const { return socle_column_; }
    /// Coordinate of the reduced Hessian at socle_column(); never zero.
    const Rational& hessian_socle_value() const { return hessian_value_; }

    /// Residual of a degree-j coordinate vector modulo the ideal.
    Vector<Rational> normal_form(int j, const Vector<Rational>& v) const;

    friend MilnorModel build_model(const Form& q);

private:
    MilnorModel(Form q, int socle_degree) : form_(std::move(q)), socle_degree_(socle_degree) {}

    Form form_;
    int socle_degree_;
    std::vector<DegreePiece> pieces_;
    std::vector<int> hilbert_;
    Form hessian_{1, 0};
    Index socle_column_ = -1;
    Rational hessian_value_;
};

/// Requires n >= 2 and deg Q >= 3. Throws DegenerateFormError when Q is
/// degenerate; throws VerificationFailure if a Hilbert-function law fails.
MilnorModel build_model(const Form& q);

bool is_nondegenerate(const Form& q);

/// The unique lambda with [f] = lambda [Hess Q] in the top degree.
Rational socle_coefficient(const Form& f, const MilnorModel& model);

} // namespace assocform
