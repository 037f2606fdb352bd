#pragma once

#include "assocform/form.hpp"
#include "assocform/milnor.hpp"

namespace assocform {

/// Degree-j part of Ann(g) = {f : f(d/dz)(g) = 0}.
struct AnnihilatorPiece {
    int degree;
    Subspace<Rational> subspace;
};

/// Kernel of f -> apolar_action(f, g) on degree-j forms, 0 <= j <= deg g + 1.
AnnihilatorPiece annihilator_piece(const Form& g, int j);

/// True iff Ann(Phi(Q)) and J(Q) agree in every degree 0 .. n(m-2)+1.
bool verify_inverse_system(const Form& q);

/// Rank of {d^a g : |a| = order} among the degree-(deg g - order) forms.
int derivative_rank(const Form& g, int order);

/// S(x) = rho((x_1 e_1 + ... + x_n e_n)^eta), expanded by repeated
/// multiplication inside M(Q). rho vanishes below the top degree and maps the
/// Hessian class to 1.
Form graded_inverse_system(const MilnorModel& model);

/// R(x) = sum_j rho((x_1 e_1 + ... + x_n e_n)^j) / j!. Checks R = S / eta!
/// and throws VerificationFailure otherwise.
Form inverse_system_series(const MilnorModel& model);

} // namespace assocform
