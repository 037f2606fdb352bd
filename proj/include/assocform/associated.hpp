#pragma once

#include "assocform/form.hpp"
#include "assocform/milnor.hpp"

#include <cstdint>
#include <map>
#include <random>

namespace assocform {

/// The associated form of Q together with the socle coefficients mu_k.
///
/// For |k| = n(m-2) the product e_1^k1 ... e_n^kn of the variable classes in
/// M(Q) equals mu_k times the Hessian class, and
///
///   form = sum_k mu_k * (n(m-2))! / (k_1! ... k_n!) * z^k.
struct AssociatedForm {
    Form form;
    std::map<Exponents, Rational, GrlexGreater> mu_table;
};

/// mu_k for |k| = n(m-2); throws DegreeError otherwise.
Rational mu(const MilnorModel& model, const Exponents& k);

AssociatedForm associated_form(const MilnorModel& model);
/// Throws DegenerateFormError when Q is degenerate.
AssociatedForm associated_form(const Form& q);

/// Phi(Phi(Q)). Throws UnsupportedDegreeError when n(m-2) < 3 and
/// DegenerateFormError when either stage is degenerate.
AssociatedForm second_associated_form(const Form& q);

/// Phi(Q_C) == (det C)^2 * Phi(Q)_{(C^{-1})^T}, compared exactly.
bool check_equivariance(const Form& q, const LinearChange& c);

/// Entries uniform on [-3, 3], rejection-sampled until invertible.
LinearChange random_linear_change(int n, std::mt19937_64& rng);

} // namespace assocform
