#pragma once

#include "assocform/form.hpp"

#include <cstdint>
#include <optional>

namespace assocform {

/// The interior witness W(n, m):
///   m = 3:  sum_{i<j<k} z_i z_j z_k
///   m >= 4: sum_{i<j} (z_i^(m-2) z_j^2 + z_i^2 z_j^(m-2))
/// Throws UnsupportedPairError for (2, 3) and for m = 3 with n < 3.
Form build_interior_witness(int n, int m);

/// Outcome of measuring V(W) = J(W) in degree n(m-2)-1 against the span of
/// all monomials of that degree other than the pure powers.
struct WitnessReport {
    int n = 0;
    int m = 0;
    Form witness{1, 0};
    /// dim of degree-(n(m-2)-1) forms minus n.
    int target_dim = 0;
    int achieved_dim = 0;
    bool pure_power_coordinates_zero = false;

    bool passed() const { return achieved_dim == target_dim && pure_power_coordinates_zero; }
};

WitnessReport measure_witness_span(int n, int m);

/// As measure_witness_span, but throws VerificationFailure naming the
/// offending dimension or coordinate when the report does not pass.
WitnessReport verify_witness_span(int n, int m);

/// Q0(m): z1^4 + z1^2 z2^2 + z2^4 for m = 4, otherwise z1^(m-1) z2 + z1 z2^(m-1).
Form build_q0(int m);

/// Deterministic search for Q = witness + eps * P with P a sparse random form,
/// such that Q and Phi(Q) are both nondegenerate. Trial 0 is the witness
/// itself. Both stages of every returned form are certified by build_model.
std::optional<Form> search_nondegenerate_near(const Form& witness, std::uint64_t seed,
                                              int trials);

} // namespace assocform
