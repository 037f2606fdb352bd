#pragma once

// Invariant-theoretic predicates for binary forms (n = 2).

#include "assocform/form.hpp"

#include <string>
#include <vector>

namespace assocform {

/// Hankel determinant det(a_{i+j}) of a binary form of even degree 2N written
/// as sum_j C(2N, j) a_j z1^(2N-j) z2^j.
Rational catalecticant(const Form& q);

/// Sylvester resultant of two binary forms; zero iff they share a linear factor.
Rational resultant_binary(const Form& f, const Form& g);

/// Resultant of the two partials. Only its vanishing is meaningful: it is zero
/// iff q has a repeated linear factor.
Rational discriminant_binary(const Form& q);

struct MultiplicityProfile {
    struct Entry {
        int multiplicity;
        /// Total degree of the product of the distinct factors with this multiplicity.
        int degree;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;
    int form_degree = 0;

    int max_multiplicity() const;
};

/// Multiplicities of the linear factors over C, computed by a squarefree
/// decomposition of q(t, 1); the factor z2 is accounted for separately.
MultiplicityProfile multiplicity_profile(const Form& q);

enum class Stability { Stable, SemistableNotStable, Unstable };

std::string to_string(Stability s);

struct StabilityVerdict {
    Stability kind;
    int max_multiplicity;
};

StabilityVerdict classify_stability(const Form& q);

/// For nondegenerate binary q: true iff no power (a z1 + b z2)^(2(m-2)-1)
/// lies in V(q) = J(q) in that degree, i.e. iff Phi(q) is nondegenerate.
bool cone_intersection_trivial(const Form& q);

} // namespace assocform
