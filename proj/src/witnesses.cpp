#include "assocform/witnesses.hpp"

#include "assocform/associated.hpp"
#include "assocform/errors.hpp"
#include "assocform/milnor.hpp"

#include <random>
#include <string>

namespace assocform {

namespace {

Exponents unit_sum(int n, std::initializer_list<std::pair<int, int>> parts) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (auto [var, k] : parts) e[static_cast<std::size_t>(var)] += k;
    return e;
}

// Q and Phi(Q) both nondegenerate, each certified by its Milnor model. A
// quadratic Phi(Q) (only for n = 2, m = 3) has no such model.
bool both_stages_nondegenerate(const Form& q) {
    try {
        const AssociatedForm phi = associated_form(q);
        if (phi.form.degree() < 3) {
            // A quadratic form is nondegenerate iff its Hessian is.
            return !hessian_determinant(phi.form).is_zero();
        }
        build_model(phi.form);
        return true;
    } catch (const DegenerateFormError&) {
        return false;
    }
}

} // namespace

Form build_interior_witness(int n, int m) {
    if (n < 2 || m < 3)
        throw UnsupportedPairError("witness needs n >= 2 and m >= 3");
    if (m == 3 && n < 3)
        throw UnsupportedPairError("no interior witness for n = 2, m = 3");
    Form w(n, m);
    if (m == 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    w += Form::monomial(unit_sum(n, {{i, 1}, {j, 1}, {k, 1}}));
        return w;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            w += Form::monomial(unit_sum(n, {{i, m - 2}, {j, 2}}));
            w += Form::monomial(unit_sum(n, {{i, 2}, {j, m - 2}}));
        }
    }
    return w;
}

WitnessReport measure_witness_span(int n, int m) {
    WitnessReport report;
    report.n = n;
    report.m = m;
    report.witness = build_interior_witness(n, m);

    const int d = n * (m - 2) - 1;
    const MonomialBasis basis(n, d);
    report.target_dim = static_cast<int>(basis.size()) - n;

    const Subspace<Rational> v = ideal_piece(report.witness, d);
    report.achieved_dim = static_cast<int>(v.dim());

    report.pure_power_coordinates_zero = true;
    for (int i = 0; i < n; ++i) {
        Exponents pure(static_cast<std::size_t>(n), 0);
        pure[static_cast<std::size_t>(i)] = d;
        const Index col = basis.index_of(pure);
        for (Index r = 0; r < v.dim(); ++r)
            if (v.basis()(r, col) != 0) report.pure_power_coordinates_zero = false;
    }
    return report;
}

WitnessReport verify_witness_span(int n, int m) {
    WitnessReport report = measure_witness_span(n, m);
    if (report.achieved_dim != report.target_dim)
        throw VerificationFailure("witness (" + std::to_string(n) + ", " + std::to_string(m) +
                                  "): dim V = " + std::to_string(report.achieved_dim) +
                                  ", expected " + std::to_string(report.target_dim));
    if (!report.pure_power_coordinates_zero)
        throw VerificationFailure("witness (" + std::to_string(n) + ", " + std::to_string(m) +
                                  "): V has a nonzero pure-power coordinate");
    return report;
}

Form build_q0(int m) {
    if (m < 3) throw DegreeError("Q0 needs m >= 3");
    if (m == 4)
        return Form::monomial({4, 0}) + Form::monomial({2, 2}) + Form::monomial({0, 4});
    return Form::monomial({m - 1, 1}) + Form::monomial({1, m - 1});
}

std::optional<Form> search_nondegenerate_near(const Form& witness, std::uint64_t seed,
                                              int trials) {
    const int n = witness.vars();
    const int m = witness.degree();
    const auto monomials = monomials_of_degree(n, m);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution include(0.5);
    std::uniform_int_distribution<int> pick(0, 3);
    const int values[] = {-2, -1, 1, 2};

    for (int t = 0; t < trials; ++t) {
        Form candidate = witness;
        if (t > 0) {
            Form::Terms noise;
            for (const auto& e : monomials)
                if (include(rng)) noise.emplace(e, Rational(values[pick(rng)]));
            const Rational eps(Integer(1), Integer(1) << ((t - 1) % 8));
            candidate += eps * Form(n, m, std::move(noise));
        }
        if (candidate.is_zero() || candidate.degree() != m) continue;
        if (both_stages_nondegenerate(candidate)) return candidate;
    }
    return std::nullopt;
}

} // namespace assocform
