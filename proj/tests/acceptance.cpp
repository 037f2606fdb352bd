// Acceptance suite. Prints one PASS/FAIL line per criterion; exits nonzero if
// any criterion fails. Every comparison is exact.

#include "assocform/apolarity.hpp"
#include "assocform/associated.hpp"
#include "assocform/binary.hpp"
#include "assocform/errors.hpp"
#include "assocform/milnor.hpp"
#include "assocform/parse.hpp"
#include "assocform/rational.hpp"
#include "assocform/witnesses.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace assocform;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Form P(const char* text, int n = 2) { return parse_form(text, n); }

Form fermat(int n, int m) {
    Form f(n, m);
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = m;
        f += Form::monomial(e);
    }
    return f;
}

Form perturbed_triple_product() {
    const auto found = search_nondegenerate_near(build_interior_witness(3, 3), 1, 100);
    if (!found) throw VerificationFailure("no nondegenerate perturbation of z1*z2*z3");
    return *found;
}

// The suite of criterion 3.
std::vector<Form> suite() {
    return {P("z1^3 + z2^3"),
            P("z1^2*z2 + z1*z2^2"),
            P("z1^4 + z2^4"),
            P("z1^4 + z1^2*z2^2 + z2^4"),
            P("z1^5 + z2^5"),
            P("z1^5 + z1*z2^4"),
            P("z1^6 + z2^6"),
            P("z1^3 + z2^3 + z3^3", 3),
            perturbed_triple_product(),
            P("z1^4 + z2^4 + z3^4", 3)};
}

std::vector<Form> binary_suite() {
    std::vector<Form> out;
    for (const Form& q : suite())
        if (q.vars() == 2) out.push_back(q);
    return out;
}

bool is_binary_fermat(const Form& q) {
    return q.vars() == 2 && q == fermat(2, q.degree());
}

int binom(int a, int b) { return static_cast<int>(binomial(a, b)); }

// Dimension statements read straight off the Hilbert function of the model.
void check_hilbert_laws(const MilnorModel& model, Outcome& o) {
    const int n = model.vars();
    const int m = model.form_degree();
    const int eta = n * (m - 2);
    const auto& h = model.hilbert();
    const std::string name = render(model.form());
    if (static_cast<int>(h.size()) != eta + 1) {
        o.fail(name + ": hilbert has " + std::to_string(h.size()) + " entries");
        return;
    }
    for (int j = 0; j <= m - 2 && j <= eta; ++j)
        o.require(h[static_cast<std::size_t>(j)] == binom(j + n - 1, j),
                  name + ": dim L_" + std::to_string(j) + " is not C(j+n-1, j)");
    if (m - 1 <= eta)
        o.require(h[static_cast<std::size_t>(m - 1)] == binom(m + n - 2, m - 1) - n,
                  name + ": dim L_(m-1) is not C(m+n-2, m-1) - n");
    for (int j = 0; j <= eta; ++j)
        o.require(h[static_cast<std::size_t>(j)] == h[static_cast<std::size_t>(eta - j)],
                  name + ": symmetry fails at j=" + std::to_string(j));
    o.require(h.back() == 1, name + ": socle is not one-dimensional");
    o.require(model.piece(eta + 1).quotient_dim() == 0, name + ": L_(eta+1) is nonzero");
}

Outcome criterion_fermat() {
    Outcome o;
    for (int m = 3; m <= 8; ++m) {
        const auto start = Clock::now();
        const Form phi = associated_form(fermat(2, m)).form;
        const double t = seconds_since(start);
        o.require(phi == oracle::fermat_closed_form(m), "m=" + std::to_string(m) + ": got " + render(phi));
        o.require(t < 1.0, "m=" + std::to_string(m) + " took " + std::to_string(t) + " s");
    }
    return o;
}

Outcome criterion_binary_cubic() {
    Outcome o;
    const auto start = Clock::now();
    const Form phi = associated_form(P("z1^2*z2 + z1*z2^2")).form;
    const double t = seconds_since(start);
    const Form quadratic = P("z1^2 - z1*z2 + z2^2");
    const Rational scalar = phi.coefficient({2, 0});
    o.require(phi == scalar * quadratic, "not proportional to z1^2 - z1*z2 + z2^2: " + render(phi));
    o.require(phi == oracle::binary_cubic_by_hand(), "scalar differs from the hand reduction");
    o.require(t < 0.1, "took " + std::to_string(t) + " s");
    return o;
}

Outcome criterion_inverse_system(const std::vector<Form>& forms) {
    Outcome o;
    for (const Form& q : forms) o.require(verify_inverse_system(q), render(q));
    return o;
}

Outcome criterion_hilbert(const std::vector<Form>& forms) {
    Outcome o;
    for (const Form& q : forms) check_hilbert_laws(build_model(q), o);
    const Form q = P("z1^4 + z2^4");
    const std::vector<int> h = build_model(q).hilbert();
    o.require(h == std::vector<int>{1, 2, 3, 2, 1}, "hilbert(z1^4+z2^4) is not [1,2,3,2,1]");
    auto brute = oracle::brute_force_quotient_dims(q, 5);
    o.require(brute.back() == 0, "oracle: degree 5 quotient is nonzero");
    brute.pop_back();
    o.require(brute == h, "oracle disagrees with the model for z1^4+z2^4");
    return o;
}

Outcome criterion_equivariance(const std::vector<Form>& forms) {
    Outcome o;
    // five forms covering n = 2 and n = 3
    const std::vector<Form> chosen = {forms[1], forms[3], forms[5], forms[7], forms[8]};
    std::mt19937_64 rng(20240101);
    for (const Form& q : chosen)
        for (int i = 0; i < 100; ++i) {
            const LinearChange c = random_linear_change(q.vars(), rng);
            o.require(check_equivariance(q, c), render(q) + " at matrix #" + std::to_string(i));
        }
    return o;
}

Outcome criterion_catalecticant(const std::vector<Form>& binary) {
    Outcome o;
    for (const Form& q : binary) {
        const Form phi = associated_form(q).form;
        o.require(catalecticant(phi) != 0, render(q) + ": catalecticant of Phi vanishes");
        for (int l = 0; l <= q.degree() - 2; ++l)
            o.require(derivative_rank(phi, l) == l + 1,
                      render(q) + ": derivative rank at order " + std::to_string(l));
    }
    return o;
}

Outcome criterion_witness() {
    Outcome o;
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{
             {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}, {4, 3}}) {
        const WitnessReport r = measure_witness_span(n, m);
        o.require(r.passed(), "(" + std::to_string(n) + "," + std::to_string(m) + "): rank " +
                                  std::to_string(r.achieved_dim) + " of " +
                                  std::to_string(r.target_dim));
    }
    return o;
}

Outcome criterion_q0() {
    Outcome o;
    for (int m = 4; m <= 6; ++m) {
        const std::string tag = "m=" + std::to_string(m);
        const Form q0 = build_q0(m);
        if (!is_nondegenerate(q0)) {
            o.fail(tag + ": Q0 is degenerate");
            continue;
        }
        const bool cone = cone_intersection_trivial(q0);
        const bool phi_ok = is_nondegenerate(associated_form(q0).form);
        o.require(cone, tag + ": cone intersection is nontrivial");
        o.require(phi_ok, tag + ": Phi(Q0) is degenerate");
        o.require(cone == phi_ok, tag + ": predicates disagree");
    }
    return o;
}

Outcome criterion_stability(const std::vector<Form>& binary) {
    Outcome o;
    std::mt19937_64 rng(77);
    for (const Form& q : binary) {
        const int m = q.degree();
        if (m < 4 || m > 6) continue;
        const Stability expected =
            is_binary_fermat(q) ? Stability::SemistableNotStable : Stability::Stable;
        const Stability got = classify_stability(associated_form(q).form).kind;
        o.require(got == expected, render(q) + ": " + to_string(got));
        for (int i = 0; i < 3; ++i) {
            const Form moved = apply_linear_change(q, random_linear_change(2, rng));
            const Stability after = classify_stability(associated_form(moved).form).kind;
            o.require(after == expected, render(q) + " after a change of variables: " + to_string(after));
        }
    }
    return o;
}

Outcome criterion_scaling(const std::vector<Form>& forms) {
    Outcome o;
    for (const Form& q : {forms[1], forms[3], forms[7]}) {
        const Form phi = associated_form(q).form;
        for (const Rational& lambda : {Rational(2), Rational(-3), Rational(1, 5)}) {
            Rational factor = 1;
            for (int i = 0; i < q.vars(); ++i) factor /= lambda;
            o.require(associated_form(lambda * q).form == factor * phi,
                      render(q) + " with lambda=" + to_string(lambda));
        }
    }
    return o;
}

Outcome criterion_second() {
    Outcome o;
    const Form q0 = build_q0(4);
    const AssociatedForm phi2 = second_associated_form(q0);
    o.require(phi2.form == Rational(-1944, 35) * q0, "unexpected value " + render(phi2.form));
    check_hilbert_laws(build_model(phi2.form), o);
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> body;
};

} // namespace

int main() {
    std::vector<Form> forms;
    std::vector<Form> binary;
    try {
        forms = suite();
        binary = binary_suite();
    } catch (const std::exception& e) {
        std::cout << "FAIL suite construction: " << e.what() << "\n";
        return 1;
    }

    const std::vector<Criterion> criteria = {
        {1, "fermat closed form, m = 3..8", 6.0, criterion_fermat},
        {2, "binary cubic against hand reduction", 0.1, criterion_binary_cubic},
        {3, "inverse system on the suite", 30.0, [&] { return criterion_inverse_system(forms); }},
        {4, "hilbert function laws and brute-force oracle", 10.0, [&] { return criterion_hilbert(forms); }},
        {5, "equivariance, 5 forms x 100 matrices", 60.0, [&] { return criterion_equivariance(forms); }},
        {6, "catalecticant and derivative ranks", 10.0, [&] { return criterion_catalecticant(binary); }},
        {7, "witness rank", 60.0, criterion_witness},
        {8, "Q0 for m = 4, 5, 6", 30.0, criterion_q0},
        {9, "stability verdicts and orbit invariance", 30.0, [&] { return criterion_stability(binary); }},
        {10, "scaling law", 5.0, [&] { return criterion_scaling(forms); }},
        {11, "second associated form of Q0(4)", 30.0, criterion_second},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double t = seconds_since(start);
        if (t >= c.limit_seconds)
            o.fail("runtime " + std::to_string(t) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << ": " << c.name
             << " (" << std::fixed << std::setprecision(3) << t << " s, limit " << c.limit_seconds
             << " s)";
        if (!o.ok) line << " -- " << o.detail;
        std::cout << line.str() << "\n";
        if (!o.ok) ++failures;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
