#include "assocform/binary.hpp"

#include "assocform/errors.hpp"
#include "assocform/milnor.hpp"

#include <algorithm>
#include <map>

namespace assocform {

namespace {

void require_binary(const Form& q, const char* what) {
    if (q.vars() != 2)
        throw DimensionError(std::string(what) + " is defined for binary forms only, got " +
                             std::to_string(q.vars()) + " variables");
}

// c[i] = coefficient of z1^(d-i) z2^i
std::vector<Rational> homogeneous_coefficients(const Form& f) {
    const int d = f.degree();
    std::vector<Rational> c(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = f.coefficient({d - i, i});
    return c;
}

// Dense univariate polynomial, lowest degree first, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

UPoly subtract(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    UPoly q;
    if (deg(a) >= deg(b)) q.assign(static_cast<std::size_t>(deg(a) - deg(b) + 1), Rational(0));
    while (!a.empty() && deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        const Rational f = a.back() / b.back();
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

UPoly monic(UPoly p) {
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

UPoly exact_div(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

// Yun's algorithm: multiplicity -> degree of the squarefree factor.
std::map<int, int> squarefree_degrees(const UPoly& f) {
    std::map<int, int> out;
    if (deg(f) < 1) return out;
    const UPoly df = derivative(f);
    const UPoly a0 = gcd(f, df);
    UPoly b = exact_div(f, a0);
    UPoly c = exact_div(df, a0);
    UPoly d = subtract(c, derivative(b));
    for (int i = 1; deg(b) > 0; ++i) {
        const UPoly a = gcd(b, d);
        if (deg(a) > 0) out[i] += deg(a);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = subtract(c, derivative(b));
    }
    return out;
}

} // namespace

Rational catalecticant(const Form& q) {
    require_binary(q, "catalecticant");
    if (q.degree() % 2 != 0)
        throw DegreeError("catalecticant needs even degree, got " + std::to_string(q.degree()));
    const int two_n = q.degree();
    const int n = two_n / 2;
    const auto c = homogeneous_coefficients(q);
    std::vector<Rational> a;
    for (int j = 0; j <= two_n; ++j)
        a.push_back(c[static_cast<std::size_t>(j)] / Rational(binomial(two_n, j)));
    Matrix<Rational> hankel(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) hankel(i, j) = a[static_cast<std::size_t>(i + j)];
    return determinant(hankel);
}

Rational resultant_binary(const Form& f, const Form& g) {
    require_binary(f, "resultant");
    require_binary(g, "resultant");
    if (f.is_zero() || g.is_zero()) throw ZeroFormError("resultant of a zero form");
    const int p = f.degree();
    const int q = g.degree();
    const auto cf = homogeneous_coefficients(f);
    const auto cg = homogeneous_coefficients(g);
    Matrix<Rational> s = Matrix<Rational>::Zero(p + q, p + q);
    for (int r = 0; r < q; ++r)
        for (int i = 0; i <= p; ++i) s(r, r + i) = cf[static_cast<std::size_t>(i)];
    for (int r = 0; r < p; ++r)
        for (int i = 0; i <= q; ++i) s(q + r, r + i) = cg[static_cast<std::size_t>(i)];
    return determinant(s);
}

Rational discriminant_binary(const Form& q) {
    require_binary(q, "discriminant");
    if (q.is_zero()) throw ZeroFormError("discriminant of the zero form");
    if (q.degree() < 2) throw DegreeError("discriminant needs degree >= 2");
    const Form q1 = partial_derivative(q, 0);
    const Form q2 = partial_derivative(q, 1);
    // A vanishing partial means q = c * z_i^m, a maximally repeated factor.
    if (q1.is_zero() || q2.is_zero()) return Rational(0);
    return resultant_binary(q1, q2);
}

int MultiplicityProfile::max_multiplicity() const {
    return entries.empty() ? 0 : entries.back().multiplicity;
}

MultiplicityProfile multiplicity_profile(const Form& q) {
    require_binary(q, "multiplicity profile");
    if (q.is_zero()) throw ZeroFormError("multiplicity profile of the zero form");
    const int m = q.degree();

    // Chart z2 = 1: the coefficient of t^i is that of z1^i z2^(m-i).
    UPoly f;
    for (int i = 0; i <= m; ++i) f.push_back(q.coefficient({i, m - i}));
    trim(f);

    std::map<int, int> by_multiplicity = squarefree_degrees(f);
    const int at_infinity = m - deg(f);
    if (at_infinity > 0) by_multiplicity[at_infinity] += 1;

    MultiplicityProfile out;
    out.form_degree = m;
    for (const auto& [mult, d] : by_multiplicity) out.entries.push_back({mult, d});

    int total = 0;
    for (const auto& e : out.entries) total += e.multiplicity * e.degree;
    if (total != m) throw VerificationFailure("multiplicity profile does not account for the degree");
    return out;
}

std::string to_string(Stability s) {
    switch (s) {
    case Stability::Stable:
        return "stable";
    case Stability::SemistableNotStable:
        return "semistable-not-stable";
    case Stability::Unstable:
        return "unstable";
    }
    return "unknown";
}

StabilityVerdict classify_stability(const Form& q) {
    const MultiplicityProfile profile = multiplicity_profile(q);
    const int top = profile.max_multiplicity();
    const int m = profile.form_degree;
    Stability kind = Stability::Unstable;
    if (2 * top < m)
        kind = Stability::Stable;
    else if (2 * top == m)
        kind = Stability::SemistableNotStable;
    return {kind, top};
}

bool cone_intersection_trivial(const Form& q) {
    require_binary(q, "cone intersection test");
    const MilnorModel model = build_model(q);
    const int d = model.socle_degree() - 1;
    const DegreePiece& piece = model.piece(d);
    const Subspace<Rational>& v = piece.ideal;
    if (v.codim() != 2)
        throw VerificationFailure("V(Q) has codimension " + std::to_string(v.codim()) +
                                  ", expected 2");

    const auto free = v.free_columns();
    std::vector<Index> row_of(static_cast<std::size_t>(piece.basis.size()), -1);
    for (Index r = 0; r < v.dim(); ++r)
        row_of[static_cast<std::size_t>(v.pivots()[static_cast<std::size_t>(r)])] = r;

    // (a z1 + b z2)^d = sum_i C(d, i) a^(d-i) b^i z1^(d-i) z2^i; its residual
    // coordinates are binary forms in (a, b).
    std::vector<Form> residual;
    for (Index target : free) {
        Form::Terms t;
        for (Index c = 0; c < piece.basis.size(); ++c) {
            const Exponents& e = piece.basis.monomial(c);
            const Index r = row_of[static_cast<std::size_t>(c)];
            const Rational coord = r < 0 ? Rational(c == target ? 1 : 0) : Rational(-v.basis()(r, target));
            if (coord == 0) continue;
            t.emplace(e, coord * Rational(binomial(d, e[1])));
        }
        residual.emplace_back(2, d, std::move(t));
    }
    if (residual[0].is_zero() || residual[1].is_zero()) return false;
    return resultant_binary(residual[0], residual[1]) != 0;
}

} // namespace assocform
