#include "assocform/apolarity.hpp"

#include "assocform/associated.hpp"
#include "assocform/errors.hpp"

#include <map>
#include <string>

namespace assocform {

AnnihilatorPiece annihilator_piece(const Form& g, int j) {
    if (j < 0 || j > g.degree() + 1)
        throw DegreeError("annihilator degree " + std::to_string(j) + " outside 0.." +
                          std::to_string(g.degree() + 1));
    const MonomialBasis source(g.vars(), j);
    const int target_degree = g.degree() - j;
    if (target_degree < 0) return {j, Subspace<Rational>::full(source.size())};

    const MonomialBasis target(g.vars(), target_degree);
    Matrix<Rational> map = Matrix<Rational>::Zero(target.size(), source.size());
    for (Index c = 0; c < source.size(); ++c) {
        const Form image = apolar_action(Form::monomial(source.monomial(c)), g);
        if (image.is_zero()) continue;
        map.col(c) = target.coordinates(image);
    }
    return {j, kernel(map)};
}

bool verify_inverse_system(const Form& q) {
    const MilnorModel model = build_model(q);
    const Form phi = associated_form(model).form;
    for (int j = 0; j <= model.socle_degree() + 1; ++j) {
        if (!subspace_equal(annihilator_piece(phi, j).subspace, model.piece(j).ideal))
            return false;
    }
    return true;
}

int derivative_rank(const Form& g, int order) {
    if (order < 0 || order > g.degree())
        throw DegreeError("derivative order " + std::to_string(order) + " outside 0.." +
                          std::to_string(g.degree()));
    const auto orders = monomials_of_degree(g.vars(), order);
    const MonomialBasis target(g.vars(), g.degree() - order);
    Matrix<Rational> rows(static_cast<Index>(orders.size()), target.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        rows.row(static_cast<Index>(i)) =
            target.coordinates(apolar_action(Form::monomial(orders[i]), g)).transpose();
    return static_cast<int>(rank(rows));
}

namespace {

// Powers of the generic linear element: maps x^b (|b| = j) to the normal form
// of its coefficient in L_j.
using GenericPower = std::map<Exponents, Vector<Rational>, GrlexGreater>;

GenericPower next_power(const MilnorModel& model, int j, const GenericPower& current) {
    const int n = model.vars();
    const DegreePiece& from = model.piece(j);
    const DegreePiece& to = model.piece(j + 1);
    GenericPower out;
    for (const auto& [b, v] : current) {
        for (int i = 0; i < n; ++i) {
            Vector<Rational> w = Vector<Rational>::Zero(to.basis.size());
            for (Index c = 0; c < v.size(); ++c) {
                if (v(c) == 0) continue;
                Exponents s = from.basis.monomial(c);
                ++s[static_cast<std::size_t>(i)];
                w(to.basis.index_of(s)) += v(c);
            }
            Exponents bi = b;
            ++bi[static_cast<std::size_t>(i)];
            auto [it, inserted] = out.emplace(bi, w);
            if (!inserted) it->second += w;
        }
    }
    for (auto& [b, w] : out) w = model.normal_form(j + 1, w);
    return out;
}

// rho on L_j: zero below the top degree, the socle coordinate over the
// Hessian coordinate on top.
Rational graded_functional(const MilnorModel& model, int j, const Vector<Rational>& v) {
    if (j < model.socle_degree()) return Rational(0);
    return v(model.socle_column()) / model.hessian_socle_value();
}

template <class Visit>
void expand_generic_powers(const MilnorModel& model, Visit&& visit) {
    const int n = model.vars();
    GenericPower power;
    power.emplace(Exponents(static_cast<std::size_t>(n), 0),
                  Vector<Rational>::Ones(1));
    visit(0, power);
    for (int j = 0; j < model.socle_degree(); ++j) {
        power = next_power(model, j, power);
        visit(j + 1, power);
    }
}

} // namespace

Form graded_inverse_system(const MilnorModel& model) {
    const int top = model.socle_degree();
    Form s(model.vars(), top);
    expand_generic_powers(model, [&](int j, const GenericPower& power) {
        if (j != top) return;
        Form::Terms t;
        for (const auto& [b, v] : power) t.emplace(b, graded_functional(model, j, v));
        s = Form(model.vars(), top, std::move(t));
    });
    return s;
}

Form inverse_system_series(const MilnorModel& model) {
    const int n = model.vars();
    const int top = model.socle_degree();
    Form::Terms r;
    Form s(n, top);
    expand_generic_powers(model, [&](int j, const GenericPower& power) {
        const Rational inv_fact(Integer(1), factorial(j));
        for (const auto& [b, v] : power) {
            const Rational value = graded_functional(model, j, v);
            if (value == 0) continue;
            auto [it, inserted] = r.emplace(b, inv_fact * value);
            if (!inserted) it->second += inv_fact * value;
        }
        if (j == top) {
            Form::Terms t;
            for (const auto& [b, v] : power) t.emplace(b, graded_functional(model, j, v));
            s = Form(n, top, std::move(t));
        }
    });

    // Everything below the top degree is killed by rho, so R is homogeneous.
    Form series(n, top, std::move(r));
    const Rational scale(Integer(1), factorial(top));
    if (series != scale * s)
        throw VerificationFailure("inverse system series differs from S / " +
                                  std::to_string(top) + "!");
    return series;
}

} // namespace assocform
