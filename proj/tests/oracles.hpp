#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the Milnor model or the linalg templates.

#include "assocform/form.hpp"

#include <map>
#include <vector>

namespace assocform::oracle {

using Mono = std::vector<int>;

inline void all_monomials(int n, int d, Mono& cur, std::vector<Mono>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= d; ++k) {
        cur.push_back(k);
        all_monomials(n, d - k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Mono> all_monomials(int n, int d) {
    std::vector<Mono> out;
    Mono cur;
    all_monomials(n, d, cur, out);
    return out;
}

/// Quotient dimensions of Q[z]/(dQ/dz_1, ..., dQ/dz_n) in degrees 0..max_degree.
///
/// One global matrix whose columns are all monomials of degree <= max_degree
/// and whose rows are every product z^a * dQ/dz_i that fits; plain Gaussian
/// elimination on std::vector rows. Per-degree dimensions are read off the
/// pivot columns since every row is homogeneous.
inline std::vector<int> brute_force_quotient_dims(const Form& q, int max_degree) {
    const int n = q.vars();
    std::vector<Mono> cols;
    std::vector<int> col_degree;
    std::map<Mono, std::size_t> index;
    for (int d = 0; d <= max_degree; ++d)
        for (auto& mono : all_monomials(n, d)) {
            index[mono] = cols.size();
            cols.push_back(mono);
            col_degree.push_back(d);
        }

    std::vector<std::map<Mono, Rational>> partials(static_cast<std::size_t>(n));
    for (const auto& [e, c] : q.terms())
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i)] > 0) {
                Mono d = e;
                --d[static_cast<std::size_t>(i)];
                partials[static_cast<std::size_t>(i)][d] += c * e[static_cast<std::size_t>(i)];
            }

    std::vector<std::vector<Rational>> rows;
    for (int s = 0; s + q.degree() - 1 <= max_degree; ++s)
        for (auto& a : all_monomials(n, s))
            for (const auto& p : partials) {
                std::vector<Rational> row(cols.size(), Rational(0));
                for (const auto& [e, c] : p) {
                    Mono t = e;
                    for (std::size_t k = 0; k < t.size(); ++k) t[k] += a[k];
                    row[index.at(t)] += c;
                }
                rows.push_back(std::move(row));
            }

    std::vector<int> pivots_per_degree(static_cast<std::size_t>(max_degree + 1), 0);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols.size(); ++k) rows[i][k] -= f * rows[r][k];
        }
        ++pivots_per_degree[static_cast<std::size_t>(col_degree[c])];
        ++r;
    }

    std::vector<int> dims;
    for (int d = 0; d <= max_degree; ++d)
        dims.push_back(static_cast<int>(all_monomials(n, d).size()) -
                       pivots_per_degree[static_cast<std::size_t>(d)]);
    return dims;
}

/// Associated form of z1^2 z2 + z1 z2^2 by hand. Q1 = 2 z1 z2 + z2^2 and
/// Q2 = z1^2 + 2 z1 z2 give z2^2 == -2 z1 z2 and z1^2 == -2 z1 z2 in degree 2,
/// so every quadratic reduces to a multiple of z1 z2. The Hessian
/// -4(z1^2 + z1 z2 + z2^2) reduces to -4(-2 + 1 - 2) z1 z2 = 12 z1 z2, hence
/// mu_(2,0) = mu_(0,2) = -2/12 and mu_(1,1) = 1/12.
inline Form binary_cubic_by_hand() {
    auto reduce_to_z1z2 = [](const Mono& k) -> Rational {
        if (k == Mono{1, 1}) return Rational(1);
        return Rational(-2);  // z1^2 or z2^2
    };
    const Rational hess = Rational(-4) * (Rational(-2) + Rational(1) + Rational(-2));
    Form::Terms t;
    for (const Mono& k : {Mono{2, 0}, Mono{1, 1}, Mono{0, 2}}) {
        const Rational mu = reduce_to_z1z2(k) / hess;
        const Rational multinomial = k == Mono{1, 1} ? Rational(2) : Rational(1);
        t.emplace(k, mu * multinomial);
    }
    return Form(2, 2, std::move(t));
}

/// Closed form for z1^m + z2^m:
/// C(2m-4, m-2) / (m^2 (m-1)^2) * z1^(m-2) z2^(m-2).
inline Form fermat_closed_form(int m) {
    Integer c = 1;
    for (int i = 1; i <= m - 2; ++i) {
        c *= (m - 2) + i;
        c /= i;
    }
    const Rational scale(c, Integer(m * m * (m - 1) * (m - 1)));
    return Form::monomial({m - 2, m - 2}, scale);
}

} // namespace assocform::oracle
