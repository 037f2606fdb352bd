#include "assocform/form.hpp"

#include "assocform/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace assocform {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Form::Form(int vars, int degree) : vars_(vars), degree_(degree) {
    if (vars < 1) throw DimensionError("a form needs at least one variable");
    if (degree < 0) throw DegreeError("negative degree");
}

Form::Form(int vars, int degree, Terms terms) : Form(vars, degree) {
    for (auto& [e, c] : terms) {
        if (c == 0) continue;
        if (static_cast<int>(e.size()) != vars_)
            throw DimensionMismatch("exponent vector of length " + std::to_string(e.size()) +
                                    " in a form of " + std::to_string(vars_) + " variables");
        if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
            throw DegreeError("negative exponent");
        if (total_degree(e) != degree_)
            throw InhomogeneousError("term of degree " + std::to_string(total_degree(e)) +
                                     " in a form of degree " + std::to_string(degree_));
        terms_.emplace(e, std::move(c));
    }
}

Form Form::monomial(Exponents exponents, Rational coefficient) {
    const int vars = static_cast<int>(exponents.size());
    const int d = total_degree(exponents);
    Terms t;
    t.emplace(std::move(exponents), std::move(coefficient));
    return Form(vars, d, std::move(t));
}

Form Form::constant(int vars, Rational value) {
    return monomial(Exponents(static_cast<std::size_t>(vars), 0), std::move(value));
}

Form Form::linear(const std::vector<Rational>& coefficients) {
    const int n = static_cast<int>(coefficients.size());
    Terms t;
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        t.emplace(std::move(e), coefficients[static_cast<std::size_t>(i)]);
    }
    return Form(n, 1, std::move(t));
}

Rational Form::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

void check_compatible(const Form& a, const Form& b, const char* what) {
    if (a.vars() != b.vars())
        throw DimensionMismatch(std::string(what) + ": forms in " + std::to_string(a.vars()) +
                                " and " + std::to_string(b.vars()) + " variables");
}

} // namespace

Form& Form::operator+=(const Form& other) {
    check_compatible(*this, other, "addition");
    if (other.is_zero()) return *this;
    if (is_zero()) {
        degree_ = other.degree_;
    } else if (degree_ != other.degree_) {
        throw InhomogeneousError("sum of forms of degree " + std::to_string(degree_) + " and " +
                                 std::to_string(other.degree_));
    }
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Form& Form::operator-=(const Form& other) { return *this += -other; }

Form& Form::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

bool operator==(const Form& a, const Form& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Form operator+(Form a, const Form& b) { return a += b; }
Form operator-(Form a, const Form& b) { return a -= b; }
Form operator-(Form a) { return a *= Rational(-1); }
Form operator*(const Rational& s, Form f) { return f *= s; }
Form operator*(const Form& f, const Form& g) { return multiply(f, g); }

Form multiply(const Form& f, const Form& g) {
    check_compatible(f, g, "multiplication");
    Form::Terms out;
    Exponents e(static_cast<std::size_t>(f.vars()));
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
            auto [it, inserted] = out.emplace(e, cf * cg);
            if (!inserted) it->second += cf * cg;
        }
    }
    return Form(f.vars(), f.degree() + g.degree(), std::move(out));
}

Form power(const Form& f, int k) {
    if (k < 0) throw DegreeError("negative power");
    Form result = Form::constant(f.vars(), Rational(1));
    for (int i = 0; i < k; ++i) result = multiply(result, f);
    return result;
}

Form partial_derivative(const Form& f, int var) {
    if (var < 0 || var >= f.vars())
        throw VariableRangeError("variable index " + std::to_string(var + 1) + " outside 1.." +
                                 std::to_string(f.vars()));
    const auto v = static_cast<std::size_t>(var);
    Form::Terms out;
    for (const auto& [e, c] : f.terms()) {
        if (e[v] == 0) continue;
        Exponents d = e;
        --d[v];
        out.emplace(std::move(d), c * e[v]);
    }
    return Form(f.vars(), std::max(f.degree() - 1, 0), std::move(out));
}

namespace {

// Laplace expansion along the first row; n is at most 4 in practice.
Form polynomial_determinant(const std::vector<std::vector<Form>>& m, int vars, int entry_degree) {
    const std::size_t n = m.size();
    if (n == 0) return Form::constant(vars, Rational(1));
    if (n == 1) return m[0][0];
    Form det(vars, static_cast<int>(n) * entry_degree);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Form>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Form> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Form term = multiply(m[0][col], polynomial_determinant(minor, vars, entry_degree));
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

} // namespace

Form hessian_determinant(const Form& f) {
    if (f.degree() < 2)
        throw DegreeError("Hessian needs degree >= 2, got " + std::to_string(f.degree()));
    const int n = f.vars();
    std::vector<Form> first;
    for (int i = 0; i < n; ++i) first.push_back(partial_derivative(f, i));
    std::vector<std::vector<Form>> h(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h[static_cast<std::size_t>(i)].push_back(
                partial_derivative(first[static_cast<std::size_t>(i)], j));
    Form det = polynomial_determinant(h, n, f.degree() - 2);
    if (det.is_zero()) return Form(n, n * (f.degree() - 2));
    return det;
}

Integer multinomial(int d, const Exponents& k) {
    if (std::any_of(k.begin(), k.end(), [](int x) { return x < 0; }))
        throw SumMismatch("negative component in multinomial index");
    if (total_degree(k) != d)
        throw SumMismatch("multinomial index sums to " + std::to_string(total_degree(k)) +
                          ", expected " + std::to_string(d));
    Integer r = factorial(d);
    for (int x : k) r /= factorial(x);
    return r;
}

Form apolar_action(const Form& f, const Form& g) {
    check_compatible(f, g, "apolar action");
    if (f.degree() > g.degree() || f.is_zero() || g.is_zero()) return Form(g.vars(), 0);
    Form::Terms out;
    Exponents e(static_cast<std::size_t>(g.vars()));
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            Integer falling = 1;
            bool survives = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (eg[i] < ef[i]) {
                    survives = false;
                    break;
                }
                e[i] = eg[i] - ef[i];
                for (int t = 0; t < ef[i]; ++t) falling *= eg[i] - t;
            }
            if (!survives) continue;
            Rational c = cf * cg * Rational(falling);
            auto [it, inserted] = out.emplace(e, c);
            if (!inserted) it->second += c;
        }
    }
    Form result(g.vars(), g.degree() - f.degree(), std::move(out));
    return result.is_zero() ? Form(g.vars(), 0) : result;
}

LinearChange::LinearChange(Matrix<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw DimensionMismatch("linear change must be a non-empty square matrix");
    det_ = assocform::determinant(entries_);
    if (det_ == 0) throw SingularMatrixError("linear change has zero determinant");
}

LinearChange LinearChange::identity(int n) {
    return LinearChange(Matrix<Rational>::Identity(n, n));
}

LinearChange LinearChange::inverse() const { return LinearChange(assocform::inverse(entries_)); }

LinearChange LinearChange::transpose() const {
    return LinearChange(Matrix<Rational>(entries_.transpose()));
}

LinearChange operator*(const LinearChange& a, const LinearChange& b) {
    if (a.size() != b.size()) throw DimensionMismatch("product of linear changes of different size");
    return LinearChange(Matrix<Rational>(a.entries_ * b.entries_));
}

Form apply_linear_change(const Form& f, const LinearChange& c) {
    const int n = f.vars();
    if (c.size() != n)
        throw DimensionMismatch("linear change of size " + std::to_string(c.size()) +
                                " applied to a form in " + std::to_string(n) + " variables");
    const Matrix<Rational> inv = assocform::inverse(c.matrix());

    // powers[j][k] = (image of z_j)^k
    std::vector<std::vector<Form>> powers(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> row;
        for (int i = 0; i < n; ++i) row.push_back(inv(j, i));
        auto& pj = powers[static_cast<std::size_t>(j)];
        pj.push_back(Form::constant(n, Rational(1)));
        const Form image = Form::linear(row);
        for (int k = 1; k <= f.degree(); ++k) pj.push_back(multiply(pj.back(), image));
    }

    Form out(n, f.degree());
    for (const auto& [e, coeff] : f.terms()) {
        Form term = Form::constant(n, coeff);
        for (int j = 0; j < n; ++j)
            if (e[static_cast<std::size_t>(j)] > 0)
                term = multiply(term, powers[static_cast<std::size_t>(j)]
                                            [static_cast<std::size_t>(e[static_cast<std::size_t>(j)])]);
        out += term;
    }
    return out;
}

std::vector<Exponents> monomials_of_degree(int vars, int degree) {
    std::vector<Exponents> out;
    if (vars < 1 || degree < 0) return out;
    Exponents e(static_cast<std::size_t>(vars), 0);
    // Lex-descending enumeration: the first coordinate takes its largest value first.
    auto fill = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == vars - 1) {
            e[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    fill(fill, 0, degree);
    return out;
}

MonomialBasis::MonomialBasis(int vars, int degree)
    : vars_(vars), degree_(degree), monomials_(monomials_of_degree(vars, degree)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], static_cast<Index>(i));
}

Index MonomialBasis::index_of(const Exponents& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
}

Vector<Rational> MonomialBasis::coordinates(const Form& f) const {
    if (f.vars() != vars_)
        throw DimensionMismatch("form in " + std::to_string(f.vars()) + " variables, basis in " +
                                std::to_string(vars_));
    Vector<Rational> v = Vector<Rational>::Zero(size());
    if (f.is_zero()) return v;
    if (f.degree() != degree_)
        throw DegreeError("form of degree " + std::to_string(f.degree()) + ", basis of degree " +
                          std::to_string(degree_));
    for (const auto& [e, c] : f.terms()) v(index_of(e)) = c;
    return v;
}

Form MonomialBasis::form(const Vector<Rational>& v) const {
    if (v.size() != size()) throw DimensionMismatch("coordinate vector length mismatch");
    Form::Terms t;
    for (Index i = 0; i < size(); ++i)
        if (v(i) != 0) t.emplace(monomial(i), v(i));
    return Form(vars_, degree_, std::move(t));
}

std::string render(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        const bool is_const = total_degree(e) == 0;
        const bool unit = mag == 1;
        if (!unit || is_const) {
            const bool integral = denominator(mag) == 1;
            if (integral)
                os << to_string(mag);
            else
                os << '(' << to_string(mag) << ')';
            if (!is_const) os << '*';
        }
        bool first_factor = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_factor) os << '*';
            first_factor = false;
            os << 'z' << i + 1;
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

} // namespace assocform
