#pragma once

// Homogeneous polynomials ("forms") with exact rational coefficients.
//
// Variables are indexed from 0 in the API (z1 is index 0). Terms are kept in
// graded-lex order with z1 > z2 > ... > zn, which is also the column order of
// every coefficient vector produced by MonomialBasis.

#include "assocform/linalg.hpp"
#include "assocform/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace assocform {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Strict weak order placing the larger monomial first: higher total degree,
/// then lexicographically larger exponent vector.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Form {
public:
    using Terms = std::map<Exponents, Rational, GrlexGreater>;

    /// The zero form of the given degree.
    Form(int vars, int degree);

    /// Drops zero coefficients; throws InhomogeneousError or DimensionMismatch
    /// if a term does not fit (vars, degree).
    Form(int vars, int degree, Terms terms);

    static Form monomial(Exponents exponents, Rational coefficient = Rational(1));
    static Form constant(int vars, Rational value);
    /// sum_i coefficients[i] * z_i
    static Form linear(const std::vector<Rational>& coefficients);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;

    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form& operator*=(const Rational& s);

    friend bool operator==(const Form& a, const Form& b);
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

private:
    int vars_;
    int degree_;
    Terms terms_;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);
Form operator-(Form a);
Form operator*(const Rational& s, Form f);
Form operator*(const Form& f, const Form& g);

Form multiply(const Form& f, const Form& g);
Form power(const Form& f, int k);

Form partial_derivative(const Form& f, int var);

/// determinant of the matrix of second partials; degree vars*(deg-2).
Form hessian_determinant(const Form& f);

/// Exact multinomial coefficient d! / (k_1! ... k_n!).
Integer multinomial(int d, const Exponents& k);

/// f(d/dz_1, ..., d/dz_n) applied to g, without factorial rescaling. The
/// result has degree deg g - deg f, or is zero when deg f > deg g.
Form apolar_action(const Form& f, const Form& g);

/// Invertible n x n rational matrix.
class LinearChange {
public:
    explicit LinearChange(Matrix<Rational> entries);
    static LinearChange identity(int n);

    int size() const { return static_cast<int>(entries_.rows()); }
    const Matrix<Rational>& matrix() const { return entries_; }
    const Rational& determinant() const { return det_; }
    LinearChange inverse() const;
    LinearChange transpose() const;

    friend LinearChange operator*(const LinearChange& a, const LinearChange& b);

private:
    Matrix<Rational> entries_;
    Rational det_;
};

/// Q_C(z) = Q(z (C^{-1})^T): each z_j is replaced by sum_i (C^{-1})_{ji} z_i.
/// Satisfies apply(f, C*D) == apply(apply(f, D), C).
Form apply_linear_change(const Form& f, const LinearChange& c);

/// All exponent vectors of the given degree, largest first.
std::vector<Exponents> monomials_of_degree(int vars, int degree);

/// Coordinate system on the space of degree-d forms in n variables.
class MonomialBasis {
public:
    MonomialBasis(int vars, int degree);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    Index size() const { return static_cast<Index>(monomials_.size()); }
    const std::vector<Exponents>& monomials() const { return monomials_; }
    const Exponents& monomial(Index i) const { return monomials_[static_cast<std::size_t>(i)]; }
    /// -1 when the exponent vector is not in this basis.
    Index index_of(const Exponents& e) const;

    Vector<Rational> coordinates(const Form& f) const;
    Form form(const Vector<Rational>& v) const;

private:
    int vars_;
    int degree_;
    std::vector<Exponents> monomials_;
    std::map<Exponents, Index> index_;
};

/// Canonical text, e.g. "z1^4 - (3/2)*z1*z2^3 + 2*z2^4". Parses back with
/// parse_form to the identical Form.
std::string render(const Form& f);

} // namespace assocform
