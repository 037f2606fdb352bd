#include "assocform/parse.hpp"

#include "assocform/errors.hpp"

#include <cctype>
#include <map>
#include <string>

namespace assocform {

namespace {

// Inhomogeneous intermediate; homogeneity is checked once at the end.
using Poly = std::map<Exponents, Rational, GrlexGreater>;

void add_into(Poly& acc, const Poly& p, const Rational& sign) {
    for (const auto& [e, c] : p) {
        auto [it, inserted] = acc.emplace(e, sign * c);
        if (!inserted) {
            it->second += sign * c;
            if (it->second == 0) acc.erase(it);
        }
    }
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto [it, inserted] = out.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, int vars) : vars_(vars) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }

    Poly parse() {
        if (src_.empty()) fail("empty input");
        Poly p = expr();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at offset " + std::to_string(pos_));
    }

    bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return src_.substr(start, pos_ - start);
    }

    Poly expr() {
        Poly acc;
        add_into(acc, term(), Rational(1));
        while (peek('+') || peek('-')) {
            const Rational sign(src_[pos_] == '-' ? -1 : 1);
            ++pos_;
            add_into(acc, term(), sign);
        }
        return acc;
    }

    Poly term() {
        const bool negate = accept('-');
        Poly acc = factor();
        if (negate)
            for (auto& [e, c] : acc) c = -c;
        while (accept('*')) acc = mul(acc, factor());
        return acc;
    }

    Poly factor() {
        if (accept('(')) {
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (accept('z')) {
            const std::string idx = digits();
            const long i = std::stol(idx);
            if (i < 1 || i > vars_)
                throw VariableRangeError("variable z" + idx + " outside z1..z" +
                                         std::to_string(vars_));
            int k = 1;
            if (accept('^')) k = std::stoi(digits());
            Exponents e(static_cast<std::size_t>(vars_), 0);
            e[static_cast<std::size_t>(i - 1)] = k;
            return Poly{{e, Rational(1)}};
        }
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            Integer num(digits());
            Integer den = 1;
            if (accept('/')) {
                den = Integer(digits());
                if (den == 0) fail("zero denominator");
            }
            Poly p;
            if (num != 0) p.emplace(Exponents(static_cast<std::size_t>(vars_), 0), Rational(num, den));
            return p;
        }
        if (pos_ == src_.size()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    }

    std::string src_;
    std::size_t pos_ = 0;
    int vars_;
};

} // namespace

Form parse_form(std::string_view text, int vars) {
    if (vars < 1) throw DimensionError("need at least one variable");
    Poly p = Parser(text, vars).parse();
    if (p.empty()) return Form(vars, 0);
    const int degree = total_degree(p.begin()->first);
    for (const auto& [e, c] : p)
        if (total_degree(e) != degree)
            throw InhomogeneousError("terms of degree " + std::to_string(degree) + " and " +
                                     std::to_string(total_degree(e)));
    return Form(vars, degree, Form::Terms(p.begin(), p.end()));
}

} // namespace assocform
