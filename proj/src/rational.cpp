#include "assocform/rational.hpp"

#include "assocform/errors.hpp"

#include <cctype>

namespace assocform {

std::string to_string(const Rational& value) { return value.str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw SyntaxError("malformed rational '" + std::string(text) + "'");
    const Integer d{std::string(den)};
    if (d == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    const Rational r(Integer{std::string(num)}, d);
    return negative ? Rational(-r) : r;
}

Integer factorial(int k) {
    Integer r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

Integer binomial(int top, int bottom) {
    if (bottom < 0 || bottom > top) return 0;
    Integer r = 1;
    for (int i = 1; i <= bottom; ++i) {
        r *= top - bottom + i;
        r /= i;
    }
    return r;
}

} // namespace assocform
