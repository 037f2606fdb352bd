#include "assocform/form_json.hpp"

#include "assocform/errors.hpp"

namespace assocform {

nlohmann::json to_json(const Form& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"exponents", e}, {"coefficient", to_string(c)}});
    return {{"n", f.vars()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

Form form_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        const int degree = j.at("degree").get<int>();
        Form::Terms terms;
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exponents").get<Exponents>();
            auto c = parse_rational(t.at("coefficient").get<std::string>());
            if (!terms.emplace(std::move(e), std::move(c)).second)
                throw SyntaxError("duplicate exponent vector in form payload");
        }
        return Form(n, degree, std::move(terms));
    } catch (const nlohmann::json::exception& ex) {
        throw SyntaxError(std::string("malformed form payload: ") + ex.what());
    }
}

} // namespace assocform
