#include "cli.hpp"

#include "assocform/apolarity.hpp"
#include "assocform/associated.hpp"
#include "assocform/binary.hpp"
#include "assocform/errors.hpp"
#include "assocform/form_json.hpp"
#include "assocform/milnor.hpp"
#include "assocform/parse.hpp"
#include "assocform/witnesses.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace assocform::cli {

namespace {

using nlohmann::json;

struct Request {
    std::string command;
    int vars = 2;
    int degree = 0;
    std::string input;
    std::string format = "text";
    std::uint64_t seed = 0;
    int trials = 100;
    std::string k;
    std::string matrix;
};

class Output {
public:
    Output(const Request& req, std::ostream& out) : req_(req), out_(out) {
        payload_["command"] = req.command;
    }

    bool json_mode() const { return req_.format == "json"; }
    json& payload() { return payload_; }
    void line(const std::string& s) { text_ << s << '\n'; }

    void flush() {
        if (json_mode())
            out_ << payload_.dump() << '\n';
        else
            out_ << text_.str();
    }

private:
    const Request& req_;
    std::ostream& out_;
    json payload_;
    std::ostringstream text_;
};

std::string read_input(const std::string& arg, std::istream& in) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream f(arg);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return arg;
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw SyntaxError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw SyntaxError("bad integer '" + item + "'");
        }
    }
    return out;
}

// "a,b;c,d" row by row, entries are rationals.
LinearChange parse_matrix(const std::string& text, int n) {
    Matrix<Rational> m(n, n);
    std::stringstream rows(text);
    std::string row;
    int r = 0;
    while (std::getline(rows, row, ';')) {
        if (r >= n) throw DimensionMismatch("matrix has more than " + std::to_string(n) + " rows");
        std::stringstream cols(row);
        std::string cell;
        int c = 0;
        while (std::getline(cols, cell, ',')) {
            if (c >= n) throw DimensionMismatch("matrix row has more than " + std::to_string(n) + " entries");
            cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
            m(r, c++) = parse_rational(cell);
        }
        if (c != n) throw DimensionMismatch("matrix row " + std::to_string(r + 1) + " has " + std::to_string(c) + " entries");
        ++r;
    }
    if (r != n) throw DimensionMismatch("matrix has " + std::to_string(r) + " rows, expected " + std::to_string(n));
    return LinearChange(std::move(m));
}

json matrix_json(const LinearChange& c) {
    json rows = json::array();
    for (Index i = 0; i < c.matrix().rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < c.matrix().cols(); ++j) row.push_back(to_string(c.matrix()(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

using Handler = std::function<void(const Request&, std::istream&, Output&)>;

Form input_form(const Request& req, std::istream& in) {
    if (req.input.empty()) throw SyntaxError("missing polynomial input");
    return parse_form(read_input(req.input, in), req.vars);
}

void cmd_assoc(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const AssociatedForm phi = associated_form(q);
    out.payload()["input"] = to_json(q);
    out.payload()["associated_form"] = to_json(phi.form);
    out.line(render(phi.form));
}

void cmd_assoc2(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const AssociatedForm phi2 = second_associated_form(q);
    out.payload()["input"] = to_json(q);
    out.payload()["second_associated_form"] = to_json(phi2.form);
    out.line(render(phi2.form));
}

void cmd_mu(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const MilnorModel model = build_model(q);
    out.payload()["input"] = to_json(q);
    if (!req.k.empty()) {
        const Exponents k = parse_int_list(req.k, ',');
        const Rational value = mu(model, k);
        out.payload()["k"] = k;
        out.payload()["mu"] = to_string(value);
        out.line(to_string(value));
        return;
    }
    json table = json::array();
    for (const auto& [k, value] : associated_form(model).mu_table) {
        table.push_back({{"k", k}, {"mu", to_string(value)}});
        out.line(join(k, ",") + ": " + to_string(value));
    }
    out.payload()["mu_table"] = std::move(table);
}

void cmd_hilbert(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const MilnorModel model = build_model(q);
    out.payload()["input"] = to_json(q);
    out.payload()["hilbert"] = model.hilbert();
    out.payload()["socle_degree"] = model.socle_degree();
    out.line(join(model.hilbert(), " "));
}

void cmd_nondegenerate(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const bool ok = is_nondegenerate(q);
    out.payload()["input"] = to_json(q);
    out.payload()["nondegenerate"] = ok;
    out.line(bool_text(ok));
}

void cmd_inverse_system(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const bool ok = verify_inverse_system(q);
    out.payload()["input"] = to_json(q);
    out.payload()["inverse_system"] = ok;
    out.line(bool_text(ok));
}

void cmd_equivariance(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    std::mt19937_64 rng(req.seed);
    const LinearChange c = req.matrix.empty() ? random_linear_change(q.vars(), rng)
                                              : parse_matrix(req.matrix, q.vars());
    const bool ok = check_equivariance(q, c);
    out.payload()["input"] = to_json(q);
    out.payload()["matrix"] = matrix_json(c);
    out.payload()["equivariant"] = ok;
    out.line(bool_text(ok));
}

void cmd_catalecticant(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const Rational value = catalecticant(q);
    out.payload()["input"] = to_json(q);
    out.payload()["catalecticant"] = to_string(value);
    out.line(to_string(value));
}

void cmd_discriminant(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const Rational value = discriminant_binary(q);
    out.payload()["input"] = to_json(q);
    out.payload()["discriminant"] = to_string(value);
    out.payload()["vanishes"] = value == 0;
    out.line(to_string(value));
}

void cmd_stability(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const MultiplicityProfile profile = multiplicity_profile(q);
    const StabilityVerdict verdict = classify_stability(q);
    json entries = json::array();
    for (const auto& e : profile.entries)
        entries.push_back({{"multiplicity", e.multiplicity}, {"degree", e.degree}});
    out.payload()["input"] = to_json(q);
    out.payload()["profile"] = std::move(entries);
    out.payload()["verdict"] = to_string(verdict.kind);
    out.payload()["max_multiplicity"] = verdict.max_multiplicity;
    out.line(to_string(verdict.kind) + " (max multiplicity " +
             std::to_string(verdict.max_multiplicity) + ")");
}

void cmd_cone(const Request& req, std::istream& in, Output& out) {
    const Form q = input_form(req, in);
    const bool ok = cone_intersection_trivial(q);
    out.payload()["input"] = to_json(q);
    out.payload()["cone_intersection_trivial"] = ok;
    out.line(bool_text(ok));
}

void cmd_witness(const Request& req, std::istream&, Output& out) {
    const WitnessReport r = verify_witness_span(req.vars, req.degree);
    out.payload()["n"] = r.n;
    out.payload()["m"] = r.m;
    out.payload()["witness"] = to_json(r.witness);
    out.payload()["target_dim"] = r.target_dim;
    out.payload()["achieved_dim"] = r.achieved_dim;
    out.payload()["pure_power_coordinates_zero"] = r.pure_power_coordinates_zero;
    out.payload()["passed"] = r.passed();
    out.line("pass: n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) +
             " K=" + std::to_string(r.target_dim) + " rank=" + std::to_string(r.achieved_dim) +
             " witness=" + render(r.witness));
}

void cmd_q0(const Request& req, std::istream&, Output& out) {
    const Form q0 = build_q0(req.degree);
    const bool nondegenerate = is_nondegenerate(q0);
    out.payload()["q0"] = to_json(q0);
    out.payload()["nondegenerate"] = nondegenerate;
    out.line("q0: " + render(q0));
    out.line("nondegenerate: " + bool_text(nondegenerate));
    if (!nondegenerate) return;
    const Form phi = associated_form(q0).form;
    const bool cone = cone_intersection_trivial(q0);
    const bool phi_ok = phi.degree() < 3 ? !hessian_determinant(phi).is_zero() : is_nondegenerate(phi);
    out.payload()["associated_form"] = to_json(phi);
    out.payload()["cone_intersection_trivial"] = cone;
    out.payload()["associated_nondegenerate"] = phi_ok;
    out.payload()["agree"] = cone == phi_ok;
    out.line("associated form: " + render(phi));
    out.line("cone intersection trivial: " + bool_text(cone));
    out.line("associated form nondegenerate: " + bool_text(phi_ok));
}

void cmd_perturb(const Request& req, std::istream& in, Output& out) {
    const Form w = input_form(req, in);
    const auto found = search_nondegenerate_near(w, req.seed, req.trials);
    out.payload()["input"] = to_json(w);
    out.payload()["seed"] = req.seed;
    out.payload()["trials"] = req.trials;
    if (!found) {
        out.payload()["found"] = nullptr;
        throw VerificationFailure("NotFound: no nondegenerate perturbation within " +
                                  std::to_string(req.trials) + " trials");
    }
    out.payload()["found"] = to_json(*found);
    out.line(render(*found));
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Associated forms of nondegenerate homogeneous forms, computed exactly"};
    app.require_subcommand(1);
    Request req;

    const std::map<std::string, std::pair<std::string, Handler>> polynomial_commands = {
        {"assoc", {"associated form Phi(Q)", cmd_assoc}},
        {"assoc2", {"second associated form Phi(Phi(Q))", cmd_assoc2}},
        {"mu", {"socle coefficients mu_k (all, or one with --k)", cmd_mu}},
        {"hilbert", {"Hilbert function of the Milnor algebra", cmd_hilbert}},
        {"nondegenerate", {"whether Q has an isolated singularity", cmd_nondegenerate}},
        {"inverse-system-check", {"Ann(Phi(Q)) == J(Q) in every degree", cmd_inverse_system}},
        {"equivariance-check", {"Phi(Q_C) == det(C)^2 Phi(Q)_{C^-T}", cmd_equivariance}},
        {"catalecticant", {"catalecticant of a binary form of even degree", cmd_catalecticant}},
        {"discriminant", {"resultant of the partials of a binary form", cmd_discriminant}},
        {"stability", {"GIT stability of a binary form", cmd_stability}},
        {"cone-test", {"V(Q) meets the cone of powers only at 0", cmd_cone}},
        {"perturb-search", {"nondegenerate perturbation of a witness", cmd_perturb}},
    };

    std::map<CLI::App*, Handler> handlers;
    for (const auto& [name, entry] : polynomial_commands) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->add_option("input", req.input, "polynomial text, a file path, or - for stdin")
            ->required();
        sub->add_option("--vars", req.vars, "number of variables")->check(CLI::Range(2, 64));
        sub->add_option("--format", req.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        if (name == "equivariance-check" || name == "perturb-search")
            sub->add_option("--seed", req.seed, "random seed");
        if (name == "perturb-search")
            sub->add_option("--trials", req.trials, "trial budget")->check(CLI::Range(1, 1000000));
        if (name == "equivariance-check")
            sub->add_option("--matrix", req.matrix, "explicit C as \"a,b;c,d\"");
        if (name == "mu") sub->add_option("--k", req.k, "exponent vector, e.g. 2,2");
        handlers.emplace(sub, entry.second);
    }

    CLI::App* witness = app.add_subcommand("witness-verify", "rank claim for the interior witness");
    witness->add_option("--vars", req.vars, "number of variables")->check(CLI::Range(2, 64));
    witness->add_option("--degree", req.degree, "degree m")->required();
    witness->add_option("--format", req.format, "output format")->check(CLI::IsMember({"text", "json"}));
    handlers.emplace(witness, cmd_witness);

    CLI::App* q0 = app.add_subcommand("q0-check", "Q0(m): nondegeneracy and cone test");
    q0->add_option("--degree", req.degree, "degree m")->required();
    q0->add_option("--format", req.format, "output format")->check(CLI::IsMember({"text", "json"}));
    handlers.emplace(q0, cmd_q0);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    req.command = chosen->get_name();
    Output output(req, out);
    try {
        handlers.at(chosen)(req, in, output);
    } catch (const DegenerateFormError& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kDegenerate;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kUsage;
    }
    output.flush();
    return kOk;
}

} // namespace assocform::cli
