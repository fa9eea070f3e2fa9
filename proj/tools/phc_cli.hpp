#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "phc/phc.hpp"
#include "phc/serialization.hpp"

namespace phc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct Request {
    std::string subcommand;
    std::string species = "per";
    std::string format = "json";
    std::string object;
    std::string target;
    std::string pattern;
    std::string factors;
    std::string left;
    std::string right;
    std::string method;
    std::string check;
    int size = 0;
    int max_size = -1;
    bool interlacing_only = false;
    bool experimental = false;
    unsigned threads = 0;
};

// Usage errors: bad notation, unsupported combination of flags.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Splits "1,21,[10,2,1]" at commas outside brackets.
inline std::vector<std::string> split_factors(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (const auto& f : out)
        if (f.empty()) throw UsageError("empty factor in '" + text + "'; write [] for the empty object");
    return out;
}

template <Species S>
S parse_object(const std::string& text, const char* what) {
    try {
        return S::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + " '" + text + "': " + e.what());
    }
}

inline void print_expr_table(std::ostream& out, const std::vector<std::pair<std::string, Coeff>>& rows) {
    std::size_t width = 6;
    for (const auto& [o, c] : rows) width = std::max(width, o.size());
    out << std::left << std::setw(static_cast<int>(width)) << "object" << "  coeff\n";
    for (const auto& [o, c] : rows) out << std::left << std::setw(static_cast<int>(width)) << (o.empty() ? "{}" : o) << "  " << c << "\n";
}

template <Species S>
void emit_expr(std::ostream& out, const Request& req, const PatternExpr<S>& x) {
    if (req.format == "table") {
        std::vector<std::pair<std::string, Coeff>> rows;
        for (const auto& [a, c] : x.terms()) rows.emplace_back(a.to_string(), c);
        print_expr_table(out, rows);
    } else {
        out << to_json(x).dump() << "\n";
    }
}

inline void emit_report(std::ostream& out, const Request& req, const VerifyReport& r) {
    if (req.format == "table") {
        if (r.check == "table-pf3") {
            out << std::setw(4) << "";
            for (const char* col : TablePf3::columns) out << " " << std::setw(3) << col;
            out << "\n";
            for (std::size_t row = 0; row < TablePf3::rows.size(); ++row) {
                out << std::left << std::setw(4) << TablePf3::rows[row] << std::right;
                for (const char* col : TablePf3::columns)
                    out << " " << std::setw(3)
                        << pattern_coefficient(ParkingFunction::parse(col), ParkingFunction::parse(TablePf3::rows[row]));
                out << "\n";
            }
        }
        out << r.check << " " << r.species << ": " << (r.passed() ? "pass" : "FAIL") << ", " << r.instances
            << " instances, " << r.failures.size() << " failures\n";
        for (const auto& f : r.failures) out << "  " << f << "\n";
        return;
    }
    nlohmann::ordered_json j{{"check", r.check},
                             {"species", r.species},
                             {"passed", r.passed()},
                             {"instances", r.instances},
                             {"failures", r.failures}};
    out << j.dump() << "\n";
}

inline AntipodeMethod parse_method(const std::string& m) {
    return m == "takeuchi" ? AntipodeMethod::takeuchi : AntipodeMethod::interlacing;
}

template <Species S>
int run_species(const Request& req, std::ostream& out) {
    const Experimental flag = req.experimental ? Experimental::on : Experimental::off;
    const bool interlacing_ok = has_interlacing_antipode<S> || req.experimental;

    if (req.subcommand == "enumerate") {
        const auto& objs = classes_of_size<S>(req.size);
        if (req.format == "table") {
            for (const S& s : objs) out << (s.empty() ? "{}" : s.to_string()) << "\n";
        } else {
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const S& s : objs) list.push_back(s.to_string());
            out << nlohmann::ordered_json{{"species", std::string(S::tag)}, {"size", req.size}, {"count", objs.size()}, {"objects", list}}.dump()
                << "\n";
        }
        return exit_ok;
    }
    if (req.subcommand == "pattern") {
        const S b = parse_object<S>(req.target, "target");
        const S a = parse_object<S>(req.pattern, "pattern");
        const Coeff c = pattern_coefficient(b, a);
        if (req.format == "table") out << "pat_" << a.to_string() << "(" << b.to_string() << ") = " << c << "\n";
        else
            out << nlohmann::ordered_json{{"species", std::string(S::tag)}, {"target", b.to_string()}, {"pattern", a.to_string()}, {"coefficient", c}}
                       .dump()
                << "\n";
        return exit_ok;
    }
    if (req.subcommand == "qss") {
        const S y = parse_object<S>(req.target, "target");
        std::vector<S> factors;
        for (const auto& f : split_factors(req.factors)) factors.push_back(parse_object<S>(f, "factor"));
        const std::span<const S> fs(factors);
        if (req.interlacing_only && !interlacing_ok)
            throw UsageError("cancellation-free formula unproven for this species (pass --experimental to count anyway)");
        nlohmann::ordered_json j;
        if (!req.interlacing_only) j["total"] = qss_coefficient(y, fs);
        if (interlacing_ok) j["interlacing"] = interlacing_coefficient(y, fs, flag);
        if (req.format == "table") {
            for (const auto& [k, v] : j.items()) out << k << " " << v.template get<Coeff>() << "\n";
        } else {
            out << j.dump() << "\n";
        }
        return exit_ok;
    }
    if (req.subcommand == "product") {
        const S a = parse_object<S>(req.left, "left");
        const S b = parse_object<S>(req.right, "right");
        emit_expr(out, req, product(a, b));
        return exit_ok;
    }
    if (req.subcommand == "coproduct") {
        const S a = parse_object<S>(req.object, "object");
        if (req.format == "table") {
            for (const auto& [l, r] : coproduct(a))
                out << (l.empty() ? "{}" : l.to_string()) << " (x) " << (r.empty() ? "{}" : r.to_string()) << "\n";
        } else {
            out << coproduct_to_json(a).dump() << "\n";
        }
        return exit_ok;
    }
    if (req.subcommand == "antipode") {
        const S a = parse_object<S>(req.object, "object");
        const std::string method = req.method.empty() ? (has_interlacing_antipode<S> ? "interlacing" : "takeuchi") : req.method;
        if (method == "interlacing" && !interlacing_ok)
            throw UsageError("cancellation-free formula unproven for this species (use --method takeuchi, or --experimental)");
        emit_expr(out, req, antipode(a, parse_method(method), flag));
        return exit_ok;
    }
    if (req.subcommand == "verify") {
        VerifyReport r;
        const auto size_or = [&](int fallback) { return req.max_size >= 0 ? req.max_size : fallback; };
        if (req.check == "counts") {
            r = check_counts<S>(size_or(5));
        } else if (req.check == "agreement") {
            if (!has_interlacing_antipode<S>) throw UsageError("agreement check needs species per or pw");
            r = check_agreement<S>(size_or(4), req.threads);
        } else if (req.check == "antipode-axiom") {
            const std::string method =
                req.method.empty() ? (has_interlacing_antipode<S> ? "interlacing" : "takeuchi") : req.method;
            if (method == "interlacing" && !has_interlacing_antipode<S>)
                throw UsageError("cancellation-free formula unproven for this species (use --method takeuchi)");
            r = check_antipode_axiom<S>(size_or(std::is_same_v<S, Permutation> ? 4 : 3), parse_method(method), req.threads);
        } else if (req.check == "filter") {
            if (!has_interlacing_antipode<S>) throw UsageError("filter check needs species per or pw");
            r = check_filter<S>(size_or(4), req.threads);
        } else if (req.check == "table-pf3") {
            if (!std::is_same_v<S, ParkingFunction>) throw UsageError("table-pf3 check needs species pf");
            r = check_table_pf3();
        } else if (req.check == "morphism") {
            if (!std::is_same_v<S, Permutation>) throw UsageError("morphism check needs species per");
            r = check_morphism(size_or(4), req.threads);
        }
        emit_report(out, req, r);
        return r.passed() ? exit_ok : exit_failed;
    }
    throw UsageError("unknown subcommand " + req.subcommand);
}

// Parses argv and runs one subcommand. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, unsigned threads = 0) {
    Request req;
    req.threads = threads;
    CLI::App app{"Pattern Hopf algebras of permutations, packed words and parking functions"};
    app.require_subcommand(1, 1);

    const std::vector<std::string> species{"per", "pw", "pf"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--species", req.species, "Species: per, pw or pf")->check(CLI::IsMember(species))->capture_default_str();
        sub->add_option("--format", req.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    };

    auto* enumerate = app.add_subcommand("enumerate", "List the classes of a given size");
    common(enumerate);
    enumerate->add_option("--size", req.size, "Size")->required()->check(CLI::NonNegativeNumber);

    auto* pattern = app.add_subcommand("pattern", "Pattern coefficient of --pattern in --target");
    common(pattern);
    pattern->add_option("--target", req.target)->required();
    pattern->add_option("--pattern", req.pattern)->required();

    auto* qss = app.add_subcommand("qss", "Count quasi-shuffle signatures of --target from --factors");
    common(qss);
    qss->add_option("--target", req.target)->required();
    qss->add_option("--factors", req.factors, "Comma-separated factors, e.g. 1,21,1,1")->required();
    qss->add_flag("--interlacing-only", req.interlacing_only);
    qss->add_flag("--experimental", req.experimental, "Count interlacing QSS for pf");

    auto* prod = app.add_subcommand("product", "Product pat_left * pat_right");
    common(prod);
    prod->add_option("--left", req.left)->required();
    prod->add_option("--right", req.right)->required();

    auto* coprod = app.add_subcommand("coproduct", "Deconcatenation coproduct of pat_object");
    common(coprod);
    coprod->add_option("--object", req.object)->required();

    auto* anti = app.add_subcommand("antipode", "Antipode of pat_object");
    common(anti);
    anti->add_option("--object", req.object)->required();
    anti->add_option("--method", req.method, "interlacing or takeuchi")->check(CLI::IsMember({"interlacing", "takeuchi"}));
    anti->add_flag("--experimental", req.experimental, "Allow the interlacing formula on pf");

    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    common(verify);
    verify->add_option("--check", req.check, "agreement, antipode-axiom, filter, table-pf3, counts or morphism")
        ->required()
        ->check(CLI::IsMember({"agreement", "antipode-axiom", "filter", "table-pf3", "counts", "morphism"}));
    verify->add_option("--max-size", req.max_size, "Largest object size checked")->check(CLI::NonNegativeNumber);
    verify->add_option("--method", req.method, "Antipode engine for antipode-axiom")->check(CLI::IsMember({"interlacing", "takeuchi"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    req.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (req.species == "per") return run_species<Permutation>(req, out);
        if (req.species == "pw") return run_species<PackedWord>(req, out);
        return run_species<ParkingFunction>(req, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    }
}

} // namespace phc::cli
