// reals: exact real arithmetic from decimal expansions.
//
// Subcommands: digits, compare, sup, measure, axioms, gallery.
// Exit codes: 0 success, 2 usage error, 3 computation error.

#include "reals/arithmetic.hpp"
#include "reals/expr.hpp"
#include "reals/gallery.hpp"
#include "reals/magnitudes.hpp"
#include "reals/sup_engine.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct Options {
    std::string format = "plain";
    std::string notation = "minus";
    std::string out_file;
    int cap = reals::kDefaultPrecisionCap;
};

int default_cap_from_env() {
    if (const char* v = std::getenv("REALS_PRECISION_CAP")) {
        try {
            const int cap = std::stoi(v);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid REALS_PRECISION_CAP\n";
    }
    return reals::kDefaultPrecisionCap;
}

// Machine output always carries the same four fields; absent values are
// explicit nulls.
json make_record(const std::string& value, const std::optional<std::string>& digits,
                 const std::optional<std::int64_t>& indeterminate_at,
                 const std::optional<int>& precision_used) {
    json j;
    j["value"] = value;
    j["digits"] = digits ? json(*digits) : json(nullptr);
    j["indeterminate_at"] = indeterminate_at ? json(*indeterminate_at) : json(nullptr);
    j["precision_used"] = precision_used ? json(*precision_used) : json(nullptr);
    return j;
}

int emit(const Options& opt, const std::string& plain, const json& record) {
    std::string text = opt.format == "json" ? record.dump() : plain;
    text += "\n";
    if (!opt.out_file.empty()) {
        std::ofstream f(opt.out_file);
        if (!f) {
            std::cerr << "error: cannot open " << opt.out_file << "\n";
            return kExitComputation;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return 0;
}

reals::SignNotation notation_of(const Options& opt) {
    return opt.notation == "star" ? reals::SignNotation::Star : reals::SignNotation::Minus;
}

int run_digits(const Options& opt, const std::string& expr_text, std::int64_t n) {
    const reals::ExprPtr ast = reals::parse_expression(expr_text);
    const reals::EvalConfig cfg{opt.cap};
    const reals::EvalResult r = reals::evaluate(ast, cfg);
    const reals::DigitReport rep = reals::render_digits(r, n, cfg, notation_of(opt));
    return emit(opt, rep.text,
                make_record(ast->to_string(), rep.digits, rep.indeterminate_at,
                            rep.precision_used));
}

int run_compare(const Options& opt, const std::string& lhs, const std::string& rhs, int m) {
    const reals::EvalConfig cfg{opt.cap};
    const reals::EvalResult a = reals::evaluate(reals::parse_expression(lhs), cfg);
    const reals::EvalResult b = reals::evaluate(reals::parse_expression(rhs), cfg);
    // compare via the signed difference: sign of a - b
    const reals::SignedReal diff = reals::signed_add(a.value, b.value.star(), opt.cap);
    reals::Ordering ord = reals::Ordering::Indistinguishable;
    if (!diff.zero_within_cap()) {
        const reals::Interval bounds = diff.magnitude().bounds(m);
        if (bounds.lo > reals::Rational(0))
            ord = diff.starred() ? reals::Ordering::Less : reals::Ordering::Greater;
    }
    const std::string verdict = reals::to_string(ord);
    return emit(opt, verdict, make_record(verdict, std::nullopt, std::nullopt, m));
}

int run_sup(const Options& opt, const std::string& oracle, std::int64_t n, bool as_measure) {
    const reals::SupremumResult r = as_measure
                                        ? reals::measure(reals::named_cut_oracle(oracle))
                                        : reals::supremum(reals::named_oracle(oracle));
    const std::string digits = r.digits(n);
    // measurement reports exactly the digits produced; the supremum view
    // marks that the expansion continues
    const std::string plain = as_measure ? digits : digits + "…";
    return emit(opt, plain,
                make_record(oracle, digits, std::nullopt, static_cast<int>(n)));
}

int run_axioms(const Options& opt, const std::string& system, std::uint64_t seed) {
    reals::ComparativeSystem s;
    std::optional<reals::MeasureMap> mu;
    if (system == "cardinality") {
        s = reals::make_cardinality_system(8, seed);
        mu = reals::cardinality_measure();
    } else if (system == "length") {
        s = reals::make_length_system(12, seed);
        mu = reals::length_measure();
    } else if (system == "broken") {
        s = reals::make_broken_system(12, seed);
    } else {
        throw reals::UnknownOracle("unknown system: " + system);
    }
    reals::CheckReport rep = reals::check_axioms(s);
    if (mu) {
        const reals::CheckReport mrep = reals::check_measure_map(s, *mu);
        rep.lines.insert(rep.lines.end(), mrep.lines.begin(), mrep.lines.end());
    }
    std::string text = rep.to_text();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return emit(opt, text, make_record(text, std::nullopt, std::nullopt, std::nullopt));
}

int run_gallery(const Options& opt, const std::string& name, int n) {
    if (name == "list") {
        std::string text;
        for (const auto& g : reals::gallery_names()) {
            if (!text.empty()) text += "\n";
            text += g;
        }
        return emit(opt, text, make_record(text, std::nullopt, std::nullopt, std::nullopt));
    }
    std::string text = reals::run_gallery_demo(name, n);
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return emit(opt, text, make_record(text, std::nullopt, std::nullopt, std::nullopt));
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    opt.cap = default_cap_from_env();

    CLI::App app{"exact real arithmetic: digit queries, comparisons, suprema, measurements"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();
    app.add_option("--notation", opt.notation, "sign notation for negatives")
        ->check(CLI::IsMember({"minus", "star"}))
        ->capture_default_str();
    app.add_option("--out", opt.out_file, "write output to a file instead of stdout");
    app.add_option("--cap", opt.cap,
                   "precision cap (default from REALS_PRECISION_CAP if set)")
        ->check(CLI::PositiveNumber);

    std::string expr_text, rhs_text, oracle, system = "cardinality", demo;
    std::int64_t n_digits = 10;
    int m_precision = 20;
    int gallery_n = 0;
    std::uint64_t seed = 1;

    auto* digits = app.add_subcommand("digits", "decimal digits of an expression");
    digits->add_option("expr", expr_text, "expression")->required();
    digits->add_option("-n,--digits", n_digits, "number of decimal digits")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* compare = app.add_subcommand("compare", "order two expressions at a precision");
    compare->add_option("lhs", expr_text, "left expression")->required();
    compare->add_option("rhs", rhs_text, "right expression")->required();
    compare->add_option("-m,--precision", m_precision, "comparison precision")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* sup = app.add_subcommand("sup", "supremum of a named bound oracle");
    sup->add_option("--oracle", oracle, "oracle spec, e.g. sqrt:2, root:3:6, set:x^2<2, below:7/8")
        ->required();
    sup->add_option("-n,--digits", n_digits, "number of decimal digits")
        ->check(CLI::PositiveNumber);

    auto* measure = app.add_subcommand("measure", "measurement of a named cut oracle");
    measure->add_option("--oracle", oracle, "oracle spec")->required();
    measure->add_option("-n,--digits", n_digits, "number of decimal digits")
        ->check(CLI::PositiveNumber);

    auto* axioms = app.add_subcommand("axioms", "axiom checks for a comparative system");
    axioms->add_option("--system", system, "cardinality | length | broken")->required();
    axioms->add_option("--seed", seed, "sample seed");

    auto* gallery = app.add_subcommand("gallery", "named demos; 'gallery list' to enumerate");
    gallery->add_option("name", demo, "demo name")->required();
    gallery->add_option("-n", gallery_n, "demo size parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (digits->parsed()) return run_digits(opt, expr_text, n_digits);
        if (compare->parsed()) return run_compare(opt, expr_text, rhs_text, m_precision);
        if (sup->parsed()) return run_sup(opt, oracle, n_digits, false);
        if (measure->parsed()) return run_sup(opt, oracle, n_digits, true);
        if (axioms->parsed()) return run_axioms(opt, system, seed);
        if (gallery->parsed()) return run_gallery(opt, demo, gallery_n);
    } catch (const reals::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const reals::UnknownOracle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
