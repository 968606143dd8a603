// Command-line front end: exact walk counts, named sequences, identity
// verification suites, polynomial fits, and table export.
//
// Exit codes: 0 success, 1 verification failures, 2 usage or configuration
// errors. GESSEL_MMAX (default 64) bounds how long a table any command may
// build.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gessel/identities.hpp"
#include "gessel/path_oracle.hpp"

namespace {

using nlohmann::ordered_json;

int m_limit() {
    const char* s = std::getenv("GESSEL_MMAX");
    if (!s || !*s) return 64;
    try {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == std::string(s).size() && v >= 0) return v;
    } catch (...) {
    }
    throw gessel::Error("GESSEL_MMAX must be a nonnegative integer, got '" + std::string(s) + "'");
}

void check_m(int m) {
    const int cap = m_limit();
    if (m > cap)
        throw gessel::Error("walk length " + std::to_string(m) + " exceeds the table limit " +
                            std::to_string(cap) + " (raise GESSEL_MMAX to allow this)");
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw gessel::Error("cannot open output file '" + output + "'");
    out << text;
}

gessel::Region to_region(const std::string& name) {
    if (name == "quarter") return gessel::Region::QuarterPlane;
    if (name == "half") return gessel::Region::HalfPlane;
    return gessel::Region::BelowDiagonal;
}

ordered_json poly_json(const gessel::Polynomial& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(gessel::rational_str(c));
    return a;
}

std::string poly_csv(const gessel::Polynomial& p) {
    std::string out;
    for (const auto& c : p.coeffs()) {
        if (!out.empty()) out += ';';
        out += gessel::rational_str(c);
    }
    return out.empty() ? "0" : out;
}

struct CountArgs {
    std::string region = "quarter";
    int m = 0;
    int n1 = 0;
    int n2 = 0;
    std::string format = "text";
    std::string output;
};

int cmd_count(const CountArgs& a) {
    check_m(a.m);
    const bool total = (a.region == "diagonal-total");
    gessel::RollingTable table(total ? gessel::Region::BelowDiagonal : to_region(a.region));
    for (int i = 0; i < a.m; ++i) table.advance();
    const gessel::CountInt value = total ? table.total() : table.at(a.n1, a.n2);

    std::string text;
    if (a.format == "json") {
        ordered_json doc{{"region", a.region}, {"m", a.m}};
        if (!total) {
            doc["n1"] = a.n1;
            doc["n2"] = a.n2;
        }
        doc["count"] = value.str();
        text = doc.dump(2) + "\n";
    } else if (a.format == "csv") {
        text = total ? "m,count\n" + std::to_string(a.m) + "," + value.str() + "\n"
                     : "m,n1,n2,count\n" + std::to_string(a.m) + "," + std::to_string(a.n1) +
                           "," + std::to_string(a.n2) + "," + value.str() + "\n";
    } else {
        text = value.str() + "\n";
    }
    emit(text, a.output);
    return 0;
}

struct SequenceArgs {
    std::string name;
    int terms = 0;
    std::string format = "text";
    std::string output;
};

int cmd_sequence(const SequenceArgs& a) {
    // gessel:   closed quarter-plane walks, length 2n
    // g:        quarter-plane walks to (1, 0), length 2n+1
    // diagonal: diagonal-region walks of length m, any endpoint
    std::vector<gessel::CountInt> values;
    if (a.name == "diagonal") {
        check_m(a.terms - 1);
        gessel::RollingTable t(gessel::Region::BelowDiagonal);
        for (int m = 0; m < a.terms; ++m) {
            if (m > 0) t.advance();
            values.push_back(t.total());
        }
    } else {
        const bool odd = (a.name == "g");
        check_m(odd ? 2 * (a.terms - 1) + 1 : 2 * (a.terms - 1));
        gessel::RollingTable t(gessel::Region::QuarterPlane);
        if (odd) t.advance();
        for (int n = 0; n < a.terms; ++n) {
            if (n > 0) {
                t.advance();
                t.advance();
            }
            values.push_back(odd ? t.at(1, 0) : t.at(0, 0));
        }
    }

    std::string text;
    if (a.format == "json") {
        ordered_json vals = ordered_json::array();
        for (const auto& v : values) vals.push_back(v.str());
        text = ordered_json{{"name", a.name}, {"values", vals}}.dump(2) + "\n";
    } else if (a.format == "csv") {
        text = "n,value\n";
        for (size_t i = 0; i < values.size(); ++i)
            text += std::to_string(i) + "," + values[i].str() + "\n";
    } else {
        for (const auto& v : values) text += v.str() + "\n";
    }
    emit(text, a.output);
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> suites{"all"};
    int n_max = -1;
    int k_max = -1;
    int oracle_cap = -1;
    bool strict = false;
    std::string format = "text";
    std::string output;
};

int cmd_verify(const VerifyArgs& a) {
    gessel::SuiteLimits limits;
    if (a.n_max >= 0) limits.n_max = a.n_max;
    if (a.k_max >= 0) limits.k_max = a.k_max;
    if (a.oracle_cap >= 0) limits.oracle_cap = a.oracle_cap;
    limits.m_cap = m_limit();

    const auto results = gessel::run_suites(a.suites, limits);
    std::string text;
    if (a.format == "json")
        text = gessel::render_json(results);
    else if (a.format == "csv")
        text = gessel::render_csv(results);
    else
        text = gessel::render_text(results);
    emit(text, a.output);
    return gessel::all_passed(results, a.strict) ? 0 : 1;
}

struct FitArgs {
    std::string family;
    int k = 1;
    int samples = -1;
    std::string format = "text";
    std::string output;
};

int cmd_fit(const FitArgs& a) {
    std::string text;
    bool ok = false;
    if (a.family == "c1") {
        const int samples = a.samples >= 0 ? a.samples : 4 * a.k + 3;
        const int need = 2 * (a.k + samples - 1);
        check_m(need);
        gessel::DPTable quarter(gessel::Region::QuarterPlane, need);
        const gessel::C1Fit fit = gessel::c1_fit(a.k, samples, quarter);
        ok = fit.degree_ok && fit.holdout_ok;
        if (a.format == "json") {
            text = ordered_json{{"family", "c1"},
                                {"k", a.k},
                                {"p", poly_json(fit.p)},
                                {"q", poly_json(fit.q)},
                                {"degree_ok", fit.degree_ok},
                                {"holdout_ok", fit.holdout_ok}}
                       .dump(2) +
                   "\n";
        } else if (a.format == "csv") {
            text = "family,k,p,q,degree_ok,holdout_ok\nc1," + std::to_string(a.k) + "," +
                   poly_csv(fit.p) + "," + poly_csv(fit.q) + "," + (fit.degree_ok ? "true" : "false") +
                   "," + (fit.holdout_ok ? "true" : "false") + "\n";
        } else {
            text = "p(n) = " + fit.p.str() + "\nq(n) = " + fit.q.str() + "\n" +
                   "degree_ok: " + (fit.degree_ok ? "yes" : "no") +
                   "\nholdout_ok: " + (fit.holdout_ok ? "yes" : "no") + "\n";
        }
    } else {
        const bool c2 = (a.family == "c2");
        const int need = c2 ? 6 * a.k + 8 : 4 * a.k + 4;
        check_m(need);
        gessel::DPTable quarter(gessel::Region::QuarterPlane, need);
        const gessel::PolynomialFinding f =
            c2 ? gessel::c2_extract(a.k, quarter) : gessel::c4_extract(a.k, quarter);
        ok = f.all_ok();
        const std::string name = f.family + "_" + std::to_string(f.k);
        if (a.format == "json") {
            text = ordered_json{{"family", a.family},
                                {"k", a.k},
                                {"name", name},
                                {"poly", poly_json(f.poly)},
                                {"normalized", poly_json(f.normalized)},
                                {"degree_ok", f.degree_ok},
                                {"integrality_ok", f.integrality_ok},
                                {"leading_ok", f.leading_ok},
                                {"divisibility_ok", f.divisibility_ok}}
                       .dump(2) +
                   "\n";
        } else if (a.format == "csv") {
            text = "family,k,poly,normalized,degree_ok,integrality_ok,leading_ok,divisibility_ok\n" +
                   a.family + "," + std::to_string(a.k) + "," + poly_csv(f.poly) + "," +
                   poly_csv(f.normalized) + "," + (f.degree_ok ? "true" : "false") + "," +
                   (f.integrality_ok ? "true" : "false") + "," + (f.leading_ok ? "true" : "false") +
                   "," + (f.divisibility_ok ? "true" : "false") + "\n";
        } else {
            text = name + "(n) = " + f.poly.str() + "\nh(n) = " + f.normalized.str() + "\n" +
                   "degree_ok: " + (f.degree_ok ? "yes" : "no") +
                   "\nintegrality_ok: " + (f.integrality_ok ? "yes" : "no") +
                   "\nleading_ok: " + (f.leading_ok ? "yes" : "no") +
                   "\ndivisibility_ok: " + (f.divisibility_ok ? "yes" : "no") + "\n";
        }
    }
    emit(text, a.output);
    return ok ? 0 : 1;
}

struct ExportArgs {
    std::string region = "quarter";
    int m = 0;
    std::string format = "csv";
    std::string output;
};

int cmd_export(const ExportArgs& a) {
    check_m(a.m);
    const gessel::DPTable table(to_region(a.region), a.m);
    std::string text;
    if (a.format == "json") {
        ordered_json points = ordered_json::array();
        for (int m = 0; m <= a.m; ++m)
            for (const auto& [p, c] : table.layer(m))
                points.push_back(ordered_json{
                    {"m", m}, {"n1", p.x}, {"n2", p.y}, {"count", c.str()}});
        text = ordered_json{{"region", a.region}, {"m_max", a.m}, {"points", points}}.dump(2) +
               "\n";
    } else {
        text = "m,n1,n2,count\n";
        for (int m = 0; m <= a.m; ++m)
            for (const auto& [p, c] : table.layer(m))
                text += std::to_string(m) + "," + std::to_string(p.x) + "," +
                        std::to_string(p.y) + "," + c.str() + "\n";
    }
    emit(text, a.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice-walk counts and identity verification"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json", "csv"};

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Count walks of a given length and endpoint");
    count->add_option("--region", count_args.region, "Confinement region")
        ->check(CLI::IsMember({"quarter", "half", "diagonal", "diagonal-total"}));
    count->add_option("-m,--steps", count_args.m, "Walk length")->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--n1", count_args.n1, "Endpoint x coordinate");
    count->add_option("--n2", count_args.n2, "Endpoint y coordinate");
    count->add_option("--format", count_args.format, "Output format")->check(CLI::IsMember(formats));
    count->add_option("--output", count_args.output, "Write output to a file");

    SequenceArgs seq_args;
    auto* seq = app.add_subcommand("sequence", "Print the first terms of a named sequence");
    seq->add_option("name", seq_args.name, "Sequence name")
        ->required()
        ->check(CLI::IsMember({"gessel", "g", "diagonal"}));
    seq->add_option("terms", seq_args.terms, "Number of terms")
        ->required()
        ->check(CLI::PositiveNumber);
    seq->add_option("--format", seq_args.format, "Output format")->check(CLI::IsMember(formats));
    seq->add_option("--output", seq_args.output, "Write output to a file");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    verify->add_option("--suite", verify_args.suites,
                       "Suite id (repeatable); 'all' runs every suite");
    verify->add_option("--n-max", verify_args.n_max, "Override the per-suite n sweep limit")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--k-max", verify_args.k_max, "Override the per-suite k sweep limit")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--oracle-cap", verify_args.oracle_cap,
                       "Max walk length for enumeration-backed checks (hard cap 13)")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--strict", verify_args.strict,
                     "Count documented discrepancies as failures");
    verify->add_option("--format", verify_args.format, "Report format")
        ->check(CLI::IsMember(formats));
    verify->add_option("--output", verify_args.output, "Write the report to a file");

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "Fit or extract the polynomial part of a closed form");
    fit->add_option("family", fit_args.family, "Closed-form family")
        ->required()
        ->check(CLI::IsMember({"c1", "c2", "c4"}));
    fit->add_option("k", fit_args.k, "Family index")->required()->check(CLI::PositiveNumber);
    fit->add_option("--samples", fit_args.samples,
                    "Sample points for the c1 fit (default 4k+3)")
        ->check(CLI::PositiveNumber);
    fit->add_option("--format", fit_args.format, "Output format")->check(CLI::IsMember(formats));
    fit->add_option("--output", fit_args.output, "Write output to a file");

    ExportArgs export_args;
    auto* exp = app.add_subcommand("export", "Dump whole table layers");
    exp->add_option("--region", export_args.region, "Confinement region")
        ->check(CLI::IsMember({"quarter", "half", "diagonal"}));
    exp->add_option("-m,--steps", export_args.m, "Largest layer to export")
        ->required()
        ->check(CLI::NonNegativeNumber);
    exp->add_option("--format", export_args.format, "Output format")
        ->check(CLI::IsMember(formats));
    exp->add_option("--output", export_args.output, "Write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count) return cmd_count(count_args);
        if (*seq) return cmd_sequence(seq_args);
        if (*verify) return cmd_verify(verify_args);
        if (*fit) return cmd_fit(fit_args);
        return cmd_export(export_args);
    } catch (const gessel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
