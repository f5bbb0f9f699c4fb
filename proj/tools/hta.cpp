// Command-line front end: identity checking, classification, isomorphism
// testing, exhaustive enumeration, and the affine-connection audit for
// two-dimensional binary-ternary algebras given by structure constants.
//
// Exit codes: 0 pass/success, 1 negative mathematical verdict (identities
// fail / not isomorphic / audit mismatches), 2 input or usage error,
// 3 inconclusive isomorphism or enumeration budget exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hta/errors.hpp"
#include "hta/io.hpp"

namespace {

using namespace hta;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Algebra load_algebra(const std::string& arg) {
    if (std::filesystem::exists(arg)) return parse_algebra(read_file(arg));
    if (const Fixture* f = find_fixture(arg)) {
        if (f->algebra) return *f->algebra;
        throw ParseError(arg, "fixture holds connection data; use from-connection");
    }
    throw ParseError(arg, "no such file or fixture (try: example --list)");
}

ConnectionData load_connection(const std::string& arg) {
    if (std::filesystem::exists(arg)) return parse_connection(read_file(arg));
    if (const Fixture* f = find_fixture(arg)) {
        if (f->connection) return *f->connection;
        throw ParseError(arg, "fixture holds an algebra document, not connection data");
    }
    throw ParseError(arg, "no such file or fixture (try: example --list)");
}

uint64_t budget_from_env() {
    if (const char* env = std::getenv("HTA_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("HTA_BUDGET", "expected a positive integer");
    }
    return kDefaultBudget;
}

int run_check(const std::string& input, const std::string& set, bool json) {
    Algebra alg = load_algebra(input);
    std::vector<CheckReport> reports;
    if (set == "hta")
        reports = check_hta(alg);
    else if (set == "bol")
        reports = check_bol(alg);
    else if (set == "lta")
        reports = check_lta(alg);
    else if (set == "lts")
        reports = check_lts(alg);
    else if (set == "reduced")
        reports = check_reduced(alg);
    else
        throw ParseError("--set", "expected one of hta|bol|lta|lts|reduced");
    std::cout << render_checks(set, reports, json);
    return all_passed(reports) ? kExitPass : kExitFail;
}

int run_classify(const std::string& input, bool json) {
    Algebra alg = load_algebra(input);
    try {
        std::cout << render_classification(classify(alg), json);
        return kExitPass;
    } catch (const NotValidHta&) {
        std::cout << (json ? "{\n  \"error\": \"not a valid h.t.a.\"\n}\n"
                           : "not a valid h.t.a.: the reduced system fails\n");
        return kExitFail;
    }
}

int run_iso(const std::string& left, const std::string& right, bool oracle, bool json) {
    Algebra A = load_algebra(left);
    Algebra B = load_algebra(right);
    IsoResult res = find_isomorphism(A, B);
    std::optional<Mat> oracle_witness;
    if (oracle) oracle_witness = oracle_isomorphic(A, B, GridSpec{-2, 2, 1});
    std::cout << render_iso(res, oracle_witness, oracle, json);
    if (res.verdict == IsoVerdict::Isomorphic) return kExitPass;
    if (oracle && oracle_witness) return kExitPass;  // oracle settled it positively
    return res.verdict == IsoVerdict::NotIsomorphic ? kExitFail : kExitInconclusive;
}

int run_enumerate(long long min, long long max, long long den, unsigned jobs,
                  const std::string& out, bool json) {
    EnumerationReport report = enumerate_grid(GridSpec{min, max, den}, jobs, budget_from_env());
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw ParseError(out, "cannot open output file");
        f << render_enumeration(report, /*as_json=*/true);
    }
    std::cout << render_enumeration(report, json);
    return report.clean() ? kExitPass : kExitFail;
}

int run_example(const std::string& name, bool list) {
    if (list) {
        for (const auto& f : fixture_catalog())
            std::cout << f.name << "\t" << (f.algebra ? "algebra" : "connection") << "\t"
                      << f.intended_check << "\n";
        return kExitPass;
    }
    const Fixture* f = find_fixture(name);
    if (!f) throw ParseError(name, "no such fixture (try: example --list)");
    std::cout << (f->algebra ? emit_algebra(*f->algebra) : emit_connection(*f->connection));
    return kExitPass;
}

int run_from_connection(const std::string& input, bool audit, bool json) {
    ConnectionData data = load_connection(input);
    if (!audit) {
        std::cout << emit_algebra(algebra_from_connection(data));
        return kExitPass;
    }
    // For the built-in worked example, lay the stated constants
    // alongside the computed ones.
    std::optional<Algebra> stated;
    const Fixture* s2 = find_fixture("section2-connection");
    if (s2 && s2->connection && data == *s2->connection)
        stated = find_fixture("section2-claimed")->algebra;
    AuditReport report = audit_connection_example(data, stated);
    std::cout << render_audit(report, json);
    return report.computed.valid ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant checker and classifier for two-dimensional "
                 "binary-ternary algebras"};
    app.require_subcommand(1);

    std::string input, input2, set = "hta", out;
    long long gmin = -1, gmax = 1, gden = 1;
    unsigned jobs = 1;
    bool json = false, oracle = false, list = false, audit = false;

    CLI::App* check = app.add_subcommand("check", "verify an identity system");
    check->add_option("FILE", input, "algebra document or fixture name")->required();
    check->add_option("--set", set, "hta|bol|lta|lts|reduced (default hta)");
    check->add_flag("--json", json, "machine-readable output");

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a valid algebra");
    classify_cmd->add_option("FILE", input, "algebra document or fixture name")->required();
    classify_cmd->add_flag("--json", json, "machine-readable output");

    CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
    iso->add_option("FILE1", input, "first algebra")->required();
    iso->add_option("FILE2", input2, "second algebra")->required();
    iso->add_flag("--oracle", oracle, "also run the brute-force grid oracle");
    iso->add_flag("--json", json, "machine-readable output");

    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive grid sweep with audits");
    enumerate->add_option("--min", gmin, "axis minimum (default -1)");
    enumerate->add_option("--max", gmax, "axis maximum (default 1)");
    enumerate->add_option("--den", gden, "axis subdivision denominator (default 1)");
    enumerate->add_option("--jobs", jobs, "worker threads (default 1)");
    enumerate->add_option("--out", out, "write the JSON report to this file");
    enumerate->add_flag("--json", json, "JSON on stdout too");

    CLI::App* example = app.add_subcommand("example", "print a built-in fixture");
    example->add_option("NAME", input, "fixture name");
    example->add_flag("--list", list, "list all fixtures");

    CLI::App* fromconn = app.add_subcommand("from-connection",
                                            "build an algebra from pointwise connection data");
    fromconn->add_option("FILE", input, "connection document or fixture name")->required();
    fromconn->add_flag("--audit", audit, "run the identity audit over all readings");
    fromconn->add_flag("--json", json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(input, set, json);
        if (classify_cmd->parsed()) return run_classify(input, json);
        if (iso->parsed()) return run_iso(input, input2, oracle, json);
        if (enumerate->parsed()) return run_enumerate(gmin, gmax, gden, jobs, out, json);
        if (example->parsed()) {
            if (!list && input.empty()) {
                std::cerr << "error: give a fixture name or --list\n";
                return kExitInputError;
            }
            return run_example(input, list);
        }
        if (fromconn->parsed()) return run_from_connection(input, audit, json);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const NotValidHta& e) {
        std::cout << "not a valid h.t.a.: the reduced system fails\n";
        return kExitFail;
    } catch (const NotValidLta& e) {
        std::cout << e.what() << "\n";
        return kExitFail;
    } catch (const NotValidBol& e) {
        std::cout << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
