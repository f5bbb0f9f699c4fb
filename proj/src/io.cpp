#include "hta/io.hpp"

#include <json.hpp>
#include <sstream>

#include "hta/errors.hpp"

namespace hta {

using ordered_json = nlohmann::ordered_json;

namespace {

Rational rational_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where, "rationals must be quoted strings like \"2/3\", not numbers");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(where, e.what());
    }
}

Vec vec_from_json(const ordered_json& j, size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(where, "expected an array of " + std::to_string(dim) + " rationals");
    Vec v(dim);
    for (size_t i = 0; i < dim; ++i)
        v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

ordered_json vec_to_json(const Vec& v) {
    ordered_json j = ordered_json::array();
    for (size_t i = 0; i < v.dim(); ++i) j.push_back(v[i].str());
    return j;
}

BinaryTable binary_from_json(const ordered_json& j, size_t dim, const std::string& key) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(key, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                                  " table");
    BinaryTable t(dim);
    for (size_t i = 0; i < dim; ++i) {
        const ordered_json& row = j[i];
        if (!row.is_array() || row.size() != dim)
            throw ParseError(key + "[" + std::to_string(i) + "]", "expected a table row");
        for (size_t k = 0; k < dim; ++k)
            t.set_raw(i, k,
                      vec_from_json(row[k], dim,
                                    key + "[" + std::to_string(i) + "][" + std::to_string(k) +
                                        "]"));
    }
    return t;
}

ordered_json binary_to_json(const BinaryTable& t) {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < t.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (size_t j = 0; j < t.dim(); ++j) row.push_back(vec_to_json(t.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

TernaryTable ternary_from_json(const ordered_json& j, size_t dim, const std::string& key) {
    if (!j.is_array() || j.size() != dim) throw ParseError(key, "expected a cubic table");
    TernaryTable t(dim);
    for (size_t z = 0; z < dim; ++z) {
        const ordered_json& plane = j[z];
        if (!plane.is_array() || plane.size() != dim)
            throw ParseError(key + "[" + std::to_string(z) + "]", "expected a table plane");
        for (size_t i = 0; i < dim; ++i) {
            const ordered_json& row = plane[i];
            if (!row.is_array() || row.size() != dim)
                throw ParseError(key + "[" + std::to_string(z) + "][" + std::to_string(i) + "]",
                                 "expected a table row");
            for (size_t k = 0; k < dim; ++k)
                t.set_raw(z, i, k,
                          vec_from_json(row[k], dim,
                                        key + "[" + std::to_string(z) + "][" + std::to_string(i) +
                                            "][" + std::to_string(k) + "]"));
        }
    }
    return t;
}

ordered_json ternary_to_json(const TernaryTable& t) {
    ordered_json planes = ordered_json::array();
    for (size_t z = 0; z < t.dim(); ++z) {
        ordered_json plane = ordered_json::array();
        for (size_t i = 0; i < t.dim(); ++i) {
            ordered_json row = ordered_json::array();
            for (size_t j = 0; j < t.dim(); ++j) row.push_back(vec_to_json(t.at(z, i, j)));
            plane.push_back(std::move(row));
        }
        planes.push_back(std::move(plane));
    }
    return planes;
}

ordered_json parse_top_level(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
}

size_t dim_from_json(const ordered_json& doc) {
    if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
        throw ParseError("dim", "expected a positive integer");
    size_t dim = doc["dim"].get<size_t>();
    if (dim == 0) throw ParseError("dim", "dimension must be positive");
    return dim;
}

void reject_unknown_keys(const ordered_json& doc, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ParseError(key, "unknown key");
    }
}

constexpr const char* kConstKeys[8] = {"a", "b", "c", "d", "e", "f", "k", "l"};

}  // namespace

Algebra parse_algebra(const std::string& text) {
    ordered_json doc = parse_top_level(text);
    size_t dim = dim_from_json(doc);
    reject_unknown_keys(doc, {"dim", "constants2d", "dot", "star", "triple"});

    bool has_constants = doc.contains("constants2d");
    bool has_tables = doc.contains("dot") || doc.contains("star") || doc.contains("triple");
    if (has_constants && has_tables)
        throw ParseError("document", "give either constants2d or full tables, not both");
    if (!has_constants && !has_tables)
        throw ParseError("document", "missing constants2d or full tables");

    if (has_constants) {
        if (dim != 2) throw ParseError("constants2d", "shorthand requires dim = 2");
        const ordered_json& c = doc["constants2d"];
        if (!c.is_object()) throw ParseError("constants2d", "expected an object");
        reject_unknown_keys(c, {"a", "b", "c", "d", "e", "f", "k", "l"});
        Constants2D k8;
        Rational* slots[8] = {&k8.a, &k8.b, &k8.c, &k8.d, &k8.e, &k8.f, &k8.k, &k8.l};
        for (int i = 0; i < 8; ++i) {
            if (!c.contains(kConstKeys[i]))
                throw ParseError(std::string("constants2d.") + kConstKeys[i], "missing");
            *slots[i] = rational_from_json(c[kConstKeys[i]],
                                           std::string("constants2d.") + kConstKeys[i]);
        }
        return from_constants2d(k8);
    }

    for (const char* key : {"dot", "star", "triple"})
        if (!doc.contains(key)) throw ParseError(key, "missing table");
    return make_algebra(dim, binary_from_json(doc["dot"], dim, "dot"),
                        binary_from_json(doc["star"], dim, "star"),
                        ternary_from_json(doc["triple"], dim, "triple"));
}

std::string emit_algebra(const Algebra& alg) {
    ordered_json doc;
    doc["dim"] = alg.dim;
    if (alg.dim == 2) {
        Constants2D k8 = constants2d(alg);
        ordered_json c;
        const Rational* slots[8] = {&k8.a, &k8.b, &k8.c, &k8.d, &k8.e, &k8.f, &k8.k, &k8.l};
        for (int i = 0; i < 8; ++i) c[kConstKeys[i]] = slots[i]->str();
        doc["constants2d"] = std::move(c);
    } else {
        doc["dot"] = binary_to_json(alg.dot);
        doc["star"] = binary_to_json(alg.star);
        doc["triple"] = ternary_to_json(alg.triple);
    }
    return doc.dump(2) + "\n";
}

ConnectionData parse_connection(const std::string& text) {
    ordered_json doc = parse_top_level(text);
    size_t dim = dim_from_json(doc);
    reject_unknown_keys(doc, {"dim", "bracket", "a_tensor", "dT"});
    for (const char* key : {"bracket", "a_tensor", "dT"})
        if (!doc.contains(key)) throw ParseError(key, "missing table");
    return make_connection_data(dim, binary_from_json(doc["bracket"], dim, "bracket"),
                                binary_from_json(doc["a_tensor"], dim, "a_tensor"),
                                ternary_from_json(doc["dT"], dim, "dT"));
}

std::string emit_connection(const ConnectionData& data) {
    ordered_json doc;
    doc["dim"] = data.dim;
    doc["bracket"] = binary_to_json(data.bracket);
    doc["a_tensor"] = binary_to_json(data.a_tensor);
    doc["dT"] = ternary_to_json(data.dT);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Fixtures.
// ---------------------------------------------------------------------------

namespace {

Fixture algebra_fixture(const std::string& name, const std::string& check, Constants2D k8) {
    return Fixture{name, check, from_constants2d(k8), std::nullopt};
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> f;
    const Rational half(Int(1), Int(2));

    f.push_back(algebra_fixture("zero", "hta", {0, 0, 0, 0, 0, 0, 0, 0}));
    f.push_back(algebra_fixture("type-I-hyperbolic", "hta", {0, 0, 0, 0, 1, 0, 0, -1}));
    f.push_back(algebra_fixture("type-I-elliptic", "hta", {0, 0, 0, 0, 0, 1, -1, 0}));
    f.push_back(algebra_fixture("type-I-nilpotent", "hta", {0, 0, 0, 0, 0, 0, 1, 0}));

    f.push_back(algebra_fixture("type-I", "hta", {0, 0, 0, 0, 1, 2, 3, -1}));
    f.push_back(algebra_fixture("type-II", "hta", {1, 0, 0, 0, 0, 0, 1, 0}));
    f.push_back(algebra_fixture("type-III", "hta", {1, 1, 0, 0, 0, 0, 0, 0}));
    f.push_back(algebra_fixture("type-IV", "hta", {1, 2, 0, 0, 1, 2, -half, -1}));
    f.push_back(algebra_fixture("type-V", "hta", {0, 0, 1, 0, 1, 2, 3, -1}));
    f.push_back(algebra_fixture("type-VI", "hta", {1, 0, 1, 1, 0, 0, 1, 0}));
    f.push_back(algebra_fixture("type-VII", "hta", {1, 2, 1, 1, 1, 2, -half, -1}));
    f.push_back(algebra_fixture("type-VIII", "hta", {1, 1, 1, 1, 0, 0, 0, 0}));

    f.push_back(algebra_fixture("T1", "lta", {0, 0, 0, 0, 1, 2, 3, -1}));
    f.push_back(algebra_fixture("T2", "lta", {1, 0, 0, 0, 0, 0, 1, 0}));
    f.push_back(algebra_fixture("T3", "lta", {1, 1, 0, 0, 0, 0, 0, 0}));
    f.push_back(algebra_fixture("T4", "lta", {1, 2, 0, 0, 1, 2, -half, -1}));

    f.push_back(algebra_fixture("B1", "bol", {0, 0, 0, 0, 1, 2, 3, -1}));
    f.push_back(algebra_fixture("B2", "bol", {0, 0, 1, 1, 1, 1, 1, -1}));
    f.push_back(algebra_fixture("B3", "bol", {0, 0, 1, 1, 1, 1, 0, -1}));
    f.push_back(algebra_fixture("B4", "bol", {0, 0, 1, 1, 1, 0, 1, -1}));
    f.push_back(algebra_fixture("B5", "bol", {0, 0, 1, 1, 1, 0, 0, -1}));
    f.push_back(algebra_fixture("B6", "bol", {0, 0, 1, 1, 0, 1, 1, 0}));
    f.push_back(algebra_fixture("B7", "bol", {0, 0, 1, 1, 0, 1, 0, 0}));
    f.push_back(algebra_fixture("B8", "bol", {0, 0, 1, 1, 0, 0, 0, 0}));
    f.push_back(algebra_fixture("B9", "bol", {0, 0, 1, 0, 1, 1, 1, -1}));
    f.push_back(algebra_fixture("B10", "bol", {0, 0, 1, 0, 1, 1, 0, -1}));
    f.push_back(algebra_fixture("B11", "bol", {0, 0, 1, 0, 1, 0, 1, -1}));
    f.push_back(algebra_fixture("B12", "bol", {0, 0, 1, 0, 1, 0, 0, -1}));
    f.push_back(algebra_fixture("B13", "bol", {0, 0, 1, 0, 0, 1, 1, 0}));
    f.push_back(algebra_fixture("B14", "bol", {0, 0, 1, 0, 0, 1, 0, 0}));
    f.push_back(algebra_fixture("B15", "bol", {0, 0, 1, 0, 0, 0, 1, 0}));
    f.push_back(algebra_fixture("B16", "bol", {0, 0, 1, 0, 0, 0, 0, 0}));
    f.push_back(algebra_fixture("B17", "bol", {0, 0, 0, 1, 1, 1, 0, -1}));
    f.push_back(algebra_fixture("B18", "bol", {0, 0, 0, 1, 1, 0, 1, -1}));
    f.push_back(algebra_fixture("B19", "bol", {0, 0, 0, 1, 1, 0, 0, -1}));

    f.push_back(algebra_fixture("ref3-example", "hta", {1, 0, 0, 1, 0, 0, -1, 0}));

    {
        BinaryTable bracket(2), a(2);
        bracket.set(0, 1, Vec{2, 1});
        a.set(0, 1, Vec{1, 1});
        TernaryTable dT(2);
        dT.set(0, 0, 1, Vec{1, -1});
        dT.set(1, 0, 1, Vec{1, 0});
        f.push_back(Fixture{"section2-connection", "audit", std::nullopt,
                            make_connection_data(2, bracket, a, dT)});
    }
    f.push_back(algebra_fixture("section2-claimed", "audit", {1, 1, 1, 0, -1, 1, 1, -1}));
    return f;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

const Fixture* find_fixture(const std::string& name) {
    for (const auto& f : fixture_catalog())
        if (f.name == name) return &f;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Report rendering.
// ---------------------------------------------------------------------------

namespace {

ordered_json residual_json(const Residual& r) {
    ordered_json j;
    j["args"] = r.args;
    j["value"] = vec_to_json(r.value);
    return j;
}

ordered_json checks_json(const std::string& set_name, const std::vector<CheckReport>& reports) {
    ordered_json j;
    j["set"] = set_name;
    j["passed"] = all_passed(reports);
    ordered_json items = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json item;
        item["identity"] = identity_name(r.identity);
        item["passed"] = r.passed;
        item["tuples_checked"] = r.tuples_checked;
        item["violation_count"] = r.violation_count;
        ordered_json vs = ordered_json::array();
        for (const auto& v : r.violations) vs.push_back(residual_json(v));
        item["violations"] = std::move(vs);
        items.push_back(std::move(item));
    }
    j["identities"] = std::move(items);
    return j;
}

std::string args_str(const std::vector<size_t>& args) {
    std::string s = "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(args[i]);
    }
    return s + ")";
}

ordered_json mat_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json constants_json(const Constants2D& k8) {
    ordered_json c;
    const Rational* slots[8] = {&k8.a, &k8.b, &k8.c, &k8.d, &k8.e, &k8.f, &k8.k, &k8.l};
    for (int i = 0; i < 8; ++i) c[kConstKeys[i]] = slots[i]->str();
    return c;
}

std::string constants_str(const Constants2D& k8) {
    const Rational* slots[8] = {&k8.a, &k8.b, &k8.c, &k8.d, &k8.e, &k8.f, &k8.k, &k8.l};
    std::string s = "(";
    for (int i = 0; i < 8; ++i) {
        if (i) s += ",";
        s += slots[i]->str();
    }
    return s + ")";
}

ordered_json template_json(const TemplateId& t) {
    ordered_json j;
    j["catalog"] = catalog_name(t.catalog);
    j["index"] = t.index;
    ordered_json b;
    for (const auto& [letter, value] : t.bindings) b[std::string(1, letter)] = value.str();
    j["bindings"] = std::move(b);
    j["side_conditions"] = t.side_conditions;
    return j;
}

ordered_json invariants_json(const InvariantRecord& inv) {
    ordered_json j;
    j["star_zero"] = inv.star_zero;
    j["dot_zero"] = inv.dot_zero;
    j["triple_zero"] = inv.triple_zero;
    j["trace_T"] = inv.trace_T.str();
    j["sign_det_T"] = inv.sign_det_T;
    if (inv.imT_in_span_dot) j["imT_in_span_dot"] = *inv.imT_in_span_dot;
    if (inv.star_parallel_dot) j["star_parallel_dot"] = *inv.star_parallel_dot;
    return j;
}

ordered_json classification_json(const ClassificationResult& r) {
    ordered_json j;
    j["family"] = family_name(r.family);
    j["theorem_type"] = r.theorem_type;
    j["canonical_constants"] = constants_json(r.canonical_constants);
    j["witness"] = mat_json(r.witness);
    j["invariants"] = invariants_json(r.invariants);
    ordered_json ms = ordered_json::array();
    for (const auto& m : r.matched_templates) ms.push_back(template_json(m));
    j["matched_templates"] = std::move(ms);
    return j;
}

ordered_json enumeration_json(const EnumerationReport& r) {
    ordered_json j;
    ordered_json grid;
    grid["min"] = r.spec.min;
    grid["max"] = r.spec.max;
    grid["denominator"] = r.spec.denominator;
    j["grid"] = std::move(grid);
    j["total"] = r.total;
    j["valid"] = r.valid;
    ordered_json fam;
    for (const auto& [k, v] : r.per_family) fam[k] = v;
    j["per_family"] = std::move(fam);
    ordered_json types;
    for (const auto& [k, v] : r.per_theorem_type) types[k] = v;
    j["per_theorem_type"] = std::move(types);
    auto mismatches = [](const std::vector<MismatchEntry>& list) {
        ordered_json out = ordered_json::array();
        for (const auto& e : list) {
            ordered_json m;
            m["index"] = e.index;
            m["constants"] = constants_json(e.constants);
            m["what"] = e.what;
            out.push_back(std::move(m));
        }
        return out;
    };
    j["lemma_mismatches"] = mismatches(r.lemma_mismatches);
    j["predicate_mismatches"] = mismatches(r.predicate_mismatches);
    j["unclassified"] = mismatches(r.unclassified);
    return j;
}

void render_check_lines(std::ostringstream& os, const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        os << "  " << identity_name(r.identity);
        for (size_t i = identity_name(r.identity).size(); i < 5; ++i) os << ' ';
        if (r.passed) {
            os << "pass  (" << r.tuples_checked << " tuples)\n";
        } else {
            os << "FAIL  " << r.violation_count << " violation(s) of " << r.tuples_checked
               << " tuples";
            if (!r.violations.empty())
                os << "; first at " << args_str(r.violations[0].args) << " residual "
                   << r.violations[0].value.str();
            os << "\n";
        }
    }
}

ordered_json audit_section_json(const AuditSection& s) {
    ordered_json j;
    j["label"] = s.label;
    j["constants"] = constants_json(s.constants);
    j["valid"] = s.valid;
    j["J"] = vec_to_json(s.J);
    j["N"] = vec_to_json(s.N);
    j["reduced"] = checks_json("reduced", s.reduced);
    j["full"] = checks_json("hta", s.full);
    if (s.classification) j["classification"] = classification_json(*s.classification);
    return j;
}

void audit_section_text(std::ostringstream& os, const AuditSection& s) {
    os << s.label << "\n";
    os << "  constants " << constants_str(s.constants) << "\n";
    os << "  J = " << s.J.str() << ", N = " << s.N.str() << "\n";
    if (s.valid) {
        os << "  verdict: satisfies the full and reduced systems\n";
        if (s.classification)
            os << "  classified: type (" << s.classification->theorem_type << "), family "
               << family_name(s.classification->family) << "\n";
    } else {
        os << "  verdict: FAILS the identity system; residuals:\n";
        for (const auto& r : s.reduced)
            if (!r.passed)
                os << "    " << identity_name(r.identity) << " residual "
                   << r.violations[0].value.str() << " at " << args_str(r.violations[0].args)
                   << "\n";
        for (const auto& r : s.full)
            if (!r.passed)
                os << "    " << identity_name(r.identity) << ": " << r.violation_count
                   << " violating tuple(s), first residual " << r.violations[0].value.str()
                   << "\n";
    }
}

}  // namespace

std::string render_checks(const std::string& set_name, const std::vector<CheckReport>& reports,
                          bool as_json) {
    if (as_json) return checks_json(set_name, reports).dump(2) + "\n";
    std::ostringstream os;
    os << "identity set: " << set_name << "\n";
    render_check_lines(os, reports);
    os << (all_passed(reports) ? "overall: pass" : "overall: FAIL") << "\n";
    return os.str();
}

std::string render_classification(const ClassificationResult& r, bool as_json) {
    if (as_json) return classification_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << "family: " << family_name(r.family) << "\n";
    os << "theorem type: (" << r.theorem_type << ")\n";
    os << "canonical constants: " << constants_str(r.canonical_constants) << "\n";
    os << "witness: " << r.witness.str() << "\n";
    os << "invariants: trace " << r.invariants.trace_T.str() << ", sign(det T) "
       << r.invariants.sign_det_T << "\n";
    os << "given-basis template matches:";
    for (const auto& m : r.matched_templates) os << " " << m.index;
    os << "\n";
    return os.str();
}

std::string render_iso(const IsoResult& r, const std::optional<Mat>& oracle_witness,
                       bool oracle_ran, bool as_json) {
    if (as_json) {
        ordered_json j;
        j["verdict"] = r.verdict == IsoVerdict::Isomorphic      ? "isomorphic"
                       : r.verdict == IsoVerdict::NotIsomorphic ? "not_isomorphic"
                                                                : "inconclusive";
        j["detail"] = r.detail;
        if (r.witness) {
            j["witness"] = mat_json(r.witness->P);
            j["verified"] = r.witness->verified;
        }
        if (oracle_ran) {
            j["oracle_ran"] = true;
            if (oracle_witness)
                j["oracle_witness"] = mat_json(*oracle_witness);
            else
                j["oracle_witness"] = nullptr;
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    switch (r.verdict) {
        case IsoVerdict::Isomorphic:
            os << "isomorphic; witness " << r.witness->P.str() << " (verified)\n";
            break;
        case IsoVerdict::NotIsomorphic:
            os << "not isomorphic: " << r.detail << "\n";
            break;
        case IsoVerdict::Inconclusive:
            os << "inconclusive: " << r.detail << "\n";
            break;
    }
    if (oracle_ran) {
        if (oracle_witness)
            os << "oracle: found witness " << oracle_witness->str() << "\n";
        else
            os << "oracle: no witness on its grid\n";
    }
    return os.str();
}

std::string render_enumeration(const EnumerationReport& r, bool as_json) {
    if (as_json) return enumeration_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << "grid [" << r.spec.min << ", " << r.spec.max << "] step 1/" << r.spec.denominator
       << ": " << r.total << " algebras, " << r.valid << " valid\n";
    os << "per family:";
    for (const auto& [k, v] : r.per_family) os << "  " << k << "=" << v;
    os << "\nper theorem type:";
    for (const auto& [k, v] : r.per_theorem_type) os << "  (" << k << ")=" << v;
    os << "\nlemma mismatches: " << r.lemma_mismatches.size()
       << ", predicate mismatches: " << r.predicate_mismatches.size()
       << ", unclassified: " << r.unclassified.size() << "\n";
    os << (r.clean() ? "audit clean" : "AUDIT FAILURES PRESENT") << "\n";
    return os.str();
}

std::string render_audit(const AuditReport& r, bool as_json) {
    if (as_json) {
        ordered_json j;
        j["computed"] = audit_section_json(r.computed);
        ordered_json alts = ordered_json::array();
        for (const auto& s : r.alternatives) alts.push_back(audit_section_json(s));
        j["alternatives"] = std::move(alts);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    audit_section_text(os, r.computed);
    for (const auto& s : r.alternatives) {
        os << "\n";
        audit_section_text(os, s);
    }
    os << "\nnote: the readings above are reported side by side; none is asserted as ground "
          "truth.\n";
    return os.str();
}

}  // namespace hta
