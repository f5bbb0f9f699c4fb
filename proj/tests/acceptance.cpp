// Acceptance suite: one line per criterion, zero tolerance everywhere
// (exact arithmetic).  Returns the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hta/classify.hpp"
#include "hta/connection.hpp"
#include "hta/errors.hpp"
#include "hta/explore.hpp"
#include "hta/identities.hpp"
#include "hta/io.hpp"

using namespace hta;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct SplitMix {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rational rational() { return Rational(Int(range(-6, 6)), Int(range(1, 3))); }
};

// Frozen regression values from the first verified oracle run of the
// {-1,0,1}^8 sweep (6561 points), cross-checked by hand against the
// closed-form count: l = -e, bk + ae = 0, af - be = 0 leave 51 choices
// of (a,b,e,f,k) times 9 of (c,d).
constexpr uint64_t kSweepTotal = 6561;
constexpr uint64_t kSweepValid = 459;
constexpr uint64_t kSweepFamilyI = 27;
constexpr uint64_t kSweepFamilyII_IV = 24;
constexpr uint64_t kSweepFamilyV = 216;
constexpr uint64_t kSweepFamilyVI_VIII = 192;

const GridSpec kSweepSpec{-1, 1, 1};

Constants2D grid_point(uint64_t index) {
    Rational v[8];
    for (int slot = 7; slot >= 0; --slot) {
        v[slot] = Rational(Int(static_cast<long long>(index % 3) - 1));
        index /= 3;
    }
    return Constants2D{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

Outcome criterion1_lemma_equivalence(const EnumerationReport& sweep, double sweep_seconds) {
    std::ostringstream os;
    bool ok = true;
    if (sweep.total != kSweepTotal) {
        ok = false;
        os << "total " << sweep.total << " != " << kSweepTotal << "; ";
    }
    if (!sweep.lemma_mismatches.empty()) {
        ok = false;
        os << sweep.lemma_mismatches.size() << " full/reduced mismatches, first at constants "
           << sweep.lemma_mismatches[0].constants.dot_vec().str() << "...; ";
    }
    if (sweep_seconds >= 60.0) {
        ok = false;
        os << "sweep took " << sweep_seconds << "s (>= 60s); ";
    }
    os << "6561 points, full system vs reduced system agree everywhere, "
       << sweep_seconds << "s single-threaded";
    return {ok, os.str()};
}

Outcome criterion2_variety(const EnumerationReport& sweep) {
    std::ostringstream os;
    bool ok = sweep.predicate_mismatches.empty();
    if (!ok) os << sweep.predicate_mismatches.size() << " predicate mismatches on the grid; ";

    SplitMix rng{20250817};
    size_t random_mismatches = 0;
    for (int it = 0; it < 1000; ++it) {
        Constants2D k8{rng.rational(), rng.rational(), rng.rational(), rng.rational(),
                       rng.rational(), rng.rational(), rng.rational(), rng.rational()};
        if (variety_predicate(k8) != verdict_reduced(from_constants2d(k8))) ++random_mismatches;
    }
    if (random_mismatches) {
        ok = false;
        os << random_mismatches << " mismatches on random rationals; ";
    }
    if (sweep.valid != kSweepValid) {
        ok = false;
        os << "valid count " << sweep.valid << " != pinned " << kSweepValid << "; ";
    }
    os << "predicate == reduced verdict on 6561 grid + 1000 random points; valid count "
       << sweep.valid << " matches the pinned oracle value";
    return {ok, os.str()};
}

Outcome criterion3_theorem_soundness() {
    const char* types[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};
    for (const char* idx : types) {
        for (uint64_t seed = 1; seed <= 100; ++seed) {
            Algebra alg = random_algebra(seed, std::string(idx));
            if (!all_passed(check_hta(alg)))
                return {false, std::string("type (") + idx + ") instance failed at seed " +
                                   std::to_string(seed)};
        }
    }
    return {true,
            "100 constrained instances of each type (I)-(VIII) pass the full system; types "
            "(III),(IV),(VII),(VIII) are exercised by constrained draws since the coarse grid's "
            "precedence winners are only (I),(II),(V),(VI)"};
}

Outcome criterion4_coverage(const EnumerationReport& sweep) {
    std::ostringstream os;
    bool ok = sweep.unclassified.empty();
    if (!ok) os << sweep.unclassified.size() << " unclassified valid algebras; ";

    uint64_t verified = 0;
    for (uint64_t idx = 0; idx < kSweepTotal; ++idx) {
        Constants2D k8 = grid_point(idx);
        Algebra alg = from_constants2d(k8);
        if (!verdict_reduced(alg)) continue;
        ClassificationResult res = classify(alg);
        const TemplateSpec* spec = find_template(res.theorem_type);
        Constants2D canon = constants2d(change_basis(alg, res.witness));
        if (!spec || !match_template(*spec, canon) || !(canon == res.canonical_constants)) {
            ok = false;
            os << "witness verification failed at grid index " << idx << "; ";
            break;
        }
        ++verified;
    }
    if (verified != kSweepValid) {
        ok = false;
        os << "verified " << verified << " != " << kSweepValid << "; ";
    }
    auto family_count = [&](const char* name) -> uint64_t {
        auto it = sweep.per_family.find(name);
        return it == sweep.per_family.end() ? 0 : it->second;
    };
    if (family_count("I") != kSweepFamilyI || family_count("II_IV") != kSweepFamilyII_IV ||
        family_count("V") != kSweepFamilyV || family_count("VI_VIII") != kSweepFamilyVI_VIII) {
        ok = false;
        os << "family counts drifted from the pinned oracle values; ";
    }
    os << "all " << verified
       << " valid grid algebras classified with exactly one theorem type and a verified witness";
    return {ok, os.str()};
}

Outcome criterion5_corollary2() {
    std::ostringstream os;
    for (const char* idx : {"T1", "T2", "T3", "T4"})
        for (uint64_t seed = 1; seed <= 100; ++seed)
            if (!all_passed(check_lta(random_algebra(seed, std::string(idx)))))
                return {false, std::string(idx) + " instance failed at seed " +
                                   std::to_string(seed)};
    const char* bols[] = {"B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10",
                          "B11", "B12", "B13", "B14", "B15", "B16", "B17", "B18", "B19"};
    for (const char* idx : bols)
        for (uint64_t seed = 1; seed <= 100; ++seed)
            if (!all_passed(check_bol(random_algebra(seed, std::string(idx)))))
                return {false, std::string(idx) + " instance failed at seed " +
                                   std::to_string(seed)};

    // Specialization equivalences across the whole sweep.
    uint64_t bol_points = 0, lta_points = 0;
    for (uint64_t idx = 0; idx < kSweepTotal; ++idx) {
        Constants2D k8 = grid_point(idx);
        Algebra alg = from_constants2d(k8);
        bool full = verdict_hta(alg);
        if (alg.dot.is_zero()) {
            ++bol_points;
            if (all_passed(check_bol(alg)) != full)
                return {false, "Bol/full verdict mismatch at grid index " + std::to_string(idx)};
        }
        if (alg.star.is_zero()) {
            ++lta_points;
            if (all_passed(check_lta(alg)) != full)
                return {false,
                        "Lie-triple/full verdict mismatch at grid index " + std::to_string(idx)};
        }
    }
    os << "100 instances of each of (T1)-(T4) and (B1)-(B19) pass; Bol equivalence on "
       << bol_points << " dot-free grid points, Lie-triple equivalence on " << lta_points
       << " star-free grid points";
    return {true, os.str()};
}

Outcome criterion6_isomorphisms() {
    std::ostringstream os;
    // the A8/A11 and A9/A12 swaps, exactly
    Algebra a8 = from_constants2d(Constants2D{1, 0, 1, 0, 0, 0, 1, 0});
    Algebra a11 = from_constants2d(Constants2D{0, -1, 0, -1, 0, -1, 0, 0});
    Algebra a9 = from_constants2d(Constants2D{1, 0, 0, 0, 0, 0, 1, 0});
    Algebra a12 = from_constants2d(Constants2D{0, -1, 0, 0, 0, -1, 0, 0});
    Mat swap{{0, 1}, {1, 0}};
    if (!(change_basis(a8, swap) == a11)) return {false, "A8 -> A11 swap witness failed"};
    if (!(change_basis(a9, swap) == a12)) return {false, "A9 -> A12 swap witness failed"};
    for (auto [x, y] : {std::pair{&a8, &a11}, std::pair{&a9, &a12}}) {
        IsoResult r = find_isomorphism(*x, *y);
        if (r.verdict != IsoVerdict::Isomorphic || !r.witness->verified)
            return {false, "find_isomorphism missed the A-pair isomorphism"};
    }

    // 100 transported pairs across all families
    const char* types[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};
    SplitMix rng{424242};
    for (int it = 0; it < 100; ++it) {
        Algebra alg = random_algebra(1000 + it, std::string(types[it % 8]));
        Mat P(2);
        do {
            for (size_t i = 0; i < 2; ++i)
                for (size_t j = 0; j < 2; ++j) P.at(i, j) = Rational(Int(rng.range(-3, 3)));
        } while (P.det().is_zero());
        Algebra moved = change_basis(alg, P);
        IsoResult r = find_isomorphism(alg, moved);
        if (r.verdict != IsoVerdict::Isomorphic || !r.witness->verified ||
            !(change_basis(alg, r.witness->P) == moved))
            return {false, "transported pair " + std::to_string(it) + " (type " +
                               types[it % 8] + ") not recovered"};
    }

    // every sampled None verdict is confirmed by the brute-force oracle
    std::vector<Algebra> valid;
    for (uint64_t idx = 0; idx < kSweepTotal && valid.size() < 60; ++idx) {
        Algebra alg = from_constants2d(grid_point(idx));
        if (verdict_reduced(alg)) valid.push_back(alg);
    }
    size_t none_checked = 0;
    GridSpec oracle_grid{-2, 2, 1};
    for (size_t i = 0; i < valid.size() && none_checked < 200; ++i)
        for (size_t j = i + 1; j < valid.size() && none_checked < 200; ++j) {
            IsoResult r = find_isomorphism(valid[i], valid[j]);
            if (r.verdict != IsoVerdict::NotIsomorphic) continue;
            ++none_checked;
            if (oracle_isomorphic(valid[i], valid[j], oracle_grid))
                return {false, "oracle found a witness where find_isomorphism said None (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")"};
        }
    os << "A8~A11 and A9~A12 verified by the swap; 100 transported pairs recovered; "
       << none_checked << " None verdicts confirmed by the grid oracle";
    return {true, os.str()};
}

Outcome criterion7_connection_audit() {
    const Fixture* conn = find_fixture("section2-connection");
    const Fixture* claimed = find_fixture("section2-claimed");
    if (!conn || !conn->connection || !claimed || !claimed->algebra)
        return {false, "missing section2 fixtures"};

    Algebra built = algebra_from_connection(*conn->connection);
    Constants2D k8 = constants2d(built);
    if (!(k8.dot_vec() == Vec{1, 1})) return {false, "dot vector is not (1,1)"};
    if (!(k8.star_vec() == Vec{1, 0})) return {false, "star vector is not (1,0)"};
    if (!(Vec{k8.e, k8.f} == Vec{-1, 1})) return {false, "<X1;X1,X2> is not (-1,1)"};
    if (!(Vec{k8.k, k8.l} == Vec{-3, -1}))
        return {false, "<X2;X1,X2> computed as " + Vec{k8.k, k8.l}.str() + ", expected (-3,-1)"};

    AuditReport report = audit_connection_example(*conn->connection, claimed->algebra);
    auto r19_nonzero = [](const AuditSection& s) {
        for (const auto& r : s.reduced)
            if (r.identity == IdentityId::R19) return !r.passed && !r.violations.empty();
        return false;
    };
    if (!r19_nonzero(report.computed)) return {false, "computed reading has no R19 residual"};
    const AuditSection* stated = nullptr;
    for (const auto& s : report.alternatives)
        if (s.label == "stated algebra") stated = &s;
    if (!stated) return {false, "stated reading missing from the audit"};
    if (!r19_nonzero(*stated)) return {false, "stated reading has no R19 residual"};
    if (report.computed.classification || stated->classification)
        return {false, "an invalid reading was classified as if it were valid"};
    return {true,
            "dot (1,1), star (1,0), <X1;X1,X2> (-1,1) reproduced; computed <X2;X1,X2> (-3,-1); "
            "R19 fails for both the computed and the stated ternary, reported side by side"};
}

Outcome criterion8_ref3() {
    const Fixture* f = find_fixture("ref3-example");
    if (!f || !f->algebra) return {false, "missing ref3-example fixture"};
    if (!all_passed(check_hta(*f->algebra))) return {false, "ref3-example fails the full system"};
    ClassificationResult r = classify(*f->algebra);
    if (r.theorem_type != "VI")
        return {false, "ref3-example classified as (" + r.theorem_type + "), expected (VI)"};
    return {true, "ref3-example passes the full system and classifies as type (VI)"};
}

Outcome criterion9_serialization(const std::string& sweep_json_once) {
    for (const auto& f : fixture_catalog()) {
        if (f.algebra) {
            std::string text = emit_algebra(*f.algebra);
            if (!(parse_algebra(text) == *f.algebra) || emit_algebra(parse_algebra(text)) != text)
                return {false, "round-trip failed for fixture " + f.name};
        } else {
            std::string text = emit_connection(*f.connection);
            if (!(parse_connection(text) == *f.connection) ||
                emit_connection(parse_connection(text)) != text)
                return {false, "round-trip failed for fixture " + f.name};
        }
    }
    SplitMix rng{977};
    for (int it = 0; it < 100; ++it) {
        Constants2D k8{rng.rational(), rng.rational(), rng.rational(), rng.rational(),
                       rng.rational(), rng.rational(), rng.rational(), rng.rational()};
        Algebra alg = from_constants2d(k8);
        std::string text = emit_algebra(alg);
        if (!(parse_algebra(text) == alg) || emit_algebra(parse_algebra(text)) != text)
            return {false, "round-trip failed for a random algebra"};
    }

    std::string two = render_enumeration(enumerate_grid(kSweepSpec, 2), true);
    std::string eight = render_enumeration(enumerate_grid(kSweepSpec, 8), true);
    if (sweep_json_once != two || sweep_json_once != eight)
        return {false, "enumeration reports differ across 1/2/8 workers"};
    return {true,
            "all fixtures and 100 random algebras round-trip exactly; enumeration reports are "
            "byte-identical across 1, 2 and 8 workers"};
}

}  // namespace

int main() {
    std::printf("acceptance: exhaustive sweep of the 8-constant grid {-1,0,1}^8...\n");
    auto t0 = std::chrono::steady_clock::now();
    EnumerationReport sweep = enumerate_grid(kSweepSpec, 1);
    double sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string sweep_json = render_enumeration(sweep, true);

    struct Entry {
        int number;
        const char* title;
        std::function<Outcome()> run;
    };
    const Entry entries[] = {
        {1, "Lemma equivalence (full system <=> reduced system)",
         [&] { return criterion1_lemma_equivalence(sweep, sweep_seconds); }},
        {2, "variety characterization", [&] { return criterion2_variety(sweep); }},
        {3, "theorem soundness for types (I)-(VIII)", criterion3_theorem_soundness},
        {4, "theorem coverage with verified witnesses", [&] { return criterion4_coverage(sweep); }},
        {5, "Corollary 2 soundness and specialization equivalences", criterion5_corollary2},
        {6, "isomorphism facts and oracle confirmation", criterion6_isomorphisms},
        {7, "section-2 connection example audit", criterion7_connection_audit},
        {8, "the ref3-example fixture", criterion8_ref3},
        {9, "serialization round-trips and worker determinism",
         [&] { return criterion9_serialization(sweep_json); }},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        if (!out.passed) ++failures;
        std::printf("%s  criterion %d: %s — %s\n", out.passed ? "PASS" : "FAIL", e.number,
                    e.title, out.detail.c_str());
    }
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures;
}
