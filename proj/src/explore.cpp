#include "hta/explore.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "hta/classify.hpp"
#include "hta/errors.hpp"
#include "hta/identities.hpp"

namespace hta {

uint64_t GridSpec::total_points() const {
    if (max < min) return 0;
    uint64_t ppa = points_per_axis();
    uint64_t total = 1;
    for (int i = 0; i < 8; ++i) {
        if (total > UINT64_MAX / ppa) return UINT64_MAX;
        total *= ppa;
    }
    return total;
}

namespace {

Constants2D decode_point(const GridSpec& spec, uint64_t index) {
    const uint64_t ppa = spec.points_per_axis();
    Rational v[8];
    for (int slot = 7; slot >= 0; --slot) {
        long long digit = static_cast<long long>(index % ppa);
        index /= ppa;
        v[slot] = Rational(Int(spec.min * spec.denominator + digit), Int(spec.denominator));
    }
    return Constants2D{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

struct WorkerResult {
    uint64_t valid = 0;
    std::map<std::string, uint64_t> per_family;
    std::map<std::string, uint64_t> per_theorem_type;
    std::vector<MismatchEntry> lemma_mismatches;
    std::vector<MismatchEntry> predicate_mismatches;
    std::vector<MismatchEntry> unclassified;
};

void sweep_range(const GridSpec& spec, uint64_t begin, uint64_t end, WorkerResult& out) {
    for (uint64_t idx = begin; idx < end; ++idx) {
        Constants2D k8 = decode_point(spec, idx);
        Algebra alg = from_constants2d(k8);
        bool reduced_ok = verdict_reduced(alg);
        bool hta_ok = verdict_hta(alg);
        bool predicate = variety_predicate(k8);
        if (hta_ok != reduced_ok)
            out.lemma_mismatches.push_back({idx, k8, "full/reduced verdicts differ"});
        if (predicate != reduced_ok)
            out.predicate_mismatches.push_back({idx, k8, "predicate/reduced verdicts differ"});
        if (!reduced_ok) continue;
        ++out.valid;
        try {
            ClassificationResult res = classify(alg);
            ++out.per_family[family_name(res.family)];
            ++out.per_theorem_type[res.theorem_type];
        } catch (const Error& e) {
            out.unclassified.push_back({idx, k8, e.what()});
        }
    }
}

void append_capped(std::vector<MismatchEntry>& dst, const std::vector<MismatchEntry>& src) {
    for (const auto& e : src) {
        if (dst.size() >= kMismatchCap) return;
        dst.push_back(e);
    }
}

}  // namespace

EnumerationReport enumerate_grid(const GridSpec& spec, unsigned jobs, uint64_t budget) {
    if (spec.max < spec.min) throw Error("grid with max < min");
    if (spec.denominator <= 0) throw Error("grid denominator must be positive");
    uint64_t total = spec.total_points();
    if (total > budget)
        throw BudgetExceeded("grid has " + std::to_string(total) + " points, budget " +
                             std::to_string(budget));

    if (jobs == 0) jobs = 1;
    jobs = static_cast<unsigned>(std::min<uint64_t>(jobs, std::max<uint64_t>(total, 1)));

    std::vector<WorkerResult> results(jobs);
    if (jobs == 1) {
        sweep_range(spec, 0, total, results[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            uint64_t begin = total * w / jobs;
            uint64_t end = total * (w + 1) / jobs;
            pool.emplace_back(sweep_range, std::cref(spec), begin, end, std::ref(results[w]));
        }
        for (auto& th : pool) th.join();
    }

    EnumerationReport report;
    report.spec = spec;
    report.total = total;
    for (const WorkerResult& r : results) {
        report.valid += r.valid;
        for (const auto& [k, v] : r.per_family) report.per_family[k] += v;
        for (const auto& [k, v] : r.per_theorem_type) report.per_theorem_type[k] += v;
        // workers cover ascending index ranges, so plain concatenation
        // keeps the lists sorted by flat index
        append_capped(report.lemma_mismatches, r.lemma_mismatches);
        append_capped(report.predicate_mismatches, r.predicate_mismatches);
        append_capped(report.unclassified, r.unclassified);
    }
    return report;
}

namespace {

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
    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }
};

Rational& slot_ref(Constants2D& k8, int slot) {
    switch (slot) {
        case 0: return k8.a;
        case 1: return k8.b;
        case 2: return k8.c;
        case 3: return k8.d;
        case 4: return k8.e;
        case 5: return k8.f;
        case 6: return k8.k;
        default: return k8.l;
    }
}

}  // namespace

Algebra random_algebra(uint64_t seed, const std::optional<std::string>& template_index) {
    SplitMix rng{seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL};
    if (!template_index) {
        Constants2D k8;
        for (int s = 0; s < 8; ++s) slot_ref(k8, s) = rng.rational();
        return from_constants2d(k8);
    }

    const TemplateSpec* spec = find_template(*template_index);
    if (!spec) throw UnknownIdentity("unknown template index: " + *template_index);

    // Slots with a stated nonzero condition are drawn nonzero; the
    // equational conditions then pin the dependent slots, and a final
    // exact match check rejects any draw that still violates something
    // (k != -e in type (IV) forces a != b, handled by redrawing).
    std::vector<bool> must_nonzero(8, false);
    for (const Condition& c : spec->conditions)
        if (c.kind == Condition::Kind::NonZero) must_nonzero[c.s1] = true;
    bool want_afbe = false, want_bkae = false, want_bkal = false;
    for (const Condition& c : spec->conditions) {
        if (c.kind == Condition::Kind::AfBeZero) want_afbe = true;
        if (c.kind == Condition::Kind::BkAeZero) want_bkae = true;
        if (c.kind == Condition::Kind::BkAlZero) want_bkal = true;
    }

    for (int attempt = 0; attempt < 1000; ++attempt) {
        Constants2D k8;
        for (int s = 0; s < 8; ++s) {
            const SlotPattern& p = spec->slots[s];
            switch (p.kind) {
                case SlotPattern::Kind::Zero: slot_ref(k8, s) = 0; break;
                case SlotPattern::Kind::Exact: slot_ref(k8, s) = p.exact; break;
                case SlotPattern::Kind::Free:
                    slot_ref(k8, s) = must_nonzero[s] ? rng.nonzero_rational() : rng.rational();
                    break;
                case SlotPattern::Kind::MinusE: slot_ref(k8, s) = -k8.e; break;
            }
        }
        for (const Condition& c : spec->conditions)
            if (c.kind == Condition::Kind::PairNonZero && slot_ref(k8, c.s1).is_zero() &&
                slot_ref(k8, c.s2).is_zero())
                slot_ref(k8, c.s1) = rng.nonzero_rational();
        if (want_afbe && !k8.a.is_zero()) k8.f = k8.b * k8.e / k8.a;
        if (want_bkae && !k8.b.is_zero()) k8.k = -(k8.a * k8.e) / k8.b;
        if (want_bkal && !k8.a.is_zero()) k8.l = k8.b * k8.k / k8.a;
        for (int s = 0; s < 8; ++s)
            if (spec->slots[s].kind == SlotPattern::Kind::MinusE) slot_ref(k8, s) = -k8.e;
        if (match_template(*spec, k8)) return from_constants2d(k8);
    }
    throw UnsatisfiableConstraint("template " + *template_index +
                                  " admits no instance under its stated conditions");
}

std::optional<Mat> oracle_isomorphic(const Algebra& A, const Algebra& B, const GridSpec& pgrid) {
    if (A.dim != 2 || B.dim != 2) throw WrongDimension("oracle_isomorphic requires dim = 2");
    if (change_basis(A, Mat::identity(2)) == B) return Mat::identity(2);

    // entry values ordered by |m| then sign, so small witnesses win
    std::vector<Rational> values;
    const long long lo = pgrid.min * pgrid.denominator;
    const long long hi = pgrid.max * pgrid.denominator;
    for (long long m = 0; m <= std::max(std::llabs(lo), std::llabs(hi)); ++m) {
        if (m >= lo && m <= hi) values.emplace_back(Int(m), Int(pgrid.denominator));
        if (m > 0 && -m >= lo && -m <= hi) values.emplace_back(Int(-m), Int(pgrid.denominator));
    }

    const size_t n = values.size();
    for (size_t i0 = 0; i0 < n; ++i0)
        for (size_t i1 = 0; i1 < n; ++i1)
            for (size_t i2 = 0; i2 < n; ++i2)
                for (size_t i3 = 0; i3 < n; ++i3) {
                    Mat P{{values[i0], values[i1]}, {values[i2], values[i3]}};
                    if (P.det().is_zero()) continue;
                    if (change_basis(A, P) == B) return P;
                }
    return std::nullopt;
}

}  // namespace hta
