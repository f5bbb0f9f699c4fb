#include "hta/classify.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>

#include "hta/errors.hpp"
#include "hta/identities.hpp"

namespace hta {

namespace mp = boost::multiprecision;

namespace {

constexpr char kSlotLetter[8] = {'a', 'b', 'c', 'd', 'e', 'f', 'k', 'l'};

const Rational& slot_value(const Constants2D& k8, int slot) {
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

Rational det2(const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; }

}  // namespace

std::string family_name(FamilyTag f) {
    switch (f) {
        case FamilyTag::I: return "I";
        case FamilyTag::II_IV: return "II_IV";
        case FamilyTag::V: return "V";
        default: return "VI_VIII";
    }
}

std::string catalog_name(Catalog c) {
    switch (c) {
        case Catalog::THEOREM: return "THEOREM";
        case Catalog::A: return "A";
        case Catalog::T: return "T";
        default: return "B";
    }
}

std::string Condition::text() const {
    std::string s1l(1, kSlotLetter[s1 >= 0 ? s1 : 0]);
    std::string s2l(1, kSlotLetter[s2 >= 0 ? s2 : 0]);
    switch (kind) {
        case Kind::NonZero: return s1l + "!=0";
        case Kind::PairNonZero: return "(" + s1l + "," + s2l + ")!=(0,0)";
        case Kind::NotMinusSlot: return s1l + "!=-" + s2l;
        case Kind::AfBeZero: return "af-be=0";
        case Kind::BkAeZero: return "bk+ae=0";
        default: return "bk-al=0";
    }
}

bool Condition::holds(const Constants2D& k8) const {
    switch (kind) {
        case Kind::NonZero:
            return !slot_value(k8, s1).is_zero();
        case Kind::PairNonZero:
            return !slot_value(k8, s1).is_zero() || !slot_value(k8, s2).is_zero();
        case Kind::NotMinusSlot:
            return !(slot_value(k8, s1) == -slot_value(k8, s2));
        case Kind::AfBeZero:
            return (k8.a * k8.f - k8.b * k8.e).is_zero();
        case Kind::BkAeZero:
            return (k8.b * k8.k + k8.a * k8.e).is_zero();
        default:
            return (k8.b * k8.k - k8.a * k8.l).is_zero();
    }
}

namespace {

SlotPattern Z() { return SlotPattern{SlotPattern::Kind::Zero, 0}; }
SlotPattern X1() { return SlotPattern{SlotPattern::Kind::Exact, 1}; }
SlotPattern S() { return SlotPattern{SlotPattern::Kind::Free, 0}; }
SlotPattern ME() { return SlotPattern{SlotPattern::Kind::MinusE, 0}; }

Condition nz(int s) { return Condition{Condition::Kind::NonZero, s, -1}; }
Condition pnz(int s1, int s2) { return Condition{Condition::Kind::PairNonZero, s1, s2}; }
Condition neq_neg(int s1, int s2) { return Condition{Condition::Kind::NotMinusSlot, s1, s2}; }
Condition afbe() { return Condition{Condition::Kind::AfBeZero, -1, -1}; }
Condition bkae() { return Condition{Condition::Kind::BkAeZero, -1, -1}; }
Condition bkal() { return Condition{Condition::Kind::BkAlZero, -1, -1}; }

// slot order: a b c d e f k l
constexpr int A = 0, Bb = 1, C = 2, D = 3, E = 4, F = 5, K = 6, L = 7;

std::vector<TemplateSpec> build_catalog() {
    std::vector<TemplateSpec> t;

    auto add = [&](Catalog cat, const char* idx, std::array<SlotPattern, 8> slots,
                   std::vector<Condition> conds) {
        t.push_back(TemplateSpec{cat, idx, slots, std::move(conds)});
    };

    // Theorem list (I)-(VIII).
    add(Catalog::THEOREM, "I", {Z(), Z(), Z(), Z(), S(), S(), S(), ME()}, {});
    add(Catalog::THEOREM, "II", {S(), Z(), Z(), Z(), Z(), Z(), S(), Z()}, {nz(A)});
    add(Catalog::THEOREM, "III", {S(), S(), Z(), Z(), Z(), Z(), Z(), Z()}, {nz(A), nz(Bb)});
    add(Catalog::THEOREM, "IV", {S(), S(), Z(), Z(), S(), S(), S(), ME()},
        {nz(A), nz(Bb), nz(E), nz(F), neq_neg(K, E), afbe(), bkae()});
    add(Catalog::THEOREM, "V", {Z(), Z(), S(), S(), S(), S(), S(), ME()}, {pnz(C, D)});
    add(Catalog::THEOREM, "VI", {S(), Z(), S(), S(), Z(), Z(), S(), Z()}, {nz(A), pnz(C, D)});
    add(Catalog::THEOREM, "VII", {S(), S(), S(), S(), S(), S(), S(), ME()},
        {nz(A), nz(Bb), nz(E), nz(F), nz(K), pnz(C, D), afbe(), bkae()});
    add(Catalog::THEOREM, "VIII", {S(), S(), S(), S(), Z(), Z(), Z(), Z()},
        {nz(A), nz(Bb), pnz(C, D)});

    // Intermediate case list (A1)-(A16), side conditions kept verbatim
    // (A4 carries its stated k!=0 even though its pattern pins k = 0).
    add(Catalog::A, "A1", {S(), S(), Z(), Z(), S(), S(), S(), S()},
        {nz(A), nz(Bb), nz(E), nz(F), nz(K), nz(L), neq_neg(L, E), afbe(), bkal()});
    add(Catalog::A, "A2", {S(), S(), Z(), Z(), S(), S(), S(), ME()},
        {nz(A), nz(Bb), nz(E), nz(F), nz(K), afbe(), bkae()});
    add(Catalog::A, "A3", {S(), S(), S(), S(), S(), S(), S(), ME()},
        {nz(A), nz(Bb), pnz(C, D), nz(E), nz(F), nz(K), afbe(), bkae()});
    add(Catalog::A, "A4", {S(), S(), Z(), Z(), S(), S(), Z(), Z()},
        {nz(A), nz(Bb), nz(E), nz(F), nz(K), afbe()});
    add(Catalog::A, "A5", {S(), S(), Z(), Z(), Z(), Z(), S(), S()},
        {nz(A), nz(Bb), nz(K), nz(L), bkal()});
    add(Catalog::A, "A6", {S(), S(), Z(), Z(), Z(), Z(), Z(), Z()}, {nz(A), nz(Bb)});
    add(Catalog::A, "A7", {S(), S(), S(), S(), Z(), Z(), Z(), Z()}, {nz(A), nz(Bb), pnz(C, D)});
    add(Catalog::A, "A8", {S(), Z(), S(), S(), Z(), Z(), S(), Z()}, {nz(A), pnz(C, D)});
    add(Catalog::A, "A9", {S(), Z(), Z(), Z(), Z(), Z(), S(), Z()}, {nz(A)});
    add(Catalog::A, "A10", {S(), Z(), Z(), Z(), S(), Z(), S(), Z()}, {nz(A), nz(E)});
    add(Catalog::A, "A11", {Z(), S(), S(), S(), Z(), S(), Z(), Z()}, {nz(Bb), pnz(C, D)});
    add(Catalog::A, "A12", {Z(), S(), Z(), Z(), Z(), S(), Z(), Z()}, {nz(Bb)});
    add(Catalog::A, "A13", {Z(), S(), Z(), Z(), Z(), S(), Z(), S()}, {nz(Bb), nz(L)});
    add(Catalog::A, "A14", {Z(), Z(), S(), S(), S(), S(), S(), ME()}, {pnz(C, D)});
    add(Catalog::A, "A15", {Z(), Z(), Z(), Z(), S(), S(), S(), ME()}, {});
    add(Catalog::A, "A16", {Z(), Z(), Z(), Z(), S(), S(), S(), S()}, {neq_neg(L, E)});

    // Lie triple algebra list (T1)-(T4); star is identically zero.
    add(Catalog::T, "T1", {Z(), Z(), Z(), Z(), S(), S(), S(), ME()}, {});
    add(Catalog::T, "T2", {X1(), Z(), Z(), Z(), Z(), Z(), S(), Z()}, {});
    add(Catalog::T, "T3", {X1(), X1(), Z(), Z(), Z(), Z(), Z(), Z()}, {});
    add(Catalog::T, "T4", {S(), S(), Z(), Z(), S(), S(), S(), ME()},
        {nz(A), nz(Bb), nz(E), nz(F), nz(K), afbe(), bkae()});

    // Bol list (B1)-(B19); dot is identically zero.  The trailing
    // condition block of this catalog makes every named symbol
    // nonzero.
    add(Catalog::B, "B1", {Z(), Z(), Z(), Z(), S(), S(), S(), ME()}, {});
    add(Catalog::B, "B2", {Z(), Z(), S(), S(), S(), S(), S(), ME()},
        {nz(C), nz(D), nz(E), nz(F), nz(K)});
    add(Catalog::B, "B3", {Z(), Z(), S(), S(), S(), S(), Z(), ME()},
        {nz(C), nz(D), nz(E), nz(F)});
    add(Catalog::B, "B4", {Z(), Z(), S(), S(), S(), Z(), S(), ME()},
        {nz(C), nz(D), nz(E), nz(K)});
    add(Catalog::B, "B5", {Z(), Z(), S(), S(), S(), Z(), Z(), ME()}, {nz(C), nz(D), nz(E)});
    add(Catalog::B, "B6", {Z(), Z(), S(), S(), Z(), S(), S(), Z()},
        {nz(C), nz(D), nz(F), nz(K)});
    add(Catalog::B, "B7", {Z(), Z(), S(), S(), Z(), S(), Z(), Z()}, {nz(C), nz(D), nz(F)});
    add(Catalog::B, "B8", {Z(), Z(), S(), S(), Z(), Z(), Z(), Z()}, {nz(C), nz(D)});
    add(Catalog::B, "B9", {Z(), Z(), S(), Z(), S(), S(), S(), ME()},
        {nz(C), nz(E), nz(F), nz(K)});
    add(Catalog::B, "B10", {Z(), Z(), S(), Z(), S(), S(), Z(), ME()}, {nz(C), nz(E), nz(F)});
    add(Catalog::B, "B11", {Z(), Z(), S(), Z(), S(), Z(), S(), ME()}, {nz(C), nz(E), nz(K)});
    add(Catalog::B, "B12", {Z(), Z(), S(), Z(), S(), Z(), Z(), ME()}, {nz(C), nz(E)});
    add(Catalog::B, "B13", {Z(), Z(), S(), Z(), Z(), S(), S(), Z()}, {nz(C), nz(F), nz(K)});
    add(Catalog::B, "B14", {Z(), Z(), S(), Z(), Z(), S(), Z(), Z()}, {nz(C), nz(F)});
    add(Catalog::B, "B15", {Z(), Z(), S(), Z(), Z(), Z(), S(), Z()}, {nz(C), nz(K)});
    add(Catalog::B, "B16", {Z(), Z(), S(), Z(), Z(), Z(), Z(), Z()}, {nz(C)});
    add(Catalog::B, "B17", {Z(), Z(), Z(), S(), S(), S(), Z(), ME()}, {nz(D), nz(E), nz(F)});
    add(Catalog::B, "B18", {Z(), Z(), Z(), S(), S(), Z(), S(), ME()}, {nz(D), nz(E), nz(K)});
    add(Catalog::B, "B19", {Z(), Z(), Z(), S(), S(), Z(), Z(), ME()}, {nz(D), nz(E)});

    return t;
}

}  // namespace

const std::vector<TemplateSpec>& template_catalog() {
    static const std::vector<TemplateSpec> catalog = build_catalog();
    return catalog;
}

const TemplateSpec* find_template(const std::string& index) {
    for (const auto& spec : template_catalog())
        if (spec.index == index) return &spec;
    return nullptr;
}

std::optional<TemplateId> match_template(const TemplateSpec& spec, const Constants2D& k8) {
    for (int s = 0; s < 8; ++s) {
        const Rational& v = slot_value(k8, s);
        const SlotPattern& p = spec.slots[s];
        switch (p.kind) {
            case SlotPattern::Kind::Zero:
                if (!v.is_zero()) return std::nullopt;
                break;
            case SlotPattern::Kind::Exact:
                if (!(v == p.exact)) return std::nullopt;
                break;
            case SlotPattern::Kind::MinusE:
                if (!(v == -slot_value(k8, E))) return std::nullopt;
                break;
            case SlotPattern::Kind::Free:
                break;
        }
    }
    for (const Condition& c : spec.conditions)
        if (!c.holds(k8)) return std::nullopt;

    TemplateId id;
    id.catalog = spec.catalog;
    id.index = spec.index;
    for (int s = 0; s < 8; ++s)
        if (spec.slots[s].kind == SlotPattern::Kind::Free)
            id.bindings.emplace_back(kSlotLetter[s], slot_value(k8, s));
    for (const Condition& c : spec.conditions) id.side_conditions.push_back(c.text());
    return id;
}

std::vector<TemplateId> match_templates(const Constants2D& k8) {
    std::vector<TemplateId> out;
    for (const auto& spec : template_catalog())
        if (auto m = match_template(spec, k8)) out.push_back(std::move(*m));
    return out;
}

InvariantRecord invariants(const Algebra& alg) {
    if (alg.dim != 2) throw WrongDimension("invariants require dim = 2");
    if (!all_passed(check_reduced(alg))) throw NotValidHta();
    Constants2D k8 = constants2d(alg);

    InvariantRecord rec;
    rec.star_zero = alg.star.is_zero();
    rec.dot_zero = alg.dot.is_zero();
    rec.triple_zero = alg.triple.is_zero();
    rec.trace_T = k8.e + k8.l;
    Rational detT = k8.e * k8.l - k8.k * k8.f;
    rec.sign_det_T = detT.sign();
    if (!rec.dot_zero) {
        Vec w = k8.dot_vec();
        rec.imT_in_span_dot =
            det2(w, Vec{k8.e, k8.f}).is_zero() && det2(w, Vec{k8.k, k8.l}).is_zero();
        if (!rec.star_zero) rec.star_parallel_dot = det2(w, k8.star_vec()).is_zero();
    }
    return rec;
}

FamilyTag family_of(const Algebra& alg) {
    InvariantRecord rec = invariants(alg);
    if (rec.star_zero) return rec.dot_zero ? FamilyTag::I : FamilyTag::II_IV;
    return rec.dot_zero ? FamilyTag::V : FamilyTag::VI_VIII;
}

namespace {

// Basis change sending the product vector w != 0 to exactly (1,0):
// adj(P) w = (1,0) with det(P) = 1.
Mat anchor_to_e1(const Vec& w) {
    if (!w[0].is_zero())
        return Mat{{w[0], 0}, {w[1], Rational(1) / w[0]}};
    return Mat{{0, -(Rational(1) / w[1])}, {w[1], 0}};
}

// Deterministic rescaling of a triple-only algebra: P = alpha I scales
// T by alpha^2, so only positive square factors can move.  We clear
// denominators of (e,f,k), strip the largest square factor of their
// gcd, and flip e's sign with diag(1,-1) when possible.  The signs of
// f and k (and the square class of the content) are genuine rational
// invariants and stay put.
Mat triple_tiebreak(const Constants2D& k8) {
    Int Lden = mp::lcm(mp::lcm(k8.e.den(), k8.f.den()), k8.k.den());
    auto scaled = [&](const Rational& r) -> Int { return (r.num() * Lden / r.den()) * Lden; };
    Int ge = mp::abs(scaled(k8.e));
    Int gf = mp::abs(scaled(k8.f));
    Int gk = mp::abs(scaled(k8.k));
    Int g = mp::gcd(mp::gcd(ge, gf), gk);
    Int square_root_part = 1;
    if (g > 1) {
        if (auto sf = squarefree_part(g)) {
            Int t2 = g / *sf;
            square_root_part = isqrt(t2);
        }
    }
    Rational alpha(Lden, square_root_part);
    Mat P{{alpha, 0}, {0, alpha}};
    if (k8.e.sign() < 0) P = P * Mat{{1, 0}, {0, -1}};
    return P;
}

}  // namespace

Mat normalization_witness(const Constants2D& k8) {
    if (!k8.dot_vec().is_zero()) return anchor_to_e1(k8.dot_vec());
    if (!k8.star_vec().is_zero()) return anchor_to_e1(k8.star_vec());
    if (!(k8.e.is_zero() && k8.f.is_zero() && k8.k.is_zero() && k8.l.is_zero()))
        return triple_tiebreak(k8);
    return Mat::identity(2);
}

ClassificationResult classify(const Algebra& alg) {
    InvariantRecord inv = invariants(alg);
    Constants2D k8 = constants2d(alg);

    ClassificationResult res;
    res.invariants = inv;
    if (inv.star_zero)
        res.family = inv.dot_zero ? FamilyTag::I : FamilyTag::II_IV;
    else
        res.family = inv.dot_zero ? FamilyTag::V : FamilyTag::VI_VIII;

    res.witness = normalization_witness(k8);
    Algebra canonical = change_basis(alg, res.witness);
    res.canonical_constants = constants2d(canonical);
    res.matched_templates = match_templates(k8);

    for (const auto& spec : template_catalog()) {
        if (spec.catalog != Catalog::THEOREM) continue;
        if (match_template(spec, res.canonical_constants)) {
            res.theorem_type = spec.index;
            return res;
        }
    }
    throw Unclassifiable("no Theorem template matches normalized constants of a valid algebra");
}

// ---------------------------------------------------------------------------
// Rational conic solver: alpha x^2 + beta y^2 = gamma.
// ---------------------------------------------------------------------------

namespace {

struct TernaryForm {
    // a X^2 + b Y^2 + c Z^2 = 0 with rational back-multipliers for each
    // variable (original = reduced / div).
    Int a, b, c;
    Int divx = 1, divy = 1, divz = 1;
};

// Divide out square factors of one coefficient into its variable.
bool squarefree_coeff(Int& coef, Int& div) {
    auto sf = squarefree_part(coef);
    if (!sf) return false;
    Int t2 = coef / *sf;
    Int t = isqrt(mp::abs(t2));
    coef = *sf;
    div *= t;
    return true;
}

bool reduce_form(TernaryForm& f) {
    for (int round = 0; round < 64; ++round) {
        Int g = mp::gcd(mp::gcd(mp::abs(f.a), mp::abs(f.b)), mp::abs(f.c));
        if (g > 1) {
            f.a /= g;
            f.b /= g;
            f.c /= g;
        }
        if (!squarefree_coeff(f.a, f.divx) || !squarefree_coeff(f.b, f.divy) ||
            !squarefree_coeff(f.c, f.divz))
            return false;
        // (a/g)(gX)^2 + (b/g)(gY)^2 + (cg)Z^2 = 0 for g = gcd(a,b), etc.
        Int gab = mp::gcd(mp::abs(f.a), mp::abs(f.b));
        if (gab > 1) {
            f.a /= gab;
            f.b /= gab;
            f.c *= gab;
            f.divx *= gab;
            f.divy *= gab;
            continue;
        }
        Int gac = mp::gcd(mp::abs(f.a), mp::abs(f.c));
        if (gac > 1) {
            f.a /= gac;
            f.c /= gac;
            f.b *= gac;
            f.divx *= gac;
            f.divz *= gac;
            continue;
        }
        Int gbc = mp::gcd(mp::abs(f.b), mp::abs(f.c));
        if (gbc > 1) {
            f.b /= gbc;
            f.c /= gbc;
            f.a *= gbc;
            f.divy *= gbc;
            f.divz *= gbc;
            continue;
        }
        return true;
    }
    return false;
}

struct TernarySolution {
    Int x, y, z;
};

// Holzer-bounded exhaustive search on a reduced (squarefree, pairwise
// coprime, mixed-sign) form.  A solvable form has a solution with
// |X| <= sqrt|bc|, |Y| <= sqrt|ac|, |Z| <= sqrt|ab|, so an empty search
// proves unsolvability.
std::optional<TernarySolution> holzer_search(const TernaryForm& f, bool& exhausted) {
    exhausted = false;
    Int bx = isqrt(mp::abs(f.b * f.c));
    Int by = isqrt(mp::abs(f.a * f.c));
    Int bz = isqrt(mp::abs(f.a * f.b));

    // iterate the two variables with the smallest bounds
    struct Axis {
        int which;
        Int bound;
    };
    Axis axes[3] = {{0, bx}, {1, by}, {2, bz}};
    std::sort(axes, axes + 3, [](const Axis& p, const Axis& q) { return p.bound < q.bound; });

    const long long cap = 30'000'000;
    long long steps = 0;
    for (Int i = 0; i <= axes[0].bound; ++i) {
        for (Int j = 0; j <= axes[1].bound; ++j) {
            if (++steps > cap) {
                exhausted = true;
                return std::nullopt;
            }
            if (i == 0 && j == 0) continue;
            Int vals[3] = {0, 0, 0};
            vals[axes[0].which] = i;
            vals[axes[1].which] = j;
            int missing = axes[2].which;
            Int coef[3] = {f.a, f.b, f.c};
            Int rhs = 0;
            for (int t = 0; t < 3; ++t)
                if (t != missing) rhs += coef[t] * vals[t] * vals[t];
            rhs = -rhs;
            // need coef[missing] * w^2 = rhs
            if (rhs == 0) {
                vals[missing] = 0;
                return TernarySolution{vals[0], vals[1], vals[2]};
            }
            if ((rhs < 0) != (coef[missing] < 0)) continue;
            if (rhs % coef[missing] != 0) continue;
            Int w2 = rhs / coef[missing];
            Int w = isqrt(w2);
            if (w * w == w2) {
                vals[missing] = w;
                return TernarySolution{vals[0], vals[1], vals[2]};
            }
        }
    }
    return std::nullopt;
}

// Given a projective point with Z = 0, sweep lines through it to reach
// a point with Z != 0; works whenever the conic has any affine point.
std::optional<TernarySolution> move_off_infinity(const TernaryForm& f, const TernarySolution& p) {
    if (p.z != 0) return p;
    const Int dirs[7][3] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
                            {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    for (const auto& q : dirs) {
        Int Qq = f.a * q[0] * q[0] + f.b * q[1] * q[1] + f.c * q[2] * q[2];
        if (Qq == 0) continue;
        Int Bpq = f.a * p.x * q[0] + f.b * p.y * q[1] + f.c * p.z * q[2];
        // second intersection of the line p + t q, scaled projectively
        Int vx = Qq * p.x - 2 * Bpq * q[0];
        Int vy = Qq * p.y - 2 * Bpq * q[1];
        Int vz = Qq * p.z - 2 * Bpq * q[2];
        if (vz == 0) continue;
        if (f.a * vx * vx + f.b * vy * vy + f.c * vz * vz != 0) continue;
        return TernarySolution{vx, vy, vz};
    }
    return std::nullopt;
}

}  // namespace

ConicResult solve_conic(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    if (alpha.is_zero() || beta.is_zero() || gamma.is_zero())
        throw Error("solve_conic requires nonzero coefficients");
    // axis shortcuts
    if (auto x = exact_sqrt(gamma / alpha)) return {ConicOutcome::Solved, *x, 0};
    if (auto y = exact_sqrt(gamma / beta)) return {ConicOutcome::Solved, 0, *y};

    // homogenize over the integers: A X^2 + B Y^2 + C Z^2 = 0
    Int Lden = mp::lcm(mp::lcm(alpha.den(), beta.den()), gamma.den());
    auto lift = [&](const Rational& r) -> Int { return r.num() * (Lden / r.den()); };
    TernaryForm f{lift(alpha), lift(beta), Int(-lift(gamma))};

    if (!reduce_form(f)) return {ConicOutcome::Unknown, 0, 0};
    int sa = f.a < 0 ? -1 : 1, sb = f.b < 0 ? -1 : 1, sc = f.c < 0 ? -1 : 1;
    if (sa == sb && sb == sc) return {ConicOutcome::NoSolution, 0, 0};

    bool exhausted = false;
    auto sol = holzer_search(f, exhausted);
    if (!sol) return {exhausted ? ConicOutcome::Unknown : ConicOutcome::NoSolution, 0, 0};
    auto affine = move_off_infinity(f, *sol);
    if (!affine) return {ConicOutcome::Unknown, 0, 0};

    Rational x = Rational(affine->x, f.divx) / Rational(affine->z, f.divz);
    Rational y = Rational(affine->y, f.divy) / Rational(affine->z, f.divz);
    return {ConicOutcome::Solved, x, y};
}

// ---------------------------------------------------------------------------
// Isomorphism search.
//
// Both sides are first normalized per classify; any isomorphism between
// the normalized algebras must preserve the anchored data, which pins
// the residual transform to a small stabilizer solved case by case:
//
//   dot anchored at (1,0) (families II_IV, VI_VIII): the stabilizer is
//   P = [[p,q],[0,1]], p != 0.  Validity forces the normalized ternary
//   matrix to [[0,k],[0,0]], which the stabilizer fixes entrywise, so k
//   is a complete invariant; for VI_VIII the star vector (c,d) moves by
//   c' = c - q d, d' = p d, so d = 0 pins c while d != 0 absorbs both.
//
//   star anchored at (1,0) (family V): same stabilizer acting on the
//   traceless ternary matrix by e' = p(e - qf), f' = p^2 f,
//   k' = k + 2eq - fq^2; each zero pattern of (e,f) resolves in closed
//   form, with f'/f a forced square.
//
//   no anchor (family I): the full twisted conjugacy problem
//   det(P) P^-1 T P = T' is, via M = -eps T below, exactly rational
//   congruence of binary quadratic forms, decided by determinant square
//   classes plus one conic representation (Holzer-bounded search).
// ---------------------------------------------------------------------------

namespace {

// Symmetric Gram matrix of the quadratic form attached to a traceless
// ternary matrix T = [[e,k],[f,-e]]:  M = [[f,-e],[-e,-k]].  The basis
// change T' = adj(P) T P corresponds exactly to M' = P^T M P, so
// triple-only isomorphism is rational equivalence of binary forms.
Mat gram_of(const Constants2D& k8) {
    return Mat{{k8.f, -k8.e}, {-k8.e, -k8.k}};
}

Rational form_eval(const Mat& M, const Vec& v) {
    return M.at(0, 0) * v[0] * v[0] + Rational(2) * M.at(0, 1) * v[0] * v[1] +
           M.at(1, 1) * v[1] * v[1];
}

// Solve Q_M(y) = c for rational y; M symmetric nondegenerate.
std::optional<Vec> represent_value(const Mat& M, const Rational& c) {
    Rational p = M.at(0, 0), q = M.at(0, 1), r = M.at(1, 1);
    Rational det = p * r - q * q;
    if (!p.is_zero()) {
        ConicResult cr = solve_conic(p, det / p, c);
        if (cr.outcome != ConicOutcome::Solved) return std::nullopt;
        // x' = x + (q/p) y,  y' = y
        return Vec{cr.x - (q / p) * cr.y, cr.y};
    }
    if (!r.is_zero()) {
        ConicResult cr = solve_conic(r, det / r, c);
        if (cr.outcome != ConicOutcome::Solved) return std::nullopt;
        return Vec{cr.y, cr.x - (q / r) * cr.y};
    }
    // hyperbolic 2qxy = c
    if (q.is_zero()) return std::nullopt;
    return Vec{1, c / (Rational(2) * q)};
}

Vec rot90(const Vec& v) { return Vec{-v[1], v[0]}; }

// Congruence P^T M_A P = M_B for nondegenerate symmetric 2x2 forms.
std::optional<Mat> congruence_witness(const Mat& MA, const Mat& MB) {
    Rational detA = MA.at(0, 0) * MA.at(1, 1) - MA.at(0, 1) * MA.at(1, 0);
    Rational detB = MB.at(0, 0) * MB.at(1, 1) - MB.at(0, 1) * MB.at(1, 0);
    if (!exact_sqrt(detB / detA)) return std::nullopt;

    Vec x0{1, 0};
    Rational c = form_eval(MA, x0);
    if (c.is_zero()) {
        x0 = Vec{0, 1};
        c = form_eval(MA, x0);
    }
    if (c.is_zero()) {
        x0 = Vec{1, 1};
        c = form_eval(MA, x0);
    }
    if (c.is_zero()) return std::nullopt;  // cannot happen for nondegenerate M

    auto y0 = represent_value(MB, c);
    if (!y0) return std::nullopt;

    Vec x1 = rot90(MA.apply(x0));
    Vec y1 = rot90(MB.apply(*y0));
    Rational q1 = form_eval(MA, x1);
    Rational q1b = form_eval(MB, y1);
    auto tau = exact_sqrt(q1b / q1);
    if (!tau) return std::nullopt;  // excluded by the det square class check

    Mat Xm{{x0[0], x1[0]}, {x0[1], x1[1]}};
    Mat Ym{{(*y0)[0], y1[0]}, {(*y0)[1], y1[1]}};
    Mat Em{{1, 0}, {0, *tau}};
    Mat P = Xm * Em * Ym.inverse();
    Mat check = P.transpose() * MA * P;
    if (!(check == MB)) throw Error("internal: congruence witness failed verification");
    return P;
}

// Rank-one case (det T = 0, T != 0): M = c w w^T; equivalence holds iff
// c_B / c_A is a rational square.
std::optional<Mat> rank_one_witness(const Mat& MA, const Mat& MB) {
    auto split = [](const Mat& M) -> std::pair<Rational, Vec> {
        if (!M.at(0, 0).is_zero()) {
            Vec w{M.at(0, 0), M.at(0, 1)};
            return {Rational(1) / M.at(0, 0), w};
        }
        // det 0 and top-left 0 force the off-diagonal to vanish
        return {M.at(1, 1), Vec{0, 1}};
    };
    auto [ca, wa] = split(MA);
    auto [cb, wb] = split(MB);
    auto t = exact_sqrt(cb / ca);
    if (!t) return std::nullopt;

    Vec ua = wa[0].is_zero() ? Vec{1, 0} : Vec{0, 1};
    Vec ub = wb[0].is_zero() ? Vec{1, 0} : Vec{0, 1};
    // P^T maps w_A to t*w_B and some complement to a complement.
    Mat from{{wa[0], ua[0]}, {wa[1], ua[1]}};
    Vec twb = *t * wb;
    Mat to{{twb[0], ub[0]}, {twb[1], ub[1]}};
    Mat Pt = to * from.inverse();
    Mat P = Pt.transpose();
    Mat check = P.transpose() * MA * P;
    if (!(check == MB)) throw Error("internal: rank-one witness failed verification");
    return P;
}

std::optional<Mat> stabilizer_family_I(const Constants2D& ca, const Constants2D& cb) {
    bool za = ca.t_matrix() == Mat(2);
    bool zb = cb.t_matrix() == Mat(2);
    if (za && zb) return Mat::identity(2);
    if (za != zb) return std::nullopt;
    Mat MA = gram_of(ca), MB = gram_of(cb);
    Rational detA = MA.det();
    if (detA.is_zero()) return rank_one_witness(MA, MB);
    return congruence_witness(MA, MB);
}

std::optional<Mat> stabilizer_family_II_IV(const Constants2D& ca, const Constants2D& cb) {
    // canonical form (1,0 | 0,0 | 0,0,k,0): k is a complete invariant
    if (ca.k == cb.k) return Mat::identity(2);
    return std::nullopt;
}

std::optional<Mat> stabilizer_family_VI_VIII(const Constants2D& ca, const Constants2D& cb) {
    if (!(ca.k == cb.k)) return std::nullopt;
    if (ca.d.is_zero() && cb.d.is_zero())
        return ca.c == cb.c ? std::optional<Mat>(Mat::identity(2)) : std::nullopt;
    if (ca.d.is_zero() || cb.d.is_zero()) return std::nullopt;  // parallel flag said otherwise
    Rational p = cb.d / ca.d;
    Rational q = (ca.c - cb.c) / ca.d;
    return Mat{{p, q}, {0, 1}};
}

std::optional<Mat> stabilizer_family_V(const Constants2D& ca, const Constants2D& cb) {
    // canonical star (1,0); stabilizer P = [[p,q],[0,1]] acts by
    //   e' = p(e - qf),  f' = p^2 f,  k' = k + 2eq - fq^2.
    const Rational &e = ca.e, &f = ca.f, &k = ca.k;
    const Rational &Eb = cb.e, &Fb = cb.f, &Kb = cb.k;
    if (!f.is_zero()) {
        auto p0 = exact_sqrt(Fb / f);
        if (!p0 || p0->is_zero()) return std::nullopt;
        for (Rational p : {*p0, -*p0}) {
            Rational q = (e - Eb / p) / f;
            if (k + Rational(2) * e * q - f * q * q == Kb) return Mat{{p, q}, {0, 1}};
        }
        return std::nullopt;
    }
    if (!Fb.is_zero()) return std::nullopt;
    if (!e.is_zero()) {
        if (Eb.is_zero()) return std::nullopt;
        Rational p = Eb / e;
        Rational q = (Kb - k) / (Rational(2) * e);
        return Mat{{p, q}, {0, 1}};
    }
    if (!Eb.is_zero()) return std::nullopt;
    if (k == Kb) return Mat::identity(2);
    return std::nullopt;
}

}  // namespace

IsoResult find_isomorphism(const Algebra& A, const Algebra& B) {
    InvariantRecord ia = invariants(A);
    InvariantRecord ib = invariants(B);

    auto fam = [](const InvariantRecord& r) {
        if (r.star_zero) return r.dot_zero ? FamilyTag::I : FamilyTag::II_IV;
        return r.dot_zero ? FamilyTag::V : FamilyTag::VI_VIII;
    };
    FamilyTag fa = fam(ia), fb = fam(ib);
    if (fa != fb)
        return {IsoVerdict::NotIsomorphic, std::nullopt,
                "family differs: " + family_name(fa) + " vs " + family_name(fb)};
    if (ia.triple_zero != ib.triple_zero)
        return {IsoVerdict::NotIsomorphic, std::nullopt, "one ternary table is zero"};
    if (ia.trace_T.is_zero() != ib.trace_T.is_zero())
        return {IsoVerdict::NotIsomorphic, std::nullopt, "trace zero-ness differs"};
    if (ia.sign_det_T != ib.sign_det_T)
        return {IsoVerdict::NotIsomorphic, std::nullopt, "sign of det T differs"};
    if (ia.imT_in_span_dot != ib.imT_in_span_dot)
        return {IsoVerdict::NotIsomorphic, std::nullopt, "image-of-T flag differs"};
    if (ia.star_parallel_dot != ib.star_parallel_dot)
        return {IsoVerdict::NotIsomorphic, std::nullopt, "star/dot parallelism differs"};

    Constants2D ka = constants2d(A), kb = constants2d(B);
    Mat PA = normalization_witness(ka);
    Mat PB = normalization_witness(kb);
    Constants2D ca = constants2d(change_basis(A, PA));
    Constants2D cb = constants2d(change_basis(B, PB));

    std::optional<Mat> S;
    switch (fa) {
        case FamilyTag::I: S = stabilizer_family_I(ca, cb); break;
        case FamilyTag::II_IV: S = stabilizer_family_II_IV(ca, cb); break;
        case FamilyTag::V: S = stabilizer_family_V(ca, cb); break;
        case FamilyTag::VI_VIII: S = stabilizer_family_VI_VIII(ca, cb); break;
    }
    if (!S)
        return {IsoVerdict::Inconclusive, std::nullopt,
                "invariants agree but the stabilizer equations have no rational solution"};

    Mat W = PA * (*S) * PB.inverse();
    if (!(change_basis(A, W) == B)) throw Error("internal: isomorphism witness failed to verify");
    return {IsoVerdict::Isomorphic, IsoWitness{W, true}, "verified basis change"};
}

namespace {

TemplateId classify_in_catalog(const Algebra& alg, Catalog cat, const char* what) {
    Constants2D k8 = constants2d(alg);
    for (const auto& spec : template_catalog()) {
        if (spec.catalog != cat) continue;
        if (auto m = match_template(spec, k8)) return *m;
    }
    Mat P = normalization_witness(k8);
    Constants2D canon = constants2d(change_basis(alg, P));
    for (const auto& spec : template_catalog()) {
        if (spec.catalog != cat) continue;
        if (auto m = match_template(spec, canon)) return *m;
    }
    throw Unclassifiable(std::string(what) + ": no template matches, even after normalization");
}

}  // namespace

TemplateId classify_lta(const Algebra& alg) {
    if (!alg.star.is_zero()) throw PreconditionStarNonzero();
    if (alg.dim != 2) throw WrongDimension("classify_lta requires dim = 2");
    if (!all_passed(check_lta(alg))) throw NotValidLta();
    return classify_in_catalog(alg, Catalog::T, "classify_lta");
}

TemplateId classify_bol(const Algebra& alg) {
    if (!alg.dot.is_zero()) throw PreconditionDotNonzero();
    if (alg.dim != 2) throw WrongDimension("classify_bol requires dim = 2");
    if (!all_passed(check_bol(alg))) throw NotValidBol();
    return classify_in_catalog(alg, Catalog::B, "classify_bol");
}

}  // namespace hta
