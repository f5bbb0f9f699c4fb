#ifndef HTA_CLASSIFY_HPP
#define HTA_CLASSIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hta/algebra.hpp"

namespace hta {

/// Coarse, basis-independent family of a valid 2-dimensional algebra,
/// determined by which binary operations vanish.
enum class FamilyTag { I, II_IV, V, VI_VIII };

std::string family_name(FamilyTag f);

enum class Catalog { THEOREM, A, T, B };

std::string catalog_name(Catalog c);

/// Pattern of one constant slot inside a template.
struct SlotPattern {
    enum class Kind { Zero, Exact, Free, MinusE };
    Kind kind = Kind::Zero;
    Rational exact;  // used by Exact
};

/// Side condition of a template, kept exactly as stated in its catalog.
struct Condition {
    enum class Kind { NonZero, PairNonZero, NotMinusSlot, AfBeZero, BkAeZero, BkAlZero };
    Kind kind;
    int s1 = -1;
    int s2 = -1;
    std::string text() const;
    bool holds(const Constants2D& k8) const;
};

/// One entry of a template catalog: slot patterns over (a..l) plus the
/// side conditions exactly as stated.
struct TemplateSpec {
    Catalog catalog;
    std::string index;  // "I".."VIII", "A1".."A16", "T1".."T4", "B1".."B19"
    std::array<SlotPattern, 8> slots;
    std::vector<Condition> conditions;
};

/// All four catalogs in order: THEOREM, A, T, B.
const std::vector<TemplateSpec>& template_catalog();

/// Lookup by index string; indices are unique across catalogs.
const TemplateSpec* find_template(const std::string& index);

/// A successful template match: which template, the values bound to its
/// free symbols, and the side conditions it satisfies.
struct TemplateId {
    Catalog catalog;
    std::string index;
    std::vector<std::pair<char, Rational>> bindings;
    std::vector<std::string> side_conditions;
};

/// Match of one template against the given-basis constants; nullopt
/// unless the pattern and every side condition hold exactly.
std::optional<TemplateId> match_template(const TemplateSpec& spec, const Constants2D& k8);

/// Every template in the four catalogs matching in the given basis.
std::vector<TemplateId> match_templates(const Constants2D& k8);

/// Basis-independent data of a valid algebra.  trace_T scales by det P
/// under basis change (so its zero-ness is invariant), det T scales by
/// det(P)^2 (so its sign is invariant); the booleans are invariant
/// outright.
struct InvariantRecord {
    bool star_zero = false;
    bool dot_zero = false;
    bool triple_zero = false;
    Rational trace_T;
    int sign_det_T = 0;
    std::optional<bool> imT_in_span_dot;    // defined when dot != 0
    std::optional<bool> star_parallel_dot;  // defined when both binaries != 0
};

struct ClassificationResult {
    FamilyTag family;
    std::string theorem_type;  // "I".."VIII"
    std::vector<TemplateId> matched_templates;
    InvariantRecord invariants;
    Mat witness;  // basis change to the canonical form
    Constants2D canonical_constants;
};

InvariantRecord invariants(const Algebra& alg2d);

FamilyTag family_of(const Algebra& alg2d);

/// Deterministic normalization: anchor precedence dot -> star -> triple.
/// A nonzero anchor vector is mapped to exactly (1,0); a triple-only
/// algebra is rescaled to square-reduced integer constants with e >= 0.
/// Returns the basis-change witness.
Mat normalization_witness(const Constants2D& k8);

/// Full classification of a valid 2-dimensional algebra.  The reported
/// theorem_type is the lowest-numbered Theorem template matching after
/// normalization; matched_templates lists every given-basis match.
ClassificationResult classify(const Algebra& alg2d);

struct IsoWitness {
    Mat P;
    bool verified = false;
};

enum class IsoVerdict {
    Isomorphic,     // verified witness attached
    NotIsomorphic,  // a basis-independent invariant differs
    Inconclusive,   // invariants agree but no rational witness was found
};

struct IsoResult {
    IsoVerdict verdict;
    std::optional<IsoWitness> witness;
    std::string detail;
};

/// Decides isomorphism of two valid 2-dimensional algebras over the
/// rationals.  NotIsomorphic is returned only on an invariant
/// obstruction; otherwise both sides are normalized and the residual
/// stabilizer equations are solved in closed form (triple-only pairs
/// reduce to rational equivalence of binary quadratic forms).
IsoResult find_isomorphism(const Algebra& A, const Algebra& B);

/// Corollary catalogs: lowest-matching T-template for a valid Lie
/// triple algebra (star = 0), preferring the given basis and
/// normalizing only when no template matches as given.
TemplateId classify_lta(const Algebra& alg2d);

/// Same for Bol algebras (dot = 0) over the B catalog.
TemplateId classify_bol(const Algebra& alg2d);

/// Solves alpha x^2 + beta y^2 = gamma over the rationals
/// (alpha, beta, gamma != 0).  Outcomes: a solution, a proof of
/// unsolvability, or an honest "unknown" when the bounded search is
/// exhausted (practically unreachable for the operand sizes here).
enum class ConicOutcome { Solved, NoSolution, Unknown };
struct ConicResult {
    ConicOutcome outcome;
    Rational x, y;
};
ConicResult solve_conic(const Rational& alpha, const Rational& beta, const Rational& gamma);

}  // namespace hta

#endif
