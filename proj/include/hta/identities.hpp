#ifndef HTA_IDENTITIES_HPP
#define HTA_IDENTITIES_HPP

#include <span>
#include <string>
#include <vector>

#include "hta/algebra.hpp"

namespace hta {

/// Identity tags.
///   H2..H13   full defining system of a hyporeductive triple algebra;
///   BOL1..3   Bol specialization (dot = 0);
///   LTA1..4   Lie triple algebra specialization (star = 0);
///   LTS1..2   Lie triple system (both binaries 0): LTS1 is the cyclic
///             ternary sum, LTS2 the inner-derivation identity;
///   R14..R19  the reduced 2-dimensional system, stated on the fixed
///             basis pair (x1, x2) with at most two free indices.
enum class IdentityId {
    H2, H3, H4, H5, H6, H7, H8, H9, H10, H11, H12, H13,
    BOL1, BOL2, BOL3,
    LTA1, LTA2, LTA3, LTA4,
    LTS1, LTS2,
    R14, R15, R16, R17, R18, R19,
};

/// Number of free basis arguments (for R14..R19: free indices beyond
/// the fixed pair).
size_t identity_arity(IdentityId id);
std::string identity_name(IdentityId id);
/// Inverse of identity_name; throws UnknownIdentity.
IdentityId identity_from_name(const std::string& name);

/// One violating instantiation: the argument tuple and the literal
/// left-minus-right value of the identity there.
struct Residual {
    std::vector<size_t> args;
    Vec value;
};

struct CheckReport {
    IdentityId identity;
    bool passed = true;
    std::vector<Residual> violations;  // capped at max_violations
    size_t violation_count = 0;        // total, never capped
    size_t tuples_checked = 0;
};

struct CheckOptions {
    size_t max_violations = 16;
    /// Stop scanning tuples at the first violation; the verdict is
    /// unchanged, only violation_count/tuples_checked stop early.
    bool stop_at_first_violation = false;
};

/// Exact residual of one identity instantiated at basis elements.
/// Identities written as "sum = 0" yield the sum; (5), which has a
/// nonzero right side, yields left minus right.
Vec residual(const Algebra& alg, IdentityId id, std::span<const size_t> args);

/// Evaluates the identity over every basis-index tuple of its arity.
/// Multilinearity in each free slot makes basis tuples sufficient.
CheckReport check_identity(const Algebra& alg, IdentityId id, const CheckOptions& opts = {});

/// Full system (2)-(13).
std::vector<CheckReport> check_hta(const Algebra& alg, const CheckOptions& opts = {});

/// Bol system; requires dot = 0 (throws PreconditionDotNonzero).
std::vector<CheckReport> check_bol(const Algebra& alg, const CheckOptions& opts = {});

/// Lie triple algebra system; requires star = 0.
std::vector<CheckReport> check_lta(const Algebra& alg, const CheckOptions& opts = {});

/// Lie triple system; requires dot = star = 0.  Runs the two ternary
/// identities plus (9)-(13), which are expected to vanish.
std::vector<CheckReport> check_lts(const Algebra& alg, const CheckOptions& opts = {});

/// Reduced 2-dimensional system (14)-(19); requires dim = 2.
std::vector<CheckReport> check_reduced(const Algebra& alg, const CheckOptions& opts = {});

bool all_passed(const std::vector<CheckReport>& reports);

/// Verdict-only fast paths used by the exhaustive sweeps: same result
/// as all_passed(check_hta/check_reduced(alg)), stopping at the first
/// violating tuple, cheap identities first.
bool verdict_hta(const Algebra& alg);
bool verdict_reduced(const Algebra& alg);

/// J(x1,x2) = x1*<x2;x1,x2> - x2*<x1;x1,x2>; equals (e+l)(u*v) in
/// constants.  Requires dim = 2.
Vec compute_J(const Algebra& alg);

/// N = <u.v;u,v> + v.<u;u,v> - u.<v;u,v>; equals (bk-al, af-be) in
/// constants.  Requires dim = 2.
Vec compute_N(const Algebra& alg);

/// Closed-form characterization of the reduced system's solution set:
///   (e+l)c = (e+l)d = 0,  (e+l)e = (e+l)f = (e+l)k = (e+l)l = 0,
///   bk - al = 0,  af - be = 0.
/// Validated against check_reduced by exhaustive grid scan in the tests.
bool variety_predicate(const Constants2D& k8);

}  // namespace hta

#endif
