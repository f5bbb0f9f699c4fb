#ifndef HTA_EXPLORE_HPP
#define HTA_EXPLORE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hta/algebra.hpp"

namespace hta {

/// Axis of an exhaustive sweep: every multiple of 1/denominator in
/// [min, max], i.e. the values m/denominator for integer m in
/// [min*denominator, max*denominator].  A 2-dimensional algebra sweep
/// runs over eight axes, so {-2..2, den 2} has 9^8 points.
struct GridSpec {
    long long min = -1;
    long long max = 1;
    long long denominator = 1;

    uint64_t points_per_axis() const {
        return static_cast<uint64_t>((max - min) * denominator + 1);
    }
    /// points_per_axis()^8; saturates at UINT64_MAX on overflow.
    uint64_t total_points() const;
};

struct MismatchEntry {
    uint64_t index = 0;  // flat grid index, for reproducibility
    Constants2D constants;
    std::string what;
};

/// Outcome of one exhaustive sweep.  The three mismatch lists must stay
/// empty; any entry is a counterexample to the Lemma equivalence, the
/// closed-form variety predicate, or the classification coverage.
struct EnumerationReport {
    GridSpec spec;
    uint64_t total = 0;
    uint64_t valid = 0;
    std::map<std::string, uint64_t> per_family;
    std::map<std::string, uint64_t> per_theorem_type;
    std::vector<MismatchEntry> lemma_mismatches;
    std::vector<MismatchEntry> predicate_mismatches;
    std::vector<MismatchEntry> unclassified;

    bool clean() const {
        return lemma_mismatches.empty() && predicate_mismatches.empty() && unclassified.empty();
    }
};

inline constexpr uint64_t kDefaultBudget = 10'000'000;
inline constexpr size_t kMismatchCap = 100;

/// Runs the full 12-identity checker, the reduced checker, the variety
/// predicate and (on valid points) the classifier over every grid
/// point.  Deterministic: the report is identical for any worker count.
/// Throws BudgetExceeded when the grid is larger than the budget.
EnumerationReport enumerate_grid(const GridSpec& spec, unsigned jobs = 1,
                                 uint64_t budget = kDefaultBudget);

/// Deterministic pseudorandom 2-dimensional algebra.  With a template
/// index ("I".."VIII", "T1".."T4", "B1".."B19", "A1".."A16") the
/// constants are drawn to satisfy that template's pattern and side
/// conditions exactly; throws UnsatisfiableConstraint if the template
/// admits no instance (the stated conditions of A4 contradict its
/// pattern).
Algebra random_algebra(uint64_t seed, const std::optional<std::string>& template_index = {});

/// Brute-force isomorphism oracle: tries the identity first, then every
/// invertible matrix with entries on the grid, in a fixed order, and
/// returns the first witness P with change_basis(A, P) == B.
std::optional<Mat> oracle_isomorphic(const Algebra& A, const Algebra& B, const GridSpec& pgrid);

}  // namespace hta

#endif
