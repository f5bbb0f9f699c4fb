#ifndef HTA_CONNECTION_HPP
#define HTA_CONNECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "hta/algebra.hpp"
#include "hta/classify.hpp"
#include "hta/identities.hpp"

namespace hta {

/// Pointwise data of a parallelized neighborhood at the distinguished
/// point e: bracket components C^g_ij of [X_i, X_j], the prescribed
/// skew bilinear a-tensor, and the directional derivatives
/// dT[l][i][j] = (X_l T^._ij)(e) of the torsion components.  The flat
/// (-)-connection makes these derivatives covariant ones.
struct ConnectionData {
    size_t dim = 0;
    BinaryTable bracket;
    BinaryTable a_tensor;
    TernaryTable dT;

    friend bool operator==(const ConnectionData&, const ConnectionData&) = default;
};

/// Validates skew-symmetry of all three tables.
ConnectionData make_connection_data(size_t dim, BinaryTable bracket, BinaryTable a_tensor,
                                    TernaryTable dT);

/// Torsion of the flat connection: T(Y,Z) = -[Y,Z] at e.
BinaryTable torsion_at_e(const ConnectionData& data);

/// Ternary structure constants from the torsion relation:
///   r^m_(l,ij) = -( dT[l][i][j]^m - sum_s T^m_ls (T^s_ij + a^s_ij) ).
TernaryTable ternary_from_connection(const ConnectionData& data);

/// Assembles the full algebra: dot = a-tensor, star = bracket - a,
/// triple from the torsion relation.
Algebra algebra_from_connection(const ConnectionData& data);

/// One audited reading of the data: constants, verdicts, residual
/// quantities, and (when valid) the classification.
struct AuditSection {
    std::string label;
    Constants2D constants;
    bool valid = false;
    std::vector<CheckReport> reduced;
    std::vector<CheckReport> full;
    Vec J, N;
    std::optional<ClassificationResult> classification;
};

/// Audit of a 2-dimensional connection example.  The primary section is
/// the literal reading above; the alternatives recompute the ternary
/// under the sign conventions such constructions leave implicit
/// (T = +[Y,Z] and a flipped derivative sign), plus any externally
/// stated algebra passed in for side-by-side comparison.  The audit
/// never asserts one reading as ground truth.
struct AuditReport {
    AuditSection computed;
    std::vector<AuditSection> alternatives;
};

AuditReport audit_connection_example(const ConnectionData& data,
                                     const std::optional<Algebra>& stated = std::nullopt);

}  // namespace hta

#endif
