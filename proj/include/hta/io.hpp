#ifndef HTA_IO_HPP
#define HTA_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "hta/algebra.hpp"
#include "hta/classify.hpp"
#include "hta/connection.hpp"
#include "hta/explore.hpp"
#include "hta/identities.hpp"

namespace hta {

/// Parses an algebra document: {"dim": n, "constants2d": {...}} (dim 2
/// shorthand) or {"dim": n, "dot": ..., "star": ..., "triple": ...}
/// with every rational a quoted string.  Exactly one of the two forms
/// must be present.  Throws ParseError / SkewViolation /
/// DimensionMismatch.
Algebra parse_algebra(const std::string& text);

/// Canonical emission: constants2d shorthand for dim = 2, full tables
/// otherwise; lowest-terms rationals, fixed key order, byte-stable.
std::string emit_algebra(const Algebra& alg);

/// Connection documents: {"dim", "bracket", "a_tensor", "dT"} with the
/// same table layouts and rational strings.
ConnectionData parse_connection(const std::string& text);
std::string emit_connection(const ConnectionData& data);

/// Built-in named examples.  Every algebra fixture passes its intended
/// checker; the "section2-*" pair is audit material and intentionally
/// fails (that is what the audit is for).
struct Fixture {
    std::string name;
    std::string intended_check;  // "hta" | "lta" | "bol" | "audit"
    std::optional<Algebra> algebra;
    std::optional<ConnectionData> connection;
};

const std::vector<Fixture>& fixture_catalog();
const Fixture* find_fixture(const std::string& name);

// Report rendering; every JSON shape is schema-stable (same keys, same
// order, across runs).
std::string render_checks(const std::string& set_name, const std::vector<CheckReport>& reports,
                          bool as_json);
std::string render_classification(const ClassificationResult& result, bool as_json);
std::string render_iso(const IsoResult& result, const std::optional<Mat>& oracle_witness,
                       bool oracle_ran, bool as_json);
std::string render_enumeration(const EnumerationReport& report, bool as_json);
std::string render_audit(const AuditReport& report, bool as_json);

}  // namespace hta

#endif
