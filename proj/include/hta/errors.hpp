#ifndef HTA_ERRORS_HPP
#define HTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hta {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A structure-constant table breaks the required skew-symmetry.
struct SkewViolation : Error {
    SkewViolation(const std::string& table, const std::string& indices)
        : Error("skew-symmetry violated in table '" + table + "' at " + indices),
          table_name(table), where(indices) {}
    std::string table_name;
    std::string where;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& what) : Error(what) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error("arity mismatch: " + what) {}
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& what) : Error("unknown identity: " + what) {}
};

/// Preconditions of the specialized checkers (Bol / Lie triple / L.t.s.).
struct PreconditionDotNonzero : Error {
    PreconditionDotNonzero() : Error("dot table must be zero for this check") {}
};
struct PreconditionStarNonzero : Error {
    PreconditionStarNonzero() : Error("star table must be zero for this check") {}
};
struct PreconditionBinaryNonzero : Error {
    PreconditionBinaryNonzero() : Error("both binary tables must be zero for this check") {}
};

struct NotValidHta : Error {
    NotValidHta() : Error("algebra does not satisfy the defining identities") {}
};
struct NotValidLta : Error {
    NotValidLta() : Error("algebra is not a valid Lie triple algebra") {}
};
struct NotValidBol : Error {
    NotValidBol() : Error("algebra is not a valid Bol algebra") {}
};

/// Classification fell through every case.  The classification theorem
/// guarantees coverage, so this is either a bug or a counterexample;
/// it must never be swallowed.
struct Unclassifiable : Error {
    explicit Unclassifiable(const std::string& what) : Error("UNCLASSIFIABLE: " + what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

struct UnsatisfiableConstraint : Error {
    explicit UnsatisfiableConstraint(const std::string& what)
        : Error("unsatisfiable constraint: " + what) {}
};

struct ParseError : Error {
    ParseError(const std::string& position, const std::string& reason)
        : Error("parse error at " + position + ": " + reason),
          where(position), why(reason) {}
    std::string where;
    std::string why;
};

}  // namespace hta

#endif
