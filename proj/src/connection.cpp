#include "hta/connection.hpp"

#include "hta/errors.hpp"

namespace hta {

ConnectionData make_connection_data(size_t dim, BinaryTable bracket, BinaryTable a_tensor,
                                    TernaryTable dT) {
    if (dim == 0) throw DimensionMismatch("dimension must be positive");
    if (bracket.dim() != dim || a_tensor.dim() != dim || dT.dim() != dim)
        throw DimensionMismatch("connection table sized inconsistently with dim");
    bracket.validate("bracket");
    a_tensor.validate("a_tensor");
    dT.validate("dT");
    return ConnectionData{dim, std::move(bracket), std::move(a_tensor), std::move(dT)};
}

BinaryTable torsion_at_e(const ConnectionData& data) {
    BinaryTable t(data.dim);
    for (size_t i = 0; i < data.dim; ++i)
        for (size_t j = 0; j < data.dim; ++j)
            t.set_raw(i, j, -data.bracket.at(i, j));
    return t;
}

namespace {

enum class TorsionSign { Minus, Plus };
enum class DerivativeSign { Literal, Flipped };

TernaryTable ternary_from(const ConnectionData& data, TorsionSign ts, DerivativeSign ds) {
    const size_t n = data.dim;
    BinaryTable T(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            T.set_raw(i, j,
                      ts == TorsionSign::Minus ? -data.bracket.at(i, j) : data.bracket.at(i, j));

    TernaryTable r(n);
    for (size_t l = 0; l < n; ++l)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                // sum_s T^._{ls} (T^s_{ij} + a^s_{ij})
                Vec acc(n);
                for (size_t s = 0; s < n; ++s) {
                    Rational coeff = T.at(i, j)[s] + data.a_tensor.at(i, j)[s];
                    acc.add_scaled(coeff, T.at(l, s));
                }
                Vec d = data.dT.at(l, i, j);
                if (ds == DerivativeSign::Flipped) d = -d;
                r.set_raw(l, i, j, acc - d);
            }
    r.validate("ternary_from_connection");
    return r;
}

Algebra assemble(const ConnectionData& data, TorsionSign ts, DerivativeSign ds) {
    const size_t n = data.dim;
    BinaryTable star(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            star.set_raw(i, j, data.bracket.at(i, j) - data.a_tensor.at(i, j));
    return make_algebra(n, data.a_tensor, std::move(star), ternary_from(data, ts, ds));
}

AuditSection audit_section(const std::string& label, const Algebra& alg) {
    AuditSection s;
    s.label = label;
    s.constants = constants2d(alg);
    s.reduced = check_reduced(alg);
    s.full = check_hta(alg);
    s.valid = all_passed(s.reduced) && all_passed(s.full);
    s.J = compute_J(alg);
    s.N = compute_N(alg);
    if (s.valid) s.classification = classify(alg);
    return s;
}

}  // namespace

TernaryTable ternary_from_connection(const ConnectionData& data) {
    return ternary_from(data, TorsionSign::Minus, DerivativeSign::Literal);
}

Algebra algebra_from_connection(const ConnectionData& data) {
    return assemble(data, TorsionSign::Minus, DerivativeSign::Literal);
}

AuditReport audit_connection_example(const ConnectionData& data,
                                     const std::optional<Algebra>& stated) {
    if (data.dim != 2) throw WrongDimension("the audit handles 2-dimensional data");

    AuditReport report;
    report.computed = audit_section("literal reading: T = -[Y,Z], r = -(dT - T(T+a))",
                                    algebra_from_connection(data));
    report.alternatives.push_back(audit_section(
        "alternative: torsion read as T = +[Y,Z]",
        assemble(data, TorsionSign::Plus, DerivativeSign::Literal)));
    report.alternatives.push_back(audit_section(
        "alternative: derivative sign flipped, r = dT + T(T+a)",
        assemble(data, TorsionSign::Minus, DerivativeSign::Flipped)));
    if (stated) report.alternatives.push_back(audit_section("stated algebra", *stated));
    return report;
}

}  // namespace hta
