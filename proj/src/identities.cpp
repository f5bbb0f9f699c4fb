#include "hta/identities.hpp"

#include <array>

#include "hta/errors.hpp"

namespace hta {

namespace {

struct IdentityInfo {
    IdentityId id;
    const char* name;
    size_t arity;
};

constexpr std::array<IdentityInfo, 27> kIdentities{{
    {IdentityId::H2, "H2", 3},    {IdentityId::H3, "H3", 3},
    {IdentityId::H4, "H4", 4},    {IdentityId::H5, "H5", 4},
    {IdentityId::H6, "H6", 5},    {IdentityId::H7, "H7", 5},
    {IdentityId::H8, "H8", 6},    {IdentityId::H9, "H9", 4},
    {IdentityId::H10, "H10", 4},  {IdentityId::H11, "H11", 6},
    {IdentityId::H12, "H12", 6},  {IdentityId::H13, "H13", 7},
    {IdentityId::BOL1, "BOL1", 3},{IdentityId::BOL2, "BOL2", 4},
    {IdentityId::BOL3, "BOL3", 5},
    {IdentityId::LTA1, "LTA1", 3},{IdentityId::LTA2, "LTA2", 4},
    {IdentityId::LTA3, "LTA3", 4},{IdentityId::LTA4, "LTA4", 5},
    {IdentityId::LTS1, "LTS1", 3},{IdentityId::LTS2, "LTS2", 5},
    {IdentityId::R14, "R14", 0},  {IdentityId::R15, "R15", 1},
    {IdentityId::R16, "R16", 1},  {IdentityId::R17, "R17", 2},
    {IdentityId::R18, "R18", 0},  {IdentityId::R19, "R19", 0},
}};

const IdentityInfo& info(IdentityId id) {
    for (const auto& e : kIdentities)
        if (e.id == id) return e;
    throw UnknownIdentity("unregistered identity tag");
}

bool is_reduced(IdentityId id) {
    switch (id) {
        case IdentityId::R14:
        case IdentityId::R15:
        case IdentityId::R16:
        case IdentityId::R17:
        case IdentityId::R18:
        case IdentityId::R19:
            return true;
        default:
            return false;
    }
}

/// Bound evaluation context: the three operations closed over one algebra.
struct Ops {
    const Algebra& alg;
    Vec d(const Vec& x, const Vec& y) const { return eval_binary(alg.dot, x, y); }
    Vec s(const Vec& x, const Vec& y) const { return eval_binary(alg.star, x, y); }
    Vec t(const Vec& z, const Vec& x, const Vec& y) const {
        return eval_ternary(alg.triple, z, x, y);
    }
};

// The recurring inner expression of (6), (7), (8):
//   D(xi,eta,zeta,kappa) = kappa.<zeta;xi,eta> - zeta.<kappa;xi,eta>
//                          + <zeta.kappa;xi,eta>
Vec d_expr(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa) {
    return o.d(kappa, o.t(zeta, xi, eta)) - o.d(zeta, o.t(kappa, xi, eta)) +
           o.t(o.d(zeta, kappa), xi, eta);
}

Vec h2(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta) {
    // sigma { xi.(eta.zeta) - <xi;eta,zeta> }
    Vec acc = o.d(xi, o.d(eta, zeta)) - o.t(xi, eta, zeta);
    acc += o.d(eta, o.d(zeta, xi)) - o.t(eta, zeta, xi);
    acc += o.d(zeta, o.d(xi, eta)) - o.t(zeta, xi, eta);
    return acc;
}

Vec h3(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta) {
    // sigma { zeta*(xi.eta) }
    Vec acc = o.s(zeta, o.d(xi, eta));
    acc += o.s(xi, o.d(eta, zeta));
    acc += o.s(eta, o.d(zeta, xi));
    return acc;
}

Vec h4(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& theta) {
    // sigma { <theta; zeta, xi.eta> }
    Vec acc = o.t(theta, zeta, o.d(xi, eta));
    acc += o.t(theta, xi, o.d(eta, zeta));
    acc += o.t(theta, eta, o.d(zeta, xi));
    return acc;
}

Vec h5(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa) {
    Vec lhs = d_expr(o, xi, eta, zeta, kappa);
    Vec se = o.s(xi, eta);
    Vec sk = o.s(zeta, kappa);
    Vec rhs = o.t(se, zeta, kappa) - o.t(sk, xi, eta) + o.s(zeta, o.t(kappa, xi, eta)) -
              o.s(kappa, o.t(zeta, xi, eta)) + o.s(se, sk) + o.d(se, sk);
    return lhs - rhs;
}

Vec h6(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa,
       const Vec& chi) {
    return o.d(chi, d_expr(o, xi, eta, zeta, kappa)) + o.t(o.t(chi, xi, eta), zeta, kappa) -
           o.t(o.t(chi, zeta, kappa), xi, eta) + o.t(chi, zeta, o.t(kappa, xi, eta)) -
           o.t(chi, kappa, o.t(zeta, xi, eta));
}

Vec h7(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa,
       const Vec& chi) {
    return o.s(chi, d_expr(o, xi, eta, zeta, kappa));
}

Vec h8(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa,
       const Vec& chi, const Vec& theta) {
    return o.t(theta, chi, d_expr(o, xi, eta, zeta, kappa));
}

Vec h9(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa) {
    return d_expr(o, xi, eta, zeta, kappa) + d_expr(o, zeta, kappa, xi, eta);
}

Vec h10(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa) {
    return o.s(zeta, o.t(kappa, xi, eta)) - o.s(kappa, o.t(zeta, xi, eta)) +
           o.s(xi, o.t(eta, zeta, kappa)) - o.s(eta, o.t(xi, zeta, kappa));
}

// One Sigma-term of (11), before summing over the cyclic rotation of
// the pairs (xi,eta), (zeta,kappa), (lambda,mu).
Vec h11_term(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa,
             const Vec& lambda, const Vec& mu) {
    Vec n_part = o.t(o.d(xi, eta), zeta, kappa) + o.d(eta, o.t(xi, zeta, kappa)) -
                 o.d(xi, o.t(eta, zeta, kappa));
    Vec te = o.t(eta, zeta, kappa);
    Vec tx = o.t(xi, zeta, kappa);
    return o.t(n_part, lambda, mu) + o.t(o.d(lambda, mu), te, xi) + o.d(mu, o.t(lambda, te, xi)) -
           o.d(lambda, o.t(mu, te, xi)) -
           (o.t(o.d(lambda, mu), tx, eta) + o.d(mu, o.t(lambda, tx, eta)) -
            o.d(lambda, o.t(mu, tx, eta)));
}

Vec h12_term(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa,
             const Vec& lambda, const Vec& mu) {
    Vec te = o.t(eta, zeta, kappa);
    Vec tx = o.t(xi, zeta, kappa);
    return o.s(o.t(mu, te, xi) - o.t(mu, tx, eta), lambda) +
           o.s(o.t(lambda, tx, eta) - o.t(lambda, te, xi), mu);
}

Vec h13_term(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa,
             const Vec& lambda, const Vec& mu, const Vec& theta) {
    Vec te = o.t(eta, zeta, kappa);
    Vec tx = o.t(xi, zeta, kappa);
    return o.t(theta, o.t(mu, te, xi) - o.t(mu, tx, eta), lambda) +
           o.t(theta, o.t(lambda, tx, eta) - o.t(lambda, te, xi), mu);
}

// Sigma: sum over cyclic permutations of the pairs p1, p2, p3.
template <typename F>
Vec pair_cycle_sum(size_t dim, F term, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4,
                   const Vec& x5, const Vec& x6) {
    Vec acc(dim);
    acc += term(x1, x2, x3, x4, x5, x6);
    acc += term(x3, x4, x5, x6, x1, x2);
    acc += term(x5, x6, x1, x2, x3, x4);
    return acc;
}

Vec bol1(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta) {
    Vec acc = o.t(xi, eta, zeta);
    acc += o.t(eta, zeta, xi);
    acc += o.t(zeta, xi, eta);
    return acc;
}

Vec bol2(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa) {
    Vec se = o.s(xi, eta);
    return o.t(se, zeta, kappa) - o.t(o.s(zeta, kappa), xi, eta) +
           o.s(zeta, o.t(kappa, xi, eta)) - o.s(kappa, o.t(zeta, xi, eta)) +
           o.s(se, o.s(zeta, kappa));
}

Vec double_triple(const Ops& o, const Vec& xi, const Vec& eta, const Vec& zeta, const Vec& kappa,
                  const Vec& chi) {
    return o.t(o.t(chi, xi, eta), zeta, kappa) - o.t(o.t(chi, zeta, kappa), xi, eta) +
           o.t(chi, zeta, o.t(kappa, xi, eta)) - o.t(chi, kappa, o.t(zeta, xi, eta));
}

Vec j_vec(const Ops& o, const Vec& u, const Vec& v) {
    return o.s(u, o.t(v, u, v)) - o.s(v, o.t(u, u, v));
}

Vec n_vec(const Ops& o, const Vec& u, const Vec& v) {
    return o.t(o.d(u, v), u, v) + o.d(v, o.t(u, u, v)) - o.d(u, o.t(v, u, v));
}

Vec reduced_residual(const Ops& o, IdentityId id, std::span<const size_t> args) {
    const size_t n = o.alg.dim;
    Vec u = Vec::basis(n, 0);
    Vec v = Vec::basis(n, 1);
    auto xb = [&](size_t i) { return Vec::basis(n, i); };
    switch (id) {
        case IdentityId::R14:
            return j_vec(o, u, v) - o.t(o.d(u, v), u, v) + o.d(u, o.t(v, u, v)) -
                   o.d(v, o.t(u, u, v));
        case IdentityId::R15: {
            Vec xi = xb(args[0]);
            return o.d(xi, j_vec(o, u, v)) - o.t(xi, u, o.t(v, u, v)) + o.t(xi, v, o.t(u, u, v));
        }
        case IdentityId::R16:
            return o.s(xb(args[0]), j_vec(o, u, v));
        case IdentityId::R17:
            return o.t(xb(args[1]), xb(args[0]), j_vec(o, u, v));
        case IdentityId::R18:
            return n_vec(o, u, v);
        case IdentityId::R19:
            return j_vec(o, u, v);
        default:
            throw UnknownIdentity("not a reduced identity");
    }
}

}  // namespace

size_t identity_arity(IdentityId id) { return info(id).arity; }

std::string identity_name(IdentityId id) { return info(id).name; }

IdentityId identity_from_name(const std::string& name) {
    for (const auto& e : kIdentities)
        if (name == e.name) return e.id;
    throw UnknownIdentity(name);
}

Vec residual(const Algebra& alg, IdentityId id, std::span<const size_t> args) {
    const IdentityInfo& meta = info(id);
    if (args.size() != meta.arity)
        throw ArityMismatch(std::string(meta.name) + " takes " + std::to_string(meta.arity) +
                            " argument(s), got " + std::to_string(args.size()));
    Ops o{alg};
    if (is_reduced(id)) {
        if (alg.dim != 2) throw WrongDimension("reduced identities require dim = 2");
        for (size_t a : args)
            if (a >= 2) throw ArityMismatch("reduced identity index out of range");
        return reduced_residual(o, id, args);
    }
    for (size_t a : args)
        if (a >= alg.dim) throw ArityMismatch("basis index out of range");

    std::vector<Vec> x;
    x.reserve(args.size());
    for (size_t a : args) x.push_back(Vec::basis(alg.dim, a));

    switch (id) {
        case IdentityId::H2:
            return h2(o, x[0], x[1], x[2]);
        case IdentityId::H3:
            return h3(o, x[0], x[1], x[2]);
        case IdentityId::H4:
            return h4(o, x[0], x[1], x[2], x[3]);
        case IdentityId::H5:
            return h5(o, x[0], x[1], x[2], x[3]);
        case IdentityId::H6:
            return h6(o, x[0], x[1], x[2], x[3], x[4]);
        case IdentityId::H7:
            return h7(o, x[0], x[1], x[2], x[3], x[4]);
        case IdentityId::H8:
            return h8(o, x[0], x[1], x[2], x[3], x[4], x[5]);
        case IdentityId::H9:
            return h9(o, x[0], x[1], x[2], x[3]);
        case IdentityId::H10:
            return h10(o, x[0], x[1], x[2], x[3]);
        case IdentityId::H11:
            return pair_cycle_sum(
                alg.dim,
                [&](const Vec& a, const Vec& b, const Vec& c, const Vec& d, const Vec& e,
                    const Vec& f) { return h11_term(o, a, b, c, d, e, f); },
                x[0], x[1], x[2], x[3], x[4], x[5]);
        case IdentityId::H12:
            return pair_cycle_sum(
                alg.dim,
                [&](const Vec& a, const Vec& b, const Vec& c, const Vec& d, const Vec& e,
                    const Vec& f) { return h12_term(o, a, b, c, d, e, f); },
                x[0], x[1], x[2], x[3], x[4], x[5]);
        case IdentityId::H13:
            return pair_cycle_sum(
                alg.dim,
                [&](const Vec& a, const Vec& b, const Vec& c, const Vec& d, const Vec& e,
                    const Vec& f) { return h13_term(o, a, b, c, d, e, f, x[6]); },
                x[0], x[1], x[2], x[3], x[4], x[5]);
        case IdentityId::BOL1:
            return bol1(o, x[0], x[1], x[2]);
        case IdentityId::BOL2:
            return bol2(o, x[0], x[1], x[2], x[3]);
        case IdentityId::BOL3:
            return double_triple(o, x[0], x[1], x[2], x[3], x[4]);
        case IdentityId::LTA1:
            return h2(o, x[0], x[1], x[2]);
        case IdentityId::LTA2:
            return h4(o, x[0], x[1], x[2], x[3]);
        case IdentityId::LTA3:
            return d_expr(o, x[0], x[1], x[2], x[3]);
        case IdentityId::LTA4:
            return double_triple(o, x[0], x[1], x[2], x[3], x[4]);
        case IdentityId::LTS1:
            return bol1(o, x[0], x[1], x[2]);
        case IdentityId::LTS2:
            return double_triple(o, x[0], x[1], x[2], x[3], x[4]);
        default:
            throw UnknownIdentity("unhandled identity tag");
    }
}

CheckReport check_identity(const Algebra& alg, IdentityId id, const CheckOptions& opts) {
    const size_t arity = identity_arity(id);
    const size_t base = is_reduced(id) ? 2 : alg.dim;
    if (is_reduced(id) && alg.dim != 2)
        throw WrongDimension("reduced identities require dim = 2");

    CheckReport report;
    report.identity = id;
    std::vector<size_t> args(arity, 0);
    while (true) {
        Vec r = residual(alg, id, args);
        ++report.tuples_checked;
        if (!r.is_zero()) {
            ++report.violation_count;
            if (report.violations.size() < opts.max_violations)
                report.violations.push_back(Residual{args, std::move(r)});
            if (opts.stop_at_first_violation) break;
        }
        // lexicographic odometer over base^arity tuples
        size_t pos = arity;
        while (pos > 0) {
            if (++args[pos - 1] < base) break;
            args[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    report.passed = report.violation_count == 0;
    return report;
}

namespace {

std::vector<CheckReport> run_set(const Algebra& alg, std::initializer_list<IdentityId> ids,
                                 const CheckOptions& opts) {
    std::vector<CheckReport> out;
    out.reserve(ids.size());
    for (IdentityId id : ids) out.push_back(check_identity(alg, id, opts));
    return out;
}

}  // namespace

std::vector<CheckReport> check_hta(const Algebra& alg, const CheckOptions& opts) {
    using I = IdentityId;
    return run_set(alg,
                   {I::H2, I::H3, I::H4, I::H5, I::H6, I::H7, I::H8, I::H9, I::H10, I::H11,
                    I::H12, I::H13},
                   opts);
}

std::vector<CheckReport> check_bol(const Algebra& alg, const CheckOptions& opts) {
    if (!alg.dot.is_zero()) throw PreconditionDotNonzero();
    using I = IdentityId;
    return run_set(alg, {I::BOL1, I::BOL2, I::BOL3}, opts);
}

std::vector<CheckReport> check_lta(const Algebra& alg, const CheckOptions& opts) {
    if (!alg.star.is_zero()) throw PreconditionStarNonzero();
    using I = IdentityId;
    return run_set(alg, {I::LTA1, I::LTA2, I::LTA3, I::LTA4}, opts);
}

std::vector<CheckReport> check_lts(const Algebra& alg, const CheckOptions& opts) {
    if (!alg.dot.is_zero() || !alg.star.is_zero()) throw PreconditionBinaryNonzero();
    using I = IdentityId;
    return run_set(alg, {I::LTS1, I::LTS2, I::H9, I::H10, I::H11, I::H12, I::H13}, opts);
}

std::vector<CheckReport> check_reduced(const Algebra& alg, const CheckOptions& opts) {
    if (alg.dim != 2) throw WrongDimension("check_reduced requires dim = 2");
    using I = IdentityId;
    return run_set(alg, {I::R14, I::R15, I::R16, I::R17, I::R18, I::R19}, opts);
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

namespace {

bool verdict_over(const Algebra& alg, std::initializer_list<IdentityId> ids) {
    CheckOptions opts;
    opts.max_violations = 0;
    opts.stop_at_first_violation = true;
    for (IdentityId id : ids)
        if (check_identity(alg, id, opts).violation_count > 0) return false;
    return true;
}

}  // namespace

bool verdict_hta(const Algebra& alg) {
    using I = IdentityId;
    // low-arity identities first; they reject most invalid algebras
    return verdict_over(alg, {I::H9, I::H10, I::H2, I::H3, I::H5, I::H4, I::H6, I::H7, I::H8,
                              I::H11, I::H12, I::H13});
}

bool verdict_reduced(const Algebra& alg) {
    using I = IdentityId;
    return verdict_over(alg, {I::R19, I::R18, I::R14, I::R15, I::R16, I::R17});
}

Vec compute_J(const Algebra& alg) {
    if (alg.dim != 2) throw WrongDimension("compute_J requires dim = 2");
    Ops o{alg};
    return j_vec(o, Vec::basis(2, 0), Vec::basis(2, 1));
}

Vec compute_N(const Algebra& alg) {
    if (alg.dim != 2) throw WrongDimension("compute_N requires dim = 2");
    Ops o{alg};
    return n_vec(o, Vec::basis(2, 0), Vec::basis(2, 1));
}

bool variety_predicate(const Constants2D& k8) {
    Rational trace = k8.e + k8.l;
    return (trace * k8.c).is_zero() && (trace * k8.d).is_zero() && (trace * k8.e).is_zero() &&
           (trace * k8.f).is_zero() && (trace * k8.k).is_zero() && (trace * k8.l).is_zero() &&
           (k8.b * k8.k - k8.a * k8.l).is_zero() && (k8.a * k8.f - k8.b * k8.e).is_zero();
}

}  // namespace hta
