#include "hta/algebra.hpp"

#include "hta/errors.hpp"

namespace hta {

void BinaryTable::set(size_t i, size_t j, const Vec& value) {
    if (i == j) throw SkewViolation("binary", "diagonal entry must stay zero");
    set_raw(i, j, value);
    set_raw(j, i, -value);
}

void BinaryTable::set_raw(size_t i, size_t j, const Vec& value) {
    if (value.dim() != dim_) throw DimensionMismatch("binary table entry");
    c_[i * dim_ + j] = value;
}

bool BinaryTable::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

void BinaryTable::validate(const char* name) const {
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            if (at(i, j).dim() != dim_) throw DimensionMismatch("binary table entry size");
            if (!(at(i, j) == -at(j, i)))
                throw SkewViolation(name, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

void TernaryTable::set(size_t z, size_t i, size_t j, const Vec& value) {
    if (i == j) throw SkewViolation("ternary", "diagonal pair must stay zero");
    set_raw(z, i, j, value);
    set_raw(z, j, i, -value);
}

void TernaryTable::set_raw(size_t z, size_t i, size_t j, const Vec& value) {
    if (value.dim() != dim_) throw DimensionMismatch("ternary table entry");
    r_[(z * dim_ + i) * dim_ + j] = value;
}

bool TernaryTable::is_zero() const {
    for (const auto& v : r_)
        if (!v.is_zero()) return false;
    return true;
}

void TernaryTable::validate(const char* name) const {
    for (size_t z = 0; z < dim_; ++z)
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j) {
                if (at(z, i, j).dim() != dim_)
                    throw DimensionMismatch("ternary table entry size");
                if (!(at(z, i, j) == -at(z, j, i)))
                    throw SkewViolation(name, "(" + std::to_string(z) + "," + std::to_string(i) +
                                                  "," + std::to_string(j) + ")");
            }
}

Algebra make_algebra(size_t dim, BinaryTable dot, BinaryTable star, TernaryTable triple) {
    if (dim == 0) throw DimensionMismatch("dimension must be positive");
    if (dot.dim() != dim || star.dim() != dim || triple.dim() != dim)
        throw DimensionMismatch("table sized inconsistently with dim");
    dot.validate("dot");
    star.validate("star");
    triple.validate("triple");
    return Algebra{dim, std::move(dot), std::move(star), std::move(triple)};
}

Algebra zero_algebra(size_t dim) {
    return Algebra{dim, BinaryTable(dim), BinaryTable(dim), TernaryTable(dim)};
}

Vec eval_binary(const BinaryTable& table, const Vec& x, const Vec& y) {
    size_t n = table.dim();
    if (x.dim() != n || y.dim() != n) throw DimensionMismatch("eval_binary argument");
    Vec acc(n);
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            acc.add_scaled(x[i] * y[j], table.at(i, j));
        }
    }
    return acc;
}

Vec eval_ternary(const TernaryTable& table, const Vec& z, const Vec& x, const Vec& y) {
    size_t n = table.dim();
    if (z.dim() != n || x.dim() != n || y.dim() != n)
        throw DimensionMismatch("eval_ternary argument");
    Vec acc(n);
    for (size_t p = 0; p < n; ++p) {
        if (z[p].is_zero()) continue;
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                acc.add_scaled(z[p] * x[i] * y[j], table.at(p, i, j));
            }
        }
    }
    return acc;
}

Algebra change_basis(const Algebra& alg, const Mat& P) {
    size_t n = alg.dim;
    if (P.dim() != n) throw DimensionMismatch("basis-change matrix size");
    if (P.det().is_zero()) throw SingularMatrix();
    Mat Pinv = P.inverse();

    // New basis vectors in old coordinates are the columns of P; their
    // products are evaluated with the old tables and pulled back by P^-1.
    std::vector<Vec> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = P.col(j);

    BinaryTable dot(n), star(n);
    TernaryTable triple(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            dot.set_raw(i, j, Pinv.apply(eval_binary(alg.dot, cols[i], cols[j])));
            star.set_raw(i, j, Pinv.apply(eval_binary(alg.star, cols[i], cols[j])));
        }
    for (size_t z = 0; z < n; ++z)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                triple.set_raw(z, i, j,
                               Pinv.apply(eval_ternary(alg.triple, cols[z], cols[i], cols[j])));
            }
    return make_algebra(n, std::move(dot), std::move(star), std::move(triple));
}

Vec transform_product_vector(const Mat& P, const Vec& w) {
    if (P.dim() != 2 || w.dim() != 2) throw WrongDimension("2D shortcut needs dim = 2");
    return P.adjugate().apply(w);
}

Mat transform_ternary_matrix(const Mat& P, const Mat& T) {
    if (P.dim() != 2 || T.dim() != 2) throw WrongDimension("2D shortcut needs dim = 2");
    return P.adjugate() * T * P;
}

Constants2D constants2d(const Algebra& alg) {
    if (alg.dim != 2) throw WrongDimension("constants2d requires a 2-dimensional algebra");
    const Vec& d = alg.dot.at(0, 1);
    const Vec& s = alg.star.at(0, 1);
    const Vec& t1 = alg.triple.at(0, 0, 1);
    const Vec& t2 = alg.triple.at(1, 0, 1);
    return Constants2D{d[0], d[1], s[0], s[1], t1[0], t1[1], t2[0], t2[1]};
}

Algebra from_constants2d(const Constants2D& k8) {
    BinaryTable dot(2), star(2);
    TernaryTable triple(2);
    dot.set(0, 1, Vec{k8.a, k8.b});
    star.set(0, 1, Vec{k8.c, k8.d});
    triple.set(0, 0, 1, Vec{k8.e, k8.f});
    triple.set(1, 0, 1, Vec{k8.k, k8.l});
    return make_algebra(2, std::move(dot), std::move(star), std::move(triple));
}

Algebra specialize(const Algebra& alg, BinaryOp which) {
    Algebra out = alg;
    if (which == BinaryOp::Dot)
        out.dot = BinaryTable(alg.dim);
    else
        out.star = BinaryTable(alg.dim);
    return out;
}

}  // namespace hta
