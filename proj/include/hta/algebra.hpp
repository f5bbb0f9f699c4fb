#ifndef HTA_ALGEBRA_HPP
#define HTA_ALGEBRA_HPP

#include <vector>

#include "hta/linalg.hpp"

namespace hta {

/// Structure constants of one skew-symmetric binary operation:
/// at(i, j) is the coordinate vector of (basis_i op basis_j).
class BinaryTable {
public:
    BinaryTable() : dim_(0) {}
    explicit BinaryTable(size_t dim) : dim_(dim), c_(dim * dim, Vec(dim)) {}

    size_t dim() const { return dim_; }
    const Vec& at(size_t i, size_t j) const { return c_[i * dim_ + j]; }

    /// Sets both (i,j) and (j,i) = -value; requires i != j.
    void set(size_t i, size_t j, const Vec& value);
    /// Raw write used by table loaders; validate() must pass before use.
    void set_raw(size_t i, size_t j, const Vec& value);

    bool is_zero() const;
    void validate(const char* name) const;

    friend bool operator==(const BinaryTable& a, const BinaryTable& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    size_t dim_;
    std::vector<Vec> c_;
};

/// Structure constants of the ternary operation, skew in the last two
/// slots: at(z, i, j) is the coordinate vector of <basis_z; basis_i, basis_j>.
class TernaryTable {
public:
    TernaryTable() : dim_(0) {}
    explicit TernaryTable(size_t dim) : dim_(dim), r_(dim * dim * dim, Vec(dim)) {}

    size_t dim() const { return dim_; }
    const Vec& at(size_t z, size_t i, size_t j) const {
        return r_[(z * dim_ + i) * dim_ + j];
    }

    void set(size_t z, size_t i, size_t j, const Vec& value);
    void set_raw(size_t z, size_t i, size_t j, const Vec& value);

    bool is_zero() const;
    void validate(const char* name) const;

    friend bool operator==(const TernaryTable& a, const TernaryTable& b) {
        return a.dim_ == b.dim_ && a.r_ == b.r_;
    }

private:
    size_t dim_;
    std::vector<Vec> r_;
};

/// A binary-ternary algebra given by structure constants: two
/// skew-symmetric binary operations (dot, star) and one ternary
/// operation skew in its last two arguments.  Whether it actually
/// satisfies the defining identities is the identity engine's business.
struct Algebra {
    size_t dim = 0;
    BinaryTable dot;
    BinaryTable star;
    TernaryTable triple;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim == b.dim && a.dot == b.dot && a.star == b.star && a.triple == b.triple;
    }
};

/// The eight scalars describing a 2-dimensional algebra in a fixed basis
/// {u, v}:
///   u.v = a u + b v,  u*v = c u + d v,
///   <u;u,v> = e u + f v,  <v;u,v> = k u + l v.
struct Constants2D {
    Rational a, b, c, d, e, f, k, l;

    Vec dot_vec() const { return Vec{a, b}; }
    Vec star_vec() const { return Vec{c, d}; }
    /// The ternary matrix T = [[e, k], [f, l]]; column z holds <x_z;u,v>.
    Mat t_matrix() const { return Mat{{e, k}, {f, l}}; }

    friend bool operator==(const Constants2D&, const Constants2D&) = default;
};

/// Validates skew-symmetry and sizes, then assembles the algebra.
Algebra make_algebra(size_t dim, BinaryTable dot, BinaryTable star, TernaryTable triple);

Algebra zero_algebra(size_t dim);

/// Bilinear extension of a binary table to arbitrary coordinate vectors.
Vec eval_binary(const BinaryTable& table, const Vec& x, const Vec& y);

/// Trilinear extension of the ternary table.
Vec eval_ternary(const TernaryTable& table, const Vec& z, const Vec& x, const Vec& y);

/// Re-expresses the algebra in the basis whose j-th vector is column j
/// of P (in old coordinates).  Generic tensor law in any dimension:
///   c'^k_ij = sum (P^-1)^k_m c^m_pq P^p_i P^q_j
/// and the ternary analogue with three P factors and one P^-1.
Algebra change_basis(const Algebra& alg, const Mat& P);

/// 2D shortcut for the product vector w = x1 op x2 under basis change.
/// Derivation: (P11 u + P21 v) op (P12 u + P22 v) = det(P) (u op v) by
/// bilinearity and skew-symmetry, and converting the result to new
/// coordinates multiplies by P^-1, so w' = det(P) P^-1 w = adj(P) w.
Vec transform_product_vector(const Mat& P, const Vec& w);

/// 2D shortcut for the ternary matrix: T' = det(P) P^-1 T P = adj(P) T P.
/// The extra P comes from the linear (first) slot of the ternary
/// operation; the skew pair contributes det(P) exactly as for binaries.
Mat transform_ternary_matrix(const Mat& P, const Mat& T);

/// Reads the eight scalars off a 2-dimensional algebra.
Constants2D constants2d(const Algebra& alg);

/// Builds the 2-dimensional algebra with the given scalars; inverse of
/// constants2d.
Algebra from_constants2d(const Constants2D& k8);

enum class BinaryOp { Dot, Star };

/// Copy of the algebra with the selected binary table zeroed.
Algebra specialize(const Algebra& alg, BinaryOp which);

}  // namespace hta

#endif
