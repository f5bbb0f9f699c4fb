#ifndef HTA_LINALG_HPP
#define HTA_LINALG_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "hta/rational.hpp"

namespace hta {

/// Coordinate vector over exact rationals.
class Vec {
public:
    Vec() = default;
    explicit Vec(size_t dim) : x_(dim) {}
    Vec(std::initializer_list<Rational> xs) : x_(xs) {}

    static Vec basis(size_t dim, size_t i);

    size_t dim() const { return x_.size(); }
    Rational& operator[](size_t i) { return x_[i]; }
    const Rational& operator[](size_t i) const { return x_[i]; }

    bool is_zero() const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    Vec operator-() const;
    friend Vec operator*(const Rational& s, const Vec& v);

    /// acc += s * v without intermediate vectors; the workhorse of the
    /// multilinear evaluators.
    void add_scaled(const Rational& s, const Vec& v);

    friend bool operator==(const Vec& a, const Vec& b) { return a.x_ == b.x_; }

    std::string str() const;

private:
    std::vector<Rational> x_;
};

/// Dense square matrix over exact rationals.  For basis changes the
/// convention throughout is: column j holds the j-th new basis vector
/// written in old coordinates.
class Mat {
public:
    Mat() : n_(0) {}
    explicit Mat(size_t n) : n_(n), a_(n * n) {}
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(size_t n);

    size_t dim() const { return n_; }
    Rational& at(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

    Rational det() const;
    /// Inverse via exact Gauss-Jordan elimination; throws SingularMatrix.
    Mat inverse() const;
    /// det(P) * P^-1, always defined for invertible P; for 2x2 this is
    /// [[d,-b],[-c,a]].
    Mat adjugate() const;
    Mat transpose() const;

    Vec col(size_t j) const;
    Vec apply(const Vec& v) const;  // matrix * vector

    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    std::string str() const;

private:
    size_t n_;
    std::vector<Rational> a_;
};

}  // namespace hta

#endif
