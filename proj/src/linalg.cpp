#include "hta/linalg.hpp"

#include "hta/errors.hpp"

namespace hta {

Vec Vec::basis(size_t dim, size_t i) {
    Vec v(dim);
    v[i] = 1;
    return v;
}

bool Vec::is_zero() const {
    for (const auto& c : x_)
        if (!c.is_zero()) return false;
    return true;
}

Vec& Vec::operator+=(const Vec& o) {
    if (o.dim() != dim()) throw DimensionMismatch("vector addition");
    for (size_t i = 0; i < x_.size(); ++i) x_[i] += o.x_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (o.dim() != dim()) throw DimensionMismatch("vector subtraction");
    for (size_t i = 0; i < x_.size(); ++i) x_[i] -= o.x_[i];
    return *this;
}

Vec Vec::operator-() const {
    Vec v(dim());
    for (size_t i = 0; i < x_.size(); ++i) v.x_[i] = -x_[i];
    return v;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.dim());
    for (size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

void Vec::add_scaled(const Rational& s, const Vec& v) {
    if (s.is_zero()) return;
    if (v.dim() != dim()) throw DimensionMismatch("add_scaled");
    for (size_t i = 0; i < x_.size(); ++i)
        if (!v.x_[i].is_zero()) x_[i] += s * v.x_[i];
}

std::string Vec::str() const {
    std::string s = "(";
    for (size_t i = 0; i < x_.size(); ++i) {
        if (i) s += ", ";
        s += x_[i].str();
    }
    return s + ")";
}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    n_ = rows.size();
    a_.resize(n_ * n_);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw DimensionMismatch("matrix initializer not square");
        size_t j = 0;
        for (const auto& v : row) a_[i * n_ + j++] = v;
        ++i;
    }
}

Mat Mat::identity(size_t n) {
    Mat m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational Mat::det() const {
    if (n_ == 0) return 1;
    if (n_ == 1) return a_[0];
    if (n_ == 2) return a_[0] * a_[3] - a_[1] * a_[2];
    // Fraction-free is unnecessary at these sizes; plain elimination.
    Mat m = *this;
    Rational d = 1;
    for (size_t c = 0; c < n_; ++c) {
        size_t p = c;
        while (p < n_ && m.at(p, c).is_zero()) ++p;
        if (p == n_) return 0;
        if (p != c) {
            for (size_t j = 0; j < n_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        for (size_t r = c + 1; r < n_; ++r) {
            if (m.at(r, c).is_zero()) continue;
            Rational f = m.at(r, c) / m.at(c, c);
            for (size_t j = c; j < n_; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    Mat m = *this;
    Mat inv = identity(n_);
    for (size_t c = 0; c < n_; ++c) {
        size_t p = c;
        while (p < n_ && m.at(p, c).is_zero()) ++p;
        if (p == n_) throw SingularMatrix();
        if (p != c)
            for (size_t j = 0; j < n_; ++j) {
                std::swap(m.at(p, j), m.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        Rational piv = m.at(c, c);
        for (size_t j = 0; j < n_; ++j) {
            m.at(c, j) /= piv;
            inv.at(c, j) /= piv;
        }
        for (size_t r = 0; r < n_; ++r) {
            if (r == c || m.at(r, c).is_zero()) continue;
            Rational f = m.at(r, c);
            for (size_t j = 0; j < n_; ++j) {
                m.at(r, j) -= f * m.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

Mat Mat::adjugate() const {
    if (n_ == 2) {
        Mat m(2);
        m.at(0, 0) = a_[3];
        m.at(0, 1) = -a_[1];
        m.at(1, 0) = -a_[2];
        m.at(1, 1) = a_[0];
        return m;
    }
    Rational d = det();
    if (d.is_zero()) throw SingularMatrix();
    Mat inv = inverse();
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) inv.at(i, j) *= d;
    return inv;
}

Mat Mat::transpose() const {
    Mat m(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Vec Mat::col(size_t j) const {
    Vec v(n_);
    for (size_t i = 0; i < n_; ++i) v[i] = at(i, j);
    return v;
}

Vec Mat::apply(const Vec& v) const {
    if (v.dim() != n_) throw DimensionMismatch("matrix-vector product");
    Vec r(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("matrix product");
    Mat r(a.n_);
    for (size_t i = 0; i < a.n_; ++i)
        for (size_t k = 0; k < a.n_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < a.n_; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

std::string Mat::str() const {
    std::string s = "[";
    for (size_t i = 0; i < n_; ++i) {
        if (i) s += "; ";
        for (size_t j = 0; j < n_; ++j) {
            if (j) s += " ";
            s += at(i, j).str();
        }
    }
    return s + "]";
}

}  // namespace hta
