#include "hta/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <ostream>

namespace hta {

namespace mp = boost::multiprecision;

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = mp::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> Int {
        if (s.empty()) throw Error("empty integer in rational literal");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw Error("sign without digits in rational literal");
        for (size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw Error("invalid digit in rational literal: '" + std::string(s) + "'");
        Int v(std::string(s.substr(i)));
        return s[0] == '-' ? Int(-v) : v;
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt of negative integer");
    return mp::sqrt(n);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    Int rn = isqrt(r.num());
    Int rd = isqrt(r.den());
    if (rn * rn != r.num() || rd * rd != r.den()) return std::nullopt;
    return Rational(rn, rd);
}

std::optional<Int> squarefree_part(const Int& n) {
    if (n == 0) throw Error("squarefree part of zero");
    Int m = n < 0 ? Int(-n) : n;
    Int sf = 1;
    auto strip = [&](const Int& p) {
        int count = 0;
        while (m % p == 0) {
            m /= p;
            ++count;
        }
        if (count % 2 == 1) sf *= p;
    };
    strip(2);
    const long long limit = 1000000;
    for (long long p = 3; p <= limit && Int(p) * p <= m; p += 2) strip(Int(p));
    if (m > 1) {
        // Leftover is prime, a prime square, or out of reach of trial division.
        Int root = isqrt(m);
        if (root * root == m) {
            // perfect square remainder contributes nothing square-free
        } else if (m <= Int(limit) * limit) {
            sf *= m;  // below limit^2 and square-free here means prime
        } else {
            return std::nullopt;
        }
    }
    return n < 0 ? Int(-sf) : sf;
}

}  // namespace hta
