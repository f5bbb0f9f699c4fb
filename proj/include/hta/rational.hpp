#ifndef HTA_RATIONAL_HPP
#define HTA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "hta/errors.hpp"

namespace hta {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number.  Canonical form invariants: den > 0 and
/// gcd(|num|, den) = 1; the default value is 0/1.  All arithmetic is
/// exact; there is no floating-point path anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int num, Int den);

    /// Parses "p" or "p/q" (decimal integers, q > 0 after normalization).
    static Rational parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    /// Canonical text form: "p" when integral, else "p/q".
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void normalize();

    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Floor of the integer square root; requires n >= 0.
Int isqrt(const Int& n);

/// Exact rational square root when one exists (num and den both perfect
/// squares); the result is the non-negative root.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Largest square-free s with n = s * t^2 (n != 0); keeps the sign of n.
/// Gives up (returns nullopt) if an unfactored part remains after trial
/// division, which cannot happen for the small operands this library
/// produces but keeps the function honest.
std::optional<Int> squarefree_part(const Int& n);

}  // namespace hta

#endif
