#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "kepoly/errors.hpp"

namespace kepoly {

// Arbitrary-precision rational, kept in lowest terms with a positive
// denominator at all times.  Thin value wrapper around GMP's mpq_class;
// GMP guarantees canonical results for arithmetic on canonical operands.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(mpz_class n) : v_(std::move(n)) {}

    // Parses "p/q" or "p" (lowest terms not required on input; output is
    // always canonical).  Throws ParseError on malformed text.
    static Rat from_string(std::string_view s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

    // "p/q" in lowest terms, or "p" when the denominator is 1.
    std::string str() const;

    // Nearest double (round to nearest, ties to even).  Throws RangeError
    // when the value does not fit a finite double.
    double to_double() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Element r + s*sqrt(3) of the real quadratic field Q(sqrt(3)).  The
// representation is unique since sqrt(3) is irrational, so equality is
// componentwise and zero means r = s = 0.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(Rat r) : r_(std::move(r)) {} // NOLINT(google-explicit-constructor)
    QuadNum(long n) : r_(n) {}           // NOLINT(google-explicit-constructor)
    QuadNum(Rat rational_part, Rat sqrt3_part)
        : r_(std::move(rational_part)), s_(std::move(sqrt3_part)) {}

    // c*sqrt(3)
    static QuadNum sqrt3(Rat coeff = Rat(1)) { return QuadNum(Rat(0), std::move(coeff)); }

    const Rat& rat_part() const { return r_; }
    const Rat& sqrt3_part() const { return s_; }

    bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
    bool is_rational() const { return s_.is_zero(); }

    // Exact sign of the real value r + s*sqrt(3); never touches floating
    // point.  Mixed-sign case compares r^2 against 3 s^2.
    int sign() const;

    QuadNum operator-() const { return QuadNum(-r_, -s_); }
    QuadNum& operator+=(const QuadNum& o) { r_ += o.r_; s_ += o.s_; return *this; }
    QuadNum& operator-=(const QuadNum& o) { r_ -= o.r_; s_ -= o.s_; return *this; }
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o) { return *this *= o.inverse(); }

    friend QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
    friend QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
    friend QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
    friend QuadNum operator/(QuadNum a, const QuadNum& b) { return a /= b; }

    friend bool operator==(const QuadNum& a, const QuadNum& b) { return a.r_ == b.r_ && a.s_ == b.s_; }
    friend bool operator<(const QuadNum& a, const QuadNum& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QuadNum& a, const QuadNum& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QuadNum& a, const QuadNum& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QuadNum& a, const QuadNum& b) { return (a - b).sign() >= 0; }

    // Multiplicative inverse via the conjugate: (r - s*sqrt(3)) / (r^2 - 3 s^2).
    // Throws DivisionByZero on zero.
    QuadNum inverse() const;

    // Nearest double of r + s*sqrt(3), evaluated in 256-bit precision.
    // Oracle/diagnostics only; never used in exact decision paths.
    double to_double() const;

    // Human-readable form: "5/4", "√3", "5/4·√3", "-4 + 3·√3", ...
    std::string str() const;

private:
    Rat r_, s_;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& q);

} // namespace kepoly
