#include "kepoly/qfield.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <ostream>

namespace kepoly {

Rat::Rat(long num, long den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::from_string(std::string_view s) {
    auto fail = [&] { throw ParseError("malformed rational \"" + std::string(s) + "\" (expected \"p\" or \"p/q\")"); };
    if (s.empty())
        fail();
    std::size_t i = (s[0] == '-') ? 1 : 0;
    std::size_t slash = std::string_view::npos;
    if (i == s.size())
        fail();
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (slash != std::string_view::npos || k == i || k + 1 == s.size())
                fail();
            slash = k;
        } else if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            fail();
        }
    }
    Rat out;
    out.v_ = mpq_class(std::string(s), 10);
    if (out.v_.get_den() == 0)
        throw ParseError("zero denominator in rational \"" + std::string(s) + "\"");
    out.v_.canonicalize();
    return out;
}

Rat Rat::operator-() const {
    Rat out;
    out.v_ = -v_;
    return out;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

double Rat::to_double() const {
    // 53-bit target precision makes mpfr_set_q itself the final rounding.
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, v_.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    if (!std::isfinite(d))
        throw RangeError("rational " + str() + " does not fit a double");
    return d;
}

int QuadNum::sign() const {
    int sr = r_.sign();
    int ss = s_.sign();
    if (ss == 0)
        return sr;
    if (sr == 0)
        return ss;
    if (sr == ss)
        return sr;
    // Opposite signs: r + s*sqrt(3) has the sign of r iff r^2 > 3 s^2.
    Rat d = r_ * r_ - Rat(3) * s_ * s_;
    int sd = d.sign();
    if (sd == 0)
        throw std::logic_error("r^2 = 3 s^2 with r, s nonzero contradicts irrationality of sqrt(3)");
    return sr * sd;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    // (r1 + s1 v)(r2 + s2 v) = r1 r2 + 3 s1 s2 + (r1 s2 + s1 r2) v, v = sqrt(3)
    Rat r = r_ * o.r_ + Rat(3) * s_ * o.s_;
    Rat s = r_ * o.s_ + s_ * o.r_;
    r_ = std::move(r);
    s_ = std::move(s);
    return *this;
}

QuadNum QuadNum::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero field element");
    Rat norm = r_ * r_ - Rat(3) * s_ * s_;
    // norm = 0 for nonzero (r, s) would force sqrt(3) rational.
    return QuadNum(r_ / norm, -s_ / norm);
}

double QuadNum::to_double() const {
    mpfr_t acc, sq;
    mpfr_init2(acc, 256);
    mpfr_init2(sq, 256);
    mpfr_sqrt_ui(sq, 3, MPFR_RNDN);
    mpfr_mul_q(sq, sq, s_.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(acc, r_.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, sq, MPFR_RNDN);
    double d = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clear(acc);
    mpfr_clear(sq);
    if (!std::isfinite(d))
        throw RangeError("field element " + str() + " does not fit a double");
    return d;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::ostream& operator<<(std::ostream& os, const QuadNum& q) { return os << q.str(); }

std::string QuadNum::str() const {
    auto radical = [](const Rat& c) -> std::string {
        if (c == Rat(1))
            return "√3";
        if (c == Rat(-1))
            return "-√3";
        return c.str() + "·√3";
    };
    if (s_.is_zero())
        return r_.str();
    if (r_.is_zero())
        return radical(s_);
    if (s_.sign() > 0)
        return r_.str() + " + " + radical(s_);
    return r_.str() + " - " + radical(-s_);
}

} // namespace kepoly
