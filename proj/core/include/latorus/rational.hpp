#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "latorus/errors.hpp"

namespace latorus {

/// Exact rational scalar.
///
/// Thin wrapper over GMP's mpq that keeps the value canonical: reduced to
/// lowest terms, denominator > 0, zero stored as 0/1. All arithmetic is
/// exact; there is no floating point anywhere in the library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long int>(n)) {}
    Rational(long long n) { set_ll(n); }

    Rational(long long num, long long den) {
        if (den == 0) throw ConstraintViolation("rational: zero denominator");
        Rational n(num), d(den);
        v_ = n.v_ / d.v_;
        v_.canonicalize();
    }

    /// Parse "p/q" or "p" with optional sign, arbitrary precision.
    static Rational parse(std::string_view text);

    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ConstraintViolation("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ConstraintViolation("rational: inverse of zero");
        return Rational(1 / v_);
    }

    /// this^e for integer e (negative e inverts; 0^negative throws).
    Rational pow(long long e) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    void set_ll(long long n);

    mpq_class v_;
};

}  // namespace latorus
