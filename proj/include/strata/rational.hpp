#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "strata/checked.hpp"
#include "strata/errors.hpp"

namespace strata {

/// Exact rational number, stored reduced with positive denominator.
///
/// Slope values and slope comparisons are the decision currency of the whole
/// library; comparisons cross-multiply in overflow-checked 64-bit integers,
/// so no decision path ever touches floating point.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit from integers is intended
    Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) fail(ErrorCode::DivisionByZero, "rational division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    Rational operator-() const { return Rational(checked_neg(num_), den_); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Total order; denominators are positive, so cross-multiplication is safe.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
    }

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    void normalize() {
        if (den_ == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        uint64_t g = std::gcd(num_ < 0 ? uint64_t(0) - uint64_t(num_) : uint64_t(num_),
                              uint64_t(den_));
        if (g > 1) {
            num_ /= int64_t(g);
            den_ /= int64_t(g);
        }
    }

    int64_t num_;
    int64_t den_;  // > 0
};

}  // namespace strata
