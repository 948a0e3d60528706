#pragma once

#include <string>
#include <utility>

#include "modlat/rational.hpp"

namespace modlat {

/// Element a + b*sqrt(d) of a real quadratic extension of Q, with d a
/// squarefree integer > 1. Purely rational values carry d == 0 and combine
/// with any radicand; mixing two distinct radicands throws.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(runtime/explicit)
    QuadExt(long a) : a_(a), b_(0), d_(0) {}                 // NOLINT(runtime/explicit)
    QuadExt(Rational a, Rational b, long d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Galois conjugate a - b*sqrt(d).
    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    /// Field norm a^2 - d b^2, a rational.
    Rational field_norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const { return *this + (-o); }
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }

    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    QuadExt inverse() const;

    /// "a + b*sqrt(d)" (plain rational string when b = 0).
    std::string str() const;

    /// Exact square root of a positive rational x = r^2 * d with d squarefree:
    /// returns r*sqrt(d) as a QuadExt. Throws if x < 0.
    static QuadExt sqrt_of(const Rational& x);

private:
    static long merge_radicand(const QuadExt& x, const QuadExt& y);

    Rational a_, b_;
    long d_;
};

/// Squarefree decomposition n = r^2 * d of a positive integer (trial division).
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

} // namespace modlat
