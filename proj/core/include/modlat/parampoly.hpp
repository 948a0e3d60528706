#pragma once

#include <string>
#include <vector>

#include "modlat/rational.hpp"

namespace modlat {

/// Polynomial in one formal parameter (the coset norm s) with exact rational
/// coefficients. Trailing zeros are trimmed; the zero polynomial has degree -1.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(Rational c) { c_.push_back(std::move(c)); trim(); }  // NOLINT
    ParamPoly(long c) : ParamPoly(Rational(c)) {}                  // NOLINT
    explicit ParamPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// c * s^k
    static ParamPoly monomial(Rational c, int k);
    static ParamPoly variable() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    Rational constant() const { return coeff(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& s) const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { *this = *this + o; return *this; }
    ParamPoly& operator-=(const ParamPoly& o) { *this = *this - o; return *this; }
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    bool operator==(const ParamPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    /// Euclidean division; both parts exact over Q.
    std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& d) const;
    /// Monic gcd over Q.
    static ParamPoly gcd(ParamPoly a, ParamPoly b);

    ParamPoly scaled(const Rational& k) const;
    /// Divides by the leading coefficient.
    ParamPoly monic() const;
    /// Smallest positive rational multiple with integer coprime coefficients.
    ParamPoly primitive() const;

    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Element of the fraction field Q(s): num/den with gcd 1 and monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}       // NOLINT
    RatFunc(ParamPoly p) : num_(std::move(p)), den_(Rational(1)) {} // NOLINT
    RatFunc(ParamPoly num, ParamPoly den);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// The polynomial value; throws when the denominator is non-trivial.
    ParamPoly as_polynomial() const;

    /// Exact evaluation; throws InputError when the denominator vanishes at s.
    Rational eval(const Rational& s) const;

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;

    std::string str(const std::string& var = "s") const;

private:
    void normalize();
    ParamPoly num_, den_;
};

} // namespace modlat
