#include "modlat/parampoly.hpp"

#include <algorithm>

namespace modlat {

void ParamPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ParamPoly ParamPoly::monomial(Rational c, int k) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return ParamPoly(std::move(v));
}

Rational ParamPoly::eval(const Rational& s) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

ParamPoly ParamPoly::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(-x);
    return ParamPoly(std::move(v));
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return ParamPoly(std::move(v));
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    if (is_zero() || o.is_zero()) return ParamPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return ParamPoly(std::move(v));
}

std::pair<ParamPoly, ParamPoly> ParamPoly::divmod(const ParamPoly& d) const {
    if (d.is_zero()) throw InputError("ParamPoly: division by zero polynomial");
    ParamPoly rem = *this;
    std::vector<Rational> q(
        std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rational f = rem.leading() / d.leading();
        q[static_cast<size_t>(k)] = f;
        rem -= d * monomial(f, k);
    }
    return {ParamPoly(std::move(q)), rem};
}

ParamPoly ParamPoly::gcd(ParamPoly a, ParamPoly b) {
    while (!b.is_zero()) {
        ParamPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

ParamPoly ParamPoly::scaled(const Rational& k) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * k);
    return ParamPoly(std::move(v));
}

ParamPoly ParamPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

ParamPoly ParamPoly::primitive() const {
    if (is_zero()) return *this;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& x : c_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
    }
    for (const auto& x : c_) {
        Integer n = x.numerator() * (den_lcm / x.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational k(den_lcm, num_gcd);
    if (leading().sign() < 0) k = -k;
    return scaled(k);
}

std::string ParamPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = (a == Rational(1)) && k > 0;
        if (!unit) out += a.str();
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

RatFunc::RatFunc(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InputError("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(Rational(1));
        return;
    }
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
        Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

ParamPoly RatFunc::as_polynomial() const {
    if (!is_polynomial()) throw InputError("RatFunc: value is not a polynomial");
    return num_.scaled(den_.constant().inverse());
}

Rational RatFunc::eval(const Rational& s) const {
    Rational d = den_.eval(s);
    if (d.is_zero())
        throw InputError("RatFunc: denominator vanishes at s = " + s.str());
    return num_.eval(s) / d;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw InputError("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return as_polynomial().str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

} // namespace modlat
