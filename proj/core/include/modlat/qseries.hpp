#pragma once

#include <functional>
#include <string>
#include <vector>

#include "modlat/errors.hpp"
#include "modlat/rational.hpp"

namespace modlat {

/// Truncated formal expansion in q = e^{pi i z}: exact coefficients for every
/// exponent < precision(), and a hard error beyond -- never a silent zero.
/// Ring operations propagate precision as the largest provably-correct range
/// (valuations shift the bound on products).
template <class K>
class QSeries {
public:
    QSeries() : prec_(0) {}
    explicit QSeries(long precision) : prec_(check_prec(precision)) {}
    QSeries(std::vector<K> coeffs, long precision)
        : c_(std::move(coeffs)), prec_(check_prec(precision)) {
        if (static_cast<long>(c_.size()) > prec_)
            throw InputError("QSeries: stored exponents exceed precision");
        shrink();
    }

    long precision() const { return prec_; }

    const K& coeff(long e) const {
        if (e < 0) throw InputError("QSeries: negative exponent");
        if (e >= prec_)
            throw PrecisionError("QSeries: coefficient of q^" + std::to_string(e) +
                                 " requested beyond precision O(q^" +
                                 std::to_string(prec_) + ")");
        return e < static_cast<long>(c_.size()) ? c_[static_cast<size_t>(e)] : zero_;
    }

    void set_coeff(long e, K v) {
        if (e < 0 || e >= prec_) throw InputError("QSeries: exponent out of range");
        if (static_cast<long>(c_.size()) <= e) c_.resize(static_cast<size_t>(e) + 1, K(0));
        c_[static_cast<size_t>(e)] = std::move(v);
        shrink();
    }

    /// Smallest exponent with nonzero coefficient; precision() when the series
    /// vanishes on its whole tracked range.
    long valuation() const {
        for (long e = 0; e < static_cast<long>(c_.size()); ++e)
            if (!(c_[static_cast<size_t>(e)] == K(0))) return e;
        return prec_;
    }

    bool is_zero() const { return valuation() == prec_; }

    /// True when every tracked odd exponent has zero coefficient (theta series
    /// of even lattices).
    bool even_support() const {
        for (long e = 1; e < static_cast<long>(c_.size()); e += 2)
            if (!(c_[static_cast<size_t>(e)] == K(0))) return false;
        return true;
    }

    QSeries truncated(long new_prec) const {
        if (new_prec > prec_)
            throw PrecisionError("QSeries: cannot extend precision by truncation");
        std::vector<K> c = c_;
        if (static_cast<long>(c.size()) > new_prec) c.resize(static_cast<size_t>(new_prec));
        return QSeries(std::move(c), new_prec);
    }

    QSeries operator-() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(K(0) - x);
        return QSeries(std::move(c), prec_);
    }

    QSeries operator+(const QSeries& o) const {
        long p = std::min(prec_, o.prec_);
        std::vector<K> c(static_cast<size_t>(std::min<long>(
                             p, std::max<long>(c_.size(), o.c_.size()))), K(0));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] += o.c_[i];
        }
        return QSeries(std::move(c), p);
    }

    QSeries operator-(const QSeries& o) const { return *this + (-o); }

    QSeries operator*(const QSeries& o) const {
        // min valid range: a term q^e of the product needs every split
        // e = i + j with i, j inside the factors' ranges (shifted by valuation).
        long p = std::min(prec_ + o.valuation(), o.prec_ + valuation());
        p = std::min(p, prec_ + o.prec_);  // both empty-zero case guard
        std::vector<K> c(static_cast<size_t>(p), K(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == K(0)) continue;
            for (size_t j = 0; j < o.c_.size() && static_cast<long>(i + j) < p; ++j) {
                if (o.c_[j] == K(0)) continue;
                c[i + j] += c_[i] * o.c_[j];
            }
        }
        return QSeries(std::move(c), p);
    }

    QSeries scaled(const K& k) const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(x * k);
        return QSeries(std::move(c), prec_);
    }

    /// Multiplication by q^k.
    QSeries shifted(long k) const {
        std::vector<K> c(static_cast<size_t>(k), K(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return QSeries(std::move(c), prec_ + k);
    }

    QSeries pow(unsigned long e) const {
        QSeries base = *this;
        QSeries acc = one(prec_ + static_cast<long>(e) * valuation());
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    static QSeries one(long precision) {
        std::vector<K> c{K(1)};
        return QSeries(std::move(c), precision);
    }

    template <class K2>
    QSeries<K2> map(const std::function<K2(const K&)>& fn) const {
        std::vector<K2> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(fn(x));
        return QSeries<K2>(std::move(c), prec_);
    }

    // Standard-index view for Hecke arithmetic: k <-> q^{2k}.
    long std_precision() const { return (prec_ + 1) / 2; }
    const K& std_coeff(long k) const { return coeff(2 * k); }

private:
    static long check_prec(long p) {
        if (p < 0) throw InputError("QSeries: negative precision");
        return p;
    }
    void shrink() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    static const K zero_;
    std::vector<K> c_;
    long prec_;
};

template <class K>
const K QSeries<K>::zero_ = K(0);

using RationalSeries = QSeries<Rational>;

} // namespace modlat
