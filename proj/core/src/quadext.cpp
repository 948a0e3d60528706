#include "modlat/quadext.hpp"

namespace modlat {

QuadExt::QuadExt(Rational a, Rational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_.is_zero()) {
        d_ = 0;
    } else if (d_ <= 1) {
        throw InputError("QuadExt: radicand must be a squarefree integer > 1");
    }
}

long QuadExt::merge_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw InputError("QuadExt: cannot combine distinct radicands sqrt(" +
                     std::to_string(x.d_) + ") and sqrt(" + std::to_string(y.d_) + ")");
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    long d = merge_radicand(*this, o);
    return QuadExt(a_ + o.a_, b_ + o.b_, d);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    long d = merge_radicand(*this, o);
    return QuadExt(a_ * o.a_ + Rational(d) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d);
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw InputError("QuadExt: inverse of zero");
    Rational n = field_norm();
    // a^2 - d b^2 = 0 with d squarefree and b != 0 would make sqrt(d) rational.
    return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    return *this * o.inverse();
}

bool QuadExt::operator==(const QuadExt& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    return b_.is_zero() || d_ == o.d_;
}

std::string QuadExt::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
    if (n <= 0) throw InputError("squarefree_decompose: positive input required");
    Integer root = 1, sqfree = 1, rem = n;
    // strip factor p = 2 then odd trial divisors
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
            rem /= p;
            ++e;
        }
        if (e == 0) return;
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / 2);
        root *= pe;
        if (e % 2) sqfree *= p;
    };
    strip(2);
    Integer p = 3;
    while (p * p <= rem) {
        strip(p);
        p += 2;
    }
    if (rem > 1) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
            root *= r;
        } else {
            sqfree *= rem;  // no factor <= sqrt(rem), so rem is prime
        }
    }
    return {root, sqfree};
}

QuadExt QuadExt::sqrt_of(const Rational& x) {
    if (x.sign() < 0) throw InputError("QuadExt::sqrt_of: negative radicand");
    if (x.is_zero()) return QuadExt(Rational(0));
    // x = p/q, sqrt(x) = sqrt(p*q)/q
    Integer pq = x.numerator() * x.denominator();
    auto [root, sqfree] = squarefree_decompose(pq);
    Rational r(root, x.denominator());
    if (sqfree == 1) return QuadExt(r);
    if (!sqfree.fits_slong_p())
        throw InputError("QuadExt::sqrt_of: squarefree part exceeds long range");
    return QuadExt(Rational(0), r, sqfree.get_si());
}

} // namespace modlat
