#include "modlat/zonal.hpp"

namespace modlat {

// Delta[(x,x')^a (x,x)^b] = a(a-1) (x',x') (x,x')^{a-2} (x,x)^b
//                         + 2b(n + 2a + 2b - 2) (x,x')^a (x,x)^{b-1}.
// Applying this to P = sum_i c_i (x,x')^{d-2i} (x',x')^i (x,x)^i and
// collecting the (x,x')^{d-2-2j} ((x',x')(x,x))^j (x',x') term gives the
// recurrence solved here.

std::vector<Rational> zonal_laplacian(const ZonalCoeffs& z) {
    std::vector<Rational> lap;
    const long n = z.n, d = z.d;
    for (long j = 0; j + 1 < static_cast<long>(z.c.size()); ++j) {
        Rational from_inner = z.c[static_cast<size_t>(j)] *
                              Rational((d - 2 * j) * (d - 2 * j - 1));
        Rational from_radial = z.c[static_cast<size_t>(j) + 1] *
                               Rational(2 * (j + 1) * (n + 2 * d - 2 * j - 4));
        lap.push_back(from_inner + from_radial);
    }
    return lap;
}

ZonalCoeffs zonal_coeffs(int n, int d) {
    if (n < 2) throw InputError("zonal_coeffs: dimension must be >= 2");
    if (d < 2 || d > 12 || d % 2 != 0)
        throw InputError("zonal_coeffs: degree must be even, 2 <= d <= 12");
    ZonalCoeffs z;
    z.n = n;
    z.d = d;
    z.c.push_back(Rational(1));
    for (int j = 0; j < d / 2; ++j) {
        Rational num((d - 2 * j) * (d - 2 * j - 1));
        Rational den(2 * (j + 1) * (n + 2 * d - 2 * j - 4));
        z.c.push_back(-z.c.back() * num / den);
    }
    for (const Rational& residual : zonal_laplacian(z))
        if (!residual.is_zero())
            throw std::logic_error("zonal_coeffs: Laplacian residual nonzero");
    return z;
}

Rational zonal_eval(const ZonalCoeffs& z, const InnerProductPoint& pt) {
    if (pt.m.sign() < 0 || pt.s.sign() < 0)
        throw InputError("zonal_eval: norms must be nonnegative");
    if (pt.u > pt.m * pt.s)
        throw InputError("zonal_eval: (x,x')^2 exceeds (x,x)(x',x')");
    Rational sm = pt.s * pt.m;
    Rational acc(0);
    for (size_t i = 0; i < z.c.size(); ++i) {
        unsigned long upow = static_cast<unsigned long>(z.d - 2 * static_cast<long>(i)) / 2;
        acc += z.c[i] * pt.u.pow(upow) * sm.pow(static_cast<unsigned long>(i));
    }
    return acc;
}

} // namespace modlat
