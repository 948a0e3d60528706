#pragma once

#include <vector>

#include "modlat/rational.hpp"

namespace modlat {

/// Coefficients of the degree-d zonal harmonic with pole x' in dimension n:
///   P(x) = sum_i c[i] (x,x')^{d-2i} ((x',x')(x,x))^i,   c[0] = 1.
struct ZonalCoeffs {
    int n = 0;
    int d = 0;
    std::vector<Rational> c;
};

/// Evaluation data: m = (x,x), s = (x',x'), u = (x,x')^2. Only these three
/// scalars enter, which is what makes the exact sqrt(2)-rescaling of dual
/// vectors work (u doubles, m stays put).
struct InnerProductPoint {
    Rational m;
    Rational s;
    Rational u;
};

/// Unique harmonic coefficient vector with c[0] = 1, from the termwise
/// Laplacian recurrence. Valid for n >= 2 and even 2 <= d <= 12.
ZonalCoeffs zonal_coeffs(int n, int d);

/// Termwise Laplacian of the coefficient vector: entry j is the coefficient
/// of (x,x')^{d-2-2j} ((x',x')(x,x))^j (x',x') in Delta P. All-zero output
/// certifies harmonicity.
std::vector<Rational> zonal_laplacian(const ZonalCoeffs& z);

/// Exact value sum_i c[i] u^{(d-2i)/2} (s m)^i. Requires u <= m*s (Cauchy-
/// Schwarz) and m, s >= 0.
Rational zonal_eval(const ZonalCoeffs& z, const InnerProductPoint& pt);

} // namespace modlat
