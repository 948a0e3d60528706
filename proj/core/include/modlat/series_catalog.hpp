#pragma once

#include <string>

#include "modlat/qseries.hpp"

namespace modlat {

/// The named level-2 generators and extremal theta series, all in the
/// q = e^{pi i z} convention (even lattices populate even exponents only).
enum class SeriesTag { Delta16, ThetaD4, Phi24, BigDelta1, BigDelta2, Extremal };

struct SeriesId {
    SeriesTag tag;
    int rank = 0;  // used by Extremal only

    int weight() const;
    std::string name() const;
    /// Parses "delta16", "thetaD4", "phi24", "bigDelta1", "bigDelta2", "extremal:<n>".
    static SeriesId parse(const std::string& text);
};

/// prod_{n >= 1} (1 - q^{k n}), pentagonal-number sparse expansion.
RationalSeries eta_block(long k, long precision);

/// q^2 prod (1-q^{2n})^8 (1-q^{4n})^8  --  leading term q^2, weight 8.
RationalSeries delta16(long precision);

/// Theta series of the D4 root lattice: 1 + 24 q^2 + 24 q^4 + ...  (weight 2).
RationalSeries theta_d4(long precision);

/// Weight-12 form q^2 - 88 q^4 + ... realized as Delta(z) - 64 Delta(2z).
RationalSeries phi24(long precision);

/// Delta(z) = q^2 prod (1-q^{2n})^24 and Delta(2z) = q^4 prod (1-q^{4n})^24.
RationalSeries big_delta_1(long precision);
RationalSeries big_delta_2(long precision);

/// Unique weight-n/2 combination of thetaD4^a delta16^b (2a + 8b = n/2) with
/// constant term 1 and vanishing coefficients at q^2,...,q^{2 floor(n/16)}.
/// Throws when the defining system is not uniquely solvable.
RationalSeries extremal_theta(int n, long precision);

RationalSeries series_by_id(const SeriesId& id, long precision);

/// Series text format: one "exponent numerator/denominator" line per nonzero
/// coefficient, ascending, closed by "O(q^N)". Lossless round trip.
std::string series_to_text(const RationalSeries& f);
RationalSeries series_from_text(const std::string& text);

} // namespace modlat
