#include <doctest.h>

#include <random>

#include "modlat/zonal.hpp"

using namespace modlat;

namespace {

std::vector<Rational> frac(std::initializer_list<std::pair<long, long>> v) {
    std::vector<Rational> out;
    for (auto [p, q] : v) out.emplace_back(p, q);
    return out;
}

} // namespace

TEST_CASE("degree-2 coefficients are (1, -1/n)") {
    for (int n : {2, 4, 24, 32, 48}) {
        ZonalCoeffs z = zonal_coeffs(n, 2);
        CHECK(z.c == frac({{1, 1}, {-1, n}}));
    }
}

TEST_CASE("golden coefficient vectors for the four proofs") {
    CHECK(zonal_coeffs(32, 8).c ==
          frac({{1, 1}, {-7, 11}, {5, 44}, {-1, 176}, {1, 26752}}));
    CHECK(zonal_coeffs(24, 4).c == frac({{1, 1}, {-3, 14}, {3, 728}}));
    CHECK(zonal_coeffs(24, 6).c == frac({{1, 1}, {-15, 32}, {3, 64}, {-1, 1792}}));
    CHECK(zonal_coeffs(36, 6).c == frac({{1, 1}, {-15, 44}, {15, 616}, {-1, 4928}}));
    CHECK(zonal_coeffs(36, 8).c ==
          frac({{1, 1}, {-7, 12}, {35, 368}, {-35, 8096}, {5, 194304}}));
    CHECK(zonal_coeffs(48, 8).c ==
          frac({{1, 1}, {-7, 15}, {7, 116}, {-1, 464}, {1, 100224}}));
    CHECK(zonal_coeffs(48, 10).c ==
          frac({{1, 1}, {-45, 64}, {315, 1984}, {-105, 7936}, {315, 920576},
                {-9, 7364608}}));
}

TEST_CASE("harmonicity certified by the termwise Laplacian") {
    for (int n : {4, 16, 24, 32, 36, 48}) {
        for (int d = 2; d <= 12; d += 2) {
            ZonalCoeffs z = zonal_coeffs(n, d);
            for (const Rational& r : zonal_laplacian(z)) CHECK(r.is_zero());
        }
    }
    // a perturbed vector is not harmonic
    ZonalCoeffs bad = zonal_coeffs(32, 8);
    bad.c[2] += Rational(1, 7);
    bool nonzero = false;
    for (const Rational& r : zonal_laplacian(bad)) nonzero = nonzero || !r.is_zero();
    CHECK(nonzero);
}

TEST_CASE("designed root of the degree-2 zonal") {
    for (int n : {4, 24, 48}) {
        ZonalCoeffs z = zonal_coeffs(n, 2);
        Rational m(6), s(8);
        CHECK(zonal_eval(z, {m, s, s * m / Rational(n)}) == Rational(0));
    }
}

TEST_CASE("homogeneity under the sqrt(2) rescaling law") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 * (1 + static_cast<int>(rng() % 12));
        int d = 2 * (1 + static_cast<int>(rng() % 5));
        ZonalCoeffs z = zonal_coeffs(n, d);
        Rational m(static_cast<long>(rng() % 8) + 1);
        Rational s(static_cast<long>(rng() % 8) + 1);
        // u in [0, m s], rational
        Rational u = m * s * Rational(static_cast<long>(rng() % 5), 7);
        Rational lam(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3) + 1);
        Rational lam2 = lam * lam;
        Rational lhs = zonal_eval(z, {lam2 * m, s, lam2 * u});
        Rational rhs = lam.pow(static_cast<unsigned long>(d)) * zonal_eval(z, {m, s, u});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(zonal_coeffs(32, 7), InputError);
    CHECK_THROWS_AS(zonal_coeffs(1, 4), InputError);
    CHECK_THROWS_AS(zonal_coeffs(32, 14), InputError);
    ZonalCoeffs z = zonal_coeffs(8, 4);
    CHECK_THROWS_AS(zonal_eval(z, {Rational(1), Rational(1), Rational(2)}), InputError);
}
