#include <doctest.h>

#include <random>

#include "modlat/configsys.hpp"
#include "modlat/lattice.hpp"
#include "modlat/series_catalog.hpp"

using namespace modlat;

namespace {

Coord random_direction(const Lattice& L, std::mt19937_64& rng) {
    Coord dir(static_cast<size_t>(L.dim()), 0);
    bool nonzero = false;
    while (!nonzero) {
        nonzero = false;
        for (auto& v : dir) {
            v = static_cast<long>(rng() % 5) - 2;
            nonzero = nonzero || v != 0;
        }
    }
    return dir;
}

} // namespace

TEST_CASE("gram loading and validation") {
    Lattice d4 = Lattice::builtin("d4");
    CHECK(d4.dim() == 4);
    CHECK(d4.is_even());
    CHECK(d4.determinant() == 4);
    Lattice rt = Lattice::from_text(d4.to_text());
    CHECK(rt.gram() == d4.gram());

    CHECK_THROWS_AS(Lattice::builtin("e8"), InputError);
    CHECK_THROWS_AS(Lattice::from_text("2\n1 0\n0"), InputError);
    CHECK_THROWS_AS(Lattice::from_text("2\n1 2\n3 4"), InputError);  // not symmetric
    CHECK_THROWS_AS(Lattice::from_text("2\n1 2\n2 1"), InputError);  // not posdef
}

TEST_CASE("d4 shells and theta agree with the series construction") {
    Lattice d4 = Lattice::builtin("d4");
    CHECK(shell_enum(d4, 2).vector_count() == 24);
    CHECK(shell_enum(d4, 1).vector_count() == 0);
    CHECK(shell_enum(d4, 4).vector_count() == 24);

    RationalSeries direct = theta_direct(d4, 14);
    RationalSeries series = theta_d4(14);
    for (long e = 0; e < 14; ++e) CHECK(direct.coeff(e) == series.coeff(e));
}

TEST_CASE("bw16 invariants and theta") {
    Lattice bw = Lattice::builtin("bw16");
    CHECK(bw.is_even());
    CHECK(bw.determinant() == 256);
    Shell l4 = shell_enum(bw, 4);
    CHECK(l4.vector_count() == 4320);

    RationalSeries direct = theta_direct(bw, 7);
    RationalSeries extremal = extremal_theta(16, 7);
    for (long e = 0; e < 7; ++e) CHECK(direct.coeff(e) == extremal.coeff(e));
}

TEST_CASE("enumeration completeness: counts match theta coefficients") {
    Lattice d4 = Lattice::builtin("d4");
    RationalSeries t = theta_direct(d4, 12);
    for (long m = 1; m < 12; ++m)
        CHECK(Rational(static_cast<long>(shell_enum(d4, m).vector_count())) == t.coeff(m));
}

TEST_CASE("modularity evidence") {
    CHECK(modularity_evidence(Lattice::builtin("d4"), 12).pass);
    CHECK(modularity_evidence(Lattice::builtin("bw16"), 7).pass);
    ModularityEvidence z4 = modularity_evidence(Lattice::builtin("z4"), 8);
    CHECK_FALSE(z4.pass);
    CHECK_FALSE(z4.even);
    CHECK(z4.first_mismatch == 1);  // theta_{Z4} has 8 q^1, the rescaled dual has 0
}

TEST_CASE("dual gram: 2 G^{-1} for the 2-modular test lattices") {
    for (const char* name : {"d4", "bw16"}) {
        Lattice L = Lattice::builtin(name);
        Lattice dual = L.rescaled_dual();
        CHECK(dual.is_even());
        CHECK(dual.determinant() == L.determinant());
    }
}

TEST_CASE("design defects vanish at the forced design strengths") {
    Lattice bw = Lattice::builtin("bw16");
    Shell bw4 = shell_enum(bw, 4);
    for (int degree : {2, 4, 6}) {
        DesignDefect d = design_defect(bw, bw4, degree, 4, 1);
        CHECK(d.max_abs == Rational(0));  // 7-design (n = 0 mod 16)
    }
    // degree 8 must NOT vanish identically (7-design, not 9-design)
    DesignDefect d8 = design_defect(bw, bw4, 8, 4, 1);
    CHECK(d8.max_abs > Rational(0));

    Lattice d4 = Lattice::builtin("d4");
    Shell d42 = shell_enum(d4, 2);
    for (int degree : {2, 4}) {
        DesignDefect d = design_defect(d4, d42, degree, 4, 1);
        CHECK(d.max_abs == Rational(0));  // 5-design (n = 4 mod 16)
    }
    DesignDefect d6 = design_defect(d4, d42, 6, 4, 1);
    CHECK(d6.max_abs > Rational(0));

    // negative control: unit vectors of Z^4 are not a 4-design
    Lattice z4 = Lattice::builtin("z4");
    Shell z41 = shell_enum(z4, 1);
    CHECK(z41.vector_count() == 8);
    DesignDefect dz = design_defect(z4, z41, 4, 4, 1);
    CHECK(dz.max_abs > Rational(0));
}

TEST_CASE("explicit harmonic quartic on the Z4 unit shell") {
    // P = x1^4 - 6 x1^2 x2^2 + x2^4 is harmonic; sum over {+-e_i} is 4
    Lattice z4 = Lattice::builtin("z4");
    Shell sh = shell_enum(z4, 1);
    Rational sum(0);
    for (const Coord& rep : sh.reps) {
        for (int sign : {1, -1}) {
            Rational x1(sign * rep[0]), x2(sign * rep[1]);
            sum += x1.pow(4) - Rational(6) * x1.pow(2) * x2.pow(2) + x2.pow(4);
        }
    }
    CHECK(sum == Rational(4));
}

TEST_CASE("configuration counts and moment identities") {
    Lattice d4 = Lattice::builtin("d4");
    Coord xp{1, 0, 0, 0};  // norm 2 (Gram diagonal)
    REQUIRE(d4.norm_of(xp) == Rational(2));
    auto hist = config_count(d4, xp, 2);
    Rational total(0), second(0);
    for (size_t j = 0; j < hist.size(); ++j) {
        total += Rational(hist[j]);
        second += Rational(static_cast<long>(j * j)) * Rational(hist[j]);
    }
    CHECK(total == Rational(24));
    CHECK(second == Rational(24));  // 2*2*24/4

    Lattice bw = Lattice::builtin("bw16");
    Coord xp16(16, 0);
    xp16[1] = 1;  // norm 4
    REQUIRE(bw.norm_of(xp16) == Rational(4));
    auto hist16 = config_count(bw, xp16, 4);
    Rational tot16(0), sec16(0);
    for (size_t j = 0; j < hist16.size(); ++j) {
        tot16 += Rational(hist16[j]);
        sec16 += Rational(static_cast<long>(j * j)) * Rational(hist16[j]);
    }
    CHECK(tot16 == Rational(4320));
    CHECK(sec16 == Rational(4320));  // 4*4*4320/16

    CHECK_THROWS_AS(config_count(d4, Coord{0, 0, 0, 0}, 2), InputError);
}

TEST_CASE("design moments hold on enumerated data for random directions") {
    std::mt19937_64 rng(5);
    struct Case {
        const char* name;
        long shell;
        int t;
    };
    for (const Case& c : {Case{"d4", 2, 2}, Case{"bw16", 4, 3}}) {
        Lattice L = Lattice::builtin(c.name);
        Rational a = theta_direct(L, c.shell + 1).coeff(c.shell);
        for (int trial = 0; trial < 3; ++trial) {
            Coord dir = random_direction(L, rng);
            Rational s = L.norm_of(dir);
            auto hist = config_count(L, dir, c.shell);
            for (int k = 1; k <= c.t; ++k) {
                Rational lhs(0);
                for (size_t j = 0; j < hist.size(); ++j)
                    lhs += Rational(static_cast<long>(j)).pow(2 * k) * Rational(hist[j]);
                Rational rhs = moment_rhs_poly(L.dim(), a, c.shell, k).eval(s);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("weighted-theta sign branches by direct enumeration") {
    std::mt19937_64 rng(9);
    // BW16: rank 16 = 16*1 + 0, branch signs + at degree 8, - at degree 10
    Lattice bw = Lattice::builtin("bw16");
    RationalSeries d16sq = delta16(8).pow(2);
    RationalSeries theta_d16sq = (theta_d4(8) * d16sq).truncated(8);
    for (int trial = 0; trial < 3; ++trial) {
        Coord x4 = shell_enum(bw, 4).reps[rng() % 2160];
        RationalSeries lhs8 = weighted_theta_direct(bw, x4, 8, 7);
        RationalSeries rhs8 = weighted_theta_rescaled_dual(bw, x4, 8, 7);
        RationalSeries lhs10 = weighted_theta_direct(bw, x4, 10, 7);
        RationalSeries rhs10 = weighted_theta_rescaled_dual(bw, x4, 10, 7);
        for (long e = 0; e < 7; ++e) {
            CHECK(lhs8.coeff(e) == rhs8.coeff(e));
            CHECK(lhs10.coeff(e) == -rhs10.coeff(e));
        }
        // proportionality to delta16^2 = q^4 - 16 q^6 + ... and theta*delta16^2
        CHECK(lhs8.coeff(6) * d16sq.coeff(4) == lhs8.coeff(4) * d16sq.coeff(6));
        CHECK(lhs10.coeff(6) * theta_d16sq.coeff(4) ==
              lhs10.coeff(4) * theta_d16sq.coeff(6));
    }
    // D4: rank 4 = 16*0 + 4, signs flip: - at degree 6, + at degree 8
    Lattice d4 = Lattice::builtin("d4");
    for (int trial = 0; trial < 3; ++trial) {
        Coord x2 = shell_enum(d4, 2).reps[rng() % 12];
        RationalSeries lhs6 = weighted_theta_direct(d4, x2, 6, 6);
        RationalSeries rhs6 = weighted_theta_rescaled_dual(d4, x2, 6, 6);
        RationalSeries lhs8 = weighted_theta_direct(d4, x2, 8, 6);
        RationalSeries rhs8 = weighted_theta_rescaled_dual(d4, x2, 8, 6);
        for (long e = 0; e < 6; ++e) {
            CHECK(lhs6.coeff(e) == -rhs6.coeff(e));
            CHECK(lhs8.coeff(e) == rhs8.coeff(e));
        }
    }
}

TEST_CASE("resource cap triggers an explicit error") {
    Lattice bw = Lattice::builtin("bw16");
    CHECK_THROWS_AS(shell_enum(bw, 8, 100), ResourceError);
}
