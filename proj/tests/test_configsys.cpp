#include <doctest.h>

#include "modlat/configsys.hpp"
#include "modlat/lattice.hpp"
#include "modlat/series_catalog.hpp"
#include "modlat/zonal.hpp"

using namespace modlat;

namespace {

ParamPoly poly(std::initializer_list<long> coeffs_ascending) {
    std::vector<Rational> c;
    for (long v : coeffs_ascending) c.emplace_back(v);
    return ParamPoly(std::move(c));
}

} // namespace

TEST_CASE("case specs recompute every shell size and ratio") {
    CaseSpec c32 = case_spec(32);
    CHECK(c32.m0 == 6);
    CHECK(c32.t == 3);
    CHECK(c32.d_low == 8);
    CHECK_FALSE(c32.two_shell);
    CHECK(c32.a_m0 == Rational(261120));
    CHECK(c32.s_max == 48);

    CaseSpec c48 = case_spec(48);
    CHECK(c48.m0 == 8);
    CHECK(c48.a_m0 == Rational(9828000));
    CHECK(c48.s_max == 96);

    CaseSpec c24 = case_spec(24);
    CHECK(c24.m0 == 4);
    CHECK(c24.t == 1);
    CHECK(c24.d_low == 4);
    CHECK(c24.two_shell);
    CHECK(c24.a_m0 == Rational(3024));
    CHECK(c24.a_m0p2 == Rational(258048));
    CHECK(c24.ratio_low == Rational(-16));
    CHECK(c24.ratio_high == Rational(8));

    CaseSpec c36 = case_spec(36);
    CHECK(c36.m0 == 6);
    CHECK(c36.t == 2);
    CHECK(c36.a_m0 == Rational(164160));
    CHECK(c36.a_m0p2 == Rational(21976920));
    CHECK(c36.ratio_low == Rational(-24));
    CHECK(c36.ratio_high == Rational(0));

    CHECK(c32.dual_sign(8) == 1);
    CHECK(c32.dual_sign(10) == -1);
    CHECK(c36.dual_sign(6) == -1);
    CHECK(c36.dual_sign(8) == 1);
    CHECK(c24.dual_sign(4) == 1);
    CHECK(c24.dual_sign(6) == -1);
}

TEST_CASE("index bounds") {
    // lattice shells with a coset-minimal x': J = shell/2
    CHECK(shell_index_bound(6, 10, 10) == 3);
    CHECK(shell_index_bound(8, 14, 14) == 4);
    // rank 32 dual shell at s=8 against min(L)=6
    CHECK(dual_index_bound(3, 8, 6) == 3);
    // rank 48 claim 2: s in {10,12}, lower 6
    CHECK(dual_index_bound(4, 10, 6) == 5);
    CHECK(dual_index_bound(4, 12, 6) == 5);
    // rank 48 claim 4: lower = s
    for (long s : {14L, 16L, 18L}) CHECK(dual_index_bound(4, s, s) == 4);
}

TEST_CASE("moment equations match the closed-form right-hand sides") {
    CaseSpec c32 = case_spec(32);
    // sum j^2 M_j = 6 s a_6 / 32
    ParamPoly rhs1 = moment_rhs_poly(32, c32.a_m0, 6, 1);
    CHECK(rhs1 == ParamPoly::monomial(Rational(6) * Rational(261120) / Rational(32), 1));

    CaseSpec c48 = case_spec(48);
    // sum j^6 M_j = 8^3 s^3 * 15 a_8 / (48*50*52)
    ParamPoly rhs3 = moment_rhs_poly(48, c48.a_m0, 8, 3);
    Rational expect = Rational(512) * Rational(15) * Rational(9828000) /
                      (Rational(48) * Rational(50) * Rational(52));
    CHECK(rhs3 == ParamPoly::monomial(expect, 3));

    ConfigSystem sys = bounding_system(c48);
    CHECK(sys.eqs[0].rhs == ParamPoly(Rational(9828000)));  // cardinality
}

TEST_CASE("rank 32: symbolic cubics, survivors, unique solution") {
    CaseSpec cs = case_spec(32);
    ConfigSystem sys = bounding_system(cs);
    CHECK(sys.vars == std::vector<std::string>{"M0", "M1", "M2", "M3"});

    ConfigSolution sym = solve_config_symbolic(sys);
    REQUIRE(sym.outcome == SolveOutcome::Unique);
    CHECK(sym.parametric.particular[0].as_polynomial() ==
          poly({261120, -66640, 10080, -600}));
    CHECK(sym.parametric.particular[1].as_polynomial() == poly({0, 73440, -14040, 900}));
    CHECK(sym.parametric.particular[2].as_polynomial() == poly({0, -7344, 4320, -360}));
    CHECK(sym.parametric.particular[3].as_polynomial() == poly({0, 544, -360, 60}));

    SRange range = feasible_s_range(cs, sys);
    CHECK(range.survivors == std::vector<long>{8});

    ConfigSolution at8 = solve_config_at(sys, Rational(8));
    REQUIRE(at8.outcome == SolveOutcome::Unique);
    CHECK(at8.numeric.particular ==
          std::vector<Rational>{Rational(65920), Rational(149760), Rational(33408),
                                Rational(12032)});

    // symbolic evaluation agrees with the numeric solve at every surviving s
    for (size_t i = 0; i < 4; ++i)
        CHECK(sym.parametric.particular[i].eval(Rational(8)) == at8.numeric.particular[i]);
}

TEST_CASE("rank 48: claim-1 family and claim-3 unique system") {
    CaseSpec cs = case_spec(48);
    ConfigSystem sys = bounding_system(cs);
    ConfigSolution sym = solve_config_symbolic(sys);
    REQUIRE(sym.outcome == SolveOutcome::Parametrized);
    REQUIRE(sym.parametric.free_cols == std::vector<size_t>{4});
    CHECK(sym.parametric.particular[0].as_polynomial() ==
          poly({9828000, -2229500, 305760, -16800}));
    CHECK(sym.parametric.free_coeff[0][0] == RatFunc(Rational(35)));
    CHECK(sym.parametric.particular[1].as_polynomial() == poly({0, 2457000, -425880, 25200}));
    CHECK(sym.parametric.free_coeff[1][0] == RatFunc(Rational(-56)));
    CHECK(sym.parametric.particular[2].as_polynomial() == poly({0, -245700, 131040, -10080}));
    CHECK(sym.parametric.free_coeff[2][0] == RatFunc(Rational(28)));
    CHECK(sym.parametric.particular[3].as_polynomial() == poly({0, 18200, -10920, 1680}));
    CHECK(sym.parametric.free_coeff[3][0] == RatFunc(Rational(-8)));

    SRange range = feasible_s_range(cs, sys, {"M2", "M3", "M4"});
    CHECK(range.survivors == std::vector<long>{10, 12, 14, 16, 18});
    // full nonnegativity also rules out s = 18 (M0 against M3)
    SRange full = feasible_s_range(cs, sys);
    CHECK(full.survivors == std::vector<long>{10, 12, 14, 16});

    // claim 3: L_8 counts against v in L^#_4 with the top count zeroed
    ConfigSystem c3;
    c3.n = 48;
    ShellBlock b;
    b.prefix = "M'";
    b.count = cs.a_m0;
    b.moment_norm = b.zonal_norm = 8;
    b.max_j = dual_index_bound(4, 8, 8);
    REQUIRE(b.max_j == 4);
    size_t bi = c3.add_block(b);
    c3.add_moment_equations(c3.blocks[bi], 3);
    ConfigSolution sol = solve_config_at(c3, Rational(4), {{"M'4", Rational(0)}});
    REQUIRE(sol.outcome == SolveOutcome::Unique);
    CHECK(sol.numeric.particular ==
          std::vector<Rational>{Rational(4726960), Rational(4626720), Rational(468720),
                                Rational(5600), Rational(0)});
}

TEST_CASE("rank 48 claim 2: infeasible at s in {10, 12} with replayable traces") {
    CaseSpec cs = case_spec(48);
    for (long s : {10L, 12L}) {
        ConfigSystem sys;
        sys.n = 48;
        ShellBlock m;
        m.prefix = "M";
        m.count = cs.a_m0;
        m.moment_norm = m.zonal_norm = 8;
        m.max_j = 4;
        size_t mi = sys.add_block(m);
        ShellBlock d;
        d.prefix = "M'";
        d.count = cs.a_m0;
        d.moment_norm = 4;
        d.zonal_norm = 8;
        d.dual = true;
        d.max_j = dual_index_bound(4, s, 6);
        size_t di = sys.add_block(d);
        sys.add_moment_equations(sys.blocks[mi], 3);
        sys.add_moment_equations(sys.blocks[di], 3);
        sys.add_dual_cross_equation(cs, sys.blocks[mi], sys.blocks[di], 8);
        sys.add_dual_cross_equation(cs, sys.blocks[mi], sys.blocks[di], 10);
        CHECK(sys.eqs.size() == 10);
        CHECK(sys.vars.size() == 11);

        SVerdict v = analyze_s(sys, s);
        CHECK_FALSE(v.feasible);
        REQUIRE(v.fm.contradiction.has_value());
        std::vector<AffineConstraint> originals(
            v.fm.all.begin(), v.fm.all.begin() + (v.fm.all.size() - v.fm.trace.size()));
        CHECK(fm_replay_infeasible(originals, v.fm.trace));
    }
}

TEST_CASE("rank 24: one-parameter family, survivor, pinned solution") {
    CaseSpec cs = case_spec(24);
    ConfigSystem sys = bounding_system(cs);
    CHECK(sys.vars == std::vector<std::string>{"M0", "M1", "M2", "N0", "N1", "N2", "N3"});

    ConfigSolution sym = solve_config_symbolic(sys);
    REQUIRE(sym.outcome == SolveOutcome::Parametrized);
    REQUIRE(sym.parametric.free_cols == std::vector<size_t>{6});  // N3

    ParamPoly s = ParamPoly::variable();
    // M1 = -336 (s-4) s + 2 N3 / (s-2)
    CHECK(sym.parametric.particular[1] == RatFunc(poly({0, 1344, -336})));
    CHECK(sym.parametric.free_coeff[1][0] ==
          RatFunc(ParamPoly(Rational(2)), s - ParamPoly(Rational(2))));
    // N0 = 8064 (32 + (s-9) s) + 2 (22 - 5 s) N3 / (s-2)
    CHECK(sym.parametric.particular[3] == RatFunc(poly({258048, -72576, 8064})));
    CHECK(sym.parametric.free_coeff[3][0] ==
          RatFunc(poly({44, -10}), s - ParamPoly(Rational(2))));

    SRange range = feasible_s_range(cs, sys);
    REQUIRE(range.survivors == std::vector<long>{8});
    const SVerdict* v8 = nullptr;
    for (const auto& v : range.verdicts)
        if (v.s == 8) v8 = &v;
    REQUIRE(v8 != nullptr);
    REQUIRE(v8->pinned);
    CHECK(v8->values ==
          std::vector<Rational>{Rational(2016), Rational(0), Rational(1008), Rational(0),
                                Rational(225792), Rational(0), Rational(32256)});
}

TEST_CASE("rank 36: one-parameter family, survivor, parity closure") {
    CaseSpec cs = case_spec(36);
    ConfigSystem sys = bounding_system(cs);
    ConfigSolution sym = solve_config_symbolic(sys);
    REQUIRE(sym.outcome == SolveOutcome::Parametrized);
    REQUIRE(sym.parametric.free_cols == std::vector<size_t>{8});  // N4

    ParamPoly s = ParamPoly::variable();
    // M2 = -9 s (1425 - 750 s + 86 s^2) + 3 N4 / (s-3)
    CHECK(sym.parametric.particular[2] == RatFunc(poly({0, -12825, 6750, -774})));
    CHECK(sym.parametric.free_coeff[2][0] ==
          RatFunc(ParamPoly(Rational(3)), s - ParamPoly(Rational(3))));
    // N3 = 1020 s (19 + 6 (s-4) s) + 4 (9 - 2 s) N4 / (s-3)
    CHECK(sym.parametric.particular[7] == RatFunc(poly({0, 19380, -24480, 6120})));
    CHECK(sym.parametric.free_coeff[7][0] ==
          RatFunc(poly({36, -8}), s - ParamPoly(Rational(3))));

    SRange range = feasible_s_range(cs, sys);
    CHECK(range.survivors == std::vector<long>{10});

    // closure system at s = 10: dual counts against L^#_3
    ConfigSystem close;
    close.n = 36;
    ShellBlock m;
    m.prefix = "M";
    m.count = cs.a_m0;
    m.moment_norm = m.zonal_norm = 6;
    m.max_j = 3;
    size_t mi = close.add_block(m);
    ShellBlock d;
    d.prefix = "M'";
    d.count = cs.a_m0;
    d.moment_norm = 3;
    d.zonal_norm = 6;
    d.dual = true;
    d.max_j = dual_index_bound(3, 10, 10);
    REQUIRE(d.max_j == 3);
    size_t di = close.add_block(d);
    close.add_moment_equations(close.blocks[mi], 2);
    close.add_moment_equations(close.blocks[di], 2);
    close.add_dual_cross_equation(cs, close.blocks[mi], close.blocks[di], 6);
    close.add_dual_cross_equation(cs, close.blocks[mi], close.blocks[di], 8);
    ConfigSolution sol = solve_config_at(close, Rational(10));
    REQUIRE(sol.outcome == SolveOutcome::Unique);
    CHECK(sol.numeric.particular[7] == Rational(575));  // M'3, odd
    CHECK_FALSE(sol.numeric.particular[7].is_even_integer());
}

TEST_CASE("boundary pairing equation guards") {
    CaseSpec cs = case_spec(24);
    ConfigSystem sys;
    sys.n = 24;
    ShellBlock m;
    m.prefix = "M";
    m.count = cs.a_m0;
    m.moment_norm = m.zonal_norm = 4;
    m.max_j = 2;
    sys.add_block(m);
    ShellBlock nb;
    nb.prefix = "N";
    nb.count = cs.a_m0p2;
    nb.moment_norm = nb.zonal_norm = 6;
    nb.max_j = 4;
    nb.self_in_shell = true;
    sys.add_block(nb);
    // 6 + 6 - 2*4 = 4 = m0: fires
    sys.add_boundary_pair_equation(sys.blocks[1], sys.blocks[0], 6, 4);
    CHECK(sys.eqs.back().label == "boundary pairing N4 = M2");
    // with s = 8 the boundary lands at norm 6 != 4: must refuse
    CHECK_THROWS_AS(sys.add_boundary_pair_equation(sys.blocks[1], sys.blocks[0], 8, 4),
                    InputError);
}

TEST_CASE("emitted equations hold on enumerated d4 data") {
    // moment equations evaluated on true configuration numbers of D4
    // (a 5-design shell) with a norm-4 direction: x' = (0,0,1,1)
    Lattice d4 = Lattice::builtin("d4");
    Coord xp{0, 0, 1, 1};
    REQUIRE(d4.norm_of(xp) == Rational(4));
    auto hist = config_count(d4, xp, 2);

    ConfigSystem sys;
    sys.n = 4;
    ShellBlock b;
    b.prefix = "M";
    b.count = Rational(24);
    b.moment_norm = b.zonal_norm = 2;
    b.max_j = static_cast<long>(hist.size()) - 1;
    size_t bi = sys.add_block(b);
    sys.add_moment_equations(sys.blocks[bi], 2);
    for (const auto& eq : sys.eqs) {
        Rational lhs(0);
        for (size_t i = 0; i < hist.size(); ++i)
            lhs += eq.lhs[i].eval(Rational(4)) * Rational(hist[i]);
        CHECK(lhs == eq.rhs.eval(Rational(4)));
    }
}

TEST_CASE("rank 36 degree-8 identity: the L_8 zonal sum vanishes") {
    // the high-degree source series thetaD4 * delta16^3 has zero q^8
    // coefficient, so the degree-8 zonal sum over L_8 must vanish; checked on
    // the recomputed x'-in-L_8 configuration row (self pairs included)
    CaseSpec cs = case_spec(36);
    REQUIRE(cs.ratio_high == Rational(0));
    ZonalCoeffs z8 = zonal_coeffs(36, 8);
    const long s = 8;
    std::vector<Rational> n_row{Rational(6416070), Rational(9953920), Rational(4439040),
                                Rational(1051968), Rational(111760), Rational(4160)};
    Rational sum(0);
    for (size_t j = 0; j < n_row.size(); ++j)
        sum += n_row[j] *
               zonal_eval(z8, {Rational(8), Rational(s),
                               Rational(static_cast<long>(j * j))});
    sum += Rational(2) * zonal_eval(z8, {Rational(8), Rational(s), Rational(s * s)});
    CHECK(sum == Rational(0));
}
