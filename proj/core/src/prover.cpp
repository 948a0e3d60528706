#include "modlat/prover.hpp"

#include <algorithm>

#include "modlat/series_catalog.hpp"

namespace modlat {

namespace {

constexpr const char* kEngineVersion = "modlat 1.0.0";

Json json_values(const std::vector<std::string>& vars, const std::vector<Rational>& vals) {
    Json out = Json::object();
    for (size_t i = 0; i < vars.size(); ++i) out[vars[i]] = vals[i].str();
    return out;
}

Json json_equations(const ConfigSystem& sys) {
    Json eqs = Json::array();
    for (const auto& eq : sys.eqs) {
        Json row = Json::object();
        row["label"] = eq.label;
        Json lhs = Json::object();
        for (size_t i = 0; i < sys.vars.size(); ++i)
            if (i < eq.lhs.size() && !eq.lhs[i].is_zero()) lhs[sys.vars[i]] = eq.lhs[i].str();
        row["lhs"] = std::move(lhs);
        row["rhs"] = eq.rhs.str();
        eqs.push_back(std::move(row));
    }
    Json out = Json::object();
    out["variables"] = sys.vars;
    out["equations"] = std::move(eqs);
    return out;
}

Json json_fm_trace(const FmResult& fm) {
    Json steps = Json::array();
    for (const auto& st : fm.trace) {
        Json j = Json::object();
        j["pos"] = st.pos;
        j["neg"] = st.neg;
        j["pos_mult"] = st.pos_mult.str();
        j["neg_mult"] = st.neg_mult.str();
        Json coeffs = Json::array();
        for (const auto& c : st.derived.coeff) coeffs.push_back(c.str());
        j["coeff"] = std::move(coeffs);
        j["constant"] = st.derived.constant.str();
        steps.push_back(std::move(j));
    }
    Json out = Json::object();
    Json originals = Json::array();
    size_t n_orig = fm.all.size() - fm.trace.size();
    for (size_t i = 0; i < n_orig; ++i) {
        Json c = Json::object();
        c["label"] = fm.all[i].label;
        Json coeffs = Json::array();
        for (const auto& x : fm.all[i].coeff) coeffs.push_back(x.str());
        c["coeff"] = std::move(coeffs);
        c["constant"] = fm.all[i].constant.str();
        originals.push_back(std::move(c));
    }
    out["constraints"] = std::move(originals);
    out["steps"] = std::move(steps);
    if (fm.contradiction) out["contradiction_index"] = *fm.contradiction;
    return out;
}

// Joint primitive normalization of a polynomial relation sum_i rel[i] * X_i = 0:
// common polynomial factor removed, integer coefficients, no common content,
// chosen sign.
void normalize_relation(std::vector<ParamPoly>& rel, size_t sign_anchor) {
    ParamPoly g;
    for (const auto& p : rel) g = ParamPoly::gcd(g, p);
    if (g.degree() > 0)
        for (auto& p : rel) p = p.divmod(g).first;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& p : rel)
        for (int k = 0; k <= p.degree(); ++k) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    p.coeff(k).denominator().get_mpz_t());
        }
    for (const auto& p : rel)
        for (int k = 0; k <= p.degree(); ++k) {
            Integer n = p.coeff(k).numerator() * (den_lcm / p.coeff(k).denominator());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
    if (num_gcd == 0) return;
    Rational k(den_lcm, num_gcd);
    if (rel[sign_anchor].leading().sign() < 0) k = -k;
    for (auto& p : rel) p = p.scaled(k);
}

ShellBlock dual_shell_block(const CaseSpec& cs, long J) {
    ShellBlock b;
    b.prefix = "M'";
    b.count = cs.a_m0;                 // |L'_{m0}| = |L_{m0}| (theta equality)
    b.moment_norm = cs.m0 / 2;         // norm of w in L^#
    b.zonal_norm = cs.m0;              // norm of v = sqrt(2) w
    b.dual = true;
    b.max_j = J;
    return b;
}

ShellBlock min_shell_block(const CaseSpec& cs, long J) {
    ShellBlock b;
    b.prefix = "M";
    b.count = cs.a_m0;
    b.moment_norm = b.zonal_norm = cs.m0;
    b.max_j = J;
    return b;
}

Json json_sverdict(const SVerdict& v, const std::vector<std::string>& vars) {
    Json out = Json::object();
    out["s"] = v.s;
    out["feasible"] = v.feasible;
    if (!v.violated.empty()) out["violated"] = v.violated;
    if (v.pinned) out["solution"] = json_values(vars, v.values);
    if (!v.fm.all.empty() && !v.feasible) out["fm"] = json_fm_trace(v.fm);
    return out;
}

struct CaseContext {
    CaseSpec cs;
    Json steps = Json::array();
    Json branches = Json::array();
    std::vector<long> survivors;
    bool all_closed = true;
    std::string open_branch;

    void close_branch(long s, const std::string& kind, Json data) {
        Json b = Json::object();
        b["s"] = s;
        Json closure = Json::object();
        closure["kind"] = kind;
        closure["data"] = std::move(data);
        b["closure"] = std::move(closure);
        branches.push_back(std::move(b));
    }

    void open(const std::string& why) {
        all_closed = false;
        if (open_branch.empty()) open_branch = why;
    }
};

// Range scan: record eliminated s as infeasible branches, return survivors.
void run_range(CaseContext& ctx, const ConfigSystem& sys,
               const std::vector<std::string>& constraint_vars = {}) {
    SRange range = feasible_s_range(ctx.cs, sys, constraint_vars);
    for (const auto& v : range.verdicts) {
        if (v.feasible) continue;
        Json data = json_sverdict(v, sys.vars);
        ctx.close_branch(v.s, "infeasible", std::move(data));
    }
    ctx.survivors = range.survivors;
    Json st = Json::object();
    st["description"] = "even s scan over (" +
                        std::to_string(ctx.cs.m0 + (ctx.cs.two_shell ? 2 : 0)) + ", " +
                        std::to_string(ctx.cs.s_max) + "]";
    st["survivors"] = ctx.survivors;
    ctx.steps.push_back(std::move(st));
}

Rational zonal_dual_sum(const ZonalCoeffs& z, const CaseSpec& cs,
                        const std::vector<Rational>& mp, long s) {
    Rational acc(0);
    for (size_t j = 0; j < mp.size(); ++j) {
        Rational u = Rational(2) * Rational(static_cast<long>(j) * static_cast<long>(j));
        acc += mp[j] * zonal_eval(z, {Rational(cs.m0), Rational(s), u});
    }
    return acc;
}

// ---------------------------------------------------------------- rank 32

void prove_rank32(CaseContext& ctx) {
    const CaseSpec& cs = ctx.cs;
    ConfigSystem sys = bounding_system(cs);

    ConfigSolution sym = solve_config_symbolic(sys);
    Json symj = Json::object();
    for (size_t i = 0; i < sys.vars.size(); ++i)
        symj[sys.vars[i]] = sym.parametric.particular[i].str();
    Json st = Json::object();
    st["description"] = "minimal-shell moment system, solved symbolically in s";
    st["system"] = json_equations(sys);
    st["solution"] = std::move(symj);
    ctx.steps.push_back(std::move(st));

    run_range(ctx, sys);

    for (long s : ctx.survivors) {
        SVerdict v = analyze_s(sys, s);
        if (!v.pinned) {
            ctx.open("rank 32: survivor s=" + std::to_string(s) + " not pinned");
            continue;
        }
        // dual configuration counts over L^#_3
        long J = dual_index_bound(cs.m0 / 2, s, cs.m0);
        ConfigSystem dual_sys;
        dual_sys.n = cs.n;
        size_t di = dual_sys.add_block(dual_shell_block(cs, J));
        dual_sys.add_moment_equations(dual_sys.blocks[di], cs.t);
        ConfigSolution dsol = solve_config_at(dual_sys, Rational(s));
        if (dsol.outcome != SolveOutcome::Unique) {
            ctx.open("rank 32: dual system not unique at s=" + std::to_string(s));
            continue;
        }
        const std::vector<Rational>& mp = dsol.numeric.particular;

        // branch identity: sum_{L_{m0}} P_8 = sum_{L'_{m0}} P_8; solve the latter
        // from the dual counts, then extract the eighth moment the unique
        // M-solution would have to produce.
        ZonalCoeffs z8 = zonal_coeffs(cs.n, 8);
        Rational dual_sum = zonal_dual_sum(z8, cs, mp, s);
        Rational sm(cs.m0 * s);
        Rational required = dual_sum;
        for (int k = 1; k <= cs.t; ++k) {
            Rational s2k = moment_rhs_poly(cs.n, cs.a_m0, cs.m0, k).eval(Rational(s));
            required -= z8.c[static_cast<size_t>(4 - k)] *
                        sm.pow(static_cast<unsigned long>(4 - k)) * s2k;
        }
        required -= z8.c[4] * sm.pow(4) * cs.a_m0;
        Rational computed(0);
        for (size_t j = 0; j < v.values.size(); ++j)
            computed += Rational(static_cast<long>(j)).pow(8) * v.values[j];

        Json data = Json::object();
        data["solution"] = json_values(sys.vars, v.values);
        data["dual_solution"] = json_values(dual_sys.vars, mp);
        data["dual_weighted_sum_P8"] = dual_sum.str();
        data["required_eighth_moment"] = required.str();
        data["computed_eighth_moment"] = computed.str();
        if (required == computed) {
            ctx.open("rank 32: eighth moments agree at s=" + std::to_string(s) +
                     ", no contradiction");
            continue;
        }
        ctx.close_branch(s, "moment-mismatch", std::move(data));
    }
}

// ---------------------------------------------------------------- rank 48

void prove_rank48(CaseContext& ctx) {
    const CaseSpec& cs = ctx.cs;
    ConfigSystem sys = bounding_system(cs);

    // Claim 1: s <= 18 from M2 >= 0 and M3 >= 0 alone; the later claims
    // close the surviving range.
    ConfigSolution sym = solve_config_symbolic(sys);
    Json symj = Json::object();
    for (size_t i = 0; i + 1 < sys.vars.size(); ++i) {
        // affine in the free count M4: particular + coeff * M4
        std::string expr = sym.parametric.particular[i].str();
        const RatFunc& c = sym.parametric.free_coeff[i][0];
        if (!c.is_zero()) expr += " + (" + c.str() + ")*M4";
        symj[sys.vars[i]] = expr;
    }
    // the two bounding cubics on M4
    auto bound_poly = [&](size_t var) {
        ParamPoly num = (-sym.parametric.particular[var] /
                         sym.parametric.free_coeff[var][0]).as_polynomial();
        return num;
    };
    ParamPoly m4_lower = bound_poly(2);  // M2 >= 0
    ParamPoly m4_upper = bound_poly(3);  // M3 >= 0
    Json st = Json::object();
    st["description"] = "claim 1: minimal-shell system, M4 free";
    st["system"] = json_equations(sys);
    st["solution"] = std::move(symj);
    st["m4_lower_cubic"] = m4_lower.str();
    st["m4_upper_cubic"] = m4_upper.str();
    ctx.steps.push_back(std::move(st));

    run_range(ctx, sys, {"M2", "M3", "M4"});

    // Claim 3: for v in L^#_4 some x in L_8 has |(x,v)| in {3,4}; assuming
    // the count at 4 vanishes forces 5600 vectors at 3.
    ConfigSystem c3;
    c3.n = cs.n;
    {
        ShellBlock b;
        b.prefix = "M'";
        b.count = cs.a_m0;
        b.moment_norm = cs.m0;  // counted set is the shell L_8 itself
        b.zonal_norm = cs.m0;
        b.max_j = dual_index_bound(cs.m0 / 2, cs.m0, cs.m0);
        size_t bi = c3.add_block(b);
        c3.add_moment_equations(c3.blocks[bi], cs.t);
    }
    ConfigSolution c3sol =
        solve_config_at(c3, Rational(cs.m0 / 2), {{"M'4", Rational(0)}});
    if (c3sol.outcome != SolveOutcome::Unique)
        throw std::logic_error("rank 48 claim 3: system not unique");
    {
        Json stc = Json::object();
        stc["description"] =
            "claim 3: L_8 counts against v in L^#_4 with the j=4 count fixed to 0";
        stc["solution"] = json_values(c3.vars, c3sol.numeric.particular);
        stc["conclusion"] = "M'3 = " + c3sol.numeric.particular[3].str() +
                            " > 0, so 2v lies in the sublattice generated by L_8";
        ctx.steps.push_back(std::move(stc));
        if (c3sol.numeric.particular[3].sign() <= 0)
            ctx.open("rank 48 claim 3: M'3 not positive");
    }

    // Claims 2 and 4 close the survivors.
    for (long s : ctx.survivors) {
        bool claim2 = s <= cs.m0 + 4;  // s in {10, 12}
        ConfigSystem full;
        full.n = cs.n;
        size_t mi = full.add_block(min_shell_block(cs, cs.m0 / 2));
        long J = claim2 ? dual_index_bound(cs.m0 / 2, s, cs.m0 - 2)
                        : dual_index_bound(cs.m0 / 2, s, s);
        size_t di = full.add_block(dual_shell_block(cs, J));
        full.add_moment_equations(full.blocks[mi], cs.t);
        full.add_moment_equations(full.blocks[di], cs.t);
        full.add_dual_cross_equation(cs, full.blocks[mi], full.blocks[di], cs.d_low);
        full.add_dual_cross_equation(cs, full.blocks[mi], full.blocks[di], cs.d_low + 2);

        if (claim2) {
            SVerdict v = analyze_s(full, s);
            if (v.feasible) {
                ctx.open("rank 48 claim 2: s=" + std::to_string(s) + " still feasible");
                continue;
            }
            Json data = json_sverdict(v, full.vars);
            data["system"] = json_equations(full);
            ctx.close_branch(s, "infeasible", std::move(data));
        } else {
            ConfigSolution solu = solve_config_at(full, Rational(s));
            if (solu.outcome != SolveOutcome::Unique) {
                ctx.open("rank 48 claim 4: system not unique at s=" + std::to_string(s));
                continue;
            }
            const auto& vals = solu.numeric.particular;
            std::string kind, witness;
            for (size_t i = 0; i < vals.size(); ++i) {
                if (vals[i].sign() < 0) {
                    kind = "negative-count";
                    witness = full.vars[i] + " = " + vals[i].str();
                    break;
                }
                if (!vals[i].is_integer()) {
                    kind = "non-integral";
                    witness = full.vars[i] + " = " + vals[i].str();
                    break;
                }
            }
            if (kind.empty()) {
                ctx.open("rank 48 claim 4: admissible solution at s=" + std::to_string(s));
                continue;
            }
            Json data = Json::object();
            data["solution"] = json_values(full.vars, vals);
            data["witness"] = witness;
            ctx.close_branch(s, kind, std::move(data));
        }
    }

    // Claim 2, closed form: eliminate all but the top dual counts from the
    // symbolic system and compare with f(s) + (32-4s) M'4 + (384-40s) M'5 = 0.
    {
        ConfigSystem full;
        full.n = cs.n;
        size_t mi = full.add_block(min_shell_block(cs, cs.m0 / 2));
        size_t di = full.add_block(dual_shell_block(
            cs, dual_index_bound(cs.m0 / 2, cs.m0 + 2, cs.m0 - 2)));
        full.add_moment_equations(full.blocks[mi], cs.t);
        full.add_moment_equations(full.blocks[di], cs.t);
        full.add_dual_cross_equation(cs, full.blocks[mi], full.blocks[di], cs.d_low);
        full.add_dual_cross_equation(cs, full.blocks[mi], full.blocks[di], cs.d_low + 2);
        ConfigSolution symf = solve_config_symbolic(full);
        if (symf.outcome != SolveOutcome::Parametrized ||
            symf.parametric.free_cols.size() != 1)
            throw std::logic_error("rank 48 claim 2: expected a one-parameter family");
        // pivot expression for M'4: M'4 = particular + coeff * M'5; clear
        // denominators into A(s) M'4 + B(s) M'5 + C(s) = 0.
        size_t i_mp4 = 0;
        for (size_t i = 0; i < full.vars.size(); ++i)
            if (full.vars[i] == "M'4") i_mp4 = i;
        const RatFunc& part = symf.parametric.particular[i_mp4];
        const RatFunc& coef = symf.parametric.free_coeff[i_mp4][0];
        ParamPoly den = part.den() * coef.den();
        std::vector<ParamPoly> rel(3);
        rel[0] = den;                                        // A(s) on M'4
        rel[1] = -(coef.num() * part.den());                 // B(s) on M'5
        rel[2] = -(part.num() * coef.den());                 // C(s) = f(s)
        normalize_relation(rel, 2);
        Json stc = Json::object();
        stc["description"] = "claim 2: eliminated relation among s, M'4, M'5";
        stc["relation"] =
            "(" + rel[2].str() + ") + (" + rel[0].str() + ")*M'4 + (" +
            rel[1].str() + ")*M'5 = 0";
        stc["f"] = rel[2].str();
        stc["coeff_M'4"] = rel[0].str();
        stc["coeff_M'5"] = rel[1].str();
        ctx.steps.push_back(std::move(stc));
    }
}

// ---------------------------------------------------------------- rank 24

void prove_rank24(CaseContext& ctx) {
    const CaseSpec& cs = ctx.cs;
    ConfigSystem sys = bounding_system(cs);

    ConfigSolution sym = solve_config_symbolic(sys);
    Json symj = Json::object();
    for (size_t i = 0; i < sys.vars.size(); ++i) {
        std::string expr = sym.parametric.particular[i].str();
        if (!sym.parametric.free_coeff[i].empty() &&
            !sym.parametric.free_coeff[i][0].is_zero())
            expr += " + (" + sym.parametric.free_coeff[i][0].str() + ")*N3";
        symj[sys.vars[i]] = expr;
    }
    Json st = Json::object();
    st["description"] = "two-shell system with both cross-theta ratios, N3 free";
    st["system"] = json_equations(sys);
    st["solution"] = std::move(symj);
    st["ratio_low"] = cs.ratio_low.str();
    st["ratio_high"] = cs.ratio_high.str();
    ctx.steps.push_back(std::move(st));

    run_range(ctx, sys);

    for (long s : ctx.survivors) {
        SVerdict v = analyze_s(sys, s);
        if (!v.pinned) {
            ctx.open("rank 24: survivor s=" + std::to_string(s) + " not pinned");
            continue;
        }
        std::vector<Rational> m_counts(v.values.begin(), v.values.begin() + 3);
        std::vector<Rational> n_counts(v.values.begin() + 3, v.values.end());
        ParityDeduction ded = parity_deduction_rank24(m_counts, n_counts, cs.a_m0);
        Json data = Json::object();
        data["solution"] = json_values(sys.vars, v.values);
        Json facts = Json::array();
        for (const auto& f : ded.facts) facts.push_back(f);
        data["facts"] = std::move(facts);
        data["root_budget"] = ded.budget.max_roots.get_str();
        Json witness = Json::array();
        for (const auto& w : ded.budget.witness) witness.push_back(w);
        data["budget_witness"] = std::move(witness);
        data["root_count"] = ded.root_count.str();
        if (!ded.gates_pass) {
            ctx.open("rank 24: parity/budget gate failed at s=" + std::to_string(s));
            continue;
        }
        ctx.close_branch(s, "root-budget", std::move(data));
    }
}

// ---------------------------------------------------------------- rank 36

void prove_rank36(CaseContext& ctx) {
    const CaseSpec& cs = ctx.cs;
    ConfigSystem sys = bounding_system(cs);

    ConfigSolution sym = solve_config_symbolic(sys);
    Json symj = Json::object();
    for (size_t i = 0; i < sys.vars.size(); ++i) {
        std::string expr = sym.parametric.particular[i].str();
        if (!sym.parametric.free_coeff[i].empty() &&
            !sym.parametric.free_coeff[i][0].is_zero())
            expr += " + (" + sym.parametric.free_coeff[i][0].str() + ")*N4";
        symj[sys.vars[i]] = expr;
    }
    Json st = Json::object();
    st["description"] = "two-shell system with both cross-theta ratios, N4 free";
    st["system"] = json_equations(sys);
    st["solution"] = std::move(symj);
    st["ratio_low"] = cs.ratio_low.str();
    st["ratio_high"] = cs.ratio_high.str();
    ctx.steps.push_back(std::move(st));

    run_range(ctx, sys);

    for (long s : ctx.survivors) {
        // closure system: L_6 counts and dual counts with both L/L' identities
        ConfigSystem close;
        close.n = cs.n;
        size_t mi = close.add_block(min_shell_block(cs, cs.m0 / 2));
        size_t di = close.add_block(dual_shell_block(
            cs, dual_index_bound(cs.m0 / 2, s, s)));  // 2v in L(L_{6,8})
        close.add_moment_equations(close.blocks[mi], cs.t);
        close.add_moment_equations(close.blocks[di], cs.t);
        close.add_dual_cross_equation(cs, close.blocks[mi], close.blocks[di], cs.d_low);
        close.add_dual_cross_equation(cs, close.blocks[mi], close.blocks[di],
                                      cs.d_low + 2);
        ConfigSolution solu = solve_config_at(close, Rational(s));
        if (solu.outcome != SolveOutcome::Unique) {
            ctx.open("rank 36: closure system not unique at s=" + std::to_string(s));
            continue;
        }
        const auto& vals = solu.numeric.particular;
        std::string kind, witness;
        std::vector<std::string> odd_counts;
        for (size_t i = 0; i < vals.size(); ++i) {
            long j = 0;
            size_t pos = close.vars[i].find_first_of("0123456789");
            if (pos != std::string::npos) j = std::stol(close.vars[i].substr(pos));
            if (vals[i].sign() < 0) {
                kind = "negative-count";
                witness = close.vars[i] + " = " + vals[i].str();
                break;
            }
            if (!vals[i].is_integer()) {
                kind = "non-integral";
                witness = close.vars[i] + " = " + vals[i].str();
                break;
            }
            if (j >= 1 && !vals[i].is_even_integer())
                odd_counts.push_back(close.vars[i] + " = " + vals[i].str());
        }
        if (kind.empty() && !odd_counts.empty()) {
            kind = "parity";
            witness = odd_counts.back() + " odd, but antipodal pairs force even counts";
        }
        if (kind.empty()) {
            ctx.open("rank 36: closure found admissible counts at s=" +
                     std::to_string(s));
            continue;
        }
        Json data = Json::object();
        data["system"] = json_equations(close);
        data["solution"] = json_values(close.vars, vals);
        data["witness"] = witness;
        if (!odd_counts.empty()) {
            Json oc = Json::array();
            for (const auto& o : odd_counts) oc.push_back(o);
            data["odd_counts"] = std::move(oc);
        }
        ctx.close_branch(s, kind, std::move(data));
    }
}

} // namespace

ParityDeduction parity_deduction_rank24(const std::vector<Rational>& m_counts,
                                        const std::vector<Rational>& n_counts,
                                        const Rational& a_m0) {
    ParityDeduction out;
    out.even_inner_on_min = true;
    for (size_t j = 1; j < m_counts.size(); j += 2)
        if (!m_counts[j].is_zero()) out.even_inner_on_min = false;
    out.odd_inner_on_next = true;
    for (size_t j = 0; j < n_counts.size(); j += 2)
        if (!n_counts[j].is_zero()) out.odd_inner_on_next = false;
    out.budget = root_budget(24);
    out.root_count = a_m0;

    if (out.even_inner_on_min)
        out.facts.push_back("(x',v) is even for every v in L_4 (odd-index counts vanish)");
    if (out.odd_inner_on_next)
        out.facts.push_back("(x',w) is odd for every w in L_6 (even-index counts vanish)");
    bool sum_free = out.even_inner_on_min && out.odd_inner_on_next;
    if (sum_free) {
        out.facts.push_back(
            "sums v1+v2 of L_4 vectors have even (x', .), so L_6 and L_4+L_4 are disjoint");
        out.facts.push_back(
            "(v1,v2) = +-3 gives |v1 -+ v2|^2 = 2 < 4 (below the minimum); "
            "(v1,v2) = +-1 gives |v1 -+ v2|^2 = 6, a norm-6 sum of two norm-4 vectors; "
            "both excluded, so inner products on L_4 lie in {0, +-2, +-4}");
        out.facts.push_back("(1/sqrt 2) L_4 is a simply-laced root system of " +
                            a_m0.str() + " roots");
    }
    bool budget_closes = Rational(out.budget.max_roots) < a_m0;
    if (budget_closes)
        out.facts.push_back("largest simply-laced root count in rank 24 is " +
                            out.budget.max_roots.get_str() + " < " + a_m0.str());
    out.gates_pass = sum_free && budget_closes;
    return out;
}

Certificate verify_case(int rank, const ProverOptions& opts) {
    if (rank != 24 && rank != 32 && rank != 36 && rank != 48)
        throw InputError("verify_case: supported ranks are 24, 32, 36, 48");

    CaseContext ctx;
    ctx.cs = case_spec(rank, opts.precision);

    switch (rank) {
        case 32: prove_rank32(ctx); break;
        case 48: prove_rank48(ctx); break;
        case 24: prove_rank24(ctx); break;
        case 36: prove_rank36(ctx); break;
        default: break;
    }

    // soundness gate: every even s in range must appear as a closed branch
    std::vector<long> closed;
    for (const auto& b : ctx.branches) closed.push_back(b["s"].get<long>());
    for (long s = ctx.cs.m0 + (ctx.cs.two_shell ? 4 : 2); s <= ctx.cs.s_max; s += 2) {
        if (std::find(closed.begin(), closed.end(), s) == closed.end())
            ctx.open("branch s=" + std::to_string(s) + " was never closed");
    }

    Certificate cert;
    cert.rank = rank;
    cert.proven = ctx.all_closed;
    cert.open_branch = ctx.open_branch;

    Json casej = Json::object();
    casej["rank"] = rank;
    casej["claim"] = ctx.cs.two_shell
                         ? "generated by vectors of norms " + std::to_string(ctx.cs.m0) +
                               " and " + std::to_string(ctx.cs.m0 + 2)
                         : "generated by vectors of minimal norm " +
                               std::to_string(ctx.cs.m0);
    casej["m0"] = ctx.cs.m0;
    casej["design_moments"] = ctx.cs.t;
    casej["shell_size_m0"] = ctx.cs.a_m0.str();
    if (ctx.cs.two_shell) casej["shell_size_m0_plus_2"] = ctx.cs.a_m0p2.str();

    cert.doc = Json::object();
    cert.doc["case"] = std::move(casej);
    cert.doc["environment"] = Json::object({{"engine", kEngineVersion},
                                            {"precision", opts.precision}});
    cert.doc["steps"] = std::move(ctx.steps);
    cert.doc["survivors"] = ctx.survivors;
    cert.doc["branches"] = std::move(ctx.branches);
    cert.doc["verdict"] = cert.proven ? "proven" : "not-proven";
    if (!cert.proven) cert.doc["open_branch"] = cert.open_branch;
    return cert;
}

namespace {

Json remark_table_rank32(const ProverOptions& opts) {
    CaseSpec cs = case_spec(32, opts.precision);
    const long s = 8;
    ConfigSystem sys;
    sys.n = cs.n;
    size_t mi = sys.add_block(min_shell_block(cs, shell_index_bound(cs.m0, s, cs.m0)));
    size_t di = sys.add_block(dual_shell_block(cs, dual_index_bound(cs.m0 / 2, s, cs.m0)));
    sys.add_moment_equations(sys.blocks[mi], cs.t);
    sys.add_moment_equations(sys.blocks[di], cs.t);
    sys.add_dual_cross_equation(cs, sys.blocks[mi], sys.blocks[di], cs.d_low);
    sys.add_dual_cross_equation(cs, sys.blocks[mi], sys.blocks[di], cs.d_low + 2);
    ConfigSolution sol = solve_config_at(sys, Rational(s));
    if (sol.outcome != SolveOutcome::Unique)
        throw std::logic_error("remark table rank 32: not unique");
    Json out = Json::object();
    out["rank"] = 32;
    out["xprime"] = "norm-8 vector of L";
    out["solution"] = json_values(sys.vars, sol.numeric.particular);
    return out;
}

// Two-shell remark tables: x' in the (m0+2)-shell, outside the sublattice
// generated by L_{m0}. The N-block self-excludes x'; the boundary pairing
// N_J = M_{|J-s|} pins the one remaining degree of freedom.
Json remark_table_two_shell(int rank, const ProverOptions& opts) {
    CaseSpec cs = case_spec(rank, opts.precision);
    const long s = cs.m0 + 2;
    ConfigSystem sys;
    sys.n = cs.n;
    size_t mi = sys.add_block(min_shell_block(cs, shell_index_bound(cs.m0, s, s)));
    ShellBlock nb;
    nb.prefix = "N";
    nb.count = cs.a_m0p2;
    nb.moment_norm = nb.zonal_norm = cs.m0 + 2;
    nb.max_j = shell_index_bound(cs.m0 + 2, s, cs.m0);
    nb.self_in_shell = true;
    size_t ni = sys.add_block(nb);
    size_t di = sys.add_block(dual_shell_block(cs, dual_index_bound(cs.m0 / 2, s, cs.m0)));
    sys.add_moment_equations(sys.blocks[mi], cs.t);
    sys.add_moment_equations(sys.blocks[ni], cs.t);
    sys.add_moment_equations(sys.blocks[di], cs.t);
    sys.add_ratio_cross_equation(cs, sys.blocks[ni], sys.blocks[mi], cs.d_low);
    sys.add_ratio_cross_equation(cs, sys.blocks[ni], sys.blocks[mi], cs.d_low + 2);
    sys.add_dual_cross_equation(cs, sys.blocks[mi], sys.blocks[di], cs.d_low);
    sys.add_dual_cross_equation(cs, sys.blocks[mi], sys.blocks[di], cs.d_low + 2);
    sys.add_boundary_pair_equation(sys.blocks[ni], sys.blocks[mi], s, cs.m0);
    ConfigSolution sol = solve_config_at(sys, Rational(s));
    if (sol.outcome != SolveOutcome::Unique)
        throw std::logic_error("remark table rank " + std::to_string(rank) +
                               ": not unique");
    Json out = Json::object();
    out["rank"] = rank;
    out["xprime"] = "norm-" + std::to_string(s) + " vector outside L(L_" +
                    std::to_string(cs.m0) + ")";
    out["self_count_convention"] =
        "x' and -x' excluded from the N counts; their moment and zonal "
        "contributions are carried on the right-hand sides";
    out["solution"] = json_values(sys.vars, sol.numeric.particular);
    return out;
}

} // namespace

Json remark_tables(const ProverOptions& opts) {
    Json out = Json::array();
    out.push_back(remark_table_rank32(opts));
    out.push_back(remark_table_two_shell(24, opts));
    out.push_back(remark_table_two_shell(36, opts));
    return out;
}

} // namespace modlat
