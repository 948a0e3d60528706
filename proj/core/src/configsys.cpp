#include "modlat/configsys.hpp"

#include <algorithm>

#include "modlat/series_catalog.hpp"

namespace modlat {

int CaseSpec::dual_sign(int degree) const {
    bool low_branch = degree == d_low;  // Harm_{d(r)}: the C[theta,Delta16] branch
    if (!low_branch && degree != d_low + 2)
        throw InputError("dual_sign: degree must be d(r) or d(r)+2");
    if (r == 4) return low_branch ? -1 : +1;
    return low_branch ? +1 : -1;
}

CaseSpec case_spec(int rank, long precision) {
    if (rank % 4 != 0 || rank < 16)
        throw InputError("case_spec: rank must be a multiple of 4, >= 16");
    CaseSpec cs;
    cs.n = rank;
    cs.m = rank / 16;
    cs.r = rank % 16;
    if (cs.r != 0 && cs.r != 4 && cs.r != 8)
        throw InputError("case_spec: rank residue mod 16 must be 0, 4 or 8");
    cs.m0 = 2 * (rank / 16) + 2;
    cs.t = cs.r == 0 ? 3 : (cs.r == 4 ? 2 : 1);
    cs.d_low = cs.r == 0 ? 8 : (cs.r == 4 ? 6 : 4);
    cs.two_shell = cs.r != 0;
    cs.s_max = static_cast<long>(rank) * cs.m0 / 4;

    long prec = std::max<long>(precision, cs.m0 + 4);
    RationalSeries theta = extremal_theta(rank, prec);
    cs.a_m0 = theta.coeff(cs.m0);
    cs.a_m0p2 = theta.coeff(cs.m0 + 2);

    RationalSeries d16 = delta16(prec);
    RationalSeries low = d16.pow(static_cast<unsigned long>(cs.m) + 1);
    RationalSeries high = (theta_d4(prec) * low).truncated(low.precision());
    cs.ratio_low = low.coeff(cs.m0 + 2) / low.coeff(cs.m0);
    cs.ratio_high = high.coeff(cs.m0 + 2) / high.coeff(cs.m0);
    return cs;
}

long shell_index_bound(long shell_norm, long s, long lower) {
    return (shell_norm + s - lower) / 2;
}

long dual_index_bound(long w_norm, long s, long lower) {
    return (s + 4 * w_norm - lower) / 4;
}

size_t ConfigSystem::add_block(ShellBlock block) {
    block.first_var = vars.size();
    for (long j = 0; j <= block.max_j; ++j) vars.push_back(block.var_name(j));
    blocks.push_back(block);
    return blocks.size() - 1;
}

ParamPoly moment_rhs_poly(int n, const Rational& count, long nu, int k) {
    Rational dfact(1), nprod(1);
    for (int i = 1; i <= k; ++i) dfact *= Rational(2 * i - 1);
    for (int i = 0; i < k; ++i) nprod *= Rational(n + 2 * i);
    Rational c = count * dfact / nprod * Rational(nu).pow(static_cast<unsigned long>(k));
    return ParamPoly::monomial(c, k);
}

void ConfigSystem::add_moment_equations(const ShellBlock& block, int k_max) {
    for (int k = 0; k <= k_max; ++k) {
        ConfigEquation eq;
        eq.lhs.assign(vars.size(), ParamPoly());
        for (long j = (k == 0 ? 0 : 1); j <= block.max_j; ++j) {
            Rational jk = Rational(j).pow(static_cast<unsigned long>(2 * k));
            eq.lhs[block.first_var + static_cast<size_t>(j)] = ParamPoly(jk);
        }
        eq.rhs = k == 0 ? ParamPoly(block.count)
                        : moment_rhs_poly(n, block.count, block.moment_norm, k);
        if (block.self_in_shell) {
            // +-x' contribute 2 to the cardinality and 2 s^{2k} to moments
            eq.rhs -= (k == 0 ? ParamPoly(Rational(2))
                              : ParamPoly::monomial(Rational(2), 2 * k));
        }
        eq.label = block.prefix + (k == 0 ? " cardinality" : " moment k=" + std::to_string(k));
        eqs.push_back(std::move(eq));
    }
}

ParamPoly zonal_value_poly(const ZonalCoeffs& z, long zonal_norm, long j, long u_scale) {
    // P at u = u_scale j^2, m = zonal_norm: sum_i c_i (u_scale j^2)^{(d-2i)/2} (s m)^i
    ParamPoly out;
    for (size_t i = 0; i < z.c.size(); ++i) {
        unsigned long half = static_cast<unsigned long>(z.d - 2 * static_cast<long>(i)) / 2;
        Rational u_pow = (Rational(u_scale) * Rational(j) * Rational(j)).pow(half);
        Rational m_pow = Rational(zonal_norm).pow(static_cast<unsigned long>(i));
        out += ParamPoly::monomial(z.c[i] * u_pow * m_pow, static_cast<int>(i));
    }
    return out;
}

namespace {

// self term 2 P(u = s^2, m = shell norm) as a polynomial in s
ParamPoly zonal_self_poly(const ZonalCoeffs& z, long zonal_norm) {
    ParamPoly out;
    for (size_t i = 0; i < z.c.size(); ++i) {
        long half = (z.d - 2 * static_cast<long>(i)) / 2;
        Rational m_pow = Rational(zonal_norm).pow(static_cast<unsigned long>(i));
        // u^{half} = s^{2 half}, (s m)^i = m^i s^i
        out += ParamPoly::monomial(Rational(2) * z.c[i] * m_pow,
                                   static_cast<int>(2 * half + static_cast<long>(i)));
    }
    return out;
}

} // namespace

void ConfigSystem::add_dual_cross_equation(const CaseSpec& cs, const ShellBlock& lat,
                                           const ShellBlock& dual, int degree) {
    ZonalCoeffs z = zonal_coeffs(n, degree);
    int sign = cs.dual_sign(degree);
    ConfigEquation eq;
    eq.lhs.assign(vars.size(), ParamPoly());
    for (long j = 0; j <= lat.max_j; ++j)
        eq.lhs[lat.first_var + static_cast<size_t>(j)] =
            zonal_value_poly(z, lat.zonal_norm, j, 1);
    for (long j = 0; j <= dual.max_j; ++j)
        eq.lhs[dual.first_var + static_cast<size_t>(j)] =
            -zonal_value_poly(z, dual.zonal_norm, j, 2).scaled(Rational(sign));
    eq.rhs = ParamPoly();
    if (lat.self_in_shell) eq.rhs -= zonal_self_poly(z, lat.zonal_norm);
    eq.label = "cross L/L' degree " + std::to_string(degree) +
               (sign > 0 ? " (+)" : " (-)");
    eqs.push_back(std::move(eq));
}

void ConfigSystem::add_ratio_cross_equation(const CaseSpec& cs, const ShellBlock& next,
                                            const ShellBlock& min, int degree) {
    ZonalCoeffs z = zonal_coeffs(n, degree);
    Rational ratio = degree == cs.d_low ? cs.ratio_low : cs.ratio_high;
    if (degree != cs.d_low && degree != cs.d_low + 2)
        throw InputError("add_ratio_cross_equation: degree must be d(r) or d(r)+2");
    ConfigEquation eq;
    eq.lhs.assign(vars.size(), ParamPoly());
    for (long j = 0; j <= next.max_j; ++j)
        eq.lhs[next.first_var + static_cast<size_t>(j)] =
            zonal_value_poly(z, next.zonal_norm, j, 1);
    for (long j = 0; j <= min.max_j; ++j)
        eq.lhs[min.first_var + static_cast<size_t>(j)] =
            -zonal_value_poly(z, min.zonal_norm, j, 1).scaled(ratio);
    eq.rhs = ParamPoly();
    if (next.self_in_shell) eq.rhs -= zonal_self_poly(z, next.zonal_norm);
    eq.label = "cross shells degree " + std::to_string(degree) + " ratio " + ratio.str();
    eqs.push_back(std::move(eq));
}

void ConfigSystem::add_boundary_pair_equation(const ShellBlock& next,
                                              const ShellBlock& min, long s, long m0) {
    if (next.zonal_norm + s - 2 * next.max_j != m0)
        throw InputError("add_boundary_pair_equation: boundary does not land in L_{m0}");
    long jstar = std::abs(next.max_j - s);
    ConfigEquation eq;
    eq.lhs.assign(vars.size(), ParamPoly());
    eq.lhs[next.first_var + static_cast<size_t>(next.max_j)] = ParamPoly(Rational(1));
    if (jstar <= min.max_j)
        eq.lhs[min.first_var + static_cast<size_t>(jstar)] = ParamPoly(Rational(-1));
    eq.rhs = ParamPoly();
    eq.label = "boundary pairing " + next.var_name(next.max_j) + " = " +
               (jstar <= min.max_j ? min.var_name(jstar) : "0");
    eqs.push_back(std::move(eq));
}

LinearSystem<Rational> ConfigSystem::at(const Rational& s) const {
    LinearSystem<Rational> out;
    out.names = vars;
    for (const auto& eq : eqs) {
        std::vector<Rational> row;
        row.reserve(vars.size());
        for (size_t i = 0; i < vars.size(); ++i)
            row.push_back(i < eq.lhs.size() ? eq.lhs[i].eval(s) : Rational(0));
        out.a.push_back(std::move(row));
        out.b.push_back(eq.rhs.eval(s));
    }
    return out;
}

LinearSystem<RatFunc> ConfigSystem::symbolic() const {
    LinearSystem<RatFunc> out;
    out.names = vars;
    for (const auto& eq : eqs) {
        std::vector<RatFunc> row;
        row.reserve(vars.size());
        for (size_t i = 0; i < vars.size(); ++i)
            row.push_back(i < eq.lhs.size() ? RatFunc(eq.lhs[i]) : RatFunc());
        out.a.push_back(std::move(row));
        out.b.push_back(RatFunc(eq.rhs));
    }
    return out;
}

namespace {

size_t var_index(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InputError("unknown configuration variable '" + name + "'");
    return static_cast<size_t>(it - vars.begin());
}

} // namespace

ConfigSolution solve_config_at(const ConfigSystem& sys, const Rational& s,
                               const std::vector<std::pair<std::string, Rational>>&
                                   assumptions) {
    LinearSystem<Rational> lin = sys.at(s);
    for (const auto& [name, value] : assumptions) {
        std::vector<Rational> row(sys.vars.size(), Rational(0));
        row[var_index(sys.vars, name)] = Rational(1);
        lin.a.push_back(std::move(row));
        lin.b.push_back(value);
    }
    ConfigSolution out;
    out.vars = sys.vars;
    out.numeric = solve_linear_exact(lin);
    out.outcome = out.numeric.outcome;
    return out;
}

ConfigSolution solve_config_symbolic(const ConfigSystem& sys,
                                     const std::vector<std::pair<std::string, Rational>>&
                                         assumptions) {
    LinearSystem<RatFunc> lin = sys.symbolic();
    for (const auto& [name, value] : assumptions) {
        std::vector<RatFunc> row(sys.vars.size(), RatFunc());
        row[var_index(sys.vars, name)] = RatFunc(Rational(1));
        lin.a.push_back(std::move(row));
        lin.b.push_back(RatFunc(value));
    }
    ConfigSolution out;
    out.vars = sys.vars;
    out.symbolic = true;
    out.parametric = solve_linear_exact(lin);
    out.outcome = out.parametric.outcome;
    return out;
}

namespace {

bool index_of_var(const std::string& name, long* j) {
    size_t pos = name.find_first_of("0123456789");
    if (pos == std::string::npos) return false;
    *j = std::stol(name.substr(pos));
    return true;
}

// Admissibility of a fully determined solution vector.
bool check_point(const std::vector<std::string>& vars, const std::vector<Rational>& vals,
                 std::string* violated) {
    for (size_t i = 0; i < vars.size(); ++i) {
        long j = 0;
        index_of_var(vars[i], &j);
        if (vals[i].sign() < 0) {
            *violated = vars[i] + " = " + vals[i].str() + " < 0";
            return false;
        }
        if (!vals[i].is_integer()) {
            *violated = vars[i] + " = " + vals[i].str() + " not integral";
            return false;
        }
        if (j >= 1 && !vals[i].is_even_integer()) {
            *violated = vars[i] + " = " + vals[i].str() + " odd (antipodal pairs)";
            return false;
        }
    }
    return true;
}

} // namespace

SVerdict analyze_s(const ConfigSystem& sys, long s,
                   const std::vector<std::string>& constraint_vars) {
    SVerdict v;
    v.s = s;
    ConfigSolution sol = solve_config_at(sys, Rational(s));
    if (sol.outcome == SolveOutcome::Inconsistent) {
        v.violated = "equations inconsistent";
        return v;
    }
    auto constrained = [&](const std::string& name) {
        return constraint_vars.empty() ||
               std::find(constraint_vars.begin(), constraint_vars.end(), name) !=
                   constraint_vars.end();
    };
    const auto& lin = sol.numeric;
    if (sol.outcome == SolveOutcome::Unique) {
        v.values = lin.particular;
        std::string violated;
        if (!check_point(sys.vars, v.values, &violated)) {
            v.violated = violated;
            return v;
        }
        v.feasible = v.pinned = true;
        return v;
    }

    // Parametrized family: nonnegativity of every constrained count, as
    // affine constraints over the free variables, decided by Fourier-Motzkin.
    const size_t nf = lin.free_cols.size();
    std::vector<AffineConstraint> cons;
    for (size_t i = 0; i < sys.vars.size(); ++i) {
        if (!constrained(sys.vars[i])) continue;
        AffineConstraint c;
        c.coeff = lin.free_coeff[i];
        c.constant = lin.particular[i];
        c.label = sys.vars[i] + " >= 0";
        cons.push_back(std::move(c));
    }
    v.fm = fm_feasible(cons, nf);
    v.feasible = v.fm.feasible;
    if (!v.feasible) {
        v.violated = "nonnegativity infeasible (Fourier-Motzkin)";
        return v;
    }
    // Pinned iff each free variable's feasible interval is a single point.
    std::vector<Rational> fixed(nf, Rational(0));
    for (size_t f = 0; f < nf; ++f) {
        std::optional<Rational> lo, hi;
        for (const auto& c : cons) {
            bool only_f = true;
            for (size_t g = 0; g < nf; ++g)
                if (g != f && !c.coeff[g].is_zero()) only_f = false;
            if (!only_f || c.coeff[f].is_zero()) continue;
            Rational bound = -c.constant / c.coeff[f];
            if (c.coeff[f].sign() > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (!lo || !hi || *lo != *hi) return v;  // feasible, not pinned
        fixed[f] = *lo;
    }
    v.pinned = true;
    v.values.resize(sys.vars.size());
    for (size_t i = 0; i < sys.vars.size(); ++i) v.values[i] = lin.value(i, fixed);
    std::string violated;
    if (!check_point(sys.vars, v.values, &violated)) {
        v.feasible = v.pinned = false;
        v.violated = violated;
        v.values.clear();
    }
    return v;
}

ConfigSystem bounding_system(const CaseSpec& cs) {
    ConfigSystem sys;
    sys.n = cs.n;
    // coset-minimal x': norm(x -+ x') >= s, so J = shell/2 independent of s
    ShellBlock min_block;
    min_block.prefix = "M";
    min_block.count = cs.a_m0;
    min_block.moment_norm = min_block.zonal_norm = cs.m0;
    min_block.max_j = cs.m0 / 2;
    size_t mi = sys.add_block(min_block);
    if (!cs.two_shell) {
        sys.add_moment_equations(sys.blocks[mi], cs.t);
        return sys;
    }
    ShellBlock next_block;
    next_block.prefix = "N";
    next_block.count = cs.a_m0p2;
    next_block.moment_norm = next_block.zonal_norm = cs.m0 + 2;
    next_block.max_j = cs.m0 / 2 + 1;
    size_t ni = sys.add_block(next_block);
    sys.add_moment_equations(sys.blocks[mi], cs.t);
    sys.add_moment_equations(sys.blocks[ni], cs.t);
    sys.add_ratio_cross_equation(cs, sys.blocks[ni], sys.blocks[mi], cs.d_low);
    sys.add_ratio_cross_equation(cs, sys.blocks[ni], sys.blocks[mi], cs.d_low + 2);
    return sys;
}

SRange feasible_s_range(const CaseSpec& cs, const ConfigSystem& sys,
                        const std::vector<std::string>& constraint_vars) {
    SRange out;
    out.s_min = cs.m0 + (cs.two_shell ? 4 : 2);
    out.s_max = cs.s_max;
    for (long s = out.s_min; s <= out.s_max; s += 2) {
        SVerdict v = analyze_s(sys, s, constraint_vars);
        if (v.feasible) out.survivors.push_back(s);
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

} // namespace modlat
