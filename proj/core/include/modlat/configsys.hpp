#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modlat/fourier_motzkin.hpp"
#include "modlat/linear_system.hpp"
#include "modlat/parampoly.hpp"
#include "modlat/qseries.hpp"
#include "modlat/zonal.hpp"

namespace modlat {

/// Per-rank data of one theorem case (ranks 16m + r, r in {0,4,8}).
struct CaseSpec {
    int n = 0;        // rank
    int m = 0;        // n / 16
    int r = 0;        // n mod 16
    long m0 = 0;      // minimal norm 2 floor(n/16) + 2
    int t = 0;        // usable even moments: 3 (r=0), 2 (r=4), 1 (r=8)
    int d_low = 0;    // d(r): 8, 6, 4
    bool two_shell = false;  // r in {4,8}: generation by L_{m0} and L_{m0+2}
    Rational a_m0;           // |L_{m0}| from the extremal theta series
    Rational a_m0p2;         // |L_{m0+2}|
    Rational ratio_low;      // coeff ratio q^{m0+2}/q^{m0} of delta16^{m+1}
    Rational ratio_high;     // same for thetaD4 delta16^{m+1}
    long s_max = 0;          // n m0 / 4, from the k = 1 moment

    /// Sign relating sum_L P and sum_{L'} P at the given degree
    /// (the two weighted-theta branches): sum_L P = sign * sum_{L'} P.
    int dual_sign(int degree) const;
};

CaseSpec case_spec(int rank, long precision = 24);

/// Largest index |(x,x')| can reach for x in a lattice shell, from
/// norm(x -+ x') >= lower: J = floor((shell_norm + s - lower) / 2).
long shell_index_bound(long shell_norm, long s, long lower);

/// Dual variant from x' - 2w in L: J = floor((s + 4 w_norm - lower) / 4).
long dual_index_bound(long w_norm, long s, long lower);

/// One family of configuration counts (a block of variables X_0..X_J).
struct ShellBlock {
    std::string prefix;        // variable prefix: "M", "N", "M'"
    Rational count;            // number of vectors in the counted set
    long moment_norm = 0;      // norm of the counted vectors (m0/2 for duals)
    long zonal_norm = 0;       // norm entering zonal evaluation (m0 for duals)
    bool dual = false;         // u = 2 j^2 in zonal sums instead of j^2
    long max_j = 0;            // index bound J
    bool self_in_shell = false;  // +-x' excluded from counts, added back as 2 s^{2k}
    size_t first_var = 0;      // filled by ConfigSystem::add_block

    std::string var_name(long j) const { return prefix + std::to_string(j); }
};

/// Equation sum_i lhs[i] * X_i = rhs with polynomial-in-s coefficients.
struct ConfigEquation {
    std::vector<ParamPoly> lhs;
    ParamPoly rhs;
    std::string label;
};

struct ConfigSystem {
    int n = 0;  // ambient dimension for moments and zonal polynomials
    std::vector<std::string> vars;
    std::vector<ShellBlock> blocks;
    std::vector<ConfigEquation> eqs;

    size_t add_block(ShellBlock block);
    /// Cardinality plus k = 1..k_max moment equations for one block
    /// (design moments, with the self-pair correction when x' lies in the shell).
    void add_moment_equations(const ShellBlock& block, int k_max);
    /// L <-> L' identity at the given degree, L'-side through u = 2 j^2.
    void add_dual_cross_equation(const CaseSpec& cs, const ShellBlock& lat,
                                 const ShellBlock& dual, int degree);
    /// Two-shell ratio equation: sum over the next shell equals
    /// ratio * sum over the minimal shell, ratio from the source series.
    void add_ratio_cross_equation(const CaseSpec& cs, const ShellBlock& next,
                                  const ShellBlock& min, int degree);
    /// Boundary bijection N_J = M_{|J-s|}: fires when the index bound of
    /// `next` comes from norm(x -+ x') >= min(L) with equality landing in the
    /// minimal shell. Numeric s only.
    void add_boundary_pair_equation(const ShellBlock& next, const ShellBlock& min,
                                    long s, long m0);

    LinearSystem<Rational> at(const Rational& s) const;
    LinearSystem<RatFunc> symbolic() const;
};

/// Exact moment right-hand side a * (1 3 ... (2k-1)) / (n (n+2) ... (n+2k-2))
/// * nu^k * s^k as a polynomial in s.
ParamPoly moment_rhs_poly(int n, const Rational& count, long nu, int k);

/// Zonal value polynomial in s at u = u_scale * j^2, m = zonal_norm.
ParamPoly zonal_value_poly(const ZonalCoeffs& z, long zonal_norm, long j, long u_scale);

struct ConfigSolution {
    SolveOutcome outcome = SolveOutcome::Inconsistent;
    std::vector<std::string> vars;
    LinearSolution<Rational> numeric;   // valid unless symbolic
    LinearSolution<RatFunc> parametric; // valid when symbolic
    bool symbolic = false;
};

/// Numeric solve at fixed s; assumptions pin named variables to values.
ConfigSolution solve_config_at(const ConfigSystem& sys, const Rational& s,
                               const std::vector<std::pair<std::string, Rational>>&
                                   assumptions = {});
/// Symbolic solve over Q(s).
ConfigSolution solve_config_symbolic(const ConfigSystem& sys,
                                     const std::vector<std::pair<std::string, Rational>>&
                                         assumptions = {});

/// Admissibility of one numeric solution: nonnegative, integral, and even for
/// indices j >= 1; parametrized families are checked by Fourier-Motzkin over
/// the stated nonnegativity constraints.
struct SVerdict {
    long s = 0;
    bool feasible = false;       // rational feasibility
    bool pinned = false;         // family collapsed to a single point
    std::vector<Rational> values;  // solution when unique/pinned
    std::string violated;        // first violated constraint when eliminated
    FmResult fm;                 // FM run (trace for certificates), when used
};

/// Verdict for a single even s: solve, apply the block constraints
/// (restricted to `constraint_vars` when nonempty), then nonnegativity /
/// evenness / integrality on pinned solutions.
SVerdict analyze_s(const ConfigSystem& sys, long s,
                   const std::vector<std::string>& constraint_vars = {});

struct SRange {
    long s_min = 0;  // first even candidate
    long s_max = 0;  // n m0 / 4 bound
    std::vector<SVerdict> verdicts;
    std::vector<long> survivors;
};

/// Enumerates even s in (m0 [+2 if two-shell], n m0/4], building the case's
/// bounding system at each s. `constraint_vars` restricts which counts carry
/// nonnegativity constraints (empty = all; rank 48 pins the claim-1 pair).
SRange feasible_s_range(const CaseSpec& cs, const ConfigSystem& sys,
                        const std::vector<std::string>& constraint_vars = {});

/// The case's bounding system with s left symbolic: the minimal-shell moment
/// system (r = 0) or the two-shell system with both ratio crosses (r = 4, 8).
ConfigSystem bounding_system(const CaseSpec& cs);

} // namespace modlat
