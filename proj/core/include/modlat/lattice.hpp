#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modlat/qseries.hpp"
#include "modlat/zonal.hpp"

namespace modlat {

using Coord = std::vector<long>;

/// Integral lattice given by its Gram matrix. Positive definiteness is
/// verified exactly (rational LDL^T) at construction.
class Lattice {
public:
    Lattice(std::vector<std::vector<Integer>> gram, std::string name = "");

    static Lattice from_file(const std::string& path);
    static Lattice from_text(const std::string& text, std::string name = "");
    /// "d4", "bw16", or "z4".
    static Lattice builtin(const std::string& name);

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<Integer>>& gram() const { return gram_; }
    bool is_even() const { return even_; }
    Integer determinant() const;

    Rational norm_of(const Coord& x) const;
    Rational inner(const Coord& x, const Coord& y) const;

    /// Gram of sqrt(2) * dual lattice, i.e. 2 * gram^{-1}; throws when the
    /// rescaled dual is not integral.
    Lattice rescaled_dual() const;

    /// Gram file format: first line n, then n rows of n integers.
    std::string to_text() const;

private:
    void validate();

    int n_;
    std::vector<std::vector<Integer>> gram_;
    std::string name_;
    bool even_ = false;
};

/// One representative per +-x pair, all with the declared norm.
struct Shell {
    long norm = 0;
    std::vector<Coord> reps;

    size_t vector_count() const { return 2 * reps.size(); }
};

inline constexpr uint64_t kDefaultNodeCap = 10'000'000;

/// Complete enumeration of {x : (x,x) = m}, exact arithmetic throughout;
/// throws ResourceError when the search tree exceeds node_cap.
Shell shell_enum(const Lattice& L, long m, uint64_t node_cap = kDefaultNodeCap);

/// Theta series by direct enumeration: coefficient of q^m is |L_m|, m < precision.
RationalSeries theta_direct(const Lattice& L, long precision,
                            uint64_t node_cap = kDefaultNodeCap);

/// Weighted theta with P = P_{d,x'}: coefficient of q^m is sum_{x in L_m} P(x).
RationalSeries weighted_theta_direct(const Lattice& L, const Coord& xprime, int degree,
                                     long precision, uint64_t node_cap = kDefaultNodeCap);

/// As above for the rescaled dual L' = sqrt(2) L^#, with x' still in L.
/// Inner products (v, x') for v = sqrt(2) w enter only through u = 2 (w,x')^2.
RationalSeries weighted_theta_rescaled_dual(const Lattice& L, const Coord& xprime,
                                            int degree, long precision,
                                            uint64_t node_cap = kDefaultNodeCap);

/// Histogram M_j = #{x in L_m : |(x,x')| = j}; index 0..max j encountered.
std::vector<Integer> config_count(const Lattice& L, const Coord& xprime, long m,
                                  uint64_t node_cap = kDefaultNodeCap);

/// Same counts taken over the dual minimal shell: w ranges over vectors of
/// L^# with 2(w,w) = m, inner products are the integral pairings (w, x').
std::vector<Integer> config_count_dual(const Lattice& L, const Coord& xprime, long m,
                                       uint64_t node_cap = kDefaultNodeCap);

struct ModularityEvidence {
    bool pass = false;
    bool even = false;
    bool dual_integral = false;   // 2 * gram^{-1} integral
    long checked_precision = 0;
    long first_mismatch = -1;     // exponent of first theta disagreement
};

/// Necessary 2-modularity evidence: theta of sqrt(2) L^# equals theta of L
/// through the given precision. Not an isometry proof and reported as such.
ModularityEvidence modularity_evidence(const Lattice& L, long precision,
                                       uint64_t node_cap = kDefaultNodeCap);

struct DesignDefect {
    int degree = 0;
    int trials = 0;
    Rational max_abs;                 // largest |sum_x P_{d,x'}(x)| observed
    std::vector<Rational> per_trial;
};

/// Zonal design test on a shell: exact sums sum_{x in shell} P_{d,x'}(x) for
/// pseudo-random integer directions x' (seeded, reproducible).
DesignDefect design_defect(const Lattice& L, const Shell& shell, int degree, int trials,
                           uint64_t seed);

} // namespace modlat
