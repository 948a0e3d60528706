#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modlat/rational.hpp"

namespace modlat {

/// Affine constraint  sum_i coeff[i] * x_i + constant >= 0  over Q.
struct AffineConstraint {
    std::vector<Rational> coeff;
    Rational constant;
    std::string label;

    bool is_trivial() const;   // all coefficients zero, constant >= 0
    bool is_absurd() const;    // all coefficients zero, constant < 0
    Rational eval(const std::vector<Rational>& x) const;
};

/// One combination step in a Fourier-Motzkin derivation:
/// derived = pos_mult * C[pos] + neg_mult * C[neg], both multipliers > 0.
struct FmStep {
    size_t pos;
    size_t neg;
    Rational pos_mult;
    Rational neg_mult;
    AffineConstraint derived;
};

struct FmResult {
    bool feasible = false;
    std::vector<Rational> witness;          // set iff feasible
    std::vector<FmStep> trace;              // derivations, in order
    std::optional<size_t> contradiction;    // index into the combined list
    std::vector<AffineConstraint> all;      // originals then derived constraints
};

/// Exact Fourier-Motzkin elimination. Eliminates variables from the highest
/// index down; deterministic. On feasible input the witness satisfies every
/// constraint exactly; on infeasible input the trace replays to an absurd
/// constraint 0 >= positive-rational deficit.
FmResult fm_feasible(const std::vector<AffineConstraint>& constraints, size_t nvars);

/// Replays a derivation trace against the original constraints; returns true
/// when every step's combination is exact and the final constraint is absurd.
/// Independent of the solver path, for certificate checking.
bool fm_replay_infeasible(const std::vector<AffineConstraint>& originals,
                          const std::vector<FmStep>& trace);

/// Convenience: the pair {e >= 0, -e >= 0} encoding equality e = 0.
std::pair<AffineConstraint, AffineConstraint> equality_pair(const AffineConstraint& e);

} // namespace modlat
