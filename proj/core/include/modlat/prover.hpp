#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "modlat/configsys.hpp"
#include "modlat/root_system.hpp"

namespace modlat {

using Json = nlohmann::ordered_json;

/// Machine-checkable record of one theorem case. Every numeric claim inside
/// is recomputed on emission; "proven" requires every branch closed.
struct Certificate {
    int rank = 0;
    bool proven = false;
    std::string open_branch;  // reason when not proven
    Json doc;

    std::string to_json_string(int indent = 2) const { return doc.dump(indent); }
};

struct ProverOptions {
    long precision = 64;  // q-expansion order for shell sizes and ratios
};

/// Mechanized proof of Theorem case rank in {24, 32, 36, 48}: enumerate the
/// coset-norm range, close every surviving s by a recomputed contradiction,
/// and emit the full trail. Throws InputError on unsupported ranks.
Certificate verify_case(int rank, const ProverOptions& opts = {});

/// Logical gates of the rank-24 endgame at s = 8: parity facts, the sum-free
/// deduction, and the root-system budget. Inputs are the solved counts
/// (M_0..M_2 over L_4 and N_0..N_3 over L_6).
struct ParityDeduction {
    bool even_inner_on_min = false;   // (x',v) even for all v in L_4
    bool odd_inner_on_next = false;   // (x',w) odd for all w in L_6
    bool gates_pass = false;
    std::vector<std::string> facts;   // the derived chain, one line each
    RootSystemBudget budget;
    Rational root_count;              // |L_4|
};

ParityDeduction parity_deduction_rank24(const std::vector<Rational>& m_counts,
                                        const std::vector<Rational>& n_counts,
                                        const Rational& a_m0);

/// The three configuration tables of the concluding remarks, recomputed by
/// the same machinery with x' taken in the named shell. Throws logic_error
/// if any system fails to pin a unique admissible solution.
Json remark_tables(const ProverOptions& opts = {});

} // namespace modlat
