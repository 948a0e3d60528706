#pragma once

#include <string>
#include <vector>

#include "modlat/rational.hpp"

namespace modlat {

/// Largest number of roots a simply-laced root system of total rank <= rank
/// can have (A_n: n^2+n, D_n: 2n^2-2n, E6/E7/E8: 72/126/240), with a witness
/// decomposition attaining the maximum.
struct RootSystemBudget {
    int rank = 0;
    Integer max_roots;
    std::vector<std::string> witness;  // component names, e.g. {"D24"}
};

RootSystemBudget root_budget(int rank);

} // namespace modlat
