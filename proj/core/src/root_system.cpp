#include "modlat/root_system.hpp"

namespace modlat {

namespace {

struct Component {
    Integer roots;
    std::string name;
};

// Best single irreducible component of exactly rank k.
Component best_component(int k) {
    Component best{Integer(k) * k + k, "A" + std::to_string(k)};
    if (k >= 4) {
        Integer d = 2 * Integer(k) * k - 2 * k;
        if (d > best.roots) best = {d, "D" + std::to_string(k)};
    }
    if (k == 6 && best.roots < 72) best = {72, "E6"};
    if (k == 7 && best.roots < 126) best = {126, "E7"};
    if (k == 8 && best.roots < 240) best = {240, "E8"};
    return best;
}

} // namespace

RootSystemBudget root_budget(int rank) {
    if (rank < 1) throw InputError("root_budget: rank must be >= 1");
    std::vector<Integer> best(static_cast<size_t>(rank) + 1, 0);
    std::vector<int> choice(static_cast<size_t>(rank) + 1, 0);  // component rank, 0 = skip
    for (int r = 1; r <= rank; ++r) {
        best[r] = best[r - 1];
        choice[r] = 0;
        for (int k = 1; k <= r; ++k) {
            Integer cand = best_component(k).roots + best[r - k];
            if (cand > best[r]) {
                best[r] = cand;
                choice[r] = k;
            }
        }
    }
    RootSystemBudget out;
    out.rank = rank;
    out.max_roots = best[static_cast<size_t>(rank)];
    for (int r = rank; r > 0;) {
        if (choice[r] == 0) {
            --r;
        } else {
            out.witness.push_back(best_component(choice[r]).name);
            r -= choice[r];
        }
    }
    return out;
}

} // namespace modlat
