#include "modlat/fourier_motzkin.hpp"

#include <algorithm>
#include <map>

namespace modlat {

bool AffineConstraint::is_trivial() const {
    for (const auto& c : coeff)
        if (!c.is_zero()) return false;
    return constant.sign() >= 0;
}

bool AffineConstraint::is_absurd() const {
    for (const auto& c : coeff)
        if (!c.is_zero()) return false;
    return constant.sign() < 0;
}

Rational AffineConstraint::eval(const std::vector<Rational>& x) const {
    Rational acc = constant;
    for (size_t i = 0; i < coeff.size(); ++i) acc += coeff[i] * x[i];
    return acc;
}

std::pair<AffineConstraint, AffineConstraint> equality_pair(const AffineConstraint& e) {
    AffineConstraint neg = e;
    for (auto& c : neg.coeff) c = -c;
    neg.constant = -neg.constant;
    neg.label = e.label.empty() ? "" : e.label + " (reversed)";
    return {e, neg};
}

namespace {

// Scale so the first nonzero coefficient (or the constant) is +-1; used only
// to deduplicate parallel constraints, keeping the weaker copies out.
std::vector<Rational> dedup_key(const AffineConstraint& c) {
    std::vector<Rational> key = c.coeff;
    Rational scale(0);
    for (const auto& v : key)
        if (!v.is_zero()) { scale = v.abs(); break; }
    if (scale.is_zero()) return key;
    for (auto& v : key) v = v / scale;
    return key;
}

} // namespace

FmResult fm_feasible(const std::vector<AffineConstraint>& constraints, size_t nvars) {
    FmResult res;
    res.all = constraints;
    for (auto& c : res.all) {
        if (c.coeff.size() != nvars)
            throw InputError("fm_feasible: constraint arity mismatch");
    }

    // active[v] = indices into res.all of the constraints alive before
    // eliminating variable v (constraints mentioning only x_0..x_v).
    std::vector<size_t> active;
    for (size_t i = 0; i < res.all.size(); ++i) {
        if (res.all[i].is_absurd()) {
            res.contradiction = i;
            return res;
        }
        if (!res.all[i].is_trivial()) active.push_back(i);
    }

    std::vector<std::vector<size_t>> stage(nvars + 1);
    for (size_t v = nvars; v-- > 0;) {
        stage[v + 1] = active;
        std::vector<size_t> lower, upper, rest;
        for (size_t idx : active) {
            int s = res.all[idx].coeff[v].sign();
            if (s > 0) lower.push_back(idx);
            else if (s < 0) upper.push_back(idx);
            else rest.push_back(idx);
        }
        std::map<std::vector<Rational>, std::pair<Rational, size_t>> best;
        auto consider = [&](size_t idx) {
            auto key = dedup_key(res.all[idx]);
            Rational slack = res.all[idx].constant;
            // same direction: keep the tighter (smaller scaled constant)
            Rational scale(0);
            for (const auto& c : res.all[idx].coeff)
                if (!c.is_zero()) { scale = c.abs(); break; }
            if (!scale.is_zero()) slack = slack / scale;
            auto it = best.find(key);
            if (it == best.end() || slack < it->second.first) best[key] = {slack, idx};
        };
        for (size_t ip : lower)
            for (size_t in : upper) {
                const auto& p = res.all[ip];
                const auto& q = res.all[in];
                FmStep step;
                step.pos = ip;
                step.neg = in;
                step.pos_mult = -q.coeff[v];  // > 0
                step.neg_mult = p.coeff[v];   // > 0
                AffineConstraint d;
                d.coeff.assign(nvars, Rational(0));
                for (size_t j = 0; j < nvars; ++j)
                    d.coeff[j] = step.pos_mult * p.coeff[j] + step.neg_mult * q.coeff[j];
                d.constant = step.pos_mult * p.constant + step.neg_mult * q.constant;
                d.label = "eliminate x" + std::to_string(v);
                step.derived = d;
                res.all.push_back(d);
                res.trace.push_back(step);
                const size_t idx = res.all.size() - 1;
                if (d.is_absurd()) {
                    res.contradiction = idx;
                    return res;
                }
                if (!d.is_trivial()) consider(idx);
            }
        for (size_t idx : rest) consider(idx);
        active.clear();
        for (const auto& [key, val] : best) active.push_back(val.second);
        std::sort(active.begin(), active.end());
    }
    stage[0] = active;  // variable-free; all trivial or we would have returned

    // Feasible: rebuild a witness from the lowest variable up.
    res.feasible = true;
    res.witness.assign(nvars, Rational(0));
    for (size_t v = 0; v < nvars; ++v) {
        std::optional<Rational> lo, hi;
        for (size_t idx : stage[v + 1]) {
            const auto& c = res.all[idx];
            int s = c.coeff[v].sign();
            if (s == 0) continue;
            Rational acc = c.constant;
            for (size_t j = 0; j < v; ++j) acc += c.coeff[j] * res.witness[j];
            Rational bound = -acc / c.coeff[v];
            if (s > 0) {  // x_v >= bound
                if (!lo || bound > *lo) lo = bound;
            } else {      // x_v <= bound
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi) res.witness[v] = (*lo + *hi) / Rational(2);
        else if (lo) res.witness[v] = *lo;
        else if (hi) res.witness[v] = *hi;
    }
    for (const auto& c : constraints) {
        if (c.eval(res.witness).sign() < 0)
            throw std::logic_error("fm_feasible: witness fails a constraint");
    }
    return res;
}

bool fm_replay_infeasible(const std::vector<AffineConstraint>& originals,
                          const std::vector<FmStep>& trace) {
    if (trace.empty()) {
        for (const auto& c : originals)
            if (c.is_absurd()) return true;
        return false;
    }
    std::vector<AffineConstraint> all = originals;
    for (const auto& step : trace) {
        if (step.pos >= all.size() || step.neg >= all.size()) return false;
        if (step.pos_mult.sign() <= 0 || step.neg_mult.sign() <= 0) return false;
        const auto& p = all[step.pos];
        const auto& q = all[step.neg];
        AffineConstraint d;
        d.coeff.assign(p.coeff.size(), Rational(0));
        for (size_t j = 0; j < p.coeff.size(); ++j)
            d.coeff[j] = step.pos_mult * p.coeff[j] + step.neg_mult * q.coeff[j];
        d.constant = step.pos_mult * p.constant + step.neg_mult * q.constant;
        if (d.coeff != step.derived.coeff || d.constant != step.derived.constant)
            return false;
        all.push_back(d);
    }
    return !all.empty() && all.back().is_absurd();
}

} // namespace modlat
