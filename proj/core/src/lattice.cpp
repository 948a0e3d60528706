#include "modlat/lattice.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace modlat {

namespace {

struct LdlDecomposition {
    std::vector<Rational> d;                 // positive pivots
    std::vector<std::vector<Rational>> u;    // unit upper triangular factors
};

// Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2, exact over Q.
LdlDecomposition ldl(const std::vector<std::vector<Integer>>& gram) {
    const size_t n = gram.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(gram[i][j]);
    LdlDecomposition out;
    out.d.assign(n, Rational(0));
    out.u.assign(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        out.d[i] = a[i][i];
        if (out.d[i].sign() <= 0)
            throw InputError("Lattice: Gram matrix is not positive definite");
        for (size_t j = i + 1; j < n; ++j) out.u[i][j] = a[i][j] / out.d[i];
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j; k < n; ++k) {
                a[j][k] -= out.u[i][j] * a[i][k];
                a[k][j] = a[j][k];
            }
    }
    return out;
}

// largest integer k with k <= -c + sqrt(t); requires t >= 0
long floor_center_plus_sqrt(const Rational& c, const Rational& t) {
    auto pred = [&](long k) {
        Rational kc = Rational(k) + c;
        if (kc.sign() <= 0) return true;
        return kc * kc <= t;
    };
    Integer est_i = (t.sign() > 0) ? [&] {
        Integer fl = t.floor(), r;
        mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
        return r;
    }() : Integer(0);
    long k = static_cast<long>((-c).floor().get_si() + est_i.get_si());
    while (pred(k + 1)) ++k;
    while (!pred(k)) --k;
    return k;
}

struct EnumContext {
    const LdlDecomposition* ldl;
    long n;
    Rational budget;
    uint64_t cap;
    uint64_t nodes = 0;
    std::vector<long> x;
    // visit(norm offset unused) -> called with complete coordinate vector
    std::function<void(const std::vector<long>&)> visit;

    void tick() {
        if (++nodes > cap)
            throw ResourceError("lattice enumeration exceeded node cap of " +
                                std::to_string(cap) + " nodes");
    }

    // levels descend from n-1 to 0; zero_prefix = all coordinates above are 0
    void descend(long level, const Rational& remaining, bool zero_prefix) {
        if (level < 0) {
            if (!zero_prefix) visit(x);
            return;
        }
        const auto& u = ldl->u[static_cast<size_t>(level)];
        Rational center(0);
        for (long j = level + 1; j < n; ++j)
            if (x[static_cast<size_t>(j)] != 0)
                center += u[static_cast<size_t>(j)] * Rational(x[static_cast<size_t>(j)]);
        Rational t = remaining / ldl->d[static_cast<size_t>(level)];
        long hi = floor_center_plus_sqrt(center, t);
        long lo = -floor_center_plus_sqrt(-center, t);  // smallest k >= -c - sqrt(t)
        if (zero_prefix) lo = std::max<long>(lo, 0);    // +-x representatives
        for (long v = lo; v <= hi; ++v) {
            tick();
            x[static_cast<size_t>(level)] = v;
            Rational off = Rational(v) + center;
            Rational used = ldl->d[static_cast<size_t>(level)] * off * off;
            if (used > remaining) continue;  // endpoints are exact; interior always fits
            descend(level - 1, remaining - used, zero_prefix && v == 0);
        }
        x[static_cast<size_t>(level)] = 0;
    }
};

std::vector<std::vector<Rational>> rational_inverse(
    const std::vector<std::vector<Integer>>& m) {
    const size_t n = m.size();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) w[i][j] = Rational(m[i][j]);
        w[i][n + i] = Rational(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && w[sel][col].is_zero()) ++sel;
        if (sel == n) throw InputError("rational_inverse: singular matrix");
        std::swap(w[sel], w[col]);
        Rational inv = w[col][col].inverse();
        for (size_t j = 0; j < 2 * n; ++j) w[col][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col].is_zero()) continue;
            Rational f = w[i][col];
            for (size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = w[i][n + j];
    return out;
}

// Enumerate representatives of +-pairs with norm <= bound; visit(x, norm).
void enumerate_up_to(const Lattice& L, long bound, uint64_t cap,
                     const std::function<void(const Coord&, long)>& visit) {
    if (bound < 0) return;
    LdlDecomposition dec = ldl(L.gram());
    EnumContext ctx;
    ctx.ldl = &dec;
    ctx.n = L.dim();
    ctx.budget = Rational(bound);
    ctx.cap = cap;
    ctx.x.assign(static_cast<size_t>(L.dim()), 0);
    ctx.visit = [&](const std::vector<long>& x) {
        Rational norm = L.norm_of(x);
        visit(x, norm.numerator().get_si());
    };
    ctx.descend(L.dim() - 1, ctx.budget, true);
}

} // namespace

Lattice::Lattice(std::vector<std::vector<Integer>> gram, std::string name)
    : n_(static_cast<int>(gram.size())), gram_(std::move(gram)), name_(std::move(name)) {
    validate();
}

void Lattice::validate() {
    if (n_ == 0) throw InputError("Lattice: empty Gram matrix");
    for (const auto& row : gram_)
        if (static_cast<int>(row.size()) != n_)
            throw InputError("Lattice: Gram matrix is not square");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw InputError("Lattice: Gram matrix is not symmetric");
    ldl(gram_);  // throws when not positive definite
    even_ = true;
    for (int i = 0; i < n_; ++i)
        if (mpz_odd_p(gram_[i][i].get_mpz_t())) even_ = false;
}

Lattice Lattice::from_text(const std::string& text, std::string name) {
    std::istringstream is(text);
    int n;
    if (!(is >> n) || n <= 0) throw InputError("Gram file: bad dimension line");
    std::vector<std::vector<Integer>> gram(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(is >> tok)) throw InputError("Gram file: truncated matrix");
            gram[i][j] = Integer(tok);
        }
    return Lattice(std::move(gram), std::move(name));
}

Lattice Lattice::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open Gram file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return from_text(buf.str(), path);
}

Integer Lattice::determinant() const {
    // Fraction-free (Bareiss) determinant.
    std::vector<std::vector<Integer>> a = gram_;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n_ - 1; ++k) {
        if (a[k][k] == 0) {
            int sel = k + 1;
            while (sel < n_ && a[sel][k] == 0) ++sel;
            if (sel == n_) return 0;
            std::swap(a[sel], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n_ - 1][n_ - 1];
}

Rational Lattice::norm_of(const Coord& x) const { return inner(x, x); }

Rational Lattice::inner(const Coord& x, const Coord& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
        throw InputError("Lattice: coordinate arity mismatch");
    Integer acc = 0;
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        Integer row = 0;
        for (int j = 0; j < n_; ++j)
            if (y[j] != 0) row += gram_[i][j] * Integer(y[j]);
        acc += Integer(x[i]) * row;
    }
    return Rational(acc);
}

Lattice Lattice::rescaled_dual() const {
    auto inv = rational_inverse(gram_);
    std::vector<std::vector<Integer>> g2(n_, std::vector<Integer>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Rational v = Rational(2) * inv[i][j];
            if (!v.is_integer())
                throw InputError("rescaled_dual: 2 * gram^{-1} is not integral");
            g2[i][j] = v.numerator();
        }
    return Lattice(std::move(g2), name_.empty() ? "dual" : name_ + "-dual");
}

std::string Lattice::to_text() const {
    std::ostringstream os;
    os << n_ << "\n";
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << gram_[i][j].get_str();
        os << "\n";
    }
    return os.str();
}

Shell shell_enum(const Lattice& L, long m, uint64_t node_cap) {
    if (m < 1) throw InputError("shell_enum: norm must be >= 1");
    Shell shell;
    shell.norm = m;
    enumerate_up_to(L, m, node_cap, [&](const Coord& x, long norm) {
        if (norm == m) shell.reps.push_back(x);
    });
    std::sort(shell.reps.begin(), shell.reps.end());
    return shell;
}

RationalSeries theta_direct(const Lattice& L, long precision, uint64_t node_cap) {
    std::vector<Integer> counts(static_cast<size_t>(precision), 0);
    if (precision > 0) counts[0] = 1;  // the zero vector
    enumerate_up_to(L, precision - 1, node_cap, [&](const Coord&, long norm) {
        if (norm < precision) counts[static_cast<size_t>(norm)] += 2;
    });
    RationalSeries out(precision);
    for (long e = 0; e < precision; ++e)
        if (counts[static_cast<size_t>(e)] != 0)
            out.set_coeff(e, Rational(counts[static_cast<size_t>(e)]));
    return out;
}

RationalSeries weighted_theta_direct(const Lattice& L, const Coord& xprime, int degree,
                                     long precision, uint64_t node_cap) {
    ZonalCoeffs z = zonal_coeffs(L.dim(), degree);
    Rational s = L.norm_of(xprime);
    if (s.is_zero()) throw InputError("weighted_theta_direct: x' must be nonzero");
    std::vector<Rational> sums(static_cast<size_t>(precision), Rational(0));
    enumerate_up_to(L, precision - 1, node_cap, [&](const Coord& x, long norm) {
        if (norm >= precision) return;
        Rational ip = L.inner(x, xprime);
        Rational val = zonal_eval(z, {Rational(norm), s, ip * ip});
        sums[static_cast<size_t>(norm)] += Rational(2) * val;  // P is even: x and -x
    });
    RationalSeries out(precision);
    // the zero vector contributes P(0) = 0 for degree >= 2
    for (long e = 0; e < precision; ++e)
        if (!sums[static_cast<size_t>(e)].is_zero()) out.set_coeff(e, sums[static_cast<size_t>(e)]);
    return out;
}

RationalSeries weighted_theta_rescaled_dual(const Lattice& L, const Coord& xprime,
                                            int degree, long precision,
                                            uint64_t node_cap) {
    Lattice dual2 = L.rescaled_dual();
    ZonalCoeffs z = zonal_coeffs(L.dim(), degree);
    Rational s = L.norm_of(xprime);
    // w in L^# has coordinates y in the dual basis; (w, x') = y . a where a are
    // the L-coordinates of x', and (v, x')^2 = 2 (w, x')^2 for v = sqrt(2) w.
    std::vector<Rational> sums(static_cast<size_t>(precision), Rational(0));
    enumerate_up_to(dual2, precision - 1, node_cap, [&](const Coord& y, long norm) {
        if (norm >= precision) return;
        Integer dot = 0;
        for (size_t i = 0; i < y.size(); ++i) dot += Integer(y[i]) * Integer(xprime[i]);
        Rational u = Rational(2) * Rational(dot) * Rational(dot);
        Rational val = zonal_eval(z, {Rational(norm), s, u});
        sums[static_cast<size_t>(norm)] += Rational(2) * val;
    });
    RationalSeries out(precision);
    for (long e = 0; e < precision; ++e)
        if (!sums[static_cast<size_t>(e)].is_zero()) out.set_coeff(e, sums[static_cast<size_t>(e)]);
    return out;
}

std::vector<Integer> config_count(const Lattice& L, const Coord& xprime, long m,
                                  uint64_t node_cap) {
    if (L.norm_of(xprime).is_zero())
        throw InputError("config_count: direction vector must be nonzero");
    Shell shell = shell_enum(L, m, node_cap);
    std::vector<Integer> hist;
    for (const Coord& x : shell.reps) {
        Rational ip = L.inner(x, xprime).abs();
        if (!ip.is_integer()) throw InputError("config_count: non-integral inner product");
        size_t j = static_cast<size_t>(ip.numerator().get_ui());
        if (hist.size() <= j) hist.resize(j + 1, 0);
        hist[j] += 2;
    }
    return hist;
}

std::vector<Integer> config_count_dual(const Lattice& L, const Coord& xprime, long m,
                                       uint64_t node_cap) {
    Lattice dual2 = L.rescaled_dual();
    Shell shell = shell_enum(dual2, m, node_cap);
    std::vector<Integer> hist;
    for (const Coord& y : shell.reps) {
        Integer dot = 0;
        for (size_t i = 0; i < y.size(); ++i) dot += Integer(y[i]) * Integer(xprime[i]);
        Integer j = abs(dot);
        size_t jj = j.get_ui();
        if (hist.size() <= jj) hist.resize(jj + 1, 0);
        hist[jj] += 2;
    }
    return hist;
}

ModularityEvidence modularity_evidence(const Lattice& L, long precision,
                                       uint64_t node_cap) {
    ModularityEvidence ev;
    ev.even = L.is_even();
    ev.checked_precision = precision;
    Lattice dual2 = [&]() -> Lattice {
        try {
            Lattice d = L.rescaled_dual();
            ev.dual_integral = true;
            return d;
        } catch (const InputError&) {
            ev.dual_integral = false;
            return L;  // placeholder, unused
        }
    }();
    if (!ev.dual_integral) {
        ev.pass = false;
        return ev;
    }
    RationalSeries t1 = theta_direct(L, precision, node_cap);
    RationalSeries t2 = theta_direct(dual2, precision, node_cap);
    ev.pass = ev.even;
    for (long e = 0; e < precision; ++e) {
        if (t1.coeff(e) != t2.coeff(e)) {
            ev.pass = false;
            ev.first_mismatch = e;
            break;
        }
    }
    return ev;
}

DesignDefect design_defect(const Lattice& L, const Shell& shell, int degree, int trials,
                           uint64_t seed) {
    if (shell.reps.empty()) throw InputError("design_defect: empty shell");
    DesignDefect out;
    out.degree = degree;
    out.trials = trials;
    out.max_abs = Rational(0);
    ZonalCoeffs z = zonal_coeffs(L.dim(), degree);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Coord dir(static_cast<size_t>(L.dim()), 0);
        bool nonzero = false;
        while (!nonzero) {
            nonzero = false;
            for (auto& v : dir) {
                v = static_cast<long>(rng() % 7) - 3;
                nonzero = nonzero || v != 0;
            }
        }
        Rational s = L.norm_of(dir);
        Rational sum(0);
        for (const Coord& x : shell.reps) {
            Rational ip = L.inner(x, dir);
            sum += Rational(2) * zonal_eval(z, {Rational(shell.norm), s, ip * ip});
        }
        out.per_trial.push_back(sum);
        if (sum.abs() > out.max_abs) out.max_abs = sum.abs();
    }
    return out;
}

} // namespace modlat
