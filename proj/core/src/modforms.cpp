#include "modlat/modforms.hpp"

#include <algorithm>

#include "modlat/linear_system.hpp"
#include "modlat/series_catalog.hpp"

namespace modlat {

MonomialBasis monomial_basis(int weight, long precision) {
    if (weight < 2 || weight % 2 != 0)
        throw InputError("monomial_basis: weight must be even and positive");
    MonomialBasis out;
    out.weight = weight;
    RationalSeries theta = theta_d4(precision);
    RationalSeries d16 = delta16(precision);
    RationalSeries p24 = phi24(precision);
    for (int c = 0; c <= 1; ++c) {
        int rem0 = weight - 12 * c;
        if (rem0 < 0) continue;
        for (int b = 0; 8 * b <= rem0; ++b) {
            int rem = rem0 - 8 * b;
            if (rem % 2) continue;
            FormMonomial m{rem / 2, b, c};
            RationalSeries f = theta.pow(static_cast<unsigned long>(m.a)).truncated(precision);
            if (b) f = (f * d16.pow(static_cast<unsigned long>(b))).truncated(precision);
            if (c) f = (f * p24).truncated(precision);
            out.monomials.push_back(m);
            out.expansions.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<Rational> EchelonBasis::coordinates(const RationalSeries& f) const {
    // Reduced echelon basis: the coordinate along form i is the coefficient
    // of f at that form's pivot index. Correct only for members of the span;
    // callers needing certainty subtract and compare.
    std::vector<Rational> coords;
    coords.reserve(forms.size());
    for (long pivot : leading_std) coords.push_back(f.std_coeff(pivot));
    return coords;
}

EchelonBasis cusp_basis(int weight, long precision) {
    MonomialBasis mono = monomial_basis(weight, precision);
    std::vector<RationalSeries> rows;
    for (size_t i = 0; i < mono.monomials.size(); ++i)
        if (mono.monomials[i].cuspidal()) rows.push_back(mono.expansions[i]);
    if (rows.empty()) return {weight, {}, {}};

    const long stdp = rows.front().std_precision();
    // Gauss-Jordan on standard-index columns.
    std::vector<long> pivots;
    size_t done = 0;
    for (long col = 1; col < stdp && done < rows.size(); ++col) {
        size_t sel = done;
        while (sel < rows.size() && rows[sel].std_coeff(col).is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[done]);
        RationalSeries lead = rows[done].scaled(rows[done].std_coeff(col).inverse());
        rows[done] = lead;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == done) continue;
            const Rational& c = rows[i].std_coeff(col);
            if (!c.is_zero()) rows[i] = rows[i] - lead.scaled(c);
        }
        pivots.push_back(col);
        ++done;
    }
    if (done < rows.size())
        throw PrecisionError("cusp_basis: precision too small to echelonize weight " +
                             std::to_string(weight));
    return {weight, std::move(rows), std::move(pivots)};
}

template <class K>
QSeries<K> hecke_apply(const QSeries<K>& f, long p, int weight) {
    if (p < 2) throw InputError("hecke_apply: p must be a prime >= 2");
    const long in_std = f.std_precision();
    const long out_std = (in_std + p - 1) / p;
    if (out_std < 2) throw PrecisionError("hecke_apply: insufficient precision");
    QSeries<K> out(2 * out_std - 1);
    if (p == 2) {
        for (long k = 0; k < out_std; ++k) out.set_coeff(2 * k, f.std_coeff(2 * k));
        return out;
    }
    Rational pw = Rational(p).pow(static_cast<unsigned long>(weight - 1));
    for (long k = 0; k < out_std; ++k) {
        K v = f.std_coeff(p * k);
        if (k % p == 0 && k > 0) v += f.std_coeff(k / p) * K(pw);
        out.set_coeff(2 * k, v);
    }
    return out;
}

template QSeries<Rational> hecke_apply(const QSeries<Rational>&, long, int);
template QSeries<QuadExt> hecke_apply(const QSeries<QuadExt>&, long, int);

std::vector<std::vector<Rational>> hecke_matrix(const EchelonBasis& basis, long p) {
    const size_t dim = basis.dimension();
    std::vector<std::vector<Rational>> mat(dim, std::vector<Rational>(dim, Rational(0)));
    for (size_t j = 0; j < dim; ++j) {
        RationalSeries tf = hecke_apply(basis.forms[j], p, basis.weight);
        std::vector<Rational> coords = basis.coordinates(tf);
        for (size_t i = 0; i < dim; ++i) mat[i][j] = coords[i];
    }
    return mat;
}

namespace {

QSeries<Rational> pseudo_eigenform_series(long precision) {
    RationalSeries theta = theta_d4(precision);
    RationalSeries d16 = delta16(precision);
    return (theta * d16.pow(3)).truncated(precision);
}

QuadExt std_coeff_q(const QSeries<QuadExt>& f, long k) { return f.std_coeff(k); }

} // namespace

EigenSplit eigen_split_weight26(long precision) {
    const long prec = std::max<long>(precision, 200);
    EigenSplit out;
    out.precision_used = prec;
    out.g = pseudo_eigenform_series(prec);

    QSeries<Rational> t3g = hecke_apply(out.g, 3, 26);
    QSeries<Rational> t33g = hecke_apply(t3g, 3, 26);

    // T3^2 g = alpha g + beta T3 g on the minimal invariant subspace.
    LinearSystem<Rational> sys;
    const long rows = t33g.std_precision();
    for (long k = 1; k < rows; ++k) {
        sys.a.push_back({out.g.std_coeff(k), t3g.std_coeff(k)});
        sys.b.push_back(t33g.std_coeff(k));
    }
    LinearSolution<Rational> ab = solve_linear_exact(sys);
    if (ab.outcome != SolveOutcome::Unique)
        throw std::logic_error("eigen_split_weight26: invariant subspace not 2-dimensional");
    const Rational alpha = ab.particular[0];
    const Rational beta = ab.particular[1];
    out.trace = beta;

    // Characteristic roots of x^2 - beta x - alpha over Q(sqrt(d)).
    Rational disc = beta * beta + Rational(4) * alpha;
    QuadExt root = QuadExt::sqrt_of(disc);
    if (root.is_rational())
        throw std::logic_error("eigen_split_weight26: characteristic polynomial splits over Q");
    out.radicand = root.radicand();
    QuadExt half(Rational(1, 2));
    QuadExt lam1 = (QuadExt(beta) - root) * half;
    QuadExt lam2 = (QuadExt(beta) + root) * half;

    auto lift = [](const Rational& r) { return QuadExt(r); };
    QSeries<QuadExt> gq = out.g.map<QuadExt>(lift);
    QSeries<QuadExt> t3gq = t3g.map<QuadExt>(lift);

    auto build = [&](const QuadExt& lam) {
        Eigenform h;
        h.expansion = t3gq + gq.scaled(lam - QuadExt(beta));
        for (long p : {2L, 3L, 5L, 7L}) h.hecke_eigenvalues[p] = h.expansion.std_coeff(p);
        return h;
    };
    out.h1 = build(lam1);
    out.h2 = build(lam2);
    if (!(out.h1.expansion.std_coeff(1) == QuadExt(1)))
        throw std::logic_error("eigen_split_weight26: eigenform not normalized");

    // Eigen equations T_p h = c_h(p) h for p in {2,3,5,7}, within precision.
    for (const Eigenform* h : {&out.h1, &out.h2}) {
        for (long p : {2L, 3L, 5L, 7L}) {
            QSeries<QuadExt> th = hecke_apply(h->expansion, p, 26);
            QSeries<QuadExt> rhs =
                h->expansion.truncated(th.precision()).scaled(h->hecke_eigenvalues.at(p));
            for (long k = 1; k < th.std_precision(); ++k)
                if (!(std_coeff_q(th, k) == std_coeff_q(rhs, k)))
                    throw std::logic_error("eigen_split_weight26: eigen equation fails");
        }
    }

    // Difference identity: h2 - h1 = (lam2 - lam1) g = root * g, so
    // g = scale (h2 - h1) with scale = 1/root.
    out.scale = QuadExt(1) / root;
    QSeries<QuadExt> diff = out.h2.expansion - out.h1.expansion;
    for (long k = 0; k < diff.std_precision(); ++k) {
        QuadExt lhs = diff.std_coeff(k) * out.scale;
        if (!(lhs == QuadExt(out.g.std_coeff(k))))
            throw std::logic_error("eigen_split_weight26: difference identity fails");
    }
    return out;
}

PseudoEigenReport pseudo_eigen_check(int i_max, long precision) {
    if (i_max < 1) throw InputError("pseudo_eigen_check: i_max must be >= 1");
    const long needed_std = 3L * (1L << i_max);
    const long prec = std::max<long>(precision, 2 * needed_std + 2);
    PseudoEigenReport rep;
    rep.precision_used = prec;
    QSeries<Rational> g = pseudo_eigenform_series(prec);

    auto check = [&](long k, const Rational& expected) {
        Rational v = g.std_coeff(k);
        bool ok = v == expected;
        rep.checks.push_back({k, v, expected, ok});
        rep.all_ok = rep.all_ok && ok;
    };
    check(3, Rational(1));
    check(5, Rational(-324));
    check(6, Rational(4096));
    for (int i = 1; i <= i_max; ++i) {
        long two_i = 1L << i;
        check(two_i, Rational(0));
        Integer expected = Integer(1) << (12 * i);
        check(3 * two_i, Rational(expected));
    }
    return rep;
}

} // namespace modlat
