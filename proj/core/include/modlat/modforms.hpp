#pragma once

#include <map>
#include <vector>

#include "modlat/qseries.hpp"
#include "modlat/quadext.hpp"

namespace modlat {

/// Monomial theta_D4^a delta16^b phi24^c of weight 2a + 8b + 12c, c in {0,1}.
struct FormMonomial {
    int a = 0, b = 0, c = 0;
    int weight() const { return 2 * a + 8 * b + 12 * c; }
    bool cuspidal() const { return b >= 1 || c == 1; }
};

/// Spanning monomials of the weight-w space for Gamma_0(2), with expansions.
struct MonomialBasis {
    int weight = 0;
    std::vector<FormMonomial> monomials;
    std::vector<RationalSeries> expansions;
};

/// Reduced echelon basis of the cusp subspace: strictly increasing leading
/// standard indices, unit leading coefficients, zeros above and below pivots.
struct EchelonBasis {
    int weight = 0;
    std::vector<RationalSeries> forms;
    std::vector<long> leading_std;  // pivot standard index of each form

    size_t dimension() const { return forms.size(); }
    /// Coordinates of a cusp form in this basis (reads off pivot coefficients).
    std::vector<Rational> coordinates(const RationalSeries& f) const;
};

MonomialBasis monomial_basis(int weight, long precision);
EchelonBasis cusp_basis(int weight, long precision);

/// T_p on standard-index coefficients: b(k) = c(pk) + p^{weight-1} c(k/p)
/// (second term only when p | k). For p = 2 the level-2 U_2 convention
/// b(k) = c(2k) applies. Output precision is what the input supports.
template <class K>
QSeries<K> hecke_apply(const QSeries<K>& f, long p, int weight);

/// Matrix of T_p in an echelon basis, column j = coordinates of T_p f_j.
std::vector<std::vector<Rational>> hecke_matrix(const EchelonBasis& basis, long p);

struct Eigenform {
    QSeries<QuadExt> expansion;       // normalized: std coefficient 1 is 1
    std::map<long, QuadExt> hecke_eigenvalues;  // p -> c(p), p in {2,3,5,7}
    int weight = 26;
};

/// Result of splitting the minimal T_3-invariant subspace containing
/// g = thetaD4 * delta16^3 inside the weight-26 cusp space.
struct EigenSplit {
    Eigenform h1;                 // eigenvalue with the minus sign on sqrt(d)
    Eigenform h2;                 // eigenvalue with the plus sign
    long radicand = 0;            // splitting field Q(sqrt(radicand))
    Rational trace;               // c_{h1}(3) + c_{h2}(3)
    QuadExt scale;                // g = scale * (h2 - h1)
    QSeries<Rational> g;          // the pseudo-normalized eigenform itself
    long precision_used = 0;
};

/// Splits weight 26 over Q(sqrt(106705)); verifies the eigen equations and
/// the difference identity before returning. Raises the working precision to
/// at least 200 q-exponents.
EigenSplit eigen_split_weight26(long precision);

/// Coefficient laws of the pseudo-normalized eigenform g = thetaD4 delta16^3:
/// a(2^i) = 0 and a(2^i 3) = 2^{12 i} for i = 1..i_max, plus the leading
/// pattern a(3) = 1, a(5) = -324, a(6) = 4096.
struct PseudoEigenReport {
    struct Entry {
        long index;
        Rational value;
        Rational expected;
        bool ok;
    };
    std::vector<Entry> checks;
    bool all_ok = true;
    long precision_used = 0;
};

PseudoEigenReport pseudo_eigen_check(int i_max, long precision);

} // namespace modlat
