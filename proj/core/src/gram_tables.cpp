#include "modlat/lattice.hpp"

namespace modlat {

namespace {

// D4 root lattice (Cartan matrix basis): even, determinant 4, 2-modular.
constexpr int kD4[4][4] = {
    {2, -1, 0, 0},
    {-1, 2, -1, -1},
    {0, -1, 2, 0},
    {0, -1, 0, 2},
};

// Barnes-Wall lattice BW16 = (1/sqrt 2) {x in Z^16 : x mod 2 in RM(1,4),
// sum x_i = 0 mod 4}, Hermite-normal-form basis. Even, determinant 2^8,
// minimum 4 with 4320 minimal vectors; the loader re-checks all of that.
constexpr int kBW16[16][16] = {
    {8, 4, 4, 4, 4, 4, 4, 2, 4, 4, 4, 2, 4, 2, 2, 2},
    {4, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1},
    {4, 2, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 2, 1},
    {4, 2, 2, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 2},
    {4, 2, 2, 2, 4, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 1},
    {4, 2, 2, 2, 2, 4, 2, 2, 2, 2, 2, 1, 2, 2, 1, 2},
    {4, 2, 2, 2, 2, 2, 4, 2, 2, 2, 2, 1, 2, 1, 2, 2},
    {2, 2, 2, 2, 2, 2, 2, 4, 1, 1, 1, 2, 1, 2, 2, 2},
    {4, 2, 2, 2, 2, 2, 2, 1, 4, 2, 2, 2, 2, 2, 2, 1},
    {4, 2, 2, 2, 2, 2, 2, 1, 2, 4, 2, 2, 2, 2, 1, 2},
    {4, 2, 2, 2, 2, 2, 2, 1, 2, 2, 4, 2, 2, 1, 2, 2},
    {2, 2, 2, 2, 1, 1, 1, 2, 2, 2, 2, 4, 1, 2, 2, 2},
    {4, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 1, 4, 2, 2, 2},
    {2, 2, 1, 1, 2, 2, 1, 2, 2, 2, 1, 2, 2, 4, 2, 2},
    {2, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2, 4, 2},
    {2, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 4},
};

template <size_t N>
std::vector<std::vector<Integer>> to_gram(const int (&m)[N][N]) {
    std::vector<std::vector<Integer>> g(N, std::vector<Integer>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) g[i][j] = m[i][j];
    return g;
}

Lattice make_bw16() {
    Lattice L(to_gram(kBW16), "bw16");
    if (!L.is_even() || L.determinant() != 256)
        throw std::logic_error("bw16 table corrupt: determinant/evenness check failed");
    RationalSeries theta = theta_direct(L, 5);
    if (theta.coeff(2) != Rational(0) || theta.coeff(4) != Rational(4320))
        throw std::logic_error("bw16 table corrupt: minimum/kissing check failed");
    return L;
}

} // namespace

Lattice Lattice::builtin(const std::string& name) {
    if (name == "d4") return Lattice(to_gram(kD4), "d4");
    if (name == "bw16") return make_bw16();
    if (name == "z4") {
        std::vector<std::vector<Integer>> g(4, std::vector<Integer>(4, 0));
        for (int i = 0; i < 4; ++i) g[i][i] = 1;
        return Lattice(std::move(g), "z4");
    }
    throw InputError("unknown builtin lattice '" + name + "' (have: d4, bw16, z4)");
}

} // namespace modlat
