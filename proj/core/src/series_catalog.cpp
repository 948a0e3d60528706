#include "modlat/series_catalog.hpp"

#include <sstream>

#include "modlat/linear_system.hpp"

namespace modlat {

int SeriesId::weight() const {
    switch (tag) {
        case SeriesTag::Delta16: return 8;
        case SeriesTag::ThetaD4: return 2;
        case SeriesTag::Phi24: return 12;
        case SeriesTag::BigDelta1: return 12;
        case SeriesTag::BigDelta2: return 12;
        case SeriesTag::Extremal: return rank / 2;
    }
    throw InputError("SeriesId: bad tag");
}

std::string SeriesId::name() const {
    switch (tag) {
        case SeriesTag::Delta16: return "delta16";
        case SeriesTag::ThetaD4: return "thetaD4";
        case SeriesTag::Phi24: return "phi24";
        case SeriesTag::BigDelta1: return "bigDelta1";
        case SeriesTag::BigDelta2: return "bigDelta2";
        case SeriesTag::Extremal: return "extremal:" + std::to_string(rank);
    }
    throw InputError("SeriesId: bad tag");
}

SeriesId SeriesId::parse(const std::string& text) {
    if (text == "delta16") return {SeriesTag::Delta16};
    if (text == "thetaD4") return {SeriesTag::ThetaD4};
    if (text == "phi24") return {SeriesTag::Phi24};
    if (text == "bigDelta1") return {SeriesTag::BigDelta1};
    if (text == "bigDelta2") return {SeriesTag::BigDelta2};
    if (text.rfind("extremal:", 0) == 0) {
        int n = std::stoi(text.substr(9));
        return {SeriesTag::Extremal, n};
    }
    throw InputError("unknown series '" + text + "'");
}

RationalSeries eta_block(long k, long precision) {
    RationalSeries out(precision);
    if (precision > 0) out.set_coeff(0, Rational(1));
    for (long j = 1;; ++j) {
        long e1 = k * j * (3 * j - 1) / 2;
        long e2 = k * j * (3 * j + 1) / 2;
        if (e1 >= precision && e2 >= precision) break;
        Rational sign(j % 2 == 0 ? 1 : -1);
        if (e1 < precision) out.set_coeff(e1, out.coeff(e1) + sign);
        if (e2 < precision) out.set_coeff(e2, out.coeff(e2) + sign);
    }
    return out;
}

RationalSeries delta16(long precision) {
    if (precision < 3) throw InputError("delta16: precision must be >= 3");
    RationalSeries blocks = eta_block(2, precision) * eta_block(4, precision);
    return blocks.pow(8).shifted(2).truncated(precision);
}

namespace {

// theta3 = sum q^{n^2}, theta4 = sum (-1)^n q^{n^2}
RationalSeries jacobi_theta(long precision, bool alternating) {
    RationalSeries out(precision);
    if (precision > 0) out.set_coeff(0, Rational(1));
    for (long m = 1; m * m < precision; ++m)
        out.set_coeff(m * m, Rational(alternating && (m % 2) ? -2 : 2));
    return out;
}

} // namespace

RationalSeries theta_d4(long precision) {
    if (precision < 1) throw InputError("theta_d4: precision must be >= 1");
    RationalSeries t3 = jacobi_theta(precision, false).pow(4).truncated(precision);
    RationalSeries t4 = jacobi_theta(precision, true).pow(4).truncated(precision);
    return (t3 + t4).scaled(Rational(1, 2));
}

RationalSeries big_delta_1(long precision) {
    return eta_block(2, precision).pow(24).shifted(2).truncated(precision);
}

RationalSeries big_delta_2(long precision) {
    return eta_block(4, precision).pow(24).shifted(4).truncated(precision);
}

RationalSeries phi24(long precision) {
    if (precision < 3) throw InputError("phi24: precision must be >= 3");
    return big_delta_1(precision) - big_delta_2(precision).scaled(Rational(64));
}

RationalSeries extremal_theta(int n, long precision) {
    if (n <= 0 || n % 4 != 0) throw InputError("extremal_theta: rank must be divisible by 4");
    const int k = n / 2;
    const int mu = n / 16;
    const long need = std::max<long>(precision, 2 * mu + 4);
    RationalSeries theta = theta_d4(need);
    RationalSeries d16 = delta16(need);

    std::vector<RationalSeries> monos;
    for (int b = 0; 8 * b <= k; ++b) {
        int a = (k - 8 * b) / 2;
        if (2 * a + 8 * b != k) continue;
        monos.push_back((theta.pow(a) * d16.pow(b)).truncated(need));
    }

    LinearSystem<Rational> sys;
    sys.b.assign(static_cast<size_t>(mu) + 1, Rational(0));
    sys.b[0] = Rational(1);
    for (int i = 0; i <= mu; ++i) {
        std::vector<Rational> row;
        for (const auto& mseries : monos) row.push_back(mseries.coeff(2 * i));
        sys.a.push_back(std::move(row));
    }
    LinearSolution<Rational> sol = solve_linear_exact(sys);
    if (sol.outcome != SolveOutcome::Unique)
        throw InputError("extremal_theta: no unique extremal series for n = " +
                         std::to_string(n));

    RationalSeries out(need);
    for (size_t j = 0; j < monos.size(); ++j) out = out + monos[j].scaled(sol.particular[j]);
    return out.truncated(precision);
}

RationalSeries series_by_id(const SeriesId& id, long precision) {
    switch (id.tag) {
        case SeriesTag::Delta16: return delta16(precision);
        case SeriesTag::ThetaD4: return theta_d4(precision);
        case SeriesTag::Phi24: return phi24(precision);
        case SeriesTag::BigDelta1: return big_delta_1(precision);
        case SeriesTag::BigDelta2: return big_delta_2(precision);
        case SeriesTag::Extremal: return extremal_theta(id.rank, precision);
    }
    throw InputError("series_by_id: bad tag");
}

std::string series_to_text(const RationalSeries& f) {
    std::ostringstream os;
    for (long e = 0; e < f.precision(); ++e) {
        if (f.coeff(e).is_zero()) continue;
        os << e << " " << f.coeff(e).fraction_str() << "\n";
    }
    os << "O(q^" << f.precision() << ")\n";
    return os.str();
}

RationalSeries series_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<long, Rational>> entries;
    long prec = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("O(q^", 0) == 0) {
            auto close = line.find(')');
            prec = std::stol(line.substr(4, close - 4));
            break;
        }
        std::istringstream ls(line);
        long e;
        std::string frac;
        if (!(ls >> e >> frac)) throw InputError("series_from_text: bad line '" + line + "'");
        entries.emplace_back(e, Rational::parse(frac));
    }
    if (prec < 0) throw InputError("series_from_text: missing O(q^N) terminator");
    RationalSeries out(prec);
    for (auto& [e, c] : entries) out.set_coeff(e, std::move(c));
    return out;
}

} // namespace modlat
