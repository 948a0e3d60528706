// modlat command-line interface: proof certificates, q-expansions, form
// bases, eigenform splits, zonal coefficients, configuration systems, and
// the concrete-lattice oracle.
//
// Exit status: 0 success / proven, 1 not-proven or failed check, 2 bad input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "modlat/lattice.hpp"
#include "modlat/modforms.hpp"
#include "modlat/prover.hpp"
#include "modlat/series_catalog.hpp"

namespace {

using modlat::Json;
using modlat::Rational;
using modlat::RationalSeries;

struct JsonSink {
    bool enabled = false;
    std::string path;  // empty = stdout

    void emit(const Json& doc) const {
        if (path.empty()) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::ofstream f(path);
            if (!f) throw modlat::InputError("cannot write to '" + path + "'");
            f << doc.dump(2) << "\n";
        }
    }
};

Json series_json(const RationalSeries& f) {
    Json coeffs = Json::object();
    for (long e = 0; e < f.precision(); ++e)
        if (!f.coeff(e).is_zero()) coeffs[std::to_string(e)] = f.coeff(e).fraction_str();
    Json out = Json::object();
    out["coefficients"] = std::move(coeffs);
    out["precision"] = f.precision();
    return out;
}

modlat::Coord parse_coord(const std::string& csv, int dim) {
    modlat::Coord out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (static_cast<int>(out.size()) != dim)
        throw modlat::InputError("--xprime needs " + std::to_string(dim) +
                                 " comma-separated integers");
    return out;
}

int run_prove(int rank, long order, bool json_set, const std::string& json_path) {
    modlat::Certificate cert = modlat::verify_case(rank, {order});
    if (json_set || !json_path.empty()) {
        JsonSink sink{true, json_path};
        sink.emit(cert.doc);
    } else {
        std::cout << "case rank " << rank << ": "
                  << cert.doc["case"]["claim"].get<std::string>() << "\n";
        std::cout << "survivors:";
        for (const auto& s : cert.doc["survivors"]) std::cout << " " << s;
        std::cout << "\nbranches closed: " << cert.doc["branches"].size() << "\n";
        std::cout << "verdict: " << (cert.proven ? "proven" : "not-proven") << "\n";
        if (!cert.proven) std::cout << "open branch: " << cert.open_branch << "\n";
    }
    return cert.proven ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact level-2 modular form / lattice configuration engine"};
    app.require_subcommand(1);
    app.fallthrough();

    long order = 64;
    app.add_option("--order", order, "q-expansion precision (exponent bound)")
        ->capture_default_str();

    // ---- prove ----
    auto* prove = app.add_subcommand("prove", "mechanize one theorem case");
    prove->fallthrough();
    int prove_rank = 0;
    bool prove_remarks = false;
    std::string prove_json;
    prove->add_option("--rank", prove_rank, "lattice rank (24, 32, 36, 48)");
    prove->add_flag("--remarks", prove_remarks,
                    "recompute the three remark configuration tables instead");
    auto* prove_json_opt =
        prove->add_option("--json", prove_json, "write certificate JSON")->expected(0, 1);

    // ---- qexp ----
    auto* qexp = app.add_subcommand("qexp", "print a named q-expansion");
    qexp->fallthrough();
    std::string series_name;
    std::string qexp_json;
    qexp->add_option("--series", series_name,
                     "delta16 | thetaD4 | phi24 | bigDelta1 | bigDelta2 | extremal:<n>")
        ->required();
    auto* qexp_json_opt = qexp->add_option("--json", qexp_json)->expected(0, 1);

    // ---- forms ----
    auto* forms = app.add_subcommand("forms", "echelon cusp basis of a weight");
    forms->fallthrough();
    int weight = 26;
    std::string forms_json;
    forms->add_option("--weight", weight, "modular form weight")->required();
    auto* forms_json_opt = forms->add_option("--json", forms_json)->expected(0, 1);

    // ---- eigen ----
    auto* eigen = app.add_subcommand("eigen", "weight-26 eigenform split");
    eigen->fallthrough();
    int pseudo_imax = 0;
    std::string eigen_json;
    eigen->add_option("--pseudo", pseudo_imax,
                      "also verify the pseudo-eigenform laws up to i_max");
    auto* eigen_json_opt = eigen->add_option("--json", eigen_json)->expected(0, 1);

    // ---- zonal ----
    auto* zonal = app.add_subcommand("zonal", "zonal harmonic coefficients");
    zonal->fallthrough();
    int zdim = 0, zdeg = 0;
    std::string zonal_json;
    zonal->add_option("--dim", zdim, "ambient dimension")->required();
    zonal->add_option("--degree", zdeg, "even degree")->required();
    auto* zonal_json_opt = zonal->add_option("--json", zonal_json)->expected(0, 1);

    // ---- config ----
    auto* config = app.add_subcommand("config", "configuration-number system");
    config->fallthrough();
    int config_rank = 0;
    long config_s = -1;
    std::string config_json;
    config->add_option("--rank", config_rank, "case rank (24, 32, 36, 48)")->required();
    config->add_option("--s", config_s, "fix the coset norm s (omit for the full scan)");
    config->add_option("--json", config_json)->expected(0, 1);  // config always emits JSON

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "concrete-lattice brute force");
    oracle->fallthrough();
    std::string lat_name, gram_path, op = "theta", xprime_csv;
    long norm = 0;
    int degree = 4, trials = 3;
    uint64_t seed = 1, cap = modlat::kDefaultNodeCap;
    bool dual = false;
    std::string oracle_json;
    oracle->add_option("--lattice", lat_name, "builtin lattice: d4 | bw16 | z4");
    oracle->add_option("--gram", gram_path, "Gram matrix file (line 1: n, then n rows)");
    oracle->add_option("--op", op, "theta | shell | modularity | design | wtheta | config");
    oracle->add_option("--norm", norm, "shell norm for shell/design/config");
    oracle->add_option("--degree", degree, "zonal degree for design/wtheta");
    oracle->add_option("--trials", trials, "random directions for design");
    oracle->add_option("--seed", seed, "PRNG seed for design directions")
        ->capture_default_str();
    oracle->add_option("--cap", cap, "enumeration node cap");
    oracle->add_option("--xprime", xprime_csv, "direction vector, comma-separated");
    oracle->add_flag("--dual", dual, "count/evaluate over the rescaled dual shell");
    auto* oracle_json_opt = oracle->add_option("--json", oracle_json)->expected(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, bad invocations exit 2
    }

    try {
        if (prove->parsed()) {
            if (prove_remarks) {
                Json tables = modlat::remark_tables({order});
                JsonSink{true, prove_json}.emit(tables);
                return 0;
            }
            if (prove_rank != 24 && prove_rank != 32 && prove_rank != 36 &&
                prove_rank != 48) {
                std::cerr << "prove: unsupported rank " << prove_rank
                          << " (supported: 24, 32, 36, 48)\n";
                return 2;
            }
            return run_prove(prove_rank, order, prove_json_opt->count() > 0, prove_json);
        }

        if (qexp->parsed()) {
            RationalSeries f =
                modlat::series_by_id(modlat::SeriesId::parse(series_name), order);
            if (qexp_json_opt->count() > 0) {
                Json doc = series_json(f);
                doc["series"] = series_name;
                JsonSink{true, qexp_json}.emit(doc);
            } else {
                std::cout << modlat::series_to_text(f);
            }
            return 0;
        }

        if (forms->parsed()) {
            modlat::EchelonBasis basis = modlat::cusp_basis(weight, order);
            if (forms_json_opt->count() > 0) {
                Json doc = Json::object();
                doc["weight"] = weight;
                doc["dimension"] = basis.dimension();
                Json arr = Json::array();
                for (const auto& f : basis.forms) arr.push_back(series_json(f));
                doc["forms"] = std::move(arr);
                JsonSink{true, forms_json}.emit(doc);
            } else {
                std::cout << "weight " << weight << " cusp space, dimension "
                          << basis.dimension() << "\n";
                for (size_t i = 0; i < basis.forms.size(); ++i) {
                    std::cout << "f" << (i + 1) << ":\n"
                              << modlat::series_to_text(basis.forms[i]);
                }
            }
            return 0;
        }

        if (eigen->parsed()) {
            modlat::EigenSplit split = modlat::eigen_split_weight26(order);
            Json doc = Json::object();
            doc["precision_used"] = split.precision_used;
            doc["radicand"] = split.radicand;
            doc["trace_T3"] = split.trace.str();
            doc["c3_h1"] = split.h1.hecke_eigenvalues.at(3).str();
            doc["c3_h2"] = split.h2.hecke_eigenvalues.at(3).str();
            doc["c2"] = split.h1.hecke_eigenvalues.at(2).str();
            doc["scale"] = split.scale.str();
            doc["convention"] =
                "h1 carries the minus sign on sqrt(106705) in c(3); the "
                "eigenvalue pair and the difference identity are "
                "sign-convention-free";
            if (pseudo_imax > 0) {
                modlat::PseudoEigenReport rep =
                    modlat::pseudo_eigen_check(pseudo_imax, order);
                Json checks = Json::array();
                for (const auto& c : rep.checks) {
                    Json j = Json::object();
                    j["index"] = c.index;
                    j["value"] = c.value.str();
                    j["expected"] = c.expected.str();
                    j["ok"] = c.ok;
                    checks.push_back(std::move(j));
                }
                doc["pseudo_checks"] = std::move(checks);
                doc["pseudo_all_ok"] = rep.all_ok;
                if (!rep.all_ok) {
                    JsonSink{true, eigen_json}.emit(doc);
                    return 1;
                }
            }
            if (eigen_json_opt->count() > 0) {
                JsonSink{true, eigen_json}.emit(doc);
            } else {
                std::cout << "splitting field: Q(sqrt(" << split.radicand << "))\n"
                          << "T3 eigenvalue (h1): " << doc["c3_h1"].get<std::string>()
                          << "\nT3 eigenvalue (h2): " << doc["c3_h2"].get<std::string>()
                          << "\nU2 eigenvalue: " << doc["c2"].get<std::string>()
                          << "\ntrace: " << split.trace.str()
                          << "\nscale (g = scale*(h2-h1)): " << split.scale.str()
                          << "\nprecision used: " << split.precision_used << "\n";
                if (pseudo_imax > 0)
                    std::cout << "pseudo-eigenform laws to i=" << pseudo_imax
                              << ": ok\n";
            }
            return 0;
        }

        if (zonal->parsed()) {
            modlat::ZonalCoeffs z = modlat::zonal_coeffs(zdim, zdeg);
            if (zonal_json_opt->count() > 0) {
                Json doc = Json::object();
                doc["dim"] = zdim;
                doc["degree"] = zdeg;
                Json arr = Json::array();
                for (const auto& c : z.c) arr.push_back(c.fraction_str());
                doc["coefficients"] = std::move(arr);
                JsonSink{true, zonal_json}.emit(doc);
            } else {
                for (const auto& c : z.c) std::cout << c.str() << "\n";
            }
            return 0;
        }

        if (config->parsed()) {
            modlat::CaseSpec cs = modlat::case_spec(config_rank, order);
            modlat::ConfigSystem sys = modlat::bounding_system(cs);
            Json doc = Json::object();
            doc["rank"] = config_rank;
            doc["m0"] = cs.m0;
            doc["shell_size"] = cs.a_m0.str();
            Json eqs = Json::array();
            for (const auto& eq : sys.eqs) {
                Json row = Json::object();
                row["label"] = eq.label;
                Json lhs = Json::array();
                for (size_t i = 0; i < sys.vars.size(); ++i)
                    lhs.push_back(i < eq.lhs.size() ? eq.lhs[i].str() : "0");
                row["coefficients"] = std::move(lhs);
                row["rhs"] = eq.rhs.str();
                eqs.push_back(std::move(row));
            }
            doc["variables"] = sys.vars;
            doc["equations"] = std::move(eqs);
            if (config_s >= 0) {
                modlat::SVerdict v = modlat::analyze_s(sys, config_s);
                doc["s"] = config_s;
                doc["feasible"] = v.feasible;
                if (!v.violated.empty()) doc["violated"] = v.violated;
                if (v.pinned) {
                    Json sol = Json::object();
                    for (size_t i = 0; i < sys.vars.size(); ++i)
                        sol[sys.vars[i]] = v.values[i].str();
                    doc["solution"] = std::move(sol);
                }
            } else {
                modlat::SRange range = modlat::feasible_s_range(cs, sys);
                doc["survivors"] = range.survivors;
                Json verd = Json::array();
                for (const auto& v : range.verdicts) {
                    Json j = Json::object();
                    j["s"] = v.s;
                    j["feasible"] = v.feasible;
                    if (!v.violated.empty()) j["violated"] = v.violated;
                    verd.push_back(std::move(j));
                }
                doc["verdicts"] = std::move(verd);
            }
            JsonSink{true, config_json}.emit(doc);
            return 0;
        }

        if (oracle->parsed()) {
            if (lat_name.empty() == gram_path.empty()) {
                std::cerr << "oracle: give exactly one of --lattice or --gram\n";
                return 2;
            }
            modlat::Lattice L = lat_name.empty() ? modlat::Lattice::from_file(gram_path)
                                                 : modlat::Lattice::builtin(lat_name);
            bool json_mode = oracle_json_opt->count() > 0;
            Json doc = Json::object();
            doc["lattice"] = L.name();
            doc["dim"] = L.dim();
            int status = 0;

            if (op == "theta") {
                RationalSeries t = modlat::theta_direct(L, order, cap);
                if (json_mode) doc["theta"] = series_json(t);
                else std::cout << modlat::series_to_text(t);
            } else if (op == "shell") {
                modlat::Shell sh = modlat::shell_enum(L, norm, cap);
                doc["norm"] = norm;
                doc["vector_count"] = sh.vector_count();
                if (!json_mode)
                    std::cout << "|L_" << norm << "| = " << sh.vector_count() << "\n";
            } else if (op == "modularity") {
                modlat::ModularityEvidence ev = modlat::modularity_evidence(L, order, cap);
                doc["even"] = ev.even;
                doc["dual_integral"] = ev.dual_integral;
                doc["pass"] = ev.pass;
                doc["checked_precision"] = ev.checked_precision;
                if (ev.first_mismatch >= 0) doc["first_mismatch"] = ev.first_mismatch;
                if (!json_mode)
                    std::cout << "2-modularity evidence (theta comparison to O(q^" << order
                              << ")): " << (ev.pass ? "pass" : "fail") << "\n";
                status = ev.pass ? 0 : 1;
            } else if (op == "design") {
                modlat::Shell sh = modlat::shell_enum(L, norm, cap);
                modlat::DesignDefect d = modlat::design_defect(L, sh, degree, trials, seed);
                doc["norm"] = norm;
                doc["degree"] = degree;
                doc["trials"] = trials;
                doc["max_abs"] = d.max_abs.str();
                if (!json_mode)
                    std::cout << "design defect at degree " << degree << " over "
                              << trials << " directions: max |sum P| = "
                              << d.max_abs.str() << "\n";
            } else if (op == "wtheta") {
                modlat::Coord xp = parse_coord(xprime_csv, L.dim());
                RationalSeries t =
                    dual ? modlat::weighted_theta_rescaled_dual(L, xp, degree, order, cap)
                         : modlat::weighted_theta_direct(L, xp, degree, order, cap);
                if (json_mode) doc["weighted_theta"] = series_json(t);
                else std::cout << modlat::series_to_text(t);
            } else if (op == "config") {
                modlat::Coord xp = parse_coord(xprime_csv, L.dim());
                std::vector<modlat::Integer> hist =
                    dual ? modlat::config_count_dual(L, xp, norm, cap)
                         : modlat::config_count(L, xp, norm, cap);
                Json arr = Json::array();
                for (const auto& h : hist) arr.push_back(h.get_str());
                doc["counts_by_inner_product"] = std::move(arr);
                if (!json_mode) {
                    for (size_t j = 0; j < hist.size(); ++j)
                        std::cout << "j=" << j << ": " << hist[j].get_str() << "\n";
                }
            } else {
                std::cerr << "oracle: unknown --op '" << op << "'\n";
                return 2;
            }
            if (json_mode) JsonSink{true, oracle_json}.emit(doc);
            return status;
        }
    } catch (const modlat::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const modlat::PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const modlat::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
