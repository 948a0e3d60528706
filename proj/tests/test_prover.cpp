#include <doctest.h>

#include "modlat/prover.hpp"

using namespace modlat;

namespace {

const Json* branch_for(const Json& doc, long s) {
    for (const auto& b : doc["branches"])
        if (b["s"].get<long>() == s) return &b;
    return nullptr;
}

std::vector<AffineConstraint> constraints_from_json(const Json& fm) {
    std::vector<AffineConstraint> out;
    for (const auto& c : fm["constraints"]) {
        AffineConstraint a;
        for (const auto& x : c["coeff"]) a.coeff.push_back(Rational::parse(x.get<std::string>()));
        a.constant = Rational::parse(c["constant"].get<std::string>());
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<FmStep> steps_from_json(const Json& fm) {
    std::vector<FmStep> out;
    for (const auto& s : fm["steps"]) {
        FmStep st;
        st.pos = s["pos"].get<size_t>();
        st.neg = s["neg"].get<size_t>();
        st.pos_mult = Rational::parse(s["pos_mult"].get<std::string>());
        st.neg_mult = Rational::parse(s["neg_mult"].get<std::string>());
        for (const auto& x : s["coeff"])
            st.derived.coeff.push_back(Rational::parse(x.get<std::string>()));
        st.derived.constant = Rational::parse(s["constant"].get<std::string>());
        out.push_back(std::move(st));
    }
    return out;
}

} // namespace

TEST_CASE("root system budgets") {
    RootSystemBudget b24 = root_budget(24);
    CHECK(b24.max_roots == 1104);
    CHECK(b24.witness == std::vector<std::string>{"D24"});
    CHECK(root_budget(8).max_roots == 240);
    CHECK(root_budget(8).witness == std::vector<std::string>{"E8"});
    CHECK(root_budget(1).max_roots == 2);
    // monotone in the rank
    Integer prev = 0;
    for (int r = 1; r <= 32; ++r) {
        Integer cur = root_budget(r).max_roots;
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(root_budget(0), InputError);
}

TEST_CASE("parity deduction gates") {
    std::vector<Rational> m{Rational(2016), Rational(0), Rational(1008)};
    std::vector<Rational> n{Rational(0), Rational(225792), Rational(0), Rational(32256)};
    ParityDeduction ded = parity_deduction_rank24(m, n, Rational(3024));
    CHECK(ded.even_inner_on_min);
    CHECK(ded.odd_inner_on_next);
    CHECK(ded.gates_pass);
    CHECK(ded.budget.max_roots == 1104);

    // negative control: M1 = 2 breaks the evenness gate
    std::vector<Rational> bad{Rational(2014), Rational(2), Rational(1008)};
    ParityDeduction fail = parity_deduction_rank24(bad, n, Rational(3024));
    CHECK_FALSE(fail.even_inner_on_min);
    CHECK_FALSE(fail.gates_pass);
}

TEST_CASE("rank 32 certificate") {
    Certificate cert = verify_case(32);
    CHECK(cert.proven);
    CHECK(cert.doc["verdict"] == "proven");
    CHECK(cert.doc["survivors"] == Json::array({8}));

    const Json* b8 = branch_for(cert.doc, 8);
    REQUIRE(b8 != nullptr);
    CHECK((*b8)["closure"]["kind"] == "moment-mismatch");
    const Json& data = (*b8)["closure"]["data"];
    CHECK(data["solution"]["M0"] == "65920");
    CHECK(data["solution"]["M1"] == "149760");
    CHECK(data["solution"]["M2"] == "33408");
    CHECK(data["solution"]["M3"] == "12032");
    CHECK(data["dual_solution"]["M'0"] == "117440");
    CHECK(data["dual_solution"]["M'1"] == "126720");
    CHECK(data["dual_solution"]["M'2"] == "16704");
    CHECK(data["dual_solution"]["M'3"] == "256");
    CHECK(data["dual_weighted_sum_P8"] == "-8847360/19");
    CHECK(data["required_eighth_moment"] == "97320960");
    CHECK(data["computed_eighth_moment"] == "87644160");

    // symbolic cubics recorded
    bool found = false;
    for (const auto& st : cert.doc["steps"]) {
        if (!st.contains("solution")) continue;
        if (st["solution"].contains("M3")) {
            CHECK(st["solution"]["M3"] == "60*s^3 - 360*s^2 + 544*s");
            CHECK(st["solution"]["M1"] == "900*s^3 - 14040*s^2 + 73440*s");
            found = true;
        }
    }
    CHECK(found);

    // every eliminated s carries its violated constraint
    for (const auto& b : cert.doc["branches"]) {
        if (b["s"].get<long>() == 8) continue;
        CHECK(b["closure"]["kind"] == "infeasible");
        CHECK(b["closure"]["data"].contains("violated"));
    }
}

TEST_CASE("rank 48 certificate") {
    Certificate cert = verify_case(48);
    CHECK(cert.proven);
    CHECK(cert.doc["survivors"] == Json::array({10, 12, 14, 16, 18}));

    // claim 1 cubics
    bool cubics = false, relation = false, claim3 = false;
    for (const auto& st : cert.doc["steps"]) {
        if (st.contains("m4_lower_cubic")) {
            CHECK(st["m4_lower_cubic"] == "360*s^3 - 4680*s^2 + 8775*s");
            CHECK(st["m4_upper_cubic"] == "210*s^3 - 1365*s^2 + 2275*s");
            cubics = true;
        }
        if (st.contains("f")) {
            CHECK(st["f"] == "6*s^5 - 210*s^4 + 2681*s^3 - 14742*s^2 + 29120*s");
            CHECK(st["coeff_M'4"] == "-4*s + 32");
            CHECK(st["coeff_M'5"] == "-40*s + 384");
            relation = true;
        }
        if (st.contains("solution") && st["solution"].contains("M'3") &&
            !st["solution"].contains("M0")) {
            CHECK(st["solution"]["M'0"] == "4726960");
            CHECK(st["solution"]["M'1"] == "4626720");
            CHECK(st["solution"]["M'2"] == "468720");
            CHECK(st["solution"]["M'3"] == "5600");
            claim3 = true;
        }
    }
    CHECK(cubics);
    CHECK(relation);
    CHECK(claim3);

    // claim 4 table: all fifteen M values
    struct Row {
        long s;
        const char* m[5];
    };
    const Row rows[] = {
        {14, {"12872510/3", "3361792/3", "12184144/3", "50176/3", "1015378/3"}},
        {16, {"7466480", "-4652032", "7406336", "-1074176", "681392"}},
        {18, {"13864158", "-78591744/5", "68553072/5", "-16296192/5", "6154074/5"}},
    };
    for (const Row& row : rows) {
        const Json* b = branch_for(cert.doc, row.s);
        REQUIRE(b != nullptr);
        std::string kind = (*b)["closure"]["kind"].get<std::string>();
        CHECK((kind == "negative-count" || kind == "non-integral"));
        const Json& sol = (*b)["closure"]["data"]["solution"];
        for (int j = 0; j < 5; ++j) CHECK(sol["M" + std::to_string(j)] == row.m[j]);
    }

    // claims 2: embedded FM traces replay to contradictions
    for (long s : {10L, 12L}) {
        const Json* b = branch_for(cert.doc, s);
        REQUIRE(b != nullptr);
        CHECK((*b)["closure"]["kind"] == "infeasible");
        const Json& fm = (*b)["closure"]["data"]["fm"];
        CHECK(fm_replay_infeasible(constraints_from_json(fm), steps_from_json(fm)));
    }

    // claim 1 eliminations: s = 20..96 all carry replayable traces
    for (long s = 20; s <= 96; s += 2) {
        const Json* b = branch_for(cert.doc, s);
        REQUIRE(b != nullptr);
        CHECK((*b)["closure"]["kind"] == "infeasible");
        const Json& fm = (*b)["closure"]["data"]["fm"];
        CHECK(fm_replay_infeasible(constraints_from_json(fm), steps_from_json(fm)));
    }
}

TEST_CASE("rank 24 certificate") {
    Certificate cert = verify_case(24);
    CHECK(cert.proven);
    CHECK(cert.doc["survivors"] == Json::array({8}));
    const Json* b8 = branch_for(cert.doc, 8);
    REQUIRE(b8 != nullptr);
    CHECK((*b8)["closure"]["kind"] == "root-budget");
    const Json& data = (*b8)["closure"]["data"];
    CHECK(data["solution"]["M0"] == "2016");
    CHECK(data["solution"]["M1"] == "0");
    CHECK(data["solution"]["M2"] == "1008");
    CHECK(data["solution"]["N0"] == "0");
    CHECK(data["solution"]["N1"] == "225792");
    CHECK(data["solution"]["N2"] == "0");
    CHECK(data["solution"]["N3"] == "32256");
    CHECK(data["root_budget"] == "1104");
    CHECK(data["root_count"] == "3024");
    CHECK(data["budget_witness"] == Json::array({"D24"}));
}

TEST_CASE("rank 36 certificate") {
    Certificate cert = verify_case(36);
    CHECK(cert.proven);
    CHECK(cert.doc["survivors"] == Json::array({10}));
    const Json* b10 = branch_for(cert.doc, 10);
    REQUIRE(b10 != nullptr);
    CHECK((*b10)["closure"]["kind"] == "parity");
    const Json& data = (*b10)["closure"]["data"];
    CHECK(data["solution"]["M'3"] == "575");
    bool m3_flagged = false;
    for (const auto& o : data["odd_counts"])
        if (o.get<std::string>().rfind("M'3", 0) == 0) m3_flagged = true;
    CHECK(m3_flagged);
}

TEST_CASE("certificates are deterministic") {
    std::string a = verify_case(32).to_json_string();
    std::string b = verify_case(32).to_json_string();
    CHECK(a == b);
}

TEST_CASE("unsupported rank is rejected") {
    CHECK_THROWS_AS(verify_case(40), InputError);
    CHECK_THROWS_AS(verify_case(0), InputError);
}

TEST_CASE("remark tables") {
    Json tables = remark_tables();
    REQUIRE(tables.size() == 3);

    const Json& t32 = tables[0]["solution"];
    CHECK(t32["M0"] == "82720");
    CHECK(t32["M1"] == "122880");
    CHECK(t32["M2"] == "46848");
    CHECK(t32["M3"] == "8192");
    CHECK(t32["M4"] == "480");

    const Json& t24 = tables[1]["solution"];
    CHECK(t24["M0"] == "1116");
    CHECK(t24["M1"] == "1536");
    CHECK(t24["M2"] == "372");
    CHECK(t24["N0"] == "83052");
    CHECK(t24["N1"] == "119040");
    CHECK(t24["N2"] == "47646");
    CHECK(t24["N3"] == "7936");
    CHECK(t24["N4"] == "372");
    CHECK(t24["M'0"] == "1602");
    CHECK(t24["M'1"] == "1392");
    CHECK(t24["M'2"] == "30");

    const Json& t36 = tables[2]["solution"];
    CHECK(t36["M0"] == "56320");
    CHECK(t36["M1"] == "77760");
    CHECK(t36["M2"] == "25920");
    CHECK(t36["M3"] == "4160");
    CHECK(t36["N0"] == "6416070");
    CHECK(t36["N1"] == "9953920");
    CHECK(t36["N2"] == "4439040");
    CHECK(t36["N3"] == "1051968");
    CHECK(t36["N4"] == "111760");
    CHECK(t36["N5"] == "4160");
    CHECK(t36["M'0"] == "77840");
    CHECK(t36["M'1"] == "78840");
    CHECK(t36["M'2"] == "7344");
    CHECK(t36["M'3"] == "136");

    // row sums: M-sum = a_{m0}, dual M'-sum = a_{m0}, N-sum = a_{m0+2} - 2
    auto sum_prefix = [](const Json& sol, const std::string& prefix) {
        Integer total = 0;
        for (auto it = sol.begin(); it != sol.end(); ++it) {
            const std::string& key = it.key();
            if (key.rfind(prefix, 0) == 0 && key.size() == prefix.size() + 1)
                total += Integer(it.value().get<std::string>());
        }
        return total;
    };
    CHECK(sum_prefix(t24, "M") == 3024);
    CHECK(sum_prefix(t24, "M'") == 3024);
    CHECK(sum_prefix(t24, "N") == 258048 - 2);
    CHECK(sum_prefix(t36, "M") == 164160);
    CHECK(sum_prefix(t36, "M'") == 164160);
    CHECK(sum_prefix(t36, "N") == 21976920 - 2);
}
