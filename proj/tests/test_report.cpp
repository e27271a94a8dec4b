#include <doctest.h>

#include "talex/report.hpp"
#include "talex/suites.hpp"

using namespace talex;

namespace {

Report tiny_dfj() {
    RunConfig cfg;
    cfg.m_max = 1;
    cfg.n_max = 1;
    cfg.flip_mode = 2;
    return suite_dfj(cfg);
}

} // namespace

TEST_CASE("family display names") {
    CHECK(family_name(FamilySpec{FamilySpec::Kind::J, 1, 1, 1}) == "J(3,3)");
    CHECK(family_name(FamilySpec{FamilySpec::Kind::J, 3, 2, 1}) == "J(7,5)");
    CHECK(family_name(FamilySpec{FamilySpec::Kind::C, 1, 1, 1}) == "C(2,2,-2)");
    CHECK(family_name(FamilySpec{FamilySpec::Kind::C, 2, 3, 4}) == "C(4,6,-8)");
}

TEST_CASE("serialization helpers") {
    CHECK(json_complex({1.5, -2.0}) == nlohmann::ordered_json::array({1.5, -2.0}));
    LaurentPoly p = LaurentPoly::monomial(2.0, -2) + LaurentPoly::monomial(1.0, 1);
    nlohmann::ordered_json jp = json_laurent(p);
    CHECK(jp["-2"][0] == 2.0);
    CHECK(jp["1"][0] == 1.0);
    CHECK(!jp.contains("0"));
    nlohmann::ordered_json ip = json_intpoly(IntPoly{4, -6});
    CHECK(ip == nlohmann::ordered_json::array({"4", "-6"}));
}

TEST_CASE("exit code policy") {
    Report r;
    r.suite = "synthetic";
    r.instances.emplace_back();
    InstanceRecord& inst = r.instances.back();
    inst.cases.emplace_back();
    CHECK(report_exit_code(r) == 0);

    // Computational error only: exit 2.
    inst.cases[0].error = true;
    CHECK(r.error_count() == 1);
    CHECK(report_exit_code(r) == 2);

    // A counted mathematical failure takes precedence: exit 1.
    inst.cases.emplace_back();
    inst.cases[1].pass = false;
    CHECK(r.fail_count() == 1);
    CHECK(report_exit_code(r) == 1);

    // Uncounted case failures do not trip the suite.
    inst.cases[1].counted = false;
    CHECK(r.fail_count() == 0);
    CHECK(report_exit_code(r) == 2);

    // Instance-level failure counts regardless.
    inst.pass = false;
    CHECK(r.fail_count() == 1);
    CHECK(report_exit_code(r) == 1);
}

TEST_CASE("suite report structure") {
    Report r = tiny_dfj();
    CHECK(r.suite == "dfj");
    REQUIRE(r.instances.size() == 2); // one J(3,3) instance per orientation
    CHECK(r.suite_pass());
    CHECK(report_exit_code(r) == 0);

    nlohmann::ordered_json j = report_to_json(r);
    CHECK(j["suite"] == "dfj");
    CHECK(j.contains("config"));
    REQUIRE(j["instances"].is_array());
    const auto& inst = j["instances"][0];
    CHECK(inst["family"] == "J(3,3)");
    CHECK(inst["m"] == 1);
    CHECK(inst["genus"] == 1);
    CHECK(inst["fibered"] == "yes");
    CHECK(inst["degree_prediction"] == 4);
    CHECK(inst["reduced_alexander_ok"] == true);
    REQUIRE(inst["cases"].is_array());
    REQUIRE(!inst["cases"].empty());
    const auto& c = inst["cases"][0];
    CHECK(c.contains("z"));
    CHECK(c.contains("delta"));
    CHECK(c.contains("span"));
    CHECK(c.contains("genus_detected"));
    CHECK(c["pass"] == true);
    CHECK(j["summary"]["suite_pass"] == true);
    CHECK(j["summary"]["cases"].get<int>() == r.case_count());
}

TEST_CASE("csv row count and header") {
    Report r = tiny_dfj();
    std::string csv = report_to_csv(r);
    REQUIRE(!csv.empty());
    int lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == r.case_count() + 1); // header + one row per case
    CHECK(csv.rfind("suite,family,m,n,p,flip,", 0) == 0);
    CHECK(csv.find("dfj,\"J(3,3)\",1,1,,", 0) != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    RunConfig cfg;
    cfg.family = FamilySpec{FamilySpec::Kind::J, 1, 1, 1};
    cfg.samples = 3;
    cfg.seed = 7;
    Report a = suite_loci(cfg);
    Report b = suite_loci(cfg);
    CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
    CHECK(report_to_csv(a) == report_to_csv(b));

    Report c = tiny_dfj();
    Report d = tiny_dfj();
    CHECK(report_to_json(c).dump(2) == report_to_json(d).dump(2));
}
