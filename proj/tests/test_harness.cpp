#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/json_io.hpp"
#include "nichols/verify_suite.hpp"

using namespace nichols;

TEST_CASE("cyclotomic JSON schema round trip") {
    Cyc v = Cyc(Rational(1, 2)) - Cyc::root(2, 12);
    json j = cyc_to_json(v);
    CHECK(j.at("conductor").get<long>() == v.conductor());
    CHECK(j.at("coeffs").size() == v.coeffs().size());
    CHECK(cyc_from_json(j) == v);
    CHECK(cyc_from_json(cyc_to_json(Cyc(0))) == Cyc(0));
}

TEST_CASE("braiding JSON document uses the literal grammar") {
    DiagonalBraiding br(Cyc::root(1, 8), Cyc(Rational(1, 2)), Cyc(2), Cyc(-1));
    json j = braiding_to_json(br);
    CHECK(j.at("q11").get<std::string>() == "z8:1");
    CHECK(j.at("q12").get<std::string>() == "1/2");
    CHECK(braiding_from_json(j) == br);
}

TEST_CASE("verdict and condition report serialization") {
    Verdict v = classify_theorem(TwistClass{Cyc::root(2, 8), Cyc::root(1, 8), Cyc::root(7, 8)});
    json jv = verdict_to_json(v);
    CHECK(jv.at("outcome") == "Finite");
    CHECK(jv.at("labels") == json::array({json::array({2, 5})}));

    ConditionReport rep = evaluate_conditions(
        DiagonalBraiding(Cyc::root(1, 3), Cyc::root(1, 5), Cyc::root(4, 5), Cyc(-1)));
    json jr = condition_report_to_json(rep);
    CHECK(jr.at("A1").at("status") == "holds");
    CHECK(jr.at("swapped") == false);
    CHECK(jr.at("a").is_null());
}

TEST_CASE("small enumeration: counts, determinism, worker independence") {
    Limits cfg;
    cfg.max_order = 2;
    EnumerationResult r = enumerate_triples(cfg, 8, true);
    // two roots (1 and -1) per slot: 8 triples; hits at (-1, 1, -1) for part 1 and
    // (-1, -1, -1) for case 2.1
    CHECK(r.literal_triples == 8);
    CHECK(r.literal_finite == 2);
    REQUIRE(r.label_counts.count(CaseLabel{1, 1}));
    CHECK(r.label_counts.at(CaseLabel{1, 1}) == 1);
    REQUIRE(r.label_counts.count(CaseLabel{2, 1}));
    CHECK(r.label_counts.at(CaseLabel{2, 1}) == 1);
    CHECK(r.disagreements == 0);
    CHECK(r.pipeline_indeterminate == 0);
    CHECK_FALSE(r.has_disagreement());

    // case 2.5 hits exactly at the 4 primitive zeta_8 choices
    Limits cfg8;
    cfg8.max_order = 8;
    EnumerationResult r8 = enumerate_triples(cfg8, 12, false);
    REQUIRE(r8.label_counts.count(CaseLabel{2, 5}));
    CHECK(r8.label_counts.at(CaseLabel{2, 5}) == 4);

    // determinism across worker counts
    Limits two = cfg8;
    two.workers = 2;
    EnumerationResult r8b = enumerate_triples(two, 12, false);
    CHECK(r8.label_counts == r8b.label_counts);
    CHECK(r8.literal_finite == r8b.literal_finite);
    CHECK(r8.pipeline_triples == r8b.pipeline_triples);
    CHECK(r8.pipeline_finite == r8b.pipeline_finite);

    json je = enumeration_to_json(r);
    CHECK(je.at("disagreements").get<long>() == 0);
    CHECK(je.at("finite_hits").size() == 2);
}

TEST_CASE("the verify suite passes end to end") {
    Limits cfg;
    VerifyResult res = run_verify_suite(cfg);
    for (const auto& it : res.items) {
        CAPTURE(it.name);
        CAPTURE(it.note);
        CHECK(it.failed == 0);
        CHECK(it.checked > 0);
    }
    CHECK(res.ok());
    json jv = verify_to_json(res);
    CHECK(jv.at("ok") == true);
}
