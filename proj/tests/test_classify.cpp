#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nichols/classify.hpp"

using namespace nichols;

namespace {

BraidingPtr make(Cyc a, Cyc b, Cyc c, Cyc d) {
    return std::make_shared<DiagonalBraiding>(std::move(a), std::move(b), std::move(c), std::move(d));
}

TwistClass tc(Cyc q11, Cyc qq, Cyc q22) {
    return TwistClass{std::move(q11), std::move(qq), std::move(q22)};
}

} // namespace

TEST_CASE("A3 normalization") {
    // q12 q21 = 1: both minima are 1, no swap
    auto [b1, s1] = normalize_A3(DiagonalBraiding(Cyc::root(1, 4), Cyc::root(1, 6),
                                                  Cyc::root(5, 6), Cyc::root(1, 3)));
    CHECK_FALSE(s1);
    // symmetric braiding: no swap
    auto [b2, s2] = normalize_A3(DiagonalBraiding(Cyc::root(1, 5), Cyc::root(1, 7),
                                                  Cyc::root(1, 7), Cyc::root(1, 5)));
    CHECK_FALSE(s2);
    // min u-index 2, min z-index 3: already ordered; the transpose needs the swap.
    // q22 = -1 kills u_2; q11 in R_3 with generic product kills z_3.
    DiagonalBraiding br(Cyc::root(1, 3), Cyc::root(1, 5), Cyc(1), Cyc(-1));
    auto [b3, s3] = normalize_A3(br);
    CHECK_FALSE(s3);
    auto [b4, s4] = normalize_A3(swap_basis(br));
    CHECK(s4);
    CHECK(b4 == swap_basis(swap_basis(br)));
    // no vanishing at all without (A1)
    CHECK_THROWS_AS(normalize_A3(DiagonalBraiding(Cyc(2), Cyc(1), Cyc(1), Cyc(3))), NoTermination);
}

TEST_CASE("condition evaluation with witnesses") {
    Limits lim;
    // q11 = 2: A1 fails with the offending entry as witness
    ConditionReport r1 =
        evaluate_conditions(DiagonalBraiding(Cyc(2), Cyc(1), Cyc(1), Cyc(-1)), lim);
    CHECK(r1.first_failure() == 1);
    CHECK(r1.A(1).status == CondStatus::Fails);
    CHECK(r1.A(2).status == CondStatus::NotApplicable);

    // Descent-family braiding at q of order 26: in the as-given basis the failure is
    // p_6^{-1} = -1 with z_7 != 0; the (A3) ordering swaps the basis first (min_u = 23
    // exceeds min_z = 13), which shifts the same failure to i = 11.
    Cyc q = Cyc::root(1, 26);
    ConditionReport r2 =
        evaluate_conditions(DiagonalBraiding(q.pow(4), q.pow(2), q.pow(2), q), lim);
    CHECK(r2.first_failure() == 5);
    CHECK(r2.swapped);
    CHECK(r2.A(5).witness.index == 11);
    REQUIRE(r2.A(5).witness.value.has_value());
    CHECK(*r2.A(5).witness.value == Cyc(-1)); // chi(z_11, z_11) after the swap
    // the unnormalized orientation shows the failure at i = 6
    RootVectorContext e1(std::make_shared<DiagonalBraiding>(q.pow(4), q.pow(2), q.pow(2), q));
    CHECK(e1.chi_zz(6, 6) == Cyc(-1));
    CHECK_FALSE(e1.z_is_zero(7));

    // Example-2 braiding at q in R_15: A6 fails at i = 2 with d_{2,0} != 0
    Cyc r = Cyc::root(1, 15);
    ConditionReport r3 =
        evaluate_conditions(DiagonalBraiding(r, r.pow(3), r.pow(3), r.pow(9)), lim);
    CHECK(r3.first_failure() == 6);
    CHECK(r3.A(6).witness.index == 2);
    REQUIRE(r3.A(6).witness.value.has_value());
    Cyc display = r.pow(-3) * (Cyc(1) - r.pow(8)) * (Cyc(1) + r.pow(-1) + r.pow(-2));
    CHECK(*r3.A(6).witness.value == display);

    // a fully passing braiding: part 1
    ConditionReport r4 = evaluate_conditions(
        DiagonalBraiding(Cyc::root(1, 3), Cyc::root(1, 5), Cyc::root(4, 5), Cyc(-1)), lim);
    CHECK(r4.all_hold());
    CHECK_FALSE(r4.a_value.has_value()); // z_1 = 0, so a is undefined
}

TEST_CASE("the invariant a") {
    // Cartan with q11 in R_6, a = 1: b_3 contains 1 - q11^2 q12 q21 = 0
    RootVectorContext c1(make(Cyc::root(1, 6), Cyc::root(4, 6), Cyc(1), Cyc::root(2, 6)));
    CHECK(a_invariant(c1) == 1);
    // generic product: a = ord(q11) - 2
    for (long n : {5L, 7L, 9L}) {
        RootVectorContext cn(make(Cyc::root(1, n), Cyc::root(1, 11), Cyc(1), Cyc::root(1, 11)));
        CHECK(a_invariant(cn) == n - 2);
    }
    // z_2 = 0: inapplicable
    RootVectorContext c0(make(Cyc(-1), Cyc::root(1, 5), Cyc(1), Cyc(-1)));
    CHECK_THROWS_AS(a_invariant(c0), Inapplicable);
}

TEST_CASE("six families") {
    Cyc q = Cyc::root(1, 7);
    long a = 2;
    auto f1 = six_families(tc(q, q.pow(-a - 1), q.pow(a + 1)), a);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].family == 1);
    auto f2 = six_families(tc(q, q.pow(-a - 1), Cyc(-1)), a);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].family == 2);
    // family 4: q11^{a+2} = 1, q22 = q11^{-3} (q12q21)^{-a}
    Cyc r4 = Cyc::root(1, 4); // a + 2 = 4
    Cyc qq = Cyc::root(1, 24);
    auto f4 = six_families(tc(r4, qq, r4.pow(-3) * qq.pow(-a)), a);
    bool has4 = false;
    for (const auto& f : f4) has4 |= f.family == 4;
    CHECK(has4);
    // overlap: Cartan with q11^{a+1} = -1 also satisfies family 2
    Cyc r6 = Cyc::root(1, 6);
    auto fo = six_families(tc(r6, r6.pow(-3), r6.pow(3)), 2);
    REQUIRE(fo.size() >= 2);
    CHECK(fo[0].family == 1);
    CHECK(fo[1].family == 2);
    CHECK_THROWS_AS(six_families(tc(q, q, q), 0), IndexError);
}

TEST_CASE("literal classifier on the itemized list") {
    // part 1
    Verdict v1 = classify_theorem(tc(Cyc::root(1, 3), Cyc(1), Cyc(-1)));
    CHECK(v1.outcome == Outcome::Finite);
    REQUIRE(v1.canonical().has_value());
    CHECK(*v1.canonical() == CaseLabel{1, 1});

    // case 2.5: q12q21 in R_8, q11 = (q12q21)^2, q12q21 q22 = 1
    Verdict v2 = classify_theorem(tc(Cyc::root(2, 8), Cyc::root(1, 8), Cyc::root(7, 8)));
    CHECK(v2.outcome == Outcome::Finite);
    CHECK(v2.labels == std::vector<CaseLabel>{{2, 5}});

    // (zeta_5, zeta_5, -1) matches nothing in either ordering
    Verdict v3 = classify_theorem(tc(Cyc::root(1, 5), Cyc::root(1, 5), Cyc(-1)));
    CHECK(v3.outcome == Outcome::NotInList);
    CHECK(v3.labels.empty());

    // non-root entries fail every R_n membership
    Verdict v4 = classify_theorem(tc(Cyc(2), Cyc(1), Cyc(-1)));
    CHECK(v4.outcome == Outcome::NotInList);

    // spot anchors: 2.3 and 5.4
    Cyc z3 = Cyc::root(1, 3);
    Verdict a1 = classify_theorem(tc(z3, Cyc::root(1, 5), Cyc::root(4, 5)));
    CHECK(a1.outcome == Outcome::Finite);
    CHECK(a1.labels == std::vector<CaseLabel>{{2, 3}});
    Cyc z18 = Cyc::root(1, 18);
    Verdict a2 = classify_theorem(tc(z18, z18.pow(-2), -z18.pow(3)));
    CHECK(a2.outcome == Outcome::Finite);
    CHECK(a2.labels == std::vector<CaseLabel>{{5, 4}});
}

TEST_CASE("pipeline classifier on the worked examples") {
    Limits lim;
    // Cartan a = 3: chi(z_2, z_2) = 1 contradicts (A5)
    Cyc q = Cyc::root(1, 7);
    Verdict v1 = classify_pipeline(DiagonalBraiding(q, q.pow(-4), Cyc(1), q.pow(4)), lim);
    CHECK(v1.outcome == Outcome::NotInList);
    REQUIRE_FALSE(v1.evidence.empty());
    CHECK(v1.evidence.front().find("A5") != std::string::npos);

    // a = 1 with q11 in R_4, q12q21 = q11^{-2}, q22 = -1: case 2.4
    Cyc r4 = Cyc::root(1, 4);
    Verdict v2 = classify_pipeline(DiagonalBraiding(r4, r4.pow(-2), Cyc(1), Cyc(-1)), lim);
    CHECK(v2.outcome == Outcome::Finite);
    CHECK(v2.labels == std::vector<CaseLabel>{{2, 4}});

    // a = 2, q11 = (q12q21)^{-3}, (3)_{-(q12q21)^2} = 0, q22 = -1: case 4.6
    Cyc z12 = Cyc::root(1, 12);
    Verdict v3 = classify_pipeline(DiagonalBraiding(z12.pow(-3), z12, Cyc(1), Cyc(-1)), lim);
    CHECK(v3.outcome == Outcome::Finite);
    CHECK(v3.labels == std::vector<CaseLabel>{{4, 6}});

    // Example-1 braiding at order 26: NotInList through A5
    Cyc e = Cyc::root(1, 26);
    Verdict v4 = classify_pipeline(DiagonalBraiding(e.pow(4), e.pow(2), e.pow(2), e), lim);
    CHECK(v4.outcome == Outcome::NotInList);

    // non-root q12 q21
    Verdict v5 = classify_pipeline(DiagonalBraiding(Cyc(-1), Cyc(2), Cyc(1), Cyc(-1)), lim);
    CHECK(v5.outcome == Outcome::NotInList);
}

TEST_CASE("agreement, swap invariance and label validity up to conductor 20") {
    long checked = 0;
    for (long M = 1; M <= 20; ++M)
        for (long al = 0; al < M; ++al)
            for (long be = 0; be < M; ++be)
                for (long ga = 0; ga < M; ++ga) {
                    if (std::gcd(std::gcd(al, be), std::gcd(ga, M)) != 1) continue;
                    TwistExp t{M, al, be, ga};
                    Verdict lit = classify_theorem_exp(t);
                    Verdict pip = classify_pipeline_exp(t);
                    ++checked;
                    REQUIRE(pip.outcome != Outcome::Indeterminate);
                    REQUIRE((pip.outcome == Outcome::Finite) == !pip.labels.empty());
                    if (lit.outcome != pip.outcome || lit.canonical() != pip.canonical()) {
                        CAPTURE(M);
                        CAPTURE(al);
                        CAPTURE(be);
                        CAPTURE(ga);
                        REQUIRE(false);
                    }
                    // pipeline labels re-verify against the itemized list
                    auto all = theorem_labels_exp(t);
                    for (const CaseLabel& l : pip.labels)
                        REQUIRE(std::find(all.begin(), all.end(), l) != all.end());
                    // outcome invariant under the swap
                    Verdict sw = classify_pipeline_exp(TwistExp{M, ga, be, al});
                    REQUIRE(sw.outcome == pip.outcome);
                }
    CHECK(checked > 20000);
}
