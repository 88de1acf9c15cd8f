#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/qcombinatorics.hpp"
#include "nichols/root_vectors.hpp"

using namespace nichols;

namespace {

BraidingPtr make(Cyc a, Cyc b, Cyc c, Cyc d) {
    return std::make_shared<DiagonalBraiding>(std::move(a), std::move(b), std::move(c), std::move(d));
}

// Example-1 family braiding (q^4, q^2; q^2, q).
BraidingPtr example1(long k, long n) {
    Cyc q = Cyc::root(k, n);
    return make(q.pow(4), q.pow(2), q.pow(2), q);
}

// Example-2 family braiding (q, q^3; q^3, q^9).
BraidingPtr example2(long k, long n) {
    Cyc q = Cyc::root(k, n);
    return make(q, q.pow(3), q.pow(3), q.pow(9));
}

} // namespace

TEST_CASE("z and u recursions") {
    auto br = example1(1, 11);
    RootVectorContext ctx(br);
    CHECK(ctx.z(0) == TensorElement::generator(br, 2));
    TensorElement x1 = TensorElement::generator(br, 1), x2 = TensorElement::generator(br, 2);
    CHECK(ctx.z(1) == x1 * x2 - (x2 * x1).scaled(br->q12));
    CHECK(ctx.u(1) == ctx.z(1)); // u_1 = x_{21} = z_1
    CHECK(ctx.z(3).degree() == MultiDegree{3, 1});
    CHECK(ctx.u(3).degree() == MultiDegree{1, 3});
    // <y_1, u_i> = delta_{i0}
    CHECK(pair_word(word_from_letters({1}), ctx.u(0)).scalar_part().is_one());
    for (long i = 1; i <= 3; ++i) CHECK(derive(1, ctx.u(i)).is_tensor_zero());
    // index cap
    RootVectorContext capped(br, 4);
    CHECK_THROWS_AS(capped.z(5), IndexError);
}

TEST_CASE("vanishing criteria") {
    // q12 q21 = 1: z_1 = u_1 = 0
    auto br = make(Cyc::root(1, 5), Cyc::root(2, 7), Cyc::root(5, 7), Cyc::root(1, 3));
    RootVectorContext ctx(br);
    CHECK(ctx.b(1).is_zero());
    CHECK(ctx.z_is_zero(1));
    CHECK(ctx.u_is_zero(1));
    CHECK(ctx.oracle().is_zero(ctx.z(1)));

    // generic: z_i nonzero below the first vanishing index
    auto br2 = example1(1, 11);
    RootVectorContext c2(br2);
    for (long i = 1; i <= 4; ++i) {
        CHECK_FALSE(c2.z_is_zero(i));
        CHECK(c2.oracle().is_zero(c2.z(i)) == c2.z_is_zero(i));
    }
}

TEST_CASE("scalar records and displayed values") {
    // Example 2, step 4: q in R_15, d_{2,0} = q^{-3}(1 - q^8)(1 + q^{-1} + q^{-2})
    auto br = example2(1, 15);
    RootVectorContext ctx(br);
    Cyc q = Cyc::root(1, 15);
    Cyc display = q.pow(-3) * (Cyc(1) - q.pow(8)) * (Cyc(1) + q.pow(-1) + q.pow(-2));
    CHECK(ctx.d0(2) == display);
    CHECK_FALSE(display.is_zero());
    auto sc = ctx.scalars(2);
    CHECK(sc.d0 == ctx.d0(2));
    CHECK(sc.b == ctx.b(2));
    CHECK(sc.p == ctx.p(2));
    CHECK(sc.pair_zz == ctx.pair_zz(2));

    // Cartan family: d_{a,0} = 0
    for (auto [a, n] : {std::pair<long, long>{1, 5}, {2, 7}, {3, 9}}) {
        Cyc r = Cyc::root(1, n);
        RootVectorContext cart(make(r, r.pow(-a - 1), Cyc(1), r.pow(a + 1)));
        CHECK(cart.d0(a).is_zero());
    }

    // b_1 with q12 q21 = 1
    RootVectorContext triv(make(Cyc::root(1, 5), Cyc(1), Cyc(1), Cyc::root(1, 5)));
    CHECK(triv.b(1).is_zero());

    // p_i = chi(z_i, z_i)^{-1}
    auto brp = example1(1, 11);
    RootVectorContext cp(brp);
    for (long i = 1; i <= 3; ++i) CHECK(cp.p(i) * cp.chi_zz(i, i) == Cyc(1));
}

TEST_CASE("consecutive pairing ratio identity") {
    auto br = example1(1, 11);
    RootVectorContext ctx(br);
    for (long i = 1; i <= 3; ++i) {
        Cyc lhs = ctx.pair_zz(i + 1) / ctx.pair_zz(i) - ctx.pair_zz(i) / ctx.pair_zz(i - 1);
        Cyc rhs = chi(*br, MultiDegree{i, 1}, MultiDegree{1, 0}).inverse() -
                  chi(*br, MultiDegree{1, 0}, MultiDegree{i, 1});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("closed-form pairings match the derivation collapse") {
    auto br = example1(1, 11);
    RootVectorContext ctx(br);
    Cyc invq11 = br->q11.inverse();
    for (long i = 1; i <= 4; ++i)
        for (long j = 0; j <= i; ++j) {
            TensorElement lhs = pair_word(RootVectorContext::zhat_word(j), ctx.z(i));
            Cyc coef = br->q21.pow(-i) * ctx.b(i) * q_fact_ratio(i, i - j, invq11);
            TensorElement x1pow = TensorElement::unit(br);
            for (long t = 0; t < i - j; ++t) x1pow = x1pow * TensorElement::generator(br, 1);
            CHECK(lhs == x1pow.scaled(coef));
        }
    for (long i = 1; i <= 4; ++i) {
        Cyc coef = br->q21.inverse() * (Cyc(1) - br->q12 * br->q21 * br->q22.pow(i - 1)) *
                   q_int(i, br->q22.inverse());
        CHECK(derive(2, ctx.u(i)) == ctx.u(i - 1).scaled(coef));
    }
}

TEST_CASE("w elements") {
    auto br = example1(1, 11);
    RootVectorContext ctx(br);
    NicholsOracle& oracle = ctx.oracle();

    // <y_2, w_1> display
    TensorElement w1 = ctx.w(1);
    Cyc num = br->q21.pow(-2) * (Cyc(1) - br->q12 * br->q21 * br->q22) *
              (Cyc(1) + br->q22.inverse()) *
              (Cyc(1) + br->q11 * br->q12.pow(2) * br->q21.pow(2) * br->q22);
    Cyc den = Cyc(1) + br->q11 * br->q12 * br->q21 * br->q22;
    CHECK(oracle.is_zero(derive(2, w1) - ctx.z(2).scaled(num / den)));

    // <z^_i, w_i> = 0 and <w^_i, w_i> = <z^_{i+1} z^_{i-1}, w_i>
    for (long i = 1; i <= 2; ++i) {
        TensorElement wi = ctx.w(i);
        CHECK(oracle.is_zero(pair_elem(ctx.z(i), wi)));
        Word zw = RootVectorContext::zhat_word(i + 1).concat(RootVectorContext::zhat_word(i - 1));
        CHECK(pair_elem(wi, wi).scalar_part() == pair_word(zw, wi).scalar_part());
    }

    // z_{i+1} = 0 forces w_i = 0 by definition
    auto cart = make(Cyc::root(1, 6), Cyc::root(4, 6), Cyc(1), Cyc::root(2, 6));
    RootVectorContext cctx(cart); // Cartan a = 1: z_3 = 0
    REQUIRE(cctx.z_is_zero(3));
    CHECK(cctx.w(2).is_tensor_zero());

    // (2)_{p_i} = 0 with z_{i+1} != 0 is a degenerate denominator
    auto bad = make(Cyc::root(1, 8), Cyc::root(1, 8), Cyc(1), Cyc::root(2, 8));
    RootVectorContext bctx(bad);
    REQUIRE((Cyc(1) + bctx.p(1)).is_zero());
    REQUIRE_FALSE(bctx.z_is_zero(2));
    CHECK_THROWS_AS(bctx.w(1), DegenerateDenominator);
}

TEST_CASE("z_{i,1} pairing identity") {
    auto br = example1(1, 11);
    RootVectorContext ctx(br);
    NicholsOracle& oracle = ctx.oracle();
    for (long i = 1; i <= 2; ++i) {
        TensorElement lhs = pair_elem(ctx.z(i), ctx.z1(i));
        TensorElement rhs = ctx.z(i + 1).scaled(ctx.d0(i) * ctx.pair_zz(i));
        CHECK(oracle.is_zero(lhs - rhs));
    }
    // z_{i+1} = 0 in B(V) forces z_{i,1} = 0 in B(V)
    auto cart = make(Cyc::root(1, 6), Cyc::root(4, 6), Cyc(1), Cyc::root(2, 6));
    RootVectorContext cctx(cart);
    REQUIRE(cctx.z_is_zero(3));
    CHECK(cctx.oracle().is_zero(cctx.z1(2)));
}

TEST_CASE("z_{i,2} pairing identities") {
    auto br = example1(1, 11);
    RootVectorContext ctx(br);
    NicholsOracle& oracle = ctx.oracle();
    for (long i = 1; i <= 2; ++i) {
        TensorElement z2i = ctx.z2(i);
        CHECK(oracle.is_zero(pair_elem(ctx.z(i + 1), z2i)));
        Word w1 = RootVectorContext::zhat_word(i + 2).concat(RootVectorContext::zhat_word(i));
        CHECK(oracle.is_zero(pair_word(w1, z2i)));
        Word w2 = RootVectorContext::zhat_word(i + 1).concat(RootVectorContext::zhat_word(i));
        TensorElement rhs =
            ctx.z(i + 1).scaled(ctx.d0(i) * ctx.d1(i) * ctx.pair_zz(i) * ctx.pair_zz(i + 1));
        CHECK(oracle.is_zero(pair_word(w2, z2i) - rhs));
    }
}

TEST_CASE("s elements") {
    // <z^_i, s_i> = d_{i,0} <z^_i, z_i> w_i, so the vanishing needs (A7): use list
    // members. q11 in R_8, q12 q21 = q11^{-3}, q22 = -1 is case 4.2 with a = 2.
    auto br = make(Cyc::root(1, 8), Cyc::root(4, 8), Cyc::root(1, 8), Cyc(-1));
    RootVectorContext ctx(br);
    NicholsOracle& oracle = ctx.oracle();
    REQUIRE_FALSE(oracle.is_zero(ctx.z1(1)));
    CHECK(oracle.is_zero(pair_elem(ctx.z(1), ctx.s(1))));

    // a = 3 member (case 4.3, q11 in R_10) keeps z_{2,1} alive: <z^_2, s_2> = 0 and the
    // <z^_{1,1}, z_{2,1}> display are nontrivial there.
    auto br10 = make(Cyc::root(1, 10), Cyc(-1), Cyc::root(1, 10), Cyc(-1));
    RootVectorContext c10(br10);
    NicholsOracle& o10 = c10.oracle();
    REQUIRE_FALSE(o10.is_zero(c10.z1(2)));
    CHECK(o10.is_zero(pair_elem(c10.z(2), c10.s(2))));
    {
        long i = 2;
        TensorElement lhs = pair_elem(c10.z1(i - 1), c10.z1(i));
        Cyc coef = c10.d0(i - 1) * c10.d0(i) * c10.pair_zz(i) * c10.pair_zz(i + 1) /
                   ((Cyc(1) + c10.p(i)) * (Cyc(1) + br10->q11.inverse()));
        TensorElement x1 = TensorElement::generator(br10, 1);
        CHECK(o10.is_zero(lhs - (x1 * x1).scaled(coef)));
    }

    // z_{i,1} = 0 in B(V) forces s_i = 0 by definition
    auto cart = make(Cyc::root(1, 6), Cyc::root(4, 6), Cyc(1), Cyc::root(2, 6));
    RootVectorContext cctx(cart);
    REQUIRE(cctx.oracle().is_zero(cctx.z1(2)));
    CHECK(cctx.s(2).is_tensor_zero());
    // (3)!_{p_i} = 0 with z_{i,1} != 0 is a degenerate denominator
    auto bad = make(Cyc::root(1, 9), Cyc::root(1, 9), Cyc(1), Cyc::root(1, 9));
    RootVectorContext bctx(bad);
    REQUIRE(q_fact(3, bctx.p(1)).is_zero());
    REQUIRE_FALSE(bctx.oracle().is_zero(bctx.z1(1)));
    CHECK_THROWS_AS(bctx.s(1), DegenerateDenominator);
}

TEST_CASE("t elements") {
    // The t identities also live under (A5)-(A7); q11 in R_7, q12 q21 = q11^{-3},
    // q22 = -1 passes every condition and keeps z_{1,2} nonzero.
    auto br = make(Cyc::root(1, 7), Cyc::root(1, 7), Cyc::root(3, 7), Cyc(-1));
    RootVectorContext ctx(br);
    NicholsOracle& oracle = ctx.oracle();
    REQUIRE_FALSE(oracle.is_zero(ctx.z2(1)));
    long i = 1;
    TensorElement ti = ctx.t(i);
    CHECK(oracle.is_zero(pair_elem(ctx.z1(i), ti)));
    CHECK(oracle.is_zero(pair_elem(ctx.z(i + 1), ti)));
    // general display for <z^_i, t_i>
    Cyc chi_z11 = chi(*br, MultiDegree{2 * i + 1, 2}, MultiDegree{2 * i + 1, 2});
    Cyc d0d1 = ctx.d0(i) * ctx.d1(i);
    Cyc coef = d0d1 / (Cyc(1) + ctx.p(i + 1)) - d0d1 / (Cyc(1) + chi_z11.inverse()) +
               chi(*br, MultiDegree{i, 1}, MultiDegree{3 * i + 2, 3}).inverse() -
               chi(*br, MultiDegree{3 * i + 2, 3}, MultiDegree{i, 1});
    TensorElement rhs = ctx.z2(i).scaled(ctx.pair_zz(i) * coef);
    CHECK(oracle.is_zero(pair_elem(ctx.z(i), ti) - rhs));
    CHECK_FALSE(coef.is_zero()); // the display is nontrivial at this braiding

    // chi(z_{i,1}, z_{i,1}) = -1 is a degenerate denominator
    auto bad = make(Cyc(1), Cyc(1), Cyc(1), Cyc::root(1, 8));
    RootVectorContext bctx(bad);
    CHECK_THROWS_AS(bctx.t(1), DegenerateDenominator);
}

TEST_CASE("the second-series display for <z^_1, t_1>") {
    // a = 2 family: q12 q21 = q11^{-3}, q22 = -1; three sampled orders
    for (long n : {9L, 11L, 13L}) {
        Cyc q = Cyc::root(1, n);
        auto br = make(q, q.pow(-4), q, Cyc(-1));
        RootVectorContext ctx(br);
        NicholsOracle& oracle = ctx.oracle();
        Cyc display = q.pow(-10) * br->q21.pow(-2) * (Cyc(1) - q.pow(5)) * (Cyc(1) + q.pow(7)) *
                      q_int(5, -(q * q)) / (Cyc(1) - q.pow(3) + q.pow(6));
        TensorElement lhs = pair_elem(ctx.z(1), ctx.t(1));
        TensorElement rhs = ctx.z2(1).scaled(ctx.pair_zz(1) * display);
        CHECK(oracle.is_zero(lhs - rhs));
    }
}
