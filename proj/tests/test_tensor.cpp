#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/sampling.hpp"
#include "nichols/tensor.hpp"

using namespace nichols;

namespace {

BraidingPtr generic7() {
    // all entries distinct powers of zeta_7; no accidental relations at small degree
    return std::make_shared<DiagonalBraiding>(Cyc::root(1, 7), Cyc::root(2, 7), Cyc::root(3, 7),
                                              Cyc::root(5, 7));
}

TensorElement x(const BraidingPtr& br, int i) { return TensorElement::generator(br, i); }

// Independent dimension oracle: rank of the full pairing matrix over all words of the
// multidegree, by plain Gaussian elimination. Kept deliberately separate from the
// engine's inductive spanning-set construction.
long brute_dim(const BraidingPtr& br, MultiDegree d) {
    std::vector<Word> words = words_of_degree(d);
    std::size_t n = words.size();
    std::vector<std::vector<Cyc>> m(n, std::vector<Cyc>(n, Cyc(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = pair_word(words[i], TensorElement::monomial(br, words[j])).scalar_part();
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[row]);
        for (std::size_t i = row + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            Cyc f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("words order and degree bookkeeping") {
    Word w = word_from_letters({1, 2, 1});
    CHECK(w.degree() == MultiDegree{2, 1});
    CHECK(word_from_letters({1, 1, 2}) < word_from_letters({1, 2, 1}));
    CHECK(word_from_letters({1, 2}) < word_from_letters({2, 1}));
    auto words = words_of_degree({2, 1});
    REQUIRE(words.size() == 3);
    CHECK(words[0] == word_from_letters({1, 1, 2}));
    CHECK(words[2] == word_from_letters({2, 1, 1}));
}

TEST_CASE("concatenation product") {
    auto br = generic7();
    CHECK((x(br, 1) * x(br, 2)).coefficient(word_from_letters({1, 2})).is_one());
    TensorElement s = (x(br, 1) + x(br, 2)) * x(br, 1);
    CHECK(s.terms().size() == 2);
    CHECK(s.coefficient(word_from_letters({1, 1})).is_one());
    CHECK(s.coefficient(word_from_letters({2, 1})).is_one());
    CHECK(TensorElement::unit(br) * s == s);
    auto other = std::make_shared<DiagonalBraiding>(Cyc(2), Cyc(1), Cyc(1), Cyc(3));
    CHECK_THROWS_AS(x(br, 1) * x(other, 1), BraidingMismatch);
}

TEST_CASE("group action scales by chi") {
    auto br = generic7();
    CHECK(group_act({1, 0}, x(br, 2)) == x(br, 2).scaled(br->q12));
    CHECK(group_act({0, -1}, x(br, 1)) == x(br, 1).scaled(br->q21.inverse()));
    TensorElement x12 = x(br, 1) * x(br, 2);
    CHECK(group_act({1, 0}, x12) == x12.scaled(br->q11 * br->q12));
}

TEST_CASE("skew derivations") {
    auto br = generic7();
    TensorElement x21 = x(br, 1) * x(br, 2) - (x(br, 2) * x(br, 1)).scaled(br->q12);
    TensorElement d2 = derive(2, x21);
    CHECK(d2 == x(br, 1).scaled(br->q21.inverse() - br->q12));
    CHECK(derive(1, x(br, 2)).is_tensor_zero());

    // derive(1, x_1^m) = (sum q11^{-j}) x_1^{m-1}
    TensorElement x1m = TensorElement::unit(br);
    for (int m = 1; m <= 5; ++m) {
        x1m = x1m * x(br, 1);
        Cyc coef(0);
        for (int j = 0; j < m; ++j) coef += br->q11.pow(-j);
        TensorElement expect = TensorElement::unit(br);
        for (int t = 1; t < m; ++t) expect = expect * x(br, 1);
        CHECK(derive(1, x1m) == expect.scaled(coef));
    }
}

TEST_CASE("pair collapses right to left") {
    auto br = generic7();
    TensorElement x21 = x(br, 1) * x(br, 2) - (x(br, 2) * x(br, 1)).scaled(br->q12);
    // <y_{21}, x_{21}> where y_{21} corresponds to x_{21} through iota
    TensorElement val = pair_elem(x21, x21);
    CHECK(val.scalar_part() == br->q21.inverse() - br->q12);
    // grading: pairing with an overweight word vanishes
    CHECK(pair_word(word_from_letters({1, 1, 2}), x21).is_tensor_zero());
}

TEST_CASE("zero test in the Nichols algebra") {
    // q12 q21 = 1 makes x_{21} vanish in B(V) though not in the free algebra
    auto br = std::make_shared<DiagonalBraiding>(Cyc::root(1, 5), Cyc::root(1, 7),
                                                 Cyc::root(6, 7), Cyc::root(2, 5));
    TensorElement x21 = x(br, 1) * x(br, 2) - (x(br, 2) * x(br, 1)).scaled(br->q12);
    NicholsOracle oracle(br);
    CHECK_FALSE(x21.is_tensor_zero());
    CHECK(oracle.is_zero(x21));

    auto br2 = generic7();
    NicholsOracle o2(br2);
    CHECK_FALSE(o2.is_zero(x(br2, 1) * x(br2, 2)));
    CHECK_THROWS_AS(o2.is_zero(x(br2, 1) + x(br2, 1) * x(br2, 2)), NotHomogeneous);
}

TEST_CASE("graded dimensions against the brute-force oracle") {
    Sampler s(2026, 9);
    for (int rep = 0; rep < 4; ++rep) {
        BraidingPtr br = s.braiding_ptr();
        NicholsOracle oracle(br);
        for (long a = 0; a <= 3; ++a)
            for (long b = 0; a + b <= 5; ++b)
                CHECK(oracle.dim({a, b}) == brute_dim(br, {a, b}));
    }
}

TEST_CASE("dimension special cases") {
    auto br = generic7();
    NicholsOracle oracle(br);
    CHECK(oracle.dim({1, 0}) == 1);
    // (n, 0) with q11 in R_n
    for (long n : {2L, 3L, 4L}) {
        auto brn = std::make_shared<DiagonalBraiding>(Cyc::root(1, n), Cyc::root(1, 7),
                                                      Cyc::root(1, 7), Cyc::root(1, 5));
        NicholsOracle on(brn);
        CHECK(on.dim({n, 0}) == 0);
        CHECK(on.dim({n - 1, 0}) == 1);
    }
    // (1,1) with q12 q21 = 1
    auto brq = std::make_shared<DiagonalBraiding>(Cyc::root(1, 5), Cyc::root(3, 8),
                                                  Cyc::root(5, 8), Cyc::root(1, 3));
    NicholsOracle oq(brq);
    CHECK(oq.dim({1, 1}) == 1);
}

TEST_CASE("hilbert series of decomposable and Cartan braidings") {
    auto mk = [](Cyc q11, Cyc q22) {
        return std::make_shared<DiagonalBraiding>(q11, Cyc::root(1, 9), Cyc::root(8, 9), q22);
    };
    NicholsOracle o1(mk(Cyc(-1), Cyc(-1)));
    auto h1 = o1.hilbert_series(4);
    CHECK(h1.by_total == std::vector<long>{1, 2, 1, 0, 0});
    CHECK_FALSE(h1.truncated);

    NicholsOracle o2(mk(Cyc::root(1, 3), Cyc(-1)));
    CHECK(o2.hilbert_series(5).by_total == std::vector<long>{1, 2, 2, 1, 0, 0});

    NicholsOracle o3(mk(Cyc::root(1, 3), Cyc::root(1, 3)));
    CHECK(o3.hilbert_series(6).by_total == std::vector<long>{1, 2, 3, 2, 1, 0, 0});

    // Cartan A2 at a primitive cube root: dimension 27, top total degree 8
    auto a2 = std::make_shared<DiagonalBraiding>(Cyc::root(1, 3), Cyc::root(2, 3), Cyc(1),
                                                 Cyc::root(1, 3));
    NicholsOracle oA2(a2);
    auto hA2 = oA2.hilbert_series(10);
    CHECK(hA2.by_total == std::vector<long>{1, 2, 4, 4, 5, 4, 4, 2, 1, 0, 0});
    CHECK_FALSE(hA2.truncated);

    CHECK_THROWS_AS(oA2.hilbert_series(13), CutoffExceeded);
    NicholsOracle wide(a2, 14);
    CHECK_NOTHROW(wide.hilbert_series(13));
}

TEST_CASE("component extraction is lossless") {
    auto br = generic7();
    TensorElement e = x(br, 1) * x(br, 2) + x(br, 2) * x(br, 2) + x(br, 1);
    CHECK_FALSE(e.is_homogeneous());
    TensorElement sum(br);
    for (MultiDegree d : {MultiDegree{1, 1}, MultiDegree{0, 2}, MultiDegree{1, 0}})
        sum = sum + e.component(d);
    CHECK(sum == e);
    CHECK(e.component({5, 5}).is_tensor_zero());
}
