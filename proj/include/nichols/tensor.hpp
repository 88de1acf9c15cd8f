#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "nichols/braiding.hpp"

namespace nichols {

/// A monomial x_{letters[0]} ... x_{letters[m-1]} in the free algebra on x_1, x_2.
/// Letters are packed one bit per position (0 -> x_1, 1 -> x_2), position 0 leftmost.
struct Word {
    std::uint32_t len = 0;
    std::uint64_t bits = 0;

    static constexpr std::uint32_t max_len = 63;

    int letter(std::uint32_t pos) const { return 1 + (int)((bits >> pos) & 1u); }
    MultiDegree degree() const {
        long twos = (long)__builtin_popcountll(bits & ((len == 64 ? ~0ull : (1ull << len) - 1)));
        return {(long)len - twos, twos};
    }
    Word prepend(int letter) const; // letter in {1,2}
    Word append(int letter) const;
    Word erase(std::uint32_t pos) const;
    Word concat(const Word& o) const;

    bool operator==(const Word&) const = default;
    /// Lexicographic order with x_1 < x_2; shorter prefixes first.
    bool operator<(const Word& o) const;
};

Word word_from_letters(const std::vector<int>& letters);
std::vector<int> letters_of(const Word& w);
std::string word_str(const Word& w);

/// All words of the given multidegree in lexicographic order.
std::vector<Word> words_of_degree(MultiDegree d);

using BraidingPtr = std::shared_ptr<const DiagonalBraiding>;

/// A finite linear combination of words with nonzero cyclotomic coefficients over a
/// fixed ambient braiding. Immutable value semantics; all operations return fresh values.
class TensorElement {
  public:
    explicit TensorElement(BraidingPtr br) : br_(std::move(br)) {}

    static TensorElement zero(BraidingPtr br) { return TensorElement(std::move(br)); }
    static TensorElement unit(BraidingPtr br);
    static TensorElement generator(BraidingPtr br, int letter);
    static TensorElement monomial(BraidingPtr br, Word w, Cyc c = Cyc(1));

    const BraidingPtr& braiding() const { return br_; }
    const std::map<Word, Cyc>& terms() const { return terms_; }
    bool is_tensor_zero() const { return terms_.empty(); }

    /// Multidegree when homogeneous; throws NotHomogeneous otherwise (zero counts as
    /// homogeneous of any degree and reports {0,0}).
    MultiDegree degree() const;
    bool is_homogeneous() const;
    /// Lossless extraction of the multidegree-d component.
    TensorElement component(MultiDegree d) const;

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const; // concatenation product
    TensorElement scaled(const Cyc& c) const;

    bool operator==(const TensorElement& o) const;

    /// Coefficient of the empty word (the scalar part).
    Cyc scalar_part() const;
    /// Coefficient of a specific word.
    Cyc coefficient(const Word& w) const;

    void add_term(const Word& w, const Cyc& c); // used by builders; drops zeros

  private:
    BraidingPtr br_;
    std::map<Word, Cyc> terms_;

    void check_compatible(const TensorElement& o) const;
};

TensorElement multiply(const TensorElement& a, const TensorElement& b);

/// g(alpha) acting on homogeneous pieces by chi(alpha, deg); alpha may be negative.
TensorElement group_act(std::pair<long, long> alpha, const TensorElement& e);

/// Skew derivation <y_i, .>: lowers multidegree by e_i;
/// derive(i, uv) = derive(i, u) v + (g_i^{-1} |> u) derive(i, v), derive(i, x_j) = delta_ij.
TensorElement derive(int i, const TensorElement& e);

/// <iota(x_{u_0} ... x_{u_{m-1}}), e> = d_{u_0}(d_{u_1}(... d_{u_{m-1}}(e)));
/// the rightmost letter acts first.
TensorElement pair_word(const Word& u, const TensorElement& e);

/// Linear extension: <iota(f), e> for a tensor element f.
TensorElement pair_elem(const TensorElement& f, const TensorElement& e);

/// Degreewise oracle for B(V): exact graded dimensions and zero tests, realized through
/// the nondegenerate derivation pairing. A single oracle instance memoizes per-multidegree
/// data and is meant to be owned by one thread; distinct instances are fully independent.
class NicholsOracle {
  public:
    explicit NicholsOracle(BraidingPtr br, long max_total_cutoff = 12);

    const BraidingPtr& braiding() const { return br_; }
    long cutoff() const { return cutoff_; }

    /// dim B(V)_(a,b), exact.
    long dim(MultiDegree d);

    /// True iff e = 0 in B(V); requires e homogeneous.
    bool is_zero(const TensorElement& e);

    /// Row vector of pairings of e against the dual spanning set of its degree;
    /// two homogeneous elements are equal in B(V) iff their vectors agree.
    std::vector<Cyc> pair_profile(const TensorElement& e);

    /// Words whose images form a basis of B(V)_d (lexicographically first such set
    /// among the inductive candidates).
    std::vector<Word> basis_words(MultiDegree d);

    struct HilbertReport {
        long max_total = 0;
        bool truncated = true;
        std::vector<std::array<long, 3>> by_multidegree; // (a, b, dim)
        std::vector<long> by_total;                      // index = total degree
    };
    HilbertReport hilbert_series(long max_total);

  private:
    struct Block {
        bool built = false;
        std::vector<Word> right_cands;           // dual-side spanning words (w = u . x_i)
        std::vector<std::uint32_t> right_basis;  // indices of a basis subset
        std::vector<Word> left_cands;            // primal candidates (w = x_i . u)
        std::vector<std::uint32_t> left_basis;
        long dim = 0;
        std::unordered_map<std::uint64_t, std::vector<Cyc>> pair_vectors; // word.bits -> row
    };

    BraidingPtr br_;
    long cutoff_;
    std::map<std::pair<long, long>, Block> blocks_;

    Block& block(MultiDegree d);
    const std::vector<Cyc>& pair_vector(MultiDegree d, const Word& w);
};

} // namespace nichols
