#include "nichols/tensor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace nichols {

Word Word::prepend(int letter) const {
    if (len >= max_len) throw IndexError("word too long");
    Word w;
    w.len = len + 1;
    w.bits = (bits << 1) | (letter == 2 ? 1u : 0u);
    return w;
}

Word Word::append(int letter) const {
    if (len >= max_len) throw IndexError("word too long");
    Word w;
    w.len = len + 1;
    w.bits = bits | ((letter == 2 ? 1ull : 0ull) << len);
    return w;
}

Word Word::erase(std::uint32_t pos) const {
    Word w;
    w.len = len - 1;
    std::uint64_t low = bits & ((1ull << pos) - 1);
    std::uint64_t high = (bits >> (pos + 1)) << pos;
    w.bits = low | high;
    return w;
}

Word Word::concat(const Word& o) const {
    if (len + o.len > max_len) throw IndexError("word too long");
    Word w;
    w.len = len + o.len;
    w.bits = bits | (o.bits << len);
    return w;
}

bool Word::operator<(const Word& o) const {
    std::uint32_t m = std::min(len, o.len);
    if (m) {
        std::uint64_t mask = (1ull << m) - 1;
        std::uint64_t a = bits & mask, b = o.bits & mask;
        if (a != b) {
            // first differing position decides; the word with bit 0 (= x_1) there is smaller
            std::uint64_t diff = a ^ b;
            std::uint64_t lowbit = diff & (~diff + 1);
            return (a & lowbit) == 0;
        }
    }
    return len < o.len;
}

Word word_from_letters(const std::vector<int>& letters) {
    Word w;
    for (int l : letters) w = w.append(l);
    return w;
}

std::vector<int> letters_of(const Word& w) {
    std::vector<int> out(w.len);
    for (std::uint32_t i = 0; i < w.len; ++i) out[i] = w.letter(i);
    return out;
}

std::string word_str(const Word& w) {
    std::string s;
    for (std::uint32_t i = 0; i < w.len; ++i) s += ('0' + w.letter(i));
    return s.empty() ? "1" : "x" + s;
}

std::vector<Word> words_of_degree(MultiDegree d) {
    std::vector<Word> out;
    if (d.a < 0 || d.b < 0) return out;
    // Enumerate subsets of positions carrying letter 2 in lex order.
    std::uint32_t n = (std::uint32_t)d.total();
    std::vector<int> letters(n, 1);
    for (long i = 0; i < d.b; ++i) letters[n - 1 - i] = 2;
    std::sort(letters.begin(), letters.end());
    // all permutations of the multiset {1^a, 2^b}
    std::vector<int> cur(letters);
    do {
        out.push_back(word_from_letters(cur));
    } while (std::next_permutation(cur.begin(), cur.end()));
    std::sort(out.begin(), out.end());
    return out;
}

TensorElement TensorElement::unit(BraidingPtr br) {
    TensorElement e(std::move(br));
    e.add_term(Word{}, Cyc(1));
    return e;
}

TensorElement TensorElement::generator(BraidingPtr br, int letter) {
    TensorElement e(std::move(br));
    e.add_term(Word{}.append(letter), Cyc(1));
    return e;
}

TensorElement TensorElement::monomial(BraidingPtr br, Word w, Cyc c) {
    TensorElement e(std::move(br));
    e.add_term(w, c);
    return e;
}

void TensorElement::add_term(const Word& w, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorElement::check_compatible(const TensorElement& o) const {
    if (br_ == o.br_) return;
    if (br_ && o.br_ && *br_ == *o.br_) return;
    throw BraidingMismatch();
}

MultiDegree TensorElement::degree() const {
    if (terms_.empty()) return {0, 0};
    MultiDegree d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_)
        if (!(w.degree() == d)) throw NotHomogeneous();
    return d;
}

bool TensorElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    MultiDegree d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_)
        if (!(w.degree() == d)) return false;
    return true;
}

TensorElement TensorElement::component(MultiDegree d) const {
    TensorElement out(br_);
    for (const auto& [w, c] : terms_)
        if (w.degree() == d) out.add_term(w, c);
    return out;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    check_compatible(o);
    TensorElement out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    check_compatible(o);
    TensorElement out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
    return out;
}

TensorElement TensorElement::scaled(const Cyc& c) const {
    TensorElement out(br_);
    if (c.is_zero()) return out;
    for (const auto& [w, k] : terms_) out.add_term(w, k * c);
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    check_compatible(o);
    TensorElement out(br_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) out.add_term(wa.concat(wb), ca * cb);
    return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

Cyc TensorElement::scalar_part() const { return coefficient(Word{}); }

Cyc TensorElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Cyc(0) : it->second;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) { return a * b; }

TensorElement group_act(std::pair<long, long> alpha, const TensorElement& e) {
    TensorElement out(e.braiding());
    for (const auto& [w, c] : e.terms()) {
        MultiDegree d = w.degree();
        out.add_term(w, c * chi(*e.braiding(), alpha, std::pair{d.a, d.b}));
    }
    return out;
}

namespace {

// Expansion of the skew derivation on a single word:
// positions carrying letter i, each with the inverse-action prefix scalar.
std::vector<std::pair<Word, Cyc>> derive_word(const DiagonalBraiding& br, int i, const Word& w,
                                              const Cyc& inv_qi1, const Cyc& inv_qi2) {
    std::vector<std::pair<Word, Cyc>> out;
    Cyc prefix(1);
    for (std::uint32_t pos = 0; pos < w.len; ++pos) {
        int l = w.letter(pos);
        if (l == i) out.emplace_back(w.erase(pos), prefix);
        prefix *= (l == 1 ? inv_qi1 : inv_qi2);
    }
    (void)br;
    return out;
}

} // namespace

TensorElement derive(int i, const TensorElement& e) {
    const DiagonalBraiding& br = *e.braiding();
    Cyc inv_qi1 = (i == 1 ? br.q11 : br.q21).inverse();
    Cyc inv_qi2 = (i == 1 ? br.q12 : br.q22).inverse();
    TensorElement out(e.braiding());
    for (const auto& [w, c] : e.terms())
        for (const auto& [w2, k] : derive_word(br, i, w, inv_qi1, inv_qi2)) out.add_term(w2, c * k);
    return out;
}

TensorElement pair_word(const Word& u, const TensorElement& e) {
    TensorElement cur = e;
    for (std::uint32_t pos = u.len; pos-- > 0;) cur = derive(u.letter(pos), cur);
    return cur;
}

TensorElement pair_elem(const TensorElement& f, const TensorElement& e) {
    TensorElement out(e.braiding());
    for (const auto& [w, c] : f.terms()) out = out + pair_word(w, e).scaled(c);
    return out;
}

NicholsOracle::NicholsOracle(BraidingPtr br, long max_total_cutoff)
    : br_(std::move(br)), cutoff_(max_total_cutoff) {}

NicholsOracle::Block& NicholsOracle::block(MultiDegree d) {
    Block& b = blocks_[{d.a, d.b}];
    if (b.built) return b;
    b.built = true;
    if (d.a == 0 && d.b == 0) {
        b.right_cands = {Word{}};
        b.right_basis = {0};
        b.left_cands = {Word{}};
        b.left_basis = {0};
        b.dim = 1;
        b.pair_vectors.emplace(0ull, std::vector<Cyc>{Cyc(1)});
        return b;
    }

    std::vector<Word> rc, lc;
    for (int i : {1, 2}) {
        MultiDegree pd{d.a - (i == 1), d.b - (i == 2)};
        if (pd.a < 0 || pd.b < 0) continue;
        Block& prev = block(pd);
        for (std::uint32_t idx : prev.right_basis) rc.push_back(prev.right_cands[idx].append(i));
        for (std::uint32_t idx : prev.left_basis) lc.push_back(prev.left_cands[idx].prepend(i));
    }
    std::sort(rc.begin(), rc.end());
    std::sort(lc.begin(), lc.end());
    b.right_cands = std::move(rc);
    b.left_cands = std::move(lc);

    // Pairing matrix of the two spanning sets; its rank is dim B(V)_d because the
    // degreewise pairing between B(V*) and B(V) is nondegenerate on both sides.
    std::vector<std::vector<Cyc>> m;
    m.reserve(b.left_cands.size());
    for (const Word& w : b.left_cands) m.push_back(pair_vector(d, w)); // columns as rows
    // m[c][r]: entry (row r, column c). Fraction-free (Bareiss) elimination, pivoting by
    // first nonzero entry in lexicographic word order.
    std::size_t R = b.right_cands.size(), C = b.left_cands.size();
    std::vector<std::uint32_t> rowperm(R);
    std::iota(rowperm.begin(), rowperm.end(), 0u);
    Cyc prev_piv(1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t sel = rank;
        while (sel < R && m[c][rowperm[sel]].is_zero()) ++sel;
        if (sel == R) continue;
        std::swap(rowperm[rank], rowperm[sel]);
        const Cyc piv = m[c][rowperm[rank]];
        for (std::size_t i = rank + 1; i < R; ++i) {
            const Cyc& low = m[c][rowperm[i]];
            for (std::size_t j = c + 1; j < C; ++j) {
                Cyc v = piv * m[j][rowperm[i]] - low * m[j][rowperm[rank]];
                m[j][rowperm[i]] = (rank == 0) ? v : v / prev_piv;
            }
            m[c][rowperm[i]] = Cyc(0);
        }
        prev_piv = piv;
        b.left_basis.push_back((std::uint32_t)c);
        b.right_basis.push_back(rowperm[rank]);
        ++rank;
    }
    std::sort(b.right_basis.begin(), b.right_basis.end());
    b.dim = (long)rank;
    return b;
}

const std::vector<Cyc>& NicholsOracle::pair_vector(MultiDegree d, const Word& w) {
    Block& b = block(d);
    auto it = b.pair_vectors.find(w.bits);
    if (it != b.pair_vectors.end()) return it->second;

    std::vector<Cyc> vec(b.right_cands.size(), Cyc(0));
    const DiagonalBraiding& br = *br_;
    std::array<std::vector<std::pair<Word, Cyc>>, 3> dw; // index by letter
    std::array<bool, 3> have{false, false, false};
    for (std::size_t idx = 0; idx < b.right_cands.size(); ++idx) {
        const Word& rc = b.right_cands[idx];
        int i = rc.letter(rc.len - 1);
        Word parent = rc.erase(rc.len - 1);
        MultiDegree pd{d.a - (i == 1), d.b - (i == 2)};
        Block& prev = block(pd);
        std::size_t pidx = std::lower_bound(prev.right_cands.begin(), prev.right_cands.end(), parent) -
                           prev.right_cands.begin();
        if (!have[i]) {
            Cyc inv1 = (i == 1 ? br.q11 : br.q21).inverse();
            Cyc inv2 = (i == 1 ? br.q12 : br.q22).inverse();
            dw[i] = derive_word(br, i, w, inv1, inv2);
            have[i] = true;
        }
        Cyc acc(0);
        for (const auto& [w2, k] : dw[i]) {
            const std::vector<Cyc>& pv = pair_vector(pd, w2);
            if (!pv[pidx].is_zero()) acc += k * pv[pidx];
        }
        vec[idx] = std::move(acc);
    }
    return b.pair_vectors.emplace(w.bits, std::move(vec)).first->second;
}

long NicholsOracle::dim(MultiDegree d) { return block(d).dim; }

std::vector<Cyc> NicholsOracle::pair_profile(const TensorElement& e) {
    MultiDegree d = e.degree(); // throws NotHomogeneous
    Block& b = block(d);
    std::vector<Cyc> out(b.right_cands.size(), Cyc(0));
    for (const auto& [w, c] : e.terms()) {
        const std::vector<Cyc>& pv = pair_vector(d, w);
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!pv[i].is_zero()) out[i] += c * pv[i];
    }
    return out;
}

bool NicholsOracle::is_zero(const TensorElement& e) {
    if (e.is_tensor_zero()) return true;
    for (const Cyc& v : pair_profile(e))
        if (!v.is_zero()) return false;
    return true;
}

std::vector<Word> NicholsOracle::basis_words(MultiDegree d) {
    Block& b = block(d);
    std::vector<Word> out;
    for (std::uint32_t idx : b.left_basis) out.push_back(b.left_cands[idx]);
    return out;
}

NicholsOracle::HilbertReport NicholsOracle::hilbert_series(long max_total) {
    if (max_total < 1) throw IndexError("max_total must be positive");
    if (max_total > cutoff_) throw CutoffExceeded(max_total, cutoff_);
    HilbertReport rep;
    rep.max_total = max_total;
    rep.by_total.assign(max_total + 1, 0);
    for (long n = 0; n <= max_total; ++n) {
        for (long a = n; a >= 0; --a) {
            long b = n - a;
            long dd = dim({a, b});
            rep.by_multidegree.push_back({a, b, dd});
            rep.by_total[n] += dd;
        }
    }
    rep.truncated = rep.by_total[max_total] != 0;
    return rep;
}

} // namespace nichols
