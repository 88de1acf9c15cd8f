#pragma once

#include <random>

#include "nichols/tensor.hpp"

namespace nichols {

/// Deterministic sampler for braidings and tensor elements, seeded from the job config.
/// All four entries of a sampled braiding are powers of one zeta_N, so the joint
/// conductor stays at most max_conductor.
class Sampler {
  public:
    Sampler(unsigned long seed, long max_conductor) : rng_(seed), max_conductor_(max_conductor) {}

    std::mt19937_64& rng() { return rng_; }

    long uniform(long lo, long hi) { // inclusive bounds
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    DiagonalBraiding braiding() {
        long n = uniform(2, max_conductor_);
        return DiagonalBraiding(Cyc::root(uniform(0, n - 1), n), Cyc::root(uniform(0, n - 1), n),
                                Cyc::root(uniform(0, n - 1), n), Cyc::root(uniform(0, n - 1), n));
    }

    BraidingPtr braiding_ptr() { return std::make_shared<DiagonalBraiding>(braiding()); }

    /// A braiding satisfying pred, by rejection (throws after too many attempts).
    template <typename Pred>
    BraidingPtr braiding_where(Pred&& pred, long attempts = 4000) {
        for (long i = 0; i < attempts; ++i) {
            BraidingPtr b = braiding_ptr();
            if (pred(*b)) return b;
        }
        throw Error("sampler could not satisfy the predicate");
    }

    Word word(MultiDegree d) {
        std::vector<int> letters;
        for (long i = 0; i < d.a; ++i) letters.push_back(1);
        for (long i = 0; i < d.b; ++i) letters.push_back(2);
        std::shuffle(letters.begin(), letters.end(), rng_);
        return word_from_letters(letters);
    }

    /// Homogeneous element of the given multidegree: one or two distinct words with
    /// root-of-unity coefficients.
    TensorElement homogeneous(const BraidingPtr& br, MultiDegree d) {
        TensorElement e(br);
        long n = std::max<long>(2, br->q11.conductor());
        e.add_term(word(d), Cyc::root(uniform(0, n - 1), n));
        if (uniform(0, 1)) e.add_term(word(d), Cyc::root(uniform(0, n - 1), n));
        if (e.is_tensor_zero()) e.add_term(word(d), Cyc(1));
        return e;
    }

    MultiDegree degree(long max_part) { return {uniform(0, max_part), uniform(0, max_part)}; }

  private:
    std::mt19937_64 rng_;
    long max_conductor_;
};

} // namespace nichols
