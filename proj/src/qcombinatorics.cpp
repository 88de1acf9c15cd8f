#include "nichols/qcombinatorics.hpp"

#include <vector>

namespace nichols {

Cyc q_int(long i, const Cyc& p) {
    if (i < 0) throw IndexError("q_int needs i >= 0");
    Cyc sum(0), term(1);
    for (long j = 0; j < i; ++j) {
        sum += term;
        if (j + 1 < i) term *= p;
    }
    return sum;
}

Cyc q_fact(long i, const Cyc& p) {
    if (i < 0) throw IndexError("q_fact needs i >= 0");
    Cyc out(1);
    for (long j = 1; j <= i; ++j) {
        out *= q_int(j, p);
        if (out.is_zero()) return out; // later factors cannot resurrect it
    }
    return out;
}

Cyc q_fact_ratio(long i, long m, const Cyc& p) {
    if (m < 0 || m > i) throw IndexError("q_fact_ratio needs 0 <= m <= i");
    Cyc out(1);
    for (long r = m + 1; r <= i; ++r) out *= q_int(r, p);
    return out;
}

Cyc q_binom(long i, long j, const Cyc& p) {
    if (j < 0 || i < 0) throw IndexError("q_binom needs nonnegative arguments");
    if (j > i) throw IndexError("q_binom needs j <= i");
    // One row of the q-Pascal triangle at a time.
    std::vector<Cyc> row(1, Cyc(1));
    for (long r = 1; r <= i; ++r) {
        std::vector<Cyc> next(r + 1, Cyc(1));
        Cyc pk(1);
        for (long k = 1; k < r; ++k) {
            pk *= p;
            next[k] = row[k - 1] + pk * row[k];
        }
        row = std::move(next);
    }
    return row[j];
}

} // namespace nichols
