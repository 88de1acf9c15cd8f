#pragma once

#include "nichols/cyclotomic.hpp"

namespace nichols {

/// (i)_p = sum_{j=0}^{i-1} p^j, with (0)_p = 0.
Cyc q_int(long i, const Cyc& p);

/// (i)!_p = (1)_p (2)_p ... (i)_p, with (0)!_p = 1.
Cyc q_fact(long i, const Cyc& p);

/// Gaussian binomial binom(i, j)_p, computed by the q-Pascal recursion
/// binom(i,j) = binom(i-1,j-1) + p^j binom(i-1,j) so the value stays defined
/// where the factorial ratio degenerates to 0/0 at roots of unity.
Cyc q_binom(long i, long j, const Cyc& p);

/// (i)!_p / (m)!_p as the telescoped product (m+1)_p (m+2)_p ... (i)_p, defined even
/// where the denominator factorial vanishes. Requires m <= i.
Cyc q_fact_ratio(long i, long m, const Cyc& p);

} // namespace nichols
