#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/root_vectors.hpp"

namespace nichols {

/// One descent step: the braiding of the Yetter-Drinfeld submodule spanned by two
/// homogeneous generators is chi evaluated on their degrees.
struct SubquotientStep {
    DiagonalBraiding source;
    MultiDegree d1, d2;
    DiagonalBraiding target;
};

/// Braiding matrix (chi(d_i, d_j))_{i,j} of the submodule with generator degrees d1, d2.
DiagonalBraiding subquotient_braiding(const DiagonalBraiding& br, MultiDegree d1, MultiDegree d2);

struct SubquotientValidation {
    bool pass = false;
    Cyc lambda1, lambda2;       // diagonal pairings <iota(g_i), g_i>
    long checked_to_degree = 0; // skew-primitivity verified up to this total degree only
    std::string counterexample; // empty when pass
};

/// Checks the two hypotheses of the subquotient criterion for generators (g1, g2):
/// diagonal pairings <iota(g_i), g_j> = delta_ij lambda_i with lambda_i != 0, and
/// skew-primitivity of <iota(g_i), .> on products of the generators up to the cutoff.
SubquotientValidation validate_subquotient(RootVectorContext& ctx, const TensorElement& g1,
                                           const TensorElement& g2, long cutoff = 8);

enum class DescentVerdict { InfiniteChainCycle, ReachedKnownInfinite, Blocked };

const char* descent_verdict_name(DescentVerdict v);

struct DescentStepRecord {
    int family = 0;       // 1: (q^4, q^2; q^2, q) at q, 2: (q, q^3; q^3, q^9) at q
    RootOfUnity param;
    std::vector<std::string> side_conditions; // conditions verified at this iterate
    std::optional<SubquotientStep> step;      // present when the iterate descended
};

struct DescentOutcome {
    DescentVerdict verdict = DescentVerdict::Blocked;
    int blocked_step = 0; // step number when a side condition fired
    std::string reason;
    std::vector<DescentStepRecord> chain;
};

/// Iterates the descent of the two recognized families. Side conditions are re-verified
/// at every iterate; a revisited parameter closes an infinite chain of proper
/// subquotients. Throws UnrecognizedFamily for braidings outside the two families.
DescentOutcome descent_chain(const DiagonalBraiding& br, long max_steps = 64);

} // namespace nichols
