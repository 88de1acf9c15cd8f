#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "nichols/braiding.hpp"
#include "nichols/root_vectors.hpp"
#include "nichols/unit_arith.hpp"

namespace nichols {

enum class CondStatus { Holds, Fails, NotApplicable };

struct Witness {
    long index = -1;          // deciding index i where one exists
    std::string note;         // the scalar identity that decides
    std::optional<Cyc> value; // deciding scalar, materialized on desk-scale paths
};

struct ConditionOutcome {
    CondStatus status = CondStatus::NotApplicable;
    Witness witness;
};

struct ConditionReport {
    std::array<ConditionOutcome, 8> cond; // A1..A8 at indices 0..7
    bool swapped = false;
    std::optional<long> a_value;

    const ConditionOutcome& A(int k) const { return cond[k - 1]; }
    bool all_hold() const;
    int first_failure() const; // 1..8, or 0 when none fails
};

struct Limits {
    long max_index = 16;        // root-vector recursion cap
    long max_degree = 10;       // oracle cutoff
    long max_order = 30;        // enumeration bound
    long conductor_ceiling = 360;
    long workers = 1;
    unsigned long seed = 1;
    bool witness_values = true; // materialize deciding scalars in reports
};

/// Reorders the basis so that min{i | u_i = 0} <= min{i | z_i = 0} (condition A3),
/// preferring no swap on ties. Throws NoTermination when neither sequence vanishes
/// (an upstream A1 violation).
std::pair<DiagonalBraiding, bool> normalize_A3(const DiagonalBraiding& br);

/// Evaluates (A1), (A2), A3-normalization, (A4)..(A8) in order, short-circuiting
/// structurally: conditions after the first failure are reported not-applicable.
ConditionReport evaluate_conditions(const DiagonalBraiding& br, const Limits& limits = {});

/// a = min{i in N | z_{i+2} = 0}, decided through b_i (i)!_{q11} = 0.
/// Throws Inapplicable when z_2 = 0 (or when A1 fails so no index exists).
long a_invariant(RootVectorContext& ctx);

/// Exponents of (q11, q12 q21, q22) at the joint conductor M, when all three are
/// roots of unity.
struct TwistExp {
    long M = 1;
    long al = 0, be = 0, ga = 0;
};

std::optional<TwistExp> twist_exponents(const TwistClass& tc);

/// Exponent-arithmetic engine for the condition pipeline. All multiplicative scalar
/// tests are integer congruences; the additive scalars (d_{i,0}, d_{i,1}, the w-, t-
/// and s-pairings) are tested exactly through ZPoly at the representative braiding
/// q21 = 1, which is legitimate because their vanishing is a twist-class property.
class PipelineCore {
  public:
    explicit PipelineCore(TwistExp t);

    const ConditionReport& report(); // runs once, memoized

    const TwistExp& exps() const { return t_; } // post A3-normalization
    bool swapped() const { return swapped_; }
    long M() const { return t_.M; }
    long min_z() const { return min_z_; }
    long min_u() const { return min_u_; }
    std::optional<long> a_value() const { return a_; }

    // congruence helpers on exponents of zeta_M
    long norm(long e) const { long m = e % t_.M; return m < 0 ? m + t_.M : m; }
    long ord_exp(long e) const;
    bool is_one_exp(long e) const { return norm(e) == 0; }
    bool is_minus_one_exp(long e) const { return t_.M % 2 == 0 && norm(e) == t_.M / 2; }
    bool eq_exp(long e1, long e2) const { return norm(e1 - e2) == 0; }
    bool eq_minus_exp(long e1, long e2) const { return t_.M % 2 == 0 && norm(e1 - e2) == t_.M / 2; }
    bool in_Rn_exp(long e, long n) const { return ord_exp(e) == n; }
    /// (3)_{zeta^e} = 0
    bool qint3_zero_exp(long e) const { return !is_one_exp(e) && is_one_exp(3 * e); }
    /// (3)_{-zeta^e} = 0
    bool qint3_zero_minus_exp(long e) const {
        return !is_minus_one_exp(e) && is_minus_one_exp(3 * e);
    }

    /// exponent of chi(z_i, z_j) at the representative braiding
    long e_chi_zz(long i, long j) const { return norm(i * j * t_.al + i * t_.be + t_.ga); }

    bool z_vanishes_at(long i) const { return i >= min_z_; }
    bool u_vanishes_at(long i) const { return i >= min_u_; }

    // additive scalar tests (representative braiding)
    ZPoly d0_poly(long i) const;
    ZPoly d1_poly(long i) const;
    bool d0_is_zero(long i) const { return d0_poly(i).is_zero_value(); }
    bool d1_is_zero(long i) const { return d1_poly(i).is_zero_value(); }
    bool two_p_is_zero(long i) const { return is_minus_one_exp(e_chi_zz(i, i)); }
    /// z_{i,2} = 0 via d_{i,0} d_{i,1} (2)_{p_{i+1}} z_{i+1} = 0; requires z_{i+1} != 0.
    bool z12_is_zero(long i) const {
        return two_p_is_zero(i + 1) || d0_is_zero(i) || d1_is_zero(i);
    }
    long e_chi_z11(long i) const { // chi(z_{i,1}, z_{i,1})
        long k = 2 * i + 1;
        return norm(k * k * t_.al + 2 * k * t_.be + 4 * t_.ga);
    }
    bool chi_z11_is_minus_one(long i) const { return is_minus_one_exp(e_chi_z11(i)); }
    /// <z^_{i+1} z^_{i-1}, w_i> = 0, via the closed-form reduction; requires
    /// z_{i+1} != 0 and (2)_{p_i} != 0 (pipeline order guarantees both).
    bool w_scalar_is_zero(long i);
    /// <z^_i, t_i> = 0; requires (2)_{p_{i+1}} != 0 and chi(z_{i,1},z_{i,1}) != -1.
    bool t_scalar_is_zero(long i);

    Cyc cyc_of_exp(long e) const { return Cyc::root(norm(e), t_.M); }

  private:
    TwistExp t_;
    bool swapped_ = false;
    long min_z_ = 0, min_u_ = 0;
    std::optional<long> a_;
    std::optional<ConditionReport> report_;
    std::vector<ZPoly> t_memo_; // T_j = b_j (j)!_{q11^{-1}} at the representative braiding

    long first_z_vanish(long al, long be) const; // min{i >= 1 | z_i = 0} for the (al,be) side
    const ZPoly& T(long j);
    void run();
};

} // namespace nichols
