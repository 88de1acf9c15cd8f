#pragma once

#include <deque>

#include "nichols/qcombinatorics.hpp"
#include "nichols/tensor.hpp"

namespace nichols {

/// Owner of the constructed elements z_i, u_i, w_i, z_{i,1}, z_{i,2}, s_i, t_i and their
/// scalar coefficients for one fixed braiding. Single-owner: concurrent jobs build their
/// own context.
class RootVectorContext {
  public:
    explicit RootVectorContext(BraidingPtr br, long i_max = 16);

    const BraidingPtr& braiding() const { return br_; }
    long i_max() const { return i_max_; }

    /// z_0 = x_2, z_{i+1} = x_1 z_i - q11^i q12 z_i x_1. deg z_i = (i, 1).
    const TensorElement& z(long i);
    /// u_0 = x_1, u_{i+1} = u_i x_2 - q12 q22^i x_2 u_i. deg u_i = (1, i).
    const TensorElement& u(long i);

    /// b_i = prod_{j<i} (1 - q11^j q12 q21); b_0 = 1.
    const Cyc& b(long i);
    /// c_i = prod_{j<i} (1 - q12 q21 q22^j); c_0 = 1.
    const Cyc& c(long i);
    /// p_i = chi(z_i, z_i)^{-1}.
    Cyc p(long i);
    /// d_{i,0} = q21^{-1}(1 - q11^i q12 q21)(i+1)_{q11^{-1}} + chi(z_i,z_{i+1})^{-1} - chi(z_{i+1},z_i).
    Cyc d0(long i);
    /// d_{i,1} = q21^{-1}(1 - q11^i q12 q21)(i+1)_{q11^{-1}}
    ///           + (2)_{p_{i+1}} (chi(z_i,z_{i+1})^{-1} - chi(z_{i+1}, z_i z_{i+1})).
    Cyc d1(long i);
    /// <z^_i, z_i> = q21^{-i} b_i (i)!_{q11^{-1}}.
    Cyc pair_zz(long i);

    struct Scalars {
        Cyc b, c, p, d0, d1, pair_zz;
    };
    Scalars scalars(long i);

    /// z_i = 0 in B(V), decided by b_i (i)!_{q11} = 0.
    bool z_is_zero(long i);
    /// u_i = 0 in B(V), decided by c_i (i)!_{q22} = 0.
    bool u_is_zero(long i);

    /// z_{i,1} = z_{i+1} z_i - chi(z_{i+1}, z_i) z_i z_{i+1}.
    TensorElement z1(long i);
    /// z_{i,2} = z_{i+1} z_{i,1} - chi(z_{i+1}, z_{i,1}) z_{i,1} z_{i+1}.
    TensorElement z2(long i);
    /// Corrected commutator of z_{i+1} against z_{i-1}; the zero element when z_{i+1} = 0.
    TensorElement w(long i);
    /// Corrected commutator of z_{i,1} against z_{i-1}; the zero element when z_{i,1} = 0 in B(V).
    TensorElement s(long i);
    /// Corrected commutator of z_{i,2} against z_i.
    TensorElement t(long i);

    /// chi evaluated on the degrees of z_i and z_j.
    Cyc chi_zz(long i, long j);

    NicholsOracle& oracle();

    /// The dual word y_1^j y_2 realizing <z^_j, .> on y_1-killed arguments.
    static Word zhat_word(long j);

  private:
    BraidingPtr br_;
    long i_max_;
    // deques keep references stable while the caches grow
    std::deque<TensorElement> z_cache_, u_cache_;
    std::deque<Cyc> b_cache_, c_cache_;
    std::unique_ptr<NicholsOracle> oracle_;

    void check_index(long i) const;
};

} // namespace nichols
