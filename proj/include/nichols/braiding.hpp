#pragma once

#include <utility>

#include "nichols/cyclotomic.hpp"

namespace nichols {

/// Multidegree in N_0^2: exponents of e_1 and e_2.
struct MultiDegree {
    long a = 0;
    long b = 0;
    long total() const { return a + b; }
    bool operator==(const MultiDegree&) const = default;
    MultiDegree operator+(const MultiDegree& o) const { return {a + o.a, b + o.b}; }
};

/// Rank-2 diagonal braiding: the matrix (q_ij), all entries nonzero.
struct DiagonalBraiding {
    Cyc q11, q12, q21, q22;

    DiagonalBraiding(Cyc a, Cyc b, Cyc c, Cyc d);
    bool operator==(const DiagonalBraiding&) const = default;
};

/// The complete rescaling invariant (q11, q12 q21, q22).
struct TwistClass {
    Cyc q11, q12q21, q22;
    bool operator==(const TwistClass&) const = default;
};

/// Bicharacter chi on Z^2 x Z^2 with chi(e_i, e_j) = q_ij; degrees may be negative
/// (the group element g(alpha) for negative alpha acts by the inverse scalar).
Cyc chi(const DiagonalBraiding& br, std::pair<long, long> alpha, std::pair<long, long> beta);
inline Cyc chi(const DiagonalBraiding& br, MultiDegree alpha, MultiDegree beta) {
    return chi(br, std::pair{alpha.a, alpha.b}, std::pair{beta.a, beta.b});
}

/// Exchanges the basis vectors x_1 <-> x_2.
DiagonalBraiding swap_basis(const DiagonalBraiding& br);

TwistClass twist_class(const DiagonalBraiding& br);
inline TwistClass swap_twist(const TwistClass& tc) { return {tc.q22, tc.q12q21, tc.q11}; }

/// A braiding whose twist class equals tc (q12 = q12q21, q21 = 1).
DiagonalBraiding representative_braiding(const TwistClass& tc);

} // namespace nichols
