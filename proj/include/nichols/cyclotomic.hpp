#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "nichols/errors.hpp"

namespace nichols {

/// Exact rational scalar. Always stored in canonical form (gcd 1, positive denominator);
/// mpq_class maintains that invariant for us.
using Rational = mpq_class;

long euler_phi(long n);

/// Integer coefficients of the n-th cyclotomic polynomial, degree phi(n), monic.
/// Index i holds the coefficient of x^i. Thread-safe memoized table.
const std::vector<long>& cyclotomic_poly(long n);

/// Conductor ceiling for lcm chains (default 360). Exceeding it throws
/// ConductorCeilingExceeded rather than silently approximating. Thread-local.
long conductor_ceiling();
void set_conductor_ceiling(long c);

/// An element of the union of all Q(zeta_N), stored at its minimal conductor as a
/// coefficient vector of length phi(N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
/// fully reduced modulo Phi_N. Equality is plain coefficient equality because the
/// representation is canonical. Values are immutable after construction.
class Cyc {
  public:
    Cyc() : conductor_(1), coeffs_(1, Rational(0)) {}
    Cyc(long v) : conductor_(1), coeffs_(1, Rational(v)) {}
    explicit Cyc(const Rational& r) : conductor_(1), coeffs_(1, r) {}

    /// zeta_N^k at minimal conductor N/gcd(N,k).
    static Cyc root(long k, long n);
    /// sum_i coeffs[i] * zeta_n^i, reduced and minimized. coeffs may have any length.
    static Cyc from_coeffs(long n, std::vector<Rational> coeffs);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return conductor_ == 1; }
    const Rational& rational_value() const; // requires is_rational()

    Cyc operator-() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator/(const Cyc& o) const; // throws DivisionByZero
    Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
    Cyc& operator-=(const Cyc& o) { *this = *this - o; return *this; }
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }
    Cyc& operator/=(const Cyc& o) { *this = *this / o; return *this; }

    Cyc inverse() const; // throws DivisionByZero
    Cyc pow(long e) const; // negative exponents allowed on nonzero values

    bool operator==(const Cyc& o) const { return conductor_ == o.conductor_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    /// Multiplicative order if this is a root of unity (decided exactly via
    /// a^{2N} = 1 at conductor N), absent otherwise.
    std::optional<long> root_order() const;
    /// Membership in R_n, the primitive n-th roots of unity.
    bool in_Rn(long n) const { auto o = root_order(); return o && *o == n; }

    /// Lift to a representation at conductor m (conductor() | m), length phi(m).
    std::vector<Rational> lifted_coeffs(long m) const;

    std::string str() const;   // literal grammar: "r/s" | "zN:k" | "cycN[...]"

  private:
    long conductor_;
    std::vector<Rational> coeffs_;

    static Cyc make_reduced(long n, std::vector<Rational> poly); // reduce mod Phi_n, minimize
    void minimize();

    friend struct CycHashAccess;
};

/// zeta_N^k with gcd(k, N) = 1 unless k = 0 (then the value 1 = zeta_1^0).
struct RootOfUnity {
    long exponent = 0;
    long order = 1;

    RootOfUnity() = default;
    RootOfUnity(long k, long n); // reduces to canonical (k mod n, n/gcd)

    Cyc to_cyc() const { return Cyc::root(exponent, order); }
    /// Recovers (k, N) from a cyclotomic value; absent if not a root of unity.
    static std::optional<RootOfUnity> from_cyc(const Cyc& a);

    bool operator==(const RootOfUnity& o) const = default;
};

/// Parses the scalar literal grammar used by the CLI and fixtures:
///   zN:k        zeta_N^k
///   r or r/s    rational
///   cycN[c0,c1,...]   sum c_i zeta_N^i with rational c_i
Cyc parse_scalar_literal(const std::string& text);

} // namespace nichols
