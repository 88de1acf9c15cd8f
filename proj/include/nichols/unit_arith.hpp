#pragma once

#include <gmpxx.h>

#include <numeric>
#include <vector>

#include "nichols/cyclotomic.hpp"

namespace nichols {

/// Dense integer polynomial in Z[x]/(x^M - 1), used for exact zero tests of sums of
/// roots of unity: a combination of powers of zeta_M vanishes iff its representative
/// is divisible by Phi_M. All coefficient arithmetic is arbitrary-precision integer.
class ZPoly {
  public:
    explicit ZPoly(long M) : m_(M), c_(M) {}

    static ZPoly zero(long M) { return ZPoly(M); }
    static ZPoly one(long M) { return monomial(M, 0); }
    static ZPoly monomial(long M, long e, long coeff = 1) {
        ZPoly p(M);
        p.add_monomial(e, coeff);
        return p;
    }
    /// 1 + sign * x^e
    static ZPoly two_term(long M, long e, int sign) {
        ZPoly p = one(M);
        p.add_monomial(e, sign);
        return p;
    }
    /// (i)_{x^e} = sum_{r=0}^{i-1} x^{re}
    static ZPoly q_int(long M, long i, long e) {
        ZPoly p(M);
        for (long r = 0; r < i; ++r) p.add_monomial(r * e, 1);
        return p;
    }

    long modulus() const { return m_; }

    void add_monomial(long e, long coeff) {
        e %= m_;
        if (e < 0) e += m_;
        c_[e] += coeff;
    }

    ZPoly& operator+=(const ZPoly& o) {
        for (long i = 0; i < m_; ++i) c_[i] += o.c_[i];
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        for (long i = 0; i < m_; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    ZPoly operator+(const ZPoly& o) const { ZPoly r = *this; r += o; return r; }
    ZPoly operator-(const ZPoly& o) const { ZPoly r = *this; r -= o; return r; }

    ZPoly operator*(const ZPoly& o) const {
        ZPoly r(m_);
        for (long i = 0; i < m_; ++i) {
            if (c_[i] == 0) continue;
            for (long j = 0; j < m_; ++j) {
                if (o.c_[j] == 0) continue;
                long k = i + j;
                if (k >= m_) k -= m_;
                r.c_[k] += c_[i] * o.c_[j];
            }
        }
        return r;
    }

    /// Multiplication by x^e.
    ZPoly shifted(long e) const {
        e %= m_;
        if (e < 0) e += m_;
        ZPoly r(m_);
        for (long i = 0; i < m_; ++i) {
            long k = i + e;
            if (k >= m_) k -= m_;
            r.c_[k] = c_[i];
        }
        return r;
    }

    bool coeffs_all_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    /// True iff the represented element of Q(zeta_M) is zero.
    bool is_zero_value() const;

    /// The represented value as an exact cyclotomic number (for witnesses / tests).
    Cyc to_cyc() const;

  private:
    long m_;
    std::vector<mpz_class> c_;
};

} // namespace nichols
