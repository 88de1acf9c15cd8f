#include "nichols/unit_arith.hpp"

namespace nichols {

bool ZPoly::is_zero_value() const {
    if (coeffs_all_zero()) return true;
    const std::vector<long>& phi = cyclotomic_poly(m_);
    const std::size_t deg = phi.size() - 1;
    // Remainder of division by the monic Phi_M; the value vanishes iff it is zero.
    std::vector<mpz_class> rem = c_;
    for (std::size_t i = rem.size(); i-- > deg;) {
        if (rem[i] == 0) continue;
        mpz_class q = rem[i];
        rem[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) rem[i - deg + j] -= q * phi[j];
    }
    for (std::size_t i = 0; i < deg; ++i)
        if (rem[i] != 0) return false;
    return true;
}

Cyc ZPoly::to_cyc() const {
    std::vector<Rational> coeffs(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) coeffs[i] = Rational(c_[i]);
    return Cyc::from_coeffs(m_, std::move(coeffs));
}

} // namespace nichols
