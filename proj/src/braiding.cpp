#include "nichols/braiding.hpp"

namespace nichols {

DiagonalBraiding::DiagonalBraiding(Cyc a, Cyc b, Cyc c, Cyc d)
    : q11(std::move(a)), q12(std::move(b)), q21(std::move(c)), q22(std::move(d)) {
    if (q11.is_zero() || q12.is_zero() || q21.is_zero() || q22.is_zero())
        throw Error("braiding entries must be nonzero");
}

Cyc chi(const DiagonalBraiding& br, std::pair<long, long> alpha, std::pair<long, long> beta) {
    auto [a, b] = alpha;
    auto [ap, bp] = beta;
    return br.q11.pow(a * ap) * br.q12.pow(a * bp) * br.q21.pow(b * ap) * br.q22.pow(b * bp);
}

DiagonalBraiding swap_basis(const DiagonalBraiding& br) {
    return DiagonalBraiding(br.q22, br.q21, br.q12, br.q11);
}

TwistClass twist_class(const DiagonalBraiding& br) {
    return TwistClass{br.q11, br.q12 * br.q21, br.q22};
}

DiagonalBraiding representative_braiding(const TwistClass& tc) {
    return DiagonalBraiding(tc.q11, tc.q12q21, Cyc(1), tc.q22);
}

} // namespace nichols
