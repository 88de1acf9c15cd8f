#include "nichols/root_vectors.hpp"

namespace nichols {

RootVectorContext::RootVectorContext(BraidingPtr br, long i_max)
    : br_(std::move(br)), i_max_(i_max) {
    z_cache_.push_back(TensorElement::generator(br_, 2));
    u_cache_.push_back(TensorElement::generator(br_, 1));
    b_cache_.push_back(Cyc(1));
    c_cache_.push_back(Cyc(1));
}

void RootVectorContext::check_index(long i) const {
    if (i < 0) throw IndexError("negative root-vector index");
    if (i > i_max_) throw IndexError("root-vector index " + std::to_string(i) +
                                     " exceeds cap " + std::to_string(i_max_));
}

const TensorElement& RootVectorContext::z(long i) {
    check_index(i);
    const TensorElement x1 = TensorElement::generator(br_, 1);
    while ((long)z_cache_.size() <= i) {
        long k = (long)z_cache_.size() - 1;
        const TensorElement& zk = z_cache_.back();
        z_cache_.push_back(x1 * zk - (zk * x1).scaled(br_->q11.pow(k) * br_->q12));
    }
    return z_cache_[i];
}

const TensorElement& RootVectorContext::u(long i) {
    check_index(i);
    const TensorElement x2 = TensorElement::generator(br_, 2);
    while ((long)u_cache_.size() <= i) {
        long k = (long)u_cache_.size() - 1;
        const TensorElement& uk = u_cache_.back();
        u_cache_.push_back(uk * x2 - (x2 * uk).scaled(br_->q12 * br_->q22.pow(k)));
    }
    return u_cache_[i];
}

const Cyc& RootVectorContext::b(long i) {
    check_index(i);
    while ((long)b_cache_.size() <= i) {
        long j = (long)b_cache_.size() - 1;
        b_cache_.push_back(b_cache_.back() * (Cyc(1) - br_->q11.pow(j) * br_->q12 * br_->q21));
    }
    return b_cache_[i];
}

const Cyc& RootVectorContext::c(long i) {
    check_index(i);
    while ((long)c_cache_.size() <= i) {
        long j = (long)c_cache_.size() - 1;
        c_cache_.push_back(c_cache_.back() * (Cyc(1) - br_->q12 * br_->q21 * br_->q22.pow(j)));
    }
    return c_cache_[i];
}

Cyc RootVectorContext::chi_zz(long i, long j) {
    return chi(*br_, MultiDegree{i, 1}, MultiDegree{j, 1});
}

Cyc RootVectorContext::p(long i) { return chi_zz(i, i).inverse(); }

Cyc RootVectorContext::d0(long i) {
    Cyc inv_q11 = br_->q11.inverse();
    return br_->q21.inverse() * (Cyc(1) - br_->q11.pow(i) * br_->q12 * br_->q21) * q_int(i + 1, inv_q11) +
           chi_zz(i, i + 1).inverse() - chi_zz(i + 1, i);
}

Cyc RootVectorContext::d1(long i) {
    Cyc inv_q11 = br_->q11.inverse();
    Cyc two_p = Cyc(1) + p(i + 1);
    return br_->q21.inverse() * (Cyc(1) - br_->q11.pow(i) * br_->q12 * br_->q21) * q_int(i + 1, inv_q11) +
           two_p * (chi_zz(i, i + 1).inverse() - chi_zz(i + 1, i) * chi_zz(i + 1, i + 1));
}

Cyc RootVectorContext::pair_zz(long i) {
    return br_->q21.pow(-i) * b(i) * q_fact(i, br_->q11.inverse());
}

RootVectorContext::Scalars RootVectorContext::scalars(long i) {
    return Scalars{b(i), c(i), p(i), d0(i), d1(i), pair_zz(i)};
}

bool RootVectorContext::z_is_zero(long i) { return (b(i) * q_fact(i, br_->q11)).is_zero(); }
bool RootVectorContext::u_is_zero(long i) { return (c(i) * q_fact(i, br_->q22)).is_zero(); }

TensorElement RootVectorContext::z1(long i) {
    z(i + 1); // grow the cache before taking references into it
    const TensorElement &zi = z(i), &zi1 = z(i + 1);
    return zi1 * zi - (zi * zi1).scaled(chi_zz(i + 1, i));
}

TensorElement RootVectorContext::z2(long i) {
    TensorElement zi1c = z1(i);
    const TensorElement& znext = z(i + 1);
    Cyc factor = chi(*br_, MultiDegree{i + 1, 1}, MultiDegree{2 * i + 1, 2});
    return znext * zi1c - (zi1c * znext).scaled(factor);
}

TensorElement RootVectorContext::w(long i) {
    if (i < 1) throw IndexError("w_i needs i >= 1");
    if (z_is_zero(i + 1)) return TensorElement::zero(br_);
    Cyc two_p = Cyc(1) + p(i);
    if (two_p.is_zero()) throw DegenerateDenominator("(2)_{p_i} = 0 while z_{i+1} != 0");
    z(i + 1); // grow the cache before taking references into it
    const TensorElement &za = z(i + 1), &zb = z(i - 1), &zi = z(i);
    Cyc coeff = pair_zz(i + 1) / (two_p * pair_zz(i));
    return za * zb - (zb * za).scaled(chi_zz(i + 1, i - 1)) - (zi * zi).scaled(coeff);
}

TensorElement RootVectorContext::s(long i) {
    if (i < 1) throw IndexError("s_i needs i >= 1");
    TensorElement zi1c = z1(i);
    if (oracle().is_zero(zi1c)) return TensorElement::zero(br_);
    Cyc fact3 = q_fact(3, p(i));
    if (fact3.is_zero()) throw DegenerateDenominator("(3)!_{p_i} = 0 while z_{i,1} != 0");
    const TensorElement &zb = z(i - 1), &zi = z(i);
    Cyc factor = chi(*br_, MultiDegree{2 * i + 1, 2}, MultiDegree{i - 1, 1});
    Cyc coeff = d0(i) * pair_zz(i + 1) / (fact3 * pair_zz(i));
    return zi1c * zb - (zb * zi1c).scaled(factor) - (zi * zi * zi).scaled(coeff);
}

TensorElement RootVectorContext::t(long i) {
    Cyc chi11 = chi(*br_, MultiDegree{2 * i + 1, 2}, MultiDegree{2 * i + 1, 2});
    Cyc denom = Cyc(1) + chi11.inverse();
    if (denom.is_zero()) throw DegenerateDenominator("chi(z_{i,1}, z_{i,1}) = -1");
    TensorElement zi2c = z2(i);
    TensorElement zi1c = z1(i);
    const TensorElement& zi = z(i);
    Cyc factor = chi(*br_, MultiDegree{3 * i + 2, 3}, MultiDegree{i, 1});
    Cyc coeff = d1(i) / denom;
    return zi2c * zi - (zi * zi2c).scaled(factor) - (zi1c * zi1c).scaled(coeff);
}

NicholsOracle& RootVectorContext::oracle() {
    if (!oracle_) oracle_ = std::make_unique<NicholsOracle>(br_);
    return *oracle_;
}

Word RootVectorContext::zhat_word(long j) {
    Word w;
    for (long r = 0; r < j; ++r) w = w.append(1);
    return w.append(2);
}

} // namespace nichols
