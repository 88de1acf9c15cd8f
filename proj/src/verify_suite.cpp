#include "nichols/verify_suite.hpp"

#include <numeric>
#include <sstream>

#include "nichols/classify.hpp"
#include "nichols/enumerate.hpp"
#include "nichols/qcombinatorics.hpp"
#include "nichols/sampling.hpp"
#include "nichols/subquotient.hpp"

namespace nichols {

long VerifyResult::total_checked() const {
    long n = 0;
    for (const auto& it : items) n += it.checked;
    return n;
}

long VerifyResult::total_failed() const {
    long n = 0;
    for (const auto& it : items) n += it.failed;
    return n;
}

namespace {

struct ItemRunner {
    VerifyItem it;
    void chk(bool ok, const std::string& what) {
        ++it.checked;
        if (!ok) {
            ++it.failed;
            if (it.note.empty()) it.note = what;
        }
    }
};

long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

} // namespace

VerifyResult run_verify_suite(const Limits& cfg) {
    set_conductor_ceiling(cfg.conductor_ceiling);
    VerifyResult res;
    auto run = [&](const std::string& name, auto&& body) {
        ItemRunner r;
        r.it.name = name;
        body(r);
        res.items.push_back(std::move(r.it));
    };

    // ---- cyclotomic field ----
    run("cyclo/field-axioms", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x11, 24);
        for (long n : {1L, 3L, 4L, 5L, 8L, 12L, 24L}) {
            for (int rep = 0; rep < 3; ++rep) {
                Cyc a = Cyc::root(s.uniform(0, n - 1), n) + Cyc(Rational(s.uniform(-2, 2)));
                Cyc b = Cyc::root(s.uniform(0, n - 1), n);
                Cyc c = Cyc::root(s.uniform(0, n - 1), n) - Cyc(1);
                r.chk((a + b) + c == a + (b + c), "associativity of +");
                r.chk((a * b) * c == a * (b * c), "associativity of *");
                r.chk(a * (b + c) == a * b + a * c, "distributivity");
                if (!a.is_zero()) r.chk((a * a.inverse()).is_one(), "a * a^{-1} = 1");
            }
        }
    });

    run("cyclo/phi-at-zeta", [&](ItemRunner& r) {
        for (long n = 1; n <= 60; ++n) {
            const auto& phi = cyclotomic_poly(n);
            Cyc z = Cyc::root(1, n), acc(0), pw(1);
            for (std::size_t i = 0; i < phi.size(); ++i) {
                if (phi[i] != 0) acc += Cyc(phi[i]) * pw;
                pw *= z;
            }
            r.chk(acc.is_zero(), "Phi_" + std::to_string(n) + "(zeta) != 0");
        }
    });

    run("cyclo/lift-roundtrip", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x12, 24);
        for (long n : {3L, 4L, 5L, 8L, 12L, 24L}) {
            Cyc a = Cyc::root(s.uniform(0, n - 1), n) + Cyc::root(s.uniform(0, n - 1), n);
            for (long m = n; m <= 120; m += n) {
                Cyc back = Cyc::from_coeffs(m, a.lifted_coeffs(m));
                r.chk(back == a, "lift to " + std::to_string(m) + " and back");
            }
        }
    });

    run("cyclo/root-order", [&](ItemRunner& r) {
        for (long n = 1; n <= 60; ++n)
            for (long k = 0; k < n; ++k) {
                auto o = Cyc::root(k, n).root_order();
                long expect = k == 0 ? 1 : n / std::gcd(n, k);
                r.chk(o && *o == expect, "order of zeta_" + std::to_string(n) + "^" + std::to_string(k));
            }
        r.chk(!Cyc(2).root_order().has_value(), "2 is not a root of unity");
    });

    // ---- q-combinatorics ----
    run("qcomb/geometric-sum", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x21, 12);
        std::vector<Cyc> ps = {Cyc(1), Cyc(-1), Cyc(2), Cyc::root(1, 3), Cyc::root(1, 8),
                               Cyc::root(5, 12)};
        for (const Cyc& p : ps)
            for (long i = 0; i <= 12; ++i)
                r.chk((p - Cyc(1)) * q_int(i, p) == p.pow(i) - Cyc(1), "(p-1)(i)_p = p^i - 1");
    });

    run("qcomb/dual-pascal", [&](ItemRunner& r) {
        std::vector<Cyc> ps = {Cyc(1), Cyc(-1), Cyc(2), Cyc::root(1, 4), Cyc::root(1, 6),
                               Cyc::root(3, 8)};
        for (const Cyc& p : ps)
            for (long i = 1; i <= 10; ++i)
                for (long j = 1; j < i; ++j)
                    r.chk(q_binom(i, j, p) ==
                              q_binom(i - 1, j, p) + p.pow(i - j) * q_binom(i - 1, j - 1, p),
                          "dual q-Pascal identity");
    });

    run("qcomb/classical", [&](ItemRunner& r) {
        for (long i = 0; i <= 12; ++i)
            for (long j = 0; j <= i; ++j)
                r.chk(q_binom(i, j, Cyc(1)) == Cyc(binomial(i, j)), "binom(i,j)_1");
    });

    // ---- braiding ----
    run("braiding/bicharacter-laws", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x31, 24);
        for (int rep = 0; rep < 8; ++rep) {
            DiagonalBraiding br = s.braiding();
            auto d = [&] { return std::pair<long, long>{s.uniform(0, 10), s.uniform(0, 10)}; };
            auto al = d(), be = d(), ga = d();
            std::pair<long, long> albe{al.first + be.first, al.second + be.second};
            std::pair<long, long> bega{be.first + ga.first, be.second + ga.second};
            r.chk(chi(br, albe, ga) == chi(br, al, ga) * chi(br, be, ga), "chi additive left");
            r.chk(chi(br, al, bega) == chi(br, al, be) * chi(br, al, ga), "chi additive right");
        }
    });

    run("braiding/twist-rescaling", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x32, 12);
        for (int rep = 0; rep < 8; ++rep) {
            DiagonalBraiding br = s.braiding();
            long n = br.q11.conductor() * 2 + 3;
            Cyc lam = Cyc::root(1, std::min<long>(n, 24));
            DiagonalBraiding tw(br.q11, br.q12 * lam, br.q21 * lam.inverse(), br.q22);
            for (int k = 0; k < 4; ++k) {
                auto al = std::pair<long, long>{s.uniform(0, 8), s.uniform(0, 8)};
                r.chk(chi(br, al, al) == chi(tw, al, al), "chi(alpha, alpha) rescaling-invariant");
            }
            r.chk(twist_class(br) == twist_class(tw), "twist class rescaling-invariant");
        }
    });

    run("braiding/swap-conjugation", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x33, 24);
        for (int rep = 0; rep < 8; ++rep) {
            DiagonalBraiding br = s.braiding();
            auto al = std::pair<long, long>{s.uniform(0, 6), s.uniform(0, 6)};
            auto be = std::pair<long, long>{s.uniform(0, 6), s.uniform(0, 6)};
            std::pair<long, long> als{al.second, al.first}, bes{be.second, be.first};
            r.chk(chi(swap_basis(br), als, bes) == chi(br, al, be), "swap conjugates chi");
        }
    });

    // ---- tensor oracle ----
    run("tensor/leibniz", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x41, 16);
        for (int rep = 0; rep < 10; ++rep) {
            BraidingPtr br = s.braiding_ptr();
            MultiDegree du = s.degree(2), dv = s.degree(2);
            if (du.total() + dv.total() > 6 || du.total() == 0 || dv.total() == 0) continue;
            TensorElement u = s.homogeneous(br, du), v = s.homogeneous(br, dv);
            for (int i : {1, 2}) {
                TensorElement lhs = derive(i, u * v);
                TensorElement rhs = derive(i, u) * v +
                                    group_act({i == 1 ? -1 : 0, i == 2 ? -1 : 0}, u) * derive(i, v);
                r.chk(lhs == rhs, "Leibniz law for derive");
            }
        }
    });

    run("oracle/twist-invariance", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x42, 8);
        for (int rep = 0; rep < 3; ++rep) {
            BraidingPtr br = s.braiding_ptr();
            Cyc lam = Cyc::root(1, 8);
            BraidingPtr tw = std::make_shared<DiagonalBraiding>(
                br->q11, br->q12 * lam, br->q21 * lam.inverse(), br->q22);
            NicholsOracle o1(br), o2(tw);
            for (long a = 0; a <= 3; ++a)
                for (long b = 0; b + a <= 5; ++b)
                    r.chk(o1.dim({a, b}) == o2.dim({a, b}), "dim depends only on the twist class");
        }
    });

    run("oracle/swap-symmetry", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x43, 8);
        for (int rep = 0; rep < 3; ++rep) {
            BraidingPtr br = s.braiding_ptr();
            BraidingPtr sw = std::make_shared<DiagonalBraiding>(swap_basis(*br));
            NicholsOracle o1(br), o2(sw);
            for (long a = 0; a <= 3; ++a)
                for (long b = 0; b + a <= 5; ++b)
                    r.chk(o1.dim({a, b}) == o2.dim({b, a}), "dim symmetric under the basis swap");
        }
    });

    run("oracle/coproduct-z", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x44, 8);
        for (int rep = 0; rep < 6; ++rep) {
            BraidingPtr br = s.braiding_where([](const DiagonalBraiding& b) {
                Cyc qq = b.q12 * b.q21, pw(1);
                for (long j = 0; j < 4; ++j) {
                    if ((pw * qq).is_one()) return false; // keep every b_m nonzero, m <= 4
                    pw *= b.q11;
                }
                return true;
            });
            RootVectorContext ctx(br);
            NicholsOracle& oracle = ctx.oracle();
            long i = s.uniform(1, 3);
            MultiDegree dr = s.degree(1), dp = s.degree(1);
            if (dr.total() == 0 || dp.total() == 0 || dr.total() + dp.total() > 4) continue;
            TensorElement rho = s.homogeneous(br, dr), rho2 = s.homogeneous(br, dp);
            TensorElement lhs = pair_elem(ctx.z(i), rho * rho2);
            TensorElement rhs = pair_elem(ctx.z(i), rho) * rho2;
            for (long m = 0; m <= i; ++m) {
                Cyc coef = q_binom(i, m, br->q11) * ctx.b(i) / ctx.b(m);
                Word y1s;
                for (long t = 0; t < i - m; ++t) y1s = y1s.append(1);
                TensorElement left = pair_word(y1s, group_act({-m, -1}, rho));
                rhs = rhs + (left * pair_elem(ctx.z(m), rho2)).scaled(coef);
            }
            r.chk(oracle.is_zero(lhs - rhs), "coproduct expansion of z^_i");
        }
    });

    run("oracle/pair-zz-powers", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x45, 8);
        for (int rep = 0; rep < 4; ++rep) {
            BraidingPtr br = s.braiding_where([](const DiagonalBraiding& b) {
                return !(Cyc(1) - b.q12 * b.q21).is_zero();
            });
            RootVectorContext ctx(br);
            for (long i = 1; i <= 2; ++i) {
                if (ctx.z_is_zero(i)) continue;
                Cyc pi = ctx.p(i);
                TensorElement zi = ctx.z(i);
                TensorElement pw = TensorElement::unit(br);
                for (long m = 1; m <= 3; ++m) {
                    pw = pw * zi; // z_i^m
                    TensorElement lhs = pair_elem(zi, pw);
                    TensorElement zim1 = TensorElement::unit(br);
                    for (long t = 1; t < m; ++t) zim1 = zim1 * zi;
                    TensorElement rhs = zim1.scaled(q_int(m, pi) * ctx.pair_zz(i));
                    r.chk(ctx.oracle().is_zero(lhs - rhs), "<z^_i, z_i^m> = (m)_{p_i} <z^_i, z_i> z_i^{m-1}");
                }
            }
        }
    });

    // ---- closed forms against the oracle ----
    run("rootvec/closed-forms", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x51, 12);
        for (int rep = 0; rep < 6; ++rep) {
            BraidingPtr br = s.braiding_ptr();
            RootVectorContext ctx(br);
            NicholsOracle& oracle = ctx.oracle();
            Cyc invq11 = br->q11.inverse();
            for (long i = 1; i <= 3; ++i) {
                // <z^_j, z_i> for 0 <= j <= i
                for (long j = 0; j <= i; ++j) {
                    TensorElement lhs = pair_word(RootVectorContext::zhat_word(j), ctx.z(i));
                    Cyc coef = br->q21.pow(-i) * ctx.b(i) * q_fact_ratio(i, i - j, invq11);
                    TensorElement x1pow = TensorElement::unit(br);
                    for (long t = 0; t < i - j; ++t) x1pow = x1pow * TensorElement::generator(br, 1);
                    r.chk(lhs == x1pow.scaled(coef), "<z^_j, z_i> closed form");
                }
                // <y_2, u_i> closed form
                TensorElement lhs = derive(2, ctx.u(i));
                Cyc coef = br->q21.inverse() * (Cyc(1) - br->q12 * br->q21 * br->q22.pow(i - 1)) *
                           q_int(i, br->q22.inverse());
                r.chk(lhs == ctx.u(i - 1).scaled(coef), "<y_2, u_i> closed form");
                // <y_1, u_i> = delta_{i0}
                r.chk(derive(1, ctx.u(i)).is_tensor_zero(), "<y_1, u_i> = 0 for i >= 1");
                // <z^_i, z_{i,1}> = d_{i,0} <z^_i, z_i> z_{i+1}  (in B(V))
                TensorElement lhs2 = pair_elem(ctx.z(i), ctx.z1(i));
                TensorElement rhs2 = ctx.z(i + 1).scaled(ctx.d0(i) * ctx.pair_zz(i));
                r.chk(oracle.is_zero(lhs2 - rhs2), "<z^_i, z_{i,1}> = d_{i,0} <z^_i, z_i> z_{i+1}");
            }
        }
    });

    run("rootvec/ratio-identity", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x52, 12);
        for (int rep = 0; rep < 8; ++rep) {
            BraidingPtr br = s.braiding_where([](const DiagonalBraiding& b) {
                Cyc qq = b.q12 * b.q21, pw(1);
                for (long j = 0; j < 3; ++j) {
                    if ((pw * qq).is_one()) return false;
                    pw *= b.q11;
                }
                return !(Cyc(1) + b.q11).is_zero() && !(Cyc(1) + b.q11 + b.q11 * b.q11).is_zero();
            });
            RootVectorContext ctx(br);
            for (long i = 1; i <= 2; ++i) {
                Cyc lhs = ctx.pair_zz(i + 1) / ctx.pair_zz(i) - ctx.pair_zz(i) / ctx.pair_zz(i - 1);
                Cyc rhs = chi(*br, MultiDegree{i, 1}, MultiDegree{1, 0}).inverse() -
                          chi(*br, MultiDegree{1, 0}, MultiDegree{i, 1});
                r.chk(lhs == rhs, "consecutive pairing ratio identity");
            }
        }
    });

    run("rootvec/pi-minus-one-square", [&](ItemRunner& r) {
        // p_i = -1 with z_{i+1} != 0: <z^_{i-1}, z_i^2> is the stated multiple of z_{i+1}
        long found = 0;
        for (long n = 4; n <= 24 && found < 4; n += 2)
            for (long k = 1; k < n && found < 4; ++k) {
                for (long g = 0; g < n && found < 4; ++g) {
                    BraidingPtr br = std::make_shared<DiagonalBraiding>(
                        Cyc::root(k, n), Cyc::root(g, n), Cyc(1), Cyc::root(1, n));
                    RootVectorContext ctx(br);
                    long i = 1;
                    if (!(ctx.chi_zz(i, i) == Cyc(-1))) continue;
                    if (ctx.z_is_zero(i + 1)) continue;
                    ++found;
                    TensorElement lhs = pair_word(RootVectorContext::zhat_word(i - 1),
                                                  ctx.z(i) * ctx.z(i));
                    Cyc coef = br->q21.pow(-i) * ctx.b(i) * q_fact(i, br->q11.inverse());
                    r.chk(ctx.oracle().is_zero(lhs - ctx.z(i + 1).scaled(coef)) && !coef.is_zero(),
                          "<z^_{i-1}, z_i^2> = q21^{-i} b_i (i)!_{q11^{-1}} z_{i+1}");
                }
            }
    });

    // ---- equivalence corollaries ----
    run("rootvec/eq-z-zero", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x53, 12);
        for (int rep = 0; rep < 8; ++rep) {
            BraidingPtr br = s.braiding_ptr();
            RootVectorContext ctx(br);
            for (long i = 1; i <= 3; ++i)
                r.chk(ctx.oracle().is_zero(ctx.z(i)) == ctx.z_is_zero(i),
                      "z_i = 0 iff b_i (i)!_{q11} = 0");
        }
    });

    run("rootvec/corollary-equivalences", [&](ItemRunner& r) {
        // On braidings satisfying (A7): z_i^2, z_{i,1}, z_{i,2} vanishing criteria.
        long used = 0;
        for (long M = 2; M <= 12 && used < 6; ++M)
            for (long al = 0; al < M && used < 6; ++al)
                for (long be = 0; be < M && used < 6; ++be)
                    for (long ga = 0; ga < M && used < 6; ++ga) {
                        if (std::gcd(std::gcd(al, be), std::gcd(ga, M)) != 1) continue;
                        TwistExp t{M, al, be, ga};
                        if (classify_pipeline_exp(t).outcome != Outcome::Finite) continue;
                        ++used;
                        BraidingPtr br = std::make_shared<DiagonalBraiding>(
                            Cyc::root(al, M), Cyc::root(be, M), Cyc(1), Cyc::root(ga, M));
                        RootVectorContext ctx(br);
                        NicholsOracle& oracle = ctx.oracle();
                        for (long i = 1; i <= 2; ++i) {
                            bool zi_zero = ctx.z_is_zero(i);
                            bool two_p = (Cyc(1) + ctx.p(i)).is_zero();
                            r.chk(oracle.is_zero(ctx.z(i) * ctx.z(i)) == (two_p || zi_zero),
                                  "z_i^2 = 0 iff (2)_{p_i} z_i = 0");
                            bool znext_zero = ctx.z_is_zero(i + 1);
                            r.chk(oracle.is_zero(ctx.z1(i)) ==
                                      (ctx.d0(i).is_zero() || znext_zero),
                                  "z_{i,1} = 0 iff d_{i,0} z_{i+1} = 0");
                            if (i == 1) {
                                bool crit = ctx.d0(i).is_zero() || ctx.d1(i).is_zero() ||
                                            (Cyc(1) + ctx.p(i + 1)).is_zero() || znext_zero;
                                r.chk(oracle.is_zero(ctx.z2(i)) == crit,
                                      "z_{i,2} = 0 iff d_{i,0} d_{i,1} (2)_{p_{i+1}} z_{i+1} = 0");
                            }
                        }
                    }
    });

    // ---- conditions ----
    run("conditions/zpoly-vs-cyclotomic", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x61, 20);
        for (int rep = 0; rep < 10; ++rep) {
            long M = s.uniform(2, 20);
            TwistExp t{M, s.uniform(0, M - 1), s.uniform(0, M - 1), s.uniform(0, M - 1)};
            PipelineCore core(t);
            BraidingPtr rep_br = std::make_shared<DiagonalBraiding>(
                Cyc::root(t.al, M), Cyc::root(t.be, M), Cyc(1), Cyc::root(t.ga, M));
            RootVectorContext ctx(rep_br);
            for (long i = 1; i <= 3; ++i) {
                r.chk(core.d0_poly(i).to_cyc() == ctx.d0(i), "ZPoly d_{i,0} matches cyclotomic");
                r.chk(core.d1_poly(i).to_cyc() == ctx.d1(i), "ZPoly d_{i,1} matches cyclotomic");
            }
        }
    });

    run("conditions/a7-reduction", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x62, 16);
        long used = 0;
        for (int rep = 0; rep < 200 && used < 10; ++rep) {
            BraidingPtr br = s.braiding_ptr();
            RootVectorContext ctx(br);
            for (long i = 1; i <= 2; ++i) {
                if (ctx.z_is_zero(i + 1)) continue;
                Cyc two_pi = Cyc(1) + ctx.p(i);
                Cyc two_q = Cyc(1) + br->q11.inverse();
                if (two_pi.is_zero() || two_q.is_zero()) continue;
                ++used;
                Cyc scalar = (br->q11 * ctx.chi_zz(i, i).inverse() - Cyc(1)) *
                             (br->q11.inverse() * ctx.pair_zz(i + 1) / (two_q * two_pi) +
                              br->q12 * br->q21.inverse() * ctx.pair_zz(i - 1) *
                                  (Cyc(1) + br->q11.inverse() * ctx.chi_zz(i, i)));
                bool scalar_zero = scalar.is_zero();
                bool oracle_zero = ctx.oracle().is_zero(ctx.w(i));
                r.chk(scalar_zero == oracle_zero, "w-scalar reduction agrees with the oracle");
            }
        }
    });

    run("conditions/determinism", [&](ItemRunner& r) {
        Sampler s(cfg.seed ^ 0x63, 16);
        for (int rep = 0; rep < 6; ++rep) {
            DiagonalBraiding br = s.braiding();
            ConditionReport a = evaluate_conditions(br, cfg);
            ConditionReport b = evaluate_conditions(br, cfg);
            bool same = a.swapped == b.swapped && a.a_value == b.a_value;
            for (int k = 0; k < 8 && same; ++k)
                same = a.cond[k].status == b.cond[k].status &&
                       a.cond[k].witness.index == b.cond[k].witness.index &&
                       a.cond[k].witness.note == b.cond[k].witness.note;
            r.chk(same, "re-evaluation reproduces identical witnesses");
        }
    });

    // ---- classifier ----
    run("classifier/agreement-sweep", [&](ItemRunner& r) {
        for (long M = 1; M <= 16; ++M)
            for (long al = 0; al < M; ++al)
                for (long be = 0; be < M; ++be)
                    for (long ga = 0; ga < M; ++ga) {
                        if (std::gcd(std::gcd(al, be), std::gcd(ga, M)) != 1) continue;
                        TwistExp t{M, al, be, ga};
                        Verdict lit = classify_theorem_exp(t);
                        Verdict pip = classify_pipeline_exp(t);
                        r.chk(lit.outcome == pip.outcome && lit.canonical() == pip.canonical(),
                              "agreement at M = " + std::to_string(M) + " (" + std::to_string(al) +
                                  "," + std::to_string(be) + "," + std::to_string(ga) + ")");
                    }
    });

    run("classifier/swap-and-labels", [&](ItemRunner& r) {
        for (long M = 1; M <= 12; ++M)
            for (long al = 0; al < M; ++al)
                for (long be = 0; be < M; ++be)
                    for (long ga = 0; ga < M; ++ga) {
                        if (std::gcd(std::gcd(al, be), std::gcd(ga, M)) != 1) continue;
                        TwistExp t{M, al, be, ga};
                        TwistExp sw{M, ga, be, al};
                        Verdict v1 = classify_theorem_exp(t), v2 = classify_theorem_exp(sw);
                        r.chk(v1.outcome == v2.outcome && v1.labels == v2.labels,
                              "literal classifier swap-invariant");
                        Verdict p1 = classify_pipeline_exp(t), p2 = classify_pipeline_exp(sw);
                        r.chk(p1.outcome == p2.outcome, "pipeline outcome swap-invariant");
                        // label validity: every pipeline label re-verifies literally
                        for (const CaseLabel& l : p1.labels) {
                            auto all = theorem_labels_exp(t);
                            r.chk(std::find(all.begin(), all.end(), l) != all.end(),
                                  "pipeline label " + l.str() + " re-verifies");
                        }
                    }
    });

    run("classifier/list-members-pass-conditions", [&](ItemRunner& r) {
        for (long M = 1; M <= 16; ++M)
            for (long al = 0; al < M; ++al)
                for (long be = 0; be < M; ++be)
                    for (long ga = 0; ga < M; ++ga) {
                        if (std::gcd(std::gcd(al, be), std::gcd(ga, M)) != 1) continue;
                        TwistExp t{M, al, be, ga};
                        if (theorem_labels_exp(t).empty()) continue;
                        PipelineCore core(t);
                        r.chk(core.report().all_hold(), "a list member passes (A1)..(A8)");
                    }
    });

    // ---- subquotients ----
    run("subquotient/example-families", [&](ItemRunner& r) {
        for (long n : {7L, 11L, 22L}) {
            Cyc q = Cyc::root(1, n);
            BraidingPtr br = std::make_shared<DiagonalBraiding>(q.pow(4), q.pow(2), q.pow(2), q);
            RootVectorContext ctx(br);
            if (ctx.z_is_zero(2)) continue;
            TensorElement w1 = ctx.w(1), x21 = ctx.z(1);
            auto val = validate_subquotient(ctx, w1, x21, 6);
            r.chk(val.pass, "w_1, x_{21} generate a subquotient at order " + std::to_string(n));
            DiagonalBraiding target = subquotient_braiding(*br, {2, 2}, {1, 1});
            r.chk(target.q11 == q.pow(36) && target.q12 == q.pow(18) && target.q22 == q.pow(9),
                  "descent braiding matrix");
        }
    });

    run("enumerate/determinism", [&](ItemRunner& r) {
        Limits small = cfg;
        small.max_order = 6;
        EnumerationResult a = enumerate_triples(small, 8, true);
        EnumerationResult b = enumerate_triples(small, 8, true);
        r.chk(a.literal_triples == b.literal_triples && a.literal_finite == b.literal_finite &&
                  a.label_counts == b.label_counts && a.disagreements == b.disagreements &&
                  a.finite_hits.size() == b.finite_hits.size(),
              "enumeration is deterministic");
        r.chk(a.disagreements == 0 && a.pipeline_indeterminate == 0,
              "no disagreement at small orders");
    });

    return res;
}

} // namespace nichols
