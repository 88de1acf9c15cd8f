#include "nichols/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nichols {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Exact division of integer polynomials, used only where divisibility is guaranteed.
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (long i = (long)quot.size() - 1; i >= 0; --i) {
        long c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return quot;
}

std::mutex phi_mutex;
std::map<long, std::vector<long>> phi_table;

} // namespace

const std::vector<long>& cyclotomic_poly(long n) {
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_table.find(n);
    if (it != phi_table.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so every
    // divisor is already in the table.
    std::vector<long> pending;
    pending.push_back(n);
    while (!pending.empty()) {
        long m = pending.back();
        if (phi_table.count(m)) { pending.pop_back(); continue; }
        bool ready = true;
        for (long d = 1; d <= m / 2; ++d)
            if (m % d == 0 && !phi_table.count(d)) { pending.push_back(d); ready = false; }
        if (!ready) continue;
        pending.pop_back();
        std::vector<long> f(m + 1, 0);
        f[0] = -1; f[m] = 1;
        for (long d = 1; d <= m / 2; ++d)
            if (m % d == 0) f = poly_div_exact(std::move(f), phi_table.at(d));
        phi_table.emplace(m, std::move(f));
    }
    return phi_table.at(n);
}

namespace {

thread_local long g_conductor_ceiling = 360;

// Reduces an mpq polynomial modulo the monic integer polynomial Phi_n in place,
// returning the dense remainder of length phi(n).
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, long n) {
    const std::vector<long>& phi = cyclotomic_poly(n);
    const std::size_t deg = phi.size() - 1; // = euler_phi(n)
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        poly[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
    }
    poly.resize(deg, Rational(0));
    for (auto& c : poly) c.canonicalize();
    return poly;
}

// Solves A c = b over Q by Gaussian elimination; A is given column-wise.
// Returns the coefficient vector if the system is consistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   std::vector<Rational> b) {
    const std::size_t rows = b.size(), ncols = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (std::size_t j = 0; j < ncols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    for (std::size_t i = 0; i < rows; ++i) m[i][ncols] = b[i];

    std::vector<long> pivot_col(rows, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j <= ncols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = (long)c;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][ncols] != 0) return std::nullopt;
    std::vector<Rational> sol(ncols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = m[i][ncols];
    return sol;
}

} // namespace

long conductor_ceiling() { return g_conductor_ceiling; }
void set_conductor_ceiling(long c) { g_conductor_ceiling = c; }

Cyc Cyc::make_reduced(long n, std::vector<Rational> poly) {
    Cyc out;
    out.conductor_ = n;
    out.coeffs_ = reduce_mod_phi(std::move(poly), n);
    out.minimize();
    return out;
}

void Cyc::minimize() {
    // Rational shortcut: unique representation means a value is rational iff all
    // higher basis coefficients vanish.
    while (conductor_ > 1) {
        bool higher = false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) { higher = true; break; }
        if (!higher) {
            coeffs_.resize(1);
            conductor_ = 1;
            return;
        }
        // Try to drop one prime from the conductor; the minimal conductor divides
        // every intermediate one, so iterated single-prime descent reaches it.
        bool dropped = false;
        for (long p : prime_factors(conductor_)) {
            long d = conductor_ / p;
            long phid = euler_phi(d);
            std::vector<std::vector<Rational>> basis;
            basis.reserve(phid);
            long step = conductor_ / d;
            for (long j = 0; j < phid; ++j) {
                std::vector<Rational> v(j * step + 1, Rational(0));
                v[j * step] = 1;
                basis.push_back(reduce_mod_phi(std::move(v), conductor_));
            }
            if (auto sol = solve_columns(basis, coeffs_)) {
                conductor_ = d;
                coeffs_ = std::move(*sol);
                dropped = true;
                break;
            }
        }
        if (!dropped) return;
    }
}

Cyc Cyc::root(long k, long n) {
    if (n < 1) throw IndexError("root order must be positive");
    k %= n;
    if (k < 0) k += n;
    long g = std::gcd(k, n);
    n /= g;
    k /= g;
    if (n > conductor_ceiling()) throw ConductorCeilingExceeded(n, conductor_ceiling());
    std::vector<Rational> poly(k + 1, Rational(0));
    poly[k] = 1;
    return make_reduced(n, std::move(poly));
}

Cyc Cyc::from_coeffs(long n, std::vector<Rational> coeffs) {
    if (n < 1) throw IndexError("conductor must be positive");
    if (n > conductor_ceiling()) throw ConductorCeilingExceeded(n, conductor_ceiling());
    if (coeffs.empty()) coeffs.assign(1, Rational(0));
    return make_reduced(n, std::move(coeffs));
}

bool Cyc::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

const Rational& Cyc::rational_value() const {
    if (!is_rational()) throw Error("value is not rational");
    return coeffs_[0];
}

std::vector<Rational> Cyc::lifted_coeffs(long m) const {
    if (m % conductor_ != 0) throw IndexError("lift target must be a multiple of the conductor");
    long step = m / conductor_;
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
    return reduce_mod_phi(std::move(poly), m);
}

namespace {
long lcm_checked(long a, long b) {
    long l = std::lcm(a, b);
    if (l > conductor_ceiling()) throw ConductorCeilingExceeded(l, conductor_ceiling());
    return l;
}
} // namespace

Cyc Cyc::operator-() const {
    Cyc out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyc Cyc::operator+(const Cyc& o) const {
    long n = lcm_checked(conductor_, o.conductor_);
    std::vector<Rational> a = lifted_coeffs(n), b = o.lifted_coeffs(n);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return make_reduced(n, std::move(a));
}

Cyc Cyc::operator-(const Cyc& o) const {
    long n = lcm_checked(conductor_, o.conductor_);
    std::vector<Rational> a = lifted_coeffs(n), b = o.lifted_coeffs(n);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return make_reduced(n, std::move(a));
}

Cyc Cyc::operator*(const Cyc& o) const {
    long n = lcm_checked(conductor_, o.conductor_);
    std::vector<Rational> a = lifted_coeffs(n), b = o.lifted_coeffs(n);
    std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    return make_reduced(n, std::move(prod));
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Cyc(Rational(1) / coeffs_[0]);
    // Extended Euclid in Q[x] against Phi_N: u * this + v * Phi = 1, so u is the inverse.
    const std::vector<long>& phil = cyclotomic_poly(conductor_);
    std::vector<Rational> r0(phil.begin(), phil.end());
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)}; // coefficients of `this`
    auto deg = [](const std::vector<Rational>& p) { return (long)p.size() - 1; };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rational> q(deg(r0) - deg(r1) + 1, Rational(0));
        std::vector<Rational> rem = r0;
        for (long i = deg(rem); i >= deg(r1); --i) {
            if (rem[i] == 0) continue;
            Rational c = rem[i] / r1.back();
            q[i - deg(r1)] = c;
            for (long j = 0; j <= deg(r1); ++j) rem[i - deg(r1) + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) rem.push_back(Rational(0));
        // s_next = s0 - q * s1
        std::vector<Rational> snext(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    // r1 is a nonzero constant (Phi_N is irreducible over Q).
    Rational c = r1[0];
    for (auto& v : s1) v /= c;
    return make_reduced(conductor_, std::move(s1));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

Cyc Cyc::pow(long e) const {
    if (e == 0) return Cyc(1);
    Cyc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Cyc acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

std::optional<long> Cyc::root_order() const {
    if (is_zero()) return std::nullopt;
    if (is_rational()) {
        if (coeffs_[0] == 1) return 1;
        if (coeffs_[0] == -1) return 2;
        return std::nullopt;
    }
    // Roots of unity in Q(zeta_N) have order dividing 2N; a^{2N} = 1 decides membership.
    long bound = 2 * conductor_;
    if (pow(bound) != Cyc(1)) return std::nullopt;
    long ord = bound;
    for (long p : prime_factors(bound))
        while (ord % p == 0 && pow(ord / p) == Cyc(1)) ord /= p;
    return ord;
}

RootOfUnity::RootOfUnity(long k, long n) {
    if (n < 1) throw IndexError("root order must be positive");
    k %= n;
    if (k < 0) k += n;
    long g = std::gcd(k, n);
    if (k == 0) { exponent = 0; order = 1; return; }
    exponent = k / g;
    order = n / g;
}

std::optional<RootOfUnity> RootOfUnity::from_cyc(const Cyc& a) {
    auto ord = a.root_order();
    if (!ord) return std::nullopt;
    long n = *ord;
    Cyc z = Cyc::root(1, n);
    Cyc p(1);
    for (long k = 0; k < n; ++k) {
        if (p == a) return RootOfUnity(k, n);
        p *= z;
    }
    return std::nullopt; // unreachable for genuine roots of unity
}

namespace {
std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}
} // namespace

std::string Cyc::str() const {
    if (is_rational()) return rational_str(coeffs_[0]);
    if (auto r = RootOfUnity::from_cyc(*this))
        return "z" + std::to_string(r->order) + ":" + std::to_string(r->exponent);
    std::string out = "cyc" + std::to_string(conductor_) + "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += rational_str(coeffs_[i]);
    }
    return out + "]";
}

namespace {

long parse_long(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)s[start])))
        throw ParseError("expected integer", start);
    return std::stol(s.substr(start, pos - start));
}

Rational parse_rational(const std::string& s, std::size_t& pos) {
    long num = parse_long(s, pos);
    long den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = parse_long(s, pos);
        if (den == 0) throw ParseError("zero denominator", pos);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

Cyc parse_scalar_literal(const std::string& text) {
    std::size_t pos = 0;
    if (text.empty()) throw ParseError("empty literal", 0);
    if (text[0] == 'z') {
        pos = 1;
        long n = parse_long(text, pos);
        if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
        ++pos;
        long k = parse_long(text, pos);
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        return Cyc::root(k, n);
    }
    if (text.compare(0, 3, "cyc") == 0) {
        pos = 3;
        long n = parse_long(text, pos);
        if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
        ++pos;
        std::vector<Rational> coeffs;
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                coeffs.push_back(parse_rational(text, pos));
                if (pos >= text.size()) throw ParseError("expected ',' or ']'", pos);
                if (text[pos] == ',') { ++pos; continue; }
                if (text[pos] == ']') { ++pos; break; }
                throw ParseError("expected ',' or ']'", pos);
            }
        }
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        return Cyc::from_coeffs(n, std::move(coeffs));
    }
    Rational r = parse_rational(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    return Cyc(r);
}

} // namespace nichols
