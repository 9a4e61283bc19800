#pragma once

// Exact coefficient arithmetic for the algebra tower.
//
// Five rings are supported, selected by a RingDescriptor:
//   - IntegerLaurent:  Z[a, q^{+-1}]   (a is never inverted, q may be)
//   - FractionField:   Q(a, q)         (reduced num/den pairs)
//   - Cyclotomic:      Q[q]/Phi_e(q) with a specialized to a rational
//   - FiniteField:     GF(p) with q, a specialized to field values
//   - Rational:        Q with q, a specialized to rationals (q != 0)
//
// Everything is exact; no floating point appears anywhere in the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace hcq {

using Int = mpz_class;
using Rat = mpq_class;

struct ring_error : std::runtime_error {
    explicit ring_error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Sparse bivariate Laurent polynomials in (a, q).  Exponent of a is >= 0.
// ---------------------------------------------------------------------------

struct Mono {
    int a = 0;  // a-exponent, >= 0
    int q = 0;  // q-exponent, any sign
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

class Poly {
public:
    Poly() = default;

    static Poly from_int(const Int& c) { return monomial(c, 0, 0); }
    static Poly monomial(const Int& c, int a_exp, int q_exp) {
        if (a_exp < 0) throw ring_error("negative a-exponent");
        Poly p;
        if (c != 0) p.t_[Mono{a_exp, q_exp}] = c;
        return p;
    }
    static Poly gen_a() { return monomial(1, 1, 0); }
    static Poly gen_q(int k = 1) { return monomial(1, 0, k); }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first == Mono{0, 0} && t_.begin()->second == 1;
    }
    // units of Z[a,q^{+-1}] are +-q^k
    bool is_unit() const {
        if (t_.size() != 1) return false;
        const auto& [m, c] = *t_.begin();
        return m.a == 0 && (c == 1 || c == -1);
    }

    const std::map<Mono, Int>& terms() const { return t_; }

    friend bool operator==(const Poly& x, const Poly& y) { return x.t_ == y.t_; }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.t_) {
            Int& v = t_[m];
            v += c;
            if (v == 0) t_.erase(m);
        }
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.t_) {
            Int& v = t_[m];
            v -= c;
            if (v == 0) t_.erase(m);
        }
        return *this;
    }
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly r;
        for (const auto& [mx, cx] : x.t_)
            for (const auto& [my, cy] : y.t_) {
                Mono m{mx.a + my.a, mx.q + my.q};
                Int& v = r.t_[m];
                v += cx * cy;
                if (v == 0) r.t_.erase(m);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    int min_q() const {
        int m = INT32_MAX;
        for (const auto& [mo, c] : t_) m = std::min(m, mo.q);
        return t_.empty() ? 0 : m;
    }
    int max_q() const {
        int m = INT32_MIN;
        for (const auto& [mo, c] : t_) m = std::max(m, mo.q);
        return t_.empty() ? 0 : m;
    }
    int max_a() const {
        int m = 0;
        for (const auto& [mo, c] : t_) m = std::max(m, mo.a);
        return m;
    }

    Poly shift_q(int k) const {
        Poly r;
        for (const auto& [m, c] : t_) r.t_[Mono{m.a, m.q + k}] = c;
        return r;
    }

    // Leading term in lex order with q major, then a.
    std::pair<Mono, Int> lead() const {
        if (t_.empty()) throw ring_error("lead of zero");
        auto best = t_.begin();
        for (auto it = t_.begin(); it != t_.end(); ++it) {
            if (std::pair{it->first.q, it->first.a} > std::pair{best->first.q, best->first.a})
                best = it;
        }
        return *best;
    }

    // Exact division; throws if the quotient does not exist in Z[a,q^{+-1}].
    // Greedy leading-term division (q-major lex); all divisors used in the
    // library have a divisibility-friendly leading coefficient (usually 1).
    Poly divexact(const Poly& dd) const {
        if (dd.is_zero()) throw ring_error("division by zero polynomial");
        if (is_zero()) return Poly();
        // normalize to min_q = 0 so that the q-degree bounds the loop; the
        // quotient (when it exists) then also has min_q >= 0
        int shift = min_q() - dd.min_q();
        Poly r = shift_q(-min_q()), d = dd.shift_q(-dd.min_q()), quo;
        auto [dm, dc] = d.lead();
        while (!r.is_zero()) {
            auto [rm, rc] = r.lead();
            if (rm.a < dm.a || rm.q < dm.q || rc % dc != 0)
                throw ring_error("inexact polynomial division");
            Poly t = monomial(rc / dc, rm.a - dm.a, rm.q - dm.q);
            quo += t;
            r -= t * d;
            // the lex-leading pair must strictly decrease
            auto check = r.is_zero() ? std::pair{INT32_MIN, INT32_MIN}
                                     : std::pair{r.lead().first.q, r.lead().first.a};
            if (check >= std::pair{rm.q, rm.a}) throw ring_error("inexact polynomial division");
        }
        return quo.shift_q(shift);
    }

    Int int_content() const {
        Int g = 0;
        for (const auto& [m, c] : t_) g = gcd(g, c);
        return g;  // 0 for the zero polynomial
    }

    Rat eval(const Rat& a0, const Rat& q0) const {
        Rat s = 0;
        for (const auto& [m, c] : t_) {
            Rat term(c);
            for (int i = 0; i < m.a; ++i) term *= a0;
            if (m.q >= 0)
                for (int i = 0; i < m.q; ++i) term *= q0;
            else {
                if (q0 == 0) throw ring_error("evaluating q^{-1} at q=0");
                for (int i = 0; i < -m.q; ++i) term /= q0;
            }
            s += term;
        }
        return s;
    }

    std::string str() const;

private:
    std::map<Mono, Int> t_;
};

// ---------------------------------------------------------------------------
// gcd machinery for fraction reduction: primitive PRS over Z[a][q].
// ---------------------------------------------------------------------------

namespace detail {

// dense univariate polynomials in a with Int coefficients
using UniA = std::vector<Int>;

inline void uni_strip(UniA& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline UniA uni_mul(const UniA& f, const UniA& g) {
    if (f.empty() || g.empty()) return {};
    UniA r(f.size() + g.size() - 1, Int(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    uni_strip(r);
    return r;
}
inline UniA uni_sub(UniA f, const UniA& g) {
    if (f.size() < g.size()) f.resize(g.size(), Int(0));
    for (size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
    uni_strip(f);
    return f;
}
inline Int uni_content(const UniA& f) {
    Int g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}
inline UniA uni_scale(UniA f, const Int& c) {
    for (auto& x : f) x *= c;
    return f;
}
inline UniA uni_divint(UniA f, const Int& c) {
    for (auto& x : f) x /= c;
    return f;
}

// primitive part with positive leading coefficient
inline UniA uni_pp(UniA f) {
    Int c = uni_content(f);
    if (c == 0) return {};
    if (f.back() < 0) c = -c;
    return uni_divint(std::move(f), c);
}

// pseudo-remainder of f by g (deg f >= deg g > -inf)
inline UniA uni_prem(UniA f, const UniA& g) {
    Int lg = g.back();
    while (f.size() >= g.size() && !f.empty()) {
        size_t d = f.size() - g.size();
        Int lf = f.back();
        f = uni_scale(std::move(f), lg);
        UniA t(d, Int(0));
        t.insert(t.end(), g.begin(), g.end());
        f = uni_sub(std::move(f), uni_scale(t, lf));
    }
    return f;
}

inline UniA uni_gcd(UniA f, UniA g) {
    uni_strip(f);
    uni_strip(g);
    // gcd(0, g) = g up to sign: the content must be preserved
    if (f.empty()) {
        if (!g.empty() && g.back() < 0) return uni_scale(std::move(g), Int(-1));
        return g;
    }
    if (g.empty()) {
        if (f.back() < 0) return uni_scale(std::move(f), Int(-1));
        return f;
    }
    Int cf = uni_content(f), cg = uni_content(g);
    Int c = gcd(cf, cg);
    f = uni_pp(std::move(f));
    g = uni_pp(std::move(g));
    while (!g.empty()) {
        UniA r = uni_prem(f, g);
        f = std::move(g);
        g = uni_pp(std::move(r));
    }
    return uni_scale(std::move(f), c);
}

}  // namespace detail

// Polynomial as a map q_exp -> Z[a] coefficient, for the recursive gcd.
inline std::map<int, detail::UniA> poly_by_q(const Poly& f) {
    std::map<int, detail::UniA> r;
    for (const auto& [m, c] : f.terms()) {
        auto& v = r[m.q];
        if ((int)v.size() <= m.a) v.resize(m.a + 1, Int(0));
        v[m.a] = c;
    }
    return r;
}

inline Poly poly_from_unia(const detail::UniA& f, int q_exp = 0) {
    Poly r;
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) r += Poly::monomial(f[i], (int)i, q_exp);
    return r;
}

// gcd in Z[a,q] up to sign, leading (q-major lex) coefficient made positive.
// Common q^{min} monomial factors are stripped by the caller (fractions put
// all Laurent shift into the numerator).
inline Poly poly_gcd(Poly f, Poly g) {
    using namespace detail;
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    // units (+-q^k) are coprime to everything
    if (f.is_unit() || g.is_unit()) return Poly::from_int(1);
    f = f.shift_q(-f.min_q());
    g = g.shift_q(-g.min_q());

    // contents in Z[a]
    auto fq = poly_by_q(f), gq = poly_by_q(g);
    UniA cf, cg;
    for (auto& [e, v] : fq) cf = uni_gcd(cf, v);
    for (auto& [e, v] : gq) cg = uni_gcd(cg, v);
    UniA cont = uni_gcd(cf, cg);

    // primitive parts as polynomials in q over Z[a]
    auto divide_content = [](std::map<int, UniA>& h, const UniA& c) {
        // exact: divide each Z[a] coefficient by c via poly ops
        for (auto& [e, v] : h) {
            Poly num = poly_from_unia(v), den = poly_from_unia(c);
            v = poly_by_q(num.divexact(den))[0];
        }
    };
    divide_content(fq, cf);
    divide_content(gq, cg);

    auto to_poly = [](const std::map<int, UniA>& h) {
        Poly r;
        for (const auto& [e, v] : h) r += poly_from_unia(v, e);
        return r;
    };
    Poly F = to_poly(fq), G = to_poly(gq);
    if (F.max_q() < G.max_q()) std::swap(F, G);

    auto lc_in_a = [](const Poly& h) {  // Z[a] coefficient of top q-power
        auto m = poly_by_q(h);
        return m.rbegin()->second;
    };
    auto a_content = [](const Poly& h) {
        UniA c;
        for (auto& [e, v] : poly_by_q(h)) c = uni_gcd(c, v);
        return c;
    };

    while (!G.is_zero()) {
        if (G.max_q() == 0) {
            // gcd of primitive polys with one of them constant in q
            UniA ga = poly_by_q(G)[0];
            UniA fa = a_content(F);
            F = poly_from_unia(uni_gcd(fa, ga));
            break;
        }
        // pseudo-remainder in q with Z[a] coefficients
        Poly lg = poly_from_unia(lc_in_a(G));
        Poly R = F;
        int dg = G.max_q();
        while (!R.is_zero() && R.max_q() >= dg) {
            Poly lr = poly_from_unia(lc_in_a(R));
            int d = R.max_q() - dg;
            R = R * lg - G * lr.shift_q(d);
        }
        F = G;
        if (R.is_zero()) {
            G = Poly();
        } else {
            // primitive part of R
            UniA ca = a_content(R);
            G = R.divexact(poly_from_unia(uni_pp(ca)));
            // also strip integer content and q-shift
            Int ic = G.int_content();
            if (ic > 1) G = G.divexact(Poly::from_int(ic));
            G = G.shift_q(-G.min_q());
        }
    }
    // the PRS output must be primitive before the content is restored
    if (!F.is_zero()) {
        UniA fa = a_content(F);
        Poly pp = poly_from_unia(uni_pp(fa));
        if (!pp.is_one()) F = F.divexact(pp);
        Int ic = F.int_content();
        if (ic > 1) F = F.divexact(Poly::from_int(ic));
    }
    Poly result = F * poly_from_unia(cont);
    if (result.lead().second < 0) result = -result;
    return result;
}

// reduced fraction num/den over Z[a,q^{+-1}], den a primitive polynomial with
// min_q = 0 and positive leading coefficient
struct Frac {
    Poly num, den = Poly::from_int(1);

    void reduce() {
        if (num.is_zero()) {
            den = Poly::from_int(1);
            return;
        }
        if (den.is_one()) return;  // already reduced
        int shift = num.min_q() - den.min_q();
        Poly n = num.shift_q(-num.min_q());
        Poly d = den.shift_q(-den.min_q());
        Poly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = n.divexact(g);
            d = d.divexact(g);
        }
        if (d.lead().second < 0) {
            n = -n;
            d = -d;
        }
        num = n.shift_q(shift);
        den = d;
    }
    friend bool operator==(const Frac& x, const Frac& y) {
        return x.num == y.num && x.den == y.den;
    }
};

// ---------------------------------------------------------------------------
// Ring descriptors
// ---------------------------------------------------------------------------

enum class RingKind { IntegerLaurent, FractionField, Cyclotomic, FiniteField, Rational };

// dense integer coefficients of the e-th cyclotomic polynomial
inline std::vector<Int> cyclotomic_poly(int e) {
    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, by univariate division
    std::vector<Int> num(e + 1, Int(0));
    num[0] = -1;
    num[e] = 1;
    auto divide = [](std::vector<Int> f, const std::vector<Int>& g) {
        std::vector<Int> q(f.size() - g.size() + 1, Int(0));
        for (int i = (int)f.size() - 1; i >= (int)g.size() - 1; --i) {
            Int c = f[i];  // g is monic
            if (c == 0) continue;
            q[i - g.size() + 1] = c;
            for (size_t j = 0; j < g.size(); ++j) f[i - g.size() + 1 + j] -= c * g[j];
        }
        return q;
    };
    for (int d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        std::vector<Int> phi_d(d + 1, Int(0));
        phi_d[0] = -1;
        phi_d[d] = 1;
        // recursively reduce: easier to recompute phi_d the same way
        std::vector<Int> nd = phi_d;
        for (int dd = 1; dd < d; ++dd)
            if (d % dd == 0) nd = divide(nd, cyclotomic_poly(dd));
        num = divide(num, nd);
    }
    return num;
}

class Ring {
public:
    RingKind kind;
    int e = 0;            // Cyclotomic
    Rat a_rat = 0;        // Cyclotomic / Rational
    Rat q_rat = 1;        // Rational
    long long p = 0;      // FiniteField
    long long q_val = 0;  // FiniteField
    long long a_val = 0;  // FiniteField

    static Ring integer_laurent() { return Ring{RingKind::IntegerLaurent}; }
    static Ring fraction_field() { return Ring{RingKind::FractionField}; }
    static Ring cyclotomic(int e, const Rat& a = 1) {
        if (e < 2) throw ring_error("cyclotomic ring needs e >= 2");
        Ring r{RingKind::Cyclotomic};
        r.e = e;
        r.a_rat = a;
        return r;
    }
    static Ring finite_field(long long p, long long q, long long a) {
        if (p < 2) throw ring_error("finite field needs a prime p");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw ring_error("finite field needs a prime p");
        Ring r{RingKind::FiniteField};
        r.p = p;
        r.q_val = ((q % p) + p) % p;
        r.a_val = ((a % p) + p) % p;
        if (r.q_val == 0) throw ring_error("q must be invertible");
        return r;
    }
    static Ring rational(const Rat& q = 1, const Rat& a = 1) {
        if (q == 0) throw ring_error("q must be invertible");
        Ring r{RingKind::Rational};
        r.q_rat = q;
        r.a_rat = a;
        return r;
    }

    bool is_field() const { return kind != RingKind::IntegerLaurent; }

    int phi_degree() const {  // degree of Phi_e
        auto c = cyclotomic_poly(e);
        return (int)c.size() - 1;
    }

    friend bool operator==(const Ring& x, const Ring& y) {
        if (x.kind != y.kind) return false;
        switch (x.kind) {
            case RingKind::IntegerLaurent:
            case RingKind::FractionField: return true;
            case RingKind::Cyclotomic: return x.e == y.e && x.a_rat == y.a_rat;
            case RingKind::FiniteField:
                return x.p == y.p && x.q_val == y.q_val && x.a_val == y.a_val;
            case RingKind::Rational: return x.q_rat == y.q_rat && x.a_rat == y.a_rat;
        }
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        switch (kind) {
            case RingKind::IntegerLaurent: os << "Z[a,q^+-1]"; break;
            case RingKind::FractionField: os << "Q(a,q)"; break;
            case RingKind::Cyclotomic: os << "Q[q]/Phi_" << e << "(q),a=" << a_rat; break;
            case RingKind::FiniteField:
                os << "GF(" << p << "),q=" << q_val << ",a=" << a_val;
                break;
            case RingKind::Rational: os << "Q,q=" << q_rat << ",a=" << a_rat; break;
        }
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Coefficient: an element of one of the five rings
// ---------------------------------------------------------------------------

class Coefficient {
public:
    using CycElt = std::vector<Rat>;  // coefficients of 1, q, ..., q^{phi-1}

    Coefficient() : ring_(Ring::integer_laurent()), v_(Poly()) {}

    static Coefficient zero(const Ring& r) { return make(r, 0); }
    static Coefficient one(const Ring& r) { return make(r, 1); }
    static Coefficient integer(const Ring& r, const Int& n) { return make(r, n); }

    static Coefficient a(const Ring& r) {
        switch (r.kind) {
            case RingKind::IntegerLaurent: return Coefficient(r, Poly::gen_a());
            case RingKind::FractionField: return Coefficient(r, Frac{Poly::gen_a()});
            case RingKind::Cyclotomic: return from_rat(r, r.a_rat);
            case RingKind::FiniteField: return Coefficient(r, r.a_val);
            case RingKind::Rational: return Coefficient(r, r.a_rat);
        }
        throw ring_error("bad ring");
    }
    static Coefficient q(const Ring& r, int k = 1) {
        switch (r.kind) {
            case RingKind::IntegerLaurent: return Coefficient(r, Poly::gen_q(k));
            case RingKind::FractionField: {
                Frac f{Poly::gen_q(k)};
                return Coefficient(r, f);
            }
            case RingKind::Cyclotomic: {
                Coefficient qq(r, CycElt{});
                auto& v = std::get<CycElt>(qq.v_);
                v.assign(r.phi_degree(), Rat(0));
                if (v.size() == 1) {
                    // e.g. e=2: q == -1 mod (q+1)
                    auto mod = cyclotomic_poly(r.e);
                    v[0] = Rat(-mod[0]);  // monic linear modulus: q = -c0
                } else {
                    v[1] = 1;
                }
                qq.normalize();
                if (k < 0) return one(r) / qq.pow_int(-k);
                return qq.pow_int(k);
            }
            case RingKind::FiniteField: {
                Coefficient qq(r, r.q_val);
                if (k < 0) return one(r) / qq.pow_int(-k);
                return qq.pow_int(k);
            }
            case RingKind::Rational: {
                Coefficient qq(r, r.q_rat);
                if (k < 0) return one(r) / qq.pow_int(-k);
                return qq.pow_int(k);
            }
        }
        throw ring_error("bad ring");
    }

    const Ring& ring() const { return ring_; }

    bool is_zero() const {
        switch (ring_.kind) {
            case RingKind::IntegerLaurent: return std::get<Poly>(v_).is_zero();
            case RingKind::FractionField: return std::get<Frac>(v_).num.is_zero();
            case RingKind::Cyclotomic: {
                for (const auto& c : std::get<CycElt>(v_))
                    if (c != 0) return false;
                return true;
            }
            case RingKind::FiniteField: return std::get<long long>(v_) == 0;
            case RingKind::Rational: return std::get<Rat>(v_) == 0;
        }
        return true;
    }
    bool is_one() const { return *this == one(ring_); }

    friend bool operator==(const Coefficient& x, const Coefficient& y) {
        if (!(x.ring_ == y.ring_)) return false;
        return x.v_ == y.v_;
    }

    Coefficient operator-() const {
        Coefficient r = *this;
        switch (ring_.kind) {
            case RingKind::IntegerLaurent: r.v_ = -std::get<Poly>(v_); break;
            case RingKind::FractionField: {
                Frac f = std::get<Frac>(v_);
                f.num = -f.num;
                r.v_ = f;
                break;
            }
            case RingKind::Cyclotomic: {
                CycElt c = std::get<CycElt>(v_);
                for (auto& x : c) x = -x;
                r.v_ = c;
                break;
            }
            case RingKind::FiniteField:
                r.v_ = (ring_.p - std::get<long long>(v_)) % ring_.p;
                break;
            case RingKind::Rational: r.v_ = Rat(-std::get<Rat>(v_)); break;
        }
        return r;
    }

    friend Coefficient operator+(const Coefficient& x, const Coefficient& y) {
        x.check(y);
        Coefficient r = x;
        switch (x.ring_.kind) {
            case RingKind::IntegerLaurent:
                r.v_ = std::get<Poly>(x.v_) + std::get<Poly>(y.v_);
                break;
            case RingKind::FractionField: {
                const Frac &a = std::get<Frac>(x.v_), &b = std::get<Frac>(y.v_);
                Frac f{a.num * b.den + b.num * a.den, a.den * b.den};
                f.reduce();
                r.v_ = f;
                break;
            }
            case RingKind::Cyclotomic: {
                CycElt c = std::get<CycElt>(x.v_);
                const CycElt& d = std::get<CycElt>(y.v_);
                for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
                r.v_ = c;
                break;
            }
            case RingKind::FiniteField:
                r.v_ = (std::get<long long>(x.v_) + std::get<long long>(y.v_)) % x.ring_.p;
                break;
            case RingKind::Rational:
                r.v_ = Rat(std::get<Rat>(x.v_) + std::get<Rat>(y.v_));
                break;
        }
        return r;
    }
    friend Coefficient operator-(const Coefficient& x, const Coefficient& y) {
        return x + (-y);
    }
    friend Coefficient operator*(const Coefficient& x, const Coefficient& y) {
        x.check(y);
        Coefficient r = x;
        switch (x.ring_.kind) {
            case RingKind::IntegerLaurent:
                r.v_ = std::get<Poly>(x.v_) * std::get<Poly>(y.v_);
                break;
            case RingKind::FractionField: {
                const Frac &a = std::get<Frac>(x.v_), &b = std::get<Frac>(y.v_);
                Frac f{a.num * b.num, a.den * b.den};
                f.reduce();
                r.v_ = f;
                break;
            }
            case RingKind::Cyclotomic: {
                r.v_ = cyc_mul(x.ring_, std::get<CycElt>(x.v_), std::get<CycElt>(y.v_));
                break;
            }
            case RingKind::FiniteField: {
                __int128 prod = (__int128)std::get<long long>(x.v_) *
                                std::get<long long>(y.v_);
                r.v_ = (long long)(prod % x.ring_.p);
                break;
            }
            case RingKind::Rational:
                r.v_ = Rat(std::get<Rat>(x.v_) * std::get<Rat>(y.v_));
                break;
        }
        return r;
    }
    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
    Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
    Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

    Coefficient inverse() const {
        switch (ring_.kind) {
            case RingKind::IntegerLaurent: {
                const Poly& p = std::get<Poly>(v_);
                if (!p.is_unit()) throw ring_error("non-unit in Z[a,q^+-1]");
                auto [m, c] = *p.terms().begin();
                return Coefficient(ring_, Poly::monomial(c, 0, -m.q));
            }
            case RingKind::FractionField: {
                const Frac& f = std::get<Frac>(v_);
                if (f.num.is_zero()) throw ring_error("division by zero");
                Frac r{f.den, f.num};
                r.reduce();
                return Coefficient(ring_, r);
            }
            case RingKind::Cyclotomic: return cyc_inverse();
            case RingKind::FiniteField: {
                long long v = std::get<long long>(v_);
                if (v == 0) throw ring_error("division by zero");
                // Fermat
                long long e = ring_.p - 2, b = v, acc = 1;
                while (e) {
                    if (e & 1) acc = (long long)(((__int128)acc * b) % ring_.p);
                    b = (long long)(((__int128)b * b) % ring_.p);
                    e >>= 1;
                }
                return Coefficient(ring_, acc);
            }
            case RingKind::Rational: {
                const Rat& v = std::get<Rat>(v_);
                if (v == 0) throw ring_error("division by zero");
                return Coefficient(ring_, Rat(1 / v));
            }
        }
        throw ring_error("bad ring");
    }

    friend Coefficient operator/(const Coefficient& x, const Coefficient& y) {
        if (x.ring_.kind == RingKind::IntegerLaurent) return x.divexact(y);
        return x * y.inverse();
    }

    // exact division in Z[a,q^{+-1}]; throws if not exact
    Coefficient divexact(const Coefficient& o) const {
        check(o);
        if (ring_.kind != RingKind::IntegerLaurent)
            return *this / o;
        const Poly &n = std::get<Poly>(v_), &d = std::get<Poly>(o.v_);
        return Coefficient(ring_, n.divexact(d));
    }

    bool divides(const Coefficient& o) const {
        try {
            (void)o.divexact(*this);
            return true;
        } catch (const ring_error&) {
            return false;
        }
    }

    Coefficient pow_int(int k) const {
        if (k < 0) return inverse().pow_int(-k);
        Coefficient r = one(ring_), b = *this;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    // view of the Laurent payload (IntegerLaurent only)
    const Poly& poly() const {
        if (ring_.kind != RingKind::IntegerLaurent)
            throw ring_error("poly() on non-Laurent coefficient");
        return std::get<Poly>(v_);
    }
    const Frac& frac() const {
        if (ring_.kind != RingKind::FractionField)
            throw ring_error("frac() on non-fraction coefficient");
        return std::get<Frac>(v_);
    }

    // image of a Laurent polynomial or fraction under specialization into r;
    // fractions require the specialized denominator to be invertible
    Coefficient to_ring(const Ring& r) const {
        if (r == ring_) return *this;
        if (ring_.kind == RingKind::IntegerLaurent) {
            const Poly& p = std::get<Poly>(v_);
            Coefficient s = zero(r);
            for (const auto& [m, c] : p.terms()) {
                Coefficient t = integer(r, c);
                t *= a(r).pow_int(m.a);
                t *= q(r, m.q);
                s += t;
            }
            return s;
        }
        if (ring_.kind == RingKind::FractionField) {
            const Frac& f = std::get<Frac>(v_);
            Coefficient n = Coefficient(Ring::integer_laurent(), f.num).to_ring(r);
            Coefficient d = Coefficient(Ring::integer_laurent(), f.den).to_ring(r);
            return n / d;
        }
        throw ring_error("specialization only from Z[a,q^+-1] or Q(a,q)");
    }

    // Laurent -> fraction field embedding
    static Coefficient laurent_to_frac(const Coefficient& x) {
        Frac f{x.poly()};
        f.reduce();
        return Coefficient(Ring::fraction_field(), f);
    }
    // fraction with polynomial content -> Laurent; throws when not integral
    static Coefficient frac_to_laurent(const Coefficient& x) {
        const Frac& f = x.frac();
        Poly quo = f.num.divexact(f.den);
        return Coefficient(Ring::integer_laurent(), quo);
    }

    std::string str() const;

    Coefficient(const Ring& r, Poly p) : ring_(r), v_(std::move(p)) {}
    Coefficient(const Ring& r, Frac f) : ring_(r), v_(std::move(f)) {}
    Coefficient(const Ring& r, CycElt c) : ring_(r), v_(std::move(c)) {}
    Coefficient(const Ring& r, long long v) : ring_(r), v_(v) {}
    Coefficient(const Ring& r, Rat v) : ring_(r), v_(std::move(v)) {}

private:
    Ring ring_;
    std::variant<Poly, Frac, CycElt, long long, Rat> v_;

    void check(const Coefficient& o) const {
        if (!(ring_ == o.ring_)) throw ring_error("coefficient ring mismatch");
    }

    static Coefficient make(const Ring& r, const Int& n) {
        switch (r.kind) {
            case RingKind::IntegerLaurent: return Coefficient(r, Poly::from_int(n));
            case RingKind::FractionField: return Coefficient(r, Frac{Poly::from_int(n)});
            case RingKind::Cyclotomic: {
                CycElt c(std::max(1, r.phi_degree()), Rat(0));
                c.resize(r.phi_degree(), Rat(0));
                if (!c.empty()) c[0] = Rat(n);
                return Coefficient(r, c);
            }
            case RingKind::FiniteField: {
                Int P((long)r.p);
                Int m = n % P;
                if (m < 0) m += P;
                return Coefficient(r, (long long)m.get_si());
            }
            case RingKind::Rational: return Coefficient(r, Rat(n));
        }
        throw ring_error("bad ring");
    }

    static Coefficient from_rat(const Ring& r, const Rat& v) {
        if (r.kind == RingKind::Cyclotomic) {
            CycElt c(r.phi_degree(), Rat(0));
            c[0] = v;
            return Coefficient(r, c);
        }
        if (r.kind == RingKind::Rational) return Coefficient(r, v);
        throw ring_error("from_rat on unsupported ring");
    }

    void normalize() {}

    static CycElt cyc_mul(const Ring& r, const CycElt& x, const CycElt& y) {
        int d = (int)x.size();
        std::vector<Rat> prod(2 * d, Rat(0));
        for (int i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < d; ++j)
                if (y[j] != 0) prod[i + j] += x[i] * y[j];
        }
        auto mod = cyclotomic_poly(r.e);  // monic, degree d
        for (int i = 2 * d - 1; i >= d; --i) {
            if (prod[i] == 0) continue;
            Rat c = prod[i];
            prod[i] = 0;
            for (int j = 0; j < d; ++j) prod[i - d + j] -= c * Rat(mod[j]);
        }
        prod.resize(d);
        return prod;
    }

    Coefficient cyc_inverse() const {
        // extended Euclid in Q[x] against Phi_e
        const CycElt& x = std::get<CycElt>(v_);
        if (is_zero()) throw ring_error("division by zero");
        int d = (int)x.size();
        std::vector<Rat> r0(d + 1), r1(x.begin(), x.end());
        auto mod = cyclotomic_poly(ring_.e);
        for (int i = 0; i <= d; ++i) r0[i] = Rat(mod[i]);
        std::vector<Rat> s0{}, s1{Rat(1)};
        auto strip = [](std::vector<Rat>& f) {
            while (!f.empty() && f.back() == 0) f.pop_back();
        };
        strip(r0);
        strip(r1);
        while (!r1.empty() && !(r1.size() == 1 && false)) {
            if (r1.size() == 1) break;  // nonzero constant: done
            // divide r0 by r1
            std::vector<Rat> quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                                 Rat(0));
            std::vector<Rat> rem = r0;
            while (rem.size() >= r1.size() && !rem.empty()) {
                Rat c = rem.back() / r1.back();
                size_t off = rem.size() - r1.size();
                quo[off] = c;
                for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
                strip(rem);
                if (rem.size() >= r1.size() && rem.size() && rem.back() == 0) strip(rem);
            }
            // s_{k+1} = s_{k-1} - quo * s_k
            std::vector<Rat> qs(quo.size() + s1.size(), Rat(0));
            for (size_t i = 0; i < quo.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += quo[i] * s1[j];
            strip(qs);
            std::vector<Rat> s2 = s0;
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            strip(s2);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
            if (r1.empty()) throw ring_error("non-invertible cyclotomic element");
        }
        // r1 is a nonzero constant c: inverse = s1 / c mod Phi
        Rat c = r1.back();
        CycElt inv(d, Rat(0));
        for (size_t i = 0; i < s1.size() && i < (size_t)d; ++i) inv[i] = s1[i] / c;
        // s1 may exceed degree d-1 only transiently; reduce just in case
        Coefficient out(ring_, inv);
        return out;
    }
};

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

// coefficient rendered as a product factor: sums get parentheses so that
// term lists like "coeff * T[w] + coeff * T[w]" stay unambiguous
inline std::string factor_str(const Coefficient& c) {
    std::string s = c.str();
    if (s.find(' ') != std::string::npos) return "(" + s + ")";
    return s;
}

inline std::string Poly::str() const {
    if (t_.empty()) return "0";
    // sort by (a, q)
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Int v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        bool coeff_shown = false;
        if (v != 1 || (m.a == 0 && m.q == 0)) {
            os << v.get_str();
            coeff_shown = true;
        }
        if (m.a != 0) {
            if (coeff_shown) os << "*";
            os << "a";
            if (m.a != 1) os << "^" << m.a;
            coeff_shown = true;
        }
        if (m.q != 0) {
            if (coeff_shown) os << "*";
            os << "q";
            if (m.q != 1) os << "^" << m.q;
        }
    }
    return os.str();
}

inline std::string Coefficient::str() const {
    std::ostringstream os;
    switch (ring_.kind) {
        case RingKind::IntegerLaurent: return std::get<Poly>(v_).str();
        case RingKind::FractionField: {
            const Frac& f = std::get<Frac>(v_);
            if (f.den.is_one()) return f.num.str();
            os << "(" << f.num.str() << ")/(" << f.den.str() << ")";
            return os.str();
        }
        case RingKind::Cyclotomic: {
            const CycElt& c = std::get<CycElt>(v_);
            bool first = true;
            for (size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0) continue;
                if (!first) os << " + ";
                os << c[i].get_str();
                if (i >= 1) os << "*q";
                if (i >= 2) os << "^" << i;
                first = false;
            }
            if (first) os << "0";
            return os.str();
        }
        case RingKind::FiniteField: os << std::get<long long>(v_); return os.str();
        case RingKind::Rational: os << std::get<Rat>(v_).get_str(); return os.str();
    }
    return os.str();
}

}  // namespace hcq
