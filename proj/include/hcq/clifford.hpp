#pragma once

// The Hecke-Clifford superalgebra: the Clifford superalgebra C_n(a) with
// generators c_1..c_n (c_i^2 = a, anticommuting) twisted together with the
// Hecke algebra H_n(q), in the normal form c^p T_w.  On top of the algebra
// itself this header provides the circled parabolic supermodules with their
// gamma actions, super Specht quotients, and the Theta/Delta/K ideal data
// used to classify the simple supermodules.

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hcq/hecke.hpp"
#include "hcq/qcomb.hpp"
#include "hcq/tableaux.hpp"

namespace hcq {

// ---------------------------------------------------------------------------
// Clifford words
// ---------------------------------------------------------------------------

// ascending product of c_i's encoded as a bitmask over {1..n}: bit (i-1)
// stands for a factor c_i
struct CliffordWord {
    int n = 0;
    std::uint32_t mask = 0;

    int parity() const { return std::popcount(mask) & 1; }
    int weight() const { return std::popcount(mask); }

    friend bool operator==(const CliffordWord&, const CliffordWord&) = default;

    // "c[1,4]" for mask {1,4}; "" for the empty word
    std::string str() const {
        if (!mask) return "";
        std::string s = "c[";
        bool first = true;
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1) {
                if (!first) s += ",";
                s += std::to_string(i);
                first = false;
            }
        return s + "]";
    }
};

inline std::uint32_t mask_from_positions(const std::vector<int>& pos) {
    std::uint32_t m = 0;
    for (int i : pos) {
        if (i < 1 || i > 31) throw std::invalid_argument("clifford index out of range");
        if (m >> (i - 1) & 1) throw std::invalid_argument("repeated clifford index");
        m |= 1u << (i - 1);
    }
    return m;
}

inline std::vector<int> mask_positions(std::uint32_t mask) {
    std::vector<int> pos;
    for (int i = 1; mask; ++i, mask >>= 1)
        if (mask & 1) pos.push_back(i);
    return pos;
}

// ---------------------------------------------------------------------------
// HCElement: sparse elements of H^c_n in the normal form c^mask T_w
// ---------------------------------------------------------------------------

class HCElement {
public:
    using Key = std::pair<std::uint32_t, Perm>;  // (clifford mask, permutation)

    HCElement(Ring ring, int n)
        : ring_(std::move(ring)), n_(n), csq_(Coefficient::a(ring_)) {}
    HCElement(Ring ring, int n, Coefficient csq)
        : ring_(std::move(ring)), n_(n), csq_(std::move(csq)) {}

    static HCElement zero(const Ring& r, int n) { return HCElement(r, n); }
    static HCElement unit(const Ring& r, int n) {
        return basis(r, 0, Perm::identity(n));
    }
    static HCElement basis(const Ring& r, std::uint32_t mask, const Perm& w) {
        HCElement x(r, w.n());
        if (mask >> w.n()) throw std::invalid_argument("clifford mask out of range");
        x.add_term(mask, w, Coefficient::one(r));
        return x;
    }
    // c_i
    static HCElement clifford(const Ring& r, int i, int n) {
        return basis(r, 1u << (i - 1), Perm::identity(n));
    }
    // T_{s_i}
    static HCElement generator(const Ring& r, int i, int n) {
        return basis(r, 0, Perm::s(i, n));
    }
    // embed a plain Hecke element (mask 0 on every term)
    static HCElement from_hecke_part(const HeckeElement& h) {
        HCElement x(h.ring(), h.n());
        for (const auto& [w, c] : h.terms()) x.add_term(0, w, c);
        return x;
    }

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    const Coefficient& csq() const { return csq_; }
    const std::map<Key, Coefficient>& terms() const { return terms_; }
    Coefficient coeff(std::uint32_t mask, const Perm& w) const {
        auto it = terms_.find({mask, w});
        return it == terms_.end() ? Coefficient::zero(ring_) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::uint32_t mask, const Perm& w, const Coefficient& c) {
        if (c.is_zero()) return;
        if (w.n() != n_) throw std::invalid_argument("hc rank mismatch");
        auto [it, fresh] = terms_.emplace(Key{mask, w}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // parity of a homogeneous element: 0 (even), 1 (odd); -1 for zero
    bool is_homogeneous() const {
        int p = -1;
        for (const auto& [k, c] : terms_) {
            int tp = std::popcount(k.first) & 1;
            if (p < 0) p = tp;
            else if (p != tp) return false;
        }
        return true;
    }
    int parity() const {
        if (terms_.empty()) return -1;
        if (!is_homogeneous())
            throw std::invalid_argument("parity of an inhomogeneous element");
        return std::popcount(terms_.begin()->first.first) & 1;
    }

    friend bool operator==(const HCElement& x, const HCElement& y) {
        return x.n_ == y.n_ && x.csq_ == y.csq_ && x.terms_ == y.terms_;
    }
    friend HCElement operator+(const HCElement& x, const HCElement& y) {
        x.check_compatible(y);
        HCElement out = x;
        for (const auto& [k, c] : y.terms_) out.add_term(k.first, k.second, c);
        return out;
    }
    friend HCElement operator-(const HCElement& x, const HCElement& y) {
        x.check_compatible(y);
        HCElement out = x;
        for (const auto& [k, c] : y.terms_) out.add_term(k.first, k.second, -c);
        return out;
    }
    friend HCElement operator*(const Coefficient& c, const HCElement& x) {
        HCElement out(x.ring_, x.n_, x.csq_);
        for (const auto& [k, d] : x.terms_) out.add_term(k.first, k.second, c * d);
        return out;
    }

    // left multiplication by c_i: walk past the smaller indices in the
    // ascending word (one sign per factor crossed), then merge or square
    HCElement left_c(int i) const {
        HCElement out(ring_, n_, csq_);
        std::uint32_t bit = 1u << (i - 1);
        for (const auto& [k, c] : terms_) {
            auto [mask, w] = k;
            std::uint32_t below = mask & (bit - 1);
            Coefficient s = (std::popcount(below) & 1) ? -c : c;
            if (mask & bit)
                out.add_term(mask ^ bit, w, s * csq_);
            else
                out.add_term(mask | bit, w, s);
        }
        return out;
    }

    // left multiplication by T_i:
    //   T_i c^m T_w = s_i(c^m) T_i T_w + (q-1) t_i(c^m) T_w
    // where s_i swaps the bits i, i+1 (sign -1 when both are present) and
    // t_i rewrites the bit pair (i,i+1) as
    //   (0,0) -> 0,  (1,0) -> 0,  (0,1) -> (0,1) - (1,0),
    //   (1,1) -> csq*(0,0) + (1,1)
    HCElement left_T(int i) const {
        HCElement out(ring_, n_, csq_);
        Coefficient one = Coefficient::one(ring_);
        Coefficient q = Coefficient::q(ring_);
        Coefficient qm1 = q - one;
        std::uint32_t lo = 1u << (i - 1), hi = 1u << i;
        Perm si = Perm::s(i, n_);
        for (const auto& [k, c] : terms_) {
            auto [mask, w] = k;
            // s_i(c^m) T_i T_w
            std::uint32_t rest = mask & ~(lo | hi);
            bool has_lo = mask & lo, has_hi = mask & hi;
            std::uint32_t swapped = rest | (has_lo ? hi : 0u) | (has_hi ? lo : 0u);
            Coefficient cs = (has_lo && has_hi) ? -c : c;
            Perm sw = si * w;
            if (sw.length() > w.length()) {
                out.add_term(swapped, sw, cs);
            } else {
                out.add_term(swapped, sw, cs * q);
                out.add_term(swapped, w, cs * qm1);
            }
            // (q-1) t_i(c^m) T_w
            if (!has_lo && has_hi) {
                out.add_term(mask, w, c * qm1);
                out.add_term(rest | lo, w, -(c * qm1));
            } else if (has_lo && has_hi) {
                out.add_term(mask, w, c * qm1);
                out.add_term(rest, w, c * qm1 * csq_);
            }
        }
        return out;
    }

    // right multiplication by T_i only touches the Hecke part
    HCElement times_Ti(int i) const {
        HCElement out(ring_, n_, csq_);
        Coefficient q = Coefficient::q(ring_);
        Coefficient qm1 = q - Coefficient::one(ring_);
        Perm si = Perm::s(i, n_);
        for (const auto& [k, c] : terms_) {
            auto [mask, w] = k;
            Perm ws = w * si;
            if (!w.has_descent(i)) {
                out.add_term(mask, ws, c);
            } else {
                out.add_term(mask, ws, c * q);
                out.add_term(mask, w, c * qm1);
            }
        }
        return out;
    }

    friend HCElement operator*(const HCElement& x, const HCElement& y) {
        x.check_compatible(y);
        HCElement out(x.ring_, x.n_, x.csq_);
        for (const auto& [k, c] : x.terms_) {
            auto [mask, w] = k;
            // (c^mask T_w) * y by left-multiplying y
            HCElement acc = c * y;
            auto word = w.reduced_word();
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                acc = acc.left_T(*it);
            auto pos = mask_positions(mask);
            for (auto it = pos.rbegin(); it != pos.rend(); ++it)
                acc = acc.left_c(*it);
            for (const auto& [k2, d] : acc.terms_) out.add_term(k2.first, k2.second, d);
        }
        return out;
    }

    // sorted term list "coeff * c[..] T[w]"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += factor_str(c) + " * ";
            CliffordWord cw{n_, k.first};
            if (k.first) s += cw.str() + " ";
            s += "T" + k.second.str();
        }
        return s;
    }

private:
    Ring ring_;
    int n_;
    Coefficient csq_;  // the common square c_i^2 (the parameter a, or -a)
    std::map<Key, Coefficient> terms_;

    void check_compatible(const HCElement& y) const {
        if (n_ != y.n_) throw std::invalid_argument("hc rank mismatch");
        if (!(csq_ == y.csq_))
            throw std::invalid_argument("hc clifford-square parameter mismatch");
    }
};

inline HCElement hc_multiply(const HCElement& x, const HCElement& y) { return x * y; }

// ---------------------------------------------------------------------------
// T-first normal form T_w c^mask and the lossless interconversion
// ---------------------------------------------------------------------------

// elements written as sums of T_w c^mask; only used to certify that the two
// normal forms carry the same information
class HCElementTFirst {
public:
    using Key = std::pair<Perm, std::uint32_t>;

    HCElementTFirst(Ring ring, int n, Coefficient csq)
        : ring_(std::move(ring)), n_(n), csq_(std::move(csq)) {}

    const std::map<Key, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Perm& w, std::uint32_t mask, const Coefficient& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(Key{w, mask}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const HCElementTFirst& x, const HCElementTFirst& y) {
        return x.n_ == y.n_ && x.csq_ == y.csq_ && x.terms_ == y.terms_;
    }

    // right multiplication by c_i: the word already sits at the right
    HCElementTFirst times_c(int i) const {
        HCElementTFirst out(ring_, n_, csq_);
        std::uint32_t bit = 1u << (i - 1);
        for (const auto& [k, c] : terms_) {
            auto [w, mask] = k;
            std::uint32_t above = mask & ~((bit << 1) - 1);
            Coefficient s = (std::popcount(above) & 1) ? -c : c;
            if (mask & bit)
                out.add_term(w, mask ^ bit, s * csq_);
            else
                out.add_term(w, mask | bit, s);
        }
        return out;
    }

    // right multiplication by T_i:
    //   T_w c^m T_i = (T_w T_i) s_i(c^m) + (q-1) T_w v_i(c^m)
    // with v_i on the bit pair (i,i+1):
    //   (0,0) -> 0,  (0,1) -> 0,  (1,0) -> (1,0) - (0,1),
    //   (1,1) -> csq*(0,0) + (1,1)
    HCElementTFirst times_T(int i) const {
        HCElementTFirst out(ring_, n_, csq_);
        Coefficient one = Coefficient::one(ring_);
        Coefficient q = Coefficient::q(ring_);
        Coefficient qm1 = q - one;
        std::uint32_t lo = 1u << (i - 1), hi = 1u << i;
        for (const auto& [k, c] : terms_) {
            auto [w, mask] = k;
            std::uint32_t rest = mask & ~(lo | hi);
            bool has_lo = mask & lo, has_hi = mask & hi;
            std::uint32_t swapped = rest | (has_lo ? hi : 0u) | (has_hi ? lo : 0u);
            Coefficient cs = (has_lo && has_hi) ? -c : c;
            Perm ws = w * Perm::s(i, n_);
            if (!w.has_descent(i)) {
                out.add_term(ws, swapped, cs);
            } else {
                out.add_term(ws, swapped, cs * q);
                out.add_term(w, swapped, cs * qm1);
            }
            if (has_lo && !has_hi) {
                out.add_term(w, mask, c * qm1);
                out.add_term(w, rest | hi, -(c * qm1));
            } else if (has_lo && has_hi) {
                out.add_term(w, mask, c * qm1);
                out.add_term(w, rest, c * qm1 * csq_);
            }
        }
        return out;
    }

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    const Coefficient& csq() const { return csq_; }

private:
    Ring ring_;
    int n_;
    Coefficient csq_;
    std::map<Key, Coefficient> terms_;
};

inline HCElementTFirst hc_to_T_first(const HCElement& x) {
    HCElementTFirst out(x.ring(), x.n(), x.csq());
    for (const auto& [k, c] : x.terms()) {
        auto [mask, w] = k;
        HCElementTFirst cur(x.ring(), x.n(), x.csq());
        cur.add_term(Perm::identity(x.n()), mask, c);
        for (int i : w.reduced_word()) cur = cur.times_T(i);
        for (const auto& [k2, d] : cur.terms()) out.add_term(k2.first, k2.second, d);
    }
    return out;
}

inline HCElement hc_from_T_first(const HCElementTFirst& y) {
    HCElement out(y.ring(), y.n(), y.csq());
    for (const auto& [k, c] : y.terms()) {
        auto [w, mask] = k;
        HCElement tw = HCElement(y.ring(), y.n(), y.csq());
        tw.add_term(0, w, c);
        HCElement cm = HCElement(y.ring(), y.n(), y.csq());
        cm.add_term(mask, Perm::identity(y.n()), Coefficient::one(y.ring()));
        out = out + tw * cm;
    }
    return out;
}

// ---------------------------------------------------------------------------
// the q=1 anti-homomorphism into the algebra with the opposite square
// ---------------------------------------------------------------------------

// at q=1 the assignment c^p T_w -> T_{w^{-1}} c^p is an anti-homomorphism
// from the algebra with c^2 = csq into the one with c^2 = -csq; the input
// must be parity-homogeneous for the Koszul-signed product rule to make sense
inline HCElement hc_star(const HCElement& x) {
    if (!(Coefficient::q(x.ring()) == Coefficient::one(x.ring())))
        throw std::invalid_argument("hc_star is only defined at q = 1");
    if (!x.is_homogeneous())
        throw std::invalid_argument("hc_star needs a parity-homogeneous element");
    Coefficient csq2 = -x.csq();
    HCElement out(x.ring(), x.n(), csq2);
    for (const auto& [k, c] : x.terms()) {
        auto [mask, w] = k;
        HCElement tw(x.ring(), x.n(), csq2);
        tw.add_term(0, w.inverse(), c);
        HCElement cm(x.ring(), x.n(), csq2);
        cm.add_term(mask, Perm::identity(x.n()), Coefficient::one(x.ring()));
        out = out + tw * cm;
    }
    return out;
}

// ---------------------------------------------------------------------------
// parabolic elements and the gamma generators
// ---------------------------------------------------------------------------

inline HCElement hc_parabolic(const Ring& r, const Composition& lambda) {
    return HCElement::from_hecke_part(parabolic_generator(r, lambda));
}

// gamma^L_{lambda;i} = sum_k q^{k-1}   c_{o+k},  k = 1..lambda_i
// gamma^R_{lambda;i} = sum_k q^{l_i-k} c_{o+k}
inline HCElement hc_gamma(const Ring& r, const Composition& lambda, int i, bool left) {
    int n = lambda.n();
    HCElement out(r, n);
    if (i < 1) throw std::invalid_argument("gamma index must be >= 1");
    int li = lambda[i - 1];
    if (li == 0) return out;  // gamma of a zero part vanishes
    int off = lambda.offsets()[i - 1];
    for (int k = 1; k <= li; ++k) {
        int exp = left ? k - 1 : li - k;
        out.add_term(1u << (off + k - 1), Perm::identity(n), Coefficient::q(r, exp));
    }
    return out;
}
inline HCElement hc_gamma_L(const Ring& r, const Composition& lambda, int i) {
    return hc_gamma(r, lambda, i, true);
}
inline HCElement hc_gamma_R(const Ring& r, const Composition& lambda, int i) {
    return hc_gamma(r, lambda, i, false);
}

// m_n c_{i1}..c_{ir} m_n has the closed form
//   (a(q-1)/[2])^s [n]!   m_n            (r = 2s)
//   (a(q-1)/[2])^s [n-1]! gamma^L_n m_n  (r = 2s+1)
// together with the intertwining identity gamma^L_n m_n = m_n gamma^R_n
inline bool gamma_lemma_check(int n, const std::vector<int>& indices, const Ring& r) {
    Composition row({n});
    HCElement mn = hc_parabolic(r, row);
    HCElement gl = hc_gamma_L(r, row, 1);
    HCElement gr = hc_gamma_R(r, row, 1);
    if (!(gl * mn == mn * gr)) return false;
    HCElement mid = HCElement::basis(r, mask_from_positions(indices), Perm::identity(n));
    HCElement lhs = (mn * mid) * mn;
    int rr = (int)indices.size();
    int s = rr / 2;
    HCElement rhs = (rr % 2 == 0) ? even_ratio_power(s, n, r) * mn
                                  : even_ratio_power(s, n - 1, r) * (gl * mn);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// circled tableau basis of the parabolic supermodules
// ---------------------------------------------------------------------------

// the longest element of the Young subgroup S_lambda (each block reversed)
inline Perm longest_in_young(const Composition& lambda) {
    int n = lambda.n();
    std::vector<int> img(n);
    auto off = lambda.offsets();
    for (int b = 0; b < lambda.size(); ++b)
        for (int k = 1; k <= lambda[b]; ++k) img[off[b] + k - 1] = off[b] + lambda[b] - k + 1;
    return Perm(img);
}

// m_T for a circled tableau T with row-standard underlying part of weight
// (1^n):  m_T = T_{d(T0)} c_{i1}...c_{ir} m_lambda, where the i's are the
// row-major positions of the circled boxes
inline HCElement circled_to_hc(const Ring& r, const CircledTableau& t) {
    Tableau t0 = t.underlying();
    if (!t0.is_row_standard())
        throw std::invalid_argument("circled_to_hc needs a row-standard underlying tableau");
    HCElement mlam = hc_parabolic(r, t0.shape());
    HCElement cm = HCElement::basis(r, mask_from_positions(t.circle_positions()),
                                    Perm::identity(t0.n()));
    HCElement tw = HCElement::basis(r, 0, tableau_to_perm(t0));
    return tw * (cm * mlam);
}

// expand an HC element known to lie in the span of the m_T into that basis.
// The leading term of m_T (in permutation length) is
//   sign * c^{d(p)} T_{d w0},  d = d(T0), w0 = longest_in_young(shape),
// with p the circled positions; the expansion peels leading terms and is
// certified by exact cancellation
inline std::vector<std::pair<CircledTableau, Coefficient>> hc_to_circled_basis(
    const HCElement& x, const Composition& lambda) {
    Composition lam = lambda.normalized();
    Perm w0 = longest_in_young(lam);
    int l0 = w0.length();
    std::vector<std::pair<CircledTableau, Coefficient>> out;
    HCElement rem = x;
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 1u << 22)
            throw internal_error("circled-basis expansion does not terminate");
        auto best = rem.terms().begin();
        int best_len = best->first.second.length();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
            int l = it->first.second.length();
            if (l > best_len) {
                best = it;
                best_len = l;
            }
        }
        auto [mask, u] = best->first;
        Coefficient c = best->second;
        Perm d = u * w0;
        if (d.length() + l0 != u.length() || !in_min_coset_reps(d, lam))
            throw internal_error("element is not in the circled-tableau span");
        Perm dinv = d.inverse();
        std::vector<int> p;
        for (int i : mask_positions(mask)) p.push_back(dinv(i));
        std::sort(p.begin(), p.end());
        // sign that sorts (d(p_1),...,d(p_k)) ascending
        int inv = 0;
        for (size_t a = 0; a < p.size(); ++a)
            for (size_t b = a + 1; b < p.size(); ++b)
                if (d(p[a]) > d(p[b])) ++inv;
        Coefficient alpha = (inv & 1) ? -c : c;
        // row i of T reads d on the i-th block of box positions
        std::vector<std::vector<CircledTableau::Entry>> rows;
        int box = 0;
        for (int b = 0; b < lam.size(); ++b) {
            std::vector<CircledTableau::Entry> rr;
            for (int k = 0; k < lam[b]; ++k) {
                ++box;
                rr.push_back({d(box), std::binary_search(p.begin(), p.end(), box)});
            }
            rows.push_back(std::move(rr));
        }
        CircledTableau t(std::move(rows));
        rem = rem - alpha * circled_to_hc(x.ring(), t);
        out.push_back({t, alpha});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------
// SuperHomSpaceElement: spans of circled double-coset tableaux
// ---------------------------------------------------------------------------

class SuperHomSpaceElement {
public:
    SuperHomSpaceElement(Ring ring, Composition lambda, Composition mu)
        : ring_(std::move(ring)), lambda_(std::move(lambda)), mu_(std::move(mu)) {
        if (lambda_.n() != mu_.n()) throw std::invalid_argument("|lambda| != |mu|");
    }

    static SuperHomSpaceElement basis(const Ring& r, const CircledTableau& s) {
        if (!s.is_row_semistandard())
            throw std::invalid_argument(
                "circled hom-space basis tableau must be row-semistandard");
        SuperHomSpaceElement x(r, s.shape(), s.weight());
        x.add_term(s, Coefficient::one(r));
        return x;
    }

    const Ring& ring() const { return ring_; }
    const Composition& lambda() const { return lambda_; }
    const Composition& mu() const { return mu_; }
    int n() const { return lambda_.n(); }
    const std::map<CircledTableau, Coefficient>& terms() const { return terms_; }
    Coefficient coeff(const CircledTableau& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Coefficient::zero(ring_) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const CircledTableau& s, const Coefficient& c) {
        if (c.is_zero()) return;
        if (!(s.shape() == lambda_) || !(s.weight() == mu_))
            throw std::invalid_argument("tableau does not live in this hom-space");
        auto [it, fresh] = terms_.emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const SuperHomSpaceElement& x, const SuperHomSpaceElement& y) {
        return x.lambda_ == y.lambda_ && x.mu_ == y.mu_ && x.terms_ == y.terms_;
    }
    friend SuperHomSpaceElement operator+(const SuperHomSpaceElement& x,
                                          const SuperHomSpaceElement& y) {
        SuperHomSpaceElement out = x;
        for (const auto& [s, c] : y.terms_) out.add_term(s, c);
        return out;
    }
    friend SuperHomSpaceElement operator-(const SuperHomSpaceElement& x,
                                          const SuperHomSpaceElement& y) {
        SuperHomSpaceElement out = x;
        for (const auto& [s, c] : y.terms_) out.add_term(s, -c);
        return out;
    }
    friend SuperHomSpaceElement operator*(const Coefficient& c,
                                          const SuperHomSpaceElement& x) {
        SuperHomSpaceElement out(x.ring_, x.lambda_, x.mu_);
        for (const auto& [s, d] : x.terms_) out.add_term(s, c * d);
        return out;
    }

    // embedding by the distribution rule: every circled bar of length r is
    // spread over its r boxes with weights q^0 (leftmost) .. q^{r-1}, and the
    // underlying tableau is summed over its weight fiber
    HCElement to_hc() const {
        HCElement out(ring_, n());
        for (const auto& [s, c] : terms_) {
            // per row: the maximal runs of equal entries, with circled flags
            std::vector<std::vector<int>> circled_runs;  // box positions per run
            int box = 0;
            for (const auto& row : s.rows()) {
                size_t j = 0;
                while (j < row.size()) {
                    size_t j2 = j;
                    while (j2 + 1 < row.size() && row[j2 + 1].value == row[j].value) ++j2;
                    bool circ = false;
                    std::vector<int> boxes;
                    for (size_t t = j; t <= j2; ++t) {
                        boxes.push_back(box + (int)t + 1);
                        circ = circ || row[t].circled;
                    }
                    if (circ) circled_runs.push_back(std::move(boxes));
                    j = j2 + 1;
                }
                box += (int)row.size();
            }
            auto fiber = weight_fiber(s.underlying());
            // iterate over one choice of box per circled run
            std::vector<size_t> choice(circled_runs.size(), 0);
            while (true) {
                Coefficient wcoef = c;
                std::vector<int> pos;
                for (size_t b = 0; b < circled_runs.size(); ++b) {
                    pos.push_back(circled_runs[b][choice[b]]);
                    wcoef *= Coefficient::q(ring_, (int)choice[b]);
                }
                std::sort(pos.begin(), pos.end());
                for (const auto& t : fiber) {
                    std::vector<std::vector<CircledTableau::Entry>> rows;
                    int bx = 0;
                    for (const auto& row : t.rows()) {
                        std::vector<CircledTableau::Entry> rr;
                        for (int v : row) {
                            ++bx;
                            rr.push_back(
                                {v, std::binary_search(pos.begin(), pos.end(), bx)});
                        }
                        rows.push_back(std::move(rr));
                    }
                    out = out + wcoef * circled_to_hc(ring_, CircledTableau(std::move(rows)));
                }
                // advance the mixed-radix counter
                size_t b = 0;
                for (; b < choice.size(); ++b) {
                    if (++choice[b] < circled_runs[b].size()) break;
                    choice[b] = 0;
                }
                if (b == choice.size()) break;
            }
        }
        return out;
    }

    // sorted term list "coeff * m[tableau]"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [t, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += factor_str(c) + " * m[" + t.str() + "]";
        }
        return s;
    }

private:
    Ring ring_;
    Composition lambda_, mu_;
    std::map<CircledTableau, Coefficient> terms_;
};

// the canonical circled basis element m_S (or m_T when mu = (1^n))
inline SuperHomSpaceElement circled_basis_element(const Ring& r, const CircledTableau& s) {
    return SuperHomSpaceElement::basis(r, s);
}

// read an HC element of the circled span back in the m_S basis: expand in
// the weight-(1^n) circled basis, keep the fiber-minimal representatives
// with every circle at the leftmost box of its bar (those carry coefficient
// q^0 in the distribution rule), and certify by re-embedding
inline SuperHomSpaceElement hc_to_circled_hom(const HCElement& x, const Composition& lambda,
                                              const Composition& mu) {
    SuperHomSpaceElement out(x.ring(), lambda, mu);
    for (const auto& [t, c] : hc_to_circled_basis(x, lambda)) {
        Tableau sx = restrict_weight(t.underlying(), mu);
        if (!sx.is_row_semistandard()) continue;
        if (!(min_rep_tableau(sx) == t.underlying())) continue;
        // each circle must sit at the leftmost box of its bar in sx
        bool representative = true;
        std::vector<std::vector<CircledTableau::Entry>> rows;
        for (const auto& row : sx.rows()) {
            std::vector<CircledTableau::Entry> rr;
            for (int v : row) rr.push_back({v, false});
            rows.push_back(std::move(rr));
        }
        for (int pos : t.circle_positions()) {
            int i = 0, j = pos - 1;
            while (j >= (int)sx.rows()[i].size()) {
                j -= (int)sx.rows()[i].size();
                ++i;
            }
            int v = sx.rows()[i][j];
            int j0 = j, j1 = j;
            while (j0 > 0 && sx.rows()[i][j0 - 1] == v) --j0;
            while (j1 + 1 < (int)sx.rows()[i].size() && sx.rows()[i][j1 + 1] == v) ++j1;
            if (j != j0) {
                representative = false;
                break;
            }
            rows[i][j1].circled = true;
        }
        if (!representative) continue;
        out.add_term(CircledTableau(std::move(rows)), c);
    }
    if (!(out.to_hc() == x))
        throw internal_error("element does not re-express in the circled double-coset basis");
    return out;
}

// ---------------------------------------------------------------------------
// gamma action and the super circle product
// ---------------------------------------------------------------------------

enum class GammaSide { left, right };

// right action: x . gamma_{lambda;i} = x gamma^R_{lambda;i} (the embedded
// element has m_lambda as its right factor); left action uses the weight mu
// and gamma^L_{mu;i} from the left
inline SuperHomSpaceElement gamma_action(const SuperHomSpaceElement& x, GammaSide side,
                                         int i) {
    HCElement z = x.to_hc();
    if (side == GammaSide::right)
        z = z * hc_gamma_R(x.ring(), x.lambda(), i);
    else
        z = hc_gamma_L(x.ring(), x.mu(), i) * z;
    return hc_to_circled_hom(z, x.lambda(), x.mu());
}

// A in M^c_{mid;nu}, B in M^c_{lambda;mid} (shape = right index of the
// embedding, weight = left): write embed(B) = m_mid * y with y a combination
// of T_w c^p, w minimal in S_mid w, then return embed(A) * y re-expressed in
// the circled basis
inline SuperHomSpaceElement super_circ_product(const SuperHomSpaceElement& a,
                                               const SuperHomSpaceElement& b) {
    Composition mid = a.lambda().normalized();
    if (!(mid == b.mu().normalized()))
        throw std::invalid_argument("super_circ_product middle index mismatch");
    const Ring& r = a.ring();
    int n = a.n();
    HCElement bh = b.to_hc();
    HCElement mmid = hc_parabolic(r, mid);
    Perm w0 = longest_in_young(mid);
    int l0 = w0.length();
    HCElement y = HCElement::zero(r, n);
    HCElement rem = bh;
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 1u << 22) throw internal_error("free-basis extraction does not terminate");
        auto best = rem.terms().begin();
        int best_len = best->first.second.length();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
            int l = it->first.second.length();
            if (l > best_len) {
                best = it;
                best_len = l;
            }
        }
        auto [mask, u] = best->first;
        Coefficient c = best->second;
        Perm w = w0 * u;
        if (l0 + w.length() != u.length() || !in_min_coset_reps(w.inverse(), mid))
            throw internal_error("element is not free over the parabolic subalgebra");
        Perm uinv = u.inverse();
        std::vector<int> p;
        for (int idx : mask_positions(mask)) p.push_back(uinv(idx));
        std::sort(p.begin(), p.end());
        int inv = 0;
        for (size_t s = 0; s < p.size(); ++s)
            for (size_t t = s + 1; t < p.size(); ++t)
                if (u(p[s]) > u(p[t])) ++inv;
        Coefficient kappa = (inv & 1) ? -c : c;
        HCElement z = HCElement::basis(r, 0, w) *
                      HCElement::basis(r, mask_from_positions(p), Perm::identity(n));
        y = y + kappa * z;
        rem = rem - kappa * (mmid * z);
    }
    if (!(mmid * y == bh)) throw internal_error("free-basis extraction failed to certify");
    return hc_to_circled_hom(a.to_hc() * y, b.lambda(), a.mu());
}

// ---------------------------------------------------------------------------
// super Specht quotients
// ---------------------------------------------------------------------------

// quotient of the free module on the circled tableaux Tab^c_{lambda;mu} by
// the images of all circle products factoring through a strictly dominating
// shape; fields only, echelon bookkeeping as in the Hecke case
class SuperSpechtQuotient {
public:
    SuperSpechtQuotient(const Composition& lambda, const Composition& mu, const Ring& ring)
        : ring_(ring), lambda_(lambda.normalized()), mu_(mu.normalized()) {
        if (!ring.is_field()) throw ring_error("super_specht_quotient needs a field ring");
        cols_ = enumerate_circled_tableaux(lambda_, mu_, CircledFlavor::circled);
        std::sort(cols_.begin(), cols_.end(),
                  [](const CircledTableau& x, const CircledTableau& y) {
                      int lx = tableau_to_perm(max_rep_tableau(x.underlying())).length();
                      int ly = tableau_to_perm(max_rep_tableau(y.underlying())).length();
                      if (lx != ly) return lx > ly;
                      return x < y;
                  });
        for (size_t i = 0; i < cols_.size(); ++i) index_[cols_[i]] = (int)i;

        int n = lambda_.n();
        bool full = false;
        for (const auto& nu : partitions_of(n)) {
            if (full) break;
            if (!dominance_lt(lambda_, nu)) continue;
            auto left = enumerate_circled_tableaux(nu, mu_, CircledFlavor::circled);
            auto right = enumerate_circled_tableaux(lambda_, nu, CircledFlavor::circled);
            for (const auto& rr : left) {
                if (full) break;
                SuperHomSpaceElement a = SuperHomSpaceElement::basis(ring_, rr);
                for (const auto& s : right) {
                    SuperHomSpaceElement v =
                        super_circ_product(a, SuperHomSpaceElement::basis(ring_, s));
                    relations_.push_back(v);
                    insert(coords(v));
                    if (rank() == (int)cols_.size()) {
                        full = true;
                        break;
                    }
                }
            }
        }
    }

    const Ring& ring() const { return ring_; }
    const Composition& lambda() const { return lambda_; }
    const Composition& mu() const { return mu_; }
    const std::vector<CircledTableau>& ambient() const { return cols_; }
    int ambient_dim() const { return (int)cols_.size(); }
    int rank() const { return (int)rows_.size(); }
    int dim() const { return ambient_dim() - rank(); }
    const std::vector<SuperHomSpaceElement>& relations() const { return relations_; }

    std::vector<Coefficient> coords(const SuperHomSpaceElement& x) const {
        if (!(x.lambda() == lambda_) || !(x.mu() == mu_))
            throw std::invalid_argument("element lives in a different hom-space");
        std::vector<Coefficient> v(cols_.size(), Coefficient::zero(ring_));
        for (const auto& [s, c] : x.terms()) v[index_.at(s)] = c;
        return v;
    }

    std::vector<Coefficient> reduce_coords(const SuperHomSpaceElement& x) const {
        auto v = coords(x);
        eliminate(v);
        return v;
    }

    SuperHomSpaceElement reduce(const SuperHomSpaceElement& x) const {
        auto v = reduce_coords(x);
        SuperHomSpaceElement out(ring_, lambda_, mu_);
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) out.add_term(cols_[i], v[i]);
        return out;
    }

    bool is_zero_class(const SuperHomSpaceElement& x) const {
        for (const auto& c : reduce_coords(x))
            if (!c.is_zero()) return false;
        return true;
    }

private:
    Ring ring_;
    Composition lambda_, mu_;
    std::vector<CircledTableau> cols_;
    std::map<CircledTableau, int> index_;
    std::vector<std::vector<Coefficient>> rows_;
    std::vector<int> pivot_;
    std::vector<SuperHomSpaceElement> relations_;

    void eliminate(std::vector<Coefficient>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            Coefficient c = v[pivot_[r]];  // copy: the loop overwrites v[pivot_[r]]
            if (c.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[r][j];
        }
    }

    void insert(std::vector<Coefficient> v) {
        eliminate(v);
        int p = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                p = (int)j;
                break;
            }
        if (p < 0) return;
        Coefficient inv = v[p].inverse();
        for (auto& c : v) c *= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            Coefficient c = rows_[r][p];  // copy for the same aliasing reason
            if (c.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) rows_[r][j] -= c * v[j];
        }
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
    }
};

inline SuperSpechtQuotient super_specht_quotient(const Composition& lambda,
                                                 const Composition& mu, const Ring& ring) {
    return SuperSpechtQuotient(lambda, mu, ring);
}

// add a fixed plain top row a_1 <= ... <= a_k to every term of each known
// relation of S^c_{lambda;mu} and confirm the result still vanishes in
// S^c_{(k,lambda);mu+}
inline bool super_check_add_top_row(const Composition& lambda, const Composition& mu,
                                    const std::vector<int>& entries, const Ring& ring) {
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] > entries[i + 1])
            throw std::invalid_argument("top-row entries must be weakly increasing");
    SuperSpechtQuotient src(lambda, mu, ring);

    std::vector<int> lp{(int)entries.size()};
    std::vector<int> lparts = lambda.normalized().parts();
    lp.insert(lp.end(), lparts.begin(), lparts.end());
    Composition lam2((std::vector<int>(lp)));
    std::vector<int> mp = mu.normalized().parts();
    for (int a : entries) {
        if ((int)mp.size() < a) mp.resize(a, 0);
        ++mp[a - 1];
    }
    Composition mu2((std::vector<int>(mp)));
    SuperSpechtQuotient dst(lam2, mu2, ring);

    for (const auto& rel : src.relations()) {
        SuperHomSpaceElement mapped(ring, lam2, mu2);
        for (const auto& [t, c] : rel.terms()) {
            std::vector<std::vector<CircledTableau::Entry>> rows;
            std::vector<CircledTableau::Entry> top;
            for (int a : entries) top.push_back({a, false});
            rows.push_back(std::move(top));
            for (const auto& row : t.rows()) rows.push_back(row);
            mapped.add_term(CircledTableau(std::move(rows)), c);
        }
        if (!dst.is_zero_class(mapped)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// row spans (field Gaussian elimination over coordinate vectors)
// ---------------------------------------------------------------------------

class RowSpan {
public:
    explicit RowSpan(const Ring& ring) : ring_(ring) {
        if (!ring.is_field()) throw ring_error("row span needs a field ring");
    }

    int rank() const { return (int)rows_.size(); }
    const std::vector<std::vector<Coefficient>>& rows() const { return rows_; }

    void reduce(std::vector<Coefficient>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            Coefficient c = v[pivot_[r]];  // copy
            if (c.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[r][j];
        }
    }

    // returns true if the vector enlarged the span
    bool insert(std::vector<Coefficient> v) {
        reduce(v);
        int p = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                p = (int)j;
                break;
            }
        if (p < 0) return false;
        Coefficient inv = v[p].inverse();
        for (auto& c : v) c *= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            Coefficient c = rows_[r][p];  // copy
            if (c.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) rows_[r][j] -= c * v[j];
        }
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

    bool contains(std::vector<Coefficient> v) const {
        reduce(v);
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    }

    bool contains_span(const RowSpan& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    const std::vector<int>& pivots() const { return pivot_; }

private:
    Ring ring_;
    std::vector<std::vector<Coefficient>> rows_;
    std::vector<int> pivot_;
};

// solve sum_i x_i A_i = b for the row list A (any solution); throws
// internal_error when inconsistent
inline std::vector<Coefficient> linear_solve_rows(const Ring& ring,
                                                  const std::vector<std::vector<Coefficient>>& a,
                                                  const std::vector<Coefficient>& b) {
    // eliminate on rows augmented with the standard basis to track the
    // combination; then express b against the echelon rows
    size_t m = a.size(), w = b.size();
    std::vector<std::vector<Coefficient>> rows;
    std::vector<int> pivot;
    std::vector<std::vector<Coefficient>> combo;
    for (size_t i = 0; i < m; ++i) {
        std::vector<Coefficient> v = a[i];
        std::vector<Coefficient> t(m, Coefficient::zero(ring));
        t[i] = Coefficient::one(ring);
        for (size_t r = 0; r < rows.size(); ++r) {
            Coefficient c = v[pivot[r]];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < w; ++j) v[j] -= c * rows[r][j];
            for (size_t j = 0; j < m; ++j) t[j] -= c * combo[r][j];
        }
        int p = -1;
        for (size_t j = 0; j < w; ++j)
            if (!v[j].is_zero()) {
                p = (int)j;
                break;
            }
        if (p < 0) continue;
        Coefficient inv = v[p].inverse();
        for (auto& c : v) c *= inv;
        for (auto& c : t) c *= inv;
        rows.push_back(std::move(v));
        combo.push_back(std::move(t));
        pivot.push_back(p);
    }
    std::vector<Coefficient> v = b;
    std::vector<Coefficient> x(m, Coefficient::zero(ring));
    for (size_t r = 0; r < rows.size(); ++r) {
        Coefficient c = v[pivot[r]];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < w; ++j) v[j] -= c * rows[r][j];
        for (size_t j = 0; j < m; ++j) x[j] += c * combo[r][j];
    }
    for (const auto& c : v)
        if (!c.is_zero()) throw internal_error("linear system is inconsistent");
    return x;
}

// ---------------------------------------------------------------------------
// the abstract Clifford algebra Gamma_lambda
// ---------------------------------------------------------------------------

// generated by gamma_1..gamma_r (one per row of lambda) with
// gamma_i^2 = a<<lambda_i>>, anticommuting, gamma_i = 0 when lambda_i = 0;
// elements stored on the ascending monomial basis (bitmask over rows)
class GammaElement {
public:
    GammaElement(Ring ring, Composition lambda)
        : ring_(std::move(ring)), lambda_(lambda.normalized()) {}

    static GammaElement zero(const Ring& r, const Composition& lambda) {
        return GammaElement(r, lambda);
    }
    static GammaElement unit(const Ring& r, const Composition& lambda) {
        GammaElement g(r, lambda);
        g.add_term(0, Coefficient::one(r));
        return g;
    }
    static GammaElement monomial(const Ring& r, const Composition& lambda,
                                 std::uint32_t mask) {
        GammaElement g = unit(r, lambda);
        for (int i : mask_positions(mask)) g = g.times_gamma(i);
        return g;
    }

    const Ring& ring() const { return ring_; }
    const Composition& lambda() const { return lambda_; }
    int rows() const { return lambda_.size(); }
    const std::map<std::uint32_t, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::uint32_t mask, const Coefficient& c) {
        if (c.is_zero()) return;
        if (mask >> rows()) throw std::invalid_argument("gamma mask out of range");
        auto [it, fresh] = terms_.emplace(mask, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const GammaElement& x, const GammaElement& y) {
        return x.lambda_ == y.lambda_ && x.terms_ == y.terms_;
    }
    friend GammaElement operator+(const GammaElement& x, const GammaElement& y) {
        GammaElement out = x;
        for (const auto& [m, c] : y.terms_) out.add_term(m, c);
        return out;
    }
    friend GammaElement operator-(const GammaElement& x, const GammaElement& y) {
        GammaElement out = x;
        for (const auto& [m, c] : y.terms_) out.add_term(m, -c);
        return out;
    }
    friend GammaElement operator*(const Coefficient& c, const GammaElement& x) {
        GammaElement out(x.ring_, x.lambda_);
        for (const auto& [m, d] : x.terms_) out.add_term(m, c * d);
        return out;
    }

    // right multiplication by gamma_i
    GammaElement times_gamma(int i) const {
        GammaElement out(ring_, lambda_);
        if (i < 1 || i > rows() || lambda_[i - 1] == 0) return out;  // gamma_i = 0
        Coefficient sq = Coefficient::a(ring_) * q2_integer(lambda_[i - 1], ring_);
        std::uint32_t bit = 1u << (i - 1);
        for (const auto& [m, c] : terms_) {
            std::uint32_t above = m & ~((bit << 1) - 1);
            Coefficient s = (std::popcount(above) & 1) ? -c : c;
            if (m & bit)
                out.add_term(m ^ bit, s * sq);
            else
                out.add_term(m | bit, s);
        }
        return out;
    }

    friend GammaElement operator*(const GammaElement& x, const GammaElement& y) {
        if (!(x.lambda_ == y.lambda_)) throw std::invalid_argument("gamma shape mismatch");
        GammaElement out(x.ring_, x.lambda_);
        for (const auto& [m, c] : y.terms_) {
            GammaElement cur = c * x;
            for (int i : mask_positions(m)) cur = cur.times_gamma(i);
            for (const auto& [m2, d] : cur.terms_) out.add_term(m2, d);
        }
        return out;
    }

    std::vector<Coefficient> coords() const {
        std::vector<Coefficient> v(1u << rows(), Coefficient::zero(ring_));
        for (const auto& [m, c] : terms_) v[m] = c;
        return v;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += factor_str(c);
            for (int i : mask_positions(m)) s += " g" + std::to_string(i);
        }
        return s;
    }

private:
    Ring ring_;
    Composition lambda_;
    std::map<std::uint32_t, Coefficient> terms_;
};

// realize a Gamma_lambda element as the right action on the class of the
// plain constant tableau in M^c_{lambda;lambda}
inline SuperHomSpaceElement gamma_to_hom(const GammaElement& g) {
    const Composition& lam = g.lambda();
    SuperHomSpaceElement out(g.ring(), lam, lam);
    SuperHomSpaceElement base =
        SuperHomSpaceElement::basis(g.ring(), CircledTableau::plain(selfdual_tableau(lam)));
    for (const auto& [m, c] : g.terms()) {
        SuperHomSpaceElement cur = c * base;
        for (int i : mask_positions(m)) cur = gamma_action(cur, GammaSide::right, i);
        out = out + cur;
    }
    return out;
}

// ---------------------------------------------------------------------------
// the ideals K_n, Theta_lambda, Delta_lambda
// ---------------------------------------------------------------------------

// K_n = ( (a(q-1)/[2])^s [n]! : 0 <= s <= n/2 ), in polynomial form; by
// convention K_n = (1) for n <= 1 (and for the n = -1 placeholder used by
// the Delta construction)
inline std::vector<Coefficient> K_ideal(int n, const Ring& r) {
    if (n <= 1) return {Coefficient::one(r)};
    std::vector<Coefficient> gens;
    for (int s = 0; 2 * s <= n; ++s) gens.push_back(even_ratio_power(s, n, r));
    return gens;
}

// Theta_lambda generators: gamma_i - gamma_j for every pair of equal parts
inline std::vector<GammaElement> theta_ideal(const Composition& lambda, const Ring& r) {
    Composition lam = lambda.normalized();
    std::vector<GammaElement> gens;
    for (int i = 1; i <= lam.size(); ++i)
        for (int j = i + 1; j <= lam.size(); ++j)
            if (lam[i - 1] == lam[j - 1])
                gens.push_back(GammaElement::monomial(r, lam, 1u << (i - 1)) -
                               GammaElement::monomial(r, lam, 1u << (j - 1)));
    return gens;
}

// the four-summand generator family of Delta_{lambda;i}, d = lambda_i - lambda_{i+1}:
//   K_d * {1, gamma_{i+1}}  and  K_{d-1} * (gamma_i - q^d gamma_{i+1}) * {1, gamma_{i+1}}
inline std::vector<GammaElement> delta_factor_generators(const Composition& lambda, int i,
                                                         const Ring& r) {
    Composition lam = lambda.normalized();
    int li = lam[i - 1], li1 = lam[i];  // lambda_{i+1} = 0 past the last row
    int d = li - li1;
    GammaElement one = GammaElement::unit(r, lam);
    GammaElement gi = GammaElement::monomial(r, lam, 1u << (i - 1));
    GammaElement gi1 = (i < lam.size()) ? GammaElement::monomial(r, lam, 1u << i)
                                        : GammaElement::zero(r, lam);
    GammaElement mixed = gi - Coefficient::q(r, d) * gi1;
    std::vector<GammaElement> gens;
    for (const auto& k : K_ideal(d, r)) {
        gens.push_back(k * one);
        gens.push_back(k * gi1);
    }
    for (const auto& k : K_ideal(d - 1, r)) {
        gens.push_back(k * mixed);
        gens.push_back(k * (mixed * gi1));
    }
    std::vector<GammaElement> out;
    for (auto& g : gens)
        if (!g.is_zero()) out.push_back(std::move(g));
    return out;
}

// Delta_lambda = Delta_{lambda;r} ... Delta_{lambda;1}: all ordered products
// of one generator per factor
inline std::vector<GammaElement> delta_ideal(const Composition& lambda, const Ring& r) {
    Composition lam = lambda.normalized();
    std::vector<GammaElement> prods{GammaElement::unit(r, lam)};
    for (int i = lam.size(); i >= 1; --i) {
        auto gens = delta_factor_generators(lam, i, r);
        std::vector<GammaElement> next;
        for (const auto& p : prods)
            for (const auto& g : gens) {
                GammaElement pg = p * g;
                if (!pg.is_zero()) next.push_back(std::move(pg));
            }
        prods = std::move(next);
    }
    return prods;
}

// span of the 2-sided ideal generated by the given elements, as a row span
// over the monomial coordinates of Gamma_lambda (field rings)
inline RowSpan gamma_ideal_span(const Ring& r, const Composition& lambda,
                                const std::vector<GammaElement>& gens) {
    Composition lam = lambda.normalized();
    RowSpan span(r);
    int nmono = 1 << lam.size();
    for (const auto& g : gens)
        for (std::uint32_t ml = 0; ml < (std::uint32_t)nmono; ++ml) {
            GammaElement left = GammaElement::monomial(r, lam, ml) * g;
            for (std::uint32_t mr = 0; mr < (std::uint32_t)nmono; ++mr)
                span.insert((left * GammaElement::monomial(r, lam, mr)).coords());
        }
    return span;
}

// plain linear span of a generator list
inline RowSpan gamma_linear_span(const Ring& r, const std::vector<GammaElement>& gens,
                                 int rows) {
    RowSpan span(r);
    for (const auto& g : gens) span.insert(g.coords());
    (void)rows;
    return span;
}

// ---------------------------------------------------------------------------
// the trace ideal J^c_lambda inside Gamma_lambda
// ---------------------------------------------------------------------------

struct SuperTraceIdeal {
    Composition lambda;
    std::vector<GammaElement> lifts;    // one Gamma-lift per circled tableau T
    int ideal_rank = 0;                 // rank of (lifts) + Theta as a 2-sided ideal span
    bool sandwich_lower = false;        // Delta^r + Theta inside J + Theta
    bool sandwich_upper = false;        // J + Theta inside Delta + Theta
};

// J^c_lambda: the coefficients of m_lambda * S^c_lambda read through the
// identification S^c_{lambda;lambda} = Gamma_lambda / Theta_lambda; the
// sandwich Delta^r + Theta <= J + Theta <= Delta + Theta is certified on the
// monomial coordinates
inline SuperTraceIdeal trace_ideal_Jc(const Composition& lambda, const Ring& ring) {
    if (!ring.is_field()) throw ring_error("trace_ideal_Jc needs a field ring");
    Composition lam = lambda.normalized();
    int n = lam.n();
    int r = lam.size();
    SuperTraceIdeal out;
    out.lambda = lam;

    SuperSpechtQuotient quot(lam, lam, ring);
    // reduced images of the gamma monomials
    std::vector<std::vector<Coefficient>> mono_img;
    for (std::uint32_t m = 0; m < (1u << r); ++m)
        mono_img.push_back(
            quot.reduce_coords(gamma_to_hom(GammaElement::monomial(ring, lam, m))));

    std::vector<int> ones(n, 1);
    Composition wt(ones);
    HCElement mlam = hc_parabolic(ring, lam);
    for (const auto& t : enumerate_circled_tableaux(lam, wt, CircledFlavor::circled)) {
        HCElement z = mlam * circled_to_hc(ring, t);
        SuperHomSpaceElement hom = hc_to_circled_hom(z, lam, lam);
        auto x = linear_solve_rows(ring, mono_img, quot.reduce_coords(hom));
        GammaElement g(ring, lam);
        for (std::uint32_t m = 0; m < (1u << r); ++m) g.add_term(m, x[m]);
        if (!g.is_zero()) out.lifts.push_back(std::move(g));
    }

    auto theta = theta_ideal(lam, ring);
    RowSpan theta_span = gamma_ideal_span(ring, lam, theta);

    std::vector<GammaElement> j_gens = out.lifts;
    for (const auto& g : theta) j_gens.push_back(g);
    RowSpan j_span = gamma_ideal_span(ring, lam, j_gens);
    out.ideal_rank = j_span.rank();

    auto delta = delta_ideal(lam, ring);
    std::vector<GammaElement> delta_theta = delta;
    for (const auto& g : theta) delta_theta.push_back(g);
    RowSpan delta_span = gamma_ideal_span(ring, lam, delta_theta);

    // Delta^r: iterated span-basis products of Delta with itself
    std::vector<GammaElement> power = delta;
    for (int k = 1; k < r; ++k) {
        RowSpan basis(ring);
        std::vector<GammaElement> reduced;
        for (const auto& g : power)
            if (basis.insert(g.coords())) reduced.push_back(g);
        std::vector<GammaElement> next;
        for (const auto& x : reduced)
            for (const auto& y : delta) {
                GammaElement xy = x * y;
                if (!xy.is_zero()) next.push_back(std::move(xy));
            }
        power = std::move(next);
    }
    std::vector<GammaElement> power_theta = power;
    for (const auto& g : theta) power_theta.push_back(g);
    RowSpan power_span = gamma_ideal_span(ring, lam, power_theta);

    out.sandwich_lower = j_span.contains_span(power_span);
    out.sandwich_upper = delta_span.contains_span(j_span);
    return out;
}

// ---------------------------------------------------------------------------
// classification of the simple supermodules
// ---------------------------------------------------------------------------

// is the image of g invertible in Gamma_lambda / Theta_lambda?  decided by
// the rank of the left-multiplication operator on the quotient coordinates
inline bool gamma_invertible_mod_theta(const GammaElement& g, const RowSpan& theta_span) {
    const Ring& ring = g.ring();
    const Composition& lam = g.lambda();
    int nmono = 1 << lam.size();
    // quotient coordinates: the non-pivot monomials of the Theta span
    std::vector<char> is_pivot(nmono, 0);
    for (int p : theta_span.pivots()) is_pivot[p] = 1;
    RowSpan image(ring);
    int qdim = 0;
    for (std::uint32_t m = 0; m < (std::uint32_t)nmono; ++m) {
        if (is_pivot[m]) continue;
        ++qdim;
        auto v = (g * GammaElement::monomial(ring, lam, m)).coords();
        theta_span.reduce(v);
        image.insert(std::move(v));
    }
    return qdim > 0 && image.rank() == qdim;
}

struct SuperSimpleEntry {
    Composition lambda;
    bool e2_strict = false;
    bool formula_restricted = false;
    bool simple_nonzero = false;
};

struct SuperSimpleCount {
    int n = 0;
    int e = 0;   // q-characteristic (0 = none up to the cap)
    int e2 = 0;  // <<.>>-characteristic
    int count = 0;
    std::vector<SuperSimpleEntry> table;
};

// equal adjacent parts are only allowed when divisible by m (m = 0 demands
// strictness outright)
inline bool is_m_strict(const Composition& lambda, int m) {
    Composition lam = lambda.normalized();
    for (int i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] == lam[i + 1] && (m == 0 || lam[i] % m != 0)) return false;
    return true;
}

// the closed-form restriction predicate from the classification corollaries,
// dispatched on the ring parameters
inline bool super_formula_restricted(const Composition& lambda, const Ring& ring, int e,
                                     int e2) {
    Composition lam = lambda.normalized();
    Coefficient two_a = Coefficient::integer(ring, 2) * Coefficient::a(ring);
    if (two_a.is_zero()) {
        // the Clifford part contributes a nilpotent ideal: Hecke classification
        return is_e_restricted(lam, e);
    }
    if (e != 2) {
        if (!is_m_strict(lam, e2)) return false;
        if (e == 0) return true;
        for (int i = 1; i <= lam.size(); ++i) {
            int d = lam[i - 1] - lam[i];
            bool div = e2 != 0 && lam[i - 1] % e2 == 0;
            if (div ? d >= e : d > e) return false;
        }
        return true;
    }
    // e = 2 (q = -1): the bound depends on the prime characteristic
    long long p = ring.kind == RingKind::FiniteField ? ring.p : 0;
    if (p == 0) return is_m_strict(lam, 0);
    if (!is_m_strict(lam, (int)p)) return false;
    for (int i = 1; i <= lam.size(); ++i) {
        int d = lam[i - 1] - lam[i];
        bool div = lam[i - 1] % p == 0;
        if (div ? d >= 2 * p : d > 2 * p) return false;
    }
    return true;
}

// classify every partition of n: the block of lambda contributes a simple
// supermodule iff Gamma_lambda / Theta_lambda is nonzero and some Delta
// generator becomes invertible in it (the quotient has a unique maximal
// 2-sided ideal, so this says exactly that (Delta+Theta)/Theta is the unit
// ideal)
inline SuperSimpleCount count_super_simples(int n, const Ring& ring) {
    if (!ring.is_field()) throw ring_error("count_super_simples needs a field ring");
    SuperSimpleCount out;
    out.n = n;
    out.e = q_characteristic(ring, 2 * n + 4);
    out.e2 = q2_characteristic(ring, 2 * n + 4);
    for (const auto& lam : partitions_of(n)) {
        SuperSimpleEntry entry;
        entry.lambda = lam;
        entry.e2_strict = is_m_strict(lam, out.e2);
        entry.formula_restricted = super_formula_restricted(lam, ring, out.e, out.e2);
        RowSpan theta_span = gamma_ideal_span(ring, lam, theta_ideal(lam, ring));
        int qdim = (1 << lam.size()) - theta_span.rank();
        bool nonzero = false;
        if (qdim > 0)
            for (const auto& g : delta_ideal(lam, ring))
                if (gamma_invertible_mod_theta(g, theta_span)) {
                    nonzero = true;
                    break;
                }
        entry.simple_nonzero = nonzero;
        if (nonzero) ++out.count;
        out.table.push_back(std::move(entry));
    }
    return out;
}

}  // namespace hcq
