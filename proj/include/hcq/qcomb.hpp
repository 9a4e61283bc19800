#pragma once

// q-combinatorial scalars: q-integers, q-factorials, q-multinomials,
// q^2-integers and the (a(q-1)/[2])^s ratio used by the gamma identities.

#include "hcq/ring.hpp"

namespace hcq {

// [k] = 1 + q + ... + q^{k-1}, with [0] = 0
inline Coefficient q_integer(int k, const Ring& r) {
    if (k < 0) throw ring_error("q_integer needs k >= 0");
    Coefficient s = Coefficient::zero(r);
    for (int i = 0; i < k; ++i) s += Coefficient::q(r, i);
    return s;
}

// [n]! = [1][2]...[n]
inline Coefficient q_factorial(int n, const Ring& r) {
    if (n < 0) throw ring_error("q_factorial needs n >= 0");
    Coefficient p = Coefficient::one(r);
    for (int k = 1; k <= n; ++k) p *= q_integer(k, r);
    return p;
}

// [[k]] = 1 + q^2 + ... + q^{2(k-1)}
inline Coefficient q2_integer(int k, const Ring& r) {
    if (k < 0) throw ring_error("q2_integer needs k >= 0");
    Coefficient s = Coefficient::zero(r);
    for (int i = 0; i < k; ++i) s += Coefficient::q(r, 2 * i);
    return s;
}

// [n]! / prod [parts_i]!, by exact division (always a polynomial)
inline Coefficient q_multinomial(int n, const std::vector<int>& parts, const Ring& r) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw ring_error("q_multinomial parts must be >= 0");
        sum += p;
    }
    if (sum != n) throw ring_error("q_multinomial parts must sum to n");
    if (r.kind == RingKind::IntegerLaurent) {
        Coefficient num = q_factorial(n, r), den = Coefficient::one(r);
        for (int p : parts) den *= q_factorial(p, r);
        return num.divexact(den);
    }
    // in specializations, compute the polynomial first, then specialize
    Ring zl = Ring::integer_laurent();
    return q_multinomial(n, parts, zl).to_ring(r);
}

// (a(q-1)/[2])^s as a ring element.  Only meaningful standalone in a field
// (or for s = 0); the polynomial combination with [n]! is below.
inline Coefficient even_ratio_power(int s, const Ring& r) {
    if (s < 0) throw ring_error("even_ratio_power needs s >= 0");
    if (s == 0) return Coefficient::one(r);
    if (!r.is_field())
        throw ring_error("even_ratio_power with s > 0 needs a field ring");
    Coefficient base =
        Coefficient::a(r) * (Coefficient::q(r) - Coefficient::one(r)) / q_integer(2, r);
    return base.pow_int(s);
}

// (a(q-1)/[2])^s [n]! as a polynomial: divide s of the even factors
// [2],[4],...,[2s] of [n]! by [2] (giving q^2-integers), then multiply by
// (a(q-1))^s.  Requires s <= n/2.
inline Coefficient even_ratio_power(int s, int n, const Ring& r) {
    if (s < 0 || n < 0) throw ring_error("even_ratio_power needs s, n >= 0");
    if (2 * s > n) throw ring_error("even_ratio_power needs s <= n/2");
    Coefficient p = Coefficient::one(r);
    for (int k = 1; k <= n; ++k) {
        if (k % 2 == 0 && k <= 2 * s)
            p *= q2_integer(k / 2, r);  // [2m]/[2] = [[m]]
        else
            p *= q_integer(k, r);
    }
    Coefficient aq1 = Coefficient::a(r) * (Coefficient::q(r) - Coefficient::one(r));
    return p * aq1.pow_int(s);
}

// q-characteristic: min k >= 1 with [k] = 0, or 0 when none up to the cap
inline int q_characteristic(const Ring& r, int cap) {
    for (int k = 1; k <= cap; ++k)
        if (q_integer(k, r).is_zero()) return k;
    return 0;
}

// q^2-characteristic: min k >= 1 with [[k]] = 0, or 0 when none up to the cap
inline int q2_characteristic(const Ring& r, int cap) {
    for (int k = 1; k <= cap; ++k)
        if (q2_integer(k, r).is_zero()) return k;
    return 0;
}

}  // namespace hcq
