#pragma once

// Symmetric group combinatorics: permutations in one-line notation (left
// action on positions), lengths, reduced words, compositions, parabolic
// subgroups, minimal coset and double-coset representatives, dominance.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcq {

class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size() + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > (int)img_.size() || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = 1;
        }
    }

    static Perm identity(int n) { return Perm(n); }
    // adjacent transposition s_i = (i, i+1), 1 <= i <= n-1
    static Perm s(int i, int n) {
        Perm p(n);
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }

    int n() const { return (int)img_.size(); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    friend bool operator==(const Perm& x, const Perm& y) { return x.img_ == y.img_; }
    friend auto operator<=>(const Perm& x, const Perm& y) { return x.img_ <=> y.img_; }

    // (x*y)(i) = x(y(i))
    friend Perm operator*(const Perm& x, const Perm& y) {
        if (x.n() != y.n()) throw std::invalid_argument("rank mismatch");
        Perm r;
        r.img_.resize(x.n());
        for (int i = 1; i <= x.n(); ++i) r.img_[i - 1] = x(y(i));
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(n());
        for (int i = 1; i <= n(); ++i) r.img_[img_[i - 1] - 1] = i;
        return r;
    }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (img_[i - 1] != i) return false;
        return true;
    }

    // inversion count
    int length() const {
        int l = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (img_[j] < img_[i]) ++l;
        return l;
    }

    // deterministic reduced word (bubble-sort convention); multiplies to w
    // as s_{i_1} * s_{i_2} * ... * s_{i_r}
    std::vector<int> reduced_word() const {
        std::vector<int> w = img_, word;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i + 1 < (int)w.size(); ++i) {
                if (w[i] > w[i + 1]) {
                    std::swap(w[i], w[i + 1]);
                    word.push_back(i + 1);
                    moved = true;
                }
            }
        }
        // w * s_{i_1} * ... * s_{i_k} = id, so w = s_{i_k} ... s_{i_1}
        std::reverse(word.begin(), word.end());
        return word;
    }

    // w(i) > w(i+1)?
    bool has_descent(int i) const { return img_[i - 1] > img_[i]; }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < n(); ++i) {
            if (i) s += ",";
            s += std::to_string(img_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> img_;
};

// ---------------------------------------------------------------------------

class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return (int)parts_.size(); }
    int operator[](int i) const { return i < size() ? parts_[i] : 0; }  // 0-based
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // equality ignores trailing zeros
    friend bool operator==(const Composition& x, const Composition& y) {
        return x.normalized().parts_ == y.normalized().parts_;
    }
    friend auto operator<=>(const Composition& x, const Composition& y) {
        return x.normalized().parts_ <=> y.normalized().parts_;
    }

    Composition normalized() const {
        Composition c = *this;
        while (!c.parts_.empty() && c.parts_.back() == 0) c.parts_.pop_back();
        return c;
    }
    Composition without_zeros() const {
        Composition c;
        for (int p : parts_)
            if (p > 0) c.parts_.push_back(p);
        return c;
    }

    bool is_partition() const {
        auto c = without_zeros();  // internal zeros also disqualify unless trailing
        // a partition must be weakly decreasing including any internal zeros
        auto nz = normalized();
        for (int i = 0; i + 1 < nz.size(); ++i)
            if (nz.parts_[i] < nz.parts_[i + 1]) return false;
        return true;
    }
    bool is_strict_partition() const {
        auto nz = normalized();
        for (int i = 0; i + 1 < nz.size(); ++i)
            if (nz.parts_[i] <= nz.parts_[i + 1]) return false;
        return true;
    }

    // first row index (1-based) of each part's block in 1..n, plus sentinel
    std::vector<int> offsets() const {
        std::vector<int> off{0};
        for (int p : parts_) off.push_back(off.back() + p);
        return off;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    void validate() const {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("negative part");
    }
};

// all partial sums of x are <= those of y (padding with zeros)
inline bool dominance_le(const Composition& x, const Composition& y) {
    if (x.n() != y.n()) throw std::invalid_argument("dominance needs equal size");
    int k = std::max(x.size(), y.size());
    int sx = 0, sy = 0;
    for (int i = 0; i < k; ++i) {
        sx += x[i];
        sy += y[i];
        if (sx > sy) return false;
    }
    return true;
}
inline bool dominance_lt(const Composition& x, const Composition& y) {
    return dominance_le(x, y) && !(x == y);
}

// ---------------------------------------------------------------------------

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// generator indices of the Young subgroup S_lambda
inline std::vector<int> parabolic_generators(const Composition& lambda) {
    std::vector<int> gens;
    auto off = lambda.offsets();
    for (int b = 0; b < lambda.size(); ++b)
        for (int i = off[b] + 1; i < off[b + 1]; ++i) gens.push_back(i);
    return gens;
}

// all elements of S_lambda (as permutations of 1..n)
inline std::vector<Perm> young_subgroup(const Composition& lambda) {
    int n = lambda.n();
    auto off = lambda.offsets();
    std::vector<Perm> out{Perm::identity(n)};
    for (int b = 0; b < lambda.size(); ++b) {
        int lo = off[b] + 1, hi = off[b + 1];
        if (hi - lo < 1) continue;
        std::vector<int> block(hi - lo + 1);
        std::iota(block.begin(), block.end(), lo);
        std::vector<Perm> next;
        do {
            for (const auto& w : out) {
                std::vector<int> img = w.images();
                for (int i = lo; i <= hi; ++i) img[i - 1] = w(block[i - lo]);
                next.push_back(Perm(img));
            }
        } while (std::next_permutation(block.begin(), block.end()));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// D_lambda: w with l(w s_i) > l(w) for all s_i in S_lambda, i.e. no descent
// at any generator of the Young subgroup.  Lexicographic traversal at desk
// scale.
inline std::vector<Perm> min_coset_reps(const Composition& lambda) {
    std::vector<Perm> out;
    auto gens = parabolic_generators(lambda);
    for (const auto& w : all_perms(lambda.n())) {
        bool ok = true;
        for (int i : gens)
            if (w.has_descent(i)) {  // l(w s_i) < l(w) iff w(i) > w(i+1)
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

inline bool in_min_coset_reps(const Perm& w, const Composition& lambda) {
    for (int i : parabolic_generators(lambda))
        if (w.has_descent(i)) return false;
    return true;
}

// D_lambda intersect D_mu^{-1}
inline std::vector<Perm> double_coset_reps(const Composition& lambda,
                                           const Composition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("rank mismatch");
    std::vector<Perm> out;
    for (const auto& w : min_coset_reps(lambda))
        if (in_min_coset_reps(w.inverse(), mu)) out.push_back(w);
    return out;
}

// longest element of D_lambda: fill positions bottom block to top block
inline Perm longest_rep(const Composition& lambda) {
    int n = lambda.n();
    auto off = lambda.offsets();
    std::vector<int> img(n);
    int next = 1;
    for (int b = lambda.size() - 1; b >= 0; --b)
        for (int i = off[b] + 1; i <= off[b + 1]; ++i) img[i - 1] = next++;
    return Perm(img);
}

// unique factorization w = u * v, u in D_lambda, v in S_lambda, lengths add
inline std::pair<Perm, Perm> coset_factor(const Perm& w, const Composition& lambda) {
    Perm v = Perm::identity(w.n());
    Perm u = w;
    bool moved = true;
    auto gens = parabolic_generators(lambda);
    while (moved) {
        moved = false;
        for (int i : gens) {
            if (u.has_descent(i)) {
                Perm si = Perm::s(i, w.n());
                u = u * si;
                v = si * v;
                moved = true;
            }
        }
    }
    return {u, v};
}

// ---------------------------------------------------------------------------
// composition enumeration helpers (used by filtrations and the CLI)

// all compositions of n with strictly positive parts
inline std::vector<Composition> compositions_positive(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(Composition(cur));
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

inline std::vector<Composition> partitions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.push_back(Composition(cur));
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// nu refines mu: consecutive blocks of nu sum to the parts of mu
inline bool is_refinement(const Composition& nu, const Composition& mu) {
    auto nv = nu.normalized().parts();
    auto mv = mu.normalized().parts();
    size_t i = 0;
    for (int part : mv) {
        int acc = 0;
        while (acc < part) {
            if (i >= nv.size()) return false;
            acc += nv[i++];
        }
        if (acc != part) return false;
    }
    // any leftover entries of nu must be zeros, which normalization removed
    return i == nv.size();
}

}  // namespace hcq
