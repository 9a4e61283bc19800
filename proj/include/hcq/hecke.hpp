#pragma once

// The Iwahori-Hecke algebra H_n(q) in the T_w basis, parabolic sums m_lambda,
// the hom-space elements m_S indexed by row-semistandard tableaux, the circle
// product, the canonical (nu, w) decomposition of a tableau, Specht quotients
// by the dominance filtration, the f_lambda trace-ideal sandwich and the
// Gram-matrix classification of simple modules.

#include "hcq/qcomb.hpp"
#include "hcq/tableaux.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace hcq {

// broken structural invariant (e.g. a product that fails to re-express in its
// double-coset basis); distinct from ring_error so callers can map it to a
// dedicated exit code
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// ---------------------------------------------------------------------------

class HeckeElement {
public:
    HeckeElement(Ring ring, int n) : ring_(std::move(ring)), n_(n) {}

    static HeckeElement zero(const Ring& r, int n) { return HeckeElement(r, n); }
    static HeckeElement unit(const Ring& r, int n) { return basis(r, Perm::identity(n)); }
    static HeckeElement basis(const Ring& r, const Perm& w) {
        HeckeElement x(r, w.n());
        x.add_term(w, Coefficient::one(r));
        return x;
    }
    // T_{s_i}
    static HeckeElement generator(const Ring& r, int i, int n) {
        return basis(r, Perm::s(i, n));
    }

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    const std::map<Perm, Coefficient>& terms() const { return terms_; }
    Coefficient coeff(const Perm& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Coefficient::zero(ring_) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Perm& w, const Coefficient& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const HeckeElement& x, const HeckeElement& y) {
        return x.n_ == y.n_ && x.terms_ == y.terms_;
    }
    friend HeckeElement operator+(const HeckeElement& x, const HeckeElement& y) {
        HeckeElement out = x;
        for (const auto& [w, c] : y.terms_) out.add_term(w, c);
        return out;
    }
    friend HeckeElement operator-(const HeckeElement& x, const HeckeElement& y) {
        HeckeElement out = x;
        for (const auto& [w, c] : y.terms_) out.add_term(w, -c);
        return out;
    }
    friend HeckeElement operator*(const Coefficient& c, const HeckeElement& x) {
        HeckeElement out(x.ring_, x.n_);
        for (const auto& [w, d] : x.terms_) out.add_term(w, c * d);
        return out;
    }

    // right multiplication by T_i: T_w T_i = T_{w s_i} when the length goes
    // up, q T_{w s_i} + (q-1) T_w otherwise
    HeckeElement times_Ti(int i) const {
        HeckeElement out(ring_, n_);
        Coefficient q = Coefficient::q(ring_);
        Coefficient qm1 = q - Coefficient::one(ring_);
        Perm si = Perm::s(i, n_);
        for (const auto& [w, c] : terms_) {
            Perm ws = w * si;
            if (!w.has_descent(i)) {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, c * q);
                out.add_term(w, c * qm1);
            }
        }
        return out;
    }

    friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("hecke rank mismatch");
        HeckeElement out(x.ring_, x.n_);
        for (const auto& [w, c] : y.terms_) {
            HeckeElement cur = x;
            for (int i : w.reduced_word()) cur = cur.times_Ti(i);
            for (const auto& [v, d] : cur.terms_) out.add_term(v, d * c);
        }
        return out;
    }

    // sorted term list "coeff * T[w]"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += factor_str(c) + " * T" + w.str();
        }
        return s;
    }

private:
    Ring ring_;
    int n_;
    std::map<Perm, Coefficient> terms_;
};

inline HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y) {
    return x * y;
}

// (T_w)^* = T_{w^{-1}}, extended linearly; an anti-automorphism
inline HeckeElement anti_involution(const HeckeElement& x) {
    HeckeElement out(x.ring(), x.n());
    for (const auto& [w, c] : x.terms()) out.add_term(w.inverse(), c);
    return out;
}

// T_w^{-1} built from T_i^{-1} = q^{-1} T_i - (1 - q^{-1}); needs q invertible
inline HeckeElement hecke_invert_Tw(const Ring& r, const Perm& w) {
    int n = w.n();
    Coefficient qi = Coefficient::q(r).inverse();
    Coefficient one = Coefficient::one(r);
    HeckeElement out = HeckeElement::unit(r, n);
    auto word = w.reduced_word();  // w = s_{i_1} ... s_{i_k}
    // T_w^{-1} = T_{i_k}^{-1} ... T_{i_1}^{-1}
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        HeckeElement ti = qi * HeckeElement::generator(r, *it, n);
        ti.add_term(Perm::identity(n), qi - one);
        out = out * ti;
    }
    return out;
}

// m_lambda = sum of T_w over the Young subgroup S_lambda
inline HeckeElement parabolic_generator(const Ring& r, const Composition& lambda) {
    HeckeElement out(r, lambda.n());
    for (const auto& w : young_subgroup(lambda)) out.add_term(w, Coefficient::one(r));
    return out;
}

// ---------------------------------------------------------------------------
// hom-space elements: formal combinations of the m_S, S in Tab_{lambda;mu}

// Tab_S: the row-standard tableaux T with T|_mu = S (the weight fiber)
inline std::vector<Tableau> weight_fiber(const Tableau& s) {
    if (!s.is_row_semistandard())
        throw std::invalid_argument("weight_fiber needs a row-semistandard tableau");
    std::vector<int> ones(s.n(), 1);
    Composition mu = s.weight();
    std::vector<Tableau> out;
    for (const auto& t :
         enumerate_tableaux(s.shape(), Composition(ones), TabFlavor::row_semistandard))
        if (restrict_weight(t, mu) == s) out.push_back(t);
    return out;
}

// m_S = sum of T_v over the double coset of S; assembled as
// sum over T in Tab_S of T_{d(T)} m_lambda (all coefficients 1)
inline HeckeElement double_coset_sum(const Ring& r, const Tableau& s) {
    HeckeElement out(r, s.n());
    auto sl = young_subgroup(s.shape());
    for (const auto& t : weight_fiber(s)) {
        Perm d = tableau_to_perm(t);
        for (const auto& v : sl) out.add_term(d * v, Coefficient::one(r));
    }
    return out;
}

class HomSpaceElement {
public:
    HomSpaceElement(Ring ring, Composition lambda, Composition mu)
        : ring_(std::move(ring)), lambda_(std::move(lambda)), mu_(std::move(mu)) {
        if (lambda_.n() != mu_.n()) throw std::invalid_argument("|lambda| != |mu|");
    }

    static HomSpaceElement basis(const Ring& r, const Tableau& s) {
        if (!s.is_row_semistandard())
            throw std::invalid_argument("hom-space basis tableau must be row-semistandard");
        HomSpaceElement x(r, s.shape(), s.weight());
        x.add_term(s, Coefficient::one(r));
        return x;
    }

    const Ring& ring() const { return ring_; }
    const Composition& lambda() const { return lambda_; }
    const Composition& mu() const { return mu_; }
    int n() const { return lambda_.n(); }
    const std::map<Tableau, Coefficient>& terms() const { return terms_; }
    Coefficient coeff(const Tableau& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Coefficient::zero(ring_) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Tableau& s, const Coefficient& c) {
        if (c.is_zero()) return;
        if (!(s.shape() == lambda_) || !(s.weight() == mu_))
            throw std::invalid_argument("tableau does not live in this hom-space");
        auto [it, fresh] = terms_.emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const HomSpaceElement& x, const HomSpaceElement& y) {
        return x.lambda_ == y.lambda_ && x.mu_ == y.mu_ && x.terms_ == y.terms_;
    }
    friend HomSpaceElement operator+(const HomSpaceElement& x, const HomSpaceElement& y) {
        HomSpaceElement out = x;
        for (const auto& [s, c] : y.terms_) out.add_term(s, c);
        return out;
    }
    friend HomSpaceElement operator-(const HomSpaceElement& x, const HomSpaceElement& y) {
        HomSpaceElement out = x;
        for (const auto& [s, c] : y.terms_) out.add_term(s, -c);
        return out;
    }
    friend HomSpaceElement operator*(const Coefficient& c, const HomSpaceElement& x) {
        HomSpaceElement out(x.ring_, x.lambda_, x.mu_);
        for (const auto& [s, d] : x.terms_) out.add_term(s, c * d);
        return out;
    }

    HeckeElement to_hecke() const {
        HeckeElement out(ring_, n());
        for (const auto& [s, c] : terms_) {
            HeckeElement ms = double_coset_sum(ring_, s);
            for (const auto& [w, d] : ms.terms()) out.add_term(w, c * d);
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
    std::map<Tableau, Coefficient> terms_;
};

// read a Hecke element known to lie in M_{lambda;mu} back in the m_S basis:
// the coefficient of m_S is the coefficient at T_{d(S_down)}, the minimal
// element of its double coset; then certify by multiplying back out
inline HomSpaceElement from_hecke(const HeckeElement& x, const Composition& lambda,
                                  const Composition& mu) {
    HomSpaceElement out(x.ring(), lambda, mu);
    for (const auto& s : enumerate_tableaux(lambda, mu, TabFlavor::row_semistandard)) {
        Coefficient c = x.coeff(tableau_to_perm(min_rep_tableau(s)));
        if (!c.is_zero()) out.add_term(s, c);
    }
    if (!(out.to_hecke() == x))
        throw internal_error("element does not re-express in the double-coset basis");
    return out;
}

// (m_S)^* = m_{S*}: swaps the roles of shape and weight
inline HomSpaceElement dual(const HomSpaceElement& x) {
    HomSpaceElement out(x.ring(), x.mu(), x.lambda());
    for (const auto& [s, c] : x.terms()) out.add_term(dual_tableau(s), c);
    return out;
}

// the circle product M_{mu;nu} x M_{lambda;mu} -> M_{lambda;nu}: write
// B = sum c_w m_mid T_w over w with w^{-1} minimal in its S_mid-coset (the
// free-basis extraction), then multiply A by sum c_w T_w
inline HomSpaceElement circ_product(const HomSpaceElement& a, const HomSpaceElement& b) {
    Composition mid = a.lambda();
    if (!(mid == b.mu())) throw std::invalid_argument("circ_product middle index mismatch");
    HeckeElement bh = b.to_hecke();
    HeckeElement y(b.ring(), b.n());
    for (const auto& [w, c] : bh.terms())
        if (in_min_coset_reps(w.inverse(), mid)) y.add_term(w, c);
    // certify the extraction: m_mid * y must reproduce b
    if (!(parabolic_generator(b.ring(), mid) * y == bh))
        throw internal_error("free-basis extraction failed");
    return from_hecke(a.to_hecke() * y, b.lambda(), a.mu());
}

// ---------------------------------------------------------------------------
// canonical decomposition m_S = m_mu o_nu m_{P_{w,nu}} o_{w nu} m_lambda

// nu lists the nonzero multiplicities #_{ij}(S) grouped by value j (so nu
// refines the weight mu); w nu lists them grouped by row i (refining the
// shape lambda); w sends the position of a cell in the row-grouped order to
// its position in the value-grouped order
inline std::pair<Composition, Perm> canonical_decomposition(const Tableau& s) {
    if (!s.is_row_semistandard())
        throw std::invalid_argument("canonical_decomposition needs row-semistandard input");
    Composition sh = s.shape(), wt = s.weight();
    std::vector<std::pair<int, int>> nu_cells, row_cells;
    for (int j = 1; j <= wt.size(); ++j)
        for (int i = 1; i <= sh.size(); ++i)
            if (s.count(i, j) > 0) nu_cells.push_back({i, j});
    for (int i = 1; i <= sh.size(); ++i)
        for (int j = 1; j <= wt.size(); ++j)
            if (s.count(i, j) > 0) row_cells.push_back({i, j});
    std::vector<int> nu, img;
    for (auto [i, j] : nu_cells) nu.push_back(s.count(i, j));
    for (const auto& cell : row_cells) {
        auto it = std::find(nu_cells.begin(), nu_cells.end(), cell);
        img.push_back((int)(it - nu_cells.begin()) + 1);
    }
    return {Composition(nu), Perm(img)};
}

// m_mu viewed in M_{nu;mu} for a refinement nu of mu: row k is constant at
// the block of mu that the k-th part of nu falls into
inline Tableau refinement_collapse_tableau(const Composition& nu, const Composition& mu) {
    auto block = refinement_blocks(nu, mu);
    auto nv = nu.normalized().parts();
    std::vector<std::vector<int>> rows;
    for (size_t k = 0; k < nv.size(); ++k)
        rows.push_back(std::vector<int>(nv[k], block[k]));
    return Tableau(std::move(rows));
}

// m_lambda viewed in M_{lambda;nu} for a refinement nu of lambda: row i is
// filled with the values of nu's block for that row, each value k repeated
// nu_k times
inline Tableau refinement_expand_tableau(const Composition& lambda, const Composition& nu) {
    auto block = refinement_blocks(nu, lambda);
    auto nv = nu.normalized().parts();
    std::vector<std::vector<int>> rows(lambda.normalized().size());
    for (size_t k = 0; k < nv.size(); ++k)
        for (int c = 0; c < nv[k]; ++c) rows[block[k] - 1].push_back((int)k + 1);
    return Tableau(std::move(rows));
}

// the three factors (left in M_{nu;mu}, middle in M_{w nu;nu}, right in
// M_{lambda;w nu}) whose circle product recomposes m_S
inline std::array<Tableau, 3> canonical_factors(const Tableau& s) {
    auto [nu, w] = canonical_decomposition(s);
    Tableau mid = permutation_tableau(w, nu);
    return {refinement_collapse_tableau(nu, s.weight()), mid,
            refinement_expand_tableau(s.shape(), mid.shape())};
}

// ---------------------------------------------------------------------------
// Specht quotients S_{lambda;mu} = M_{lambda;mu} / M^{>lambda}_{lambda;mu}

// The subspace M^{>lambda} is spanned by all circle products through M_nu for
// partitions nu strictly dominating lambda (non-partitions contribute nothing
// once q is invertible, which holds in every field ring here).  Row-reduced
// over the field with pivot columns ordered by (l(S_up) descending, then the
// row word), so canonical representatives are deterministic.
class SpechtQuotient {
public:
    SpechtQuotient(const Composition& lambda, const Composition& mu, const Ring& ring)
        : ring_(ring), lambda_(lambda.normalized()), mu_(mu.normalized()) {
        if (!ring.is_field()) throw ring_error("specht_quotient needs a field ring");
        cols_ = enumerate_tableaux(lambda_, mu_, TabFlavor::row_semistandard);
        std::sort(cols_.begin(), cols_.end(), [](const Tableau& x, const Tableau& y) {
            int lx = tableau_to_perm(max_rep_tableau(x)).length();
            int ly = tableau_to_perm(max_rep_tableau(y)).length();
            if (lx != ly) return lx > ly;
            return x.reading_word() < y.reading_word();
        });
        for (size_t i = 0; i < cols_.size(); ++i) index_[cols_[i]] = (int)i;

        int n = lambda_.n();
        bool full = false;
        for (const auto& nu : partitions_of(n)) {
            if (full) break;
            if (!dominance_lt(lambda_, nu)) continue;
            auto left = enumerate_tableaux(nu, mu_, TabFlavor::row_semistandard);
            auto right = enumerate_tableaux(lambda_, nu, TabFlavor::row_semistandard);
            for (const auto& r : left) {
                if (full) break;
                HomSpaceElement a = HomSpaceElement::basis(ring_, r);
                for (const auto& s : right) {
                    HomSpaceElement v = circ_product(a, HomSpaceElement::basis(ring_, s));
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
    const std::vector<Tableau>& ambient() const { return cols_; }
    int ambient_dim() const { return (int)cols_.size(); }
    int rank() const { return (int)rows_.size(); }
    int dim() const { return ambient_dim() - rank(); }
    // elements of M^{>lambda} gathered during construction (each is == 0 in
    // the quotient); handy as a source of relations
    const std::vector<HomSpaceElement>& relations() const { return relations_; }

    std::vector<Coefficient> coords(const HomSpaceElement& x) const {
        if (!(x.lambda() == lambda_) || !(x.mu() == mu_))
            throw std::invalid_argument("element lives in a different hom-space");
        std::vector<Coefficient> v(cols_.size(), Coefficient::zero(ring_));
        for (const auto& [s, c] : x.terms()) v[index_.at(s)] = c;
        return v;
    }

    std::vector<Coefficient> reduce_coords(const HomSpaceElement& x) const {
        auto v = coords(x);
        eliminate(v);
        return v;
    }

    HomSpaceElement reduce(const HomSpaceElement& x) const {
        auto v = reduce_coords(x);
        HomSpaceElement out(ring_, lambda_, mu_);
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) out.add_term(cols_[i], v[i]);
        return out;
    }

    bool is_zero_class(const HomSpaceElement& x) const {
        for (const auto& c : reduce_coords(x))
            if (!c.is_zero()) return false;
        return true;
    }

private:
    Ring ring_;
    Composition lambda_, mu_;
    std::vector<Tableau> cols_;
    std::map<Tableau, int> index_;
    std::vector<std::vector<Coefficient>> rows_;  // reduced row echelon form
    std::vector<int> pivot_;
    std::vector<HomSpaceElement> relations_;

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

// the tableau of shape and weight lambda with constant row i equal to i; its
// hom-space element embeds as m_lambda itself and spans S_{lambda;lambda}
inline Tableau selfdual_tableau(const Composition& lambda) {
    std::vector<std::vector<int>> rows;
    auto parts = lambda.normalized().parts();
    for (size_t i = 0; i < parts.size(); ++i)
        rows.push_back(std::vector<int>(parts[i], (int)i + 1));
    return Tableau(std::move(rows));
}

// for a one-dimensional S_{lambda;lambda}: the scalar c with [x] = c [m_lambda]
inline Coefficient selfdual_scalar(const SpechtQuotient& quot, const HomSpaceElement& x) {
    if (quot.dim() != 1) throw std::invalid_argument("selfdual_scalar needs a 1-dim quotient");
    auto r1 = quot.reduce_coords(x);
    auto r0 = quot.reduce_coords(
        HomSpaceElement::basis(quot.ring(), selfdual_tableau(quot.lambda())));
    for (size_t i = 0; i < r0.size(); ++i)
        if (!r0[i].is_zero()) return r1[i] / r0[i];
    throw internal_error("m_lambda vanishes in its own Specht quotient");
}

// ---------------------------------------------------------------------------
// local transformations (row additions and the two-row scalar identity)

// add a fixed top row a_1 <= ... <= a_k to every term of each known relation
// of S_{lambda;mu} and confirm the result still vanishes in S_{(k,lambda);mu+}
inline bool check_add_top_row(const Composition& lambda, const Composition& mu,
                              const std::vector<int>& entries, const Ring& ring) {
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] > entries[i + 1])
            throw std::invalid_argument("top-row entries must be weakly increasing");
    SpechtQuotient src(lambda, mu, ring);

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
    SpechtQuotient dst(lam2, mu2, ring);

    for (const auto& rel : src.relations()) {
        HomSpaceElement mapped(ring, lam2, mu2);
        for (const auto& [t, c] : rel.terms()) {
            std::vector<std::vector<int>> rows{entries};
            for (const auto& row : t.rows()) rows.push_back(row);
            mapped.add_term(Tableau(std::move(rows)), c);
        }
        if (!dst.is_zero_class(mapped)) return false;
    }
    return true;
}

// join a bar of l copies of a (a at least every entry) to the bottom row,
// weighting each term by the q-binomial [#_{ra}(T)+l choose l]
inline bool check_add_bottom_bar(const Composition& lambda, const Composition& mu, int a,
                                 int l, const Ring& ring) {
    if (a < mu.normalized().size())
        throw std::invalid_argument("bar entry must be >= every entry of the weight");
    if (l < 1) throw std::invalid_argument("bar length must be positive");
    SpechtQuotient src(lambda, mu, ring);

    std::vector<int> lp = lambda.normalized().parts();
    if (lp.empty()) throw std::invalid_argument("empty shape");
    int r = (int)lp.size();
    lp.back() += l;
    Composition lam2((std::vector<int>(lp)));
    std::vector<int> mp = mu.normalized().parts();
    if ((int)mp.size() < a) mp.resize(a, 0);
    mp[a - 1] += l;
    Composition mu2((std::vector<int>(mp)));
    SpechtQuotient dst(lam2, mu2, ring);

    for (const auto& rel : src.relations()) {
        HomSpaceElement mapped(ring, lam2, mu2);
        for (const auto& [t, c] : rel.terms()) {
            int m = t.count(r, a);
            auto rows = t.rows();
            for (int i = 0; i < l; ++i) rows[r - 1].push_back(a);
            mapped.add_term(Tableau(std::move(rows)),
                            c * q_multinomial(m + l, {m, l}, ring));
        }
        if (!dst.is_zero_class(mapped)) return false;
    }
    return true;
}

// two-row identity: for lambda=(n-k,k), mu=(n-l,l) and T_i the tableau with
// #_{21}(T_i)=i, m_{T_i} = (-1)^i q^{i(i-1)/2} [k choose i] m_{T_0}
inline bool check_scalar_lemma(int n, int k, int l, int i, const Ring& ring) {
    if (!(0 <= k && k <= l && l <= n) || i < 0 || i > k)
        throw std::invalid_argument("scalar lemma needs 0 <= i <= k <= l <= n");
    if (n - l - i < 0 || l - k + i < 0)
        throw std::invalid_argument("tableau T_i does not exist for these parameters");
    Composition lambda({n - k, k}), mu({n - l, l});
    auto two_row = [&](int ones_below) {
        std::vector<int> top, bot;
        top.insert(top.end(), n - l - ones_below, 1);
        top.insert(top.end(), l - k + ones_below, 2);
        bot.insert(bot.end(), ones_below, 1);
        bot.insert(bot.end(), k - ones_below, 2);
        return Tableau({top, bot});
    };
    if (n - l < 0 || l - k < 0) throw std::invalid_argument("bad parameters");
    SpechtQuotient quot(lambda, mu, ring);
    HomSpaceElement lhs = HomSpaceElement::basis(ring, two_row(i));
    Coefficient scale = q_multinomial(k, {i, k - i}, ring) *
                        Coefficient::q(ring, i * (i - 1) / 2) *
                        Coefficient::integer(ring, i % 2 == 0 ? 1 : -1);
    HomSpaceElement rhs = scale * HomSpaceElement::basis(ring, two_row(0));
    return quot.is_zero_class(lhs - rhs);
}

// ---------------------------------------------------------------------------
// trace ideal, Gram matrices and the count of simple modules

// f_lambda = [lambda_1-lambda_2]! [lambda_2-lambda_3]! ... [lambda_r]!
inline Coefficient f_lambda(const Composition& lambda, const Ring& r) {
    if (!lambda.is_partition()) throw std::invalid_argument("f_lambda needs a partition");
    auto parts = lambda.normalized().parts();
    Coefficient out = Coefficient::one(r);
    for (size_t i = 0; i < parts.size(); ++i) {
        int next = i + 1 < parts.size() ? parts[i + 1] : 0;
        out *= q_factorial(parts[i] - next, r);
    }
    return out;
}

// the class of m_lambda T_{d} m_lambda in S_{lambda;lambda} = k m_lambda
inline Coefficient pairing_scalar(const SpechtQuotient& quot, const HeckeElement& mlam,
                                  const Perm& d) {
    HeckeElement x = (mlam * HeckeElement::basis(quot.ring(), d)) * mlam;
    return selfdual_scalar(quot, from_hecke(x, quot.lambda(), quot.lambda()));
}

// J_lambda = m_lambda . S_lambda inside S_{lambda;lambda}: generator scalars
// c_T for T in Tab_lambda, computed over the fraction field and certified
// Laurent-integral, plus the explicit witness tableau whose scalar divides
// f_lambda^r
struct TraceIdeal {
    Composition lambda;
    Coefficient f;                        // f_lambda in Z[a,q^{+-}]
    std::vector<Coefficient> generators;  // the nonzero c_T
    Coefficient witness;                  // c at the staircase-multiplicity tableau
    int r;                                // number of parts
};

// row-semistandard witness with #_{ij} = lambda_{i+j-1} - lambda_{i+j}
inline Tableau trace_witness_tableau(const Composition& lambda) {
    auto parts = lambda.normalized().parts();
    int r = (int)parts.size();
    std::vector<std::vector<int>> rows(r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; i + j - 1 <= r; ++j) {
            int next = i + j < (int)parts.size() + 1 ? parts[i + j - 1] : 0;
            int mult = parts[i + j - 2] - next;
            for (int c = 0; c < mult; ++c) rows[i - 1].push_back(j);
        }
    return Tableau(std::move(rows));
}

inline TraceIdeal trace_ideal_J(const Composition& lambda) {
    if (!lambda.is_partition()) throw std::invalid_argument("trace_ideal_J needs a partition");
    Ring zl = Ring::integer_laurent(), fr = Ring::fraction_field();
    int n = lambda.n();
    SpechtQuotient quot(lambda, lambda, fr);
    HeckeElement mlam = parabolic_generator(fr, lambda);

    TraceIdeal out{lambda.normalized(), f_lambda(lambda, zl), {}, Coefficient::zero(zl),
                   lambda.normalized().size()};
    std::vector<int> ones(n, 1);
    for (const auto& t :
         enumerate_tableaux(lambda, Composition(ones), TabFlavor::row_semistandard)) {
        Coefficient c = pairing_scalar(quot, mlam, tableau_to_perm(t));
        if (!c.is_zero()) out.generators.push_back(Coefficient::frac_to_laurent(c));
    }
    Perm dw = tableau_to_perm(min_rep_tableau(trace_witness_tableau(lambda)));
    out.witness = Coefficient::frac_to_laurent(pairing_scalar(quot, mlam, dw));
    return out;
}

// every generator is a multiple of f_lambda
inline bool trace_ideal_f_divides(const TraceIdeal& ideal) {
    for (const auto& g : ideal.generators)
        if (!ideal.f.divides(g)) return false;
    return true;
}

// f_lambda^r is in the ideal: the witness scalar divides it
inline bool trace_ideal_contains_f_power(const TraceIdeal& ideal) {
    if (ideal.witness.is_zero()) return ideal.f.is_zero();
    return ideal.witness.divides(ideal.f.pow_int(ideal.r));
}

// Gram pairing of the standard bases of S*_lambda and S_lambda:
// G[S][T] = scalar of m_lambda T_{d(S)^{-1}} T_{d(T)} m_lambda
inline std::vector<std::vector<Coefficient>> gram_matrix(const Composition& lambda,
                                                         const Ring& ring) {
    if (!lambda.is_partition()) throw std::invalid_argument("gram_matrix needs a partition");
    if (!ring.is_field()) throw ring_error("gram_matrix needs a field ring");
    int n = lambda.n();
    std::vector<int> ones(n, 1);
    auto std_tabs = enumerate_tableaux(lambda, Composition(ones), TabFlavor::semistandard);
    SpechtQuotient quot(lambda, lambda, ring);
    HeckeElement mlam = parabolic_generator(ring, lambda);
    std::vector<std::vector<Coefficient>> g;
    for (const auto& s : std_tabs) {
        HeckeElement left = mlam * HeckeElement::basis(ring, tableau_to_perm(s).inverse());
        std::vector<Coefficient> row;
        for (const auto& t : std_tabs) {
            HeckeElement x = (left * HeckeElement::basis(ring, tableau_to_perm(t))) * mlam;
            row.push_back(selfdual_scalar(quot, from_hecke(x, lambda, lambda)));
        }
        g.push_back(std::move(row));
    }
    return g;
}

inline int matrix_rank(std::vector<std::vector<Coefficient>> m) {
    int rank = 0;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (size_t c = 0, r = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Coefficient inv = m[r][c].inverse();
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Coefficient f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// simple modules of H_n over the given field: one for each partition whose
// Gram matrix has positive rank (the rank is the dimension of the simple)
struct SimpleCount {
    int count = 0;
    std::vector<std::pair<Composition, int>> ranks;  // per-partition Gram rank
};

inline SimpleCount count_simples(int n, const Ring& ring) {
    SimpleCount out;
    for (const auto& lambda : partitions_of(n)) {
        int r = matrix_rank(gram_matrix(lambda, ring));
        out.ranks.push_back({lambda, r});
        if (r > 0) ++out.count;
    }
    return out;
}

// e-restricted: all successive differences < e (e = 0 means no constraint)
inline bool is_e_restricted(const Composition& lambda, int e) {
    if (e == 0) return true;
    auto parts = lambda.normalized().parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        int next = i + 1 < parts.size() ? parts[i + 1] : 0;
        if (parts[i] - next >= e) return false;
    }
    return true;
}

}  // namespace hcq
