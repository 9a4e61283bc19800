// Verification harness for filtered-algebra axioms over concrete
// structure-constant algebras: ideal filters, rigidity, Morita-context
// layers and standard bases.  Instances carry a finite basis with a
// multiplication oracle, a finite poset of labels, per-label ideal spanning
// sets and per-label layer data (M, N, B spanning sets).  All checks are
// exact linear algebra over a field; superalgebras are handled by
// forgetting parity for span computations while the multiplication oracle
// keeps the signs.
#pragma once

#include "hcq/clifford.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hcq {

// layer data for one label: spanning sets of the left module M, the right
// module N and the base algebra B, all written in algebra coordinates
struct MoritaLayer {
    std::vector<std::vector<Coefficient>> M;
    std::vector<std::vector<Coefficient>> N;
    std::vector<std::vector<Coefficient>> B;
};

struct FilteredAlgebraInstance {
    Ring ring;
    int dim = 0;
    // product of basis elements i and j as a coordinate vector
    std::function<std::vector<Coefficient>(int, int)> mul;
    std::vector<std::string> labels;
    // leq[i][j]: label i is below label j in the filter order
    std::vector<std::vector<bool>> leq;
    // spanning set of the ideal attached to each label
    std::vector<std::vector<std::vector<Coefficient>>> ideal;
    std::vector<MoritaLayer> layer;

    std::vector<Coefficient> multiply(const std::vector<Coefficient>& x,
                                      const std::vector<Coefficient>& y) const {
        std::vector<Coefficient> out(dim, Coefficient::zero(ring));
        for (int i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                Coefficient c = x[i] * y[j];
                const std::vector<Coefficient>& p = product(i, j);
                for (int k = 0; k < dim; ++k)
                    if (!p[k].is_zero()) out[k] += c * p[k];
            }
        }
        return out;
    }

    const std::vector<Coefficient>& product(int i, int j) const {
        auto it = cache_.find({i, j});
        if (it == cache_.end()) it = cache_.emplace(std::pair{i, j}, mul(i, j)).first;
        return it->second;
    }

private:
    mutable std::map<std::pair<int, int>, std::vector<Coefficient>> cache_;
};

struct AxiomReport {
    std::string axiom;
    bool pass = true;
    std::string witness;  // empty on pass
};

inline bool all_pass(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

namespace cellcheck_detail {

using Vec = std::vector<Coefficient>;

inline RowSpan span_of(const FilteredAlgebraInstance& inst, const std::vector<Vec>& rows) {
    RowSpan s(inst.ring);
    for (const auto& v : rows) s.insert(v);
    return s;
}

// span of the ideals strictly below label l
inline RowSpan lower_span(const FilteredAlgebraInstance& inst, int l) {
    RowSpan s(inst.ring);
    for (int m = 0; m < (int)inst.labels.size(); ++m)
        if (m != l && inst.leq[m][l])
            for (const auto& v : inst.ideal[m]) s.insert(v);
    return s;
}

inline Vec basis_vec(const FilteredAlgebraInstance& inst, int i) {
    Vec v(inst.dim, Coefficient::zero(inst.ring));
    v[i] = Coefficient::one(inst.ring);
    return v;
}

// rank of span(rows) on top of an existing span (the base is not modified)
inline int rank_above(RowSpan base, const std::vector<Vec>& rows) {
    int r0 = base.rank();
    for (const auto& v : rows) base.insert(v);
    return base.rank() - r0;
}

// reusable echelon form with combination tracking: solves sum x_i a_i = b
// repeatedly without re-eliminating
class LinearSolver {
public:
    LinearSolver(const Ring& ring, const std::vector<Vec>& a)
        : ring_(ring), m_(a.size()) {
        for (size_t i = 0; i < m_; ++i) {
            Vec v = a[i];
            Vec t(m_, Coefficient::zero(ring_));
            t[i] = Coefficient::one(ring_);
            reduce(v, t);
            int p = pivot_of(v);
            if (p < 0) continue;
            Coefficient inv = v[p].inverse();
            for (auto& c : v) c *= inv;
            for (auto& c : t) c *= inv;
            rows_.push_back(std::move(v));
            combo_.push_back(std::move(t));
            pivot_.push_back(p);
        }
    }

    Vec solve(const Vec& b) const {
        Vec v = b;
        Vec x(m_, Coefficient::zero(ring_));
        for (size_t r = 0; r < rows_.size(); ++r) {
            Coefficient c = v[pivot_[r]];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[r][j];
            for (size_t j = 0; j < m_; ++j) x[j] += c * combo_[r][j];
        }
        for (const auto& c : v)
            if (!c.is_zero()) throw internal_error("linear system is inconsistent");
        return x;
    }

private:
    Ring ring_;
    size_t m_;
    std::vector<Vec> rows_, combo_;
    std::vector<int> pivot_;

    void reduce(Vec& v, Vec& t) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            Coefficient c = v[pivot_[r]];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[r][j];
            for (size_t j = 0; j < m_; ++j) t[j] -= c * combo_[r][j];
        }
    }
    static int pivot_of(const Vec& v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return (int)j;
        return -1;
    }
};

}  // namespace cellcheck_detail

// ---------------------------------------------------------------------------
// ideal filter axioms: each span is a two-sided ideal, the filter is
// monotone along the label order, the top spans cover the algebra, and
// products drop into common lower labels
// ---------------------------------------------------------------------------

inline std::vector<AxiomReport> verify_ideal_filter(const FilteredAlgebraInstance& inst) {
    using namespace cellcheck_detail;
    std::vector<AxiomReport> out;
    int nl = (int)inst.labels.size();

    // reduced spanning rows per label
    std::vector<RowSpan> spans;
    for (int l = 0; l < nl; ++l) spans.push_back(span_of(inst, inst.ideal[l]));

    {
        AxiomReport rep{"ideal-closure", true, ""};
        for (int l = 0; l < nl && rep.pass; ++l) {
            if (spans[l].rank() == inst.dim) continue;  // the whole algebra
            for (const auto& g : spans[l].rows()) {
                for (int i = 0; i < inst.dim; ++i) {
                    Vec e = basis_vec(inst, i);
                    if (!spans[l].contains(inst.multiply(e, g)) ||
                        !spans[l].contains(inst.multiply(g, e))) {
                        rep.pass = false;
                        rep.witness = "label " + inst.labels[l] +
                                      ": product with basis element " +
                                      std::to_string(i + 1) + " leaves the span";
                        break;
                    }
                }
                if (!rep.pass) break;
            }
        }
        out.push_back(std::move(rep));
    }

    {
        AxiomReport rep{"monotonicity", true, ""};
        for (int m = 0; m < nl && rep.pass; ++m)
            for (int l = 0; l < nl; ++l)
                if (inst.leq[m][l] && !spans[l].contains_span(spans[m])) {
                    rep.pass = false;
                    rep.witness = "span of " + inst.labels[m] +
                                  " is not inside span of " + inst.labels[l];
                    break;
                }
        out.push_back(std::move(rep));
    }

    {
        AxiomReport rep{"covering", true, ""};
        RowSpan all(inst.ring);
        for (int l = 0; l < nl; ++l)
            for (const auto& v : inst.ideal[l]) all.insert(v);
        if (all.rank() != inst.dim) {
            rep.pass = false;
            rep.witness = "union of the spans has rank " + std::to_string(all.rank()) +
                          " < " + std::to_string(inst.dim);
        }
        out.push_back(std::move(rep));
    }

    {
        AxiomReport rep{"product-condition", true, ""};
        for (int l = 0; l < nl && rep.pass; ++l)
            for (int m = 0; m < nl && rep.pass; ++m) {
                RowSpan target(inst.ring);
                for (int k = 0; k < nl; ++k)
                    if (inst.leq[k][l] && inst.leq[k][m])
                        for (const auto& v : inst.ideal[k]) target.insert(v);
                if (target.rank() == inst.dim) continue;
                for (const auto& x : spans[l].rows()) {
                    for (const auto& y : spans[m].rows())
                        if (!target.contains(inst.multiply(x, y))) {
                            rep.pass = false;
                            rep.witness = "a product from " + inst.labels[l] + " * " +
                                          inst.labels[m] +
                                          " escapes the common lower labels";
                            break;
                        }
                    if (!rep.pass) break;
                }
            }
        out.push_back(std::move(rep));
    }

    return out;
}

// ---------------------------------------------------------------------------
// rigidity: the span at l meets the span of the labels not above l exactly
// in the strictly-lower span
// ---------------------------------------------------------------------------

inline std::vector<AxiomReport> verify_rigidity(const FilteredAlgebraInstance& inst) {
    using namespace cellcheck_detail;
    std::vector<AxiomReport> out;
    int nl = (int)inst.labels.size();
    AxiomReport rep{"rigidity", true, ""};
    for (int l = 0; l < nl; ++l) {
        RowSpan u = span_of(inst, inst.ideal[l]);
        RowSpan v(inst.ring);
        for (int m = 0; m < nl; ++m)
            if (!inst.leq[l][m])
                for (const auto& w : inst.ideal[m]) v.insert(w);
        RowSpan lower = lower_span(inst, l);
        // dim(U cap V) = rank U + rank V - rank(U + V)
        RowSpan both = u;
        for (const auto& r : v.rows()) both.insert(r);
        int cap = u.rank() + v.rank() - both.rank();
        bool ok = cap == lower.rank() && u.contains_span(lower) && v.contains_span(lower);
        if (!ok) {
            rep.pass = false;
            rep.witness = "label " + inst.labels[l] + ": intersection has dimension " +
                          std::to_string(cap) + ", strictly-lower span has rank " +
                          std::to_string(lower.rank());
            break;
        }
    }
    out.push_back(std::move(rep));
    return out;
}

// ---------------------------------------------------------------------------
// Morita-context layer at one label: M is a left and N a right submodule of
// the layer, products M*N span the layer, N*M lands in the base span, the
// two evaluation maps satisfy the associativity law, and ideals of labels
// not above l annihilate the layer module.  flip_rho_sign is a
// fault-injection hook used to certify that the check can fail.
// ---------------------------------------------------------------------------

inline std::vector<AxiomReport> verify_morita_context(const FilteredAlgebraInstance& inst,
                                                      int l,
                                                      bool flip_rho_sign = false) {
    using namespace cellcheck_detail;
    std::vector<AxiomReport> out;
    int nl = (int)inst.labels.size();
    const MoritaLayer& lay = inst.layer[l];
    RowSpan lower = lower_span(inst, l);
    RowSpan layer_span = lower;
    for (const auto& v : inst.ideal[l]) layer_span.insert(v);
    int layer_dim = layer_span.rank() - lower.rank();

    // module spans on top of the lower ideal
    RowSpan mspan = lower, nspan = lower, bspan = lower;
    for (const auto& v : lay.M) mspan.insert(v);
    for (const auto& v : lay.N) nspan.insert(v);
    for (const auto& v : lay.B) bspan.insert(v);

    {
        AxiomReport rep{"module-stability", true, ""};
        for (int i = 0; i < inst.dim && rep.pass; ++i) {
            Vec e = basis_vec(inst, i);
            for (const auto& x : lay.M)
                if (!mspan.contains(inst.multiply(e, x))) {
                    rep.pass = false;
                    rep.witness = "left action of basis element " + std::to_string(i + 1) +
                                  " leaves M at label " + inst.labels[l];
                    break;
                }
            for (const auto& y : lay.N)
                if (rep.pass && !nspan.contains(inst.multiply(y, e))) {
                    rep.pass = false;
                    rep.witness = "right action of basis element " + std::to_string(i + 1) +
                                  " leaves N at label " + inst.labels[l];
                }
        }
        out.push_back(std::move(rep));
    }

    // eta image: products M*N together with the lower ideal span the layer
    {
        AxiomReport rep{"eta-spans-layer", true, ""};
        std::vector<Vec> products;
        for (const auto& x : lay.M)
            for (const auto& y : lay.N) products.push_back(inst.multiply(x, y));
        int got = rank_above(lower, products);
        if (got != layer_dim) {
            rep.pass = false;
            rep.witness = "label " + inst.labels[l] + ": eta image has rank " +
                          std::to_string(got) + ", layer has dimension " +
                          std::to_string(layer_dim);
        }
        out.push_back(std::move(rep));
    }

    // rho image: N*M falls into the base span (mod lower)
    {
        AxiomReport rep{"rho-in-base", true, ""};
        for (const auto& y : lay.N) {
            for (const auto& x : lay.M)
                if (!bspan.contains(inst.multiply(y, x))) {
                    rep.pass = false;
                    rep.witness = "a product N*M at label " + inst.labels[l] +
                                  " is outside the base span";
                    break;
                }
            if (!rep.pass) break;
        }
        out.push_back(std::move(rep));
    }

    // associativity: eta(x (x) y) x' = x rho(y (x) x'), with rho computed by
    // solving y x' against the base spanning set modulo the lower ideal.
    // Both sides are multilinear, so checking on spanning rows is complete;
    // the row lists are capped deterministically to keep the triple loop
    // tractable on the larger instances.
    {
        AxiomReport rep{"associativity", true, ""};
        auto capped = [&](const std::vector<Vec>& raw) {
            RowSpan s(inst.ring);
            for (const auto& v : raw) s.insert(v);
            std::vector<Vec> rows = s.rows();
            if (rows.size() > 8) rows.resize(8);
            return rows;
        };
        std::vector<Vec> mr = capped(lay.M), nr = capped(lay.N);
        std::vector<Vec> solve_rows = lay.B;
        for (const auto& r : lower.rows()) solve_rows.push_back(r);
        LinearSolver solver(inst.ring, solve_rows);
        for (const auto& x : mr) {
            for (const auto& y : nr) {
                Vec xy = inst.multiply(x, y);
                for (const auto& xp : mr) {
                    Vec lhs = inst.multiply(xy, xp);
                    Vec co = solver.solve(inst.multiply(y, xp));
                    Vec rho(inst.dim, Coefficient::zero(inst.ring));
                    for (size_t k = 0; k < lay.B.size(); ++k)
                        for (int j = 0; j < inst.dim; ++j) rho[j] += co[k] * lay.B[k][j];
                    if (flip_rho_sign)
                        for (auto& c : rho) c = -c;
                    Vec rhs = inst.multiply(x, rho);
                    Vec diff(inst.dim, Coefficient::zero(inst.ring));
                    for (int j = 0; j < inst.dim; ++j) diff[j] = lhs[j] - rhs[j];
                    if (!lower.contains(diff)) {
                        rep.pass = false;
                        rep.witness = "associativity law fails at label " + inst.labels[l];
                        break;
                    }
                }
                if (!rep.pass) break;
            }
            if (!rep.pass) break;
        }
        out.push_back(std::move(rep));
    }

    // annihilation: ideals of labels not above l push M into the lower span
    {
        AxiomReport rep{"annihilation", true, ""};
        for (int m = 0; m < nl && rep.pass; ++m) {
            if (inst.leq[l][m]) continue;
            for (const auto& g : inst.ideal[m]) {
                for (const auto& x : lay.M)
                    if (!lower.contains(inst.multiply(g, x))) {
                        rep.pass = false;
                        rep.witness = "ideal of label " + inst.labels[m] +
                                      " does not annihilate the layer module at " +
                                      inst.labels[l];
                        break;
                    }
                if (!rep.pass) break;
            }
        }
        out.push_back(std::move(rep));
    }

    return out;
}

// ---------------------------------------------------------------------------
// standard basis: the layer dimensions decompose the algebra, and each
// layer is a free product of the module ranks over the base rank
// ---------------------------------------------------------------------------

inline std::vector<AxiomReport> verify_standard_basis(const FilteredAlgebraInstance& inst) {
    using namespace cellcheck_detail;
    std::vector<AxiomReport> out;
    int nl = (int)inst.labels.size();
    int total = 0;
    AxiomReport layers{"layer-freeness", true, ""};
    for (int l = 0; l < nl; ++l) {
        RowSpan lower = lower_span(inst, l);
        RowSpan layer_span = lower;
        for (const auto& v : inst.ideal[l]) layer_span.insert(v);
        int layer_dim = layer_span.rank() - lower.rank();
        total += layer_dim;
        int mrank = rank_above(lower, inst.layer[l].M);
        int nrank = rank_above(lower, inst.layer[l].N);
        int brank = rank_above(lower, inst.layer[l].B);
        // layer ~ M (x)_B N: dim * rank(B) = rank(M) * rank(N)
        if (layers.pass && layer_dim * brank != mrank * nrank) {
            layers.pass = false;
            layers.witness = "label " + inst.labels[l] + ": layer dim " +
                             std::to_string(layer_dim) + " with module ranks " +
                             std::to_string(mrank) + "*" + std::to_string(nrank) +
                             " over base rank " + std::to_string(brank);
        }
        // surjectivity of the eta-induced map onto the layer
        if (layers.pass) {
            std::vector<Vec> products;
            for (const auto& x : inst.layer[l].M)
                for (const auto& y : inst.layer[l].N)
                    products.push_back(inst.multiply(x, y));
            if (rank_above(lower, products) != layer_dim) {
                layers.pass = false;
                layers.witness =
                    "label " + inst.labels[l] + ": eta image does not fill the layer";
            }
        }
    }
    out.push_back(std::move(layers));

    AxiomReport sum{"dimension-sum", true, ""};
    if (total != inst.dim) {
        sum.pass = false;
        sum.witness = "layer dimensions add up to " + std::to_string(total) +
                      ", algebra has dimension " + std::to_string(inst.dim);
    }
    out.push_back(std::move(sum));
    return out;
}

// ---------------------------------------------------------------------------
// concrete instances
// ---------------------------------------------------------------------------

// the rank-n Hecke algebra with the parabolic-ideal filter over a field;
// labels are the partitions of n, filter order = reverse dominance (a more
// dominant shape generates a smaller ideal)
inline FilteredAlgebraInstance hecke_cell_instance(int n, const Ring& ring) {
    FilteredAlgebraInstance inst;
    inst.ring = ring;
    auto perms = all_perms(n);
    inst.dim = (int)perms.size();
    std::map<Perm, int> idx;
    for (size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = (int)i;
    int dim = inst.dim;
    auto to_vec = [idx, dim, ring](const HeckeElement& h) {
        std::vector<Coefficient> v(dim, Coefficient::zero(ring));
        for (const auto& [w, c] : h.terms()) v[idx.at(w)] = c;
        return v;
    };
    inst.mul = [=](int i, int j) {
        return to_vec(HeckeElement::basis(ring, perms[i]) *
                      HeckeElement::basis(ring, perms[j]));
    };
    auto parts = partitions_of(n);
    for (const auto& lam : parts) inst.labels.push_back(lam.str());
    int nl = (int)parts.size();
    inst.leq.assign(nl, std::vector<bool>(nl, false));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) inst.leq[i][j] = dominance_le(parts[j], parts[i]);
    inst.ideal.resize(nl);
    inst.layer.resize(nl);
    for (int l = 0; l < nl; ++l) {
        HeckeElement m = parabolic_generator(ring, parts[l]);
        RowSpan sp(ring);
        for (const auto& u : perms) {
            HeckeElement um = HeckeElement::basis(ring, u) * m;
            inst.layer[l].M.push_back(to_vec(um));
            inst.layer[l].N.push_back(to_vec(m * HeckeElement::basis(ring, u)));
            for (const auto& v : perms) sp.insert(to_vec(um * HeckeElement::basis(ring, v)));
        }
        inst.ideal[l] = sp.rows();
        inst.layer[l].B.push_back(to_vec(m));
    }
    return inst;
}

// the rank-n twisted algebra with the circled parabolic filter; the base of
// each layer is spanned by the gamma monomials acting on m_lambda
inline FilteredAlgebraInstance hc_cell_instance(int n, const Ring& ring) {
    FilteredAlgebraInstance inst;
    inst.ring = ring;
    auto perms = all_perms(n);
    std::vector<HCElement::Key> basis;
    std::map<HCElement::Key, int> idx;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        for (const auto& w : perms) {
            idx[{m, w}] = (int)basis.size();
            basis.push_back({m, w});
        }
    inst.dim = (int)basis.size();
    int dim = inst.dim;
    auto to_vec = [idx, dim, ring](const HCElement& h) {
        std::vector<Coefficient> v(dim, Coefficient::zero(ring));
        for (const auto& [k, c] : h.terms()) v[idx.at(k)] = c;
        return v;
    };
    auto from_key = [basis, ring](int i) {
        return HCElement::basis(ring, basis[i].first, basis[i].second);
    };
    inst.mul = [=](int i, int j) { return to_vec(from_key(i) * from_key(j)); };
    auto parts = partitions_of(n);
    for (const auto& lam : parts) inst.labels.push_back(lam.str());
    int nl = (int)parts.size();
    inst.leq.assign(nl, std::vector<bool>(nl, false));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) inst.leq[i][j] = dominance_le(parts[j], parts[i]);
    inst.ideal.resize(nl);
    inst.layer.resize(nl);
    for (int l = 0; l < nl; ++l) {
        HCElement m = hc_parabolic(ring, parts[l]);
        RowSpan sp(ring);
        for (int i = 0; i < inst.dim; ++i) {
            HCElement xm = from_key(i) * m;
            inst.layer[l].M.push_back(to_vec(xm));
            inst.layer[l].N.push_back(to_vec(m * from_key(i)));
            for (int j = 0; j < inst.dim; ++j) sp.insert(to_vec(xm * from_key(j)));
        }
        inst.ideal[l] = sp.rows();
        // gamma monomials: products of the left gamma generators, one per row
        int r = parts[l].size();
        for (std::uint32_t gm = 0; gm < (1u << r); ++gm) {
            HCElement g = m;
            for (int i = r; i >= 1; --i)
                if (gm >> (i - 1) & 1) g = hc_gamma_L(ring, parts[l], i) * g;
            inst.layer[l].B.push_back(to_vec(g));
        }
    }
    return inst;
}

}  // namespace hcq
