#pragma once

// Row-(semi)standard, semistandard, good, circled and shifted-semistandard
// circled tableaux, together with the reading-word permutation d(T), the
// minimal/maximal representatives S_down / S_up of a weight class, duals,
// weight restriction, permutation tableaux and the two Knuth-type counting
// identities used as enumeration cross-checks.

#include "hcq/perm.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hcq {

// Filling of the diagram of a composition shape with weakly increasing rows.
// Rows of length 0 are kept so that shapes like (3,1,0,1) work transparently.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        for (const auto& row : rows_)
            for (int v : row)
                if (v < 1) throw std::invalid_argument("tableau entries must be >= 1");
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int i, int j) const { return rows_[i][j]; }  // 0-based box (i,j)
    int n() const {
        int s = 0;
        for (const auto& row : rows_) s += (int)row.size();
        return s;
    }

    Composition shape() const {
        std::vector<int> parts;
        for (const auto& row : rows_) parts.push_back((int)row.size());
        return Composition(parts);
    }
    Composition weight() const {
        std::vector<int> w;
        for (const auto& row : rows_)
            for (int v : row) {
                if ((int)w.size() < v) w.resize(v, 0);
                ++w[v - 1];
            }
        return Composition(w);
    }

    // entries left to right, top to bottom
    std::vector<int> reading_word() const {
        std::vector<int> word;
        for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
        return word;
    }

    // number of entries equal to j in row i (1-based pair, the #_{ij} matrix)
    int count(int i, int j) const {
        int c = 0;
        for (int v : rows_[i - 1])
            if (v == j) ++c;
        return c;
    }

    bool is_row_semistandard() const {
        for (const auto& row : rows_)
            for (size_t j = 0; j + 1 < row.size(); ++j)
                if (row[j] > row[j + 1]) return false;
        return true;
    }
    bool is_row_standard() const {
        if (!is_row_semistandard()) return false;
        auto w = weight();
        for (int i = 0; i < w.size(); ++i)
            if (w[i] != 1) return false;
        return w.n() == n();
    }
    // partition shape and strictly increasing down every column
    bool is_semistandard() const {
        if (!shape().is_partition()) return false;
        if (!is_row_semistandard()) return false;
        for (size_t i = 0; i + 1 < rows_.size(); ++i)
            for (size_t j = 0; j < rows_[i].size() && j < rows_[i + 1].size(); ++j)
                if (rows_[i][j] >= rows_[i + 1][j]) return false;
        return true;
    }
    bool is_good() const {
        for (size_t i = 0; i < rows_.size(); ++i)
            for (int v : rows_[i])
                if (v < (int)i + 1) return false;
        return true;
    }

    friend bool operator==(const Tableau& x, const Tableau& y) { return x.rows_ == y.rows_; }
    friend auto operator<=>(const Tableau& x, const Tableau& y) { return x.rows_ <=> y.rows_; }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += "/";
            for (size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += " ";
                s += std::to_string(rows_[i][j]);
            }
        }
        return s;
    }

private:
    std::vector<std::vector<int>> rows_;
};

// Tableau whose entries may carry a circle.  Canonical form keeps circles at
// the rightmost box of each bar (maximal run of equal entries in a row); the
// forbidden in-row patterns "(i) i" and "(i) (i)" say exactly that.
class CircledTableau {
public:
    struct Entry {
        int value = 0;
        bool circled = false;
        friend bool operator==(const Entry&, const Entry&) = default;
        friend auto operator<=>(const Entry&, const Entry&) = default;
    };

    CircledTableau() = default;
    explicit CircledTableau(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {
        for (const auto& row : rows_)
            for (const auto& e : row)
                if (e.value < 1) throw std::invalid_argument("tableau entries must be >= 1");
    }
    static CircledTableau plain(const Tableau& t) {
        std::vector<std::vector<Entry>> rows;
        for (const auto& row : t.rows()) {
            std::vector<Entry> r;
            for (int v : row) r.push_back({v, false});
            rows.push_back(std::move(r));
        }
        return CircledTableau(std::move(rows));
    }

    const std::vector<std::vector<Entry>>& rows() const { return rows_; }
    const Entry& at(int i, int j) const { return rows_[i][j]; }

    Tableau underlying() const {
        std::vector<std::vector<int>> rows;
        for (const auto& row : rows_) {
            std::vector<int> r;
            for (const auto& e : row) r.push_back(e.value);
            rows.push_back(std::move(r));
        }
        return Tableau(std::move(rows));
    }
    Composition shape() const { return underlying().shape(); }
    Composition weight() const { return underlying().weight(); }
    int n() const { return underlying().n(); }

    int circle_count() const {
        int c = 0;
        for (const auto& row : rows_)
            for (const auto& e : row) c += e.circled;
        return c;
    }
    // row-major 1-based box indices of the circled boxes
    std::vector<int> circle_positions() const {
        std::vector<int> pos;
        int k = 0;
        for (const auto& row : rows_)
            for (const auto& e : row) {
                ++k;
                if (e.circled) pos.push_back(k);
            }
        return pos;
    }

    // underlying row-semistandard and no pattern "(i) i" or "(i) (i)" in a row
    bool is_row_semistandard() const {
        if (!underlying().is_row_semistandard()) return false;
        for (const auto& row : rows_)
            for (size_t j = 0; j + 1 < row.size(); ++j)
                if (row[j].circled && row[j].value == row[j + 1].value) return false;
        return true;
    }

    friend bool operator==(const CircledTableau& x, const CircledTableau& y) {
        return x.rows_ == y.rows_;
    }
    friend auto operator<=>(const CircledTableau& x, const CircledTableau& y) {
        return x.rows_ <=> y.rows_;
    }

    // circled entries rendered with a prime suffix: "1 1 2'/2 3"
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += "/";
            for (size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += " ";
                s += std::to_string(rows_[i][j].value);
                if (rows_[i][j].circled) s += "'";
            }
        }
        return s;
    }

private:
    std::vector<std::vector<Entry>> rows_;
};

// ---------------------------------------------------------------------------

// d(T): the permutation read off the entries of a row-standard tableau
inline Perm tableau_to_perm(const Tableau& t) {
    if (!t.is_row_standard()) throw std::invalid_argument("tableau_to_perm needs a row-standard tableau");
    return Perm(t.reading_word());
}

// S_down: replace the entries of S by 1..n, equal values numbered in reading
// order.  d(S_down) is then the minimal double-coset representative of S.
inline Tableau min_rep_tableau(const Tableau& s) {
    if (!s.is_row_semistandard()) throw std::invalid_argument("min_rep_tableau needs row-semistandard input");
    auto sh = s.shape();
    std::vector<std::vector<int>> rows(sh.size());
    for (int i = 0; i < sh.size(); ++i) rows[i].resize(sh[i]);
    int next = 1;
    auto w = s.weight();
    for (int v = 1; v <= w.size(); ++v)
        for (int i = 0; i < sh.size(); ++i)
            for (int j = 0; j < sh[i]; ++j)
                if (s.at(i, j) == v) rows[i][j] = next++;
    return Tableau(std::move(rows));
}

// S_up: equal values numbered bottom to top (left to right within a row)
inline Tableau max_rep_tableau(const Tableau& s) {
    if (!s.is_row_semistandard()) throw std::invalid_argument("max_rep_tableau needs row-semistandard input");
    auto sh = s.shape();
    std::vector<std::vector<int>> rows(sh.size());
    for (int i = 0; i < sh.size(); ++i) rows[i].resize(sh[i]);
    int next = 1;
    auto w = s.weight();
    for (int v = 1; v <= w.size(); ++v)
        for (int i = sh.size() - 1; i >= 0; --i)
            for (int j = 0; j < sh[i]; ++j)
                if (s.at(i, j) == v) rows[i][j] = next++;
    return Tableau(std::move(rows));
}

// S*: the tableau of shape weight(S) with #_{ij}(S*) = #_{ji}(S)
inline Tableau dual_tableau(const Tableau& s) {
    if (!s.is_row_semistandard()) throw std::invalid_argument("dual_tableau needs row-semistandard input");
    auto mu = s.weight();
    auto sh = s.shape();
    std::vector<std::vector<int>> rows(mu.size());
    for (int i = 1; i <= mu.size(); ++i)
        for (int j = 1; j <= sh.size(); ++j)
            for (int c = s.count(j, i); c > 0; --c) rows[i - 1].push_back(j);
    return Tableau(std::move(rows));
}

// maps value index -> 1-based block of mu under the refinement grouping
inline std::vector<int> refinement_blocks(const Composition& nu, const Composition& mu) {
    if (!is_refinement(nu, mu)) throw std::invalid_argument("weight is not a refinement");
    auto nv = nu.normalized().parts();
    std::vector<int> block(nv.size());
    size_t i = 0;
    for (int b = 0; b < mu.size(); ++b) {
        int acc = 0;
        while (acc < mu[b] && i < nv.size()) {
            block[i] = b + 1;
            acc += nv[i++];
        }
    }
    while (i < nv.size()) block[i++] = mu.size();  // trailing zero parts, unused
    return block;
}

// T|_mu: collapse the entries of t along the refinement weight(t) -> mu
inline Tableau restrict_weight(const Tableau& t, const Composition& mu) {
    auto block = refinement_blocks(t.weight(), mu);
    std::vector<std::vector<int>> rows;
    for (const auto& row : t.rows()) {
        std::vector<int> r;
        for (int v : row) r.push_back(block[v - 1]);
        rows.push_back(std::move(r));
    }
    return Tableau(std::move(rows));
}

// P_{w,nu}: row i is nu_{w(i)} copies of w(i); weight nu, constant rows
inline Tableau permutation_tableau(const Perm& w, const Composition& nu) {
    if (w.n() != nu.size()) throw std::invalid_argument("permutation_tableau rank mismatch");
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= w.n(); ++i) rows.push_back(std::vector<int>(nu[w(i) - 1], w(i)));
    return Tableau(std::move(rows));
}

// ---------------------------------------------------------------------------
// enumeration

enum class TabFlavor { row_semistandard, semistandard, good };
enum class CircledFlavor { circled, shifted_circled, shifted_circled_prime };

namespace detail {

// depth-first fill, rows weakly increasing, lexicographic on the row word
inline void fill_rows(const std::vector<int>& shape, std::vector<int>& left,
                      std::vector<std::vector<int>>& rows, int i, int j,
                      std::vector<Tableau>& out) {
    if (i == (int)shape.size()) {
        out.push_back(Tableau(rows));
        return;
    }
    if (j == shape[i]) {
        fill_rows(shape, left, rows, i + 1, 0, out);
        return;
    }
    int lo = j == 0 ? 1 : rows[i][j - 1];
    for (int v = lo; v <= (int)left.size(); ++v) {
        if (left[v - 1] == 0) continue;
        --left[v - 1];
        rows[i][j] = v;
        fill_rows(shape, left, rows, i, j + 1, out);
        ++left[v - 1];
    }
}

}  // namespace detail

inline std::vector<Tableau> enumerate_tableaux(const Composition& lambda,
                                               const Composition& mu, TabFlavor flavor) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("enumerate_tableaux needs |lambda| = |mu|");
    std::vector<int> shape;
    for (int i = 0; i < lambda.size(); ++i) shape.push_back(lambda[i]);
    std::vector<int> left;
    for (int i = 0; i < mu.size(); ++i) left.push_back(mu[i]);
    std::vector<std::vector<int>> rows(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) rows[i].resize(shape[i]);
    std::vector<Tableau> all;
    detail::fill_rows(shape, left, rows, 0, 0, all);
    if (flavor == TabFlavor::row_semistandard) return all;
    std::vector<Tableau> out;
    for (const auto& t : all) {
        if (flavor == TabFlavor::semistandard ? t.is_semistandard() : t.is_good())
            out.push_back(t);
    }
    return out;
}

// Shifted-semistandard check: strict partition shape, underlying tableau
// semistandard, and for the diagonally adjacent boxes (k,l+1) above (k+1,l)
// the value may not drop going down, and may repeat only when the lower box
// is circled.
inline bool is_shifted_semistandard(const CircledTableau& t) {
    if (!t.shape().is_strict_partition()) return false;
    if (!t.underlying().is_semistandard()) return false;
    const auto& rows = t.rows();
    for (size_t k = 0; k + 1 < rows.size(); ++k)
        for (size_t l = 0; l < rows[k + 1].size(); ++l) {
            if (l + 1 >= rows[k].size()) continue;
            const auto& up = rows[k][l + 1];
            const auto& lo = rows[k + 1][l];
            if (up.value > lo.value) return false;
            if (up.value == lo.value && !lo.circled) return false;
        }
    return true;
}

inline bool has_row_end_circle(const CircledTableau& t) {
    for (const auto& row : t.rows())
        if (!row.empty() && row.back().circled) return true;
    return false;
}

inline std::vector<CircledTableau> enumerate_circled_tableaux(const Composition& lambda,
                                                              const Composition& mu,
                                                              CircledFlavor flavor) {
    std::vector<CircledTableau> out;
    if (flavor != CircledFlavor::circled && !lambda.is_strict_partition()) return out;
    for (const auto& t : enumerate_tableaux(lambda, mu, TabFlavor::row_semistandard)) {
        // bars: rightmost boxes of maximal equal runs in each row
        std::vector<std::pair<int, int>> bars;
        const auto& rows = t.rows();
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j)
                if (j + 1 == rows[i].size() || rows[i][j] != rows[i][j + 1])
                    bars.push_back({(int)i, (int)j});
        for (uint64_t mask = 0; mask < (uint64_t(1) << bars.size()); ++mask) {
            auto c = CircledTableau::plain(t);
            auto crows = c.rows();
            for (size_t b = 0; b < bars.size(); ++b)
                if (mask >> b & 1) crows[bars[b].first][bars[b].second].circled = true;
            CircledTableau ct(crows);
            if (flavor != CircledFlavor::circled && !is_shifted_semistandard(ct)) continue;
            if (flavor == CircledFlavor::shifted_circled_prime && has_row_end_circle(ct)) continue;
            out.push_back(ct);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// counting identities

// |Tab_{lambda;mu}| vs sum over partitions nu of |STab_{nu;lambda}| * |STab_{nu;mu}|
inline std::pair<long long, long long> rsk_count_identity(const Composition& lambda,
                                                          const Composition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("rsk_count_identity needs |lambda| = |mu|");
    long long lhs = (long long)enumerate_tableaux(lambda, mu, TabFlavor::row_semistandard).size();
    long long rhs = 0;
    for (const auto& nu : partitions_of(lambda.n()))
        rhs += (long long)enumerate_tableaux(nu, lambda, TabFlavor::semistandard).size() *
               (long long)enumerate_tableaux(nu, mu, TabFlavor::semistandard).size();
    return {lhs, rhs};
}

// |Tab^c_{lambda;mu}| vs sum over strict partitions nu of
// |STab^c_{nu;lambda}| * |STab^c'_{nu;mu}|.  Holds for partition arguments.
inline std::pair<long long, long long> shifted_knuth_count_identity(const Composition& lambda,
                                                                    const Composition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("shifted_knuth_count_identity needs |lambda| = |mu|");
    long long lhs =
        (long long)enumerate_circled_tableaux(lambda, mu, CircledFlavor::circled).size();
    long long rhs = 0;
    for (const auto& nu : partitions_of(lambda.n())) {
        if (!nu.is_strict_partition()) continue;
        rhs += (long long)enumerate_circled_tableaux(nu, lambda, CircledFlavor::shifted_circled)
                   .size() *
               (long long)enumerate_circled_tableaux(nu, mu, CircledFlavor::shifted_circled_prime)
                   .size();
    }
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// parsing of the text forms ("1 1 2/2 3", circles as primes)

inline Tableau parse_tableau(const std::string& text) {
    std::vector<std::vector<int>> rows{{}};
    int cur = -1;
    for (char ch : text) {
        if (ch == '/') {
            if (cur >= 0) rows.back().push_back(cur);
            cur = -1;
            rows.push_back({});
        } else if (ch >= '0' && ch <= '9') {
            cur = (cur < 0 ? 0 : cur) * 10 + (ch - '0');
        } else if (ch == ' ') {
            if (cur >= 0) rows.back().push_back(cur);
            cur = -1;
        } else {
            throw std::invalid_argument("bad tableau text");
        }
    }
    if (cur >= 0) rows.back().push_back(cur);
    return Tableau(std::move(rows));
}

inline CircledTableau parse_circled_tableau(const std::string& text) {
    std::vector<std::vector<CircledTableau::Entry>> rows{{}};
    int cur = -1;
    bool circ = false;
    auto flush = [&] {
        if (cur >= 0) rows.back().push_back({cur, circ});
        cur = -1;
        circ = false;
    };
    for (char ch : text) {
        if (ch == '/') {
            flush();
            rows.push_back({});
        } else if (ch >= '0' && ch <= '9') {
            cur = (cur < 0 ? 0 : cur) * 10 + (ch - '0');
        } else if (ch == '\'') {
            circ = true;
        } else if (ch == ' ') {
            flush();
        } else {
            throw std::invalid_argument("bad circled tableau text");
        }
    }
    flush();
    return CircledTableau(std::move(rows));
}

}  // namespace hcq
