#pragma once

// An independent oracle for counting the graded blocks of a finite-dimensional
// superalgebra given by structure constants over a prime field F_p: Jacobson
// radical via the p-power trace criterion, semisimple quotient, center, and
// the fixed subalgebra of the parity involution counted with Frobenius.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hcq {

namespace modp {

inline long long norm(long long v, long long p) { return ((v % p) + p) % p; }

inline long long inv(long long v, long long p) {
    long long e = p - 2, b = norm(v, p), acc = 1;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

// row echelon basis of the row space
inline Mat row_basis(Mat rows, long long p) {
    Mat out;
    std::vector<int> pivots;
    for (auto& v : rows) {
        for (auto& x : v) x = norm(x, p);
        for (size_t r = 0; r < out.size(); ++r) {
            long long c = v[pivots[r]];
            if (!c) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] = norm(v[j] - c * out[r][j], p);
        }
        int piv = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j]) {
                piv = (int)j;
                break;
            }
        if (piv < 0) continue;
        long long iv = inv(v[piv], p);
        for (auto& x : v) x = x * iv % p;
        for (size_t r = 0; r < out.size(); ++r) {
            long long c = out[r][piv];
            if (!c) continue;
            for (size_t j = 0; j < v.size(); ++j)
                out[r][j] = norm(out[r][j] - c * v[j], p);
        }
        out.push_back(std::move(v));
        pivots.push_back(piv);
    }
    return out;
}

// basis of {x : M x = 0} (kernel of the matrix acting on column vectors)
inline Mat null_space(const Mat& m, size_t cols, long long p) {
    Mat rows = m;
    Mat ech = row_basis(rows, p);
    std::vector<int> pivots(ech.size());
    std::vector<char> is_pivot(cols, 0);
    for (size_t r = 0; r < ech.size(); ++r) {
        int piv = -1;
        for (size_t j = 0; j < cols; ++j)
            if (ech[r][j]) {
                piv = (int)j;
                break;
            }
        pivots[r] = piv;
        is_pivot[piv] = 1;
    }
    Mat out;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, 0);
        v[f] = 1;
        for (size_t r = 0; r < ech.size(); ++r) v[pivots[r]] = norm(-ech[r][f], p);
        out.push_back(std::move(v));
    }
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b, long long p) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat c(n, Vec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            long long v = a[i][l];
            if (!v) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + v * b[l][j]) % p;
        }
    return c;
}

inline long long mat_trace(const Mat& a, long long p) {
    long long t = 0;
    for (size_t i = 0; i < a.size(); ++i) t = norm(t + a[i][i], p);
    return t;
}

}  // namespace modp

// a finite-dimensional superalgebra over F_p by structure constants:
// e_i e_j = sum_k table[i][j][k] e_k; parity[i] in {0,1}; the basis must be
// parity-homogeneous and the algebra unital
struct StructureAlgebra {
    long long p = 0;
    int dim = 0;
    std::vector<int> parity;
    std::vector<std::vector<modp::Vec>> table;

    modp::Vec multiply(const modp::Vec& x, const modp::Vec& y) const {
        modp::Vec out(dim, 0);
        for (int i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < dim; ++j) {
                if (!y[j]) continue;
                long long c = x[i] * y[j] % p;
                for (int k = 0; k < dim; ++k)
                    out[k] = (out[k] + c * table[i][j][k]) % p;
            }
        }
        return out;
    }

    // left-multiplication matrix of x (columns indexed by the basis)
    modp::Mat left_mult(const modp::Vec& x) const {
        modp::Mat m(dim, modp::Vec(dim, 0));
        for (int j = 0; j < dim; ++j) {
            modp::Vec ej(dim, 0);
            ej[j] = 1;
            modp::Vec col = multiply(x, ej);
            for (int k = 0; k < dim; ++k) m[k][j] = col[k];
        }
        return m;
    }
    modp::Mat right_mult(const modp::Vec& x) const {
        modp::Mat m(dim, modp::Vec(dim, 0));
        for (int j = 0; j < dim; ++j) {
            modp::Vec ej(dim, 0);
            ej[j] = 1;
            modp::Vec col = multiply(ej, x);
            for (int k = 0; k < dim; ++k) m[k][j] = col[k];
        }
        return m;
    }
};

// Jacobson radical over a prime field via the small-characteristic chain:
// lift the structure constants to the integers and cut the subspaces
//   I_j = { x in I_{j-1} : tr((L_x L_y)^{p^j}) / p^j = 0 mod p  for all y },
// stopping once p^j >= dim.  For x in I_{j-1} the integer trace is divisible
// by p^j and the quotient is F_p-linear in x, so each level is plain linear
// algebra; the trace is only needed mod p^{j+1}, which fits machine words
inline modp::Mat structure_radical(const StructureAlgebra& alg) {
    using namespace modp;
    long long p = alg.p;
    // current subspace basis, initially everything
    Mat basis(alg.dim, Vec(alg.dim, 0));
    for (int i = 0; i < alg.dim; ++i) basis[i][i] = 1;
    long long power = 1;  // p^j
    while (true) {
        long long mod = power * p;  // traces are computed mod p^{j+1}
        auto lift_left = [&](const Vec& x) {
            // left-multiplication matrix of the integer lift of x, mod p^{j+1}
            Mat m(alg.dim, Vec(alg.dim, 0));
            for (int i = 0; i < alg.dim; ++i) {
                if (!x[i]) continue;
                for (int j = 0; j < alg.dim; ++j)
                    for (int k = 0; k < alg.dim; ++k)
                        m[k][j] = (m[k][j] + x[i] * alg.table[i][j][k]) % mod;
            }
            return m;
        };
        std::vector<Mat> lx;
        for (const auto& x : basis) lx.push_back(lift_left(x));
        Mat cons;
        for (const auto& ly : lx) {
            Vec row(basis.size(), 0);
            for (size_t i = 0; i < basis.size(); ++i) {
                Mat m = mat_mul(lx[i], ly, mod);
                // m^power mod p^{j+1} by repeated squaring
                Mat acc;
                bool have = false;
                Mat sq = m;
                long long e = power;
                while (e) {
                    if (e & 1) {
                        acc = have ? mat_mul(acc, sq, mod) : sq;
                        have = true;
                    }
                    e >>= 1;
                    if (e) sq = mat_mul(sq, sq, mod);
                }
                long long t = mat_trace(acc, mod);
                if (t % power != 0)
                    throw std::logic_error("trace chain divisibility failed");
                row[i] = norm(t / power, p);
            }
            cons.push_back(std::move(row));
        }
        Mat kernel = null_space(cons, basis.size(), p);
        Mat next;
        for (const auto& coords : kernel) {
            Vec v(alg.dim, 0);
            for (size_t i = 0; i < basis.size(); ++i) {
                if (!coords[i]) continue;
                for (int j = 0; j < alg.dim; ++j)
                    v[j] = (v[j] + coords[i] * basis[i][j]) % p;
            }
            next.push_back(std::move(v));
        }
        basis = row_basis(std::move(next), p);
        if (power >= alg.dim) break;
        power *= p;
    }
    return basis;
}

// data of the semisimple quotient B = A / rad with the induced grading
struct SemisimpleQuotient {
    StructureAlgebra algebra;  // structure constants of B
    int radical_dim = 0;
};

inline SemisimpleQuotient structure_semisimple_quotient(const StructureAlgebra& alg) {
    using namespace modp;
    long long p = alg.p;
    Mat rad = structure_radical(alg);
    Mat rad_ech = row_basis(rad, p);
    std::vector<int> rad_pivots;
    std::vector<char> is_pivot(alg.dim, 0);
    for (const auto& r : rad_ech) {
        for (int j = 0; j < alg.dim; ++j)
            if (r[j]) {
                rad_pivots.push_back(j);
                is_pivot[j] = 1;
                break;
            }
    }
    // the radical of a graded algebra is graded: its echelon rows must be
    // parity-homogeneous for the quotient grading to make sense
    auto reduce = [&](Vec v) {
        for (size_t r = 0; r < rad_ech.size(); ++r) {
            long long c = v[rad_pivots[r]];
            if (!c) continue;
            for (int j = 0; j < alg.dim; ++j) v[j] = norm(v[j] - c * rad_ech[r][j], p);
        }
        return v;
    };
    std::vector<int> free_cols;
    for (int j = 0; j < alg.dim; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    for (const auto& r : rad_ech) {
        int par = -1;
        for (int j = 0; j < alg.dim; ++j)
            if (r[j]) {
                if (par < 0) par = alg.parity[j];
                else if (par != alg.parity[j])
                    throw std::logic_error("radical is not parity-graded");
            }
    }
    SemisimpleQuotient out;
    out.radical_dim = (int)rad_ech.size();
    StructureAlgebra& b = out.algebra;
    b.p = p;
    b.dim = (int)free_cols.size();
    for (int j : free_cols) b.parity.push_back(alg.parity[j]);
    b.table.assign(b.dim, std::vector<Vec>(b.dim, Vec(b.dim, 0)));
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            Vec x(alg.dim, 0), y(alg.dim, 0);
            x[free_cols[i]] = 1;
            y[free_cols[j]] = 1;
            Vec prod = reduce(alg.multiply(x, y));
            for (int k = 0; k < b.dim; ++k) b.table[i][j][k] = prod[free_cols[k]];
        }
    return out;
}

// number of graded blocks: primitive idempotents of the parity-fixed part of
// the center of the semisimple quotient, counted as dim ker(Frobenius - id)
inline int structure_graded_block_count(const StructureAlgebra& alg) {
    using namespace modp;
    SemisimpleQuotient q = structure_semisimple_quotient(alg);
    const StructureAlgebra& b = q.algebra;
    long long p = b.p;
    // center: kernel of the stacked L_{e_i} - R_{e_i}
    Mat cons;
    for (int i = 0; i < b.dim; ++i) {
        Vec ei(b.dim, 0);
        ei[i] = 1;
        Mat l = b.left_mult(ei), r = b.right_mult(ei);
        for (int row = 0; row < b.dim; ++row) {
            Vec c(b.dim, 0);
            for (int col = 0; col < b.dim; ++col) c[col] = norm(l[row][col] - r[row][col], p);
            cons.push_back(std::move(c));
        }
    }
    // ... intersected with the parity-fixed part (even coordinates only)
    for (int j = 0; j < b.dim; ++j)
        if (b.parity[j]) {
            Vec c(b.dim, 0);
            c[j] = 1;
            cons.push_back(std::move(c));
        }
    Mat zfix = null_space(cons, b.dim, p);
    if (zfix.empty()) return 0;
    // Frobenius on the commutative algebra spanned by zfix
    Mat frob_minus_id;
    Mat zech = row_basis(zfix, p);
    std::vector<int> zpiv;
    for (const auto& r : zech)
        for (int j = 0; j < b.dim; ++j)
            if (r[j]) {
                zpiv.push_back(j);
                break;
            }
    auto coords_in_z = [&](Vec v) {
        Vec out(zech.size(), 0);
        for (size_t r = 0; r < zech.size(); ++r) {
            long long c = v[zpiv[r]];
            out[r] = c;
            if (!c) continue;
            for (int j = 0; j < b.dim; ++j) v[j] = norm(v[j] - c * zech[r][j], p);
        }
        for (int j = 0; j < b.dim; ++j)
            if (v[j]) throw std::logic_error("Frobenius image left the fixed center");
        return out;
    };
    for (size_t i = 0; i < zech.size(); ++i) {
        Vec x = zech[i];
        Vec acc = x;
        for (long long t = 1; t < p; ++t) acc = b.multiply(acc, x);
        Vec co = coords_in_z(acc);
        co[i] = norm(co[i] - 1, p);
        frob_minus_id.push_back(std::move(co));
    }
    return (int)null_space(frob_minus_id, zech.size(), p).size();
}

}  // namespace hcq
