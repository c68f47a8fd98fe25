#include "toric/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return abs(g);
}

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVec primitive_vector(const IntVec& v) {
    Int g = vec_gcd(v);
    if (g == 0) throw std::invalid_argument("primitive_vector: zero vector");
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

IntVec rat_dir_to_int(const RatVec& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = lcm(lcm_den, denominator(x));
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        w[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    return primitive_vector(w);
}

IntMat mat_from_rows(const std::vector<IntVec>& rows) { return rows; }

IntMat mat_from_cols(const std::vector<IntVec>& cols) {
    if (cols.empty()) return {};
    size_t m = cols[0].size();
    IntMat a(m, IntVec(cols.size(), 0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];
    return a;
}

IntMat transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t(a[0].size(), IntVec(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RatMat transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat t(a[0].size(), RatVec(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    IntMat c(m, IntVec(n, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    RatMat c(m, RatVec(n, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
    IntVec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
    RatVec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

IntMat identity_int(int n) {
    IntMat a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

RatMat identity_rat(int n) {
    RatMat a(n, RatVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

RatMat to_rat(const IntMat& a) {
    RatMat b(a.size());
    for (size_t i = 0; i < a.size(); ++i) b[i] = to_rat(a[i]);
    return b;
}

// Row echelon; returns rank.  Used by rank/solve/nullspace below.
static int echelon(RatMat& a, std::vector<int>* pivot_cols = nullptr) {
    size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        Rat inv = 1 / a[row][col];
        for (size_t j = col; j < n; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        if (pivot_cols) pivot_cols->push_back(static_cast<int>(col));
        ++row;
    }
    return static_cast<int>(row);
}

int rank_rat(RatMat a) { return echelon(a); }

Rat det_rat(RatMat a) {
    size_t n = a.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(a[p], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = 1 / a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] * inv;
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

Int det_int(const IntMat& a) {
    Rat d = det_rat(to_rat(a));
    return numerator(d);  // denominator is 1 for integer input
}

std::optional<RatVec> solve_rat(RatMat a, RatVec b) {
    size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
    for (size_t i = 0; i < m; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots;
    echelon(a, &pivots);
    // Inconsistent iff a pivot lands in the augmented column.
    for (size_t i = 0; i < m; ++i) {
        bool all_zero = true;
        for (size_t j = 0; j < n; ++j)
            if (a[i][j] != 0) { all_zero = false; break; }
        if (all_zero && a[i][n] != 0) return std::nullopt;
    }
    RatVec x(n, 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] < static_cast<int>(n)) x[pivots[r]] = a[r][n];
    return x;
}

std::vector<RatVec> nullspace_rat(RatMat a) {
    size_t n = a.empty() ? 0 : a[0].size();
    std::vector<int> pivots;
    int r = echelon(a, &pivots);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec x(n, 0);
        x[free_col] = 1;
        for (int row = 0; row < r; ++row)
            x[pivots[row]] = -a[row][free_col];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatMat> invert_rat(RatMat a) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        a[i].resize(2 * n, 0);
        a[i][n + i] = 1;
    }
    if (echelon(a) != static_cast<int>(n)) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

// -- Smith normal form -------------------------------------------------------

namespace {

struct SmithWork {
    IntMat a, u, u_inv, v, v_inv;

    void row_swap(size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
        for (auto& row : u_inv) std::swap(row[i], row[j]);
    }
    void col_swap(size_t i, size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
        std::swap(v_inv[i], v_inv[j]);
    }
    // row i -= f * row j
    void row_axpy(size_t i, size_t j, const Int& f) {
        for (size_t c = 0; c < a[i].size(); ++c) a[i][c] -= f * a[j][c];
        for (size_t c = 0; c < u[i].size(); ++c) u[i][c] -= f * u[j][c];
        for (auto& row : u_inv) row[j] += f * row[i];
    }
    // col i -= f * col j
    void col_axpy(size_t i, size_t j, const Int& f) {
        for (auto& row : a) row[i] -= f * row[j];
        for (auto& row : v) row[i] -= f * row[j];
        for (size_t c = 0; c < v_inv[j].size(); ++c) v_inv[j][c] += f * v_inv[i][c];
    }
    void row_negate(size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
        for (auto& row : u_inv) row[i] = -row[i];
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& a_in) {
    size_t m = a_in.size(), n = a_in.empty() ? 0 : a_in[0].size();
    SmithWork w;
    w.a = a_in;
    w.u = identity_int(static_cast<int>(m));
    w.u_inv = identity_int(static_cast<int>(m));
    w.v = identity_int(static_cast<int>(n));
    w.v_inv = identity_int(static_cast<int>(n));

    size_t t = 0;
    while (t < m && t < n) {
        // Find a nonzero pivot in the trailing block.
        size_t pi = m, pj = n;
        for (size_t i = t; i < m && pi == m; ++i)
            for (size_t j = t; j < n; ++j)
                if (w.a[i][j] != 0) { pi = i; pj = j; break; }
        if (pi == m) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        // Clear row and column t; restart whenever a remainder appears.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (w.a[i][t] == 0) continue;
                Int q = w.a[i][t] / w.a[t][t];
                w.row_axpy(i, t, q);
                if (w.a[i][t] != 0) {  // remainder: swap up and continue
                    w.row_swap(t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (w.a[t][j] == 0) continue;
                Int q = w.a[t][j] / w.a[t][t];
                w.col_axpy(j, t, q);
                if (w.a[t][j] != 0) {
                    w.col_swap(t, j);
                    dirty = true;
                }
            }
        }
        if (w.a[t][t] < 0) w.row_negate(t);
        ++t;
    }
    size_t rank = t;

    // Enforce the divisibility chain d_i | d_{i+1}.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < rank; ++i) {
            if (w.a[i + 1][i + 1] % w.a[i][i] == 0) continue;
            changed = true;
            // col i += col i+1, then re-reduce the 2x2 block.
            w.col_axpy(i, i + 1, Int(-1));
            while (w.a[i + 1][i] != 0 || w.a[i][i + 1] != 0) {
                if (w.a[i + 1][i] != 0) {
                    Int q = w.a[i + 1][i] / w.a[i][i];
                    w.row_axpy(i + 1, i, q);
                    if (w.a[i + 1][i] != 0) w.row_swap(i, i + 1);
                }
                if (w.a[i][i + 1] != 0) {
                    Int q = w.a[i][i + 1] / w.a[i][i];
                    w.col_axpy(i + 1, i, q);
                    if (w.a[i][i + 1] != 0) w.col_swap(i, i + 1);
                }
            }
            if (w.a[i][i] < 0) w.row_negate(i);
            if (w.a[i + 1][i + 1] < 0) w.row_negate(i + 1);
        }
    }

    SmithForm out;
    out.u = std::move(w.u);
    out.u_inv = std::move(w.u_inv);
    out.v = std::move(w.v);
    out.v_inv = std::move(w.v_inv);
    out.d = std::move(w.a);
    out.rank = static_cast<int>(rank);
    for (size_t i = 0; i < rank; ++i) out.invariants.push_back(out.d[i][i]);
    return out;
}

std::vector<IntVec> integer_kernel(const IntMat& a) {
    if (a.empty()) return {};
    size_t n = a[0].size();
    SmithForm s = smith_normal_form(a);
    // a x = 0  <=>  d (v^{-1} x) = 0  <=>  x in span of last n-rank columns of v.
    std::vector<IntVec> basis;
    for (size_t j = s.rank; j < n; ++j) {
        IntVec col(n);
        for (size_t i = 0; i < n; ++i) col[i] = s.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

IntMat unimodular_inverse(const IntMat& a) {
    auto inv = invert_rat(to_rat(a));
    if (!inv) throw std::invalid_argument("unimodular_inverse: singular matrix");
    IntMat out(a.size(), IntVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) {
            if (!is_integer((*inv)[i][j]))
                throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
            out[i][j] = numerator((*inv)[i][j]);
        }
    return out;
}

}  // namespace toric
