#pragma once

// Dense integer matrices with exact GMP arithmetic, Smith normal form with
// unimodular transforms, kernels of integer matrices over residue rings
// Z/qZ, and F_p nullspace by plain elimination.

#include <torsionlab/integer.hpp>

#include <cassert>
#include <cstddef>
#include <vector>

namespace torsionlab {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    IntMatrix operator*(const IntMatrix& o) const {
        assert(cols == o.rows);
        IntMatrix r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const Int& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
};

// Fraction-free (Bareiss) determinant; matrix must be square.
inline Int determinant(IntMatrix m) {
    assert(m.rows == m.cols);
    std::size_t n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

struct SmithForm {
    IntMatrix U, D, V;  // U*R*V = D, U and V unimodular, diag(D) = d1 | d2 | ...
    std::size_t rank = 0;
};

// Classical SNF by alternating row/column reduction, tracking transforms.
inline SmithForm smith_normal_form(const IntMatrix& R) {
    SmithForm s;
    s.D = R;
    s.U = IntMatrix::identity(R.rows);
    s.V = IntMatrix::identity(R.cols);
    IntMatrix& D = s.D;
    IntMatrix& U = s.U;
    IntMatrix& V = s.V;
    std::size_t m = R.rows, n = R.cols;
    std::size_t t = 0;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) std::swap(D(i, c), D(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(U(i, c), U(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) std::swap(D(r, i), D(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(V(r, i), V(r, j));
    };
    auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < n; ++j) D(dst, j) += c * D(src, j);
        for (std::size_t j = 0; j < m; ++j) U(dst, j) += c * U(src, j);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < m; ++i) D(i, dst) += c * D(i, src);
        for (std::size_t i = 0; i < n; ++i) V(i, dst) += c * V(i, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) D(i, j) = -D(i, j);
        for (std::size_t j = 0; j < m; ++j) U(i, j) = -U(i, j);
    };

    // Quotient rounded to nearest, so remainders satisfy |r| <= |d|/2.
    auto nearest_quot = [](const Int& a, const Int& d) {
        Int q = a / d;  // truncated
        Int r = a - q * d;
        if (2 * abs(r) > abs(d)) q += (r < 0) == (d < 0) ? 1 : -1;
        return q;
    };

    for (; t < m && t < n; ++t) {
        bool found = true;
        while (true) {
            // Re-pick the nonzero entry of least absolute value as pivot on
            // every pass; this is what guarantees termination and keeps
            // intermediate entries small.
            std::size_t pi = t, pj = t;
            found = false;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
                        best = abs(D(i, j));
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found) break;
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);

            bool changed = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                addmul_row(i, t, -nearest_quot(D(i, t), D(t, t)));
                if (D(i, t) != 0) changed = true;  // remainder smaller than pivot
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                addmul_col(j, t, -nearest_quot(D(t, j), D(t, t)));
                if (D(t, j) != 0) changed = true;
            }
            if (changed) continue;
            // Pivot must divide every entry of the trailing block.
            bool bad = false;
            for (std::size_t i = t + 1; i < m && !bad; ++i)
                for (std::size_t j = t + 1; j < n && !bad; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        addmul_row(t, i, Int(1));
                        bad = true;
                    }
            if (!bad) break;
        }
        if (!found) break;
        if (D(t, t) < 0) negate_row(t);
    }
    s.rank = t;
    for (std::size_t i = 0; i < t; ++i)
        if (D(i, i) == 0) {
            s.rank = i;
            break;
        }
    return s;
}

// Sanity wrapper: recomputes U*R*V and the transform determinants.
inline bool verify_smith(const IntMatrix& R, const SmithForm& s) {
    if (!(s.U * R * s.V == s.D)) return false;
    Int du = determinant(s.U), dv = determinant(s.V);
    if (abs(du) != 1 || abs(dv) != 1) return false;
    std::size_t k = std::min(s.D.rows, s.D.cols);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (s.D(i, i) != 0 && s.D(i + 1, i + 1) != 0 && s.D(i + 1, i + 1) % s.D(i, i) != 0) return false;
        if (s.D(i, i) == 0 && s.D(i + 1, i + 1) != 0) return false;
    }
    for (std::size_t i = 0; i < s.D.rows; ++i)
        for (std::size_t j = 0; j < s.D.cols; ++j)
            if (i != j && s.D(i, j) != 0) return false;
    return true;
}

// Generators of { x in (Z/q)^n : A x = 0 mod q }, as pairs (vector, order).
// Each kernel element is a unique combination sum c_i * gen_i with
// 0 <= c_i < order_i.
struct ModKernel {
    long q = 0;
    std::vector<std::vector<long>> generators;
    std::vector<long> orders;  // order of each generator in the kernel group

    Int size() const {
        Int s = 1;
        for (long o : orders) s *= o;
        return s;
    }
};

inline ModKernel kernel_mod_q_snf(const IntMatrix& A, long q) {
    SmithForm s = smith_normal_form(A);
    std::size_t n = A.cols;
    ModKernel ker;
    ker.q = q;
    Int Q(q);
    for (std::size_t i = 0; i < n; ++i) {
        Int d = (i < std::min(A.rows, A.cols)) ? s.D(i, i) : Int(0);
        Int g = gcd(d, Q);
        if (d == 0) g = Q;
        if (g == 1) continue;  // only the zero multiple survives
        Int scale = Q / g;
        std::vector<long> v(n);
        for (std::size_t r = 0; r < n; ++r) {
            Int e = (s.V(r, i) * scale) % Q;
            if (e < 0) e += Q;
            v[r] = e.get_si();
        }
        ker.generators.push_back(std::move(v));
        ker.orders.push_back(g.get_si());
    }
    return ker;
}

// Nullspace basis of A over F_p (A entries are reduced mod p internally).
inline std::vector<std::vector<long>> nullspace_mod_p(std::vector<std::vector<long>> A, long p) {
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    for (auto& row : A)
        for (auto& x : row) x = mod_reduce(x, p);

    std::vector<long> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && A[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(A[r], A[piv]);
        long inv = mod_pow(A[r][c], p - 2, p);
        for (std::size_t j = 0; j < n; ++j) A[r][j] = mod_reduce(A[r][j] * inv, p);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || A[i][c] == 0) continue;
            long f = A[i][c];
            for (std::size_t j = 0; j < n; ++j) A[i][j] = mod_reduce(A[i][j] - f * A[r][j], p);
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }

    std::vector<bool> is_pivot(n, false);
    for (long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<long>> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<long> v(n, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = mod_reduce(-A[i][c], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact membership of an integer vector in the row lattice of R.
inline bool lattice_contains(const IntMatrix& R, const std::vector<Int>& target) {
    assert(target.size() == R.cols);
    SmithForm s = smith_normal_form(R);
    // t in rowspan(R) <=> t*V lies in rowspan(D).
    std::size_t n = R.cols;
    std::vector<Int> tv(n, Int(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) tv[j] += target[i] * s.V(i, j);
    for (std::size_t j = 0; j < n; ++j) {
        Int d = (j < std::min(R.rows, R.cols)) ? s.D(j, j) : Int(0);
        if (d == 0) {
            if (tv[j] != 0) return false;
        } else if (tv[j] % d != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace torsionlab
