#pragma once

// Hermite and Smith normal forms, integer kernels, exact solving and
// determinants.

#include <kumlat/exact_matrix.hpp>

#include <optional>
#include <utility>

namespace kumlat {

struct HnfResult {
    IntMatrix H;  ///< row Hermite normal form
    IntMatrix U;  ///< unimodular, U * A == H
    std::size_t rank = 0;
};

/// Row Hermite normal form. Pivots are positive, entries above a pivot lie in
/// [0, pivot), zero rows come last.
inline HnfResult hnf(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    IntMatrix H = A;
    IntMatrix U = IntMatrix::identity(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // Euclid on column c among rows r..m-1
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (H(i, c) == 0) continue;
                if (best == m || abs(H(i, c)) < abs(H(best, c))) best = i;
            }
            if (best == m) break;
            H.swap_rows(r, best);
            U.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (H(i, c) == 0) continue;
                const Integer q = floor_div(H(i, c), H(r, c));
                H.add_row_multiple(i, r, -q);
                U.add_row_multiple(i, r, -q);
                if (H(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H(r, c) == 0) continue;
        if (H(r, c) < 0) {
            H.negate_row(r);
            U.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = floor_div(H(i, c), H(r, c));
            H.add_row_multiple(i, r, -q);
            U.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return {std::move(H), std::move(U), r};
}

/// True if H satisfies the row-HNF predicate used by hnf().
inline bool is_row_hnf(const IntMatrix& H) {
    std::size_t prev_pivot = 0;
    bool seen_zero = false;
    bool first = true;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t p = 0;
        while (p < H.cols() && H(i, p) == 0) ++p;
        if (p == H.cols()) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) return false;
        if (!first && p <= prev_pivot) return false;
        if (H(i, p) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (H(k, p) < 0 || H(k, p) >= H(i, p)) return false;
        prev_pivot = p;
        first = false;
    }
    return true;
}

struct SnfResult {
    IntMatrix D;  ///< diagonal, d1 | d2 | ..., nonnegative
    IntMatrix U;  ///< unimodular
    IntMatrix V;  ///< unimodular, U * A * V == D
    std::size_t rank = 0;

    IntVector diagonal() const {
        IntVector d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }
};

inline SnfResult snf(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    IntMatrix D = A;
    IntMatrix U = IntMatrix::identity(m);
    IntMatrix V = IntMatrix::identity(n);
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        bool nonzero = true;
        for (;;) {
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (D(i, j) == 0) continue;
                    if (bi == m || abs(D(i, j)) < abs(D(bi, bj))) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == m) {
                nonzero = false;
                break;
            }
            D.swap_rows(t, bi);
            U.swap_rows(t, bi);
            D.swap_cols(t, bj);
            V.swap_cols(t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                const Integer q = D(i, t) / D(t, t);
                D.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                const Integer q = D(t, j) / D(t, t);
                D.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into row t and go again
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            D.add_row_multiple(t, bad, Integer(1));
            U.add_row_multiple(t, bad, Integer(1));
        }
        if (!nonzero) break;
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return {std::move(D), std::move(U), std::move(V), t};
}

/// Elementary divisors (diagonal of the Smith form), nonzero ones only.
inline IntVector elementary_divisors(const IntMatrix& A) {
    IntVector out;
    for (const auto& d : snf(A).diagonal())
        if (d != 0) out.push_back(d);
    return out;
}

/// Basis rows of {x in Z^n : x * A^T == 0}, saturated, in HNF.
inline IntMatrix integer_kernel(const IntMatrix& A) {
    const std::size_t n = A.cols();
    if (A.rows() == 0) return IntMatrix::identity(n);
    auto res = hnf(A.transpose());
    IntMatrix K = res.U.row_range(res.rank, n - res.rank);
    if (K.rows() == 0) return K;
    return hnf(K).H;
}

/// Reduced row echelon form over Q; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(RatMatrix& M, std::size_t pivot_cols_limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols_limit && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && M(p, c) == 0) ++p;
        if (p == M.rows()) continue;
        M.swap_rows(r, p);
        const Rational inv = Rational(1) / M(r, c);
        for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) *= inv;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == 0) continue;
            const Rational f = -M(i, c);
            M.add_row_multiple(i, r, f);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const RatMatrix& A) {
    RatMatrix M = A;
    return rref_in_place(M, M.cols()).size();
}

inline std::size_t rank(const IntMatrix& A) { return rank(to_rational(A)); }

/// Some x with x * A == b, or nullopt if the system is inconsistent.
/// Unique when A has full row rank.
inline std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b) {
    if (b.size() != A.cols()) throw error("solve_rational: right-hand side length mismatch");
    const std::size_t k = A.rows();
    // A^T x^T = b^T, augmented
    RatMatrix M(A.cols(), k + 1);
    for (std::size_t i = 0; i < A.cols(); ++i) {
        for (std::size_t j = 0; j < k; ++j) M(i, j) = A(j, i);
        M(i, k) = b[i];
    }
    const auto pivots = rref_in_place(M, k);
    for (std::size_t i = pivots.size(); i < M.rows(); ++i)
        if (M(i, k) != 0) return std::nullopt;
    RatVector x(k, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M(r, k);
    return x;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
inline Integer determinant(const IntMatrix& A) {
    if (!A.square()) throw error("determinant of a non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            M.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

/// Exact rational determinant: rows are scaled to integers, then Bareiss.
inline Rational determinant(const RatMatrix& A) {
    if (!A.square()) throw error("determinant of a non-square matrix");
    IntMatrix M(A.rows(), A.cols());
    Integer scale = 1;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Integer d = 1;
        for (std::size_t j = 0; j < A.cols(); ++j) d = lcm(d, denominator(A(i, j)));
        for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = numerator(A(i, j) * Rational(d));
        scale *= d;
    }
    return Rational(determinant(M)) / Rational(scale);
}

inline RatMatrix inverse(const RatMatrix& A) {
    if (!A.square()) throw error("inverse of a non-square matrix");
    const std::size_t n = A.rows();
    RatMatrix M = hstack(A, RatMatrix::identity(n));
    if (rref_in_place(M, n).size() != n) throw error("inverse of a singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = M(i, n + j);
    return inv;
}

/// Rational basis (rows) of {x : x * A^T == 0}.
inline RatMatrix rational_kernel(const RatMatrix& A) {
    auto [Ai, d] = clear_denominators(A);
    (void)d;
    return to_rational(integer_kernel(Ai));
}

}  // namespace kumlat
