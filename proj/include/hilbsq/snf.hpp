#pragma once

// Smith normal form over the integers, with the unimodular transforms, and
// the lattice constructions built on it: saturation of a row span,
// primitivity testing and membership in a row lattice.
//
// Pivot selection is deterministic: the entry of smallest nonzero absolute
// value in the trailing submatrix, scanned row-major, first hit wins. The
// output is therefore reproducible byte for byte.

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hilbsq {

struct SnfResult {
    // Elementary divisors d_1 | d_2 | ..., nonnegative, padded with zeros up
    // to min(rows, cols). left * input * right equals diag(diag).
    std::vector<Int> diag;
    IntMat left;
    IntMat right;
};

namespace detail {

struct SnfWork {
    IntMat a;
    IntMat left;       // accumulated row transforms
    IntMat right;      // accumulated column transforms
    IntMat right_inv;  // inverse of right, tracked incrementally
};

inline void snf_swap_rows(SnfWork& w, std::size_t i, std::size_t j) {
    w.a.swap_rows(i, j);
    w.left.swap_rows(i, j);
}

inline void snf_swap_cols(SnfWork& w, std::size_t i, std::size_t j) {
    w.a.swap_cols(i, j);
    w.right.swap_cols(i, j);
    w.right_inv.swap_rows(i, j);
}

// row[i] += c * row[j]
inline void snf_add_row(SnfWork& w, std::size_t i, std::size_t j, const Int& c) {
    w.a.add_row(i, j, c);
    w.left.add_row(i, j, c);
}

// col[i] += c * col[j]; right_inv picks up the inverse operation as a row op.
inline void snf_add_col(SnfWork& w, std::size_t i, std::size_t j, const Int& c) {
    w.a.add_col(i, j, c);
    w.right.add_col(i, j, c);
    w.right_inv.add_row(j, i, -c);
}

inline void snf_negate_row(SnfWork& w, std::size_t i) {
    w.a.negate_row(i);
    w.left.negate_row(i);
}

// Locate the smallest nonzero |entry| in the trailing submatrix starting at
// (t, t); row-major scan, strict improvement only.
inline bool snf_find_pivot(const IntMat& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs_int(a(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

inline SnfWork smith_with_transforms(const IntMat& m) {
    SnfWork w{m, IntMat::identity(m.rows()), IntMat::identity(m.cols()),
              IntMat::identity(m.cols())};
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t steps = rows < cols ? rows : cols;

    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!snf_find_pivot(w.a, t, pi, pj)) break;
        snf_swap_rows(w, t, pi);
        snf_swap_cols(w, t, pj);

        for (;;) {
            // Reduce column t below the pivot.
            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.a(i, t) == 0) continue;
                Int q = w.a(i, t) / w.a(t, t);
                snf_add_row(w, i, t, -q);
                if (w.a(i, t) != 0) {
                    // Nonzero remainder: it is strictly smaller, promote it.
                    snf_swap_rows(w, t, i);
                    changed = true;
                }
            }
            if (changed) continue;
            // Reduce row t to the right of the pivot.
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.a(t, j) == 0) continue;
                Int q = w.a(t, j) / w.a(t, t);
                snf_add_col(w, j, t, -q);
                if (w.a(t, j) != 0) {
                    snf_swap_cols(w, t, j);
                    changed = true;
                    break;
                }
            }
            if (changed) continue;

            // Pivot now divides its row and column; enforce divisibility of
            // the whole trailing block so the divisor chain comes out right.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        snf_add_row(w, t, i, Int(1));
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
        }

        if (w.a(t, t) < 0) snf_negate_row(w, t);
    }
    return w;
}

inline std::size_t snf_rank(const SnfWork& w) {
    std::size_t steps = w.a.rows() < w.a.cols() ? w.a.rows() : w.a.cols();
    std::size_t s = 0;
    while (s < steps && w.a(s, s) != 0) ++s;
    return s;
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntMat& m) {
    detail::SnfWork w = detail::smith_with_transforms(m);
    const std::size_t steps = m.rows() < m.cols() ? m.rows() : m.cols();
    SnfResult out;
    out.diag.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) out.diag.push_back(w.a(t, t));
    out.left = std::move(w.left);
    out.right = std::move(w.right);
    return out;
}

// Elementary divisors only (divisor chain, padded with zeros).
inline std::vector<Int> elementary_divisors(const IntMat& m) {
    return smith_normal_form(m).diag;
}

// Basis of the saturation of the row span of `generators`:
// (Q-span of the rows) intersected with Z^n. With L*M*R = D the row lattice
// of M equals that of D*R^{-1}, so the first rank(M) rows of R^{-1} are a
// basis of the saturation.
inline IntMat saturate(const IntMat& generators) {
    detail::SnfWork w = detail::smith_with_transforms(generators);
    const std::size_t s = detail::snf_rank(w);
    IntMat out(s, generators.cols());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j) out(i, j) = w.right_inv(i, j);
    return out;
}

// A row span is primitive iff its nonzero elementary divisors are all 1.
inline bool is_primitive_span(const IntMat& generators) {
    for (const Int& d : elementary_divisors(generators))
        if (d != 0 && d != 1) return false;
    return true;
}

// Saturated basis of the integer kernel {v : M v = 0}: the trailing columns
// of the right SNF transform. They extend to a basis of Z^n, so the span is
// automatically saturated.
inline IntMat integer_kernel(const IntMat& m) {
    detail::SnfWork w = detail::smith_with_transforms(m);
    const std::size_t s = detail::snf_rank(w);
    const std::size_t n = m.cols();
    IntMat out(n - s, n);
    for (std::size_t k = s; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) out(k - s, i) = w.right(i, k);
    return out;
}

// Integer coordinates of row vectors in the row lattice of a fixed matrix N.
// Solving x^T N = p through L N R = D: y_i = (p R)_i / d_i must be integral
// on the pivot block and (p R)_i must vanish beyond it; then x^T = y^T L.
// The SNF of N is computed once and reused across queries.
class RowLatticeSolver {
public:
    explicit RowLatticeSolver(const IntMat& n_rows)
        : work_(detail::smith_with_transforms(n_rows)), rank_(detail::snf_rank(work_)) {}

    std::optional<std::vector<Int>> coords(const std::vector<Int>& p) const {
        const std::size_t k = work_.a.rows(), n = work_.a.cols();
        if (p.size() != n) throw std::invalid_argument("RowLatticeSolver: length mismatch");

        std::vector<Int> pr(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (p[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (work_.right(i, j) != 0) pr[j] += p[i] * work_.right(i, j);
        }

        std::vector<Int> y(k, 0);
        for (std::size_t i = 0; i < rank_; ++i) {
            if (pr[i] % work_.a(i, i) != 0) return std::nullopt;
            y[i] = pr[i] / work_.a(i, i);
        }
        for (std::size_t j = rank_; j < n; ++j)
            if (pr[j] != 0) return std::nullopt;

        std::vector<Int> x(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (y[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j)
                if (work_.left(i, j) != 0) x[j] += y[i] * work_.left(i, j);
        }
        return x;
    }

private:
    detail::SnfWork work_;
    std::size_t rank_;
};

inline std::optional<std::vector<Int>> coords_in_row_lattice(const IntMat& n_rows,
                                                             const std::vector<Int>& p) {
    return RowLatticeSolver(n_rows).coords(p);
}

}  // namespace hilbsq
