#pragma once

// Integral lattices: a rank together with a symmetric integer Gram matrix.
// Standard constructions (hyperbolic plane, E8(-1), rank-one, the K3
// lattice) and the exact invariants: determinant, discriminant, signature,
// parity, unimodularity, rational inverse Gram, orthogonal complements.

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/matrix.hpp"
#include "hilbsq/snf.hpp"

#include <cstddef>
#include <utility>

namespace hilbsq {

class IntLattice {
public:
    IntLattice() = default;

    explicit IntLattice(IntMat gram) : gram_(std::move(gram)) {
        if (!gram_.is_square()) throw std::invalid_argument("IntLattice: Gram matrix not square");
        if (!gram_.is_symmetric())
            throw std::invalid_argument("IntLattice: Gram matrix not symmetric");
    }

    std::size_t rank() const { return gram_.rows(); }
    const IntMat& gram() const { return gram_; }

    bool operator==(const IntLattice& other) const { return gram_ == other.gram_; }

private:
    IntMat gram_;
};

// ---- standard lattices ----

inline IntLattice hyperbolic_u() {
    return IntLattice(IntMat{{Int(0), Int(1)}, {Int(1), Int(0)}});
}

// E8 with the form negated; nodes 1..7 form a chain, node 8 hangs off node 3.
inline IntLattice e8_minus() {
    IntMat g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
    const std::pair<std::size_t, std::size_t> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                                         {4, 5}, {5, 6}, {2, 7}};
    for (auto [a, b] : edges) {
        g(a, b) = 1;
        g(b, a) = 1;
    }
    return IntLattice(g);
}

inline IntLattice rank_one(const Int& k) {
    IntMat g(1, 1);
    g(0, 0) = k;
    return IntLattice(g);
}

inline IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
    const std::size_t ra = a.rank(), rb = b.rank();
    IntMat g(ra + rb, ra + rb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < rb; ++j) g(ra + i, ra + j) = b.gram()(i, j);
    return IntLattice(g);
}

// The K3 lattice in the fixed basis convention: indices 1-8 and 9-16 carry
// the two E8(-1) copies, 17-18, 19-20, 21-22 the three hyperbolic planes.
inline const IntLattice& k3_lattice() {
    static const IntLattice l = direct_sum(
        direct_sum(e8_minus(), e8_minus()),
        direct_sum(direct_sum(hyperbolic_u(), hyperbolic_u()), hyperbolic_u()));
    return l;
}

// ---- invariants ----

inline Int determinant(const IntLattice& l) { return determinant(l.gram()); }

inline Int discriminant(const IntLattice& l) { return abs_int(determinant(l)); }

inline bool is_unimodular(const IntLattice& l) { return discriminant(l) == 1; }

// Even iff every diagonal Gram entry is even (off-diagonal terms contribute
// to q(x) with a factor of 2).
inline bool is_even(const IntLattice& l) {
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (l.gram()(i, i) % 2 != 0) return false;
    return true;
}

// Signature (positive count, negative count) by symmetric congruence
// elimination over the rationals. When a diagonal pivot vanishes, first try
// a symmetric swap with a later nonzero diagonal entry, otherwise repair by
// adding a row/column pair (which makes the pivot 2*a_tj != 0).
inline std::pair<std::size_t, std::size_t> signature(const IntLattice& l) {
    if (determinant(l) == 0) throw DegenerateLattice("signature: det = 0");
    const std::size_t n = l.rank();
    RatMat a = to_rat(l.gram());
    std::size_t pos = 0, neg = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (a(t, t) == 0) {
            std::size_t j = t + 1;
            while (j < n && a(j, j) == 0) ++j;
            if (j < n) {
                a.swap_rows(t, j);
                a.swap_cols(t, j);
            } else {
                j = t + 1;
                while (j < n && a(t, j) == 0) ++j;
                if (j == n)
                    throw InternalInconsistency("signature: zero block in non-degenerate form");
                a.add_row(t, j, Rat(1));
                a.add_col(t, j, Rat(1));
            }
        }
        const Rat pivot = a(t, t);
        if (pivot > 0)
            ++pos;
        else
            ++neg;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (a(i, t) == 0) continue;
            Rat f = -a(i, t) / pivot;
            a.add_row(i, t, f);
            a.add_col(i, t, f);
        }
    }
    return {pos, neg};
}

// Exact rational inverse of the Gram matrix; integral whenever the lattice
// is unimodular.
inline RatMat inverse_gram(const IntLattice& l) {
    RatMat out;
    if (!try_invert(to_rat(l.gram()), out)) throw DegenerateLattice("inverse_gram: det = 0");
    return out;
}

// Basis of {v in Z^n : b(v, s) = 0 for every row s of sub}, i.e. the
// saturated integer kernel of sub * gram.
inline IntMat orthogonal_complement(const IntLattice& l, const IntMat& sub) {
    if (sub.cols() != l.rank())
        throw std::invalid_argument("orthogonal_complement: vector length != rank");
    return integer_kernel(sub * l.gram());
}

}  // namespace hilbsq
