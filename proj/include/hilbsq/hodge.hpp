#pragma once

// Construction and certification of the lattice of integral (2,2) classes
// on the Hilbert square of a general projective K3 surface: the rational
// basis, the integral basis in both its product form and its Nakajima form,
// Gram matrices, discriminants, parity, indivisibility and the saturation
// certificate.

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/hilb2.hpp"
#include "hilbsq/k3.hpp"
#include "hilbsq/lattice.hpp"
#include "hilbsq/matrix.hpp"
#include "hilbsq/snf.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hilbsq {

// rank of the (2,2) lattice for Picard rank r.
inline std::size_t hodge22_rank(std::size_t r) { return r * (r + 1) / 2 + r + 2; }

namespace detail {

inline void require_general(const K3Config& cfg) {
    if (!cfg.assume_general())
        throw GeneralityRequired(
            "GeneralityRequired: (2,2) bases are only valid under the generality assumption");
}

}  // namespace detail

// Rational basis of the (2,2) classes: 1/2 q_2(b_i), the point class
// generator q_1(1)q_1(x), 1/2 q_1(b_i)^2, q_1(b_i)q_1(b_j) for i < j, and
// delta^2. Linear independence is verified by an exact rank computation.
inline std::vector<H4Class> rational_basis(const K3Config& cfg) {
    detail::require_general(cfg);
    const std::size_t r = cfg.pic_rank();
    std::vector<H4Class> basis;
    basis.reserve(hodge22_rank(r));
    for (std::size_t i = 0; i < r; ++i) basis.push_back(q2_class(cfg.picard_row(i)) * Rat(1, 2));
    basis.push_back(point_class());
    for (std::size_t i = 0; i < r; ++i)
        basis.push_back(q1q1_class(cfg.picard_row(i), cfg.picard_row(i)) * Rat(1, 2));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            basis.push_back(q1q1_class(cfg.picard_row(i), cfg.picard_row(j)));
    basis.push_back(delta_squared());

    RatMat coords(basis.size(), kH4Dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < kH4Dim; ++j) coords(i, j) = basis[i].c[j];
    if (rank_rat(coords) != basis.size())
        throw InternalInconsistency("rational_basis: elements are linearly dependent");
    return basis;
}

// Integral basis in product form, reading order: b_i b_j lexicographic with
// i <= j, then (b_i^2 - b_i delta)/2, then (1/8)(delta^2 + (2/5) q_dual),
// then delta^2.
inline std::vector<H4Class> integral_basis(const K3Config& cfg) {
    detail::require_general(cfg);
    const std::size_t r = cfg.pic_rank();
    std::vector<H4Class> basis;
    basis.reserve(hodge22_rank(r));
    std::vector<H2Class> b(r);
    for (std::size_t i = 0; i < r; ++i) b[i] = H2Class::from_lambda(cfg.picard_row(i));

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) basis.push_back(cup(b[i], b[j]));
    for (std::size_t i = 0; i < r; ++i)
        basis.push_back((cup(b[i], b[i]) - cup(b[i], H2Class::delta())) * Rat(1, 2));
    basis.push_back(point_class());
    basis.push_back(delta_squared());

    for (const H4Class& x : basis)
        if (!is_integral(x))
            throw InternalInconsistency("integral_basis: produced a non-integral element");
    return basis;
}

// The same lattice in Nakajima form: q_2(b_i), q_1(1)q_1(x),
// (q_1(b_i)^2 - q_2(b_i))/2, q_1(b_i)q_1(b_j) for i < j, delta^2.
inline std::vector<H4Class> nakajima_basis(const K3Config& cfg) {
    detail::require_general(cfg);
    const std::size_t r = cfg.pic_rank();
    std::vector<H4Class> basis;
    basis.reserve(hodge22_rank(r));
    for (std::size_t i = 0; i < r; ++i) basis.push_back(q2_class(cfg.picard_row(i)));
    basis.push_back(point_class());
    for (std::size_t i = 0; i < r; ++i) basis.push_back(m11_class(cfg.picard_row(i)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            basis.push_back(q1q1_class(cfg.picard_row(i), cfg.picard_row(j)));
    basis.push_back(delta_squared());
    return basis;
}

// Integer coordinate matrix of a list of integral classes (rows).
inline IntMat coordinate_matrix(const std::vector<H4Class>& basis) {
    IntMat m(basis.size(), kH4Dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!is_integral(basis[i]))
            throw NotIntegral("coordinate_matrix: non-integral basis element");
        for (std::size_t j = 0; j < kH4Dim; ++j) m(i, j) = numerator(basis[i].c[j]);
    }
    return m;
}

// Symmetric matrix of intersection pairings; requires integral elements.
inline IntMat gram_matrix(const std::vector<H4Class>& basis) {
    const std::size_t k = basis.size();
    for (const H4Class& x : basis)
        if (!is_integral(x)) throw NotIntegral("gram_matrix: non-integral basis element");
    IntMat g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            Int v = to_int(intersection_pairing(basis[i], basis[j]));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

// Closed-form Gram matrix of the generic degree-2t case in the product
// basis {h^2, (h^2 - h delta)/2, point, delta^2}; determinant -84 t^3.
inline IntMat generic_gram_closed_form(const Int& t) {
    if (t < 1) throw InvalidDegree("InvalidDegree: t must be >= 1, got " + t.str());
    Int t2 = t * t;
    return IntMat{{12 * t2, 6 * t2, 2 * t, -4 * t},
                  {6 * t2, t * (3 * t - 1), t, -2 * t},
                  {2 * t, t, Int(1), Int(-1)},
                  {-4 * t, -2 * t, Int(-1), Int(12)}};
}

// True iff the two lists of integral classes span the same sublattice of
// H^4(Z), certified by an integral change of basis with determinant +-1.
inline bool same_lattice_unimodular(const std::vector<H4Class>& basis_a,
                                    const std::vector<H4Class>& basis_b) {
    if (basis_a.size() != basis_b.size()) return false;
    const std::size_t k = basis_a.size();
    RowLatticeSolver solver(coordinate_matrix(basis_b));
    IntMat change(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> p(kH4Dim);
        for (std::size_t j = 0; j < kH4Dim; ++j) p[j] = numerator(basis_a[i].c[j]);
        auto coords = solver.coords(p);
        if (!coords) return false;
        for (std::size_t j = 0; j < k; ++j) change(i, j) = (*coords)[j];
    }
    return abs_int(determinant(change)) == 1;
}

// Certified description of the (2,2) lattice of a configuration.
struct Hodge22Report {
    std::size_t pic_rank = 0;
    std::size_t rank = 0;
    std::vector<H4Class> basis;  // product form
    IntMat gram;
    Int determinant = 0;
    Int discriminant = 0;
    bool is_odd = false;
    bool indivisibility_of_q = false;
    std::vector<Int> saturation_divisors;
    std::optional<bool> closed_form_match;  // generic (rank-1) case only
};

// Full analysis: integral basis, Gram and discriminant, parity,
// indivisibility of (2/5) q_dual, and the saturation certificate (all-ones
// elementary divisors of the 276-column coordinate matrix, i.e. the basis
// spans a primitive sublattice of H^4(Z) and no integral class in its
// Q-span is missed). The generic case is additionally compared against the
// closed form.
inline Hodge22Report analyze(const K3Config& cfg) {
    detail::require_general(cfg);
    Hodge22Report report;
    report.pic_rank = cfg.pic_rank();
    report.basis = integral_basis(cfg);
    report.rank = report.basis.size();
    if (report.rank != hodge22_rank(cfg.pic_rank()))
        throw InternalInconsistency("analyze: basis size violates the rank formula");

    report.gram = gram_matrix(report.basis);
    report.determinant = determinant(report.gram);
    report.discriminant = abs_int(report.determinant);

    report.is_odd = false;
    for (std::size_t i = 0; i < report.rank; ++i)
        if (report.gram(i, i) % 2 != 0) report.is_odd = true;

    report.indivisibility_of_q = divisibility(q_dual() * Rat(2, 5)) == 1;
    report.saturation_divisors = elementary_divisors(coordinate_matrix(report.basis));

    if (cfg.pic_rank() == 1) {
        Int t = cfg.pic_gram()(0, 0) / 2;
        report.closed_form_match =
            report.gram == generic_gram_closed_form(t) && report.discriminant == 84 * t * t * t;
    }
    return report;
}

}  // namespace hilbsq
