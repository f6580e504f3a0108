#pragma once

// The degree-2 and degree-4 cohomology of the Hilbert square of a K3
// surface, in exact rational coordinates.
//
// H^2 is the K3 lattice extended by the half-exceptional class delta, with
// the Beauville-Bogomolov-Fujiki form q(delta) = -2. H^4 carries the
// 276-dimensional integral coordinate layout
//
//   A            coefficient of q_1(1)q_1(x)|0>         (1 coordinate)
//   B_i          coefficients of q_2(alpha_i)|0>        (22)
//   C_{ij}, i<j  coefficients of q_1(alpha_i)q_1(alpha_j)|0>  (231)
//   D_i          coefficients of m_{1,1}(alpha_i)|0>    (22)
//
// in this order, C lexicographic. A class lies in H^4(Z) iff all 276
// coordinates are integers. q_1(alpha_i)^2 rewrites as 2 D_i + B_i.

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/k3.hpp"
#include "hilbsq/lattice.hpp"
#include "hilbsq/matrix.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace hilbsq {

inline constexpr std::size_t kH4Dim = 276;   // 1 + 22 + 231 + 22
inline constexpr std::size_t kSym2Dim = 276; // pairs (a <= b) over 23 basis classes
inline constexpr std::size_t kDeltaIndex = 22;

// Coordinate offsets in the H^4 layout.
constexpr std::size_t idx_a() { return 0; }
constexpr std::size_t idx_b(std::size_t i) { return 1 + i; }
constexpr std::size_t idx_c(std::size_t i, std::size_t j) {
    // 0 <= i < j < 22, lexicographic
    return 23 + i * (2 * kK3Rank - 1 - i) / 2 + (j - i - 1);
}
constexpr std::size_t idx_d(std::size_t i) { return 254 + i; }

// Position of the monomial e_a e_b (a <= b) over the 23-class basis
// {alpha_1..alpha_22, delta}.
constexpr std::size_t sym2_pos(std::size_t a, std::size_t b) {
    // 0 <= a <= b < 23
    return a * (2 * 23 - 1 - a) / 2 + b;
}

// ---- H^2 ----

// Element of H^2(S^[2], Q): 22 coordinates over the fixed alpha-basis of the
// K3 lattice plus the delta coordinate. Integral iff all 23 are integers.
struct H2Class {
    std::array<Rat, kK3Rank> v{};
    Rat d{};

    static H2Class alpha(std::size_t i) {
        H2Class c;
        c.v[i] = 1;
        return c;
    }

    static H2Class delta() {
        H2Class c;
        c.d = 1;
        return c;
    }

    static H2Class from_lambda(const std::vector<Int>& coords) {
        H2Class c;
        for (std::size_t i = 0; i < kK3Rank; ++i) c.v[i] = Rat(coords[i]);
        return c;
    }

    bool is_integral() const {
        for (const Rat& x : v)
            if (!is_integer(x)) return false;
        return is_integer(d);
    }

    H2Class operator+(const H2Class& o) const {
        H2Class out;
        for (std::size_t i = 0; i < kK3Rank; ++i) out.v[i] = v[i] + o.v[i];
        out.d = d + o.d;
        return out;
    }

    H2Class operator*(const Rat& s) const {
        H2Class out;
        for (std::size_t i = 0; i < kK3Rank; ++i) out.v[i] = v[i] * s;
        out.d = d * s;
        return out;
    }

    bool operator==(const H2Class& o) const { return v == o.v && d == o.d; }
};

// Beauville-Bogomolov-Fujiki form: the K3 intersection form on the lambda
// block, orthogonal to delta with q(delta) = -2.
inline Rat bbf(const H2Class& x, const H2Class& y) {
    const IntMat& g = k3_lattice().gram();
    Rat out = -2 * x.d * y.d;
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        if (x.v[i] == 0) continue;
        for (std::size_t j = 0; j < kK3Rank; ++j) {
            if (g(i, j) == 0 || y.v[j] == 0) continue;
            out += x.v[i] * Rat(g(i, j)) * y.v[j];
        }
    }
    return out;
}

// ---- H^4 ----

struct H4Class {
    std::array<Rat, kH4Dim> c{};

    Rat& a() { return c[idx_a()]; }
    const Rat& a() const { return c[idx_a()]; }
    Rat& b(std::size_t i) { return c[idx_b(i)]; }
    const Rat& b(std::size_t i) const { return c[idx_b(i)]; }
    Rat& cc(std::size_t i, std::size_t j) { return c[idx_c(i, j)]; }
    const Rat& cc(std::size_t i, std::size_t j) const { return c[idx_c(i, j)]; }
    Rat& d(std::size_t i) { return c[idx_d(i)]; }
    const Rat& d(std::size_t i) const { return c[idx_d(i)]; }

    bool is_zero() const {
        for (const Rat& x : c)
            if (x != 0) return false;
        return true;
    }

    H4Class operator+(const H4Class& o) const {
        H4Class out;
        for (std::size_t i = 0; i < kH4Dim; ++i) out.c[i] = c[i] + o.c[i];
        return out;
    }

    H4Class operator-(const H4Class& o) const {
        H4Class out;
        for (std::size_t i = 0; i < kH4Dim; ++i) out.c[i] = c[i] - o.c[i];
        return out;
    }

    H4Class operator*(const Rat& s) const {
        H4Class out;
        for (std::size_t i = 0; i < kH4Dim; ++i) out.c[i] = c[i] * s;
        return out;
    }

    bool operator==(const H4Class& o) const { return c == o.c; }
};

inline bool is_integral(const H4Class& x) {
    for (const Rat& v : x.c)
        if (!is_integer(v)) return false;
    return true;
}

// gcd of all 276 coordinates of an integral nonzero class.
inline Int divisibility(const H4Class& x) {
    if (!is_integral(x)) throw NotIntegral("divisibility: class is not integral");
    Int g = 0;
    for (const Rat& v : x.c) g = gcd_int(g, numerator(v));
    if (g == 0) throw NotIntegral("divisibility: class is zero");
    return g;
}

// ---- Nakajima-type generators expanded over the alpha-basis ----

// q_2(b)|0> for b = sum b_i alpha_i.
inline H4Class q2_class(const std::vector<Int>& b) {
    H4Class out;
    for (std::size_t i = 0; i < kK3Rank; ++i) out.b(i) = Rat(b[i]);
    return out;
}

// q_1(x)q_1(y)|0> for lambda-vectors x, y (no A term; q_1(alpha_i)^2
// rewrites to 2 D_i + B_i).
inline H4Class q1q1_class(const std::vector<Int>& x, const std::vector<Int>& y) {
    H4Class out;
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        for (std::size_t j = 0; j < kK3Rank; ++j) {
            Int w = x[i] * y[j];
            if (w == 0) continue;
            if (i < j)
                out.cc(i, j) += Rat(w);
            else if (j < i)
                out.cc(j, i) += Rat(w);
            else {
                out.d(i) += Rat(2 * w);
                out.b(i) += Rat(w);
            }
        }
    }
    return out;
}

// m_{1,1}(b)|0> = (q_1(b)^2 - q_2(b))/2 |0>. Integral for integral b since
// b_i^2 - b_i is always even.
inline H4Class m11_class(const std::vector<Int>& b) {
    H4Class out;
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        for (std::size_t j = i + 1; j < kK3Rank; ++j) {
            Int w = b[i] * b[j];
            if (w != 0) out.cc(i, j) = Rat(w);
        }
        out.d(i) = Rat(b[i] * b[i]);
        out.b(i) = Rat(b[i] * b[i] - b[i], 2);
    }
    return out;
}

// ---- distinguished classes ----

// delta^2 in the integral coordinates: A = -1, C_{ij} = -mu_{ij},
// D_i = -mu_{ii}, B_i = -mu_{ii}/2 (integral since the mu diagonal is even).
inline const H4Class& delta_squared() {
    static const H4Class d2 = [] {
        const MuMatrix& mu = diagonal_coefficients();
        H4Class out;
        out.a() = -1;
        for (std::size_t i = 0; i < kK3Rank; ++i) {
            for (std::size_t j = i + 1; j < kK3Rank; ++j)
                if (mu(i, j) != 0) out.cc(i, j) = Rat(-mu(i, j));
            out.d(i) = Rat(-mu(i, i));
            out.b(i) = Rat(-mu(i, i), 2);
        }
        return out;
    }();
    return d2;
}

// Cup product H^2 x H^2 -> H^4. Bilinear extension of
//   delta cup alpha_i   = q_2(alpha_i)|0>
//   alpha_i cup alpha_j = (alpha_i . alpha_j) q_1(1)q_1(x)|0>
//                         + q_1(alpha_i)q_1(alpha_j)|0>
//   delta cup delta     = delta^2 as above.
// Integral inputs yield integral outputs.
inline H4Class cup(const H2Class& x, const H2Class& y) {
    const IntMat& g = k3_lattice().gram();
    H4Class out;
    // lambda x lambda
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        if (x.v[i] == 0) continue;
        for (std::size_t j = 0; j < kK3Rank; ++j) {
            if (y.v[j] == 0) continue;
            Rat w = x.v[i] * y.v[j];
            if (g(i, j) != 0) out.a() += w * Rat(g(i, j));
            if (i < j)
                out.cc(i, j) += w;
            else if (j < i)
                out.cc(j, i) += w;
            else {
                out.d(i) += 2 * w;
                out.b(i) += w;
            }
        }
    }
    // delta x lambda and lambda x delta
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        Rat w = x.d * y.v[i] + y.d * x.v[i];
        if (w != 0) out.b(i) += w;
    }
    // delta x delta
    Rat dd = x.d * y.d;
    if (dd != 0) {
        const H4Class& d2 = delta_squared();
        for (std::size_t k = 0; k < kH4Dim; ++k)
            if (d2.c[k] != 0) out.c[k] += dd * d2.c[k];
    }
    return out;
}

// ---- Sym^2 coordinates and the pairing ----

// Coordinates over the products e_a e_b (a <= b) of the H^2 basis
// {alpha_1..alpha_22, delta}.
struct Sym2Class {
    std::array<Rat, kSym2Dim> c{};

    Rat& at(std::size_t a, std::size_t b) { return c[sym2_pos(a, b)]; }
    const Rat& at(std::size_t a, std::size_t b) const { return c[sym2_pos(a, b)]; }

    bool operator==(const Sym2Class& o) const { return c == o.c; }
};

namespace detail {

// Sym^2 expansion of the unit A class q_1(1)q_1(x)|0>:
// (1/10) delta*delta + (1/20) sum_{i,j} mu_{ij} alpha_i alpha_j.
inline const Sym2Class& a_class_sym2() {
    static const Sym2Class s = [] {
        const MuMatrix& mu = diagonal_coefficients();
        Sym2Class out;
        out.at(kDeltaIndex, kDeltaIndex) = Rat(1, 10);
        for (std::size_t i = 0; i < kK3Rank; ++i) {
            for (std::size_t j = i; j < kK3Rank; ++j) {
                if (mu(i, j) == 0) continue;
                // off-diagonal terms appear twice in the double sum
                out.at(i, j) = Rat(mu(i, j)) * (i < j ? Rat(1, 10) : Rat(1, 20));
            }
        }
        return out;
    }();
    return s;
}

// BBF Gram on the 23-class basis.
inline Int bbf_gram(std::size_t a, std::size_t b) {
    if (a == kDeltaIndex || b == kDeltaIndex) return a == b ? Int(-2) : Int(0);
    return k3_lattice().gram()(a, b);
}

}  // namespace detail

// Linear isomorphism from the integral coordinates to Sym^2 coordinates,
// obtained by inverting the cup-product substitutions:
//   B_i   = delta * alpha_i
//   C_ij  = alpha_i alpha_j - (alpha_i . alpha_j) A
//   D_i   = (alpha_i alpha_i - (alpha_i . alpha_i) A - delta alpha_i) / 2
//   A     = (1/10) delta*delta + (1/20) sum mu_{ij} alpha_i alpha_j.
inline Sym2Class to_sym2(const H4Class& x) {
    const IntMat& g = k3_lattice().gram();
    const Sym2Class& a_exp = detail::a_class_sym2();
    Sym2Class out;
    Rat a_weight = x.a();

    for (std::size_t i = 0; i < kK3Rank; ++i) {
        const Rat& bi = x.b(i);
        if (bi != 0) out.at(i, kDeltaIndex) += bi;
    }
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        for (std::size_t j = i + 1; j < kK3Rank; ++j) {
            const Rat& cij = x.cc(i, j);
            if (cij == 0) continue;
            out.at(i, j) += cij;
            if (g(i, j) != 0) a_weight -= cij * Rat(g(i, j));
        }
    }
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        const Rat& di = x.d(i);
        if (di == 0) continue;
        Rat half = di / 2;
        out.at(i, i) += half;
        out.at(i, kDeltaIndex) -= half;
        if (g(i, i) != 0) a_weight -= half * Rat(g(i, i));
    }
    if (a_weight != 0) {
        for (std::size_t k = 0; k < kSym2Dim; ++k)
            if (a_exp.c[k] != 0) out.c[k] += a_weight * a_exp.c[k];
    }
    return out;
}

// Inverse of to_sym2: expand each monomial through the cup-product rules.
inline H4Class from_sym2(const Sym2Class& s) {
    const IntMat& g = k3_lattice().gram();
    H4Class out;
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        for (std::size_t j = i; j < kK3Rank; ++j) {
            const Rat& w = s.at(i, j);
            if (w == 0) continue;
            if (g(i, j) != 0) out.a() += w * Rat(g(i, j));
            if (i < j) {
                out.cc(i, j) += w;
            } else {
                out.d(i) += 2 * w;
                out.b(i) += w;
            }
        }
    }
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        const Rat& w = s.at(i, kDeltaIndex);
        if (w != 0) out.b(i) += w;
    }
    const Rat& dd = s.at(kDeltaIndex, kDeltaIndex);
    if (dd != 0) {
        const H4Class& d2 = delta_squared();
        for (std::size_t k = 0; k < kH4Dim; ++k)
            if (d2.c[k] != 0) out.c[k] += dd * d2.c[k];
    }
    return out;
}

// Intersection pairing on H^4: convert to Sym^2 coordinates and evaluate
//   <e_a e_b, e_c e_d> = (e_a,e_b)(e_c,e_d) + (e_a,e_c)(e_b,e_d)
//                        + (e_a,e_d)(e_b,e_c)
// bilinearly over monomials, with (.,.) the BBF form. Symmetric and
// integer-valued on integral classes.
inline Rat intersection_pairing(const H4Class& x, const H4Class& y) {
    Sym2Class p = to_sym2(x);
    Sym2Class q = to_sym2(y);

    struct Term {
        std::size_t a, b;
        Rat w;
    };
    std::vector<Term> pt, qt;
    pt.reserve(64);
    qt.reserve(64);
    for (std::size_t a = 0; a < 23; ++a)
        for (std::size_t b = a; b < 23; ++b) {
            if (p.at(a, b) != 0) pt.push_back({a, b, p.at(a, b)});
            if (q.at(a, b) != 0) qt.push_back({a, b, q.at(a, b)});
        }

    Rat out = 0;
    for (const Term& s : pt) {
        for (const Term& t : qt) {
            Int v = detail::bbf_gram(s.a, s.b) * detail::bbf_gram(t.a, t.b) +
                    detail::bbf_gram(s.a, t.a) * detail::bbf_gram(s.b, t.b) +
                    detail::bbf_gram(s.a, t.b) * detail::bbf_gram(s.b, t.a);
            if (v != 0) out += s.w * t.w * Rat(v);
        }
    }
    return out;
}

// Dual of the BBF form, computed by two independent routes with a hard
// equality assertion: (a) 5/2 times the integral-coordinate expansion
// (A = 9, C_ij = mu_ij, D_i = mu_ii, B_i = mu_ii/2), (b) through Sym^2 with
// the inverse BBF Gram (mu on the lambda block, -1/2 on delta*delta).
inline const H4Class& q_dual() {
    static const H4Class q = [] {
        const MuMatrix& mu = diagonal_coefficients();
        H4Class two_fifths;
        two_fifths.a() = 9;
        for (std::size_t i = 0; i < kK3Rank; ++i) {
            for (std::size_t j = i + 1; j < kK3Rank; ++j)
                if (mu(i, j) != 0) two_fifths.cc(i, j) = Rat(mu(i, j));
            two_fifths.d(i) = Rat(mu(i, i));
            two_fifths.b(i) = Rat(mu(i, i), 2);
        }
        H4Class route_a = two_fifths * Rat(5, 2);

        Sym2Class dual_form;
        for (std::size_t i = 0; i < kK3Rank; ++i)
            for (std::size_t j = i; j < kK3Rank; ++j)
                if (mu(i, j) != 0) dual_form.at(i, j) = Rat(mu(i, j)) * (i < j ? 2 : 1);
        dual_form.at(kDeltaIndex, kDeltaIndex) = Rat(-1, 2);
        H4Class route_b = from_sym2(dual_form);

        if (!(route_a == route_b))
            throw InternalInconsistency(
                "q_dual: coordinate expansion and inverse-Gram routes disagree");
        return route_a;
    }();
    return q;
}

// Second Chern class of the Hilbert square: A = 27, C_ij = 3 mu_ij,
// D_i = 3 mu_ii, B_i = (3/2) mu_ii. Integral, and equal to (6/5) q_dual.
inline const H4Class& c2() {
    static const H4Class c = [] {
        const MuMatrix& mu = diagonal_coefficients();
        H4Class out;
        out.a() = 27;
        for (std::size_t i = 0; i < kK3Rank; ++i) {
            for (std::size_t j = i + 1; j < kK3Rank; ++j)
                if (mu(i, j) != 0) out.cc(i, j) = Rat(3 * mu(i, j));
            out.d(i) = Rat(3 * mu(i, i));
            out.b(i) = Rat(3 * mu(i, i), 2);
        }
        if (!(out == q_dual() * Rat(6, 5)))
            throw InternalInconsistency("c2: class is not (6/5) q_dual");
        return out;
    }();
    return c;
}

// Class of a point: (1/8)(delta^2 + (2/5) q_dual), which collapses to the
// single coordinate A = 1.
inline const H4Class& point_class() {
    static const H4Class p = [] {
        H4Class combo = (delta_squared() + q_dual() * Rat(2, 5)) * Rat(1, 8);
        H4Class direct;
        direct.a() = 1;
        if (!(combo == direct))
            throw InternalInconsistency("point_class: (1/8)(delta^2 + (2/5)q_dual) != A");
        return direct;
    }();
    return p;
}

}  // namespace hilbsq
