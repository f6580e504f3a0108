#pragma once

// Built-in verification suite: one check per published identity the library
// is expected to reproduce. Shared by the `verify` CLI subcommand and the
// acceptance test binary. Every check is exact; there are no tolerances
// anywhere. The mu fixture is the published table, so the computed
// coefficients are tested against the literature, not against themselves.

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/hilb2.hpp"
#include "hilbsq/hodge.hpp"
#include "hilbsq/k3.hpp"
#include "hilbsq/lattice.hpp"
#include "hilbsq/matrix.hpp"
#include "hilbsq/mu_reference.hpp"
#include "hilbsq/snf.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hilbsq {

struct CheckOutcome {
    bool pass = true;
    std::string detail;  // non-empty only on failure

    void fail(const std::string& message) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += message;
    }

    void expect(bool condition, const std::string& message) {
        if (!condition) fail(message);
    }
};

struct VerificationCheck {
    int criterion;
    std::string name;
    std::function<CheckOutcome()> run;
};

namespace verify_detail {

inline IntMat row22(const std::vector<std::pair<std::size_t, Int>>& entries) {
    IntMat m(1, kK3Rank);
    for (const auto& [idx, value] : entries) m(0, idx) = value;
    return m;
}

inline IntMat stack_rows(const std::vector<IntMat>& rows) {
    IntMat m(rows.size(), kK3Rank);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < kK3Rank; ++j) m(i, j) = rows[i](0, j);
    return m;
}

// Hand-built configurations exercised by the rank/saturation checks.
// Picard lattice U: b1 = alpha_17, b2 = alpha_18.
inline K3Config hyperbolic_picard_config() {
    IntMat pic{{Int(0), Int(1)}, {Int(1), Int(0)}};
    return surface_from_embedding(
        pic, stack_rows({row22({{16, 1}}), row22({{17, 1}})}), true);
}

// Picard lattice <2> + <-2>, embedded primitively across two hyperbolic
// planes: b1 = alpha_17 + alpha_18, b2 = alpha_19 - alpha_20.
inline K3Config rank2_config() {
    IntMat pic{{Int(2), Int(0)}, {Int(0), Int(-2)}};
    return surface_from_embedding(
        pic, stack_rows({row22({{16, 1}, {17, 1}}), row22({{18, 1}, {19, -1}})}), true);
}

// Picard lattice <2> + <-2> + <-2>: b3 = alpha_21 - alpha_22 added.
inline K3Config rank3_config() {
    IntMat pic(3, 3);
    pic(0, 0) = 2;
    pic(1, 1) = -2;
    pic(2, 2) = -2;
    return surface_from_embedding(
        pic,
        stack_rows({row22({{16, 1}, {17, 1}}), row22({{18, 1}, {19, -1}}),
                    row22({{20, 1}, {21, -1}})}),
        true);
}

inline H2Class random_integral_h2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    H2Class x;
    for (std::size_t i = 0; i < kK3Rank; ++i) x.v[i] = coeff(rng);
    x.d = coeff(rng);
    return x;
}

inline Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    const int dens[4] = {1, 2, 3, 5};
    std::uniform_int_distribution<int> den_pick(0, 3);
    return Rat(num(rng), dens[den_pick(rng)]);
}

inline H2Class random_rational_h2(std::mt19937_64& rng) {
    H2Class x;
    for (std::size_t i = 0; i < kK3Rank; ++i) x.v[i] = random_rat(rng);
    x.d = random_rat(rng);
    return x;
}

inline H4Class random_sparse_h4(std::mt19937_64& rng, std::size_t nonzeros) {
    std::uniform_int_distribution<std::size_t> pos(0, kH4Dim - 1);
    H4Class x;
    for (std::size_t k = 0; k < nonzeros; ++k) x.c[pos(rng)] = random_rat(rng);
    return x;
}

inline Sym2Class random_sparse_sym2(std::mt19937_64& rng, std::size_t nonzeros) {
    std::uniform_int_distribution<std::size_t> pos(0, kSym2Dim - 1);
    Sym2Class s;
    for (std::size_t k = 0; k < nonzeros; ++k) s.c[pos(rng)] = random_rat(rng);
    return s;
}

}  // namespace verify_detail

inline std::vector<VerificationCheck> verification_suite() {
    using verify_detail::hyperbolic_picard_config;
    using verify_detail::rank2_config;
    using verify_detail::rank3_config;

    std::vector<VerificationCheck> checks;

    checks.push_back({1, "Lem5.7/Table1: diagonal-class coefficients match the published table",
                      [] {
                          CheckOutcome out;
                          const MuMatrix& mu = diagonal_coefficients();
                          IntMat expected(kK3Rank, kK3Rank);
                          for (const MuEntry& e : kPublishedMuTable) {
                              expected(e.i - 1, e.j - 1) = e.value;
                              expected(e.j - 1, e.i - 1) = e.value;
                          }
                          for (std::size_t i = 0; i < kK3Rank; ++i)
                              for (std::size_t j = 0; j < kK3Rank; ++j)
                                  if (mu(i, j) != expected(i, j))
                                      out.fail("mu(" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ") = " + mu(i, j).str() +
                                               ", published " + expected(i, j).str());
                          out.expect(k3_lattice().gram() * mu.entries ==
                                         IntMat::identity(kK3Rank),
                                     "G * mu != identity");
                          return out;
                      }});

    checks.push_back(
        {2, "Prop4.3: <q^vee,q^vee> = 575 and <q^vee,xy> = 25(x,y) on 100 random classes", [] {
             CheckOutcome out;
             out.expect(intersection_pairing(q_dual(), q_dual()) == 575,
                        "<q^vee,q^vee> != 575");
             std::mt19937_64 rng(20230407);
             for (int n = 0; n < 100; ++n) {
                 H2Class x = verify_detail::random_integral_h2(rng);
                 H2Class y = verify_detail::random_integral_h2(rng);
                 if (intersection_pairing(q_dual(), cup(x, y)) != 25 * bbf(x, y)) {
                     out.fail("<q^vee, x cup y> != 25 (x,y) at sample " + std::to_string(n));
                     break;
                 }
             }
             return out;
         }});

    checks.push_back(
        {3, "Prop4.4+Prop7.4: c2 integral, equals (6/5)q^vee, A-coordinate 27, <c2,c2> = 828",
         [] {
             CheckOutcome out;
             out.expect(is_integral(c2()), "c2 not integral");
             out.expect(c2() == q_dual() * Rat(6, 5), "c2 != (6/5) q^vee");
             out.expect(c2().a() == 27, "c2 A-coordinate != 27");
             out.expect(intersection_pairing(c2(), c2()) == 828, "<c2,c2> != 828");
             return out;
         }});

    checks.push_back(
        {4, "Thm8.1/Rem8.2: (1/8)(delta^2+(2/5)q^vee) is the A-class with self-pairing 1; "
            "computed lattices are odd",
         [] {
             CheckOutcome out;
             H4Class combo = (delta_squared() + q_dual() * Rat(2, 5)) * Rat(1, 8);
             H4Class unit_a;
             unit_a.a() = 1;
             out.expect(combo == unit_a, "(1/8)(delta^2 + (2/5)q^vee) != A-class");
             out.expect(point_class() == unit_a, "point class coordinates != (A=1, rest 0)");
             out.expect(intersection_pairing(point_class(), point_class()) == 1,
                        "<point, point> != 1");
             for (Int t = 1; t <= 5; ++t)
                 out.expect(analyze(generic_surface(t)).is_odd,
                            "generic t=" + t.str() + " lattice not odd");
             out.expect(analyze(hyperbolic_picard_config()).is_odd, "r=2 U lattice not odd");
             out.expect(analyze(rank2_config()).is_odd, "r=2 lattice not odd");
             out.expect(analyze(rank3_config()).is_odd, "r=3 lattice not odd");
             return out;
         }});

    checks.push_back({5, "Thm8.1: (2/5)q^vee is indivisible", [] {
                          CheckOutcome out;
                          H4Class two_fifths = q_dual() * Rat(2, 5);
                          out.expect(is_integral(two_fifths), "(2/5)q^vee not integral");
                          out.expect(divisibility(two_fifths) == 1,
                                     "divisibility((2/5)q^vee) != 1");
                          return out;
                      }});

    checks.push_back(
        {6, "Thm8.3: generic Gram equals the closed form and disc = 84t^3 for t = 1..10", [] {
             CheckOutcome out;
             for (Int t = 1; t <= 10; ++t) {
                 Hodge22Report report = analyze(generic_surface(t));
                 if (!(report.gram == generic_gram_closed_form(t)))
                     out.fail("Gram mismatch at t=" + t.str());
                 if (report.discriminant != 84 * t * t * t)
                     out.fail("disc != 84t^3 at t=" + t.str());
                 if (!report.closed_form_match.value_or(false))
                     out.fail("closed_form_match not set at t=" + t.str());
             }
             return out;
         }});

    checks.push_back(
        {7, "Thm8.3: rank formula, integrality, all-ones saturation and Nakajima/product "
            "basis equivalence (generic t=1..5; r=2,3 configs)",
         [] {
             CheckOutcome out;
             std::vector<std::pair<std::string, K3Config>> configs;
             for (Int t = 1; t <= 5; ++t)
                 configs.emplace_back("generic t=" + t.str(), generic_surface(t));
             configs.emplace_back("r=2 U", hyperbolic_picard_config());
             configs.emplace_back("r=2 <2>+<-2>", rank2_config());
             configs.emplace_back("r=3 <2>+<-2>+<-2>", rank3_config());
             for (const auto& [label, cfg] : configs) {
                 Hodge22Report report = analyze(cfg);
                 if (report.rank != hodge22_rank(cfg.pic_rank()))
                     out.fail(label + ": rank formula violated");
                 for (const H4Class& x : report.basis)
                     if (!is_integral(x)) out.fail(label + ": non-integral basis class");
                 for (const Int& d : report.saturation_divisors)
                     if (d != 1) out.fail(label + ": saturation divisor " + d.str());
                 if (!same_lattice_unimodular(integral_basis(cfg), nakajima_basis(cfg)))
                     out.fail(label + ": Nakajima and product bases span different lattices");
             }
             return out;
         }});

    checks.push_back(
        {8, "Thm8.3 proof: <delta^2, xy> = -2 for x = alpha_19, y = alpha_20 (generic t=2)", [] {
             CheckOutcome out;
             K3Config cfg = generic_surface(2);
             H2Class x = H2Class::alpha(18);
             H2Class y = H2Class::alpha(19);
             H2Class h = H2Class::from_lambda(cfg.picard_row(0));
             out.expect(bbf(x, h) == 0, "alpha_19 not orthogonal to the polarisation");
             out.expect(bbf(x, y) == 1, "(x,y) != 1");
             // x must lie in the transcendental complement
             IntMat trans = transcendental_basis(cfg);
             std::vector<Int> xi(kK3Rank, 0);
             xi[18] = 1;
             out.expect(coords_in_row_lattice(trans, xi).has_value(),
                        "alpha_19 not in the transcendental lattice");
             out.expect(intersection_pairing(delta_squared(), cup(x, y)) == -2,
                        "<delta^2, xy> != -2");
             return out;
         }});

    checks.push_back(
        {9, "Lattice structure: K3 lattice even unimodular (3,19); H^2 of the Hilbert square "
            "has signature (3,20) and disc 2; q(delta) = -2",
         [] {
             CheckOutcome out;
             const IntLattice& k3 = k3_lattice();
             out.expect(is_even(k3), "K3 lattice not even");
             out.expect(is_unimodular(k3), "K3 lattice not unimodular");
             out.expect(signature(k3) == std::make_pair(std::size_t{3}, std::size_t{19}),
                        "K3 signature != (3,19)");
             IntLattice h2 = direct_sum(k3, rank_one(Int(-2)));
             out.expect(signature(h2) == std::make_pair(std::size_t{3}, std::size_t{20}),
                        "H^2 signature != (3,20)");
             out.expect(discriminant(h2) == 2, "H^2 disc != 2");
             out.expect(bbf(H2Class::delta(), H2Class::delta()) == -2, "q(delta) != -2");
             return out;
         }});

    checks.push_back(
        {10, "Invariants: cup bilinear and symmetric (500 random cases), Sym^2 round-trips "
             "(500 random cases), embedding independence of the Gram",
         [] {
             CheckOutcome out;
             std::mt19937_64 rng(577215664);
             for (int n = 0; n < 500 && out.pass; ++n) {
                 H2Class x = verify_detail::random_rational_h2(rng);
                 H2Class xp = verify_detail::random_rational_h2(rng);
                 H2Class y = verify_detail::random_rational_h2(rng);
                 if (!(cup(x, y) == cup(y, x))) out.fail("cup not symmetric");
                 if (!(cup(x + xp, y) == cup(x, y) + cup(xp, y))) out.fail("cup not bilinear");
             }
             for (int n = 0; n < 250 && out.pass; ++n) {
                 std::size_t nonzeros = (n < 5) ? kH4Dim : 12;
                 H4Class x = verify_detail::random_sparse_h4(rng, nonzeros);
                 if (!(from_sym2(to_sym2(x)) == x)) out.fail("from_sym2 . to_sym2 != id");
             }
             for (int n = 0; n < 250 && out.pass; ++n) {
                 std::size_t nonzeros = (n < 5) ? kSym2Dim : 12;
                 Sym2Class s = verify_detail::random_sparse_sym2(rng, nonzeros);
                 if (!(to_sym2(from_sym2(s)) == s)) out.fail("to_sym2 . from_sym2 != id");
             }
             for (Int t = 1; t <= 3; ++t) {
                 IntMat pic(1, 1);
                 pic(0, 0) = 2 * t;
                 K3Config other = surface_from_embedding(
                     pic, verify_detail::row22({{18, 1}, {19, t}}), true);
                 if (!(gram_matrix(integral_basis(generic_surface(t))) ==
                       gram_matrix(integral_basis(other))))
                     out.fail("Gram depends on the embedding at t=" + t.str());
             }
             return out;
         }});

    return checks;
}

// Runs the whole suite, printing one pass/fail line per check. Returns 0 on
// success, 1 if any check failed, 2 if a check threw (internal breach).
inline int run_verification(std::ostream& out) {
    int exit_code = 0;
    std::vector<std::string> failed;
    for (const VerificationCheck& check : verification_suite()) {
        CheckOutcome outcome;
        try {
            outcome = check.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
            exit_code = 2;
        }
        out << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << check.criterion << ": "
            << check.name;
        if (!outcome.pass) out << "  [" << outcome.detail << "]";
        out << '\n';
        if (!outcome.pass) {
            failed.push_back(check.name);
            if (exit_code == 0) exit_code = 1;
        }
    }
    if (failed.empty()) {
        out << "all " << verification_suite().size() << " criteria passed\n";
    } else {
        out << failed.size() << " failed:\n";
        for (const std::string& name : failed) out << "  - " << name << '\n';
    }
    return exit_code;
}

}  // namespace hilbsq
