#include "hilbsq/hilb2.hpp"
#include "hilbsq/k3.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hilbsq;

namespace {

H2Class random_rational_h2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 4);
    H2Class x;
    for (std::size_t i = 0; i < kK3Rank; ++i) x.v[i] = Rat(num(rng), den(rng));
    x.d = Rat(num(rng), den(rng));
    return x;
}

H2Class random_integral_h2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    H2Class x;
    for (std::size_t i = 0; i < kK3Rank; ++i) x.v[i] = num(rng);
    x.d = num(rng);
    return x;
}

H2Class polarisation(const Int& t) {
    H2Class h;
    h.v[16] = 1;
    h.v[17] = Rat(t);
    return h;
}

}  // namespace

TEST_CASE("coordinate layout is a bijection onto 0..275") {
    std::vector<bool> seen(kH4Dim, false);
    auto mark = [&](std::size_t k) {
        REQUIRE(k < kH4Dim);
        REQUIRE_FALSE(seen[k]);
        seen[k] = true;
    };
    mark(idx_a());
    for (std::size_t i = 0; i < kK3Rank; ++i) mark(idx_b(i));
    for (std::size_t i = 0; i < kK3Rank; ++i)
        for (std::size_t j = i + 1; j < kK3Rank; ++j) mark(idx_c(i, j));
    for (std::size_t i = 0; i < kK3Rank; ++i) mark(idx_d(i));
    for (bool b : seen) REQUIRE(b);

    std::vector<bool> seen2(kSym2Dim, false);
    for (std::size_t a = 0; a < 23; ++a)
        for (std::size_t b = a; b < 23; ++b) {
            std::size_t k = sym2_pos(a, b);
            REQUIRE(k < kSym2Dim);
            REQUIRE_FALSE(seen2[k]);
            seen2[k] = true;
        }
}

TEST_CASE("BBF form values") {
    REQUIRE(bbf(H2Class::delta(), H2Class::delta()) == -2);
    for (Int t = 1; t <= 4; ++t) REQUIRE(bbf(polarisation(t), polarisation(t)) == 2 * t);
    REQUIRE(bbf(H2Class::alpha(16), H2Class::delta()) == 0);
    REQUIRE(bbf(H2Class::alpha(16), H2Class::alpha(17)) == 1);
    REQUIRE(bbf(H2Class::alpha(0), H2Class::alpha(0)) == -2);
}

TEST_CASE("cup products of basis classes") {
    // delta cup alpha_1 = q_2(alpha_1)
    H4Class da = cup(H2Class::delta(), H2Class::alpha(0));
    H4Class expected;
    expected.b(0) = 1;
    REQUIRE(da == expected);

    // alpha_17 cup alpha_18: intersection number 1
    H4Class h = cup(H2Class::alpha(16), H2Class::alpha(17));
    H4Class expected2;
    expected2.a() = 1;
    expected2.cc(16, 17) = 1;
    REQUIRE(h == expected2);

    // alpha_1 cup alpha_1: square -2
    H4Class sq = cup(H2Class::alpha(0), H2Class::alpha(0));
    H4Class expected3;
    expected3.a() = -2;
    expected3.d(0) = 2;
    expected3.b(0) = 1;
    REQUIRE(sq == expected3);
    REQUIRE(intersection_pairing(sq, sq) == 12);  // 3 * (-2)^2
}

TEST_CASE("delta squared") {
    const H4Class& d2 = delta_squared();
    const MuMatrix& mu = diagonal_coefficients();
    REQUIRE(d2.a() == -1);
    REQUIRE(d2.cc(16, 17) == -1);
    REQUIRE(d2.b(0) == 2);  // -mu_{1,1}/2 with mu_{1,1} = -4
    for (std::size_t i = 0; i < kK3Rank; ++i) {
        REQUIRE(d2.d(i) == Rat(-mu(i, i)));
        for (std::size_t j = i + 1; j < kK3Rank; ++j) REQUIRE(d2.cc(i, j) == Rat(-mu(i, j)));
    }
    REQUIRE(is_integral(d2));
    REQUIRE(cup(H2Class::delta(), H2Class::delta()) == d2);

    H4Class xy = cup(H2Class::alpha(18), H2Class::alpha(19));
    REQUIRE(intersection_pairing(d2, xy) == -2);
}

TEST_CASE("dual BBF class") {
    const H4Class& q = q_dual();
    REQUIRE(q.a() == Rat(45, 2));
    REQUIRE_FALSE(is_integral(q));

    H4Class two_fifths = q * Rat(2, 5);
    REQUIRE(two_fifths.a() == 9);
    REQUIRE(is_integral(two_fifths));
    REQUIRE(divisibility(two_fifths) == 1);

    REQUIRE(intersection_pairing(q, q) == 575);
    REQUIRE(intersection_pairing(q, cup(H2Class::alpha(16), H2Class::alpha(17))) == 25);
}

TEST_CASE("pairing against the dual class is 25 times the BBF form") {
    std::mt19937_64 rng(42);
    for (int n = 0; n < 60; ++n) {
        H2Class x = random_integral_h2(rng);
        H2Class y = random_integral_h2(rng);
        REQUIRE(intersection_pairing(q_dual(), cup(x, y)) == 25 * bbf(x, y));
    }
}

TEST_CASE("second Chern class") {
    const H4Class& c = c2();
    REQUIRE(c.a() == 27);
    REQUIRE(is_integral(c));
    REQUIRE(c == q_dual() * Rat(6, 5));
    REQUIRE(intersection_pairing(c, c) == 828);
    REQUIRE(divisibility(c) == 3);
}

TEST_CASE("point class") {
    const H4Class& p = point_class();
    H4Class unit_a;
    unit_a.a() = 1;
    REQUIRE(p == unit_a);
    REQUIRE(intersection_pairing(p, p) == 1);
    // 8 * point - delta^2 = (2/5) q_dual
    REQUIRE(p * Rat(8) - delta_squared() == q_dual() * Rat(2, 5));
}

TEST_CASE("integrality and divisibility") {
    REQUIRE_THROWS_AS(divisibility(q_dual()), NotIntegral);
    REQUIRE_THROWS_AS(divisibility(H4Class{}), NotIntegral);  // zero class
    H4Class six = delta_squared() * Rat(6);
    REQUIRE(divisibility(six) == 6);
}

TEST_CASE("Sym^2 conversion of the distinguished classes") {
    // delta^2 is by definition delta cup delta
    Sym2Class d2 = to_sym2(delta_squared());
    Sym2Class pure_dd;
    pure_dd.at(kDeltaIndex, kDeltaIndex) = 1;
    REQUIRE(d2 == pure_dd);

    // q_dual = sum mu_ij alpha_i alpha_j - (1/2) delta delta, blockwise the
    // inverse of the BBF Gram
    Sym2Class q = to_sym2(q_dual());
    const MuMatrix& mu = diagonal_coefficients();
    for (std::size_t i = 0; i < kK3Rank; ++i)
        for (std::size_t j = i; j < kK3Rank; ++j)
            REQUIRE(q.at(i, j) == Rat(mu(i, j)) * (i < j ? 2 : 1));
    REQUIRE(q.at(kDeltaIndex, kDeltaIndex) == Rat(-1, 2));
    for (std::size_t i = 0; i < kK3Rank; ++i) REQUIRE(q.at(i, kDeltaIndex) == 0);
}

TEST_CASE("Sym^2 round-trips on random classes") {
    std::mt19937_64 rng(1729);
    std::uniform_int_distribution<std::size_t> pos(0, kH4Dim - 1);
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 4);
    for (int n = 0; n < 100; ++n) {
        H4Class x;
        std::size_t nonzeros = (n < 3) ? kH4Dim : 16;
        for (std::size_t k = 0; k < nonzeros; ++k)
            x.c[pos(rng)] = Rat(num(rng), den(rng));
        REQUIRE(from_sym2(to_sym2(x)) == x);
    }
    for (int n = 0; n < 100; ++n) {
        Sym2Class s;
        std::size_t nonzeros = (n < 3) ? kSym2Dim : 16;
        for (std::size_t k = 0; k < nonzeros; ++k)
            s.c[pos(rng)] = Rat(num(rng), den(rng));
        REQUIRE(to_sym2(from_sym2(s)) == s);
    }
}

TEST_CASE("cup is symmetric and bilinear") {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 80; ++n) {
        H2Class x = random_rational_h2(rng);
        H2Class xp = random_rational_h2(rng);
        H2Class y = random_rational_h2(rng);
        REQUIRE(cup(x, y) == cup(y, x));
        REQUIRE(cup(x + xp, y) == cup(x, y) + cup(xp, y));
        Rat s(3, 2);
        REQUIRE(cup(x * s, y) == cup(x, y) * s);
    }
}

TEST_CASE("pairing is symmetric, bilinear and integer-valued on integral classes") {
    std::mt19937_64 rng(6);
    for (int n = 0; n < 40; ++n) {
        H2Class x = random_integral_h2(rng);
        H2Class y = random_integral_h2(rng);
        H2Class z = random_integral_h2(rng);
        H2Class w = random_integral_h2(rng);
        H4Class xy = cup(x, y), zw = cup(z, w);
        Rat p = intersection_pairing(xy, zw);
        REQUIRE(p == intersection_pairing(zw, xy));
        REQUIRE(is_integer(p));
        REQUIRE(intersection_pairing(xy + zw, zw) ==
                p + intersection_pairing(zw, zw));
    }
}

TEST_CASE("pairing through coordinates agrees with the direct product formula") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 60; ++n) {
        H2Class x = random_rational_h2(rng);
        H2Class y = random_rational_h2(rng);
        H2Class z = random_rational_h2(rng);
        H2Class w = random_rational_h2(rng);
        REQUIRE(intersection_pairing(cup(x, y), cup(z, w)) ==
                oracles::product_pairing(x, y, z, w));
    }
}

TEST_CASE("m11 classes are integral for every integral vector") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int n = 0; n < 50; ++n) {
        std::vector<Int> b(kK3Rank);
        for (auto& v : b) v = coeff(rng);
        REQUIRE(is_integral(m11_class(b)));
    }
}

TEST_CASE("pinned pairing values") {
    H2Class h1 = polarisation(1);
    REQUIRE(intersection_pairing(cup(h1, h1), cup(h1, h1)) == 12);
    for (Int t = 1; t <= 5; ++t) {
        H2Class h = polarisation(t);
        REQUIRE(intersection_pairing(cup(h, h), cup(h, h)) == 12 * t * t);
    }
    REQUIRE(intersection_pairing(delta_squared(), delta_squared()) == 12);
}
