#include "hilbsq/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hilbsq;

TEST_CASE("rational strings") {
    REQUIRE(rat_to_string(Rat(3)) == "3");
    REQUIRE(rat_to_string(Rat(-45, 2)) == "-45/2");
    REQUIRE(rat_to_string(Rat(4, 6)) == "2/3");      // lowest terms
    REQUIRE(parse_rat("1/-2") == Rat(-1, 2));        // sign folded into numerator
    REQUIRE(parse_rat("-45/2") == Rat(-45, 2));
    REQUIRE(parse_rat("7") == Rat(7));
    REQUIRE_THROWS(parse_rat("1/0"));
    REQUIRE_THROWS(parse_rat("abc"));
    REQUIRE_THROWS(parse_int("1.5"));

    // beyond 64-bit: decimal strings stay lossless
    Int big = Int(1) << 100;
    REQUIRE(parse_int(int_to_string(big)) == big);
}

TEST_CASE("lattice JSON round-trip") {
    Json j = lattice_to_json(k3_lattice());
    REQUIRE(j["rank"] == 22);
    REQUIRE(j["gram"][0][0] == "-2");
    IntLattice back = lattice_from_json(j);
    REQUIRE(back == k3_lattice());

    REQUIRE_THROWS_AS(lattice_from_json(Json{{"rank", 2}}), BadInput);
    Json bad = lattice_to_json(hyperbolic_u());
    bad["rank"] = 3;
    REQUIRE_THROWS_AS(lattice_from_json(bad), BadInput);
}

TEST_CASE("configuration JSON") {
    K3Config cfg = generic_surface(2);
    Json j = k3config_to_json(cfg);
    K3Config back = k3config_from_json(j);
    REQUIRE(back.pic_gram() == cfg.pic_gram());
    REQUIRE(back.embedding() == cfg.embedding());
    REQUIRE(back.assume_general());

    // generic shortcut, both encodings of t
    K3Config from_t = k3config_from_json(Json{{"t", 2}});
    REQUIRE(from_t.pic_gram() == cfg.pic_gram());
    K3Config from_ts = k3config_from_json(Json::parse(R"({"t": "2"})"));
    REQUIRE(from_ts.embedding() == cfg.embedding());

    REQUIRE_THROWS_AS(k3config_from_json(Json::parse(R"({"pic_gram": [["2"]]})")), BadInput);
    REQUIRE_THROWS_AS(k3config_from_json(Json::parse("[1,2]")), BadInput);
    // validation failures surface as the named domain errors
    Json nonprim = Json::parse(
        R"({"pic_gram": [["8"]], "embedding": [[ "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","2","2","0","0","0","0" ]], "assume_general": true})");
    REQUIRE_THROWS_AS(k3config_from_json(nonprim), NotPrimitive);
}

TEST_CASE("H4 class JSON round-trip") {
    Json j = h4_to_json(q_dual());
    REQUIRE(j["A"] == "45/2");
    H4Class back = h4_from_json(j);
    REQUIRE(back == q_dual());

    // sparse C block with 1-based indices
    Json d2 = h4_to_json(delta_squared());
    REQUIRE(d2["C"][0][0] == 1);
    REQUIRE(d2["C"][0][1] == 2);
    REQUIRE(d2["C"][0][2] == "7");  // -mu_{1,2} = 7
    REQUIRE(h4_from_json(d2) == delta_squared());

    REQUIRE_THROWS_AS(h4_from_json(Json::parse(R"({"A": "1"})")), BadInput);
    Json bad = h4_to_json(point_class());
    bad["C"] = Json::array({Json::array({2, 1, "3"})});
    REQUIRE_THROWS_AS(h4_from_json(bad), BadInput);
}

TEST_CASE("report JSON carries the certificate fields") {
    Hodge22Report report = analyze(generic_surface(1));
    Json j = report_to_json(report);
    REQUIRE(j["rank"] == 4);
    REQUIRE(j["discriminant"] == "84");
    REQUIRE(j["is_odd"] == true);
    REQUIRE(j["indivisibility_of_q"] == true);
    REQUIRE(j["closed_form_match"] == true);
    REQUIRE(j["saturation_divisors"].size() == 4);
    REQUIRE(j["gram"][0][0] == "12");
    REQUIRE(j["basis"].size() == 4);
    // basis[2] is the point class
    REQUIRE(j["basis"][2]["A"] == "1");

    Hodge22Report r2 = analyze(k3config_from_json(Json{{"t", 2}}));
    Json j2 = report_to_json(r2);
    REQUIRE(j2["discriminant"] == "672");  // 84 * 8
}

TEST_CASE("rendering is deterministic") {
    Json a = report_to_json(analyze(generic_surface(2)));
    Json b = report_to_json(analyze(generic_surface(2)));
    REQUIRE(a.dump(2) == b.dump(2));

    std::string csv = int_matrix_to_csv(generic_gram_closed_form(1));
    REQUIRE(csv == "12,6,2,-4\n6,2,1,-2\n2,1,1,-1\n-4,-2,-1,12\n");
}
