#include "hilbsq/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HILBSQ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "hilbsq_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("mu-table emission") {
    RunResult csv = run_cli("mu-table --format csv");
    REQUIRE(csv.exit_code == 0);
    // row 2 carries mu_{2,3} = -20
    REQUIRE(csv.output.find("-20") != std::string::npos);
    REQUIRE(csv.output.find("-30") != std::string::npos);

    RunResult json = run_cli("mu-table --format json");
    REQUIRE(json.exit_code == 0);
    hilbsq::Json parsed = hilbsq::Json::parse(json.output);
    REQUIRE(parsed["rank"] == 22);
    hilbsq::IntMat mu = hilbsq::int_matrix_from_json(parsed["mu"], "mu");
    REQUIRE(hilbsq::k3_lattice().gram() * mu == hilbsq::IntMat::identity(22));
    for (std::size_t i = 0; i < 22; ++i)
        for (std::size_t j = 0; j < 22; ++j) REQUIRE(mu(i, j) == mu(j, i));
}

TEST_CASE("generic subcommand") {
    RunResult t1 = run_cli("generic --t 1");
    REQUIRE(t1.exit_code == 0);
    hilbsq::Json report = hilbsq::Json::parse(t1.output);
    REQUIRE(report["discriminant"] == "84");
    REQUIRE(report["closed_form_match"] == true);

    RunResult t5 = run_cli("generic --t 5");
    REQUIRE(t5.exit_code == 0);
    REQUIRE(hilbsq::Json::parse(t5.output)["discriminant"] == "10500");

    RunResult bad = run_cli("generic --t 0");
    REQUIRE(bad.exit_code == 64);

    RunResult csv = run_cli("generic --t 1 --format csv");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(csv.output == "12,6,2,-4\n6,2,1,-2\n2,1,1,-1\n-4,-2,-1,12\n");
}

TEST_CASE("analyze subcommand") {
    auto generic_path = write_temp("generic_t2.json", R"({"t": 2})");
    RunResult via_file = run_cli("analyze --config " + generic_path.string());
    RunResult via_flag = run_cli("generic --t 2");
    REQUIRE(via_file.exit_code == 0);
    REQUIRE(via_file.output == via_flag.output);  // identical reports

    // rank-2 hyperbolic Picard configuration
    std::string emb_row_17 = R"(["0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","1","0","0","0","0","0"])";
    std::string emb_row_18 = R"(["0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","1","0","0","0","0"])";
    auto r2_path = write_temp("r2.json",
                              R"({"pic_gram": [["0","1"],["1","0"]], "embedding": [)" +
                                  emb_row_17 + "," + emb_row_18 +
                                  R"(], "assume_general": true})");
    RunResult r2 = run_cli("analyze --config " + r2_path.string());
    REQUIRE(r2.exit_code == 0);
    hilbsq::Json report = hilbsq::Json::parse(r2.output);
    REQUIRE(report["rank"] == 7);
    REQUIRE(report["pic_rank"] == 2);

    // non-primitive embedding is rejected with the invariant named
    std::string doubled = R"(["0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","2","2","0","0","0","0"])";
    auto bad_path = write_temp("nonprimitive.json",
                               R"({"pic_gram": [["8"]], "embedding": [)" + doubled +
                                   R"(], "assume_general": true})");
    RunResult bad = run_cli("analyze --config " + bad_path.string());
    REQUIRE(bad.exit_code == 65);
    REQUIRE(bad.output.find("NotPrimitive") != std::string::npos);

    RunResult missing = run_cli("analyze --config /nonexistent/path.json");
    REQUIRE(missing.exit_code == 65);

    auto invalid = write_temp("invalid.json", "{ not json");
    RunResult broken = run_cli("analyze --config " + invalid.string());
    REQUIRE(broken.exit_code == 65);
}

TEST_CASE("pair subcommand") {
    auto point = write_temp("point.json", hilbsq::h4_to_json(hilbsq::point_class()).dump());
    auto d2 = write_temp("d2.json", hilbsq::h4_to_json(hilbsq::delta_squared()).dump());
    auto q = write_temp("q.json", hilbsq::h4_to_json(hilbsq::q_dual()).dump());

    RunResult pp = run_cli("pair " + point.string() + " " + point.string());
    REQUIRE(pp.exit_code == 0);
    REQUIRE(pp.output == "1\n");

    RunResult qq = run_cli("pair " + q.string() + " " + q.string());
    REQUIRE(qq.exit_code == 0);
    REQUIRE(qq.output == "575\n");

    RunResult pd = run_cli("pair " + point.string() + " " + d2.string());
    REQUIRE(pd.exit_code == 0);
    REQUIRE(pd.output == "-1\n");

    RunResult bad = run_cli("pair " + point.string() + " /nonexistent.json");
    REQUIRE(bad.exit_code == 65);
}

TEST_CASE("usage errors") {
    REQUIRE(run_cli("").exit_code == 64);
    REQUIRE(run_cli("frobnicate").exit_code == 64);
    REQUIRE(run_cli("generic").exit_code == 64);             // missing --t
    REQUIRE(run_cli("generic --t 1 --bogus").exit_code == 64);
    REQUIRE(run_cli("mu-table --format yaml").exit_code == 64);
}

TEST_CASE("output is deterministic") {
    RunResult a = run_cli("generic --t 3");
    RunResult b = run_cli("generic --t 3");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.output == b.output);

    RunResult mu_a = run_cli("mu-table --format json");
    RunResult mu_b = run_cli("mu-table --format json");
    REQUIRE(mu_a.output == mu_b.output);
}

TEST_CASE("verify subcommand passes") {
    RunResult verify = run_cli("verify");
    REQUIRE(verify.exit_code == 0);
    REQUIRE(verify.output.find("FAIL") == std::string::npos);
    REQUIRE(verify.output.find("Prop4.3") != std::string::npos);
    REQUIRE(verify.output.find("84t^3") != std::string::npos);
    // one line per criterion plus the summary
    size_t pass_count = 0, pos = 0;
    while ((pos = verify.output.find("PASS", pos)) != std::string::npos) {
        ++pass_count;
        pos += 4;
    }
    REQUIRE(pass_count == 10);
}
