#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "opbound/jobs.hpp"
#include "opbound/matrix_io.hpp"
#include "support.hpp"

using namespace opbound;
using namespace opbound::test;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("opbound_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("matrix market array parsing") {
    std::istringstream in("%%MatrixMarket matrix array complex general\n1 1\n2.0 0.0\n");
    const ComplexMatrix a = parse_matrix_market(in, "inline");
    CHECK(a.rows() == 1);
    CHECK(a(0, 0) == Complex(2.0, 0.0));
}

TEST_CASE("matrix market array entries are column-major") {
    std::istringstream in(
        "%%MatrixMarket matrix array complex general\n2 2\n1 0\n2 0\n3 0\n4 0\n");
    const ComplexMatrix a = parse_matrix_market(in, "inline");
    CHECK(a(0, 0) == Complex(1.0, 0.0));
    CHECK(a(1, 0) == Complex(2.0, 0.0));
    CHECK(a(0, 1) == Complex(3.0, 0.0));
    CHECK(a(1, 1) == Complex(4.0, 0.0));
}

TEST_CASE("matrix market coordinate parsing zero-fills") {
    std::istringstream in(
        "%%MatrixMarket matrix coordinate complex general\n2 2 1\n1 2 0.0 1.0\n");
    const ComplexMatrix a = parse_matrix_market(in, "inline");
    CHECK(a(0, 1) == Complex(0.0, 1.0));
    CHECK(a(0, 0) == Complex(0.0, 0.0));
    CHECK(a(1, 0) == Complex(0.0, 0.0));
    CHECK(a(1, 1) == Complex(0.0, 0.0));
}

TEST_CASE("truncated matrix market file names the failing line") {
    std::istringstream in("%%MatrixMarket matrix array complex general\n2 2\n1 0\n2 0\n");
    try {
        parse_matrix_market(in, "inline");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(std::string(e.what()).find("inline:5") != std::string::npos);
    }
}

TEST_CASE("matrix market round trip at full precision") {
    Rng rng(229);
    const ComplexMatrix a = random_matrix(rng, 5, 3);
    const auto path = temp_file("roundtrip.mtx");
    save_matrix_market(a, path.string());
    const ComplexMatrix b = load_matrix(path.string());
    CHECK(rel_err(a, b) == 0.0);

    ComplexMatrix sparse = ComplexMatrix::Zero(4, 4);
    sparse(1, 2) = Complex(0.25, -3.5);
    sparse(3, 0) = Complex(-1.0 / 3.0, 0.0);
    save_matrix_market_coordinate(sparse, path.string());
    CHECK(rel_err(load_matrix(path.string()), sparse) == 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("json round trip is bit exact") {
    Rng rng(233);
    const ComplexMatrix a = random_matrix(rng, 4, 6);
    const auto path = temp_file("roundtrip.json");
    save_matrix_json(a, path.string());
    const ComplexMatrix b = load_matrix(path.string());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            CHECK(a(i, j) == b(i, j));
    std::filesystem::remove(path);
}

TEST_CASE("generator spec parsing") {
    const auto specs = parse_gen_specs("posdef:8,sectorial-normal:4:0.5");
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].cls == MatrixClass::posdef);
    CHECK(specs[0].dim == 8);
    CHECK(specs[1].cls == MatrixClass::sectorial_normal);
    CHECK(specs[1].omega == doctest::Approx(0.5));
    CHECK_THROWS_WITH_AS(parse_gen_specs("posdef:0"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_gen_specs("unknown:4"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("check command: one row, exit 0") {
    JobConfig cfg;
    cfg.command = Command::check;
    cfg.theorem_id = "2.31";
    cfg.gens = parse_gen_specs("posdef:8");
    cfg.seed = 7;
    cfg.no_timestamp = true;
    cfg.out_path = temp_file("check.csv").string();

    std::ostringstream err;
    CHECK(run_job(cfg, err) == 0);
    const std::string text = slurp(cfg.out_path);
    CHECK(text.find("theorem,seed,dim") != std::string::npos);
    // header + exactly one row
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    std::filesystem::remove(cfg.out_path);
}

TEST_CASE("sweep command: grid row count and exit code") {
    JobConfig cfg;
    cfg.command = Command::sweep;
    cfg.theorem_id = "2.56";
    cfg.gens = parse_gen_specs("posdef:8,posdef:8");
    cfg.seed = 3;
    cfg.zgrid = parse_z_grid("0:1:11", "-2:2:9");
    cfg.p_list = {SchattenExponent(1.0), SchattenExponent(2.0), SchattenExponent::infinity()};
    cfg.no_timestamp = true;
    cfg.out_path = temp_file("sweep.csv").string();

    std::ostringstream err;
    CHECK(run_job(cfg, err) == 0);
    const std::string text = slurp(cfg.out_path);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 11 * 9 * 3);
    std::filesystem::remove(cfg.out_path);
}

TEST_CASE("deterministic output across runs and worker counts") {
    JobConfig cfg;
    cfg.command = Command::fuzz;
    cfg.theorem_id = "2.57";
    cfg.gens = parse_gen_specs("posdef:6,indefinite:6");
    cfg.seed = 11;
    cfg.zgrid = parse_z_grid("0:1:1", "0:0:1");
    cfg.trials = 24;
    cfg.p_list = {SchattenExponent(2.0)};
    cfg.no_timestamp = true;

    std::ostringstream err;
    cfg.out_path = temp_file("det_a.csv").string();
    CHECK(run_job(cfg, err) == 0);
    cfg.out_path = temp_file("det_b.csv").string();
    cfg.jobs = 4;
    CHECK(run_job(cfg, err) == 0);
    CHECK(slurp(temp_file("det_a.csv")) == slurp(temp_file("det_b.csv")));
    std::filesystem::remove(temp_file("det_a.csv"));
    std::filesystem::remove(temp_file("det_b.csv"));
}

TEST_CASE("corrupted verifier hook forces exit 2") {
    JobConfig cfg;
    cfg.command = Command::check;
    cfg.theorem_id = "2.31";
    cfg.gens = parse_gen_specs("posdef:6");
    cfg.seed = 5;
    cfg.no_timestamp = true;
    cfg.out_path = temp_file("corrupt.csv").string();

    std::ostringstream err;
    setenv("OPBOUND_CORRUPT_VERIFIER", "1", 1);
    const int code = run_job(cfg, err);
    unsetenv("OPBOUND_CORRUPT_VERIFIER");
    CHECK(code == 2);
    std::filesystem::remove(cfg.out_path);
}

TEST_CASE("usage errors exit 1") {
    JobConfig cfg;
    cfg.command = Command::check;
    cfg.theorem_id = "9.99";
    cfg.gens = parse_gen_specs("posdef:4");
    std::ostringstream err;
    CHECK(run_job(cfg, err) == 1);
    CHECK(err.str().find("unknown theorem") != std::string::npos);
}

TEST_CASE("powers command writes the matrix power") {
    const auto in_path = temp_file("powers_in.mtx");
    const auto out_path = temp_file("powers_out.mtx");
    save_matrix_market(diag({1.0, 4.0}), in_path.string());

    JobConfig cfg;
    cfg.command = Command::powers;
    cfg.input_paths = {in_path.string()};
    cfg.z_single = Complex(0.5, 0.0);
    cfg.out_path = out_path.string();

    std::ostringstream err;
    CHECK(run_job(cfg, err) == 0);
    const ComplexMatrix result = load_matrix(out_path.string());
    CHECK(rel_err(result, diag({1.0, 2.0})) < 1e-12);
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
}

TEST_CASE("json report format") {
    JobConfig cfg;
    cfg.command = Command::check;
    cfg.theorem_id = "2.41";
    cfg.gens = parse_gen_specs("random:5");
    cfg.format = OutputFormat::json;
    cfg.no_timestamp = true;
    cfg.out_path = temp_file("report.json").string();

    std::ostringstream err;
    CHECK(run_job(cfg, err) == 0);
    const std::string text = slurp(cfg.out_path);
    CHECK(text.find("\"rows\"") != std::string::npos);
    CHECK(text.find("\"theorem\": \"2.41\"") != std::string::npos);
    std::filesystem::remove(cfg.out_path);
}
