#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monoclif/json_io.hpp"

using namespace monoclif;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "monoclif_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    const fs::path in = temp_dir() / "stdin.json";
    const fs::path out = temp_dir() / "stdout.json";
    {
        std::ofstream f(in);
        f << stdin_text;
    }
    const std::string cmd = std::string(MONOCLIF_CLI_PATH) + " " + args + " < " + in.string() +
                            " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream f(out);
    std::ostringstream os;
    os << f.rdbuf();
    r.stdout_text = os.str();
    return r;
}

} // namespace

TEST_CASE("fischer subcommand") {
    // x1 at m=3 -> parts [x1 + x e1/3, -e1/3]
    const CliffPoly x1 = CliffPoly::variable(3, VarRole::X, 1);
    const RunResult r = run_cli("fischer", to_json(x1).dump());
    REQUIRE(r.exit_code == 0);
    const FischerParts parts = fischer_parts_from_json(parse_json_text(r.stdout_text));
    CHECK(parts.k == 1);
    const CliffPoly xe1 =
        vector_mul(Side::Left, CliffPoly::constant(MultiVector::generator(3, 1), VarRole::X));
    CHECK(parts.parts[0] == x1 + xe1.scaled(Rational(1, 3)));
    CHECK(parts.parts[1] ==
          CliffPoly::constant(MultiVector::generator(3, 1).scaled(Rational(-1, 3)), VarRole::X));

    // constant input -> single part
    const CliffPoly one = CliffPoly::scalar_constant(2, VarRole::X, CRational(1));
    const RunResult rc = run_cli("fischer", to_json(one).dump());
    REQUIRE(rc.exit_code == 0);
    CHECK(fischer_parts_from_json(parse_json_text(rc.stdout_text)).parts.size() == 1);

    // malformed JSON -> exit 2; inhomogeneous -> exit 3
    CHECK(run_cli("fischer", "{oops").exit_code == 2);
    const CliffPoly inhom = one + CliffPoly::variable(2, VarRole::X, 1);
    CHECK(run_cli("fischer", to_json(inhom).dump()).exit_code == 3);
}

TEST_CASE("bargmann subcommand") {
    // psi_2 (as the (2,0) multi-index) -> z1^2
    CliffPoly h2(2, VarRole::X);
    Monomial m2 = Monomial::unit(2);
    m2.exps[0] = 2;
    h2.add_term(m2, MultiVector::scalar(2, CRational(1)));
    h2.add_term(Monomial::unit(2), MultiVector::scalar(2, CRational(-1)));
    const GaussianSection f(h2, Rational(1, 4));
    const RunResult r = run_cli("bargmann", to_json(f).dump());
    REQUIRE(r.exit_code == 0);
    CliffPoly expect(2, VarRole::Z);
    expect.add_term(m2, MultiVector::scalar(2, CRational(1)));
    CHECK(cliffpoly_from_json(parse_json_text(r.stdout_text)) == expect);

    // wrong weight -> exit 3
    const GaussianSection wrong(h2, Rational(1, 2));
    CHECK(run_cli("bargmann", to_json(wrong).dump()).exit_code == 3);
}

TEST_CASE("zonal subcommand") {
    const RunResult r = run_cli("zonal --k 1 --m 3 --method fischer");
    REQUIRE(r.exit_code == 0);
    const BiPoly z1 = bipoly_from_json(parse_json_text(r.stdout_text));
    CHECK(z1 == zonal_fischer(1, 3)[0]);

    const RunResult r0 = run_cli("zonal --k 0 --m 3");
    REQUIRE(r0.exit_code == 0);
    CHECK(bipoly_from_json(parse_json_text(r0.stdout_text)) ==
          BiPoly::scalar_constant(3, VarRole::X, VarRole::U, CRational(1)));

    // gegenbauer at m=2 is an unsupported route
    CHECK(run_cli("zonal --k 2 --m 2 --method gegenbauer").exit_code == 3);

    // --check agrees across methods
    CHECK(run_cli("zonal --k 3 --m 3 --s 1 --check").exit_code == 0);

    // byte-identical reruns
    const RunResult again = run_cli("zonal --k 1 --m 3 --method fischer");
    CHECK(again.stdout_text == r.stdout_text);
}

TEST_CASE("verify subcommand") {
    const RunResult r = run_cli("verify --suite core --m 2 --max-degree 3 --seed 1");
    REQUIRE(r.exit_code == 0);
    const Json report = parse_json_text(r.stdout_text);
    CHECK(report["summary"]["failed"].get<int>() == 0);
    CHECK(report["summary"]["total"].get<int>() > 0);
    CHECK(run_cli("verify --suite nosuch").exit_code == 3);
}
