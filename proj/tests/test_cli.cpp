#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_helpers.hpp"

using namespace qhstar;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args) {
    static const std::string bin = QHSTAR_CLI_PATH;
    fs::path out = fs::temp_directory_path() / "qhstar_cli_stdout.txt";
    fs::path err = fs::temp_directory_path() / "qhstar_cli_stderr.txt";
    std::string cmd = bin + " " + args + " >" + out.string() + " 2>" + err.string();
    int rc = std::system(cmd.c_str());
    CliResult res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    res.out = slurp(out);
    res.err = slurp(err);
    return res;
}

fs::path write_bundle(const ExampleBundle& b, const std::string& stem) {
    fs::path p = fs::temp_directory_path() / ("qhstar_cli_" + stem + ".json");
    write_json_file(p.string(), bundle_to_json(b));
    return p;
}

}  // namespace

TEST_CASE("check subcommand exit codes") {
    fs::path ok = write_bundle(example_z2_triangular(), "z2");
    CliResult pass = run_cli("check " + ok.string());
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("qba.pentagon") != std::string::npos);
    CHECK(pass.out.find("FAIL") == std::string::npos);

    fs::path bad = write_bundle(example_broken_pentagon(3, 77), "broken");
    CliResult fail = run_cli("check " + bad.string());
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("qba.pentagon") != std::string::npos);
    // the pentagon is the only failing record
    std::istringstream lines(fail.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find(" FAIL") != std::string::npos) CHECK(line.find("qba.pentagon") != std::string::npos);
    }

    CliResult missing = run_cli("check /nonexistent/file.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("check respects suite selection and json output") {
    fs::path p = write_bundle(example_bicharacter_qt(3, 1), "bq");
    CliResult qt = run_cli("check " + p.string() + " --suite qt");
    CHECK(qt.exit_code == 0);
    CHECK(qt.out.find("qt.hexagon-left") != std::string::npos);
    CHECK(qt.out.find("qba.") == std::string::npos);

    CliResult js = run_cli("check " + p.string() + " --json");
    CHECK(js.exit_code == 0);
    nlohmann::json arr = nlohmann::json::parse(js.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() > 10);
    bool saw_pentagon = false;
    for (const auto& rec : arr)
        if (rec["name"] == "pentagon") saw_pentagon = rec["pass"].get<bool>();
    CHECK(saw_pentagon);
}

TEST_CASE("malformed documents report a diagnostic and exit 2") {
    fs::path p = fs::temp_directory_path() / "qhstar_cli_malformed.json";
    {
        nlohmann::json j = bundle_to_json(example_group_hopf_star(2));
        j.erase("antipode");
        write_json_file(p.string(), j);
    }
    CliResult res = run_cli("check " + p.string());
    CHECK(res.exit_code == 2);
    CHECK(res.err.find("antipode") != std::string::npos);
}

TEST_CASE("classify subcommand") {
    fs::path p = write_bundle(example_bicharacter_qt(3, 1), "classify");
    CliResult res = run_cli("classify " + p.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("TypeI\n", 0) == 0);
    CHECK(res.out.find("residual_I=") != std::string::npos);

    fs::path p2 = write_bundle(example_z2_triangular(), "classify2");
    CliResult res2 = run_cli("classify " + p2.string());
    CHECK(res2.out.rfind("Both\n", 0) == 0);

    fs::path p3 = write_bundle(example_dual_group_cocycle(3), "classify3");
    CliResult res3 = run_cli("classify " + p3.string());
    CHECK(res3.exit_code == 2);  // no r_matrix section
}

TEST_CASE("twist subcommand writes a structure that still passes") {
    fs::path p = write_bundle(example_group_hopf_star(4), "twistin");
    fs::path out = fs::temp_directory_path() / "qhstar_cli_twisted.json";
    CliResult res = run_cli("twist " + p.string() + " --twist diagonal:9 -o " + out.string());
    REQUIRE(res.exit_code == 0);
    LoadedSpec spec = load_spec_file(out.string());
    CHECK(check_qba(spec.H).overall);
    CHECK(check_antipode(spec.H).overall);
    REQUIRE(spec.star);
    // the carried canonical twist is (FF†)⁻¹ for the applied F
    CHECK(check_star_qha(spec.H, *spec.star).overall);
    CliResult chk = run_cli("check " + out.string());
    CHECK(chk.exit_code == 0);
}

TEST_CASE("tolerance override flows into the suites") {
    fs::path bad = write_bundle(example_broken_pentagon(3, 99), "tolbroken");
    CliResult strict = run_cli("check " + bad.string() + " --tol 1e-2");
    CHECK(strict.exit_code == 1);  // the pentagon misses by O(1)
    CliResult loose = run_cli("check " + bad.string() + " --tol 10");
    CHECK(loose.exit_code == 0);
}

TEST_CASE("a twist document written by one subcommand feeds another") {
    fs::path p = write_bundle(example_dual_group_cocycle(3), "chain");
    fs::path fd = fs::temp_directory_path() / "qhstar_cli_chain_fdelta.json";
    REQUIRE(run_cli("drinfeld " + p.string() + " -o " + fd.string()).exit_code == 0);
    fs::path out = fs::temp_directory_path() / "qhstar_cli_chain_out.json";
    REQUIRE(run_cli("twist " + p.string() + " --twist " + fd.string() + " -o " + out.string()).exit_code == 0);
    // twisting by the canonical twist lands on the primed structure
    LoadedSpec base = load_spec_file(p.string());
    LoadedSpec moved = load_spec_file(out.string());
    QuasiHopfData primed = primed_coproduct(base.H);
    CHECK(max_abs_diff(moved.H.coassociator, primed.coassociator) < 1e-11);
    CHECK(max_abs_diff(moved.H.alpha, primed.alpha) < 1e-11);
    double r = 0.0;
    for (std::size_t i = 0; i < moved.H.coproduct.matrix.size(); ++i)
        r = std::max(r, std::abs(moved.H.coproduct.matrix[i] - primed.coproduct.matrix[i]));
    CHECK(r < 1e-11);
    CHECK(run_cli("check " + out.string()).exit_code == 0);
}

TEST_CASE("drinfeld subcommand emits a verified twist document") {
    fs::path p = write_bundle(example_dual_group_cocycle(3), "drin");
    fs::path out = fs::temp_directory_path() / "qhstar_cli_fdelta.json";
    CliResult res = run_cli("drinfeld " + p.string() + " -o " + out.string());
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("drinfeld.primed-coproduct-reproduced") != std::string::npos);
    LoadedSpec spec = load_spec_file(p.string());
    TwistData F = load_twist_file(out.string(), spec.H);
    TwistData direct = drinfeld_twist(spec.H);
    CHECK(max_abs_diff(F.element, direct.element) < 1e-12);

    CliResult second = run_cli("drinfeld " + p.string() + " --second -o " + out.string());
    REQUIRE(second.exit_code == 0);
    TwistData F0 = load_twist_file(out.string(), spec.H);
    CHECK(max_abs_diff(F0.element, second_drinfeld_twist(spec.H, direct).element) < 1e-12);
}

TEST_CASE("operators subcommand prints the operator family") {
    fs::path p = write_bundle(example_char_twisted_star(4, 11), "ops");
    CliResult res = run_cli("operators " + p.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("w = [") != std::string::npos);
    CHECK(res.out.find("w_bar = [") != std::string::npos);
    CHECK(res.out.find("c = [") != std::string::npos);
    CHECK(res.out.find("operators.w-dagger") != std::string::npos);

    fs::path p2 = write_bundle(example_bicharacter_qt(3, 1), "opsqt");
    CliResult res2 = run_cli("operators " + p2.string());
    CHECK(res2.exit_code == 0);
    CHECK(res2.out.find("u = [") != std::string::npos);
    CHECK(res2.out.find("z_u = [") != std::string::npos);
}

TEST_CASE("example subcommand round trips through check") {
    fs::path out = fs::temp_directory_path() / "qhstar_cli_example.json";
    CliResult res = run_cli("example char_twisted_star 4 11 -o " + out.string());
    REQUIRE(res.exit_code == 0);
    CliResult chk = run_cli("check " + out.string());
    CHECK(chk.exit_code == 0);

    CliResult unknown = run_cli("example does_not_exist -o " + out.string());
    CHECK(unknown.exit_code == 2);
    CliResult badparams = run_cli("example bicharacter_qt 3 -o " + out.string());
    CHECK(badparams.exit_code == 2);
}
