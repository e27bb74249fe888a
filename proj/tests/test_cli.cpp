#include "graphdirac/cli.hpp"

#include "graphdirac/matrix.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using graphdirac::run_cli;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

// writes fixture files once per process into a scratch directory
class Fixtures {
public:
    Fixtures() {
        dir_ = std::filesystem::temp_directory_path() / "graphdirac_cli_tests";
        std::filesystem::create_directories(dir_);
        write("p3.json", R"({"vertices":3,"edges":[[0,1],[2,1]]})");
        write("p5.json", R"({"vertices":5,"edges":[[0,1],[1,2],[2,3],[3,4]]})");
        write("c3.json", R"({"vertices":3,"edges":[[0,1],[1,2],[2,0]]})");
        write("two_triangles.json",
              R"({"vertices":6,"edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3]]})");
        write("bad.json", "{");
        write("steady_state.json", "[1,1,1,0,0,0]");
        write("c3_root.json", "[1,2,2,2,1,2]");
        write("vertex_p3.json", "[[1,0],[0,1],[-1,0]]");
    }

    [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    void write(const std::string& name, const std::string& content) {
        std::ofstream file(dir_ / name, std::ios::binary | std::ios::trunc);
        file << content;
    }

    std::filesystem::path dir_;
};

const Fixtures& fixtures() {
    static Fixtures instance;
    return instance;
}

} // namespace

TEST_CASE("ops prints the worked odd laplacian") {
    auto result = invoke({"ops", "--input", fixtures().path("p3.json"), "--op", "odd-laplacian"});
    CHECK(result.code == 0);
    CHECK(result.out == "[[2,1],[1,2]]\n");
}

TEST_CASE("ops output re-parses to the identical matrix") {
    for (std::string op : {"incidence", "even-laplacian", "odd-laplacian", "even-dirac",
                           "odd-dirac", "incidence-dirac"}) {
        auto result = invoke({"ops", "--input", fixtures().path("c3.json"), "--op", op});
        REQUIRE(result.code == 0);
        graphdirac::Matrix parsed = graphdirac::parse_matrix_json(result.out);
        CHECK(graphdirac::to_json(parsed) + "\n" == result.out);
    }
}

TEST_CASE("spectrum and kernel report eigendata") {
    auto spec = invoke({"spectrum", "--input", fixtures().path("c3.json"), "--op",
                        "even-laplacian"});
    CHECK(spec.code == 0);
    // eigenvalues of the triangle laplacian: 0, 3, 3 (up to float residue)
    std::istringstream eigs(spec.out.substr(1, spec.out.size() - 3));
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    char comma = 0;
    eigs >> lambda0 >> comma >> lambda1 >> comma >> lambda2;
    CHECK(std::fabs(lambda0) <= 1e-12);
    CHECK(lambda1 == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lambda2 == doctest::Approx(3.0).epsilon(1e-12));

    auto kern = invoke({"kernel", "--input", fixtures().path("two_triangles.json"), "--op",
                        "even-laplacian", "--json"});
    CHECK(kern.code == 0);
    CHECK(kern.out.find("\"dimension\":2") != std::string::npos);
}

TEST_CASE("evolve emits a deterministic CSV time series") {
    std::vector<std::string> args{"evolve",  "--input", fixtures().path("two_triangles.json"),
                                  "--op",    "even",    "--state",
                                  fixtures().path("steady_state.json"), "--times", "0,0.5,1"};
    auto first = invoke(args);
    CHECK(first.code == 0);
    CHECK(first.out.substr(0, 31) == "t,avg_re,avg_im,avg_angle,norm\n");
    auto second = invoke(args);
    CHECK(first.out == second.out); // byte-identical reruns

    // steady state: averages and norm constant across all three rows
    std::istringstream lines(first.out);
    std::string line;
    std::getline(lines, line); // header
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream cells(line);
        double t = 0.0;
        double avg_re = 0.0;
        double avg_im = 0.0;
        double angle = 0.0;
        double norm = 0.0;
        cells >> t >> avg_re >> avg_im >> angle >> norm;
        CHECK(avg_re == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(avg_im == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(norm == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
    }
    CHECK(rows == 3);

    auto grid = invoke({"evolve", "--input", fixtures().path("two_triangles.json"), "--op",
                        "even", "--state", fixtures().path("steady_state.json"), "--t1", "1",
                        "--steps", "4"});
    CHECK(grid.code == 0);
    CHECK(std::count(grid.out.begin(), grid.out.end(), '\n') == 6); // header + 5 rows
}

TEST_CASE("steady and qform answer the worked examples") {
    auto steady = invoke({"steady", "--input", fixtures().path("two_triangles.json"), "--op",
                          "even", "--state", fixtures().path("steady_state.json")});
    CHECK(steady.code == 0);
    CHECK(steady.out == "steady\n");

    auto not_steady = invoke({"steady", "--input", fixtures().path("p3.json"), "--op", "even",
                              "--state", fixtures().path("vertex_p3.json")});
    CHECK(not_steady.code == 0);
    CHECK(not_steady.out == "not steady\n");

    auto qform = invoke({"qform", "--input", fixtures().path("c3.json"), "--kind", "incidence",
                         "--state", fixtures().path("c3_root.json")});
    CHECK(qform.code == 0);
    CHECK(qform.out == "[0,0]\n");

    // odd form of a cycle state vanishes
    std::ofstream(std::filesystem::temp_directory_path() / "graphdirac_cli_tests" /
                  "cycle_state.json")
        << "[1,1,1]";
    auto odd = invoke({"qform", "--input", fixtures().path("c3.json"), "--kind", "odd",
                       "--state", fixtures().path("cycle_state.json")});
    CHECK(odd.code == 0);
    CHECK(odd.out == "[0,0]\n");
}

TEST_CASE("walks lists signed walks with 1-based labels") {
    // K3 with edge i opposite vertex i, cyclic orientation
    std::ofstream(std::filesystem::temp_directory_path() / "graphdirac_cli_tests" / "k3.json")
        << R"({"vertices":3,"edges":[[1,2],[2,0],[0,1]]})";
    auto result = invoke({"walks", "--input", fixtures().path("k3.json"), "--from", "v1", "--to",
                          "e1", "--k", "3"});
    CHECK(result.code == 0);
    CHECK(result.out.find("v1 -> e2 -> v3 -> e1  sgn=-1\n") != std::string::npos);
    CHECK(result.out.find("v1 -> e3 -> v2 -> e1  sgn=1\n") != std::string::npos);
    CHECK(result.out.find("walks: 2  signed sum: 0\n") != std::string::npos);
}

TEST_CASE("dimer subcommands count, glue, and check the identity") {
    auto count = invoke({"dimer", "count", "--rows", "3", "--cols", "4"});
    CHECK(count.code == 0);
    CHECK(count.out == "11\n");

    for (std::string method : {"brute", "kasteleyn", "closed"}) {
        auto alt = invoke({"dimer", "count", "--rows", "3", "--cols", "4", "--method", method});
        CHECK(alt.code == 0);
        CHECK(alt.out == "11\n");
    }

    auto glue = invoke({"dimer", "glue", "--rows", "3", "-m", "3", "-n", "3", "--shift", "0",
                        "--bridges", "1,2,3"});
    CHECK(glue.code == 0);
    CHECK(glue.out == "9\n");

    auto identity = invoke({"dimer", "identity", "--rows", "2", "-m", "2", "-n", "2"});
    CHECK(identity.code == 0);
    CHECK(identity.out == "sum over bridge cases: 5\nT_2(4): 5\n");
}

TEST_CASE("clifford center lists monomials and dimension") {
    auto center = invoke({"clifford", "center", "--input", fixtures().path("p5.json")});
    CHECK(center.code == 0);
    CHECK(center.out == "1; e1 e3 e5\ndimension: 2\n");

    auto json = invoke({"clifford", "center", "--input", fixtures().path("p5.json"), "--json"});
    CHECK(json.code == 0);
    CHECK(json.out == "{\"dimension\":2,\"monomials\":[\"1\",\"e1 e3 e5\"]}\n");

    auto predict = invoke({"clifford", "predict", "--shape", "glued-paths", "--n", "3", "--m",
                           "3", "--attach", "2"});
    CHECK(predict.code == 0);
    CHECK(predict.out == "4\n");
}

TEST_CASE("exit codes distinguish usage and domain errors") {
    CHECK(invoke({"ops", "--input", "x.json"}).code == 2);        // missing --op
    CHECK(invoke({"nonsense"}).code == 2);                        // unknown subcommand
    CHECK(invoke({"ops", "--input", "x.json", "--op", "incidence", "--bogus"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"ops", "--input", fixtures().path("bad.json"), "--op", "incidence"}).code == 1);
    CHECK(invoke({"ops", "--input", "/no/such/file.json", "--op", "incidence"}).code == 1);
    CHECK(invoke({"dimer", "count", "--rows", "7", "--cols", "2"}).code == 1);
    // closed forms only cover three and four rows
    CHECK(invoke({"dimer", "count", "--rows", "2", "--cols", "4", "--method", "closed"}).code == 1);
    // the raw incidence matrix is not symmetric, so it has no spectrum
    CHECK(invoke({"spectrum", "--input", fixtures().path("p3.json"), "--op", "incidence"}).code ==
          1);
    // glue outside the overlap
    CHECK(invoke({"dimer", "glue", "--rows", "3", "-m", "2", "-n", "2", "--shift", "2",
                  "--bridges", "2"})
              .code == 1);
    auto unknown_op =
        invoke({"ops", "--input", fixtures().path("p3.json"), "--op", "banana"});
    CHECK(unknown_op.code == 1);
    CHECK(unknown_op.err.find("unknown operator") != std::string::npos);
}
