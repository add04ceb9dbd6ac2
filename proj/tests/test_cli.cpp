#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ACTCHECK_CLI_PATH) + " " + args + " 2>/dev/null";
    CommandResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string temp_dir() {
    char tmpl[] = "/tmp/actcheck_cli_XXXXXX";
    const char* dir = mkdtemp(tmpl);
    REQUIRE(dir != nullptr);
    return dir;
}

}  // namespace

TEST_CASE("campaign subcommand emits one CSV record") {
    const auto res = run_cli(
        "campaign --function sigmoid --model bitflip --type random --n 6 --m 5 "
        "--terms 30 --epsilon 1e-14 --runs 400 --seed 42 --format csv");
    REQUIRE(res.exit_code == 0);
    std::istringstream lines(res.output);
    std::string header, row, extra;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK(!std::getline(lines, extra));
    CHECK(header ==
          "function,model,type,n,m,terms,epsilon,runs,seed,detected,benign,silent,ratio");
    CHECK(row.substr(0, 31) == "sigmoid,bitflip,random,6,5,30,1");
}

TEST_CASE("validation failures exit with code 2 and a diagnostic") {
    CHECK(run_cli("campaign --function sigmoid --model bitflip --n 0 --runs 10").exit_code == 2);
    CHECK(run_cli("campaign --function sigmoid --model bogus --runs 10").exit_code == 2);
    CHECK(run_cli("consistency --function expo --terms 50:5 --runs 10").exit_code == 2);
    CHECK(run_cli("campaign --function sigmoid --model bitflip --runs 10 --no-such-flag 1")
              .exit_code == 2);
    CHECK(run_cli("eval --function expo").exit_code == 2);  // missing --x
}

TEST_CASE("unwritable output path exits with code 1") {
    CHECK(run_cli("campaign --function expo --model skip --n 1 --runs 10 "
                  "--out /nonexistent-dir/out.csv")
              .exit_code == 1);
}

TEST_CASE("same flags and seed give byte-identical output files") {
    const std::string dir = temp_dir();
    const std::string base = "campaign --function tanh --model stuck1 --type burst --n 3 --m 5 "
                             "--runs 600 --seed 7 --format csv --out ";
    REQUIRE(run_cli(base + dir + "/a.csv").exit_code == 0);
    REQUIRE(run_cli(base + dir + "/b.csv").exit_code == 0);
    REQUIRE(run_cli(base + dir + "/c.csv --workers 8").exit_code == 0);
    const std::string a = slurp(dir + "/a.csv");
    CHECK(!a.empty());
    CHECK(a == slurp(dir + "/b.csv"));
    CHECK(a == slurp(dir + "/c.csv"));
}

TEST_CASE("csv and json emissions carry the same values") {
    const std::string dir = temp_dir();
    const std::string base = "campaign --function expo --model random --n 2 --runs 500 --seed 3 ";
    REQUIRE(run_cli(base + "--format csv --out " + dir + "/r.csv").exit_code == 0);
    REQUIRE(run_cli(base + "--format json --out " + dir + "/r.json").exit_code == 0);
    const std::string csv = slurp(dir + "/r.csv");
    const std::string json = slurp(dir + "/r.json");

    // pull detected/benign/silent out of the CSV row
    std::istringstream lines(csv);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    std::vector<std::string> fields;
    std::istringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    REQUIRE(fields.size() == 13);
    CHECK(json.find("\"detected\": " + fields[9]) != std::string::npos);
    CHECK(json.find("\"benign\": " + fields[10]) != std::string::npos);
    CHECK(json.find("\"silent\": " + fields[11]) != std::string::npos);
}

TEST_CASE("eval outputs a single self-describing record") {
    const auto pass = run_cli("eval --function sigmoid --x 0 --terms 30 --epsilon 1e-14");
    REQUIRE(pass.exit_code == 0);
    CHECK(pass.output.find("function,x,terms,epsilon,value,checker,residual,verdict") !=
          std::string::npos);
    CHECK(pass.output.find("sigmoid,0,30,1e-14,0.5,") != std::string::npos);
    CHECK(pass.output.find("Pass") != std::string::npos);

    const auto forced = run_cli("eval --function relu --x 2 --force-output 0");
    REQUIRE(forced.exit_code == 0);
    CHECK(forced.output.find("FaultDetected") != std::string::npos);

    const auto tanh0 = run_cli("eval --function tanh --x 0 --terms 40 --epsilon 1e-15");
    REQUIRE(tanh0.exit_code == 0);
    CHECK(tanh0.output.find("Pass") != std::string::npos);

    const auto injected =
        run_cli("eval --function expo --x 2 --inject bitflip,random,1,8 --seed 11");
    REQUIRE(injected.exit_code == 0);
}

TEST_CASE("consistency grid covers the requested cells") {
    const auto res = run_cli(
        "consistency --function expo --terms 28:30 --epsilons 1e-16,1e-14 --runs 200 --seed 1");
    REQUIRE(res.exit_code == 0);
    std::istringstream lines(res.output);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 1 + 3 * 2);  // header + grid
    // the reference operating point is fully consistent
    CHECK(res.output.find("expo,none,none,0,0,30,1e-14,200,1,0,200,0,1.0000") != std::string::npos);
}

TEST_CASE("kernel override flags are accepted") {
    const auto scalar = run_cli(
        "campaign --function expo --model bitflip --n 1 --runs 300 --seed 9 --kernel scalar");
    const auto autod = run_cli(
        "campaign --function expo --model bitflip --n 1 --runs 300 --seed 9 --kernel auto");
    REQUIRE(scalar.exit_code == 0);
    REQUIRE(autod.exit_code == 0);
    CHECK(scalar.output == autod.output);  // backends are bit-equivalent
}
