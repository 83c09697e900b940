#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("ICFB_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("region subcommand emits the reference vertex set") {
    const std::string out = "cli_region.json";
    const RunResult r =
        run("region --model ldic --feedback on --kind ne --n11 6 --n22 6 --n12 2 --n21 2 --eta 0/1 --out " + out);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    REQUIRE(j.at("vertices").size() == 3);
    std::set<std::pair<std::string, std::string>> vs;
    for (const auto& v : j.at("vertices")) vs.insert(std::make_pair(v[0].get<std::string>(), v[1].get<std::string>()));
    CHECK(vs == std::set<std::pair<std::string, std::string>>{{"4", "4"}, {"6", "4"}, {"4", "6"}});
    std::remove(out.c_str());
}

TEST_CASE("simulate subcommand writes the rates CSV row") {
    const std::string out = "cli_rates.csv";
    const RunResult r = run("simulate --preset fb-cancel-2 --n11 6 --n22 6 --n12 2 --n21 2 --block-len 16 --blocks 1 "
                            "--rates-out " + out);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find("preset,n11,n22,n12,n21,N,B,r1,r2,errors") != std::string::npos);
    CHECK(csv.find("fb-cancel-2,6,6,2,2,16,1,6,3.75,0") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("identical flags give byte-identical artifacts") {
    const RunResult a = run("simulate --preset jam --n11 3 --n22 3 --n12 4 --n21 4 --block-len 8 --blocks 2 --seed 5 "
                            "--trace-out cli_trace_a.json");
    const RunResult b = run("simulate --preset jam --n11 3 --n22 3 --n12 4 --n21 4 --block-len 8 --blocks 2 --seed 5 "
                            "--trace-out cli_trace_b.json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(slurp("cli_trace_a.json") == slurp("cli_trace_b.json"));
    std::remove("cli_trace_a.json");
    std::remove("cli_trace_b.json");
}

TEST_CASE("gauss subcommand produces a monotone frontier CSV") {
    const std::string out = "cli_frontier.csv";
    const RunResult r = run("gauss --snr1 10 --snr2 10 --inr12 10 --inr21 10 --bound ne-inner --rho-grid 33 "
                            "--r1-grid 64 --out " + out + " --json cli_frontier_meta.json");
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("r1,r2\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') > 5);
    const auto meta = nlohmann::json::parse(slurp("cli_frontier_meta.json"));
    CHECK(meta.at("builder") == "ne-inner");
    CHECK(meta.at("rho_grid") == 33);
    std::remove(out.c_str());
    std::remove("cli_frontier_meta.json");
}

TEST_CASE("verify subcommand exit codes") {
    CHECK(run("verify --claim theorem1 --max-n 2").exit_code == 0);
    CHECK(run("verify --claim equality-family --max-n 6 --csv cli_eq.csv").exit_code == 0);
    CHECK(slurp("cli_eq.csv").rfind("n11,", 0) == 0);
    std::remove("cli_eq.csv");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("region --n11 6").exit_code == 2);                       // missing required flags
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("verify --claim no-such-claim").exit_code == 2);
    CHECK(run("simulate --preset relay-1 --n11 6 --n22 6 --n12 2 --n21 2").exit_code == 2);  // inapplicable
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("export-fig2 labels regimes") {
    const RunResult r = run("export-fig2 --n 6 --m 2 --eta 0 --out cli_fig2.json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp("cli_fig2.json"));
    CHECK(j.at("regime") == "very weak");
    CHECK(j.at("c_ldic").at("vertices").size() > 2);
    CHECK(j.at("n_ldic_fb").at("vertices").size() == 3);
    const RunResult s = run("export-fig2 --n 2 --m 3 --eta 0 --out cli_fig2b.json");
    CHECK(s.exit_code == 0);
    CHECK(nlohmann::json::parse(slurp("cli_fig2b.json")).at("regime") == "strong");
    std::remove("cli_fig2.json");
    std::remove("cli_fig2b.json");
}
