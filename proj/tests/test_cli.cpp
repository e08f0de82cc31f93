// End-to-end checks of the CLI binary: exit codes, JSON shape, certificate
// round-trips, and byte-for-byte determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "eqcob/criteria.hpp"

using json = nlohmann::json;
using namespace eqcob;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(EQCOB_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::optional<GroupHom> hom_from_json(const json& j, int rank) {
    if (j.is_null()) return std::nullopt;
    std::vector<std::uint32_t> images;
    for (const auto& subset : j) images.push_back(mask_from_elements(subset.get<std::vector<int>>()));
    return GroupHom(rank, images);
}

}  // namespace

TEST_CASE("class command") {
    const auto r = run_cli("class --m 1 --n 3 --json");
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["class"]["m"] == 1);
    CHECK(out["class"]["n"] == 3);
    CHECK(out["class"]["rank"] == 3);
    CHECK(out["class"]["degree"] == 3);
    CHECK(out["class"]["hom"].is_null());
    CHECK(out["class"]["monomials"].size() == 6);
    CHECK(out["verdict"] == "nonbounding");
}

TEST_CASE("bounding class") {
    const auto r = run_cli("class --m 1 --n 2 --json");
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["class"]["monomials"].empty());
    CHECK(out["verdict"] == "bounds");
}

TEST_CASE("identity hom changes nothing") {
    const auto plain = run_cli("class --m 1 --n 3 --json");
    const auto with_hom = run_cli("class --m 1 --n 3 --hom \"1;2;3\" --json");
    CHECK(with_hom.exit_code == 0);
    CHECK(json::parse(plain.output)["class"]["monomials"] ==
          json::parse(with_hom.output)["class"]["monomials"]);
}

TEST_CASE("certificate JSON re-verifies bit for bit") {
    const auto r = run_cli("certify --m 2 --n 4 --json");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["verdict"] == "proven");
    const int m = out["class"]["m"], n = out["class"]["n"], rank = out["class"]["rank"];
    const int k = out["certificate"]["k"];
    const std::string kind = out["certificate"]["kind"];

    const auto hom = hom_from_json(out["class"]["hom"], rank);
    const RepElement e = eta_fixed_point_sum({m, n, hom});
    const auto B = kind == "single" ? BMultiIndex::single(static_cast<unsigned>(k))
                                    : BMultiIndex::split(static_cast<unsigned>(k));
    const RationalFunction witness = b_coefficient(e, B);
    CHECK_FALSE(witness.is_zero());
    CHECK(witness.numerator().str() == out["certificate"]["witness_numerator"]);
    CHECK(witness.denominator().factor_strings() ==
          out["certificate"]["witness_denominator"].get<std::vector<std::string>>());
}

TEST_CASE("pullback certificate round-trip") {
    const auto r = run_cli("certify --m 2 --n 5 --hom \"1;2;3;4;2,3\" --rank 4 --json");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["verdict"] == "proven");
    CHECK(out["class"]["rank"] == 4);
    CHECK(out["certificate"]["k"] == 10);
    const auto hom = hom_from_json(out["class"]["hom"], 4);
    REQUIRE(hom.has_value());
    const RepElement e = eta_fixed_point_sum({2, 5, hom});
    const auto witness = b_coefficient(e, BMultiIndex::single(10));
    CHECK(witness.numerator().str() == out["certificate"]["witness_numerator"]);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("certify --m 1 --n 2").exit_code == 3);
    CHECK(run_cli("certify --m 1 --n 3 --k-min 1 --k-max 3").exit_code == 2);
    CHECK(run_cli("class --m 3 --n 2").exit_code == 2);
    CHECK(run_cli("class --m 1 --n 7").exit_code == 2);  // rank guard
    CHECK(run_cli("class --m 1 --n 7 --force").exit_code == 0);
    CHECK(run_cli("verify bogus").exit_code == 2);
    CHECK(run_cli("table linind --rank 4 --i 2 --m 2 --n 4").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify commands pass") {
    CHECK(run_cli("verify lemma41 --n-max 5").exit_code == 0);
    CHECK(run_cli("verify formula --n-max 4").exit_code == 0);
    const auto r = run_cli("verify integrality --m 1 --n 3 --max-weight 8 --json");
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["verdict"] == "pass");
    CHECK(out["checks"].size() > 10);
}

TEST_CASE("tables") {
    const auto empty = run_cli("table --rank 2 --json");
    CHECK(empty.exit_code == 0);
    CHECK(json::parse(empty.output)["rows"].empty());

    const auto r3 = run_cli("table --rank 3 --json");
    CHECK(r3.exit_code == 0);
    const json rows = json::parse(r3.output)["rows"];
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["d"] == 3);
    CHECK(rows[0]["verdict"] == "proven");
    CHECK(rows[0]["k"] == 9);

    // at rank 4 the rows reach degree 2^4 - 5 = 11, all proven
    const auto r4 = run_cli("table --rank 4 --json");
    CHECK(r4.exit_code == 0);
    const json rows4 = json::parse(r4.output)["rows"];
    CHECK(rows4.size() == 15);
    int max_d = 0;
    for (const auto& row : rows4) {
        CHECK(row["verdict"] == "proven");
        CHECK(row["m"].get<int>() <= row["n"].get<int>() - 2);
        max_d = std::max(max_d, row["d"].get<int>());
    }
    CHECK(max_d == 11);

    const auto lin = run_cli("table linind --rank 5 --i 2 --m 2 --n 4 --json");
    CHECK(lin.exit_code == 0);
    const json out = json::parse(lin.output);
    CHECK(out["independent"] == true);
    REQUIRE(out["rows"].size() == 2);
    for (const auto& row : out["rows"]) {
        CHECK(row["verdict"] == "proven");
        CHECK(row["k"] == 10);
        CHECK(row["kind"] == "single");
    }
}

TEST_CASE("identical inputs give identical bytes") {
    for (const char* cmd : {"class --m 2 --n 4 --json", "certify --m 1 --n 3 --json",
                            "table --rank 3 --json", "verify lemma41 --n-max 4"}) {
        const auto a = run_cli(cmd);
        const auto b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
        CHECK_FALSE(a.output.empty());
    }
}
