#include "cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = pgca::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(const CliRun &r) { return nlohmann::ordered_json::parse(r.out); }

std::string write_temp(const std::string &name, const std::string &contents)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path.string();
}

} // namespace

TEST(CliBracket, Examples)
{
    EXPECT_EQ(run({"bracket", "L[1]", "L[2]"}).out, "L[3]\n");
    EXPECT_EQ(run({"bracket", "H[1]", "J[2]"}).out, "-J[3]\n");
    EXPECT_EQ(run({"bracket", "I[1]", "I[5]"}).out, "0\n");
    EXPECT_EQ(run({"bracket", "Hb[1]", "Ib[2]"}).out, "Jb[3]\n");
}

TEST(CliBracket, InputErrors)
{
    EXPECT_EQ(run({"bracket", "L[1", "L[2]"}).code, pgca::cli::kInputError);
    EXPECT_EQ(run({"bracket", "L[1]", "Lb[2]"}).code, pgca::cli::kInputError);
    CliRun r = run({"--format", "json", "bracket", "Ib[2] + L[0]", "L[1]"});
    EXPECT_EQ(r.code, pgca::cli::kInputError);
    EXPECT_EQ(json_of(r)["error"]["code"], "BasisMixError");
    EXPECT_NE(r.err.find("offset 8"), std::string::npos);
}

TEST(CliDerSolve, Examples)
{
    CliRun r0 = run({"--format", "json", "--window", "12", "--interior", "6", "der-solve", "--degree", "0"});
    EXPECT_EQ(r0.code, pgca::cli::kPass);
    auto j0 = json_of(r0);
    EXPECT_EQ(j0["dimensions"]["interior"], 5);
    EXPECT_EQ(j0["facts"]["contains_D"], "yes");

    CliRun r2 = run({"--format", "json", "--window", "12", "--interior", "6", "der-solve", "--degree", "2"});
    EXPECT_EQ(json_of(r2)["dimensions"]["interior"], 4);

    CliRun bad = run({"--format", "json", "--window", "2", "--interior", "1", "der-solve", "--degree", "3"});
    EXPECT_EQ(bad.code, pgca::cli::kInputError);
    EXPECT_EQ(json_of(bad)["error"]["code"], "WindowTooSmall");
}

TEST(CliReplay, Examples)
{
    CliRun r34 = run({"--format", "json", "--window", "10", "replay", "--lemma", "3.4", "--p", "1"});
    EXPECT_EQ(r34.code, pgca::cli::kPass);
    EXPECT_EQ(json_of(r34)["dimensions"]["annihilator"], 3);

    CliRun r32 = run({"--format", "json", "--window", "14", "replay", "--lemma", "3.2", "--i", "5"});
    EXPECT_EQ(r32.code, pgca::cli::kPass);
    EXPECT_EQ(json_of(r32)["dimensions"]["deduced_values"], 0);

    CliRun r33 = run({"--format", "json", "--window", "24", "replay", "--lemma", "3.3", "--x", "I[2]+J[5]"});
    EXPECT_EQ(r33.code, pgca::cli::kPass);
    EXPECT_EQ(json_of(r33)["dimensions"]["family"], 2);

    EXPECT_EQ(run({"replay", "--lemma", "3.1i", "--i", "3", "--window", "14"}).code, pgca::cli::kPass);
    EXPECT_EQ(run({"replay", "--lemma", "3.1ii", "--window", "6"}).code, pgca::cli::kPass);
    EXPECT_EQ(run({"replay", "--lemma", "3.5", "--x", "H[0]+I[2]"}).code, pgca::cli::kPass);
}

TEST(CliReplay, FailuresAndBadParams)
{
    CliRun small = run({"--format", "json", "--window", "24", "replay", "--lemma", "3.3", "--x", "I[2]+J[5]+L[1]",
                     "--probes", "7"});
    EXPECT_EQ(small.code, pgca::cli::kFailure);
    EXPECT_EQ(json_of(small)["error"]["code"], "ProbeSetTooSmall");
    EXPECT_EQ(run({"replay", "--lemma", "9.9"}).code, pgca::cli::kInputError);
    EXPECT_EQ(run({"replay", "--lemma", "3.4", "--p", "0"}).code, pgca::cli::kInputError);
    EXPECT_EQ(run({"replay", "--lemma", "3.1i", "--i", "9"}).code, pgca::cli::kInputError);
}

TEST(CliExtract, Examples)
{
    auto ad_h0 = write_temp("pgca_ad_h0.json", R"({"window": 12, "table": [
        {"point": "L[0]", "value": "0"}, {"point": "L[1]", "value": "0"},
        {"point": "I[0]+J[0]", "value": "I[0]-J[0]"}]})");
    CliRun r = run({"--format", "json", "extract", "--file", ad_h0});
    EXPECT_EQ(r.code, pgca::cli::kPass);
    auto j = json_of(r);
    EXPECT_EQ(j["facts"]["inner"], "H[0]");
    EXPECT_EQ(j["facts"]["lambda"], "0");

    auto zero = write_temp("pgca_zero.json", R"({"window": 12, "table": [
        {"point": "L[0]", "value": "0"}, {"point": "L[1]", "value": "0"},
        {"point": "I[0]+J[0]", "value": "0"}, {"point": "H[2]", "value": "0"}]})");
    auto jz = json_of(run({"--format", "json", "extract", "--file", zero}));
    EXPECT_EQ(jz["facts"]["inner"], "0");
    EXPECT_EQ(jz["facts"]["lambda"], "0");

    auto bad = write_temp("pgca_bad.json", R"({"window": 12, "table": [
        {"point": "L[0]", "value": "0"}, {"point": "L[1]", "value": "0"},
        {"point": "I[0]+J[0]", "value": "H[3]"}]})");
    CliRun rb = run({"--format", "json", "extract", "--file", bad});
    EXPECT_EQ(rb.code, pgca::cli::kFailure);
    EXPECT_EQ(json_of(rb)["error"]["code"], "NotInSpan");

    auto schema = write_temp("pgca_schema.json", R"({"table": []})");
    CliRun rs = run({"--format", "json", "extract", "--file", schema});
    EXPECT_EQ(rs.code, pgca::cli::kInputError);
    EXPECT_EQ(json_of(rs)["error"]["subject"], "/window");

    EXPECT_EQ(run({"extract", "--file", "/nonexistent/pgca.json"}).code, pgca::cli::kInputError);
}

TEST(CliFuzz, PassesAndIsByteIdentical)
{
    for (std::string what : {"jacobi", "isomorphism", "leibniz"}) {
        std::vector<std::string> args = {"--format", "json", "--window", "6", "fuzz", "--what", what,
                                         "--samples", "500", "--seed", "7"};
        CliRun a = run(args), b = run(args);
        EXPECT_EQ(a.code, pgca::cli::kPass) << what;
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(json_of(a)["params"]["seed"], "7");
    }
    EXPECT_EQ(run({"fuzz", "--what", "nothing"}).code, pgca::cli::kInputError);
}

TEST(CliGeneral, ExitCodesAndHelp)
{
    EXPECT_EQ(run({"--help"}).code, pgca::cli::kPass);
    EXPECT_EQ(run({}).code, pgca::cli::kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, pgca::cli::kInputError);
    EXPECT_EQ(run({"--format", "xml", "bracket", "L[1]", "L[2]"}).code, pgca::cli::kInputError);
}
