#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <flagcoh/cli.hpp>

using namespace flagcoh;
using cli::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text)
{
    std::vector<Json> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        rows.push_back(Json::parse(line));
    return rows;
}

std::string join(const Json& arr)
{
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i)
        s += (i ? "," : "") + std::to_string(arr[i].get<Int>());
    return s;
}

std::string data(const std::string& name) { return std::string(FLAGCOH_TEST_DATA) + "/" + name; }

} // namespace

TEST(Cli, CohomologyExamples)
{
    auto r = call({"cohomology", "--flag", "1,2:3", "--weight", "0,2,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0]["degree"], 1);
    EXPECT_EQ(rows[0]["dimension"], "3");
    EXPECT_EQ(rows[0]["dominant_weight"], Json::array({1, 1, 0}));
    EXPECT_EQ(rows[1]["summary"]["nonvanishing"], 1);

    rows = lines(call({"cohomology", "--flag", "1:2", "--weight", "0,0"}).out);
    EXPECT_EQ(rows[0]["degree"], 0);
    EXPECT_EQ(rows[0]["dimension"], "1");

    rows = lines(call({"cohomology", "--flag", "1,2:3", "--weight", "0,1,0"}).out);
    EXPECT_EQ(rows[0]["zero"], true);
    EXPECT_TRUE(rows[0]["degree"].is_null());

    rows = lines(call({"cohomology", "--flag", "1:2", "--weight=-2,0"}).out);
    EXPECT_EQ(rows[0]["degree"], 1);
}

TEST(Cli, InputErrorsExitTwo)
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"cohomology", "--flag", "1,2:3", "--weight", "0,1"},
             {"cohomology", "--flag", "1,2", "--weight", "0,1,0"},
             {"cohomology", "--flag", "2,1:3", "--weight", "0,1,0"},
             {"cohomology", "--flag", "1:3", "--weight", "0,0,1"},
             {"cohomology", "--flag", "1:2", "--weight", "a,0"},
             {"hsplit", "--flag", "1:2", "--h", "0"},
             {"claim2", "--nu-range", "4..2", "--n-range", "2..2", "--k-range", "0..0"},
             {"reduce", "--grass", "1,5"},
             {"reduce"},
             {"chase", "--grass", "1,2:4", "--twist", "0", "--m", "1", "--t", "1"},
             {"frobnicate"},
             {},
             {"cohomology", "--flag", "1:2", "--weight", "0,0", "--format", "xml"},
         }) {
        const auto r = call(args);
        EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
        EXPECT_TRUE(r.out.empty() || r.code == 0);
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(call({"--help"}).code, 0); }

TEST(Cli, Claim2Sweep)
{
    const auto r = call({"claim2", "--nu-range", "2..4", "--n-range", "2..4", "--k-range=-5..5", "--threads", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 3u * 3u * 11u + 1u);
    EXPECT_EQ(rows.back()["summary"]["status"], "all vanish");
    // lexicographic order of (nu, n, k)
    EXPECT_EQ(rows[0]["nu"], 2);
    EXPECT_EQ(rows[0]["n"], 2);
    EXPECT_EQ(rows[0]["k"], -5);
    EXPECT_EQ(rows[1]["k"], -4);
    EXPECT_EQ(rows[11]["n"], 3);
}

TEST(Cli, Claim2NegativeControlIsNotAFailure)
{
    const auto r = call({"claim2", "--nu-range", "2..2", "--n-range", "1..1", "--k-range", "0..3"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(rows[i]["holds"], false);
        EXPECT_EQ(rows[i]["counterexample_m"], rows[i]["k"].get<Int>() + 2);
        EXPECT_EQ(rows[i]["theorem_regime"], false);
    }
    EXPECT_EQ(rows.back()["summary"]["failures"], 0);
}

TEST(Cli, ResourceGuardSuppressesOutput)
{
    const auto r = call({"claim2", "--nu-range", "2..4", "--n-range", "2..4", "--k-range=-5..5", "--max-cases", "10"});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("max-cases"), std::string::npos);
}

TEST(Cli, SweepsAreDeterministicAcrossThreadCounts)
{
    const std::vector<std::string> c2{"claim2", "--nu-range", "1..4", "--n-range", "1..4", "--k-range=-4..4"};
    const std::vector<std::string> c0{"cohom0-verify", "--max-n", "6"};
    for (const auto& base : {c2, c0}) {
        std::string first;
        for (const char* threads : {"1", "2", "7"}) {
            auto args = base;
            args.insert(args.end(), {"--threads", threads});
            const auto r = call(args);
            ASSERT_EQ(r.code, 0) << r.err;
            if (first.empty())
                first = r.out;
            EXPECT_EQ(r.out, first) << base[0] << " threads=" << threads;
        }
    }
}

TEST(Cli, Cohom0VerifyAgreesEverywhere)
{
    const auto r = call({"cohom0-verify", "--max-n", "6"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    // 1 + 3 + 7 + 15 + 31 shapes for n = 2..6
    ASSERT_EQ(rows.size(), 57u + 1u);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        EXPECT_EQ(rows[i]["agree"], true);
    EXPECT_EQ(rows.back()["summary"]["status"], "all agree");
}

TEST(Cli, RowsRoundTrip)
{
    for (const auto& row : lines(call({"cohom0-verify", "--max-n", "4"}).out)) {
        if (row.contains("summary"))
            continue;
        const auto again = lines(call({"hsplit", "--flag", row["flag"].get<std::string>(), "--h",
                                       std::to_string(row["h"].get<Int>()), "--bound",
                                       std::to_string(row["bound"].get<Int>())})
                                     .out);
        for (const char* key : {"flag", "h", "bound", "splitting", "witness", "witness_degree"})
            EXPECT_EQ(again[0][key], row[key]) << key;
        if (!row["witness"].is_null()) {
            const auto coh = lines(call({"cohomology", "--flag", row["flag"].get<std::string>(),
                                         "--weight=" + join(row["witness"])})
                                       .out);
            EXPECT_EQ(coh[0]["degree"], row["witness_degree"]);
            const auto back = lines(call({"cohomology", "--flag", coh[0]["flag"].get<std::string>(),
                                          "--weight=" + join(coh[0]["weight"])})
                                        .out);
            EXPECT_EQ(back[0], coh[0]);
        }
    }
    for (const auto& row : lines(call({"claim2", "--nu-range", "1..3", "--n-range", "1..3", "--k-range=-2..2"}).out)) {
        if (row.contains("summary"))
            continue;
        const auto again = lines(call({"claim2", "--nu-range", std::to_string(row["nu"].get<Int>()), "--n-range",
                                       std::to_string(row["n"].get<Int>()),
                                       "--k-range=" + std::to_string(row["k"].get<Int>())})
                                     .out);
        EXPECT_EQ(again[0], row);
    }
}

TEST(Cli, ReduceGrassmannian)
{
    const auto rows = lines(call({"reduce", "--grass", "3,7"}).out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0]["to"], "2,6");
    EXPECT_EQ(rows[1]["kind"], "dual");
    EXPECT_EQ(rows[1]["to"], "4,6");
    EXPECT_EQ(rows[2]["to"], "3,5");
    EXPECT_EQ(rows[3]["to"], "2,4");
    for (int i = 0; i < 4; ++i)
        EXPECT_EQ(rows[i]["hypotheses_hold"], true);
}

TEST(Cli, ReduceFlag)
{
    const auto r = call({"reduce", "--flag", "2,5:8"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0]["to"], "2,4:7");
    EXPECT_EQ(rows[1]["to"], "2,4:6");
    EXPECT_EQ(call({"reduce", "--flag", "1,3:5"}).code, 2);
}

TEST(Cli, Resolution)
{
    const auto rows = lines(call({"resolution", "--nu", "2", "--m", "3"}).out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0]["rank"], "4");
    EXPECT_EQ(rows[0]["partition"], "3");
    EXPECT_EQ(rows[1]["rank"], "3");
    EXPECT_EQ(rows[1]["partition"], "3,1");
    EXPECT_EQ(rows[1]["syzygy_rank"], "3");
    EXPECT_EQ(rows[2]["summary"]["euler_rank_check"], true);
}

TEST(Cli, Chase)
{
    auto r = call({"chase", "--grass", "2,4", "--twist=-10", "--m", "1", "--t", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).back()["summary"]["vanishes"], false);
    r = call({"chase", "--grass", "3,7", "--twist", "0", "--m", "1", "--t", "1"});
    EXPECT_EQ(lines(r.out).back()["summary"]["vanishes"], true);
}

TEST(Cli, ThresholdsScenario)
{
    const auto r = call({"thresholds", "--scenario", data("p3_split.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    EXPECT_EQ(rows[0]["item"], "thresholds");
    EXPECT_EQ(rows[0]["m_V"], 6);
    EXPECT_EQ(rows[0]["m_V_holds_below"], false);
    EXPECT_EQ(rows[0]["m_F"], 7);
    EXPECT_EQ(rows[0]["f_from_end_v"], true);

    const auto q = lines(call({"thresholds", "--scenario", data("grass_quotient.json")}).out);
    EXPECT_EQ(q[0]["status"], "undecidable-in-this-setting");
    bool undecidable = false;
    for (const auto& row : q)
        if (row.contains("item") && row["item"] == "sym_twist_ample")
            undecidable = row["status"] == "undecidable-in-this-setting";
    EXPECT_TRUE(undecidable);

    const auto p5 = lines(call({"thresholds", "--scenario", data("p5_trivial.json")}).out);
    EXPECT_EQ(p5[0]["m_F"], 2);
    EXPECT_EQ(p5[0]["f_from_end_v"], false);
}

TEST(Cli, PosetScenario)
{
    const auto rows = lines(call({"poset", "--scenario", data("full_flag_poset.json")}).out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0]["blocks"], Json::array({-1, -1, 0}));
    EXPECT_EQ(rows[0]["below"], Json::array({1}));
    EXPECT_EQ(rows[0]["maximal"], false);
    EXPECT_EQ(rows[1]["maximal"], true);
}

TEST(Cli, ScenarioValidation)
{
    EXPECT_EQ(call({"thresholds", "--scenario", data("bad_unknown_field.json")}).code, 2);
    EXPECT_EQ(call({"thresholds", "--scenario", data("does_not_exist.json")}).code, 2);

    const auto parse = [](const char* text) { return cli::parse_scenario(Json::parse(text)); };
    EXPECT_THROW(parse(R"({"flag":"1:3","V":[{"blocks":[0,0]}],"N":[{"blocks":[1,0]}]})"), InvalidArgument);
    EXPECT_THROW(parse(R"({"schema":2,"flag":"1:3","V":[{"blocks":[0,0]}],"N":[{"blocks":[1,0]}]})"),
                 InvalidArgument);
    EXPECT_THROW(parse(R"({"schema":1,"flag":"1:3","V":[{"weight":[1,1,0]}],"N":[{"blocks":[1,0]}]})"),
                 InvalidArgument);
    EXPECT_THROW(parse(R"({"schema":1,"flag":"1:3","V":[{"blocks":[0,0],"extra":1}],"N":[{"blocks":[1,0]}]})"),
                 InvalidArgument);
    EXPECT_THROW(parse(R"({"schema":1,"flag":"1:3","V":[{"blocks":[0,0]}],"N":"tangent"})"), InvalidArgument);
    EXPECT_THROW(parse(R"({"schema":1,"flag":"1:3","V":[],"N":[{"blocks":[1,0]}]})"), InvalidArgument);
    EXPECT_THROW(parse(R"({"schema":1,"flag":"1,2:3","V":[{"blocks":[0,0,0]}],"N":"universal-quotient"})"),
                 InvalidArgument);

    const auto ok = parse(R"({"schema":1,"flag":"1:3","V":[{"weight":[2,0,0],"multiplicity":3}],"N":[{"blocks":[1,0]}]})");
    EXPECT_EQ(ok.scenario.v.rank(), 3);
    EXPECT_EQ(ok.scenario.v.summands()[0].values, (std::vector<Int>{2, 0}));
}

TEST(Cli, CsvFormat)
{
    const auto r = call({"cohomology", "--flag", "1,2:3", "--weight", "0,2,0", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string header, row, summary;
    std::getline(in, header);
    std::getline(in, row);
    std::getline(in, summary);
    EXPECT_EQ(header, "command,flag,weight,zero,degree,dominant_weight,dimension");
    EXPECT_EQ(row, "cohomology,\"1,2:3\",\"[0,2,0]\",false,1,\"[1,1,0]\",3");
    EXPECT_EQ(summary.rfind("# summary ", 0), 0u);
}

TEST(Cli, OutputFile)
{
    const auto path = std::filesystem::temp_directory_path() / "flagcoh_cli_output_test.jsonl";
    const auto r = call({"resolution", "--nu", "3", "--m", "2", "--output", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), call({"resolution", "--nu", "3", "--m", "2"}).out);
    std::filesystem::remove(path);
}
