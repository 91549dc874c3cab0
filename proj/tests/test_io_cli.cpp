#include "support.hpp"

#include "abfold/benchmark.hpp"
#include "abfold/cli.hpp"
#include "abfold/errors.hpp"
#include "abfold/io.hpp"
#include "abfold/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace abfold;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

double field_after(const std::string& text, const std::string& key)
{
    for (const std::string& line : lines_of(text)) {
        if (line.rfind(key, 0) == 0) {
            return std::stod(line.substr(key.size()));
        }
    }
    FAIL("missing field " << key);
    return 0.0;
}

} // namespace

TEST_CASE("conformation parsing")
{
    const std::string pasted = read_fixture("conformations/F13.conf");
    const Conformation c = parse_conformation(pasted, 21);
    CHECK(c.dimension() == 21);
    for (double a : c.angles) {
        CHECK(a > -kPi);
        CHECK(a <= kPi);
    }

    const Conformation plain = parse_conformation("10, -20.5 30\n40;\n# note\n+50", 5);
    CHECK(radians_to_degrees(plain.angles[1]) == doctest::Approx(-20.5));
    CHECK(radians_to_degrees(plain.angles[4]) == doctest::Approx(50.0));
    CHECK(radians_to_degrees(parse_conformation("270", 1).angles[0]) == doctest::Approx(-90.0));

    std::string twenty;
    for (int k = 0; k < 20; ++k) {
        twenty += "1.5, ";
    }
    try {
        parse_conformation(twenty, 21);
        FAIL("expected a count error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("expected 21") != std::string::npos);
        CHECK(std::string(e.what()).find("20") != std::string::npos);
    }
    try {
        parse_conformation("1, 2, x3", 3);
        FAIL("expected a token error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 7);
        CHECK(std::string(e.what()).find("x3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_conformation("1, nan, 3", 3), ParseError);
}

TEST_CASE("conformation round trip")
{
    Rng rng(21);
    for (int rep = 0; rep < 100; ++rep) {
        const Conformation c = random_conformation(21, rng);
        const Conformation back = parse_conformation(serialize_conformation(c), 21);
        for (std::size_t k = 0; k < 21; ++k) {
            CHECK(radians_to_degrees(circular_distance(back.angles[k], c.angles[k])) <= 1e-9);
        }
    }
}

TEST_CASE("XYZ export")
{
    const AbSequence aaa = parse_ab_sequence("AAA", "tri");
    const Conformation c({degrees_to_radians(90.0)});
    const std::string text = export_xyz(aaa, compute_positions(c), 0.5);
    const auto lines = lines_of(text);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "3");
    CHECK(lines[1].find("tri") != std::string::npos);
    CHECK(lines[1].find("AAA") != std::string::npos);
    CHECK(lines[2] == "C 0.000000 0.000000 0.000000");
    CHECK(lines[3] == "C 0.000000 1.000000 0.000000");
    CHECK(lines[4] == "C 0.000000 2.000000 0.000000");

    const BenchmarkEntry& f13 = *find_builtin("F13");
    const auto f13_lines =
        lines_of(export_xyz(f13.sequence, compute_positions(*f13.reference_conformation)));
    REQUIRE(f13_lines.size() == 15);
    CHECK(f13_lines[2][0] == 'C');
    CHECK(f13_lines[3][0] == 'N');
    for (std::size_t i = 2; i < f13_lines.size(); ++i) {
        std::istringstream row(f13_lines[i]);
        std::string element;
        double x = 0, y = 0, z = 0;
        row >> element >> x >> y >> z;
        CHECK_FALSE(row.fail());
    }
}

TEST_CASE("trace and results files")
{
    std::ostringstream empty;
    write_trace({}, empty);
    CHECK(empty.str() == std::string(kTraceHeader) + "\n");

    const std::vector<TraceEvent> events{{100, 1, 1003.5, std::nullopt}, {900, 2, -4.25, 4.25}};
    std::ostringstream tr;
    write_trace(events, tr);
    const auto lines = lines_of(tr.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[1] == "100,1,1003.5000000000,");
    CHECK(lines[2] == "900,2,-4.2500000000,4.2500000000");

    RunRecord r;
    r.label = "F13";
    r.seed = 7;
    r.score = 6.5;
    r.nse = 1000;
    r.time = 1.25;
    r.success = true;
    r.nse_phase1 = 300;
    r.nse_phase2 = 700;
    std::ostringstream timed, untimed;
    write_results_csv(std::vector<RunRecord>{r}, timed, true);
    write_results_csv(std::vector<RunRecord>{r}, untimed, false);
    CHECK(lines_of(timed.str())[0] == kResultsHeader);
    CHECK(lines_of(timed.str())[1] == "F13,7,6.5000000000,1000,1.250000,1,300,700");
    CHECK(lines_of(untimed.str())[1] == "F13,7,6.5000000000,1000,0.000000,1,300,700");
}

TEST_CASE("configuration JSON")
{
    OptimizerConfig cfg;
    apply_config_json(R"({"np": 50, "h_c": 10, "base": "global", "nse_limit": 1000, "seed": 3})", cfg);
    CHECK(cfg.np == 50);
    CHECK(cfg.h_c == 10.0);
    CHECK(cfg.base == BaseVector::GlobalBest);
    CHECK(cfg.stopping.nse_limit == 1000u);
    CHECK(cfg.seed == 3u);
    CHECK(cfg.p_b == 20.0);
    CHECK_THROWS_AS(apply_config_json(R"({"bogus": 1})", cfg), ConfigError);
    CHECK_THROWS_AS(apply_config_json(R"({"np": "many"})", cfg), ConfigError);
    CHECK_THROWS_AS(apply_config_json("[1, 2]", cfg), ConfigError);
    CHECK_THROWS_AS(apply_config_json("{", cfg), ParseError);
}

TEST_CASE("command line: evaluate")
{
    const CliRun r = cli({"evaluate", "--label", "F13", "--conf", fixture_path("f13_best.conf")});
    CHECK(r.code == kExitOk);
    CHECK(std::fabs(field_after(r.out, "score") - 6.9961) <= 0.05);

    const CliRun builtin = cli({"evaluate", "--label", "f13"});
    CHECK(builtin.code == kExitOk);
    CHECK(field_after(builtin.out, "score") == doctest::Approx(field_after(r.out, "score")));

    ScratchDir dir;
    const CliRun with_xyz = cli({"evaluate", "--label", "1BXP", "--xyz", dir.file("b.xyz")});
    CHECK(with_xyz.code == kExitOk);
    CHECK(lines_of(read_text_file(dir.file("b.xyz"))).size() == 15);
}

TEST_CASE("command line: convert")
{
    ScratchDir dir;
    write_text_file(dir.file("peptide.txt"), "IVPLCMAG\n");
    const CliRun r = cli({"convert", "--seq-file", dir.file("peptide.txt")});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "AAAAAAAA\n");
    CHECK(cli({"convert", "--seq", "DEHFKNQRSTWY"}).out == "BBBBBBBBBBBB\n");
    CHECK(cli({"convert", "--seq", "XZA"}).code == kExitUsage);
}

TEST_CASE("command line: optimize")
{
    const CliRun miss =
        cli({"optimize", "--label", "F13", "--target", "6.9961", "--nse-limit", "100", "--seed", "1"});
    CHECK(miss.code == kExitTargetMissed);
    CHECK(field_after(miss.out, "nse ") == 100.0);

    ScratchDir dir;
    const std::vector<std::string> args{"optimize", "--seq", "ABBABBABABBAB", "--nse-limit", "5000",
                                        "--seed", "4", "--no-timing", "--trace", dir.file("t.csv"),
                                        "--out", dir.file("best.conf"), "--xyz", dir.file("best.xyz")};
    const CliRun first = cli(args);
    CHECK(first.code == kExitOk);
    const std::string trace1 = read_text_file(dir.file("t.csv"));
    const std::string best1 = read_text_file(dir.file("best.conf"));
    const CliRun second = cli(args);
    CHECK(second.out == first.out);
    CHECK(read_text_file(dir.file("t.csv")) == trace1);
    CHECK(read_text_file(dir.file("best.conf")) == best1);
    CHECK(lines_of(read_text_file(dir.file("best.xyz"))).size() == 15);

    const Conformation best = parse_conformation(best1, 21);
    const double score = -energy_original(parse_ab_sequence("ABBABBABABBAB"), best).e_o;
    CHECK(score == doctest::Approx(field_after(first.out, "score")).epsilon(1e-6));
}

TEST_CASE("command line: benchmark")
{
    ScratchDir dir;
    const auto run = [&](const std::string& jobs, const std::string& out) {
        return cli({"benchmark", "--label", "1BXP", "--runs", "3", "--jobs", jobs, "--nse-limit",
                    "2000", "--seed", "5", "--no-timing", "--out", dir.file(out), "--summary",
                    dir.file(out + ".json")});
    };
    CHECK(run("1", "a.csv").code == kExitOk);
    CHECK(run("3", "b.csv").code == kExitOk);
    const std::string a = read_text_file(dir.file("a.csv"));
    CHECK(a == read_text_file(dir.file("b.csv")));
    CHECK(lines_of(a).size() == 4);
    CHECK(read_text_file(dir.file("a.csv.json")).find("\"n_runs\": 3") != std::string::npos);

    const CliRun json = cli({"benchmark", "--label", "1BXP", "--runs", "2", "--nse-limit", "500",
                             "--format", "json", "--no-timing"});
    CHECK(json.code == kExitOk);
    CHECK(json.out.find("\"runs\"") != std::string::npos);

    const CliRun missed = cli({"benchmark", "--label", "1BXP", "--runs", "2", "--nse-limit", "300",
                               "--target", "5.6104"});
    CHECK(missed.code == kExitTargetMissed);
}

TEST_CASE("command line: usage errors")
{
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"evaluate", "--label", "NOPE"}).code == kExitUsage);
    CHECK(cli({"evaluate", "--label", "F13", "--seq", "ABBABBABABBAB"}).code == kExitUsage);
    CHECK(cli({"evaluate", "--seq", "ABBABBABABBAB"}).code == kExitUsage);
    CHECK(cli({"optimize", "--label", "F13"}).code == kExitUsage);
    CHECK(cli({"benchmark", "--label", "F13", "--nse-limit", "10", "--format", "xml"}).code
          == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    const CliRun bad = cli({"evaluate", "--label", "NOPE"});
    CHECK(bad.err.find("NOPE") != std::string::npos);
}

TEST_CASE("command line: export")
{
    const CliRun r = cli({"export", "--label", "F13"});
    CHECK(r.code == kExitOk);
    CHECK(lines_of(r.out).size() == 15);
}
