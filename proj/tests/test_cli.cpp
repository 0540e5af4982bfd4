#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "synkit/cli.hpp"

using namespace synkit;
namespace cli = synkit::cli;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp_document(const std::string& name, const Dfa& d) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << serialize(d);
    return path;
}

} // namespace

TEST_CASE("construct emits the published table as a document") {
    const auto result = run_cli({"construct", "aabab", "--format", "json"});
    REQUIRE(result.exit_code == cli::kExitYes);
    const auto doc = nlohmann::json::parse(result.out);
    REQUIRE(doc["states"] == 6);
    REQUIRE(doc["delta"] == nlohmann::json({{2, 1}, {1, 0}, {3, 1}, {3, 4}, {5, 0}, {1, 1}}));
    REQUIRE(result.err.empty());

    // identical runs produce identical bytes
    REQUIRE(run_cli({"construct", "aabab", "--format", "json"}).out == result.out);
}

TEST_CASE("construct --trace prints the step table") {
    const auto result = run_cli({"construct", "aabab", "--trace"});
    REQUIRE(result.exit_code == cli::kExitYes);
    REQUIRE(result.out.find("trace (variant 1):") != std::string::npos);
    REQUIRE(result.out.find("step 0: prefix - pair (0,1)") != std::string::npos);
    REQUIRE(result.out.find("step 1: prefix a pair (2,1) fixes 0.a=2 0.b=1 1.a=1 1.b=0") !=
            std::string::npos);
    REQUIRE(result.out.find("step 5: prefix aabab pair s fixes 5.b=1 5.a=1") !=
            std::string::npos);

    REQUIRE(run_cli({"construct", "aabab", "--trace", "--format", "json"}).exit_code ==
            cli::kExitError);
}

TEST_CASE("verify affirms the construction and rejects wrong presenters") {
    const auto good = run_cli({"verify", "aabab"});
    REQUIRE(good.exit_code == cli::kExitYes);
    REQUIRE(good.out == "EQUAL\n");

    const auto path = write_temp_document("synkit_cli_family_a5.json", family_a(5));
    REQUIRE(run_cli({"verify", "aaaab", "--automaton", path.string()}).exit_code ==
            cli::kExitYes);

    const auto wrong = run_cli({"verify", "ab", "--automaton", path.string()});
    REQUIRE(wrong.exit_code == cli::kExitNo);
    REQUIRE(wrong.out.find("NOT EQUAL") != std::string::npos);
    REQUIRE(wrong.out.find("counterexample: ") != std::string::npos);
}

TEST_CASE("sigma reports in both formats") {
    const auto table = run_cli({"sigma", "ab"});
    REQUIRE(table.exit_code == cli::kExitYes);
    REQUIRE(table.out.find("sigma predicted  4") != std::string::npos);
    REQUIRE(table.out.find("sigma computed   4") != std::string::npos);
    REQUIRE(table.out.find("exceptional      yes") != std::string::npos);
    REQUIRE(table.out.find("match            yes") != std::string::npos);

    const auto json = run_cli({"sigma", "aabab", "--json"});
    REQUIRE(json.exit_code == cli::kExitYes);
    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc["word"] == "aabab");
    REQUIRE(doc["n"] == 5);
    REQUIRE(doc["inner_factors"] == 5);
    REQUIRE(doc["sigma_predicted"] == 31);
    REQUIRE(doc["sigma_computed"] == 31);
    REQUIRE(doc["exceptional"] == false);
    REQUIRE(doc["match"] == true);

    const auto unit = run_cli({"sigma", "a"});
    REQUIRE(unit.exit_code == cli::kExitError);
    REQUIRE(unit.out.empty());
    REQUIRE_FALSE(unit.err.empty());
}

TEST_CASE("min-dfa and inner-factors") {
    const auto dot = run_cli({"min-dfa", "aabab", "--format", "dot"});
    REQUIRE(dot.exit_code == cli::kExitYes);
    REQUIRE(dot.out == to_dot(minimal_ideal_dfa(Word("aabab"))));

    const auto count = run_cli({"inner-factors", "aabab"});
    REQUIRE(count.exit_code == cli::kExitYes);
    REQUIRE(count.out == "5\n");
}

TEST_CASE("family subcommand") {
    const auto result = run_cli({"family", "A", "--n", "5", "--format", "json"});
    REQUIRE(result.exit_code == cli::kExitYes);
    REQUIRE(parse_dfa(result.out) == family_a(5));

    REQUIRE(run_cli({"family", "Z", "--n", "5"}).exit_code == cli::kExitError);
    const auto too_small = run_cli({"family", "B", "--n", "1"});
    REQUIRE(too_small.exit_code == cli::kExitError);
    REQUIRE(too_small.out.empty());
}

TEST_CASE("staircase subcommand") {
    const auto result = run_cli({"staircase", "--k", "4"});
    REQUIRE(result.exit_code == cli::kExitYes);
    REQUIRE(result.out.find("abbaaabbbb") != std::string::npos);
    REQUIRE(result.out.find("128") != std::string::npos);

    REQUIRE(run_cli({"staircase", "--k", "3"}).exit_code == cli::kExitError);
}

TEST_CASE("shortest-sync on documents") {
    const auto family_path = write_temp_document("synkit_cli_family_a5.json", family_a(5));
    const auto found = run_cli({"shortest-sync", family_path.string()});
    REQUIRE(found.exit_code == cli::kExitYes);
    REQUIRE(found.out == "aaaab\n");

    const auto permutations =
        write_temp_document("synkit_cli_permutations.json", Dfa({{1, 0}, {0, 1}}));
    const auto none = run_cli({"shortest-sync", permutations.string()});
    REQUIRE(none.exit_code == cli::kExitNo);
    REQUIRE(none.out == "NOT SYNCHRONIZING\n");
}

TEST_CASE("power and pairs exports") {
    const auto trivial = write_temp_document("synkit_cli_one_state.json", Dfa({{0, 0}}));
    const auto dot = run_cli({"power", trivial.string(), "--format", "dot"});
    REQUIRE(dot.exit_code == cli::kExitYes);
    REQUIRE(dot.out == "digraph {\n  \"s\" -> \"s\" [label=\"a,b\"];\n}\n");

    const auto family_path = write_temp_document("synkit_cli_family_a5.json", family_a(5));
    const auto table = run_cli({"power", family_path.string()});
    REQUIRE(table.exit_code == cli::kExitYes);
    REQUIRE(table.out.find("0: s") != std::string::npos);
    REQUIRE(table.out.find("{0,1,2,3,4,5}") != std::string::npos);

    const auto pairs = run_cli({"pairs", family_path.string(), "--format", "json"});
    REQUIRE(pairs.exit_code == cli::kExitYes);
    const auto doc = nlohmann::json::parse(pairs.out);
    REQUIRE(doc["states"] == 16); // C(6,2) + sink
    REQUIRE(doc["labels"][0] == "s");
    // the labeled document still parses as a plain automaton
    REQUIRE(parse_dfa(pairs.out).state_count() == 16);
}

TEST_CASE("rc subcommand") {
    const auto json = run_cli({"rc", "ab", "--max-states", "3", "--format", "json"});
    REQUIRE(json.exit_code == cli::kExitYes);
    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc["rc"] == 3);
    REQUIRE(doc["candidates_examined"] == 746);
    REQUIRE_FALSE(doc["presenters"].empty());

    const auto threaded = run_cli({"rc", "ab", "--max-states", "3", "--jobs", "2", "--format",
                                   "json"});
    REQUIRE(threaded.out == json.out);

    const auto refused = run_cli({"rc", "ab", "--max-states", "5"});
    REQUIRE(refused.exit_code == cli::kExitError);
    REQUIRE(refused.err.find("9765625") != std::string::npos);
    REQUIRE(refused.out.empty());

    const auto unlocked =
        run_cli({"rc", "aa", "--max-states", "3", "--enum-cap", "5", "--format", "json"});
    REQUIRE(unlocked.exit_code == cli::kExitYes);
}

TEST_CASE("isomorphic subcommand") {
    const auto a5 = write_temp_document("synkit_cli_family_a5.json", family_a(5));
    const auto b5 = write_temp_document("synkit_cli_family_b5.json", family_b(5));

    const auto same = run_cli({"isomorphic", a5.string(), a5.string()});
    REQUIRE(same.exit_code == cli::kExitYes);
    REQUIRE(same.out.find("ISOMORPHIC") == 0);
    REQUIRE(same.out.find("0 -> 0") != std::string::npos);

    const auto different = run_cli({"isomorphic", a5.string(), b5.string()});
    REQUIRE(different.exit_code == cli::kExitNo);
    REQUIRE(different.out == "NOT ISOMORPHIC\n");
}

TEST_CASE("usage and input errors exit 2 and keep stdout clean") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"verify", "axb"}, {"min-dfa", ""}, {"bogus"},
          {"construct", "ab", "--format", "yaml"}, {"verify", "ab", "--format", "json"},
          {"shortest-sync", "/nonexistent/file.json"}, {"rc", "ab"}}) {
        const auto result = run_cli(args);
        INFO("args: " << (args.empty() ? "" : args[0]));
        REQUIRE(result.exit_code == cli::kExitError);
        REQUIRE(result.out.empty());
        REQUIRE_FALSE(result.err.empty());
    }
}

TEST_CASE("verify affirms every short word") {
    for (int bits = 0; bits < (1 << 4); ++bits)
        for (int n = 1; n <= 4; ++n) {
            if (bits >= (1 << n)) continue;
            std::string text;
            for (int i = n - 1; i >= 0; --i) text.push_back((bits >> i & 1) ? 'b' : 'a');
            const auto result = run_cli({"verify", text});
            INFO("word: " << text);
            REQUIRE(result.exit_code == cli::kExitYes);
            REQUIRE(result.out == "EQUAL\n");
        }
}

TEST_CASE("help goes to the output stream") {
    const auto result = run_cli({"--help"});
    REQUIRE(result.exit_code == cli::kExitYes);
    REQUIRE(result.out.find("construct") != std::string::npos);
    REQUIRE(result.err.empty());
}

TEST_CASE("environment variables override the default limits") {
    setenv("SYNKIT_CLOSURE_LIMIT", "2", 1);
    const auto limited = run_cli({"sigma", "aabab"});
    unsetenv("SYNKIT_CLOSURE_LIMIT");
    REQUIRE(limited.exit_code == cli::kExitError);
    REQUIRE(limited.err.find("closure cap") != std::string::npos);

    setenv("SYNKIT_SUBSET_LIMIT", "2", 1);
    const auto subsets = run_cli({"verify", "aabab"});
    unsetenv("SYNKIT_SUBSET_LIMIT");
    REQUIRE(subsets.exit_code == cli::kExitError);
    REQUIRE(subsets.err.find("subset cap") != std::string::npos);
}
