#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "synkit/synkit.hpp"

namespace synkit::cli {

// Exit-code convention: 0 affirms, 1 is a definite negative answer, 2 is a
// usage or input error. Negative answers go to the output stream, errors to
// the error stream only.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

enum class Format { table, json, dot };

struct CliConfig {
    std::size_t subset_limit = kDefaultSubsetLimit;
    std::size_t closure_limit = kDefaultClosureLimit;
    Format output_format = Format::table;
    int jobs = 1;
};

namespace detail {

inline Word word_argument(const std::string& text) {
    try {
        return Word(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError("word '" + text + "': " + e.what());
    }
}

inline Dfa load_dfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_dfa(buffer.str());
}

inline void print_delta(std::ostream& out, const Dfa& d, const std::string& indent) {
    for (int q = 0; q < d.state_count(); ++q)
        out << indent << q << ": a->" << d.next(q, Letter::a) << " b->" << d.next(q, Letter::b)
            << "\n";
}

inline void print_automaton_table(std::ostream& out, const Dfa& d) {
    out << "states: " << d.state_count() << "\n";
    if (d.initial()) out << "initial: " << *d.initial() << "\n";
    if (d.finals()) {
        out << "finals:";
        for (int q : *d.finals()) out << ' ' << q;
        out << "\n";
    }
    out << "delta:\n";
    print_delta(out, d, "  ");
}

inline void emit_automaton(std::ostream& out, const Dfa& d, Format format) {
    switch (format) {
    case Format::table: print_automaton_table(out, d); break;
    case Format::json: out << serialize(d); break;
    case Format::dot: out << to_dot(d); break;
    }
}

inline nlohmann::ordered_json automaton_json(const Dfa& d) {
    return nlohmann::ordered_json::parse(serialize(d));
}

inline void emit_subset_automaton(std::ostream& out, const SubsetDfa& subset, Format format) {
    const Dfa acceptor = subset.to_acceptor();
    switch (format) {
    case Format::table: {
        out << "base states: " << subset.base_state_count << "\n";
        out << "states: " << subset.state_count() << "\n";
        if (subset.initial) out << "initial: " << *subset.initial << "\n";
        out << "finals: " << subset.sink << "\n";
        out << "labels:\n";
        for (int id = 0; id < subset.state_count(); ++id)
            out << "  " << id << ": " << subset.label(id) << "\n";
        out << "delta:\n";
        print_delta(out, acceptor, "  ");
        break;
    }
    case Format::json: {
        nlohmann::ordered_json doc = automaton_json(acceptor);
        doc["labels"] = subset.labels();
        out << doc.dump(2) << "\n";
        break;
    }
    case Format::dot: out << to_dot(acceptor, subset.labels()); break;
    }
}

inline std::string format_counterexample(const Letters& u) {
    return u.empty() ? std::string("(empty)") : letters_to_string(u);
}

inline void print_trace(std::ostream& out, const Word& w, const ConstructionTrace& trace) {
    out << "trace (variant " << trace.variant << (trace.swapped ? ", letter-swapped" : "")
        << "):\n";
    for (const auto& step : trace.steps) {
        const std::string prefix =
            step.prefix_len == 0 ? "-" : w.str().substr(0, static_cast<std::size_t>(step.prefix_len));
        out << "  step " << step.prefix_len << ": prefix " << prefix << " pair "
            << (step.sink ? "s" : "(" + std::to_string(step.p) + "," + std::to_string(step.q) + ")");
        if (!step.fixed.empty()) {
            out << " fixes";
            for (const auto& fix : step.fixed)
                out << ' ' << fix.state << '.' << to_char(fix.letter) << '=' << fix.target;
        }
        out << "\n";
    }
}

inline void require_format(Format format, std::initializer_list<Format> allowed,
                           const std::string& command) {
    for (Format f : allowed)
        if (f == format) return;
    throw ParseError("output format not supported by '" + command + "'");
}

} // namespace detail

/// Dispatches one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"synchronizing automata for principal ideal languages"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    CliConfig config;
    std::string format_name = "table";
    app.add_option("--format", format_name, "output format: table, json, or dot")
        ->check(CLI::IsMember({"table", "json", "dot"}));
    app.add_option("--subset-limit", config.subset_limit,
                   "cap on materialized subset states")
        ->envname("SYNKIT_SUBSET_LIMIT")
        ->check(CLI::PositiveNumber);
    app.add_option("--closure-limit", config.closure_limit,
                   "cap on semigroup closure elements")
        ->envname("SYNKIT_CLOSURE_LIMIT")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", config.jobs, "worker threads for batch sweeps")
        ->check(CLI::PositiveNumber);

    std::string word_text;
    std::string file_a;
    std::string file_b;

    auto* min_dfa = app.add_subcommand("min-dfa", "minimal acceptor of the ideal of a word");
    min_dfa->add_option("word", word_text)->required();

    auto* construct =
        app.add_subcommand("construct", "strongly connected synchronizing presenter of a word");
    construct->add_option("word", word_text)->required();
    bool with_trace = false;
    construct->add_flag("--trace", with_trace, "print the per-step pair table");

    auto* verify = app.add_subcommand(
        "verify", "check that a presenter's synchronizing language is the ideal of the word");
    verify->add_option("word", word_text)->required();
    std::string automaton_path;
    verify->add_option("--automaton", automaton_path, "presenter to verify instead of the "
                                                      "constructed one");

    auto* sigma = app.add_subcommand("sigma", "syntactic complexity report for a word");
    sigma->add_option("word", word_text)->required();
    bool sigma_json = false;
    sigma->add_flag("--json", sigma_json, "shorthand for --format json");

    auto* inner = app.add_subcommand("inner-factors", "count distinct inner factors of a word");
    inner->add_option("word", word_text)->required();

    auto* shortest = app.add_subcommand("shortest-sync",
                                        "shortest synchronizing word of an automaton document");
    shortest->add_option("file", file_a)->required();

    auto* power = app.add_subcommand("power", "power automaton of an automaton document");
    power->add_option("file", file_a)->required();

    auto* pairs = app.add_subcommand("pairs", "pair automaton of an automaton document");
    pairs->add_option("file", file_a)->required();

    auto* family = app.add_subcommand("family", "explicit presenter family A or B");
    std::string family_name;
    int family_n = 0;
    family->add_option("which", family_name)->required()->check(CLI::IsMember({"A", "B"}));
    family->add_option("--n", family_n, "word length parameter")->required();

    auto* staircase = app.add_subcommand("staircase", "staircase word and its sigma formula");
    int staircase_k = 0;
    staircase->add_option("--k", staircase_k, "even block count, k >= 4")->required();

    auto* rc = app.add_subcommand("rc", "exhaustive reset-complexity sweep");
    rc->add_option("word", word_text)->required();
    int max_states = 0;
    rc->add_option("--max-states", max_states, "largest state budget to sweep")->required();
    bool sc_only = false;
    rc->add_flag("--strongly-connected", sc_only, "only strongly connected candidates");
    int enum_cap = kDefaultEnumerationCap;
    rc->add_option("--enum-cap", enum_cap,
                   "largest enumerable state count (candidate count is k^(2k))");

    auto* isomorphic = app.add_subcommand("isomorphic", "test two automaton documents for "
                                                        "isomorphism");
    isomorphic->add_option("file1", file_a)->required();
    isomorphic->add_option("file2", file_b)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    if (format_name == "json") config.output_format = Format::json;
    if (format_name == "dot") config.output_format = Format::dot;
    if (sigma_json) config.output_format = Format::json;

    try {
        if (*min_dfa) {
            detail::emit_automaton(out, minimal_ideal_dfa(detail::word_argument(word_text)),
                                   config.output_format);
            return kExitYes;
        }

        if (*construct) {
            if (with_trace)
                detail::require_format(config.output_format, {Format::table}, "construct --trace");
            const Word w = detail::word_argument(word_text);
            const ConstructionResult built = construct_sc(w);
            detail::emit_automaton(out, built.automaton, config.output_format);
            if (with_trace) detail::print_trace(out, w, built.trace);
            return kExitYes;
        }

        if (*verify) {
            detail::require_format(config.output_format, {Format::table}, "verify");
            const Word w = detail::word_argument(word_text);
            const Dfa presenter = automaton_path.empty() ? construct_sc(w).automaton
                                                         : detail::load_dfa(automaton_path);
            const auto verdict =
                languages_equal(syn_acceptor(presenter, config.subset_limit), minimal_ideal_dfa(w));
            if (verdict.equal) {
                out << "EQUAL\n";
                return kExitYes;
            }
            out << "NOT EQUAL\ncounterexample: "
                << detail::format_counterexample(*verdict.counterexample) << "\n";
            return kExitNo;
        }

        if (*sigma) {
            detail::require_format(config.output_format, {Format::table, Format::json}, "sigma");
            const Word w = detail::word_argument(word_text);
            if (w.size() < 2)
                throw ParseError("sigma needs |w| >= 2; the closed formula does not cover "
                                 "one-letter words");
            const SigmaReport report = make_sigma_report(w, config.closure_limit);
            if (config.output_format == Format::json) {
                nlohmann::ordered_json doc;
                doc["word"] = report.word;
                doc["n"] = report.n;
                doc["inner_factors"] = report.inner_factors;
                doc["sigma_predicted"] = report.sigma_predicted;
                doc["sigma_computed"] = report.sigma_computed;
                doc["exceptional"] = report.exceptional;
                doc["match"] = report.match();
                out << doc.dump(2) << "\n";
            } else {
                out << "word             " << report.word << "\n";
                out << "n                " << report.n << "\n";
                out << "inner factors    " << report.inner_factors << "\n";
                out << "sigma predicted  " << report.sigma_predicted << "\n";
                out << "sigma computed   " << report.sigma_computed << "\n";
                out << "exceptional      " << (report.exceptional ? "yes" : "no") << "\n";
                out << "match            " << (report.match() ? "yes" : "no") << "\n";
            }
            return report.match() ? kExitYes : kExitNo;
        }

        if (*inner) {
            detail::require_format(config.output_format, {Format::table, Format::json},
                                   "inner-factors");
            const Word w = detail::word_argument(word_text);
            const long long count = inner_factor_count(w);
            if (config.output_format == Format::json) {
                nlohmann::ordered_json doc;
                doc["word"] = w.str();
                doc["n"] = w.size();
                doc["inner_factors"] = count;
                out << doc.dump(2) << "\n";
            } else {
                out << count << "\n";
            }
            return kExitYes;
        }

        if (*shortest) {
            detail::require_format(config.output_format, {Format::table, Format::json},
                                   "shortest-sync");
            const Dfa d = detail::load_dfa(file_a);
            const auto word = shortest_sync_word(d, config.subset_limit);
            if (config.output_format == Format::json) {
                nlohmann::ordered_json doc;
                doc["synchronizing"] = word.has_value();
                if (word) doc["word"] = letters_to_string(*word);
                out << doc.dump(2) << "\n";
                return word ? kExitYes : kExitNo;
            }
            if (!word) {
                out << "NOT SYNCHRONIZING\n";
                return kExitNo;
            }
            out << detail::format_counterexample(*word) << "\n";
            return kExitYes;
        }

        if (*power) {
            detail::emit_subset_automaton(out, power_automaton(detail::load_dfa(file_a),
                                                               config.subset_limit),
                                          config.output_format);
            return kExitYes;
        }

        if (*pairs) {
            detail::emit_subset_automaton(out, pair_automaton(detail::load_dfa(file_a)),
                                          config.output_format);
            return kExitYes;
        }

        if (*family) {
            const Dfa d = family_name == "A" ? family_a(family_n) : family_b(family_n);
            detail::emit_automaton(out, d, config.output_format);
            return kExitYes;
        }

        if (*staircase) {
            detail::require_format(config.output_format, {Format::table, Format::json},
                                   "staircase");
            const Word w = staircase_word(staircase_k);
            const long long sigma_value = staircase_sigma_formula(staircase_k);
            if (config.output_format == Format::json) {
                nlohmann::ordered_json doc;
                doc["k"] = staircase_k;
                doc["n"] = w.size();
                doc["word"] = w.str();
                doc["sigma_formula"] = sigma_value;
                out << doc.dump(2) << "\n";
            } else {
                out << "k              " << staircase_k << "\n";
                out << "n              " << w.size() << "\n";
                out << "word           " << w.str() << "\n";
                out << "sigma formula  " << sigma_value << "\n";
            }
            return kExitYes;
        }

        if (*rc) {
            detail::require_format(config.output_format, {Format::table, Format::json}, "rc");
            const Word w = detail::word_argument(word_text);
            SearchOptions options;
            options.strongly_connected_only = sc_only;
            options.jobs = config.jobs;
            options.subset_limit = config.subset_limit;
            options.enumeration_cap = enum_cap;
            const SearchReport report = reset_complexity(w, max_states, options);
            if (config.output_format == Format::json) {
                nlohmann::ordered_json doc;
                doc["word"] = report.word;
                doc["max_states"] = report.max_states;
                doc["strongly_connected_only"] = report.strongly_connected_only;
                doc["candidates_examined"] = report.candidates_examined;
                doc["limit_errors"] = report.limit_errors;
                if (report.rc_established) doc["rc"] = *report.rc_established;
                auto list = nlohmann::ordered_json::array();
                for (const auto& presenter : report.presenters)
                    list.push_back(detail::automaton_json(presenter));
                doc["presenters"] = std::move(list);
                out << doc.dump(2) << "\n";
            } else {
                out << "word: " << report.word << "\n";
                out << "max states: " << report.max_states << "\n";
                out << "strongly connected only: "
                    << (report.strongly_connected_only ? "yes" : "no") << "\n";
                out << "candidates examined: " << report.candidates_examined << "\n";
                if (report.limit_errors > 0)
                    out << "candidates skipped on subset cap: " << report.limit_errors << "\n";
                out << "rc: "
                    << (report.rc_established ? std::to_string(*report.rc_established)
                                              : "not established")
                    << "\n";
                out << "presenters (up to isomorphism): " << report.presenters.size() << "\n";
                for (std::size_t at = 0; at < report.presenters.size(); ++at) {
                    out << "presenter " << at << ":\n";
                    detail::print_delta(out, report.presenters[at], "  ");
                }
            }
            return report.rc_established ? kExitYes : kExitNo;
        }

        if (*isomorphic) {
            detail::require_format(config.output_format, {Format::table}, "isomorphic");
            const Dfa d1 = detail::load_dfa(file_a);
            const Dfa d2 = detail::load_dfa(file_b);
            const auto bijection = are_isomorphic(d1, d2);
            if (!bijection) {
                out << "NOT ISOMORPHIC\n";
                return kExitNo;
            }
            out << "ISOMORPHIC\n";
            for (std::size_t q = 0; q < bijection->size(); ++q)
                out << "  " << q << " -> " << (*bijection)[q] << "\n";
            return kExitYes;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    err << "error: no subcommand selected\n";
    return kExitError;
}

} // namespace synkit::cli
