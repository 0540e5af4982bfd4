#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "synkit/automaton.hpp"
#include "synkit/errors.hpp"

namespace synkit {

/// Automaton document, JSON syntax:
///   {"states": m, "alphabet": ["a","b"], "delta": [[qa,qb], ...],
///    "initial": q?, "finals": [q,...]?}
/// Unknown keys are ignored on input.
inline std::string serialize(const Dfa& d) {
    nlohmann::ordered_json doc;
    doc["states"] = d.state_count();
    doc["alphabet"] = {"a", "b"};
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : d.delta()) rows.push_back({row[0], row[1]});
    doc["delta"] = std::move(rows);
    if (d.initial()) doc["initial"] = *d.initial();
    if (d.finals()) doc["finals"] = *d.finals();
    return doc.dump(2) + "\n";
}

inline Dfa parse_dfa(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("automaton document: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw ParseError("automaton document: top level must be an object");
    if (!doc.contains("states") || !doc["states"].is_number_integer())
        throw ParseError("automaton document: missing integer key \"states\"");
    const int m = doc["states"].get<int>();
    if (m <= 0) throw ParseError("automaton document: \"states\" must be positive");
    if (!doc.contains("alphabet") || doc["alphabet"] != nlohmann::json({"a", "b"}))
        throw ParseError("automaton document: \"alphabet\" must be [\"a\",\"b\"]");
    if (!doc.contains("delta") || !doc["delta"].is_array())
        throw ParseError("automaton document: missing array key \"delta\"");
    const auto& rows = doc["delta"];
    if (static_cast<int>(rows.size()) != m)
        throw ParseError("automaton document: \"delta\" has " + std::to_string(rows.size()) +
                         " rows, expected " + std::to_string(m));
    std::vector<std::array<int, 2>> delta;
    delta.reserve(rows.size());
    for (std::size_t q = 0; q < rows.size(); ++q) {
        const auto& row = rows[q];
        if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
            !row[1].is_number_integer())
            throw ParseError("automaton document: delta row " + std::to_string(q) +
                             " must be two integers");
        const int ta = row[0].get<int>();
        const int tb = row[1].get<int>();
        if (ta < 0 || ta >= m || tb < 0 || tb >= m)
            throw ParseError("automaton document: delta row " + std::to_string(q) +
                             " targets out of range");
        delta.push_back({ta, tb});
    }
    std::optional<int> initial;
    if (doc.contains("initial")) {
        if (!doc["initial"].is_number_integer())
            throw ParseError("automaton document: \"initial\" must be an integer");
        initial = doc["initial"].get<int>();
        if (*initial < 0 || *initial >= m)
            throw ParseError("automaton document: \"initial\" out of range");
    }
    std::optional<std::vector<int>> finals;
    if (doc.contains("finals")) {
        if (!doc["finals"].is_array())
            throw ParseError("automaton document: \"finals\" must be an array");
        finals.emplace();
        for (const auto& entry : doc["finals"]) {
            if (!entry.is_number_integer())
                throw ParseError("automaton document: \"finals\" entries must be integers");
            const int q = entry.get<int>();
            if (q < 0 || q >= m)
                throw ParseError("automaton document: final state out of range");
            finals->push_back(q);
        }
    }
    return Dfa(std::move(delta), initial, std::move(finals));
}

namespace detail {

inline void dot_edges(std::ostringstream& out, const std::string& from,
                      const std::string& to_a, const std::string& to_b) {
    if (to_a == to_b) {
        out << "  " << from << " -> " << to_a << " [label=\"a,b\"];\n";
    } else {
        out << "  " << from << " -> " << to_a << " [label=\"a\"];\n";
        out << "  " << from << " -> " << to_b << " [label=\"b\"];\n";
    }
}

} // namespace detail

/// DOT export with stable ordering: states ascending, letter a before b,
/// edges to a common target merged into one "a,b" edge.
inline std::string to_dot(const Dfa& d) {
    std::ostringstream out;
    out << "digraph {\n";
    for (int q = 0; q < d.state_count(); ++q) {
        const auto name = [](int s) { return "q" + std::to_string(s); };
        detail::dot_edges(out, name(q), name(d.next(q, Letter::a)),
                          name(d.next(q, Letter::b)));
    }
    out << "}\n";
    return out.str();
}

/// DOT export with one caller-supplied label per state (used for subset
/// automata, where states are sets).
inline std::string to_dot(const Dfa& d, const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) != d.state_count())
        throw std::invalid_argument("label count does not match state count");
    std::ostringstream out;
    out << "digraph {\n";
    for (int q = 0; q < d.state_count(); ++q) {
        const auto name = [&](int s) { return '"' + labels[static_cast<std::size_t>(s)] + '"'; };
        detail::dot_edges(out, name(q), name(d.next(q, Letter::a)),
                          name(d.next(q, Letter::b)));
    }
    out << "}\n";
    return out.str();
}

} // namespace synkit
