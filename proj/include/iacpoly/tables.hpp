#pragma once

// Summary tables of limiting IAC probabilities, recomputed from the event
// systems on every call. Independent cells are evaluated concurrently.

#include <functional>
#include <future>
#include <string>
#include <vector>

#include "iacpoly/errors.hpp"
#include "iacpoly/event_spec.hpp"
#include "iacpoly/output.hpp"
#include "iacpoly/socialchoice.hpp"

namespace iacpoly::socialchoice {

struct Table {
    int number = 0;
    std::string title;
    std::vector<OutputRecord> rows;
};

namespace detail {

struct Cell {
    std::string label;
    std::string spec;
    std::function<Rational()> value;
    bool exact = true;
};

inline Cell spec_cell(std::string label, const std::string& spec_text) {
    return {std::move(label), spec_text, [spec_text] { return evaluate(parse_event_spec(spec_text)); }};
}

inline std::vector<OutputRecord> run(std::vector<Cell> cells) {
    std::vector<std::future<Rational>> futures;
    futures.reserve(cells.size());
    for (const auto& c : cells) futures.push_back(std::async(std::launch::async, c.value));
    std::vector<OutputRecord> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        out.push_back({cells[i].label, futures[i].get(), cells[i].exact, cells[i].spec});
    return out;
}

}  // namespace detail

inline Table condorcet_efficiency_table() {
    using detail::spec_cell;
    return {1,
            "Condorcet efficiency of positional rules (joint and conditional)",
            detail::run({
                spec_cell("P | C", "condorcet-efficiency:plurality"),
                spec_cell("A | C", "condorcet-efficiency:antiplurality"),
                spec_cell("B | C", "condorcet-efficiency:borda"),
                spec_cell("(A and B) | C", "condorcet-efficiency:antiplurality,borda"),
                spec_cell("(A and P) | C", "condorcet-efficiency:antiplurality,plurality"),
                spec_cell("(B and P) | C", "condorcet-efficiency:borda,plurality"),
                spec_cell("B | (P and C)", "condorcet-efficiency:borda:given=plurality"),
                spec_cell("B | (A and C)", "condorcet-efficiency:borda:given=antiplurality"),
            })};
}

inline Table condorcet_loser_table(const Rational& rule_m_lambda = rule_m_default_lambda()) {
    using detail::spec_cell;
    const std::string m_spec = "condorcet-loser:lambda=" + rule_m_lambda.to_string();
    return {2,
            "Probability that the rule elects the Condorcet loser",
            detail::run({
                spec_cell("plurality", "condorcet-loser:plurality"),
                {"rule M", m_spec, [m_spec] { return evaluate(parse_event_spec(m_spec)); }, false},
                spec_cell("Borda", "condorcet-loser:borda"),
                spec_cell("antiplurality", "condorcet-loser:antiplurality"),
            })};
}

inline Table agreement_table() {
    using detail::spec_cell;
    return {3,
            "Agreement of rules (same winner / same full ranking)",
            detail::run({
                spec_cell("antiplurality and Borda: winner", "agreement:antiplurality,borda:winner"),
                spec_cell("antiplurality and Borda: ranking", "agreement:antiplurality,borda:ranking"),
                spec_cell("antiplurality and plurality: winner", "agreement:antiplurality,plurality:winner"),
                spec_cell("antiplurality and plurality: ranking", "agreement:antiplurality,plurality:ranking"),
                spec_cell("plurality and Borda: winner", "agreement:plurality,borda:winner"),
                spec_cell("plurality and Borda: ranking", "agreement:plurality,borda:ranking"),
                spec_cell("all common rules: winner", "all-rules-agree"),
            })};
}

inline Table participation_table() {
    std::vector<detail::Cell> cells;
    for (const char* rule : {"plurality", "borda", "antiplurality"})
        for (const char* p : {"PPP", "NPP", "PAP", "NAP"})
            cells.push_back(detail::spec_cell(std::string(rule) + " runoff " + p,
                                              std::string("participation:") + rule + ":" + p));
    return {4, "Participation paradoxes for scoring runoff rules", detail::run(std::move(cells))};
}

inline Table referendum_table() {
    std::vector<detail::Cell> cells;
    for (int n : {3, 4, 5, 6, 7, 9})
        cells.push_back(detail::spec_cell(std::to_string(n) + " districts", "referendum:N=" + std::to_string(n)));
    return {5, "Referendum paradox by number of districts", detail::run(std::move(cells))};
}

inline Table make_table(int number) {
    switch (number) {
        case 1: return condorcet_efficiency_table();
        case 2: return condorcet_loser_table();
        case 3: return agreement_table();
        case 4: return participation_table();
        case 5: return referendum_table();
        default: throw DomainError("tables are numbered 1 to 5, got " + std::to_string(number));
    }
}

}  // namespace iacpoly::socialchoice
