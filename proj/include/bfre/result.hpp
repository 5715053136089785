#pragma once

#include <optional>
#include <string>

#include "bfre/system_solver.hpp"

namespace bfre {

// which report fields a caller asked for
struct FieldSelection {
    bool pairs = true;
    bool greatest = true;
    bool maximal = true;
    bool lower = true;
};

// External report. Unset optionals are omitted from the JSON entirely;
// greatest distinguishes "field not requested" (outer) from "requested
// but the system has no greatest solution" (inner, serialized as null).
struct ResultDocument {
    bool solvable = false;
    std::optional<std::vector<FeasiblePair>> feasible_pairs;
    std::optional<std::optional<Assignment>> greatest;
    std::optional<std::vector<Assignment>> maximal;
    std::optional<LowerDescription> lower;
    std::vector<std::string> diagnostics;

    // Serialization is byte-stable: fixed field order, exact value
    // strings, two-space indent, trailing newline.
    std::string to_json() const;
    static ResultDocument from_json(const std::string& text);
};

// Projects a summary onto the requested fields. Extremal fields are
// omitted when the system is unsolvable.
ResultDocument make_result(const SolutionSummary& summary, const FieldSelection& fields);

} // namespace bfre
