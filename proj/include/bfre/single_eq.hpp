#pragma once

#include <optional>
#include <vector>

#include "bfre/model.hpp"

namespace bfre {

// Columns that can carry the right-hand side b > 0 on their own.
// k_plus: columns k with a_plus[k] >= b whose siblings all satisfy
//         a_minus[j] < b (a single positive coordinate there covers b).
// k_minus: columns k with a_minus[k] == b (a zero coordinate there
//          covers b). Indices 1-based, ascending.
struct CoverIndexSets {
    std::vector<std::size_t> k_plus;
    std::vector<std::size_t> k_minus;

    friend bool operator==(const CoverIndexSets&, const CoverIndexSets&) = default;
};

// Shape of the lower boundary of a solution set.
struct LowerDescription {
    enum class Kind {
        least,                // unique least tuple, tuples = {it}
        finite_minimals,      // non-empty finite antichain of minimal tuples
        no_minimal_elements,  // solutions exist but none is minimal, tuples empty
    };

    Kind kind;
    std::vector<Assignment> tuples;

    friend bool operator==(const LowerDescription&, const LowerDescription&) = default;
};

CoverIndexSets cover_index_sets(const BipolarEquation& eq);

bool solvable_single(const BipolarEquation& eq);

// Greatest solution when one exists. For b > 0 this is the residuum
// tuple when b <= max a_plus[j]; when every a_plus[j] < b the equation
// has finitely many maximal solutions instead, and the greatest exists
// precisely when that set is a singleton. For b = 0 the greatest always
// exists: 1 where a_plus[j] = 0, else 0.
// Throws ContractError on an unsolvable equation.
std::optional<Assignment> greatest_single(const BipolarEquation& eq);

// All maximal solutions, ascending by distinguished column.
// Throws ContractError on an unsolvable equation.
std::vector<Assignment> maximal_single(const BipolarEquation& eq);

// Least solution, finite minimal set, or proof of absence.
// Throws ContractError on an unsolvable equation.
LowerDescription lower_single(const BipolarEquation& eq);

} // namespace bfre
