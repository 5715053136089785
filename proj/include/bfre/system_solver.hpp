#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfre/single_eq.hpp"

namespace bfre {

struct SolverOptions {
    // enumerate_feasible_pairs sweeps 2^m candidate partitions; systems
    // wider than this are rejected with ResourceLimitError unless the
    // caller raises the bound.
    unsigned cap = 24;
    // workers for the partition sweep; results are merged in mask order,
    // so the outcome is identical for any worker count
    unsigned threads = 1;
};

// Partition of the columns {1, ..., m}: j_plus carries positive values,
// j_minus is pinned to zero. Both ascending, 1-based.
struct FeasiblePair {
    std::vector<std::size_t> j_plus;
    std::vector<std::size_t> j_minus;

    friend bool operator==(const FeasiblePair&, const FeasiblePair&) = default;
};

// Every feasible pair of a system, as j_plus bitmasks in ascending order
// (bit j-1 set iff column j is in j_plus). The j_minus projection of a
// member is the complement of its mask.
struct FeasibleFamily {
    std::size_t m = 0;
    std::vector<std::uint64_t> masks;

    bool empty() const { return masks.empty(); }
    std::size_t size() const { return masks.size(); }
    std::vector<FeasiblePair> pairs() const;
};

// What is left after pinning the j_minus columns to zero: the rows that
// can still attain their right-hand side, over the remaining columns.
// Either side may be empty.
struct ReducedSystem {
    std::vector<std::size_t> row_map;     // surviving original rows, 1-based ascending
    std::vector<std::size_t> column_map;  // surviving original columns, 1-based ascending
    std::vector<std::vector<Scalar>> a_plus;
    std::vector<std::vector<Scalar>> a_minus;
    std::vector<Scalar> b;
};

struct SolutionSummary {
    bool solvable = false;
    std::vector<FeasiblePair> pairs;
    std::optional<Assignment> greatest;
    std::vector<Assignment> maximal;
    std::optional<LowerDescription> lower;  // absent iff unsolvable
    std::vector<std::string> diagnostics;
};

// mask helpers shared by the solver and its tests
std::vector<std::size_t> mask_to_indices(std::uint64_t mask, std::size_t m);
std::uint64_t indices_to_mask(const std::vector<std::size_t>& indices, std::size_t m);

// Exact test of the partition conditions. Works at any width; throws
// DimensionError when (j_plus, j_minus) is not a partition of {1..m}.
bool is_feasible_pair(const BipolarSystem& sys, const FeasiblePair& pair);

FeasibleFamily enumerate_feasible_pairs(const BipolarSystem& sys, const SolverOptions& opts = {});

bool solvable_system(const BipolarSystem& sys, const SolverOptions& opts = {});

// x_j = min over rows h of residuum(b_h, a_plus(h, j)) on j_plus, 0 off
// it. Solves the system whenever (j_plus, complement) is feasible.
Assignment construct_solution(const BipolarSystem& sys, const std::vector<std::size_t>& j_plus);

// subset-maximal / subset-minimal members of a family of index sets
std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> masks);
std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks);

// Greatest solution: present iff the j_plus projection of the feasible
// family has a greatest member. Throws ContractError when unsolvable.
std::optional<Assignment> greatest_system(const BipolarSystem& sys, const SolverOptions& opts = {});

// One solution per maximal j_plus member, ascending by mask; these are
// exactly the maximal solutions. Throws ContractError when unsolvable.
std::vector<Assignment> maximal_solutions(const BipolarSystem& sys, const SolverOptions& opts = {});

ReducedSystem reduced_system(const BipolarSystem& sys, const std::vector<std::size_t>& j_minus);

// Decides whether the reduced system has exactly one solution:
// no surviving rows -> unique iff no surviving columns; otherwise the
// reduced system must have exactly one feasible pair of its own, and
// every positive coordinate of its constructed solution must be pinned
// by a row it covers alone.
bool unique_solution_check(const ReducedSystem& reduced, const SolverOptions& opts = {});

// Least solution, finite minimal antichain, or proof that no minimal
// solution exists. Maximal j_minus members whose reduced system fails
// the uniqueness check contribute nothing and are reported through
// *diagnostics. Throws ContractError when unsolvable.
LowerDescription lower_system(const BipolarSystem& sys, const SolverOptions& opts = {},
                              std::vector<std::string>* diagnostics = nullptr);

// One-shot report; never throws on unsolvable input (gives
// solvable=false with empty fields instead)
SolutionSummary summarize(const BipolarSystem& sys, const SolverOptions& opts = {});

} // namespace bfre
