#pragma once

#include <cstdint>
#include <optional>

#include "bfre/model.hpp"

namespace bfre {

// Finite grid {0, 1/q, ..., 1}^m used by the brute-force oracles. The
// cap bounds the number of grid points visited, (q+1)^m.
struct GridSpec {
    unsigned q = 10;
    std::uint64_t cap = 10'000'000;
};

enum class Direction { above, below };

// Every grid point that solves the system exactly, in ascending
// lexicographic order. Throws ResourceLimitError when (q+1)^m > cap.
std::vector<Assignment> grid_solutions(const BipolarSystem& sys, const GridSpec& grid = {});

// First grid solution (lexicographic order) strictly dominating x
// (above) or strictly dominated by x (below), if any. x itself need not
// lie on the grid.
std::optional<Assignment> refute_extremal(const BipolarSystem& sys, const Assignment& x,
                                          Direction direction, const GridSpec& grid = {});

// Repeatedly halve coordinate k (1-based) of a known solution; true iff
// the tuple stays a solution through all steps. Witnesses descent
// freedom below a claimed minimal element.
bool halving_descent(const BipolarSystem& sys, Assignment x, std::size_t k, unsigned steps);

struct PlantedInstance {
    BipolarSystem system;
    Assignment planted;
};

// Seeded random system whose right-hand side is evaluated at a random
// grid tuple, so the instance is solvable by construction. The same
// arguments always produce the same instance.
PlantedInstance plant_instance(std::uint64_t seed, std::size_t m, std::size_t n, unsigned q);

} // namespace bfre
