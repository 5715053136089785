#include "bfre/oracle.hpp"

#include <limits>
#include <random>

namespace bfre {

namespace {

void check_grid(const BipolarSystem& sys, const GridSpec& grid) {
    if (grid.q == 0) throw ContractError("grid denominator must be positive");
    std::uint64_t points = 1;
    for (std::size_t j = 0; j < sys.cols(); ++j) {
        if (points > grid.cap / (grid.q + 1))
            throw ResourceLimitError("grid sweep of (" + std::to_string(grid.q) + "+1)^" +
                                     std::to_string(sys.cols()) + " points exceeds cap of " +
                                     std::to_string(grid.cap));
        points *= grid.q + 1;
    }
}

std::vector<Scalar> grid_values(unsigned q) {
    std::vector<Scalar> vals;
    vals.reserve(q + 1);
    for (unsigned v = 0; v <= q; ++v) vals.push_back(Scalar::ratio(v, q));
    return vals;
}

// walks the odometer in ascending lexicographic order, calling visit
// with the current tuple until visit returns false
template <typename Visit>
void for_each_grid_point(std::size_t m, unsigned q, const std::vector<Scalar>& vals,
                         Visit&& visit) {
    std::vector<unsigned> digits(m, 0);
    Assignment x(m, vals[0]);
    for (;;) {
        if (!visit(x)) return;
        std::size_t pos = m;
        for (;;) {
            if (pos == 0) return; // rolled over: every tuple visited
            --pos;
            if (digits[pos] < q) {
                ++digits[pos];
                x[pos] = vals[digits[pos]];
                break;
            }
            digits[pos] = 0;
            x[pos] = vals[0];
        }
    }
}

// uniform draw from {0, ..., bound} independent of the standard
// library's distribution implementation
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t span = bound + 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % span;
    for (;;) {
        std::uint64_t r = rng();
        if (r < limit) return r % span;
    }
}

} // namespace

std::vector<Assignment> grid_solutions(const BipolarSystem& sys, const GridSpec& grid) {
    check_grid(sys, grid);
    const std::vector<Scalar> vals = grid_values(grid.q);
    std::vector<Assignment> out;
    for_each_grid_point(sys.cols(), grid.q, vals, [&](const Assignment& x) {
        if (is_solution(sys, x)) out.push_back(x);
        return true;
    });
    return out;
}

std::optional<Assignment> refute_extremal(const BipolarSystem& sys, const Assignment& x,
                                          Direction direction, const GridSpec& grid) {
    if (x.size() != sys.cols())
        throw DimensionError("assignment has " + std::to_string(x.size()) +
                             " components, system has " + std::to_string(sys.cols()) +
                             " unknowns");
    check_grid(sys, grid);
    const std::vector<Scalar> vals = grid_values(grid.q);
    std::optional<Assignment> witness;
    for_each_grid_point(sys.cols(), grid.q, vals, [&](const Assignment& y) {
        bool comparable = true;
        bool strict = false;
        for (std::size_t j = 0; j < y.size() && comparable; ++j) {
            const bool ok =
                direction == Direction::above ? (y[j] >= x[j]) : (y[j] <= x[j]);
            if (!ok) comparable = false;
            if (y[j] != x[j]) strict = true;
        }
        if (comparable && strict && is_solution(sys, y)) {
            witness = y;
            return false;
        }
        return true;
    });
    return witness;
}

bool halving_descent(const BipolarSystem& sys, Assignment x, std::size_t k, unsigned steps) {
    if (k < 1 || k > sys.cols())
        throw ContractError("coordinate " + std::to_string(k) + " outside 1.." +
                            std::to_string(sys.cols()));
    if (!is_solution(sys, x)) throw ContractError("starting tuple is not a solution");
    for (unsigned s = 0; s < steps; ++s) {
        x[k - 1] = x[k - 1].half();
        if (!is_solution(sys, x)) return false;
    }
    return true;
}

PlantedInstance plant_instance(std::uint64_t seed, std::size_t m, std::size_t n, unsigned q) {
    if (m == 0 || n == 0) throw ContractError("planted instances need m >= 1 and n >= 1");
    if (q == 0) throw ContractError("grid denominator must be positive");

    std::mt19937_64 rng(seed);
    auto matrix = [&] {
        std::vector<std::vector<Scalar>> rows(n);
        for (std::size_t i = 0; i < n; ++i) {
            rows[i].reserve(m);
            for (std::size_t j = 0; j < m; ++j)
                rows[i].push_back(Scalar::ratio(static_cast<long>(draw(rng, q)), q));
        }
        return rows;
    };
    // draw order is fixed: a_plus row-major, a_minus row-major, then the
    // planted tuple
    auto a_plus = matrix();
    auto a_minus = matrix();
    Assignment planted;
    planted.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
        planted.push_back(Scalar::ratio(static_cast<long>(draw(rng, q)), q));

    std::vector<Scalar> b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        b.push_back(evaluate_equation(BipolarEquation{a_plus[i], a_minus[i], Scalar::zero()},
                                      planted));

    return {BipolarSystem(std::move(a_plus), std::move(a_minus), std::move(b)),
            std::move(planted)};
}

} // namespace bfre
