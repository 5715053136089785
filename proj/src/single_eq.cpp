#include "bfre/single_eq.hpp"

#include <algorithm>

namespace bfre {

namespace {

void require_solvable(const BipolarEquation& eq) {
    if (!solvable_single(eq)) throw ContractError("equation is unsolvable");
}

Scalar max_positive_coefficient(const BipolarEquation& eq) {
    Scalar best = Scalar::zero();
    for (const Scalar& a : eq.a_plus)
        if (best < a) best = a;
    return best;
}

Assignment ones_except(std::size_t m, std::size_t k) {
    Assignment x(m, Scalar::one());
    x[k - 1] = Scalar::zero();
    return x;
}

Assignment zeros_except(std::size_t m, std::size_t k, Scalar value) {
    Assignment x(m, Scalar::zero());
    x[k - 1] = std::move(value);
    return x;
}

} // namespace

CoverIndexSets cover_index_sets(const BipolarEquation& eq) {
    const std::size_t m = eq.a_plus.size();
    CoverIndexSets sets;
    for (std::size_t k = 1; k <= m; ++k) {
        if (eq.a_plus[k - 1] >= eq.b) {
            bool siblings_low = true;
            for (std::size_t j = 1; j <= m; ++j)
                if (j != k && !(eq.a_minus[j - 1] < eq.b)) {
                    siblings_low = false;
                    break;
                }
            if (siblings_low) sets.k_plus.push_back(k);
        }
        if (eq.a_minus[k - 1] == eq.b) sets.k_minus.push_back(k);
    }
    return sets;
}

bool solvable_single(const BipolarEquation& eq) {
    const std::size_t m = eq.a_plus.size();
    if (eq.a_minus.size() != m || m == 0)
        throw DimensionError("equation coefficient vectors must be non-empty and equal length");
    if (eq.b.is_zero()) {
        for (std::size_t j = 0; j < m; ++j)
            if (!eq.a_plus[j].is_zero() && !eq.a_minus[j].is_zero()) return false;
        return true;
    }
    if (eq.b <= max_positive_coefficient(eq)) return true;
    return std::any_of(eq.a_minus.begin(), eq.a_minus.end(),
                       [&](const Scalar& a) { return a == eq.b; });
}

std::optional<Assignment> greatest_single(const BipolarEquation& eq) {
    require_solvable(eq);
    const std::size_t m = eq.a_plus.size();

    if (eq.b.is_zero()) {
        Assignment x;
        x.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            x.push_back(eq.a_plus[j].is_zero() ? Scalar::one() : Scalar::zero());
        return x;
    }

    if (eq.b <= max_positive_coefficient(eq)) {
        Assignment x;
        x.reserve(m);
        for (std::size_t j = 0; j < m; ++j) x.push_back(residuum(eq.b, eq.a_plus[j]));
        return x;
    }

    // Every a_plus[j] < b: the maximal solutions each turn off one column
    // of k_minus, so a greatest exists only when that choice is unique.
    auto k_minus = cover_index_sets(eq).k_minus;
    if (k_minus.size() == 1) return ones_except(m, k_minus.front());
    return std::nullopt;
}

std::vector<Assignment> maximal_single(const BipolarEquation& eq) {
    require_solvable(eq);
    if (auto top = greatest_single(eq)) return {std::move(*top)};

    const std::size_t m = eq.a_plus.size();
    std::vector<Assignment> out;
    for (std::size_t k : cover_index_sets(eq).k_minus) out.push_back(ones_except(m, k));
    return out;
}

LowerDescription lower_single(const BipolarEquation& eq) {
    require_solvable(eq);
    const std::size_t m = eq.a_plus.size();

    if (eq.b.is_zero()) {
        bool all_negative_zero = std::all_of(eq.a_minus.begin(), eq.a_minus.end(),
                                             [](const Scalar& a) { return a.is_zero(); });
        if (all_negative_zero)
            return {LowerDescription::Kind::least, {Assignment(m, Scalar::zero())}};
        return {LowerDescription::Kind::no_minimal_elements, {}};
    }

    CoverIndexSets sets = cover_index_sets(eq);
    if (!sets.k_minus.empty()) {
        bool bounded = std::all_of(eq.a_minus.begin(), eq.a_minus.end(),
                                   [&](const Scalar& a) { return a <= eq.b; });
        if (bounded) return {LowerDescription::Kind::least, {Assignment(m, Scalar::zero())}};
        return {LowerDescription::Kind::no_minimal_elements, {}};
    }

    if (sets.k_plus.empty()) return {LowerDescription::Kind::no_minimal_elements, {}};
    std::vector<Assignment> tuples;
    for (std::size_t k : sets.k_plus)
        tuples.push_back(zeros_except(m, k, residuum(eq.b, eq.a_plus[k - 1])));
    return {LowerDescription::Kind::finite_minimals, std::move(tuples)};
}

} // namespace bfre
