#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bfre/algebra.hpp"
#include "bfre/errors.hpp"

namespace bfre {

// Tuple of unknowns. Scalar's range invariant keeps every component
// inside [0, 1]; length checks happen at the point of use.
using Assignment = std::vector<Scalar>;

// One equation: max over j of (a_plus[j] * x_j) or (a_minus[j] * neg(x_j))
// must equal b.
struct BipolarEquation {
    std::vector<Scalar> a_plus;
    std::vector<Scalar> a_minus;
    Scalar b;
};

// n equations over m shared unknowns. Rectangular by construction;
// empty systems are rejected.
class BipolarSystem {
public:
    BipolarSystem(std::vector<std::vector<Scalar>> a_plus,
                  std::vector<std::vector<Scalar>> a_minus,
                  std::vector<Scalar> b);

    static BipolarSystem from_equation(const BipolarEquation& eq);

    std::size_t rows() const { return b_.size(); }
    std::size_t cols() const { return m_; }

    const Scalar& a_plus(std::size_t i, std::size_t j) const { return a_plus_[i][j]; }
    const Scalar& a_minus(std::size_t i, std::size_t j) const { return a_minus_[i][j]; }
    const Scalar& b(std::size_t i) const { return b_[i]; }

    BipolarEquation equation(std::size_t i) const;

    friend bool operator==(const BipolarSystem& x, const BipolarSystem& y) {
        return x.a_plus_ == y.a_plus_ && x.a_minus_ == y.a_minus_ && x.b_ == y.b_;
    }

private:
    std::size_t m_;
    std::vector<std::vector<Scalar>> a_plus_;
    std::vector<std::vector<Scalar>> a_minus_;
    std::vector<Scalar> b_;
};

// Which unknowns are positive and which are zero; indices are 1-based,
// ascending, and partition {1, ..., m}.
struct SupportPattern {
    std::vector<std::size_t> positive;
    std::vector<std::size_t> zero;

    friend bool operator==(const SupportPattern&, const SupportPattern&) = default;
};

// Left-hand side of one equation at x.
Scalar evaluate_equation(const BipolarEquation& eq, const Assignment& x);

// Left-hand sides of all equations at x.
std::vector<Scalar> evaluate_system(const BipolarSystem& sys, const Assignment& x);

bool is_solution(const BipolarSystem& sys, const Assignment& x);

SupportPattern support_pattern(const Assignment& x);

// Instance files carry every number as a decimal or fraction string:
//   { "a_plus": [["0.4", ...], ...], "a_minus": [...], "b": ["0.3", ...] }
BipolarSystem parse_system(const std::string& text);

std::string serialize_system(const BipolarSystem& sys);

} // namespace bfre
