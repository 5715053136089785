#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "bfre/model.hpp"

namespace support {

inline bfre::Scalar S(const std::string& text) { return bfre::Scalar::parse(text); }

inline bfre::Assignment tuple(std::initializer_list<const char*> values) {
    bfre::Assignment x;
    for (const char* v : values) x.push_back(S(v));
    return x;
}

inline std::vector<bfre::Scalar> row(std::initializer_list<const char*> values) {
    return tuple(values);
}

inline bfre::BipolarSystem make_system(
    std::initializer_list<std::initializer_list<const char*>> a_plus,
    std::initializer_list<std::initializer_list<const char*>> a_minus,
    std::initializer_list<const char*> b) {
    std::vector<std::vector<bfre::Scalar>> plus, minus;
    for (auto r : a_plus) plus.push_back(row(r));
    for (auto r : a_minus) minus.push_back(row(r));
    return bfre::BipolarSystem(std::move(plus), std::move(minus), tuple(b));
}

inline bfre::BipolarEquation make_equation(std::initializer_list<const char*> a_plus,
                                           std::initializer_list<const char*> a_minus,
                                           const char* b) {
    return bfre::BipolarEquation{row(a_plus), row(a_minus), S(b)};
}

// canonical order for comparing solution sets that different modules
// emit in different (but individually deterministic) orders
inline std::vector<bfre::Assignment> sorted(std::vector<bfre::Assignment> xs) {
    std::sort(xs.begin(), xs.end(), [](const bfre::Assignment& a, const bfre::Assignment& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return xs;
}

inline bool dominates(const bfre::Assignment& high, const bfre::Assignment& low) {
    for (std::size_t j = 0; j < high.size(); ++j)
        if (!(low[j] <= high[j])) return false;
    return true;
}

} // namespace support
