#include "bfre/model.hpp"

#include <json.hpp>

#include <utility>

namespace bfre {

namespace {

using json = nlohmann::ordered_json;

std::string cell(const std::string& field, std::size_t i, std::size_t j) {
    return field + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

std::vector<std::vector<Scalar>> parse_matrix(const json& doc, const std::string& field) {
    if (!doc.contains(field)) throw ParseError("missing field \"" + field + "\"");
    const json& rows = doc.at(field);
    if (!rows.is_array() || rows.empty())
        throw ParseError("\"" + field + "\" must be a non-empty array of rows");
    std::vector<std::vector<Scalar>> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.empty())
            throw ParseError(field + " row " + std::to_string(i + 1) +
                             " must be a non-empty array");
        std::vector<Scalar> values;
        values.reserve(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_string())
                throw ParseError(cell(field, i, j) + " must be a decimal string");
            try {
                values.push_back(Scalar::parse(row[j].get<std::string>()));
            } catch (const ParseError& e) {
                throw ParseError(cell(field, i, j) + ": " + e.what());
            }
        }
        out.push_back(std::move(values));
    }
    return out;
}

} // namespace

BipolarSystem::BipolarSystem(std::vector<std::vector<Scalar>> a_plus,
                             std::vector<std::vector<Scalar>> a_minus,
                             std::vector<Scalar> b)
    : a_plus_(std::move(a_plus)), a_minus_(std::move(a_minus)), b_(std::move(b)) {
    if (b_.empty()) throw DimensionError("system must have at least one equation");
    if (a_plus_.size() != b_.size() || a_minus_.size() != b_.size())
        throw DimensionError("a_plus has " + std::to_string(a_plus_.size()) +
                             " rows, a_minus has " + std::to_string(a_minus_.size()) +
                             ", b has " + std::to_string(b_.size()) +
                             "; all three must match");
    m_ = a_plus_[0].size();
    if (m_ == 0) throw DimensionError("system must have at least one unknown");
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (a_plus_[i].size() != m_)
            throw DimensionError("a_plus row " + std::to_string(i + 1) + " has " +
                                 std::to_string(a_plus_[i].size()) + " entries, expected " +
                                 std::to_string(m_));
        if (a_minus_[i].size() != m_)
            throw DimensionError("a_minus row " + std::to_string(i + 1) + " has " +
                                 std::to_string(a_minus_[i].size()) + " entries, expected " +
                                 std::to_string(m_));
    }
}

BipolarSystem BipolarSystem::from_equation(const BipolarEquation& eq) {
    return BipolarSystem({eq.a_plus}, {eq.a_minus}, {eq.b});
}

BipolarEquation BipolarSystem::equation(std::size_t i) const {
    return BipolarEquation{a_plus_[i], a_minus_[i], b_[i]};
}

Scalar evaluate_equation(const BipolarEquation& eq, const Assignment& x) {
    if (x.size() != eq.a_plus.size())
        throw DimensionError("assignment has " + std::to_string(x.size()) +
                             " components, equation has " +
                             std::to_string(eq.a_plus.size()) + " unknowns");
    Scalar acc = Scalar::zero();
    for (std::size_t j = 0; j < x.size(); ++j) {
        Scalar pos = tnorm(eq.a_plus[j], x[j]);
        if (acc < pos) acc = pos;
        Scalar neg = tnorm(eq.a_minus[j], negation(x[j]));
        if (acc < neg) acc = neg;
    }
    return acc;
}

std::vector<Scalar> evaluate_system(const BipolarSystem& sys, const Assignment& x) {
    if (x.size() != sys.cols())
        throw DimensionError("assignment has " + std::to_string(x.size()) +
                             " components, system has " + std::to_string(sys.cols()) +
                             " unknowns");
    std::vector<Scalar> lhs;
    lhs.reserve(sys.rows());
    for (std::size_t i = 0; i < sys.rows(); ++i) lhs.push_back(evaluate_equation(sys.equation(i), x));
    return lhs;
}

bool is_solution(const BipolarSystem& sys, const Assignment& x) {
    if (x.size() != sys.cols())
        throw DimensionError("assignment has " + std::to_string(x.size()) +
                             " components, system has " + std::to_string(sys.cols()) +
                             " unknowns");
    for (std::size_t i = 0; i < sys.rows(); ++i)
        if (evaluate_equation(sys.equation(i), x) != sys.b(i)) return false;
    return true;
}

SupportPattern support_pattern(const Assignment& x) {
    SupportPattern p;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].is_zero())
            p.zero.push_back(j + 1);
        else
            p.positive.push_back(j + 1);
    }
    return p;
}

BipolarSystem parse_system(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("input is not a JSON object");

    auto a_plus = parse_matrix(doc, "a_plus");
    auto a_minus = parse_matrix(doc, "a_minus");

    if (!doc.contains("b")) throw ParseError("missing field \"b\"");
    const json& b_raw = doc.at("b");
    if (!b_raw.is_array() || b_raw.empty())
        throw ParseError("\"b\" must be a non-empty array");
    std::vector<Scalar> b;
    b.reserve(b_raw.size());
    for (std::size_t i = 0; i < b_raw.size(); ++i) {
        if (!b_raw[i].is_string())
            throw ParseError("b[" + std::to_string(i + 1) + "] must be a decimal string");
        try {
            b.push_back(Scalar::parse(b_raw[i].get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError("b[" + std::to_string(i + 1) + "]: " + e.what());
        }
    }

    try {
        return BipolarSystem(std::move(a_plus), std::move(a_minus), std::move(b));
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_system(const BipolarSystem& sys) {
    json doc;
    auto emit = [&](auto&& coefficient) {
        json rows = json::array();
        for (std::size_t i = 0; i < sys.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < sys.cols(); ++j) row.push_back(coefficient(i, j).str());
            rows.push_back(std::move(row));
        }
        return rows;
    };
    doc["a_plus"] = emit([&](std::size_t i, std::size_t j) -> const Scalar& { return sys.a_plus(i, j); });
    doc["a_minus"] = emit([&](std::size_t i, std::size_t j) -> const Scalar& { return sys.a_minus(i, j); });
    json b = json::array();
    for (std::size_t i = 0; i < sys.rows(); ++i) b.push_back(sys.b(i).str());
    doc["b"] = std::move(b);
    return doc.dump(2) + "\n";
}

} // namespace bfre
