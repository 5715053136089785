#include "bfre/result.hpp"

#include <json.hpp>

namespace bfre {

namespace {

using json = nlohmann::ordered_json;

json tuple_to_json(const Assignment& x) {
    json out = json::array();
    for (const Scalar& v : x) out.push_back(v.str());
    return out;
}

json tuples_to_json(const std::vector<Assignment>& xs) {
    json out = json::array();
    for (const Assignment& x : xs) out.push_back(tuple_to_json(x));
    return out;
}

const char* kind_name(LowerDescription::Kind kind) {
    switch (kind) {
        case LowerDescription::Kind::least: return "least";
        case LowerDescription::Kind::finite_minimals: return "finite_minimals";
        case LowerDescription::Kind::no_minimal_elements: return "no_minimal_elements";
    }
    throw ContractError("unknown lower kind");
}

LowerDescription::Kind kind_from_name(const std::string& name) {
    if (name == "least") return LowerDescription::Kind::least;
    if (name == "finite_minimals") return LowerDescription::Kind::finite_minimals;
    if (name == "no_minimal_elements") return LowerDescription::Kind::no_minimal_elements;
    throw ParseError("unknown lower kind \"" + name + "\"");
}

Assignment tuple_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + " must be an array of value strings");
    Assignment x;
    x.reserve(arr.size());
    for (std::size_t j = 0; j < arr.size(); ++j) {
        if (!arr[j].is_string())
            throw ParseError(where + "[" + std::to_string(j + 1) + "] must be a value string");
        try {
            x.push_back(Scalar::parse(arr[j].get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError(where + "[" + std::to_string(j + 1) + "]: " + e.what());
        }
    }
    return x;
}

std::vector<Assignment> tuples_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + " must be an array of tuples");
    std::vector<Assignment> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(tuple_from_json(arr[i], where + "[" + std::to_string(i + 1) + "]"));
    return out;
}

std::vector<std::size_t> indices_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + " must be an array of indices");
    std::vector<std::size_t> out;
    for (const json& v : arr) {
        if (!v.is_number_unsigned()) throw ParseError(where + " must hold positive integers");
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

} // namespace

std::string ResultDocument::to_json() const {
    json doc;
    doc["solvable"] = solvable;
    if (feasible_pairs) {
        json pairs = json::array();
        for (const FeasiblePair& p : *feasible_pairs) {
            json entry;
            entry["j_plus"] = p.j_plus;
            entry["j_minus"] = p.j_minus;
            pairs.push_back(std::move(entry));
        }
        doc["feasible_pairs"] = std::move(pairs);
    }
    if (greatest) {
        if (greatest->has_value())
            doc["greatest"] = tuple_to_json(**greatest);
        else
            doc["greatest"] = nullptr;
    }
    if (maximal) doc["maximal"] = tuples_to_json(*maximal);
    if (lower) {
        json entry;
        entry["kind"] = kind_name(lower->kind);
        entry["tuples"] = tuples_to_json(lower->tuples);
        doc["lower"] = std::move(entry);
    }
    doc["diagnostics"] = diagnostics;
    return doc.dump(2) + "\n";
}

ResultDocument ResultDocument::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("result is not a JSON object");

    ResultDocument out;
    if (!doc.contains("solvable") || !doc.at("solvable").is_boolean())
        throw ParseError("result must carry a boolean \"solvable\" field");
    out.solvable = doc.at("solvable").get<bool>();

    if (doc.contains("feasible_pairs")) {
        const json& arr = doc.at("feasible_pairs");
        if (!arr.is_array()) throw ParseError("\"feasible_pairs\" must be an array");
        std::vector<FeasiblePair> pairs;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& entry = arr[i];
            const std::string where = "feasible_pairs[" + std::to_string(i + 1) + "]";
            if (!entry.is_object() || !entry.contains("j_plus") || !entry.contains("j_minus"))
                throw ParseError(where + " must be an object with j_plus and j_minus");
            pairs.push_back({indices_from_json(entry.at("j_plus"), where + ".j_plus"),
                             indices_from_json(entry.at("j_minus"), where + ".j_minus")});
        }
        out.feasible_pairs = std::move(pairs);
    }

    if (doc.contains("greatest")) {
        const json& g = doc.at("greatest");
        if (g.is_null())
            out.greatest = std::optional<Assignment>{};
        else
            out.greatest = std::optional<Assignment>{tuple_from_json(g, "greatest")};
    }

    if (doc.contains("maximal")) out.maximal = tuples_from_json(doc.at("maximal"), "maximal");

    if (doc.contains("lower")) {
        const json& entry = doc.at("lower");
        if (!entry.is_object() || !entry.contains("kind") || !entry.at("kind").is_string())
            throw ParseError("\"lower\" must be an object with a string \"kind\"");
        LowerDescription low;
        low.kind = kind_from_name(entry.at("kind").get<std::string>());
        if (entry.contains("tuples")) low.tuples = tuples_from_json(entry.at("tuples"), "lower.tuples");
        out.lower = std::move(low);
    }

    if (doc.contains("diagnostics")) {
        const json& arr = doc.at("diagnostics");
        if (!arr.is_array()) throw ParseError("\"diagnostics\" must be an array");
        for (const json& d : arr) {
            if (!d.is_string()) throw ParseError("\"diagnostics\" must hold strings");
            out.diagnostics.push_back(d.get<std::string>());
        }
    }
    return out;
}

ResultDocument make_result(const SolutionSummary& summary, const FieldSelection& fields) {
    ResultDocument doc;
    doc.solvable = summary.solvable;
    doc.diagnostics = summary.diagnostics;
    if (fields.pairs) doc.feasible_pairs = summary.pairs;
    if (!summary.solvable) return doc;
    if (fields.greatest) doc.greatest = summary.greatest;
    if (fields.maximal) doc.maximal = summary.maximal;
    if (fields.lower && summary.lower) doc.lower = *summary.lower;
    return doc;
}

} // namespace bfre
