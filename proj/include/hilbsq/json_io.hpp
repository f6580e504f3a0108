#pragma once

// External formats. All integers serialize as decimal strings and rationals
// as "p/q" strings in lowest terms with positive denominator, so no consumer
// ever faces 64-bit overflow. Key order is fixed (ordered_json), making
// every rendering byte-for-byte deterministic for a fixed input.

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/hilb2.hpp"
#include "hilbsq/hodge.hpp"
#include "hilbsq/k3.hpp"
#include "hilbsq/lattice.hpp"
#include "hilbsq/matrix.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace hilbsq {

using Json = nlohmann::ordered_json;

// ---- helpers ----

inline Json int_matrix_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMat int_matrix_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw BadInput("BadInput: " + what + " must be a non-empty array of arrays");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw BadInput("BadInput: " + what + " is ragged");
        for (std::size_t k = 0; k < cols; ++k) {
            const Json& cell = j[i][k];
            try {
                if (cell.is_string())
                    m(i, k) = parse_int(cell.get<std::string>());
                else if (cell.is_number_integer())
                    m(i, k) = Int(cell.get<long long>());
                else
                    throw std::invalid_argument("not an integer");
            } catch (const std::exception&) {
                throw BadInput("BadInput: " + what + " entry (" + std::to_string(i + 1) + "," +
                               std::to_string(k + 1) + ") is not an integer");
            }
        }
    }
    return m;
}

// ---- lattices ----

inline Json lattice_to_json(const IntLattice& l) {
    Json j;
    j["rank"] = l.rank();
    j["gram"] = int_matrix_to_json(l.gram());
    return j;
}

inline IntLattice lattice_from_json(const Json& j) {
    if (!j.contains("rank") || !j.contains("gram"))
        throw BadInput("BadInput: lattice JSON needs \"rank\" and \"gram\"");
    IntMat gram = int_matrix_from_json(j["gram"], "gram");
    if (!j["rank"].is_number_integer() ||
        j["rank"].get<long long>() != static_cast<long long>(gram.rows()))
        throw BadInput("BadInput: rank does not match gram dimensions");
    try {
        return IntLattice(gram);
    } catch (const std::exception& e) {
        throw BadInput(std::string("BadInput: ") + e.what());
    }
}

// ---- K3 configurations ----

inline Json k3config_to_json(const K3Config& cfg) {
    Json j;
    j["pic_gram"] = int_matrix_to_json(cfg.pic_gram());
    j["embedding"] = int_matrix_to_json(cfg.embedding());
    j["assume_general"] = cfg.assume_general();
    return j;
}

// Accepts either the full form {"pic_gram", "embedding", "assume_general"}
// or the generic shortcut {"t": n}.
inline K3Config k3config_from_json(const Json& j) {
    if (!j.is_object()) throw BadInput("BadInput: configuration must be a JSON object");
    if (j.contains("t")) {
        Int t;
        if (j["t"].is_string())
            t = parse_int(j["t"].get<std::string>());
        else if (j["t"].is_number_integer())
            t = Int(j["t"].get<long long>());
        else
            throw BadInput("BadInput: \"t\" must be an integer");
        return generic_surface(t);
    }
    if (!j.contains("pic_gram") || !j.contains("embedding"))
        throw BadInput("BadInput: configuration needs \"pic_gram\" and \"embedding\" (or \"t\")");
    IntMat pic = int_matrix_from_json(j["pic_gram"], "pic_gram");
    IntMat emb = int_matrix_from_json(j["embedding"], "embedding");
    bool general = true;
    if (j.contains("assume_general")) {
        if (!j["assume_general"].is_boolean())
            throw BadInput("BadInput: \"assume_general\" must be a boolean");
        general = j["assume_general"].get<bool>();
    }
    return surface_from_embedding(std::move(pic), std::move(emb), general);
}

// ---- H^4 classes ----

// {"A": "p/q", "B": [22 entries], "C": [[i, j, "p/q"], ...], "D": [22]},
// C sparse with 1-based indices i < j in lexicographic order.
inline Json h4_to_json(const H4Class& x) {
    Json j;
    j["A"] = rat_to_string(x.a());
    Json b = Json::array();
    for (std::size_t i = 0; i < kK3Rank; ++i) b.push_back(rat_to_string(x.b(i)));
    j["B"] = std::move(b);
    Json c = Json::array();
    for (std::size_t i = 0; i < kK3Rank; ++i)
        for (std::size_t k = i + 1; k < kK3Rank; ++k)
            if (x.cc(i, k) != 0)
                c.push_back(Json::array({i + 1, k + 1, rat_to_string(x.cc(i, k))}));
    j["C"] = std::move(c);
    Json d = Json::array();
    for (std::size_t i = 0; i < kK3Rank; ++i) d.push_back(rat_to_string(x.d(i)));
    j["D"] = std::move(d);
    return j;
}

inline Rat rat_from_json(const Json& cell, const std::string& what) {
    try {
        if (cell.is_string()) return parse_rat(cell.get<std::string>());
        if (cell.is_number_integer()) return Rat(cell.get<long long>());
    } catch (const std::exception&) {
    }
    throw BadInput("BadInput: " + what + " is not a rational");
}

inline H4Class h4_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("B") || !j.contains("C") ||
        !j.contains("D"))
        throw BadInput("BadInput: H4 class JSON needs \"A\", \"B\", \"C\", \"D\"");
    H4Class x;
    x.a() = rat_from_json(j["A"], "A");
    if (!j["B"].is_array() || j["B"].size() != kK3Rank)
        throw BadInput("BadInput: \"B\" must have 22 entries");
    for (std::size_t i = 0; i < kK3Rank; ++i) x.b(i) = rat_from_json(j["B"][i], "B entry");
    if (!j["D"].is_array() || j["D"].size() != kK3Rank)
        throw BadInput("BadInput: \"D\" must have 22 entries");
    for (std::size_t i = 0; i < kK3Rank; ++i) x.d(i) = rat_from_json(j["D"][i], "D entry");
    if (!j["C"].is_array()) throw BadInput("BadInput: \"C\" must be an array of triples");
    for (const Json& triple : j["C"]) {
        if (!triple.is_array() || triple.size() != 3)
            throw BadInput("BadInput: \"C\" entries must be [i, j, value] triples");
        if (!triple[0].is_number_integer() || !triple[1].is_number_integer())
            throw BadInput("BadInput: \"C\" indices must be integers");
        long long i = triple[0].get<long long>();
        long long k = triple[1].get<long long>();
        if (i < 1 || k <= i || k > static_cast<long long>(kK3Rank))
            throw BadInput("BadInput: \"C\" indices must satisfy 1 <= i < j <= 22");
        x.cc(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)) =
            rat_from_json(triple[2], "C value");
    }
    return x;
}

// ---- reports ----

inline Json report_to_json(const Hodge22Report& report) {
    Json j;
    j["pic_rank"] = report.pic_rank;
    j["rank"] = report.rank;
    j["valid_under_generality_assumption"] = true;
    Json basis = Json::array();
    for (const H4Class& x : report.basis) basis.push_back(h4_to_json(x));
    j["basis"] = std::move(basis);
    j["gram"] = int_matrix_to_json(report.gram);
    j["determinant"] = int_to_string(report.determinant);
    j["discriminant"] = int_to_string(report.discriminant);
    j["is_odd"] = report.is_odd;
    j["indivisibility_of_q"] = report.indivisibility_of_q;
    Json divisors = Json::array();
    for (const Int& d : report.saturation_divisors) divisors.push_back(int_to_string(d));
    j["saturation_divisors"] = std::move(divisors);
    if (report.closed_form_match.has_value()) j["closed_form_match"] = *report.closed_form_match;
    return j;
}

// ---- CSV ----

inline std::string int_matrix_to_csv(const IntMat& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hilbsq
