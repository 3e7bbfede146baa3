#include "bellkit/state_io.hpp"

#include <json.hpp>

namespace bellkit::io {

namespace {

using nlohmann::ordered_json;

OperatorMatrix parse_values(const ordered_json& values, int dim) {
    if (!values.is_array() || static_cast<int>(values.size()) != dim)
        throw FormatError("state document: 'values' must hold dim rows");
    OperatorMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        const auto& row = values[r];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw FormatError("state document: ragged 'values' row");
        for (int c = 0; c < dim; ++c) {
            const auto& pair = row[c];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number())
                throw FormatError("state document: entries must be [re, im] pairs");
            m(r, c) = Complex(pair[0].get<double>(), pair[1].get<double>());
        }
    }
    return m;
}

}  // namespace

BipartiteState StateDocument::as_bipartite() const {
    if (!j2) throw FormatError("state document: not a bipartite state");
    return BipartiteState(j1, *j2, matrix);
}

DensityMatrix StateDocument::as_single() const {
    if (j2) throw FormatError("state document: not a single-qudit state");
    return DensityMatrix(j1, matrix);
}

StateDocument import_state(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("state document: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("state document: top level must be an object");

    const std::string kind = doc.value("kind", "");
    if (kind != "density_matrix" && kind != "expectation_table")
        throw FormatError("state document: 'kind' must be density_matrix or expectation_table");

    std::optional<Spin> j1, j2;
    if (doc.contains("twice_j")) {
        if (!doc["twice_j"].is_number_integer())
            throw FormatError("state document: 'twice_j' must be an integer");
        j1 = Spin(doc["twice_j"].get<int>());
    } else if (doc.contains("twice_j1") && doc.contains("twice_j2")) {
        if (!doc["twice_j1"].is_number_integer() || !doc["twice_j2"].is_number_integer())
            throw FormatError("state document: spin labels must be integers");
        j1 = Spin(doc["twice_j1"].get<int>());
        j2 = Spin(doc["twice_j2"].get<int>());
    } else {
        throw FormatError("state document: needs 'twice_j' or 'twice_j1'+'twice_j2'");
    }
    if (!doc.contains("values")) throw FormatError("state document: missing 'values'");

    const int dim = j2 ? j1->dim() * j2->dim() : j1->dim();
    StateDocument out{*j1, j2, parse_values(doc["values"], dim)};

    // Both kinds carry the same numbers (rho_kl equals the table entry);
    // validation happens either way.
    if (j2)
        out.as_bipartite();
    else
        out.as_single();
    return out;
}

std::string export_state(const StateDocument& doc) {
    ordered_json j;
    j["kind"] = "expectation_table";
    if (doc.j2) {
        j["twice_j1"] = doc.j1.twice_j();
        j["twice_j2"] = doc.j2->twice_j();
    } else {
        j["twice_j"] = doc.j1.twice_j();
    }
    ordered_json values = ordered_json::array();
    const int dim = doc.matrix.dim();
    for (int r = 0; r < dim; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < dim; ++c)
            row.push_back({doc.matrix(r, c).real(), doc.matrix(r, c).imag()});
        values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
}

}  // namespace bellkit::io
