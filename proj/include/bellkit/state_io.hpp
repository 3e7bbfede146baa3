#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "bellkit/bipartite.hpp"

namespace bellkit::io {

// Malformed document (bad JSON, missing keys, wrong shapes). Invariant
// violations raise ValidationError from the state constructors instead.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A validated state as read from disk: single qudit when j2 is absent,
// bipartite otherwise. The matrix holds the density-matrix entries, which
// the parametrization identifies with the expectation-table entries.
struct StateDocument {
    Spin j1;
    std::optional<Spin> j2;
    OperatorMatrix matrix;

    BipartiteState as_bipartite() const;  // requires j2
    DensityMatrix as_single() const;      // requires no j2
};

// Accepts {"kind": "density_matrix" | "expectation_table", spin labels,
// "values": rows of [re, im] pairs}. Validates all density-matrix
// invariants before returning.
StateDocument import_state(const std::string& json_text);

// Canonical serialization: expectation-table form, [re, im] pairs,
// shortest round-trip float formatting. export(import(x)) == x for
// canonically formatted x.
std::string export_state(const StateDocument& doc);

}  // namespace bellkit::io
