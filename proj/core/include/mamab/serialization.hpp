#pragma once

#include <string>
#include <string_view>

#include "mamab/graph_core.hpp"

namespace mamab {

/// {"n": int, "edges": [[i,j],...]}
std::string topology_to_json(const Topology& t);
Topology topology_from_json(std::string_view text);

/// {"n": int, "rows": [[...],...]} with round-trip precision decimals.
std::string weights_to_json(const WeightMatrix& w);
Matrix matrix_from_json(std::string_view text);
WeightMatrix weights_from_json(std::string_view text, const Topology& t);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

}  // namespace mamab
