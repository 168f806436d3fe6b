#include "mamab/serialization.hpp"

#include <array>
#include <charconv>

#include <json.hpp>

#include "mamab/errors.hpp"

namespace mamab {

using nlohmann::json;

namespace {

json parse_object(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ArgumentError("expected a JSON object");
  return j;
}

std::size_t read_size(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0)
    throw ArgumentError(std::string("missing or invalid '") + key + "'");
  return j.at(key).get<std::size_t>();
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return ec == std::errc{} ? std::string(buf.data(), end) : std::string("nan");
}

std::string topology_to_json(const Topology& t) {
  json edges = json::array();
  for (const auto& e : t.edges()) edges.push_back({e.u, e.v});
  return json{{"n", t.size()}, {"edges", std::move(edges)}}.dump();
}

Topology topology_from_json(std::string_view text) {
  const auto j = parse_object(text);
  const auto n = read_size(j, "n");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw ArgumentError("missing 'edges' array");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ArgumentError("edges must be [i, j] pairs of node indices");
    edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  }
  return Topology(n, std::move(edges));
}

std::string weights_to_json(const WeightMatrix& w) {
  json rows = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto r = w.entries().row(i);
    rows.push_back(json(std::vector<double>(r.begin(), r.end())));
  }
  return json{{"n", w.size()}, {"rows", std::move(rows)}}.dump();
}

Matrix matrix_from_json(std::string_view text) {
  const auto j = parse_object(text);
  const auto n = read_size(j, "n");
  if (!j.contains("rows") || !j.at("rows").is_array() || j.at("rows").size() != n)
    throw ArgumentError("'rows' must hold n rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : j.at("rows")) {
    if (!r.is_array() || r.size() != n) throw ArgumentError("every row must hold n numbers");
    std::vector<double> row;
    for (const auto& x : r) {
      if (!x.is_number()) throw ArgumentError("matrix entries must be numbers");
      row.push_back(x.get<double>());
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

WeightMatrix weights_from_json(std::string_view text, const Topology& t) {
  return WeightMatrix(t, matrix_from_json(text));
}

}  // namespace mamab
