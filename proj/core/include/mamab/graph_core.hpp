#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mamab/matrix.hpp"
#include "mamab/symmetric_eigen.hpp"

namespace mamab {

/// Undirected edge with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Connected undirected communication graph. Edges are stored normalized
/// (u < v) and sorted; the order is the canonical edge index used by the
/// per-edge weight vectors of the optimizer.
class Topology {
 public:
  /// Throws ArgumentError on self-loops, duplicates, or out-of-range indices
  /// and ConstructionError when the graph is disconnected.
  Topology(std::size_t n_nodes, std::vector<Edge> edges);

  std::size_t size() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t degree(std::size_t node) const { return degrees_.at(node); }
  std::size_t max_degree() const noexcept;
  bool has_edge(std::size_t i, std::size_t j) const noexcept;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::uint8_t> adjacency_;
};

enum class TopologyKind { path, cycle, star, complete, grid, random };

std::string_view to_string(TopologyKind kind) noexcept;
/// Throws ArgumentError for unknown names.
TopologyKind parse_topology_kind(std::string_view name);

struct TopologySpec {
  TopologyKind kind = TopologyKind::path;
  std::size_t n = 0;
  // grid only; rows * cols must equal n
  std::size_t rows = 0;
  std::size_t cols = 0;
  // random only: Erdos-Renyi edge probability and generator seed
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Maximum number of seeds tried for a connected random graph.
inline constexpr int kRandomTopologyRetries = 1000;

Topology build_topology(const TopologySpec& spec);

/// Breadth-first reachability from node 0.
bool is_connected(std::size_t n_nodes, std::span<const Edge> edges);
inline bool is_connected(const Topology& t) { return is_connected(t.size(), t.edges()); }

/// L = D - A.
Matrix laplacian(const Topology& t);

/// Symmetric, doubly stochastic consensus matrix supported on a topology.
class WeightMatrix {
 public:
  static constexpr double kSymmetryTol = 1e-12;
  static constexpr double kRowSumTol = 1e-9;

  /// Validates every invariant; throws ArgumentError otherwise.
  WeightMatrix(Topology topology, Matrix entries);

  /// W = I - sum_l w_l (e_i - e_j)(e_i - e_j)^T, one weight per topology edge.
  static WeightMatrix from_edge_weights(const Topology& topology, std::span<const double> edge_weights);

  const Topology& topology() const noexcept { return topology_; }
  const Matrix& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }

  /// Weight of every edge, in topology edge order.
  std::vector<double> edge_weights() const;

 private:
  Topology topology_;
  Matrix entries_;
};

/// Empty string when m is a valid weight matrix for t, else a description of
/// the first violated invariant.
std::string check_weight_invariants(const Topology& t, const Matrix& m);

struct SpectralReport {
  std::vector<double> eigenvalues;  // descending
  double slem = 0.0;
};

SpectralReport spectral_report(const WeightMatrix& w);

/// Second-largest eigenvalue modulus, computed as the spectral norm of
/// W - (1/n) 11^T.
double slem(const WeightMatrix& w);
double slem(const Matrix& w);

}  // namespace mamab
