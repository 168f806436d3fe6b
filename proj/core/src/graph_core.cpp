#include "mamab/graph_core.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "mamab/errors.hpp"
#include "mamab/rng.hpp"

namespace mamab {

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ArgumentError("matrix rows must form a square array");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.n_));
  }
  return m;
}

bool Matrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

double Matrix::asymmetry() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

std::vector<double> Matrix::operator*(std::span<const double> x) const {
  if (x.size() != n_) throw ArgumentError("matrix-vector dimension mismatch");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw ArgumentError("matrix size mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

// -------------------------------------------------------------- Topology

bool is_connected(std::size_t n_nodes, std::span<const Edge> edges) {
  if (n_nodes == 0) return false;
  std::vector<std::vector<std::size_t>> adj(n_nodes);
  for (const auto& e : edges) {
    if (e.u >= n_nodes || e.v >= n_nodes) return false;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n_nodes, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == n_nodes;
}

Topology::Topology(std::size_t n_nodes, std::vector<Edge> edges)
    : n_(n_nodes), edges_(std::move(edges)), degrees_(n_nodes, 0), adjacency_(n_nodes * n_nodes, 0) {
  if (n_ == 0) throw ArgumentError("topology needs at least one node");
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw ArgumentError("edge index out of range");
    if (e.u == e.v) throw ArgumentError("self-loop on node " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ArgumentError("duplicate edge in topology");
  for (const auto& e : edges_) {
    ++degrees_[e.u];
    ++degrees_[e.v];
    adjacency_[e.u * n_ + e.v] = 1;
    adjacency_[e.v * n_ + e.u] = 1;
  }
  if (!is_connected(n_, edges_)) throw ConstructionError("topology is not connected");
}

std::size_t Topology::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool Topology::has_edge(std::size_t i, std::size_t j) const noexcept {
  return i < n_ && j < n_ && adjacency_[i * n_ + j] != 0;
}

std::string_view to_string(TopologyKind kind) noexcept {
  switch (kind) {
    case TopologyKind::path: return "path";
    case TopologyKind::cycle: return "cycle";
    case TopologyKind::star: return "star";
    case TopologyKind::complete: return "complete";
    case TopologyKind::grid: return "grid";
    case TopologyKind::random: return "random";
  }
  return "unknown";
}

TopologyKind parse_topology_kind(std::string_view name) {
  for (auto k : {TopologyKind::path, TopologyKind::cycle, TopologyKind::star, TopologyKind::complete,
                 TopologyKind::grid, TopologyKind::random})
    if (to_string(k) == name) return k;
  throw ArgumentError("unknown topology kind '" + std::string(name) + "'");
}

namespace {

std::vector<Edge> random_edges(std::size_t n, double p, std::uint64_t seed) {
  auto rng = SeededRng(seed).stream(0, 0, 0);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform() < p) edges.push_back({i, j});
  return edges;
}

}  // namespace

Topology build_topology(const TopologySpec& spec) {
  const auto n = spec.n;
  if (n < 2) throw ArgumentError("topology needs n >= 2");
  std::vector<Edge> edges;
  switch (spec.kind) {
    case TopologyKind::path:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case TopologyKind::cycle:
      if (n < 3) throw ArgumentError("cycle needs n >= 3");
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      break;
    case TopologyKind::star:
      for (std::size_t i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case TopologyKind::complete:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
      break;
    case TopologyKind::grid: {
      if (spec.rows == 0 || spec.cols == 0 || spec.rows * spec.cols != n)
        throw ArgumentError("grid needs rows * cols == n");
      auto id = [&](std::size_t r, std::size_t c) { return r * spec.cols + c; };
      for (std::size_t r = 0; r < spec.rows; ++r)
        for (std::size_t c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) edges.push_back({id(r, c), id(r, c + 1)});
          if (r + 1 < spec.rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
      break;
    }
    case TopologyKind::random: {
      if (!(spec.p > 0.0 && spec.p <= 1.0)) throw ArgumentError("random topology needs 0 < p <= 1");
      for (int attempt = 0; attempt < kRandomTopologyRetries; ++attempt) {
        auto candidate = random_edges(n, spec.p, spec.seed + static_cast<std::uint64_t>(attempt));
        if (is_connected(n, candidate)) return Topology(n, std::move(candidate));
      }
      std::ostringstream msg;
      msg << "random graph G(" << n << ", " << spec.p << ") stayed disconnected after " << kRandomTopologyRetries
          << " seeds";
      throw ConstructionError(msg.str());
    }
  }
  return Topology(n, std::move(edges));
}

Matrix laplacian(const Topology& t) {
  Matrix l(t.size());
  for (const auto& e : t.edges()) {
    l(e.u, e.u) += 1.0;
    l(e.v, e.v) += 1.0;
    l(e.u, e.v) -= 1.0;
    l(e.v, e.u) -= 1.0;
  }
  return l;
}

// ---------------------------------------------------------- WeightMatrix

std::string check_weight_invariants(const Topology& t, const Matrix& m) {
  const auto n = t.size();
  if (m.size() != n) return "dimension " + std::to_string(m.size()) + " != topology size " + std::to_string(n);
  if (!m.all_finite()) return "non-finite entry";
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row_sum += m(i, j);
      if (i != j && !t.has_edge(i, j) && m(i, j) != 0.0)
        return "nonzero entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside the edge set";
      if (std::abs(m(i, j) - m(j, i)) > WeightMatrix::kSymmetryTol)
        return "asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    if (std::abs(row_sum - 1.0) > WeightMatrix::kRowSumTol) return "row " + std::to_string(i) + " does not sum to 1";
  }
  return {};
}

WeightMatrix::WeightMatrix(Topology topology, Matrix entries)
    : topology_(std::move(topology)), entries_(std::move(entries)) {
  if (auto why = check_weight_invariants(topology_, entries_); !why.empty())
    throw ArgumentError("invalid weight matrix: " + why);
}

WeightMatrix WeightMatrix::from_edge_weights(const Topology& topology, std::span<const double> edge_weights) {
  const auto edges = topology.edges();
  if (edge_weights.size() != edges.size()) throw ArgumentError("one weight per edge required");
  const auto n = topology.size();
  Matrix w(n);
  for (std::size_t l = 0; l < edges.size(); ++l) {
    w(edges[l].u, edges[l].v) = edge_weights[l];
    w(edges[l].v, edges[l].u) = edge_weights[l];
  }
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) off += w(i, j);
    w(i, i) = 1.0 - off;
  }
  return WeightMatrix(topology, std::move(w));
}

std::vector<double> WeightMatrix::edge_weights() const {
  std::vector<double> out;
  out.reserve(topology_.edges().size());
  for (const auto& e : topology_.edges()) out.push_back(entries_(e.u, e.v));
  return out;
}

double slem(const Matrix& w) {
  const auto n = w.size();
  if (n <= 1) return 0.0;
  Matrix centered = w;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) centered(i, j) -= inv_n;
  const auto values = symmetric_eigenvalues(centered);
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

double slem(const WeightMatrix& w) { return slem(w.entries()); }

SpectralReport spectral_report(const WeightMatrix& w) {
  return SpectralReport{symmetric_eigenvalues(w.entries()), slem(w)};
}

}  // namespace mamab
