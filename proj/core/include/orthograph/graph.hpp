#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthograph/algebra.hpp"
#include "orthograph/matrix.hpp"

namespace orthograph {

/// Adjacency is a dense bit matrix, so vertex counts are capped.
inline constexpr std::size_t kMaxGraphVertices = 1u << 15;

/// Orthogonality graph of T_n or M_n over a prime field: vertices are the
/// nonzero singular matrices in lexicographic order, edges join distinct
/// orthogonal vertices. Self-orthogonal matrices carry no loop.
class OrthoGraph {
 public:
  /// Throws InfiniteField, TooLarge (enumeration above max_size or more than
  /// kMaxGraphVertices vertices). The result does not depend on `jobs`.
  static OrthoGraph build(Algebra algebra, std::size_t n, const FieldCtx& ctx,
                          std::uint64_t max_size = kDefaultMaxEnumeration, unsigned jobs = 1);

  Algebra algebra() const noexcept { return algebra_; }
  std::size_t n() const noexcept { return n_; }
  const FieldCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Mat>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  bool adjacent(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t u) const;
  std::size_t edge_count() const;
  std::optional<std::size_t> index_of(const Mat& m) const;
  /// "O(T_3) over GF(2)".
  std::string title() const;

 private:
  OrthoGraph(Algebra algebra, std::size_t n, const FieldCtx& ctx) : algebra_(algebra), n_(n), ctx_(ctx) {}

  Algebra algebra_;
  std::size_t n_;
  FieldCtx ctx_;
  std::vector<Mat> vertices_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline OrthoGraph build_graph(Algebra algebra, std::size_t n, const FieldCtx& ctx,
                              std::uint64_t max_size = kDefaultMaxEnumeration, unsigned jobs = 1) {
  return OrthoGraph::build(algebra, n, ctx, max_size, jobs);
}

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// BFS distances from `source`; kUnreachable marks other components.
std::vector<std::size_t> bfs_distances(const OrthoGraph& g, std::size_t source);
/// Shortest-path length, nullopt when unreachable.
std::optional<std::size_t> bfs_distance(const OrthoGraph& g, std::size_t u, std::size_t v);
/// Vertex indices of one shortest path from u to v; empty when unreachable.
std::vector<std::size_t> shortest_path(const OrthoGraph& g, std::size_t u, std::size_t v);

/// Connected components ordered by smallest member; members ascending.
std::vector<std::vector<std::size_t>> components(const OrthoGraph& g);

/// All-pairs BFS distances, computed with `jobs` workers.
class DistanceTable {
 public:
  DistanceTable(const OrthoGraph& g, unsigned jobs = 1);
  std::size_t at(std::size_t u, std::size_t v) const { return rows_[u][v]; }
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::vector<std::vector<std::size_t>> rows_;
};

struct DiameterReport {
  std::vector<std::vector<std::size_t>> components;
  /// Parallel to components.
  std::vector<std::size_t> component_diameters;
  bool connected = false;
  /// Global diameter; set only for a connected nonempty graph.
  std::optional<std::size_t> diameter;
};

DiameterReport diameter(const OrthoGraph& g, unsigned jobs = 1);

enum class ExportFormat { Dot, Json };
/// "dot" or "json"; anything else throws UnsupportedFormat.
ExportFormat parse_export_format(std::string_view name);

/// DOT: one node per vertex labelled in the matrix text format, undirected
/// edges u -- v with u < v in ascending order. JSON: {"vertices": [...],
/// "edges": [[i, j], ...]} with i < j, sorted.
std::string export_graph(const OrthoGraph& g, ExportFormat format);

}  // namespace orthograph
