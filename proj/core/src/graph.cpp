#include "orthograph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orthograph/classify.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

OrthoGraph OrthoGraph::build(Algebra algebra, std::size_t n, const FieldCtx& ctx, std::uint64_t max_size,
                             unsigned jobs) {
  require_enumerable(algebra, n, ctx, max_size);
  const std::uint64_t total = enumeration_size(algebra, n, ctx);
  const unsigned workers = std::max(1u, jobs);

  std::vector<std::vector<Mat>> parts(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  parallel_chunks(workers, workers, [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t w = first; w < last; ++w) {
      const std::uint64_t end = std::min(total, (w + 1) * chunk);
      for (std::uint64_t index = w * chunk; index < end; ++index) {
        Mat m = matrix_at(algebra, n, ctx, index);
        if (is_vertex(m, algebra)) parts[w].push_back(std::move(m));
      }
    }
  });

  OrthoGraph g(algebra, n, ctx);
  for (auto& part : parts) {
    for (auto& m : part) g.vertices_.push_back(std::move(m));
  }
  const std::size_t count = g.vertices_.size();
  if (count > kMaxGraphVertices) {
    throw Error(Errc::TooLarge, g.title() + " has " + std::to_string(count) + " vertices, above the limit " +
                                    std::to_string(kMaxGraphVertices));
  }
  g.words_per_row_ = (count + 63) / 64;
  g.bits_.assign(count * g.words_per_row_, 0);

  // Each worker fills the upper triangle of its own rows; mirrored afterwards.
  parallel_chunks(count, workers, [&](std::uint64_t first, std::uint64_t last) {
    for (std::size_t u = first; u < last; ++u) {
      std::uint64_t* row = &g.bits_[u * g.words_per_row_];
      for (std::size_t v = u + 1; v < count; ++v) {
        if (are_orthogonal(g.vertices_[u], g.vertices_[v])) row[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  });
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (g.adjacent(u, v)) g.bits_[v * g.words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
  return g;
}

bool OrthoGraph::adjacent(std::size_t u, std::size_t v) const {
  return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1u;
}

std::vector<std::size_t> OrthoGraph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  const std::uint64_t* row = &bits_[u * words_per_row_];
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    for (std::uint64_t word = row[w]; word != 0; word &= word - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
    }
  }
  return out;
}

std::size_t OrthoGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t word : bits_) twice += static_cast<std::size_t>(std::popcount(word));
  return twice / 2;
}

std::optional<std::size_t> OrthoGraph::index_of(const Mat& m) const {
  if (!(m.ctx() == ctx_) || m.rows() != n_ || m.cols() != n_) return std::nullopt;
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), m);
  if (it == vertices_.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::string OrthoGraph::title() const { return "O(" + algebra_name(algebra_, n_) + ") over " + ctx_.name(); }

std::vector<std::size_t> bfs_distances(const OrthoGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> bfs_distance(const OrthoGraph& g, std::size_t u, std::size_t v) {
  std::size_t d = bfs_distances(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::vector<std::size_t> shortest_path(const OrthoGraph& g, std::size_t u, std::size_t v) {
  // Distances from v let us walk greedily from u, always to the smallest
  // neighbour one step closer, which keeps the output deterministic.
  const auto dist = bfs_distances(g, v);
  if (dist[u] == kUnreachable) return {};
  std::vector<std::size_t> path{u};
  while (path.back() != v) {
    for (std::size_t w : g.neighbors(path.back())) {
      if (dist[w] + 1 == dist[path.back()]) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

std::vector<std::vector<std::size_t>> components(const OrthoGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members;
    const auto dist = bfs_distances(g, s);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (dist[v] != kUnreachable) {
        seen[v] = true;
        members.push_back(v);
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

DistanceTable::DistanceTable(const OrthoGraph& g, unsigned jobs) : rows_(g.size()) {
  parallel_chunks(g.size(), jobs, [&](std::uint64_t first, std::uint64_t last) {
    for (std::size_t u = first; u < last; ++u) rows_[u] = bfs_distances(g, u);
  });
}

DiameterReport diameter(const OrthoGraph& g, unsigned jobs) {
  DiameterReport report;
  report.components = components(g);
  const DistanceTable table(g, jobs);
  for (const auto& comp : report.components) {
    std::size_t best = 0;
    for (std::size_t u : comp) {
      for (std::size_t v : comp) best = std::max(best, table.at(u, v));
    }
    report.component_diameters.push_back(best);
  }
  report.connected = report.components.size() == 1;
  if (report.connected) report.diameter = report.component_diameters.front();
  return report;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  throw Error(Errc::UnsupportedFormat, "unknown export format '" + std::string(name) + "'");
}

std::string export_graph(const OrthoGraph& g, ExportFormat format) {
  if (format == ExportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const Mat& m : g.vertices()) doc["vertices"].push_back(m.to_string());
    doc["edges"] = nlohmann::ordered_json::array();
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v : g.neighbors(u)) {
        if (u < v) doc["edges"].push_back({u, v});
      }
    }
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << "graph \"" << g.title() << "\" {\n";
  for (std::size_t u = 0; u < g.size(); ++u) {
    out << "  v" << u << " [label=\"" << g.vertices()[u].to_string() << "\"];\n";
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v : g.neighbors(u)) {
      if (u < v) out << "  v" << u << " -- v" << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace orthograph
