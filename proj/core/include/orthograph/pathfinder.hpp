#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orthograph/matrix.hpp"

namespace orthograph {

/// A walk in O(T_n) with the construction case that produced it.
struct OrthoPath {
  std::vector<Mat> vertices;
  /// "1.1" … "3.4" for the diameter construction (mirrored cases keep their
  /// tag), "V1"/"V3"/"V4" inside O(T_2), "direct" for an edge and
  /// "trivial" for a single vertex.
  std::string case_tag;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Walk of length at most 4 between two vertices of O(T_n), n >= 3, over
/// any field. Equal endpoints give the length-0 walk and orthogonal ones
/// the single edge; otherwise the walk is dispatched on the bad/good
/// classes of both endpoints. When an intermediate vertex coincides with
/// its successor the repeat is dropped, so the walk never uses a loop.
///
/// Throws NotAVertex, DimensionTooSmall (n < 3), FieldMismatch,
/// DimensionMismatch, or ConstructionFailed if an intermediate fails
/// verification.
OrthoPath find_path(const Mat& a, const Mat& b);

/// Walk of length at most 2 inside one component of O(T_2). Throws
/// Disconnected (naming both component labels) across components.
OrthoPath find_path_t2(const Mat& a, const Mat& b);

struct PathReport {
  bool ok = true;
  /// Human-readable problems, each naming the failing index.
  std::vector<std::string> problems;

  explicit operator bool() const noexcept { return ok; }
};

/// Rechecks a walk from scratch: nonempty, one shape and field, every
/// entry a vertex of O(T_n), consecutive entries distinct and orthogonal,
/// and length <= 4 (n >= 3) or <= 2 (n = 2).
PathReport verify_path(const OrthoPath& path);

}  // namespace orthograph
