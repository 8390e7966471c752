#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orthograph/matrix.hpp"

namespace orthograph {

/// Ambient algebra: upper triangular T_n or the full matrix algebra M_n.
enum class Algebra { Tn, Mn };

std::string algebra_name(Algebra algebra, std::size_t n);

/// Enumerations larger than this are refused unless the caller raises the bound.
inline constexpr std::uint64_t kDefaultMaxEnumeration = 100'000'000;

/// Positions (row, col) that may hold a nonzero entry, in row-major order.
std::vector<std::pair<std::size_t, std::size_t>> free_positions(Algebra algebra, std::size_t n);

/// p^(number of free positions), saturating at UINT64_MAX.
std::uint64_t enumeration_size(Algebra algebra, std::size_t n, const FieldCtx& ctx);

/// Throws InfiniteField over the rationals and TooLarge (with the size
/// estimate) when the enumeration exceeds max_size.
void require_enumerable(Algebra algebra, std::size_t n, const FieldCtx& ctx, std::uint64_t max_size);

/// The index-th matrix of the algebra in lexicographic order of its
/// row-major residues.
Mat matrix_at(Algebra algebra, std::size_t n, const FieldCtx& ctx, std::uint64_t index);

/// Visits every matrix of the algebra (including 0) in lexicographic order.
void for_each_matrix(Algebra algebra, std::size_t n, const FieldCtx& ctx, std::uint64_t max_size,
                     const std::function<void(const Mat&)>& visit);

/// Splits [0, count) into `jobs` contiguous chunks and runs body(begin, end)
/// on each, one thread per chunk. jobs <= 1 runs inline.
void parallel_chunks(std::uint64_t count, unsigned jobs,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace orthograph
