#include "orthograph/algebra.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

namespace orthograph {

std::string algebra_name(Algebra algebra, std::size_t n) {
  return (algebra == Algebra::Tn ? "T_" : "M_") + std::to_string(n);
}

std::vector<std::pair<std::size_t, std::size_t>> free_positions(Algebra algebra, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = algebra == Algebra::Tn ? i : 0; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::uint64_t enumeration_size(Algebra algebra, std::size_t n, const FieldCtx& ctx) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (!ctx.is_finite()) return kMax;
  const std::uint64_t p = ctx.characteristic();
  const std::size_t k = free_positions(algebra, n).size();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (size > kMax / p) return kMax;
    size *= p;
  }
  return size;
}

void require_enumerable(Algebra algebra, std::size_t n, const FieldCtx& ctx, std::uint64_t max_size) {
  if (!ctx.is_finite()) {
    throw Error(Errc::InfiniteField, "cannot enumerate " + algebra_name(algebra, n) + " over " + ctx.name());
  }
  std::uint64_t size = enumeration_size(algebra, n, ctx);
  if (size > max_size) {
    std::size_t k = free_positions(algebra, n).size();
    std::string estimate = std::to_string(ctx.characteristic()) + "^" + std::to_string(k);
    if (size != std::numeric_limits<std::uint64_t>::max()) estimate += " = " + std::to_string(size);
    throw Error(Errc::TooLarge, "enumerating " + algebra_name(algebra, n) + " over " + ctx.name() + " needs " +
                                    estimate + " matrices, above the bound " + std::to_string(max_size));
  }
}

Mat matrix_at(Algebra algebra, std::size_t n, const FieldCtx& ctx, std::uint64_t index) {
  const std::uint64_t p = ctx.characteristic();
  auto positions = free_positions(algebra, n);
  std::vector<std::uint64_t> residues(n * n, 0);
  for (std::size_t k = positions.size(); k-- > 0;) {
    residues[positions[k].first * n + positions[k].second] = index % p;
    index /= p;
  }
  return Mat::from_residues(ctx, n, n, residues);
}

void for_each_matrix(Algebra algebra, std::size_t n, const FieldCtx& ctx, std::uint64_t max_size,
                     const std::function<void(const Mat&)>& visit) {
  require_enumerable(algebra, n, ctx, max_size);
  const std::uint64_t size = enumeration_size(algebra, n, ctx);
  for (std::uint64_t index = 0; index < size; ++index) visit(matrix_at(algebra, n, ctx, index));
}

void parallel_chunks(std::uint64_t count, unsigned jobs,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (jobs <= 1 || count < 2) {
    body(0, count);
    return;
  }
  if (jobs > count) jobs = static_cast<unsigned>(count);
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> failures(jobs);
  const std::uint64_t chunk = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    workers.emplace_back([&, w, begin, end] {
      try {
        if (begin < end) body(begin, end);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

}  // namespace orthograph
