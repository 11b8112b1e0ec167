#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fqpts {

/// Splits [0, total) into contiguous chunks, evaluates fn(begin, end) on up
/// to `workers` threads and returns the per-chunk results in chunk order.
/// Chunk boundaries depend only on `total`, so ordered reductions over the
/// result are identical for every worker count.
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::uint64_t total, unsigned workers, Fn&& fn) {
  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t nchunks = std::max<std::uint64_t>(1, std::min(total, kChunks));
  const std::uint64_t step = (total + nchunks - 1) / nchunks;
  std::vector<Result> results(nchunks);
  std::vector<std::exception_ptr> errors(nchunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < nchunks;) {
      const std::uint64_t begin = std::min(total, c * step);
      const std::uint64_t end = std::min(total, begin + step);
      try {
        results[c] = fn(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  const unsigned nthreads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), nchunks));
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace fqpts
