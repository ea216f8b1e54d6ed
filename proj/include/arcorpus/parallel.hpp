#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace arcorpus {

inline unsigned default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into at most `workers` contiguous chunks and runs
// fn(begin, end) for each on its own thread. Results come back in chunk order,
// so any order-dependent reduction over them is independent of timing. The
// first exception thrown by a chunk is rethrown after all threads join.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = fn(std::size_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        results[c] = fn(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// out[i] = fn(i) for i in [0, count), evaluated across `workers` threads.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, Fn&& fn) {
  std::vector<Result> out(count);
  parallel_chunks<char>(count, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
    return char{0};
  });
  return out;
}

}  // namespace arcorpus
