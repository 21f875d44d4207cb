#pragma once

#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace fgc {

// Evaluates chunk(0..n_chunks-1) on up to `threads` workers and folds the
// results in chunk-index order, so the outcome never depends on the worker
// count (exact arithmetic is order-free anyway; floating point is not).
template <typename T, typename ChunkFn, typename CombineFn>
T parallel_reduce(std::size_t n_chunks, ChunkFn&& chunk, T init, CombineFn&& combine,
                  unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<T> results(n_chunks, init);
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < threads; w++) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n_chunks; i += threads) results[i] = chunk(i);
    }));
  }
  for (auto& f : workers) f.get();
  T acc = init;
  for (std::size_t i = 0; i < n_chunks; i++) acc = combine(acc, results[i]);
  return acc;
}

// splitmix64: deterministic per-chunk seed derivation
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace fgc
