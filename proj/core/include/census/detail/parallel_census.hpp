#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace census {

template <typename Fn>
CensusTable parallel_census(const CensusTable& empty, std::uint64_t count, unsigned threads,
                            Fn fn) {
  threads = std::max(1U, threads);
  if (count < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(count, 1));
  std::vector<CensusTable> parts(threads, empty);
  std::vector<std::exception_ptr> errors(threads);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = count * w / threads;
    const std::uint64_t end = count * (w + 1) / threads;
    try {
      fn(begin, end, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CensusTable result = empty;
  for (const auto& part : parts) result.merge(part);
  return result;
}

}  // namespace census
