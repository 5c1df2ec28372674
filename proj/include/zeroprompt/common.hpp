// Copyright (c) 2026 zeroprompt contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace zp {

/// Base class for all library errors. Subclasses map onto process exit
/// codes at the CLI boundary (config=2, data=3, numeric=4).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct DataError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

inline constexpr const char* kVersion = "0.1.0";

/// Runs fn(begin, end, slot) over [0, n) split into contiguous chunks,
/// one per worker slot. Slot assignment is a pure function of (n, workers),
/// so results reduced in slot order are deterministic for a fixed worker
/// count. workers <= 1 runs inline.
inline void parallel_chunks(std::size_t n, int workers,
                            const std::function<void(std::size_t, std::size_t, int)>& fn) {
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    fn(0, n, 0);
    return;
  }
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  const std::size_t chunk = (n + w - 1) / w;
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t s = 0; s < w; ++s) {
    const std::size_t begin = s * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end, s] { fn(begin, end, static_cast<int>(s)); });
  }
  for (auto& t : threads) t.join();
}

inline int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(hw == 0 ? 1 : std::min(hw, 4u));
}

}  // namespace zp
