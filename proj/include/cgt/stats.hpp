#pragma once

#include <atomic>
#include <cstdint>

namespace cgt {

// Process-wide work counters surfaced by the bench command.  Relaxed atomics:
// the totals are informational only.
struct Stats {
  std::atomic<std::uint64_t> bsgs_builds{0};
  std::atomic<std::uint64_t> sifts{0};
  std::atomic<std::uint64_t> backtrack_nodes{0};

  void reset() {
    bsgs_builds = 0;
    sifts = 0;
    backtrack_nodes = 0;
  }
};

inline Stats& stats() {
  static Stats s;
  return s;
}

}  // namespace cgt
