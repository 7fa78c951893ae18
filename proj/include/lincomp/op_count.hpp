#pragma once

#include <cstdint>

namespace lincomp {

/// Tally of field operations in GF(p^m), the unit of every cost bound.
struct OpCounts {
  std::uint64_t additions = 0;
  std::uint64_t subtractions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t inversions = 0;

  std::uint64_t total() const noexcept {
    return additions + subtractions + multiplications + inversions;
  }

  OpCounts& operator+=(const OpCounts& other) noexcept {
    additions += other.additions;
    subtractions += other.subtractions;
    multiplications += other.multiplications;
    inversions += other.inversions;
    return *this;
  }

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

namespace detail {

// Innermost OpScope of the calling thread, or null when nothing is counting.
inline thread_local OpCounts* active_counts = nullptr;

inline void count_add() noexcept {
  if (active_counts) ++active_counts->additions;
}
inline void count_sub() noexcept {
  if (active_counts) ++active_counts->subtractions;
}
inline void count_mul() noexcept {
  if (active_counts) ++active_counts->multiplications;
}
inline void count_inv() noexcept {
  if (active_counts) ++active_counts->inversions;
}

}  // namespace detail

/// RAII accumulator for field operations performed on the current thread.
///
/// Scopes nest: while a scope is alive it receives every counted operation,
/// and on destruction its tally is added into the enclosing scope. A phase
/// breakdown is therefore obtained by opening one scope per phase inside an
/// outer scope for the total. Counters are per thread; work spread over
/// several threads is merged by summing the scopes' tallies.
class OpScope {
 public:
  OpScope() noexcept : parent_(detail::active_counts) { detail::active_counts = &counts_; }
  ~OpScope() {
    detail::active_counts = parent_;
    if (parent_) *parent_ += counts_;
  }

  OpScope(const OpScope&) = delete;
  OpScope& operator=(const OpScope&) = delete;

  const OpCounts& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return counts_.total(); }

 private:
  OpCounts counts_;
  OpCounts* parent_;
};

}  // namespace lincomp
