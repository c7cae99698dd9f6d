#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace netdiag {

/// Saturating binomial coefficient; values that would overflow collapse to
/// UINT64_MAX so count comparisons against guardrails stay safe.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (r > kMax / factor) return kMax;
    r = r * factor / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// sum_{i<=max_size} C(n, i), saturating.
inline std::uint64_t subset_count(int n, int max_size) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (int i = 0; i <= max_size && i <= n; ++i) {
    std::uint64_t c = binomial(n, i);
    if (total > kMax - c) return kMax;
    total += c;
  }
  return total;
}

/// The rank-th s-combination of {0..m-1} in lexicographic order.
inline void unrank_combination(std::uint64_t rank, int m, int s, std::vector<int>& out) {
  out.clear();
  int prev = -1;
  for (int pos = 0; pos < s; ++pos) {
    for (int candidate = prev + 1;; ++candidate) {
      if (candidate >= m) throw std::invalid_argument("unrank_combination: rank out of range");
      std::uint64_t block = binomial(m - 1 - candidate, s - 1 - pos);
      if (rank < block) {
        out.push_back(candidate);
        prev = candidate;
        break;
      }
      rank -= block;
    }
  }
  if (s == 0 && rank != 0) throw std::invalid_argument("unrank_combination: rank out of range");
}

/// Enumerates the subsets of {0..n-1} with at most max_size elements as
/// ascending id sequences in lexicographic sequence order, starting from the
/// empty set: {} < {0} < {0,1} < {0,2} < {1} < ...
///
/// This ordering makes "first hit" searches return the lexicographically
/// least witness.
class SubsetLexEnumerator {
 public:
  SubsetLexEnumerator(int n, int max_size)
      : n_(n), max_size_(max_size < 0 ? 0 : (max_size > n ? n : max_size)) {
    if (n < 0) throw std::invalid_argument("SubsetLexEnumerator: negative universe");
  }

  const std::vector<int>& ids() const { return ids_; }

  /// Bitmask of the current subset; universes above 64 are rejected.
  std::uint64_t mask() const {
    if (n_ > 64) throw std::logic_error("SubsetLexEnumerator: mask needs n <= 64");
    return mask_;
  }

  /// Advances to the successor; false once the sequence is exhausted.
  bool advance() {
    if (static_cast<int>(ids_.size()) < max_size_ && (ids_.empty() ? n_ > 0 : ids_.back() + 1 < n_)) {
      int v = ids_.empty() ? 0 : ids_.back() + 1;
      ids_.push_back(v);
      set_mask_bit(v);
      return true;
    }
    while (!ids_.empty()) {
      int last = ids_.back();
      ids_.pop_back();
      clear_mask_bit(last);
      if (last + 1 < n_) {
        ids_.push_back(last + 1);
        set_mask_bit(last + 1);
        return true;
      }
    }
    return false;
  }

 private:
  void set_mask_bit(int v) {
    if (v < 64) mask_ |= std::uint64_t{1} << v;
  }
  void clear_mask_bit(int v) {
    if (v < 64) mask_ &= ~(std::uint64_t{1} << v);
  }

  int n_;
  int max_size_;
  std::vector<int> ids_;
  std::uint64_t mask_ = 0;
};

}  // namespace netdiag
