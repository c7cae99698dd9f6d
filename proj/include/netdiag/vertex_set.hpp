#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace netdiag {

/// Dense bit-indexed set over a fixed vertex universe 0..universe-1.
/// All set algebra is word-parallel, so intersection/union/difference cost
/// O(universe/64) regardless of how many vertices are members.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : universe_(check_universe(universe)) {
    words_.assign(word_count(universe_), 0);
  }

  static VertexSet of(int universe, std::initializer_list<int> ids) {
    VertexSet s(universe);
    for (int v : ids) s.set(v);
    return s;
  }

  static VertexSet from_ids(int universe, const std::vector<int>& ids) {
    VertexSet s(universe);
    for (int v : ids) s.set(v);
    return s;
  }

  /// Low 'universe' bits of a word, for universes up to 64.
  static VertexSet from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask: universe exceeds 64");
    VertexSet s(universe);
    if (universe > 0) s.words_[0] = mask & low_mask(universe);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int v) const {
    check_range(v);
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void set(int v) {
    check_range(v);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    check_range(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator^=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const = default;

  /// Smallest member, -1 when empty.
  int first() const { return next(-1); }

  /// Smallest member strictly greater than v, -1 when none.
  int next(int v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[wi] >> (start & 63);
    if (w != 0) return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi) {
      if (words_[wi] != 0) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
    }
    return -1;
  }

  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  /// Word 0, meaningful when universe <= 64.
  std::uint64_t mask64() const {
    if (universe_ > 64) throw std::logic_error("mask64: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  /// Order on the ascending member sequences: shorter prefixes first, so
  /// {} < {0} < {0,1} < {0,2} < {1}. Returns <0, 0, >0.
  static int lex_compare(const VertexSet& a, const VertexSet& b) {
    a.check_same(b);
    int x = a.first();
    int y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y ? -1 : 1;
      x = a.next(x);
      y = b.next(y);
    }
    if (x == y) return 0;
    return x < 0 ? -1 : 1;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first_id = true;
    for (int v = first(); v >= 0; v = next(v)) {
      if (!first_id) out += ",";
      out += std::to_string(v);
      first_id = false;
    }
    out += "}";
    return out;
  }

 private:
  static int check_universe(int universe) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    return universe;
  }

  static std::size_t word_count(int universe) {
    return (static_cast<std::size_t>(universe) + 63) / 64;
  }

  static std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  }

  void check_range(int v) const {
    if (v < 0 || v >= universe_) throw std::invalid_argument("VertexSet: vertex id out of range");
  }

  void check_same(const VertexSet& o) const {
    if (universe_ != o.universe_) throw std::invalid_argument("VertexSet: universe mismatch");
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace netdiag
