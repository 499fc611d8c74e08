#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bookemb {

using EdgeId = std::size_t;

/// Set of edge indices of one graph, stored as a bitmask over 0..universe-1.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t universe);
  EdgeSubset(std::size_t universe, std::initializer_list<EdgeId> ids);

  static EdgeSubset full(std::size_t universe);
  static EdgeSubset from_mask(std::size_t universe, std::uint64_t mask);
  static EdgeSubset from_ids(std::size_t universe, const std::vector<EdgeId>& ids);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;

  bool contains(EdgeId e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U) != 0;
  }
  void insert(EdgeId e);
  void erase(EdgeId e);

  /// Smallest member, or universe() when empty.
  EdgeId first() const;
  /// Smallest member greater than e, or universe() when none.
  EdgeId next(EdgeId e) const;

  std::vector<EdgeId> ids() const;
  /// Requires universe() <= 64.
  std::uint64_t to_mask() const;

  bool is_subset_of(const EdgeSubset& other) const;
  bool intersects(const EdgeSubset& other) const;

  EdgeSubset& operator|=(const EdgeSubset& other);
  EdgeSubset& operator&=(const EdgeSubset& other);
  EdgeSubset& operator-=(const EdgeSubset& other);

  friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
  friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }
  friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset& b) { return a -= b; }
  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

  std::string to_string() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_universe(const EdgeSubset& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bookemb
