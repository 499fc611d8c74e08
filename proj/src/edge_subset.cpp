#include "bookemb/edge_subset.hpp"

#include <sstream>

#include "bookemb/errors.hpp"

namespace bookemb {

EdgeSubset::EdgeSubset(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

EdgeSubset::EdgeSubset(std::size_t universe, std::initializer_list<EdgeId> ids)
    : EdgeSubset(universe) {
  for (EdgeId e : ids) insert(e);
}

EdgeSubset EdgeSubset::full(std::size_t universe) {
  EdgeSubset s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

EdgeSubset EdgeSubset::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe < 64 && (mask >> universe) != 0) {
    throw InputError("edge mask has bits outside the universe of " + std::to_string(universe));
  }
  EdgeSubset s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

EdgeSubset EdgeSubset::from_ids(std::size_t universe, const std::vector<EdgeId>& ids) {
  EdgeSubset s(universe);
  for (EdgeId e : ids) s.insert(e);
  return s;
}

std::size_t EdgeSubset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool EdgeSubset::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void EdgeSubset::insert(EdgeId e) {
  if (e >= universe_) {
    throw InputError("edge index " + std::to_string(e) + " outside universe of " +
                     std::to_string(universe_));
  }
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void EdgeSubset::erase(EdgeId e) {
  if (e < universe_) words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

EdgeId EdgeSubset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return universe_;
}

EdgeId EdgeSubset::next(EdgeId e) const {
  std::size_t start = e + 1;
  if (start >= universe_) return universe_;
  std::size_t w = start >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return universe_;
    bits = words_[w];
  }
}

std::vector<EdgeId> EdgeSubset::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count());
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

std::uint64_t EdgeSubset::to_mask() const {
  if (universe_ > 64) throw InputError("edge subset too wide for a 64-bit mask");
  return words_.empty() ? 0 : words_[0];
}

bool EdgeSubset::is_subset_of(const EdgeSubset& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool EdgeSubset::intersects(const EdgeSubset& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

EdgeSubset& EdgeSubset::operator|=(const EdgeSubset& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

EdgeSubset& EdgeSubset::operator&=(const EdgeSubset& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

EdgeSubset& EdgeSubset::operator-=(const EdgeSubset& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::string EdgeSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_item = true;
  for_each([&](EdgeId e) {
    if (!first_item) os << ',';
    os << e;
    first_item = false;
  });
  os << '}';
  return os.str();
}

void EdgeSubset::check_same_universe(const EdgeSubset& other) const {
  if (universe_ != other.universe_) {
    throw InputError("edge subsets over different universes (" + std::to_string(universe_) +
                     " vs " + std::to_string(other.universe_) + ")");
  }
}

}  // namespace bookemb
