#include "haarmoments/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace haarmoments {

namespace {

// Write-once memo: concurrent fills of the same key store identical values.
class CharacterMemo {
 public:
  using Key = std::pair<Partition, Partition>;

  const BigInteger* find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
  }

  void store(Key key, const BigInteger& value) {
    std::unique_lock lock(mutex_);
    values_.try_emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, BigInteger> values_;  // node-based: pointers stay valid
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

std::vector<int> beta_numbers(const Partition& shape) {
  const int len = shape.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape.part(i) + len - 1 - i;
  return beta;
}

Partition from_beta_numbers(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

BigInteger murnaghan_nakayama(const Partition& shape, const Partition& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;

  CharacterMemo::Key key{shape, cycles};
  if (const BigInteger* hit = memo().find(key)) return *hit;

  const int strip = cycles.part(0);
  const Partition rest(std::vector<int>(cycles.parts().begin() + 1, cycles.parts().end()));

  std::vector<int> beta = beta_numbers(shape);
  BigInteger total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - strip;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    // The strip's height is the number of beads jumped over.
    const auto height = std::count_if(beta.begin(), beta.end(),
                                      [&](int b) { return b > to && b < from; });
    beta[i] = to;
    BigInteger term = murnaghan_nakayama(from_beta_numbers(beta), rest);
    beta[i] = from;
    if (height % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  memo().store(std::move(key), total);
  return total;
}

}  // namespace

BigInteger character(const Partition& shape, const Partition& cycle_type) {
  if (shape.weight() != cycle_type.weight()) {
    throw std::invalid_argument("character: shape " + shape.to_string() + " and cycle type " +
                                cycle_type.to_string() + " have different weights");
  }
  return murnaghan_nakayama(shape, cycle_type);
}

CharacterTable::CharacterTable(int n) : n_(n), partitions_(partitions_of(n)) {
  values_.reserve(partitions_.size() * partitions_.size());
  for (const Partition& shape : partitions_) {
    for (const Partition& mu : partitions_) values_.push_back(character(shape, mu));
  }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  // Reverse lexicographic order, so search with the reversed comparator.
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p, std::greater<>());
  if (it == partitions_.end() || *it != p) {
    throw std::invalid_argument("partition " + p.to_string() + " is not a partition of " +
                                std::to_string(n_));
  }
  return static_cast<std::size_t>(it - partitions_.begin());
}

const BigInteger& CharacterTable::at(const Partition& shape, const Partition& cycle_type) const {
  return at(index_of(shape), index_of(cycle_type));
}

std::shared_ptr<const CharacterTable> character_table(int n) {
  if (n < 0) throw std::invalid_argument("character_table: n must be nonnegative");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const CharacterTable>(n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(table)).first->second;
}

}  // namespace haarmoments
