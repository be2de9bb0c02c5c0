#include "haarmoments/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace haarmoments {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing: " + join(parts_));
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const { return join(parts_); }

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a composition needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const { return join(parts_); }

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  images_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) +
                                  "}: " + join(images));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    images_.push_back(v - 1);
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation degree");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(ZeroBased{}, std::move(v));
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(ZeroBased{}, std::move(inv));
}

Permutation operator*(const Permutation& outer, const Permutation& inner) {
  if (outer.degree() != inner.degree()) {
    throw std::invalid_argument("cannot compose permutations of different degree");
  }
  std::vector<int> out(inner.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = outer.images_[static_cast<std::size_t>(inner.images_[i])];
  }
  return Permutation(Permutation::ZeroBased{}, std::move(out));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void partitions_rec(int remaining, int cap, int slots, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    // p * slots must still be able to absorb what is left
    if (static_cast<long long>(p) * slots < remaining) break;
    prefix.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

void compositions_rec(int remaining, std::size_t index, std::vector<int>& parts,
                      std::vector<Composition>& out) {
  if (index + 1 == parts.size()) {
    parts[index] = remaining;
    out.emplace_back(parts);
    return;
  }
  for (int p = remaining; p >= 0; --p) {
    parts[index] = p;
    compositions_rec(remaining - p, index + 1, parts, out);
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_length) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  if (max_length && *max_length < 0) {
    throw std::invalid_argument("partitions_of: max_length must be nonnegative");
  }
  const int slots = max_length ? *max_length : n;
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, slots, prefix, out);
  return out;
}

std::vector<Composition> weak_compositions(int n, int k) {
  if (n < 0) throw std::invalid_argument("weak_compositions: n must be nonnegative");
  if (k < 1) throw std::invalid_argument("weak_compositions: k must be positive");
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  compositions_rec(n, 0, parts, out);
  return out;
}

std::vector<Box> hooks_and_contents(const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::vector<Box> boxes;
  boxes.reserve(static_cast<std::size_t>(shape.weight()));
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) {
      const int arm = shape.part(i) - j - 1;
      const int leg = conj.part(j) - i - 1;
      boxes.push_back(Box{i + 1, j + 1, arm + leg + 1, j - i});
    }
  }
  return boxes;
}

Partition cycle_type(const Permutation& sigma) {
  const auto& img = sigma.images_;
  std::vector<bool> visited(img.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (visited[start]) continue;
    int len = 0;
    for (std::size_t x = start; !visited[x]; x = static_cast<std::size_t>(img[x])) {
      visited[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

BigInteger conjugacy_class_size(const Partition& mu) {
  std::map<int, int> multiplicity;
  for (int p : mu.parts()) ++multiplicity[p];
  BigInteger z = 1;
  for (auto [value, count] : multiplicity) {
    BigInteger power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(value),
                  static_cast<unsigned long>(count));
    z *= power * factorial(count);
  }
  return exact_quotient(factorial(mu.weight()), z);
}

BigInteger multinomial(const Composition& alpha) {
  BigInteger denom = 1;
  for (int a : alpha.parts()) denom *= factorial(a);
  return exact_quotient(factorial(alpha.weight()), denom);
}

// ---------------------------------------------------------------------------
// Young subgroups

YoungSubgroup::YoungSubgroup(Composition alpha) : alpha_(std::move(alpha)) {
  int offset = 0;
  for (int a : alpha_.parts()) {
    block_starts_.push_back(offset);
    offset += a;
  }
  block_starts_.push_back(offset);
}

BigInteger YoungSubgroup::order() const {
  BigInteger r = 1;
  for (int a : alpha_.parts()) r *= factorial(a);
  return r;
}

YoungSubgroup::iterator::iterator(const YoungSubgroup* group, bool done)
    : group_(group), current_(Permutation::identity(group->alpha_.weight())), done_(done) {}

YoungSubgroup::iterator& YoungSubgroup::iterator::operator++() {
  auto& img = current_.images_;
  const auto& starts = group_->block_starts_;
  // Odometer over blocks: advance the last block; on wrap-around (which
  // restores it to sorted order) carry into the previous block.
  for (std::size_t b = starts.size() - 1; b-- > 0;) {
    auto first = img.begin() + starts[b];
    auto last = img.begin() + starts[b + 1];
    if (std::next_permutation(first, last)) return *this;
  }
  done_ = true;
  return *this;
}

YoungSubgroup young_subgroup_elements(const Composition& alpha) { return YoungSubgroup(alpha); }

}  // namespace haarmoments
