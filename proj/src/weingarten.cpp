#include "haarmoments/weingarten.hpp"

#include <mutex>
#include <stdexcept>

#include "haarmoments/characters.hpp"
#include "haarmoments/tableaux.hpp"

namespace haarmoments {

namespace {

void check_arguments(int d, int n) {
  if (d < 1) throw std::invalid_argument("weingarten: d must be positive");
  if (n < 1) throw std::invalid_argument("weingarten: n must be positive");
}

}  // namespace

WeingartenTable::WeingartenTable(int d, int n) : d_(d), n_(n) {
  check_arguments(d, n);
  const auto chars = character_table(n);
  const auto& shapes = chars->partitions();

  // Per-shape weight (f^lambda)^2 / s_lambda(1^d); shapes longer than d are cut.
  std::vector<BigRational> weights(shapes.size(), 0);
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    if (shapes[s].length() > d) continue;
    const BigInteger f = standard_tableaux_count(shapes[s]);
    weights[s] = BigRational(f * f, schur_at_ones(shapes[s], d));
    weights[s].canonicalize();
  }

  const BigInteger nf = factorial(n);
  const BigInteger norm = nf * nf;
  for (std::size_t c = 0; c < shapes.size(); ++c) {
    BigRational sum = 0;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      if (weights[s] == 0) continue;
      sum += weights[s] * chars->at(s, c);  // mpq arithmetic keeps lowest terms
    }
    sum /= norm;
    values_.emplace(shapes[c], sum);
  }
}

const BigRational& WeingartenTable::at(const Partition& cycle_type) const {
  auto it = values_.find(cycle_type);
  if (it == values_.end()) {
    throw std::invalid_argument("Weingarten table for n=" + std::to_string(n_) +
                                " has no entry for " + cycle_type.to_string());
  }
  return it->second;
}

std::shared_ptr<const WeingartenTable> weingarten_table(int d, int n) {
  check_arguments(d, n);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const WeingartenTable>> cache;
  const std::pair key{d, n};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const WeingartenTable>(d, n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(table)).first->second;
}

BigRational weingarten(int d, int n, const Partition& cycle_type) {
  check_arguments(d, n);
  if (cycle_type.weight() != n) {
    throw std::invalid_argument("weingarten: " + cycle_type.to_string() +
                                " is not a partition of " + std::to_string(n));
  }
  return weingarten_table(d, n)->at(cycle_type);
}

const BigRational& weingarten_of_permutation(const WeingartenTable& table,
                                             const Permutation& sigma) {
  if (sigma.degree() != table.degree()) {
    throw std::invalid_argument("weingarten_of_permutation: permutation of degree " +
                                std::to_string(sigma.degree()) + " against a table for n=" +
                                std::to_string(table.degree()));
  }
  return table.at(cycle_type(sigma));
}

}  // namespace haarmoments
