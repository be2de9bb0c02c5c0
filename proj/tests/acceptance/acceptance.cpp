// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "character_oracle.hpp"
#include "haarmoments/characters.hpp"
#include "haarmoments/combinatorics.hpp"
#include "haarmoments/haar_mc.hpp"
#include "haarmoments/moments.hpp"
#include "haarmoments/tableaux.hpp"
#include "haarmoments/weingarten.hpp"
#include "quadrature.hpp"

using namespace haarmoments;

namespace {

constexpr double kSigmas = 5.0;
constexpr int kWorkers = 4;

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Failure {
 public:
  void fail(const std::string& what) {
    if (outcome_.passed) outcome_.detail = what;
    outcome_.passed = false;
  }
  Outcome& outcome() { return outcome_; }

 private:
  Outcome outcome_;
};

std::string rat(const BigRational& q) { return to_string(q); }

// 1. Three exact routes agree.
Outcome three_routes() {
  Failure f;
  const auto start = std::chrono::steady_clock::now();
  int points = 0;
  for (int d = 1; d <= 5; ++d) {
    for (int k = 1; k <= std::min(d, 4); ++k) {
      for (int n = 1; n <= 4; ++n) {
        const BigRational a = trace_truncation_moment(d, k, n);
        const BigRational b = trace_truncation_moment_via_subgroups(d, k, n);
        const BigRational c = expand_trace_power_and_integrate(d, k, n);
        ++points;
        if (a != b || a != c) {
          f.fail("d=" + std::to_string(d) + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                 ": " + rat(a) + " / " + rat(b) + " / " + rat(c));
        }
      }
    }
  }
  for (int d = 1; d <= 6; ++d) {
    for (int k = 1; k <= d; ++k) {
      for (int n = 1; n <= 5; ++n) {
        const BigRational a = trace_truncation_moment(d, k, n);
        const BigRational b = trace_truncation_moment_via_subgroups(d, k, n);
        ++points;
        if (a != b) {
          f.fail("d=" + std::to_string(d) + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                 ": " + rat(a) + " / " + rat(b));
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 120.0) f.fail("took " + std::to_string(seconds) + " s (limit 120 s)");
  if (f.outcome().passed) {
    f.outcome().detail = std::to_string(points) + " grid points exact, " +
                         std::to_string(seconds) + " s";
  }
  return f.outcome();
}

// 2. k = 1 closed form.
Outcome single_entry() {
  Failure f;
  for (int d = 1; d <= 10; ++d) {
    for (int n = 1; n <= 8; ++n) {
      const BigRational theorem = trace_truncation_moment(d, 1, n);
      const BigRational ratio(factorial(n), rising_factorial(d, n));
      BigRational canonical = ratio;
      canonical.canonicalize();
      const BigRational inverse_binomial(BigInteger(1), binomial(d + n - 1, n));
      if (theorem != canonical || canonical != inverse_binomial) {
        f.fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": " + rat(theorem));
      }
    }
  }
  if (f.outcome().passed) f.outcome().detail = "d <= 10, n <= 8 exact";
  return f.outcome();
}

// 3. k = d against bounded-LIS brute force.
Outcome rains() {
  Failure f;
  if (count_bounded_lis_permutations(3, 2) != 5) f.fail("n=3, d=2 count is not 5");
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= 7; ++d) {
      const BigRational theorem = trace_truncation_moment(d, d, n);
      const BigInteger lis = count_bounded_lis_permutations(n, d);
      if (theorem != BigRational(lis)) {
        f.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " + rat(theorem) +
               " vs " + to_string(lis));
      }
      if (d >= n && lis != factorial(n)) f.fail("d >= n but count != n!");
    }
  }
  if (f.outcome().passed) f.outcome().detail = "n <= 7, d <= 7 exact";
  return f.outcome();
}

// 4. Kostka numbers sum to s_lambda(1^k).
Outcome kostka() {
  Failure f;
  int checked = 0;
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& shape : partitions_of(n)) {
      for (int k = 1; k <= 5; ++k) {
        BigInteger sum = 0;
        for (const Composition& alpha : weak_compositions(n, k)) sum += kostka_number(shape, alpha);
        ++checked;
        if (sum != schur_at_ones(shape, k)) {
          f.fail(shape.to_string() + " k=" + std::to_string(k) + ": " + to_string(sum));
        }
      }
    }
  }
  if (f.outcome().passed) f.outcome().detail = std::to_string(checked) + " (lambda, k) pairs exact";
  return f.outcome();
}

// 5. Characters.
Outcome characters() {
  Failure f;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [key, value] : oracle::characters_from_class_sums(n)) {
      if (character(key.first, key.second) != value) {
        f.fail("class sums disagree at " + key.first.to_string() + ", " + key.second.to_string());
      }
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const auto table = character_table(n);
    const auto& parts = table->partitions();
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = 0; b < parts.size(); ++b) {
        BigInteger inner = 0;
        for (std::size_t c = 0; c < parts.size(); ++c) {
          inner += conjugacy_class_size(parts[c]) * table->at(a, c) * table->at(b, c);
        }
        if (inner != (a == b ? factorial(n) : BigInteger(0))) {
          f.fail("orthogonality fails at n=" + std::to_string(n));
        }
      }
    }
  }
  for (int n = 1; n <= 9; ++n) {
    const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const Partition& shape : partitions_of(n)) {
      if (character(shape, identity) != standard_tableaux_count(shape)) {
        f.fail("dimension of " + shape.to_string());
      }
    }
  }
  if (f.outcome().passed) {
    f.outcome().detail = "class sums n <= 5, orthogonality n <= 7, dimensions n <= 9";
  }
  return f.outcome();
}

// 6. Second-order Weingarten closed forms.
Outcome weingarten_closed_forms() {
  Failure f;
  for (int d = 2; d <= 10; ++d) {
    BigRational identity(1, d * d - 1);
    BigRational transposition(-1, d * (d * d - 1));
    identity.canonicalize();
    transposition.canonicalize();
    if (weingarten(d, 2, Partition({1, 1})) != identity) f.fail("Wg(id) at d=" + std::to_string(d));
    if (weingarten(d, 2, Partition({2})) != transposition) f.fail("Wg(swap) at d=" + std::to_string(d));
  }
  if (f.outcome().passed) f.outcome().detail = "2 <= d <= 10 exact";
  return f.outcome();
}

// 7. Monte Carlo agreement.
Outcome monte_carlo_grid() {
  Failure f;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int points = 0;
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= d; ++k) {
      for (int n = 1; n <= 2; ++n) {
        const double exact = trace_truncation_moment(d, k, n).get_d();
        const SamplingConfig config{200000, 7000u + static_cast<unsigned>(100 * d + 10 * k + n),
                                    kWorkers};
        const MomentEstimate est = estimate_trace_moment(d, k, n, config);
        ++points;
        if (est.standard_error > 0.0) worst = std::max(worst, std::abs(est.z_score(exact)));
        if (!est.agrees_with(exact, kSigmas)) {
          std::ostringstream s;
          s << "d=" << d << " k=" << k << " n=" << n << " exact=" << exact
            << " estimate=" << est.mean << " stderr=" << est.standard_error;
          f.fail(s.str());
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 180.0) f.fail("took " + std::to_string(seconds) + " s (limit 180 s)");
  if (f.outcome().passed) {
    std::ostringstream s;
    s << points << " points, max |z| = " << worst << ", " << seconds << " s";
    f.outcome().detail = s.str();
  }
  return f.outcome();
}

// 8. E|Sc_2(U)|^4 at d = 4.
Outcome magic_squares() {
  Failure f;
  const BigInteger h = magic_square_prediction(4, 2, 2);
  if (h != 3) f.fail("H_2(2) = " + to_string(h));
  const MomentEstimate est = estimate_secular_moment(4, 2, 2, SamplingConfig{1000000, 8080, kWorkers});
  std::ostringstream s;
  s << "estimate=" << est.mean << " stderr=" << est.standard_error
    << " z=" << est.z_score(h.get_d());
  if (!est.agrees_with(h.get_d(), kSigmas)) f.fail(s.str());
  if (f.outcome().passed) f.outcome().detail = s.str();
  return f.outcome();
}

// 9. Scaled entry moments approach the Gaussian values.
Outcome gaussian_limit() {
  Failure f;
  for (int n : {2, 3, 4}) {
    BigRational previous = 0;
    for (int d : {10, 100, 1000, 10000}) {
      const BigRational ratio = scaled_entry_moment_ratio(d, n);
      BigRational lower = BigRational(1) - BigRational(n * (n - 1), 2 * d);
      lower.canonicalize();
      if (!(lower <= ratio && ratio < 1)) {
        f.fail("bounds fail at n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
      if (!(ratio > previous)) f.fail("not increasing at n=" + std::to_string(n));
      previous = ratio;
    }
  }
  if (f.outcome().passed) f.outcome().detail = "n in {2,3,4}, d in {10,...,10^4} exact";
  return f.outcome();
}

// 10. k = 1 truncation law and density normalization.
Outcome entry_law() {
  Failure f;
  const KsResult ks = truncation_entry_law_check(5, SamplingConfig{100000, 1010, kWorkers});
  std::ostringstream s;
  s << "KS=" << ks.statistic << " threshold=" << ks.threshold;
  if (!ks.passes()) f.fail(s.str());
  double worst = 0.0;
  for (int d = 2; d <= 8; ++d) {
    const double total =
        oracle::integrate_unit_disc([d](double x, double y) { return entry_density(d, x * x + y * y); });
    worst = std::max(worst, std::abs(total - 1.0));
    if (std::abs(total - 1.0) > 1e-6) f.fail("normalization at d=" + std::to_string(d));
  }
  s << ", max |integral - 1| = " << worst;
  if (f.outcome().passed) f.outcome().detail = s.str();
  return f.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 three-route equality", three_routes},
      {"AC2 single-entry moments", single_entry},
      {"AC3 k = d bounded-LIS counts", rains},
      {"AC4 Kostka identity", kostka},
      {"AC5 character suite", characters},
      {"AC6 Weingarten closed forms", weingarten_closed_forms},
      {"AC7 Monte Carlo grid", monte_carlo_grid},
      {"AC8 secular coefficient magic squares", magic_squares},
      {"AC9 Gaussian limit ratios", gaussian_limit},
      {"AC10 entry law and density normalization", entry_law},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
    failures += o.passed ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
