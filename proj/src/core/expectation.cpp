#include "core/expectation.hpp"

#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/limits.hpp"
#include "core/orientation.hpp"

#include <algorithm>
#include <thread>

namespace aoforge {

int ParkingFunction::area() const {
  int total = 0;
  for (int x : values) total += x;
  return total;
}

int ParkingFunction::support_size() const {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [](int x) { return x != 0; }));
}

bool is_parking_function(const std::vector<int>& a) {
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] > static_cast<int>(i)) return false;
  }
  return true;
}

namespace {

void sorted_prefixes(int n, std::vector<int>& prefix, std::vector<ParkingFunction>& out) {
  auto i = static_cast<int>(prefix.size());
  if (i == n) {
    std::vector<int> values = prefix;
    do {
      out.push_back(ParkingFunction{values});
    } while (std::next_permutation(values.begin(), values.end()));
    return;
  }
  int low = prefix.empty() ? 0 : prefix.back();
  for (int x = low; x <= i; ++x) {
    prefix.push_back(x);
    sorted_prefixes(n, prefix, out);
    prefix.pop_back();
  }
}

void check_probability(const Rational& p) {
  if (p <= 0 || p >= 1) throw InvalidArgument("p must lie strictly between 0 and 1, got " + to_string(p));
}

void check_order(int n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
}

Rational power(const Rational& base, long exponent) {
  Rational out = 1;
  Rational b = exponent < 0 ? Rational(1 / base) : base;
  for (long i = 0; i < std::abs(exponent); ++i) out *= b;
  return out;
}

}  // namespace

std::vector<ParkingFunction> enumerate_parking_functions(int n) {
  check_order(n);
  require_size("enumerate_parking_functions", n, 7);
  std::vector<ParkingFunction> out;
  std::vector<int> prefix;
  sorted_prefixes(n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Rational expected_ao_formula(int n, const Rational& p) {
  check_probability(p);
  Rational q = 1 - p;
  Rational sum = 0;
  for (const ParkingFunction& a : enumerate_parking_functions(n)) {
    sum += power(q, -a.area()) * power(p, a.support_size());
  }
  return power(q, static_cast<long>(n) * (n - 1) / 2) * sum;
}

Rational expected_ao_bruteforce(int n, const Rational& p, int jobs) {
  check_order(n);
  check_probability(p);
  require_size("expected_ao_bruteforce", n, 5);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t graphs = std::uint64_t{1} << pairs.size();
  const auto pair_count = static_cast<long>(pairs.size());
  Rational q = 1 - p;
  std::vector<Rational> p_pow, q_pow;
  for (long i = 0; i <= pair_count; ++i) {
    p_pow.push_back(power(p, i));
    q_pow.push_back(power(q, i));
  }
  auto worker_count = static_cast<std::uint64_t>(std::clamp(jobs, 1, 64));
  worker_count = std::min(worker_count, graphs);
  std::vector<Rational> partial(worker_count, Rational(0));
  auto run = [&](std::uint64_t w) {
    for (std::uint64_t mask = w; mask < graphs; mask += worker_count) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
      }
      SimpleGraph g(n, edges);
      auto m = static_cast<long>(edges.size());
      partial[w] += p_pow[static_cast<std::size_t>(m)] * q_pow[static_cast<std::size_t>(pair_count - m)] *
                    Rational(count_acyclic_orientations(g));
    }
  };
  if (worker_count == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < worker_count; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  Rational total = 0;
  for (const Rational& x : partial) total += x;
  return total;
}

}  // namespace aoforge
