#pragma once

#include "core/rational.hpp"

#include <vector>

namespace aoforge {

// Vector a in N^n whose sorted entries satisfy a_(i) <= i-1.
struct ParkingFunction {
  std::vector<int> values;

  int area() const;
  // Number of nonzero entries.
  int support_size() const;

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;
};

bool is_parking_function(const std::vector<int>& a);

// All parking functions of [n] in lexicographic order (n <= 7).
std::vector<ParkingFunction> enumerate_parking_functions(int n);

// q^C(n,2) * sum over parking functions of (1/q)^Area(a) p^|supp(a)|, q = 1 - p.
Rational expected_ao_formula(int n, const Rational& p);

// Sum over all labelled graphs on [n] of p^|E| q^(C(n,2)-|E|) times the number of
// acyclic orientations (n <= 5). The graph range is split across `jobs` threads.
Rational expected_ao_bruteforce(int n, const Rational& p, int jobs = 1);

}  // namespace aoforge
