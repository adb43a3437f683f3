#pragma once

// Small exact rational feasibility solver (phase-1 simplex, Bland's rule).
// Problem sizes here are tiny (tens of variables), so simplicity and exact
// arithmetic win over speed.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <optional>
#include <vector>

namespace chek {

using BigRat = boost::rational<boost::multiprecision::cpp_int>;

struct LinearConstraint {
  std::vector<BigRat> coeff;  // one per variable
  BigRat rhs;
  enum Kind { EQ, GE } kind = EQ;
};

// Finds x with x[i] >= lower[i] satisfying all constraints, or nullopt.
inline std::optional<std::vector<BigRat>> solve_feasible(
    int nvars, const std::vector<BigRat>& lower, const std::vector<LinearConstraint>& cons) {
  // shift to y = x - lower >= 0, add slack s >= 0 for GE rows, artificials for
  // phase 1; minimize sum of artificials.
  int m = static_cast<int>(cons.size());
  int nslack = 0;
  for (const auto& c : cons)
    if (c.kind == LinearConstraint::GE) ++nslack;
  int cols = nvars + nslack + m;  // y, slacks, artificials
  std::vector<std::vector<BigRat>> a(m, std::vector<BigRat>(cols, BigRat(0)));
  std::vector<BigRat> b(m, BigRat(0));
  int si = 0;
  for (int i = 0; i < m; ++i) {
    BigRat rhs = cons[i].rhs;
    for (int j = 0; j < nvars; ++j) {
      a[i][j] = cons[i].coeff[j];
      rhs -= cons[i].coeff[j] * lower[j];
    }
    if (cons[i].kind == LinearConstraint::GE) a[i][nvars + si++] = BigRat(-1);
    b[i] = rhs;
    if (b[i] < BigRat(0)) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
    a[i][nvars + nslack + i] = BigRat(1);
  }
  // phase-1 objective: minimize sum of artificial columns
  std::vector<BigRat> obj(cols, BigRat(0));
  for (int i = 0; i < m; ++i) obj[nvars + nslack + i] = BigRat(1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = nvars + nslack + i;

  std::vector<BigRat> z(cols, BigRat(0));
  auto recompute_z = [&]() {
    for (int j = 0; j < cols; ++j) {
      BigRat t(0);
      for (int i = 0; i < m; ++i) t += obj[basis[i]] * a[i][j];
      z[j] = t - obj[j];
    }
  };
  recompute_z();
  for (int iter = 0; iter < 20000; ++iter) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (z[j] > BigRat(0)) {  // Bland: first improving column
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    BigRat best(0);
    for (int i = 0; i < m; ++i) {
      if (a[i][enter] <= BigRat(0)) continue;
      BigRat ratio = b[i] / a[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return std::nullopt;  // unbounded phase 1: cannot happen
    // pivot
    BigRat piv = a[leave][enter];
    for (auto& v : a[leave]) v /= piv;
    b[leave] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || a[i][enter] == BigRat(0)) continue;
      BigRat f = a[i][enter];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[leave][j];
      b[i] -= f * b[leave];
    }
    basis[leave] = enter;
    recompute_z();
  }
  // feasible iff all artificials are zero
  BigRat total(0);
  for (int i = 0; i < m; ++i)
    if (basis[i] >= nvars + nslack) total += b[i];
  if (total != BigRat(0)) return std::nullopt;

  std::vector<BigRat> x(nvars);
  for (int j = 0; j < nvars; ++j) x[j] = lower[j];
  for (int i = 0; i < m; ++i)
    if (basis[i] < nvars) x[basis[i]] = lower[basis[i]] + b[i];
  return x;
}

}  // namespace chek
