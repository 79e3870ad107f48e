#pragma once

#include <complex>
#include <vector>

#include "pr/errors.hpp"

namespace pr {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;
using RVec = std::vector<double>;

// n1 x n2 complex image stored as a single column vector in lexicographic
// order: entry (j,k) lives at index j + k*n1 (0-based), so the column index
// varies slowest. Every grid-shaped quantity in the library uses this one
// convention.
struct GridSignal {
  int height = 0;  // n1 (rows)
  int width = 0;   // n2 (columns)
  CVec data;

  GridSignal() = default;
  GridSignal(int n1, int n2)
      : height(n1), width(n2), data(static_cast<size_t>(n1) * n2) {}
  GridSignal(int n1, int n2, CVec d);

  int size() const { return height * width; }
  Complex& at(int j, int k) { return data[j + static_cast<size_t>(k) * height]; }
  const Complex& at(int j, int k) const {
    return data[j + static_cast<size_t>(k) * height];
  }
  bool same_shape(const GridSignal& o) const {
    return height == o.height && width == o.width;
  }
};

// Stacked discrete gradient of an n1 x n2 grid: the first n entries hold the
// x-differences (along rows), the last n the y-differences (along columns).
struct GradientField {
  int height = 0;
  int width = 0;
  CVec data;  // length 2*n1*n2

  GradientField() = default;
  GradientField(int n1, int n2)
      : height(n1), width(n2), data(2 * static_cast<size_t>(n1) * n2) {}
  GradientField(int n1, int n2, CVec d);

  int grid_size() const { return height * width; }
  Complex& dx(int j, int k) { return data[j + static_cast<size_t>(k) * height]; }
  Complex& dy(int j, int k) {
    return data[grid_size() + j + static_cast<size_t>(k) * height];
  }
  const Complex& dx(int j, int k) const {
    return data[j + static_cast<size_t>(k) * height];
  }
  const Complex& dy(int j, int k) const {
    return data[grid_size() + j + static_cast<size_t>(k) * height];
  }
};

// sum_j a_j * conj(b_j)
Complex inner_product(const CVec& a, const CVec& b);

// ||a||_S^2 = sum_j S_j |a_j|^2 for a nonnegative diagonal S.
double weighted_sq_norm(const CVec& a, const RVec& s_diag);

double sq_norm(const CVec& a);
double norm(const CVec& a);

double sq_norm(const RVec& a);
double norm(const RVec& a);

}  // namespace pr
