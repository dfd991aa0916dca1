#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "opg/bfs.hpp"

namespace opg {

// Growth regimes the diagnostic fit distinguishes. All fits regress the log
// volume; the models differ only in the regressors:
//   poly:           log V ~ c0 * log j + c1
//   quadratic_log:  log V ~ c0 * (log j)^2 + c1 * log j + c2
//   exponential:    log V ~ c0 * j + c1
// Natural logarithms throughout. Diagnostic only: callers decide what the
// coefficients mean.
enum class growth_model { poly, quadratic_log, exponential };

inline const char* growth_model_name(growth_model m) {
  switch (m) {
    case growth_model::poly: return "poly";
    case growth_model::quadratic_log: return "quadratic_log";
    case growth_model::exponential: return "exponential";
  }
  return "?";
}

struct insufficient_data : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct fit_result {
  growth_model model{};
  std::vector<double> coeffs;  // leading coefficient first, as listed above
  double rms_residual = 0.0;
};

namespace detail {

// Solve the k x k system a * x = b in place, partial pivoting. k <= 3.
template <std::size_t K>
inline std::array<double, K> solve_normal(std::array<std::array<double, K>, K> a,
                                          std::array<double, K> b) {
  for (std::size_t col = 0; col < K; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < K; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    if (a[col][col] == 0.0)
      throw std::runtime_error("fit_growth: singular normal equations");
    for (std::size_t r = col + 1; r < K; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < K; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::array<double, K> x{};
  for (std::size_t r = K; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < K; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

template <std::size_t K>
inline fit_result least_squares(growth_model model,
                                const std::vector<std::array<double, K>>& rows,
                                const std::vector<double>& ys) {
  std::array<std::array<double, K>, K> ata{};
  std::array<double, K> aty{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t r = 0; r < K; ++r) {
      aty[r] += rows[i][r] * ys[i];
      for (std::size_t c = 0; c < K; ++c) ata[r][c] += rows[i][r] * rows[i][c];
    }
  }
  const auto x = solve_normal<K>(ata, aty);
  double sse = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double pred = 0.0;
    for (std::size_t r = 0; r < K; ++r) pred += x[r] * rows[i][r];
    const double e = ys[i] - pred;
    sse += e * e;
  }
  fit_result res;
  res.model = model;
  res.coeffs.assign(x.begin(), x.end());
  res.rms_residual = std::sqrt(sse / double(rows.size()));
  return res;
}

}  // namespace detail

// Least-squares fit of the curve's log volumes against the chosen model,
// using the points with radius >= 3. Requires at least 8 such points.
inline fit_result fit_growth(const growth_curve& curve, growth_model model) {
  const int r = curve.radius();
  const int npts = r >= 3 ? r - 2 : 0;
  if (npts < 8)
    throw insufficient_data(
        "fit_growth: needs at least 8 curve points with radius >= 3, have " +
        std::to_string(npts));
  std::vector<double> ys;
  ys.reserve(std::size_t(npts));
  for (int j = 3; j <= r; ++j)
    ys.push_back(std::log(double(curve.volumes[std::size_t(j)])));
  if (model == growth_model::quadratic_log) {
    std::vector<std::array<double, 3>> rows;
    rows.reserve(ys.size());
    for (int j = 3; j <= r; ++j) {
      const double lj = std::log(double(j));
      rows.push_back({lj * lj, lj, 1.0});
    }
    return detail::least_squares<3>(model, rows, ys);
  }
  std::vector<std::array<double, 2>> rows;
  rows.reserve(ys.size());
  for (int j = 3; j <= r; ++j) {
    const double x = model == growth_model::poly ? std::log(double(j)) : double(j);
    rows.push_back({x, 1.0});
  }
  return detail::least_squares<2>(model, rows, ys);
}

}  // namespace opg
