#include "bandspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bandspec::reference {

namespace {

inline void rotate(std::vector<double>& a, std::size_t i, std::size_t j,
                   double s, double tau) {
  const double g = a[i];
  const double h = a[j];
  a[i] = g - s * (h + g * tau);
  a[j] = h + s * (g - h * tau);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          std::vector<double>* eigenvectors) {
  if (n <= 0) throw std::invalid_argument("reference eigensolver: empty matrix");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<double> v;
  if (eigenvectors) {
    v.assign(nn * nn, 0.0);
    for (std::size_t i = 0; i < nn; ++i) v[i * nn + i] = 1.0;
  }
  std::vector<double> b(nn), d(nn), z(nn, 0.0);
  for (std::size_t i = 0; i < nn; ++i) b[i] = d[i] = a[i * nn + i];

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t ip = 0; ip + 1 < nn; ++ip)
      for (std::size_t iq = ip + 1; iq < nn; ++iq) off += std::fabs(a[ip * nn + iq]);
    if (off == 0.0) {
      std::vector<std::size_t> order(nn);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&d](std::size_t x, std::size_t y) { return d[x] < d[y]; });
      std::vector<double> sorted(nn);
      for (std::size_t i = 0; i < nn; ++i) sorted[i] = d[order[i]];
      if (eigenvectors) {
        eigenvectors->assign(nn * nn, 0.0);
        for (std::size_t r = 0; r < nn; ++r)
          for (std::size_t c = 0; c < nn; ++c)
            (*eigenvectors)[r * nn + c] = v[r * nn + order[c]];
      }
      return sorted;
    }
    const double tresh = (sweep < 3) ? 0.2 * off / (nn * nn) : 0.0;
    for (std::size_t ip = 0; ip + 1 < nn; ++ip) {
      for (std::size_t iq = ip + 1; iq < nn; ++iq) {
        const double g = 100.0 * std::fabs(a[ip * nn + iq]);
        // Skip rotations that can no longer change the diagonal.
        if (sweep > 3 && std::fabs(d[ip]) + g == std::fabs(d[ip]) &&
            std::fabs(d[iq]) + g == std::fabs(d[iq])) {
          a[ip * nn + iq] = 0.0;
        } else if (std::fabs(a[ip * nn + iq]) > tresh) {
          double h = d[iq] - d[ip];
          double t;
          if (std::fabs(h) + g == std::fabs(h)) {
            t = a[ip * nn + iq] / h;
          } else {
            const double theta = 0.5 * h / a[ip * nn + iq];
            t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double tau = s / (1.0 + c);
          h = t * a[ip * nn + iq];
          z[ip] -= h;
          z[iq] += h;
          d[ip] -= h;
          d[iq] += h;
          a[ip * nn + iq] = 0.0;
          for (std::size_t j = 0; j < ip; ++j) rotate(a, j * nn + ip, j * nn + iq, s, tau);
          for (std::size_t j = ip + 1; j < iq; ++j) rotate(a, ip * nn + j, j * nn + iq, s, tau);
          for (std::size_t j = iq + 1; j < nn; ++j) rotate(a, ip * nn + j, iq * nn + j, s, tau);
          if (eigenvectors)
            for (std::size_t j = 0; j < nn; ++j) rotate(v, j * nn + ip, j * nn + iq, s, tau);
        }
      }
    }
    for (std::size_t i = 0; i < nn; ++i) {
      b[i] += z[i];
      d[i] = b[i];
      z[i] = 0.0;
    }
  }
  throw std::runtime_error("reference eigensolver: Jacobi sweeps did not converge");
}

}  // namespace bandspec::reference
