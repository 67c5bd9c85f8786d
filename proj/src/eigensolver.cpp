#include "bandspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bandspec {

namespace {
// Row loops shorter than this are not worth spawning threads for.
constexpr int kParallelCutoff = 64;
}  // namespace

void householder_tridiagonalize(std::vector<double>& a, int n,
                                std::vector<double>& d, std::vector<double>& e) {
  const auto stride = static_cast<std::size_t>(n);
  d.assign(stride, 0.0);
  e.assign(stride, 0.0);
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double* ui = &a[static_cast<std::size_t>(i) * stride];
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::fabs(ui[k]);
      if (scale == 0.0) {
        e[static_cast<std::size_t>(i)] = ui[l];
        continue;
      }
      double h = 0.0;
      for (int k = 0; k <= l; ++k) {
        ui[k] /= scale;
        h += ui[k] * ui[k];
      }
      const double f = ui[l];
      const double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
      e[static_cast<std::size_t>(i)] = scale * g;
      h -= f * g;
      ui[l] = f - g;
      // p = A u / h, stored in the scratch prefix of e. Each row's sum is a
      // fixed serial expression, so threading does not change the result.
#pragma omp parallel for schedule(static) if (l >= kParallelCutoff)
      for (int j = 0; j <= l; ++j) {
        const double* aj = &a[static_cast<std::size_t>(j) * stride];
        double acc = 0.0;
        for (int k = 0; k <= j; ++k) acc += aj[k] * ui[k];
        for (int k = j + 1; k <= l; ++k) acc += a[static_cast<std::size_t>(k) * stride + static_cast<std::size_t>(j)] * ui[k];
        e[static_cast<std::size_t>(j)] = acc / h;
      }
      double pu = 0.0;
      for (int j = 0; j <= l; ++j) pu += e[static_cast<std::size_t>(j)] * ui[j];
      const double hh = pu / (h + h);
      // q = p - (u'p / 2h) u
      for (int j = 0; j <= l; ++j) e[static_cast<std::size_t>(j)] -= hh * ui[j];
      // A <- A - q u' - u q', lower triangle only.
#pragma omp parallel for schedule(static) if (l >= kParallelCutoff)
      for (int j = 0; j <= l; ++j) {
        const double fj = ui[j];
        const double gj = e[static_cast<std::size_t>(j)];
        double* aj = &a[static_cast<std::size_t>(j) * stride];
        for (int k = 0; k <= j; ++k) aj[k] -= fj * e[static_cast<std::size_t>(k)] + gj * ui[k];
      }
    } else {
      e[static_cast<std::size_t>(i)] = ui[l];
    }
  }
  e[0] = 0.0;
  for (int i = 0; i < n; ++i)
    d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(i)];
}

void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e, int n) {
  if (n <= 1) return;
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  e[static_cast<std::size_t>(n - 1)] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  // Deflation needs an absolute floor besides the relative test: clusters of
  // numerically-zero eigenvalues drive both neighbouring diagonal entries to
  // rounding dust, and eps * dd alone then never triggers. Dropping a
  // subdiagonal below eps * ||T|| (Gershgorin row-sum norm) is backward
  // stable.
  double anorm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::fabs(d[static_cast<std::size_t>(i)]) + std::fabs(e[static_cast<std::size_t>(i)]);
    if (i > 0) row += std::fabs(e[static_cast<std::size_t>(i - 1)]);
    anorm = std::max(anorm, row);
  }
  const double floor_tol = eps * anorm;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = 0;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[static_cast<std::size_t>(m)]) + std::fabs(d[static_cast<std::size_t>(m + 1)]);
        const double em = std::fabs(e[static_cast<std::size_t>(m)]);
        if (em <= eps * dd || em <= floor_tol) break;
      }
      if (m != l) {
        if (iter++ == 30)
          throw std::runtime_error("tridiagonal_eigenvalues: QL iteration did not converge");
        double g = (d[static_cast<std::size_t>(l + 1)] - d[static_cast<std::size_t>(l)]) / (2.0 * e[static_cast<std::size_t>(l)]);
        double r = std::hypot(g, 1.0);
        g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
            e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[static_cast<std::size_t>(i)];
          const double b = c * e[static_cast<std::size_t>(i)];
          r = std::hypot(f, g);
          e[static_cast<std::size_t>(i + 1)] = r;
          if (r == 0.0) {
            d[static_cast<std::size_t>(i + 1)] -= p;
            e[static_cast<std::size_t>(m)] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[static_cast<std::size_t>(i + 1)] - p;
          r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
          p = s * r;
          d[static_cast<std::size_t>(i + 1)] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[static_cast<std::size_t>(l)] -= p;
        e[static_cast<std::size_t>(l)] = g;
        e[static_cast<std::size_t>(m)] = 0.0;
      }
    } while (m != l);
  }
}

std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n) {
  if (n <= 0) throw std::invalid_argument("symmetric_eigenvalues: empty matrix");
  std::vector<double> d;
  std::vector<double> e;
  householder_tridiagonalize(matrix, n, d, e);
  tridiagonal_eigenvalues(d, e, n);
  std::sort(d.begin(), d.end());
  return d;
}

EigenSpectrum eigenvalues(const FiniteGraph& g, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("eigenvalues: tol must be positive");
  const int n = g.vertex_count();
  const std::vector<double> all = symmetric_eigenvalues(g.adjacency_matrix(), n);
  EigenSpectrum spectrum;
  spectrum.dimension = n;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i + 1;
    double sum = all[i];
    while (j < all.size() && all[j] - all[j - 1] <= tol) {
      sum += all[j];
      ++j;
    }
    spectrum.values.push_back(sum / static_cast<double>(j - i));
    spectrum.multiplicities.push_back(static_cast<int>(j - i));
    i = j;
  }
  return spectrum;
}

double spectral_radius(const FiniteGraph& g) {
  const EigenSpectrum s = eigenvalues(g);
  return std::max(std::fabs(s.values.front()), std::fabs(s.values.back()));
}

}  // namespace bandspec
