#ifndef BANDSPEC_EIGENSOLVER_HPP
#define BANDSPEC_EIGENSOLVER_HPP

#include <vector>

#include "bandspec/graph.hpp"

namespace bandspec {

/// Distinct eigenvalues of a finite graph's adjacency matrix, ascending,
/// with multiplicities grouped by a chaining tolerance.
struct EigenSpectrum {
  std::vector<double> values;
  std::vector<int> multiplicities;
  int dimension = 0;
};

inline constexpr double kDefaultEigenTol = 1e-8;

/// All eigenvalues of a dense symmetric matrix (row-major n*n), ascending.
/// Householder reduction to tridiagonal form followed by implicitly shifted
/// QL iteration. The O(n^3) reduction kernels are OpenMP-parallel over rows;
/// every output element is produced by a fixed serial expression, so results
/// are identical for any thread count. Throws std::runtime_error if the QL
/// stage fails to converge within 30 iterations per eigenvalue (cannot
/// happen for symmetric input).
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n);

/// Eigenvalues of g's adjacency matrix grouped into distinct values:
/// sorted values chain into one group while consecutive gaps are <= tol
/// (single linkage); the reported value is the group mean.
EigenSpectrum eigenvalues(const FiniteGraph& g, double tol = kDefaultEigenTol);

/// max |lambda| over the spectrum.
double spectral_radius(const FiniteGraph& g);

namespace reference {

/// Serial cyclic Jacobi diagonalization, kept as an independent reference
/// for testing and benchmarking the production solver. Slow but simple.
/// If eigenvectors is non-null it receives the orthonormal eigenvector
/// matrix (column j pairs with eigenvalue j), row-major.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n,
                                          std::vector<double>* eigenvectors = nullptr);

}  // namespace reference

// Exposed for the benchmark and the serial/parallel equivalence tests:
// reduces `matrix` in place, leaving the tridiagonal diagonal in d and the
// subdiagonal in e (e[0] = 0).
void householder_tridiagonalize(std::vector<double>& matrix, int n,
                                std::vector<double>& d, std::vector<double>& e);

/// Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL;
/// destroys e, leaves the values in d in no particular order.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e, int n);

}  // namespace bandspec

#endif  // BANDSPEC_EIGENSOLVER_HPP
