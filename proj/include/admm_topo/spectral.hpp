#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "admm_topo/factor.hpp"
#include "admm_topo/graph.hpp"

namespace admm_topo {

struct JacobiResult {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns, same order
  int sweeps = 0;
};

// Cyclic Jacobi rotations on a dense symmetric matrix; stops when the
// off-diagonal Frobenius norm drops below 1e-12 * ||m|| or after 100
// sweeps (NoConvergence). Input must be symmetric to 1e-12 (NotSymmetric).
JacobiResult jacobi_eigs(const Eigen::MatrixXd& m);

// Convenience wrapper returning ascending eigenvalues only.
std::vector<double> symmetric_eigs(const Eigen::MatrixXd& m);

// Spectra of the three vertex-space operators: random-walk transition
// matrix W = D^-1 A, graph Laplacian L = D - A, and normalized Laplacian.
// W is diagonalized through the symmetric similarity D^1/2 W D^-1/2 =
// I - normalized Laplacian.
struct SpectralReport {
  std::vector<double> w_eigs;         // ascending, in [-1, 1]
  double omega_star = 0.0;            // second largest eigenvalue of W
  double omega_bar = 0.0;             // smallest eigenvalue of W above -1
  bool omega_bar_defined = false;     // false when spec(W) = {-1, 1} only
  double spectral_gap = 0.0;          // 1 - omega_star
  std::vector<double> lap_eigs;       // ascending, first is 0
  std::vector<double> norm_lap_eigs;  // ascending, in [0, 2]
  double ell_star = 0.0;              // smallest nonzero Laplacian eigenvalue
  double ell_bar = 0.0;               // largest Laplacian eigenvalue
};

SpectralReport walk_spectrum(const Graph& g);

enum class TaEigKind {
  FixedPoint,   // the always-present eigenvalue 1
  Pair,         // image of an interior W eigenvalue (conjugate or real pair)
  EvenCycle,    // 1 - gamma, emitted when the caller's flag says the graph
                // supports it (see has_zero_sum_edge_vector)
};

struct TaPrediction {
  std::complex<double> value;
  TaEigKind kind;
  double source_w = 0.0;  // the W eigenvalue that produced a Pair entry
};

// Closed-form image of the W spectrum under the update-matrix map, plus the
// reflection eigenvalue 1 - gamma when the even_cycle flag is set (callers
// pass has_zero_sum_edge_vector). W eigenvalues at -1 are outside the
// formula's domain; they are counted, not mapped.
struct TaSpectrum {
  std::vector<TaPrediction> eigs;
  double rho = 0.0, gamma = 0.0;
  double circle_center = 0.0;  // 1 - gamma/2
  double circle_radius = 0.0;  // (gamma/2) sqrt((2-rho)/(2+rho)), 0 for rho >= 2
  int excluded_minus_one = 0;  // multiplicity of W eigenvalue -1, not mapped
  int interior_count = 0;      // W eigenvalues in (-1, 1), with multiplicity
};

TaSpectrum predict_ta_spectrum(const SpectralReport& report, double rho,
                               double gamma, bool even_cycle);

// Smallest-singular-value estimate of (TA - lambda I) by inverse power
// iteration on the shifted normal operator, with a complex partial-pivot LU
// doing the solves. An (effectively) singular factorization means lambda is
// an eigenvalue to working precision and reports 0.
double verify_eigenvalue(const FactorOperators& ops,
                         std::complex<double> lambda);

struct SecondLargest {
  double modulus = 0.0;
  std::complex<double> eigenvalue;  // achieving value; +imag representative
};

// Maximum modulus over the predicted spectrum after removing one copy of
// the fixed-point eigenvalue 1.
SecondLargest second_largest_ta(const SpectralReport& report, double rho,
                                double gamma, bool even_cycle);

}  // namespace admm_topo
