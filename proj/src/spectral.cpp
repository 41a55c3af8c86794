#include "admm_topo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "admm_topo/errors.hpp"
#include "admm_topo/rng.hpp"

namespace admm_topo {

JacobiResult jacobi_eigs(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw NotSymmetric("matrix is not square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw NotSymmetric("matrix is not symmetric to 1e-12");

  Eigen::MatrixXd a = m;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double norm = std::max(m.norm(), 1e-300);
  const double target = 1e-12 * norm;
  constexpr int kMaxSweeps = 100;

  auto off_norm = [&a, n]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  while (off_norm() > target) {
    if (sweep++ >= kMaxSweeps)
      throw NoConvergence("Jacobi did not converge in 100 sweeps");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        // rotation angle from the stable tangent formula
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        // a <- J^T a J on rows/columns p, q
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  // sort ascending, carrying eigenvector columns along
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i) < a(j, j); });
  JacobiResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    result.eigenvalues(i) = a(order[i], order[i]);
    result.eigenvectors.col(i) = v.col(order[i]);
  }
  result.sweeps = sweep;
  return result;
}

std::vector<double> symmetric_eigs(const Eigen::MatrixXd& m) {
  JacobiResult r = jacobi_eigs(m);
  return {r.eigenvalues.data(), r.eigenvalues.data() + r.eigenvalues.size()};
}

SpectralReport walk_spectrum(const Graph& g) {
  const int n = g.n_vertices;
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (auto [i, j] : g.edges) adj(i, j) = adj(j, i) = 1.0;

  Eigen::VectorXd deg(n);
  for (int v = 0; v < n; ++v) deg(v) = static_cast<double>(g.degrees[v]);
  Eigen::VectorXd inv_sqrt_deg = deg.cwiseSqrt().cwiseInverse();

  // normalized Laplacian I - D^-1/2 A D^-1/2 (symmetric)
  Eigen::MatrixXd norm_lap =
      Eigen::MatrixXd::Identity(n, n) -
      inv_sqrt_deg.asDiagonal() * adj * inv_sqrt_deg.asDiagonal();
  Eigen::MatrixXd lap = Eigen::MatrixXd(deg.asDiagonal()) - adj;

  SpectralReport report;
  report.norm_lap_eigs = symmetric_eigs(norm_lap);
  report.lap_eigs = symmetric_eigs(lap);

  // W shares its spectrum with I - normalized Laplacian
  report.w_eigs.reserve(n);
  for (auto it = report.norm_lap_eigs.rbegin(); it != report.norm_lap_eigs.rend();
       ++it)
    report.w_eigs.push_back(1.0 - *it);

  report.omega_star = report.w_eigs[n - 2];
  report.spectral_gap = 1.0 - report.omega_star;
  // smallest eigenvalue above -1, excluding the simple one at 1 so that a
  // two-point spectrum {-1, 1} leaves it undefined
  constexpr double kBoundary = 1e-9;
  for (double w : report.w_eigs) {
    if (w > -1.0 + kBoundary && w < 1.0 - kBoundary) {
      report.omega_bar = w;
      report.omega_bar_defined = true;
      break;
    }
  }

  report.ell_bar = report.lap_eigs[n - 1];
  report.ell_star = report.lap_eigs[1];
  return report;
}

TaSpectrum predict_ta_spectrum(const SpectralReport& report, double rho,
                               double gamma, bool even_cycle) {
  if (!(rho > 0.0))
    throw ParameterOutOfRange("rho must be > 0, got " + std::to_string(rho));
  if (!(gamma > 0.0 && gamma < 2.0))
    throw ParameterOutOfRange("gamma must be in (0, 2), got " +
                              std::to_string(gamma));

  TaSpectrum ta;
  ta.rho = rho;
  ta.gamma = gamma;
  ta.circle_center = 1.0 - gamma / 2.0;
  ta.circle_radius =
      rho < 2.0 ? (gamma / 2.0) * std::sqrt((2.0 - rho) / (2.0 + rho)) : 0.0;

  constexpr double kBoundary = 1e-9;
  const double base = 1.0 - gamma / 2.0;
  const double scale = gamma / (2.0 + rho);
  ta.eigs.push_back({{1.0, 0.0}, TaEigKind::FixedPoint, 1.0});
  for (double w : report.w_eigs) {
    if (w >= 1.0 - kBoundary) continue;  // the simple eigenvalue at 1
    if (w <= -1.0 + kBoundary) {
      ++ta.excluded_minus_one;
      continue;
    }
    ++ta.interior_count;
    double disc = 1.0 - rho * rho / 4.0 - w * w;
    if (disc >= 0.0) {
      double im = scale * std::sqrt(disc);
      ta.eigs.push_back({{base + scale * w, im}, TaEigKind::Pair, w});
      ta.eigs.push_back({{base + scale * w, -im}, TaEigKind::Pair, w});
    } else {
      double shift = scale * std::sqrt(-disc);
      ta.eigs.push_back({{base + scale * w + shift, 0.0}, TaEigKind::Pair, w});
      ta.eigs.push_back({{base + scale * w - shift, 0.0}, TaEigKind::Pair, w});
    }
  }
  if (even_cycle)
    ta.eigs.push_back({{1.0 - gamma, 0.0}, TaEigKind::EvenCycle, -1.0});
  return ta;
}

double verify_eigenvalue(const FactorOperators& ops,
                         std::complex<double> lambda) {
  const int dim = ops.fg.edge_space_dim();
  Eigen::MatrixXcd shifted = ops.TA.cast<std::complex<double>>();
  shifted.diagonal().array() -= lambda;

  // One factorization P M = L U serves both solves per sweep:
  //   M w = b   is lu.solve(b)
  //   M^H y = b unrolls to U^H s = b, L^H t = s, y = P^-1 t.
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
  const Eigen::MatrixXcd& lu_mat = lu.matrixLU();

  // deterministic start vector
  Rng rng(0x5eedcafe);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i)
    v(i) = std::complex<double>(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  v /= v.norm();

  // power iteration on (M^H M)^-1 = M^-1 M^-H; for unit v the growth ||w||
  // converges to 1/sigma_min^2
  double sigma = 0.0;
  for (int it = 0; it < 60; ++it) {
    Eigen::VectorXcd s =
        lu_mat.triangularView<Eigen::Upper>().adjoint().solve(v);
    Eigen::VectorXcd t =
        lu_mat.triangularView<Eigen::UnitLower>().adjoint().solve(s);
    Eigen::VectorXcd y = lu.permutationP().inverse() * t;
    Eigen::VectorXcd w = lu.solve(y);
    double growth = w.norm();
    if (!std::isfinite(growth) || growth <= 0.0) return 0.0;
    sigma = 1.0 / std::sqrt(growth);
    if (sigma < 1e-15) return sigma;
    v = w / growth;
  }
  return sigma;
}

SecondLargest second_largest_ta(const SpectralReport& report, double rho,
                                double gamma, bool even_cycle) {
  TaSpectrum ta = predict_ta_spectrum(report, rho, gamma, even_cycle);
  SecondLargest best;
  bool skipped_fixed_point = false;
  for (const TaPrediction& p : ta.eigs) {
    if (!skipped_fixed_point && p.kind == TaEigKind::FixedPoint) {
      skipped_fixed_point = true;
      continue;
    }
    double mod = std::abs(p.value);
    bool better = mod > best.modulus + 1e-15 ||
                  (std::abs(mod - best.modulus) <= 1e-15 &&
                   p.value.imag() > best.eigenvalue.imag());
    if (better) {
      best.modulus = mod;
      best.eigenvalue = p.value;
    }
  }
  return best;
}

}  // namespace admm_topo
