#include "admm_topo/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace admm_topo {

namespace {

std::string kind_name(TaEigKind kind) {
  switch (kind) {
    case TaEigKind::FixedPoint: return "fixed_point";
    case TaEigKind::Pair: return "pair";
    case TaEigKind::EvenCycle: return "even_cycle";
  }
  return "pair";
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["n_vertices"] = g.n_vertices;
  j["n_edges"] = g.n_edges();
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  j["degrees"] = g.degrees;
  return j;
}

Json to_json(const TopologyClass& topo) {
  Json j;
  j["has_even_cycle"] = topo.even_cycle;
  j["conductance"] = topo.phi;
  j["low_conductance"] = topo.low_conductance;
  j["delta_ratio"] = topo.delta_ratio;
  return j;
}

Json to_json(const SpectralReport& report) {
  Json j;
  j["w_eigs"] = report.w_eigs;
  j["omega_star"] = report.omega_star;
  if (report.omega_bar_defined)
    j["omega_bar"] = report.omega_bar;
  else
    j["omega_bar"] = nullptr;
  j["spectral_gap"] = report.spectral_gap;
  j["lap_eigs"] = report.lap_eigs;
  j["ell_star"] = report.ell_star;
  j["ell_bar"] = report.ell_bar;
  j["norm_lap_eigs"] = report.norm_lap_eigs;
  return j;
}

Json to_json(const TaSpectrum& ta) {
  Json j;
  Json eigs = Json::array();
  for (const TaPrediction& p : ta.eigs)
    eigs.push_back(Json::array({p.value.real(), p.value.imag()}));
  j["ta_eigs"] = std::move(eigs);
  Json kinds = Json::array();
  for (const TaPrediction& p : ta.eigs) kinds.push_back(kind_name(p.kind));
  j["kinds"] = std::move(kinds);
  j["params"] = Json{{"rho", ta.rho}, {"gamma", ta.gamma}};
  j["circle_center"] = ta.circle_center;
  j["circle_radius"] = ta.circle_radius;
  j["excluded_minus_one"] = ta.excluded_minus_one;
  return j;
}

Json to_json(const TuningResult& tuning) {
  Json j;
  j["regime"] = to_string(tuning.regime);
  j["rho_star"] = tuning.rho_star;
  j["gamma_star"] = tuning.gamma_star;
  j["tau_star"] = tuning.tau_star;
  j["omega_star"] = tuning.omega_star;
  if (tuning.omega_bar)
    j["omega_bar"] = *tuning.omega_bar;
  else
    j["omega_bar"] = nullptr;
  j["is_upper_bound_only"] = tuning.is_upper_bound_only;
  return j;
}

Json to_json(const GdTuning& gd) {
  return Json{{"alpha_star", gd.alpha_star}, {"tau_g_star", gd.tau_g_star}};
}

Json to_json(const SpeedupCertificate& cert) {
  Json j;
  j["regime"] = to_string(cert.regime);
  j["tau_a_star"] = cert.tau_a_star;
  j["tau_g_star"] = cert.tau_g_star;
  j["delta"] = cert.delta;
  j["delta_ratio"] = cert.delta_ratio;
  j["lhs"] = cert.lhs;
  j["rhs_upper"] = cert.rhs_upper;
  j["ratio"] = cert.ratio;
  j["sandwich_holds"] = cert.sandwich_holds;
  j["conjecture_holds_numerically"] = cert.conjecture_holds_numerically;
  j["reported_C"] = cert.reported_C;
  j["upper_bound_only"] = cert.upper_bound_only;
  return j;
}

Json to_json(const std::vector<BoundCheck>& checks) {
  Json j = Json::array();
  for (const BoundCheck& c : checks)
    j.push_back(Json{{"name", c.name}, {"holds", c.holds}, {"slack", c.slack}});
  return j;
}

void dump_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << fmt("%.17e", m(r, c));
    }
    out << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const TrajectoryStats& stats,
                          const Json& config) {
  out << "# " << config.dump() << '\n';
  out << "t,residual,log_residual\n";
  for (std::size_t t = 0; t < stats.residual_history.size(); ++t) {
    double r = stats.residual_history[t];
    out << t << ',' << fmt("%.10g", r) << ','
        << fmt("%.10g", r > 0 ? std::log(r) : -std::numeric_limits<double>::infinity())
        << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const TaSpectrum& ta) {
  Json header;
  header["params"] = Json{{"rho", ta.rho}, {"gamma", ta.gamma}};
  header["circle_center"] = ta.circle_center;
  header["circle_radius"] = ta.circle_radius;
  header["excluded_minus_one"] = ta.excluded_minus_one;
  out << "# " << header.dump() << '\n';
  out << "re,im,kind,modulus\n";
  for (const TaPrediction& p : ta.eigs) {
    out << fmt("%.10g", p.value.real()) << ',' << fmt("%.10g", p.value.imag())
        << ',' << kind_name(p.kind) << ',' << fmt("%.10g", std::abs(p.value))
        << '\n';
  }
}

std::string spectrum_svg(const TaSpectrum& ta) {
  // fixed viewport mapping [-1.2, 1.2]^2 -> 480x480 pixels
  constexpr double kSpan = 1.2, kSize = 480.0;
  auto px = [](double x) { return fmt("%.2f", (x + kSpan) / (2 * kSpan) * kSize); };
  auto py = [](double y) { return fmt("%.2f", (kSpan - y) / (2 * kSpan) * kSize); };

  // the largest-modulus entry below the fixed point gets highlighted
  double best = -1.0;
  for (const TaPrediction& p : ta.eigs) {
    if (p.kind == TaEigKind::FixedPoint) continue;
    best = std::max(best, std::abs(p.value));
  }

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='480' height='480' "
         "viewBox='0 0 480 480'>\n";
  svg << "<rect width='480' height='480' fill='white'/>\n";
  svg << "<line x1='" << px(-kSpan) << "' y1='" << py(0) << "' x2='"
      << px(kSpan) << "' y2='" << py(0) << "' stroke='#999'/>\n";
  svg << "<line x1='" << px(0) << "' y1='" << py(-kSpan) << "' x2='" << px(0)
      << "' y2='" << py(kSpan) << "' stroke='#999'/>\n";
  if (ta.circle_radius > 0) {
    svg << "<circle cx='" << px(ta.circle_center) << "' cy='" << py(0)
        << "' r='" << fmt("%.2f", ta.circle_radius / (2 * kSpan) * kSize)
        << "' fill='none' stroke='#58f' stroke-dasharray='4 3'/>\n";
  }
  for (const TaPrediction& p : ta.eigs) {
    const char* color = "black";
    if (p.kind == TaEigKind::EvenCycle) {
      color = "green";
    } else if (p.kind != TaEigKind::FixedPoint &&
               std::abs(std::abs(p.value) - best) < 1e-12) {
      color = "red";
    }
    svg << "<circle cx='" << px(p.value.real()) << "' cy='"
        << py(p.value.imag()) << "' r='4' fill='" << color << "'/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace admm_topo
