#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "admm_topo/analysis.hpp"
#include "admm_topo/graph.hpp"
#include "admm_topo/iterate.hpp"
#include "admm_topo/spectral.hpp"
#include "admm_topo/tuning.hpp"

namespace admm_topo {

// ordered_json keeps field order stable so identical inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const TopologyClass& topo);
Json to_json(const SpectralReport& report);
Json to_json(const TaSpectrum& ta);  // ta_eigs as [re, im] pairs
Json to_json(const TuningResult& tuning);
Json to_json(const GdTuning& gd);
Json to_json(const SpeedupCertificate& cert);
Json to_json(const std::vector<BoundCheck>& checks);

// Row-major, full-precision scientific notation; one matrix row per line.
void dump_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);

// "t,residual,log_residual" preceded by a '#'-prefixed JSON line echoing
// the run configuration.
void write_trajectory_csv(std::ostream& out, const TrajectoryStats& stats,
                          const Json& config);

// Eigenvalue scatter: "re,im,kind,modulus" plus circle parameters in a
// '#'-prefixed JSON line.
void write_spectrum_csv(std::ostream& out, const TaSpectrum& ta);

// Minimal standalone scatter plot: axes, the predicted-eigenvalue circle,
// one dot per eigenvalue; the largest-below-one pair is red and the
// even-cycle eigenvalue green.
std::string spectrum_svg(const TaSpectrum& ta);

}  // namespace admm_topo
