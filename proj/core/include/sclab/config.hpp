#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sclab/classical.hpp"
#include "sclab/potential.hpp"

namespace sclab {

/// Flat key=value scenario description; lists are comma-separated, potentials
/// use the `kind(param=value,...)` grammar. Serialization round-trips
/// bit-exactly (shortest round-trip decimals).
struct ScenarioConfig {
  std::string scenario = "reference";
  int d = 1;
  double L = 10.0;
  int N = 512;
  std::vector<double> hbar_list = {0.05, 0.1, 0.2};
  std::vector<double> eps_list = {1e-3, 1e-2, 1e-1};
  std::vector<double> t_list = {0.5, 1.0, 2.0};
  double dt = 1e-3;
  double lambda = 1.0;
  double mu = 0.0;
  PotentialSpec V;                        // default zero
  PotentialSpec U;                        // default zero
  std::string state = "coherent";        // coherent | squeezed
  double q0 = 1.0;
  double p0 = 0.0;
  double squeeze_s = 0.4;
  std::string dictionary = "standard";
  int ot_samples = 400;
  std::uint64_t seed = 20240801;
  double ot_reg = 1e-3;
  long ot_max_iters = 200000;
  std::string flow_lambda_convention = "liouville";  // or theorem3
  double alpha = 0.5;
  std::string out_dir = "out";

  FlowConvention flow_convention() const;
  void validate() const;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);
std::string serialize_config(const ScenarioConfig& c);

}  // namespace sclab
