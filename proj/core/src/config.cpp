#include "sclab/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sclab/report.hpp"

namespace sclab {

FlowConvention ScenarioConfig::flow_convention() const {
  if (flow_lambda_convention == "liouville") return FlowConvention::liouville;
  if (flow_lambda_convention == "theorem3") return FlowConvention::theorem3;
  throw std::invalid_argument("config: flow_lambda_convention must be liouville|theorem3");
}

void ScenarioConfig::validate() const {
  if (d != 1 && d != 2) throw std::invalid_argument("config: d must be 1 or 2");
  if (!(L > 0) || N < 8) throw std::invalid_argument("config: bad grid");
  if (hbar_list.empty() || eps_list.empty() || t_list.empty())
    throw std::invalid_argument("config: hbar/eps/t lists must be nonempty");
  for (double h : hbar_list)
    if (!(h > 0 && h <= 1)) throw std::invalid_argument("config: hbar in (0,1]");
  for (double e : eps_list)
    if (!(e >= 0 && e <= 1)) throw std::invalid_argument("config: eps in [0,1]");
  if (!(dt > 0)) throw std::invalid_argument("config: dt > 0");
  if (lambda < 0 || lambda > 1 || mu < 0 || mu > 1)
    throw std::invalid_argument("config: lambda, mu in [0,1]");
  if (V.regularity() != Regularity::C11)
    throw std::invalid_argument("config: V must be C11-tagged");
  if (state != "coherent" && state != "squeezed")
    throw std::invalid_argument("config: state must be coherent|squeezed");
  if (ot_samples < 1 || ot_samples > 400)
    throw std::invalid_argument("config: ot_samples in [1,400] (exact OT cap)");
  if (!(alpha > 0 && alpha <= 0.5))
    throw std::invalid_argument("config: alpha in (0, 0.5]");
  flow_convention();
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig c;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto notsp = [](unsigned char ch) { return !std::isspace(ch); };
    line.erase(line.begin(), std::find_if(line.begin(), line.end(), notsp));
    line.erase(std::find_if(line.rbegin(), line.rend(), notsp).base(), line.end());
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value in '" + line + "'");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    key.erase(std::find_if(key.rbegin(), key.rend(), notsp).base(), key.end());
    val.erase(val.begin(), std::find_if(val.begin(), val.end(), notsp));

    if (key == "scenario") c.scenario = val;
    else if (key == "d") c.d = std::stoi(val);
    else if (key == "L") c.L = std::stod(val);
    else if (key == "N") c.N = std::stoi(val);
    else if (key == "hbar") c.hbar_list = split_doubles(val);
    else if (key == "eps") c.eps_list = split_doubles(val);
    else if (key == "T") c.t_list = split_doubles(val);
    else if (key == "dt") c.dt = std::stod(val);
    else if (key == "lambda") c.lambda = std::stod(val);
    else if (key == "mu") c.mu = std::stod(val);
    else if (key == "V") c.V = parse_potential(val);
    else if (key == "U") c.U = parse_potential(val);
    else if (key == "state") c.state = val;
    else if (key == "q0") c.q0 = std::stod(val);
    else if (key == "p0") c.p0 = std::stod(val);
    else if (key == "squeeze_s") c.squeeze_s = std::stod(val);
    else if (key == "dictionary") c.dictionary = val;
    else if (key == "ot_samples") c.ot_samples = std::stoi(val);
    else if (key == "seed") c.seed = std::stoull(val);
    else if (key == "ot_reg") c.ot_reg = std::stod(val);
    else if (key == "ot_max_iters") c.ot_max_iters = std::stol(val);
    else if (key == "flow_lambda_convention") c.flow_lambda_convention = val;
    else if (key == "alpha") c.alpha = std::stod(val);
    else if (key == "out_dir") c.out_dir = val;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("config: cannot open " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "scenario = " << c.scenario << '\n';
  os << "d = " << c.d << '\n';
  os << "L = " << fmt_double(c.L) << '\n';
  os << "N = " << c.N << '\n';
  os << "hbar = " << join_doubles(c.hbar_list) << '\n';
  os << "eps = " << join_doubles(c.eps_list) << '\n';
  os << "T = " << join_doubles(c.t_list) << '\n';
  os << "dt = " << fmt_double(c.dt) << '\n';
  os << "lambda = " << fmt_double(c.lambda) << '\n';
  os << "mu = " << fmt_double(c.mu) << '\n';
  os << "V = " << format_potential(c.V) << '\n';
  os << "U = " << format_potential(c.U) << '\n';
  os << "state = " << c.state << '\n';
  os << "q0 = " << fmt_double(c.q0) << '\n';
  os << "p0 = " << fmt_double(c.p0) << '\n';
  os << "squeeze_s = " << fmt_double(c.squeeze_s) << '\n';
  os << "dictionary = " << c.dictionary << '\n';
  os << "ot_samples = " << c.ot_samples << '\n';
  os << "seed = " << c.seed << '\n';
  os << "ot_reg = " << fmt_double(c.ot_reg) << '\n';
  os << "ot_max_iters = " << c.ot_max_iters << '\n';
  os << "flow_lambda_convention = " << c.flow_lambda_convention << '\n';
  os << "alpha = " << fmt_double(c.alpha) << '\n';
  os << "out_dir = " << c.out_dir << '\n';
  return os.str();
}

}  // namespace sclab
