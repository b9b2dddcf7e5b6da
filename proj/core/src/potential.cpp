#include "sclab/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace sclab {

namespace {

constexpr double kKinkTol = 1e-9;

double dist_to_even(double x) {
  // distance from x to the nearest even integer
  double r = std::remainder(x, 2.0);  // in [-1, 1]
  return std::abs(r);
}

}  // namespace

double evaluate(const PotentialSpec& p, std::span<const double> x) {
  using K = PotentialSpec::Kind;
  switch (p.kind) {
    case K::zero:
      return 0.0;
    case K::cos: {
      double v = 0.0;
      for (double xi : x) v += std::cos(p.omega * xi);
      return p.a * v;
    }
    case K::gauss: {
      double r2 = 0.0;
      for (double xi : x) r2 += xi * xi;
      return -p.a * std::exp(-r2 / (2.0 * p.s * p.s));
    }
    case K::harmonic: {
      double r2 = 0.0;
      for (double xi : x) r2 += xi * xi;
      return 0.5 * p.k * r2;
    }
    case K::abs_sin: {
      double v = 0.0;
      for (double xi : x) v += std::abs(std::sin(p.omega * xi));
      return p.a * v;
    }
    case K::sawtooth: {
      double v = 0.0;
      for (double xi : x) v += dist_to_even(xi);
      return p.a * v;
    }
  }
  return 0.0;
}

GradientValue gradient(const PotentialSpec& p, std::span<const double> x) {
  using K = PotentialSpec::Kind;
  GradientValue out;
  out.g.assign(x.size(), 0.0);
  switch (p.kind) {
    case K::zero:
      break;
    case K::cos:
      for (std::size_t i = 0; i < x.size(); ++i)
        out.g[i] = -p.a * p.omega * std::sin(p.omega * x[i]);
      break;
    case K::gauss: {
      double r2 = 0.0;
      for (double xi : x) r2 += xi * xi;
      const double e = std::exp(-r2 / (2.0 * p.s * p.s));
      for (std::size_t i = 0; i < x.size(); ++i)
        out.g[i] = p.a * x[i] / (p.s * p.s) * e;
      break;
    }
    case K::harmonic:
      for (std::size_t i = 0; i < x.size(); ++i) out.g[i] = p.k * x[i];
      break;
    case K::abs_sin:
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double sn = std::sin(p.omega * x[i]);
        if (std::abs(sn) < kKinkTol) {
          // left limit of a*|sin(omega x)|' is -a*omega at every kink
          out.at_kink = true;
          out.g[i] = -p.a * p.omega;
        } else {
          out.g[i] = p.a * p.omega * std::cos(p.omega * x[i]) * (sn > 0 ? 1.0 : -1.0);
        }
      }
      break;
    case K::sawtooth:
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = std::remainder(x[i], 2.0);
        if (std::abs(std::abs(r) - 1.0) < kKinkTol || std::abs(r) < kKinkTol) {
          out.at_kink = true;
          // left limit: rising (+a) into the peak at odd integers,
          // falling (-a) into the trough at even integers
          out.g[i] = (std::abs(r) < 0.5) ? -p.a : p.a;
        } else {
          out.g[i] = (r > 0 ? p.a : -p.a);
        }
      }
      break;
  }
  return out;
}

namespace {

NormEstimate sampled_sup(const PotentialSpec& p, const SpatialGrid& region,
                         bool of_gradient) {
  const int M = 10 * region.N;
  const double step = 2.0 * region.L / M;
  double best = 0.0;
  if (region.d == 1) {
    for (int i = 0; i <= M; ++i) {
      const double x = -region.L + i * step;
      if (of_gradient) {
        auto g = gradient(p, std::span<const double>(&x, 1));
        best = std::max(best, std::abs(g.g[0]));
      } else {
        best = std::max(best, std::abs(evaluate(p, std::span<const double>(&x, 1))));
      }
    }
  } else {
    for (int i = 0; i <= M; ++i)
      for (int j = 0; j <= M; ++j) {
        const double xy[2] = {-region.L + i * step, -region.L + j * step};
        if (of_gradient) {
          auto g = gradient(p, xy);
          best = std::max(best, std::hypot(g.g[0], g.g[1]));
        } else {
          best = std::max(best, std::abs(evaluate(p, xy)));
        }
      }
  }
  return {best, false};
}

}  // namespace

NormEstimate sup_norm(const PotentialSpec& p, const SpatialGrid& region) {
  using K = PotentialSpec::Kind;
  const double d = region.d;
  switch (p.kind) {
    case K::zero: return {0.0, true};
    case K::cos: return {p.a * d, true};
    case K::gauss: return {p.a, true};
    case K::abs_sin: return {p.a * d, true};
    case K::sawtooth: return {p.a * d, true};
    case K::harmonic: return {0.5 * p.k * d * region.L * region.L, true};
  }
  return sampled_sup(p, region, false);
}

NormEstimate sup_norm_gradient(const PotentialSpec& p, const SpatialGrid& region) {
  using K = PotentialSpec::Kind;
  const double rd = std::sqrt(double(region.d));
  switch (p.kind) {
    case K::zero: return {0.0, true};
    case K::cos: return {p.a * p.omega * rd, true};
    case K::gauss: return {p.a / p.s * std::exp(-0.5), true};
    case K::abs_sin: return {p.a * p.omega * rd, true};
    case K::sawtooth: return {p.a * rd, true};
    case K::harmonic: return {p.k * region.L * rd, true};
  }
  return sampled_sup(p, region, true);
}

NormEstimate lipschitz_gradient(const PotentialSpec& p, const SpatialGrid& region) {
  if (p.regularity() != Regularity::C11)
    throw std::invalid_argument(
        "lipschitz_gradient: potential gradient is only bounded a.e. (W1inf)");
  using K = PotentialSpec::Kind;
  switch (p.kind) {
    case K::zero: return {0.0, true};
    case K::cos: return {p.a * p.omega * p.omega, true};
    case K::gauss: return {p.a / (p.s * p.s), true};
    case K::harmonic: return {p.k, true};
    default: break;
  }
  // Fallback: sup over adjacent sample pairs of |grad V(x) - grad V(y)|/|x-y|.
  const int M = 10 * region.N;
  const double step = 2.0 * region.L / M;
  double best = 0.0;
  if (region.d == 1) {
    double prev = gradient(p, std::span<const double>(&region.axis[0], 1)).g[0];
    for (int i = 1; i <= M; ++i) {
      const double x = -region.L + i * step;
      const double g = gradient(p, std::span<const double>(&x, 1)).g[0];
      best = std::max(best, std::abs(g - prev) / step);
      prev = g;
    }
  } else {
    throw std::invalid_argument("lipschitz_gradient: sampled estimate is 1D-only");
  }
  return {best, false};
}

namespace {

const std::map<std::string, PotentialSpec::Kind>& kind_names() {
  static const std::map<std::string, PotentialSpec::Kind> m = {
      {"zero", PotentialSpec::Kind::zero},       {"cos", PotentialSpec::Kind::cos},
      {"gauss", PotentialSpec::Kind::gauss},     {"harmonic", PotentialSpec::Kind::harmonic},
      {"abs_sin", PotentialSpec::Kind::abs_sin}, {"sawtooth", PotentialSpec::Kind::sawtooth}};
  return m;
}

}  // namespace

PotentialSpec parse_potential(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("potential: empty spec");

  std::string name = t;
  std::string args;
  const auto lp = t.find('(');
  if (lp != std::string::npos) {
    if (t.back() != ')') throw std::invalid_argument("potential: missing ')': " + text);
    name = t.substr(0, lp);
    args = t.substr(lp + 1, t.size() - lp - 2);
  }
  const auto it = kind_names().find(name);
  if (it == kind_names().end())
    throw std::invalid_argument("potential: unknown kind '" + name + "'");

  PotentialSpec p;
  p.kind = it->second;
  std::stringstream ss(args);
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    if (kv.empty()) continue;
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("potential: expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const double val = std::stod(kv.substr(eq + 1));
    if (key == "a") p.a = val;
    else if (key == "omega") p.omega = val;
    else if (key == "s") p.s = val;
    else if (key == "k") p.k = val;
    else throw std::invalid_argument("potential: unknown parameter '" + key + "'");
  }
  return p;
}

std::string format_potential(const PotentialSpec& p) {
  using K = PotentialSpec::Kind;
  char buf[64];
  auto num = [&buf](double v) {
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
  };
  switch (p.kind) {
    case K::zero: return "zero";
    case K::cos: return "cos(a=" + num(p.a) + ",omega=" + num(p.omega) + ")";
    case K::gauss: return "gauss(a=" + num(p.a) + ",s=" + num(p.s) + ")";
    case K::harmonic: return "harmonic(k=" + num(p.k) + ")";
    case K::abs_sin: return "abs_sin(a=" + num(p.a) + ",omega=" + num(p.omega) + ")";
    case K::sawtooth: return "sawtooth(a=" + num(p.a) + ")";
  }
  return "zero";
}

}  // namespace sclab
