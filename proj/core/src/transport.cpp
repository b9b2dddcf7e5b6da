#include "sclab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace sclab {

void DiscreteMeasure::validate() const {
  if (points.size() != weights.size() || points.empty())
    throw std::invalid_argument("DiscreteMeasure: empty or mismatched support");
  double s = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("DiscreteMeasure: negative weight");
    s += w;
  }
  if (std::abs(s - 1.0) > 1e-9)
    throw std::invalid_argument("DiscreteMeasure: weights must sum to 1");
}

DiscreteMeasure DiscreteMeasure::from_ensemble(const Ensemble& e) {
  DiscreteMeasure m;
  m.points.reserve(e.points.size());
  for (const auto& z : e.points) {
    if (z.q.size() != 1)
      throw std::invalid_argument("DiscreteMeasure: d = 1 phase space only");
    m.points.push_back({z.q[0], z.p[0]});
  }
  m.weights = e.weights;
  return m;
}

double quadratic_cost(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  const double dq = a[0] - b[0];
  const double dp = a[1] - b[1];
  return dq * dq + dp * dp;
}

// ---------------------------------------------------------------------------
// transportation simplex
// ---------------------------------------------------------------------------

namespace {

struct Arc {
  int i, j;       // source row, sink column
  double flow;
  bool basic;
};

}  // namespace

ExactOtResult w2_exact(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  mu.validate();
  nu.validate();
  const int m = int(mu.points.size());
  const int n = int(nu.points.size());
  if (m > 400 || n > 400)
    throw std::invalid_argument("w2_exact: support capped at 400 points");

  std::vector<double> a = mu.weights, b = nu.weights;
  {  // force exact balance (weights already sum to 1 within 1e-9)
    double sa = 0.0, sb = 0.0;
    for (double x : a) sa += x;
    for (double x : b) sb += x;
    const double f = sa / sb;
    for (double& x : b) x *= f;
  }

  std::vector<double> cost(std::size_t(m) * n);
  double cmax = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const double c = quadratic_cost(mu.points[i], nu.points[j]);
      cost[std::size_t(i) * n + j] = c;
      cmax = std::max(cmax, c);
    }
  if (cmax == 0.0) return {0.0, 0.0, 0};

  // initial BFS, matrix-minimum rule
  std::vector<double> ra = a, rb = b;
  std::vector<bool> row_open(m, true), col_open(n, true);
  std::vector<double> flow(std::size_t(m) * n, 0.0);
  std::vector<char> basic(std::size_t(m) * n, 0);
  int open_rows = m, open_cols = n;
  int basics = 0;
  while (open_rows > 0 && open_cols > 0) {
    double best = std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    for (int i = 0; i < m; ++i) {
      if (!row_open[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (!col_open[j]) continue;
        const double c = cost[std::size_t(i) * n + j];
        if (c < best) {
          best = c;
          bi = i;
          bj = j;
        }
      }
    }
    const double q = std::min(ra[bi], rb[bj]);
    flow[std::size_t(bi) * n + bj] = q;
    basic[std::size_t(bi) * n + bj] = 1;
    ++basics;
    ra[bi] -= q;
    rb[bj] -= q;
    const bool last = (open_rows == 1 && open_cols == 1);
    if (last) {
      row_open[bi] = false;
      col_open[bj] = false;
      --open_rows;
      --open_cols;
    } else if (ra[bi] <= rb[bj]) {
      row_open[bi] = false;
      --open_rows;
    } else {
      col_open[bj] = false;
      --open_cols;
    }
  }
  // pad degenerate bases up to m+n-1 arcs
  for (int i = 0; i < m && basics < m + n - 1; ++i)
    for (int j = 0; j < n && basics < m + n - 1; ++j) {
      if (basic[std::size_t(i) * n + j]) continue;
      // adding (i,j) must not close a cycle; cheap test via potentials below
      // would be costly here, so use the standard trick: connect components.
      basic[std::size_t(i) * n + j] = 2;  // tentative
      // validate acyclicity with a union-find over the current basis
      std::vector<int> parent(m + n);
      for (int k = 0; k < m + n; ++k) parent[k] = k;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      bool ok = true;
      for (int ii = 0; ii < m && ok; ++ii)
        for (int jj = 0; jj < n && ok; ++jj)
          if (basic[std::size_t(ii) * n + jj]) {
            const int ru = find(ii), rv = find(m + jj);
            if (ru == rv)
              ok = false;
            else
              parent[ru] = rv;
          }
      if (ok) {
        basic[std::size_t(i) * n + j] = 1;
        ++basics;
      } else {
        basic[std::size_t(i) * n + j] = 0;
      }
    }

  const int nodes = m + n;
  std::vector<double> u(m), v(n);
  std::vector<char> known_u(m), known_v(n);
  std::vector<int> parent_node(nodes), parent_row(nodes), parent_col(nodes);

  auto objective = [&]() {
    double s = 0.0;
    for (std::size_t k = 0; k < flow.size(); ++k) s += flow[k] * cost[k];
    return s;
  };

  const double tol = 1e-12 * std::max(1.0, cmax);
  const long max_iters = 400L * nodes + 20000;
  long iter = 0;
  long stalls = 0;
  bool bland = false;
  double last_obj = objective();

  for (; iter < max_iters; ++iter) {
    // potentials by BFS over the basis tree
    std::fill(known_u.begin(), known_u.end(), 0);
    std::fill(known_v.begin(), known_v.end(), 0);
    std::deque<int> queue;  // nodes: rows 0..m-1, cols m..m+n-1
    u[0] = 0.0;
    known_u[0] = 1;
    queue.push_back(0);
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      if (node < m) {
        for (int j = 0; j < n; ++j)
          if (basic[std::size_t(node) * n + j] && !known_v[j]) {
            v[j] = cost[std::size_t(node) * n + j] - u[node];
            known_v[j] = 1;
            queue.push_back(m + j);
          }
      } else {
        const int j = node - m;
        for (int i = 0; i < m; ++i)
          if (basic[std::size_t(i) * n + j] && !known_u[i]) {
            u[i] = cost[std::size_t(i) * n + j] - v[j];
            known_u[i] = 1;
            queue.push_back(i);
          }
      }
    }

    // entering arc
    int ei = -1, ej = -1;
    double most_neg = -tol;
    for (int i = 0; i < m && (ei < 0 || !bland); ++i)
      for (int j = 0; j < n; ++j) {
        if (basic[std::size_t(i) * n + j]) continue;
        const double r = cost[std::size_t(i) * n + j] - u[i] - v[j];
        if (r < most_neg) {
          most_neg = r;
          ei = i;
          ej = j;
          if (bland) break;
        }
      }
    if (ei < 0) break;  // optimal

    // cycle: tree path from row node ei to col node m+ej
    std::fill(parent_node.begin(), parent_node.end(), -2);
    parent_node[ei] = -1;
    queue.clear();
    queue.push_back(ei);
    while (!queue.empty() && parent_node[m + ej] == -2) {
      const int node = queue.front();
      queue.pop_front();
      if (node < m) {
        for (int j = 0; j < n; ++j)
          if (basic[std::size_t(node) * n + j] && parent_node[m + j] == -2) {
            parent_node[m + j] = node;
            queue.push_back(m + j);
          }
      } else {
        const int jj = node - m;
        for (int i = 0; i < m; ++i)
          if (basic[std::size_t(i) * n + jj] && parent_node[i] == -2) {
            parent_node[i] = node;
            queue.push_back(i);
          }
      }
    }
    if (parent_node[m + ej] == -2)
      throw std::runtime_error("w2_exact: basis lost tree connectivity");

    // walk back: arcs alternate -,+ along the path; entering arc gets +
    std::vector<std::pair<int, int>> minus_arcs, plus_arcs;
    {
      int node = m + ej;
      bool minus = true;  // arc adjacent to entering column is a minus arc
      while (parent_node[node] >= 0) {
        const int par = parent_node[node];
        const int i = std::min(node, par) < m ? std::min(node, par) : -1;
        int row = node < m ? node : par;
        int col = node < m ? par - m : node - m;
        (void)i;
        if (minus)
          minus_arcs.push_back({row, col});
        else
          plus_arcs.push_back({row, col});
        minus = !minus;
        node = par;
      }
    }
    double theta = std::numeric_limits<double>::infinity();
    std::pair<int, int> leave{-1, -1};
    for (const auto& [i, j] : minus_arcs) {
      const double fl = flow[std::size_t(i) * n + j];
      if (fl < theta - 1e-300 ||
          (fl == theta && std::pair(i, j) < leave)) {
        theta = fl;
        leave = {i, j};
      }
    }
    for (const auto& [i, j] : minus_arcs) flow[std::size_t(i) * n + j] -= theta;
    for (const auto& [i, j] : plus_arcs) flow[std::size_t(i) * n + j] += theta;
    flow[std::size_t(ei) * n + ej] += theta;
    basic[std::size_t(ei) * n + ej] = 1;
    basic[std::size_t(leave.first) * n + leave.second] = 0;

    if (theta <= 0.0) {
      if (++stalls > nodes) bland = true;  // degeneracy safeguard
    } else {
      stalls = 0;
      last_obj = std::min(last_obj, objective());
    }
  }
  if (iter >= max_iters)
    throw std::runtime_error("w2_exact: simplex iteration cap exceeded");

  double total = 0.0;
  for (std::size_t k = 0; k < flow.size(); ++k) total += flow[k] * cost[k];
  total = std::max(0.0, total);
  return {std::sqrt(total), total, iter};
}

// ---------------------------------------------------------------------------
// log-domain Sinkhorn with epsilon-scaling
// ---------------------------------------------------------------------------

namespace {

double lse_row(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
               const std::vector<double>& logw, const std::vector<double>& pot,
               int i, double reg, bool over_columns) {
  // logsumexp over j of logw_j + (pot_j - c_ij)/reg
  double mx = -std::numeric_limits<double>::infinity();
  const int n = int(over_columns ? nu.points.size() : mu.points.size());
  for (int j = 0; j < n; ++j) {
    const double c = over_columns ? quadratic_cost(mu.points[i], nu.points[j])
                                  : quadratic_cost(mu.points[j], nu.points[i]);
    const double t = logw[j] + (pot[j] - c) / reg;
    if (t > mx) mx = t;
  }
  if (!std::isfinite(mx)) return mx;
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    const double c = over_columns ? quadratic_cost(mu.points[i], nu.points[j])
                                  : quadratic_cost(mu.points[j], nu.points[i]);
    s += std::exp(logw[j] + (pot[j] - c) / reg - mx);
  }
  return mx + std::log(s);
}

}  // namespace

SinkhornResult w2_sinkhorn(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                           double reg, long max_iters) {
  mu.validate();
  nu.validate();
  if (!(reg > 0.0)) throw std::invalid_argument("w2_sinkhorn: reg must be positive");
  const int m = int(mu.points.size());
  const int n = int(nu.points.size());
  if (m > 20000 || n > 20000)
    throw std::invalid_argument("w2_sinkhorn: support capped at 20000 points");

  std::vector<double> loga(m), logb(n);
  for (int i = 0; i < m; ++i) loga[i] = std::log(mu.weights[i] + 1e-300);
  for (int j = 0; j < n; ++j) logb[j] = std::log(nu.weights[j] + 1e-300);

  double cmax = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      cmax = std::max(cmax, quadratic_cost(mu.points[i], nu.points[j]));
  if (cmax == 0.0) return {0.0, 0.0, reg, 0, 0.0, true};

  std::vector<double> f(m, 0.0), g(n, 0.0);
  SinkhornResult res;
  res.reg = reg;

  // epsilon-scaling: anneal from cmax/4 down to the requested reg
  std::vector<double> stages;
  for (double r = cmax / 4.0; r > reg * 1.5; r *= 0.5) stages.push_back(r);
  stages.push_back(reg);

  long used = 0;
  auto marginal_err = [&](double r) {
    double err = 0.0;
    for (int i = 0; i < m; ++i) {
      const double row = std::exp(f[i] / r + lse_row(mu, nu, logb, g, i, r, true));
      err = std::max(err, std::abs(row - mu.weights[i]));
    }
    for (int j = 0; j < n; ++j) {
      const double col = std::exp(g[j] / r + lse_row(mu, nu, loga, f, j, r, false));
      err = std::max(err, std::abs(col - nu.weights[j]));
    }
    return err;
  };

  for (std::size_t s = 0; s < stages.size(); ++s) {
    const double r = stages[s];
    const bool final_stage = (s + 1 == stages.size());
    const double tol = final_stage ? 1e-8 : 1e-4;
    long stage_cap = final_stage ? (max_iters - used) : std::min<long>(300, max_iters - used);
    for (long it = 0; it < stage_cap; ++it) {
      for (int i = 0; i < m; ++i)
        f[i] = -r * lse_row(mu, nu, logb, g, i, r, true);
      for (int j = 0; j < n; ++j)
        g[j] = -r * lse_row(mu, nu, loga, f, j, r, false);
      ++used;
      if (it % 10 == 9 || it == stage_cap - 1) {
        res.marginal_error = marginal_err(r);
        if (res.marginal_error < tol) break;
      }
    }
  }
  res.iterations = used;
  res.marginal_error = marginal_err(reg);
  res.converged = res.marginal_error < 1e-8;
  if (!res.converged)
    throw std::runtime_error("w2_sinkhorn: marginal violation above 1e-8 after cap");

  // plan entries on the fly: pi_ij = exp((f_i + g_j - c_ij)/reg + loga_i + logb_j)
  auto plan = [&](int i, int j) {
    const double c = quadratic_cost(mu.points[i], nu.points[j]);
    return std::exp((f[i] + g[j] - c) / reg + loga[i] + logb[j]);
  };
  // rounding to the transport polytope (row scale, column scale, rank-1 fill)
  std::vector<double> rs(m, 0.0), cs(n, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) rs[i] += plan(i, j);
  std::vector<double> rfac(m);
  for (int i = 0; i < m; ++i) rfac[i] = rs[i] > 0 ? std::min(1.0, mu.weights[i] / rs[i]) : 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += plan(i, j) * rfac[i];
    cs[j] = s;
  }
  std::vector<double> cfac(n);
  for (int j = 0; j < n; ++j) cfac[j] = cs[j] > 0 ? std::min(1.0, nu.weights[j] / cs[j]) : 0.0;
  std::vector<double> erra(m, 0.0), errb(n, 0.0);
  double erra_total = 0.0;
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += plan(i, j) * rfac[i] * cfac[j];
    erra[i] = mu.weights[i] - s;
    erra_total += std::abs(erra[i]);
  }
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += plan(i, j) * rfac[i] * cfac[j];
    errb[j] = nu.weights[j] - s;
  }
  double cost = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      double pij = plan(i, j) * rfac[i] * cfac[j];
      if (erra_total > 1e-300) pij += erra[i] * errb[j] / erra_total;
      cost += pij * quadratic_cost(mu.points[i], nu.points[j]);
    }
  res.cost = std::max(0.0, cost);
  res.w2 = std::sqrt(res.cost);
  return res;
}

double mk_self_upper_from_delta(double delta_psi) {
  return std::sqrt(2.0) * delta_psi;
}

double mk_self_upper_toeplitz(int d, double hbar) { return std::sqrt(2.0 * d * hbar); }

double mk_coherent_upper(const std::vector<double>& z1, const std::vector<double>& z2,
                         double hbar, int d) {
  double r2 = 0.0;
  for (std::size_t i = 0; i < z1.size(); ++i)
    r2 += (z1[i] - z2[i]) * (z1[i] - z2[i]);
  return std::sqrt(r2 + 2.0 * d * hbar);
}

}  // namespace sclab
