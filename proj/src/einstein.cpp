#include "einflag/einstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "einflag/ricci.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace einflag {

namespace {

// Numerator polynomial of r_k over the common denominator prod x_m^2.
Poly ricci_numerator(const TripleTable& t, const std::vector<int>& dims, int k) {
  const int N = t.n_modules();
  Poly p(N);
  std::vector<int> base(N, 2);

  std::vector<int> e = base;
  e[k - 1] -= 1;
  p.add_term(e, Rat(1, 2));

  for (int j = 1; j <= N; ++j)
    for (int i = 1; i <= N; ++i) {
      Rat v = t.get(i, j, k);
      if (v.is_zero()) continue;
      e = base;
      e[k - 1] += 1;
      e[j - 1] -= 1;
      e[i - 1] -= 1;
      p.add_term(e, v / Rat(4 * dims[k - 1]));
      e = base;
      e[j - 1] += 1;
      e[k - 1] -= 1;
      e[i - 1] -= 1;
      p.add_term(e, -v / Rat(2 * dims[k - 1]));
    }
  return p;
}

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Additive quasi-random sequence (generalized golden ratio) with a seeded
// offset; deterministic and well spread for the small dimensions used here.
struct QuasiRandom {
  std::vector<double> alpha, offset;

  QuasiRandom(int dim, uint64_t seed) {
    double phi = 2.0;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    alpha.resize(dim);
    offset.resize(dim);
    double a = 1.0;
    uint64_t s = seed ^ 0xa02bdbf7bb3c0a7ull;
    for (int d = 0; d < dim; ++d) {
      a /= phi;
      alpha[d] = a;
      offset[d] = (double)(splitmix64(s) >> 11) * 0x1.0p-53;
    }
  }

  // n-th point in [0,1)^dim
  void point(long long n, std::vector<double>& out) const {
    for (size_t d = 0; d < alpha.size(); ++d) {
      double v = offset[d] + (double)n * alpha[d];
      out[d] = v - std::floor(v);
    }
  }
};

// Partial-pivot LU solve of a tiny dense system; returns false when singular.
bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& b) {
  const int n = (int)a.size();
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-300) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (int r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      if (f == 0) continue;
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  for (int c = n - 1; c >= 0; --c) {
    double s = b[c];
    for (int j = c + 1; j < n; ++j) s -= a[c][j] * b[j];
    b[c] = s / a[c][c];
  }
  return true;
}

struct NewtonKernel {
  const PolySystem& ps;
  const SolverConfig& cfg;
  int nv;

  explicit NewtonKernel(const PolySystem& p, const SolverConfig& c)
      : ps(p), cfg(c), nv(p.n_vars()) {}

  double residual(const std::vector<double>& x, std::vector<double>& f) const {
    double worst = 0;
    for (int i = 0; i < nv; ++i) {
      f[i] = ps.eqs[i].eval(x) * ps.eq_scale[i];
      worst = std::max(worst, std::fabs(f[i]));
    }
    return worst;
  }

  // Clearing denominators plants pseudo-zeros along the coordinate walls
  // where every monomial collapses; a genuine Einstein metric must also
  // annihilate the rational differences r_i - r_{i+1} relative to the
  // natural Ricci scale 1/(2 min x).
  bool einstein_at(const std::vector<double>& x) const {
    double xmin = x[0];
    for (int k = 1; k < ps.n_modules; ++k) xmin = std::min(xmin, x[k]);
    double scale = 0.5 / xmin;
    double rel = std::max(1e-8, 100.0 * cfg.newton_tol);
    for (int i = 0; i < nv; ++i) {
      double diff = ps.eqs[i].eval(x) / system_positive_factor(ps, i, x);
      if (std::fabs(diff) > rel * scale) return false;
    }
    return true;
  }

  // Runs one damped Newton iteration from u (log coordinates); returns the
  // converged metric, or empty when the start is abandoned.
  std::vector<double> run(std::vector<double> u) const {
    std::vector<double> x(ps.n_modules, 1.0), f(nv), ftry(nv);
    auto to_x = [&](const std::vector<double>& uu, std::vector<double>& xx) {
      for (int d = 0; d < nv; ++d) xx[d + 1] = std::exp(uu[d]);
    };
    to_x(u, x);
    double fn = residual(x, f);
    for (int it = 0; it < cfg.max_iter; ++it) {
      if (fn < cfg.newton_tol) {
        if (!einstein_at(x)) return {};
        return x;
      }
      std::vector<std::vector<double>> J(nv, std::vector<double>(nv));
      for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
          J[i][j] = ps.jac[i][j].eval(x) * ps.eq_scale[i] * x[j + 1];
      std::vector<double> step(nv);
      for (int i = 0; i < nv; ++i) step[i] = -f[i];
      if (!solve_dense(J, step)) return {};
      double tdamp = 1.0;
      std::vector<double> unew(nv), xnew(ps.n_modules, 1.0);
      bool accepted = false;
      for (int half = 0; half < 14; ++half, tdamp *= 0.5) {
        bool inside = true;
        for (int d = 0; d < nv; ++d) {
          unew[d] = u[d] + tdamp * step[d];
          if (std::fabs(unew[d]) > cfg.max_log) inside = false;
        }
        if (!inside) continue;
        to_x(unew, xnew);
        double fnew = residual(xnew, ftry);
        if (fnew < (1.0 - 1e-4 * tdamp) * fn || fnew < cfg.newton_tol) {
          u = unew;
          x = xnew;
          f = ftry;
          fn = fnew;
          accepted = true;
          break;
        }
      }
      if (!accepted) return {};
    }
    return {};
  }
};

std::vector<std::vector<double>> solve_impl(const PolySystem& ps,
                                            const SolverConfig& cfg,
                                            [[maybe_unused]] bool parallel) {
  const int nv = ps.n_vars();
  if (nv == 0) {
    // Single-summand space: every metric is proportional to B; the
    // normalized representative is x = (1).
    return {{1.0}};
  }

  NewtonKernel kernel(ps, cfg);
  QuasiRandom qr(nv, cfg.seed);

  std::vector<std::vector<double>> found(cfg.starts);
#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
  {
    std::vector<double> pt(nv), u(nv);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (int s = 0; s < cfg.starts; ++s) {
      qr.point(s, pt);
      for (int d = 0; d < nv; ++d) u[d] = cfg.start_box * (2.0 * pt[d] - 1.0);
      found[s] = kernel.run(u);
    }
  }

  // Deterministic merge in start order, then dedup by relative distance.
  std::vector<std::vector<double>> sols;
  for (int s = 0; s < cfg.starts; ++s) {
    if (found[s].empty()) continue;
    bool dup = false;
    for (const auto& prev : sols) {
      double dist = 0;
      for (size_t k = 0; k < prev.size(); ++k)
        dist = std::max(dist,
                        std::fabs(found[s][k] - prev[k]) / std::max(1.0, std::fabs(prev[k])));
      if (dist < cfg.dedup_radius) {
        dup = true;
        break;
      }
    }
    if (!dup) sols.push_back(found[s]);
  }
  std::sort(sols.begin(), sols.end());
  return sols;
}

}  // namespace

PolySystem build_system(const TripleTable& t, const std::vector<int>& dims) {
  const int N = t.n_modules();
  if ((int)dims.size() != N) throw std::invalid_argument("build_system: size mismatch");
  PolySystem ps;
  ps.n_modules = N;

  std::vector<Poly> nums;
  for (int k = 1; k <= N; ++k) nums.push_back(ricci_numerator(t, dims, k));

  for (int i = 0; i + 1 < N; ++i) {
    Poly f = (nums[i] - nums[i + 1]).substitute_one(0);
    auto [mono, content] = f.extract_content();
    ps.eqs.push_back(f);
    ps.mono_removed.push_back(mono);
    ps.content_removed.push_back(content);
    double m = f.max_abs_coeff();
    ps.eq_scale.push_back(m > 0 ? 1.0 / m : 1.0);
  }

  ps.jac.resize(N - 1);
  for (int i = 0; i + 1 < N; ++i)
    for (int j = 1; j < N; ++j) ps.jac[i].push_back(ps.eqs[i].derivative(j));
  return ps;
}

double system_positive_factor(const PolySystem& ps, int eq,
                              const std::vector<double>& x) {
  // f_eq = (r_eq - r_{eq+1}) * prod_{m>=2} x_m^2 / (content * x^mono) on x_1=1.
  double factor = 1.0 / ps.content_removed[eq].to_double();
  for (int m = 1; m < ps.n_modules; ++m) factor *= x[m] * x[m];
  for (int v = 0; v < ps.n_modules; ++v)
    for (int p = 0; p < ps.mono_removed[eq][v]; ++p) factor /= x[v];
  return factor;
}

std::vector<std::vector<double>> solve_positive(const PolySystem& ps,
                                                const SolverConfig& cfg) {
  return solve_impl(ps, cfg, true);
}

std::vector<std::vector<double>> solve_positive_serial(const PolySystem& ps,
                                                       const SolverConfig& cfg) {
  return solve_impl(ps, cfg, false);
}

EinsteinClassification classify_dims(const std::vector<int>& dims,
                                     const TripleTable& t, const SolverConfig& cfg) {
  const int N = t.n_modules();
  PolySystem ps = build_system(t, dims);
  auto raw = solve_positive(ps, cfg);

  EinsteinClassification out;
  long long d_total = 0;
  for (int d : dims) d_total += d;

  for (const auto& x : raw) {
    auto r = ricci_components<double>(t, dims, x);
    EinsteinSolution sol;
    sol.x = x;
    double s = 0;
    for (int k = 0; k < N; ++k) s += dims[k] * r[k];
    sol.scalar = s;
    sol.lambda = s / (double)d_total;
    for (int k = 0; k < N; ++k)
      sol.lambda_spread = std::max(sol.lambda_spread, std::fabs(r[k] - sol.lambda));
    double logv = 0;
    for (int k = 0; k < N; ++k) logv += dims[k] * std::log(x[k]);
    sol.volume = std::exp(logv);
    sol.h_invariant = std::exp(logv / (double)d_total) * sol.scalar;
    for (int i = 0; i < ps.n_vars(); ++i)
      sol.residual = std::max(sol.residual,
                              std::fabs(ps.eqs[i].eval(x) * ps.eq_scale[i]));
    sol.is_kahler = true;
    for (int k = 0; k < N; ++k)
      if (std::fabs(x[k] / ((k + 1) * x[0]) - 1.0) > 1e-6) sol.is_kahler = false;

    if (sol.lambda_spread > 1e-6 * std::max(1.0, std::fabs(sol.lambda))) {
      std::string why = "rejected x = (";
      for (int k = 0; k < N; ++k)
        why += (k ? "," : "") + std::to_string(x[k]);
      why += "): lambda spread " + std::to_string(sol.lambda_spread);
      out.rejected.push_back(why);
      continue;
    }
    out.solutions.push_back(sol);
  }

  for (const auto& s : out.solutions)
    (s.is_kahler ? out.n_kahler : out.n_nonkahler)++;

  // Isometry classes grouped by the scale invariant H; a gap is a split when
  // it clears ten times the numerical uncertainty of either member.
  std::vector<int> order(out.solutions.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return out.solutions[a].h_invariant < out.solutions[b].h_invariant;
  });
  auto uncertainty = [&](int i) {
    const auto& s = out.solutions[i];
    double rel = s.lambda_spread / std::max(std::fabs(s.lambda), 1e-300);
    return std::fabs(s.h_invariant) * std::max(rel, 1e-12);
  };
  for (size_t i = 0; i < order.size(); ++i) {
    if (i == 0) {
      out.isometry_classes.push_back({order[i]});
      continue;
    }
    double gap = out.solutions[order[i]].h_invariant -
                 out.solutions[order[i - 1]].h_invariant;
    double unc = 10.0 * std::max(uncertainty(order[i]), uncertainty(order[i - 1]));
    if (gap > unc) out.isometry_classes.push_back({order[i]});
    else out.isometry_classes.back().push_back(order[i]);
  }
  return out;
}

EinsteinClassification classify(const FlagSpace& fs, const TripleTable& t,
                                const SolverConfig& cfg) {
  return classify_dims(fs.dims(), t, cfg);
}

}  // namespace einflag
