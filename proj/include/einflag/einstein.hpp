#ifndef EINFLAG_EINSTEIN_HPP
#define EINFLAG_EINSTEIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "einflag/flag.hpp"
#include "einflag/poly.hpp"
#include "einflag/triples.hpp"

namespace einflag {

/// Cleared-denominator Einstein system: N-1 polynomials f_i, each a strictly
/// positive multiple of r_i - r_{i+1} on the open positive orthant, with
/// x_1 normalized to 1 (variable slot 0 is unused after substitution).
struct PolySystem {
  int n_modules = 0;
  std::vector<Poly> eqs;
  std::vector<std::vector<Poly>> jac;        // d eqs[i] / d x_{j+2}
  std::vector<double> eq_scale;              // 1 / max |coefficient|
  std::vector<std::vector<int>> mono_removed;  // per-eq monomial divided out
  std::vector<Rat> content_removed;            // per-eq content divided out

  int n_vars() const { return n_modules - 1; }
};

PolySystem build_system(const TripleTable& t, const std::vector<int>& dims);

/// f_i(x) reconstructed as (r_i - r_{i+1})(x) times its positive factor;
/// used to check polynomial/rational agreement pointwise.
double system_positive_factor(const PolySystem& ps, int eq,
                              const std::vector<double>& x);

struct SolverConfig {
  uint64_t seed = 1;
  int starts = 20000;
  double newton_tol = 1e-12;
  int max_iter = 80;
  double dedup_radius = 1e-6;
  double start_box = 3.0;  // log-coordinate start cube [-b, b]^(N-1)
  double max_log = 12.0;   // abandon iterates escaping this cube
};

/// All positive solutions found by seeded quasi-random multistart Newton in
/// log coordinates.  Deterministic for a fixed config: per-start results are
/// merged in start order, deduplicated by relative distance, then sorted.
/// Returned vectors carry the full metric (x_1 = 1 first).
std::vector<std::vector<double>> solve_positive(const PolySystem& ps,
                                                const SolverConfig& cfg);
std::vector<std::vector<double>> solve_positive_serial(const PolySystem& ps,
                                                       const SolverConfig& cfg);

struct EinsteinSolution {
  std::vector<double> x;      // x_1 = 1
  double lambda = 0;          // d_k-weighted mean of r_k
  double lambda_spread = 0;   // max_k |r_k - lambda|
  double scalar = 0;          // S = sum d_k r_k
  double volume = 0;          // V = prod x_k^{d_k}
  double h_invariant = 0;     // H = V^{1/d} S
  double residual = 0;        // max scaled |f_i(x)|
  bool is_kahler = false;
};

struct EinsteinClassification {
  std::vector<EinsteinSolution> solutions;  // sorted by x, lexicographic
  int n_kahler = 0;
  int n_nonkahler = 0;
  std::vector<std::vector<int>> isometry_classes;  // indices, grouped by H
  std::vector<std::string> rejected;               // diagnostics for dropped roots
};

EinsteinClassification classify(const FlagSpace& fs, const TripleTable& t,
                                const SolverConfig& cfg);

/// classify() on precomputed dims, for spaces described by data only.
EinsteinClassification classify_dims(const std::vector<int>& dims,
                                     const TripleTable& t, const SolverConfig& cfg);

}  // namespace einflag

#endif
