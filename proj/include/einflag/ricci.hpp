#ifndef EINFLAG_RICCI_HPP
#define EINFLAG_RICCI_HPP

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "einflag/rational.hpp"
#include "einflag/triples.hpp"

namespace einflag {

/// Ricci components of the diagonal metric x_1 B|m_1 + ... + x_N B|m_N:
///   r_k = 1/(2x_k) + 1/(4 d_k) sum_{j,i} (x_k/(x_j x_i)) [k;ji]
///                  - 1/(2 d_k) sum_{j,i} (x_j/(x_k x_i)) [j;ki].
/// Works in doubles (compensated summation) or exact rationals.
template <typename S>
std::vector<S> ricci_components(const TripleTable& t, const std::vector<int>& dims,
                                const std::vector<S>& x) {
  const int N = t.n_modules();
  if ((int)dims.size() != N || (int)x.size() != N)
    throw std::invalid_argument("ricci_components: size mismatch");
  for (const S& xi : x)
    if (!(xi > S(0))) throw std::domain_error("ricci_components: nonpositive metric");

  std::vector<S> r(N);
  for (int k = 1; k <= N; ++k) {
    S sum2(0), sum3(0);
    S c2(0), c3(0);  // Kahan carries, unused for exact scalars
    for (int j = 1; j <= N; ++j)
      for (int i = 1; i <= N; ++i) {
        Rat v = t.get(i, j, k);
        if (v.is_zero()) continue;
        S vv;
        if constexpr (std::is_same_v<S, double>) vv = v.to_double();
        else vv = v;
        S t2 = x[k - 1] / (x[j - 1] * x[i - 1]) * vv;
        S t3 = x[j - 1] / (x[k - 1] * x[i - 1]) * vv;
        if constexpr (std::is_same_v<S, double>) {
          double y = t2 - c2, z = sum2 + y;
          c2 = (z - sum2) - y;
          sum2 = z;
          y = t3 - c3;
          z = sum3 + y;
          c3 = (z - sum3) - y;
          sum3 = z;
        } else {
          sum2 += t2;
          sum3 += t3;
        }
      }
    S half(0);
    if constexpr (std::is_same_v<S, double>) half = 1.0 / (2.0 * x[k - 1]);
    else half = Rat(1) / (S(2) * x[k - 1]);
    r[k - 1] = half + sum2 / S(4 * dims[k - 1]) - sum3 / S(2 * dims[k - 1]);
  }
  return r;
}

/// S = sum_k d_k r_k.
template <typename S>
S scalar_curvature(const std::vector<int>& dims, const std::vector<S>& r) {
  if (dims.size() != r.size())
    throw std::invalid_argument("scalar_curvature: size mismatch");
  S s(0);
  for (size_t k = 0; k < r.size(); ++k) s += S((long long)dims[k]) * r[k];
  return s;
}

enum class SubmersionCase { E, F };

struct SubmersionReport {
  bool pass = true;
  double max_dev = 0.0;
};

/// Checks the horizontal-equality pattern of the submersion metric: the
/// differences r_1 - r_4 and r_2 - r_3 (case E, metric (y1,y2,y2,y1,z1)),
/// or r_1 - r_5 and r_2 - r_4 (case F, metric (y1,y2,y3,y2,y1,z1)), consist
/// purely of the z1-coefficient terms.  Violations beyond `tol` signal a
/// wrong triple table.
SubmersionReport verify_submersion_identities(const TripleTable& t,
                                              const std::vector<int>& dims,
                                              SubmersionCase which,
                                              const std::vector<double>& params,
                                              double tol = 1e-10);

}  // namespace einflag

#endif
