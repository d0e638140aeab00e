#ifndef EINFLAG_TESTUTIL_HPP
#define EINFLAG_TESTUTIL_HPP

#include <cstdint>
#include <vector>

#include "einflag/liealg.hpp"
#include "einflag/rootsys.hpp"

namespace einflag::testutil {

/// Process-wide algebras; E8 construction is expensive enough to share.
inline const ChevalleyData& chevalley_of(const std::string& token) {
  static std::map<std::string, ChevalleyData> cache;
  auto it = cache.find(token);
  if (it == cache.end())
    it = cache.emplace(token, ChevalleyData(RootSystem::build(token))).first;
  return it->second;
}

inline const CompactLieAlgebra& algebra_of(const std::string& token) {
  static std::map<std::string, CompactLieAlgebra> cache;
  auto it = cache.find(token);
  if (it == cache.end()) it = cache.emplace(token, compact_form(chevalley_of(token))).first;
  return it->second;
}

/// Deterministic uniforms in (lo, hi) for property tests.
struct TestRng {
  uint64_t state;
  explicit TestRng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  double uniform(double lo, double hi) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    uint64_t z = state;
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdull;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ull;
    z ^= z >> 33;
    double u = (double)(z >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }
  std::vector<double> metric(int n, double lo = 0.2, double hi = 3.0) {
    std::vector<double> x(n);
    for (double& v : x) v = uniform(lo, hi);
    return x;
  }
};

}  // namespace einflag::testutil

#endif
