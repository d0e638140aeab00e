#ifndef EINFLAG_TRIPLES_HPP
#define EINFLAG_TRIPLES_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "einflag/flag.hpp"
#include "einflag/liealg.hpp"
#include "einflag/rational.hpp"

namespace einflag {

/// Symmetric structure constants [k;ij] of a flag space, stored once per
/// multiset {i,j,k} of module indices (1-based), exact rationals.
class TripleTable {
public:
  explicit TripleTable(int n_modules) : n_(n_modules) {}

  int n_modules() const { return n_; }

  Rat get(int i, int j, int k) const {
    auto it = vals_.find(key(i, j, k));
    return it == vals_.end() ? Rat(0) : it->second;
  }
  void set(int i, int j, int k, const Rat& v) {
    if (v.is_zero()) vals_.erase(key(i, j, k));
    else vals_[key(i, j, k)] = v;
  }
  void add(int i, int j, int k, const Rat& v) { set(i, j, k, get(i, j, k) + v); }

  /// Nonzero entries over canonical keys i <= j <= k.
  const std::map<std::array<int, 3>, Rat>& entries() const { return vals_; }

  /// Entries vanish unless the multiset looks like {i, j, i+j}.
  bool selection_rule_ok() const;

  /// "{i,j,k}: value" per line, canonical order.
  std::string serialize() const;

  bool operator==(const TripleTable& o) const {
    return n_ == o.n_ && vals_ == o.vals_;
  }

private:
  static std::array<int, 3> key(int i, int j, int k) {
    std::array<int, 3> a{i, j, k};
    if (a[0] > a[1]) std::swap(a[0], a[1]);
    if (a[1] > a[2]) std::swap(a[1], a[2]);
    if (a[0] > a[1]) std::swap(a[0], a[1]);
    return a;
  }

  int n_;
  std::map<std::array<int, 3>, Rat> vals_;
};

/// Brute-force oracle: [k;ij] = sum of squared structure constants over
/// B-orthonormal module bases of the explicit compact form.  Exact; asserts
/// full index symmetry by computing every role assignment.
TripleTable triples_oracle(const FlagSpace& fs, const CompactLieAlgebra& L);
TripleTable triples_oracle_serial(const FlagSpace& fs, const CompactLieAlgebra& L);

/// Paper-method tables for the two E8 spaces, from the exact linear systems
/// given by the Kaehler-Einstein equalities plus the submersion relations.
TripleTable triples_case_E();
TripleTable triples_case_F();

/// Fiber triples on E7/U(1)xSU(3)xSU(5) with dims (60,30,10): the pair
/// ([2;11]_f, [3;12]_f) = (10, 10/3) from the KE condition at (1,2,3).
std::pair<Rat, Rat> fiber_triples_e7();

/// Killing-form ratio for the twistor fiber rescaling, B_E7/B_E8.
inline Rat twistor_rescale_e7_e8() { return Rat(3, 5); }

struct AgreementReport {
  bool pass = true;
  std::string diff;  // one line per differing multiset
};

/// Exact comparison (or within eps when eps > 0).
AgreementReport assert_agreement(const TripleTable& a, const TripleTable& b,
                                 double eps = 0.0);

}  // namespace einflag

#endif
