#ifndef EINFLAG_ROOTSYS_HPP
#define EINFLAG_ROOTSYS_HPP

#include <map>
#include <string>
#include <vector>

#include "einflag/rational.hpp"

namespace einflag {

/// A root written over the simple roots: alpha = sum coeffs[k] * alpha_{k+1}.
struct Root {
  std::vector<int> coeffs;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
  bool operator<(const Root& o) const { return coeffs < o.coeffs; }
  std::string str() const;
};

/// Root system of a compact simple Lie algebra in the simple-root basis.
///
/// Simple-root labeling: E8 follows the chain a1-a2-...-a7 with a8 attached
/// to a5 (branch node of height 6), so the highest root is
/// 2a1+3a2+4a3+5a4+6a5+4a6+2a7+3a8.  E6/E7 use the analogous chain with the
/// branch root attached at node rank-3.  Classical types are the usual chains
/// (B: last root short, C: last root long, D: fork at the end).  F4 has a1,a2
/// long and a3,a4 short; G2 has a1 long and a2 short.  See README for the
/// permutation to Bourbaki numbering.
class RootSystem {
public:
  /// Builds from a token such as "E8", "A2", "B3", "G2".
  /// Invalid type/rank combinations throw std::invalid_argument.
  static RootSystem build(const std::string& type_token);

  char family() const { return family_; }
  int rank() const { return rank_; }
  const std::string& type_token() const { return token_; }

  /// cartan(i,j) = <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j),
  /// 0-based indices.
  int cartan(int i, int j) const { return cartan_[i][j]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return highest_; }

  /// Coefficient of alpha_i (1-based node) in the highest root.
  int height_of_node(int node) const;

  /// Inner product with long roots normalized to (alpha,alpha) = 2.
  Rat inner(const Root& a, const Root& b) const;
  Rat len2(const Root& a) const { return inner(a, a); }

  /// (alpha_i, alpha_j) on simple roots, 0-based.
  Rat gram(int i, int j) const { return gram_[i][j]; }

  /// Index of a positive root in positive_roots(), or -1.
  int index_of(const Root& a) const;
  bool is_positive_root(const Root& a) const { return index_of(a) >= 0; }

  /// <a, alpha_j^vee> for an arbitrary integer combination a, 0-based j.
  int pairing(const Root& a, int j) const;

  std::string dump() const;

private:
  char family_ = '?';
  int rank_ = 0;
  std::string token_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rat>> gram_;
  std::vector<Root> positive_;  // sorted by (height, coeffs)
  Root highest_;
  std::map<std::vector<int>, int> index_;

  void enumerate();
};

}  // namespace einflag

#endif
