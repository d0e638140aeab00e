#ifndef EINFLAG_FLAG_HPP
#define EINFLAG_FLAG_HPP

#include <string>
#include <vector>

#include "einflag/rational.hpp"
#include "einflag/rootsys.hpp"

namespace einflag {

/// Flag manifold G/H with b_2 = 1, obtained by painting one node of the
/// Dynkin diagram.  The isotropy representation splits into N inequivalent
/// modules m_k collecting the positive roots whose painted-node coefficient
/// equals k; the isotropy algebra h keeps the Cartan part and the roots
/// supported on the white nodes.
class FlagSpace {
public:
  /// Module index of a positive root: 1..N, or 0 for isotropy.
  static constexpr int kIsotropy = 0;

  FlagSpace(const RootSystem& rs, int painted_node);

  const RootSystem& root_system() const { return rs_; }
  int painted_node() const { return painted_; }
  int n_modules() const { return N_; }

  /// Positive-root indices of m_k (1-based k).
  const std::vector<int>& module_roots(int k) const { return modules_[k - 1]; }
  const std::vector<int>& isotropy_roots() const { return h_roots_; }

  /// d_k = 2 |Delta^+(alpha_i,k)| (1-based k).
  int dim_module(int k) const { return 2 * (int)modules_[k - 1].size(); }
  std::vector<int> dims() const;

  int dim_isotropy() const { return rs_.rank() + 2 * (int)h_roots_.size(); }
  int dim_g() const { return rs_.rank() + 2 * (int)rs_.positive_roots().size(); }

  /// Module of a positive root (given as root or index): k, or kIsotropy.
  int module_of(const Root& a) const;
  int module_of_index(int pos_index) const;

  /// Human-readable isotropy type, e.g. "u(1) + su(4) + su(5)".
  const std::string& isotropy_label() const { return label_; }

  std::string dump() const;

private:
  RootSystem rs_;
  int painted_;  // 1-based
  int N_;
  std::vector<std::vector<int>> modules_;
  std::vector<int> h_roots_;
  std::vector<int> module_of_;  // per positive root
  std::string label_;

  void build_label();
};

FlagSpace paint(const RootSystem& rs, int node);

/// The unique invariant Kaehler-Einstein metric (1, 2, ..., N).
std::vector<Rat> kahler_einstein_metric(const FlagSpace& fs);

}  // namespace einflag

#endif
