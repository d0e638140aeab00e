#ifndef EINFLAG_LIEALG_HPP
#define EINFLAG_LIEALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "einflag/rational.hpp"
#include "einflag/rootsys.hpp"

namespace einflag {

/// Chevalley basis data for the complex algebra: integer structure constants
/// N(a,b) with [e_a,e_b] = N(a,b) e_{a+b}, over the full root list.
///
/// Full-root indexing: 0..P-1 are the positive roots in RootSystem order,
/// P..2P-1 their negatives.
class ChevalleyData {
public:
  explicit ChevalleyData(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int n_positive() const { return P_; }
  int n_roots() const { return 2 * P_; }

  bool is_positive(int a) const { return a < P_; }
  int negate(int a) const { return a < P_ ? a + P_ : a - P_; }

  /// Index of the sum a+b: root index, -1 (not a root), or -2 (zero).
  int sum(int a, int b) const { return sum_[a][b]; }

  /// N(a,b); only meaningful when sum(a,b) >= 0.
  int n_const(int a, int b) const { return n_[a][b]; }

  /// <root a, alpha_j^vee>, 0-based j.
  int pairing(int a, int j) const { return pairing_[a][j]; }

  /// Integer coordinates of the coroot of root a over the simple coroots.
  const std::vector<int>& coroot(int a) const { return coroot_[a]; }

  Rat len2(int a) const { return len2_[a % P_]; }

  /// Length p of the descending a-string through b (both full indices).
  int string_down(int a, int b) const;

  /// Exhaustive consistency sweep: antisymmetry, |N| = p+1 on every pair,
  /// Jacobi on every unordered root triple.  Aborts with the offending
  /// triple via std::logic_error.  `parallel` selects the OpenMP kernel.
  void verify(bool parallel = true) const;

private:
  RootSystem rs_;
  int P_;
  std::vector<std::vector<int>> sum_;
  std::vector<std::vector<int>> n_;
  std::vector<std::vector<int>> pairing_;
  std::vector<std::vector<int>> coroot_;
  std::vector<Rat> len2_;

  void jacobi_check(int a, int b, int c) const;
};

ChevalleyData chevalley(const RootSystem& rs);

/// Compact real form on the basis {t_1..t_l} (orthogonalized Cartan) together
/// with {u_alpha, v_alpha} for every positive root, where
/// u = e_a - e_{-a} and v = i(e_a + e_{-a}).
///
/// The stored basis is B-orthogonal but not normalized; norm2(u) = B(u,u) is
/// kept exactly so that squared structure constants of the B-orthonormal
/// basis stay rational: A(u,v,w)^2 = c^2 * norm2(w) / (norm2(u) norm2(v)).
class CompactLieAlgebra {
public:
  struct Term {
    int w;
    Rat c;
  };
  struct Label {
    enum Kind { Cartan, A, B } kind;
    int index;  // Cartan slot or positive-root index
    std::string str() const;
  };

  CompactLieAlgebra() = default;

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int n_positive() const { return P_; }
  const std::string& type_token() const { return token_; }

  int cartan_index(int j) const { return j; }
  int u_index(int a) const { return rank_ + 2 * a; }
  int v_index(int a) const { return rank_ + 2 * a + 1; }
  Label label(int idx) const;

  const Rat& norm2(int idx) const { return norm2_[idx]; }
  Rat killing_scale() const { return killing_scale_; }

  /// Stored expansion of [e_u, e_v] on the unnormalized basis.
  const std::vector<Term>& bracket(int u, int v) const {
    return table_[u * dim_ + v];
  }

  /// B([u^,v^],w^) for the B-orthonormal basis, in floating point.
  double structure_constant(int u, int v, int w) const;
  /// Its exact square.
  Rat structure_constant_sq(int u, int v, int w) const;

  /// Coefficient of w in the stored bracket [u,v] (0 if absent).
  Rat coeff(int u, int v, int w) const;

  /// Exact ad-invariance sweep over every stored entry:
  /// B([x,y],w) + B(y,[x,w]) = 0.
  void verify_ad_invariance() const;

  /// Full pairwise trace-form check: -tr(ad u ad v) == norm2(u) delta_uv,
  /// evaluated in doubles against `tol`.  Returns max deviation.
  double verify_orthonormality(double tol, bool parallel = true) const;

  /// Versioned text serialization with a trailing content hash.
  std::string serialize() const;
  static CompactLieAlgebra deserialize(const std::string& bytes);

  bool save_cache(const std::string& path) const;
  static std::optional<CompactLieAlgebra> load_cache(const std::string& path);

private:
  friend CompactLieAlgebra compact_form(const ChevalleyData& cd);

  std::string token_;
  int dim_ = 0;
  int rank_ = 0;
  int P_ = 0;
  std::vector<Rat> norm2_;
  Rat killing_scale_;
  std::vector<std::vector<Term>> table_;  // dim*dim cells

  double ad_trace(int u, int v) const;
};

CompactLieAlgebra compact_form(const ChevalleyData& cd);

}  // namespace einflag

#endif
