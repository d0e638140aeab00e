#include "einflag/liealg.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace einflag {

namespace {

constexpr int kUnset = INT_MIN;

// Shared scaffolding for the N(a,b) recursion.
struct ChevalleyBuilder {
  const RootSystem& rs;
  int P;
  int rank;
  std::vector<Root> pos;
  std::vector<std::vector<int>> npos;          // positive-pair N, memoized
  std::vector<std::pair<int, int>> extraspec;  // per positive root, (-1,-1) if simple

  explicit ChevalleyBuilder(const RootSystem& r)
      : rs(r), P((int)r.positive_roots().size()), rank(r.rank()), pos(r.positive_roots()) {
    npos.assign(P, std::vector<int>(P, kUnset));
    extraspec.assign(P, {-1, -1});
    for (int g = 0; g < P; ++g) {
      if (pos[g].height() == 1) continue;
      for (int a = 0; a < g; ++a) {
        int b = sub_index(g, a);
        if (b >= 0) {
          extraspec[g] = {a, b};
          break;
        }
      }
      if (extraspec[g].first < 0)
        throw std::logic_error("no decomposition for non-simple root");
    }
  }

  // Index of pos[g] - pos[a] among positive roots, or -1.
  int sub_index(int g, int a) const {
    Root d = pos[g];
    bool nonneg = true;
    for (int k = 0; k < rank; ++k) {
      d.coeffs[k] -= pos[a].coeffs[k];
      if (d.coeffs[k] < 0) nonneg = false;
    }
    if (!nonneg) return -1;
    return rs.index_of(d);
  }

  bool is_zero(const std::vector<int>& v) const {
    for (int c : v)
      if (c) return false;
    return true;
  }

  // Signed lookup: +idx+1 when v is a positive root, -(idx+1) when -v is,
  // 0 when v is not a root.
  int signed_index(const std::vector<int>& v) const {
    bool has_pos = false, has_neg = false;
    for (int c : v) {
      if (c > 0) has_pos = true;
      if (c < 0) has_neg = true;
    }
    if (has_pos && has_neg) return 0;
    if (!has_pos && !has_neg) return 0;
    if (has_pos) {
      Root r{v};
      int i = rs.index_of(r);
      return i < 0 ? 0 : i + 1;
    }
    std::vector<int> w(v.size());
    for (size_t k = 0; k < v.size(); ++k) w[k] = -v[k];
    Root r{w};
    int i = rs.index_of(r);
    return i < 0 ? 0 : -(i + 1);
  }

  std::vector<int> diff(int a, int b) const {  // pos[a] - pos[b]
    std::vector<int> v(rank);
    for (int k = 0; k < rank; ++k) v[k] = pos[a].coeffs[k] - pos[b].coeffs[k];
    return v;
  }

  // Descending string length: max k >= 0 with beta - k*alpha a root
  // (alpha = s_a * pos[ia], beta = s_b * pos[ib] via signed coeff vectors).
  int string_down(const std::vector<int>& alpha, const std::vector<int>& beta) const {
    std::vector<int> v = beta;
    int p = 0;
    while (true) {
      for (int k = 0; k < rank; ++k) v[k] -= alpha[k];
      if (signed_index(v) == 0) break;
      ++p;
    }
    return p;
  }

  static int to_int(const Rat& r, const char* what) {
    if (!r.is_integer()) throw std::logic_error(std::string("non-integer ") + what);
    return (int)r.num();
  }

  // N for a positive pair whose sum is the positive root g = a "+" b.
  int n_pos(int a, int b) {
    if (npos[a][b] != kUnset) return npos[a][b];
    int val;
    if (a > b) {
      val = -n_pos(b, a);
    } else {
      Root sum = pos[a];
      for (int k = 0; k < rank; ++k) sum.coeffs[k] += pos[b].coeffs[k];
      int g = rs.index_of(sum);
      if (g < 0) throw std::logic_error("n_pos on non-root sum");
      auto [a0, b0] = extraspec[g];
      if (a == a0 && b == b0) {
        val = string_down(pos[a].coeffs, pos[b].coeffs) + 1;
      } else {
        // Carter's relation on the quadruple (a, b, -a0, -b0), which sums
        // to zero with no two members opposite.
        Rat acc(0);
        std::vector<int> b_a0 = diff(b, a0);
        if (signed_index(b_a0) != 0) {
          Rat l2 = rs.inner(Root{b_a0}, Root{b_a0});
          acc += Rat(n_mixed(b, a0)) * Rat(n_mixed(a, b0)) / l2;
        }
        std::vector<int> a_a0 = diff(a, a0);
        if (signed_index(a_a0) != 0) {
          Rat l2 = rs.inner(Root{a_a0}, Root{a_a0});
          acc += Rat(-n_mixed(a0, a)) * Rat(n_mixed(b, b0)) / l2;
        }
        Rat res = rs.len2(pos[g]) / Rat(n_pos(a0, b0)) * acc;
        val = to_int(res, "special-pair N");
      }
    }
    npos[a][b] = val;
    return val;
  }

  // N(pos[a], -pos[b]) for a != b with pos[a]-pos[b] a root.  Reduces to a
  // positive pair of strictly smaller total height via invariance of the
  // Killing form on the triple summing to zero.
  int n_mixed(int a, int b) {
    std::vector<int> d = diff(a, b);
    int sd = signed_index(d);
    if (sd > 0) {
      int g = sd - 1;  // delta = a - b > 0, N(a,-b) = -len2(d)/len2(a) N(b,delta)
      Rat res = -rs.len2(Root{d}) / rs.len2(pos[a]) * Rat(n_pos(b, g));
      return to_int(res, "mixed N");
    }
    if (sd < 0) {
      int g = -sd - 1;  // delta' = b - a > 0, N(a,-b) = -len2(d')/len2(b) N(a,delta')
      Rat res = -rs.len2(pos[g]) / rs.len2(pos[b]) * Rat(n_pos(a, g));
      return to_int(res, "mixed N");
    }
    throw std::logic_error("n_mixed on non-root difference");
  }
};

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

ChevalleyData::ChevalleyData(const RootSystem& rs) : rs_(rs) {
  P_ = (int)rs.positive_roots().size();
  const int R = 2 * P_;
  const int l = rs.rank();

  auto coeffs_of = [&](int a) {
    std::vector<int> v = rs_.positive_roots()[a % P_].coeffs;
    if (a >= P_)
      for (int& c : v) c = -c;
    return v;
  };

  ChevalleyBuilder bld(rs_);

  sum_.assign(R, std::vector<int>(R, -1));
  for (int a = 0; a < R; ++a) {
    auto va = coeffs_of(a);
    for (int b = 0; b < R; ++b) {
      auto vb = coeffs_of(b);
      std::vector<int> s(l);
      for (int k = 0; k < l; ++k) s[k] = va[k] + vb[k];
      if (bld.is_zero(s)) {
        sum_[a][b] = -2;
        continue;
      }
      int si = bld.signed_index(s);
      if (si > 0) sum_[a][b] = si - 1;
      else if (si < 0) sum_[a][b] = -si - 1 + P_;
    }
  }

  // Full N table from the positive-pair recursion and the sign rules
  // N(-a,-b) = -N(a,b), N(-a,b) = -N(a,-b).
  n_.assign(R, std::vector<int>(R, 0));
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      if (sum_[a][b] < 0) continue;
      bool pa = a < P_, pb = b < P_;
      int ia = a % P_, ib = b % P_;
      int v;
      if (pa && pb) v = bld.n_pos(ia, ib);
      else if (!pa && !pb) v = -bld.n_pos(ia, ib);
      else if (pa) v = bld.n_mixed(ia, ib);
      else v = -bld.n_mixed(ia, ib);
      n_[a][b] = v;
    }

  pairing_.assign(R, std::vector<int>(l, 0));
  for (int a = 0; a < R; ++a) {
    auto va = coeffs_of(a);
    for (int j = 0; j < l; ++j) {
      int p = 0;
      for (int k = 0; k < l; ++k) p += va[k] * rs_.cartan(k, j);
      pairing_[a][j] = p;
    }
  }

  // Coroot coordinates over the simple coroots: for alpha = sum m_k alpha_k,
  // alpha^vee = sum m_k len2(alpha_k)/len2(alpha) alpha_k^vee.
  coroot_.assign(R, std::vector<int>(l, 0));
  for (int a = 0; a < P_; ++a) {
    Rat la = rs_.len2(rs_.positive_roots()[a]);
    for (int k = 0; k < l; ++k) {
      Rat c = Rat(rs_.positive_roots()[a].coeffs[k]) *
              rs_.gram(k, k) / la;
      if (!c.is_integer()) throw std::logic_error("non-integer coroot coordinate");
      coroot_[a][k] = (int)c.num();
      coroot_[a + P_][k] = -(int)c.num();
    }
  }

  len2_.resize(P_);
  for (int a = 0; a < P_; ++a) len2_[a] = rs_.len2(rs_.positive_roots()[a]);

  verify();
}

int ChevalleyData::string_down(int a, int b) const {
  auto vec = [&](int r) {
    std::vector<int> v = rs_.positive_roots()[r % P_].coeffs;
    if (r >= P_)
      for (int& c : v) c = -c;
    return v;
  };
  std::vector<int> va = vec(a), vb = vec(b);
  int p = 0;
  while (true) {
    for (size_t k = 0; k < vb.size(); ++k) vb[k] -= va[k];
    bool zero = true, haspos = false, hasneg = false;
    for (int c : vb) {
      if (c) zero = false;
      if (c > 0) haspos = true;
      if (c < 0) hasneg = true;
    }
    if (zero || (haspos && hasneg)) break;
    Root r;
    r.coeffs = vb;
    if (haspos) {
      if (rs_.index_of(r) < 0) break;
    } else {
      for (int& c : r.coeffs) c = -c;
      if (rs_.index_of(r) < 0) break;
    }
    ++p;
  }
  return p;
}

void ChevalleyData::jacobi_check(int a, int b, int c) const {
  const int l = rs_.rank();
  // Accumulates sum over cyclic permutations of [e_a,[e_b,e_c]] into a sparse
  // root part plus a Cartan part.
  std::vector<std::pair<int, long long>> rootpart;
  std::vector<long long> cart(l, 0);

  auto add_root = [&](int r, long long co) {
    if (co == 0) return;
    for (auto& e : rootpart)
      if (e.first == r) {
        e.second += co;
        return;
      }
    rootpart.push_back({r, co});
  };

  auto term = [&](int x, int y, int z) {
    int s = sum_[y][z];
    if (s == -1) return;
    if (s == -2) {
      // [e_y,e_z] = h_y (coroot), then [e_x, h_y] = -<x, y^vee> e_x.
      long long pair_xy = 0;
      for (int k = 0; k < l; ++k)
        pair_xy += (long long)coroot_[y][k] * pairing_[x][k];
      add_root(x, -pair_xy);
      return;
    }
    long long nyz = n_[y][z];
    int t = sum_[x][s];
    if (t == -1) return;
    if (t == -2) {
      for (int k = 0; k < l; ++k) cart[k] += nyz * coroot_[x][k];
      return;
    }
    add_root(t, nyz * n_[x][s]);
  };

  term(a, b, c);
  term(b, c, a);
  term(c, a, b);

  for (auto& e : rootpart)
    if (e.second != 0)
      throw std::logic_error("Jacobi failure at roots (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  for (long long v : cart)
    if (v != 0)
      throw std::logic_error("Jacobi failure (Cartan part) at roots (" +
                             std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
}

void ChevalleyData::verify([[maybe_unused]] bool parallel) const {
  const int R = 2 * P_;

  // Antisymmetry and |N| = p+1 on every pair.
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      if (sum_[a][b] < 0) continue;
      if (n_[a][b] != -n_[b][a])
        throw std::logic_error("N antisymmetry failure at (" + std::to_string(a) +
                               "," + std::to_string(b) + ")");
      int p = string_down(a, b);
      if (std::abs(n_[a][b]) != p + 1)
        throw std::logic_error("|N| != p+1 at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    }

  // Jacobi on every unordered root triple.
  std::string failure;
  bool failed = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
#endif
  for (int a = 0; a < R; ++a) {
    if (failed) continue;
    try {
      for (int b = a; b < R; ++b)
        for (int c = b; c < R; ++c) jacobi_check(a, b, c);
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        failure = e.what();
        failed = true;
      }
    }
  }
  if (failed) throw std::logic_error(failure);
}

ChevalleyData chevalley(const RootSystem& rs) { return ChevalleyData(rs); }

//------------------------------------------------------------------------------
// Compact real form
//------------------------------------------------------------------------------

std::string CompactLieAlgebra::Label::str() const {
  switch (kind) {
    case Cartan: return "t" + std::to_string(index + 1);
    case A: return "A" + std::to_string(index);
    default: return "B" + std::to_string(index);
  }
}

CompactLieAlgebra::Label CompactLieAlgebra::label(int idx) const {
  if (idx < rank_) return {Label::Cartan, idx};
  int a = (idx - rank_) / 2;
  return {(idx - rank_) % 2 == 0 ? Label::A : Label::B, a};
}

CompactLieAlgebra compact_form(const ChevalleyData& cd) {
  const RootSystem& rs = cd.root_system();
  const int l = rs.rank();
  const int P = cd.n_positive();

  CompactLieAlgebra L;
  L.token_ = rs.type_token();
  L.rank_ = l;
  L.P_ = P;
  L.dim_ = l + 2 * P;
  L.table_.assign((size_t)L.dim_ * L.dim_, {});
  L.norm2_.assign(L.dim_, Rat(0));

  // Killing form on the coroot basis: K_ij = sum over all roots of
  // <a, alpha_i^vee><a, alpha_j^vee>.
  std::vector<std::vector<Rat>> K(l, std::vector<Rat>(l, Rat(0)));
  for (int a = 0; a < 2 * P; ++a)
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        K[i][j] += Rat(cd.pairing(a, i)) * Rat(cd.pairing(a, j));

  // kappa(e_a, e_{-a}) by an exact sparse trace of ad e_a ad e_{-a}.
  std::vector<Rat> kap(P, Rat(0));
  for (int a = 0; a < P; ++a) {
    int na = cd.negate(a);
    Rat tr(0);
    // Cartan block: ad e_{-a} h_i = <a,i> e_{-a}; ad e_a e_{-a} = h_a.
    for (int i = 0; i < l; ++i)
      tr += Rat(cd.pairing(a, i)) * Rat(cd.coroot(a)[i]);
    // e_a itself: [e_{-a},e_a] = -h_a, [e_a,-h_a] = <a,a^vee> e_a = 2 e_a.
    Rat two(0);
    for (int i = 0; i < l; ++i)
      two += Rat(cd.coroot(a)[i]) * Rat(cd.pairing(a, i));
    tr += two;
    // Other root spaces.
    for (int b = 0; b < 2 * P; ++b) {
      if (b == a || b == na) continue;
      int s = cd.sum(na, b);
      if (s < 0) continue;
      tr += Rat(cd.n_const(na, b)) * Rat(cd.n_const(a, s));
    }
    kap[a] = tr;
    if (!(kap[a] > Rat(0))) throw std::logic_error("Killing form degenerate on root space");
  }

  // killing_scale c_g = kappa_a len2(a)/2, constant across roots; it also
  // ties the Cartan block to the Gram data: K_ij = c_g (alpha_i^vee,alpha_j^vee).
  Rat cg = kap[0] * cd.len2(0) / Rat(2);
  for (int a = 1; a < P; ++a)
    if (kap[a] * cd.len2(a) / Rat(2) != cg)
      throw std::logic_error("killing scale not constant across roots");
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      // (alpha_i^vee, alpha_j^vee) = 4 (alpha_i,alpha_j) / (len2_i len2_j)
      Rat covee = Rat(4) * rs.gram(i, j) / rs.gram(i, i) / rs.gram(j, j);
      if (K[i][j] != cg * covee)
        throw std::logic_error("Cartan Killing block inconsistent with Gram data");
    }
  L.killing_scale_ = cg;

  // Gram-Schmidt over the rationals on the Cartan block; T[j] are coordinates
  // of t_j over the coroot basis, norms n_j = T[j]^T K T[j].
  std::vector<std::vector<Rat>> T(l, std::vector<Rat>(l, Rat(0)));
  std::vector<Rat> tnorm(l);
  auto kdot = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat s(0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (!x[i].is_zero() && !y[j].is_zero()) s += x[i] * y[j] * K[i][j];
    return s;
  };
  for (int j = 0; j < l; ++j) {
    std::vector<Rat> v(l, Rat(0));
    v[j] = Rat(1);
    for (int k = 0; k < j; ++k) {
      Rat proj = kdot(v, T[k]) / tnorm[k];
      for (int i = 0; i < l; ++i) v[i] -= proj * T[k][i];
    }
    T[j] = v;
    tnorm[j] = kdot(v, v);
    if (!(tnorm[j] > Rat(0))) throw std::logic_error("Cartan Gram-Schmidt degenerate");
    L.norm2_[j] = tnorm[j];
  }

  for (int a = 0; a < P; ++a) {
    L.norm2_[L.u_index(a)] = Rat(2) * kap[a];
    L.norm2_[L.v_index(a)] = Rat(2) * kap[a];
  }

  auto put = [&](int u, int v, int w, const Rat& c) {
    if (c.is_zero()) return;
    L.table_[(size_t)u * L.dim_ + v].push_back({w, c});
  };
  auto close_antisym = [&](int u, int v) {
    for (const auto& t : L.table_[(size_t)u * L.dim_ + v])
      L.table_[(size_t)v * L.dim_ + u].push_back({t.w, -t.c});
  };

  // Root value on the orthogonalized Cartan: alpha(t_j) = sum_k T[j][k] <a,k>.
  auto root_on_t = [&](int a, int j) {
    Rat s(0);
    for (int k = 0; k < l; ++k)
      if (!T[j][k].is_zero()) s += T[j][k] * Rat(cd.pairing(a, k));
    return s;
  };
  // Expansion of i h_alpha over the t basis.
  auto ih_on_t = [&](int a) {
    std::vector<Rat> out(l);
    for (int j = 0; j < l; ++j) {
      Rat num(0);
      for (int i1 = 0; i1 < l; ++i1)
        for (int i2 = 0; i2 < l; ++i2)
          if (!T[j][i1].is_zero() && cd.coroot(a)[i2] != 0)
            num += T[j][i1] * Rat(cd.coroot(a)[i2]) * K[i1][i2];
      out[j] = num / tnorm[j];
    }
    return out;
  };

  for (int j = 0; j < l; ++j)
    for (int a = 0; a < P; ++a) {
      Rat av = root_on_t(a, j);
      put(j, L.u_index(a), L.v_index(a), av);
      put(j, L.v_index(a), L.u_index(a), -av);
      close_antisym(j, L.u_index(a));
      close_antisym(j, L.v_index(a));
    }

  for (int a = 0; a < P; ++a) {
    auto h = ih_on_t(a);
    for (int j = 0; j < l; ++j) put(L.u_index(a), L.v_index(a), j, Rat(2) * h[j]);
    close_antisym(L.u_index(a), L.v_index(a));
  }

  for (int a = 0; a < P; ++a)
    for (int b = a + 1; b < P; ++b) {
      int s = cd.sum(a, b);  // positive or -1
      int dsigned = cd.sum(a, cd.negate(b));
      int nab = (s >= 0) ? cd.n_const(a, b) : 0;
      int nmx = (dsigned >= 0 && dsigned != -2) ? cd.n_const(a, cd.negate(b)) : 0;
      int g = -1, sig = 0;  // |a-b| as positive index and the sign of a-b
      if (dsigned >= 0) {
        if (cd.is_positive(dsigned)) {
          g = dsigned;
          sig = +1;
        } else {
          g = cd.negate(dsigned);
          sig = -1;
        }
      }
      int ua = L.u_index(a), va = L.v_index(a), ub = L.u_index(b), vb = L.v_index(b);

      if (s >= 0) {
        put(ua, ub, L.u_index(s), Rat(nab));
        put(va, vb, L.u_index(s), Rat(-nab));
        put(ua, vb, L.v_index(s), Rat(nab));
        put(va, ub, L.v_index(s), Rat(nab));
      }
      if (g >= 0) {
        // second target: u_{|a-b|} with sign -sig * N(a,-b), v picks +N(a,-b)
        put(ua, ub, L.u_index(g), Rat(-sig * nmx));
        put(va, vb, L.u_index(g), Rat(-sig * nmx));
        put(ua, vb, L.v_index(g), Rat(nmx));
        put(va, ub, L.v_index(g), Rat(-nmx));
      }
      close_antisym(ua, ub);
      close_antisym(va, vb);
      close_antisym(ua, vb);
      close_antisym(va, ub);
    }

  return L;
}

Rat CompactLieAlgebra::coeff(int u, int v, int w) const {
  for (const auto& t : bracket(u, v))
    if (t.w == w) return t.c;
  return Rat(0);
}

double CompactLieAlgebra::structure_constant(int u, int v, int w) const {
  Rat c = coeff(u, v, w);
  if (c.is_zero()) return 0.0;
  double val = c.to_double() *
               std::sqrt(norm2_[w].to_double() /
                         (norm2_[u].to_double() * norm2_[v].to_double()));
  return val;
}

Rat CompactLieAlgebra::structure_constant_sq(int u, int v, int w) const {
  Rat c = coeff(u, v, w);
  return c * c * norm2_[w] / (norm2_[u] * norm2_[v]);
}

void CompactLieAlgebra::verify_ad_invariance() const {
  // B([x,y],w) = c * n_w for stored entries; invariance requires
  // c*n_w + coeff(x,w,y)*n_y = 0 for every entry, which covers all nonzero
  // cases of B([x,y],z) + B(y,[x,z]) by symmetry of the sweep.
  for (int x = 0; x < dim_; ++x)
    for (int y = 0; y < dim_; ++y)
      for (const auto& t : bracket(x, y)) {
        Rat lhs = t.c * norm2_[t.w];
        Rat rhs = coeff(x, t.w, y) * norm2_[y];
        if (lhs + rhs != Rat(0))
          throw std::logic_error("ad-invariance failure at (" + std::to_string(x) +
                                 "," + std::to_string(y) + "," + std::to_string(t.w) + ")");
      }
}

double CompactLieAlgebra::ad_trace(int u, int v) const {
  // tr(ad u ad v) over the real basis, floating point.
  double tr = 0;
  for (int b = 0; b < dim_; ++b) {
    for (const auto& t1 : bracket(v, b)) {
      // coefficient of b in [u, t1.w]
      for (const auto& t2 : bracket(u, t1.w))
        if (t2.w == b) tr += t1.c.to_double() * t2.c.to_double();
    }
  }
  return tr;
}

double CompactLieAlgebra::verify_orthonormality(double tol,
                                                [[maybe_unused]] bool parallel) const {
  double worst = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(max : worst) if (parallel)
#endif
  for (int u = 0; u < dim_; ++u) {
    for (int v = u; v < dim_; ++v) {
      double b = -ad_trace(u, v);
      double expect = (u == v) ? norm2_[u].to_double() : 0.0;
      double dev = std::abs(b - expect) /
                   std::sqrt(norm2_[u].to_double() * norm2_[v].to_double());
      if (dev > worst) worst = dev;
    }
  }
  if (worst > tol)
    throw std::logic_error("trace-form orthonormality failure, deviation " +
                           std::to_string(worst));
  return worst;
}

std::string CompactLieAlgebra::serialize() const {
  std::ostringstream os;
  os << "einflag-bracket-cache 1\n";
  os << "type " << token_ << "\n";
  os << "dim " << dim_ << " rank " << rank_ << " positive " << P_ << "\n";
  os << "killing-scale " << killing_scale_.str() << "\n";
  os << "norm2";
  for (const Rat& r : norm2_) os << " " << r.str();
  os << "\n";
  for (int u = 0; u < dim_; ++u)
    for (int v = 0; v < dim_; ++v) {
      const auto& cell = bracket(u, v);
      if (cell.empty()) continue;
      os << u << " " << v << ":";
      for (const auto& t : cell) os << " " << t.w << " " << t.c.str();
      os << "\n";
    }
  std::string body = os.str();
  std::ostringstream h;
  h << "hash " << fnv1a64(body) << "\n";
  return body + h.str();
}

CompactLieAlgebra CompactLieAlgebra::deserialize(const std::string& bytes) {
  size_t hash_pos = bytes.rfind("hash ");
  if (hash_pos == std::string::npos)
    throw std::runtime_error("bracket cache: missing hash");
  std::string body = bytes.substr(0, hash_pos);
  uint64_t expect = std::stoull(bytes.substr(hash_pos + 5));
  if (fnv1a64(body) != expect)
    throw std::runtime_error("bracket cache: content hash mismatch");

  std::istringstream is(body);
  std::string line;
  CompactLieAlgebra L;
  std::getline(is, line);
  if (line != "einflag-bracket-cache 1")
    throw std::runtime_error("bracket cache: bad header/version");
  std::string kw;
  is >> kw >> L.token_;
  is >> kw >> L.dim_ >> kw >> L.rank_ >> kw >> L.P_;
  is >> kw;
  std::string rat;
  is >> rat;
  L.killing_scale_ = Rat::parse(rat);
  is >> kw;
  L.norm2_.resize(L.dim_);
  for (int i = 0; i < L.dim_; ++i) {
    is >> rat;
    L.norm2_[i] = Rat::parse(rat);
  }
  L.table_.assign((size_t)L.dim_ * L.dim_, {});
  int u;
  while (is >> u) {
    char colon;
    int v;
    is >> v >> colon;
    std::getline(is, line);
    std::istringstream cell(line);
    int w;
    while (cell >> w >> rat) L.table_[(size_t)u * L.dim_ + v].push_back({w, Rat::parse(rat)});
  }
  return L;
}

bool CompactLieAlgebra::save_cache(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << serialize();
  return (bool)f;
}

std::optional<CompactLieAlgebra> CompactLieAlgebra::load_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return deserialize(ss.str());
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace einflag
