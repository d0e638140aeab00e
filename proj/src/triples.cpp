#include "einflag/triples.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "einflag/linalg.hpp"
#include "einflag/ricci.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace einflag {

bool TripleTable::selection_rule_ok() const {
  for (const auto& [k, v] : vals_) {
    if (v.is_zero()) continue;
    // canonical i <= j <= k: allowed iff k = i + j
    if (k[2] != k[0] + k[1]) return false;
  }
  return true;
}

std::string TripleTable::serialize() const {
  std::ostringstream os;
  for (const auto& [k, v] : vals_)
    os << "{" << k[0] << "," << k[1] << "," << k[2] << "}: " << v.str() << "\n";
  return os.str();
}

namespace {

// Ordered accumulation c[i][j][k] = [k;ij]; every role assignment is computed
// so that full symmetry can be asserted exactly.
std::vector<Rat> oracle_ordered(const FlagSpace& fs, const CompactLieAlgebra& L,
                                [[maybe_unused]] bool parallel) {
  const int N = fs.n_modules();
  const int rank = L.rank();

  // Flat list of (basis index, module) over m = m_1 + ... + m_N.
  std::vector<int> basis, basis_mod;
  for (int k = 1; k <= N; ++k)
    for (int r : fs.module_roots(k)) {
      basis.push_back(L.u_index(r));
      basis_mod.push_back(k);
      basis.push_back(L.v_index(r));
      basis_mod.push_back(k);
    }
  const int M = (int)basis.size();

  auto module_of_basis = [&](int w) -> int {
    if (w < rank) return 0;
    return fs.module_of_index((w - rank) / 2);
  };

  const int NN = N + 1;
  std::vector<Rat> acc((size_t)NN * NN * NN, Rat(0));

  int nthreads = 1;
#ifdef _OPENMP
  if (parallel) nthreads = omp_get_max_threads();
#endif
  std::vector<std::vector<Rat>> local(nthreads,
                                      std::vector<Rat>((size_t)NN * NN * NN, Rat(0)));

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int xi = 0; xi < M; ++xi) {
    int tid = 0;
#ifdef _OPENMP
    if (parallel) tid = omp_get_thread_num();
#endif
    auto& out = local[tid];
    const int i = basis_mod[xi];
    for (int yi = 0; yi < M; ++yi) {
      const int j = basis_mod[yi];
      for (const auto& term : L.bracket(basis[xi], basis[yi])) {
        int k = module_of_basis(term.w);
        if (k == 0) continue;
        Rat sq = term.c * term.c * L.norm2(term.w) /
                 (L.norm2(basis[xi]) * L.norm2(basis[yi]));
        out[((size_t)i * NN + j) * NN + k] += sq;
      }
    }
  }
  for (int t = 0; t < nthreads; ++t)
    for (size_t n = 0; n < acc.size(); ++n) acc[n] += local[t][n];
  return acc;
}

TripleTable oracle_impl(const FlagSpace& fs, const CompactLieAlgebra& L,
                        bool parallel) {
  if (fs.root_system().type_token() != L.type_token())
    throw std::invalid_argument("oracle: algebra/flag type mismatch");
  const int N = fs.n_modules();
  const int NN = N + 1;
  auto acc = oracle_ordered(fs, L, parallel);
  auto at = [&](int i, int j, int k) -> const Rat& {
    return acc[((size_t)i * NN + j) * NN + k];
  };

  // Full symmetry of [k;ij] under every permutation of (i,j,k).
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k) {
        const Rat& v = at(i, j, k);
        if (at(j, i, k) != v || at(k, j, i) != v || at(i, k, j) != v)
          throw std::logic_error("oracle: triple symmetry violation at {" +
                                 std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + "}");
      }

  TripleTable t(N);
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j)
      for (int k = j; k <= N; ++k)
        if (!at(i, j, k).is_zero()) t.set(i, j, k, at(i, j, k));
  return t;
}

// Linear coefficients of the Einstein equalities at the KE metric (1..N):
// each unknown multiset contributes linearly to r_k, so the rows of the
// system r_k - r_{k+1} = 0 are recovered from indicator tables.
struct KeSystem {
  std::vector<std::array<int, 3>> unknowns;
  std::vector<std::vector<Rat>> rows;  // (N-1) x unknowns
  std::vector<Rat> rhs;
};

KeSystem ke_linear_system(const std::vector<int>& dims) {
  const int N = (int)dims.size();
  KeSystem sys;
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j)
      if (i + j <= N) sys.unknowns.push_back({i, j, i + j});

  std::vector<Rat> ke(N);
  for (int k = 1; k <= N; ++k) ke[k - 1] = Rat(k);

  TripleTable empty(N);
  auto r0 = ricci_components<Rat>(empty, dims, ke);

  std::vector<std::vector<Rat>> coef(sys.unknowns.size());
  for (size_t u = 0; u < sys.unknowns.size(); ++u) {
    TripleTable ind(N);
    ind.set(sys.unknowns[u][0], sys.unknowns[u][1], sys.unknowns[u][2], Rat(1));
    auto r = ricci_components<Rat>(ind, dims, ke);
    coef[u].resize(N);
    for (int k = 0; k < N; ++k) coef[u][k] = r[k] - r0[k];
  }

  for (int k = 0; k + 1 < N; ++k) {
    std::vector<Rat> row(sys.unknowns.size());
    for (size_t u = 0; u < sys.unknowns.size(); ++u)
      row[u] = coef[u][k] - coef[u][k + 1];
    sys.rows.push_back(row);
    sys.rhs.push_back(r0[k + 1] - r0[k]);
  }
  return sys;
}

TripleTable solve_triple_system(const std::vector<int>& dims,
                                const std::vector<std::vector<Rat>>& extra_rows,
                                const std::vector<Rat>& extra_rhs) {
  KeSystem sys = ke_linear_system(dims);
  auto a = sys.rows;
  auto b = sys.rhs;
  for (size_t e = 0; e < extra_rows.size(); ++e) {
    a.push_back(extra_rows[e]);
    b.push_back(extra_rhs[e]);
  }
  if (a.size() != sys.unknowns.size())
    throw std::logic_error("triple system is not square");
  auto sol = solve_linear_exact(a, b);
  TripleTable t((int)dims.size());
  for (size_t u = 0; u < sys.unknowns.size(); ++u)
    t.set(sys.unknowns[u][0], sys.unknowns[u][1], sys.unknowns[u][2], sol[u]);
  return t;
}

// Index of a multiset in the unknown list of ke_linear_system.
size_t unknown_slot(const std::vector<std::array<int, 3>>& unknowns, int i, int j,
                    int k) {
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  for (size_t u = 0; u < unknowns.size(); ++u)
    if (unknowns[u] == key) return u;
  throw std::logic_error("unknown multiset not in system");
}

}  // namespace

TripleTable triples_oracle(const FlagSpace& fs, const CompactLieAlgebra& L) {
  return oracle_impl(fs, L, true);
}

TripleTable triples_oracle_serial(const FlagSpace& fs, const CompactLieAlgebra& L) {
  return oracle_impl(fs, L, false);
}

TripleTable triples_case_E() {
  // E8 painted at node 4: dims (80,60,40,20,8).  The submersion over
  // E8/SU(5)xSU(5) (base dims 100,100) forces [2;11] = 3[4;13] and
  // [3;12] = 2[4;22]; together with the four KE equalities the six triples
  // are determined.
  std::vector<int> dims{80, 60, 40, 20, 8};
  KeSystem probe = ke_linear_system(dims);
  std::vector<Rat> row1(probe.unknowns.size(), Rat(0));
  row1[unknown_slot(probe.unknowns, 1, 1, 2)] = Rat(1);
  row1[unknown_slot(probe.unknowns, 1, 3, 4)] = Rat(-3);
  std::vector<Rat> row2(probe.unknowns.size(), Rat(0));
  row2[unknown_slot(probe.unknowns, 1, 2, 3)] = Rat(1);
  row2[unknown_slot(probe.unknowns, 2, 2, 4)] = Rat(-2);
  return solve_triple_system(dims, {row1, row2}, {Rat(0), Rat(0)});
}

TripleTable triples_case_F() {
  // E8 painted at node 5: dims (60,60,40,30,12,10).  The submersion over
  // E8/SU(6)xSU(2)xSU(3) (base dims 72,90,40) forces [2;11] = 4[5;14],
  // [4;13] = 2[5;23], [3;12] = 3[5;23]; the twistor fiber computation pins
  // [4;22], closing the system.
  std::vector<int> dims{60, 60, 40, 30, 12, 10};
  KeSystem probe = ke_linear_system(dims);
  auto zero = std::vector<Rat>(probe.unknowns.size(), Rat(0));

  auto row1 = zero;
  row1[unknown_slot(probe.unknowns, 1, 1, 2)] = Rat(1);
  row1[unknown_slot(probe.unknowns, 1, 4, 5)] = Rat(-4);
  auto row2 = zero;
  row2[unknown_slot(probe.unknowns, 1, 3, 4)] = Rat(1);
  row2[unknown_slot(probe.unknowns, 2, 3, 5)] = Rat(-2);
  auto row3 = zero;
  row3[unknown_slot(probe.unknowns, 1, 2, 3)] = Rat(1);
  row3[unknown_slot(probe.unknowns, 2, 3, 5)] = Rat(-3);
  auto row4 = zero;
  row4[unknown_slot(probe.unknowns, 2, 2, 4)] = Rat(1);

  auto fib = fiber_triples_e7();
  Rat c = twistor_rescale_e7_e8();
  TripleTable t = solve_triple_system(dims, {row1, row2, row3, row4},
                                      {Rat(0), Rat(0), Rat(0), c * fib.first});
  if (t.get(2, 4, 6) != c * fib.second)
    throw std::logic_error("case F: [6;24] disagrees with the rescaled fiber value");
  return t;
}

std::pair<Rat, Rat> fiber_triples_e7() {
  // Fiber E7/U(1)xSU(3)xSU(5), dims (60,30,10), KE metric (1,2,3); the two
  // unknown triples solve {R1 - R2 = 0, R2 - R3 = 0}.
  std::vector<int> dims{60, 30, 10};
  KeSystem sys = ke_linear_system(dims);
  if (sys.unknowns.size() != 2)
    throw std::logic_error("fiber system should have two unknowns");
  auto sol = solve_linear_exact(sys.rows, sys.rhs);
  size_t u211 = unknown_slot(sys.unknowns, 1, 1, 2);
  size_t u312 = unknown_slot(sys.unknowns, 1, 2, 3);
  return {sol[u211], sol[u312]};
}

AgreementReport assert_agreement(const TripleTable& a, const TripleTable& b,
                                 double eps) {
  AgreementReport rep;
  std::ostringstream os;
  if (a.n_modules() != b.n_modules()) {
    rep.pass = false;
    os << "module counts differ: " << a.n_modules() << " vs " << b.n_modules() << "\n";
    rep.diff = os.str();
    return rep;
  }
  auto keys = a.entries();
  for (const auto& [k, v] : b.entries())
    if (!keys.count(k)) keys[k] = Rat(0);
  for (const auto& [k, unused] : keys) {
    Rat va = a.get(k[0], k[1], k[2]), vb = b.get(k[0], k[1], k[2]);
    bool ok = (eps > 0) ? std::abs(va.to_double() - vb.to_double()) <= eps : va == vb;
    if (!ok) {
      rep.pass = false;
      os << "{" << k[0] << "," << k[1] << "," << k[2] << "}: " << va.str() << " vs "
         << vb.str() << "\n";
    }
  }
  rep.diff = os.str();
  return rep;
}

}  // namespace einflag
