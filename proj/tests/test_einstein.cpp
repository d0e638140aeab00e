#include <cmath>

#include "doctest.h"
#include "einflag/einstein.hpp"
#include "einflag/report.hpp"
#include "einflag/ricci.hpp"
#include "testutil.hpp"

using namespace einflag;
using testutil::TestRng;
using testutil::algebra_of;

namespace {

const std::vector<int> kDimsE{80, 60, 40, 20, 8};
const std::vector<int> kDimsF{60, 60, 40, 30, 12, 10};

}  // namespace

TEST_CASE("einstein: case E system vanishes exactly at the KE point") {
  PolySystem ps = build_system(triples_case_E(), kDimsE);
  CHECK(ps.eqs.size() == 4);
  std::vector<Rat> ke{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)};
  for (const Poly& f : ps.eqs) CHECK(f.eval_exact(ke).is_zero());
}

TEST_CASE("einstein: case F system vanishes exactly at the KE point") {
  PolySystem ps = build_system(triples_case_F(), kDimsF);
  CHECK(ps.eqs.size() == 5);
  std::vector<Rat> ke{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
  for (const Poly& f : ps.eqs) CHECK(f.eval_exact(ke).is_zero());
}

TEST_CASE("einstein: polynomials equal the Ricci differences up to the positive factor") {
  for (bool caseE : {true, false}) {
    TripleTable t = caseE ? triples_case_E() : triples_case_F();
    const auto& dims = caseE ? kDimsE : kDimsF;
    PolySystem ps = build_system(t, dims);
    TestRng rng(caseE ? 31 : 32);
    for (int trial = 0; trial < 100; ++trial) {
      auto x = rng.metric(t.n_modules(), 0.3, 2.5);
      x[0] = 1.0;
      auto r = ricci_components<double>(t, dims, x);
      for (int i = 0; i < ps.n_vars(); ++i) {
        double lhs = ps.eqs[i].eval(x);
        double rhs = (r[i] - r[i + 1]) * system_positive_factor(ps, i, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        CHECK(system_positive_factor(ps, i, x) > 0);
      }
    }
  }
}

TEST_CASE("einstein: case E has exactly six positive solutions") {
  PolySystem ps = build_system(triples_case_E(), kDimsE);
  SolverConfig cfg;
  auto sols = solve_positive(ps, cfg);
  REQUIRE(sols.size() == 6);

  // the paper's five non-Kaehler metrics plus the KE point (1,2,3,4,5)
  std::vector<std::vector<double>> expected{
      {1, 1.0213742, 0.54600746, 1.0535169, 1.1087938},
      {1, 1.0373227, 1.0471761, 1.0308150, 0.29861996},
      {1, 0.59978523, 1.0837088, 0.90182312, 1.2229122},
      {1, 0.72071315, 1.0254588, 0.47523403, 1.0709463},
      {1, 1.0829413, 1.0408835, 0.53261506, 1.1035115},
      {1, 2, 3, 4, 5}};
  for (const auto& e : expected) {
    int hits = 0;
    for (const auto& s : sols) {
      double dev = 0;
      for (int k = 0; k < 5; ++k) dev = std::max(dev, std::fabs(s[k] - e[k]));
      if (dev < 1e-5) ++hits;
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("einstein: solver is deterministic and the serial kernel agrees") {
  PolySystem ps = build_system(triples_case_E(), kDimsE);
  SolverConfig cfg;
  cfg.seed = 7;
  auto a = solve_positive(ps, cfg);
  auto b = solve_positive(ps, cfg);
  CHECK(a == b);
  auto c = solve_positive_serial(ps, cfg);
  CHECK(a == c);

  SolverConfig other = cfg;
  other.seed = 8;
  auto d = solve_positive(ps, other);
  REQUIRE(d.size() == a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < a[i].size(); ++k)
      CHECK(a[i][k] == doctest::Approx(d[i][k]).epsilon(1e-8));
}

TEST_CASE("einstein: single-summand spaces classify to the Killing metric") {
  TripleTable t(1);
  auto cls = classify_dims({12}, t, SolverConfig{});
  REQUIRE(cls.solutions.size() == 1);
  CHECK(cls.solutions[0].x == std::vector<double>{1.0});
  CHECK(cls.solutions[0].is_kahler);
  CHECK(cls.n_kahler == 1);
  CHECK(cls.isometry_classes.size() == 1);
}

TEST_CASE("einstein: two-summand class B spaces give both solutions") {
  // G2 with the long root painted: [2;11] = 1, dims (8,2); the Einstein
  // quadratic 3 x^2 - 8 x + 4 has roots 2 (KE) and 2/3.
  FlagSpace fs = paint(RootSystem::build("G2"), 1);
  TripleTable t = triples_oracle(fs, algebra_of("G2"));
  auto cls = classify(fs, t, SolverConfig{});
  REQUIRE(cls.solutions.size() == 2);
  CHECK(cls.solutions[0].x[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(cls.solutions[1].x[1] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(cls.n_kahler == 1);
  CHECK(cls.n_nonkahler == 1);
  CHECK(cls.isometry_classes.size() == 2);

  // full pipeline on F4/SO(7)xU(1), the other Table 1 class B sample
  FlagSpace f4 = paint(RootSystem::build("F4"), 4);
  auto cls_f4 = classify(f4, triples_oracle(f4, algebra_of("F4")), SolverConfig{});
  CHECK(cls_f4.solutions.size() == 2);
}

TEST_CASE("einstein: classification decorations for case E") {
  FlagSpace fs = paint(RootSystem::build("E8"), 4);
  auto cls = classify_dims(kDimsE, triples_case_E(), SolverConfig{});
  REQUIRE(cls.solutions.size() == 6);
  CHECK(cls.n_kahler == 1);
  CHECK(cls.n_nonkahler == 5);
  CHECK(cls.rejected.empty());

  int ke_idx = -1;
  for (size_t i = 0; i < cls.solutions.size(); ++i)
    if (cls.solutions[i].is_kahler) ke_idx = (int)i;
  REQUIRE(ke_idx >= 0);
  const auto& ke = cls.solutions[ke_idx];
  CHECK(ke.lambda == doctest::Approx(11.0 / 60.0).epsilon(1e-12));
  CHECK(ke.scalar == doctest::Approx(208.0 * 11.0 / 60.0).epsilon(1e-12));

  for (const auto& s : cls.solutions) {
    CHECK(s.lambda_spread < 1e-8);
    CHECK(s.residual < SolverConfig{}.newton_tol);
    // scaling: lambda(t x) = lambda(x)/t and H(t x) = H(x)
    for (double scale : {0.5, 2.0}) {
      auto xs = s.x;
      for (double& v : xs) v *= scale;
      auto r = ricci_components<double>(triples_case_E(), kDimsE, xs);
      double lam = 0;
      for (int k = 0; k < 5; ++k) lam += kDimsE[k] * r[k];
      lam /= 208.0;
      CHECK(lam * scale == doctest::Approx(s.lambda).epsilon(1e-9));
      double logv = 0, S = 0;
      for (int k = 0; k < 5; ++k) {
        logv += kDimsE[k] * std::log(xs[k]);
        S += kDimsE[k] * r[k];
      }
      double H = std::exp(logv / 208.0) * S;
      CHECK(H == doctest::Approx(s.h_invariant).epsilon(1e-9));
    }
  }
}

TEST_CASE("einstein: H separates the case E solutions into 5 + 1 classes") {
  auto cls = classify_dims(kDimsE, triples_case_E(), SolverConfig{});
  CHECK(cls.isometry_classes.size() == 6);
  for (const auto& c : cls.isometry_classes) CHECK(c.size() == 1);
}

TEST_CASE("einstein: H invariance over seeded random metrics") {
  TripleTable t = triples_case_F();
  TestRng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = rng.metric(6, 0.3, 2.5);
    double scale = rng.uniform(0.4, 2.2);
    auto h_of = [&](const std::vector<double>& xx) {
      auto r = ricci_components<double>(t, kDimsF, xx);
      double logv = 0, S = 0, d = 0;
      for (int k = 0; k < 6; ++k) {
        logv += kDimsF[k] * std::log(xx[k]);
        S += kDimsF[k] * r[k];
        d += kDimsF[k];
      }
      return std::exp(logv / d) * S;
    };
    auto xs = x;
    for (double& v : xs) v *= scale;
    CHECK(h_of(xs) == doctest::Approx(h_of(x)).epsilon(1e-9));
  }
}

TEST_CASE("einstein: report formatting is stable and lossless") {
  CHECK(fmt_double(0.1) == "0.1");
  CHECK(fmt_double(1.0 / 3.0) == fmt_double(1.0 / 3.0));
  double v = 0.33727144;
  CHECK(std::stod(fmt_double(v)) == v);
  CHECK(fmt_double9(68.7023456789) == std::string("68.7023457"));
}
