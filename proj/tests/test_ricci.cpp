#include <cmath>

#include "doctest.h"
#include "einflag/ricci.hpp"
#include "einflag/triples.hpp"
#include "testutil.hpp"

using namespace einflag;
using testutil::TestRng;

TEST_CASE("ricci: isotropy irreducible case reduces to 1/(2x)") {
  TripleTable t(1);
  std::vector<int> dims{12};
  auto r = ricci_components<Rat>(t, dims, {Rat(1)});
  CHECK(r == std::vector<Rat>{Rat(1, 2)});
  CHECK(scalar_curvature<Rat>(dims, r) == Rat(6));

  auto r2 = ricci_components<Rat>(t, dims, {Rat(3)});
  CHECK(r2 == std::vector<Rat>{Rat(1, 6)});
}

TEST_CASE("ricci: the KE metric is Einstein for case E with value 11/60") {
  TripleTable t = triples_case_E();
  std::vector<int> dims{80, 60, 40, 20, 8};
  std::vector<Rat> ke{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)};
  auto r = ricci_components<Rat>(t, dims, ke);
  for (const Rat& rk : r) CHECK(rk == Rat(11, 60));
  // scalar curvature = lambda * d
  CHECK(scalar_curvature<Rat>(dims, r) == Rat(11, 60) * Rat(208));
}

TEST_CASE("ricci: the KE metric is Einstein for case F with value 3/20") {
  TripleTable t = triples_case_F();
  std::vector<int> dims{60, 60, 40, 30, 12, 10};
  std::vector<Rat> ke{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
  auto r = ricci_components<Rat>(t, dims, ke);
  for (const Rat& rk : r) CHECK(rk == Rat(3, 20));
}

TEST_CASE("ricci: paper solution (2) of case E is Einstein with its lambda") {
  TripleTable t = triples_case_E();
  std::vector<int> dims{80, 60, 40, 20, 8};
  std::vector<double> x{1.0, 1.0373227, 1.0471761, 1.0308150, 0.29861996};
  auto r = ricci_components<double>(t, dims, x);
  for (double rk : r) CHECK(rk == doctest::Approx(0.33727144).epsilon(1e-6));
}

TEST_CASE("ricci: nonpositive metrics are rejected") {
  TripleTable t = triples_case_E();
  std::vector<int> dims{80, 60, 40, 20, 8};
  std::vector<double> x{1.0, -1.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(ricci_components<double>(t, dims, x), std::domain_error);
}

TEST_CASE("ricci: scaling covariance r(t x) = r(x)/t over seeded draws") {
  TripleTable t = triples_case_E();
  std::vector<int> dims{80, 60, 40, 20, 8};
  TestRng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = rng.metric(5);
    double scale = rng.uniform(0.3, 2.5);
    auto xs = x;
    for (double& v : xs) v *= scale;
    auto r = ricci_components<double>(t, dims, x);
    auto rs = ricci_components<double>(t, dims, xs);
    for (int k = 0; k < 5; ++k)
      CHECK(rs[k] * scale == doctest::Approx(r[k]).epsilon(1e-9));
  }
  // exact version at a rational point
  std::vector<Rat> xr{Rat(1), Rat(3, 2), Rat(2, 3), Rat(5, 4), Rat(7, 3)};
  auto r1 = ricci_components<Rat>(t, dims, xr);
  for (Rat& v : xr) v *= Rat(2);
  auto r2 = ricci_components<Rat>(t, dims, xr);
  for (int k = 0; k < 5; ++k) CHECK(r2[k] * Rat(2) == r1[k]);
}

TEST_CASE("ricci: scalar curvature scales as S -> S/t") {
  TripleTable t = triples_case_F();
  std::vector<int> dims{60, 60, 40, 30, 12, 10};
  TestRng rng(12);
  auto x = rng.metric(6);
  auto xs = x;
  for (double& v : xs) v *= 2.0;
  double s1 = scalar_curvature<double>(dims, ricci_components<double>(t, dims, x));
  double s2 = scalar_curvature<double>(dims, ricci_components<double>(t, dims, xs));
  CHECK(s2 * 2.0 == doctest::Approx(s1).epsilon(1e-9));
}

TEST_CASE("ricci: submersion identities hold for case E") {
  TripleTable t = triples_case_E();
  std::vector<int> dims{80, 60, 40, 20, 8};
  auto rep = verify_submersion_identities(t, dims, SubmersionCase::E, {1, 1, 1});
  CHECK(rep.pass);
  TestRng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = rng.metric(3, 0.3, 2.5);
    auto r = verify_submersion_identities(t, dims, SubmersionCase::E, p);
    CHECK(r.pass);
    CHECK(r.max_dev < 1e-10);
  }
}

TEST_CASE("ricci: submersion identities hold for case F") {
  TripleTable t = triples_case_F();
  std::vector<int> dims{60, 60, 40, 30, 12, 10};
  auto rep = verify_submersion_identities(t, dims, SubmersionCase::F, {1, 1, 1, 1});
  CHECK(rep.pass);
  TestRng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = rng.metric(4, 0.3, 2.5);
    auto r = verify_submersion_identities(t, dims, SubmersionCase::F, p);
    CHECK(r.pass);
    CHECK(r.max_dev < 1e-10);
  }
}

TEST_CASE("ricci: a wrong triple table breaks the submersion identities") {
  TripleTable t = triples_case_E();
  t.set(1, 1, 2, Rat(13));  // perturb [2;11]
  std::vector<int> dims{80, 60, 40, 20, 8};
  bool any_fail = false;
  TestRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = rng.metric(3, 0.3, 2.5);
    if (!verify_submersion_identities(t, dims, SubmersionCase::E, p).pass)
      any_fail = true;
  }
  CHECK(any_fail);
}
