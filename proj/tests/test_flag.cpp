#include "doctest.h"
#include "einflag/flag.hpp"
#include "testutil.hpp"

using namespace einflag;
using testutil::algebra_of;

TEST_CASE("flag: E8 painted at node 4 (case E decomposition)") {
  FlagSpace fs = paint(RootSystem::build("E8"), 4);
  CHECK(fs.n_modules() == 5);
  CHECK(fs.dims() == std::vector<int>{80, 60, 40, 20, 8});
  CHECK(fs.dim_isotropy() == 40);
  CHECK(fs.dim_g() == 248);
  CHECK(fs.isotropy_label() == "u(1) + su(4) + su(5)");
  // 208 + 40 = 248
  int total = fs.dim_isotropy();
  for (int k = 1; k <= 5; ++k) total += fs.dim_module(k);
  CHECK(total == 248);

  CHECK(fs.module_of(fs.root_system().highest_root()) == 5);
  Root alpha1{{1, 0, 0, 0, 0, 0, 0, 0}};
  CHECK(fs.module_of(alpha1) == FlagSpace::kIsotropy);
  Root not_a_root{{1, 1, 1, 1, 1, 1, 1, 2}};
  CHECK_THROWS_AS(fs.module_of(not_a_root), std::invalid_argument);
}

TEST_CASE("flag: E8 painted at node 5 (case F decomposition)") {
  FlagSpace fs = paint(RootSystem::build("E8"), 5);
  CHECK(fs.n_modules() == 6);
  CHECK(fs.dims() == std::vector<int>{60, 60, 40, 30, 12, 10});
  CHECK(fs.dim_isotropy() == 36);
  CHECK(fs.isotropy_label() == "u(1) + su(5) + su(3) + su(2)");
  CHECK(fs.module_of(fs.root_system().highest_root()) == 6);
}

TEST_CASE("flag: height-1 paintings are isotropy irreducible") {
  CHECK(paint(RootSystem::build("A2"), 1).n_modules() == 1);
  CHECK(paint(RootSystem::build("A5"), 3).n_modules() == 1);
  CHECK(paint(RootSystem::build("B3"), 1).n_modules() == 1);
  CHECK(paint(RootSystem::build("C3"), 3).n_modules() == 1);
}

TEST_CASE("flag: module dimensions are even and partition the complement") {
  for (auto [tok, node] : {std::pair<const char*, int>{"G2", 1}, {"G2", 2},
                           {"F4", 1}, {"F4", 2}, {"F4", 3}, {"F4", 4}}) {
    FlagSpace fs = paint(RootSystem::build(tok), node);
    int total = fs.dim_isotropy();
    for (int k = 1; k <= fs.n_modules(); ++k) {
      CHECK(fs.dim_module(k) % 2 == 0);
      CHECK(fs.dim_module(k) == 2 * (int)fs.module_roots(k).size());
      total += fs.dim_module(k);
    }
    CHECK(total == fs.dim_g());
  }
}

TEST_CASE("flag: G2 and F4 labels name the Table 1 spaces") {
  CHECK(paint(RootSystem::build("G2"), 1).isotropy_label() == "u(1) + su(2)");
  CHECK(paint(RootSystem::build("F4"), 1).isotropy_label() == "u(1) + sp(3)");
  CHECK(paint(RootSystem::build("F4"), 4).isotropy_label() == "u(1) + so(7)");
  CHECK(paint(RootSystem::build("E8"), 1).isotropy_label() == "u(1) + e7");
  CHECK(paint(RootSystem::build("E8"), 7).isotropy_label() == "u(1) + so(14)");
  CHECK(paint(RootSystem::build("E8"), 3).isotropy_label() == "u(1) + su(3) + so(10)");
}

TEST_CASE("flag: Kaehler-Einstein metric vector is (1..N)") {
  FlagSpace fs = paint(RootSystem::build("E8"), 4);
  auto ke = kahler_einstein_metric(fs);
  REQUIRE(ke.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(ke[k] == Rat(k + 1));
  CHECK(kahler_einstein_metric(paint(RootSystem::build("A2"), 1)) ==
        std::vector<Rat>{Rat(1)});
}

TEST_CASE("flag: painted node must be in range") {
  RootSystem rs = RootSystem::build("F4");
  CHECK_THROWS_AS(paint(rs, 0), std::out_of_range);
  CHECK_THROWS_AS(paint(rs, 5), std::out_of_range);
}

TEST_CASE("flag: bracket support obeys the module selection rule") {
  // [m_i, m_j] lies in m_{i+j} + m_{|i-j|} (+ h when i = j), and
  // [h, m_i] stays in m_i; checked on the full bracket table.
  for (auto [tok, node] : {std::pair<const char*, int>{"G2", 2}, {"F4", 1},
                           {"E8", 4}, {"E8", 5}}) {
    const CompactLieAlgebra& L = algebra_of(tok);
    FlagSpace fs = paint(RootSystem::build(tok), node);
    const int rank = L.rank();

    auto module_of_basis = [&](int w) {
      if (w < rank) return 0;
      return fs.module_of_index((w - rank) / 2);
    };
    for (int x = 0; x < L.dim(); ++x) {
      int i = module_of_basis(x);
      for (int y = 0; y < L.dim(); ++y) {
        int j = module_of_basis(y);
        for (const auto& t : L.bracket(x, y)) {
          int k = module_of_basis(t.w);
          if (i == 0 && j == 0) CHECK(k == 0);
          else if (i == 0) CHECK(k == j);
          else if (j == 0) CHECK(k == i);
          else if (i == j) CHECK((k == 0 || k == i + j));
          else CHECK((k == i + j || k == std::abs(i - j)));
        }
      }
    }
  }
}
