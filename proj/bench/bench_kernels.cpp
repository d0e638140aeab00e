// Compares the OpenMP kernels against their serial references on the E8
// workload: the verification sweeps, the triples oracle, and the multistart
// Einstein solver.  Results must agree exactly; only the wall time differs.
#include <chrono>
#include <iostream>

#include "einflag/einstein.hpp"
#include "einflag/flag.hpp"
#include "einflag/liealg.hpp"
#include "einflag/report.hpp"
#include "einflag/triples.hpp"

using namespace einflag;
using clock_type = std::chrono::steady_clock;

namespace {

double run(const char* name, auto&& fn) {
  auto t0 = clock_type::now();
  fn();
  double s = std::chrono::duration<double>(clock_type::now() - t0).count();
  std::cout << "  " << name << ": " << fmt_double9(s) << " s\n";
  return s;
}

}  // namespace

int main() {
  std::cout << "building E8 (includes the exact Chevalley consistency sweep)\n";
  auto t0 = clock_type::now();
  RootSystem rs = RootSystem::build("E8");
  ChevalleyData cd(rs);
  CompactLieAlgebra L = compact_form(cd);
  std::cout << "  " << fmt_double9(std::chrono::duration<double>(clock_type::now() - t0).count())
            << " s\n";

  std::cout << "chevalley verify (Jacobi sweep over all root triples)\n";
  double sj = run("serial ", [&] { cd.verify(false); });
  double pj = run("openmp ", [&] { cd.verify(true); });
  std::cout << "  speedup " << fmt_double9(sj / pj) << "x\n";

  std::cout << "trace-form orthonormality sweep (" << L.dim() << "^2 pairs)\n";
  double dev_s = 0, dev_p = 0;
  double so = run("serial ", [&] { dev_s = L.verify_orthonormality(1e-10, false); });
  double po = run("openmp ", [&] { dev_p = L.verify_orthonormality(1e-10, true); });
  std::cout << "  speedup " << fmt_double9(so / po) << "x, max deviation "
            << fmt_double9(dev_s) << (dev_s == dev_p ? " (identical)" : " (DIFFERS!)")
            << "\n";

  FlagSpace fs = paint(rs, 4);
  TripleTable ts(1), tp(1);
  std::cout << "triples oracle (E8 node 4)\n";
  double st = run("serial ", [&] { ts = triples_oracle_serial(fs, L); });
  double pt = run("openmp ", [&] { tp = triples_oracle(fs, L); });
  std::cout << "  speedup " << fmt_double9(st / pt) << "x, tables "
            << (ts == tp ? "identical" : "DIFFER!") << "\n";

  PolySystem ps = build_system(tp, fs.dims());
  SolverConfig cfg;
  std::vector<std::vector<double>> sol_s, sol_p;
  std::cout << "multistart Newton solve (" << cfg.starts << " starts)\n";
  double ss = run("serial ", [&] { sol_s = solve_positive_serial(ps, cfg); });
  double sp = run("openmp ", [&] { sol_p = solve_positive(ps, cfg); });
  std::cout << "  speedup " << fmt_double9(ss / sp) << "x, solution lists "
            << (sol_s == sol_p ? "identical" : "DIFFER!") << " (" << sol_p.size()
            << " solutions)\n";

  bool ok = ts == tp && sol_s == sol_p && dev_s == dev_p;
  return ok ? 0 : 1;
}
