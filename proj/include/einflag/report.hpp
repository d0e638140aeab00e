#ifndef EINFLAG_REPORT_HPP
#define EINFLAG_REPORT_HPP

#include <string>
#include <vector>

#include "einflag/einstein.hpp"
#include "einflag/flag.hpp"
#include "einflag/triples.hpp"

namespace einflag {

/// Shortest round-trip decimal form (lossless) for report files.
std::string fmt_double(double v);
/// 9 significant digits for console tables.
std::string fmt_double9(double v);

struct RunReport {
  std::string space;            // e.g. "E8 node 4"
  std::string isotropy;         // "u(1) + su(4) + su(5)"
  std::vector<int> dims;
  int dim_isotropy = 0;
  int dim_g = 0;
  std::string triples_source;   // oracle | paper | both
  TripleTable triples{0};
  SolverConfig config;
  EinsteinClassification classification;
};

/// Canonical report text: pure function of the inputs, no timestamps.
std::string format_report(const RunReport& rep);

/// Human-readable solution table for the console.
std::string format_solution_table(const EinsteinClassification& cls);

}  // namespace einflag

#endif
