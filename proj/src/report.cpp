#include "einflag/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace einflag {

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_double9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string format_report(const RunReport& rep) {
  std::ostringstream os;
  os << "einflag-report 1\n";
  os << "space: " << rep.space << "\n";
  os << "isotropy: " << rep.isotropy << "\n";
  os << "modules: " << rep.dims.size() << "\n";
  os << "dims:";
  for (int d : rep.dims) os << " " << d;
  os << "\n";
  os << "dim-h: " << rep.dim_isotropy << "\n";
  os << "dim-g: " << rep.dim_g << "\n";
  os << "triples-source: " << rep.triples_source << "\n";
  for (const auto& [k, v] : rep.triples.entries())
    os << "triple {" << k[0] << "," << k[1] << "," << k[2] << "}: " << v.str() << "\n";
  os << "solver: seed=" << rep.config.seed << " starts=" << rep.config.starts
     << " newton-tol=" << fmt_double(rep.config.newton_tol)
     << " dedup=" << fmt_double(rep.config.dedup_radius) << "\n";

  const auto& cls = rep.classification;
  os << "solutions: " << cls.solutions.size() << "\n";
  for (size_t i = 0; i < cls.solutions.size(); ++i) {
    const auto& s = cls.solutions[i];
    os << "solution " << i + 1 << ":\n";
    os << "  x:";
    for (double xv : s.x) os << " " << fmt_double(xv);
    os << "\n";
    os << "  lambda: " << fmt_double(s.lambda) << "\n";
    os << "  lambda-spread: " << fmt_double(s.lambda_spread) << "\n";
    os << "  scalar-curvature: " << fmt_double(s.scalar) << "\n";
    os << "  volume: " << fmt_double(s.volume) << "\n";
    os << "  H: " << fmt_double(s.h_invariant) << "\n";
    os << "  residual: " << fmt_double(s.residual) << "\n";
    os << "  kahler: " << (s.is_kahler ? "yes" : "no") << "\n";
  }
  os << "counts: kahler=" << cls.n_kahler << " non-kahler=" << cls.n_nonkahler << "\n";
  os << "isometry-classes: " << cls.isometry_classes.size() << "\n";
  for (size_t c = 0; c < cls.isometry_classes.size(); ++c) {
    os << "class " << c + 1 << ":";
    for (int idx : cls.isometry_classes[c]) os << " " << idx + 1;
    os << "\n";
  }
  for (const auto& r : cls.rejected) os << "rejected: " << r << "\n";
  return os.str();
}

std::string format_solution_table(const EinsteinClassification& cls) {
  std::ostringstream os;
  for (size_t i = 0; i < cls.solutions.size(); ++i) {
    const auto& s = cls.solutions[i];
    os << "  (" << i + 1 << ") x = (";
    for (size_t k = 0; k < s.x.size(); ++k)
      os << (k ? ", " : "") << fmt_double9(s.x[k]);
    os << ")  lambda = " << fmt_double9(s.lambda) << "  H = " << fmt_double9(s.h_invariant)
       << (s.is_kahler ? "  [Kahler-Einstein]" : "") << "\n";
  }
  return os.str();
}

}  // namespace einflag
