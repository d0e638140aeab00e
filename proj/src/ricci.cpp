#include "einflag/ricci.hpp"

#include <cmath>

namespace einflag {

SubmersionReport verify_submersion_identities(const TripleTable& t,
                                              const std::vector<int>& dims,
                                              SubmersionCase which,
                                              const std::vector<double>& params,
                                              double tol) {
  SubmersionReport rep;
  auto record = [&](double dev) {
    rep.max_dev = std::max(rep.max_dev, std::fabs(dev));
  };

  if (which == SubmersionCase::E) {
    if (params.size() != 3) throw std::invalid_argument("case E expects (y1,y2,z1)");
    double y1 = params[0], y2 = params[1], z1 = params[2];
    std::vector<double> x{y1, y2, y2, y1, z1};
    auto r = ricci_components<double>(t, dims, x);
    double c14 = t.get(1, 4, 5).to_double();
    double c23 = t.get(2, 3, 5).to_double();
    record(r[0] - r[3] + z1 / (y1 * y1) * c14 * (0.5 / dims[0] - 0.5 / dims[3]));
    record(r[1] - r[2] + z1 / (y2 * y2) * c23 * (0.5 / dims[1] - 0.5 / dims[2]));
  } else {
    if (params.size() != 4) throw std::invalid_argument("case F expects (y1,y2,y3,z1)");
    double y1 = params[0], y2 = params[1], y3 = params[2], z1 = params[3];
    std::vector<double> x{y1, y2, y3, y2, y1, z1};
    auto r = ricci_components<double>(t, dims, x);
    double c15 = t.get(1, 5, 6).to_double();
    double c24 = t.get(2, 4, 6).to_double();
    record(r[0] - r[4] + z1 / (y1 * y1) * c15 * (0.5 / dims[0] - 0.5 / dims[4]));
    record(r[1] - r[3] + z1 / (y2 * y2) * c24 * (0.5 / dims[1] - 0.5 / dims[3]));
  }
  rep.pass = rep.max_dev < tol;
  return rep;
}

}  // namespace einflag
