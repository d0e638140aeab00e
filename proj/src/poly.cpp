#include "einflag/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace einflag {

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    d[var]--;
    r.add_term(d, c * Rat(e[var]));
  }
  return r;
}

Poly Poly::substitute_one(int var) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> d = e;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

std::pair<std::vector<int>, Rat> Poly::extract_content() {
  std::vector<int> mono(nvars_, 0);
  if (terms_.empty()) return {mono, Rat(1)};

  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (int v = 0; v < nvars_; ++v)
      mono[v] = first ? e[v] : std::min(mono[v], e[v]);
    first = false;
  }
  // |content|: gcd of numerators over lcm of denominators.
  long long g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    g = std::gcd(g, std::llabs(c.num()));
    l = std::lcm(l, c.den());
  }
  Rat content(g, l);

  std::map<std::vector<int>, Rat> out;
  for (const auto& [e, c] : terms_) {
    std::vector<int> d = e;
    for (int v = 0; v < nvars_; ++v) d[v] -= mono[v];
    out[d] = c / content;
  }
  terms_ = std::move(out);
  return {mono, content};
}

double Poly::eval(const std::vector<double>& x) const {
  double sum = 0, comp = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (int v = 0; v < nvars_; ++v)
      for (int p = 0; p < e[v]; ++p) t *= x[v];
    double y = t - comp, z = sum + y;
    comp = (z - sum) - y;
    sum = z;
  }
  return sum;
}

Rat Poly::eval_exact(const std::vector<Rat>& x) const {
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int v = 0; v < nvars_; ++v)
      for (int p = 0; p < e[v]; ++p) t *= x[v];
    sum += t;
  }
  return sum;
}

double Poly::max_abs_coeff() const {
  double m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::fabs(c.to_double()));
  return m;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int v = 0; v < nvars_; ++v)
      if (e[v] > 0) {
        os << "*x" << v + 1;
        if (e[v] > 1) os << "^" << e[v];
      }
  }
  return os.str();
}

}  // namespace einflag
