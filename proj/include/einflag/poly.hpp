#ifndef EINFLAG_POLY_HPP
#define EINFLAG_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "einflag/rational.hpp"

namespace einflag {

/// Sparse multivariate polynomial with rational coefficients; exponent
/// vectors are dense over a fixed variable count.
class Poly {
public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_[exps] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  Poly derivative(int var) const;
  Poly substitute_one(int var) const;

  /// Divides out the common monomial and the common |content|; the sign of
  /// every coefficient is preserved.  Returns (monomial exponents removed,
  /// content divided out).
  std::pair<std::vector<int>, Rat> extract_content();

  double eval(const std::vector<double>& x) const;
  Rat eval_exact(const std::vector<Rat>& x) const;

  double max_abs_coeff() const;
  std::string str() const;

private:
  int nvars_;
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace einflag

#endif
