#include "einflag/flag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace einflag {

FlagSpace::FlagSpace(const RootSystem& rs, int painted_node)
    : rs_(rs), painted_(painted_node) {
  const int l = rs_.rank();
  if (painted_ < 1 || painted_ > l)
    throw std::out_of_range("painted node out of range");
  N_ = rs_.height_of_node(painted_);

  modules_.assign(N_, {});
  const auto& pos = rs_.positive_roots();
  module_of_.resize(pos.size());
  for (size_t i = 0; i < pos.size(); ++i) {
    int k = pos[i].coeffs[painted_ - 1];
    module_of_[i] = k;
    if (k == 0) h_roots_.push_back((int)i);
    else modules_[k - 1].push_back((int)i);
  }
  for (int k = 1; k <= N_; ++k)
    if (modules_[k - 1].empty())
      throw std::logic_error("empty isotropy module m_" + std::to_string(k));

  int total = dim_isotropy();
  for (int k = 1; k <= N_; ++k) total += dim_module(k);
  if (total != dim_g()) throw std::logic_error("module dimensions do not sum to dim g");

  build_label();
}

std::vector<int> FlagSpace::dims() const {
  std::vector<int> d(N_);
  for (int k = 1; k <= N_; ++k) d[k - 1] = dim_module(k);
  return d;
}

int FlagSpace::module_of(const Root& a) const {
  int idx = rs_.index_of(a);
  if (idx < 0) throw std::invalid_argument("not a positive root");
  return module_of_[idx];
}

int FlagSpace::module_of_index(int pos_index) const {
  return module_of_.at(pos_index);
}

namespace {

// Classifies a connected sub-diagram given by `nodes` (0-based) of rs.
std::string component_name(const RootSystem& rs, const std::vector<int>& nodes) {
  const int n = (int)nodes.size();
  if (n == 1) return "su(2)";
  int n_short = 0;
  for (int v : nodes)
    if (rs.gram(v, v) != Rat(2)) ++n_short;
  int max_bond = 1, branching = 0;
  for (int i = 0; i < n; ++i) {
    int deg = 0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int m = rs.cartan(nodes[i], nodes[j]) * rs.cartan(nodes[j], nodes[i]);
      if (m > 0) ++deg;
      max_bond = std::max(max_bond, m);
    }
    branching = std::max(branching, deg);
  }
  if (max_bond == 3) return "g2";
  if (max_bond == 2) {
    if (n_short == 1 && n > 2) return "so(" + std::to_string(2 * n + 1) + ")";  // B_n
    if (n_short == n - 1 && n > 2) return "sp(" + std::to_string(n) + ")";      // C_n
    if (n == 2) return "so(5)";
    return "f4";
  }
  if (branching >= 3) {
    // Arm lengths from the trivalent node separate D_n from E_n.
    int tri = -1;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rs.cartan(nodes[i], nodes[j]) != 0) adj[i].push_back(j);
    for (int i = 0; i < n; ++i)
      if ((int)adj[i].size() >= 3) tri = i;
    std::vector<int> arms;
    for (int start : adj[tri]) {
      int len = 1, prev = tri, cur = start;
      while (true) {
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "so(" + std::to_string(2 * n) + ")";  // D_n
    if (n == 6) return "e6";
    if (n == 7) return "e7";
    return "e8";
  }
  return "su(" + std::to_string(n + 1) + ")";  // A_n
}

}  // namespace

void FlagSpace::build_label() {
  const int l = rs_.rank();
  std::vector<int> comp(l, -1);
  int ncomp = 0;
  for (int s = 0; s < l; ++s) {
    if (s == painted_ - 1 || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < l; ++w) {
        if (w == painted_ - 1 || comp[w] >= 0 || rs_.cartan(v, w) == 0 || v == w)
          continue;
        comp[w] = ncomp;
        stack.push_back(w);
      }
    }
    ++ncomp;
  }
  std::ostringstream os;
  os << "u(1)";
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int v = 0; v < l; ++v)
      if (comp[v] == c) nodes.push_back(v);
    os << " + " << component_name(rs_, nodes);
  }
  label_ = os.str();
}

std::string FlagSpace::dump() const {
  std::ostringstream os;
  os << rs_.type_token() << " painted node " << painted_ << " (" << label_ << ")\n";
  os << "modules " << N_ << ", dim h = " << dim_isotropy() << ", dim g = " << dim_g()
     << "\n";
  for (int k = 1; k <= N_; ++k) {
    os << "m_" << k << " (dim " << dim_module(k) << "):";
    for (int i : modules_[k - 1]) os << " " << rs_.positive_roots()[i].str();
    os << "\n";
  }
  os << "isotropy roots:";
  for (int i : h_roots_) os << " " << rs_.positive_roots()[i].str();
  os << "\n";
  return os.str();
}

FlagSpace paint(const RootSystem& rs, int node) { return FlagSpace(rs, node); }

std::vector<Rat> kahler_einstein_metric(const FlagSpace& fs) {
  std::vector<Rat> x(fs.n_modules());
  for (int k = 1; k <= fs.n_modules(); ++k) x[k - 1] = Rat(k);
  return x;
}

}  // namespace einflag
