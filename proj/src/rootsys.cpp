#include "einflag/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace einflag {

std::string Root::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ",";
    os << coeffs[i];
  }
  return os.str();
}

namespace {

// Adjacency edges of the Dynkin diagram (1-based nodes) plus the short-root
// set; the Cartan matrix follows from these.
struct Diagram {
  int rank;
  std::vector<std::pair<int, int>> edges;  // single bonds
  std::vector<int> short_nodes;            // empty for simply laced
  std::pair<int, int> multi_edge{0, 0};    // the one double/triple bond, if any
  int multiplicity = 1;                     // 2 for B/C/F4, 3 for G2
};

Diagram diagram_for(char fam, int rank) {
  Diagram d;
  d.rank = rank;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.edges.push_back({i, i + 1});
  };
  switch (fam) {
    case 'A':
      chain(1, rank);
      break;
    case 'B':  // last root short
      chain(1, rank - 1);
      d.multi_edge = {rank - 1, rank};
      d.multiplicity = 2;
      d.short_nodes = {rank};
      break;
    case 'C':  // last root long, the rest short
      chain(1, rank - 1);
      d.multi_edge = {rank - 1, rank};
      d.multiplicity = 2;
      for (int i = 1; i < rank; ++i) d.short_nodes.push_back(i);
      break;
    case 'D':
      chain(1, rank - 2);
      d.edges.push_back({rank - 2, rank - 1});
      d.edges.push_back({rank - 2, rank});
      break;
    case 'E':  // chain 1..rank-1, branch root `rank` attached at node rank-3
      chain(1, rank - 1);
      d.edges.push_back({rank - 3, rank});
      break;
    case 'F':  // a1,a2 long; a3,a4 short
      d.edges.push_back({1, 2});
      d.edges.push_back({3, 4});
      d.multi_edge = {2, 3};
      d.multiplicity = 2;
      d.short_nodes = {3, 4};
      break;
    case 'G':  // a1 long, a2 short
      d.multi_edge = {1, 2};
      d.multiplicity = 3;
      d.short_nodes = {2};
      break;
  }
  return d;
}

}  // namespace

RootSystem RootSystem::build(const std::string& token) {
  if (token.size() < 2 || !std::isalpha((unsigned char)token[0]))
    throw std::invalid_argument("bad Lie type token '" + token + "'");
  char fam = (char)std::toupper((unsigned char)token[0]);
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(token.substr(1), &pos);
    if (pos + 1 != token.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad Lie type token '" + token + "'");
  }

  bool ok = false;
  switch (fam) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank == 6 || rank == 7 || rank == 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok || rank > 16)
    throw std::invalid_argument("invalid type/rank pair '" + token + "'");

  RootSystem rs;
  rs.family_ = fam;
  rs.rank_ = rank;
  rs.token_ = std::string(1, fam) + std::to_string(rank);

  // Half squared lengths d_i = (alpha_i,alpha_i)/2, long roots normalized to 1.
  Diagram dg = diagram_for(fam, rank);
  std::vector<Rat> half_len(rank, Rat(1));
  Rat short_len = (dg.multiplicity == 3) ? Rat(1, 3) : Rat(1, 2);
  for (int s : dg.short_nodes) half_len[s - 1] = short_len;

  // Gram and Cartan matrices from the bonds.
  rs.gram_.assign(rank, std::vector<Rat>(rank, Rat(0)));
  for (int i = 0; i < rank; ++i) rs.gram_[i][i] = Rat(2) * half_len[i];
  auto connect = [&](int a, int b) {
    // (alpha_a,alpha_b) = -max(d_a, d_b) for a single Dynkin bond between
    // roots of possibly different lengths.
    Rat v = -std::max(half_len[a - 1], half_len[b - 1]);
    rs.gram_[a - 1][b - 1] = rs.gram_[b - 1][a - 1] = v;
  };
  for (auto [a, b] : dg.edges) connect(a, b);
  if (dg.multi_edge.first) connect(dg.multi_edge.first, dg.multi_edge.second);

  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat c = Rat(2) * rs.gram_[i][j] / rs.gram_[j][j];
      if (!c.is_integer()) throw std::logic_error("non-integer Cartan entry");
      rs.cartan_[i][j] = (int)c.num();
    }

  rs.enumerate();
  return rs;
}

int RootSystem::pairing(const Root& a, int j) const {
  int p = 0;
  for (int k = 0; k < rank_; ++k) p += a.coeffs[k] * cartan_[k][j];
  return p;
}

void RootSystem::enumerate() {
  // Closure from the simple roots: alpha + alpha_j is a root iff
  // q = p - <alpha, alpha_j^vee> > 0, with p the length of the descending
  // alpha_j-string through alpha.
  std::set<std::vector<int>> seen;
  std::vector<Root> level;
  for (int i = 0; i < rank_; ++i) {
    Root r;
    r.coeffs.assign(rank_, 0);
    r.coeffs[i] = 1;
    level.push_back(r);
    seen.insert(r.coeffs);
    positive_.push_back(r);
  }
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& a : level) {
      for (int j = 0; j < rank_; ++j) {
        Root up = a;
        up.coeffs[j]++;
        if (seen.count(up.coeffs)) continue;
        int p = 0;
        Root down = a;
        while (true) {
          down.coeffs[j]--;
          bool is_root = seen.count(down.coeffs) > 0;
          if (!is_root) {
            // May descend past this level's frontier only through known roots.
            break;
          }
          ++p;
        }
        if (p - pairing(a, j) > 0) {
          seen.insert(up.coeffs);
          next.push_back(up);
          positive_.push_back(up);
        }
      }
    }
    level = std::move(next);
  }

  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  });
  for (size_t i = 0; i < positive_.size(); ++i) index_[positive_[i].coeffs] = (int)i;
  highest_ = positive_.back();

  // The highest root must dominate coefficient-wise.
  for (const Root& r : positive_)
    for (int k = 0; k < rank_; ++k)
      if (r.coeffs[k] > highest_.coeffs[k])
        throw std::logic_error("highest root fails to dominate");
}

int RootSystem::height_of_node(int node) const {
  if (node < 1 || node > rank_)
    throw std::out_of_range("node index out of range");
  return highest_.coeffs[node - 1];
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  Rat s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (a.coeffs[i] != 0 && b.coeffs[j] != 0)
        s += Rat(a.coeffs[i]) * Rat(b.coeffs[j]) * gram_[i][j];
  return s;
}

int RootSystem::index_of(const Root& a) const {
  auto it = index_.find(a.coeffs);
  return it == index_.end() ? -1 : it->second;
}

std::string RootSystem::dump() const {
  std::ostringstream os;
  os << token_ << ": " << positive_.size() << " positive roots, highest root "
     << highest_.str() << "\n";
  for (const Root& r : positive_) os << "  " << r.str() << "\n";
  return os.str();
}

}  // namespace einflag
