#include "affcox/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace affcox {

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

Permutation power(const Permutation& p, int k) {
  const int order = permutation_order(p);
  k = ((k % order) + order) % order;
  Permutation out(p.size());
  std::iota(out.begin(), out.end(), 0);
  for (int i = 0; i < k; ++i) out = compose(p, out);
  return out;
}

int permutation_order(const Permutation& p) {
  int order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int len = 1;
    for (int j = p[i]; j != static_cast<int>(i); j = p[static_cast<std::size_t>(j)]) ++len;
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<std::vector<int>> orbits(const Permutation& p, NodeSet nodes) {
  std::vector<std::vector<int>> out;
  NodeSet seen;
  for (int i : nodes.to_vector()) {
    if (seen.contains(i)) continue;
    std::vector<int> orbit;
    for (int j = i; !seen.contains(j); j = p[static_cast<std::size_t>(j)]) {
      seen.insert(j);
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j);
    }
    s += ")";
  }
  return s.empty() ? "id" : s;
}

namespace {

struct Diagram {
  std::vector<std::int64_t> norm;                        // doubled squared root lengths
  std::vector<std::pair<int, int>> bonds;                 // 1-based nodes
};

// Simply-laced roots have (a,a) = 2; in B/C/F/G the short roots are scaled so that
// every inner product stays integral.
Diagram diagram(char letter, int n) {
  Diagram d;
  d.norm.assign(static_cast<std::size_t>(n), 2);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.bonds.emplace_back(i, i + 1);
  };
  switch (letter) {
    case 'A':
      chain(1, n);
      break;
    case 'B':
      chain(1, n);
      std::fill(d.norm.begin(), d.norm.end(), 4);
      d.norm[static_cast<std::size_t>(n - 1)] = 2;
      break;
    case 'C':
      chain(1, n);
      d.norm[static_cast<std::size_t>(n - 1)] = 4;
      break;
    case 'D':
      chain(1, n - 1);
      d.bonds.emplace_back(n - 2, n);
      break;
    case 'E':
      d.bonds = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      chain(5, n);
      break;
    case 'F':
      chain(1, 4);
      d.norm = {4, 4, 2, 2};
      break;
    case 'G':
      d.bonds = {{1, 2}};
      d.norm = {2, 6};
      break;
    default:
      break;
  }
  return d;
}

void validate(char letter, int rank) {
  bool ok = false;
  switch (letter) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
      throw std::invalid_argument(std::string("unknown root system type '") + letter + "' (expected one of A-G)");
  }
  if (!ok || rank > kMaxRank) {
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for type " + letter +
                                " (A: >=1, B/C: >=2, D: >=4, E: 6-8, F: 4, G: 2; at most " +
                                std::to_string(kMaxRank) + ")");
  }
}

std::int64_t height(const Vec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

std::string canonical_name(char letter, int n, const Permutation& p) {
  if (p == power(p, 0)) return "id";
  const int order = permutation_order(p);
  if (letter == 'D' && n == 4 && order == 3) {
    return p[1] == 3 ? "triality" : "triality-inverse";
  }
  if (order == 2) {
    const bool d4_other = letter == 'D' && n == 4 && !(p[3] == 4 && p[1] == 1);
    if (!d4_other) return "flip";
  }
  return cycle_notation(p);
}

}  // namespace

RootSystem RootSystem::build(char type_letter, int rank) {
  validate(type_letter, rank);
  RootSystem rs;
  rs.letter_ = type_letter;
  rs.rank_ = rank;
  const auto n = static_cast<std::size_t>(rank);
  const Diagram d = diagram(type_letter, rank);

  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) gram(i, i) = d.norm[i];
  for (auto [a, b] : d.bonds) {
    const auto i = static_cast<std::size_t>(a - 1);
    const auto j = static_cast<std::size_t>(b - 1);
    const std::int64_t ip = -std::min(d.norm[i], d.norm[j]) / 2 *
                            (std::max(d.norm[i], d.norm[j]) / std::min(d.norm[i], d.norm[j]));
    gram(i, j) = gram(j, i) = ip;
  }
  rs.cartan_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan_(i, j) = 2 * gram(i, j) / gram(j, j);

  // Orbit of the simple roots under the simple reflections, carrying coroots along.
  std::map<Vec, Vec> coroot_of;
  std::deque<Vec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Vec a(n, 0);
    a[i] = 1;
    coroot_of.emplace(a, rs.cartan_.column(i));
    queue.push_back(a);
  }
  while (!queue.empty()) {
    const Vec alpha = queue.front();
    queue.pop_front();
    const Vec coroot = coroot_of.at(alpha);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t pair_root = 0;  // <alpha_j^vee, alpha>
      for (std::size_t k = 0; k < n; ++k) pair_root += alpha[k] * rs.cartan_(k, j);
      Vec image = alpha;
      image[j] -= pair_root;
      if (coroot_of.contains(image)) continue;
      Vec image_coroot = coroot;
      const std::int64_t pair_co = coroot[j];  // <alpha^vee, alpha_j>
      for (std::size_t k = 0; k < n; ++k) image_coroot[k] -= pair_co * rs.cartan_(k, j);
      coroot_of.emplace(image, image_coroot);
      queue.push_back(image);
    }
  }
  std::vector<std::pair<Vec, Vec>> positive;
  for (const auto& [root, coroot] : coroot_of) {
    if (std::all_of(root.begin(), root.end(), [](std::int64_t c) { return c >= 0; })) positive.emplace_back(root, coroot);
  }
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    const auto ha = height(a.first), hb = height(b.first);
    return ha != hb ? ha < hb : a.first < b.first;
  });
  for (auto& [root, coroot] : positive) {
    rs.positive_roots_.push_back(root);
    rs.positive_coroots_.push_back(coroot);
  }
  rs.highest_root_ = rs.positive_roots_.back();
  rs.highest_coroot_ = rs.positive_coroots_.back();
  rs.minuscule_ = minuscule_coweights(rs);
  rs.det_ = determinant(rs.cartan_);

  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool preserves = true;
    for (std::size_t i = 0; i < n && preserves; ++i)
      for (std::size_t j = 0; j < n && preserves; ++j)
        preserves = rs.cartan_(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j])) == rs.cartan_(i, j);
    if (!preserves) continue;
    DiagramAutomorphism a;
    a.perm.push_back(0);
    for (int x : p) a.perm.push_back(x + 1);
    a.order = permutation_order(a.perm);
    a.name = canonical_name(type_letter, rank, a.perm);
    rs.autos_.push_back(std::move(a));
  } while (std::next_permutation(p.begin(), p.end()));
  return rs;
}

Vec RootSystem::simple_root(int node) const {
  if (node < 1 || node > rank_) throw std::invalid_argument("simple_root: node out of range");
  Vec v(static_cast<std::size_t>(rank_), 0);
  v[static_cast<std::size_t>(node - 1)] = 1;
  return v;
}

Vec RootSystem::simple_coroot(int node) const {
  if (node < 1 || node > rank_) throw std::invalid_argument("simple_coroot: node out of range");
  return cartan_.column(static_cast<std::size_t>(node - 1));
}

Vec RootSystem::fundamental_coweight(int node) const {
  if (node < 1 || node > rank_) throw std::invalid_argument("fundamental_coweight: node out of range");
  Vec v(static_cast<std::size_t>(rank_), 0);
  v[static_cast<std::size_t>(node - 1)] = 1;
  return v;
}

const DiagramAutomorphism& RootSystem::automorphism(std::string_view name) const {
  return autos_[static_cast<std::size_t>(automorphism_index(name))];
}

int RootSystem::automorphism_index(std::string_view name) const {
  std::string key(name);
  if (key.empty() || key == "identity" || key == "none") key = "id";
  for (std::size_t i = 0; i < autos_.size(); ++i) {
    if (autos_[i].name == key || cycle_notation(autos_[i].perm) == key) return static_cast<int>(i);
  }
  std::string known;
  for (const auto& a : autos_) known += (known.empty() ? "" : ", ") + a.name;
  throw std::invalid_argument("no diagram automorphism '" + key + "' for " + this->name() + " (known: " + known + ")");
}

std::int64_t pairing(std::span<const std::int64_t> chi, std::span<const std::int64_t> alpha) {
  if (chi.size() != alpha.size()) throw std::invalid_argument("pairing: coweight and root dimensions differ");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) s += chi[i] * alpha[i];
  return s;
}

std::vector<int> minuscule_coweights(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    const bool minuscule = std::all_of(rs.positive_roots().begin(), rs.positive_roots().end(),
                                       [&](const Vec& a) { return a[static_cast<std::size_t>(i - 1)] <= 1; });
    if (minuscule) out.push_back(i);
  }
  return out;
}

}  // namespace affcox
