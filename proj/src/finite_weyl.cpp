#include "affcox/finite_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "affcox/detail/closure.hpp"

namespace affcox {

namespace {

constexpr std::size_t idx(int r, int c) { return static_cast<std::size_t>(r * kMaxRank + c); }

std::int8_t narrow(int v) {
  if (v < -127 || v > 127) throw std::logic_error("Weyl group matrix entry out of range; not a Weyl group element");
  return static_cast<std::int8_t>(v);
}

}  // namespace

IntMatrix FiniteWeylElement::matrix() const {
  IntMatrix m(static_cast<std::size_t>(rank()), static_cast<std::size_t>(rank()));
  for (int r = 0; r < rank(); ++r)
    for (int c = 0; c < rank(); ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = entry(r, c);
  return m;
}

Vec FiniteWeylElement::act(std::span<const std::int64_t> chi) const {
  if (static_cast<int>(chi.size()) != rank()) throw std::invalid_argument("FiniteWeylElement::act: dimension mismatch");
  Vec out(chi.size(), 0);
  for (int r = 0; r < rank(); ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < rank(); ++c) s += entry(r, c) * chi[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

std::size_t FiniteWeylElement::hash() const {
  std::size_t h = detail::hash_bytes(&tag_, sizeof(tag_));
  h = detail::hash_bytes(&delta_pow_, sizeof(delta_pow_), h);
  return detail::hash_bytes(m_.data(), m_.size(), h);
}

FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  if (a.tag_ != b.tag_) throw std::invalid_argument("cannot multiply elements of different groups");
  FiniteWeylElement out;
  out.tag_ = a.tag_;
  out.delta_pow_ = static_cast<std::uint8_t>((a.delta_pow_ + b.delta_pow_) % a.tag_.delta_order);
  const int n = a.rank();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += a.m_[idx(r, k)] * b.m_[idx(k, c)];
      out.m_[idx(r, c)] = narrow(s);
    }
  return out;
}

FiniteWeylGroup::FiniteWeylGroup(std::shared_ptr<const RootSystem> rs, std::string_view twist) : rs_(std::move(rs)) {
  const int twist_index = rs_->automorphism_index(twist);
  twist_ = &rs_->diagram_automorphisms()[static_cast<std::size_t>(twist_index)];
  tag_.letter = rs_->type_letter();
  tag_.rank = static_cast<std::uint8_t>(rs_->rank());
  tag_.twist = static_cast<std::uint8_t>(twist_index);
  tag_.delta_order = static_cast<std::uint8_t>(twist_->order);

  const int n = rank();
  for (const Vec& root : rs_->positive_roots()) {
    std::array<std::int8_t, kMaxRank> r{};
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = narrow(static_cast<int>(root[static_cast<std::size_t>(i)]));
    positive_roots_.push_back(r);
  }
  const IntMatrix& a = rs_->cartan();
  for (int j = 0; j < n; ++j) {
    FiniteWeylElement s = identity();
    for (int r = 0; r < n; ++r) {
      s.m_[idx(r, j)] = narrow(static_cast<int>((r == j ? 1 : 0) - a(static_cast<std::size_t>(r), static_cast<std::size_t>(j))));
    }
    simple_.push_back(s);
  }
  for (int k = 0; k < delta_order(); ++k) {
    const Permutation p = delta_permutation(k);
    FiniteWeylElement d;
    d.tag_ = tag_;
    d.delta_pow_ = static_cast<std::uint8_t>(k);
    for (int i = 1; i <= n; ++i) d.m_[idx(p[static_cast<std::size_t>(i)] - 1, i - 1)] = 1;
    delta_powers_.push_back(d);
  }
}

Permutation FiniteWeylGroup::delta_permutation(int k) const { return power(twist_->perm, k); }

void FiniteWeylGroup::check(const FiniteWeylElement& a) const {
  if (a.tag_ != tag_) throw std::invalid_argument("element does not belong to this group");
}

FiniteWeylElement FiniteWeylGroup::identity() const {
  FiniteWeylElement e;
  e.tag_ = tag_;
  for (int i = 0; i < rank(); ++i) e.m_[idx(i, i)] = 1;
  return e;
}

FiniteWeylElement FiniteWeylGroup::simple_reflection(int node) const {
  if (node < 1 || node > rank()) throw std::invalid_argument("simple reflection index out of range: " + std::to_string(node));
  return simple_[static_cast<std::size_t>(node - 1)];
}

FiniteWeylElement FiniteWeylGroup::delta_power(int k) const {
  const int d = delta_order();
  return delta_powers_[static_cast<std::size_t>(((k % d) + d) % d)];
}

FiniteWeylElement FiniteWeylGroup::from_word(std::span<const int> word, int delta_pow) const {
  FiniteWeylElement x = identity();
  for (int i : word) x = x * simple_reflection(i);
  return x * delta_power(delta_pow);
}

FiniteWeylElement FiniteWeylGroup::from_matrix(const IntMatrix& m, int delta_pow) const {
  const int n = rank();
  if (static_cast<int>(m.rows()) != n || static_cast<int>(m.cols()) != n)
    throw std::invalid_argument("from_matrix: matrix size does not match the rank");
  FiniteWeylElement x;
  x.tag_ = tag_;
  const int d = delta_order();
  x.delta_pow_ = static_cast<std::uint8_t>(((delta_pow % d) + d) % d);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const std::int64_t v = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (v < -127 || v > 127) throw std::invalid_argument("from_matrix: not a Weyl group element");
      x.m_[idx(r, c)] = static_cast<std::int8_t>(v);
    }
  // Rebuild from the reduced word of the W_0 part; agreement proves membership.
  bool member = false;
  try {
    member = from_word(reduced_word(weyl_part(x)), x.delta_pow_) == x;
  } catch (const std::logic_error&) {
    // entries overflowed or the descent did not terminate: not a group element
  }
  if (!member) throw std::invalid_argument("from_matrix: matrix is not the action of an element of W_0 x| <delta>");
  return x;
}

FiniteWeylElement FiniteWeylGroup::reflection(std::size_t positive_root_index) const {
  const Vec& alpha = rs_->positive_roots().at(positive_root_index);
  const Vec& coroot = rs_->positive_coroots().at(positive_root_index);
  FiniteWeylElement s = identity();
  // s_alpha(chi) = chi - <chi, alpha> alpha^vee
  for (int r = 0; r < rank(); ++r)
    for (int c = 0; c < rank(); ++c)
      s.m_[idx(r, c)] = narrow((r == c ? 1 : 0) - static_cast<int>(coroot[static_cast<std::size_t>(r)] * alpha[static_cast<std::size_t>(c)]));
  return s;
}

FiniteWeylElement FiniteWeylGroup::multiply(const FiniteWeylElement& a, const FiniteWeylElement& b) const {
  check(a);
  check(b);
  return a * b;
}

FiniteWeylElement FiniteWeylGroup::inverse(const FiniteWeylElement& a) const {
  check(a);
  std::vector<int> word = reduced_word(a);
  std::reverse(word.begin(), word.end());
  return delta_power(-a.delta_pow_) * from_word(word);
}

FiniteWeylElement FiniteWeylGroup::conjugate_by_simple(int node, const FiniteWeylElement& a) const {
  check(a);
  const int n = rank();
  const int j = node - 1;
  const IntMatrix& cartan = rs_->cartan();
  FiniteWeylElement x = a;
  std::array<int, kMaxRank> row_j{};
  for (int c = 0; c < n; ++c) row_j[static_cast<std::size_t>(c)] = x.m_[idx(j, c)];
  for (int r = 0; r < n; ++r) {
    const int coef = static_cast<int>(cartan(static_cast<std::size_t>(r), static_cast<std::size_t>(j)));
    if (coef == 0) continue;
    for (int c = 0; c < n; ++c) x.m_[idx(r, c)] = narrow(x.m_[idx(r, c)] - coef * row_j[static_cast<std::size_t>(c)]);
  }
  for (int r = 0; r < n; ++r) {
    int s = 0;
    for (int k = 0; k < n; ++k) s += x.m_[idx(r, k)] * static_cast<int>(cartan(static_cast<std::size_t>(k), static_cast<std::size_t>(j)));
    x.m_[idx(r, j)] = narrow(x.m_[idx(r, j)] - s);
  }
  return x;
}

FiniteWeylElement FiniteWeylGroup::weyl_part(const FiniteWeylElement& a) const {
  check(a);
  return a * delta_power(-a.delta_pow_);
}

int FiniteWeylGroup::length(const FiniteWeylElement& a) const {
  check(a);
  const int n = rank();
  // v = w(rho^vee); <alpha, v> is the height of w^{-1}(alpha).
  std::array<int, kMaxRank> v{};
  for (int r = 0; r < n; ++r) {
    int s = 0;
    for (int c = 0; c < n; ++c) s += a.m_[idx(r, c)];
    v[static_cast<std::size_t>(r)] = s;
  }
  int len = 0;
  for (const auto& alpha : positive_roots_) {
    int h = 0;
    for (int i = 0; i < n; ++i) h += alpha[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    if (h < 0) ++len;
  }
  return len;
}

bool FiniteWeylGroup::is_left_descent(int node, const FiniteWeylElement& a) const {
  check(a);
  int s = 0;
  for (int c = 0; c < rank(); ++c) s += a.m_[idx(node - 1, c)];
  return s < 0;
}

bool FiniteWeylGroup::maps_inverse_to_positive(const FiniteWeylElement& a, std::span<const std::int64_t> alpha) const {
  std::int64_t h = 0;
  for (int r = 0; r < rank(); ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < rank(); ++c) s += a.m_[idx(r, c)];
    h += s * alpha[static_cast<std::size_t>(r)];
  }
  return h > 0;
}

std::vector<int> FiniteWeylGroup::reduced_word(const FiniteWeylElement& a) const {
  FiniteWeylElement w = weyl_part(a);
  std::vector<int> word;
  while (true) {
    int descent = 0;
    for (int i = 1; i <= rank() && descent == 0; ++i)
      if (is_left_descent(i, w)) descent = i;
    if (descent == 0) break;
    if (word.size() == positive_roots_.size()) throw std::invalid_argument("matrix is not a Weyl group element");
    word.push_back(descent);
    w = simple_reflection(descent) * w;
  }
  return word;
}

NodeSet FiniteWeylGroup::support(const FiniteWeylElement& a) const {
  NodeSet s;
  for (int i : reduced_word(a)) s.insert(i);
  const Permutation d = delta_permutation(a.delta_pow_);
  NodeSet closed = s;
  for (int step = 0; step < delta_order(); ++step) {
    NodeSet next = closed;
    for (int i : closed.to_vector()) next.insert(d[static_cast<std::size_t>(i)]);
    closed = next;
  }
  return closed;
}

FiniteWeylElement FiniteWeylGroup::longest_element(NodeSet j) const {
  if (!j.subset_of(NodeSet::finite_nodes(rank()))) throw std::invalid_argument("longest_element: J must lie in {1..rank}");
  FiniteWeylElement w = identity();
  while (true) {
    int ascent = 0;
    for (int i : j.to_vector())
      if (!is_left_descent(i, w)) {
        ascent = i;
        break;
      }
    if (ascent == 0) return w;
    w = simple_reflection(ascent) * w;
  }
}

std::vector<FiniteWeylElement> FiniteWeylGroup::coxeter_elements(NodeSet j, int delta_pow) const {
  if (!j.subset_of(NodeSet::finite_nodes(rank()))) throw std::invalid_argument("coxeter_elements: J must lie in {1..rank}");
  const Permutation d = delta_permutation(delta_pow);
  for (int i : j.to_vector())
    if (!j.contains(d[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("coxeter_elements: J = " + j.to_string() + " is not stable under delta^" + std::to_string(delta_pow));
  const auto orbs = orbits(d, j);
  const FiniteWeylElement twist = delta_power(delta_pow);
  std::vector<FiniteWeylElement> out;
  std::vector<std::size_t> choice(orbs.size(), 0);
  while (true) {
    std::vector<int> reps;
    for (std::size_t o = 0; o < orbs.size(); ++o) reps.push_back(orbs[o][choice[o]]);
    std::sort(reps.begin(), reps.end());
    do {
      out.push_back(from_word(reps) * twist);
    } while (std::next_permutation(reps.begin(), reps.end()));
    std::size_t o = 0;
    while (o < orbs.size() && ++choice[o] == orbs[o].size()) choice[o++] = 0;
    if (o == orbs.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteWeylElement FiniteWeylGroup::standard_coxeter_element(int delta_pow) const {
  std::vector<int> reps;
  for (const auto& orbit : orbits(delta_permutation(delta_pow), NodeSet::finite_nodes(rank()))) reps.push_back(orbit.front());
  return from_word(reps, delta_pow);
}

bool FiniteWeylGroup::is_coxeter_element(const FiniteWeylElement& a) const {
  check(a);
  const auto orbs = orbits(delta_permutation(a.delta_pow_), NodeSet::finite_nodes(rank()));
  const std::vector<int> word = reduced_word(a);
  if (word.size() != orbs.size()) return false;
  for (const auto& orbit : orbs) {
    const auto hits = std::count_if(word.begin(), word.end(),
                                    [&](int i) { return std::find(orbit.begin(), orbit.end(), i) != orbit.end(); });
    if (hits != 1) return false;
  }
  return true;
}

std::uint64_t FiniteWeylGroup::order_of(const FiniteWeylElement& a) const {
  check(a);
  const FiniteWeylElement e = identity();
  FiniteWeylElement x = a;
  std::uint64_t n = 1;
  while (x != e) {
    x = x * a;
    ++n;
  }
  return n;
}

Vec FiniteWeylGroup::characteristic_polynomial(const FiniteWeylElement& a) const {
  check(a);
  return affcox::characteristic_polynomial(a.matrix());
}

ClosureResult<FiniteWeylElement> FiniteWeylGroup::descent_closure(const FiniteWeylElement& start,
                                                                  std::size_t node_budget) const {
  check(start);
  return detail::descent_bfs<FiniteWeylElement, FiniteWeylHash>(
      start, 1, rank(), [&](int i, const FiniteWeylElement& x) { return conjugate_by_simple(i, x); },
      [&](const FiniteWeylElement& x) { return length(x); }, node_budget,
      [](const FiniteWeylElement&, int, const FiniteWeylElement&) {});
}

bool FiniteWeylGroup::is_conjugate(const FiniteWeylElement& a, const FiniteWeylElement& b, std::size_t orbit_budget) const {
  check(a);
  check(b);
  if (a.delta_pow_ != b.delta_pow_) return false;
  if (a == b) return true;
  const auto ca = descent_closure(a);
  const auto cb = descent_closure(b);
  if (!ca.complete || !cb.complete) throw std::runtime_error("is_conjugate: descent closure exceeded its node budget");
  // Every element reaches the minimal length of its class by descent, so the
  // minimal lengths are class invariants.
  if (ca.minimal_length != cb.minimal_length) return false;
  for (const auto& m : cb.minimal)
    if (std::binary_search(ca.minimal.begin(), ca.minimal.end(), m)) return true;
  if (characteristic_polynomial(a) != characteristic_polynomial(b)) return false;

  const FiniteWeylElement target = cb.minimal.front();
  std::unordered_set<FiniteWeylElement, FiniteWeylHash> seen{ca.minimal.front()};
  std::deque<FiniteWeylElement> queue{ca.minimal.front()};
  while (!queue.empty()) {
    const FiniteWeylElement x = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank(); ++i) {
      FiniteWeylElement y = conjugate_by_simple(i, x);
      if (y == target) return true;
      if (seen.insert(y).second) {
        if (seen.size() > orbit_budget) throw std::runtime_error("is_conjugate: conjugacy class search exceeded its budget");
        queue.push_back(std::move(y));
      }
    }
  }
  return false;
}

std::string FiniteWeylGroup::to_text(const FiniteWeylElement& a) const {
  std::string s;
  for (int i : reduced_word(a)) s += "s" + std::to_string(i) + " ";
  return s + "d^" + std::to_string(a.delta_pow_);
}

FiniteWeylElement FiniteWeylGroup::parse(std::string_view text) const {
  const ParsedWord p = parse_word_text(text);
  if (p.chi && std::any_of(p.chi->begin(), p.chi->end(), [](std::int64_t c) { return c != 0; }))
    throw std::invalid_argument("finite Weyl group element cannot carry a translation part");
  for (int i : p.word)
    if (i < 1 || i > rank()) throw std::invalid_argument("generator s" + std::to_string(i) + " is not in S_0 for " + rs_->name());
  return from_word(p.word, p.delta_pow);
}

ParsedWord parse_word_text(std::string_view text) {
  ParsedWord out;
  std::string s(text);
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t pos = 0;
  while (pos < s.size() && is_space(s[pos])) ++pos;
  if (pos < s.size() && s[pos] == 't') {
    const std::size_t open = s.find('[', pos);
    const std::size_t close = s.find(']', pos);
    if (open != pos + 1 || close == std::string::npos) throw std::invalid_argument("malformed translation part in '" + s + "'");
    Vec chi;
    std::string inner = s.substr(open + 1, close - open - 1);
    std::string token;
    auto flush = [&] {
      std::string t;
      for (char c : token)
        if (!is_space(c)) t += c;
      if (t.empty()) throw std::invalid_argument("empty coordinate in translation part of '" + s + "'");
      std::size_t used = 0;
      const long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument("bad coordinate '" + t + "'");
      chi.push_back(v);
      token.clear();
    };
    if (inner.find_first_not_of(" \t") != std::string::npos) {
      for (char c : inner) {
        if (c == ',') flush();
        else token += c;
      }
      flush();
    }
    out.chi = std::move(chi);
    pos = close + 1;
  }
  std::string rest = s.substr(pos);
  std::size_t i = 0;
  bool saw_delta = false;
  while (i < rest.size()) {
    const char c = rest[i];
    if (is_space(c) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (saw_delta) throw std::invalid_argument("unexpected text after d^k in '" + s + "'");
    if (c == 's') {
      std::size_t j = i + 1;
      while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j]))) ++j;
      if (j == i + 1) throw std::invalid_argument("generator without index in '" + s + "'");
      out.word.push_back(std::stoi(rest.substr(i + 1, j - i - 1)));
      i = j;
    } else if (c == 'd') {
      std::size_t j = i + 1;
      int k = 1;
      if (j < rest.size() && rest[j] == '^') {
        ++j;
        std::size_t start = j;
        if (j < rest.size() && rest[j] == '-') ++j;
        while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j]))) ++j;
        if (j == start || (j == start + 1 && rest[start] == '-')) throw std::invalid_argument("malformed d^k in '" + s + "'");
        k = std::stoi(rest.substr(start, j - start));
      }
      out.delta_pow = k;
      saw_delta = true;
      i = j;
    } else if ((c == 'e' || c == '1') && (i + 1 == rest.size() || is_space(rest[i + 1]))) {
      ++i;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in element text '" + s + "'");
    }
  }
  return out;
}

}  // namespace affcox
