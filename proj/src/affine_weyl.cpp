#include "affcox/affine_weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "affcox/detail/closure.hpp"

namespace affcox {

AffineElement::AffineElement(Vec chi, FiniteWeylElement finite) : fin_(finite) {
  if (static_cast<int>(chi.size()) != fin_.rank()) throw std::invalid_argument("AffineElement: translation has wrong dimension");
  std::copy(chi.begin(), chi.end(), chi_.begin());
}

bool AffineElement::has_zero_translation() const {
  const auto c = chi();
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

std::size_t AffineElement::hash() const {
  return detail::hash_bytes(chi_.data(), sizeof(std::int64_t) * static_cast<std::size_t>(rank()), fin_.hash());
}

AffineElement operator*(const AffineElement& a, const AffineElement& b) {
  AffineElement out;
  out.fin_ = a.fin_ * b.fin_;  // rejects mixed groups
  const int n = a.rank();
  for (int r = 0; r < n; ++r) {
    std::int64_t s = a.chi_[static_cast<std::size_t>(r)];
    for (int c = 0; c < n; ++c) s += a.fin_.entry(r, c) * b.chi_[static_cast<std::size_t>(c)];
    out.chi_[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

AffineWeylGroup::AffineWeylGroup(char type_letter, int rank, std::string_view twist)
    : AffineWeylGroup(std::make_shared<const RootSystem>(RootSystem::build(type_letter, rank)), twist) {}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootSystem> rs, std::string_view twist)
    : finite_(std::move(rs), twist) {
  const RootSystem& r = finite_.root_system();
  s0_ = AffineElement(r.highest_coroot(), finite_.reflection(r.positive_roots().size() - 1));
  for (const Vec& root : r.positive_roots()) {
    std::array<std::int8_t, kMaxRank> a{};
    for (int i = 0; i < rank(); ++i) a[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(root[static_cast<std::size_t>(i)]);
    positive_roots_.push_back(a);
  }
}

std::string AffineWeylGroup::name() const {
  const std::string base = root_system().name();
  return delta_order() > 1 ? std::to_string(delta_order()) + base : base;
}

void AffineWeylGroup::check(const AffineElement& x) const {
  if (x.tag() != tag()) throw std::invalid_argument("element does not belong to group " + name());
}

AffineElement AffineWeylGroup::identity() const { return lift(finite_.identity()); }

AffineElement AffineWeylGroup::translation(std::span<const std::int64_t> chi) const {
  return AffineElement(Vec(chi.begin(), chi.end()), finite_.identity());
}

AffineElement AffineWeylGroup::lift(const FiniteWeylElement& f) const {
  if (f.tag() != tag()) throw std::invalid_argument("finite element does not belong to group " + name());
  return AffineElement(Vec(static_cast<std::size_t>(rank()), 0), f);
}

AffineElement AffineWeylGroup::simple_reflection(int node) const {
  if (node == 0) return s0_;
  return lift(finite_.simple_reflection(node));
}

AffineElement AffineWeylGroup::delta_power(int k) const { return lift(finite_.delta_power(k)); }

AffineElement AffineWeylGroup::from_word(std::span<const int> word, int delta_pow) const {
  AffineElement x = identity();
  for (int i : word) x = x * simple_reflection(i);
  return x * delta_power(delta_pow);
}

AffineElement AffineWeylGroup::multiply(const AffineElement& a, const AffineElement& b) const {
  check(a);
  check(b);
  return a * b;
}

AffineElement AffineWeylGroup::inverse(const AffineElement& x) const {
  check(x);
  const FiniteWeylElement f_inv = finite_.inverse(x.finite());
  Vec chi = f_inv.act(x.chi());
  for (auto& c : chi) c = -c;
  return AffineElement(std::move(chi), f_inv);
}

AffineElement AffineWeylGroup::conjugate(const AffineElement& by, const AffineElement& x) const {
  return multiply(multiply(by, x), inverse(by));
}

AffineElement AffineWeylGroup::simple_conjugate(int node, const AffineElement& x) const {
  check(x);
  if (node == 0) return s0_ * x * s0_;
  // s_i t^chi f s_i = t^(s_i chi) (s_i f s_i)
  AffineElement out;
  out.fin_ = finite_.conjugate_by_simple(node, x.finite());
  const int j = node - 1;
  const IntMatrix& cartan = root_system().cartan();
  const std::int64_t pj = x.chi_[static_cast<std::size_t>(j)];
  for (int r = 0; r < rank(); ++r)
    out.chi_[static_cast<std::size_t>(r)] =
        x.chi_[static_cast<std::size_t>(r)] - pj * cartan(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
  return out;
}

int AffineWeylGroup::length(const AffineElement& x) const {
  check(x);
  const int n = rank();
  std::array<std::int64_t, kMaxRank> v{};
  for (int r = 0; r < n; ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < n; ++c) s += x.finite().entry(r, c);
    v[static_cast<std::size_t>(r)] = s;
  }
  std::int64_t len = 0;
  for (const auto& alpha : positive_roots_) {
    std::int64_t p = 0, h = 0;
    for (int i = 0; i < n; ++i) {
      p += alpha[static_cast<std::size_t>(i)] * x.chi_[static_cast<std::size_t>(i)];
      h += alpha[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    }
    len += h > 0 ? std::abs(p) : std::abs(p - 1);
  }
  return static_cast<int>(len);
}

AffineDecomposition AffineWeylGroup::decompose(const AffineElement& x) const {
  check(x);
  AffineDecomposition out;
  AffineElement y = x;
  int ly = length(y);
  while (ly > 0) {
    int descent = -1;
    for (int i = 0; i <= rank() && descent < 0; ++i) {
      const AffineElement z = simple_reflection(i) * y;
      const int lz = length(z);
      if (lz < ly) {
        descent = i;
        y = z;
        ly = lz;
      }
    }
    if (descent < 0) throw std::logic_error("element of positive length without a left descent");
    out.word.push_back(descent);
  }
  out.tau = y;
  return out;
}

std::vector<int> AffineWeylGroup::reduced_word(const AffineElement& x) const { return decompose(x).word; }

bool AffineWeylGroup::in_affine_weyl_group(const AffineElement& x) const { return decompose(x).tau == identity(); }

AffineElement AffineWeylGroup::length_zero_part(const AffineElement& x) const { return decompose(x).tau; }

Permutation AffineWeylGroup::node_action(const AffineElement& tau) const {
  const AffineElement tau_inv = inverse(tau);
  Permutation pi(static_cast<std::size_t>(rank() + 1), -1);
  for (int i = 0; i <= rank(); ++i) {
    const AffineElement y = tau * simple_reflection(i) * tau_inv;
    for (int j = 0; j <= rank(); ++j)
      if (y == simple_reflection(j)) pi[static_cast<std::size_t>(i)] = j;
    if (pi[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("conjugation by " + to_text(tau) + " does not permute the simple affine reflections");
  }
  return pi;
}

NodeSet AffineWeylGroup::support(const AffineElement& x, const AffineElement& tau) const {
  const AffineDecomposition d = decompose(x);
  if (d.tau != tau) throw std::invalid_argument("support: " + to_text(x) + " does not lie in W_a * " + to_text(tau));
  NodeSet s;
  for (int i : d.word) s.insert(i);
  const Permutation pi = node_action(tau);
  while (true) {
    NodeSet next = s;
    for (int i : s.to_vector()) next.insert(pi[static_cast<std::size_t>(i)]);
    if (next == s) return s;
    s = next;
  }
}

FiniteWeylElement AffineWeylGroup::eta(const AffineElement& x) const {
  check(x);
  return x.finite();
}

AffineElement AffineWeylGroup::tau(int minuscule_node) const {
  if (minuscule_node == 0) return identity();
  const auto& mins = root_system().minuscule_indices();
  if (std::find(mins.begin(), mins.end(), minuscule_node) == mins.end())
    throw std::invalid_argument("node " + std::to_string(minuscule_node) + " is not minuscule in " + root_system().name());
  NodeSet rest = NodeSet::finite_nodes(rank());
  rest.erase(minuscule_node);
  const FiniteWeylElement w = finite_.longest_element(rest) * finite_.longest_element(NodeSet::finite_nodes(rank()));
  return AffineElement(root_system().fundamental_coweight(minuscule_node), w);
}

std::vector<OmegaElement> AffineWeylGroup::omega_group() const {
  std::vector<OmegaElement> out{{identity(), std::nullopt, 0}};
  for (int i : root_system().minuscule_indices()) {
    AffineElement t = tau(i);
    if (length(t) != 0)
      throw std::logic_error("internal consistency failure: tau_" + std::to_string(i) + " in " + name() + " has nonzero length");
    out.push_back({t, i, 0});
  }
  return out;
}

std::vector<OmegaElement> AffineWeylGroup::omega_prime() const {
  const auto omega = omega_group();
  std::vector<OmegaElement> out;
  for (int k = 0; k < delta_order(); ++k)
    for (const auto& o : omega) out.push_back({o.element * delta_power(k), o.minuscule, k});
  return out;
}

AffineElement AffineWeylGroup::power(const AffineElement& x, std::uint64_t n) const {
  check(x);
  AffineElement result = identity();
  AffineElement base = x;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

FiniteOrderWitness AffineWeylGroup::is_finite_order(const AffineElement& x) const {
  FiniteOrderWitness w;
  w.finite_order = finite_.order_of(x.finite());
  const AffineElement y = power(x, w.finite_order);
  w.translation = y.chi_vec();
  w.is_finite = y == identity();
  return w;
}

std::string AffineWeylGroup::to_text(const AffineElement& x) const {
  check(x);
  std::string s = "t[";
  for (int i = 0; i < rank(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(x.chi_[static_cast<std::size_t>(i)]);
  }
  s += "] ";
  for (int i : finite_.reduced_word(x.finite())) s += "s" + std::to_string(i) + " ";
  return s + "d^" + std::to_string(x.delta_pow());
}

AffineElement AffineWeylGroup::parse(std::string_view text) const {
  const ParsedWord p = parse_word_text(text);
  Vec chi(static_cast<std::size_t>(rank()), 0);
  if (p.chi) {
    if (static_cast<int>(p.chi->size()) != rank())
      throw std::invalid_argument("translation part has " + std::to_string(p.chi->size()) + " coordinates, expected " +
                                  std::to_string(rank()));
    chi = *p.chi;
  }
  for (int i : p.word)
    if (i < 0 || i > rank()) throw std::invalid_argument("generator s" + std::to_string(i) + " is not an affine node of " + name());
  return translation(chi) * from_word(p.word, p.delta_pow);
}

}  // namespace affcox
