#include "affcox/classification.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "affcox/conjugacy.hpp"

namespace affcox {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CoinvariantGroup::CoinvariantGroup(const FiniteWeylGroup& w0, int delta_pow) : delta_pow_(delta_pow) {
  const RootSystem& rs = w0.root_system();
  const auto n = static_cast<std::size_t>(rs.rank());
  const Permutation sigma = w0.delta_permutation(delta_pow);
  std::vector<Vec> rows;
  for (int j = 1; j <= rs.rank(); ++j) rows.push_back(rs.simple_coroot(j));
  for (std::size_t i = 1; i <= n; ++i) {
    Vec r(n, 0);
    const auto image = static_cast<std::size_t>(sigma[i]);
    if (image == i) continue;
    r[i - 1] += 1;
    r[image - 1] -= 1;
    rows.push_back(std::move(r));
  }
  relations_ = IntMatrix::from_rows(rows, n);
  hnf_ = hermite_normal_form(relations_);
  if (hnf_.rows() != n) throw std::logic_error("coinvariant relation lattice is not of full rank");
  order_ = 1;
  std::size_t col = 0;
  for (std::size_t i = 0; i < hnf_.rows(); ++i) {
    while (hnf_(i, col) == 0) ++col;
    order_ *= hnf_(i, col);
  }
  const SmithForm snf = smith_normal_form(relations_);
  smith_right_ = snf.right;
  smith_diag_ = snf.diagonal;
  smith_order_ = 1;
  for (std::int64_t d : smith_diag_) {
    smith_order_ *= d;
    if (d > 1) factors_.push_back(d);
  }
  if (smith_order_ != order_)
    throw std::logic_error("coinvariant group order mismatch: normal form gives " + std::to_string(order_) +
                           ", Smith form gives " + std::to_string(smith_order_));
}

Vec CoinvariantGroup::reduce(std::span<const std::int64_t> chi) const { return reduce_modulo(hnf_, chi); }

Vec CoinvariantGroup::coordinates(std::span<const std::int64_t> chi) const {
  const std::size_t n = smith_right_.rows();
  if (chi.size() != n) throw std::invalid_argument("coordinates: dimension mismatch");
  Vec out;
  for (std::size_t c = 0; c < smith_diag_.size(); ++c) {
    if (smith_diag_[c] == 1) continue;
    std::int64_t s = 0;
    for (std::size_t r = 0; r < n; ++r) s += chi[r] * smith_right_(r, c);
    out.push_back(mod_floor(s, smith_diag_[c]));
  }
  return out;
}

std::vector<Vec> CoinvariantGroup::elements() const {
  const auto n = static_cast<std::size_t>(rank());
  std::set<Vec> seen{Vec(n, 0)};
  std::deque<Vec> queue{Vec(n, 0)};
  while (!queue.empty()) {
    const Vec v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Vec w = v;
      w[i] += 1;
      w = reduce(w);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

std::string CoinvariantGroup::structure() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(factors_[i]);
  return s;
}

Vec kottwitz(const AffineWeylGroup& g, const AffineElement& x, int delta_pow) {
  if (x.tag() != g.tag()) throw std::invalid_argument("kottwitz: element does not belong to " + g.name());
  if (x.delta_pow() != delta_pow)
    throw std::invalid_argument("kottwitz: element lies in the coset of d^" + std::to_string(x.delta_pow()) + ", not d^" +
                                std::to_string(delta_pow));
  return CoinvariantGroup(g.finite(), delta_pow).reduce(x.chi());
}

LatticeIdentityReport lattice_identity_check(const FiniteWeylGroup& w0, const FiniteWeylElement& c_delta) {
  if (!w0.is_coxeter_element(c_delta))
    throw std::invalid_argument("lattice_identity_check: " + w0.to_text(c_delta) + " is not a Coxeter element");
  const RootSystem& rs = w0.root_system();
  const auto n = static_cast<std::size_t>(rs.rank());
  LatticeIdentityReport report;
  report.coxeter = c_delta;
  const IntMatrix one_minus = IntMatrix::identity(n) - c_delta.matrix();
  const CoinvariantGroup coinv(w0, c_delta.delta_pow());
  report.relation_basis = coinv.normal_form();
  report.one_minus_c_basis = hermite_normal_form(one_minus.transpose());
  report.lattices_equal = report.one_minus_c_basis == report.relation_basis;
  report.inclusion_holds = true;
  for (std::size_t c = 0; c < n; ++c)
    report.inclusion_holds &= lattice_contains(report.relation_basis, one_minus.column(c));

  report.coroots_contained = true;
  if (determinant(one_minus) == 0) {
    report.coroots_contained = false;
    return report;
  }
  for (int i = 1; i <= rs.rank(); ++i) {
    const Vec target = rs.simple_coroot(i);
    const auto x = solve_integer(one_minus, target);
    if (!x || one_minus.apply(*x) != target) {
      report.coroots_contained = false;
      report.coroot_preimages.emplace_back();
      continue;
    }
    report.coroot_preimages.push_back(*x);
  }
  return report;
}

AffineElement classify_representative(const AffineWeylGroup& g, const FiniteWeylElement& c_delta, std::span<const std::int64_t> v) {
  const CoinvariantGroup coinv(g.finite(), c_delta.delta_pow());
  return g.translation(coinv.reduce(v)) * g.lift(c_delta);
}

SpotCheck spot_check_same_class(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y, int radius) {
  if (x == y) return {true, "descent"};
  const auto omega = g.omega_group();
  ClosureOptions opts;
  opts.node_budget = 200'000;
  const DescentClosure cy = descent_closure(g, y, opts);
  if (cy.complete) {
    for (const auto& o : omega) {
      const DescentClosure cx = descent_closure(g, omega_translate_class(g, x, o.element), opts);
      if (!cx.complete) continue;
      const bool meet = std::any_of(cx.minimal.begin(), cx.minimal.end(), [&](const AffineElement& m) {
        return std::binary_search(cy.minimal.begin(), cy.minimal.end(), m);
      });
      if (meet) return {true, "descent"};
    }
  }
  // W_a-conjugators of length <= radius, times Omega
  std::unordered_set<AffineElement, AffineHash> ball{g.identity()};
  std::vector<AffineElement> layer{g.identity()};
  std::vector<AffineElement> all{g.identity()};
  for (int r = 0; r < radius; ++r) {
    std::vector<AffineElement> next;
    for (const auto& w : layer)
      for (int i = 0; i <= g.rank(); ++i) {
        AffineElement z = w * g.simple_reflection(i);
        if (ball.insert(z).second) {
          next.push_back(z);
          all.push_back(z);
        }
      }
    layer = std::move(next);
  }
  for (const auto& o : omega) {
    const AffineElement xo = omega_translate_class(g, x, o.element);
    for (const auto& w : all)
      if (g.conjugate(w, xo) == y) return {true, "conjugator-search"};
  }
  return {false, "not-found"};
}

}  // namespace affcox
