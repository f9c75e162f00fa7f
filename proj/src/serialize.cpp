#include "affcox/serialize.hpp"

#include <cstdio>

#include "affcox/detail/closure.hpp"

namespace affcox {

Json to_json(NodeSet s) { return Json(s.to_vector()); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const Vec& r : m.row_vectors()) rows.push_back(r);
  return rows;
}

Json root_system_to_json(const RootSystem& rs) {
  Json j;
  j["type"] = std::string(1, rs.type_letter());
  j["rank"] = rs.rank();
  j["nodes"] = NodeSet::finite_nodes(rs.rank()).to_vector();
  j["cartan"] = to_json(rs.cartan());
  j["positive_roots"] = rs.positive_roots();
  j["highest_root"] = rs.highest_root();
  j["highest_coroot"] = rs.highest_coroot();
  j["minuscule"] = rs.minuscule_indices();
  j["fundamental_group_order"] = rs.fundamental_group_order();
  Json autos = Json::array();
  for (const auto& a : rs.diagram_automorphisms())
    autos.push_back({{"name", a.name}, {"cycles", cycle_notation(a.perm)}, {"perm", a.perm}, {"order", a.order}});
  j["diagram_automorphisms"] = autos;
  return j;
}

Json group_to_json(const AffineWeylGroup& g) {
  return {{"name", g.name()},
          {"type", std::string(1, g.root_system().type_letter())},
          {"rank", g.rank()},
          {"twist", g.finite().twist().name},
          {"twist_order", g.delta_order()}};
}

Json finite_element_to_json(const FiniteWeylGroup& w0, const FiniteWeylElement& f) {
  return {{"text", w0.to_text(f)}, {"word", w0.reduced_word(f)}, {"delta_pow", f.delta_pow()}, {"matrix", to_json(f.matrix())}};
}

Json element_to_json(const AffineWeylGroup& g, const AffineElement& x) {
  return {{"text", g.to_text(x)},
          {"chi", x.chi_vec()},
          {"finite_word", g.finite().reduced_word(x.finite())},
          {"delta_pow", x.delta_pow()},
          {"length", g.length(x)}};
}

Json class_report_to_json(const AffineWeylGroup& g, const ClassReport& r) {
  Json j;
  j["tau"] = {{"text", g.to_text(r.tau)},
              {"minuscule", r.tau_minuscule ? Json(*r.tau_minuscule) : Json(nullptr)},
              {"delta_pow", r.tau.delta_pow()}};
  j["representative"] = g.to_text(r.representative);
  j["J"] = r.j_found ? to_json(*r.j_found) : Json(nullptr);
  j["minimal_length"] = r.minimal_length;
  j["closure_size"] = r.closure_size;
  j["parabolic_coxeter_count"] = r.parabolic_coxeter_count;
  Json mins = Json::array();
  for (const auto& m : r.minimal_set) mins.push_back(g.to_text(m));
  j["minimal_set"] = mins;
  j["checks"] = {{"is_finite_coxeter_part", r.checks.is_finite_coxeter_part},
                 {"minimal_equals_parabolic_coxeters", r.checks.minimal_equals_parabolic_coxeters},
                 {"support_constant_on_minimal", r.checks.support_constant_on_minimal},
                 {"J_proper", r.checks.j_proper},
                 {"J_tau_stable", r.checks.j_tau_stable}};
  if (r.edge_log) {
    Json edges = Json::array();
    for (const auto& e : *r.edge_log) edges.push_back({g.to_text(e.from), e.node, g.to_text(e.to)});
    j["edge_log"] = edges;
  }
  return j;
}

Json entry_to_json(const CaseEntry& e) {
  Json j;
  j["type"] = std::string(1, e.type_letter);
  j["rank"] = e.rank;
  j["twist"] = e.twist;
  j["delta_pow"] = e.delta_pow;
  j["delta"] = e.delta_name;
  j["minuscule"] = e.minuscule ? Json(*e.minuscule) : Json(nullptr);
  j["parity_case"] = e.parity_case;
  j["orbits"] = e.orbits;
  j["J"] = to_json(e.j);
  j["c_word"] = e.c_word;
  j["source"] = e.source;
  if (!e.transport.empty()) j["transport"] = e.transport;
  return j;
}

CaseEntry entry_from_json(const Json& j) {
  CaseEntry e;
  const std::string t = j.at("type").get<std::string>();
  if (t.size() != 1) throw std::invalid_argument("entry type must be a single letter");
  e.type_letter = t[0];
  e.rank = j.at("rank").get<int>();
  e.twist = j.at("twist").get<std::string>();
  e.delta_pow = j.at("delta_pow").get<int>();
  e.delta_name = j.at("delta").get<std::string>();
  if (!j.at("minuscule").is_null()) e.minuscule = j.at("minuscule").get<int>();
  e.parity_case = j.at("parity_case").get<std::string>();
  e.orbits = j.at("orbits").get<std::vector<std::vector<int>>>();
  for (int v : j.at("J").get<std::vector<int>>()) {
    if (v < 0 || v > kMaxRank) throw std::invalid_argument("entry J contains an invalid node");
    e.j.insert(v);
  }
  e.c_word = j.at("c_word").get<std::vector<int>>();
  e.source = j.at("source").get<std::string>();
  if (j.contains("transport")) e.transport = j.at("transport").get<std::string>();
  return e;
}

Json entry_checks_to_json(const EntryChecks& c) {
  return {{"tau_length_zero", c.tau_length_zero},
          {"orbits_match", c.orbits_match},
          {"support_equals_J", c.support_equals_j},
          {"finite_part_coxeter", c.finite_part_coxeter},
          {"is_parabolic_coxeter", c.is_parabolic_coxeter},
          {"J_maximal_proper", c.j_maximal_proper}};
}

Json coinvariant_to_json(const CoinvariantGroup& c) {
  Json elems = Json::array();
  for (const Vec& v : c.elements()) elems.push_back(v);
  return {{"delta_pow", c.delta_pow()},
          {"structure", c.structure()},
          {"order", c.order()},
          {"order_from_smith", c.order_from_smith()},
          {"invariant_factors", c.invariant_factors()},
          {"relation_basis", to_json(c.normal_form())},
          {"elements", elems}};
}

Json lattice_report_to_json(const FiniteWeylGroup& w0, const LatticeIdentityReport& r) {
  Json pre = Json::array();
  for (std::size_t i = 0; i < r.coroot_preimages.size(); ++i)
    pre.push_back({{"coroot", static_cast<int>(i) + 1},
                   {"preimage", r.coroot_preimages[i].empty() ? Json(nullptr) : Json(r.coroot_preimages[i])}});
  return {{"coxeter", w0.to_text(r.coxeter)},
          {"one_minus_c_basis", to_json(r.one_minus_c_basis)},
          {"relation_basis", to_json(r.relation_basis)},
          {"checks",
           {{"lattices_equal", r.lattices_equal},
            {"inclusion_holds", r.inclusion_holds},
            {"coroots_contained", r.coroots_contained}}},
          {"coroot_preimages", pre}};
}

std::string checksum(const Json& j) {
  const std::string s = j.dump();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(detail::hash_bytes(s.data(), s.size())));
  return std::string("fnv1a64:") + buf;
}

}  // namespace affcox
