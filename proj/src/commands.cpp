#include "affcox/commands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace affcox {

namespace {

char parse_letter(const std::string& type) {
  if (type.size() != 1 || !std::isalpha(static_cast<unsigned char>(type[0])))
    throw std::invalid_argument("--type must be a single letter A-G, got '" + type + "'");
  return static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
}

AffineWeylGroup make_group(const CommandOptions& o) {
  if (o.type.empty()) throw std::invalid_argument("--type is required");
  if (o.rank <= 0) throw std::invalid_argument("--rank is required");
  return AffineWeylGroup(parse_letter(o.type), o.rank, o.twist.empty() ? "id" : o.twist);
}

std::size_t budget_of(const CommandOptions& o) { return o.node_budget > 0 ? o.node_budget : default_node_budget(); }

struct Target {
  int k = 0;
  std::optional<int> i;
};

std::vector<int> delta_powers(const AffineWeylGroup& g, const CommandOptions& o) {
  if (o.delta_pow) {
    if (*o.delta_pow < 0 || *o.delta_pow >= g.delta_order())
      throw std::invalid_argument("--delta-pow must lie in [0, " + std::to_string(g.delta_order() - 1) + "] for " + g.name());
    return {*o.delta_pow};
  }
  std::vector<int> ks(static_cast<std::size_t>(g.delta_order()));
  for (int k = 0; k < g.delta_order(); ++k) ks[static_cast<std::size_t>(k)] = k;
  return ks;
}

std::vector<Target> select_targets(const AffineWeylGroup& g, const CommandOptions& o) {
  std::vector<std::optional<int>> taus;
  const auto& mins = g.root_system().minuscule_indices();
  if (o.tau.empty() || o.tau == "all") {
    taus.push_back(std::nullopt);
    for (int i : mins) taus.push_back(i);
  } else if (o.tau == "identity" || o.tau == "e" || o.tau == "0") {
    taus.push_back(std::nullopt);
  } else {
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(o.tau, &used);
      if (used != o.tau.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("--tau must be 'all', 'identity' or a minuscule node index, got '" + o.tau + "'");
    }
    if (std::find(mins.begin(), mins.end(), i) == mins.end())
      throw std::invalid_argument("--tau " + o.tau + ": node " + std::to_string(i) + " is not minuscule in " +
                                  g.root_system().name());
    taus.push_back(i);
  }
  std::vector<Target> out;
  for (int k : delta_powers(g, o))
    for (const auto& t : taus) out.push_back({k, t});
  return out;
}

std::string tau_label(std::optional<int> i, int k) {
  std::string s = i ? "tau_" + std::to_string(*i) : "1";
  if (k != 0) s += " d^" + std::to_string(k);
  return s;
}

bool all_true(const Json& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Json& v) { return v.get<bool>(); });
}

void render_checks(std::ostringstream& os, const Json& checks, const std::string& indent) {
  for (const auto& [name, v] : checks.items()) os << indent << (v.get<bool>() ? "PASS " : "FAIL ") << name << "\n";
}

std::string join_ints(const Json& arr, const std::string& prefix = "", const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? sep : "") + prefix + std::to_string(arr[i].get<int>());
  return s;
}

std::string set_text(const Json& arr) { return "{" + join_ints(arr, "", ",") + "}"; }

AffineElement random_wa_element(const AffineWeylGroup& g, std::mt19937_64& rng, int max_len) {
  const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
  std::vector<int> word;
  for (int l = 0; l < len; ++l) word.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(g.rank() + 1)));
  return g.from_word(word);
}

struct ClassCandidate {
  AffineElement element;
  std::optional<CaseEntry> entry;  // set when the element is the table witness itself
  std::vector<AffineElement> minimal;
};

bool meets(const std::vector<AffineElement>& a, const std::vector<AffineElement>& b) {
  return std::any_of(a.begin(), a.end(), [&](const AffineElement& x) { return std::binary_search(b.begin(), b.end(), x); });
}

// W_a-classes with finite Coxeter part inside W_a tau': Omega-translates of the
// witnesses for every tau in Omega (same delta-power) that land in this coset,
// separated by their minimal strata.
std::vector<ClassCandidate> enumerate_classes(const AffineWeylGroup& g, int k, std::optional<int> i,
                                              const AffineElement& target, std::size_t budget) {
  std::vector<CaseEntry> entries{entry_for(g, k, i)};
  if (i) entries.push_back(entry_for(g, k, std::nullopt));
  for (int m : g.root_system().minuscule_indices())
    if (!i || m != *i) entries.push_back(entry_for(g, k, m));
  const auto omega = g.omega_group();
  ClosureOptions copts;
  copts.node_budget = budget;
  std::vector<ClassCandidate> out;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const AffineElement x = entry_element(g, entries[e]);
    for (const auto& sigma : omega) {
      const AffineElement y = omega_translate_class(g, x, sigma.element);
      if (g.length_zero_part(y) != target) continue;
      const DescentClosure cl = descent_closure(g, y, copts);
      if (!cl.complete) throw BudgetExceeded("closure of " + g.to_text(y) + " exceeded the node budget");
      if (std::any_of(out.begin(), out.end(), [&](const ClassCandidate& c) { return meets(c.minimal, cl.minimal); })) continue;
      ClassCandidate c{y, std::nullopt, cl.minimal};
      if (e == 0 && !sigma.minuscule) c.entry = entries[e];
      out.push_back(std::move(c));
    }
  }
  return out;
}

Json verify_class(const AffineWeylGroup& g, const AffineElement& rep, const AffineElement& tau,
                  const std::optional<CaseEntry>& entry, const CommandOptions& o, std::mt19937_64& rng, bool& partial) {
  ClosureOptions copts;
  copts.node_budget = budget_of(o);
  copts.record_edges = o.edges;
  Json j;
  try {
    const ClassReport report = verify_main_theorem(g, rep, tau, copts);
    j = class_report_to_json(g, report);
    Json checks = j["checks"];
    if (entry) {
      j["table_entry"] = entry_to_json(*entry);
      checks["matches_table_J"] = report.j_found && *report.j_found == entry->j;
    }
    Json runs = Json::array();
    bool independent = true;
    ClosureOptions quiet = copts;
    quiet.record_edges = false;
    for (int c = 0; c < o.conjugates; ++c) {
      const AffineElement w = random_wa_element(g, rng, o.conj_length);
      const AffineElement start = g.conjugate(w, rep);
      const ClassReport r2 = verify_main_theorem(g, start, tau, quiet);
      const bool same = r2.minimal_set == report.minimal_set && r2.checks.all();
      independent = independent && same;
      runs.push_back({{"conjugator", g.to_text(w)},
                      {"start", g.to_text(start)},
                      {"start_length", g.length(start)},
                      {"closure_size", r2.closure_size},
                      {"same_minimal_set", same}});
    }
    j["conjugate_runs"] = runs;
    checks["start_independent"] = independent;
    const FiniteOrderWitness fo = g.is_finite_order(rep);
    j["finite_order"] = {{"order", fo.finite_order}, {"power_is_identity", fo.is_finite}, {"translation", fo.translation}};
    checks["finite_order"] = fo.is_finite;
    j["checks"] = checks;
    j["passed"] = all_true(checks);
  } catch (const BudgetExceeded& e) {
    partial = true;
    j["representative"] = g.to_text(rep);
    j["error"] = e.what();
    j["checks"] = {{"closure_complete", false}};
    j["passed"] = false;
  }
  return j;
}

std::string verify_text(const Json& doc) {
  std::ostringstream os;
  os << "verify " << doc["group"]["name"].get<std::string>() << " (twist " << doc["group"]["twist"].get<std::string>()
     << "), " << doc["config"]["conjugates"].get<int>() << " random conjugates of length <= "
     << doc["config"]["conj_length"].get<int>() << ", seed " << doc["config"]["seed"].get<std::uint64_t>() << "\n";
  std::size_t classes = 0, failures = 0;
  for (const auto& t : doc["targets"]) {
    os << "tau = " << t["tau_label"].get<std::string>() << "  [" << t["tau"].get<std::string>() << "]\n";
    const auto& cls = t["classes"];
    for (std::size_t c = 0; c < cls.size(); ++c) {
      const auto& r = cls[c];
      ++classes;
      if (!r["passed"].get<bool>()) ++failures;
      os << "  class " << c + 1 << " of " << cls.size() << ": " << r["representative"].get<std::string>();
      if (r.contains("table_entry")) os << " (table witness)";
      os << "\n";
      if (r.contains("error")) {
        os << "    ERROR " << r["error"].get<std::string>() << "\n";
      } else {
        os << "    J = " << set_text(r["J"]) << "  minimal length " << r["minimal_length"].get<int>() << "  |O_min| = "
           << r["minimal_set"].size() << "  closure " << r["closure_size"].get<std::size_t>() << "\n";
      }
      render_checks(os, r["checks"], "    ");
    }
  }
  os << "result: " << (doc["all_passed"].get<bool>() ? "PASS" : "FAIL") << " (" << classes << " classes, " << failures
     << " failing)\n";
  return os.str();
}

}  // namespace

CommandResult run_verify(const CommandOptions& o) {
  if (o.conjugates < 0) throw std::invalid_argument("--conjugates must be non-negative");
  if (o.conj_length < 0) throw std::invalid_argument("--conj-length must be non-negative");
  const AffineWeylGroup g = make_group(o);
  CommandResult res;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "verify";
  doc["group"] = group_to_json(g);
  doc["config"] = {{"conjugates", o.conjugates}, {"conj_length", o.conj_length}, {"seed", o.seed}, {"node_budget", budget_of(o)}};
  std::mt19937_64 rng(o.seed);
  Json targets = Json::array();
  if (!o.rep.empty() && o.rep != "from-table") {
    const AffineElement x = g.parse(o.rep);
    const AffineElement tau = g.length_zero_part(x);
    const auto om = find_omega(g, tau);
    Json t{{"tau", g.to_text(tau)}, {"tau_label", tau_label(om ? om->minuscule : std::nullopt, tau.delta_pow())}};
    t["classes"] = Json::array({verify_class(g, x, tau, std::nullopt, o, rng, res.partial)});
    targets.push_back(t);
  } else {
    for (const Target& tg : select_targets(g, o)) {
      const AffineElement tau = (tg.i ? g.tau(*tg.i) : g.identity()) * g.delta_power(tg.k);
      Json t{{"tau", g.to_text(tau)}, {"tau_label", tau_label(tg.i, tg.k)}};
      Json classes = Json::array();
      try {
        for (const auto& c : enumerate_classes(g, tg.k, tg.i, tau, budget_of(o)))
          classes.push_back(verify_class(g, c.element, tau, c.entry, o, rng, res.partial));
      } catch (const BudgetExceeded& e) {
        res.partial = true;
        classes.push_back({{"representative", "(class enumeration)"},
                           {"error", e.what()},
                           {"checks", {{"closure_complete", false}}},
                           {"passed", false}});
      }
      t["classes"] = classes;
      targets.push_back(t);
    }
  }
  doc["targets"] = targets;
  bool ok = true;
  for (const auto& t : targets)
    for (const auto& c : t["classes"]) ok = ok && c["passed"].get<bool>();
  doc["partial"] = res.partial;
  doc["all_passed"] = ok;
  res.all_passed = ok;
  res.text = verify_text(doc);
  res.json = std::move(doc);
  return res;
}

CommandResult run_min_elements(const CommandOptions& o) {
  const AffineWeylGroup g = make_group(o);
  CommandResult res;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "min-elements";
  doc["group"] = group_to_json(g);
  std::vector<std::pair<AffineElement, std::string>> starts;
  if (o.rep.empty() || o.rep == "from-table") {
    for (const Target& tg : select_targets(g, o))
      starts.emplace_back(entry_element(g, entry_for(g, tg.k, tg.i)), "table witness for tau = " + tau_label(tg.i, tg.k));
  } else {
    starts.emplace_back(g.parse(o.rep), "given");
  }
  ClosureOptions copts;
  copts.node_budget = budget_of(o);
  Json runs = Json::array();
  bool ok = true;
  for (const auto& [x, origin] : starts) {
    const DescentClosure cl = descent_closure(g, x, copts);
    const AffineElement tau = g.length_zero_part(x);
    Json run{{"start", g.to_text(x)},
             {"origin", origin},
             {"tau", g.to_text(tau)},
             {"finite_coxeter_part", has_finite_coxeter_part(g, x)},
             {"complete", cl.complete},
             {"closure_size", cl.reachable.size()},
             {"minimal_length", cl.minimal_length}};
    Json mins = Json::array();
    for (const auto& m : cl.minimal)
      mins.push_back({{"element", g.to_text(m)}, {"length", g.length(m)}, {"support", to_json(g.support(m, tau))}});
    run["minimal"] = mins;
    if (!cl.complete) {
      res.partial = true;
      ok = false;
    }
    runs.push_back(run);
  }
  doc["runs"] = runs;
  doc["partial"] = res.partial;
  doc["all_passed"] = ok;
  res.all_passed = ok;

  std::ostringstream os;
  os << "min-elements " << g.name() << " (twist " << g.finite().twist().name << ")\n";
  for (const auto& r : runs) {
    os << "start " << r["start"].get<std::string>() << " (" << r["origin"].get<std::string>() << ")\n";
    if (!r["finite_coxeter_part"].get<bool>())
      os << "  note: no finite Coxeter part; the stratum below is only an upper bound for the minimal elements\n";
    if (!r["complete"].get<bool>()) os << "  PARTIAL: node budget exhausted, listing is incomplete\n";
    os << "  " << r["minimal"].size() << " minimal elements of length " << r["minimal_length"].get<int>() << " (closure "
       << r["closure_size"].get<std::size_t>() << ")\n";
    for (const auto& m : r["minimal"])
      os << "  " << m["element"].get<std::string>() << "  length " << m["length"].get<int>() << "  support "
         << set_text(m["support"]) << "\n";
  }
  os << "result: " << (ok ? "PASS" : "FAIL (partial)") << "\n";
  res.text = os.str();
  res.json = std::move(doc);
  return res;
}

Json build_type_a_fixture(int max_rank) {
  Json entries = Json::array();
  for (int r = 1; r <= max_rank; ++r) {
    const AffineWeylGroup g('A', r);
    for (int i : g.root_system().minuscule_indices()) entries.push_back(entry_to_json(derive_entry(g, 0, i)));
  }
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["description"] = "derived witnesses for untwisted type A; regenerate with: affcox tables --type A --max-rank 8 --write-fixture --fixture <path>";
  doc["max_rank"] = max_rank;
  doc["entries"] = entries;
  doc["checksum"] = checksum(entries);
  return doc;
}

Json load_type_a_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read fixture " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::invalid_argument("fixture " + path + " is not valid JSON: " + e.what());
  }
  if (!doc.contains("entries") || !doc.contains("checksum"))
    throw std::invalid_argument("fixture " + path + " lacks entries or checksum");
  if (checksum(doc["entries"]) != doc["checksum"].get<std::string>())
    throw std::invalid_argument("fixture " + path + " checksum mismatch");
  return doc;
}

CommandResult run_tables(const CommandOptions& o) {
  CommandResult res;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "tables";

  if (o.write_fixture) {
    if (o.fixture.empty()) throw std::invalid_argument("--write-fixture requires --fixture <path>");
    const int top = o.rank > 0 ? o.rank : o.max_rank;
    const Json fx = build_type_a_fixture(top);
    std::ofstream out(o.fixture);
    if (!out) throw std::invalid_argument("cannot write fixture " + o.fixture);
    out << fx.dump(2) << "\n";
    doc["fixture_written"] = o.fixture;
    doc["entries"] = fx["entries"].size();
    doc["checksum"] = fx["checksum"];
    doc["all_passed"] = true;
    res.all_passed = true;
    res.text = "wrote " + std::to_string(fx["entries"].size()) + " type-A entries to " + o.fixture + " (" +
               fx["checksum"].get<std::string>() + ")\n";
    res.json = std::move(doc);
    return res;
  }

  std::optional<Json> fixture;
  if (!o.fixture.empty()) fixture = load_type_a_fixture(o.fixture);

  std::string letters = o.type.empty() ? "ABCDEFG" : std::string(1, parse_letter(o.type));
  std::vector<int> ranks;
  if (o.rank > 0) {
    ranks.push_back(o.rank);
  } else {
    for (int r = 1; r <= std::min(o.max_rank, kMaxRank); ++r) ranks.push_back(r);
  }
  Json groups = Json::array();
  bool ok = true;
  std::ostringstream os;
  for (char letter : letters) {
    for (int r : ranks) {
      std::shared_ptr<const RootSystem> rs;
      try {
        rs = std::make_shared<const RootSystem>(RootSystem::build(letter, r));
      } catch (const std::invalid_argument&) {
        if (o.rank > 0 && !o.type.empty()) throw;
        continue;
      }
      std::vector<std::string> twists;
      if (!o.twist.empty()) {
        twists.push_back(rs->automorphism(o.twist).name);
      } else {
        for (const auto& a : rs->diagram_automorphisms()) twists.push_back(a.name);
      }
      for (const auto& tw : twists) {
        const AffineWeylGroup g(rs, tw);
        Json gj{{"group", group_to_json(g)}};
        Json rows = Json::array();
        os << g.name() << " (twist " << tw << ")\n";
        for (const CaseEntry& e : table_entries(g)) {
          if (o.delta_pow && e.delta_pow != *o.delta_pow) continue;
          const EntryChecks ch = verify_entry(g, e);
          Json row = entry_to_json(e);
          Json checks = entry_checks_to_json(ch);
          if (!ch.orbits_match) row["computed_orbits"] = ch.computed_orbits;
          if (!ch.support_equals_j) row["computed_support"] = to_json(ch.computed_support);
          if (fixture && e.source == "derived" && e.type_letter == 'A') {
            const Json* match = nullptr;
            for (const auto& fe : (*fixture)["entries"])
              if (fe["rank"] == e.rank && fe["minuscule"] == Json(*e.minuscule)) match = &fe;
            if (match) {
              const CaseEntry fe = entry_from_json(*match);
              checks["fixture_match"] = fe.j == e.j && fe.c_word == e.c_word && canonical_orbits(fe.orbits) == canonical_orbits(e.orbits);
            } else {
              row["fixture"] = "not covered";
            }
          }
          if (o.cross_check && e.minuscule && e.source != "derived") {
            try {
              const CaseEntry found = derive_entry(g, e.delta_pow, *e.minuscule);
              row["search_witness"] = {{"J", to_json(found.j)}, {"c_word", found.c_word}};
              checks["search_finds_witness"] = true;
            } catch (const std::runtime_error&) {
              checks["search_finds_witness"] = false;
            }
          }
          row["checks"] = checks;
          const bool passed = all_true(checks);
          row["passed"] = passed;
          ok = ok && passed;
          os << "  " << (passed ? "PASS" : "FAIL") << "  tau = " << tau_label(e.minuscule, e.delta_pow) << "  J = "
             << to_json(e.j).dump() << "  c = " << (e.c_word.empty() ? "e" : join_ints(Json(e.c_word), "s")) << "  ["
             << e.source << (e.transport.empty() ? "" : " via " + e.transport) << (e.parity_case.empty() ? "" : "; " + e.parity_case)
             << "]\n";
          if (!passed) render_checks(os, checks, "        ");
          rows.push_back(row);
        }
        gj["entries"] = rows;
        groups.push_back(gj);
      }
    }
  }
  doc["groups"] = groups;
  doc["all_passed"] = ok;
  os << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  res.all_passed = ok;
  res.text = os.str();
  res.json = std::move(doc);
  return res;
}

CommandResult run_classify(const CommandOptions& o) {
  const AffineWeylGroup g = make_group(o);
  CommandResult res;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "classify";
  doc["group"] = group_to_json(g);
  Json cosets = Json::array();
  bool ok = true;
  std::ostringstream os;
  os << "classify " << g.name() << " (twist " << g.finite().twist().name << ")\n";
  for (int k : delta_powers(g, o)) {
    const CoinvariantGroup coinv(g.finite(), k);
    const FiniteWeylElement c = g.finite().standard_coxeter_element(k);
    const LatticeIdentityReport li = lattice_identity_check(g.finite(), c);
    Json cj;
    cj["delta_pow"] = k;
    cj["coinvariants"] = coinvariant_to_json(coinv);
    cj["lattice_identity"] = lattice_report_to_json(g.finite(), li);
    Json checks{{"lattices_equal", li.lattices_equal},
                {"inclusion_holds", li.inclusion_holds},
                {"coroots_contained", li.coroots_contained},
                {"order_consistent", coinv.order() == coinv.order_from_smith()}};
    if (k == 0) checks["order_equals_det_cartan"] = coinv.order() == g.root_system().fundamental_group_order();
    Json reps = Json::array();
    bool kappa_ok = true, coxeter_ok = true, spot_ok = true;
    for (const Vec& v : coinv.elements()) {
      const AffineElement x = classify_representative(g, c, v);
      const Vec kv = kottwitz(g, x, k);
      Json rj{{"kottwitz", v}, {"coordinates", coinv.coordinates(v)}, {"representative", g.to_text(x)}};
      kappa_ok = kappa_ok && kv == v;
      coxeter_ok = coxeter_ok && has_finite_coxeter_part(g, x);
      if (g.rank() <= 2) {
        Vec mu = v;
        const Vec shift = coinv.relations().row(0);
        for (std::size_t t = 0; t < mu.size(); ++t) mu[t] += shift[t];
        const AffineElement y = g.translation(mu) * g.lift(c);
        const SpotCheck sc = spot_check_same_class(g, x, y);
        rj["spot_check"] = {{"other_lift", g.to_text(y)}, {"same_class", sc.same_class}, {"method", sc.method}};
        spot_ok = spot_ok && sc.same_class;
      }
      reps.push_back(rj);
    }
    checks["kottwitz_of_representatives"] = kappa_ok;
    checks["representatives_have_finite_coxeter_part"] = coxeter_ok;
    if (g.rank() <= 2) checks["spot_check_other_lift_same_class"] = spot_ok;
    cj["representatives"] = reps;
    cj["checks"] = checks;
    const bool passed = all_true(checks);
    cj["passed"] = passed;
    ok = ok && passed;
    cosets.push_back(cj);

    os << "coset d^" << k << ": coinvariants " << coinv.structure() << " (order " << coinv.order() << ")\n";
    os << "  Coxeter element " << g.finite().to_text(c) << "\n";
    os << "  (1 - c d)P = (1 - d)P + Q: normal form " << to_json(li.one_minus_c_basis).dump() << "\n";
    for (std::size_t i = 0; i < li.coroot_preimages.size(); ++i)
      os << "  alpha_" << i + 1 << "^vee = (1 - c d) " << Json(li.coroot_preimages[i]).dump() << "\n";
    for (const auto& rj : reps) {
      os << "  kappa " << rj["kottwitz"].dump() << " -> " << rj["representative"].get<std::string>();
      if (rj.contains("spot_check"))
        os << "  (spot check vs " << rj["spot_check"]["other_lift"].get<std::string>() << ": "
           << rj["spot_check"]["method"].get<std::string>() << ")";
      os << "\n";
    }
    render_checks(os, checks, "  ");
  }
  doc["cosets"] = cosets;
  doc["all_passed"] = ok;
  os << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  res.all_passed = ok;
  res.text = os.str();
  res.json = std::move(doc);
  return res;
}

}  // namespace affcox
