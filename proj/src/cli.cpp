#include "cycinv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "cycinv/errors.hpp"
#include "cycinv/invariant_betti.hpp"
#include "cycinv/serialize.hpp"

namespace cycinv {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::pair<Command, std::string>> kCommands{
    {Command::Gens, "gens"},       {Command::Relations, "relations"}, {Command::Betti, "betti"},
    {Command::EdgeBetti, "edge-betti"}, {Command::Sweep, "sweep"},    {Command::Fuzz, "fuzz"},
    {Command::HilbertCheck, "hilbert-check"}};

std::string route_name(WeightedRoute r) {
  switch (r) {
    case WeightedRoute::Trivial: return "trivial";
    case WeightedRoute::Hochster: return "hochster";
    case WeightedRoute::PathCycle: return "path-cycle";
  }
  return "?";
}

json to_json(const GroebnerReport& g) {
  json j{{"pass", g.pass}, {"pairs_checked", g.pairs_checked}, {"pairs_skipped_coprime", g.pairs_skipped_coprime}};
  j["failures"] = json::array();
  for (auto [a, b] : g.failures) j["failures"].push_back({a, b});
  return j;
}

json to_json(const RelationAudit& a) {
  return {{"exact", a.exact}, {"leads_quadratic", a.leads_quadratic}, {"tails_ordered", a.tails_ordered},
          {"minimal", a.minimal}, {"count_ok", a.count_ok}};
}

std::string series_string(const Series& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? " " : "") << s[k];
  return os.str();
}

std::string pass_fail(bool ok) { return ok ? "ok" : "FAIL"; }

WeightSystem weight_system(const RunConfig& c) { return WeightSystem(c.n, c.weights); }

int cmd_gens(const RunConfig& c, std::ostream& out) {
  const auto gens = minimal_generators(weight_system(c));
  if (c.format == OutputFormat::Json) out << to_json(gens).dump(2) << '\n';
  else out << format_generators(gens);
  return 0;
}

int cmd_relations(const RunConfig& c, std::ostream& out) {
  const auto gens = minimal_generators(weight_system(c));
  const auto ring = gens.presentation_ring();
  const auto rels = build_relations(gens);
  const auto audit = audit_relations(rels, gens);
  GroebnerReport g;
  if (!rels.empty()) g = groebner_verify(binomials(rels), ring);
  const bool ok = audit.ok() && g.pass;
  if (c.format == OutputFormat::Json) {
    json j;
    j["n"] = c.n;
    j["weights"] = c.weights;
    j["m"] = gens.m();
    j["relations"] = json::array();
    for (const auto& r : rels) {
      j["relations"].push_back({{"i", r.i},
                                {"j", r.j},
                                {"text", format_relation(r, ring)},
                                {"block", to_string(r.block)},
                                {"a_power", r.a_power},
                                {"search", r.used_search}});
    }
    j["groebner"] = to_json(g);
    j["audit"] = to_json(audit);
    out << j.dump(2) << '\n';
  } else {
    out << weight_system(c).to_string() << ": " << rels.size() << " relations\n";
    for (const auto& r : rels) out << format_relation(r, ring) << (r.used_search ? "  [search]" : "") << '\n';
    out << "groebner: " << (g.pass ? "pass" : "FAIL") << " (" << g.pairs_checked << " S-pairs reduced, "
        << g.pairs_skipped_coprime << " skipped by coprime leads)\n";
    out << "audit: " << pass_fail(audit.ok()) << '\n';
  }
  return ok ? 0 : 1;
}

InvariantBettiOptions betti_options(const RunConfig& c) {
  InvariantBettiOptions o;
  o.field = FieldCharacteristic::make(c.field_char);
  o.threads = c.threads;
  return o;
}

int cmd_betti(const RunConfig& c, std::ostream& out) {
  const auto report = invariant_ring_betti(weight_system(c), betti_options(c));
  if (c.format == OutputFormat::Json) {
    json j;
    j["n"] = c.n;
    j["weights"] = c.weights;
    j["m"] = report.m;
    j["route"] = route_name(report.route);
    j["pure"] = report.pure;
    j["routes_agree"] = report.routes_agree;
    j["groebner"] = to_json(report.groebner);
    j["polynomial"] = to_json(report.polynomial);
    j["weighted"] = to_json(report.weighted);
    j["diagnostics"] = report.diagnostics;
    out << j.dump(2) << '\n';
  } else {
    out << weight_system(c).to_string() << ": m = " << report.m << ", " << report.relations.size()
        << " relations, weighted table via " << route_name(report.route) << "\n\n";
    out << "polynomial Betti numbers:\n" << format_grid(report.polynomial) << '\n';
    out << "graded Betti numbers:\n" << format_grid(report.weighted);
    out << "\ngroebner: " << (report.groebner.pass ? "pass" : "FAIL") << ", pure: " << (report.pure ? "yes" : "NO")
        << ", closed form agrees: " << (report.routes_agree ? "yes" : "NO") << '\n';
    for (const auto& d : report.diagnostics) out << "note: " << d << '\n';
  }
  return report.ok() ? 0 : 1;
}

std::string totals_row(const BettiTable& t) {
  std::ostringstream os;
  os << "beta_i:";
  for (int i : t.indices()) os << ' ' << t.total(i);
  return os.str();
}

int cmd_edge_betti(const RunConfig& c, std::ostream& out) {
  const auto field = FieldCharacteristic::make(c.field_char);
  std::optional<Graph> g;
  std::optional<BettiTable> closed;
  if (c.graph_file) {
    std::ifstream in(*c.graph_file);
    if (!in) throw ValidationError("cannot read graph file '" + *c.graph_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    g = graph_from_json(buf.str());
  } else {
    closed = closed_form_betti(*c.m, *c.s);
    if (*c.m <= HochsterOptions{}.max_vertices) g = build_xs(*c.m, *c.s);
  }
  std::optional<BettiTable> hoch;
  std::optional<std::map<int, std::int64_t>> strand;
  bool agree = true;
  if (g) {
    HochsterOptions opt;
    opt.threads = c.threads;
    hoch = hochster_betti(*g, field, opt);
    strand = linear_strand_betti(*g);
    for (const auto& [i, v] : *strand) agree = agree && hoch->at(i, i + 2) == v;
    if (closed) agree = agree && *closed == *hoch;
  }
  const BettiTable& shown = hoch ? *hoch : *closed;
  if (c.format == OutputFormat::Json) {
    json j;
    if (c.graph_file) j["graph"] = json::parse(graph_to_json(*g));
    else {
      j["m"] = *c.m;
      j["s"] = *c.s;
    }
    if (hoch) j["hochster"] = to_json(*hoch);
    if (closed) j["closed_form"] = to_json(*closed);
    if (strand) {
      json ls = json::object();
      for (const auto& [i, v] : *strand) ls[std::to_string(i)] = v;
      j["linear_strand"] = ls;
    }
    j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else {
    out << totals_row(shown) << '\n' << format_grid(shown);
    if (hoch && closed) out << "closed form vs Hochster: " << (agree ? "agree" : "DISAGREE") << '\n';
    else if (!hoch) out << "closed form only (too many vertices for subset enumeration)\n";
  }
  return agree ? 0 : 1;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  bool all_ok = true;
  json rows = json::array();
  for (int m = c.m_min; m <= c.m_max; ++m) {
    for (int s = 0; s <= m; ++s) {
      const Graph g = build_xs(m, s);
      HochsterOptions opt;
      opt.threads = c.threads;
      opt.cross_check = FieldCharacteristic{2};
      const auto h = hochster(g, std::vector<std::int64_t>(static_cast<std::size_t>(m), 1),
                              FieldCharacteristic::make(c.field_char), opt);
      const auto table = h.ranks.polynomial();
      const bool formula = table == closed_form_betti(m, s);
      bool strand_ok = true;
      for (const auto& [i, v] : linear_strand_betti(g)) strand_ok = strand_ok && table.at(i, i + 2) == v;
      const bool ok = formula && strand_ok && h.field_mismatches == 0;
      all_ok = all_ok && ok;
      if (c.format == OutputFormat::Json) {
        rows.push_back({{"m", m}, {"s", s}, {"closed_form", formula}, {"linear_strand", strand_ok},
                        {"field_mismatches", h.field_mismatches}, {"ok", ok}});
      } else {
        out << "m=" << m << " s=" << s << " closed-form " << pass_fail(formula) << " linear-strand "
            << pass_fail(strand_ok) << " Q-vs-F2 " << pass_fail(h.field_mismatches == 0) << '\n';
      }
    }
  }
  if (c.format == OutputFormat::Json) out << json{{"rows", rows}, {"pass", all_ok}}.dump(2) << '\n';
  else out << (all_ok ? "sweep passed\n" : "sweep FAILED\n");
  return all_ok ? 0 : 1;
}

struct SystemCheck {
  bool staircase = true;
  bool relations = true;
  bool groebner = true;
  bool hilbert = true;
  bool standard = true;
  bool structure = true;
  bool ok() const { return staircase && relations && groebner && hilbert && standard && structure; }
};

bool staircase_ok(const GeneratorSet& gens) {
  const auto& ws = gens.weights();
  const auto cyc = gens.cyclic();
  for (const auto& g : gens.ordered())
    if (!ws.is_invariant({g.image.exponents().data(), static_cast<std::size_t>(g.image.size())})) return false;
  for (std::size_t a = 0; a < gens.ordered().size(); ++a)
    for (std::size_t b = 0; b < gens.ordered().size(); ++b)
      if (a != b && gens.ordered()[a].image.divides(gens.ordered()[b].image)) return false;
  if (!gens.is_3d()) {
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k)
      if (!(cyc[k].image[0] > cyc[k + 1].image[0] && cyc[k].image[1] < cyc[k + 1].image[1])) return false;
    const auto n = ws.order();
    return cyc.front().image[0] == n / std::gcd(n, ws.weight(0)) && cyc.back().image[1] == n / std::gcd(n, ws.weight(1)) &&
           cyc.front().image[1] == 0 && cyc.back().image[0] == 0;
  }
  return gens.ordered().front().image == Monomial{1, 1, 1};
}

SystemCheck check_system(const WeightSystem& ws, unsigned threads) {
  SystemCheck out;
  InvariantBettiOptions opt;
  opt.threads = threads;
  const auto report = invariant_ring_betti(ws, opt);
  out.staircase = staircase_ok(report.generators);
  out.relations = report.audit.ok() && report.lead_graph_matches;
  out.groebner = report.groebner.pass;
  const int d = static_cast<int>(3 * ws.order());
  out.hilbert = hilbert_identity(report, d).holds;
  out.standard = count_standard_monomials(report.relations, report.generators, d) ==
                 count_invariant_monomials(ws, d);
  out.structure = report.pure && report.routes_agree;
  if (report.generators.is_3d()) {
    const int m = report.m;
    for (int i = 0; i <= m - 2; ++i) out.structure = out.structure && report.polynomial.total(i) == report.polynomial.total(m - 2 - i);
  }
  return out;
}

int cmd_fuzz(const RunConfig& c, std::ostream& out) {
  std::mt19937_64 rng(c.seed);
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  std::vector<WeightSystem> systems;
  for (int k = 0; k < c.count_2d; ++k) {
    const auto n = uniform(3, c.n_max_2d);
    systems.emplace_back(n, std::vector<std::int64_t>{uniform(1, n - 1), uniform(1, n - 1)});
  }
  for (int k = 0; k < c.count_3d;) {
    const auto n = uniform(3, c.n_max_3d);
    const auto b = uniform(1, n - 1), cc = uniform(1, n - 1);
    const auto d = ((-(b + cc)) % n + n) % n;
    if (d == 0) continue;
    systems.emplace_back(n, std::vector<std::int64_t>{b, cc, d});
    ++k;
  }
  bool all_ok = true;
  json rows = json::array();
  for (const auto& ws : systems) {
    const auto r = check_system(ws, c.threads);
    all_ok = all_ok && r.ok();
    if (c.format == OutputFormat::Json) {
      rows.push_back({{"n", ws.order()}, {"weights", ws.weights()}, {"staircase", r.staircase},
                      {"relations", r.relations}, {"groebner", r.groebner}, {"hilbert", r.hilbert},
                      {"standard_monomials", r.standard}, {"structure", r.structure}, {"ok", r.ok()}});
    } else {
      out << ws.to_string() << ": " << pass_fail(r.ok());
      if (!r.ok())
        out << " [staircase " << pass_fail(r.staircase) << ", relations " << pass_fail(r.relations) << ", groebner "
            << pass_fail(r.groebner) << ", hilbert " << pass_fail(r.hilbert) << ", standard "
            << pass_fail(r.standard) << ", structure " << pass_fail(r.structure) << "]";
      out << '\n';
    }
  }
  if (c.format == OutputFormat::Json) out << json{{"seed", c.seed}, {"systems", rows}, {"pass", all_ok}}.dump(2) << '\n';
  else out << systems.size() << " systems, " << (all_ok ? "all passed" : "FAILURES") << '\n';
  return all_ok ? 0 : 1;
}

int cmd_hilbert(const RunConfig& c, std::ostream& out) {
  const auto ws = weight_system(c);
  const int d = c.max_degree.value_or(static_cast<int>(3 * ws.order()));
  InvariantBettiOptions opt = betti_options(c);
  const auto report = invariant_ring_betti(ws, opt);
  const auto check = hilbert_identity(report, d);
  const auto standard = count_standard_monomials(report.relations, report.generators, d);
  const auto invariant = count_invariant_monomials(ws, d);
  const bool ok = check.holds && standard == invariant;
  if (c.format == OutputFormat::Json) {
    json j{{"n", c.n}, {"weights", c.weights}, {"max_degree", d}, {"betti_numerator", check.numerator},
           {"expected_numerator", check.expected}, {"invariant_counts", invariant}, {"standard_counts", standard},
           {"identity_holds", check.holds}, {"standard_counts_match", standard == invariant}};
    out << j.dump(2) << '\n';
  } else {
    out << ws.to_string() << ", degrees 0.." << d << '\n';
    out << "invariant monomials: " << series_string(invariant) << '\n';
    out << "standard monomials:  " << series_string(standard) << '\n';
    out << "Betti numerator:     " << series_string(check.numerator) << '\n';
    out << "H(t) * prod(1-t^d):  " << series_string(check.expected) << '\n';
    out << "identity " << (check.holds ? "holds" : "FAILS") << ", standard monomial counts "
        << (standard == invariant ? "match" : "DIFFER") << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [cmd, text] : kCommands)
    if (text == name) return cmd;
  throw ValidationError("unknown command '" + name + "'");
}

std::string to_string(Command c) {
  for (const auto& [cmd, text] : kCommands)
    if (cmd == c) return text;
  return "?";
}

void validate(const RunConfig& c) {
  auto need_weights = [&c] {
    if (c.n == 0 || c.weights.empty()) throw ValidationError(to_string(c.command) + " requires --n and --weights");
    WeightSystem(c.n, c.weights);
  };
  FieldCharacteristic::make(c.field_char);
  if (c.threads == 0) throw ValidationError("thread count must be positive");
  switch (c.command) {
    case Command::Gens:
    case Command::Relations:
    case Command::Betti:
      need_weights();
      break;
    case Command::HilbertCheck:
      need_weights();
      if (c.max_degree && *c.max_degree < 0) throw ValidationError("--max-degree must be non-negative");
      break;
    case Command::EdgeBetti:
      if (c.graph_file) {
        if (c.m || c.s) throw ValidationError("edge-betti takes either --graph or --m/--s, not both");
      } else {
        if (!c.m || !c.s) throw ValidationError("edge-betti requires --m and --s (or --graph)");
        if (*c.m < 3 || *c.s < 0 || *c.s > *c.m) throw ValidationError("edge-betti needs m >= 3 and 0 <= s <= m");
        if (*c.m > 60) throw ValidationError("edge-betti supports m <= 60");
      }
      break;
    case Command::Sweep:
      if (c.m_min < 3 || c.m_max < c.m_min || c.m_max > 16)
        throw ValidationError("sweep needs 3 <= m-min <= m-max <= 16");
      break;
    case Command::Fuzz:
      if (c.count_2d < 0 || c.count_3d < 0) throw ValidationError("fuzz counts must be non-negative");
      if (c.n_max_2d < 3 || c.n_max_3d < 3 || c.n_max_2d > 60 || c.n_max_3d > 60)
        throw ValidationError("fuzz n bounds must be in [3, 60]");
      break;
  }
}

std::optional<unsigned> threads_from_env() {
  const char* v = std::getenv("CYCINV_THREADS");
  if (!v) return std::nullopt;
  try {
    const long t = std::stol(v);
    if (t > 0 && t <= 1024) return static_cast<unsigned>(t);
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  try {
    validate(config);
    int status = 0;
    switch (config.command) {
      case Command::Gens: status = cmd_gens(config, buffer); break;
      case Command::Relations: status = cmd_relations(config, buffer); break;
      case Command::Betti: status = cmd_betti(config, buffer); break;
      case Command::EdgeBetti: status = cmd_edge_betti(config, buffer); break;
      case Command::Sweep: status = cmd_sweep(config, buffer); break;
      case Command::Fuzz: status = cmd_fuzz(config, buffer); break;
      case Command::HilbertCheck: status = cmd_hilbert(config, buffer); break;
    }
    out << buffer.str();
    return status;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cycinv
