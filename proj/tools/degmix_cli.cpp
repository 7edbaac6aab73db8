#include "degmix_cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "degmix/composition_plan.hpp"
#include "degmix/enumeration.hpp"
#include "degmix/errors.hpp"
#include "degmix/realization_space.hpp"
#include "degmix/swap_chain.hpp"

namespace degmix::cli {

using nlohmann::json;

namespace {

std::vector<int> int_list(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw InvalidInput(std::string("missing array \"") + key + "\"");
  return j.at(key).get<std::vector<int>>();
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

json forbidden_json(const ForbiddenSet& f) {
  json out = json::array();
  for (const auto& [u, w] : f.pairs()) out.push_back({u + 1, w + 1});
  return out;
}

struct Common {
  std::string seq;
  std::string forbidden;
  bool json = false;
  bool strict = false;
};

SequenceInput load_sequence(const Common& c) {
  SequenceInput in = parse_sequence(read_json_file(c.seq));
  if (!c.forbidden.empty()) {
    if (!std::holds_alternative<BipartiteDegreeSequence>(in.value)) {
      throw InvalidInput("--forbidden applies to bipartite sequences only");
    }
    const ForbiddenSet extra = parse_forbidden(read_json_file(c.forbidden));
    for (const auto& p : extra.pairs()) in.forbidden.insert(p.first, p.second);
  }
  return in;
}

RealizationProblem problem_of(const SequenceInput& in) {
  return std::visit(
      [&](const auto& s) -> RealizationProblem {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DegreeSequence>) {
          return RealizationProblem::simple(s);
        } else if constexpr (std::is_same_v<T, BipartiteDegreeSequence>) {
          return RealizationProblem::bipartite(s, in.forbidden);
        } else {
          return RealizationProblem::directed(s);
        }
      },
      in.value);
}

CompositionPlan plan_of(const SequenceInput& in, bool factorize) {
  if (!factorize) {
    RealizationProblem p = problem_of(in);
    if (!p.graphical()) throw NotGraphical("not graphical");
    return CompositionPlan::trivial(std::move(p));
  }
  return std::visit(
      [&](const auto& s) -> CompositionPlan {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DegreeSequence>) {
          return CompositionPlan::for_simple(s);
        } else if constexpr (std::is_same_v<T, BipartiteDegreeSequence>) {
          return CompositionPlan::for_bipartite(s, in.forbidden);
        } else {
          return CompositionPlan::for_directed(s);
        }
      },
      in.value);
}

// Vertex pair in the input's own labeling, 1-based: simple labels, bipartite
// (u, w) class indices, directed arc (tail, head).
std::pair<std::size_t, std::size_t> external(const SequenceInput& in, const Edge& e) {
  if (std::holds_alternative<DegreeSequence>(in.value)) return {e.a + 1, e.b + 1};
  const std::size_t offset = std::holds_alternative<BipartiteDegreeSequence>(in.value)
                                 ? std::get<BipartiteDegreeSequence>(in.value).u.size()
                                 : std::get<DirectedDegreeSequence>(in.value).out.size();
  return {e.a + 1, e.b - offset + 1};
}

std::size_t env_max_chords() {
  if (const char* v = std::getenv("DEGMIX_MAX_CHORDS")) {
    try {
      return static_cast<std::size_t>(std::stoul(v));
    } catch (const std::exception&) {
      throw InvalidInput("DEGMIX_MAX_CHORDS is not a number");
    }
  }
  return EnumerationLimits{}.max_chords;
}

// ---- test ----

int cmd_test(const Common& c, std::ostream& out) {
  const SequenceInput in = load_sequence(c);
  const bool ok = problem_of(in).graphical();
  if (c.json) {
    out << json{{"schema", "degmix/test/1"}, {"graphical", ok}}.dump() << "\n";
  } else {
    out << (ok ? "graphical" : "not graphical") << "\n";
  }
  return !ok && c.strict ? exit_negative : exit_ok;
}

// ---- decompose ----

std::vector<int> remaining_simple(const CanonicalDecomposition& d, std::size_t from) {
  CanonicalDecomposition rest;
  rest.components.assign(d.components.begin() + static_cast<std::ptrdiff_t>(from), d.components.end());
  rest.tail = d.tail;
  return recompose(rest);
}

int decompose_simple(const Common& c, const DegreeSequence& d, bool certificate, std::ostream& out) {
  const CanonicalDecomposition dec = canonical_decompose(d);
  json comps = json::array();
  std::ostringstream text;
  text << "components: " << dec.components.size() << "\n";
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const SplitSequence& s = dec.components[i];
    const GoodPair g = dec.steps[i];
    json item{{"primary", s.primary}, {"secondary", s.secondary}, {"good_pair", {g.p, g.q}}};
    text << "  " << i + 1 << ": U=" << join(s.primary) << " W=" << join(s.secondary) << " good pair (" << g.p << ","
         << g.q << ")\n";
    if (certificate) {
      const auto r = remaining_simple(dec, i);
      const std::size_t n = r.size();
      long lhs = 0, tail = 0;
      for (std::size_t k = 0; k < g.p; ++k) lhs += r[k];
      for (std::size_t k = n - g.q; k < n; ++k) tail += r[k];
      const long rhs = static_cast<long>(g.p * (n - g.q - 1)) + tail;
      item["certificate"] = {{"sequence", r}, {"lhs", lhs}, {"rhs", rhs}};
      text << "     " << join(r) << ": sum of first " << g.p << " = " << lhs << " = " << g.p << "*(" << n << "-"
           << g.q << "-1) + " << tail << " = " << rhs << "\n";
    }
    comps.push_back(std::move(item));
  }
  text << "  tail: " << join(dec.tail) << "\n";
  if (c.json) {
    out << json{{"schema", "degmix/decompose/1"}, {"kind", "simple"}, {"components", comps}, {"tail", dec.tail}}.dump()
        << "\n";
  } else {
    out << text.str();
  }
  return exit_ok;
}

int decompose_bipartite(const Common& c, const BipartiteDegreeSequence& bd, const char* kind, bool certificate,
                        std::ostream& out) {
  const SplittedBipartiteSequence sb = SplittedBipartiteSequence{bd.u, bd.w}.canonical();
  const BipartiteDecomposition dec = canonical_decompose_bipartite(sb);
  json factors = json::array();
  std::ostringstream text;
  text << "factors: " << dec.factors.size() << "\n";
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const auto& f = dec.factors[i];
    json item{{"primary", f.primary}, {"secondary", f.secondary}};
    text << "  " << i + 1 << ": primary=" << join(f.primary) << " secondary=" << join(f.secondary);
    if (i < dec.steps.size()) {
      const GoodPair g = dec.steps[i];
      item["good_pair"] = {g.p, g.q};
      text << " good pair (" << g.p << "," << g.q << ")";
    }
    text << "\n";
    if (certificate && i < dec.steps.size()) {
      const GoodPair g = dec.steps[i];
      const SplittedBipartiteSequence r = recompose_bipartite(
          std::vector<SplittedBipartiteSequence>(dec.factors.begin() + static_cast<std::ptrdiff_t>(i), dec.factors.end()));
      long lhs = 0, tail = 0;
      for (std::size_t k = 0; k < g.p; ++k) lhs += r.primary[k];
      for (std::size_t k = g.q; k < r.secondary.size(); ++k) tail += r.secondary[k];
      const long rhs = static_cast<long>(g.p * g.q) + tail;
      item["certificate"] = {{"primary", r.primary}, {"secondary", r.secondary}, {"lhs", lhs}, {"rhs", rhs}};
      text << "     " << join(r.primary) << "/" << join(r.secondary) << ": sum of first " << g.p << " = " << lhs
           << " = " << g.p << "*" << g.q << " + " << tail << " = " << rhs << "\n";
    }
    factors.push_back(std::move(item));
  }
  if (c.json) {
    out << json{{"schema", "degmix/decompose/1"}, {"kind", kind}, {"factors", factors}}.dump() << "\n";
  } else {
    out << text.str();
  }
  return exit_ok;
}

int cmd_decompose(const Common& c, bool certificate, std::ostream& out) {
  const SequenceInput in = load_sequence(c);
  if (!problem_of(in).graphical()) {
    out << (c.json ? json{{"schema", "degmix/decompose/1"}, {"graphical", false}}.dump() : "not graphical") << "\n";
    return c.strict ? exit_negative : exit_ok;
  }
  if (const auto* d = std::get_if<DegreeSequence>(&in.value)) return decompose_simple(c, *d, certificate, out);
  if (const auto* b = std::get_if<BipartiteDegreeSequence>(&in.value)) {
    return decompose_bipartite(c, *b, "bipartite", certificate, out);
  }
  return decompose_bipartite(c, gale_representation(std::get<DirectedDegreeSequence>(in.value)), "directed",
                             certificate, out);
}

// ---- compose ----

int cmd_compose(const Common& c, const std::string& left, const std::string& right, std::ostream& out) {
  const ComposeOperand a = parse_operand(read_json_file(left));
  const ComposeOperand b = parse_operand(read_json_file(right));
  json result;
  std::string text;
  if (const auto* s = std::get_if<SplitSequence>(&a)) {
    if (const auto* g = std::get_if<DegreeSequence>(&b)) {
      const DegreeSequence d = compose(*s, *g);
      result = {{"kind", "simple"}, {"degrees", d.degrees()}};
      text = join(d.degrees());
    } else if (const auto* t = std::get_if<SplitSequence>(&b)) {
      const SplitSequence r = compose(*s, *t);
      result = {{"kind", "split"}, {"primary", r.primary}, {"secondary", r.secondary}};
      text = "<" + join(r.primary) + "," + join(r.secondary) + ">";
    } else {
      throw InvalidInput("a split operand composes with a simple sequence or a split sequence");
    }
  } else if (const auto* s = std::get_if<RestrictedSplittedSequence>(&a)) {
    if (const auto* g = std::get_if<DegreeSequence>(&b)) {
      if (!s->forbidden.empty()) throw InvalidInput("forbidden pairs are not allowed when composing with a simple sequence");
      const DegreeSequence d = compose(psi_inverse(s->sequence), *g);
      result = {{"kind", "simple"}, {"degrees", d.degrees()}};
      text = join(d.degrees());
    } else if (const auto* t = std::get_if<RestrictedSplittedSequence>(&b)) {
      const RestrictedSplittedSequence r = compose_directed(*s, *t);
      result = {{"kind", "splitted"}, {"primary", r.sequence.primary}, {"secondary", r.sequence.secondary}};
      text = join(r.sequence.primary) + "/" + join(r.sequence.secondary);
      if (!r.forbidden.empty()) {
        result["forbidden"] = forbidden_json(r.forbidden);
        text += " forbidden=" + result["forbidden"].dump();
      }
    } else {
      throw InvalidInput("a splitted operand composes with a simple or a splitted sequence");
    }
  } else {
    throw InvalidInput("the left operand must be split or splitted");
  }
  if (c.json) {
    result["schema"] = "degmix/compose/1";
    out << result.dump() << "\n";
  } else {
    out << text << "\n";
  }
  return exit_ok;
}

// ---- sample ----

struct SampleArgs {
  SampleOptions options;
  std::string factorize = "auto";
  std::size_t chains = 1;
  unsigned jobs = 1;
};

int cmd_sample(const Common& c, const SampleArgs& a, std::ostream& out) {
  const SequenceInput in = load_sequence(c);
  const CompositionPlan plan = plan_of(in, a.factorize != "off");
  std::vector<std::vector<Graph>> results(a.chains);
  const auto run = [&](std::size_t chain) {
    SampleOptions o = a.options;
    o.seed = a.chains == 1 ? a.options.seed : derive_seed(a.options.seed, chain + 1);
    results[chain] = sample(plan, o);
  };
  const unsigned jobs = std::max(1U, a.jobs);
  if (jobs == 1 || a.chains == 1) {
    for (std::size_t i = 0; i < a.chains; ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < a.chains; i += jobs) run(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  bool first = true;
  for (std::size_t chain = 0; chain < a.chains; ++chain) {
    for (std::size_t k = 0; k < results[chain].size(); ++k) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (const Edge& e : results[chain][k].sorted_edges()) edges.push_back(external(in, e));
      std::sort(edges.begin(), edges.end());
      if (c.json) {
        out << json{{"schema", "degmix/sample/1"}, {"chain", chain}, {"index", k}, {"edges", edges}}.dump() << "\n";
      } else {
        if (!first) out << "\n";
        for (const auto& [x, y] : edges) out << x << " " << y << "\n";
      }
      first = false;
    }
  }
  return exit_ok;
}

// ---- verify ----

struct VerifyArgs {
  std::string mode = "spectral";
  std::size_t max_chords = 24;
  std::uint64_t steps = 100;
  std::uint64_t seed = 1;
  bool no_c6 = false;
};

int cmd_verify(const Common& c, const VerifyArgs& a, std::ostream& out) {
  const SequenceInput in = load_sequence(c);
  EnumerationLimits limits;
  limits.max_chords = a.max_chords;
  RealizationProblem problem = problem_of(in);
  if (a.no_c6) problem.set_c6_enabled(false);
  json report{{"schema", "degmix/verify/1"}, {"mode", a.mode}};
  std::ostringstream text;
  bool negative = false;
  if (!problem.graphical()) {
    report["graphical"] = false;
    text << "not graphical\n";
    negative = true;
  } else if (a.mode == "product") {
    const CompositionPlan plan = plan_of(in, true);
    const ProductCheck check = verify_cartesian_product(plan, limits);
    const LocalityReport loc = check_swap_locality(plan, limits);
    report["realizations"] = check.whole_count;
    report["factor_counts"] = check.factor_counts;
    report["adjacencies"] = check.whole_edges;
    report["expected_adjacencies"] = check.expected_edges;
    report["swaps"] = loc.moves;
    report["nonlocal_swaps"] = loc.violations;
    report["product"] = loc.violations == 0;
    text << "realizations: " << check.whole_count << "\nfactors: " << check.factor_counts.size() << "\n";
    for (std::size_t i = 0; i < check.factor_counts.size(); ++i) {
      text << "  " << i + 1 << ": " << check.factor_counts[i] << " realizations\n";
    }
    text << "adjacencies: " << check.whole_edges << " (product rule " << check.expected_edges << ")\n";
    text << "swaps: " << loc.moves << ", non-local " << loc.violations << "\n";
    text << (loc.violations == 0 ? "cartesian product: yes" : "cartesian product: no") << "\n";
    negative = loc.violations != 0;
  } else {
    const RealizationGraph rg = build_realization_graph(problem, limits);
    report["realizations"] = rg.size();
    report["adjacencies"] = rg.edge_count();
    text << "realizations: " << rg.size() << "\nadjacencies: " << rg.edge_count() << "\n";
    if (a.mode == "connectivity") {
      const std::size_t k = rg.component_count();
      report["components"] = k;
      report["connected"] = k <= 1;
      text << "components: " << k << "\n" << (k <= 1 ? "connected" : "disconnected") << "\n";
      negative = k > 1;
    } else if (a.mode == "spectral") {
      if (!rg.connected()) {
        report["components"] = rg.component_count();
        report["connected"] = false;
        text << "disconnected (" << rg.component_count() << " components)\n";
        negative = true;
      } else {
        const SpectralReport s = spectral_report(rg);
        report["lambda2"] = s.lambda2;
        report["relaxation_time"] = s.relaxation_time;
        report["trivial"] = s.trivial;
        report["conductance"] = s.conductance ? json(*s.conductance) : json(nullptr);
        report["cheeger"] = s.cheeger_holds;
        text << "lambda2: " << num(s.lambda2) << "\nrelaxation time: " << num(s.relaxation_time) << "\n";
        if (s.trivial) text << "single realization\n";
        text << "conductance: " << (s.conductance ? num(*s.conductance) : std::string("not computed")) << "\n";
      }
    } else if (a.mode == "tv") {
      const auto start = rg.states().index_of(problem.realize());
      const double exact = exact_tv_distance(rg, *start, a.steps);
      const double empirical = empirical_tv_distance(rg, a.steps, a.seed);
      report["steps"] = a.steps;
      report["exact_tv"] = exact;
      report["empirical_tv"] = empirical;
      text << "steps: " << a.steps << "\nexact tv: " << num(exact) << "\nempirical tv: " << num(empirical) << "\n";
    } else {
      throw InvalidInput("unknown mode " + a.mode);
    }
  }
  if (c.json) {
    out << report.dump() << "\n";
  } else {
    out << text.str();
  }
  return negative && c.strict ? exit_negative : exit_ok;
}

// ---- dsm ----

int cmd_dsm(const Common& c, const std::string& path, bool check, bool sample_mode, const SampleOptions& options,
            std::ostream& out) {
  const DegreeSpectraMatrix m = parse_dsm(read_json_file(path));
  if (check || !sample_mode) {
    const bool ok = dsm_graphical(m);
    if (c.json) {
      out << json{{"schema", "degmix/dsm/1"}, {"graphical", ok}}.dump() << "\n";
    } else {
      out << (ok ? "graphical" : "not graphical") << "\n";
    }
    return !ok && c.strict ? exit_negative : exit_ok;
  }
  const auto graphs = dsm_sample(m, options);
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Edge& e : graphs[k].sorted_edges()) edges.emplace_back(e.a + 1, e.b + 1);
    if (c.json) {
      out << json{{"schema", "degmix/dsm/1"}, {"index", k}, {"edges", edges}}.dump() << "\n";
    } else {
      if (k) out << "\n";
      for (const auto& [x, y] : edges) out << x << " " << y << "\n";
    }
  }
  return exit_ok;
}

// ---- count ----

int cmd_count(const Common& c, const std::string& kind, std::size_t n, std::size_t block, unsigned jobs,
              bool exhaustive, std::ostream& out) {
  BigInt value;
  std::string method = "exhaustive";
  if (kind == "ahr") {
    if (exhaustive) {
      value = count_almost_half_regular_exhaustive(n);
    } else {
      value = count_almost_half_regular(n);
      method = "formula";
    }
  } else if (kind == "bipartite") {
    value = count_bipartite_graphical(n, jobs);
  } else if (kind == "composed") {
    value = count_composed_class(n, block, jobs);
    method = "product";
  } else {
    throw InvalidInput("unknown kind " + kind);
  }
  if (c.json) {
    json j{{"schema", "degmix/count/1"}, {"kind", kind}, {"n", n}, {"count", value.str()}, {"method", method}};
    if (kind == "composed") j["block"] = block;
    out << j.dump() << "\n";
  } else {
    out << "kind,n,count,method\n" << kind << "," << n << "," << value.str() << "," << method << "\n";
  }
  return exit_ok;
}

}  // namespace

ForbiddenSet parse_forbidden(const json& j) {
  if (!j.is_array()) throw InvalidInput("forbidden set must be a list of [u, w] pairs");
  ForbiddenSet f;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput("forbidden entry must be a [u, w] pair");
    const long u = p.at(0).get<long>();
    const long w = p.at(1).get<long>();
    if (u < 1 || w < 1) throw InvalidInput("forbidden indices are 1-based");
    f.insert(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(w - 1));
  }
  return f;
}

SequenceInput parse_sequence(const json& j) {
  if (!j.is_object()) throw InvalidInput("sequence file must hold a JSON object");
  const std::string kind = j.value("kind", "");
  SequenceInput in;
  if (j.contains("u") || kind == "bipartite") {
    BipartiteDegreeSequence bd{int_list(j, "u"), int_list(j, "w")};
    bd.validate();
    in.value = bd;
    if (j.contains("forbidden")) in.forbidden = parse_forbidden(j.at("forbidden"));
  } else if (j.contains("out") || kind == "directed") {
    DirectedDegreeSequence dd{int_list(j, "out"), int_list(j, "in")};
    dd.validate();
    in.value = dd;
  } else if (kind == "simple" || j.contains("degrees")) {
    in.value = DegreeSequence(int_list(j, "degrees"));
  } else {
    throw InvalidInput("unrecognized sequence file");
  }
  return in;
}

ComposeOperand parse_operand(const json& j) {
  const std::string kind = j.is_object() ? j.value("kind", "") : "";
  if (kind == "split") return SplitSequence{int_list(j, "primary"), int_list(j, "secondary")};
  if (kind == "splitted") {
    RestrictedSplittedSequence r{{int_list(j, "primary"), int_list(j, "secondary")}, {}};
    if (j.contains("forbidden")) r.forbidden = parse_forbidden(j.at("forbidden"));
    return r;
  }
  SequenceInput in = parse_sequence(j);
  if (const auto* d = std::get_if<DegreeSequence>(&in.value)) return *d;
  throw InvalidInput("compose operands are split, splitted, or simple sequences");
}

DegreeSpectraMatrix parse_dsm(const json& j) {
  if (!j.is_object() || !j.contains("columns")) throw InvalidInput("DSM file needs \"delta\" and \"columns\"");
  DegreeSpectraMatrix m;
  m.delta = j.at("delta").get<int>();
  m.columns = j.at("columns").get<std::vector<std::vector<int>>>();
  return m;
}

json to_json(const DegreeSpectraMatrix& m) { return json{{"delta", m.delta}, {"columns", m.columns}}; }

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-sequence realization sampling and verification", "degmix"};
  app.require_subcommand(1);
  Common c;
  const auto common = [&](CLI::App* sub, bool needs_seq) {
    auto* opt = sub->add_option("--seq", c.seq, "Sequence JSON file");
    if (needs_seq) opt->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", c.json, "Machine-readable output");
    sub->add_flag("--strict", c.strict, "Exit 1 on a negative answer");
  };

  auto* test = app.add_subcommand("test", "Graphicality test");
  common(test, true);
  test->add_option("--forbidden", c.forbidden, "Forbidden pairs, 1-based [u, w] list")->check(CLI::ExistingFile);

  bool certificate = false;
  auto* decompose = app.add_subcommand("decompose", "Canonical decomposition");
  common(decompose, true);
  decompose->add_flag("--certificate", certificate, "Print the good-pair arithmetic");

  std::string left, right;
  auto* compose_cmd = app.add_subcommand("compose", "Compose two sequences");
  common(compose_cmd, false);
  compose_cmd->add_option("--left", left, "Split or splitted operand")->required()->check(CLI::ExistingFile);
  compose_cmd->add_option("--right", right, "Second operand")->required()->check(CLI::ExistingFile);

  SampleArgs sa;
  auto* sample_cmd = app.add_subcommand("sample", "Sample realizations with the swap chain");
  common(sample_cmd, true);
  sample_cmd->add_option("--forbidden", c.forbidden, "Forbidden pairs, 1-based [u, w] list")->check(CLI::ExistingFile);
  sample_cmd->add_option("--count", sa.options.count, "Samples per chain")->capture_default_str();
  sample_cmd->add_option("--burn-in", sa.options.burn_in, "Steps before the first sample")->capture_default_str();
  sample_cmd->add_option("--thin", sa.options.thin, "Steps between samples")->capture_default_str();
  sample_cmd->add_option("--seed", sa.options.seed, "Master seed")->capture_default_str();
  sample_cmd->add_option("--factorize", sa.factorize, "Sample through the canonical decomposition")
      ->check(CLI::IsMember({"auto", "off"}))
      ->capture_default_str();
  sample_cmd->add_option("--chains", sa.chains, "Independent chains")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);

  VerifyArgs va;
  va.max_chords = env_max_chords();
  auto* verify = app.add_subcommand("verify", "Exhaustive realization-space checks");
  common(verify, true);
  verify->add_option("--forbidden", c.forbidden, "Forbidden pairs, 1-based [u, w] list")->check(CLI::ExistingFile);
  verify->add_option("--mode", va.mode, "What to check")
      ->check(CLI::IsMember({"product", "spectral", "connectivity", "tv"}))
      ->capture_default_str();
  verify->add_option("--max-chords", va.max_chords, "Enumeration cap")->capture_default_str();
  verify->add_option("--steps", va.steps, "Steps for --mode tv")->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed for the empirical chain in --mode tv")->capture_default_str();
  verify->add_flag("--no-c6", va.no_c6, "Use C4 swaps only for directed sequences");

  std::string dsm_path;
  bool dsm_check = false;
  bool dsm_sample_mode = false;
  SampleOptions dsm_options;
  auto* dsm = app.add_subcommand("dsm", "Degree spectra matrices");
  common(dsm, false);
  dsm->add_option("--dsm", dsm_path, "DSM JSON file")->required()->check(CLI::ExistingFile);
  auto* check_flag = dsm->add_flag("--check", dsm_check, "Graphicality of the matrix");
  dsm->add_flag("--sample", dsm_sample_mode, "Sample realizations")->excludes(check_flag);
  dsm->add_option("--count", dsm_options.count, "Samples")->capture_default_str();
  dsm->add_option("--burn-in", dsm_options.burn_in, "Steps before the first sample")->capture_default_str();
  dsm->add_option("--thin", dsm_options.thin, "Steps between samples")->capture_default_str();
  dsm->add_option("--seed", dsm_options.seed, "Master seed")->capture_default_str();

  std::string count_kind;
  std::size_t count_n = 0;
  std::size_t block = 0;
  unsigned count_jobs = 1;
  bool exhaustive = false;
  auto* count = app.add_subcommand("count", "Sequence counts");
  common(count, false);
  count->add_option("--kind", count_kind, "ahr, bipartite or composed")
      ->required()
      ->check(CLI::IsMember({"ahr", "bipartite", "composed"}));
  count->add_option("--n", count_n, "Size parameter")->required();
  count->add_option("--block", block, "Block size for --kind composed");
  count->add_option("--jobs", count_jobs, "Worker threads")->check(CLI::PositiveNumber);
  count->add_flag("--exhaustive", exhaustive, "List instead of using the closed form (ahr)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*test) return cmd_test(c, out);
    if (*decompose) return cmd_decompose(c, certificate, out);
    if (*compose_cmd) return cmd_compose(c, left, right, out);
    if (*sample_cmd) return cmd_sample(c, sa, out);
    if (*verify) return cmd_verify(c, va, out);
    if (*dsm) return cmd_dsm(c, dsm_path, dsm_check, dsm_sample_mode, dsm_options, out);
    if (*count) {
      if (count_kind == "composed" && block == 0) throw InvalidInput("--kind composed needs --block");
      return cmd_count(c, count_kind, count_n, block, count_jobs, exhaustive, out);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_negative;
  }
  return exit_usage;
}

}  // namespace degmix::cli
