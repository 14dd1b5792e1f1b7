#include "ckstar/cli.hpp"

#include "ckstar/bimodule.hpp"
#include "ckstar/error.hpp"
#include "ckstar/json_io.hpp"
#include "ckstar/nest.hpp"
#include "ckstar/normalizer.hpp"
#include "ckstar/sampling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>

namespace ckstar::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph, fn, elem, elem2, gens, point, x, alpha, beta, anchor, value, json_out;
  long long depth = 0, level = 0, K = 0, degree = 0, n = 0, j = 0, k = 0, ell = 0, edges = 0, period = 0, cut = 0;
  unsigned long long seed = 1, samples = 100;
  std::map<std::string, CLI::Option*> given;

  bool has(const std::string& flag) const {
    auto it = given.find(flag);
    return it != given.end() && it->second->count() > 0;
  }
};

class Context {
 public:
  explicit Context(const Options& opts) : opts_(opts) {}

  const Options& opts() const { return opts_; }

  const OrderedGraph& ordered() {
    if (!og_) {
      og_.emplace(graph_from_json(read_json_file(required("--graph", opts_.graph))));
    }
    return *og_;
  }
  const Graph& graph() { return ordered().graph(); }

  Json document(const std::string& flag, const std::string& value) {
    const std::string& text = required(flag, value);
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
      try {
        return Json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, flag + ": " + e.what());
      }
    }
    return read_json_file(text);
  }

  AlgElement element(const std::string& flag, const std::string& value) {
    return element_from_json(graph(), document(flag, value));
  }

  std::vector<AlgElement> generators() {
    const Json doc = document("--gens", opts_.gens);
    if (!doc.is_array()) throw Error(ErrorCode::parse_error, "--gens must be an array of elements");
    std::vector<AlgElement> out;
    for (const auto& g : doc) out.push_back(element_from_json(graph(), g));
    return out;
  }

  LocallyConstantFn function() {
    LocallyConstantFn f = function_from_json(graph(), document("--fn", opts_.fn));
    f.check_total(ordered());
    return f;
  }

  GroupoidPoint point() { return point_from_json(graph(), document("--point", opts_.point)); }

  EdgeWord word(const std::string& flag, const std::string& ids) {
    EdgeWord w;
    std::size_t start = 0;
    while (start < ids.size()) {
      std::size_t comma = ids.find(',', start);
      if (comma == std::string::npos) comma = ids.size();
      if (comma > start) w.push_back(graph().edge(ids.substr(start, comma - start)));
      start = comma + 1;
    }
    (void)flag;
    return w;
  }

  /// --alpha/--beta (comma separated, possibly empty) plus --anchor.
  CKMono mono() {
    if (!opts_.has("--alpha") && !opts_.has("--beta")) throw UsageError("--alpha or --beta is required");
    const EdgeWord a = word("--alpha", opts_.alpha);
    const EdgeWord b = word("--beta", opts_.beta);
    VertexId anchor;
    if (opts_.has("--anchor")) {
      anchor = graph().vertex(opts_.anchor);
    } else if (!a.empty()) {
      anchor = graph().source(a.back());
    } else if (!b.empty()) {
      anchor = graph().source(b.back());
    } else {
      throw UsageError("--anchor is required when both paths are empty");
    }
    return CKMono::make(graph(), a, b, anchor);
  }

  FinPath path(const std::string& flag, const std::string& ids) {
    const EdgeWord w = word(flag, ids);
    if (w.empty()) throw UsageError(flag + " must name at least one edge");
    return FinPath::from_word(graph(), w);
  }

  long long number(const std::string& flag, long long value) const {
    if (!opts_.has(flag)) throw UsageError(flag + " is required");
    return value;
  }

  std::size_t count(const std::string& flag, long long value) const {
    const long long v = number(flag, value);
    if (v < 0) throw UsageError(flag + " must be non-negative");
    return static_cast<std::size_t>(v);
  }

  const std::string& required(const std::string& flag, const std::string& value) const {
    if (!opts_.has(flag)) throw UsageError(flag + " is required");
    return value;
  }

 private:
  const Options& opts_;
  std::optional<OrderedGraph> og_;
};

Json names(const Graph& graph, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(graph.vertex_name(v));
  return out;
}

Json optional_clause(std::optional<std::string_view> clause) {
  return clause ? Json(std::string(*clause)) : Json(nullptr);
}

using Handler = std::function<Json(Context&)>;

Json cmd_validate(Context& ctx) {
  const ValidationReport r = validate_order(ctx.ordered());
  const Graph& g = ctx.graph();
  return {{"valid", r.valid()},
          {"sourceless", names(g, r.sourceless)},
          {"isolated", names(g, r.isolated)},
          {"order_violations", names(g, r.order_violations)},
          {"has_loop", has_loop(g)},
          {"transitive", is_transitive(g)}};
}

Json cmd_masa(Context& ctx) { return {{"masa", every_loop_has_entrance(ctx.graph())}}; }

Json cmd_normalize(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  if (ctx.opts().has("--level")) {
    return {{"element", element_to_json(ctx.graph(), refine_to_level(ctx.graph(), a, ctx.count("--level", ctx.opts().level)))}};
  }
  return {{"element", element_to_json(ctx.graph(), normalize(ctx.graph(), a))}};
}

Json cmd_mul(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  const AlgElement b = ctx.element("--elem2", ctx.opts().elem2);
  return {{"element", element_to_json(ctx.graph(), mul(ctx.graph(), a, b))}};
}

Json cmd_phi(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  if (ctx.opts().has("--fn")) {
    const Rational value = parse_rational(ctx.required("--value", ctx.opts().value));
    return {{"element",
             element_to_json(ctx.graph(), cocycle_graded_projection(ctx.graph(), ctx.function(), a, value))}};
  }
  const auto m = static_cast<std::int64_t>(ctx.number("--degree", ctx.opts().degree));
  return {{"element", element_to_json(ctx.graph(), phi_m(ctx.graph(), a, m))}};
}

Json cmd_gauge(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  const auto n = static_cast<int>(ctx.number("--n", ctx.opts().n));
  const long long j = ctx.opts().has("--j") ? ctx.opts().j : 1;
  return {{"element", element_to_json(ctx.graph(), gauge(ctx.graph(), a, n, j))}};
}

Json cmd_eval(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  return {{"value", coefficient_to_json(eval(ctx.graph(), a, ctx.point()))}};
}

Json cmd_spectrum(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  return {{"spectrum", spectrum_to_json(ctx.graph(), support_spectrum(ctx.graph(), a))}};
}

Json cmd_bimodule_member(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  const auto gens = ctx.generators();
  return {{"member", bimodule_member(ctx.graph(), a, gens)},
          {"spectrum", spectrum_to_json(ctx.graph(), generated_spectrum(ctx.graph(), gens))}};
}

Json cmd_analytic_member(Context& ctx) {
  const LocallyConstantFn f = ctx.function();
  const CKMono m = ctx.mono();
  return {{"member", ck_in_analytic(ctx.graph(), f, m)}};
}

Json cmd_nest_member(Context& ctx) {
  const auto clause = in_alg_n(ctx.ordered(), ctx.mono());
  return {{"member", clause.has_value()},
          {"clause", optional_clause(clause ? std::optional(to_string(*clause)) : std::nullopt)}};
}

Json cmd_nest_oracle(Context& ctx) {
  const CKMono m = ctx.mono();
  const std::size_t K = ctx.opts().has("--K") ? ctx.count("--K", ctx.opts().K) : default_oracle_level(ctx.ordered(), m);
  const auto violation = in_alg_n_oracle(ctx.ordered(), m, K);
  Json witness = nullptr;
  if (violation) witness = {{"level", violation->level}, {"cut", violation->cut}};
  return {{"member", !violation.has_value()}, {"K", K}, {"witness", witness}};
}

Json cmd_nest_spectrum(Context& ctx) {
  const auto clause = point_in_spectrum_alg_n(ctx.ordered(), ctx.point());
  return {{"member", clause.has_value()},
          {"clause", optional_clause(clause ? std::optional(to_string(*clause)) : std::nullopt)}};
}

Json cmd_radical_member(Context& ctx) {
  if (ctx.opts().has("--point")) return {{"member", in_radical_spectrum(ctx.ordered(), ctx.point())}};
  return {{"member", cylinder_in_radical(ctx.ordered(), ctx.mono())}};
}

Json cmd_commutator(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  const AlgElement b = ctx.element("--elem2", ctx.opts().elem2);
  return {{"element", element_to_json(ctx.graph(), commutator(ctx.graph(), a, b))}};
}

Json cmd_cocycle_eval(Context& ctx) {
  const LocallyConstantFn f = ctx.function();
  const GroupoidPoint g = ctx.point();
  return {{"value", format_rational(eval_cocycle(f, g))},
          {"tailed_value", format_rational(eval_cocycle_tailed(f, to_tailed(g, f.depth())))}};
}

Json cmd_cocycle_check(Context& ctx) {
  const LocallyConstantFn f = ctx.function();
  const std::size_t max_len = ctx.opts().has("--depth") ? ctx.count("--depth", ctx.opts().depth) : 3;
  Sampler sampler(ctx.ordered(), ctx.opts().seed);
  bool identity = true, antisymmetry = true;
  std::vector<GroupoidPoint> points;
  std::vector<EvPath> units;
  for (unsigned long long i = 0; i < ctx.opts().samples; ++i) {
    auto [g1, g2] = sampler.composable_pair(max_len);
    const Rational c1 = eval_cocycle(f, g1);
    if (c1 + eval_cocycle(f, g2) != eval_cocycle(f, compose(g1, g2))) identity = false;
    if (eval_cocycle(f, inverse(g1)) != -c1) antisymmetry = false;
    points.push_back(g1);
    units.push_back(g1.x);
    if (i % 4 == 0) points.push_back(GroupoidPoint::unit(g1.y));
  }
  const Z10Report z = is_z1_0_sampled(f, points);
  Json failures = Json::array();
  for (std::size_t idx : z.failures) failures.push_back(point_to_json(ctx.graph(), points[idx]));
  return {{"samples", ctx.opts().samples},
          {"identity", identity},
          {"antisymmetry", antisymmetry},
          {"reconstruction", reconstructs(f, units)},
          {"z1_0", {{"passed", z.passed}, {"failures", failures}}}};
}

Json cmd_loop_growth(Context& ctx) {
  const LocallyConstantFn f = ctx.function();
  const EvPath x = evpath_from_json(ctx.graph(), ctx.document("--x", ctx.opts().x));
  std::optional<std::size_t> period;
  if (ctx.opts().has("--period")) period = ctx.count("--period", ctx.opts().period);
  const LoopGrowth r = loop_growth(f, x, period);
  return {{"period", r.period},
          {"base", format_rational(r.base)},
          {"verified", r.verified},
          {"unbounded", r.unbounded}};
}

Json cmd_weights(Context& ctx) {
  const auto weights = acyclic_weights(ctx.count("--edges", ctx.opts().edges));
  Json list = Json::array();
  for (const auto& w : weights) list.push_back(format_rational(w));
  return {{"weights", list}, {"dominates", dominates(weights)}};
}

Json cmd_obstruction(Context& ctx) {
  const Graph& g = ctx.graph();
  const ObstructionWitness w = integer_obstruction_witness(
      g, ctx.path("--alpha", ctx.required("--alpha", ctx.opts().alpha)),
      ctx.path("--beta", ctx.required("--beta", ctx.opts().beta)), ctx.count("--ell", ctx.opts().ell));
  const auto [xs, ys] = truncation_multisets(w);
  Json out = {{"alpha", word_to_json(g, w.alpha.edges())},
              {"beta", word_to_json(g, w.beta.edges())},
              {"depth", w.depth},
              {"span", w.span},
              {"x", evpath_to_json(g, w.x)},
              {"y", evpath_to_json(g, w.y)},
              {"multisets_equal", xs == ys}};
  if (ctx.opts().has("--fn")) out["sum"] = format_rational(obstruction_sum(ctx.function(), w));
  return out;
}

Json cmd_normalizer_check(Context& ctx) {
  const AlgElement a = ctx.element("--elem", ctx.opts().elem);
  const auto norm = restricted_norm(ctx.graph(), a);
  Json norm_json = nullptr;
  if (norm) {
    norm_json = {{"squared", format_rational(norm->squared)},
                 {"value", norm->value ? Json(format_rational(*norm->value)) : Json(nullptr)}};
  }
  return {{"normalizing", is_normalizing_pi(ctx.graph(), a)}, {"restricted_norm", norm_json}};
}

Json cmd_separating_proj(Context& ctx) {
  const Graph& g = ctx.graph();
  const CKMono e = ctx.mono();
  const std::size_t k = ctx.count("--k", ctx.opts().k);
  const SeparatingProjections sp = separating_projections(ctx.ordered(), e, k);
  Json out = {{"pi", word_to_json(g, sp.pi.edges())},
              {"w", word_to_json(g, sp.w.edges())},
              {"p", mono_to_json(g, sp.p)},
              {"q", mono_to_json(g, sp.q)},
              {"k_used", sp.k_used},
              {"path_condition", path_condition(sp.pi, sp.w, sp.k_used)}};
  if (ctx.opts().has("--elem")) {
    const AfPartCheck check = check_proj_afpart(ctx.ordered(), ctx.element("--elem", ctx.opts().elem), e, k);
    out["afpart"] = {{"p", mono_to_json(g, check.p)}, {"q", mono_to_json(g, check.q)}, {"holds", check.holds}};
  }
  return out;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"validate", cmd_validate},
      {"masa-check", cmd_masa},
      {"normalize", cmd_normalize},
      {"mul", cmd_mul},
      {"phi", cmd_phi},
      {"gauge", cmd_gauge},
      {"eval", cmd_eval},
      {"spectrum", cmd_spectrum},
      {"bimodule-member", cmd_bimodule_member},
      {"analytic-member", cmd_analytic_member},
      {"nest-member", cmd_nest_member},
      {"nest-oracle", cmd_nest_oracle},
      {"nest-spectrum", cmd_nest_spectrum},
      {"radical-member", cmd_radical_member},
      {"commutator", cmd_commutator},
      {"cocycle-eval", cmd_cocycle_eval},
      {"cocycle-check", cmd_cocycle_check},
      {"loop-growth", cmd_loop_growth},
      {"weights", cmd_weights},
      {"obstruction", cmd_obstruction},
      {"normalizer-check", cmd_normalizer_check},
      {"separating-proj", cmd_separating_proj},
  };
  return table;
}

Json failure(std::string_view code, const std::string& message) {
  return {{"ok", false}, {"error", {{"code", std::string(code)}, {"message", message}}}};
}

int emit(std::ostream& out, const Json& doc, const Options& opts, int code) {
  const std::string text = doc.dump();
  out << text << '\n';
  if (code == 0 && !opts.json_out.empty()) {
    std::ofstream file(opts.json_out);
    if (!file) {
      out << failure("parse_error", "cannot write '" + opts.json_out + "'").dump() << '\n';
      return 1;
    }
    file << text << '\n';
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app("Symbolic computation on graph C*-algebras", "ckstar");
  app.fallthrough();
  app.require_subcommand(1);
  Options opts;
  auto text = [&](const std::string& flag, std::string& target, const std::string& help) {
    opts.given[flag] = app.add_option(flag, target, help);
  };
  auto integer = [&](const std::string& flag, long long& target, const std::string& help) {
    opts.given[flag] = app.add_option(flag, target, help);
  };
  text("--graph", opts.graph, "graph JSON file");
  text("--fn", opts.fn, "locally constant function JSON (file or inline)");
  text("--elem", opts.elem, "element JSON (file or inline)");
  text("--elem2", opts.elem2, "second element JSON (file or inline)");
  text("--gens", opts.gens, "array of generator elements (file or inline)");
  text("--point", opts.point, "groupoid point JSON (file or inline)");
  text("--x", opts.x, "infinite path JSON (file or inline)");
  text("--alpha", opts.alpha, "comma separated edge ids");
  text("--beta", opts.beta, "comma separated edge ids");
  text("--anchor", opts.anchor, "vertex id for empty paths");
  text("--value", opts.value, "rational p/q");
  text("--json-out", opts.json_out, "also write the result to this file");
  integer("--depth", opts.depth, "sample path length bound");
  integer("--level", opts.level, "refinement level");
  integer("--K", opts.K, "oracle level bound");
  integer("--degree", opts.degree, "grading degree");
  integer("--n", opts.n, "root of unity order");
  integer("--j", opts.j, "root of unity power");
  integer("--k", opts.k, "separation length");
  integer("--ell", opts.ell, "loop multiplicity");
  integer("--edges", opts.edges, "edge count");
  integer("--period", opts.period, "loop period");
  integer("--cut", opts.cut, "nest cut position");
  opts.given["--seed"] = app.add_option("--seed", opts.seed, "sampling seed");
  opts.given["--samples"] = app.add_option("--samples", opts.samples, "sample count");

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, handler] : handlers()) subs[name] = app.add_subcommand(name);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit(out, failure("usage", e.what()), opts, 2);
  }

  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    try {
      Context ctx(opts);
      Json result = handlers().at(name)(ctx);
      result["ok"] = true;
      return emit(out, result, opts, 0);
    } catch (const UsageError& e) {
      return emit(out, failure("usage", e.what()), opts, 2);
    } catch (const Error& e) {
      return emit(out, failure(to_string(e.code()), e.what()), opts, 1);
    }
  }
  return emit(out, failure("usage", "no subcommand"), opts, 2);
}

}  // namespace ckstar::cli
