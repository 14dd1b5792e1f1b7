#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "ckstar/error.hpp"
#include "ckstar/sampling.hpp"

using namespace ckstar;
using namespace support;

namespace {

LocallyConstantFn indicator(const Graph& g, const std::string& edge) {
  std::vector<Rational> w(g.edge_count(), make_rational(0));
  w[g.edge(edge)] = 1;
  return LocallyConstantFn::from_edge_weights(w);
}

}  // namespace

TEST_CASE("evaluation") {
  const OrderedGraph& og = o2();
  const Graph& g = og.graph();
  const auto fa = indicator(g, "a");
  const EvPath ainf = ev(g, {}, {"a"}), binf = ev(g, {}, {"b"});
  CHECK(eval_cocycle(fa, GroupoidPoint::make(ainf, 1, ainf)) == 1);
  CHECK(eval_cocycle(fa, GroupoidPoint::make(binf, 1, binf)) == 0);
  CHECK(eval_cocycle(fa, GroupoidPoint::make(ev(g, {"a"}, {"b"}), 0, ev(g, {"b"}, {"b"}))) == 1);
  CHECK(eval_cocycle(fa, GroupoidPoint::make(ev(g, {"a"}, {"b"}), 1, ev(g, {}, {"b"}))) == 1);
  CHECK(eval_cocycle(fa, GroupoidPoint::make(ev(g, {}, {"b"}), -1, ev(g, {"a"}, {"b"}))) == -1);

  const LocallyConstantFn one = LocallyConstantFn::constant(1);
  for (const OrderedGraph* graph : {&o2(), &c2(), &entrance()}) {
    Sampler s(*graph, 7);
    for (int i = 0; i < 200; ++i) {
      const GroupoidPoint p = s.point(4);
      const LocallyConstantFn f = s.function(s.uniform(0, 3));
      CHECK(eval_cocycle(f, p) == oracle::cocycle(f, p));
      CHECK(eval_cocycle(one, p) == p.k);
      CHECK(eval_cocycle(f, GroupoidPoint::unit(p.x)) == 0);
      CHECK(eval_cocycle(f, inverse(p)) == -eval_cocycle(f, p));
      const auto [g1, g2] = s.composable_pair(3);
      CHECK(eval_cocycle(f, g1) + eval_cocycle(f, g2) == eval_cocycle(f, compose(g1, g2)));
    }
  }
}

TEST_CASE("tailed evaluation") {
  const Graph& g = o2().graph();
  const auto w = LocallyConstantFn::from_edge_weights({make_rational(2), make_rational(5)});
  const TailedPair tp{path(g, {"a", "a", "b"}).edges(), path(g, {"b"}).edges(), path(g, {"a"}).edges()};
  CHECK(tp.k() == 2);
  CHECK(eval_cocycle_tailed(w, tp) == 2 + 2 + 5 - 5);
  CHECK(eval_cocycle_tailed(w, TailedPair{tp.prefix_x, tp.prefix_x, tp.window}) == 0);
  try {
    eval_cocycle_tailed(w, TailedPair{tp.prefix_x, tp.prefix_y, {}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::window_too_short);
  }
  for (const OrderedGraph* graph : {&o2(), &entrance()}) {
    Sampler s(*graph, 8);
    for (int i = 0; i < 50; ++i) {
      const GroupoidPoint p = s.point(3);
      const LocallyConstantFn f = s.function(s.uniform(1, 3));
      CHECK(eval_cocycle_tailed(f, to_tailed(p, f.depth())) == eval_cocycle(f, p));
    }
  }
}

TEST_CASE("reconstruction") {
  const Graph& g = o2().graph();
  const auto fa = indicator(g, "a");
  const EvPath ainf = ev(g, {}, {"a"}), binf = ev(g, {}, {"b"});
  CHECK(eval_cocycle(fa, GroupoidPoint::make(ainf, 1, shift(ainf))) == fa.value(ainf));
  CHECK(fa.value(ainf) == 1);
  CHECK(fa.value(binf) == 0);
  for (const OrderedGraph* graph : {&o2(), &entrance()}) {
    Sampler s(*graph, 9);
    std::vector<EvPath> samples;
    for (int i = 0; i < 100; ++i) samples.push_back(s.ev_path(4));
    for (int i = 0; i < 10; ++i) CHECK(reconstructs(s.function(2), samples));
    CHECK(reconstructs(LocallyConstantFn::constant(1), samples));
  }
}

TEST_CASE("functions") {
  const OrderedGraph& og = o2();
  const Graph& g = og.graph();
  CHECK_NOTHROW(indicator(g, "a").check_total(og));
  const LocallyConstantFn partial(2, {{path(g, {"a", "a"}).edges(), make_rational(1)}});
  CHECK_THROWS_AS(partial.check_total(og), Error);
  CHECK_THROWS_AS(partial.value(path(g, {"a", "b"}).edges()), Error);
  CHECK(partial.value(path(g, {"a", "a", "b"}).edges()) == 1);
}

TEST_CASE("loop growth") {
  const Graph& g = o2().graph();
  const LocallyConstantFn one = LocallyConstantFn::constant(1);
  const LoopGrowth a = loop_growth(one, ev(g, {}, {"a"}));
  CHECK(a.base == 1);
  CHECK(a.period == 1);
  CHECK(a.verified);
  CHECK(a.unbounded);
  CHECK(eval_cocycle(one, GroupoidPoint::make(ev(g, {}, {"a"}), 50, ev(g, {}, {"a"}))) == 50);
  const LoopGrowth b = loop_growth(indicator(g, "b"), ev(g, {}, {"a"}));
  CHECK(b.base == 0);
  CHECK(b.verified);
  CHECK_FALSE(b.unbounded);
  CHECK(loop_growth(one, ev(g, {}, {"a", "b"})).base == 2);
  CHECK(loop_growth(one, ev(g, {}, {"a"}), 3).base == 3);
  CHECK_THROWS_AS(loop_growth(one, ev(g, {"b"}, {"a"})), Error);
  CHECK_THROWS_AS(loop_growth(one, ev(g, {}, {"a", "b"}), 3), Error);
  Sampler s(entrance(), 10);
  for (int i = 0; i < 20; ++i) {
    const EvPath x = s.periodic_path();
    const LoopGrowth r = loop_growth(s.function(2), x);
    CHECK(r.verified);
  }
}

TEST_CASE("acyclic weights") {
  const auto w = acyclic_weights(3);
  CHECK(w == std::vector<Rational>{make_rational(1, 3), make_rational(1, 9), make_rational(1, 27)});
  CHECK(dominates(w));
  CHECK(acyclic_weights(1) == std::vector<Rational>{make_rational(1, 3)});
  CHECK(dominates(acyclic_weights(1)));
  CHECK_FALSE(dominates({make_rational(1, 2), make_rational(1, 4), make_rational(1, 4)}));
  CHECK_FALSE(dominates({make_rational(1, 3), make_rational(1, 4), make_rational(1, 5)}));
  for (std::size_t n = 1; n <= 10; ++n) CHECK(dominates(acyclic_weights(n)));
}

TEST_CASE("integer obstruction") {
  const OrderedGraph& og = o2();
  const Graph& g = og.graph();
  const ObstructionWitness w = integer_obstruction_witness(g, path(g, {"a"}), path(g, {"b"}), 2);
  CHECK(w.depth == 2);
  CHECK(w.x == ev(g, {"a", "a", "a", "b", "a", "a"}, {"b"}));
  CHECK(w.y == ev(g, {"a", "a", "b", "a", "a", "a"}, {"b"}));
  const auto [xs, ys] = truncation_multisets(w);
  CHECK(xs == ys);
  Sampler s(og, 11);
  for (std::size_t ell : {2u, 3u}) {
    const ObstructionWitness v = integer_obstruction_witness(g, path(g, {"a"}), path(g, {"b"}), ell);
    CHECK(v.depth == ell);
    for (int i = 0; i < 20; ++i) {
      const LocallyConstantFn f = s.function(v.depth);
      CHECK(obstruction_sum(f, v) == 0);
      CHECK(oracle::obstruction_sum(f, v.x, v.y, v.span) == 0);
    }
  }
  // Unequal loops are joined and equalised first.
  const ObstructionWitness u = integer_obstruction_witness(g, path(g, {"a"}), path(g, {"a", "b"}), 2);
  CHECK(u.alpha.size() == u.beta.size());
  CHECK(u.depth == 2 * u.alpha.size());
  for (int i = 0; i < 5; ++i) CHECK(oracle::obstruction_sum(s.function(u.depth), u.x, u.y, u.span) == 0);

  try {
    integer_obstruction_witness(g, path(g, {"a"}), path(g, {"a"}), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::loops_not_equalizable);
  }
  CHECK_THROWS_AS(integer_obstruction_witness(g, path(g, {"a"}), path(g, {"b"}), 1), Error);
  const Graph& h = entrance().graph();
  CHECK_THROWS_AS(integer_obstruction_witness(h, path(h, {"f"}), path(h, {"e"}), 2), Error);
}

TEST_CASE("sampled Z1_0 check") {
  const Graph& g = o2().graph();
  const LocallyConstantFn one = LocallyConstantFn::constant(1);
  const EvPath ainf = ev(g, {}, {"a"});
  const std::vector<GroupoidPoint> samples{GroupoidPoint::make(ainf, 1, ainf), GroupoidPoint::unit(ainf),
                                           GroupoidPoint::make(ev(g, {"a"}, {"b"}), 0, ev(g, {"b"}, {"b"}))};
  const Z10Report r = is_z1_0_sampled(one, samples);
  CHECK_FALSE(r.passed);
  CHECK(r.failures == std::vector<std::size_t>{2});
  CHECK(is_z1_0_sampled(one, {samples[0], samples[1]}).passed);
  Sampler s(o2(), 12);
  std::vector<GroupoidPoint> units;
  for (int i = 0; i < 20; ++i) units.push_back(GroupoidPoint::unit(s.ev_path(3)));
  CHECK(is_z1_0_sampled(s.function(2), units).passed);
}

TEST_CASE("graded projection") {
  for (const OrderedGraph* graph : {&o2(), &entrance()}) {
    const Graph& g = graph->graph();
    Sampler s(*graph, 13);
    const LocallyConstantFn one = LocallyConstantFn::constant(1);
    for (int i = 0; i < 50; ++i) {
      const AlgElement a = s.element(5, 3);
      for (std::int64_t m = -3; m <= 3; ++m) {
        CHECK(cocycle_graded_projection(g, one, a, m) == phi_m(g, a, m));
      }
      CHECK(cocycle_graded_projection(g, one, a, make_rational(1, 2)).empty());
      const LocallyConstantFn f = s.function(s.uniform(0, 2));
      AlgElement total;
      for (const Rational& v : cocycle_values(g, f, a)) {
        const AlgElement part = cocycle_graded_projection(g, f, a, v);
        CHECK_FALSE(part.empty());
        CHECK(cocycle_graded_projection(g, f, part, v) == part);
        total = add(g, total, part);
        for (int j = 0; j < 5; ++j) {
          const GroupoidPoint p = s.point(3);
          if (!eval(g, part, p).is_zero()) CHECK(eval_cocycle(f, p) == v);
        }
      }
      CHECK(total == normalize(g, a));
    }
  }
}
