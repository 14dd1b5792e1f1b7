#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "ckstar/error.hpp"
#include "ckstar/sampling.hpp"

#include <set>

using namespace ckstar;
using namespace support;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::precondition;
}

}  // namespace

TEST_CASE("concat") {
  const Graph& g = o2().graph();
  const FinPath ab = concat(g, path(g, {"a"}), path(g, {"b"}));
  CHECK(ab.edges() == g.word({"a", "b"}));
  CHECK(ab.size() == 2);
  CHECK(concat(g, FinPath::empty_at(0), path(g, {"a"})) == path(g, {"a"}));
  const Graph& c = c2().graph();
  CHECK(code_of([&] { concat(c, path(c, {"f1"}), path(c, {"f1"})); }) == ErrorCode::composition_mismatch);
  CHECK(code_of([&] { FinPath::from_word(c, c.word({"f1", "f1"})); }) == ErrorCode::invalid_path);
}

TEST_CASE("eventually periodic paths are canonical") {
  const Graph& g = o2().graph();
  CHECK(ev(g, {"a", "b", "b"}, {"b"}) == ev(g, {"a"}, {"b"}));
  CHECK(ev(g, {}, {"a", "b", "a", "b"}) == ev(g, {}, {"a", "b"}));
  CHECK(ev(g, {"b", "a", "b"}, {"a", "b"}) == ev(g, {}, {"b", "a"}));
  const EvPath x = ev(g, {"a", "a", "b"}, {"a", "b"});
  CHECK(x.prefix() == g.word({"a"}));
  CHECK(x.cycle() == g.word({"a", "b"}));
  CHECK(EvPath::make(g, x.prefix(), x.cycle()) == x);
  CHECK(code_of([&] { EvPath::make(g, {}, {}); }) == ErrorCode::invalid_path);
  const Graph& c = c2().graph();
  CHECK(code_of([&] { EvPath::make(c, {}, c.word({"f1"})); }) == ErrorCode::invalid_path);
}

TEST_CASE("shift") {
  const Graph& g = o2().graph();
  CHECK(shift(ev(g, {"a"}, {"b"})) == ev(g, {}, {"b"}));
  CHECK(shift(ev(g, {}, {"a", "b"})) == ev(g, {}, {"b", "a"}));
  CHECK(shift(shift(ev(g, {}, {"a", "b"}))) == ev(g, {}, {"a", "b"}));
  Sampler s(entrance(), 3);
  const Graph& h = entrance().graph();
  for (int i = 0; i < 100; ++i) {
    const EvPath x = s.ev_path(3);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (h.source(e) != x.range(h)) continue;
      CHECK(shift(x.prepend(h, FinPath::from_word(h, {e}))) == x);
    }
  }
}

TEST_CASE("lexicographic comparison") {
  const OrderedGraph& og = o2();
  const Graph& g = og.graph();
  CHECK(lex_compare(og, path(g, {"a", "b"}), path(g, {"b", "a"})) == std::strong_ordering::less);
  CHECK(lex_compare(og, ev(g, {"a"}, {"b"}), ev(g, {}, {"b"})) == std::strong_ordering::less);
  CHECK(lex_compare(og, ev(g, {}, {"a", "b"}), ev(g, {"a"}, {"b", "a"})) == std::strong_ordering::equal);
  CHECK(code_of([&] { lex_compare(og, path(g, {"a"}), path(g, {"a", "b"})); }) == ErrorCode::length_mismatch);
  // Window bound: compare against a long explicit expansion.
  Sampler s(og, 4);
  for (int i = 0; i < 300; ++i) {
    const EvPath x = s.ev_path(4), y = s.ev_path(4);
    const EdgeWord xw = x.take(200), yw = y.take(200);
    const auto expected = xw == yw                             ? std::strong_ordering::equal
                          : oracle::lex_less(og, xw, yw) ? std::strong_ordering::less
                                                              : std::strong_ordering::greater;
    CHECK(lex_compare(og, x, y) == expected);
    CHECK((lex_compare(og, x, y) == std::strong_ordering::equal) == (x == y));
  }
}

TEST_CASE("s-minimal and s-maximal paths") {
  const OrderedGraph& og = o2();
  const Graph& g = og.graph();
  CHECK(is_s_minimal(og, path(g, {"a", "a"})));
  CHECK(is_s_maximal(og, path(g, {"b", "b"})));
  CHECK_FALSE(is_s_minimal(og, path(g, {"a", "b"})));
  // Against enumeration: alpha is s-minimal iff it is the lex-first path of
  // its length into s(alpha).
  for (const OrderedGraph* graph : {&o2(), &entrance()}) {
    const Graph& h = graph->graph();
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& w : oracle::all_words(h, n)) {
        const FinPath alpha = FinPath::from_word(h, w);
        bool minimal = true, maximal = true;
        for (const auto& other : oracle::all_words(h, n)) {
          if (h.range(other.front()) != alpha.source()) continue;
          if (oracle::lex_less(*graph, other, w)) minimal = false;
          if (oracle::lex_less(*graph, w, other)) maximal = false;
        }
        CHECK(is_s_minimal(*graph, alpha) == minimal);
        CHECK(is_s_maximal(*graph, alpha) == maximal);
      }
    }
  }
}

TEST_CASE("paths are enumerated in lexicographic order") {
  for (const OrderedGraph* graph : {&o2(), &c2(), &entrance()}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto expected = oracle::all_words(graph->graph(), n);
      std::sort(expected.begin(), expected.end(),
                [&](const EdgeWord& x, const EdgeWord& y) { return oracle::lex_less(*graph, x, y); });
      CHECK(paths_of_length(*graph, n) == expected);
    }
  }
}

TEST_CASE("shift equivalence") {
  const Graph& g = o2().graph();
  CHECK(sim_k(ev(g, {"a"}, {"b"}), 1, ev(g, {}, {"b"})));
  CHECK(sim_k(ev(g, {}, {"a"}), 3, ev(g, {}, {"a"})));
  CHECK_FALSE(sim_k(ev(g, {}, {"a"}), 0, ev(g, {}, {"b"})));
  CHECK_FALSE(sim_k(ev(g, {}, {"a", "b"}), 1, ev(g, {}, {"a", "b"})));
  CHECK(sim_k(ev(g, {}, {"a", "b"}), 2, ev(g, {}, {"a", "b"})));
  CHECK(sim_k(ev(g, {}, {"a", "b"}), -1, ev(g, {}, {"b", "a"})));
}

TEST_CASE("groupoid composition and inverse") {
  const Graph& g = o2().graph();
  const GroupoidPoint p = GroupoidPoint::make(ev(g, {"a"}, {"b"}), 1, ev(g, {}, {"b"}));
  CHECK(compose(p, GroupoidPoint::unit(ev(g, {}, {"b"}))) == p);
  CHECK(inverse(p) == GroupoidPoint::make(ev(g, {}, {"b"}), -1, ev(g, {"a"}, {"b"})));
  const GroupoidPoint loop = GroupoidPoint::make(ev(g, {}, {"a"}), 1, ev(g, {}, {"a"}));
  CHECK(compose(loop, loop) == GroupoidPoint::make(ev(g, {}, {"a"}), 2, ev(g, {}, {"a"})));
  CHECK(code_of([&] { compose(p, p); }) == ErrorCode::non_composable);
  CHECK(code_of([&] { GroupoidPoint::make(ev(g, {}, {"a"}), 0, ev(g, {}, {"b"})); }) == ErrorCode::invalid_path);

  Sampler s(entrance(), 5);
  for (int i = 0; i < 200; ++i) {
    const auto [g1, g2] = s.composable_pair(3);
    const GroupoidPoint unit = compose(g1, inverse(g1));
    CHECK(unit.is_unit());
    CHECK(unit.x == g1.x);
    const GroupoidPoint g3 = GroupoidPoint::make(g2.y, 0, g2.y);
    CHECK(compose(compose(g1, g2), g3) == compose(g1, compose(g2, g3)));
    CHECK(sim_k(compose(g1, g2).x, compose(g1, g2).k, compose(g1, g2).y));
  }
}

TEST_CASE("cylinders") {
  const Graph& g = o2().graph();
  CHECK(in_cylinder(g, ev(g, {"a"}, {"b"}), path(g, {"a"})));
  CHECK_FALSE(in_cylinder(g, ev(g, {"a"}, {"b"}), path(g, {"b"})));
  const GroupoidPoint p = GroupoidPoint::make(ev(g, {"a"}, {"b"}), 1, ev(g, {}, {"b"}));
  CHECK(point_in_Z(g, p, path(g, {"a"}), FinPath::empty_at(0)));
  const GroupoidPoint unit = GroupoidPoint::unit(ev(g, {}, {"a"}));
  CHECK_FALSE(point_in_Z(g, unit, path(g, {"b"}), path(g, {"b"})));

  Sampler s(entrance(), 6);
  const Graph& h = entrance().graph();
  for (int i = 0; i < 200; ++i) {
    const GroupoidPoint q = s.point(3);
    const CKMono m = s.mono(3);
    CHECK(point_in_Z(h, q, m.alpha, m.beta) == oracle::in_Z(h, q, m));
  }
}

TEST_CASE("cylinders are nested or disjoint") {
  const Graph& g = entrance().graph();
  std::vector<FinPath> paths;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : oracle::all_words(g, n)) paths.push_back(FinPath::from_word(g, w));
  }
  for (const auto& x : paths) {
    for (const auto& y : paths) {
      const bool nested = x.starts_with(y, g) || y.starts_with(x, g);
      // A common point, if any, extends the longer path.
      const FinPath& longer = x.size() >= y.size() ? x : y;
      bool meet = false;
      for (const auto& loop : simple_loops(g)) {
        for (std::size_t r = 0; r < loop.size(); ++r) {
          EdgeWord rotated = loop;
          std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(r), rotated.end());
          if (g.range(rotated.front()) != longer.source()) continue;
          const EvPath point = EvPath::make(g, longer.edges(), rotated);
          meet = meet || (in_cylinder(g, point, x) && in_cylinder(g, point, y));
        }
      }
      CHECK(meet == nested);
    }
  }
}
