#include <catch_amalgamated.hpp>

#include "behave/gen_system.hpp"
#include "behave/laws.hpp"
#include "oracle.hpp"

using namespace behave;

namespace {

using GS = GeneralizedSystem<FinMap>;

FinMap tmap(const FinObj& x, const FinObj& y, std::vector<std::size_t> t) { return FinMap(x, y, std::move(t)); }

/// Every generalized equation morphism a -> b, found by brute force over all four components.
std::vector<GenEquationMorphism<FinMap>> all_equation_morphisms(const GenEquation<FinMap>& a,
                                                                const GenEquation<FinMap>& b) {
  std::vector<GenEquationMorphism<FinMap>> out;
  for (const auto& t1 : all_maps(a.src().carrier(), b.src().carrier()))
    for (const auto& t2 : all_maps(a.src().universum(), b.src().universum()))
      for (const auto& t3 : all_maps(a.dst().carrier(), b.dst().carrier()))
        for (const auto& t4 : all_maps(a.dst().universum(), b.dst().universum())) {
          try {
            out.emplace_back(a, b, t1, t2, t3, t4);
          } catch (const NotCommuting&) {
          }
        }
  return out;
}

}  // namespace

TEST_CASE("generalized morphisms commute or are rejected", "[gen]") {
  const FinObj c{"1", "2"}, u{"a", "b"};
  const GS g(tmap(c, u, {0, 1}));
  const GS h(tmap(c, u, {0, 0}));
  CHECK_THROWS_AS(GenSystemMorphism<FinMap>(g, h, identity(c), identity(u)), NotCommuting);
  CHECK_NOTHROW(GenSystemMorphism<FinMap>(h, h, tmap(c, c, {1, 0}), identity(u)));
  CHECK_THROWS_AS(GenSystemMorphism<FinMap>(g, h, identity(u), identity(u)), CompositionError);
  const auto id = identity_morphism(g);
  CHECK(compose(id, id) == id);
}

TEST_CASE("generalized equations need parallel morphisms", "[gen][errors]") {
  const FinObj c{"1"}, u{"a"};
  const GS g(identity(c));
  const GS h(identity(u));
  const auto x = identity_morphism(g);
  const GenSystemMorphism<FinMap> y(g, h, tmap(c, u, {0}), tmap(c, u, {0}));
  CHECK_THROWS_AS(GenEquation<FinMap>(x, y), NotParallel);
}

TEST_CASE("generalized equation morphisms check every face", "[gen][errors]") {
  const FinObj c{"1", "2"};
  const GS g(identity(c));
  const auto e = diagonal(g);
  const FinMap swap = tmap(c, c, {1, 0});
  CHECK_NOTHROW(GenEquationMorphism<FinMap>(e, e, swap, swap, swap, swap));
  CHECK_THROWS_AS(GenEquationMorphism<FinMap>(e, e, swap, swap, identity(c), identity(c)), NotCommuting);
  CHECK_THROWS_AS(GenEquationMorphism<FinMap>(e, e, swap, identity(c), swap, identity(c)), NotCommuting);
}

TEST_CASE("image systems", "[gen][image]") {
  const FinObj c{"1", "2"}, u{"a", "b"};
  CHECK(image_system(GS(tmap(c, u, {0, 0}))).behavior() == FinObj{"a"});
  const GS mono(tmap(c, u, {1, 0}));
  CHECK(same_behavior(image_system(mono), System<FinMap>(mono.map())));
  const VectObj x{"x", "y"};
  const GeneralizedSystem<LinMap> l(LinMap(x, x, Matrix{{1, 2}, {2, 4}}));
  CHECK(behavior_subspace(image_system(l)) == Subspace::span(x, Matrix{{1, 2}}));
  const auto m = image_system(identity_morphism(mono));
  CHECK(m.kind().controlled);
}

TEST_CASE("Obj-Eq of a diagonal is the system itself", "[gen][obj_eq]") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_gen_system(rng, 3, "");
    const auto o = obj_eq(diagonal(g));
    CHECK(classify_map(o.carrier_inclusion).iso);
    CHECK(classify_map(o.universum_inclusion).iso);
    CHECK(compose(o.universum_inclusion, o.object.map()) == compose(g.map(), o.carrier_inclusion));
  }
  const GS empty(identity(FinObj{}));
  CHECK(obj_eq(diagonal(empty)).object.carrier().empty());
}

TEST_CASE("Obj-Eq takes componentwise agreement sets", "[gen][obj_eq]") {
  const FinObj s{"1", "2", "3"}, t{"a", "b"};
  const auto f1 = tmap(s, t, {0, 0, 1});
  const auto f2 = tmap(s, t, {0, 1, 1});
  const GS top(identity(s));
  const GS bottom(identity(t));
  const GenEquation<FinMap> e(GenSystemMorphism<FinMap>(top, bottom, f1, f1),
                              GenSystemMorphism<FinMap>(top, bottom, f2, f2));
  const auto o = obj_eq(e);
  CHECK(image_set(o.carrier_inclusion) == FinObj{"1", "3"});
  CHECK(image_set(o.universum_inclusion) == FinObj{"1", "3"});
  CHECK(o.object.carrier().size() == oracle::agreement(f1.table(), f2.table()).size());
}

TEST_CASE("embedded plain equations recover arr_eq", "[gen][obj_eq]") {
  const FinObj s{"1", "2", "3"}, t{"a", "b"};
  const EquationRep<FinMap> rep(tmap(s, t, {0, 0, 1}), tmap(s, t, {0, 1, 1}));
  const auto o = obj_eq(embed_equation(rep));
  const System<FinMap> via_gen(o.carrier_inclusion);
  CHECK(same_behavior(via_gen, arr_eq(rep)));
  CHECK(classify_map(o.universum_inclusion).iso);

  const auto f = tmap(s, t, {1, 0, 1});
  CHECK(obj_eq(embed_equation(EquationRep<FinMap>(f, f))).object.carrier() == s);

  const VectObj u{"v_a", "v_b", "i_ab"};
  const auto resistor = kernel_rep(LinMap(u, VectObj{"ohm"}, Matrix{{-1, 1, 3}}));
  const auto lo = obj_eq(embed_equation(resistor));
  CHECK(same_behavior(System<LinMap>(lo.carrier_inclusion), arr_eq(resistor)));
}

TEST_CASE("the diagonal is functorial", "[gen][diagonal]") {
  const FinObj c{"1", "2"};
  const GS g(identity(c));
  const GenSystemMorphism<FinMap> swap(g, g, tmap(c, c, {1, 0}), tmap(c, c, {1, 0}));
  const auto d = diagonal(swap);
  const auto dd = compose(d, d);
  CHECK(dd.tau1() == identity(c));
  CHECK(obj_eq_morphism(d) == GenSystemMorphism<FinMap>(obj_eq(diagonal(g)).object, obj_eq(diagonal(g)).object,
                                                        tmap(c, c, {1, 0}), tmap(c, c, {1, 0})));
}

TEST_CASE("pullbacks of generalized systems", "[gen][pullback]") {
  const FinObj c{"1", "2"}, u{"a", "b"}, p{"*"};
  const GS g(tmap(c, u, {0, 1}));
  const GS point(identity(p));
  const GenSystemMorphism<FinMap> bang(g, point, to_terminal(c), to_terminal(u));
  const auto pb = pullback_gen_systems(bang, bang);
  CHECK(pb.object.carrier().size() == 4);
  CHECK(pb.object.universum().size() == 4);
  CHECK_THROWS_AS(pullback_gen_systems(bang, identity_morphism(g)), CodomainMismatch);
}

TEST_CASE("Obj-Eq preserves pullbacks", "[gen][pullback]") {
  Rng rng(77);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 15; ++trial) {
    const auto target = random_gen_equation(rng, 2);
    const auto a = random_gen_equation(rng, 2);
    const auto b = random_gen_equation(rng, 2);
    const auto ts = all_equation_morphisms(a, target);
    const auto ss = all_equation_morphisms(b, target);
    if (ts.empty() || ss.empty()) continue;
    const auto& t = ts[uniform(rng, 0, ts.size() - 1)];
    const auto& s = ss[uniform(rng, 0, ss.size() - 1)];
    const auto pb = pullback_gen_equations(t, s);

    const auto ot = obj_eq_morphism(t);
    const auto os = obj_eq_morphism(s);
    const auto x = obj_eq_morphism(pb.proj);
    const auto y = obj_eq_morphism(pb.proj_prime);
    const auto cpb = pullback(ot.phi_c(), os.phi_c());
    const auto upb = pullback(ot.phi_u(), os.phi_u());
    const auto c = mediate(cpb, x.phi_c(), y.phi_c());
    const auto u = mediate(upb, x.phi_u(), y.phi_u());
    REQUIRE(c.has_value());
    REQUIRE(u.has_value());
    CHECK(classify_map(*c).iso);
    CHECK(classify_map(*u).iso);
    ++checked;
  }
  CHECK(checked == 15);
}

TEST_CASE("adjunction on the diagonal itself", "[gen][adjunction]") {
  const FinObj c{"1", "2"}, u{"a", "b", "c"};
  const GS g(tmap(c, u, {0, 2}));
  const auto r = adjunction_check(g, diagonal(g));
  CHECK(r.holds());
  CHECK(r.left_count == all_gen_morphisms(g, g).size());
}

TEST_CASE("adjunction with a singleton system", "[gen][adjunction]") {
  Rng rng(19);
  const GS g(identity(FinObj{"0"}));
  for (int trial = 0; trial < 10; ++trial) {
    const auto e = random_gen_equation(rng, 3);
    const auto r = adjunction_check(g, e);
    CHECK(r.left_count == r.right_count);
    CHECK(r.holds());
  }
}

TEST_CASE("adjunction on random bounded instances", "[gen][adjunction]") {
  const auto t = adjunction_law(5, 30);
  CHECK(t.passed == t.total);
}

TEST_CASE("adjunction refuses large objects", "[gen][adjunction][errors]") {
  const GS big(identity(numbered_set(4, "x")));
  CHECK_THROWS_AS(adjunction_check(big, diagonal(big)), SizeBoundExceeded);
}
