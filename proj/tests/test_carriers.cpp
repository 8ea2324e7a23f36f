#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "behave/carriers.hpp"
#include "behave/enumerate.hpp"
#include "behave/laws.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace behave;

TEST_CASE("composition through a singleton is constant", "[carriers][compose]") {
  const FinObj one_two{"1", "2"}, a{"a"}, xy{"x", "y"};
  const FinMap f(one_two, a, std::map<std::string, std::string>{{"1", "a"}, {"2", "a"}});
  const FinMap g(a, xy, std::map<std::string, std::string>{{"a", "x"}});
  const auto gf = compose(g, f);
  CHECK(gf("1") == "x");
  CHECK(gf("2") == "x");
  CHECK(compose(identity(a), f) == f);
  CHECK(compose(f, identity(one_two)) == f);
}

TEST_CASE("linear composition multiplies matrices", "[carriers][compose]") {
  const VectObj x{"p", "q"}, y{"r"};
  const LinMap f(x, x, Matrix{{1, 0}, {0, 2}});
  const LinMap g(x, y, Matrix{{1, 1}});
  CHECK(compose(g, f).matrix() == Matrix{{1, 2}});
  CHECK(compose(identity(y), g) == g);
}

TEST_CASE("composition errors", "[carriers][compose][errors]") {
  const FinObj a{"a"}, b{"b"};
  CHECK_THROWS_AS(compose(identity(a), identity(b)), CompositionError);
  const VectObj x{"x"}, y{"y"};
  CHECK_THROWS_AS(compose(identity(x), identity(y)), CompositionError);
  const CarrierMap fin = identity(a);
  const CarrierMap lin = identity(x);
  CHECK_THROWS_AS(compose(fin, lin), CarrierMismatch);
  CHECK(std::get<FinMap>(compose(fin, fin)) == identity(a));
}

TEST_CASE("invalid objects and maps", "[carriers][errors]") {
  CHECK_THROWS_AS(FinObj({"a", "a"}), InvalidObject);
  CHECK_THROWS_AS(VectObj({"v", "v"}), InvalidObject);
  const FinObj a{"a"}, b{"b", "c"};
  CHECK_THROWS_AS(FinMap(a, b, std::vector<std::size_t>{2}), InvalidObject);
  CHECK_THROWS_AS(FinMap(b, a, std::vector<std::size_t>{0}), InvalidObject);
  CHECK_THROWS_AS(LinMap(VectObj{"x"}, VectObj{"y"}, Matrix(2, 1)), InvalidObject);
  CHECK_THROWS_AS(VectObj({"x"}).index_of("nope"), UnknownVariable);
}

TEST_CASE("finite products", "[carriers][product]") {
  const auto p = product(FinObj{"a", "b"}, FinObj{"x"});
  CHECK(p.object == FinObj{"(a,x)", "(b,x)"});
  CHECK(p.p1("(b,x)") == "b");
  CHECK(p.p2("(a,x)") == "x");
  CHECK(product(FinObj{}, FinObj{"x"}).object.empty());
}

TEST_CASE("linear products qualify variable names", "[carriers][product]") {
  const auto p = product(VectObj{"v", "i"}, VectObj{"w"});
  CHECK(p.object.vars() == std::vector<std::string>{"L.v", "L.i", "R.w"});
  CHECK(p.p1.matrix() == Matrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(p.p2.matrix() == Matrix{{0, 0, 1}});
  CHECK(product(zero_space(), VectObj{"w"}).object.dim() == 1);
}

TEST_CASE("finite pullbacks", "[carriers][pullback]") {
  const FinObj ab{"a", "b"};
  const auto diag = pullback(identity(ab), identity(ab));
  CHECK(diag.object.size() == 2);
  for (std::size_t k = 0; k < diag.object.size(); ++k) CHECK(diag.p1(k) == diag.p2(k));

  const FinObj xy{"x", "y"}, u{"u"};
  const auto over_point = pullback(to_terminal(xy), to_terminal(u));
  CHECK(over_point.object == FinObj{"(x,u)", "(y,u)"});
  CHECK_THROWS_AS(pullback(identity(ab), identity(xy)), CodomainMismatch);
}

TEST_CASE("finite pullback equals the brute-force fibre product", "[carriers][pullback]") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x1 = numbered_set(uniform(rng, 0, 4), "x");
    const auto x2 = numbered_set(uniform(rng, 0, 4), "y");
    const auto z = numbered_set(uniform(rng, 1, 3), "z");
    const auto f1 = random_map(rng, x1, z), f2 = random_map(rng, x2, z);
    const auto pb = pullback(f1, f2);
    const auto expected = oracle::fibre_pairs(f1.table(), f2.table());
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (std::size_t k = 0; k < pb.object.size(); ++k) got.insert({pb.p1(k), pb.p2(k)});
    CHECK(got == expected);
    CHECK(pb.object.size() == expected.size());
  }
}

TEST_CASE("finite pullback universal property by exhaustive cones", "[carriers][pullback]") {
  Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const auto x1 = numbered_set(uniform(rng, 1, 3), "x");
    const auto x2 = numbered_set(uniform(rng, 1, 3), "y");
    const auto z = numbered_set(uniform(rng, 1, 2), "z");
    const auto f1 = random_map(rng, x1, z), f2 = random_map(rng, x2, z);
    const auto pb = pullback(f1, f2);
    for (std::size_t n = 0; n <= 2; ++n) {
      const auto h = numbered_set(n, "h");
      const auto hs = all_maps(h, pb.object);
      for (const auto& q1 : all_maps(h, x1)) {
        for (const auto& q2 : all_maps(h, x2)) {
          if (!(compose(f1, q1) == compose(f2, q2))) continue;
          std::size_t count = 0;
          for (const auto& m : hs) count += compose(pb.p1, m) == q1 && compose(pb.p2, m) == q2;
          CHECK(count == 1);
          const auto med = mediate(pb, q1, q2);
          REQUIRE(med.has_value());
          CHECK(compose(pb.p1, *med) == q1);
        }
      }
    }
  }
}

TEST_CASE("linear pullback of a coordinate against a line", "[carriers][pullback]") {
  const VectObj x1{"a", "b"}, x2{"c"}, z{"z"};
  const auto pb = pullback(LinMap(x1, z, Matrix{{1, 0}}), LinMap(x2, z, Matrix{{1}}));
  CHECK(pb.object.dim() == 2);
  CHECK(pb.object.dim() == oracle::nullity(oracle::ints({{1, 0, -1}}), 3));
  CHECK(compose(LinMap(x1, z, Matrix{{1, 0}}), pb.p1) == compose(LinMap(x2, z, Matrix{{1}}), pb.p2));
}

TEST_CASE("linear pullback dimension law", "[carriers][pullback]") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x1 = numbered_space(uniform(rng, 0, 4), "a");
    const auto x2 = numbered_space(uniform(rng, 0, 4), "b");
    const auto z = numbered_space(uniform(rng, 0, 3), "z");
    const LinMap f1(x1, z, random_matrix(rng, z.dim(), x1.dim()));
    const LinMap f2(x2, z, random_matrix(rng, z.dim(), x2.dim()));
    const auto pb = pullback(f1, f2);
    const auto stacked = oracle::concat_neg(support::to_ints(f1.matrix()), support::to_ints(f2.matrix()));
    const std::size_t r = z.dim() == 0 ? 0 : oracle::rank(stacked);
    CHECK(pb.object.dim() == x1.dim() + x2.dim() - r);
    CHECK(compose(f1, pb.p1) == compose(f2, pb.p2));
    CHECK(classify_map(tuple_map(pb.p1, pb.p2)).mono);
  }
}

TEST_CASE("equalizers", "[carriers][equalizer]") {
  const FinObj s{"1", "2", "3"}, t{"a", "b"};
  const FinMap f(s, t, std::vector<std::size_t>{0, 0, 1});
  const FinMap g(s, t, std::vector<std::size_t>{0, 1, 1});
  const auto e = equalizer(f, g);
  CHECK(image_set(e.inclusion) == FinObj{"1", "3"});
  CHECK(oracle::agreement(f.table(), g.table()).size() == e.object.size());
  CHECK(classify_map(e.inclusion).mono);
  CHECK(classify_map(equalizer(f, f).inclusion).iso);
  CHECK_THROWS_AS(equalizer(f, identity(s)), NotParallel);

  const VectObj x{"p", "q"}, y{"r"};
  const auto le = equalizer(LinMap(x, y, Matrix{{1, -1}}), zero_map(x, y));
  CHECK(le.object.dim() == 1);
  CHECK(Subspace::image(le.inclusion) == Subspace::span(x, Matrix{{1, 1}}));
}

TEST_CASE("image factorization", "[carriers][image]") {
  const FinObj s{"1", "2", "3"}, t{"a", "b"};
  const FinMap constant(s, t, std::vector<std::size_t>{0, 0, 0});
  const auto fc = image_factorize(constant);
  CHECK(fc.inj.dom() == FinObj{"a"});
  CHECK(classify_map(fc.surj).epi);
  CHECK(classify_map(fc.inj).mono);
  CHECK(compose(fc.inj, fc.surj) == constant);

  const FinMap inj(FinObj{"1"}, t, std::vector<std::size_t>{1});
  CHECK(classify_map(image_factorize(inj).surj).iso);

  const LinMap l(VectObj{"x", "y"}, VectObj{"u", "v"}, Matrix{{1, 2}, {2, 4}});
  const auto fl = image_factorize(l);
  CHECK(fl.inj.dom().dim() == 1);
  CHECK(Subspace::image(fl.inj) == Subspace::span(l.cod(), Matrix{{1, 2}}));
  CHECK(compose(fl.inj, fl.surj) == l);
}

TEST_CASE("two factorizations differ by a unique iso", "[carriers][image]") {
  const FinObj s{"1", "2", "3"}, t{"a", "b", "c"};
  const FinMap f(s, t, std::vector<std::size_t>{2, 0, 2});
  const auto a = image_factorize(f);
  // a second factorization through a relabelled middle object
  const FinObj mid{"m", "n"};
  const FinMap surj(s, mid, std::map<std::string, std::string>{{"1", "n"}, {"2", "m"}, {"3", "n"}});
  const FinMap inj(mid, t, std::map<std::string, std::string>{{"m", "a"}, {"n", "c"}});
  REQUIRE(compose(inj, surj) == f);
  std::size_t isos = 0;
  for (const auto& h : all_maps(a.inj.dom(), mid)) {
    if (classify_map(h).iso && compose(h, a.surj) == surj && compose(inj, h) == a.inj) ++isos;
  }
  CHECK(isos == 1);
}

TEST_CASE("map classification", "[carriers][classify]") {
  const FinObj ab{"1", "2"};
  const auto id = classify_map(identity(ab));
  CHECK((id.mono && id.epi && id.iso));
  const auto collapse = classify_map(to_terminal(ab));
  CHECK(collapse.epi);
  CHECK_FALSE(collapse.mono);
  const auto col = classify_map(LinMap(VectObj{"x"}, VectObj{"u", "v"}, Matrix{{1}, {1}}));
  CHECK(col.mono);
  CHECK_FALSE(col.epi);
}

TEST_CASE("lifting through monos", "[carriers][lift]") {
  const FinObj u{"a", "b", "c"};
  const auto m = subset_inclusion(FinObj{"a", "c"}, u);
  const FinMap inside(FinObj{"x"}, u, std::vector<std::size_t>{2});
  const FinMap outside(FinObj{"x"}, u, std::vector<std::size_t>{1});
  const auto l = lift_through_mono(m, inside);
  REQUIRE(l.has_value());
  CHECK(compose(m, *l) == inside);
  CHECK_FALSE(lift_through_mono(m, outside).has_value());

  const VectObj x{"p", "q"};
  const auto line = subspace_inclusion(Subspace::span(x, Matrix{{1, 1}}));
  CHECK(lift_through_mono(line, LinMap(VectObj{"t"}, x, Matrix{{2}, {2}})).has_value());
  CHECK_FALSE(lift_through_mono(line, LinMap(VectObj{"t"}, x, Matrix{{1}, {0}})).has_value());
}

TEST_CASE("subobject meet and join", "[carriers][lattice]") {
  const FinObj u{"a", "b", "c"};
  const auto s = subset_inclusion(FinObj{"a", "b"}, u);
  const auto t = subset_inclusion(FinObj{"b", "c"}, u);
  CHECK(image_set(subobject_meet(s, t)) == FinObj{"b"});
  CHECK(image_set(subobject_join(s, t)) == u);

  const VectObj x{"e1", "e2", "e3"};
  const auto a = subspace_inclusion(Subspace::span(x, Matrix{{1, 0, 0}, {0, 1, 0}}));
  const auto b = subspace_inclusion(Subspace::span(x, Matrix{{0, 1, 0}, {0, 0, 1}}));
  CHECK(Subspace::image(subobject_meet(a, b)) == Subspace::span(x, Matrix{{0, 1, 0}}));
  CHECK(subobject_join(a, b).dom().dim() == 3);
}

TEST_CASE("empty objects are handled everywhere", "[carriers][empty]") {
  const FinObj none;
  CHECK(classify_map(identity(none)).iso);
  CHECK(pullback(identity(none), identity(none)).object.empty());
  CHECK(equalizer(identity(none), identity(none)).object.empty());
  CHECK(image_factorize(identity(none)).inj.dom().empty());
  const VectObj zero = zero_space();
  CHECK(classify_map(identity(zero)).iso);
  CHECK(pullback(identity(zero), identity(zero)).object.dim() == 0);
}
