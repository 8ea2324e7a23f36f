#pragma once

// Generalized systems: arbitrary maps g : C -> U, generalized equations
// (parallel pairs of generalized-system morphisms), and the Obj-Eq functor
// that sends a generalized equation to the object of its equalizer.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "behave/carriers.hpp"
#include "behave/enumerate.hpp"
#include "behave/equation.hpp"
#include "behave/errors.hpp"
#include "behave/system.hpp"

namespace behave {

template <CarrierMapType Map>
class GeneralizedSystem {
 public:
  explicit GeneralizedSystem(Map g) : g_(std::move(g)) {}

  const Map& map() const { return g_; }
  const ObjectOf<Map>& carrier() const { return g_.dom(); }
  const ObjectOf<Map>& universum() const { return g_.cod(); }

  friend bool operator==(const GeneralizedSystem&, const GeneralizedSystem&) = default;

 private:
  Map g_;
};

/// (phi_C, phi_U) with phi_U g == g' phi_C.
template <CarrierMapType Map>
class GenSystemMorphism {
 public:
  GenSystemMorphism(GeneralizedSystem<Map> src, GeneralizedSystem<Map> dst, Map phi_c, Map phi_u)
      : src_(std::move(src)), dst_(std::move(dst)), phi_c_(std::move(phi_c)), phi_u_(std::move(phi_u)) {
    if (!(phi_c_.dom() == src_.carrier()) || !(phi_c_.cod() == dst_.carrier()) ||
        !(phi_u_.dom() == src_.universum()) || !(phi_u_.cod() == dst_.universum())) {
      throw CompositionError("generalized morphism components do not match");
    }
    if (!(compose(phi_u_, src_.map()) == compose(dst_.map(), phi_c_))) {
      throw NotCommuting("generalized system morphism square does not commute");
    }
  }

  const GeneralizedSystem<Map>& src() const { return src_; }
  const GeneralizedSystem<Map>& dst() const { return dst_; }
  const Map& phi_c() const { return phi_c_; }
  const Map& phi_u() const { return phi_u_; }

  friend bool operator==(const GenSystemMorphism&, const GenSystemMorphism&) = default;

 private:
  GeneralizedSystem<Map> src_;
  GeneralizedSystem<Map> dst_;
  Map phi_c_;
  Map phi_u_;
};

template <CarrierMapType Map>
GenSystemMorphism<Map> identity_morphism(const GeneralizedSystem<Map>& g) {
  return GenSystemMorphism<Map>(g, g, identity(g.carrier()), identity(g.universum()));
}

template <CarrierMapType Map>
GenSystemMorphism<Map> compose(const GenSystemMorphism<Map>& b, const GenSystemMorphism<Map>& a) {
  if (!(a.dst() == b.src())) throw CompositionError("generalized morphisms are not composable");
  return GenSystemMorphism<Map>(a.src(), b.dst(), compose(b.phi_c(), a.phi_c()), compose(b.phi_u(), a.phi_u()));
}

/// A parallel pair phi1, phi2 : g -> g'.
template <CarrierMapType Map>
class GenEquation {
 public:
  GenEquation(GenSystemMorphism<Map> phi1, GenSystemMorphism<Map> phi2)
      : phi1_(std::move(phi1)), phi2_(std::move(phi2)) {
    if (!(phi1_.src() == phi2_.src()) || !(phi1_.dst() == phi2_.dst())) {
      throw NotParallel("a generalized equation needs two morphisms with the same ends");
    }
  }

  const GenSystemMorphism<Map>& phi1() const { return phi1_; }
  const GenSystemMorphism<Map>& phi2() const { return phi2_; }
  const GeneralizedSystem<Map>& src() const { return phi1_.src(); }
  const GeneralizedSystem<Map>& dst() const { return phi1_.dst(); }

  friend bool operator==(const GenEquation&, const GenEquation&) = default;

 private:
  GenSystemMorphism<Map> phi1_;
  GenSystemMorphism<Map> phi2_;
};

/// Four maps tau1 : C -> D, tau2 : U -> V, tau3 : C' -> D', tau4 : U' -> V'
/// from (phi^i : g -> g') to (psi^i : h -> h'). Checked faces:
///   tau2 g == h tau1,  tau4 g' == h' tau3,
///   psi^i_D tau1 == tau3 phi^i_C,  psi^i_V tau2 == tau4 phi^i_U  (i = 1, 2).
template <CarrierMapType Map>
class GenEquationMorphism {
 public:
  GenEquationMorphism(GenEquation<Map> src, GenEquation<Map> dst, Map tau1, Map tau2, Map tau3, Map tau4)
      : src_(std::move(src)),
        dst_(std::move(dst)),
        tau1_(std::move(tau1)),
        tau2_(std::move(tau2)),
        tau3_(std::move(tau3)),
        tau4_(std::move(tau4)) {
    const auto& g = src_.src().map();
    const auto& gp = src_.dst().map();
    const auto& h = dst_.src().map();
    const auto& hp = dst_.dst().map();
    if (!(tau1_.dom() == g.dom()) || !(tau1_.cod() == h.dom()) || !(tau2_.dom() == g.cod()) ||
        !(tau2_.cod() == h.cod()) || !(tau3_.dom() == gp.dom()) || !(tau3_.cod() == hp.dom()) ||
        !(tau4_.dom() == gp.cod()) || !(tau4_.cod() == hp.cod())) {
      throw CompositionError("generalized equation morphism components do not match");
    }
    if (!(compose(tau2_, g) == compose(h, tau1_))) throw NotCommuting("top face does not commute");
    if (!(compose(tau4_, gp) == compose(hp, tau3_))) throw NotCommuting("bottom face does not commute");
    const GenSystemMorphism<Map>* phis[2] = {&src_.phi1(), &src_.phi2()};
    const GenSystemMorphism<Map>* psis[2] = {&dst_.phi1(), &dst_.phi2()};
    for (int i = 0; i < 2; ++i) {
      if (!(compose(psis[i]->phi_c(), tau1_) == compose(tau3_, phis[i]->phi_c()))) {
        throw NotCommuting("carrier-side face does not commute");
      }
      if (!(compose(psis[i]->phi_u(), tau2_) == compose(tau4_, phis[i]->phi_u()))) {
        throw NotCommuting("universum-side face does not commute");
      }
    }
  }

  const GenEquation<Map>& src() const { return src_; }
  const GenEquation<Map>& dst() const { return dst_; }
  const Map& tau1() const { return tau1_; }
  const Map& tau2() const { return tau2_; }
  const Map& tau3() const { return tau3_; }
  const Map& tau4() const { return tau4_; }

 private:
  GenEquation<Map> src_;
  GenEquation<Map> dst_;
  Map tau1_, tau2_, tau3_, tau4_;
};

template <CarrierMapType Map>
GenEquationMorphism<Map> compose(const GenEquationMorphism<Map>& b, const GenEquationMorphism<Map>& a) {
  if (!(a.dst() == b.src())) throw CompositionError("generalized equation morphisms are not composable");
  return GenEquationMorphism<Map>(a.src(), b.dst(), compose(b.tau1(), a.tau1()), compose(b.tau2(), a.tau2()),
                                  compose(b.tau3(), a.tau3()), compose(b.tau4(), a.tau4()));
}

// ---------------------------------------------------------------------------

/// Read a generalized system as a regular one through its image.
template <CarrierMapType Map>
System<Map> image_system(const GeneralizedSystem<Map>& g) {
  return System<Map>(image_factorize(g.map()).inj);
}

template <CarrierMapType Map>
SystemMorphism<Map> image_system(const GenSystemMorphism<Map>& m) {
  return make_morphism(image_system(m.src()), image_system(m.dst()), m.phi_u());
}

template <CarrierMapType Map>
struct ObjEq {
  GeneralizedSystem<Map> object;  // E_C -> E_U
  Map carrier_inclusion;          // E_C -> C
  Map universum_inclusion;        // E_U -> U
};

/// Componentwise equalizers with the induced map between them.
template <CarrierMapType Map>
ObjEq<Map> obj_eq(const GenEquation<Map>& e) {
  const auto ec = equalizer(e.phi1().phi_c(), e.phi2().phi_c());
  const auto eu = equalizer(e.phi1().phi_u(), e.phi2().phi_u());
  auto induced = lift_through_mono(eu.inclusion, compose(e.src().map(), ec.inclusion));
  if (!induced) throw NotCommuting("equalizer of carriers does not land in the equalizer of universa");
  return {GeneralizedSystem<Map>(std::move(*induced)), ec.inclusion, eu.inclusion};
}

template <CarrierMapType Map>
GenSystemMorphism<Map> obj_eq_morphism(const GenEquationMorphism<Map>& t) {
  const auto a = obj_eq(t.src());
  const auto b = obj_eq(t.dst());
  auto c = lift_through_mono(b.carrier_inclusion, compose(t.tau1(), a.carrier_inclusion));
  auto u = lift_through_mono(b.universum_inclusion, compose(t.tau2(), a.universum_inclusion));
  if (!c || !u) throw NotCommuting("morphism does not preserve the equalizers");
  return GenSystemMorphism<Map>(a.object, b.object, std::move(*c), std::move(*u));
}

/// (id_U : U -> U) => (E -> terminal) with carrier components f1 and f2.
template <CarrierMapType Map>
GenEquation<Map> embed_equation(const EquationRep<Map>& rep) {
  GeneralizedSystem<Map> top(identity(rep.universum()));
  GeneralizedSystem<Map> bottom(to_terminal(rep.equations()));
  const Map bang = to_terminal(rep.universum());
  return GenEquation<Map>(GenSystemMorphism<Map>(top, bottom, rep.f1(), bang),
                          GenSystemMorphism<Map>(top, bottom, rep.f2(), bang));
}

template <CarrierMapType Map>
GenEquation<Map> diagonal(const GeneralizedSystem<Map>& g) {
  return GenEquation<Map>(identity_morphism(g), identity_morphism(g));
}

template <CarrierMapType Map>
GenEquationMorphism<Map> diagonal(const GenSystemMorphism<Map>& m) {
  return GenEquationMorphism<Map>(diagonal(m.src()), diagonal(m.dst()), m.phi_c(), m.phi_u(), m.phi_c(),
                                  m.phi_u());
}

// ---------------------------------------------------------------------------
// pullbacks, corner by corner

template <CarrierMapType Map>
struct GenSystemPullback {
  GeneralizedSystem<Map> object;
  GenSystemMorphism<Map> pi;
  GenSystemMorphism<Map> pi_prime;
};

template <CarrierMapType Map>
GenSystemPullback<Map> pullback_gen_systems(const GenSystemMorphism<Map>& a, const GenSystemMorphism<Map>& b) {
  if (!(a.dst() == b.dst())) throw CodomainMismatch("pullback of generalized morphisms with different targets");
  const auto c = pullback(a.phi_c(), b.phi_c());
  const auto u = pullback(a.phi_u(), b.phi_u());
  auto g = mediate(u, compose(a.src().map(), c.p1), compose(b.src().map(), c.p2));
  if (!g) throw NotCommuting("carrier pullback does not map into the universum pullback");
  GeneralizedSystem<Map> obj(std::move(*g));
  GenSystemMorphism<Map> pi(obj, a.src(), c.p1, u.p1);
  GenSystemMorphism<Map> pi_prime(obj, b.src(), c.p2, u.p2);
  return {std::move(obj), std::move(pi), std::move(pi_prime)};
}

template <CarrierMapType Map>
struct GenEquationPullback {
  GenEquation<Map> object;
  GenEquationMorphism<Map> proj;
  GenEquationMorphism<Map> proj_prime;
};

template <CarrierMapType Map>
GenEquationPullback<Map> pullback_gen_equations(const GenEquationMorphism<Map>& t, const GenEquationMorphism<Map>& s) {
  if (!(t.dst() == s.dst())) throw CodomainMismatch("pullback of generalized equation morphisms with different targets");
  const auto top = pullback_gen_systems(GenSystemMorphism<Map>(t.src().src(), t.dst().src(), t.tau1(), t.tau2()),
                                        GenSystemMorphism<Map>(s.src().src(), s.dst().src(), s.tau1(), s.tau2()));
  const auto bottom = pullback_gen_systems(GenSystemMorphism<Map>(t.src().dst(), t.dst().dst(), t.tau3(), t.tau4()),
                                           GenSystemMorphism<Map>(s.src().dst(), s.dst().dst(), s.tau3(), s.tau4()));
  const auto c_pb = pullback(t.tau3(), s.tau3());
  const auto u_pb = pullback(t.tau4(), s.tau4());
  auto induced = [&](const GenSystemMorphism<Map>& x, const GenSystemMorphism<Map>& y) {
    auto c = mediate(c_pb, compose(x.phi_c(), top.pi.phi_c()), compose(y.phi_c(), top.pi_prime.phi_c()));
    auto u = mediate(u_pb, compose(x.phi_u(), top.pi.phi_u()), compose(y.phi_u(), top.pi_prime.phi_u()));
    if (!c || !u) throw NotCommuting("generalized equation pullback: induced map does not exist");
    return GenSystemMorphism<Map>(top.object, bottom.object, std::move(*c), std::move(*u));
  };
  GenEquation<Map> obj(induced(t.src().phi1(), s.src().phi1()), induced(t.src().phi2(), s.src().phi2()));
  GenEquationMorphism<Map> proj(obj, t.src(), top.pi.phi_c(), top.pi.phi_u(), bottom.pi.phi_c(), bottom.pi.phi_u());
  GenEquationMorphism<Map> proj_prime(obj, s.src(), top.pi_prime.phi_c(), top.pi_prime.phi_u(),
                                      bottom.pi_prime.phi_c(), bottom.pi_prime.phi_u());
  return {std::move(obj), std::move(proj), std::move(proj_prime)};
}

// ---------------------------------------------------------------------------
// the adjunction, checked extensionally on small finite sets

inline constexpr std::size_t kAdjunctionBound = 3;

/// Hom(diagonal g, e) in generalized equations vs Hom(g, ObjEq e) in generalized systems.
struct AdjunctionReport {
  std::size_t left_count = 0;    // |Hom(diagonal g, e)|
  std::size_t right_count = 0;   // |Hom(g, ObjEq e)|
  bool bijection = false;        // tau |-> (tau1, tau2) corestricted is a bijection
  bool natural = false;          // commutes with precomposition by an endomorphism of g
  bool holds() const { return left_count == right_count && bijection && natural; }
};

/// All morphisms g -> h between small generalized FinSet systems.
inline std::vector<GenSystemMorphism<FinMap>> all_gen_morphisms(const GeneralizedSystem<FinMap>& g,
                                                                const GeneralizedSystem<FinMap>& h) {
  std::vector<GenSystemMorphism<FinMap>> out;
  const auto cs = all_maps(g.carrier(), h.carrier());
  const auto us = all_maps(g.universum(), h.universum());
  for (const auto& c : cs) {
    const auto hc = compose(h.map(), c);
    for (const auto& u : us) {
      if (compose(u, g.map()) == hc) out.emplace_back(g, h, c, u);
    }
  }
  return out;
}

/// All morphisms (diagonal g) -> e, by exhaustive search over the four component maps.
inline std::vector<GenEquationMorphism<FinMap>> all_diagonal_morphisms(const GeneralizedSystem<FinMap>& g,
                                                                       const GenEquation<FinMap>& e) {
  const auto dg = diagonal(g);
  const auto& h = e.src().map();
  const auto& hp = e.dst().map();
  std::vector<GenEquationMorphism<FinMap>> out;
  const auto t1s = all_maps(g.carrier(), h.dom());
  const auto t2s = all_maps(g.universum(), h.cod());
  const auto t3s = all_maps(g.carrier(), hp.dom());
  const auto t4s = all_maps(g.universum(), hp.cod());
  for (const auto& t1 : t1s) {
    for (const auto& t2 : t2s) {
      if (!(compose(t2, g.map()) == compose(h, t1))) continue;
      for (const auto& t3 : t3s) {
        if (!(compose(e.phi1().phi_c(), t1) == t3) || !(compose(e.phi2().phi_c(), t1) == t3)) continue;
        for (const auto& t4 : t4s) {
          if (!(compose(e.phi1().phi_u(), t2) == t4) || !(compose(e.phi2().phi_u(), t2) == t4)) continue;
          if (!(compose(t4, g.map()) == compose(hp, t3))) continue;
          out.emplace_back(dg, e, t1, t2, t3, t4);
        }
      }
    }
  }
  return out;
}

inline AdjunctionReport adjunction_check(const GeneralizedSystem<FinMap>& g, const GenEquation<FinMap>& e) {
  for (std::size_t n : {g.carrier().size(), g.universum().size(), e.src().carrier().size(),
                        e.src().universum().size(), e.dst().carrier().size(), e.dst().universum().size()}) {
    if (n > kAdjunctionBound) throw SizeBoundExceeded("adjunction check is limited to objects of at most 3 elements");
  }
  const auto eq = obj_eq(e);
  const auto left = all_diagonal_morphisms(g, e);
  const auto right = all_gen_morphisms(g, eq.object);

  auto transpose = [&](const GenEquationMorphism<FinMap>& tau) -> std::optional<GenSystemMorphism<FinMap>> {
    auto c = lift_through_mono(eq.carrier_inclusion, tau.tau1());
    auto u = lift_through_mono(eq.universum_inclusion, tau.tau2());
    if (!c || !u) return std::nullopt;
    return GenSystemMorphism<FinMap>(g, eq.object, std::move(*c), std::move(*u));
  };

  AdjunctionReport report;
  report.left_count = left.size();
  report.right_count = right.size();

  std::vector<bool> hit(right.size(), false);
  bool bijection = left.size() == right.size();
  for (const auto& tau : left) {
    const auto t = transpose(tau);
    if (!t) {
      bijection = false;
      break;
    }
    const auto it = std::find(right.begin(), right.end(), *t);
    if (it == right.end() || hit[static_cast<std::size_t>(it - right.begin())]) {
      bijection = false;
      break;
    }
    hit[static_cast<std::size_t>(it - right.begin())] = true;
  }
  report.bijection = bijection;

  // Naturality in g: transpose(tau . diagonal(k)) == transpose(tau) . k for one
  // endomorphism k of g (the first non-identity one, if any).
  const auto endos = all_gen_morphisms(g, g);
  GenSystemMorphism<FinMap> k = identity_morphism(g);
  for (const auto& m : endos) {
    if (!(m == k)) {
      k = m;
      break;
    }
  }
  const auto dk = diagonal(k);
  bool natural = true;
  for (const auto& tau : left) {
    const auto lhs = transpose(compose(tau, dk));
    const auto rhs = transpose(tau);
    if (!lhs || !rhs || !(*lhs == compose(*rhs, k))) {
      natural = false;
      break;
    }
  }
  report.natural = natural;
  return report;
}

}  // namespace behave
