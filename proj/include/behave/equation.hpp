#pragma once

// The syntax category: behavioral equation representations (f1, f2) : U -> E,
// and the interpretation functor into systems via equalizers.

#include <utility>

#include "behave/carriers.hpp"
#include "behave/errors.hpp"
#include "behave/system.hpp"

namespace behave {

template <CarrierMapType Map>
class EquationRep {
 public:
  EquationRep(Map f1, Map f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
    if (!(f1_.dom() == f2_.dom()) || !(f1_.cod() == f2_.cod())) {
      throw NotParallel("behavioral equations need a parallel pair U -> E");
    }
  }

  const Map& f1() const { return f1_; }
  const Map& f2() const { return f2_; }
  const ObjectOf<Map>& universum() const { return f1_.dom(); }
  const ObjectOf<Map>& equations() const { return f1_.cod(); }

  friend bool operator==(const EquationRep&, const EquationRep&) = default;

 private:
  Map f1_;
  Map f2_;
};

template <CarrierMapType Map>
EquationRep<Map> make_equation_rep(Map f1, Map f2) {
  return EquationRep<Map>(std::move(f1), std::move(f2));
}

/// (f, 0): the behavior is ker f.
inline EquationRep<LinMap> kernel_rep(const LinMap& f) { return {f, zero_map(f.dom(), f.cod())}; }

/// The system cut out by the equations: the equalizer of f1 and f2, in canonical form.
template <CarrierMapType Map>
System<Map> arr_eq(const EquationRep<Map>& rep) {
  return canonicalize(System<Map>(equalizer(rep.f1(), rep.f2()).inclusion));
}

/// (psi_U, psi_E) with psi_E f_i == g_i psi_U for i = 1, 2.
template <CarrierMapType Map>
class EquationMorphism {
 public:
  EquationMorphism(EquationRep<Map> src, EquationRep<Map> dst, Map psi_u, Map psi_e)
      : src_(std::move(src)), dst_(std::move(dst)), psi_u_(std::move(psi_u)), psi_e_(std::move(psi_e)) {
    if (!(psi_u_.dom() == src_.universum()) || !(psi_u_.cod() == dst_.universum()) ||
        !(psi_e_.dom() == src_.equations()) || !(psi_e_.cod() == dst_.equations())) {
      throw CompositionError("equation morphism components do not match the representations");
    }
    if (!(compose(psi_e_, src_.f1()) == compose(dst_.f1(), psi_u_)) ||
        !(compose(psi_e_, src_.f2()) == compose(dst_.f2(), psi_u_))) {
      throw NotCommuting("equation morphism squares do not commute");
    }
  }

  const EquationRep<Map>& src() const { return src_; }
  const EquationRep<Map>& dst() const { return dst_; }
  const Map& psi_u() const { return psi_u_; }
  const Map& psi_e() const { return psi_e_; }

 private:
  EquationRep<Map> src_;
  EquationRep<Map> dst_;
  Map psi_u_;
  Map psi_e_;
};

template <CarrierMapType Map>
EquationMorphism<Map> identity_morphism(const EquationRep<Map>& e) {
  return EquationMorphism<Map>(e, e, identity(e.universum()), identity(e.equations()));
}

/// g after f.
template <CarrierMapType Map>
EquationMorphism<Map> compose(const EquationMorphism<Map>& g, const EquationMorphism<Map>& f) {
  if (!(f.dst() == g.src())) throw CompositionError("equation morphisms are not composable");
  return EquationMorphism<Map>(f.src(), g.dst(), compose(g.psi_u(), f.psi_u()), compose(g.psi_e(), f.psi_e()));
}

/// The unique system morphism with phi_U = psi_U.
template <CarrierMapType Map>
SystemMorphism<Map> arr_eq_morphism(const EquationMorphism<Map>& m) {
  return make_morphism(arr_eq(m.src()), arr_eq(m.dst()), m.psi_u());
}

template <CarrierMapType Map>
struct EquationPullback {
  EquationRep<Map> rep;
  EquationMorphism<Map> proj;
  EquationMorphism<Map> proj_prime;
};

/// Stack the equations: U* = U x_{U_c} U', E* = E x_{E_c} E', f*_i induced.
template <CarrierMapType Map>
EquationPullback<Map> pullback_equations(const EquationMorphism<Map>& m, const EquationMorphism<Map>& n) {
  if (!(m.dst() == n.dst())) throw CodomainMismatch("pullback of equation morphisms with different targets");
  const auto u = pullback(m.psi_u(), n.psi_u());
  const auto e = pullback(m.psi_e(), n.psi_e());
  auto f1 = mediate(e, compose(m.src().f1(), u.p1), compose(n.src().f1(), u.p2));
  auto f2 = mediate(e, compose(m.src().f2(), u.p1), compose(n.src().f2(), u.p2));
  if (!f1 || !f2) throw NotCommuting("stacked equations do not land in the equation pullback");
  EquationRep<Map> rep(std::move(*f1), std::move(*f2));
  EquationMorphism<Map> proj(rep, m.src(), u.p1, e.p1);
  EquationMorphism<Map> proj_prime(rep, n.src(), u.p2, e.p2);
  return {std::move(rep), std::move(proj), std::move(proj_prime)};
}

template <CarrierMapType Map>
struct PreservationReport {
  bool equal = false;
  System<Map> syntax;     // arr_eq of the equation pullback
  System<Map> semantics;  // pullback of the interpreted morphisms
};

/// Computes both routes around the square and compares them canonically.
template <CarrierMapType Map>
PreservationReport<Map> check_preservation(const EquationMorphism<Map>& m, const EquationMorphism<Map>& n) {
  auto syntax = arr_eq(pullback_equations(m, n).rep);
  auto semantics = pullback_systems(arr_eq_morphism(m), arr_eq_morphism(n)).system;
  const bool equal = same_behavior(syntax, semantics);
  return {equal, std::move(syntax), std::move(semantics)};
}

}  // namespace behave
