#pragma once

// The semantic category: systems are monos B -> U, morphisms are commuting squares.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "behave/carriers.hpp"
#include "behave/errors.hpp"

namespace behave {

/// A behavior B embedded in a universum U by a mono.
template <CarrierMapType Map>
class System {
 public:
  using map_type = Map;
  using object_type = ObjectOf<Map>;

  explicit System(Map inclusion) : inclusion_(std::move(inclusion)) {
    if (!classify_map(inclusion_).mono) throw NonInjectiveInclusion("system inclusion is not injective");
  }

  const Map& inclusion() const { return inclusion_; }
  const object_type& behavior() const { return inclusion_.dom(); }
  const object_type& universum() const { return inclusion_.cod(); }

  friend bool operator==(const System&, const System&) = default;

 private:
  Map inclusion_;
};

template <CarrierMapType Map>
System<Map> make_system(Map inclusion) {
  return System<Map>(std::move(inclusion));
}

/// B = U.
template <class Obj>
auto full_system(const Obj& universum) {
  return System<typename Obj::map_type>(identity(universum));
}

/// The terminal system 1 = id on the terminal object.
template <CarrierMapType Map>
System<Map> terminal_system() {
  return System<Map>(identity(carrier_traits<Map>::terminal()));
}

/// Same universum, behavior rebuilt in canonical form (sorted subset / RREF basis).
template <CarrierMapType Map>
System<Map> canonicalize(const System<Map>& s) {
  return System<Map>(canonical_mono(s.inclusion()));
}

/// Equal universa and equal behaviors as subobjects.
template <CarrierMapType Map>
bool same_behavior(const System<Map>& a, const System<Map>& b) {
  return a.universum() == b.universum() && canonical_mono(a.inclusion()) == canonical_mono(b.inclusion());
}

inline std::size_t behavior_size(const System<FinMap>& s) { return s.behavior().size(); }
inline std::size_t behavior_size(const System<LinMap>& s) { return s.behavior().dim(); }

inline Subspace behavior_subspace(const System<LinMap>& s) { return Subspace::image(s.inclusion()); }

inline FinObj behavior_set(const System<FinMap>& s) { return image_set(s.inclusion()); }

// ---------------------------------------------------------------------------
// morphisms

/// Kinds overlap (an iso is all three); none set means a plain morphism.
struct MorphismKind {
  bool controlled = false;       // both components mono
  bool subsystem = false;        // both components epi
  bool quasi_subsystem = false;  // universum component epi
  bool plain() const { return !controlled && !subsystem && !quasi_subsystem; }
  friend bool operator==(const MorphismKind&, const MorphismKind&) = default;
};

inline std::string to_string(const MorphismKind& k) {
  if (k.plain()) return "plain";
  std::string out;
  auto add = [&](const char* s) {
    if (!out.empty()) out += ",";
    out += s;
  };
  if (k.controlled) add("controlled");
  if (k.subsystem) add("subsystem");
  if (k.quasi_subsystem) add("quasi-subsystem");
  return out;
}

template <CarrierMapType Map>
MorphismKind classify_components(const Map& phi_b, const Map& phi_u) {
  const auto b = classify_map(phi_b);
  const auto u = classify_map(phi_u);
  return {b.mono && u.mono, b.epi && u.epi, u.epi};
}

/// (phi_B, phi_U) with phi_U * s == s' * phi_B; the kind is always computed.
template <CarrierMapType Map>
class SystemMorphism {
 public:
  SystemMorphism(System<Map> src, System<Map> dst, Map phi_b, Map phi_u)
      : src_(std::move(src)), dst_(std::move(dst)), phi_b_(std::move(phi_b)), phi_u_(std::move(phi_u)) {
    if (!(phi_b_.dom() == src_.behavior()) || !(phi_b_.cod() == dst_.behavior()) ||
        !(phi_u_.dom() == src_.universum()) || !(phi_u_.cod() == dst_.universum())) {
      throw CompositionError("morphism components do not match the systems");
    }
    if (!(compose(phi_u_, src_.inclusion()) == compose(dst_.inclusion(), phi_b_))) {
      throw NotCommuting("system morphism square does not commute");
    }
    kind_ = classify_components(phi_b_, phi_u_);
  }

  const System<Map>& src() const { return src_; }
  const System<Map>& dst() const { return dst_; }
  const Map& phi_b() const { return phi_b_; }
  const Map& phi_u() const { return phi_u_; }
  const MorphismKind& kind() const { return kind_; }

  friend bool operator==(const SystemMorphism& a, const SystemMorphism& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.phi_b_ == b.phi_b_ && a.phi_u_ == b.phi_u_;
  }

 private:
  System<Map> src_;
  System<Map> dst_;
  Map phi_b_;
  Map phi_u_;
  MorphismKind kind_;
};

/// phi_B is the restriction of phi_U; it exists iff phi_U(B) lies in B'.
template <CarrierMapType Map>
SystemMorphism<Map> make_morphism(const System<Map>& src, const System<Map>& dst, const Map& phi_u) {
  if (!(phi_u.dom() == src.universum()) || !(phi_u.cod() == dst.universum())) {
    throw UniversumMismatch("phi_U does not map between the two universa");
  }
  auto phi_b = lift_through_mono(dst.inclusion(), compose(phi_u, src.inclusion()));
  if (!phi_b) throw BehaviorEscapes("phi_U maps the source behavior outside the target behavior");
  return SystemMorphism<Map>(src, dst, std::move(*phi_b), phi_u);
}

template <CarrierMapType Map>
MorphismKind classify_morphism(const SystemMorphism<Map>& m) {
  return m.kind();
}

template <CarrierMapType Map>
SystemMorphism<Map> identity_morphism(const System<Map>& s) {
  return SystemMorphism<Map>(s, s, identity(s.behavior()), identity(s.universum()));
}

/// g after f.
template <CarrierMapType Map>
SystemMorphism<Map> compose(const SystemMorphism<Map>& g, const SystemMorphism<Map>& f) {
  if (!(f.dst() == g.src())) throw CompositionError("system morphisms are not composable");
  return SystemMorphism<Map>(f.src(), g.dst(), compose(g.phi_b(), f.phi_b()), compose(g.phi_u(), f.phi_u()));
}

/// The unique morphism s => 1.
template <CarrierMapType Map>
SystemMorphism<Map> to_terminal(const System<Map>& s) {
  return SystemMorphism<Map>(s, terminal_system<Map>(), to_terminal(s.behavior()), to_terminal(s.universum()));
}

// ---------------------------------------------------------------------------
// pullbacks (interconnection)

template <CarrierMapType Map>
System<Map> product_system(const System<Map>& s, const System<Map>& t) {
  return System<Map>(product_map(s.inclusion(), t.inclusion()));
}

template <CarrierMapType Map>
struct SystemPullback {
  System<Map> system;
  SystemMorphism<Map> pi;
  SystemMorphism<Map> pi_prime;
};

/// B* = B x_{B_c} B', U* = U x_{U_c} U', and B* -> U* the restricted product map.
/// The behavior is returned in canonical form.
template <CarrierMapType Map>
SystemPullback<Map> pullback_systems(const SystemMorphism<Map>& phi, const SystemMorphism<Map>& psi) {
  if (!(phi.dst() == psi.dst())) throw CodomainMismatch("pullback of system morphisms with different targets");
  const auto behaviors = pullback(phi.phi_b(), psi.phi_b());
  const auto universa = pullback(phi.phi_u(), psi.phi_u());
  auto inclusion = mediate(universa, compose(phi.src().inclusion(), behaviors.p1),
                           compose(psi.src().inclusion(), behaviors.p2));
  if (!inclusion) throw NotCommuting("behavior pullback does not map into the universum pullback");
  System<Map> k = canonicalize(System<Map>(std::move(*inclusion)));
  auto pi = make_morphism(k, phi.src(), universa.p1);
  auto pi_prime = make_morphism(k, psi.src(), universa.p2);
  return {std::move(k), std::move(pi), std::move(pi_prime)};
}

/// pi x pi' : K => s x s'. Always a controlled-system.
template <CarrierMapType Map>
SystemMorphism<Map> into_product(const SystemPullback<Map>& pb) {
  const auto target = product_system(pb.pi.dst(), pb.pi_prime.dst());
  return make_morphism(pb.system, target, tuple_map(pb.pi.phi_u(), pb.pi_prime.phi_u()));
}

/// Pull back along (p s, p) and (p' s', p') into a chosen common system s_c.
template <CarrierMapType Map>
SystemPullback<Map> pullback_over(const System<Map>& s, const Map& p, const System<Map>& t, const Map& q,
                                  const System<Map>& common) {
  return pullback_systems(make_morphism(s, common, p), make_morphism(t, common, q));
}

/// Variable sharing: p : U -> U_c and q : U' -> U_c must be epi onto the same U_c.
/// The common quasi-subsystem is id_{U_c}.
template <CarrierMapType Map>
SystemPullback<Map> interconnect_shared(const System<Map>& s, const Map& p, const System<Map>& t, const Map& q) {
  if (!(p.cod() == q.cod())) throw UniversumMismatch("shared blocks differ");
  if (!classify_map(p).epi || !classify_map(q).epi) throw NotEpi("shared-variable projection is not epi");
  return pullback_over(s, p, t, q, full_system(p.cod()));
}

/// Vect convenience: share the coordinates named `shared` (present in both universa).
inline SystemPullback<LinMap> interconnect_shared(const System<LinMap>& s, const System<LinMap>& t,
                                                  const std::vector<std::string>& shared) {
  return interconnect_shared(s, coordinate_projection(s.universum(), shared), t,
                             coordinate_projection(t.universum(), shared));
}

// ---------------------------------------------------------------------------
// latent variables

template <CarrierMapType Map>
struct LatentProjection {
  SystemMorphism<Map> morphism;  // s => manifest, a subsystem
  System<Map> manifest;
};

template <CarrierMapType Map>
LatentProjection<Map> project_latent(const System<Map>& s, const Map& pi) {
  if (!(pi.dom() == s.universum())) throw UniversumMismatch("projection does not start at the universum");
  if (!classify_map(pi).epi) throw NotEpi("latent projection is not epi");
  const auto fac = image_factorize(compose(pi, s.inclusion()));
  System<Map> manifest(fac.inj);
  auto morphism = make_morphism(s, manifest, pi);
  return {std::move(morphism), std::move(manifest)};
}

/// The unique mono h with s == s' h, if behavior(s) is contained in behavior(s').
template <CarrierMapType Map>
std::optional<Map> factors_through(const System<Map>& s, const System<Map>& t) {
  if (!(s.universum() == t.universum())) throw UniversumMismatch("factors_through needs a common universum");
  return lift_through_mono(t.inclusion(), s.inclusion());
}

// ---------------------------------------------------------------------------
// behaviors of a fixed universum

enum class LatticeOp { meet, join };

template <CarrierMapType Map>
class BehaviorLattice {
 public:
  explicit BehaviorLattice(ObjectOf<Map> universum) : universum_(std::move(universum)) {}

  const ObjectOf<Map>& universum() const { return universum_; }

  System<Map> top() const { return full_system(universum_); }

  System<Map> meet(const System<Map>& a, const System<Map>& b) const {
    check(a);
    check(b);
    return System<Map>(subobject_meet(a.inclusion(), b.inclusion()));
  }

  System<Map> join(const System<Map>& a, const System<Map>& b) const {
    check(a);
    check(b);
    return System<Map>(subobject_join(a.inclusion(), b.inclusion()));
  }

  bool leq(const System<Map>& a, const System<Map>& b) const {
    check(a);
    check(b);
    return factors_through(a, b).has_value();
  }

 private:
  void check(const System<Map>& s) const {
    if (!(s.universum() == universum_)) throw UniversumMismatch("behavior is not over the lattice's universum");
  }

  ObjectOf<Map> universum_;
};

template <CarrierMapType Map>
System<Map> lattice_op(const BehaviorLattice<Map>& lattice, LatticeOp op, const System<Map>& a,
                       const System<Map>& b) {
  return op == LatticeOp::meet ? lattice.meet(a, b) : lattice.join(a, b);
}

/// Left fold of binary meets over a common universum.
template <CarrierMapType Map>
System<Map> meet_all(const std::vector<System<Map>>& systems) {
  if (systems.empty()) throw InvalidObject("meet of no systems");
  BehaviorLattice<Map> lattice(systems.front().universum());
  System<Map> acc = canonicalize(systems.front());
  for (std::size_t i = 1; i < systems.size(); ++i) acc = lattice.meet(acc, systems[i]);
  return acc;
}

}  // namespace behave
