#pragma once

// Powerset duality: finite sets with maps reversed, presented as Boolean
// lattices 2^S with lattice homomorphisms. Subsets are bitmasks over the base
// order; a homomorphism 2^T -> 2^S is stored by the images of the atoms {t}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "behave/carriers.hpp"
#include "behave/errors.hpp"
#include "behave/finset.hpp"
#include "behave/system.hpp"

namespace behave {

using Mask = std::uint32_t;

inline constexpr std::size_t kMaxPowerBase = 16;

/// 2^base. Never materialized; subsets are masks.
class PowerLattice {
 public:
  PowerLattice() = default;
  explicit PowerLattice(FinObj base) : base_(std::move(base)) {
    if (base_.size() > kMaxPowerBase) {
      throw SizeBoundExceeded("powerset base has " + std::to_string(base_.size()) + " elements, cap is 16");
    }
  }

  const FinObj& base() const { return base_; }
  Mask top() const { return static_cast<Mask>((std::size_t{1} << base_.size()) - 1); }
  std::size_t subset_count() const { return std::size_t{1} << base_.size(); }

  Mask mask_of(const FinObj& subset) const {
    Mask m = 0;
    for (const auto& x : subset.elements()) m |= Mask{1} << base_.index_of(x);
    return m;
  }

  FinObj subset(Mask m) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < base_.size(); ++i) {
      if (m & (Mask{1} << i)) out.push_back(base_[i]);
    }
    return FinObj(std::move(out));
  }

  friend bool operator==(const PowerLattice&, const PowerLattice&) = default;

 private:
  FinObj base_;
};

/// A complete lattice homomorphism 2^T -> 2^S. Atom images are pairwise
/// disjoint and cover S; the value on X is the union of the atom images of X.
class BoolHom {
 public:
  BoolHom(PowerLattice src, PowerLattice dst, std::vector<Mask> atom_image)
      : src_(std::move(src)), dst_(std::move(dst)), atom_image_(std::move(atom_image)) {
    if (atom_image_.size() != src_.base().size()) throw InvalidHom("one atom image per element of T is required");
    Mask seen = 0;
    for (auto m : atom_image_) {
      if (m & ~dst_.top()) throw InvalidHom("atom image outside the target lattice");
      if (m & seen) throw InvalidHom("atom images overlap");
      seen |= m;
    }
    if (seen != dst_.top()) throw InvalidHom("atom images do not cover the target base");
  }

  const PowerLattice& src() const { return src_; }
  const PowerLattice& dst() const { return dst_; }
  const std::vector<Mask>& atom_image() const { return atom_image_; }

  Mask operator()(Mask x) const {
    Mask out = 0;
    for (std::size_t t = 0; t < atom_image_.size(); ++t) {
      if (x & (Mask{1} << t)) out |= atom_image_[t];
    }
    return out;
  }

  /// Checked by enumerating every subset of T.
  bool is_injective() const {
    std::vector<bool> hit(dst_.subset_count(), false);
    for (Mask x = 0; x < src_.subset_count(); ++x) {
      const Mask y = (*this)(x);
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }

  /// Checked by enumerating every subset of T.
  bool is_surjective() const {
    std::vector<bool> hit(dst_.subset_count(), false);
    for (Mask x = 0; x < src_.subset_count(); ++x) hit[(*this)(x)] = true;
    for (bool b : hit) {
      if (!b) return false;
    }
    return true;
  }

  friend bool operator==(const BoolHom&, const BoolHom&) = default;

 private:
  PowerLattice src_;
  PowerLattice dst_;
  std::vector<Mask> atom_image_;
};

inline BoolHom identity(const PowerLattice& l) {
  std::vector<Mask> atoms(l.base().size());
  for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i] = Mask{1} << i;
  return BoolHom(l, l, std::move(atoms));
}

/// g after f.
inline BoolHom compose(const BoolHom& g, const BoolHom& f) {
  if (!(f.dst() == g.src())) throw CompositionError("lattice homomorphisms are not composable");
  std::vector<Mask> atoms(f.src().base().size());
  for (std::size_t t = 0; t < atoms.size(); ++t) atoms[t] = g(f.atom_image()[t]);
  return BoolHom(f.src(), g.dst(), std::move(atoms));
}

/// F: S -> T  |->  f^{-1} : 2^T -> 2^S.
inline BoolHom functor_f(const FinMap& f) {
  PowerLattice s(f.dom()), t(f.cod());
  std::vector<Mask> atoms(t.base().size(), 0);
  for (std::size_t i = 0; i < f.dom().size(); ++i) atoms[f(i)] |= Mask{1} << i;
  return BoolHom(std::move(t), std::move(s), std::move(atoms));
}

/// G: the unique map S -> T with (G phi)^{-1} = phi.
inline FinMap functor_g(const BoolHom& phi) {
  const FinObj& s = phi.dst().base();
  const FinObj& t = phi.src().base();
  std::vector<std::size_t> table(s.size(), t.size());
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (phi.atom_image()[a] & (Mask{1} << i)) table[i] = a;
    }
  }
  for (auto x : table) {
    if (x == t.size()) throw InvalidHom("atom images do not cover the target base");
  }
  FinMap g(s, t, std::move(table));
  if (!(functor_f(g) == phi)) throw InvalidHom("G(phi)^{-1} differs from phi");
  return g;
}

struct DualityReport {
  bool map_mono = false;
  bool map_epi = false;
  bool hom_mono = false;  // F f injective
  bool hom_epi = false;   // F f surjective
  /// f mono <=> F f epi, and f epi <=> F f mono.
  bool consistent() const { return map_mono == hom_epi && map_epi == hom_mono; }
};

inline DualityReport duality_classify(const FinMap& f) {
  const auto c = classify_map(f);
  const auto h = functor_f(f);
  return {c.mono, c.epi, h.is_injective(), h.is_surjective()};
}

// ---------------------------------------------------------------------------
// Bool-System: surjective homomorphisms 2^U -> 2^B

class BoolSystem {
 public:
  explicit BoolSystem(BoolHom h) : h_(std::move(h)) {
    if (!h_.is_surjective()) throw InvalidHom("a Bool-System is a surjective homomorphism 2^U -> 2^B");
  }

  const BoolHom& hom() const { return h_; }
  const FinObj& universum() const { return h_.src().base(); }
  const FinObj& behavior() const { return h_.dst().base(); }

  friend bool operator==(const BoolSystem&, const BoolSystem&) = default;

 private:
  BoolHom h_;
};

/// The Bool-System S |-> S n B for B a subset of U.
inline BoolSystem restriction_system(const FinObj& universum, const FinObj& behavior) {
  return BoolSystem(functor_f(subset_inclusion(behavior, universum)));
}

/// (psi_U, psi_B) with h' psi_U == psi_B h.
class BoolSystemMorphism {
 public:
  BoolSystemMorphism(BoolSystem src, BoolSystem dst, BoolHom psi_u, BoolHom psi_b)
      : src_(std::move(src)), dst_(std::move(dst)), psi_u_(std::move(psi_u)), psi_b_(std::move(psi_b)) {
    if (!(psi_u_.src() == src_.hom().src()) || !(psi_u_.dst() == dst_.hom().src()) ||
        !(psi_b_.src() == src_.hom().dst()) || !(psi_b_.dst() == dst_.hom().dst())) {
      throw CompositionError("Bool-System morphism components do not match");
    }
    if (!(compose(dst_.hom(), psi_u_) == compose(psi_b_, src_.hom()))) {
      throw NotCommuting("Bool-System morphism square does not commute");
    }
  }

  const BoolSystem& src() const { return src_; }
  const BoolSystem& dst() const { return dst_; }
  const BoolHom& psi_u() const { return psi_u_; }
  const BoolHom& psi_b() const { return psi_b_; }

  friend bool operator==(const BoolSystemMorphism&, const BoolSystemMorphism&) = default;

 private:
  BoolSystem src_;
  BoolSystem dst_;
  BoolHom psi_u_;
  BoolHom psi_b_;
};

/// g after f.
inline BoolSystemMorphism compose(const BoolSystemMorphism& g, const BoolSystemMorphism& f) {
  if (!(f.dst() == g.src())) throw CompositionError("Bool-System morphisms are not composable");
  return BoolSystemMorphism(f.src(), g.dst(), compose(g.psi_u(), f.psi_u()), compose(g.psi_b(), f.psi_b()));
}

/// Both components injective (the reversed reading of a subsystem).
inline bool is_bool_subsystem(const BoolSystemMorphism& m) {
  return m.psi_u().is_injective() && m.psi_b().is_injective();
}

/// Both components surjective (the reversed reading of a controlled-system).
inline bool is_bool_controlled(const BoolSystemMorphism& m) {
  return m.psi_u().is_surjective() && m.psi_b().is_surjective();
}

// transport through F and G

inline BoolSystem to_bool(const System<FinMap>& s) { return BoolSystem(functor_f(s.inclusion())); }

inline System<FinMap> to_system(const BoolSystem& h) { return System<FinMap>(functor_g(h.hom())); }

/// phi : s => s'  |->  F phi : F s' -> F s
inline BoolSystemMorphism to_bool(const SystemMorphism<FinMap>& phi) {
  return BoolSystemMorphism(to_bool(phi.dst()), to_bool(phi.src()), functor_f(phi.phi_u()), functor_f(phi.phi_b()));
}

/// psi : h -> h'  |->  G psi : G h' => G h
inline SystemMorphism<FinMap> to_system(const BoolSystemMorphism& psi) {
  return SystemMorphism<FinMap>(to_system(psi.dst()), to_system(psi.src()), functor_g(psi.psi_b()),
                                functor_g(psi.psi_u()));
}

struct BoolPushout {
  BoolSystem object;
  BoolSystemMorphism inject;        // h  -> object
  BoolSystemMorphism inject_prime;  // h' -> object
};

/// Pushout of the span h <- h_c -> h', computed as F of the System pullback of
/// G psi and G psi'.
inline BoolPushout pushout_bool(const BoolSystemMorphism& psi, const BoolSystemMorphism& psi_prime) {
  if (!(psi.src() == psi_prime.src())) throw CodomainMismatch("pushout needs a span with a common source");
  const auto pb = pullback_systems(to_system(psi), to_system(psi_prime));
  return {to_bool(pb.system), to_bool(pb.pi), to_bool(pb.pi_prime)};
}

}  // namespace behave
