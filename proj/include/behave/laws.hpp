#pragma once

// Random instance generators and law-check runners shared by the CLI and the
// test suites. Every runner is deterministic in its seed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "behave/bool_dual.hpp"
#include "behave/carriers.hpp"
#include "behave/enumerate.hpp"
#include "behave/equation.hpp"
#include "behave/gen_system.hpp"
#include "behave/system.hpp"

namespace behave {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline FinMap random_map(Rng& rng, const FinObj& x, const FinObj& y) {
  std::vector<std::size_t> table(x.size());
  for (auto& t : table) t = uniform(rng, 0, y.size() - 1);
  return FinMap(x, y, std::move(table));
}

/// Surjective when |x| >= |y| > 0: the first |y| elements hit y in a random order.
inline FinMap random_surjection(Rng& rng, const FinObj& x, const FinObj& y) {
  std::vector<std::size_t> table(x.size());
  std::vector<std::size_t> perm(y.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < x.size(); ++i) table[i] = i < perm.size() ? perm[i] : uniform(rng, 0, y.size() - 1);
  std::shuffle(table.begin(), table.end(), rng);
  return FinMap(x, y, std::move(table));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int spread = 2) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<int> d(-spread, spread);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

inline VectObj numbered_space(std::size_t n, const std::string& prefix) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(prefix + std::to_string(i));
  return VectObj(std::move(vars));
}

template <CarrierMapType Map>
struct Cospan {
  EquationMorphism<Map> left;
  EquationMorphism<Map> right;
};

/// e -> e_c <- e' with objects of at most `max_size` elements.
inline Cospan<FinMap> random_finset_cospan(Rng& rng, std::size_t max_size = 4) {
  const auto uc = numbered_set(uniform(rng, 1, max_size), "c");
  const auto ec = numbered_set(uniform(rng, 1, max_size), "k");
  const EquationRep<FinMap> common(random_map(rng, uc, ec), random_map(rng, uc, ec));
  auto side = [&](const std::string& tag) {
    const auto u = numbered_set(uniform(rng, 1, max_size), "u" + tag);
    const auto e = numbered_set(uniform(rng, ec.size(), max_size), "e" + tag);
    const auto psi_u = random_map(rng, u, uc);
    const auto psi_e = random_surjection(rng, e, ec);
    // f_i(x) ranges over the fibre of psi_E above g_i(psi_U(x))
    auto lift = [&](const FinMap& g) {
      std::vector<std::size_t> table(u.size());
      for (std::size_t x = 0; x < u.size(); ++x) {
        std::vector<std::size_t> fibre;
        for (std::size_t y = 0; y < e.size(); ++y) {
          if (psi_e(y) == g(psi_u(x))) fibre.push_back(y);
        }
        table[x] = fibre[uniform(rng, 0, fibre.size() - 1)];
      }
      return FinMap(u, e, std::move(table));
    };
    EquationRep<FinMap> rep(lift(common.f1()), lift(common.f2()));
    return EquationMorphism<FinMap>(std::move(rep), common, psi_u, psi_e);
  };
  auto l = side("");
  auto r = side("'");
  return {std::move(l), std::move(r)};
}

/// Linear cospans with every dimension at most `max_dim`. psi_E = [I | A] and
/// f_i = [g_i psi_U - A R_i ; R_i], so psi_E f_i = g_i psi_U by construction.
inline Cospan<LinMap> random_vect_cospan(Rng& rng, std::size_t max_dim = 4) {
  const auto uc = numbered_space(uniform(rng, 0, max_dim), "c");
  const auto ec = numbered_space(uniform(rng, 0, max_dim), "k");
  const EquationRep<LinMap> common(LinMap(uc, ec, random_matrix(rng, ec.dim(), uc.dim())),
                                   LinMap(uc, ec, random_matrix(rng, ec.dim(), uc.dim())));
  auto side = [&](const std::string& tag) {
    const auto u = numbered_space(uniform(rng, 1, max_dim), "u" + tag);
    const auto e = numbered_space(uniform(rng, ec.dim(), max_dim), "e" + tag);
    const std::size_t extra = e.dim() - ec.dim();
    const auto psi_u = LinMap(u, uc, random_matrix(rng, uc.dim(), u.dim()));
    const Matrix a = random_matrix(rng, ec.dim(), extra);
    const auto psi_e = LinMap(e, ec, hstack(Matrix::identity(ec.dim()), a));
    auto lift = [&](const LinMap& g) {
      const Matrix r = random_matrix(rng, extra, u.dim());
      return LinMap(u, e, vstack(g.matrix() * psi_u.matrix() - a * r, r));
    };
    EquationRep<LinMap> rep(lift(common.f1()), lift(common.f2()));
    return EquationMorphism<LinMap>(std::move(rep), common, psi_u, psi_e);
  };
  auto l = side("");
  auto r = side("'");
  return {std::move(l), std::move(r)};
}

/// A random System<FinMap> on `universum`.
inline System<FinMap> random_finset_system(Rng& rng, const FinObj& universum) {
  std::vector<std::string> b;
  for (const auto& x : universum.elements()) {
    if (uniform(rng, 0, 1)) b.push_back(x);
  }
  return System<FinMap>(subset_inclusion(FinObj(std::move(b)), universum));
}

/// A random subspace of `ambient`, spanned by up to dim + 1 small integer vectors.
inline Subspace random_subspace(Rng& rng, const VectObj& ambient) {
  return Subspace::span(ambient, random_matrix(rng, uniform(rng, 0, ambient.dim() + 1), ambient.dim()));
}

// ---------------------------------------------------------------------------
// tallies

struct LawTally {
  std::string law;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // short descriptions, first few only

  bool ok() const { return passed == total; }
  void record(bool pass, const std::string& what) {
    ++total;
    if (pass) {
      ++passed;
    } else if (failures.size() < 8) {
      failures.push_back(what);
    }
  }
};

// ---------------------------------------------------------------------------
// preservation: arr_eq of the equation pullback vs pullback of arr_eq

/// Every fifth trial uses a Vect cospan, the rest FinSet.
inline LawTally preservation_law(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  LawTally t{"preservation"};
  for (std::size_t k = 0; k < trials; ++k) {
    if (k % 5 == 4) {
      const auto c = random_vect_cospan(rng);
      t.record(check_preservation(c.left, c.right).equal, "vect trial " + std::to_string(k));
    } else {
      const auto c = random_finset_cospan(rng);
      t.record(check_preservation(c.left, c.right).equal, "finset trial " + std::to_string(k));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// duality: G F = id, F G = id, mono/epi swap

inline bool duality_round_trip(const FinMap& f) {
  const auto phi = functor_f(f);
  return functor_g(phi) == f && functor_f(functor_g(phi)) == phi && duality_classify(f).consistent();
}

/// Exhaustive over all maps between sets of size <= max_exhaustive, then
/// `trials` random maps between sets of size <= max_random.
inline LawTally duality_law(std::uint64_t seed, std::size_t trials, std::size_t max_exhaustive = 4,
                            std::size_t max_random = 6) {
  LawTally t{"duality"};
  for (std::size_t s = 0; s <= max_exhaustive; ++s) {
    for (std::size_t n = 0; n <= max_exhaustive; ++n) {
      for (const auto& f : all_maps(numbered_set(s, "s"), numbered_set(n, "t"))) {
        t.record(duality_round_trip(f), "exhaustive " + std::to_string(s) + "->" + std::to_string(n));
      }
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto x = numbered_set(uniform(rng, 0, max_random), "s");
    const auto y = numbered_set(uniform(rng, x.empty() ? 0 : 1, max_random), "t");
    t.record(duality_round_trip(random_map(rng, x, y)), "random trial " + std::to_string(k));
  }
  return t;
}

// ---------------------------------------------------------------------------
// pushouts in Bool-System

/// Every Bool-System morphism a -> b, found by searching maps between the bases.
inline std::vector<BoolSystemMorphism> all_bool_morphisms(const BoolSystem& a, const BoolSystem& b) {
  std::vector<BoolSystemMorphism> out;
  const auto us = all_maps(b.universum(), a.universum());
  const auto bs = all_maps(b.behavior(), a.behavior());
  for (const auto& u : us) {
    const auto psi_u = functor_f(u);
    const auto lhs = compose(b.hom(), psi_u);
    for (const auto& v : bs) {
      const auto psi_b = functor_f(v);
      if (lhs == compose(psi_b, a.hom())) out.emplace_back(a, b, psi_u, psi_b);
    }
  }
  return out;
}

/// Every Bool-System whose universum is {0..n-1} for some n <= max_base.
inline std::vector<BoolSystem> small_bool_systems(std::size_t max_base) {
  std::vector<BoolSystem> out;
  for (std::size_t n = 0; n <= max_base; ++n) {
    const auto u = numbered_set(n, "x");
    for (const auto& b : all_subsets(u)) out.push_back(restriction_system(u, b));
  }
  return out;
}

/// For each test object X and each cocone (q, q') on the span, exactly one
/// mediating morphism out of the pushout exists.
inline bool pushout_universal(const BoolSystemMorphism& psi, const BoolSystemMorphism& psi_prime,
                              const BoolPushout& po, const std::vector<BoolSystem>& tests) {
  if (!(compose(po.inject, psi) == compose(po.inject_prime, psi_prime))) return false;
  for (const auto& x : tests) {
    const auto qs = all_bool_morphisms(psi.dst(), x);
    const auto qps = all_bool_morphisms(psi_prime.dst(), x);
    const auto mediators = all_bool_morphisms(po.object, x);
    for (const auto& q : qs) {
      const auto qpsi = compose(q, psi);
      for (const auto& qp : qps) {
        if (!(qpsi == compose(qp, psi_prime))) continue;
        std::size_t found = 0;
        for (const auto& m : mediators) {
          if (compose(m, po.inject) == q && compose(m, po.inject_prime) == qp) ++found;
        }
        if (found != 1) return false;
      }
    }
  }
  return true;
}

/// A span in Bool-System, obtained by dualizing a random System cospan whose
/// universa have at most `max_base` elements.
inline std::pair<BoolSystemMorphism, BoolSystemMorphism> random_bool_span(Rng& rng, std::size_t max_base = 3) {
  for (;;) {
    const auto uc = numbered_set(uniform(rng, 1, max_base), "c");
    const auto common = random_finset_system(rng, uc);
    auto leg = [&](const std::string& tag) -> std::optional<SystemMorphism<FinMap>> {
      const auto u = numbered_set(uniform(rng, 1, max_base), tag);
      const auto s = random_finset_system(rng, u);
      try {
        return make_morphism(s, common, random_map(rng, u, uc));
      } catch (const BehaviorEscapes&) {
        return std::nullopt;
      }
    };
    const auto phi = leg("u");
    const auto phi_prime = leg("v");
    if (phi && phi_prime) return {to_bool(*phi), to_bool(*phi_prime)};
  }
}

inline LawTally pushout_law(std::uint64_t seed, std::size_t trials, std::size_t max_base = 3) {
  Rng rng(seed);
  LawTally t{"pushout"};
  const auto tests = small_bool_systems(max_base);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto [psi, psi_prime] = random_bool_span(rng, max_base);
    const auto po = pushout_bool(psi, psi_prime);
    const auto pb = pullback_systems(to_system(psi), to_system(psi_prime));
    const bool transported = po.object == to_bool(pb.system);
    t.record(transported && pushout_universal(psi, psi_prime, po, tests), "pushout trial " + std::to_string(k));
  }
  return t;
}

// ---------------------------------------------------------------------------
// adjunction between the diagonal and Obj-Eq

inline GeneralizedSystem<FinMap> random_gen_system(Rng& rng, std::size_t max_size, const std::string& tag) {
  const auto c = numbered_set(uniform(rng, 1, max_size), "c" + tag);
  const auto u = numbered_set(uniform(rng, 1, max_size), "u" + tag);
  return GeneralizedSystem<FinMap>(random_map(rng, c, u));
}

/// A random parallel pair h => h' of generalized morphisms (resampled until one exists).
inline GenEquation<FinMap> random_gen_equation(Rng& rng, std::size_t max_size) {
  for (;;) {
    const auto h = random_gen_system(rng, max_size, "");
    const auto hp = random_gen_system(rng, max_size, "'");
    const auto ms = all_gen_morphisms(h, hp);
    if (ms.empty()) continue;
    return GenEquation<FinMap>(ms[uniform(rng, 0, ms.size() - 1)], ms[uniform(rng, 0, ms.size() - 1)]);
  }
}

inline LawTally adjunction_law(std::uint64_t seed, std::size_t trials, std::size_t max_size = kAdjunctionBound) {
  Rng rng(seed);
  LawTally t{"adjunction"};
  for (std::size_t k = 0; k < trials; ++k) {
    const auto g = random_gen_system(rng, max_size, "g");
    const auto e = random_gen_equation(rng, max_size);
    const auto r = adjunction_check(g, e);
    t.record(r.holds(), "instance " + std::to_string(k) + ": " + std::to_string(r.left_count) + " vs " +
                            std::to_string(r.right_count));
  }
  return t;
}

// ---------------------------------------------------------------------------
// lattice: meet is interconnection on a fixed universum, modular law

/// Meet of two behaviors on U equals the image in U of their interconnection
/// sharing every variable.
inline bool meet_is_interconnection(const System<LinMap>& a, const System<LinMap>& b) {
  const auto& u = a.universum();
  const auto pb = interconnect_shared(a, b, u.vars());
  const auto image = project_latent(pb.system, pb.pi.phi_u()).manifest;
  return same_behavior(image, BehaviorLattice<LinMap>(u).meet(a, b));
}

inline bool meet_is_interconnection(const System<FinMap>& a, const System<FinMap>& b) {
  const auto& u = a.universum();
  const auto pb = interconnect_shared(a, identity(u), b, identity(u));
  const auto image = System<FinMap>(image_factorize(compose(pb.pi.phi_u(), pb.system.inclusion())).inj);
  return same_behavior(image, BehaviorLattice<FinMap>(u).meet(a, b));
}

/// dim(A + B) + dim(A n B) = dim A + dim B, and A <= C implies A + (B n C) = (A + B) n C.
inline bool modular_identity(const Subspace& a, const Subspace& b, const Subspace& c_over_a) {
  const bool dims = sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim();
  const Subspace c = sum(a, c_over_a);
  const bool modular = sum(a, intersect(b, c)) == intersect(sum(a, b), c);
  return dims && modular;
}

inline LawTally lattice_law(std::uint64_t seed, std::size_t trials, std::size_t max_dim = 6) {
  Rng rng(seed);
  LawTally t{"lattice"};
  for (std::size_t k = 0; k < trials; ++k) {
    const auto u = numbered_space(uniform(rng, 1, std::min<std::size_t>(max_dim, 4)), "x");
    const System<LinMap> a(subspace_inclusion(random_subspace(rng, u)));
    const System<LinMap> b(subspace_inclusion(random_subspace(rng, u)));
    t.record(meet_is_interconnection(a, b), "vect meet " + std::to_string(k));

    const auto w = numbered_set(uniform(rng, 1, 4), "w");
    t.record(meet_is_interconnection(random_finset_system(rng, w), random_finset_system(rng, w)),
             "finset meet " + std::to_string(k));

    const auto v = numbered_space(uniform(rng, 1, max_dim), "y");
    t.record(modular_identity(random_subspace(rng, v), random_subspace(rng, v), random_subspace(rng, v)),
             "modular " + std::to_string(k));
  }
  return t;
}

}  // namespace behave
