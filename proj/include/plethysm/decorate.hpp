#ifndef PLETHYSM_DECORATE_HPP_
#define PLETHYSM_DECORATE_HPP_

#include <functional>

#include "elements.hpp"

namespace plethysm {

  //! el(D) for a FinSet rep D over el(ρ): objects (x, u ∈ D(x)).
  struct DecoratedEl {
    ElementRep d;
    ElPtr      el;        // over el(ρ)
    Functor    to_pairs;  // el(D) -> pairs of the action
  };
  DecoratedEl decorated_element_category(ElementRep const& d);

  //! Λ: el(D) -> el(χ_D), (x, u) |-> λ_x(u), with its inverse.
  struct LambdaIso {
    DecoratedEl dec;
    Chi         chi;
    ElPtr       el_chi;
    Functor     lambda;
    Functor     inverse;
    LawReport   report;
  };
  LambdaIso lambda_iso(ElementRep const& d, Bimodule const& base);

  //! D with γ_D: D ⋄ D => D.
  struct DecorationMonoid {
    ElementRep      d;
    Monoid          base;
    ElementPlethysm ep;
    RepMap          gd;
  };
  //! prod(A, B, C, x, y, u, v) is the element of D(γ(x, y)) for
  //! u ∈ D(x), v ∈ D(y). Throws if it does not descend to D ⋄ D.
  using DecorationProduct
      = std::function<int(int, int, int, int, int, int, int)>;
  DecorationMonoid decoration_monoid(ElementRep const&        d,
                                     Monoid const&            base,
                                     DecorationProduct const& prod);
  //! γ_D on a generator: the element of D(γ(x, y)) for u, v.
  int decoration_product(DecorationMonoid const& dm,
                         int a, int b, int c, int x, int y, int u, int v);
  //! γ_D ∘ (γ_D ⋄ 1) = γ_D ∘ (1 ⋄ γ_D) on generators.
  LawReport check_decoration_monoid(DecorationMonoid const& dm);

  //! χ_D with γ = χ(γ_D) ∘ μ, on representatives.
  Monoid chi_monoid(DecorationMonoid const& dm, Chi const& c);

  //! E1 ⋄_D E2 = Lan along el(γ_D) of the decorated external tensor.
  struct DecoratedPlethysm {
    ElPtr      el_dd;  // el(D ⊗̂ D)
    Functor    el_gamma_d;
    Rep        ext;
    KanResult  kan;
    ElementRep result;
  };
  DecoratedPlethysm decorated_plethysm(ElementRep const&       e1,
                                       ElementRep const&       e2,
                                       DecorationMonoid const& dm,
                                       DecoratedEl const&      dec);

  //! Λ*F1 ⋄_D Λ*F2 against Λ*(F1 ⋄ F2) for reps over el(χ_D).
  struct PlusEquivalence {
    LambdaIso lam;
    Monoid    chi_m;
    LawReport report;
  };
  PlusEquivalence plus_equivalence_setup(DecorationMonoid const& dm);
  //! Compares the two sides object by object, by size.
  LawReport compare_plus(PlusEquivalence const&  pe,
                         DecorationMonoid const& dm,
                         ElementRep const&       f1,
                         ElementRep const&       f2);
  //! Setup plus count comparisons on reps from random_component_rep.
  PlusEquivalence plus_element_equivalence(DecorationMonoid const& dm,
                                           unsigned                seed,
                                           int                     count,
                                           int                     max_size = 2);

  //! Rep constant on each connected component with identity action, of
  //! a seeded random size in 0..max_size.
  ElementRep random_component_rep(ElPtr const& el,
                                  Flavor       f,
                                  unsigned     seed,
                                  int          max_size);

}  // namespace plethysm

#endif  // PLETHYSM_DECORATE_HPP_
