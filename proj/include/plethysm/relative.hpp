#ifndef PLETHYSM_RELATIVE_HPP_
#define PLETHYSM_RELATIVE_HPP_

#include "elements.hpp"

namespace plethysm {

  //! ξ over a unital base monoid (ρ, γ, η) via π: ξ => ρ. For a FinVect ξ
  //! the base is linearized to match.
  struct RelativeBimodule {
    Bimodule    xi;
    BimoduleMap pi;
    Monoid      base;
  };

  LawReport check_relative_bimodule(RelativeBimodule const& a);

  struct RelativePlethysm {
    RelativeBimodule result;
    PlethysmResult   p;       // ξ1 □ ξ2
    PlethysmResult   p_base;  // ρ □ ρ
  };
  //! Total ξ1 □ ξ2 projected by γ ∘ (π1 □ π2).
  RelativePlethysm relative_plethysm(RelativeBimodule const& a,
                                     RelativeBimodule const& b);
  //! (hom, η) as a relative bimodule.
  RelativeBimodule relative_unit(Monoid const& base);

  //! The associator and both unitors of □ commute with the projections.
  LawReport check_relative_constraints(RelativeBimodule const& a,
                                       RelativeBimodule const& b,
                                       RelativeBimodule const& c);

  //! m is a monoid structure on a.xi (γ on representatives, optional
  //! unit). Checks the monoid laws, π γ_ξ = γ (π □ π) and π η_ξ = η.
  LawReport check_relative_monoid(RelativeBimodule const& a, Monoid const& m);

  //! F_π: K(γ_ξ) -> K(γ), identity on objects and π on hom-sets.
  struct IndexingFunctor {
    CategoryWithInclusion total;
    CategoryWithInclusion base;
    Functor               f;
  };
  IndexingFunctor indexing_functor(RelativeBimodule const& a,
                                   Monoid const&           m);

  //! Weight ε: D => T. π_ε = (χ_T ≅ Fρ) ∘ χ_ε.
  struct WeightedChi {
    Chi              chi_d;
    Chi              chi_t;
    BimoduleMap      chi_t_iso;
    RelativeBimodule rel;
  };
  WeightedChi weight_to_relative(ElementRep const& d,
                                 RepMap const&     eps,
                                 Monoid const&     base);
  //! The unique weight into the terminal rep (FinSet) or the
  //! sum-of-coordinates weight (FinVect).
  RepMap canonical_weight(ElementRep const& d);

  //! D(x) = π^{-1}(x) over el(ρ). FinSet only.
  ElementRep relative_to_rep(RelativeBimodule const& a, ElPtr const& el);

  //! Both Cartesian round trips as explicit bijections over ρ.
  LawReport equivalence_roundtrip(RelativeBimodule const& a);
  LawReport equivalence_roundtrip(ElementRep const& d, Monoid const& base);

  //! π_{ε1 ⋄ ε2} ∘ μ = γ ∘ (π_ε1 □ π_ε2).
  LawReport check_weight_monoidality(ElementRep const& d1,
                                     RepMap const&     e1,
                                     ElementRep const& d2,
                                     RepMap const&     e2,
                                     Monoid const&     base);

}  // namespace plethysm

#endif  // PLETHYSM_RELATIVE_HPP_
