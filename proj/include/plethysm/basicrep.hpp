#ifndef PLETHYSM_BASICREP_HPP_
#define PLETHYSM_BASICREP_HPP_

#include "elements.hpp"
#include "factorize.hpp"

namespace plethysm {

  //! μ: el(ν)^⊠ -> el(ρ), a word of basic elements going to their
  //! product. The target is el(ρ) rather than el(ν^⊗); the witness iso
  //! identifies the two.
  struct JoinFunctor {
    FreeSMC words;
    ElPtr   el_nu;
    ElPtr   el_rho;
    Functor mu;
    std::map<std::vector<int>, int> word_index;
  };

  //! Words up to cap whose sizes fit the witness truncation. el_nu and
  //! el_rho are built when not supplied.
  JoinFunctor join_functor(FactorizationWitness const& w,
                           int                         cap,
                           ElPtr                       el_nu  = {},
                           ElPtr                       el_rho = {});

  //! D^⊗ = Lan_μ(⊗ ∘ D^⊠) over el(ρ).
  struct ExtendedRep {
    JoinFunctor join;
    Rep         words;  // ⊗ ∘ D^⊠ on the free category
    KanResult   kan;
    ElementRep  rep;
  };
  ExtendedRep extend_rep(ElementRep const&           d,
                         FactorizationWitness const& w,
                         int                         cap,
                         ElPtr                       el_rho = {});

  //! An element k of D^⊗ at el(ρ) object xo as a word of basic elements
  //! pushed along a frame: the letters (el(ν) objects), their elements,
  //! the word's object μ(word) and the pairs morphism (σ|τ) out of it.
  struct DecodedElement {
    std::vector<int> letters;
    std::vector<int> elems;
    int              joined = 0;
    int              frame  = 0;
  };
  DecodedElement decode_extended(ExtendedRep const& e,
                                 ElementRep const&  d,
                                 int                xo,
                                 int                k);

  //! χ_D^⊗ => χ_{D^⊗}, built from generators and checked invertible and
  //! natural.
  struct ChiOtimes {
    Chi                 chi_d;
    HorizontalExtension ext;  // χ_D^⊗
    ExtendedRep         d_ext;
    Chi                 chi_ext;  // χ_{D^⊗}
    BimoduleMap         iso;
    LawReport           report;
  };
  ChiOtimes chi_otimes_commute(ElementRep const&           d,
                               FactorizationWitness const& w,
                               int                         cap);

  //! D1 (⋄) D2 = Lan along el(γ0) of D1^⊗ ⊗̂ D2^⊗ restricted to el(β).
  struct BasicPlethysm {
    BasicPairs     bp;
    ExtendedRep    e1;
    ExtendedRep    e2;
    ExternalTensor ext;
    ElPtr          el_beta;
    Functor        incl;
    Functor        el_gamma0;
    Rep            restricted;
    KanResult      kan;
    ElementRep     result;
  };
  BasicPlethysm basic_element_plethysm(ElementRep const&           d1,
                                       ElementRep const&           d2,
                                       Monoid const&               m,
                                       FactorizationWitness const& w,
                                       int                         cap);

  //! A (⋄)-monoid: g: D (⋄) D => D over el(ν).
  struct BasicMonoid {
    ElementRep    d;
    BasicPlethysm bp;
    RepMap        g;
  };

  //! V_η = Lan along el(η0) of the terminal rep on el(ν̃).
  struct BasicUnit {
    FactorizationWitness tilde;
    BimoduleMap          eta0;
    ElPtr                el_tilde;
    Functor              el_eta0;
    KanResult            kan;
    ElementRep           rep;
  };
  BasicUnit basic_unit(Monoid const&               m,
                       FactorizationWitness const& w,
                       ElPtr const&                el_nu,
                       Flavor                      f);

  //! ξ with π: ξ => ν.
  struct BasicRelative {
    Bimodule    xi;
    BimoduleMap pi;
  };
  //! Pullback of ξ1^⊗ □ ξ2^⊗ => ρ □ ρ along β, projected by γ0.
  BasicRelative basic_relative_product(BasicRelative const&        a,
                                       BasicRelative const&        b,
                                       Monoid const&               m,
                                       FactorizationWitness const& w);
  //! (ν̃, η0).
  BasicRelative basic_relative_unit(Monoid const&               m,
                                    FactorizationWitness const& w);

}  // namespace plethysm

#endif  // PLETHYSM_BASICREP_HPP_
