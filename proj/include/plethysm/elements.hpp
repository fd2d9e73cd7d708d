#ifndef PLETHYSM_ELEMENTS_HPP_
#define PLETHYSM_ELEMENTS_HPP_

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bimodule.hpp"

namespace plethysm {

  //! Category of elements of a set-valued functor on a base category:
  //! objects (b, e) for e in P(b), morphisms the lifts (g, e): (b, e) ->
  //! (b', P(g) e).
  struct ElementCat {
    CatPtr                           cat;
    Functor                          sigma;
    Rep                              points;
    std::vector<std::size_t>         obj_offset;   // per base object
    std::vector<std::size_t>         lift_offset;  // per base morphism
    std::vector<std::pair<int, int>> obj_info;     // (base object, elem)
    std::vector<std::pair<int, int>> mor_info;     // (base morphism, elem)
    //! For pointed FinVect bimodules: the vector of each pointing.
    std::vector<std::vector<Mor>>    vectors;

    int object(int b, int e) const {
      return static_cast<int>(obj_offset[b]) + e;
    }
    int lift(int g, int e) const {
      return static_cast<int>(lift_offset[g]) + e;
    }
    int base_of(int o) const {
      return obj_info[o].first;
    }
    int elem_of(int o) const {
      return obj_info[o].second;
    }
  };
  using ElPtr = std::shared_ptr<ElementCat const>;

  ElPtr grothendieck(Rep const& set_rep);
  //! el(r) for a FinSet bimodule.
  ElPtr element_category(Bimodule const& r);
  //! el(r) for a FinVect bimodule over designated pointings (per pair a
  //! list of points 1 -> r(A,B)), which must be closed under the action.
  ElPtr element_category(Bimodule const&                      r,
                         std::vector<std::vector<Mor>> const& pointings);
  //! el(phi) for a FinSet bimodule map.
  Functor el_map(ElPtr const&       src,
                 ElPtr const&       tgt,
                 BimoduleMap const& phi);

  struct ElementRep {
    ElPtr el;
    Rep   rep;
  };

  ElementRep trivial_rep(ElPtr const& el, Flavor f);
  ElementRep initial_rep(ElPtr const& el, Flavor f);
  LawReport  check_element_rep(ElementRep const& d);

  //! Pointwise left Kan extension of f along k. At each b the value is
  //! the colimit over (k | b): blocks (x, m: k x -> b).
  struct KanResult {
    Rep                                             ext;
    std::vector<Quotient>                           q;
    std::vector<std::vector<std::pair<int, int>>>   blocks;
    std::vector<std::map<std::pair<int, int>, int>> block_index;
    std::vector<Mor>                                lambda;  // f(x) -> ext(k x)

    int block(int b, int x, int m) const;
    //! Point of ext(b) represented by a point of f(x) in block (x, m).
    Mor inject(int b, int x, int m, Mor const& pt) const;
    //! (x, m, elem) representing class k of ext(b).
    std::tuple<int, int, int> lift(int b, int k) const;
  };

  KanResult pointwise_lan(Rep const& f, Functor const& k);
  //! Lan applied to a natural transformation f => f' (same k).
  RepMap lan_map(KanResult const& s, KanResult const& t, RepMap const& f);
  //! The comparison Lan_{k2}(Lan_{k1} f) => Lan_{k2 k1} f.
  RepMap kan_compose_comparison(KanResult const& inner,
                                KanResult const& outer,
                                KanResult const& direct,
                                Functor const&   k1,
                                Functor const&   k2);
  //! Maps out of a Kan extension from a cocone f => g o k: check the
  //! universal property by constructing the induced map.
  std::optional<RepMap> kan_factor(KanResult const&        kan,
                                   Functor const&          k,
                                   Rep const&              g,
                                   std::vector<Mor> const& cocone);

  //! Characteristic bimodule χ_D = Lan_Σ D.
  struct Chi {
    Bimodule  chi;
    KanResult kan;
  };
  Chi chi(ElementRep const& d, Bimodule const& base);

  //! D1 ⊗̂ D2 over el(ρ1 □ ρ2). gen_block[pair][g] is the block of coend
  //! generator g inside the quotient of its class.
  struct ExternalTensor {
    ElPtr                         el;
    Rep                           rep;
    std::vector<Quotient>         q;  // per el object
    std::vector<std::vector<int>> gen_block;
    std::vector<std::vector<int>> block_gen;  // per el object
  };
  ExternalTensor external_tensor(ElementRep const&     d1,
                                 ElementRep const&     d2,
                                 PlethysmResult const& p);

  struct ElementPlethysm {
    PlethysmResult p;
    BimoduleMap    gbar;
    ExternalTensor ext;
    Functor        el_gamma;
    KanResult      kan;
    ElementRep     result;
  };
  ElementPlethysm element_plethysm(ElementRep const& d1,
                                   ElementRep const& d2,
                                   Monoid const&     m);

  struct UnitRep {
    ElPtr      el_unit;
    Functor    el_eta;
    KanResult  kan;
    ElementRep rep;
  };
  UnitRep plethysm_unit_rep(Monoid const& m, ElPtr const& el, Flavor f);

  //! Componentwise injectivity of η.
  bool is_faithful_unit(Monoid const& m);

  //! μ: χ_{D1} □ χ_{D2} => χ_{D1 ⋄ D2}.
  BimoduleMap chi_mu(ElementRep const&      d1,
                     ElementRep const&      d2,
                     Monoid const&          m,
                     Chi const&             c1,
                     Chi const&             c2,
                     PlethysmResult const&  pc,
                     ElementPlethysm const& ep,
                     Chi const&             c12);

  //! L: U_η ⋄ D => D.
  RepMap unit_left(ElementRep const&      d,
                   Monoid const&          m,
                   UnitRep const&         u,
                   ElementPlethysm const& ep);

  struct StrongMonoidality {
    bool      mu_iso       = false;
    bool      mu_natural   = false;
    bool      faithful     = false;
    bool      eps_present  = false;
    bool      eps_iso      = false;
    bool      square_holds = false;
    Bimodule  chi_unit;
    Bimodule  hom_linear;
    LawReport report;
  };
  StrongMonoidality chi_strong_monoidality(ElementRep const& d1,
                                           ElementRep const& d2,
                                           Monoid const&     m);

}  // namespace plethysm

#endif  // PLETHYSM_ELEMENTS_HPP_
