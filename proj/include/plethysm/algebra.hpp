#ifndef PLETHYSM_ALGEBRA_HPP_
#define PLETHYSM_ALGEBRA_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "basicrep.hpp"
#include "decorate.hpp"

namespace plethysm {

  //! Largest Hom set materialized as a reference value.
  constexpr std::size_t hom_cap = 10000;

  //! O(n) = A^n over the action, with permutations moving coordinates.
  //! Tuples are encoded row-major, so O(a + b) = O(a) ⊗ O(b).
  Rep power_module(FactorizableAction const& fa, int base);

  //! α_O(A, B) = Hom(O A, O B) as function tables, acted on by pre- and
  //! post-composition. Pairs rejected by keep get the empty set, which is
  //! a sub-bimodule because the action is a groupoid.
  Bimodule reference_bimodule(Rep const&                          o,
                              std::function<bool(int, int)> const& keep = {},
                              std::string                          name = "alpha");
  //! The full reference with γ(h, k) = k ∘ h and η(id) = id.
  Monoid reference_from_module(Rep const& o);

  //! The function table of element e of α_O(A, B), and back.
  Mor hom_table(Rep const& o, int a, int b, int e);
  int hom_index(Rep const& o, int a, int b, Mor const& h);
  //! O(s) for a morphism of the action.
  Mor const& module_act(Rep const& o, int s);
  //! O(t) ∘ h ∘ O(s) for the pairs morphism (s|t).
  Mor act_on_table(Rep const& o, int pair_mor, Mor const& h);

  //! E_α = α ∘ Σ over el.
  ElementRep reference_rep(Bimodule const& alpha, ElPtr const& el);

  //! χ_D => α to D => E_α: φ_Σx ∘ λ_x.
  RepMap algebra_to_rep(Chi const& c, ElPtr const& el, BimoduleMap const& phi);
  //! D => E_α to χ_D => α through the Kan property; nullopt if psi is
  //! not natural.
  std::optional<BimoduleMap> algebra_from_rep(Chi const&      c,
                                              ElPtr const&    el,
                                              Bimodule const& alpha,
                                              RepMap const&   psi);

  //! φ ∘ γ_s = γ_t ∘ (φ ⊗ φ) on representatives, and φ ∘ η_s = η_t.
  LawReport check_monoid_map(Monoid const&      s,
                             Monoid const&      t,
                             BimoduleMap const& phi);

  //! A D-algebra for a ⋄-monoid (D, γ_D) in both forms: φ: χ_D => α a
  //! monoid map, and its transpose ψ: D => E_α respecting γ_D.
  struct MonoidAlgebra {
    bool      chi_square = false;  // φ is a monoid map
    bool      rep_square = false;  // ψ ∘ γ_D = γ_α ∘ (ψ ⋄ ψ) on generators
    bool      agree      = false;
    RepMap    psi;
    LawReport report;
  };
  MonoidAlgebra monoid_algebra_check(DecorationMonoid const& dm,
                                     Chi const&              c,
                                     Monoid const&           chi_m,
                                     Monoid const&           alpha,
                                     BimoduleMap const&      phi);

  //! Lax algebras: a family D(x1) ⊗ ... ⊗ D(xn) -> E_α(x1 ⊗ ... ⊗ xn),
  //! natural in the word, against a morphism D^⊗ => E_α over el(ρ).
  std::vector<Mor> lax_family(ExtendedRep const& e, RepMap const& psi);
  std::optional<RepMap> lax_from_family(ExtendedRep const&      e,
                                        ElementRep const&       e_alpha,
                                        std::vector<Mor> const& family);

  //! Strong algebras: χ_D => α over the basic pairs against D => e_α with
  //! e_α = E_α ∘ ι. Both transposes and the agreement of the two forms.
  struct StrongAlgebra {
    Chi                        chi;
    ElementRep                 e_alpha;
    std::optional<BimoduleMap> phi;
    LawReport                  report;
  };
  StrongAlgebra strong_algebra_check(ElementRep const& d,
                                     Bimodule const&   nu,
                                     Bimodule const&   alpha,
                                     RepMap const&     psi);

  //! ⊟ on any extension of α; the same rule must apply at every cap.
  using Merger = std::function<BimoduleMap(HorizontalExtension const&)>;
  //! ⊟ = juxtaposition of function tables followed by the frame, for a
  //! power module.
  Merger juxtaposition_merger(Rep const& o, Bimodule const& alpha);
  //! The unique map to singleton values.
  Merger terminal_merger();

  //! ⊟ ∘ η = id and ⊟ ∘ μ = ⊟ ∘ ⊟^⊗, class by class.
  LawReport merger_check(Bimodule const&           alpha,
                         FactorizableAction const& fa,
                         Merger const&             merger,
                         int                       inner,
                         int                       outer,
                         ExtensionOptions const&   base = {});

  //! x: D => e_α a basic algebra for the (⋄)-monoid m, with e_α (⋄) e_α
  //! => e_α induced by juxtaposition in O: the multiplication square on
  //! every generator of D (⋄) D.
  LawReport basic_algebra_check(BasicMonoid const& m,
                                Rep const&         o,
                                ElementRep const&  e_alpha,
                                RepMap const&      x);

}  // namespace plethysm

#endif  // PLETHYSM_ALGEBRA_HPP_
