#ifndef PLETHYSM_BIMODULE_HPP_
#define PLETHYSM_BIMODULE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "corecat.hpp"
#include "target.hpp"

namespace plethysm {

  //! A functor A^op x A -> C. Pair (a, b) has index a*n + b; the action
  //! morphism (s|t) for s: a' -> a, t: b -> b' has index s*|Mor A| + t and
  //! maps value(a, b) to value(a', b').
  struct Bimodule {
    CatPtr      action;
    CatPtr      pairs;
    Rep         rep;
    std::string name;

    Flavor flavor() const {
      return rep.flavor;
    }
    int n() const {
      return static_cast<int>(action->num_objects());
    }
    int pair(int a, int b) const {
      return a * n() + b;
    }
    Obj const& value(int a, int b) const {
      return rep.value[pair(a, b)];
    }
    int act_index(int s, int t) const {
      return s * static_cast<int>(action->num_morphisms()) + t;
    }
    Mor const& act(int s, int t) const {
      return rep.act[act_index(s, t)];
    }
    //! (s|id) and (id|t) shortcuts.
    Mor const& left(int s, int b) const {
      return act(s, action->identity(b));
    }
    Mor const& right(int a, int t) const {
      return act(action->identity(a), t);
    }
  };

  //! Components indexed by pair.
  using BimoduleMap = RepMap;

  Bimodule make_bimodule(CatPtr const&                            action,
                         Flavor                                   flavor,
                         std::function<Obj(int, int)> const&      value,
                         std::function<Mor(int, int)> const&      act,
                         std::string                              name = "");
  //! Bimodule whose action is given on one side at a time; the two sides
  //! must commute.
  Bimodule make_bimodule_lr(CatPtr const&                       action,
                            Flavor                              flavor,
                            std::function<Obj(int, int)> const& value,
                            std::function<Mor(int, int)> const& left,
                            std::function<Mor(int, int)> const& right,
                            std::string                         name = "");

  LawReport check_bimodule(Bimodule const& r);
  LawReport check_bimodule_map(Bimodule const&    s,
                               Bimodule const&    t,
                               BimoduleMap const& m);

  Bimodule hom_unit(CatPtr const& a, Flavor flavor);
  //! FinSet sub-bimodule on the elements selected by keep(a, b, e), with
  //! its inclusion; the selection must be closed under the action.
  std::pair<Bimodule, BimoduleMap> sub_bimodule(
      Bimodule const&                           r,
      std::function<bool(int, int, int)> const& keep,
      std::string const&                        name);
  Bimodule linearize(Bimodule const& r);
  Bimodule empty_bimodule(CatPtr const& a, Flavor flavor);
  bool     same_values(Bimodule const& a, Bimodule const& b);

  //! r1 □ r2 with its coend presentation. At pair (A, C) block B holds
  //! r1(A,B) (x) r2(B,C); generator x*|r2(B,C)| + y.
  struct PlethysmResult {
    Bimodule              product;
    std::vector<Quotient> coend;
    Bimodule              r1;
    Bimodule              r2;
    bool                  used_cocone = false;

    Quotient const& at(int a, int c) const {
      return coend[product.pair(a, c)];
    }
    //! Representative (B, x, y) of class k at (A, C).
    std::tuple<int, int, int> lift(int a, int c, int k) const;
    //! Point [x, y] of (r1 □ r2)(A, C) from points of the factors.
    Mor bracket(int a, int b, int c, Mor const& x, Mor const& y) const;
    //! Class of element pair (x, y) in block b (set flavor).
    int cls(int a, int b, int c, int x, int y) const;
  };

  enum class CoendMode { automatic, cowedge, cocone };

  //! The plethysm product. The cocone relation is only used on groupoids.
  PlethysmResult plethysm_product(Bimodule const& r1,
                          Bimodule const& r2,
                          CoendMode       mode = CoendMode::automatic);

  //! f □ g : r1 □ r2 => s1 □ s2.
  BimoduleMap plethysm_map(PlethysmResult const& src,
                           PlethysmResult const& tgt,
                           BimoduleMap const&    f,
                           BimoduleMap const&    g);

  //! Map out of a plethysm product given on representatives:
  //! per (A, B, C), a map r1(A,B) (x) r2(B,C) -> t(A,C). Returns the
  //! induced map on classes, reporting class-dependence.
  BimoduleMap descend(PlethysmResult const&                           p,
                      Bimodule const&                                 t,
                      std::function<Mor(int, int, int)> const&        on_reps,
                      LawReport&                                      report);

  struct Associator {
    PlethysmResult p12, p12_3, p23, p1_23;
    BimoduleMap    map;  // (r1□r2)□r3 => r1□(r2□r3)
  };
  Associator associator(Bimodule const& r1,
                        Bimodule const& r2,
                        Bimodule const& r3);

  struct Unitor {
    Bimodule       unit;
    PlethysmResult p;
    BimoduleMap    map;  // unit□r => r or r□unit => r
  };
  Unitor left_unitor(Bimodule const& r);
  Unitor right_unitor(Bimodule const& r);

  //! Bijectivity and naturality of the associator and unitors.
  LawReport check_constraints(Bimodule const& r1,
                              Bimodule const& r2,
                              Bimodule const& r3);
  LawReport check_pentagon(Bimodule const& r1,
                           Bimodule const& r2,
                           Bimodule const& r3,
                           Bimodule const& r4);
  LawReport check_triangle(Bimodule const& r1, Bimodule const& r2);

  //! A bimodule monoid with γ on representatives: gamma[(a*n + b)*n + c]
  //! is r(a,b) (x) r(b,c) -> r(a,c). eta: hom_unit => r if unital.
  struct Monoid {
    Bimodule                   r;
    std::vector<Mor>           gamma;
    std::optional<BimoduleMap> eta;

    Mor const& g(int a, int b, int c) const {
      int n = r.n();
      return gamma[(a * n + b) * n + c];
    }
  };

  Monoid make_monoid(Bimodule                                 r,
                     std::function<Mor(int, int, int)> const& gamma,
                     std::optional<BimoduleMap>               eta = {});
  //! Unit determined by its values at identities: eta(id_A) = pts[A].
  BimoduleMap unit_from_identities(Bimodule const&         r,
                                   std::vector<Mor> const& pts);

  //! Switch a FinSet bimodule monoid to FinVect by the free functor.
  Monoid      linearize(Monoid const& m);
  LawReport   check_monoid(Monoid const& m);
  BimoduleMap gamma_on_classes(Monoid const& m, PlethysmResult const& rr);

  struct CategoryWithInclusion {
    CatPtr  k;
    Functor i;  // A -> K, identity on objects
  };
  //! K(r, γ); morphism (A,B):x for x in r(A,B).
  CategoryWithInclusion category_from_monoid(Monoid const& m);
  Monoid monoid_from_category(CatPtr const& a, Functor const& i);
  //! Both round trips up to identity-on-objects isomorphism.
  LawReport check_category_roundtrip(CatPtr const& a, Functor const& i);
  LawReport check_monoid_roundtrip(Monoid const& m);

}  // namespace plethysm

#endif  // PLETHYSM_BIMODULE_HPP_
