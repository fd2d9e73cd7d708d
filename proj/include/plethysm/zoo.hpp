#ifndef PLETHYSM_ZOO_HPP_
#define PLETHYSM_ZOO_HPP_

#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "decorate.hpp"
#include "factorize.hpp"
#include "relative.hpp"

namespace plethysm {

  // Cospans

  enum class CospanVariant { full, nd };

  //! A cospan n -> V <- m up to relabeling of V: the block of each of the
  //! n + m tails as a restricted growth string, plus the number of
  //! vertices hit by no tail.
  struct CospanElem {
    int              n = 0;
    int              m = 0;
    std::vector<int> label;
    int              isolated = 0;

    int         blocks() const;
    std::string name() const;
    bool        operator==(CospanElem const& o) const {
      return n == o.n && m == o.m && label == o.label && isolated == o.isolated;
    }
  };

  //! Relabel blocks into restricted growth form.
  CospanElem cospan_canonical(CospanElem c);
  //! Pushout y o x; isolated vertices saturate at cap.
  CospanElem cospan_compose(CospanElem const& x,
                            CospanElem const& y,
                            int               cap);
  //! t o x o s for permutations s of the inputs and t of the outputs.
  CospanElem cospan_act(CospanElem const&       x,
                        std::vector<int> const& s,
                        std::vector<int> const& t);
  CospanElem bijection_graph(std::vector<int> const& p);
  bool       is_connected(CospanElem const& c);
  //! Every block meets both sides and nothing is isolated.
  bool       is_nd(CospanElem const& c);
  //! All cospans n -> V <- m with at most cap isolated vertices.
  std::vector<CospanElem> enumerate_cospans(int n, int m, int cap, bool nd);

  struct CospanFixture {
    CospanVariant                        variant = CospanVariant::full;
    int                                  nmax    = 0;
    int                                  cap     = 0;
    Monoid                               monoid;
    //! Connected cospans, with the inclusion into the monoid's bimodule.
    Bimodule                             nu;
    BimoduleMap                          nu_incl;
    std::vector<std::vector<CospanElem>> elems;  // per pair
  };

  CospanFixture build_cospan(int nmax, int isolated_cap, CospanVariant v);
  //! Cospans factor as juxtapositions of connected ones. Each word may
  //! carry up to cap lone vertices, since those saturate.
  FactorizationWitness cospan_witness(CospanFixture const& f);
  //! Same values and γ with the trivial 𝕊 × 𝕊 action; η is constant on
  //! each automorphism group, so it is not injective.
  Monoid build_trivial_cospan(int nmax, int isolated_cap);

  // Graphs

  //! A graph with n in-tails and m out-tails, or an overflow marker.
  //! Vertices 0..nv-1 each carry a tail or an edge; tail-less edge-less
  //! vertices are only counted. Edges are unordered pairs (loops allowed),
  //! kept sorted. An overflow element stands for every graph with too many
  //! edges over the cospan `over`.
  struct GraphElem {
    int                              n  = 0;
    int                              m  = 0;
    int                              nv = 0;
    std::vector<int>                 tails;
    std::vector<std::pair<int, int>> edges;
    int                              isolated = 0;
    bool                             overflow = false;
    CospanElem                       over;

    std::string name() const;
    bool        operator==(GraphElem const& o) const {
      return name() == o.name();
    }
  };

  //! Drop unused vertices into the isolated count (saturating at cap) and
  //! pick the least labeling of the edge-only vertices.
  GraphElem graph_canonical(GraphElem g, int cap);
  //! Contract every edge; tail-less components become isolated vertices.
  CospanElem graph_contract(GraphElem const& g, int cap);
  GraphElem  graph_act(GraphElem const&        g,
                       std::vector<int> const& s,
                       std::vector<int> const& t);
  //! Join the out-tails of x to the in-tails of y by new edges.
  GraphElem graph_glue(GraphElem const& x, GraphElem const& y,
                       int emax, int cap);
  //! Identify the out-tail vertices of x with the in-tail vertices of y.
  GraphElem graph_merge(GraphElem const& x, GraphElem const& y,
                        int emax, int cap);
  std::vector<GraphElem> enumerate_graphs(int n, int m, int emax, int cap);

  struct GlueBounds {
    int nmax         = 1;
    int emax         = 1;
    int isolated_cap = 0;
  };

  struct GlueFixture {
    GlueBounds                          bounds;
    CospanFixture                       base;
    //! ξ over cospans with the gluing γ (non-unital).
    RelativeBimodule                    rel;
    Monoid                              glue;
    //! Same ξ with vertex-merging composition and the edgeless
    //! bijection graphs as unit.
    Monoid                              merge;
    std::vector<std::vector<GraphElem>> elems;  // per pair
  };

  GlueFixture build_glue(GlueBounds const& b);

  // Surjections

  struct SurjectionFixture {
    int                                        nmax = 0;
    Monoid                                     monoid;
    Bimodule                                   nu;
    BimoduleMap                                nu_incl;
    std::vector<std::vector<std::vector<int>>> elems;  // per pair
  };

  std::vector<std::vector<int>> enumerate_surjections(int n, int m);
  SurjectionFixture             build_surjection(int nmax);
  //! Surjections factor as juxtapositions of surjections onto 1.
  FactorizationWitness          surjection_witness(SurjectionFixture const& f);
  //! D(f) = a linear order on each fibre of f, with γ_D concatenating the
  //! fibre orders in the order of the middle fibre.
  using FibreOrders = std::vector<std::vector<int>>;
  struct PlanarDecoration {
    DecorationMonoid                        dm;
    std::vector<std::vector<FibreOrders>>   orders;  // per el(ρ) object
    std::vector<std::map<FibreOrders, int>> index;
  };
  PlanarDecoration build_planar(SurjectionFixture const& f);
  DecorationMonoid planar_decoration(SurjectionFixture const& f);

  // Plus construction

  //! An op in components: per el(β) object and per block of D^⊗ ⊗̂ D^⊗
  //! there (one coend generator, i.e. a two-level graph), the composition
  //! into D at γ0.
  struct OpData {
    ElementRep                    d;
    BasicPlethysm                 bp;
    std::vector<std::vector<Mor>> comp;
  };
  OpData plus_monoid_to_op(BasicMonoid const& m);
  //! γ_O through the Kan property. Throws, naming the class, when the
  //! compositions are not equivariant in the middle.
  BasicMonoid plus_op_to_monoid(OpData const& op);
  LawReport   compare_ops(OpData const& a, OpData const& b);
  LawReport   compare_basic_monoids(BasicMonoid const& a, BasicMonoid const& b);

  //! The associative operad over surjections: D(c_n) = orders of n, with
  //! substitution of orders.
  struct AssocOperad {
    SurjectionFixture    f;
    PlanarDecoration     planar;
    FactorizationWitness w;
    ElPtr                el_nu;
    Functor              nu_to_rho;
    OpData               op;
    BasicMonoid          monoid;

    std::vector<int> const& order(int nu_obj, int e) const;
  };
  AssocOperad build_assoc_operad(int nmax);

  //! α restricted to the basic pairs (n, 1), n >= 1, and e_α over el(ν).
  Bimodule   basic_reference(AssocOperad const& ao, Rep const& o);
  //! D => e_α sending an order to the left-bracketed product of mu along
  //! it; mu is a table A ⊗ A -> A.
  RepMap fold_algebra(AssocOperad const& ao,
                      Rep const&         o,
                      Bimodule const&    alpha_nu,
                      Mor const&         mu);

  // Singleton bimodules

  enum class TauVariant { naturals, symmetric };

  //! The trivial bimodule with singleton values over ℕ (discrete) or 𝕊.
  Bimodule build_tau(TauVariant v, int nmax);

}  // namespace plethysm

#endif  // PLETHYSM_ZOO_HPP_
