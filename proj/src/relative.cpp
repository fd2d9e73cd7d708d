#include "plethysm/relative.hpp"

namespace plethysm {

  namespace {
    Monoid base_for(Monoid const& base, Flavor f) {
      if (f == Flavor::vect && base.r.flavor() == Flavor::set) {
        return linearize(base);
      }
      return base;
    }

    void compare_maps(LawReport&         rep,
                      std::string const& what,
                      Bimodule const&    at,
                      BimoduleMap const& lhs,
                      BimoduleMap const& rhs) {
      for (std::size_t p = 0; p < lhs.comp.size(); ++p) {
        if (!equal(lhs.comp[p], rhs.comp[p])) {
          rep.add(what + " fails at "
                  + at.pairs->object_id(static_cast<int>(p)));
        }
      }
    }

    // f1 (x) f2 on D1 (x)^ D2 => D1' (x)^ D2' over el(ρ □ ρ)
    RepMap external_map(ExternalTensor const& src,
                        ExternalTensor const& tgt,
                        ElementRep const&     d1,
                        ElementRep const&     d2,
                        RepMap const&         f1,
                        RepMap const&         f2,
                        PlethysmResult const& p) {
      int    n = p.product.n();
      RepMap out;
      for (std::size_t z = 0; z < src.q.size(); ++z) {
        int              pr = src.el->base_of(static_cast<int>(z));
        int              a = pr / n, c = pr % n;
        std::vector<Mor> per_block;
        for (int g : src.block_gen[z]) {
          auto [b, r] = p.at(a, c).locate(g);
          int ny      = static_cast<int>(p.r2.value(b, c).size());
          int xo      = d1.el->object(p.r1.pair(a, b), r / ny);
          int yo      = d2.el->object(p.r2.pair(b, c), r % ny);
          per_block.push_back(
              compose(tgt.q[z].proj_block(tgt.gen_block[pr][g]),
                      tensor(f1.comp[xo], f2.comp[yo])));
        }
        out.comp.push_back(
            section_map(src.q[z], per_block, tgt.q[z].obj.size()));
      }
      return out;
    }

    Mor collapse(Flavor f, std::size_t n) {
      if (f == Flavor::set) {
        return Mor{f, n, 1, std::vector<int>(n, 0), {}};
      }
      Mor m{f, n, 1, {}, QMatrix(1, n)};
      for (std::size_t i = 0; i < n; ++i) {
        m.mat.set(0, i, 1);
      }
      return m;
    }
  }  // namespace

  LawReport check_relative_bimodule(RelativeBimodule const& a) {
    LawReport rep;
    if (a.xi.flavor() != a.base.r.flavor()) {
      rep.add("total and base flavors differ");
      return rep;
    }
    if (!a.base.eta) {
      rep.add("base monoid is not unital");
    }
    rep.merge(check_bimodule(a.xi), "total: ");
    rep.merge(check_bimodule_map(a.xi, a.base.r, a.pi), "projection: ");
    return rep;
  }

  RelativePlethysm relative_plethysm(RelativeBimodule const& a,
                                     RelativeBimodule const& b) {
    require(a.base.r.rep.value == b.base.r.rep.value
                && a.base.r.rep.act.size() == b.base.r.rep.act.size(),
            ErrorCode::mismatch,
            "relative plethysm: bases differ");
    RelativePlethysm rp;
    rp.p      = plethysm_product(a.xi, b.xi);
    rp.p_base = plethysm_product(a.base.r, a.base.r);
    BimoduleMap gbar = gamma_on_classes(a.base, rp.p_base);
    rp.result.xi     = rp.p.product;
    rp.result.pi     = compose_repmap(
        gbar, plethysm_map(rp.p, rp.p_base, a.pi, b.pi));
    rp.result.base = a.base;
    return rp;
  }

  RelativeBimodule relative_unit(Monoid const& base) {
    require(base.eta.has_value(),
            ErrorCode::invalid_argument,
            "relative unit needs a unital base");
    return {hom_unit(base.r.action, base.r.flavor()), *base.eta, base};
  }

  LawReport check_relative_constraints(RelativeBimodule const& a,
                                       RelativeBimodule const& b,
                                       RelativeBimodule const& c) {
    LawReport rep;
    auto      ab   = relative_plethysm(a, b);
    auto      ab_c = relative_plethysm(ab.result, c);
    auto      bc   = relative_plethysm(b, c);
    auto      a_bc = relative_plethysm(a, bc.result);
    auto      as   = associator(a.xi, b.xi, c.xi);
    compare_maps(rep, "associator over the base", a.xi,
                 compose_repmap(a_bc.result.pi, as.map), ab_c.result.pi);

    auto u  = relative_unit(a.base);
    auto ua = relative_plethysm(u, a);
    auto au = relative_plethysm(a, u);
    auto lu = left_unitor(a.xi);
    auto ru = right_unitor(a.xi);
    compare_maps(rep, "left unitor over the base", a.xi,
                 compose_repmap(a.pi, lu.map), ua.result.pi);
    compare_maps(rep, "right unitor over the base", a.xi,
                 compose_repmap(a.pi, ru.map), au.result.pi);
    return rep;
  }

  LawReport check_relative_monoid(RelativeBimodule const& a,
                                  Monoid const&           m) {
    LawReport rep;
    if (m.r.rep.value != a.xi.rep.value) {
      rep.add("monoid is not on the total bimodule");
      return rep;
    }
    rep.merge(check_monoid(m), "total monoid: ");
    int n = a.xi.n();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          Mor lhs = compose(a.pi.comp[x * n + z], m.g(x, y, z));
          Mor rhs = compose(a.base.g(x, y, z),
                            tensor(a.pi.comp[x * n + y], a.pi.comp[y * n + z]));
          if (!equal(lhs, rhs)) {
            rep.add("projection does not commute with multiplication at ("
                    + a.xi.action->object_id(x) + ","
                    + a.xi.action->object_id(y) + ","
                    + a.xi.action->object_id(z) + ")");
          }
        }
      }
    }
    if (m.eta) {
      if (!a.base.eta) {
        rep.add("total monoid is unital but the base is not");
      } else {
        compare_maps(rep, "unit over the base", a.xi,
                     compose_repmap(a.pi, *m.eta), *a.base.eta);
      }
    }
    return rep;
  }

  IndexingFunctor indexing_functor(RelativeBimodule const& a,
                                   Monoid const&           m) {
    require(m.eta.has_value() && a.base.eta.has_value(),
            ErrorCode::invalid_argument,
            "indexing functor needs unital monoids");
    IndexingFunctor out;
    out.total = category_from_monoid(m);
    out.base  = category_from_monoid(a.base);
    out.f     = Functor{out.total.k, out.base.k, {}, {}};
    int n     = a.xi.n();
    for (int o = 0; o < n; ++o) {
      out.f.obj.push_back(o);
    }
    // both categories lay morphisms out pair by pair
    std::vector<int> base_off;
    int              off = 0;
    for (int p = 0; p < n * n; ++p) {
      base_off.push_back(off);
      off += static_cast<int>(a.base.r.rep.value[p].size());
    }
    for (int p = 0; p < n * n; ++p) {
      for (int e : a.pi.comp[p].map) {
        out.f.mor.push_back(base_off[p] + e);
      }
    }
    return out;
  }

  RepMap canonical_weight(ElementRep const& d) {
    RepMap w;
    for (auto const& v : d.rep.value) {
      w.comp.push_back(collapse(d.rep.flavor, v.size()));
    }
    return w;
  }

  WeightedChi weight_to_relative(ElementRep const& d,
                                 RepMap const&     eps,
                                 Monoid const&     base) {
    Flavor      fl = d.rep.flavor;
    WeightedChi w;
    Monoid      b  = base_for(base, fl);
    w.chi_d        = chi(d, b.r);
    w.chi_t        = chi(trivial_rep(d.el, fl), b.r);
    // χ_T ≅ ρ: block (x, m) goes to ρ(m) applied to the element x
    auto const& el = *d.el;
    for (std::size_t p = 0; p < w.chi_t.kan.q.size(); ++p) {
      std::vector<Mor> per_block;
      for (auto [x, m] : w.chi_t.kan.blocks[p]) {
        int e = base.r.rep.act[m].map[el.elem_of(x)];
        per_block.push_back(point(fl, b.r.rep.value[p].size(), e));
      }
      w.chi_t_iso.comp.push_back(section_map(
          w.chi_t.kan.q[p], per_block, b.r.rep.value[p].size()));
    }
    w.rel.xi   = w.chi_d.chi;
    w.rel.pi   = compose_repmap(w.chi_t_iso,
                                lan_map(w.chi_d.kan, w.chi_t.kan, eps));
    w.rel.base = b;
    return w;
  }

  ElementRep relative_to_rep(RelativeBimodule const& a, ElPtr const& el) {
    require(a.xi.flavor() == Flavor::set,
            ErrorCode::flavor,
            "relative_to_rep needs FinSet values");
    require(el->points.base == a.base.r.pairs,
            ErrorCode::mismatch,
            "element category is not over the base");
    std::size_t                   no = el->obj_info.size();
    std::vector<std::vector<int>> fiber(no);
    std::vector<std::vector<int>> pos(a.xi.rep.value.size());
    for (std::size_t p = 0; p < a.xi.rep.value.size(); ++p) {
      auto const& pi = a.pi.comp[p];
      pos[p].assign(pi.dom, -1);
      for (std::size_t x = 0; x < pi.dom; ++x) {
        int o     = el->object(static_cast<int>(p), pi.map[x]);
        pos[p][x] = static_cast<int>(fiber[o].size());
        fiber[o].push_back(static_cast<int>(x));
      }
    }
    Rep d;
    d.base   = el->cat;
    d.flavor = Flavor::set;
    for (std::size_t o = 0; o < no; ++o) {
      Obj v{Flavor::set, {}};
      int p = el->base_of(static_cast<int>(o));
      for (int x : fiber[o]) {
        v.names.push_back(a.xi.rep.value[p].names[x]);
      }
      d.value.push_back(v);
    }
    auto const& cat = *el->cat;
    for (std::size_t g = 0; g < el->mor_info.size(); ++g) {
      int bm = el->mor_info[g].first;
      int s  = cat.src(static_cast<int>(g)), t = cat.tgt(static_cast<int>(g));
      int pt = el->base_of(t);
      Mor m{Flavor::set, fiber[s].size(), fiber[t].size(), {}, {}};
      for (int x : fiber[s]) {
        m.map.push_back(pos[pt][a.xi.rep.act[bm].map[x]]);
      }
      d.act.push_back(m);
    }
    return {el, d};
  }

  LawReport equivalence_roundtrip(RelativeBimodule const& a) {
    LawReport rep;
    auto      el = element_category(a.base.r);
    auto      d  = relative_to_rep(a, el);
    rep.merge(check_element_rep(d), "fibre rep: ");
    auto w = weight_to_relative(d, canonical_weight(d), a.base);
    // χ_D(p) -> ξ(p): class (x, m, i) goes to ξ(m) of the i-th fibre element
    std::vector<std::vector<int>> fiber(el->obj_info.size());
    for (std::size_t p = 0; p < a.xi.rep.value.size(); ++p) {
      for (std::size_t x = 0; x < a.pi.comp[p].dom; ++x) {
        fiber[el->object(static_cast<int>(p), a.pi.comp[p].map[x])].push_back(
            static_cast<int>(x));
      }
    }
    BimoduleMap phi;
    for (std::size_t p = 0; p < w.chi_d.kan.q.size(); ++p) {
      Mor m{Flavor::set, w.chi_d.chi.rep.value[p].size(),
            a.xi.rep.value[p].size(), {}, {}};
      for (std::size_t k = 0; k < m.dom; ++k) {
        auto [x, mm, i] = w.chi_d.kan.lift(static_cast<int>(p),
                                           static_cast<int>(k));
        m.map.push_back(a.xi.rep.act[mm].map[fiber[x][i]]);
      }
      phi.comp.push_back(m);
    }
    if (!is_iso(phi)) {
      rep.add("χ of the fibre rep is not isomorphic to the total bimodule");
    }
    rep.merge(check_bimodule_map(w.chi_d.chi, a.xi, phi), "comparison: ");
    compare_maps(rep, "comparison over the base", a.xi,
                 compose_repmap(a.pi, phi), w.rel.pi);
    return rep;
  }

  LawReport equivalence_roundtrip(ElementRep const& d, Monoid const& base) {
    LawReport rep;
    require(d.rep.flavor == Flavor::set,
            ErrorCode::flavor,
            "Cartesian round trip needs a FinSet rep");
    auto w  = weight_to_relative(d, canonical_weight(d), base);
    auto d2 = relative_to_rep(w.rel, d.el);
    // d in D(x) goes to its class in the fibre of χ_D over x
    RepMap psi;
    for (std::size_t x = 0; x < d.rep.value.size(); ++x) {
      int p = d.el->base_of(static_cast<int>(x));
      int e = d.el->elem_of(static_cast<int>(x));
      std::vector<int> fpos(w.rel.pi.comp[p].dom, -1);
      int              cnt = 0;
      for (std::size_t k = 0; k < fpos.size(); ++k) {
        if (w.rel.pi.comp[p].map[k] == e) {
          fpos[k] = cnt++;
        }
      }
      Mor m{Flavor::set, d.rep.value[x].size(), d2.rep.value[x].size(), {},
            {}};
      int id = base.r.pairs->identity(p);
      for (std::size_t i = 0; i < m.dom; ++i) {
        Mor pt = w.chi_d.kan.inject(
            p, static_cast<int>(x), id,
            point(Flavor::set, d.rep.value[x].size(), i));
        m.map.push_back(fpos[pt.map[0]]);
      }
      psi.comp.push_back(m);
    }
    if (!is_iso(psi)) {
      rep.add("fibres of χ_D are not isomorphic to D");
    }
    rep.merge(check_repmap(d.rep, d2.rep, psi), "comparison: ");
    return rep;
  }

  LawReport check_weight_monoidality(ElementRep const& d1,
                                     RepMap const&     e1,
                                     ElementRep const& d2,
                                     RepMap const&     e2,
                                     Monoid const&     base) {
    LawReport rep;
    Flavor    fl = d1.rep.flavor;
    auto      w1 = weight_to_relative(d1, e1, base);
    auto      w2 = weight_to_relative(d2, e2, base);
    auto      t  = trivial_rep(d1.el, fl);
    auto      ep = element_plethysm(d1, d2, base);
    auto      et = element_plethysm(t, t, base);
    RepMap    ext
        = external_map(ep.ext, et.ext, d1, d2, e1, e2, ep.p);
    RepMap e12 = lan_map(ep.kan, et.kan, ext);
    for (std::size_t w = 0; w < e12.comp.size(); ++w) {
      e12.comp[w] = compose(collapse(fl, et.result.rep.value[w].size()),
                            e12.comp[w]);
    }
    auto w12 = weight_to_relative(ep.result, e12, base);
    auto pc  = plethysm_product(w1.chi_d.chi, w2.chi_d.chi);
    auto mu  = chi_mu(d1, d2, base, w1.chi_d, w2.chi_d, pc, ep, w12.chi_d);
    Monoid b = base_for(base, fl);
    auto   pb  = plethysm_product(b.r, b.r);
    auto   lhs = compose_repmap(w12.rel.pi, mu);
    auto   rhs = compose_repmap(gamma_on_classes(b, pb),
                                plethysm_map(pc, pb, w1.rel.pi, w2.rel.pi));
    compare_maps(rep, "weight monoidality", b.r, lhs, rhs);
    return rep;
  }

}  // namespace plethysm
