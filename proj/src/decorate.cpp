#include "plethysm/decorate.hpp"

#include <array>
#include <numeric>
#include <random>

namespace plethysm {

  namespace {
    using GenKey = std::array<int, 3>;  // (coend generator, u, v)

    int set_elem(Mor const& pt) {
      return pt.map[0];
    }
  }  // namespace

  int decoration_product(DecorationMonoid const& dm,
                         int aa, int bb, int cc, int x, int y, int u, int v) {
    auto const&     ep  = dm.ep;
    auto const&     r   = dm.base.r;
    auto const&     elr = *dm.d.el;
    int             pr  = r.pair(aa, cc);
    Quotient const& cq  = ep.p.coend[pr];
    int ny  = static_cast<int>(r.value(bb, cc).size());
    int g   = static_cast<int>(cq.offset[bb]) + x * ny + y;
    int zo  = ep.ext.el->object(pr, cq.cls[g]);
    int yo  = elr.object(r.pair(bb, cc), y);
    int dy  = static_cast<int>(dm.d.rep.value[yo].size());
    int blk = ep.ext.gen_block[pr][g];
    auto const& bo = ep.ext.q[zo];
    int k = bo.class_of(blk, u * dy + v);
    int o = ep.el_gamma.obj[zo];
    int e = set_elem(ep.kan.inject(
        o, zo, elr.cat->identity(o), point(Flavor::set, bo.obj.size(), k)));
    return dm.gd.comp[o].map[e];
  }

  DecoratedEl decorated_element_category(ElementRep const& d) {
    DecoratedEl dec;
    dec.d        = d;
    dec.el       = grothendieck(d.rep);
    dec.to_pairs = compose_functors(d.el->sigma, dec.el->sigma);
    return dec;
  }

  LambdaIso lambda_iso(ElementRep const& d, Bimodule const& base) {
    LambdaIso li;
    li.dec          = decorated_element_category(d);
    li.chi          = chi(d, base);
    li.el_chi       = element_category(li.chi.chi);
    auto const& eld = *li.dec.el;
    auto const& elr = *d.el;
    auto const& elc = *li.el_chi;

    li.lambda = Functor{eld.cat, elc.cat, {}, {}};
    for (auto [xo, u] : eld.obj_info) {
      int k = li.chi.kan.lambda[xo].map[u];
      li.lambda.obj.push_back(elc.object(elr.base_of(xo), k));
    }
    for (std::size_t m = 0; m < eld.mor_info.size(); ++m) {
      int l = eld.mor_info[m].first;
      int h = elr.mor_info[l].first;
      int k = elc.elem_of(li.lambda.obj[eld.cat->src(static_cast<int>(m))]);
      li.lambda.mor.push_back(elc.lift(h, k));
    }

    // inverse: push the Kan representative along its framing
    li.inverse = Functor{elc.cat, eld.cat, {}, {}};
    std::vector<std::pair<int, int>> rep_of;  // el(χ) object -> (x, u)
    for (auto [pr, k] : elc.obj_info) {
      auto [xo, m, e] = li.chi.kan.lift(pr, k);
      int l           = elr.lift(m, elr.elem_of(xo));
      int x2          = elr.cat->tgt(l);
      int u2          = d.rep.act[l].map[e];
      rep_of.emplace_back(x2, u2);
      li.inverse.obj.push_back(eld.object(x2, u2));
    }
    for (auto [h, k] : elc.mor_info) {
      int pr    = elc.cat->src(elc.lift(h, k));
      auto [x, u] = rep_of[pr];
      int l     = elr.lift(h, elr.elem_of(x));
      li.inverse.mor.push_back(eld.lift(l, u));
    }

    li.report.merge(check_functor(li.lambda), "Λ: ");
    li.report.merge(check_functor(li.inverse), "Λ inverse: ");
    for (std::size_t o = 0; o < li.lambda.obj.size(); ++o) {
      if (li.inverse.obj[li.lambda.obj[o]] != static_cast<int>(o)) {
        li.report.add("Λ is not invertible at " + eld.cat->object_id(static_cast<int>(o)));
      }
    }
    for (std::size_t o = 0; o < li.inverse.obj.size(); ++o) {
      if (li.lambda.obj[li.inverse.obj[o]] != static_cast<int>(o)) {
        li.report.add("Λ misses " + elc.cat->object_id(static_cast<int>(o)));
      }
    }
    for (std::size_t m = 0; m < li.lambda.mor.size(); ++m) {
      if (li.inverse.mor[li.lambda.mor[m]] != static_cast<int>(m)) {
        li.report.add("Λ is not faithful on morphisms");
        break;
      }
    }
    for (std::size_t m = 0; m < li.inverse.mor.size(); ++m) {
      if (li.lambda.mor[li.inverse.mor[m]] != static_cast<int>(m)) {
        li.report.add("Λ is not full on morphisms");
        break;
      }
    }
    return li;
  }

  DecorationMonoid decoration_monoid(ElementRep const&        d,
                                     Monoid const&            base,
                                     DecorationProduct const& prod) {
    require(d.rep.flavor == Flavor::set,
            ErrorCode::flavor,
            "decorations are FinSet reps");
    DecorationMonoid dm{d, base, element_plethysm(d, d, base), {}};
    auto const& ep  = dm.ep;
    auto const& r   = base.r;
    auto const& elr = *d.el;
    int         n   = r.n();
    std::vector<Mor> cocone;
    for (std::size_t zo = 0; zo < ep.ext.el->obj_info.size(); ++zo) {
      int pr = ep.ext.el->base_of(static_cast<int>(zo));
      int aa = pr / n, cc = pr % n;
      Quotient const& cq  = ep.p.coend[pr];
      int             o   = ep.el_gamma.obj[zo];
      std::size_t     cod = d.rep.value[o].size();
      std::vector<Mor> per_block;
      for (int g : ep.ext.block_gen[zo]) {
        auto [bb, rr] = cq.locate(g);
        int ny  = static_cast<int>(r.value(bb, cc).size());
        int x = rr / ny, y = rr % ny;
        int dx = static_cast<int>(d.rep.value[elr.object(r.pair(aa, bb), x)].size());
        int dy = static_cast<int>(d.rep.value[elr.object(r.pair(bb, cc), y)].size());
        Mor f{Flavor::set, static_cast<std::size_t>(dx * dy), cod, {}, {}};
        for (int u = 0; u < dx; ++u) {
          for (int v = 0; v < dy; ++v) {
            int e = prod(aa, bb, cc, x, y, u, v);
            require(e >= 0 && static_cast<std::size_t>(e) < cod,
                    ErrorCode::invalid_argument,
                    "decoration product out of range at "
                        + ep.ext.el->cat->object_id(static_cast<int>(zo)));
            f.map.push_back(e);
          }
        }
        per_block.push_back(std::move(f));
      }
      auto c = ep.ext.q[zo].induce(per_block, cod);
      require(c.has_value(),
              ErrorCode::law_failure,
              "decoration product does not descend at "
                  + ep.ext.el->cat->object_id(static_cast<int>(zo)));
      cocone.push_back(*c);
    }
    auto gd = kan_factor(ep.kan, ep.el_gamma, d.rep, cocone);
    require(gd.has_value(),
            ErrorCode::law_failure,
            "decoration product is not natural");
    dm.gd = *gd;
    return dm;
  }

  LawReport check_decoration_monoid(DecorationMonoid const& dm) {
    LawReport   rep;
    auto const& r   = dm.base.r;
    auto const& elr = *dm.d.el;
    int         n   = r.n();
    rep.merge(check_repmap(dm.ep.result.rep, dm.d.rep, dm.gd), "naturality: ");
    auto dsize = [&](int a, int b, int x) {
      return static_cast<int>(dm.d.rep.value[elr.object(r.pair(a, b), x)].size());
    };
    auto gam = [&](int a, int b, int c, int x, int y) {
      int ny = static_cast<int>(r.value(b, c).size());
      return dm.base.g(a, b, c).map[x * ny + y];
    };
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          for (int e = 0; e < n; ++e) {
            int nx = static_cast<int>(r.value(a, b).size());
            int ny = static_cast<int>(r.value(b, c).size());
            int nz = static_cast<int>(r.value(c, e).size());
            for (int x = 0; x < nx; ++x) {
              for (int y = 0; y < ny; ++y) {
                for (int z = 0; z < nz; ++z) {
                  int xy = gam(a, b, c, x, y), yz = gam(b, c, e, y, z);
                  for (int u = 0; u < dsize(a, b, x); ++u) {
                    for (int v = 0; v < dsize(b, c, y); ++v) {
                      for (int t = 0; t < dsize(c, e, z); ++t) {
                        int l = decoration_product(dm, a, c, e, xy, z,
                                         decoration_product(dm, a, b, c, x, y, u, v), t);
                        int rr = decoration_product(dm, a, b, e, x, yz, u,
                                          decoration_product(dm, b, c, e, y, z, v, t));
                        if (l != rr) {
                          rep.add("decoration product is not associative at "
                                  + r.pairs->object_id(r.pair(a, e)));
                          return rep;
                        }
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
    return rep;
  }

  Monoid chi_monoid(DecorationMonoid const& dm, Chi const& c) {
    auto const&    r   = dm.base.r;
    PlethysmResult pc  = plethysm_product(c.chi, c.chi);
    Chi            c12 = chi(dm.ep.result, r);
    BimoduleMap    mu  = chi_mu(dm.d, dm.d, dm.base, c, c, pc, dm.ep, c12);
    BimoduleMap    cm  = compose_repmap(lan_map(c12.kan, c.kan, dm.gd), mu);
    return make_monoid(c.chi, [&](int a, int b, int cc) {
      std::size_t nx = c.chi.value(a, b).size();
      std::size_t ny = c.chi.value(b, cc).size();
      Mor f{Flavor::set, nx * ny, c.chi.value(a, cc).size(), {}, {}};
      for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < ny; ++y) {
          int k = pc.cls(a, b, cc, static_cast<int>(x), static_cast<int>(y));
          f.map.push_back(cm.comp[r.pair(a, cc)].map[k]);
        }
      }
      return f;
    });
  }

  DecoratedPlethysm decorated_plethysm(ElementRep const&       e1,
                                       ElementRep const&       e2,
                                       DecorationMonoid const& dm,
                                       DecoratedEl const&      dec) {
    require(e1.el == dec.el && e2.el == dec.el,
            ErrorCode::mismatch,
            "decorated plethysm needs reps over el(D)");
    Flavor fl = e1.rep.flavor;
    require(fl == e2.rep.flavor, ErrorCode::flavor, "decorated plethysm: flavors differ");
    auto const& ep  = dm.ep;
    auto const& ext = ep.ext;
    auto const& r   = dm.base.r;
    auto const& a   = *r.action;
    auto const& elr = *dm.d.el;
    auto const& eld = *dec.el;
    auto const& D   = dm.d.rep;
    int         n   = r.n();
    int         nma = static_cast<int>(a.num_morphisms());

    DecoratedPlethysm out;
    out.el_dd = grothendieck(ext.rep);
    auto const& eldd = *out.el_dd;
    out.ext   = Rep{eldd.cat, fl, {}, {}};

    int nz = static_cast<int>(ext.el->obj_info.size());
    // per el(D ⊗̂ D) object: builder, block of each key, key of each block
    std::vector<QuotientBuilder>           qbs(eldd.obj_info.size(), QuotientBuilder(fl));
    std::vector<std::map<GenKey, int>>     block_of(eldd.obj_info.size());
    std::vector<std::vector<GenKey>>       key_of(eldd.obj_info.size());
    std::vector<Quotient>                  q(eldd.obj_info.size());

    auto xobj = [&](int aa, int bb, int x) { return elr.object(r.pair(aa, bb), x); };
    auto dsize = [&](int o) { return static_cast<int>(D.value[o].size()); };
    auto val1 = [&](int xo, int u) -> Obj const& { return e1.rep.value[eld.object(xo, u)]; };
    auto val2 = [&](int yo, int v) -> Obj const& { return e2.rep.value[eld.object(yo, v)]; };
    // el(D ⊗̂ D) object and block of a decorated generator
    auto locate_key = [&](int pr, int g, int u, int v) -> std::pair<int, int> {
      Quotient const& cq = ep.p.coend[pr];
      int  zo            = ext.el->object(pr, cq.cls[g]);
      auto [bb, rr]      = cq.locate(g);
      int  ny            = static_cast<int>(r.value(bb, pr % n).size());
      int  yo            = xobj(bb, pr % n, rr % ny);
      int  w  = ext.q[zo].class_of(ext.gen_block[pr][g], u * dsize(yo) + v);
      int  wo = eldd.object(zo, w);
      return {wo, block_of[wo].at({g, u, v})};
    };

    for (int zo = 0; zo < nz; ++zo) {
      int pr = ext.el->base_of(zo);
      int aa = pr / n, cc = pr % n;
      Quotient const& cq = ep.p.coend[pr];
      for (int g : ext.block_gen[zo]) {
        auto [bb, rr] = cq.locate(g);
        int ny = static_cast<int>(r.value(bb, cc).size());
        int xo = xobj(aa, bb, rr / ny), yo = xobj(bb, cc, rr % ny);
        int blk = ext.gen_block[pr][g];
        for (int u = 0; u < dsize(xo); ++u) {
          for (int v = 0; v < dsize(yo); ++v) {
            int w  = ext.q[zo].class_of(blk, u * dsize(yo) + v);
            int wo = eldd.object(zo, w);
            block_of[wo][{g, u, v}] = qbs[wo].add_block(tensor(val1(xo, u), val2(yo, v)));
            key_of[wo].push_back({g, u, v});
          }
        }
      }
    }

    // middle relations, as for ⊗̂ but carrying the decorations
    for (int aa = 0; aa < n; ++aa) {
      for (int cc = 0; cc < n; ++cc) {
        int             pr = r.pair(aa, cc);
        Quotient const& cq = ep.p.coend[pr];
        for (int s = 0; s < nma; ++s) {
          if (a.is_identity(s)) {
            continue;
          }
          int b0 = a.src(s), b1 = a.tgt(s);
          int ny0 = static_cast<int>(r.value(b0, cc).size());
          int ny1 = static_cast<int>(r.value(b1, cc).size());
          for (int x = 0; x < static_cast<int>(r.value(aa, b0).size()); ++x) {
            int x1 = r.right(aa, s).map[x];
            int l1 = elr.lift(r.act_index(a.identity(aa), s), x);
            for (int y1 = 0; y1 < ny1; ++y1) {
              int y0 = r.left(s, cc).map[y1];
              int l2 = elr.lift(r.act_index(s, a.identity(cc)), y1);
              int g0 = static_cast<int>(cq.offset[b0]) + x * ny0 + y0;
              int g1 = static_cast<int>(cq.offset[b1]) + x1 * ny1 + y1;
              int xo = xobj(aa, b0, x), yo1 = xobj(b1, cc, y1);
              for (int u = 0; u < dsize(xo); ++u) {
                int u1 = D.act[l1].map[u];
                int L1 = eld.lift(l1, u);
                for (int v1 = 0; v1 < dsize(yo1); ++v1) {
                  int v0 = D.act[l2].map[v1];
                  int L2 = eld.lift(l2, v1);
                  auto [wo0, bk0] = locate_key(pr, g0, u, v0);
                  auto [wo1, bk1] = locate_key(pr, g1, u1, v1);
                  require(wo0 == wo1,
                          ErrorCode::internal,
                          "decorated tensor: relation splits a class");
                  qbs[wo0].relate(
                      bk0,
                      tensor(identity_mor(fl, val1(xo, u).size()), e2.rep.act[L2]),
                      bk1,
                      tensor(e1.rep.act[L1], identity_mor(fl, val2(yo1, v1).size())));
                }
              }
            }
          }
        }
      }
    }
    for (std::size_t wo = 0; wo < qbs.size(); ++wo) {
      q[wo] = qbs[wo].build();
      out.ext.value.push_back(q[wo].obj);
    }

    // action along lifts of el(ρ □ ρ) morphisms
    auto const& pc = *r.pairs;
    for (auto [m, w] : eldd.mor_info) {
      auto [j, z]  = ext.el->mor_info[m];
      int s        = j / nma;
      int t        = j % nma;
      int src_pair = pc.src(j), tgt_pair = pc.tgt(j);
      int cc = src_pair % n, c2 = tgt_pair % n, aa = src_pair / n;
      int wo  = eldd.object(ext.el->object(src_pair, z), w);
      int wo2 = eldd.cat->tgt(eldd.lift(m, w));
      Quotient const& cq  = ep.p.coend[src_pair];
      Quotient const& cq2 = ep.p.coend[tgt_pair];
      std::vector<Mor> per_block;
      for (auto const& key : key_of[wo]) {
        auto [g, u, v] = key;
        auto [bb, rr]  = cq.locate(g);
        int ny  = static_cast<int>(r.value(bb, cc).size());
        int x = rr / ny, y = rr % ny;
        int x2  = r.left(s, bb).map[x];
        int y2  = r.right(bb, t).map[y];
        int ny2 = static_cast<int>(r.value(bb, c2).size());
        int g2  = static_cast<int>(cq2.offset[bb]) + x2 * ny2 + y2;
        int l1  = elr.lift(r.act_index(s, a.identity(bb)), x);
        int l2  = elr.lift(r.act_index(a.identity(bb), t), y);
        int u2  = D.act[l1].map[u];
        int v2i = D.act[l2].map[v];
        auto [wt, bk] = locate_key(tgt_pair, g2, u2, v2i);
        require(wt == wo2,
                ErrorCode::internal,
                "decorated tensor: action leaves the class");
        (void) aa;
        per_block.push_back(compose(
            q[wo2].proj_block(bk),
            tensor(e1.rep.act[eld.lift(l1, u)], e2.rep.act[eld.lift(l2, v)])));
      }
      out.ext.act.push_back(section_map(q[wo], per_block, q[wo2].obj.size()));
    }

    // el(γ_D): (z, w) |-> (γ̄ z, γ_D w)
    out.el_gamma_d = Functor{eldd.cat, eld.cat, {}, {}};
    for (auto [zo, w] : eldd.obj_info) {
      int o = ep.el_gamma.obj[zo];
      int k = set_elem(ep.kan.inject(
          o, zo, elr.cat->identity(o),
          point(Flavor::set, ext.q[zo].obj.size(), w)));
      out.el_gamma_d.obj.push_back(eld.object(o, dm.gd.comp[o].map[k]));
    }
    for (std::size_t mm = 0; mm < eldd.mor_info.size(); ++mm) {
      int m  = eldd.mor_info[mm].first;
      int so = out.el_gamma_d.obj[eldd.cat->src(static_cast<int>(mm))];
      out.el_gamma_d.mor.push_back(eld.lift(ep.el_gamma.mor[m], eld.elem_of(so)));
    }
    out.kan    = pointwise_lan(out.ext, out.el_gamma_d);
    out.result = {dec.el, out.kan.ext};
    return out;
  }

  PlusEquivalence plus_equivalence_setup(DecorationMonoid const& dm) {
    PlusEquivalence pe;
    pe.lam   = lambda_iso(dm.d, dm.base.r);
    pe.chi_m = chi_monoid(dm, pe.lam.chi);
    pe.report.merge(pe.lam.report, "");
    pe.report.merge(check_monoid(pe.chi_m), "χ monoid: ");
    return pe;
  }

  LawReport compare_plus(PlusEquivalence const&  pe,
                         DecorationMonoid const& dm,
                         ElementRep const&       f1,
                         ElementRep const&       f2) {
    LawReport   rep;
    auto const& dec = pe.lam.dec;
    ElementRep  g1{dec.el, restrict_rep(f1.rep, pe.lam.lambda)};
    ElementRep  g2{dec.el, restrict_rep(f2.rep, pe.lam.lambda)};
    auto lhs = decorated_plethysm(g1, g2, dm, dec).result.rep;
    auto rhs = restrict_rep(element_plethysm(f1, f2, pe.chi_m).result.rep,
                            pe.lam.lambda);
    rep.merge(check_rep(lhs), "decorated side: ");
    for (std::size_t o = 0; o < lhs.value.size(); ++o) {
      if (lhs.value[o].size() != rhs.value[o].size()) {
        rep.add("sizes differ at " + dec.el->cat->object_id(static_cast<int>(o)) + ": "
                + std::to_string(lhs.value[o].size()) + " vs "
                + std::to_string(rhs.value[o].size()));
      }
    }
    return rep;
  }

  PlusEquivalence plus_element_equivalence(DecorationMonoid const& dm,
                                           unsigned                seed,
                                           int                     count,
                                           int                     max_size) {
    PlusEquivalence pe = plus_equivalence_setup(dm);
    for (int i = 0; i < count; ++i) {
      unsigned s1 = seed + 2 * static_cast<unsigned>(i);
      auto f1 = random_component_rep(pe.lam.el_chi, Flavor::set, s1, max_size);
      auto f2 = random_component_rep(pe.lam.el_chi, Flavor::set, s1 + 1, max_size);
      pe.report.merge(compare_plus(pe, dm, f1, f2),
                      "seed " + std::to_string(s1) + ": ");
    }
    return pe;
  }

  ElementRep random_component_rep(ElPtr const& el,
                                  Flavor       f,
                                  unsigned     seed,
                                  int          max_size) {
    auto const&      c = *el->cat;
    int              no = static_cast<int>(c.num_objects());
    std::vector<int> parent(no);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m) {
      parent[find(c.src(m))] = find(c.tgt(m));
    }
    // sizes drawn per component in order of the smallest object
    std::mt19937     gen(seed);
    std::vector<int> size(no, -1);
    for (int o = 0; o < no; ++o) {
      int root = find(o);
      if (size[root] < 0) {
        size[root] = static_cast<int>(gen() % static_cast<unsigned>(max_size + 1));
      }
    }
    ElementRep d{el, Rep{el->cat, f, {}, {}}};
    for (int o = 0; o < no; ++o) {
      std::vector<std::string> names;
      for (int i = 0; i < size[find(o)]; ++i) {
        names.push_back("k" + std::to_string(i));
      }
      d.rep.value.push_back(Obj{f, std::move(names)});
    }
    for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m) {
      d.rep.act.push_back(identity_mor(f, d.rep.value[c.src(m)].size()));
    }
    return d;
  }

}  // namespace plethysm
