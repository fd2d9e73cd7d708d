#include "plethysm/algebra.hpp"

namespace plethysm {

  namespace {
    std::size_t power(std::size_t b, std::size_t e) {
      std::size_t r = 1;
      for (std::size_t i = 0; i < e; ++i) {
        if (b != 0 && r > hom_cap * 16 / b) {
          return hom_cap * 16;  // saturate; only compared against the cap
        }
        r *= b;
      }
      return r;
    }

    std::string table_name(std::vector<int> const& map, std::size_t cod) {
      std::string s = "h:";
      for (std::size_t i = 0; i < map.size(); ++i) {
        if (cod > 10 && i) {
          s += ",";
        }
        s += std::to_string(map[i]);
      }
      return s;
    }

    std::size_t set_size(Rep const& o, int a) {
      return o.value[a].size();
    }

    Mor tensor_all(std::vector<Mor> const& hs) {
      return hs.empty() ? identity_mor(Flavor::set, 1) : tensor(hs);
    }
  }  // namespace

  Rep power_module(FactorizableAction const& fa, int base) {
    require(base >= 1, ErrorCode::invalid_argument, "power module needs a nonempty base");
    auto const& c = *fa.a;
    Rep         o{fa.a, Flavor::set, {}, {}};
    for (int n = 0; n < static_cast<int>(c.num_objects()); ++n) {
      std::vector<std::size_t> sizes(n, static_cast<std::size_t>(base));
      std::size_t              total = power(base, n);
      require(total <= hom_cap, ErrorCode::size_cap, "power module too large");
      Obj v{Flavor::set, {}};
      for (std::size_t i = 0; i < total; ++i) {
        std::string s = "a:";
        for (int d : tensor_decode(sizes, i)) {
          s += std::to_string(d);
        }
        v.names.push_back(s);
      }
      o.value.push_back(std::move(v));
    }
    for (int s = 0; s < static_cast<int>(c.num_morphisms()); ++s) {
      int  n = c.src(s);
      auto p = fa.perm(s);
      std::vector<std::size_t> sizes(n, static_cast<std::size_t>(base));
      std::size_t              total = o.value[n].size();
      Mor m{Flavor::set, total, o.value[c.tgt(s)].size(), {}, {}};
      for (std::size_t i = 0; i < total; ++i) {
        auto             a = tensor_decode(sizes, i);
        std::vector<int> b(n);
        for (int j = 0; j < n; ++j) {
          b[p[j]] = a[j];
        }
        m.map.push_back(n == 0 ? 0 : static_cast<int>(tensor_encode(sizes, b)));
      }
      o.act.push_back(std::move(m));
    }
    return o;
  }

  Mor hom_table(Rep const& o, int a, int b, int e) {
    std::size_t              dom = set_size(o, a), cod = set_size(o, b);
    std::vector<std::size_t> sizes(dom, cod);
    Mor h{Flavor::set, dom, cod, {}, {}};
    if (dom > 0) {
      h.map = tensor_decode(sizes, static_cast<std::size_t>(e));
    }
    return h;
  }

  int hom_index(Rep const& o, int a, int b, Mor const& h) {
    std::size_t              dom = set_size(o, a), cod = set_size(o, b);
    std::vector<std::size_t> sizes(dom, cod);
    return dom == 0 ? 0 : static_cast<int>(tensor_encode(sizes, h.map));
  }

  Mor const& module_act(Rep const& o, int s) {
    return o.act[s];
  }

  Mor act_on_table(Rep const& o, int pair_mor, Mor const& h) {
    int nm = static_cast<int>(o.base->num_morphisms());
    return compose(o.act[pair_mor % nm], compose(h, o.act[pair_mor / nm]));
  }

  Bimodule reference_bimodule(Rep const&                           o,
                              std::function<bool(int, int)> const& keep,
                              std::string                          name) {
    require(o.flavor == Flavor::set, ErrorCode::flavor, "reference needs a FinSet module");
    require(o.base->is_groupoid(),
            ErrorCode::invalid_argument,
            "reference needs a groupoid");
    auto kept = [&](int a, int b) { return !keep || keep(a, b); };
    for (int a = 0; a < static_cast<int>(o.value.size()); ++a) {
      for (int b = 0; b < static_cast<int>(o.value.size()); ++b) {
        require(!kept(a, b) || power(set_size(o, b), set_size(o, a)) <= hom_cap,
                ErrorCode::size_cap,
                "Hom(O " + o.base->object_id(a) + ", O " + o.base->object_id(b)
                    + ") exceeds the reference cap");
      }
    }
    return make_bimodule(
        o.base,
        Flavor::set,
        [&](int a, int b) {
          Obj v{Flavor::set, {}};
          if (!kept(a, b)) {
            return v;
          }
          std::size_t total = power(set_size(o, b), set_size(o, a));
          for (std::size_t e = 0; e < total; ++e) {
            v.names.push_back(table_name(hom_table(o, a, b, static_cast<int>(e)).map,
                                         set_size(o, b)));
          }
          return v;
        },
        [&](int s, int t) {
          auto const& c = *o.base;
          int         a = c.tgt(s), b = c.src(t);
          int         a2 = c.src(s), b2 = c.tgt(t);
          std::size_t total = kept(a, b) ? power(set_size(o, b), set_size(o, a)) : 0;
          Mor m{Flavor::set, total, kept(a2, b2) ? total : 0, {}, {}};
          int nm = static_cast<int>(c.num_morphisms());
          for (std::size_t e = 0; e < total; ++e) {
            Mor h = act_on_table(o, s * nm + t, hom_table(o, a, b, static_cast<int>(e)));
            m.map.push_back(hom_index(o, a2, b2, h));
          }
          return m;
        },
        std::move(name));
  }

  Monoid reference_from_module(Rep const& o) {
    Bimodule alpha = reference_bimodule(o);
    int      n     = alpha.n();
    std::vector<Mor> ids;
    for (int a = 0; a < n; ++a) {
      ids.push_back(point(Flavor::set, alpha.value(a, a).size(),
                          hom_index(o, a, a, identity_mor(Flavor::set, set_size(o, a)))));
    }
    BimoduleMap eta = unit_from_identities(alpha, ids);
    Bimodule const& al = alpha;
    return make_monoid(
        alpha,
        [&](int a, int b, int c) {
          std::size_t nx = al.value(a, b).size(), ny = al.value(b, c).size();
          Mor g{Flavor::set, nx * ny, al.value(a, c).size(), {}, {}};
          for (std::size_t x = 0; x < nx; ++x) {
            Mor hx = hom_table(o, a, b, static_cast<int>(x));
            for (std::size_t y = 0; y < ny; ++y) {
              g.map.push_back(
                  hom_index(o, a, c, compose(hom_table(o, b, c, static_cast<int>(y)), hx)));
            }
          }
          return g;
        },
        std::move(eta));
  }

  ElementRep reference_rep(Bimodule const& alpha, ElPtr const& el) {
    auto const& pb = *el->points.base;
    require(pb.num_objects() == alpha.pairs->num_objects()
                && pb.num_morphisms() == alpha.pairs->num_morphisms(),
            ErrorCode::mismatch,
            "reference rep: element category is over another action");
    ElementRep e{el, Rep{el->cat, alpha.flavor(), {}, {}}};
    for (auto [p, x] : el->obj_info) {
      (void) x;
      e.rep.value.push_back(alpha.rep.value[p]);
    }
    for (auto [g, x] : el->mor_info) {
      (void) x;
      e.rep.act.push_back(alpha.rep.act[g]);
    }
    return e;
  }

  RepMap algebra_to_rep(Chi const& c, ElPtr const& el, BimoduleMap const& phi) {
    RepMap out;
    for (std::size_t xo = 0; xo < el->obj_info.size(); ++xo) {
      out.comp.push_back(compose(phi.comp[el->base_of(static_cast<int>(xo))],
                                 c.kan.lambda[xo]));
    }
    return out;
  }

  std::optional<BimoduleMap> algebra_from_rep(Chi const&      c,
                                              ElPtr const&    el,
                                              Bimodule const& alpha,
                                              RepMap const&   psi) {
    return kan_factor(c.kan, el->sigma, alpha.rep, psi.comp);
  }

  LawReport check_monoid_map(Monoid const&      s,
                             Monoid const&      t,
                             BimoduleMap const& phi) {
    LawReport rep;
    rep.merge(check_bimodule_map(s.r, t.r, phi), "naturality: ");
    if (!rep.ok()) {
      return rep;
    }
    int n = s.r.n();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          Mor l = compose(phi.comp[s.r.pair(a, c)], s.g(a, b, c));
          Mor r = compose(t.g(a, b, c),
                          tensor(phi.comp[s.r.pair(a, b)], phi.comp[s.r.pair(b, c)]));
          if (!equal(l, r)) {
            rep.add("multiplication square fails at (" + s.r.action->object_id(a)
                    + ", " + s.r.action->object_id(b) + ", "
                    + s.r.action->object_id(c) + ")");
          }
        }
      }
    }
    if (s.eta && t.eta) {
      for (std::size_t p = 0; p < phi.comp.size(); ++p) {
        if (!equal(compose(phi.comp[p], s.eta->comp[p]), t.eta->comp[p])) {
          rep.add("unit square fails at "
                  + s.r.pairs->object_id(static_cast<int>(p)));
        }
      }
    }
    return rep;
  }

  MonoidAlgebra monoid_algebra_check(DecorationMonoid const& dm,
                                     Chi const&              c,
                                     Monoid const&           chi_m,
                                     Monoid const&           alpha,
                                     BimoduleMap const&      phi) {
    MonoidAlgebra out;
    auto const&   el = dm.d.el;
    auto const&   r  = dm.base.r;
    int           n  = r.n();
    out.psi          = algebra_to_rep(c, el, phi);

    auto sq = check_monoid_map(chi_m, alpha, phi);
    out.chi_square = sq.ok();
    out.report.merge(sq, "χ side: ");

    // ψ(γ_D(u, v)) = γ_α(ψ u, ψ v) on every decorated generator
    out.rep_square = true;
    auto dsize = [&](int a, int b, int x) {
      return static_cast<int>(dm.d.rep.value[el->object(r.pair(a, b), x)].size());
    };
    for (int a = 0; a < n && out.rep_square; ++a) {
      for (int b = 0; b < n && out.rep_square; ++b) {
        for (int cc = 0; cc < n && out.rep_square; ++cc) {
          int nx = static_cast<int>(r.value(a, b).size());
          int ny = static_cast<int>(r.value(b, cc).size());
          int na = static_cast<int>(alpha.r.value(b, cc).size());
          for (int x = 0; x < nx; ++x) {
            for (int y = 0; y < ny; ++y) {
              int xo = el->object(r.pair(a, b), x);
              int yo = el->object(r.pair(b, cc), y);
              int zo = el->object(r.pair(a, cc), dm.base.g(a, b, cc).map[x * ny + y]);
              for (int u = 0; u < dsize(a, b, x); ++u) {
                for (int v = 0; v < dsize(b, cc, y); ++v) {
                  int w   = decoration_product(dm, a, b, cc, x, y, u, v);
                  int lhs = out.psi.comp[zo].map[w];
                  int rhs = alpha.g(a, b, cc).map[out.psi.comp[xo].map[u] * na
                                                  + out.psi.comp[yo].map[v]];
                  if (lhs != rhs && out.rep_square) {
                    out.rep_square = false;
                    out.report.add("rep side: multiplication square fails at "
                                   + el->cat->object_id(zo));
                  }
                }
              }
            }
          }
        }
      }
    }
    out.agree = out.chi_square == out.rep_square;
    if (!out.agree) {
      out.report.add("the two forms of the algebra disagree");
    }
    return out;
  }

  std::vector<Mor> lax_family(ExtendedRep const& e, RepMap const& psi) {
    std::vector<Mor> out;
    for (std::size_t X = 0; X < e.join.words.words.size(); ++X) {
      out.push_back(compose(psi.comp[e.join.mu.obj[X]], e.kan.lambda[X]));
    }
    return out;
  }

  std::optional<RepMap> lax_from_family(ExtendedRep const&      e,
                                        ElementRep const&       e_alpha,
                                        std::vector<Mor> const& family) {
    return kan_factor(e.kan, e.join.mu, e_alpha.rep, family);
  }

  StrongAlgebra strong_algebra_check(ElementRep const& d,
                                     Bimodule const&   nu,
                                     Bimodule const&   alpha,
                                     RepMap const&     psi) {
    StrongAlgebra out;
    out.chi     = chi(d, nu);
    out.e_alpha = reference_rep(alpha, d.el);
    auto nat    = check_repmap(d.rep, out.e_alpha.rep, psi);
    out.report.merge(nat, "D => e_α: ");
    out.phi = algebra_from_rep(out.chi, d.el, alpha, psi);
    if (!out.phi) {
      out.report.add("no induced map χ_D => α");
      return out;
    }
    out.report.merge(check_bimodule_map(out.chi.chi, alpha, *out.phi), "χ_D => α: ");
    auto back = algebra_to_rep(out.chi, d.el, *out.phi);
    for (std::size_t o = 0; o < back.comp.size(); ++o) {
      if (!equal(back.comp[o], psi.comp[o])) {
        out.report.add("round trip differs at " + d.el->cat->object_id(static_cast<int>(o)));
      }
    }
    return out;
  }

  Merger juxtaposition_merger(Rep const& o, Bimodule const& alpha) {
    return [o, alpha](HorizontalExtension const& e) {
      BimoduleMap out;
      int         n = alpha.n();
      for (int P = 0; P < n * n; ++P) {
        int              A = P / n, B = P % n;
        std::size_t      cod = alpha.rep.value[P].size();
        std::vector<Mor> per_block;
        for (std::size_t b = 0; b < e.q[P].num_blocks(); ++b) {
          auto const& blk   = e.blocks[P][b];
          auto        sizes = e.factor_sizes(P, static_cast<int>(b));
          std::size_t total = 1;
          for (auto s : sizes) {
            total *= s;
          }
          Mor m{Flavor::set, total, cod, {}, {}};
          for (std::size_t idx = 0; idx < total; ++idx) {
            auto cs = sizes.empty() ? std::vector<int>{} : tensor_decode(sizes, idx);
            std::vector<Mor> hs;
            for (std::size_t i = 0; i < cs.size(); ++i) {
              hs.push_back(hom_table(o, blk.word[i].first, blk.word[i].second, cs[i]));
            }
            int nm = static_cast<int>(o.base->num_morphisms());
            Mor h  = act_on_table(o, blk.sigma * nm + blk.tau, tensor_all(hs));
            m.map.push_back(hom_index(o, A, B, h));
          }
          per_block.push_back(std::move(m));
        }
        auto f = e.q[P].induce(per_block, cod);
        require(f.has_value(),
                ErrorCode::law_failure,
                "merger is not well defined at " + alpha.pairs->object_id(P));
        out.comp.push_back(*f);
      }
      return out;
    };
  }

  Merger terminal_merger() {
    return [](HorizontalExtension const& e) {
      BimoduleMap out;
      for (auto const& v : e.ext.rep.value) {
        out.comp.push_back(Mor{Flavor::set, v.size(), 1, std::vector<int>(v.size(), 0), {}});
      }
      return out;
    };
  }

  LawReport merger_check(Bimodule const&           alpha,
                         FactorizableAction const& fa,
                         Merger const&             merger,
                         int                       inner,
                         int                       outer,
                         ExtensionOptions const&   base) {
    LawReport rep;
    auto with_cap = [&](int c) {
      auto o             = base;
      o.cap              = c;
      o.allow_truncation = true;
      return o;
    };
    auto compare = [&](std::string const& what, BimoduleMap const& f, BimoduleMap const& g) {
      for (std::size_t p = 0; p < f.comp.size(); ++p) {
        if (!equal(f.comp[p], g.comp[p])) {
          rep.add(what + " fails at " + alpha.pairs->object_id(static_cast<int>(p)));
        }
      }
    };
    auto e1 = horizontal_extension(alpha, fa, with_cap(inner));
    auto m1 = merger(e1);
    rep.merge(check_bimodule_map(e1.ext, alpha, m1), "⊟: ");
    compare("unit law", compose_repmap(m1, extension_unit(e1)), identity_repmap(alpha.rep));

    auto e2 = iterate_extension(e1, with_cap(outer));
    auto e  = horizontal_extension(alpha, fa, with_cap(inner * outer));
    auto t  = horizontal_extension(alpha, fa, with_cap(outer));
    auto mu = extension_flatten(e1, e2, e, rep);
    compare("multiplication law",
            compose_repmap(merger(e), mu),
            compose_repmap(merger(t), extension_map(e2, t, m1)));
    return rep;
  }

  LawReport basic_algebra_check(BasicMonoid const& m,
                                Rep const&         o,
                                ElementRep const&  e_alpha,
                                RepMap const&      x) {
    LawReport   rep;
    auto const& bp  = m.bp;
    auto const& ext = bp.ext;
    auto const& p   = bp.bp.p;
    auto const& eln = *m.d.el;
    auto const& elr = *bp.e1.join.el_rho;
    int         n   = p.r1.n();
    rep.merge(check_repmap(m.d.rep, e_alpha.rep, x), "naturality: ");
    if (!rep.ok()) {
      return rep;
    }
    // ⊟ of a decoded word: juxtapose the letters' tables, then the frame
    auto merged = [&](ExtendedRep const& e, int xo, int k) {
      auto dec = decode_extended(e, m.d, xo, k);
      std::vector<Mor> hs;
      for (std::size_t i = 0; i < dec.letters.size(); ++i) {
        int l  = dec.letters[i];
        int pl = eln.base_of(l);
        hs.push_back(hom_table(o, pl / n, pl % n, x.comp[l].map[dec.elems[i]]));
      }
      return act_on_table(o, dec.frame, tensor_all(hs));
    };
    for (std::size_t zb = 0; zb < bp.incl.obj.size(); ++zb) {
      int zo = bp.incl.obj[zb];
      int w  = bp.el_gamma0.obj[zb];
      int pr = ext.el->base_of(zo);
      int A = pr / n, C = pr % n;
      auto const& q = ext.q[zo];
      Quotient const& cq = p.coend[pr];
      bool ok = true;
      for (std::size_t b = 0; b < q.num_blocks() && ok; ++b) {
        int g         = ext.block_gen[zo][b];
        auto [B, r]   = cq.locate(g);
        int ny        = static_cast<int>(p.r2.value(B, C).size());
        int xo        = elr.object(p.r1.pair(A, B), r / ny);
        int yo        = elr.object(p.r2.pair(B, C), r % ny);
        int sy        = static_cast<int>(bp.e2.rep.rep.value[yo].size());
        std::size_t total = bp.e1.rep.rep.value[xo].size() * static_cast<std::size_t>(sy);
        for (std::size_t idx = 0; idx < total && ok; ++idx) {
          int i1 = static_cast<int>(idx) / sy, i2 = static_cast<int>(idx) % sy;
          int k  = q.class_of(static_cast<int>(b), static_cast<int>(idx));
          int e  = bp.kan.inject(w, static_cast<int>(zb), eln.cat->identity(w),
                                 point(Flavor::set, q.obj.size(), k))
                       .map[0];
          int lhs = x.comp[w].map[m.g.comp[w].map[e]];
          Mor h   = compose(merged(bp.e2, yo, i2), merged(bp.e1, xo, i1));
          int rhs = hom_index(o, A, C, h);
          if (lhs != rhs) {
            ok = false;
            rep.add("multiplication square fails at "
                    + bp.el_beta->cat->object_id(static_cast<int>(zb)));
          }
        }
      }
    }
    return rep;
  }

}  // namespace plethysm
