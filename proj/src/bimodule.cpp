#include "plethysm/bimodule.hpp"

#include <algorithm>
#include <unordered_map>

namespace plethysm {

  namespace {
    // position of each morphism inside its hom list
    std::vector<int> hom_positions(FinCategory const& c) {
      std::vector<int> pos(c.num_morphisms(), -1);
      for (int a = 0; a < static_cast<int>(c.num_objects()); ++a) {
        for (int b = 0; b < static_cast<int>(c.num_objects()); ++b) {
          auto const& h = c.hom(a, b);
          for (std::size_t j = 0; j < h.size(); ++j) {
            pos[h[j]] = static_cast<int>(j);
          }
        }
      }
      return pos;
    }

    std::string pair_name(FinCategory const& c, int a, int b) {
      return "(" + c.object_id(a) + "," + c.object_id(b) + ")";
    }
  }  // namespace

  Bimodule make_bimodule(CatPtr const&                       action,
                         Flavor                              flavor,
                         std::function<Obj(int, int)> const& value,
                         std::function<Mor(int, int)> const& act,
                         std::string                         name) {
    Bimodule r;
    r.action     = action;
    r.pairs      = opposite_product(action, action);
    r.name       = std::move(name);
    r.rep.base   = r.pairs;
    r.rep.flavor = flavor;
    int n        = r.n();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        r.rep.value.push_back(value(a, b));
        require(r.rep.value.back().flavor == flavor,
                ErrorCode::flavor,
                "bimodule value has the wrong flavor");
      }
    }
    int m = static_cast<int>(action->num_morphisms());
    r.rep.act.reserve(static_cast<std::size_t>(m) * m);
    for (int s = 0; s < m; ++s) {
      for (int t = 0; t < m; ++t) {
        r.rep.act.push_back(act(s, t));
      }
    }
    return r;
  }

  Bimodule make_bimodule_lr(CatPtr const&                       action,
                            Flavor                              flavor,
                            std::function<Obj(int, int)> const& value,
                            std::function<Mor(int, int)> const& left,
                            std::function<Mor(int, int)> const& right,
                            std::string                         name) {
    auto const& c = *action;
    return make_bimodule(
        action,
        flavor,
        value,
        [&](int s, int t) {
          // (s|t) = (s|id) o (id|t)
          return compose(left(s, c.tgt(t)), right(c.tgt(s), t));
        },
        std::move(name));
  }

  LawReport check_bimodule(Bimodule const& r) {
    return check_rep(r.rep);
  }

  LawReport check_bimodule_map(Bimodule const&    s,
                               Bimodule const&    t,
                               BimoduleMap const& m) {
    LawReport rep;
    if (m.comp.size() != s.rep.value.size()) {
      rep.add("bimodule map has the wrong number of components");
      return rep;
    }
    for (std::size_t p = 0; p < m.comp.size(); ++p) {
      if (m.comp[p].dom != s.rep.value[p].size()
          || m.comp[p].cod != t.rep.value[p].size()) {
        rep.add("component has the wrong shape at "
                + s.pairs->object_id(static_cast<int>(p)));
        return rep;
      }
    }
    rep.merge(check_repmap(s.rep, t.rep, m));
    return rep;
  }

  Bimodule hom_unit(CatPtr const& a, Flavor flavor) {
    auto const& c   = *a;
    auto        pos = hom_positions(c);
    auto value = [&](int x, int y) {
      Obj o{flavor, {}};
      for (int f : c.hom(x, y)) {
        o.names.push_back(c.morphism(f).id);
      }
      return o;
    };
    auto act = [&](int s, int t) {
      // f : tgt s -> src t  goes to  t o f o s
      int x = c.tgt(s), y = c.src(t);
      Mor m{Flavor::set, c.hom(x, y).size(), c.hom(c.src(s), c.tgt(t)).size(),
            {}, {}};
      for (int f : c.hom(x, y)) {
        m.map.push_back(pos[c.compose(t, c.compose(f, s))]);
      }
      return flavor == Flavor::set ? m : linearize(m);
    };
    return make_bimodule(a, flavor, value, act, "hom");
  }

  Bimodule linearize(Bimodule const& r) {
    if (r.flavor() == Flavor::vect) {
      return r;
    }
    Bimodule out   = r;
    out.rep.flavor = Flavor::vect;
    for (auto& v : out.rep.value) {
      v = linearize(v);
    }
    for (auto& m : out.rep.act) {
      m = linearize(m);
    }
    out.name = "F" + r.name;
    return out;
  }

  Bimodule empty_bimodule(CatPtr const& a, Flavor flavor) {
    return make_bimodule(
        a,
        flavor,
        [&](int, int) { return initial_obj(flavor); },
        [&](int, int) { return identity_mor(flavor, 0); },
        "empty");
  }

  bool same_values(Bimodule const& a, Bimodule const& b) {
    return a.rep.value == b.rep.value;
  }

  // PlethysmResult

  std::tuple<int, int, int> PlethysmResult::lift(int a, int c, int k) const {
    auto [b, g] = at(a, c).section[k];
    int ny      = static_cast<int>(r2.value(b, c).size());
    return {b, g / ny, g % ny};
  }

  Mor PlethysmResult::bracket(int        a,
                              int        b,
                              int        c,
                              Mor const& x,
                              Mor const& y) const {
    return at(a, c).project_point(b, tensor(x, y));
  }

  int PlethysmResult::cls(int a, int b, int c, int x, int y) const {
    int ny = static_cast<int>(r2.value(b, c).size());
    return at(a, c).class_of(b, x * ny + y);
  }

  PlethysmResult plethysm_product(Bimodule const& r1,
                          Bimodule const& r2,
                          CoendMode       mode) {
    require(r1.action == r2.action
                || r1.action->num_objects() == r2.action->num_objects(),
            ErrorCode::mismatch,
            "plethysm: action categories differ");
    require(r1.flavor() == r2.flavor(),
            ErrorCode::flavor,
            "plethysm: flavors differ");
    auto const& c        = *r1.action;
    bool        groupoid = c.is_groupoid();
    require(mode != CoendMode::cocone || groupoid,
            ErrorCode::invalid_argument,
            "cocone relation requested on a non-groupoid action");
    bool   cocone = mode == CoendMode::cocone
                  || (mode == CoendMode::automatic && groupoid);
    Flavor fl     = r1.flavor();
    int    n      = r1.n();
    int    m      = static_cast<int>(c.num_morphisms());

    PlethysmResult res;
    res.r1          = r1;
    res.r2          = r2;
    res.used_cocone = cocone;
    res.coend.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int cc = 0; cc < n; ++cc) {
        QuotientBuilder qb(fl);
        for (int b = 0; b < n; ++b) {
          Obj const& x = r1.value(a, b);
          Obj const& y = r2.value(b, cc);
          Obj        blk{fl, {}};
          blk.names.reserve(x.size() * y.size());
          for (auto const& xn : x.names) {
            for (auto const& yn : y.names) {
              blk.names.push_back("[" + xn + "," + yn + "]");
            }
          }
          qb.add_block(blk);
        }
        for (int s = 0; s < m; ++s) {
          if (c.is_identity(s)) {
            continue;
          }
          int b = c.src(s), b2 = c.tgt(s);
          if (cocone) {
            int si = c.inverse(s);
            qb.relate(b,
                      identity_mor(fl, qb.block_size(b)),
                      b2,
                      tensor(r1.right(a, s), r2.left(si, cc)));
          } else {
            qb.relate(b,
                      tensor(identity_mor(r1.value(a, b)), r2.left(s, cc)),
                      b2,
                      tensor(r1.right(a, s), identity_mor(r2.value(b2, cc))));
          }
        }
        res.coend.push_back(qb.build());
      }
    }
    auto value = [&](int a, int cc) { return res.coend[a * n + cc].obj; };
    auto act   = [&](int s, int t) {
      // s : a' -> a, t : c -> c'
      int              a = c.tgt(s), a2 = c.src(s), c1 = c.src(t),
          c2 = c.tgt(t);
      Quotient const&  q  = res.coend[a * n + c1];
      Quotient const&  q2 = res.coend[a2 * n + c2];
      std::vector<Mor> per_block;
      per_block.reserve(n);
      for (int b = 0; b < n; ++b) {
        per_block.push_back(compose(
            q2.proj_block(b), tensor(r1.left(s, b), r2.right(b, t))));
      }
      return section_map(q, per_block, q2.obj.size());
    };
    res.product = make_bimodule(
        r1.action, fl, value, act, "(" + r1.name + "□" + r2.name + ")");
    return res;
  }

  BimoduleMap plethysm_map(PlethysmResult const& src,
                           PlethysmResult const& tgt,
                           BimoduleMap const&    f,
                           BimoduleMap const&    g) {
    int         n = src.product.n();
    BimoduleMap out;
    for (int a = 0; a < n; ++a) {
      for (int c = 0; c < n; ++c) {
        Quotient const&  q  = src.at(a, c);
        Quotient const&  q2 = tgt.at(a, c);
        std::vector<Mor> per_block;
        for (int b = 0; b < n; ++b) {
          per_block.push_back(
              compose(q2.proj_block(b),
                      tensor(f.comp[a * n + b], g.comp[b * n + c])));
        }
        out.comp.push_back(section_map(q, per_block, q2.obj.size()));
      }
    }
    return out;
  }

  BimoduleMap descend(PlethysmResult const&                    p,
                      Bimodule const&                          t,
                      std::function<Mor(int, int, int)> const& on_reps,
                      LawReport&                               report) {
    int         n  = p.product.n();
    auto const& c  = *p.product.action;
    BimoduleMap out;
    for (int a = 0; a < n; ++a) {
      for (int cc = 0; cc < n; ++cc) {
        std::vector<Mor> per_block;
        for (int b = 0; b < n; ++b) {
          per_block.push_back(on_reps(a, b, cc));
        }
        std::size_t cod = t.value(a, cc).size();
        auto        ind = p.at(a, cc).induce(per_block, cod);
        if (!ind) {
          report.add("map depends on representatives at "
                     + pair_name(c, a, cc));
          out.comp.push_back(section_map(p.at(a, cc), per_block, cod));
        } else {
          out.comp.push_back(std::move(*ind));
        }
      }
    }
    return out;
  }

  Associator associator(Bimodule const& r1,
                        Bimodule const& r2,
                        Bimodule const& r3) {
    Associator as;
    as.p12   = plethysm_product(r1, r2);
    as.p12_3 = plethysm_product(as.p12.product, r3);
    as.p23   = plethysm_product(r2, r3);
    as.p1_23 = plethysm_product(r1, as.p23.product);
    Flavor fl = r1.flavor();
    int    n  = r1.n();
    for (int a = 0; a < n; ++a) {
      for (int d = 0; d < n; ++d) {
        std::vector<Mor> pts;
        std::size_t      sz = as.p12_3.product.value(a, d).size();
        for (std::size_t k = 0; k < sz; ++k) {
          auto [c, z, w] = as.p12_3.lift(a, d, static_cast<int>(k));
          auto [b, x, y] = as.p12.lift(a, c, z);
          Mor yw         = as.p23.bracket(
              b,
              c,
              d,
              point(fl, r2.value(b, c).size(), y),
              point(fl, r3.value(c, d).size(), w));
          pts.push_back(as.p1_23.bracket(
              a, b, d, point(fl, r1.value(a, b).size(), x), yw));
        }
        as.map.comp.push_back(
            from_points(fl, as.p1_23.product.value(a, d).size(), pts));
      }
    }
    return as;
  }

  Unitor left_unitor(Bimodule const& r) {
    Unitor u;
    u.unit      = hom_unit(r.action, r.flavor());
    u.p         = plethysm_product(u.unit, r);
    auto const& c = *r.action;
    int         n = r.n();
    for (int a = 0; a < n; ++a) {
      for (int cc = 0; cc < n; ++cc) {
        std::vector<Mor> pts;
        std::size_t      sz = u.p.product.value(a, cc).size();
        for (std::size_t k = 0; k < sz; ++k) {
          auto [b, f, y] = u.p.lift(a, cc, static_cast<int>(k));
          int fm         = c.hom(a, b)[f];
          pts.push_back(apply(r.left(fm, cc),
                              point(r.flavor(), r.value(b, cc).size(), y)));
        }
        u.map.comp.push_back(
            from_points(r.flavor(), r.value(a, cc).size(), pts));
      }
    }
    return u;
  }

  Unitor right_unitor(Bimodule const& r) {
    Unitor u;
    u.unit      = hom_unit(r.action, r.flavor());
    u.p         = plethysm_product(r, u.unit);
    auto const& c = *r.action;
    int         n = r.n();
    for (int a = 0; a < n; ++a) {
      for (int cc = 0; cc < n; ++cc) {
        std::vector<Mor> pts;
        std::size_t      sz = u.p.product.value(a, cc).size();
        for (std::size_t k = 0; k < sz; ++k) {
          auto [b, x, g] = u.p.lift(a, cc, static_cast<int>(k));
          int gm         = c.hom(b, cc)[g];
          pts.push_back(apply(r.right(a, gm),
                              point(r.flavor(), r.value(a, b).size(), x)));
        }
        u.map.comp.push_back(
            from_points(r.flavor(), r.value(a, cc).size(), pts));
      }
    }
    return u;
  }

  namespace {
    void check_iso_natural(LawReport&         rep,
                           std::string const& what,
                           Bimodule const&    s,
                           Bimodule const&    t,
                           BimoduleMap const& m) {
      if (!is_iso(m)) {
        rep.add(what + " is not invertible");
      }
      rep.merge(check_bimodule_map(s, t, m), what + ": ");
    }
  }  // namespace

  LawReport check_constraints(Bimodule const& r1,
                              Bimodule const& r2,
                              Bimodule const& r3) {
    LawReport rep;
    auto      as = associator(r1, r2, r3);
    check_iso_natural(
        rep, "associator", as.p12_3.product, as.p1_23.product, as.map);
    for (Bimodule const* r : {&r1, &r2, &r3}) {
      auto l = left_unitor(*r);
      check_iso_natural(rep, "left unitor " + r->name, l.p.product, *r, l.map);
      auto rr = right_unitor(*r);
      check_iso_natural(
          rep, "right unitor " + r->name, rr.p.product, *r, rr.map);
    }
    return rep;
  }

  LawReport check_pentagon(Bimodule const& r1,
                           Bimodule const& r2,
                           Bimodule const& r3,
                           Bimodule const& r4) {
    LawReport rep;
    auto      p12 = plethysm_product(r1, r2);
    auto      p34 = plethysm_product(r3, r4);
    auto      p23 = plethysm_product(r2, r3);
    auto      A   = associator(p12.product, r3, r4);  // ((12)3)4 -> (12)(34)
    auto      B   = associator(r1, r2, p34.product);  // (12)(34) -> 1(2(34))
    auto      C   = associator(r1, r2, r3);           // (12)3 -> 1(23)
    auto      D   = associator(r1, p23.product, r4);  // (1(23))4 -> 1((23)4)
    auto      E   = associator(r2, r3, r4);           // (23)4 -> 2(34)
    if (!same_values(A.p1_23.product, B.p12_3.product)
        || !same_values(A.p12_3.product, plethysm_product(C.p12_3.product, r4).product)
        || !same_values(D.p1_23.product, plethysm_product(r1, E.p12_3.product).product)
        || !same_values(B.p1_23.product, plethysm_product(r1, E.p1_23.product).product)) {
      rep.add("pentagon: intermediate products disagree");
      return rep;
    }
    auto c_id = plethysm_map(
        A.p12_3, D.p12_3, C.map, identity_repmap(r4.rep));
    auto id_e = plethysm_map(
        D.p1_23, B.p1_23, identity_repmap(r1.rep), E.map);
    auto lhs = compose_repmap(B.map, A.map);
    auto rhs = compose_repmap(id_e, compose_repmap(D.map, c_id));
    for (std::size_t p = 0; p < lhs.comp.size(); ++p) {
      if (!equal(lhs.comp[p], rhs.comp[p])) {
        rep.add("pentagon fails at "
                + A.p12_3.product.pairs->object_id(static_cast<int>(p)));
      }
    }
    return rep;
  }

  LawReport check_triangle(Bimodule const& r1, Bimodule const& r2) {
    LawReport rep;
    auto      unit = hom_unit(r1.action, r1.flavor());
    auto      as   = associator(r1, unit, r2);  // (r1 I) r2 -> r1 (I r2)
    auto      lu   = left_unitor(r2);
    auto      ru   = right_unitor(r1);
    auto      p    = plethysm_product(r1, r2);
    auto      top  = plethysm_map(
        as.p1_23, p, identity_repmap(r1.rep), lu.map);
    auto side = plethysm_map(as.p12_3, p, ru.map, identity_repmap(r2.rep));
    auto lhs  = compose_repmap(top, as.map);
    for (std::size_t i = 0; i < lhs.comp.size(); ++i) {
      if (!equal(lhs.comp[i], side.comp[i])) {
        rep.add("triangle fails at "
                + p.product.pairs->object_id(static_cast<int>(i)));
      }
    }
    return rep;
  }

  // Monoids

  Monoid make_monoid(Bimodule                                 r,
                     std::function<Mor(int, int, int)> const& gamma,
                     std::optional<BimoduleMap>               eta) {
    Monoid m{std::move(r), {}, std::move(eta)};
    int    n = m.r.n();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          m.gamma.push_back(gamma(a, b, c));
        }
      }
    }
    return m;
  }

  BimoduleMap unit_from_identities(Bimodule const&         r,
                                   std::vector<Mor> const& pts) {
    auto const& c = *r.action;
    int         n = r.n();
    BimoduleMap eta;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        std::vector<Mor> cols;
        for (int f : c.hom(a, b)) {
          cols.push_back(apply(r.right(a, f), pts[a]));
        }
        eta.comp.push_back(from_points(r.flavor(), r.value(a, b).size(), cols));
      }
    }
    return eta;
  }

  BimoduleMap gamma_on_classes(Monoid const& m, PlethysmResult const& rr) {
    LawReport dummy;
    return descend(rr, m.r, [&](int a, int b, int c) { return m.g(a, b, c); },
                   dummy);
  }

  namespace {
    std::string first_difference(Mor const&         lhs,
                                 Mor const&         rhs,
                                 std::vector<Obj> const& factors) {
      if (lhs.flavor != Flavor::set) {
        return "";
      }
      std::vector<std::size_t> sizes;
      for (auto const& f : factors) {
        sizes.push_back(f.size());
      }
      for (std::size_t i = 0; i < lhs.map.size(); ++i) {
        if (lhs.map[i] != rhs.map[i]) {
          auto                     parts = tensor_decode(sizes, i);
          std::vector<std::string> ns;
          for (std::size_t k = 0; k < factors.size(); ++k) {
            ns.push_back(factors[k].names[parts[k]]);
          }
          return " on " + tuple_name(ns);
        }
      }
      return "";
    }
  }  // namespace

  LawReport check_monoid(Monoid const& m) {
    LawReport   rep;
    auto const& r = m.r;
    auto const& c = *r.action;
    int         n = r.n();
    rep.merge(check_bimodule(r), "bimodule: ");
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int d = 0; d < n; ++d) {
          Mor const& g = m.g(a, b, d);
          if (g.dom != r.value(a, b).size() * r.value(b, d).size()
              || g.cod != r.value(a, d).size() || g.flavor != r.flavor()) {
            rep.add("gamma has the wrong shape at (" + c.object_id(a) + ","
                    + c.object_id(b) + "," + c.object_id(d) + ")");
            return rep;
          }
        }
      }
    }
    auto rr   = plethysm_product(r, r);
    auto gbar = descend(
        rr, r, [&](int a, int b, int d) { return m.g(a, b, d); }, rep);
    rep.merge(check_bimodule_map(rr.product, r, gbar), "gamma: ");
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int cc = 0; cc < n; ++cc) {
          for (int d = 0; d < n; ++d) {
            Mor lhs = compose(
                m.g(a, cc, d),
                tensor(m.g(a, b, cc), identity_mor(r.value(cc, d))));
            Mor rhs = compose(
                m.g(a, b, d),
                tensor(identity_mor(r.value(a, b)), m.g(b, cc, d)));
            if (!equal(lhs, rhs)) {
              rep.add("associativity fails at (" + c.object_id(a) + ","
                      + c.object_id(b) + "," + c.object_id(cc) + ","
                      + c.object_id(d) + ")"
                      + first_difference(
                          lhs,
                          rhs,
                          {r.value(a, b), r.value(b, cc), r.value(cc, d)}));
            }
          }
        }
      }
    }
    if (!m.eta) {
      return rep;
    }
    auto unit = hom_unit(r.action, r.flavor());
    rep.merge(check_bimodule_map(unit, r, *m.eta), "unit: ");
    if (!rep.ok()) {
      return rep;
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int cc = 0; cc < n; ++cc) {
          auto const& hab = c.hom(a, b);
          if (!hab.empty() && r.value(b, cc).size() > 0) {
            std::vector<Mor> fam;
            for (int f : hab) {
              fam.push_back(r.left(f, cc));
            }
            Mor lhs = compose(m.g(a, b, cc),
                              tensor(m.eta->comp[r.pair(a, b)],
                                     identity_mor(r.value(b, cc))));
            if (!equal(lhs, copower_untranspose(fam))) {
              rep.add("left unit law fails at (" + c.object_id(a) + ","
                      + c.object_id(b) + "," + c.object_id(cc) + ")");
            }
          }
          auto const& hbc = c.hom(b, cc);
          if (!hbc.empty() && r.value(a, b).size() > 0) {
            std::vector<Mor> fam;
            for (int g : hbc) {
              fam.push_back(r.right(a, g));
            }
            Mor rhs = compose(
                copower_untranspose(fam),
                tensor_swap(r.flavor(), r.value(a, b).size(), hbc.size()));
            Mor lhs = compose(m.g(a, b, cc),
                              tensor(identity_mor(r.value(a, b)),
                                     m.eta->comp[r.pair(b, cc)]));
            if (!equal(lhs, rhs)) {
              rep.add("right unit law fails at (" + c.object_id(a) + ","
                      + c.object_id(b) + "," + c.object_id(cc) + ")");
            }
          }
        }
      }
    }
    return rep;
  }

  CategoryWithInclusion category_from_monoid(Monoid const& m) {
    require(m.r.flavor() == Flavor::set,
            ErrorCode::flavor,
            "category_from_monoid needs a FinSet monoid");
    require(m.eta.has_value(),
            ErrorCode::invalid_argument,
            "category_from_monoid needs a unital monoid");
    auto const& r  = m.r;
    auto const& a  = *r.action;
    int         n  = r.n();
    auto        k  = std::make_shared<FinCategory>();
    k->name        = "K(" + r.name + ")";
    for (int o = 0; o < n; ++o) {
      k->add_object(a.object_id(o));
    }
    std::vector<int> base(static_cast<std::size_t>(n) * n);
    std::vector<int> mor_pair, mor_idx;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        base[x * n + y] = static_cast<int>(k->num_morphisms());
        auto const& v   = r.value(x, y);
        for (std::size_t e = 0; e < v.size(); ++e) {
          k->add_morphism(pair_name(a, x, y) + ":" + v.names[e], x, y);
          mor_pair.push_back(x * n + y);
          mor_idx.push_back(static_cast<int>(e));
        }
      }
    }
    auto pos = hom_positions(a);
    for (int o = 0; o < n; ++o) {
      int id = a.identity(o);
      k->set_identity(
          o, base[o * n + o] + m.eta->comp[o * n + o].map[pos[id]]);
    }
    k->finalize([&](int g, int f) {
      int x = mor_pair[f] / n, y = mor_pair[f] % n;
      int y2 = mor_pair[g] / n, z = mor_pair[g] % n;
      if (y != y2) {
        return -1;
      }
      std::size_t nz = r.value(y, z).size();
      int         e  = m.g(x, y, z).map[mor_idx[f] * nz + mor_idx[g]];
      return base[x * n + z] + e;
    });
    Functor i{r.action, k, {}, {}};
    for (int o = 0; o < n; ++o) {
      i.obj.push_back(o);
    }
    for (int s = 0; s < static_cast<int>(a.num_morphisms()); ++s) {
      int x = a.src(s), y = a.tgt(s);
      i.mor.push_back(base[x * n + y] + m.eta->comp[x * n + y].map[pos[s]]);
    }
    return {k, i};
  }

  Monoid monoid_from_category(CatPtr const& a, Functor const& i) {
    auto const& k = *i.tgt;
    require(k.num_objects() == a->num_objects(),
            ErrorCode::invalid_argument,
            "inclusion is not identity on objects");
    for (int o = 0; o < static_cast<int>(a->num_objects()); ++o) {
      require(i.obj[o] == o,
              ErrorCode::invalid_argument,
              "inclusion is not identity on objects");
    }
    auto pos = hom_positions(k);
    auto r   = make_bimodule(
        a,
        Flavor::set,
        [&](int x, int y) {
          Obj o{Flavor::set, {}};
          for (int f : k.hom(x, y)) {
            o.names.push_back(k.morphism(f).id);
          }
          return o;
        },
        [&](int s, int t) {
          int x = a->tgt(s), y = a->src(t);
          Mor m{Flavor::set, k.hom(x, y).size(),
                k.hom(a->src(s), a->tgt(t)).size(), {}, {}};
          for (int f : k.hom(x, y)) {
            m.map.push_back(
                pos[k.compose(i.mor[t], k.compose(f, i.mor[s]))]);
          }
          return m;
        },
        k.name.empty() ? "K" : k.name);
    BimoduleMap eta;
    int         n = r.n();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        Mor m{Flavor::set, a->hom(x, y).size(), k.hom(x, y).size(), {}, {}};
        for (int s : a->hom(x, y)) {
          m.map.push_back(pos[i.mor[s]]);
        }
        eta.comp.push_back(std::move(m));
      }
    }
    return make_monoid(
        std::move(r),
        [&](int x, int y, int z) {
          auto const& hxy = k.hom(x, y);
          auto const& hyz = k.hom(y, z);
          Mor m{Flavor::set, hxy.size() * hyz.size(), k.hom(x, z).size(), {},
                {}};
          for (int f : hxy) {
            for (int g : hyz) {
              m.map.push_back(pos[k.compose(g, f)]);
            }
          }
          return m;
        },
        std::move(eta));
  }

  LawReport check_category_roundtrip(CatPtr const& a, Functor const& i) {
    LawReport rep;
    auto      m = monoid_from_category(a, i);
    rep.merge(check_monoid(m), "canonical monoid: ");
    if (!rep.ok()) {
      return rep;
    }
    auto        cw = category_from_monoid(m);
    auto const& k  = *i.tgt;
    auto const& k2 = *cw.k;
    if (k2.num_morphisms() != k.num_morphisms()) {
      rep.add("round trip changes the number of morphisms");
      return rep;
    }
    // K morphism f at position j of hom(x, y) corresponds to the j-th
    // morphism of K2 over (x, y)
    int              n = static_cast<int>(k.num_objects());
    std::vector<int> phi(k.num_morphisms(), -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        auto const& h  = k.hom(x, y);
        auto const& h2 = k2.hom(x, y);
        if (h.size() != h2.size()) {
          rep.add("round trip changes a hom-set size");
          return rep;
        }
        for (std::size_t j = 0; j < h.size(); ++j) {
          phi[h[j]] = h2[j];
        }
      }
    }
    for (int f = 0; f < static_cast<int>(k.num_morphisms()); ++f) {
      for (int g : k.out(k.tgt(f))) {
        if (phi[k.compose(g, f)] != k2.compose(phi[g], phi[f])) {
          rep.add("round trip breaks composition at " + k.morphism(g).id
                  + " o " + k.morphism(f).id);
        }
      }
    }
    for (int s = 0; s < static_cast<int>(a->num_morphisms()); ++s) {
      if (phi[i.mor[s]] != cw.i.mor[s]) {
        rep.add("round trip changes the inclusion at "
                + a->morphism(s).id);
      }
    }
    return rep;
  }

  LawReport check_monoid_roundtrip(Monoid const& m) {
    LawReport rep;
    auto      cw = category_from_monoid(m);
    rep.merge(validate_category(*cw.k), "K: ");
    rep.merge(check_functor(cw.i), "inclusion: ");
    if (!rep.ok()) {
      return rep;
    }
    auto m2 = monoid_from_category(m.r.action, cw.i);
    for (std::size_t p = 0; p < m.r.rep.value.size(); ++p) {
      if (m.r.rep.value[p].size() != m2.r.rep.value[p].size()) {
        rep.add("round trip changes value sizes");
        return rep;
      }
    }
    for (std::size_t j = 0; j < m.r.rep.act.size(); ++j) {
      if (!equal(m.r.rep.act[j], m2.r.rep.act[j])) {
        rep.add("round trip changes the action at "
                + m.r.pairs->morphism(static_cast<int>(j)).id);
      }
    }
    for (std::size_t j = 0; j < m.gamma.size(); ++j) {
      if (!equal(m.gamma[j], m2.gamma[j])) {
        rep.add("round trip changes gamma");
        break;
      }
    }
    for (std::size_t p = 0; p < m.eta->comp.size(); ++p) {
      if (!equal(m.eta->comp[p], m2.eta->comp[p])) {
        rep.add("round trip changes the unit");
        break;
      }
    }
    return rep;
  }

  Monoid linearize(Monoid const& m) {
    Monoid out;
    out.r = linearize(m.r);
    for (auto const& g : m.gamma) {
      out.gamma.push_back(linearize(g));
    }
    if (m.eta) {
      BimoduleMap e;
      for (auto const& c : m.eta->comp) {
        e.comp.push_back(linearize(c));
      }
      out.eta = e;
    }
    return out;
  }

  std::pair<Bimodule, BimoduleMap> sub_bimodule(
      Bimodule const&                           r,
      std::function<bool(int, int, int)> const& keep,
      std::string const&                        name) {
    int                           n = r.n();
    std::vector<std::vector<int>> sel(n * n);
    std::vector<std::vector<int>> back(n * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int p = r.pair(a, b);
        back[p].assign(r.value(a, b).size(), -1);
        for (int e = 0; e < static_cast<int>(r.value(a, b).size()); ++e) {
          if (keep(a, b, e)) {
            back[p][e] = static_cast<int>(sel[p].size());
            sel[p].push_back(e);
          }
        }
      }
    }
    auto const& c   = *r.action;
    Bimodule    sub = make_bimodule(
        r.action,
        Flavor::set,
        [&](int a, int b) {
          Obj o{Flavor::set, {}};
          for (int e : sel[r.pair(a, b)]) {
            o.names.push_back(r.value(a, b).names[e]);
          }
          return o;
        },
        [&](int s, int t) {
          int from = r.pair(c.tgt(s), c.src(t));
          int to   = r.pair(c.src(s), c.tgt(t));
          Mor m{Flavor::set, sel[from].size(), sel[to].size(), {}, {}};
          for (int e : sel[from]) {
            int img = back[to][r.act(s, t).map[e]];
            require(img >= 0,
                    ErrorCode::invalid_argument,
                    "sub-bimodule not closed under the action");
            m.map.push_back(img);
          }
          return m;
        },
        name);
    BimoduleMap incl;
    for (std::size_t p = 0; p < sel.size(); ++p) {
      incl.comp.push_back(Mor{Flavor::set, sel[p].size(),
                              r.rep.value[p].size(), sel[p], {}});
    }
    return {sub, incl};
  }

}  // namespace plethysm
