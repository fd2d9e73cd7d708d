#include "plethysm/corecat.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>

namespace plethysm {

  namespace {
    std::atomic<std::size_t> g_morphism_cap{10000};

    std::int64_t key2(int a, int b) {
      return (static_cast<std::int64_t>(a) << 32)
             | static_cast<std::uint32_t>(b);
    }
  }  // namespace

  std::size_t morphism_cap() noexcept {
    return g_morphism_cap.load();
  }
  void set_morphism_cap(std::size_t cap) noexcept {
    g_morphism_cap.store(cap);
  }

  std::vector<int> const FinCategory::_empty;

  int FinCategory::add_object(std::string id) {
    require(!_finalized, ErrorCode::invalid_argument, "category finalized");
    require(_obj_index.count(id) == 0,
            ErrorCode::invalid_argument,
            "duplicate object id " + id);
    int o = static_cast<int>(_objects.size());
    _obj_index.emplace(id, o);
    _objects.push_back(std::move(id));
    _identity.push_back(-1);
    return o;
  }

  int FinCategory::add_morphism(std::string id, int s, int t) {
    require(!_finalized, ErrorCode::invalid_argument, "category finalized");
    require(s >= 0 && t >= 0 && s < static_cast<int>(_objects.size())
                && t < static_cast<int>(_objects.size()),
            ErrorCode::invalid_argument,
            "morphism " + id + " has unknown endpoint");
    require(_mor_index.count(id) == 0,
            ErrorCode::invalid_argument,
            "duplicate morphism id " + id);
    if (_mors.size() + 1 > morphism_cap()) {
      fail(ErrorCode::size_cap,
           "category exceeds morphism cap " + std::to_string(morphism_cap()));
    }
    int m = static_cast<int>(_mors.size());
    _mor_index.emplace(id, m);
    _mors.push_back({std::move(id), s, t});
    return m;
  }

  void FinCategory::set_identity(int obj, int mor) {
    require(_mors.at(mor).src == obj && _mors.at(mor).tgt == obj,
            ErrorCode::invalid_argument,
            "identity must be an endomorphism");
    _identity.at(obj) = mor;
  }

  void FinCategory::finalize(std::function<int(int, int)> const& comp) {
    for (std::size_t o = 0; o < _objects.size(); ++o) {
      require(_identity[o] >= 0,
              ErrorCode::invalid_argument,
              "object " + _objects[o] + " has no identity");
    }
    _out.assign(_objects.size(), {});
    _outpos.assign(_mors.size(), 0);
    for (int m = 0; m < static_cast<int>(_mors.size()); ++m) {
      auto& lst  = _out[_mors[m].src];
      _outpos[m] = static_cast<int>(lst.size());
      lst.push_back(m);
      _hom[key2(_mors[m].src, _mors[m].tgt)].push_back(m);
    }
    _post.assign(_mors.size(), {});
    for (int f = 0; f < static_cast<int>(_mors.size()); ++f) {
      auto const& nxt = _out[_mors[f].tgt];
      _post[f].resize(nxt.size());
      for (std::size_t i = 0; i < nxt.size(); ++i) {
        int h = comp(nxt[i], f);
        if (h >= 0
            && (_mors.at(h).src != _mors[f].src
                || _mors[h].tgt != _mors[nxt[i]].tgt)) {
          fail(ErrorCode::invalid_argument,
               "composite " + _mors[nxt[i]].id + " o " + _mors[f].id
                   + " has wrong endpoints");
        }
        _post[f][i] = h;
      }
    }
    _inverse.assign(_mors.size(), -2);
    _finalized = true;
  }

  int FinCategory::try_compose(int g, int f) const noexcept {
    if (_mors[g].src != _mors[f].tgt) {
      return -1;
    }
    return _post[f][_outpos[g]];
  }

  int FinCategory::compose(int g, int f) const {
    int h = try_compose(g, f);
    if (h < 0) {
      fail(ErrorCode::invalid_argument,
           "cannot compose " + _mors[g].id + " o " + _mors[f].id);
    }
    return h;
  }

  std::vector<int> const& FinCategory::hom(int a, int b) const {
    auto it = _hom.find(key2(a, b));
    return it == _hom.end() ? _empty : it->second;
  }

  int FinCategory::find_object(std::string const& id) const {
    auto it = _obj_index.find(id);
    return it == _obj_index.end() ? -1 : it->second;
  }

  int FinCategory::find_morphism(std::string const& id) const {
    auto it = _mor_index.find(id);
    return it == _mor_index.end() ? -1 : it->second;
  }

  int FinCategory::inverse(int f) const {
    // The cache is a pure function of immutable data; a racing fill
    // writes the same value.
    auto& cache = const_cast<std::vector<int>&>(_inverse);
    if (cache[f] != -2) {
      return cache[f];
    }
    int result = -1;
    int s = _mors[f].src, t = _mors[f].tgt;
    for (int g : hom(t, s)) {
      if (try_compose(g, f) == _identity[s]
          && try_compose(f, g) == _identity[t]) {
        result = g;
        break;
      }
    }
    cache[f] = result;
    return result;
  }

  bool FinCategory::is_groupoid() const {
    for (int m = 0; m < static_cast<int>(_mors.size()); ++m) {
      if (inverse(m) < 0) {
        return false;
      }
    }
    return true;
  }

  LawReport validate_category(FinCategory const& c) {
    LawReport r;
    int       n = static_cast<int>(c.num_morphisms());
    for (int f = 0; f < n; ++f) {
      int s = c.src(f), t = c.tgt(f);
      if (c.try_compose(f, c.identity(s)) != f) {
        r.add("left identity fails: " + c.morphism(f).id + " o id_"
              + c.object_id(s));
      }
      if (c.try_compose(c.identity(t), f) != f) {
        r.add("right identity fails: id_" + c.object_id(t) + " o "
              + c.morphism(f).id);
      }
      for (int g : c.out(t)) {
        int gf = c.try_compose(g, f);
        if (gf < 0) {
          r.add("missing composite " + c.morphism(g).id + " o "
                + c.morphism(f).id);
          continue;
        }
        for (int h : c.out(c.tgt(g))) {
          int hg = c.try_compose(h, g);
          if (hg < 0) {
            continue;
          }
          int lhs = c.try_compose(h, gf);
          int rhs = c.try_compose(hg, f);
          if (lhs != rhs || lhs < 0) {
            r.add("associativity fails: (" + c.morphism(h).id + ", "
                  + c.morphism(g).id + ", " + c.morphism(f).id + ")");
          }
        }
      }
    }
    return r;
  }

  LawReport check_functor(Functor const& f) {
    LawReport r;
    auto const& s = *f.src;
    auto const& t = *f.tgt;
    if (f.obj.size() != s.num_objects() || f.mor.size() != s.num_morphisms()) {
      r.add("functor maps have wrong size");
      return r;
    }
    for (int o = 0; o < static_cast<int>(s.num_objects()); ++o) {
      if (f.mor[s.identity(o)] != t.identity(f.obj[o])) {
        r.add("identity not preserved at " + s.object_id(o));
      }
    }
    for (int m = 0; m < static_cast<int>(s.num_morphisms()); ++m) {
      int fm = f.mor[m];
      if (t.src(fm) != f.obj[s.src(m)] || t.tgt(fm) != f.obj[s.tgt(m)]) {
        r.add("endpoints not preserved at " + s.morphism(m).id);
        continue;
      }
      for (int g : s.out(s.tgt(m))) {
        int gm = s.try_compose(g, m);
        if (gm < 0) {
          continue;
        }
        if (t.try_compose(f.mor[g], fm) != f.mor[gm]) {
          r.add("composition not preserved at " + s.morphism(g).id + " o "
                + s.morphism(m).id);
        }
      }
    }
    return r;
  }

  LawReport check_nat(NatTrans const& n) {
    LawReport r;
    auto const& s = *n.from.src;
    auto const& t = *n.from.tgt;
    for (int o = 0; o < static_cast<int>(s.num_objects()); ++o) {
      int c = n.comp[o];
      if (t.src(c) != n.from.obj[o] || t.tgt(c) != n.to.obj[o]) {
        r.add("component at " + s.object_id(o) + " has wrong endpoints");
      }
    }
    if (!r.ok()) {
      return r;
    }
    for (int m = 0; m < static_cast<int>(s.num_morphisms()); ++m) {
      int a = s.src(m), b = s.tgt(m);
      int lhs = t.try_compose(n.comp[b], n.from.mor[m]);
      int rhs = t.try_compose(n.to.mor[m], n.comp[a]);
      if (lhs != rhs || lhs < 0) {
        r.add("naturality square fails at " + s.morphism(m).id);
      }
    }
    return r;
  }

  CatPtr opposite_product(CatPtr const& c, CatPtr const& d) {
    auto out  = std::make_shared<FinCategory>();
    out->name = c->name + "^op x " + d->name;
    int nco = static_cast<int>(c->num_objects());
    int ndo = static_cast<int>(d->num_objects());
    int ndm = static_cast<int>(d->num_morphisms());
    int ncm = static_cast<int>(c->num_morphisms());
    for (int a = 0; a < nco; ++a) {
      for (int b = 0; b < ndo; ++b) {
        out->add_object("(" + c->object_id(a) + "," + d->object_id(b) + ")");
      }
    }
    for (int f = 0; f < ncm; ++f) {
      for (int g = 0; g < ndm; ++g) {
        out->add_morphism("(" + c->morphism(f).id + "|" + d->morphism(g).id
                              + ")",
                          c->tgt(f) * ndo + d->src(g),
                          c->src(f) * ndo + d->tgt(g));
      }
    }
    for (int a = 0; a < nco; ++a) {
      for (int b = 0; b < ndo; ++b) {
        out->set_identity(a * ndo + b,
                          c->identity(a) * ndm + d->identity(b));
      }
    }
    out->finalize([&](int h2, int h1) {
      int f1 = h1 / ndm, g1 = h1 % ndm;
      int f2 = h2 / ndm, g2 = h2 % ndm;
      int f  = c->try_compose(f1, f2);
      int g  = d->try_compose(g2, g1);
      return (f < 0 || g < 0) ? -1 : f * ndm + g;
    });
    return out;
  }

  CommaCategory comma_category(Functor const& F, Functor const& G) {
    require(F.tgt == G.tgt || F.tgt->name == G.tgt->name,
            ErrorCode::mismatch,
            "comma category: functors have different codomains");
    auto const& X  = *F.tgt;
    auto const& A  = *F.src;
    auto const& B  = *G.src;
    auto        cc = std::make_shared<FinCategory>();
    cc->name       = "(" + A.name + " | " + B.name + ")";
    CommaCategory result;
    std::unordered_map<std::int64_t, std::vector<int>> by_ab;
    for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
      for (int b = 0; b < static_cast<int>(B.num_objects()); ++b) {
        for (int m : X.hom(F.obj[a], G.obj[b])) {
          int o = cc->add_object("(" + A.object_id(a) + "," + B.object_id(b)
                                 + "," + X.morphism(m).id + ")");
          result.objects.emplace_back(a, b, m);
          by_ab[key2(a, b)].push_back(o);
        }
      }
    }
    std::vector<std::pair<int, int>> morpairs;
    for (int o = 0; o < static_cast<int>(result.objects.size()); ++o) {
      auto [a, b, m] = result.objects[o];
      for (int h : A.out(a)) {
        for (int k : B.out(b)) {
          int lhs = X.compose(G.mor[k], m);
          auto it = by_ab.find(key2(A.tgt(h), B.tgt(k)));
          if (it == by_ab.end()) {
            continue;
          }
          for (int o2 : it->second) {
            int m2 = std::get<2>(result.objects[o2]);
            if (X.compose(m2, F.mor[h]) == lhs) {
              cc->add_morphism("(" + A.morphism(h).id + "," + B.morphism(k).id
                                   + ")@" + cc->object_id(o),
                               o,
                               o2);
              morpairs.emplace_back(h, k);
            }
          }
        }
      }
    }
    // identities and composition via component lookup
    std::vector<std::map<std::tuple<int, int, int>, int>> lookup(
        result.objects.size());
    for (int e = 0; e < static_cast<int>(morpairs.size()); ++e) {
      lookup[cc->morphism(e).src][{morpairs[e].first,
                                   morpairs[e].second,
                                   cc->morphism(e).tgt}]
          = e;
    }
    for (int o = 0; o < static_cast<int>(result.objects.size()); ++o) {
      auto [a, b, m] = result.objects[o];
      cc->set_identity(o, lookup[o].at({A.identity(a), B.identity(b), o}));
    }
    cc->finalize([&](int e2, int e1) {
      int h = A.try_compose(morpairs[e2].first, morpairs[e1].first);
      int k = B.try_compose(morpairs[e2].second, morpairs[e1].second);
      if (h < 0 || k < 0) {
        return -1;
      }
      auto const& lk = lookup[cc->morphism(e1).src];
      auto        it = lk.find({h, k, cc->morphism(e2).tgt});
      return it == lk.end() ? -1 : it->second;
    });
    result.cat = cc;
    result.proj_src.src = cc;
    result.proj_src.tgt = F.src;
    result.proj_tgt.src = cc;
    result.proj_tgt.tgt = G.src;
    for (auto const& [a, b, m] : result.objects) {
      result.proj_src.obj.push_back(a);
      result.proj_tgt.obj.push_back(b);
    }
    for (auto const& [h, k] : morpairs) {
      result.proj_src.mor.push_back(h);
      result.proj_tgt.mor.push_back(k);
    }
    return result;
  }

  Functor identity_functor(CatPtr const& c) {
    Functor f{c, c, {}, {}};
    f.obj.resize(c->num_objects());
    std::iota(f.obj.begin(), f.obj.end(), 0);
    f.mor.resize(c->num_morphisms());
    std::iota(f.mor.begin(), f.mor.end(), 0);
    return f;
  }

  Functor compose_functors(Functor const& g, Functor const& f) {
    Functor h{f.src, g.tgt, {}, {}};
    for (int o : f.obj) {
      h.obj.push_back(g.obj[o]);
    }
    for (int m : f.mor) {
      h.mor.push_back(g.mor[m]);
    }
    return h;
  }

  CatPtr terminal_category() {
    auto c  = std::make_shared<FinCategory>();
    c->name = "1";
    c->add_object("*");
    c->add_morphism("id_*", 0, 0);
    c->set_identity(0, 0);
    c->finalize([](int, int) { return 0; });
    return c;
  }

  CatPtr discrete_category(std::vector<std::string> const& ids) {
    auto c  = std::make_shared<FinCategory>();
    c->name = "disc";
    for (auto const& id : ids) {
      int o = c->add_object(id);
      c->set_identity(o, c->add_morphism("id_" + id, o, o));
    }
    c->finalize([](int g, int f) { return g == f ? f : -1; });
    return c;
  }

  CatPtr group_category(std::string const&                   name,
                        std::vector<std::string> const&      elems,
                        std::vector<std::vector<int>> const& mult) {
    auto c  = std::make_shared<FinCategory>();
    c->name = name;
    c->add_object("*");
    int unit = -1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      c->add_morphism(elems[i], 0, 0);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      bool is_unit = true;
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (mult[i][j] != static_cast<int>(j)
            || mult[j][i] != static_cast<int>(j)) {
          is_unit = false;
          break;
        }
      }
      if (is_unit) {
        unit = static_cast<int>(i);
        break;
      }
    }
    require(unit >= 0, ErrorCode::invalid_argument, "group table has no unit");
    c->set_identity(0, unit);
    c->finalize([&](int g, int f) { return mult.at(g).at(f); });
    return c;
  }

  std::string perm_id(std::vector<int> const& p) {
    std::string s = "s" + std::to_string(p.size()) + ":";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0) {
        s += '.';
      }
      s += std::to_string(p[i]);
    }
    return s;
  }

  std::vector<int> perm_from_id(std::string const& id) {
    std::vector<int> p;
    auto             colon = id.find(':');
    require(id.size() > 1 && id[0] == 's' && colon != std::string::npos,
            ErrorCode::invalid_argument,
            "not a permutation id: " + id);
    std::string body = id.substr(colon + 1);
    std::size_t pos  = 0;
    while (pos < body.size()) {
      auto nxt = body.find('.', pos);
      if (nxt == std::string::npos) {
        nxt = body.size();
      }
      p.push_back(std::stoi(body.substr(pos, nxt - pos)));
      pos = nxt + 1;
    }
    return p;
  }

  std::vector<std::vector<int>> all_perms(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  CatPtr symmetric_groupoid(int nmax) {
    require(nmax >= 0 && nmax <= 9,
            ErrorCode::invalid_argument,
            "symmetric groupoid size out of range");
    auto c  = std::make_shared<FinCategory>();
    c->name = "S<=" + std::to_string(nmax);
    std::vector<std::unordered_map<std::string, int>> idx(nmax + 1);
    std::vector<std::vector<std::vector<int>>>        perms(nmax + 1);
    std::vector<int>                                  size_of;
    std::vector<std::vector<int>>                     perm_of;
    for (int n = 0; n <= nmax; ++n) {
      c->add_object(std::to_string(n));
    }
    for (int n = 0; n <= nmax; ++n) {
      for (auto const& p : all_perms(n)) {
        int m = c->add_morphism(perm_id(p), n, n);
        idx[n].emplace(perm_id(p), m);
        size_of.push_back(n);
        perm_of.push_back(p);
      }
      std::vector<int> id(n);
      std::iota(id.begin(), id.end(), 0);
      c->set_identity(n, idx[n].at(perm_id(id)));
    }
    c->finalize([&](int g, int f) {
      if (size_of[g] != size_of[f]) {
        return -1;
      }
      auto const&      pg = perm_of[g];
      auto const&      pf = perm_of[f];
      std::vector<int> h(pf.size());
      for (std::size_t i = 0; i < pf.size(); ++i) {
        h[i] = pg[pf[i]];
      }
      return idx[size_of[f]].at(perm_id(h));
    });
    return c;
  }

  CatPtr discrete_naturals(int nmax) {
    std::vector<std::string> ids;
    for (int n = 0; n <= nmax; ++n) {
      ids.push_back(std::to_string(n));
    }
    auto c = discrete_category(ids);
    std::const_pointer_cast<FinCategory>(c)->name
        = "N<=" + std::to_string(nmax);
    return c;
  }

  std::pair<CatPtr, Functor> full_subcategory(CatPtr const&           c,
                                              std::vector<int> const& objs) {
    auto             sub = std::make_shared<FinCategory>();
    sub->name            = c->name + "|sub";
    std::vector<int> newidx(c->num_objects(), -1);
    for (int o : objs) {
      newidx[o] = sub->add_object(c->object_id(o));
    }
    std::vector<int> mor_new(c->num_morphisms(), -1);
    std::vector<int> mor_old;
    for (int m = 0; m < static_cast<int>(c->num_morphisms()); ++m) {
      if (newidx[c->src(m)] >= 0 && newidx[c->tgt(m)] >= 0) {
        mor_new[m] = sub->add_morphism(
            c->morphism(m).id, newidx[c->src(m)], newidx[c->tgt(m)]);
        mor_old.push_back(m);
      }
    }
    for (int o : objs) {
      sub->set_identity(newidx[o], mor_new[c->identity(o)]);
    }
    sub->finalize([&](int g, int f) {
      int h = c->try_compose(mor_old[g], mor_old[f]);
      return h < 0 ? -1 : mor_new[h];
    });
    Functor inc{sub, c, objs, mor_old};
    return {sub, inc};
  }

}  // namespace plethysm
