#include "plethysm/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <memory>
#include <unordered_map>

namespace plethysm {

  namespace {
    struct UnionFind {
      std::vector<int> p;
      explicit UnionFind(int n) : p(n) {
        std::iota(p.begin(), p.end(), 0);
      }
      int find(int x) {
        while (p[x] != x) {
          p[x] = p[p[x]];
          x    = p[x];
        }
        return x;
      }
      void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          p[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    // all restricted growth strings of length len
    void rgs(int len, std::vector<int>& cur, int nb,
             std::vector<std::vector<int>>& out) {
      if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
      }
      for (int b = 0; b <= nb; ++b) {
        cur.push_back(b);
        rgs(len, cur, std::max(nb, b + 1), out);
        cur.pop_back();
      }
    }

    std::vector<int> perm_of(FinCategory const& c, int f) {
      return perm_from_id(c.morphism(f).id);
    }

    std::vector<int> invert(std::vector<int> const& p) {
      std::vector<int> q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[p[i]] = static_cast<int>(i);
      }
      return q;
    }
  }  // namespace

  // Cospans

  int CospanElem::blocks() const {
    int b = 0;
    for (int l : label) {
      b = std::max(b, l + 1);
    }
    return b;
  }

  std::string CospanElem::name() const {
    std::string s;
    for (int i = 0; i < n + m; ++i) {
      if (i == n) {
        s += '|';
      }
      s += std::to_string(label[i]);
    }
    if (n + m == 0 || n == n + m) {
      s += '|';
    }
    if (isolated > 0) {
      s += "+" + std::to_string(isolated);
    }
    return s;
  }

  CospanElem cospan_canonical(CospanElem c) {
    std::vector<int> relabel(c.blocks(), -1);
    int              next = 0;
    for (int& l : c.label) {
      if (relabel[l] < 0) {
        relabel[l] = next++;
      }
      l = relabel[l];
    }
    return c;
  }

  CospanElem cospan_compose(CospanElem const& x,
                            CospanElem const& y,
                            int               cap) {
    require(x.m == y.n, ErrorCode::mismatch, "cospans do not compose");
    int       bx = x.blocks();
    int       by = y.blocks();
    UnionFind uf(bx + by);
    for (int b = 0; b < x.m; ++b) {
      uf.unite(x.label[x.n + b], bx + y.label[b]);
    }
    CospanElem out;
    out.n = x.n;
    out.m = y.m;
    std::vector<bool> touched(bx + by, false);
    for (int a = 0; a < x.n; ++a) {
      int r = uf.find(x.label[a]);
      out.label.push_back(r);
      touched[r] = true;
    }
    for (int c = 0; c < y.m; ++c) {
      int r = uf.find(bx + y.label[y.n + c]);
      out.label.push_back(r);
      touched[r] = true;
    }
    int inner = 0;
    for (int v = 0; v < bx + by; ++v) {
      if (uf.find(v) == v && !touched[v]) {
        ++inner;
      }
    }
    out.isolated = std::min(x.isolated + y.isolated + inner, cap);
    return cospan_canonical(out);
  }

  CospanElem cospan_act(CospanElem const&       x,
                        std::vector<int> const& s,
                        std::vector<int> const& t) {
    CospanElem out = x;
    auto       ti  = invert(t);
    for (int j = 0; j < x.n; ++j) {
      out.label[j] = x.label[s[j]];
    }
    for (int k = 0; k < x.m; ++k) {
      out.label[x.n + k] = x.label[x.n + ti[k]];
    }
    return cospan_canonical(out);
  }

  CospanElem bijection_graph(std::vector<int> const& p) {
    CospanElem c;
    c.n = c.m = static_cast<int>(p.size());
    c.label.assign(2 * p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      c.label[i]                    = static_cast<int>(i);
      c.label[p.size() + p[i]]      = static_cast<int>(i);
    }
    return cospan_canonical(c);
  }

  bool is_connected(CospanElem const& c) {
    if (c.n + c.m == 0) {
      return c.isolated == 1;
    }
    return c.isolated == 0 && c.blocks() == 1;
  }

  bool is_nd(CospanElem const& c) {
    if (c.isolated > 0) {
      return false;
    }
    std::vector<int> seen(c.blocks(), 0);
    for (int i = 0; i < c.n; ++i) {
      seen[c.label[i]] |= 1;
    }
    for (int i = c.n; i < c.n + c.m; ++i) {
      seen[c.label[i]] |= 2;
    }
    return std::all_of(seen.begin(), seen.end(), [](int v) { return v == 3; });
  }

  std::vector<CospanElem> enumerate_cospans(int n, int m, int cap, bool nd) {
    std::vector<std::vector<int>> labels;
    std::vector<int>              cur;
    rgs(n + m, cur, 0, labels);
    std::vector<CospanElem> out;
    for (auto const& l : labels) {
      for (int i = 0; i <= (nd ? 0 : cap); ++i) {
        CospanElem c{n, m, l, i};
        if (!nd || is_nd(c)) {
          out.push_back(c);
        }
      }
    }
    return out;
  }

  namespace {
    Monoid cospan_monoid(int                                        nmax,
                         int                                        cap,
                         bool                                       nd,
                         bool                                       trivial,
                         std::vector<std::vector<CospanElem>>&      elems) {
      require(nmax >= 0 && nmax <= 4,
              ErrorCode::size_cap,
              "cospan fixture needs nmax <= 4");
      require(cap >= 0 && cap <= 4,
              ErrorCode::size_cap,
              "isolated cap must be in 0..4");
      auto sg = symmetric_groupoid(nmax);
      auto const& c = *sg;
      int  n  = nmax + 1;
      elems.assign(n * n, {});
      std::vector<std::unordered_map<std::string, int>> idx(n * n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          elems[a * n + b] = enumerate_cospans(a, b, cap, nd);
          for (std::size_t e = 0; e < elems[a * n + b].size(); ++e) {
            idx[a * n + b].emplace(elems[a * n + b][e].name(),
                                   static_cast<int>(e));
          }
        }
      }
      auto lookup = [&](CospanElem const& x) {
        return idx[x.n * n + x.m].at(x.name());
      };
      Bimodule r = make_bimodule(
          sg,
          Flavor::set,
          [&](int a, int b) {
            Obj o{Flavor::set, {}};
            for (auto const& x : elems[a * n + b]) {
              o.names.push_back(x.name());
            }
            return o;
          },
          [&](int s, int t) {
            int  a = c.tgt(s), b = c.src(t);
            auto ps = perm_of(c, s);
            auto pt = perm_of(c, t);
            auto const& xs = elems[a * n + b];
            Mor  m{Flavor::set, xs.size(), xs.size(), {}, {}};
            for (auto const& x : xs) {
              m.map.push_back(trivial ? lookup(x) : lookup(cospan_act(x, ps, pt)));
            }
            return m;
          },
          trivial ? "cospan-trivial" : (nd ? "cospan-nd" : "cospan"));
      std::vector<Mor> pts;
      for (int a = 0; a < n; ++a) {
        std::vector<int> id(a);
        std::iota(id.begin(), id.end(), 0);
        pts.push_back(point(Flavor::set, elems[a * n + a].size(),
                            lookup(bijection_graph(id))));
      }
      BimoduleMap eta = unit_from_identities(r, pts);
      return make_monoid(
          std::move(r),
          [&](int a, int b, int cc) {
            auto const& xs = elems[a * n + b];
            auto const& ys = elems[b * n + cc];
            Mor m{Flavor::set, xs.size() * ys.size(), elems[a * n + cc].size(),
                  {}, {}};
            m.map.reserve(m.dom);
            for (auto const& x : xs) {
              for (auto const& y : ys) {
                m.map.push_back(lookup(cospan_compose(x, y, cap)));
              }
            }
            return m;
          },
          std::move(eta));
    }
  }  // namespace

  CospanFixture build_cospan(int nmax, int isolated_cap, CospanVariant v) {
    CospanFixture f;
    f.variant = v;
    f.nmax    = nmax;
    f.cap     = v == CospanVariant::nd ? 0 : isolated_cap;
    bool nd   = v == CospanVariant::nd;
    f.monoid  = cospan_monoid(nmax, f.cap, nd, false, f.elems);
    int n     = nmax + 1;
    auto [nu, incl] = sub_bimodule(
        f.monoid.r,
        [&](int a, int b, int e) {
          auto const& x = f.elems[a * n + b][e];
          if (nd) {
            return a > 0 && b > 0 && x.blocks() == 1;
          }
          return is_connected(x);
        },
        nd ? "nu-cospan-nd" : "nu-cospan");
    f.nu      = std::move(nu);
    f.nu_incl = std::move(incl);
    return f;
  }

  FactorizationWitness cospan_witness(CospanFixture const& f) {
    int n    = f.nmax + 1;
    int cap  = f.cap;
    auto idx = std::make_shared<std::vector<std::unordered_map<std::string, int>>>(n * n);
    for (int p = 0; p < n * n; ++p) {
      for (std::size_t e = 0; e < f.elems[p].size(); ++e) {
        (*idx)[p].emplace(f.elems[p][e].name(), static_cast<int>(e));
      }
    }
    auto elems = std::make_shared<std::vector<std::vector<CospanElem>>>(f.elems);
    HorizontalProduct h = [idx, elems, n, cap](int a1, int b1, int x, int a2,
                                               int b2, int y) {
      if (a1 + a2 >= n || b1 + b2 >= n) {
        return -1;
      }
      auto const& cx = (*elems)[a1 * n + b1][x];
      auto const& cy = (*elems)[a2 * n + b2][y];
      int         k  = cx.blocks();
      CospanElem  z{a1 + a2, b1 + b2, {}, std::min(cap, cx.isolated + cy.isolated)};
      auto        side = [&](int from_x, int len_x, int from_y, int len_y) {
        for (int i = 0; i < len_x; ++i) {
          z.label.push_back(cx.label[from_x + i]);
        }
        for (int i = 0; i < len_y; ++i) {
          z.label.push_back(k + cy.label[from_y + i]);
        }
      };
      side(0, a1, 0, a2);
      side(a1, b1, a2, b2);
      auto it = (*idx)[z.n * n + z.m].find(cospan_canonical(z).name());
      return it == (*idx)[z.n * n + z.m].end() ? -1 : it->second;
    };
    ExtensionOptions o;
    o.reduced         = false;
    o.unit_letter_cap = cap;
    int unit = (*idx)[0].at(CospanElem{}.name());
    return factorization_witness(f.monoid.r, f.nu, f.nu_incl, h, unit,
                                 factorizable_action(f.monoid.r.action, true),
                                 o);
  }

  Monoid build_trivial_cospan(int nmax, int isolated_cap) {
    std::vector<std::vector<CospanElem>> elems;
    return cospan_monoid(nmax, isolated_cap, false, true, elems);
  }

  // Graphs

  std::string GraphElem::name() const {
    if (overflow) {
      return "!" + over.name();
    }
    std::string s;
    for (int i = 0; i < n + m; ++i) {
      if (i == n) {
        s += '|';
      }
      s += std::to_string(tails[i]);
    }
    if (n + m == 0 || m == 0) {
      s += '|';
    }
    if (!edges.empty()) {
      s += '[';
      for (std::size_t i = 0; i < edges.size(); ++i) {
        s += (i ? "," : "") + std::to_string(edges[i].first) + "-"
             + std::to_string(edges[i].second);
      }
      s += ']';
    }
    if (isolated > 0) {
      s += "+" + std::to_string(isolated);
    }
    return s;
  }

  GraphElem graph_canonical(GraphElem g, int cap) {
    if (g.overflow) {
      g.over = cospan_canonical(g.over);
      return g;
    }
    std::vector<bool> used(g.nv, false);
    for (int t : g.tails) {
      used[t] = true;
    }
    for (auto [u, v] : g.edges) {
      used[u] = used[v] = true;
    }
    std::vector<int> relabel(g.nv, -1);
    int              next = 0;
    for (int& t : g.tails) {
      if (relabel[t] < 0) {
        relabel[t] = next++;
      }
      t = relabel[t];
    }
    std::vector<int> rest;
    for (int v = 0; v < g.nv; ++v) {
      if (relabel[v] < 0 && used[v]) {
        rest.push_back(v);
      } else if (!used[v]) {
        ++g.isolated;
      }
    }
    int nt = next;
    // least edge list over labelings of the edge-only vertices
    std::vector<int> order(rest.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool                             first = true;
    do {
      for (std::size_t i = 0; i < rest.size(); ++i) {
        relabel[rest[i]] = nt + order[i];
      }
      std::vector<std::pair<int, int>> es;
      for (auto [u, v] : g.edges) {
        int a = relabel[u], b = relabel[v];
        es.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(es.begin(), es.end());
      if (first || es < best) {
        best  = es;
        first = false;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    g.edges    = best;
    g.nv       = nt + static_cast<int>(rest.size());
    g.isolated = std::min(g.isolated, cap);
    return g;
  }

  CospanElem graph_contract(GraphElem const& g, int cap) {
    if (g.overflow) {
      return g.over;
    }
    UnionFind uf(g.nv);
    for (auto [u, v] : g.edges) {
      uf.unite(u, v);
    }
    CospanElem        c{g.n, g.m, {}, 0};
    std::vector<bool> touched(g.nv, false);
    for (int t : g.tails) {
      c.label.push_back(uf.find(t));
      touched[uf.find(t)] = true;
    }
    int inner = 0;
    for (int v = 0; v < g.nv; ++v) {
      if (uf.find(v) == v && !touched[v]) {
        ++inner;
      }
    }
    c.isolated = std::min(g.isolated + inner, cap);
    return cospan_canonical(c);
  }

  GraphElem graph_act(GraphElem const&        g,
                      std::vector<int> const& s,
                      std::vector<int> const& t) {
    GraphElem out = g;
    if (g.overflow) {
      out.over = cospan_act(g.over, s, t);
      return out;
    }
    auto ti = invert(t);
    for (int j = 0; j < g.n; ++j) {
      out.tails[j] = g.tails[s[j]];
    }
    for (int k = 0; k < g.m; ++k) {
      out.tails[g.n + k] = g.tails[g.n + ti[k]];
    }
    return graph_canonical(out, std::max(g.isolated, 0));
  }

  namespace {
    GraphElem overflow_of(GraphElem const& x, GraphElem const& y, int cap) {
      GraphElem o;
      o.n        = x.n;
      o.m        = y.m;
      o.overflow = true;
      o.over     = cospan_compose(graph_contract(x, cap),
                                  graph_contract(y, cap), cap);
      return o;
    }

    std::pair<int, int> edge(int u, int v) {
      return {std::min(u, v), std::max(u, v)};
    }
  }  // namespace

  GraphElem graph_glue(GraphElem const& x, GraphElem const& y,
                       int emax, int cap) {
    require(x.m == y.n, ErrorCode::mismatch, "graphs do not glue");
    if (x.overflow || y.overflow
        || static_cast<int>(x.edges.size() + y.edges.size()) + x.m > emax) {
      return overflow_of(x, y, cap);
    }
    GraphElem g;
    g.n  = x.n;
    g.m  = y.m;
    g.nv = x.nv + y.nv;
    for (int a = 0; a < x.n; ++a) {
      g.tails.push_back(x.tails[a]);
    }
    for (int c = 0; c < y.m; ++c) {
      g.tails.push_back(x.nv + y.tails[y.n + c]);
    }
    g.edges = x.edges;
    for (auto [u, v] : y.edges) {
      g.edges.push_back(edge(x.nv + u, x.nv + v));
    }
    for (int b = 0; b < x.m; ++b) {
      g.edges.push_back(edge(x.tails[x.n + b], x.nv + y.tails[b]));
    }
    g.isolated = x.isolated + y.isolated;
    return graph_canonical(g, cap);
  }

  GraphElem graph_merge(GraphElem const& x, GraphElem const& y,
                        int emax, int cap) {
    require(x.m == y.n, ErrorCode::mismatch, "graphs do not compose");
    if (x.overflow || y.overflow
        || static_cast<int>(x.edges.size() + y.edges.size()) > emax) {
      return overflow_of(x, y, cap);
    }
    UnionFind uf(x.nv + y.nv);
    for (int b = 0; b < x.m; ++b) {
      uf.unite(x.tails[x.n + b], x.nv + y.tails[b]);
    }
    GraphElem g;
    g.n  = x.n;
    g.m  = y.m;
    g.nv = x.nv + y.nv;
    for (int a = 0; a < x.n; ++a) {
      g.tails.push_back(uf.find(x.tails[a]));
    }
    for (int c = 0; c < y.m; ++c) {
      g.tails.push_back(uf.find(x.nv + y.tails[y.n + c]));
    }
    for (auto [u, v] : x.edges) {
      g.edges.push_back(edge(uf.find(u), uf.find(v)));
    }
    for (auto [u, v] : y.edges) {
      g.edges.push_back(edge(uf.find(x.nv + u), uf.find(x.nv + v)));
    }
    // merged-away vertices are not counted as isolated
    int merged = 0;
    for (int v = 0; v < g.nv; ++v) {
      merged += uf.find(v) != v;
    }
    g.isolated = x.isolated + y.isolated - merged;
    return graph_canonical(g, cap);
  }

  namespace {
    void edge_multisets(int nv, int emax, std::size_t from,
                        std::vector<std::pair<int, int>> const& pairs,
                        std::vector<std::pair<int, int>>&       cur,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
      out.push_back(cur);
      if (static_cast<int>(cur.size()) == emax) {
        return;
      }
      for (std::size_t i = from; i < pairs.size(); ++i) {
        cur.push_back(pairs[i]);
        edge_multisets(nv, emax, i, pairs, cur, out);
        cur.pop_back();
      }
    }
  }  // namespace

  std::vector<GraphElem> enumerate_graphs(int n, int m, int emax, int cap) {
    std::vector<std::vector<int>> labels;
    std::vector<int>              cur;
    rgs(n + m, cur, 0, labels);
    std::vector<GraphElem>          out;
    std::unordered_map<std::string, int> seen;
    for (auto const& l : labels) {
      int nt = 0;
      for (int v : l) {
        nt = std::max(nt, v + 1);
      }
      for (int k = 0; k <= 2 * emax; ++k) {
        int                              nv = nt + k;
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < nv; ++u) {
          for (int v = u; v < nv; ++v) {
            pairs.emplace_back(u, v);
          }
        }
        std::vector<std::vector<std::pair<int, int>>> sets;
        std::vector<std::pair<int, int>>              es;
        edge_multisets(nv, emax, 0, pairs, es, sets);
        for (auto const& e : sets) {
          std::vector<bool> hit(nv, false);
          for (auto [u, v] : e) {
            hit[u] = hit[v] = true;
          }
          bool all = true;
          for (int v = nt; v < nv; ++v) {
            all = all && hit[v];
          }
          if (!all) {
            continue;
          }
          for (int i = 0; i <= cap; ++i) {
            GraphElem g;
            g.n        = n;
            g.m        = m;
            g.nv       = nv;
            g.tails    = l;
            g.edges    = e;
            g.isolated = i;
            g          = graph_canonical(g, cap);
            if (seen.emplace(g.name(), 0).second) {
              out.push_back(g);
            }
          }
        }
      }
    }
    for (auto const& c : enumerate_cospans(n, m, cap, false)) {
      GraphElem o;
      o.n        = n;
      o.m        = m;
      o.overflow = true;
      o.over     = c;
      out.push_back(o);
    }
    return out;
  }

  GlueFixture build_glue(GlueBounds const& b) {
    require(b.nmax >= 0 && b.nmax <= 3 && b.emax >= 0 && b.emax <= 2
                && b.isolated_cap >= 0 && b.isolated_cap <= 2,
            ErrorCode::size_cap,
            "glue fixture needs nmax <= 3, emax <= 2, isolated cap <= 2");
    GlueFixture f;
    f.bounds = b;
    f.base   = build_cospan(b.nmax, b.isolated_cap, CospanVariant::full);
    auto const& c   = *f.base.monoid.r.action;
    int         n   = b.nmax + 1;
    int         cap = b.isolated_cap;
    f.elems.assign(n * n, {});
    std::vector<std::unordered_map<std::string, int>> idx(n * n);
    std::vector<std::unordered_map<std::string, int>> bidx(n * n);
    for (int p = 0; p < n * n; ++p) {
      f.elems[p] = enumerate_graphs(p / n, p % n, b.emax, cap);
      for (std::size_t e = 0; e < f.elems[p].size(); ++e) {
        idx[p].emplace(f.elems[p][e].name(), static_cast<int>(e));
      }
      for (std::size_t e = 0; e < f.base.elems[p].size(); ++e) {
        bidx[p].emplace(f.base.elems[p][e].name(), static_cast<int>(e));
      }
    }
    auto lookup = [&](GraphElem const& g) {
      return idx[g.n * n + g.m].at(g.name());
    };
    Bimodule xi = make_bimodule(
        f.base.monoid.r.action,
        Flavor::set,
        [&](int a, int bb) {
          Obj o{Flavor::set, {}};
          for (auto const& g : f.elems[a * n + bb]) {
            o.names.push_back(g.name());
          }
          return o;
        },
        [&](int s, int t) {
          auto        ps = perm_of(c, s);
          auto        pt = perm_of(c, t);
          auto const& gs = f.elems[c.tgt(s) * n + c.src(t)];
          Mor         m{Flavor::set, gs.size(), gs.size(), {}, {}};
          for (auto const& g : gs) {
            m.map.push_back(lookup(graph_act(g, ps, pt)));
          }
          return m;
        },
        "glue");
    BimoduleMap pi;
    for (int p = 0; p < n * n; ++p) {
      Mor m{Flavor::set, f.elems[p].size(), f.base.elems[p].size(), {}, {}};
      for (auto const& g : f.elems[p]) {
        m.map.push_back(bidx[p].at(graph_contract(g, cap).name()));
      }
      pi.comp.push_back(m);
    }
    auto table = [&](bool glue) {
      return [&, glue](int a, int bb, int cc) {
        auto const& xs = f.elems[a * n + bb];
        auto const& ys = f.elems[bb * n + cc];
        Mor m{Flavor::set, xs.size() * ys.size(), f.elems[a * n + cc].size(),
              {}, {}};
        for (auto const& x : xs) {
          for (auto const& y : ys) {
            m.map.push_back(lookup(glue ? graph_glue(x, y, b.emax, cap)
                                        : graph_merge(x, y, b.emax, cap)));
          }
        }
        return m;
      };
    };
    std::vector<Mor> pts;
    for (int a = 0; a < n; ++a) {
      std::vector<int> id(a);
      std::iota(id.begin(), id.end(), 0);
      auto      bg = bijection_graph(id);
      GraphElem g;
      g.n = g.m = a;
      g.nv      = bg.blocks();
      g.tails   = bg.label;
      pts.push_back(point(Flavor::set, f.elems[a * n + a].size(),
                          lookup(graph_canonical(g, cap))));
    }
    f.glue  = make_monoid(xi, table(true));
    f.merge = make_monoid(xi, table(false), unit_from_identities(xi, pts));
    f.rel   = {std::move(xi), std::move(pi), f.base.monoid};
    return f;
  }

  // Surjections

  std::vector<std::vector<int>> enumerate_surjections(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int>              f(n, 0);
    if (m == 0) {
      if (n == 0) {
        out.push_back({});
      }
      return out;
    }
    while (true) {
      std::vector<bool> hit(m, false);
      for (int v : f) {
        hit[v] = true;
      }
      if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
        out.push_back(f);
      }
      int i = n - 1;
      while (i >= 0 && f[i] == m - 1) {
        f[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++f[i];
    }
    return out;
  }

  SurjectionFixture build_surjection(int nmax) {
    require(nmax >= 0 && nmax <= 4,
            ErrorCode::size_cap,
            "surjection fixture needs nmax <= 4");
    SurjectionFixture fx;
    fx.nmax = nmax;
    auto sg = symmetric_groupoid(nmax);
    auto const& c = *sg;
    int  n  = nmax + 1;
    fx.elems.assign(n * n, {});
    std::vector<std::map<std::vector<int>, int>> idx(n * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        fx.elems[a * n + b] = enumerate_surjections(a, b);
        for (std::size_t e = 0; e < fx.elems[a * n + b].size(); ++e) {
          idx[a * n + b].emplace(fx.elems[a * n + b][e], static_cast<int>(e));
        }
      }
    }
    auto name = [](std::vector<int> const& f) {
      std::string s = "s:";
      for (int v : f) {
        s += std::to_string(v);
      }
      return s;
    };
    Bimodule r = make_bimodule(
        sg,
        Flavor::set,
        [&](int a, int b) {
          Obj o{Flavor::set, {}};
          for (auto const& f : fx.elems[a * n + b]) {
            o.names.push_back(name(f));
          }
          return o;
        },
        [&](int s, int t) {
          int  a = c.tgt(s), b = c.src(t);
          auto ps = perm_of(c, s);
          auto pt = perm_of(c, t);
          auto const& fs = fx.elems[a * n + b];
          Mor  m{Flavor::set, fs.size(), fs.size(), {}, {}};
          for (auto const& f : fs) {
            std::vector<int> g(f.size());
            for (std::size_t j = 0; j < f.size(); ++j) {
              g[j] = pt[f[ps[j]]];
            }
            m.map.push_back(idx[a * n + b].at(g));
          }
          return m;
        },
        "surj");
    std::vector<Mor> pts;
    for (int a = 0; a < n; ++a) {
      std::vector<int> id(a);
      std::iota(id.begin(), id.end(), 0);
      pts.push_back(point(Flavor::set, fx.elems[a * n + a].size(),
                          idx[a * n + a].at(id)));
    }
    BimoduleMap eta = unit_from_identities(r, pts);
    fx.monoid = make_monoid(
        std::move(r),
        [&](int a, int b, int cc) {
          auto const& xs = fx.elems[a * n + b];
          auto const& ys = fx.elems[b * n + cc];
          Mor m{Flavor::set, xs.size() * ys.size(),
                fx.elems[a * n + cc].size(), {}, {}};
          for (auto const& x : xs) {
            for (auto const& y : ys) {
              std::vector<int> z(x.size());
              for (std::size_t j = 0; j < x.size(); ++j) {
                z[j] = y[x[j]];
              }
              m.map.push_back(idx[a * n + cc].at(z));
            }
          }
          return m;
        },
        std::move(eta));
    auto [nu, incl] = sub_bimodule(
        fx.monoid.r,
        [](int a, int b, int) { return a >= 1 && b == 1; },
        "nu-surj");
    fx.nu      = std::move(nu);
    fx.nu_incl = std::move(incl);
    return fx;
  }

  FactorizationWitness surjection_witness(SurjectionFixture const& f) {
    int n = f.nmax + 1;
    auto elems = std::make_shared<std::vector<std::vector<std::vector<int>>>>(f.elems);
    HorizontalProduct h = [elems, n](int a1, int b1, int x, int a2, int b2,
                                     int y) {
      if (a1 + a2 >= n || b1 + b2 >= n) {
        return -1;
      }
      auto z = (*elems)[a1 * n + b1][x];
      for (int v : (*elems)[a2 * n + b2][y]) {
        z.push_back(b1 + v);
      }
      auto const& zs = (*elems)[(a1 + a2) * n + b1 + b2];
      return static_cast<int>(std::find(zs.begin(), zs.end(), z) - zs.begin());
    };
    return factorization_witness(f.monoid.r, f.nu, f.nu_incl, h, 0,
                                 factorizable_action(f.monoid.r.action, true),
                                 {});
  }

  DecorationMonoid planar_decoration(SurjectionFixture const& f) {
    return build_planar(f).dm;
  }

  PlanarDecoration build_planar(SurjectionFixture const& f) {
    using Orders = FibreOrders;
    auto const& r  = f.monoid.r;
    auto const& c  = *r.action;
    int         n  = f.nmax + 1;
    auto        el = element_category(r);
    auto const& e  = *el;
    // orders[el object] lists D(x); index by value
    std::vector<std::vector<Orders>>     orders(e.obj_info.size());
    std::vector<std::map<Orders, int>>   index(e.obj_info.size());
    for (std::size_t o = 0; o < e.obj_info.size(); ++o) {
      auto [pr, x]   = e.obj_info[o];
      auto const& fx = f.elems[pr][x];
      Orders      fib(pr % n);
      for (std::size_t j = 0; j < fx.size(); ++j) {
        fib[fx[j]].push_back(static_cast<int>(j));
      }
      // odometer over the permutations of each fibre
      std::vector<Orders> all{fib};
      for (std::size_t b = 0; b < fib.size(); ++b) {
        std::vector<Orders> next;
        for (auto const& base : all) {
          auto perm = fib[b];
          do {
            auto o2 = base;
            o2[b]   = perm;
            next.push_back(std::move(o2));
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
        all = std::move(next);
      }
      std::sort(all.begin(), all.end());
      for (std::size_t i = 0; i < all.size(); ++i) {
        index[o].emplace(all[i], static_cast<int>(i));
      }
      orders[o] = std::move(all);
    }
    auto label = [](Orders const& u) {
      std::string s = "o:";
      for (std::size_t b = 0; b < u.size(); ++b) {
        if (b) {
          s += "|";
        }
        for (int a : u[b]) {
          s += std::to_string(a);
        }
      }
      return s;
    };
    ElementRep d{el, Rep{el->cat, Flavor::set, {}, {}}};
    for (auto const& os : orders) {
      Obj v{Flavor::set, {}};
      for (auto const& u : os) {
        v.names.push_back(label(u));
      }
      d.rep.value.push_back(std::move(v));
    }
    int nm = static_cast<int>(c.num_morphisms());
    for (auto [g, x] : e.mor_info) {
      int  s = g / nm, t = g % nm;
      auto ps = perm_of(c, s);
      auto pt = perm_of(c, t);
      std::vector<int> inv(ps.size());
      for (std::size_t j = 0; j < ps.size(); ++j) {
        inv[ps[j]] = static_cast<int>(j);
      }
      int  so = e.object(r.pairs->src(g), x);
      int  to = e.object(r.pairs->tgt(g), r.rep.act[g].map[x]);
      Mor  m{Flavor::set, orders[so].size(), orders[to].size(), {}, {}};
      for (auto const& u : orders[so]) {
        Orders u2(u.size());
        for (std::size_t b = 0; b < u.size(); ++b) {
          for (int a : u[b]) {
            u2[pt[b]].push_back(inv[a]);
          }
        }
        m.map.push_back(index[to].at(u2));
      }
      d.rep.act.push_back(std::move(m));
    }
    auto prod = [&](int a, int b, int cc, int x, int y, int u, int v) {
      int ny = static_cast<int>(r.value(b, cc).size());
      int z  = f.monoid.g(a, b, cc).map[x * ny + y];
      auto const& ux = orders[e.object(r.pair(a, b), x)][u];
      auto const& vy = orders[e.object(r.pair(b, cc), y)][v];
      Orders w(cc);
      for (int k = 0; k < cc; ++k) {
        for (int bb : vy[k]) {
          w[k].insert(w[k].end(), ux[bb].begin(), ux[bb].end());
        }
      }
      return index[e.object(r.pair(a, cc), z)].at(w);
    };
    PlanarDecoration pd{decoration_monoid(d, f.monoid, prod), {}, {}};
    pd.orders = std::move(orders);
    pd.index  = std::move(index);
    return pd;
  }

  OpData plus_monoid_to_op(BasicMonoid const& m) {
    auto const& bp  = m.bp;
    auto const& eln = *m.d.el;
    OpData      op{m.d, bp, {}};
    for (std::size_t zb = 0; zb < bp.incl.obj.size(); ++zb) {
      int  zo = bp.incl.obj[zb];
      int  w  = bp.el_gamma0.obj[zb];
      Mor  in = bp.kan.q[w].proj_block(
          bp.kan.block(w, static_cast<int>(zb), eln.cat->identity(w)));
      auto const&      q = bp.ext.q[zo];
      std::vector<Mor> comps;
      for (std::size_t b = 0; b < q.num_blocks(); ++b) {
        comps.push_back(compose(m.g.comp[w], compose(in, q.proj_block(static_cast<int>(b)))));
      }
      op.comp.push_back(std::move(comps));
    }
    return op;
  }

  BasicMonoid plus_op_to_monoid(OpData const& op) {
    auto const&      bp = op.bp;
    std::vector<Mor> cocone;
    for (std::size_t zb = 0; zb < bp.incl.obj.size(); ++zb) {
      int  zo = bp.incl.obj[zb];
      int  w  = bp.el_gamma0.obj[zb];
      auto c  = bp.ext.q[zo].induce(op.comp[zb], op.d.rep.value[w].size());
      require(c.has_value(),
              ErrorCode::law_failure,
              "op composition is not equivariant at "
                  + bp.el_beta->cat->object_id(static_cast<int>(zb)));
      cocone.push_back(*c);
    }
    auto g = kan_factor(bp.kan, bp.el_gamma0, op.d.rep, cocone);
    require(g.has_value(), ErrorCode::law_failure, "op compositions are not natural");
    return {op.d, bp, *g};
  }

  LawReport compare_ops(OpData const& a, OpData const& b) {
    LawReport rep;
    if (a.comp.size() != b.comp.size()) {
      rep.add("ops have different shapes");
      return rep;
    }
    for (std::size_t zb = 0; zb < a.comp.size(); ++zb) {
      for (std::size_t k = 0; k < a.comp[zb].size(); ++k) {
        if (k >= b.comp[zb].size() || !equal(a.comp[zb][k], b.comp[zb][k])) {
          rep.add("compositions differ at "
                  + a.bp.el_beta->cat->object_id(static_cast<int>(zb)));
          break;
        }
      }
    }
    return rep;
  }

  LawReport compare_basic_monoids(BasicMonoid const& a, BasicMonoid const& b) {
    LawReport rep;
    for (std::size_t w = 0; w < a.g.comp.size(); ++w) {
      if (!equal(a.g.comp[w], b.g.comp[w])) {
        rep.add("multiplications differ at " + a.d.el->cat->object_id(static_cast<int>(w)));
      }
    }
    return rep;
  }

  std::vector<int> const& AssocOperad::order(int nu_obj, int e) const {
    return planar.orders[nu_to_rho.obj[nu_obj]][e][0];
  }

  AssocOperad build_assoc_operad(int nmax) {
    AssocOperad ao;
    ao.f         = build_surjection(nmax);
    ao.planar    = build_planar(ao.f);
    ao.w         = surjection_witness(ao.f);
    ao.el_nu     = element_category(ao.f.nu);
    auto const& pl = ao.planar;
    auto const& dp = pl.dm.d;
    ao.nu_to_rho = el_map(ao.el_nu, dp.el, ao.f.nu_incl);
    ElementRep d{ao.el_nu, restrict_rep(dp.rep, ao.nu_to_rho)};
    auto bp = basic_element_plethysm(d, d, ao.f.monoid, ao.w, nmax);

    auto const& r   = ao.f.monoid.r;
    auto const& elr = *dp.el;
    int         n   = nmax + 1;
    // orders on x from a decoded word: letter i orders its own block,
    // shifted past the earlier letters, then the frame moves them
    auto orders_of = [&](ExtendedRep const& e, int xo, int k) {
      auto   dec = decode_extended(e, d, xo, k);
      FibreOrders z;
      int    offset = 0;
      for (std::size_t i = 0; i < dec.letters.size(); ++i) {
        std::vector<int> o;
        for (int a : ao.order(dec.letters[i], dec.elems[i])) {
          o.push_back(a + offset);
        }
        offset += ao.el_nu->base_of(dec.letters[i]) / n;
        z.push_back(std::move(o));
      }
      int zi = pl.index[dec.joined].at(z);
      int l  = elr.lift(dec.frame, elr.elem_of(dec.joined));
      require(elr.cat->tgt(l) == xo, ErrorCode::internal, "decoded frame misses its target");
      return dp.rep.act[l].map[zi];
    };
    (void) r;
    ao.op = OpData{d, bp, {}};
    auto const& ext = bp.ext;
    auto const& p   = bp.bp.p;
    for (std::size_t zb = 0; zb < bp.incl.obj.size(); ++zb) {
      int zo = bp.incl.obj[zb];
      int w  = bp.el_gamma0.obj[zb];
      int pr = ext.el->base_of(zo);
      int A = pr / n, C = pr % n;
      auto const& q = ext.q[zo];
      std::vector<Mor> comps;
      for (std::size_t b = 0; b < q.num_blocks(); ++b) {
        int g       = ext.block_gen[zo][b];
        auto [B, k] = p.coend[pr].locate(g);
        int ny      = static_cast<int>(p.r2.value(B, C).size());
        int xi = k / ny, yi = k % ny;
        int xo = elr.object(r.pair(A, B), xi);
        int yo = elr.object(r.pair(B, C), yi);
        int sx = static_cast<int>(bp.e1.rep.rep.value[xo].size());
        int sy = static_cast<int>(bp.e2.rep.rep.value[yo].size());
        Mor m{Flavor::set, static_cast<std::size_t>(sx * sy), d.rep.value[w].size(), {}, {}};
        for (int i1 = 0; i1 < sx; ++i1) {
          int u = orders_of(bp.e1, xo, i1);
          for (int i2 = 0; i2 < sy; ++i2) {
            int v  = orders_of(bp.e2, yo, i2);
            int zz = ao.f.monoid.g(A, B, C).map[xi * ny + yi];
            require(elr.object(r.pair(A, C), zz) == ao.nu_to_rho.obj[w],
                    ErrorCode::internal,
                    "basic pair composes outside its class");
            m.map.push_back(decoration_product(pl.dm, A, B, C, xi, yi, u, v));
          }
        }
        comps.push_back(std::move(m));
      }
      ao.op.comp.push_back(std::move(comps));
    }
    ao.monoid = plus_op_to_monoid(ao.op);
    return ao;
  }

  Bimodule basic_reference(AssocOperad const& ao, Rep const& o) {
    (void) ao;
    return reference_bimodule(o, [](int a, int b) { return a >= 1 && b == 1; },
                              "alpha-basic");
  }

  RepMap fold_algebra(AssocOperad const& ao,
                      Rep const&         o,
                      Bimodule const&    alpha_nu,
                      Mor const&         mu) {
    auto const& el   = *ao.el_nu;
    int         n    = ao.f.nmax + 1;
    std::size_t base = o.value[1].size();
    RepMap      out;
    for (std::size_t l = 0; l < el.obj_info.size(); ++l) {
      int pr = el.base_of(static_cast<int>(l));
      int a  = pr / n;
      std::size_t dsize = ao.monoid.d.rep.value[l].size();
      Mor m{Flavor::set, dsize, alpha_nu.rep.value[pr].size(), {}, {}};
      std::vector<std::size_t> sizes(a, base);
      for (std::size_t e = 0; e < dsize; ++e) {
        auto const& ord = ao.order(static_cast<int>(l), static_cast<int>(e));
        Mor h{Flavor::set, o.value[a].size(), base, {}, {}};
        for (std::size_t t = 0; t < o.value[a].size(); ++t) {
          auto tup = tensor_decode(sizes, t);
          int  acc = tup[ord[0]];
          for (std::size_t i = 1; i < ord.size(); ++i) {
            acc = mu.map[acc * base + tup[ord[i]]];
          }
          h.map.push_back(acc);
        }
        m.map.push_back(hom_index(o, a, 1, h));
      }
      out.comp.push_back(std::move(m));
    }
    return out;
  }

  Bimodule build_tau(TauVariant v, int nmax) {
    require(nmax >= 0 && nmax <= 6,
            ErrorCode::size_cap,
            "singleton bimodule needs nmax <= 6");
    auto a = v == TauVariant::naturals ? discrete_naturals(nmax)
                                       : symmetric_groupoid(nmax);
    return make_bimodule(
        a,
        Flavor::set,
        [](int, int) { return Obj::set({"*"}); },
        [](int, int) { return identity_mor(Flavor::set, 1); },
        v == TauVariant::naturals ? "tau-N" : "tau-S");
  }

}  // namespace plethysm
