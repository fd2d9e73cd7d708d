#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "plethysm/factorize.hpp"
#include "plethysm/zoo.hpp"

using namespace plethysm;

namespace {
  std::string first_violation(LawReport const& r) {
    return r.ok() ? "" : r.violations.front();
  }

  long bell(int n) {
    // Bell triangle
    std::vector<long> row{1};
    for (int i = 0; i < n; ++i) {
      std::vector<long> next{row.back()};
      for (long v : row) {
        next.push_back(next.back() + v);
      }
      row = next;
    }
    return row.front();
  }

  // Every set partition of 0..n-1 as a block label per point.
  void set_partitions(int n, std::vector<int>& cur, int blocks,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      cur.push_back(b);
      set_partitions(n, cur, std::max(blocks, b + 1), out);
      cur.pop_back();
    }
  }

  // Ordered sequences of nonzero pairs summing to (a, b).
  long compositions(int a, int b) {
    if (a == 0 && b == 0) {
      return 1;
    }
    long s = 0;
    for (int i = 0; i <= a; ++i) {
      for (int j = 0; j <= b; ++j) {
        if (i + j > 0) {
          s += compositions(a - i, b - j);
        }
      }
    }
    return s;
  }

  std::size_t value_size(Bimodule const& r, int a, int b) {
    return r.value(a, b).size();
  }
}  // namespace

TEST_CASE("free symmetric monoidal category on one object") {
  auto fa = symmetric_action(3);
  auto w  = free_smc(fa.v, 3, true);
  CHECK(w.words.size() == 4);
  CHECK(w.cat->num_morphisms() == 1 + 1 + 2 + 6);
  CHECK(validate_category(*w.cat).ok());
  auto mu = structure_functor(w, fa);
  CHECK(first_violation(check_functor(mu)) == "");
  std::set<int> hit(mu.mor.begin(), mu.mor.end());
  CHECK(hit.size() == fa.a->num_morphisms());

  auto plain = free_smc(fa.v, 3, false);
  CHECK(plain.cat->num_morphisms() == 4);
  auto na = naturals_action(3);
  auto mn = structure_functor(free_smc(na.v, 3, false), na);
  CHECK(first_violation(check_functor(mn)) == "");
}

TEST_CASE("action helpers") {
  auto fa = symmetric_action(3);
  int  s  = fa.mor_of_perm({1, 0});
  int  t  = fa.mor_of_perm({0});
  int  st = fa.tensor_mor({s, t});
  CHECK(fa.perm(st) == std::vector<int>{1, 0, 2});
  CHECK(fa.tensor_mor({st, t}) == -1);
  auto na = naturals_action(2);
  CHECK(na.mor_of_perm({1, 0}) == -1);
  CHECK(na.perm(na.tensor_mor({na.a->identity(1), na.a->identity(1)}))
        == std::vector<int>{0, 1});
}

TEST_CASE("extension of the singleton bimodule over N") {
  auto tau = build_tau(TauVariant::naturals, 3);
  auto fa  = factorizable_action(tau.action, false);
  auto h   = horizontal_extension(tau, fa);
  CHECK(value_size(h.ext, 1, 1) == 3);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      CHECK(value_size(h.ext, a, b) == compositions(a, b));
    }
  }
  CHECK(check_bimodule(h.ext).ok());
  CHECK(first_violation(compare_formulas(tau, fa, {})) == "");
}

TEST_CASE("extension of the singleton bimodule over S is Bell") {
  auto tau = build_tau(TauVariant::symmetric, 3);
  auto fa  = factorizable_action(tau.action, true);
  auto h   = horizontal_extension(tau, fa);
  CHECK(value_size(h.ext, 2, 0) == 2);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      std::vector<std::vector<int>> parts;
      std::vector<int>              cur;
      set_partitions(a + b, cur, 0, parts);
      CHECK(value_size(h.ext, a, b) == parts.size());
      CHECK(static_cast<long>(parts.size()) == bell(a + b));
    }
  }
  CHECK(first_violation(check_bimodule(h.ext)) == "");
  CHECK(first_violation(compare_formulas(tau, fa, {})) == "");
}

TEST_CASE("boxed corollas") {
  auto tau = build_tau(TauVariant::symmetric, 3);
  auto fa  = factorizable_action(tau.action, true);
  auto h   = horizontal_extension(tau, fa);
  auto hh  = iterate_extension(h, {});
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      std::vector<std::vector<int>> parts;
      std::vector<int>              cur;
      set_partitions(a + b, cur, 0, parts);
      long expect = 0;
      for (auto const& p : parts) {
        int k = p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
        expect += bell(k);
      }
      CHECK(static_cast<long>(value_size(hh.ext, a, b)) == expect);
    }
  }
}

TEST_CASE("word cap") {
  auto tau = build_tau(TauVariant::symmetric, 2);
  auto fa  = factorizable_action(tau.action, true);
  ExtensionOptions o;
  o.cap = 2;
  CHECK_THROWS_AS(horizontal_extension(tau, fa, o), Error);
  o.allow_truncation = true;
  auto h             = horizontal_extension(tau, fa, o);
  CHECK(h.truncated);
  // (2,2) loses the four words of length three and four
  std::vector<std::vector<int>> parts;
  std::vector<int>              cur;
  set_partitions(4, cur, 0, parts);
  std::size_t short_ones = 0;
  for (auto const& p : parts) {
    short_ones += *std::max_element(p.begin(), p.end()) < 2;
  }
  CHECK(value_size(h.ext, 2, 2) == short_ones);
}

TEST_CASE("cospans factor into connected cospans") {
  for (int cap : {0, 1}) {
    CAPTURE(cap);
    auto f = build_cospan(2, cap, CospanVariant::full);
    auto w = cospan_witness(f);
    CHECK(first_violation(w.report) == "");
    CHECK(w.outside == 0);
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 2; ++b) {
        CHECK(value_size(w.ext.ext, a, b) == f.elems[a * 3 + b].size());
      }
    }
    // length is the number of components
    for (int p = 0; p < 9; ++p) {
      for (std::size_t e = 0; e < f.elems[p].size(); ++e) {
        auto const& c = f.elems[p][e];
        CHECK(w.length(p, static_cast<int>(e)) == c.blocks() + c.isolated);
      }
    }
    ExtensionOptions o;
    o.reduced         = false;
    o.unit_letter_cap = cap;
    CHECK(first_violation(compare_formulas(f.nu, w.ext.fa, o)) == "");
  }
}

TEST_CASE("surjections factor") {
  auto f = build_surjection(3);
  auto w = surjection_witness(f);
  CHECK(first_violation(w.report) == "");
  CHECK(w.outside == 0);
}

TEST_CASE("a broken product is caught") {
  auto f     = build_cospan(2, 0, CospanVariant::full);
  auto w     = cospan_witness(f);
  auto worse = factorization_witness(
      f.monoid.r, f.nu, f.nu_incl,
      [](int, int, int, int, int, int) { return 0; }, w.unit, w.ext.fa,
      w.ext.opts);
  CHECK_FALSE(worse.ok());
}

TEST_CASE("basic action bimodule") {
  for (bool sym : {true, false}) {
    CAPTURE(sym);
    auto fa = sym ? symmetric_action(3) : naturals_action(3);
    auto w  = basic_action_bimodule(fa);
    CHECK(first_violation(w.report) == "");
    CHECK(value_size(w.ext.ext, 2, 2) == (sym ? 2u : 1u));
    CHECK(value_size(w.nu, 1, 1) == 1);
    CHECK(value_size(w.nu, 2, 2) == 0);
  }
}

TEST_CASE("plethysm of factorized bimodules factors") {
  auto f  = build_surjection(3);
  auto w  = surjection_witness(f);
  auto p  = plethysm_product(f.monoid.r, f.monoid.r);
  auto ww = plethysm_factorization(w, w, p);
  CHECK(first_violation(ww.report) == "");

  auto c  = build_cospan(2, 0, CospanVariant::nd);
  auto wc = cospan_witness(c);
  auto pc = plethysm_product(c.monoid.r, c.monoid.r);
  auto wp = plethysm_factorization(wc, wc, pc);
  CHECK(first_violation(wp.report) == "");
}

namespace {
  struct PairOrbits {
    std::set<std::string> composite_connected;
    std::set<std::string> graph_connected;
  };

  // Orbits under S_B of composable cospan pairs at (a, c). The glued
  // two-level graph is built directly by union-find; a component with no
  // outer tail becomes a lone vertex of the composite.
  PairOrbits pair_orbits(CospanFixture const& f, int a, int c) {
    int        n = f.nmax + 1;
    PairOrbits out;
    for (int b = 0; b < n; ++b) {
      for (auto const& x : f.elems[a * n + b]) {
        for (auto const& y : f.elems[b * n + c]) {
          int kx = x.blocks(), ky = y.blocks();
          std::vector<int> parent(kx + ky);
          std::iota(parent.begin(), parent.end(), 0);
          std::function<int(int)> find = [&](int u) {
            return parent[u] == u ? u : parent[u] = find(parent[u]);
          };
          for (int j = 0; j < b; ++j) {
            parent[find(x.label[a + j])] = find(kx + y.label[j]);
          }
          std::set<int> roots, tailed;
          for (int u = 0; u < kx + ky; ++u) {
            roots.insert(find(u));
          }
          for (int i = 0; i < a; ++i) {
            tailed.insert(find(x.label[i]));
          }
          for (int i = 0; i < c; ++i) {
            tailed.insert(find(kx + y.label[b + i]));
          }
          int lone = std::min<int>(
              f.cap, static_cast<int>(roots.size() - tailed.size())
                         + x.isolated + y.isolated);
          bool composite = a + c == 0 ? lone == 1
                                      : tailed.size() == 1 && lone == 0;
          bool graph = roots.size() == 1 && x.isolated + y.isolated == 0;
          std::string      best;
          std::vector<int> p(b), ida(a), idc(c);
          std::iota(p.begin(), p.end(), 0);
          std::iota(ida.begin(), ida.end(), 0);
          std::iota(idc.begin(), idc.end(), 0);
          do {
            std::vector<int> inv(b);
            for (int j = 0; j < b; ++j) {
              inv[p[j]] = j;
            }
            auto key = std::to_string(b) + cospan_act(x, ida, p).name() + "|"
                       + cospan_act(y, inv, idc).name();
            if (best.empty() || key < best) {
              best = key;
            }
          } while (std::next_permutation(p.begin(), p.end()));
          if (composite) {
            out.composite_connected.insert(best);
          }
          if (graph) {
            out.graph_connected.insert(best);
          }
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("basic pairs of cospans") {
  for (auto v : {CospanVariant::full, CospanVariant::nd}) {
    auto f  = build_cospan(2, 0, v);
    auto w  = cospan_witness(f);
    auto bp = basic_pairs(f.monoid, w);
    CHECK(check_bimodule(bp.beta).ok());
    for (int a = 0; a <= 2; ++a) {
      for (int c = 0; c <= 2; ++c) {
        CAPTURE(a);
        CAPTURE(c);
        auto o = pair_orbits(f, a, c);
        CHECK(value_size(bp.beta, a, c) == o.composite_connected.size());
        // without lone vertices to lose, these are the connected
        // two-level graphs
        if (v == CospanVariant::nd) {
          CHECK(o.graph_connected == o.composite_connected);
        }
      }
    }
  }
}

TEST_CASE("composition of nd cospans is hereditary") {
  auto f  = build_cospan(2, 0, CospanVariant::nd);
  auto w  = cospan_witness(f);
  auto p  = plethysm_product(f.monoid.r, f.monoid.r);
  auto wp = plethysm_factorization(w, w, p);
  auto g  = gamma_on_classes(f.monoid, p);
  CHECK(first_violation(hereditary_check(g, wp, w)) == "");
  auto wu = basic_action_bimodule(w.ext.fa);
  CHECK(first_violation(hereditary_check(*f.monoid.eta, wu, w)) == "");

  // send a basic class at (2,2) to a two-block cospan
  auto bad    = g;
  int  pair   = 2 * 3 + 2;
  int  cls    = -1;
  int  target = -1;
  for (std::size_t e = 0; e < f.elems[pair].size(); ++e) {
    if (f.elems[pair][e].blocks() == 2) {
      target = static_cast<int>(e);
    }
  }
  for (std::size_t k = 0; k < bad.comp[pair].dom && cls < 0; ++k) {
    if (wp.length(pair, static_cast<int>(k)) == 1) {
      cls = static_cast<int>(k);
    }
  }
  REQUIRE(cls >= 0);
  REQUIRE(target >= 0);
  bad.comp[pair].map[cls] = target;
  auto rep = hereditary_check(bad, wp, w);
  REQUIRE_FALSE(rep.ok());
  CHECK(first_violation(rep).find("fibre over "
                                  + f.monoid.r.rep.value[pair].names[target])
        != std::string::npos);
}

TEST_CASE("full cospans are not hereditary") {
  auto f  = build_cospan(1, 1, CospanVariant::full);
  auto w  = cospan_witness(f);
  auto p  = plethysm_product(f.monoid.r, f.monoid.r);
  auto wp = plethysm_factorization(w, w, p);
  auto g  = gamma_on_classes(f.monoid, p);
  // closing a wire leaves a lone vertex, which saturates
  CHECK_FALSE(hereditary_check(g, wp, w).ok());
}

TEST_CASE("pullback of bimodule maps") {
  auto f  = build_surjection(2);
  auto pb = bimodule_pullback(f.nu, f.nu_incl, f.monoid.r,
                              identity_repmap(f.monoid.r.rep));
  CHECK(check_bimodule(pb.pb).ok());
  for (int p = 0; p < 9; ++p) {
    CHECK(pb.pb.rep.value[p].size() == f.nu.rep.value[p].size());
  }
  CHECK(check_bimodule_map(pb.pb, f.nu, pb.p1).ok());
}

TEST_CASE("extension monad laws") {
  auto tau = build_tau(TauVariant::symmetric, 2);
  auto fa  = factorizable_action(tau.action, true);
  auto m   = monad_structure(tau, fa, 2, 2);
  CHECK(first_violation(m.report) == "");

  auto f  = build_cospan(2, 0, CospanVariant::full);
  auto mc = monad_structure(f.nu, factorizable_action(f.nu.action, true), 2,
                            2);
  CHECK(first_violation(mc.report) == "");
}
