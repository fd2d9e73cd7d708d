#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <numeric>

#include "plethysm/basicrep.hpp"
#include "plethysm/zoo.hpp"

using namespace plethysm;

namespace {
  std::string first_violation(LawReport const& r) {
    return r.ok() ? "" : r.violations.front();
  }

  long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) {
      f *= i;
    }
    return f;
  }

  enum class Species { com, ass };

  long species_size(Species s, int n) {
    return s == Species::com ? 1 : factorial(n);
  }

  // Rep over el(r) whose value at an element depends only on its arity
  // a: one point (com) or the orderings of a (ass), permuted by the
  // input action.
  ElementRep species_rep(ElPtr const& el, Bimodule const& r, Species sp) {
    auto const& ac = *r.action;
    int         n  = r.n();
    int         nm = static_cast<int>(ac.num_morphisms());
    auto const& c  = *el->cat;
    Rep         rep{el->cat, Flavor::set, {}, {}};
    auto orders = [&](int a) {
      std::vector<std::vector<int>> out;
      std::vector<int>              p(a);
      std::iota(p.begin(), p.end(), 0);
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    };
    for (std::size_t o = 0; o < c.num_objects(); ++o) {
      int a = el->base_of(static_cast<int>(o)) / n;
      Obj v{Flavor::set, {}};
      if (sp == Species::com) {
        v.names.push_back("*");
      } else {
        for (auto const& p : orders(a)) {
          v.names.push_back(perm_id(p));
        }
      }
      rep.value.push_back(v);
    }
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
      int g = el->mor_info[m].first;
      int a = ac.src(g / nm);
      if (sp == Species::com) {
        rep.act.push_back(identity_mor(Flavor::set, 1));
        continue;
      }
      auto s  = perm_from_id(ac.morphism(g / nm).id);
      auto os = orders(a);
      Mor  f{Flavor::set, os.size(), os.size(), {}, {}};
      for (auto const& p : os) {
        std::vector<int> q(a);
        for (int i = 0; i < a; ++i) {
          q[i] = p[s[i]];
        }
        f.map.push_back(static_cast<int>(
            std::find(os.begin(), os.end(), q) - os.begin()));
      }
      rep.act.push_back(f);
    }
    return {el, rep};
  }

  // Σ_k (1/k!) Σ_{x: n ->> k} |Q(k)| Π_j |P(x^{-1}(j))|.
  long substitution_oracle(Species lower, Species upper, int n) {
    long total = 0;
    for (int k = 1; k <= n; ++k) {
      long sum = 0;
      for (auto const& x : enumerate_surjections(n, k)) {
        std::vector<int> fib(k, 0);
        for (int v : x) {
          ++fib[v];
        }
        long prod = species_size(upper, k);
        for (int f : fib) {
          prod *= species_size(lower, f);
        }
        sum += prod;
      }
      total += sum / factorial(k);
    }
    return total;
  }

  struct SurjSetup {
    SurjectionFixture    f;
    FactorizationWitness w;
    ElPtr                el_nu;
  };

  SurjSetup surj(int nmax) {
    SurjSetup s{build_surjection(nmax), {}, {}};
    s.w     = surjection_witness(s.f);
    s.el_nu = element_category(s.f.nu);
    return s;
  }

  std::size_t at(ElementRep const& d, int pair, int e) {
    return d.rep.value[d.el->object(pair, e)].size();
  }
}  // namespace

TEST_CASE("join functor") {
  auto s = surj(3);
  auto j = join_functor(s.w, 3, s.el_nu);
  CHECK(first_violation(check_functor(j.mu)) == "");
  // the length-one words hit exactly the basics
  for (auto const& [word, k] : j.word_index) {
    if (word.size() == 1) {
      int o = j.mu.obj[k];
      int p = j.el_rho->base_of(o);
      CHECK(j.el_rho->elem_of(o)
            == s.f.nu_incl.comp[p].map[s.el_nu->elem_of(word[0])]);
    }
  }
  // the empty word goes to the empty surjection
  CHECK(j.mu.obj[j.word_index.at({})] == j.el_rho->object(0, 0));

  auto c  = build_cospan(2, 0, CospanVariant::full);
  auto wc = cospan_witness(c);
  auto jc = join_functor(wc, 4);
  CHECK(first_violation(check_functor(jc.mu)) == "");
  // two single-vertex cospans 1 -> 1 join to the two-line identity
  int p11 = 1 * 3 + 1;
  int id1 = -1;
  for (std::size_t e = 0; e < c.elems[p11].size(); ++e) {
    if (c.elems[p11][e].blocks() == 1) {
      id1 = static_cast<int>(e);
    }
  }
  int nu_id = -1;
  for (std::size_t k = 0; k < c.nu_incl.comp[p11].map.size(); ++k) {
    if (c.nu_incl.comp[p11].map[k] == id1) {
      nu_id = static_cast<int>(k);
    }
  }
  REQUIRE(nu_id >= 0);
  int  x  = jc.el_nu->object(p11, nu_id);
  int  o  = jc.mu.obj[jc.word_index.at({x, x})];
  auto el = c.elems[jc.el_rho->base_of(o)][jc.el_rho->elem_of(o)];
  CHECK(el.name() == bijection_graph({0, 1}).name());
}

TEST_CASE("extended species are products over fibres") {
  auto s = surj(3);
  for (auto sp : {Species::com, Species::ass}) {
    auto d = species_rep(s.el_nu, s.f.nu, sp);
    REQUIRE(first_violation(check_element_rep(d)) == "");
    auto e = extend_rep(d, s.w, 3);
    CHECK(first_violation(check_element_rep(e.rep)) == "");
    auto const& el = *e.rep.el;
    for (std::size_t o = 0; o < el.cat->num_objects(); ++o) {
      int  p  = el.base_of(static_cast<int>(o));
      auto x  = s.f.elems[p][el.elem_of(static_cast<int>(o))];
      int  k  = p % 4;
      std::vector<int> fib(k, 0);
      for (int v : x) {
        ++fib[v];
      }
      long expect = 1;
      for (int f : fib) {
        expect *= species_size(sp, f);
      }
      CHECK(static_cast<long>(e.rep.rep.value[o].size()) == expect);
    }
  }
}

TEST_CASE("an empty value kills the words through it") {
  auto s = surj(3);
  auto d = species_rep(s.el_nu, s.f.nu, Species::com);
  int  o = s.el_nu->object(1 * 4 + 1, 0);
  d.rep.value[o] = Obj{Flavor::set, {}};
  for (std::size_t m = 0; m < d.rep.act.size(); ++m) {
    if (s.el_nu->cat->src(static_cast<int>(m)) == o) {
      d.rep.act[m] = Mor{Flavor::set, 0, 0, {}, {}};
    }
  }
  auto e  = extend_rep(d, s.w, 3);
  auto el = e.rep.el;
  for (std::size_t x = 0; x < el->cat->num_objects(); ++x) {
    int  p   = el->base_of(static_cast<int>(x));
    auto f   = s.f.elems[p][el->elem_of(static_cast<int>(x))];
    int  k   = p % 4;
    std::vector<int> fib(k, 0);
    for (int v : f) {
      ++fib[v];
    }
    bool has_unary = std::count(fib.begin(), fib.end(), 1) > 0;
    CHECK(e.rep.rep.value[x].size() == (has_unary ? 0u : 1u));
  }
}

TEST_CASE("chi commutes with horizontal extension") {
  auto s = surj(3);
  for (auto sp : {Species::com, Species::ass}) {
    auto d = species_rep(s.el_nu, s.f.nu, sp);
    auto c = chi_otimes_commute(d, s.w, 3);
    CHECK(first_violation(c.report) == "");
  }
  auto cf = build_cospan(2, 0, CospanVariant::full);
  auto wc = cospan_witness(cf);
  auto en = element_category(cf.nu);
  auto d  = species_rep(en, cf.nu, Species::ass);
  auto c  = chi_otimes_commute(d, wc, 4);
  CHECK(first_violation(c.report) == "");
  CHECK(c.iso.comp[2 * 3 + 2].dom > 0);
}

TEST_CASE("basic element plethysm of species is substitution") {
  auto s = surj(3);
  for (auto lo : {Species::com, Species::ass}) {
    for (auto up : {Species::com, Species::ass}) {
      auto d1 = species_rep(s.el_nu, s.f.nu, lo);
      auto d2 = species_rep(s.el_nu, s.f.nu, up);
      auto bp = basic_element_plethysm(d1, d2, s.f.monoid, s.w, 3);
      CHECK(first_violation(check_element_rep(bp.result)) == "");
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(static_cast<long>(at(bp.result, n * 4 + 1, 0))
              == substitution_oracle(lo, up, n));
      }
    }
  }
}

TEST_CASE("basic unit") {
  auto s = surj(3);
  auto u = basic_unit(s.f.monoid, s.w, s.el_nu, Flavor::set);
  for (int n = 1; n <= 3; ++n) {
    CHECK(at(u.rep, n * 4 + 1, 0) == (n == 1 ? 1u : 0u));
  }
  auto d  = species_rep(s.el_nu, s.f.nu, Species::ass);
  auto l  = basic_element_plethysm(u.rep, d, s.f.monoid, s.w, 3);
  auto r  = basic_element_plethysm(d, u.rep, s.f.monoid, s.w, 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(at(l.result, n * 4 + 1, 0) == at(d, n * 4 + 1, 0));
    CHECK(at(r.result, n * 4 + 1, 0) == at(d, n * 4 + 1, 0));
  }

  // properads: V_η is a point exactly on the single-vertex corollas 1 -> 1
  auto c  = build_cospan(2, 0, CospanVariant::nd);
  auto wc = cospan_witness(c);
  auto en = element_category(c.nu);
  auto uc = basic_unit(c.monoid, wc, en, Flavor::set);
  for (std::size_t o = 0; o < en->cat->num_objects(); ++o) {
    int p = en->base_of(static_cast<int>(o));
    CHECK(uc.rep.rep.value[o].size() == (p == 1 * 3 + 1 ? 1u : 0u));
  }
}

TEST_CASE("basic element plethysm is associative on sizes") {
  auto s  = surj(3);
  auto d1 = species_rep(s.el_nu, s.f.nu, Species::ass);
  auto d2 = species_rep(s.el_nu, s.f.nu, Species::com);
  auto l  = basic_element_plethysm(
      basic_element_plethysm(d1, d2, s.f.monoid, s.w, 3).result, d1,
      s.f.monoid, s.w, 3);
  auto r = basic_element_plethysm(
      d1, basic_element_plethysm(d2, d1, s.f.monoid, s.w, 3).result,
      s.f.monoid, s.w, 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(at(l.result, n * 4 + 1, 0) == at(r.result, n * 4 + 1, 0));
  }
}

TEST_CASE("extension turns basic plethysm into element plethysm") {
  auto s  = surj(3);
  auto d1 = species_rep(s.el_nu, s.f.nu, Species::ass);
  auto d2 = species_rep(s.el_nu, s.f.nu, Species::com);
  auto bp = basic_element_plethysm(d1, d2, s.f.monoid, s.w, 3);
  auto lhs = extend_rep(bp.result, s.w, 3, bp.e1.rep.el);
  auto rhs = element_plethysm(bp.e1.rep, bp.e2.rep, s.f.monoid);
  auto const& el = *lhs.rep.el;
  for (std::size_t o = 0; o < el.cat->num_objects(); ++o) {
    CHECK(lhs.rep.rep.value[o].size() == rhs.result.rep.value[o].size());
  }
}

TEST_CASE("basic relative product") {
  auto s    = surj(3);
  auto unit = basic_relative_unit(s.f.monoid, s.w);
  BasicRelative xi{s.f.nu, identity_repmap(s.f.nu.rep)};
  auto l = basic_relative_product(unit, xi, s.f.monoid, s.w);
  auto r = basic_relative_product(xi, unit, s.f.monoid, s.w);
  CHECK(check_bimodule(l.xi).ok());
  CHECK(check_bimodule_map(l.xi, s.f.nu, l.pi).ok());
  for (int p = 0; p < 16; ++p) {
    CHECK(l.xi.rep.value[p].size() == s.f.nu.rep.value[p].size());
    CHECK(r.xi.rep.value[p].size() == s.f.nu.rep.value[p].size());
  }
  // ν □_(ν) ν at (n,1) counts two-level trees of unlabeled corollas
  auto sq = basic_relative_product(xi, xi, s.f.monoid, s.w);
  for (int n = 1; n <= 3; ++n) {
    CHECK(sq.xi.rep.value[n * 4 + 1].size()
          == static_cast<std::size_t>(substitution_oracle(Species::com,
                                                          Species::com, n)));
  }
}
