#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "plethysm/decorate.hpp"
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

  long binom(int n, int k) {
    if (k < 0 || k > n) {
      return 0;
    }
    long b = 1;
    for (int i = 1; i <= k; ++i) {
      b = b * (n - k + i) / i;
    }
    return b;
  }

  // Same values and action, read over another category with the same
  // indexing.
  ElementRep reindex(ElementRep const& d, ElPtr const& el) {
    Rep r = d.rep;
    r.base = el->cat;
    return {el, r};
  }

  DecorationMonoid trivial_decoration(Monoid const& m) {
    auto el = element_category(m.r);
    return decoration_monoid(trivial_rep(el, Flavor::set), m,
                             [](int, int, int, int, int, int, int) { return 0; });
  }
}  // namespace

TEST_CASE("planar decoration orders each fibre") {
  auto f  = build_surjection(3);
  auto dm = planar_decoration(f);
  CHECK(first_violation(check_element_rep(dm.d)) == "");
  CHECK(first_violation(check_decoration_monoid(dm)) == "");
  for (std::size_t o = 0; o < dm.d.el->obj_info.size(); ++o) {
    auto [pr, x] = dm.d.el->obj_info[o];
    std::map<int, int> fib;
    for (int b : f.elems[pr][x]) {
      ++fib[b];
    }
    long expect = 1;
    for (auto [b, k] : fib) {
      expect *= factorial(k);
    }
    CHECK(static_cast<long>(dm.d.rep.value[o].size()) == expect);
  }
}

TEST_CASE("a product that depends on middle labels does not descend") {
  auto f    = build_surjection(2);
  auto good = planar_decoration(f);
  auto const& r = f.monoid.r;
  // picks a different order for one labeling of the middle set only
  auto bad = [&](int a, int b, int c, int x, int y, int, int) {
    int ny = static_cast<int>(r.value(b, c).size());
    int z  = f.monoid.g(a, b, c).map[x * ny + y];
    int k  = static_cast<int>(
        good.d.rep.value[good.d.el->object(r.pair(a, c), z)].size());
    return b == 2 && x == 0 ? 1 % k : 0;
  };
  std::string msg;
  try {
    decoration_monoid(good.d, f.monoid, bad);
  } catch (Error const& e) {
    msg = e.what();
  }
  CHECK(msg.find("does not descend") != std::string::npos);
}

TEST_CASE("Λ identifies el(D) with el(χ_D)") {
  auto f = build_surjection(3);
  SUBCASE("planar") {
    auto dm  = planar_decoration(f);
    auto lam = lambda_iso(dm.d, f.monoid.r);
    CHECK(first_violation(lam.report) == "");
    std::size_t total = 0;
    for (auto const& v : dm.d.rep.value) {
      total += v.size();
    }
    CHECK(lam.el_chi->obj_info.size() == total);
    // χ_D(n, m): fibre orders over all surjections, C(n-1, m-1) n!
    int n = f.nmax + 1;
    for (int a = 0; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        CHECK(static_cast<long>(lam.chi.chi.value(a, b).size())
              == binom(a - 1, b - 1) * factorial(a));
      }
    }
  }
  SUBCASE("trivial") {
    auto dm  = trivial_decoration(f.monoid);
    auto lam = lambda_iso(dm.d, f.monoid.r);
    CHECK(first_violation(lam.report) == "");
    for (std::size_t p = 0; p < f.monoid.r.rep.value.size(); ++p) {
      CHECK(lam.chi.chi.rep.value[p].size() == f.monoid.r.rep.value[p].size());
    }
  }
}

TEST_CASE("χ of the planar decoration is an associative monoid") {
  auto f  = build_surjection(3);
  auto dm = planar_decoration(f);
  auto pe = plus_equivalence_setup(dm);
  CHECK(first_violation(pe.report) == "");
  CHECK(first_violation(check_monoid(pe.chi_m)) == "");
}

TEST_CASE("trivial decoration recovers the undecorated product") {
  auto f   = build_surjection(3);
  auto dm  = trivial_decoration(f.monoid);
  auto dec = decorated_element_category(dm.d);
  REQUIRE(dec.el->obj_info.size() == dm.d.el->obj_info.size());
  for (unsigned seed : {3u, 11u, 42u}) {
    auto e1  = random_component_rep(dm.d.el, Flavor::set, seed, 2);
    auto e2  = random_component_rep(dm.d.el, Flavor::set, seed + 100, 2);
    auto lhs = decorated_plethysm(reindex(e1, dec.el), reindex(e2, dec.el), dm, dec);
    auto rhs = element_plethysm(e1, e2, f.monoid);
    CHECK(first_violation(check_rep(lhs.result.rep)) == "");
    for (std::size_t o = 0; o < rhs.result.rep.value.size(); ++o) {
      CHECK(lhs.result.rep.value[o].size() == rhs.result.rep.value[o].size());
    }
  }
}

TEST_CASE("planar terminal ⋄ terminal counts interval cuts") {
  auto f   = build_surjection(3);
  auto dm  = planar_decoration(f);
  auto dec = decorated_element_category(dm.d);
  auto t   = trivial_rep(dec.el, Flavor::set);
  auto res = decorated_plethysm(t, t, dm, dec);
  CHECK(first_violation(check_rep(res.result.rep)) == "");
  auto const& e = *dm.d.el;
  for (std::size_t o = 0; o < dec.el->obj_info.size(); ++o) {
    int xo = dec.el->base_of(static_cast<int>(o));
    auto [pr, x] = e.obj_info[xo];
    // each fibre order is cut into consecutive nonempty pieces
    std::map<int, int> fib;
    for (int b : f.elems[pr][x]) {
      ++fib[b];
    }
    long expect = 1;
    for (auto [b, k] : fib) {
      expect *= 1L << (k - 1);
    }
    CHECK(static_cast<long>(res.result.rep.value[o].size()) == expect);
  }
}

TEST_CASE("Λ carries ⋄ over χ_D to ⋄_D") {
  auto f = build_surjection(3);
  SUBCASE("planar") {
    auto pe = plus_element_equivalence(planar_decoration(f), 7u, 4);
    CHECK(first_violation(pe.report) == "");
  }
  SUBCASE("trivial") {
    auto pe = plus_element_equivalence(trivial_decoration(f.monoid), 19u, 3);
    CHECK(first_violation(pe.report) == "");
  }
}

TEST_CASE("component reps are seeded and constant on components") {
  auto f  = build_surjection(2);
  auto el = element_category(f.monoid.r);
  auto a  = random_component_rep(el, Flavor::set, 5u, 3);
  auto b  = random_component_rep(el, Flavor::set, 5u, 3);
  CHECK(first_violation(check_element_rep(a)) == "");
  for (std::size_t o = 0; o < a.rep.value.size(); ++o) {
    CHECK(a.rep.value[o] == b.rep.value[o]);
  }
  auto const& c = *el->cat;
  for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m) {
    CHECK(a.rep.value[c.src(m)].size() == a.rep.value[c.tgt(m)].size());
  }
  auto v = random_component_rep(el, Flavor::vect, 5u, 3);
  CHECK(first_violation(check_element_rep(v)) == "");
}
