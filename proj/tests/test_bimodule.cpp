#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "plethysm/bimodule.hpp"
#include "plethysm/zoo.hpp"

using namespace plethysm;

namespace {
  // Coend over a groupoid by brute force: orbits of pairs (x, y) with
  // x in r1(A,B), y in r2(B,C) under (x, y) ~ (x.s, s^-1.y), B ranging
  // over objects. Computed on raw element indices.
  std::size_t orbit_count(Bimodule const& r1,
                          Bimodule const& r2,
                          int             a,
                          int             c) {
    auto const&                           cat = *r1.action;
    std::set<std::pair<int, std::pair<int, int>>> seen;
    std::size_t                           orbits = 0;
    for (int b = 0; b < r1.n(); ++b) {
      for (int x = 0; x < static_cast<int>(r1.value(a, b).size()); ++x) {
        for (int y = 0; y < static_cast<int>(r2.value(b, c).size()); ++y) {
          if (seen.count({b, {x, y}})) {
            continue;
          }
          ++orbits;
          for (int s : cat.hom(b, b)) {
            int si = cat.inverse(s);
            int x2 = r1.right(a, s).map[x];
            int y2 = r2.left(si, c).map[y];
            seen.insert({b, {x2, y2}});
          }
        }
      }
    }
    return orbits;
  }

  void corrupt_first_nonconstant(Monoid& m) {
    for (auto& g : m.gamma) {
      if (g.dom >= 2 && g.cod >= 2) {
        g.map[0] = (g.map[0] + 1) % static_cast<int>(g.cod);
        return;
      }
    }
  }
}  // namespace

TEST_CASE("hom bimodule") {
  auto s2 = group_category("S2", {"e", "s"}, {{0, 1}, {1, 0}});
  auto h  = hom_unit(s2, Flavor::set);
  CHECK(check_bimodule(h).ok());
  CHECK(h.value(0, 0).size() == 2);
  auto sg = symmetric_groupoid(2);
  auto hs = hom_unit(sg, Flavor::vect);
  CHECK(check_bimodule(hs).ok());
  CHECK(hs.value(2, 2).size() == 2);
  CHECK(hs.value(1, 2).size() == 0);
}

TEST_CASE("plethysm class counts match the orbit oracle") {
  auto cf = build_cospan(2, 1, CospanVariant::full);
  auto sf = build_surjection(3);
  for (auto const* r : {&cf.monoid.r, &sf.monoid.r}) {
    auto p = plethysm_product(*r, *r);
    for (int a = 0; a < r->n(); ++a) {
      for (int c = 0; c < r->n(); ++c) {
        CHECK(p.at(a, c).obj.size() == orbit_count(*r, *r, a, c));
      }
    }
  }
  // factored surjections 3 -> m -> 1 up to relabeling the middle
  CHECK(plethysm_product(sf.monoid.r, sf.monoid.r).at(3, 1).obj.size() == 5);
}

TEST_CASE("cowedge and cocone presentations agree on groupoids") {
  auto sf = build_surjection(3);
  auto p1 = plethysm_product(sf.monoid.r, sf.monoid.r, CoendMode::cowedge);
  auto p2 = plethysm_product(sf.monoid.r, sf.monoid.r, CoendMode::cocone);
  CHECK(p1.used_cocone == false);
  CHECK(p2.used_cocone == true);
  CHECK(same_values(p1.product, p2.product));
  CHECK(check_bimodule(p1.product).ok());
  auto lf  = linearize(sf.monoid.r);
  auto pv1 = plethysm_product(lf, lf, CoendMode::cowedge);
  auto pv2 = plethysm_product(lf, lf, CoendMode::cocone);
  for (std::size_t i = 0; i < pv1.coend.size(); ++i) {
    CHECK(pv1.coend[i].obj.size() == pv2.coend[i].obj.size());
    CHECK(pv1.coend[i].obj.size() == p1.coend[i].obj.size());
  }
}

TEST_CASE("monoidal constraints and coherence") {
  auto sf = build_surjection(2);
  auto r  = sf.monoid.r;
  auto rep = check_constraints(r, r, r);
  CHECK_MESSAGE(rep.ok(), (rep.ok() ? "" : rep.violations.front()));
  CHECK(check_pentagon(r, r, sf.nu, r).ok());
  CHECK(check_triangle(r, sf.nu).ok());
  auto lu = left_unitor(r);
  CHECK(is_iso(lu.map));
  CHECK(check_bimodule_map(lu.p.product, r, lu.map).ok());
  auto ru = right_unitor(linearize(r));
  CHECK(is_iso(ru.map));
}

TEST_CASE("corrupted gamma is reported") {
  auto sf = build_surjection(2);
  auto m  = sf.monoid;
  REQUIRE(check_monoid(m).ok());
  corrupt_first_nonconstant(m);
  CHECK_FALSE(check_monoid(m).ok());
}

TEST_CASE("category and monoid round trips") {
  auto cf = build_cospan(2, 1, CospanVariant::full);
  auto rep = check_monoid_roundtrip(cf.monoid);
  CHECK_MESSAGE(rep.ok(), (rep.ok() ? "" : rep.violations.front()));
  auto k  = category_from_monoid(cf.monoid);
  CHECK(validate_category(*k.k).ok());
  // Hom_K(1,1) is the set of cospans 1 -> V <- 1
  CHECK(k.k->hom(1, 1).size() == cf.monoid.r.value(1, 1).size());
  auto rep2 = check_category_roundtrip(cf.monoid.r.action, k.i);
  CHECK_MESSAGE(rep2.ok(), (rep2.ok() ? "" : rep2.violations.front()));
  CHECK(check_monoid_roundtrip(build_surjection(3).monoid).ok());
}
