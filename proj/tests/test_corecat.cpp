#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "plethysm/corecat.hpp"

using namespace plethysm;

namespace {
  CatPtr s2() {
    return group_category("S2", {"e", "s"}, {{0, 1}, {1, 0}});
  }

  // one object, identity plus three morphisms; every composite is a except
  // c o b = b, which breaks exactly one triple
  std::shared_ptr<FinCategory> bad_table() {
    auto c = std::make_shared<FinCategory>();
    c->add_object("X");
    int e = c->add_morphism("e", 0, 0);
    c->add_morphism("a", 0, 0);
    c->add_morphism("b", 0, 0);
    c->add_morphism("c", 0, 0);
    c->set_identity(0, e);
    c->finalize([](int g, int f) {
      if (g == 0) {
        return f;
      }
      if (f == 0) {
        return g;
      }
      return (g == 3 && f == 2) ? 2 : 1;
    });
    return c;
  }
}  // namespace

TEST_CASE("group category is lawful") {
  CHECK(validate_category(*s2()).ok());
  CHECK(s2()->is_groupoid());
}

TEST_CASE("non-associative table lists one violation") {
  auto r = validate_category(*bad_table());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].find("associativity") != std::string::npos);
  CHECK_FALSE(bad_table()->is_groupoid());
}

TEST_CASE("opposite product of S2 with itself") {
  auto p = opposite_product(s2(), s2());
  CHECK(p->num_objects() == 1);
  CHECK(p->num_morphisms() == 4);
  CHECK(validate_category(*p).ok());
  // (f2,g2) o (f1,g1) = (f1 f2, g2 g1); S2 is abelian so check shape only
  int m = p->find_morphism("(s|e)");
  CHECK(p->compose(m, m) == p->find_morphism("(e|e)"));
}

TEST_CASE("symmetric groupoid") {
  auto s = symmetric_groupoid(3);
  CHECK(s->num_objects() == 4);
  CHECK(s->num_morphisms() == 1 + 1 + 2 + 6);
  CHECK(validate_category(*s).ok());
  CHECK(s->is_groupoid());
  auto p = perm_from_id("s3:1.2.0");
  CHECK(perm_id(p) == "s3:1.2.0");
  CHECK(s->hom(3, 3).size() == 6);
  CHECK(s->hom(2, 3).empty());
}

TEST_CASE("opposite product reverses the first factor") {
  auto s  = symmetric_groupoid(3);
  auto p  = opposite_product(s, s);
  CHECK(validate_category(*p).ok());
  std::mt19937 rng(7);
  auto const&  h = s->hom(3, 3);
  for (int it = 0; it < 50; ++it) {
    int f1 = h[rng() % h.size()], f2 = h[rng() % h.size()];
    int g1 = h[rng() % h.size()], g2 = h[rng() % h.size()];
    int n  = static_cast<int>(s->num_morphisms());
    int a  = f1 * n + g1, b = f2 * n + g2;
    CHECK(p->compose(b, a) == s->compose(f1, f2) * n + s->compose(g2, g1));
  }
}

TEST_CASE("comma of identity functors on a group") {
  auto g  = s2();
  auto id = identity_functor(g);
  auto cc = comma_category(id, id);
  // objects are (x, y, m : x -> y); morphisms commuting squares
  CHECK(cc.cat->num_objects() == 2);
  CHECK(cc.cat->num_morphisms() == 8);
  CHECK(validate_category(*cc.cat).ok());
  CHECK(check_functor(cc.proj_src).ok());
  CHECK(check_functor(cc.proj_tgt).ok());
}

TEST_CASE("functor and natural transformation checks") {
  auto g  = s2();
  auto t  = terminal_category();
  Functor to_t{g, t, {0}, {0, 0}};
  CHECK(check_functor(to_t).ok());
  Functor bad{g, g, {0}, {1, 1}};
  CHECK_FALSE(check_functor(bad).ok());
  auto     id = identity_functor(g);
  NatTrans n{id, id, {1}};
  CHECK(check_nat(n).ok());
}

TEST_CASE("morphism cap") {
  auto old = morphism_cap();
  set_morphism_cap(5);
  CHECK_THROWS_AS(symmetric_groupoid(3), Error);
  set_morphism_cap(old);
}

TEST_CASE("full subcategory") {
  auto s        = symmetric_groupoid(3);
  auto [sub, i] = full_subcategory(s, {0, 2});
  CHECK(sub->num_objects() == 2);
  CHECK(sub->num_morphisms() == 3);
  CHECK(check_functor(i).ok());
}
