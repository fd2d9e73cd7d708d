#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plethysm/runner.hpp"

using namespace plethysm;

namespace {
  std::string parse_error(std::string const& text) {
    try {
      parse_fixture(text);
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::parse);
      return e.what();
    }
    return "";
  }

  // Z/2 acting on one object, with a two-element bimodule that it swaps.
  char const* const z2 = R"(# a group of order two
OBJECTS
0
MORPHISMS
e 0 0 identity
s 0 0
COMPOSE
s s e
BIMODULE swap
V 0 0 a b
L s 0 b a
R 0 s b a
)";
}  // namespace

TEST_CASE("a hand-written fixture parses") {
  auto f = parse_fixture(z2);
  REQUIRE(f.bimodule.has_value());
  CHECK(f.name == "swap");
  CHECK(f.action->num_morphisms() == 2);
  CHECK(f.bimodule->value(0, 0).size() == 2);
  CHECK(check_bimodule(*f.bimodule).ok());
  CHECK_FALSE(f.monoid.has_value());
}

TEST_CASE("identities are added when not declared") {
  auto f = parse_fixture("OBJECTS\na b\nMORPHISMS\nf a b\nBIMODULE\nV a b x\n");
  CHECK(f.action->num_morphisms() == 3);
  CHECK(f.action->find_morphism("1_a") >= 0);
}

TEST_CASE("parse errors carry line and column") {
  SUBCASE("malformed composition triple") {
    auto msg = parse_error("OBJECTS\n0 1\nMORPHISMS\nf 0 1\ng 0 1\nCOMPOSE\nf g f\n");
    CHECK(msg.find("line 7, column 1") != std::string::npos);
    CHECK(msg.find("f g f") != std::string::npos);
  }
  SUBCASE("unknown element") {
    std::string t = z2;
    t.replace(t.find("L s 0 b a"), 9, "L s 0 b c");
    auto msg = parse_error(t);
    CHECK(msg.find("line 11, column 9") != std::string::npos);
    CHECK(msg.find("unknown element 'c'") != std::string::npos);
  }
  SUBCASE("missing composite") {
    auto msg = parse_error("OBJECTS\n0\nMORPHISMS\ns 0 0\nBIMODULE\n");
    CHECK(msg.find("COMPOSE has no entry for s s") != std::string::npos);
  }
  SUBCASE("content before a section") {
    CHECK(parse_error("0 1\n").find("line 1, column 1") != std::string::npos);
  }
  SUBCASE("wrong image count") {
    std::string t = z2;
    t.replace(t.find("R 0 s b a"), 9, "R 0 s b");
    CHECK(parse_error(t).find("expected 2 images") != std::string::npos);
  }
  SUBCASE("non-commuting sides") {
    auto msg = parse_error(
        "OBJECTS\n0\nMORPHISMS\ne 0 0 identity\ns 0 0\nCOMPOSE\ns s e\nBIMODULE\nV 0 0 a b c\nL s 0 b a c\n"
        "R 0 s a c b\n");
    CHECK(msg.find("line 8") != std::string::npos);
    CHECK(msg.find("not a bimodule") != std::string::npos);
  }
}

TEST_CASE("built-in fixtures round trip through the text format") {
  RunOptions o;
  for (auto const& name : zoo_names()) {
    CAPTURE(name);
    auto o2 = o;
    if (name == "glue") {
      o2.nmax = 1;
      o2.cap  = 1;
    }
    auto text = emit_fixture(zoo_fixture(name, o2));
    auto back = parse_fixture(text);
    CHECK(emit_fixture(back) == text);
    if (back.monoid) {
      CHECK(check_monoid(*back.monoid).ok());
    }
    if (back.decor) {
      CHECK(check_decoration_monoid(*back.decor).ok());
    }
  }
}

TEST_CASE("runner commands") {
  RunOptions o;
  o.summary = true;
  SUBCASE("zoo then check monoid") {
    auto z = run_command("zoo", {"cospan"}, o);
    CHECK(z.status == 0);
    auto r = run_command("check", {"monoid"}, o, z.report);
    CHECK(r.status == 0);
    CHECK(r.report.find("monoid: ok") != std::string::npos);
    CHECK(r.report.find("failed=0") != std::string::npos);
  }
  SUBCASE("a broken product fails the monoid suite") {
    auto text = run_command("zoo", {"surjection"}, o).report;
    // γ(s:01, s:01) = s:01 at (2, 2, 2); make it s:10
    std::string good = "\n2 2 2 s:01 s:01 s:01\n";
    auto        at   = text.find(good);
    REQUIRE(at != std::string::npos);
    text.replace(at, good.size(), "\n2 2 2 s:01 s:01 s:10\n");
    // the DECOR products no longer fit, so drop everything after GAMMA
    text = text.substr(0, text.find("ETA\n"));
    auto r = run_command("check", {"monoid"}, o, text);
    CHECK(r.status == 1);
    CHECK(r.report.find("monoid: FAIL") != std::string::npos);
  }
  SUBCASE("main theorem on surjections") {
    auto r = run_command("correspond", {"main-thm", "surjection"}, o);
    CHECK(r.status == 0);
    CHECK(r.report.find("op -> monoid -> op: ok") != std::string::npos);
  }
  SUBCASE("reports are deterministic") {
    auto a = run_command("plethysm", {"diamond", "surjection"}, o);
    auto b = run_command("plethysm", {"diamond", "surjection"}, o);
    CHECK(a.report == b.report);
    CHECK(a.status == 0);
  }
  SUBCASE("extension of τ over ℕ") {
    auto r = run_command("extend", {"tau-naturals"}, o);
    CHECK(r.status == 0);
    CHECK(r.report.find("  (1, 1) 3\n") != std::string::npos);
  }
  SUBCASE("unknown input is rejected") {
    CHECK_THROWS_AS(run_command("check", {"monoid", "no-such-fixture"}, o), Error);
    CHECK_THROWS_AS(run_command("frobnicate", {}, o), Error);
  }
}
