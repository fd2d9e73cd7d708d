#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plethysm/algebra.hpp"
#include "plethysm/zoo.hpp"

using namespace plethysm;

namespace {
  std::string first_violation(LawReport const& r) {
    return r.ok() ? "" : r.violations.front();
  }

  // μ on {0, 1} from a 4-bit code, entry (a, b) at bit 2a + b
  Mor binary_table(int code) {
    Mor m{Flavor::set, 4, 2, {}, {}};
    for (int i = 0; i < 4; ++i) {
      m.map.push_back((code >> i) & 1);
    }
    return m;
  }

  bool brute_associative(Mor const& mu) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int c = 0; c < 2; ++c) {
          if (mu.map[mu.map[a * 2 + b] * 2 + c] != mu.map[a * 2 + mu.map[b * 2 + c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  struct AssocSetup {
    AssocOperad ao;
    Rep         o;
    Bimodule    alpha_nu;
    ElementRep  e_alpha;
  };

  AssocSetup assoc_setup(int nmax) {
    AssocSetup s{build_assoc_operad(nmax), {}, {}, {}};
    s.o        = power_module(factorizable_action(s.ao.f.monoid.r.action, true), 2);
    s.alpha_nu = basic_reference(s.ao, s.o);
    s.e_alpha  = reference_rep(s.alpha_nu, s.ao.el_nu);
    return s;
  }

  // D => E_α over el(ρ) for the planar decoration: fold each fibre along
  // its order
  RepMap planar_fold(PlanarDecoration const& pd, Rep const& o, Bimodule const& alpha, Mor const& mu) {
    auto const& el = *pd.dm.d.el;
    int         n  = pd.dm.base.r.n();
    RepMap      out;
    for (std::size_t xo = 0; xo < el.obj_info.size(); ++xo) {
      int pr = el.base_of(static_cast<int>(xo));
      int a = pr / n, b = pr % n;
      Mor m{Flavor::set, pd.dm.d.rep.value[xo].size(), alpha.rep.value[pr].size(), {}, {}};
      std::vector<std::size_t> sizes(a, 2);
      for (auto const& fibres : pd.orders[xo]) {
        Mor h{Flavor::set, o.value[a].size(), o.value[b].size(), {}, {}};
        std::vector<std::size_t> out_sizes(b, 2);
        for (std::size_t t = 0; t < o.value[a].size(); ++t) {
          auto             tup = tensor_decode(sizes, t);
          std::vector<int> res;
          for (auto const& ord : fibres) {
            int acc = tup[ord[0]];
            for (std::size_t i = 1; i < ord.size(); ++i) {
              acc = mu.map[acc * 2 + tup[ord[i]]];
            }
            res.push_back(acc);
          }
          h.map.push_back(b == 0 ? 0 : static_cast<int>(tensor_encode(out_sizes, res)));
        }
        m.map.push_back(hom_index(o, a, b, h));
      }
      out.comp.push_back(std::move(m));
    }
    return out;
  }
}  // namespace

TEST_CASE("power module and reference sizes") {
  auto fa = symmetric_action(3);
  auto o  = power_module(fa, 2);
  CHECK(first_violation(check_rep(o)) == "");
  CHECK(o.value[3].size() == 8);
  auto alpha = reference_bimodule(o, [](int a, int b) { return a <= 2 && b <= 2; });
  CHECK(first_violation(check_bimodule(alpha)) == "");
  // c2: Maps(A^2, A) has 2^4 elements
  CHECK(alpha.value(2, 1).size() == 16);
  CHECK(alpha.value(2, 2).size() == 256);
  CHECK(alpha.value(3, 1).size() == 0);
  std::string msg;
  try {
    reference_bimodule(o);
  } catch (Error const& e) {
    msg = e.what();
  }
  CHECK(msg.find("exceeds the reference cap") != std::string::npos);
}

TEST_CASE("the full reference is a monoid") {
  auto fa = symmetric_action(2);
  auto m  = reference_from_module(power_module(fa, 2));
  CHECK(first_violation(check_monoid(m)) == "");
}

TEST_CASE("op and (⋄)-monoid forms of the associative operad agree") {
  for (int nmax : {2, 3}) {
    auto ao = build_assoc_operad(nmax);
    CHECK(first_violation(check_repmap(ao.monoid.bp.result.rep, ao.monoid.d.rep, ao.monoid.g))
          == "");
    auto op = plus_monoid_to_op(ao.monoid);
    CHECK(first_violation(compare_ops(op, ao.op)) == "");
    auto back = plus_op_to_monoid(op);
    CHECK(first_violation(compare_basic_monoids(back, ao.monoid)) == "");
  }
}

TEST_CASE("a non-equivariant op is rejected") {
  auto ao = build_assoc_operad(2);
  auto op = ao.op;
  bool done = false;
  for (auto& comps : op.comp) {
    for (auto& m : comps) {
      if (!done && m.cod > 1 && !m.map.empty()) {
        m.map[0] = (m.map[0] + 1) % static_cast<int>(m.cod);
        done = true;
      }
    }
  }
  REQUIRE(done);
  std::string msg;
  try {
    plus_op_to_monoid(op);
  } catch (Error const& e) {
    msg = e.what();
  }
  CHECK(msg.find("op compositions") != std::string::npos);
}

TEST_CASE("strong algebras round trip through χ_D => α") {
  auto s  = assoc_setup(3);
  auto x  = fold_algebra(s.ao, s.o, s.alpha_nu, binary_table(0b1000));  // and
  auto sa = strong_algebra_check(s.ao.monoid.d, s.ao.f.nu, s.alpha_nu, x);
  CHECK(first_violation(sa.report) == "");
  CHECK(sa.phi.has_value());
}

TEST_CASE("basic algebras of the associative operad are the associative products") {
  auto s     = assoc_setup(3);
  int  count = 0;
  for (int code = 0; code < 16; ++code) {
    auto mu   = binary_table(code);
    auto x    = fold_algebra(s.ao, s.o, s.alpha_nu, mu);
    bool ok   = basic_algebra_check(s.ao.monoid, s.o, s.e_alpha, x).ok();
    CHECK(ok == brute_associative(mu));
    count += ok;
  }
  CHECK(count == 8);
}

TEST_CASE("juxtaposition merger is lawful") {
  auto fa    = symmetric_action(2);
  auto o     = power_module(fa, 2);
  auto alpha = reference_bimodule(o);
  CHECK(first_violation(merger_check(alpha, fa, juxtaposition_merger(o, alpha), 2, 2)) == "");

  SUBCASE("a corrupted merger breaks the unit law") {
    auto good = juxtaposition_merger(o, alpha);
    Merger bad = [&](HorizontalExtension const& e) {
      auto m = good(e);
      int  p = alpha.pair(1, 1);
      // send the identity table of A to the swap
      m.comp[p].map[0] = m.comp[p].map[0] == 0 ? 1 : 0;
      return m;
    };
    auto r = merger_check(alpha, fa, bad, 2, 2);
    CHECK_FALSE(r.ok());
  }
}

TEST_CASE("the terminal merger on τ is lawful") {
  for (auto v : {TauVariant::naturals, TauVariant::symmetric}) {
    auto tau = build_tau(v, 2);
    auto fa  = factorizable_action(tau.action, v == TauVariant::symmetric);
    CHECK(first_violation(merger_check(tau, fa, terminal_merger(), 2, 2)) == "");
  }
}

TEST_CASE("monoid maps χ_D => α against ψ on generators") {
  auto f  = build_surjection(2);
  auto pd = build_planar(f);
  auto o  = power_module(factorizable_action(f.monoid.r.action, true), 2);
  auto am = reference_from_module(o);
  auto c  = chi(pd.dm.d, f.monoid.r);
  auto cm = chi_monoid(pd.dm, c);
  for (int code : {0b1000, 0b0110}) {  // and, xor: both associative
    auto psi = planar_fold(pd, o, am.r, binary_table(code));
    auto phi = algebra_from_rep(c, pd.dm.d.el, am.r, psi);
    REQUIRE(phi.has_value());
    auto ma = monoid_algebra_check(pd.dm, c, cm, am, *phi);
    CHECK(first_violation(ma.report) == "");
    CHECK(ma.chi_square);
    CHECK(ma.rep_square);
    CHECK(ma.agree);
  }
  // fibres have at most two points here, so corrupt the 1 -> 1 identity
  // instead: the constant table breaks γ(x, id) = x
  auto psi = planar_fold(pd, o, am.r, binary_table(0b1000));
  int  id1 = pd.dm.d.el->object(f.monoid.r.pair(1, 1), 0);
  psi.comp[id1].map[0] = 0;
  auto phi = algebra_from_rep(c, pd.dm.d.el, am.r, psi);
  REQUIRE(phi.has_value());
  auto ma = monoid_algebra_check(pd.dm, c, cm, am, *phi);
  CHECK_FALSE(ma.chi_square);
  CHECK_FALSE(ma.rep_square);
  CHECK(ma.agree);
}

TEST_CASE("lax algebras are families natural in the word") {
  auto f  = build_surjection(2);
  auto pd = build_planar(f);
  auto o  = power_module(factorizable_action(f.monoid.r.action, true), 2);
  auto al = reference_bimodule(o);
  auto e  = reference_rep(al, pd.dm.d.el);
  auto psi = planar_fold(pd, o, al, binary_table(0b1110));  // or
  REQUIRE(first_violation(check_repmap(pd.dm.d.rep, e.rep, psi)) == "");

  auto ao = build_assoc_operad(2);
  auto ex = extend_rep(ao.monoid.d, ao.w, 2, pd.dm.d.el);
  // ψ on D^⊗ through the words: juxtapose folded letters
  RepMap lax;
  for (std::size_t xo = 0; xo < ex.rep.rep.value.size(); ++xo) {
    Mor m{Flavor::set, ex.rep.rep.value[xo].size(), e.rep.value[xo].size(), {}, {}};
    for (std::size_t k = 0; k < ex.rep.rep.value[xo].size(); ++k) {
      auto dec = decode_extended(ex, ao.monoid.d, static_cast<int>(xo), static_cast<int>(k));
      int  n   = f.monoid.r.n();
      std::vector<Mor> hs;
      for (std::size_t i = 0; i < dec.letters.size(); ++i) {
        int l  = dec.letters[i];
        int lo = ao.nu_to_rho.obj[l];
        int pl = ao.el_nu->base_of(l);
        hs.push_back(hom_table(o, pl / n, pl % n, psi.comp[lo].map[dec.elems[i]]));
      }
      Mor h = act_on_table(o, dec.frame,
                           hs.empty() ? identity_mor(Flavor::set, 1) : tensor(hs));
      int pr = pd.dm.d.el->base_of(static_cast<int>(xo));
      m.map.push_back(hom_index(o, pr / n, pr % n, h));
    }
    lax.comp.push_back(std::move(m));
  }
  CHECK(first_violation(check_repmap(ex.rep.rep, e.rep, lax)) == "");
  auto fam  = lax_family(ex, lax);
  auto back = lax_from_family(ex, e, fam);
  REQUIRE(back.has_value());
  for (std::size_t xo = 0; xo < lax.comp.size(); ++xo) {
    CHECK(equal(back->comp[xo], lax.comp[xo]));
  }
}
