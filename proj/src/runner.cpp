#include "plethysm/runner.hpp"

#include <filesystem>
#include <sstream>

#include "plethysm/algebra.hpp"
#include "plethysm/relative.hpp"

namespace plethysm {

  namespace {
    struct Source {
      Fixture     fx;
      std::string label;
      bool        builtin = false;
    };

    bool is_zoo_name(std::string const& s) {
      for (auto const& n : zoo_names()) {
        if (n == s) {
          return true;
        }
      }
      return false;
    }

    Source resolve(std::vector<std::string> const& args,
                   std::size_t                     at,
                   RunOptions const&               o,
                   std::string const&              stdin_text) {
      std::string arg = at < args.size() ? args[at] : "-";
      if (arg == "-") {
        return {parse_fixture(stdin_text), "stdin", false};
      }
      if (std::filesystem::exists(arg)) {
        return {load_fixture(arg), arg, false};
      }
      if (is_zoo_name(arg)) {
        return {zoo_fixture(arg, o), arg, true};
      }
      fail(ErrorCode::invalid_argument, "no fixture file or built-in named '" + arg + "'");
    }

    class Report {
     public:
      Report(std::string const& title, RunOptions const& o) : _o(o) {
        _body << title << '\n';
      }

      void line(std::string const& s) {
        _body << s << '\n';
      }
      void law(std::string const& name, LawReport const& r) {
        ++_laws;
        _body << name << ": " << (r.ok() ? "ok" : "FAIL") << '\n';
        // long reports are cut; the count is exact
        std::size_t shown = 0;
        for (auto const& v : r.violations) {
          if (shown++ == 20) {
            _body << "  ... " << r.violations.size() - 20 << " more\n";
            break;
          }
          _body << "  - " << v << '\n';
        }
        if (!r.ok()) {
          ++_failed;
        }
      }
      void flag(std::string const& name, bool ok, std::string const& detail = "") {
        LawReport r;
        if (!ok) {
          r.add(detail.empty() ? name + " does not hold" : detail);
        }
        law(name, r);
      }
      void key(std::string const& k, std::string const& v) {
        _summary.emplace_back(k, v);
      }

      RunResult finish() {
        _body << "result: " << (_failed ? "FAIL" : "ok") << '\n';
        if (_o.summary) {
          _body << "[summary]\n";
          for (auto const& [k, v] : _summary) {
            _body << k << '=' << v << '\n';
          }
          _body << "laws=" << _laws << '\n';
          _body << "failed=" << _failed << '\n';
        }
        return {_failed ? 1 : 0, _body.str()};
      }

     private:
      RunOptions const&                                _o;
      std::ostringstream                               _body;
      std::vector<std::pair<std::string, std::string>> _summary;
      int                                              _laws   = 0;
      int                                              _failed = 0;
    };

    std::string pair_label(CatPtr const& a, int p) {
      int n = static_cast<int>(a->num_objects());
      return "(" + a->object_id(p / n) + ", " + a->object_id(p % n) + ")";
    }

    std::size_t size_table(Report& rep, Bimodule const& r) {
      std::size_t total = 0;
      for (int p = 0; p < static_cast<int>(r.rep.value.size()); ++p) {
        auto k = r.rep.value[p].size();
        total += k;
        rep.line("  " + pair_label(r.action, p) + " " + std::to_string(k));
      }
      return total;
    }

    std::size_t el_table(Report& rep, ElementRep const& d) {
      std::size_t total = 0;
      for (int o = 0; o < static_cast<int>(d.rep.value.size()); ++o) {
        auto k = d.rep.value[o].size();
        total += k;
        rep.line("  " + d.el->cat->object_id(o) + " " + std::to_string(k));
      }
      return total;
    }

    Monoid const& need_monoid(Source const& s) {
      require(s.fx.monoid.has_value(), ErrorCode::invalid_argument,
              s.label + " has no GAMMA section");
      return *s.fx.monoid;
    }
    Bimodule const& need_bimodule(Source const& s) {
      require(s.fx.bimodule.has_value(), ErrorCode::invalid_argument,
              s.label + " has no BIMODULE section");
      return *s.fx.bimodule;
    }
    ElementRep const& need_rep(Source const& s) {
      require(s.fx.rep.has_value(), ErrorCode::invalid_argument, s.label + " has no REP section");
      return *s.fx.rep;
    }
    DecorationMonoid const& need_decor(Source const& s) {
      require(s.fx.decor.has_value(), ErrorCode::invalid_argument,
              s.label + " has no DECOR section");
      return *s.fx.decor;
    }
    void need_builtin(Source const& s, std::string const& name, std::string const& what) {
      require(s.builtin && s.label == name, ErrorCode::invalid_argument,
              what + " needs the built-in " + name + " fixture");
    }

    Monoid as_target(Monoid const& m, Flavor f) {
      return f == Flavor::vect ? linearize(m) : m;
    }
    ElementRep as_target(ElementRep const& d, Flavor f) {
      return f == Flavor::vect ? linearize(d) : d;
    }

    std::vector<std::vector<mpq_class>> unit_weights(ElementRep const& d) {
      std::vector<std::vector<mpq_class>> rows;
      for (auto const& v : d.rep.value) {
        rows.emplace_back(v.size(), mpq_class(1));
      }
      return rows;
    }

    // The action must be one of the two factorizable ones, matched by ids.
    FactorizableAction action_of(Bimodule const& r) {
      int  nmax = r.n() - 1;
      auto same = [&](CatPtr const& c) {
        if (c->num_objects() != r.action->num_objects()
            || c->num_morphisms() != r.action->num_morphisms()) {
          return false;
        }
        for (int m = 0; m < static_cast<int>(c->num_morphisms()); ++m) {
          if (c->morphism(m).id != r.action->morphism(m).id) {
            return false;
          }
        }
        return true;
      };
      require(nmax >= 1, ErrorCode::invalid_argument, "the action needs at least two objects");
      if (same(symmetric_groupoid(nmax))) {
        return factorizable_action(r.action, true);
      }
      if (same(discrete_naturals(nmax))) {
        return factorizable_action(r.action, false);
      }
      fail(ErrorCode::invalid_argument,
           "the action is neither the symmetric groupoid nor the discrete naturals");
    }

    FactorizationWitness builtin_witness(Source const& s, RunOptions const& o) {
      if (s.label == "cospan") {
        return cospan_witness(build_cospan(o.nmax, o.isolated_cap, o.variant));
      }
      if (s.label == "surjection") {
        return surjection_witness(build_surjection(o.nmax));
      }
      fail(ErrorCode::invalid_argument,
           "a factorization is only known for the built-in cospan and surjection fixtures");
    }

    Mor binary_op(int code) {
      Mor m{Flavor::set, 4, 2, {}, {}};
      for (int i = 0; i < 4; ++i) {
        m.map.push_back((code >> i) & 1);
      }
      return m;
    }

    bool associative(Mor const& mu) {
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

    // Commands

    RunResult cmd_check(std::vector<std::string> const& args,
                        RunOptions const&               o,
                        std::string const&              in) {
      require(!args.empty(), ErrorCode::invalid_argument, "check needs a suite");
      auto const& suite = args[0];
      auto        src   = resolve(args, 1, o, in);
      auto const& fx    = src.fx;
      Report      rep("check " + suite, o);
      rep.line("fixture: " + src.label);
      rep.line("target: " + flavor_name(o.target));
      rep.key("command", "check");
      rep.key("suite", suite);
      rep.key("fixture", src.label);
      bool all = suite == "all";
      bool any = false;
      auto want = [&](char const* s, bool present) {
        bool w = suite == s || (all && present);
        any    = any || w;
        return w;
      };
      if (want("category", true)) {
        rep.law("category", validate_category(*fx.action));
      }
      if (want("bimodule", fx.bimodule.has_value())) {
        auto const& r = need_bimodule(src);
        rep.law("bimodule", check_bimodule(o.target == Flavor::vect ? linearize(r) : r));
      }
      if (want("monoid", fx.monoid.has_value())) {
        rep.law("monoid", check_monoid(as_target(need_monoid(src), o.target)));
      }
      if (want("constraints", false)) {
        auto r = need_bimodule(src);
        if (o.target == Flavor::vect) {
          r = linearize(r);
        }
        rep.law("associator and unitors", check_constraints(r, r, r));
        rep.law("pentagon", check_pentagon(r, r, r, r));
        rep.law("triangle", check_triangle(r, r));
      }
      if (want("roundtrip", fx.monoid && fx.monoid->eta)) {
        auto const& m = need_monoid(src);
        require(m.eta.has_value(), ErrorCode::invalid_argument, src.label + " has no ETA section");
        rep.law("monoid -> category -> monoid", check_monoid_roundtrip(m));
        auto k = category_from_monoid(m);
        rep.law("category -> monoid -> category", check_category_roundtrip(m.r.action, k.i));
      }
      if (want("rep", fx.rep.has_value())) {
        rep.law("element rep", check_element_rep(as_target(need_rep(src), o.target)));
      }
      if (want("decor", fx.decor.has_value())) {
        rep.law("decoration monoid", check_decoration_monoid(need_decor(src)));
      }
      if (want("weight", fx.weight.has_value())) {
        require(fx.weight.has_value(), ErrorCode::invalid_argument, src.label + " has no WEIGHT");
        auto d   = linearize(need_rep(src));
        auto eps = weight_map(fx, d);
        auto t   = trivial_rep(d.el, Flavor::vect);
        rep.law("weight is natural", check_repmap(d.rep, t.rep, eps));
        auto wc = weight_to_relative(d, eps, need_monoid(src));
        rep.law("relative bimodule", check_relative_bimodule(wc.rel));
      }
      if (want("hereditary", false)) {
        need_builtin(src, "cospan", "check hereditary");
        auto f  = build_cospan(o.nmax, o.isolated_cap, o.variant);
        auto w  = cospan_witness(f);
        auto p  = plethysm_product(f.monoid.r, f.monoid.r);
        auto wp = plethysm_factorization(w, w, p);
        rep.law("γ hereditary", hereditary_check(gamma_on_classes(f.monoid, p), wp, w));
        rep.law("η hereditary",
                hereditary_check(*f.monoid.eta, basic_action_bimodule(w.ext.fa), w));
      }
      require(any, ErrorCode::invalid_argument, "unknown suite '" + suite + "'");
      return rep.finish();
    }

    RunResult cmd_plethysm(std::vector<std::string> const& args,
                           RunOptions const&               o,
                           std::string const&              in) {
      require(!args.empty(), ErrorCode::invalid_argument, "plethysm needs a kind");
      auto const& kind = args[0];
      auto        src  = resolve(args, 1, o, in);
      Report      rep("plethysm " + kind, o);
      rep.line("fixture: " + src.label);
      rep.key("command", "plethysm");
      rep.key("kind", kind);
      rep.key("fixture", src.label);
      std::size_t total = 0;
      if (kind == "box") {
        auto r = need_bimodule(src);
        if (o.target == Flavor::vect) {
          r = linearize(r);
        }
        auto p = plethysm_product(r, r);
        rep.line("values:");
        total = size_table(rep, p.product);
        rep.law("bimodule", check_bimodule(p.product));
      } else if (kind == "diamond") {
        // el(ρ) stays set-valued; only the reps move to the target
        auto d  = as_target(need_rep(src), o.target);
        auto ep = element_plethysm(d, d, need_monoid(src));
        rep.line("values:");
        total = el_table(rep, ep.result);
        rep.law("element rep", check_element_rep(ep.result));
      } else if (kind == "chi") {
        auto d = as_target(need_rep(src), o.target);
        auto c = chi(d, need_bimodule(src));
        rep.line("values:");
        total = size_table(rep, c.chi);
        rep.law("bimodule", check_bimodule(c.chi));
      } else if (kind == "relative") {
        require(src.fx.weight.has_value(), ErrorCode::invalid_argument,
                src.label + " has no WEIGHT");
        auto d  = linearize(need_rep(src));
        auto wc = weight_to_relative(d, weight_map(src.fx, d), need_monoid(src));
        auto rp = relative_plethysm(wc.rel, wc.rel);
        rep.line("values:");
        total = size_table(rep, rp.result.xi);
        rep.law("relative bimodule", check_relative_bimodule(rp.result));
      } else if (kind == "decorated") {
        auto const& dm  = need_decor(src);
        auto        dec = decorated_element_category(dm.d);
        auto        t   = trivial_rep(dec.el, Flavor::set);
        auto        res = decorated_plethysm(t, t, dm, dec);
        rep.line("values of terminal ⋄_D terminal:");
        total = el_table(rep, res.result);
        rep.law("element rep", check_element_rep(res.result));
      } else if (kind == "basic") {
        auto w     = builtin_witness(src, o);
        auto el_nu = element_category(w.nu);
        auto m     = need_monoid(src);
        ElementRep d;
        if (src.label == "surjection") {
          auto f  = build_surjection(o.nmax);
          auto pd = build_planar(f);
          d       = ElementRep{el_nu, restrict_rep(pd.dm.d.rep, el_map(el_nu, pd.dm.d.el, w.nu_incl))};
          m       = f.monoid;
        } else {
          d = trivial_rep(el_nu, Flavor::set);
          m = build_cospan(o.nmax, o.isolated_cap, o.variant).monoid;
        }
        auto bp = basic_element_plethysm(d, d, m, w, o.cap);
        rep.line("values:");
        total = el_table(rep, bp.result);
        rep.law("element rep", check_element_rep(bp.result));
      } else if (kind == "basic-relative") {
        auto w = builtin_witness(src, o);
        auto m = src.label == "surjection" ? build_surjection(o.nmax).monoid
                                           : build_cospan(o.nmax, o.isolated_cap, o.variant).monoid;
        auto u  = basic_relative_unit(m, w);
        auto pr = basic_relative_product(u, u, m, w);
        rep.line("values:");
        total = size_table(rep, pr.xi);
        rep.law("projection", check_bimodule_map(pr.xi, w.nu, pr.pi));
      } else {
        fail(ErrorCode::invalid_argument, "unknown plethysm kind '" + kind + "'");
      }
      rep.line("total: " + std::to_string(total));
      rep.key("total", std::to_string(total));
      return rep.finish();
    }

    RunResult cmd_extend(std::vector<std::string> const& args,
                         RunOptions const&               o,
                         std::string const&              in) {
      auto   src = resolve(args, 0, o, in);
      Report rep("extend", o);
      rep.line("fixture: " + src.label);
      rep.line("cap: " + std::to_string(o.cap));
      rep.key("command", "extend");
      rep.key("fixture", src.label);
      rep.key("cap", std::to_string(o.cap));
      auto const&      r  = need_bimodule(src);
      auto             fa = action_of(r);
      ExtensionOptions opts;
      opts.cap              = o.cap;
      opts.allow_truncation = true;
      if (src.builtin && src.label == "cospan") {
        opts.reduced         = false;
        opts.unit_letter_cap = o.isolated_cap;
      }
      auto e = horizontal_extension(o.target == Flavor::vect ? linearize(r) : r, fa, opts);
      rep.line(std::string("truncated: ") + (e.truncated ? "yes" : "no"));
      rep.line("values:");
      auto total = size_table(rep, e.ext);
      rep.line("total: " + std::to_string(total));
      rep.key("total", std::to_string(total));
      rep.law("bimodule", check_bimodule(e.ext));
      if (src.builtin && (src.label == "tau-naturals" || src.label == "tau-symmetric")) {
        auto mo = monad_structure(r, fa, o.cap, o.cap);
        rep.law("monad laws", mo.report);
      }
      return rep.finish();
    }

    RunResult cmd_correspond(std::vector<std::string> const& args,
                             RunOptions const&               o,
                             std::string const&              in) {
      require(!args.empty(), ErrorCode::invalid_argument, "correspond needs a theorem");
      auto const& thm = args[0];
      auto        src = resolve(args, 1, o, in);
      Report      rep("correspond " + thm, o);
      rep.line("fixture: " + src.label);
      rep.key("command", "correspond");
      rep.key("theorem", thm);
      rep.key("fixture", src.label);
      if (thm == "bimodcat") {
        auto const& m = need_monoid(src);
        require(m.eta.has_value(), ErrorCode::invalid_argument, src.label + " has no ETA section");
        rep.law("monoid -> category -> monoid", check_monoid_roundtrip(m));
        auto k = category_from_monoid(m);
        rep.law("category -> monoid -> category", check_category_roundtrip(m.r.action, k.i));
      } else if (thm == "element-relative") {
        bool any = false;
        if (src.fx.rep) {
          rep.law("rep -> relative -> rep", equivalence_roundtrip(*src.fx.rep, need_monoid(src)));
          any = true;
        }
        if (src.builtin && src.label == "glue") {
          auto g = build_glue({o.nmax, o.cap, o.isolated_cap});
          rep.law("relative -> rep -> relative", equivalence_roundtrip(g.rel));
          any = true;
        }
        require(any, ErrorCode::invalid_argument, src.label + " has no REP section");
      } else if (thm == "main-thm") {
        need_builtin(src, "surjection", "main-thm");
        auto ao   = build_assoc_operad(o.nmax);
        auto op   = plus_monoid_to_op(ao.monoid);
        auto back = plus_op_to_monoid(ao.op);
        rep.law("op -> monoid -> op", compare_ops(op, ao.op));
        rep.law("monoid -> op -> monoid", compare_basic_monoids(back, ao.monoid));
        rep.line("components: " + std::to_string(ao.op.comp.size()));
        rep.key("components", std::to_string(ao.op.comp.size()));
      } else if (thm == "algebra") {
        need_builtin(src, "surjection", "algebra");
        auto ao    = build_assoc_operad(o.nmax);
        auto ob    = power_module(factorizable_action(ao.f.monoid.r.action, true), 2);
        auto al    = basic_reference(ao, ob);
        auto ea    = reference_rep(al, ao.el_nu);
        int  count = 0;
        LawReport agree, trips;
        for (int code = 0; code < 16; ++code) {
          auto mu = binary_op(code);
          auto x  = fold_algebra(ao, ob, al, mu);
          bool ok = basic_algebra_check(ao.monoid, ob, ea, x).ok();
          if (ok != associative(mu)) {
            agree.add("product " + std::to_string(code) + " disagrees with the brute force");
          }
          if (ok) {
            ++count;
            auto sa = strong_algebra_check(ao.monoid.d, ao.f.nu, al, x);
            trips.merge(sa.report, "product " + std::to_string(code) + ": ");
          }
        }
        rep.line("algebras: " + std::to_string(count) + " of 16");
        rep.key("algebras", std::to_string(count));
        rep.law("agrees with brute force", agree);
        rep.law("transpose round trips", trips);
      } else if (thm == "decoration") {
        auto const& dm  = need_decor(src);
        auto        lam = lambda_iso(dm.d, dm.base.r);
        rep.law("Λ is an isomorphism", lam.report);
        auto pe = plus_element_equivalence(dm, o.seed, 2);
        rep.law("Λ* commutes with ⋄", pe.report);
      } else {
        fail(ErrorCode::invalid_argument, "unknown theorem '" + thm + "'");
      }
      return rep.finish();
    }
  }  // namespace

  std::vector<std::string> zoo_names() {
    return {"cospan", "trivial-cospan", "surjection", "glue", "tau-naturals", "tau-symmetric"};
  }

  Fixture zoo_fixture(std::string const& name, RunOptions const& o) {
    Fixture fx;
    fx.name = name;
    auto with_monoid = [&](Monoid const& m) {
      fx.action   = m.r.action;
      fx.bimodule = m.r;
      fx.monoid   = m;
      fx.el       = element_category(m.r);
    };
    if (name == "cospan") {
      with_monoid(build_cospan(o.nmax, o.isolated_cap, o.variant).monoid);
      fx.rep    = trivial_rep(fx.el, Flavor::set);
      fx.weight = unit_weights(*fx.rep);
    } else if (name == "trivial-cospan") {
      with_monoid(build_trivial_cospan(o.nmax, o.isolated_cap));
    } else if (name == "surjection") {
      auto f  = build_surjection(o.nmax);
      auto pd = build_planar(f);
      with_monoid(f.monoid);
      fx.el     = pd.dm.d.el;
      fx.rep    = pd.dm.d;
      fx.decor  = pd.dm;
      fx.weight = unit_weights(*fx.rep);
    } else if (name == "glue") {
      auto g = build_glue({o.nmax, o.cap, o.isolated_cap});
      with_monoid(g.glue);
    } else if (name == "tau-naturals" || name == "tau-symmetric") {
      auto r = build_tau(name == "tau-naturals" ? TauVariant::naturals : TauVariant::symmetric,
                         o.nmax);
      fx.action   = r.action;
      fx.bimodule = r;
      fx.el       = element_category(r);
    } else {
      fail(ErrorCode::invalid_argument, "unknown built-in fixture '" + name + "'");
    }
    return fx;
  }

  RunResult run_command(std::string const&              command,
                        std::vector<std::string> const& args,
                        RunOptions const&               o,
                        std::string const&              stdin_text) {
    if (command == "zoo") {
      require(args.size() == 1, ErrorCode::invalid_argument, "zoo needs one fixture name");
      return {0, emit_fixture(zoo_fixture(args[0], o))};
    }
    if (command == "check") {
      return cmd_check(args, o, stdin_text);
    }
    if (command == "plethysm") {
      return cmd_plethysm(args, o, stdin_text);
    }
    if (command == "extend") {
      return cmd_extend(args, o, stdin_text);
    }
    if (command == "correspond") {
      return cmd_correspond(args, o, stdin_text);
    }
    fail(ErrorCode::invalid_argument, "unknown command '" + command + "'");
  }

}  // namespace plethysm
