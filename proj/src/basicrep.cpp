#include "plethysm/basicrep.hpp"

#include <algorithm>
#include <numeric>

namespace plethysm {

  namespace {
    Obj tensor_all(std::vector<Obj> const& xs, Flavor f) {
      return xs.empty() ? unit_obj(f) : tensor(xs);
    }

    Mor tensor_all(std::vector<Mor> const& fs, Flavor f) {
      return fs.empty() ? identity_mor(f, 1) : tensor(fs);
    }

    Word letters_of(ElementCat const& el, int n, std::vector<int> const& w) {
      Word out;
      for (int o : w) {
        int p = el.base_of(o);
        out.emplace_back(p / n, p % n);
      }
      return out;
    }
  }  // namespace

  JoinFunctor join_functor(FactorizationWitness const& w,
                           int                         cap,
                           ElPtr                       el_nu,
                           ElPtr                       el_rho) {
    JoinFunctor j;
    j.el_nu  = el_nu ? el_nu : element_category(w.nu);
    j.el_rho = el_rho ? el_rho : element_category(w.rho);
    auto const& fa   = w.ext.fa;
    auto const& opts = w.ext.opts;
    int         n    = w.rho.n();
    auto const& eln  = *j.el_nu;
    WordFilter  keep = [&](std::vector<int> const& word) {
      int a = 0, b = 0, units = 0;
      for (auto [x, y] : letters_of(eln, n, word)) {
        a += x;
        b += y;
        units += x == 0 && y == 0;
      }
      int ucap = opts.reduced ? 0 : opts.unit_letter_cap;
      return a < n && b < n && units <= ucap;
    };
    j.words = free_smc(j.el_nu->cat, cap, fa.symmetric, keep);
    auto const& ac  = *fa.a;
    int         nm  = static_cast<int>(ac.num_morphisms());
    auto const& elr = *j.el_rho;
    j.mu            = Functor{j.words.cat, j.el_rho->cat, {}, {}};
    for (std::size_t k = 0; k < j.words.words.size(); ++k) {
      auto const& word = j.words.words[k];
      j.word_index.emplace(word, static_cast<int>(k));
      auto letters = letters_of(eln, n, word);
      int  a = 0, b = 0;
      std::vector<int> elems;
      for (std::size_t i = 0; i < word.size(); ++i) {
        a += letters[i].first;
        b += letters[i].second;
        elems.push_back(eln.elem_of(word[i]));
      }
      int p   = a * n + b;
      int blk = w.ext.block_of(p, letters, ac.identity(a), ac.identity(b));
      require(blk >= 0, ErrorCode::size_cap, "join: word missing from ν^⊗");
      auto sizes = w.ext.factor_sizes(p, blk);
      int  c     = w.ext.q[p].class_of(
          blk, sizes.empty() ? 0 : static_cast<int>(tensor_encode(sizes, elems)));
      int e = w.image[p][c];
      require(e >= 0, ErrorCode::size_cap, "join: product outside the truncation");
      j.mu.obj.push_back(elr.object(p, e));
    }
    auto const& fc = *j.words.cat;
    for (std::size_t m = 0; m < j.words.mors.size(); ++m) {
      auto const&  wm   = j.words.mors[m];
      auto const&  word = j.words.words[fc.src(static_cast<int>(m))];
      WordMorphism phi{wm.perm, {}, {}};
      for (int l : wm.letters) {
        int g = eln.mor_info[l].first;
        phi.s.push_back(g / nm);
        phi.t.push_back(g % nm);
      }
      auto [w2, S, T] = word_frame(fa, letters_of(eln, n, word), phi);
      int src         = j.mu.obj[fc.src(static_cast<int>(m))];
      j.mu.mor.push_back(elr.lift(S * nm + T, elr.elem_of(src)));
    }
    return j;
  }

  ExtendedRep extend_rep(ElementRep const&           d,
                         FactorizationWitness const& w,
                         int                         cap,
                         ElPtr                       el_rho) {
    ExtendedRep e;
    e.join      = join_functor(w, cap, d.el, std::move(el_rho));
    Flavor fl   = d.rep.flavor;
    auto const& fc = *e.join.words.cat;
    e.words     = Rep{e.join.words.cat, fl, {}, {}};
    for (auto const& word : e.join.words.words) {
      std::vector<Obj> vals;
      for (int o : word) {
        vals.push_back(d.rep.value[o]);
      }
      e.words.value.push_back(tensor_all(vals, fl));
    }
    for (std::size_t m = 0; m < e.join.words.mors.size(); ++m) {
      auto const&              wm = e.join.words.mors[m];
      std::vector<Mor>         acts;
      std::vector<std::size_t> sizes;
      for (int l : wm.letters) {
        acts.push_back(d.rep.act[l]);
        sizes.push_back(acts.back().cod);
      }
      (void) fc;
      e.words.act.push_back(
          compose(permute_factors(fl, sizes, wm.perm), tensor_all(acts, fl)));
    }
    e.kan = pointwise_lan(e.words, e.join.mu);
    e.rep = {e.join.el_rho, e.kan.ext};
    return e;
  }

  DecodedElement decode_extended(ExtendedRep const& e,
                                 ElementRep const&  d,
                                 int                xo,
                                 int                k) {
    auto [X, m, elem] = e.kan.lift(xo, k);
    DecodedElement out;
    out.letters = e.join.words.words[X];
    out.joined  = e.join.mu.obj[X];
    out.frame   = e.join.el_rho->mor_info[m].first;
    std::vector<std::size_t> sizes;
    for (int l : out.letters) {
      sizes.push_back(d.rep.value[l].size());
    }
    if (!sizes.empty()) {
      out.elems = tensor_decode(sizes, static_cast<std::size_t>(elem));
    }
    return out;
  }

  ChiOtimes chi_otimes_commute(ElementRep const&           d,
                               FactorizationWitness const& w,
                               int                         cap) {
    ChiOtimes out;
    auto const& fa = w.ext.fa;
    auto const& ac = *fa.a;
    int         nm = static_cast<int>(ac.num_morphisms());
    int         n  = w.rho.n();
    Flavor      fl = d.rep.flavor;
    out.chi_d      = chi(d, w.nu);
    out.ext        = horizontal_extension(out.chi_d.chi, fa, w.ext.opts);
    out.d_ext      = extend_rep(d, w, cap);
    auto const& elr = *out.d_ext.join.el_rho;
    out.chi_ext     = chi(out.d_ext.rep, w.rho);
    for (int P = 0; P < n * n; ++P) {
      auto const&      q = out.ext.q[P];
      std::size_t      cod = out.chi_ext.chi.rep.value[P].size();
      std::vector<Mor> per_block;
      for (std::size_t b = 0; b < q.num_blocks(); ++b) {
        auto const& blk   = out.ext.blocks[P][b];
        auto        sizes = out.ext.factor_sizes(P, static_cast<int>(b));
        std::size_t total = 1;
        for (auto s : sizes) {
          total *= s;
        }
        std::vector<Mor> pts;
        for (std::size_t idx = 0; idx < total; ++idx) {
          auto cs = sizes.empty() ? std::vector<int>{}
                                  : tensor_decode(sizes, idx);
          std::vector<int>         word, ss, ts, us;
          std::vector<std::size_t> usizes;
          for (std::size_t i = 0; i < cs.size(); ++i) {
            int  lp        = blk.word[i].first * n + blk.word[i].second;
            auto [x, m, u] = out.chi_d.kan.lift(lp, cs[i]);
            word.push_back(x);
            ss.push_back(m / nm);
            ts.push_back(m % nm);
            us.push_back(u);
            usizes.push_back(d.rep.value[x].size());
          }
          int S = ac.compose(fa.tensor_mor(ss), blk.sigma);
          int T = ac.compose(blk.tau, fa.tensor_mor(ts));
          auto it = out.d_ext.join.word_index.find(word);
          require(it != out.d_ext.join.word_index.end(),
                  ErrorCode::size_cap,
                  "chi commutation: word missing from the join");
          int  X  = out.d_ext.join.mu.obj[it->second];
          std::size_t ut = 1;
          for (auto s : usizes) {
            ut *= s;
          }
          Mor u = point(fl, ut, usizes.empty() ? 0 : tensor_encode(usizes, us));
          Mor in_d
              = out.d_ext.kan.inject(X, it->second, elr.cat->identity(X), u);
          pts.push_back(out.chi_ext.kan.inject(P, X, S * nm + T, in_d));
        }
        per_block.push_back(from_points(fl, cod, pts));
      }
      auto m = q.induce(per_block, cod);
      if (!m) {
        out.report.add("comparison is not well defined at "
                       + w.rho.pairs->object_id(P));
        m = section_map(q, per_block, cod);
      } else if (!is_iso(*m)) {
        out.report.add("comparison is not invertible at "
                       + w.rho.pairs->object_id(P));
      }
      out.iso.comp.push_back(*m);
    }
    out.report.merge(check_bimodule_map(out.ext.ext, out.chi_ext.chi, out.iso),
                     "naturality: ");
    return out;
  }

  BasicPlethysm basic_element_plethysm(ElementRep const&           d1,
                                       ElementRep const&           d2,
                                       Monoid const&               m,
                                       FactorizationWitness const& w,
                                       int                         cap) {
    require(d1.el == d2.el,
            ErrorCode::mismatch,
            "basic element plethysm needs reps over the same el(ν)");
    BasicPlethysm out;
    out.bp        = basic_pairs(m, w);
    auto el_rho   = element_category(m.r);
    out.e1        = extend_rep(d1, w, cap, el_rho);
    out.e2        = extend_rep(d2, w, cap, el_rho);
    out.ext       = external_tensor(out.e1.rep, out.e2.rep, out.bp.p);
    out.el_beta   = element_category(out.bp.beta);
    out.incl      = el_map(out.el_beta, out.ext.el, out.bp.incl);
    out.el_gamma0 = el_map(out.el_beta, d1.el, out.bp.gamma0);
    out.restricted = restrict_rep(out.ext.rep, out.incl);
    out.kan        = pointwise_lan(out.restricted, out.el_gamma0);
    out.result     = {d1.el, out.kan.ext};
    return out;
  }

  BasicUnit basic_unit(Monoid const&               m,
                       FactorizationWitness const& w,
                       ElPtr const&                el_nu,
                       Flavor                      f) {
    require(m.eta.has_value(),
            ErrorCode::invalid_argument,
            "basic unit needs a unital monoid");
    BasicUnit u;
    u.tilde    = basic_action_bimodule(w.ext.fa);
    u.eta0     = basic_restriction(*m.eta, u.tilde, w);
    u.el_tilde = element_category(u.tilde.nu);
    u.el_eta0  = el_map(u.el_tilde, el_nu, u.eta0);
    u.kan      = pointwise_lan(trivial_rep(u.el_tilde, f).rep, u.el_eta0);
    u.rep      = {el_nu, u.kan.ext};
    return u;
  }

  BasicRelative basic_relative_product(BasicRelative const&        a,
                                       BasicRelative const&        b,
                                       Monoid const&               m,
                                       FactorizationWitness const& w) {
    require(a.xi.flavor() == Flavor::set && b.xi.flavor() == Flavor::set,
            ErrorCode::flavor,
            "basic relative bimodules are FinSet");
    require(!w.iso.comp.empty(),
            ErrorCode::invalid_argument,
            "basic relative product needs a total factorization");
    auto const& fa = w.ext.fa;
    auto        bp = basic_pairs(m, w);
    auto        ea = horizontal_extension(a.xi, fa, w.ext.opts);
    auto        eb = horizontal_extension(b.xi, fa, w.ext.opts);
    auto pa = compose_repmap(w.iso, extension_map(ea, w.ext, a.pi));
    auto pb = compose_repmap(w.iso, extension_map(eb, w.ext, b.pi));
    auto pp = plethysm_product(ea.ext, eb.ext);
    auto to_base = plethysm_map(pp, bp.p, pa, pb);
    auto pull    = bimodule_pullback(pp.product, to_base, bp.beta, bp.incl);
    return {pull.pb, compose_repmap(bp.gamma0, pull.p2)};
  }

  BasicRelative basic_relative_unit(Monoid const&               m,
                                    FactorizationWitness const& w) {
    require(m.eta.has_value(),
            ErrorCode::invalid_argument,
            "basic unit needs a unital monoid");
    auto tilde = basic_action_bimodule(w.ext.fa);
    return {tilde.nu, basic_restriction(*m.eta, tilde, w)};
  }

}  // namespace plethysm
