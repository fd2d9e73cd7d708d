#include "plethysm/factorize.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "plethysm/elements.hpp"

namespace plethysm {

  // Action categories

  std::vector<int> FactorizableAction::perm(int mor) const {
    if (symmetric) {
      return perm_from_id(a->morphism(mor).id);
    }
    std::vector<int> id(a->src(mor));
    std::iota(id.begin(), id.end(), 0);
    return id;
  }

  int FactorizableAction::mor_of_perm(std::vector<int> const& p) const {
    if (static_cast<int>(p.size()) > nmax) {
      return -1;
    }
    if (symmetric) {
      return a->find_morphism(perm_id(p));
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != static_cast<int>(i)) {
        return -1;
      }
    }
    return a->identity(static_cast<int>(p.size()));
  }

  int FactorizableAction::tensor_mor(std::vector<int> const& mors) const {
    std::vector<int> out;
    for (int m : mors) {
      auto p   = perm(m);
      int  off = static_cast<int>(out.size());
      for (int v : p) {
        out.push_back(off + v);
      }
    }
    return mor_of_perm(out);
  }

  std::vector<int> FactorizableAction::decompose(int obj) const {
    return std::vector<int>(obj, 0);
  }

  FactorizableAction factorizable_action(CatPtr a, bool symmetric) {
    int nmax = static_cast<int>(a->num_objects()) - 1;
    require(nmax >= 1, ErrorCode::invalid_argument, "action needs nmax >= 1");
    FactorizableAction fa;
    fa.symmetric = symmetric;
    fa.nmax      = nmax;
    auto [v, i]  = full_subcategory(a, {1});
    fa.a         = std::move(a);
    fa.v         = v;
    fa.incl      = i;
    return fa;
  }

  FactorizableAction symmetric_action(int nmax) {
    return factorizable_action(symmetric_groupoid(nmax), true);
  }

  FactorizableAction naturals_action(int nmax) {
    return factorizable_action(discrete_naturals(nmax), false);
  }

  // Free symmetric monoidal categories

  namespace {
    std::string word_id(FinCategory const& v, std::vector<int> const& w) {
      std::string s = "[";
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? "," : "") + v.object_id(w[i]);
      }
      return s + "]";
    }

    void all_words(int nobj, int cap, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out,
                   WordFilter const& keep) {
      if (keep && !keep(cur)) {
        return;
      }
      out.push_back(cur);
      if (static_cast<int>(cur.size()) == cap) {
        return;
      }
      for (int o = 0; o < nobj; ++o) {
        cur.push_back(o);
        all_words(nobj, cap, cur, out, keep);
        cur.pop_back();
      }
    }
  }  // namespace

  FreeSMC free_smc(CatPtr const&       v,
                   int                 cap,
                   bool                symmetric,
                   WordFilter const&   keep) {
    require(cap >= 1, ErrorCode::invalid_argument, "free_smc needs cap >= 1");
    FreeSMC out;
    out.v         = v;
    out.cap       = cap;
    out.symmetric = symmetric;
    auto const& vc = *v;
    std::vector<int> cur;
    all_words(static_cast<int>(vc.num_objects()), cap, cur, out.words, keep);
    std::sort(out.words.begin(), out.words.end(),
              [](auto const& x, auto const& y) {
                return x.size() != y.size() ? x.size() < y.size() : x < y;
              });
    auto c  = std::make_shared<FinCategory>();
    c->name = vc.name + "^x" + std::to_string(cap);
    std::map<std::vector<int>, int> widx;
    for (auto const& w : out.words) {
      widx.emplace(w, c->add_object(word_id(vc, w)));
    }
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> midx;
    for (auto const& w : out.words) {
      int  k     = static_cast<int>(w.size());
      auto perms = symmetric ? all_perms(k) : std::vector<std::vector<int>>{};
      if (!symmetric) {
        std::vector<int> id(k);
        std::iota(id.begin(), id.end(), 0);
        perms.push_back(id);
      }
      for (auto const& pi : perms) {
        // every choice of letter morphisms out of w
        std::vector<std::size_t> sizes;
        for (int o : w) {
          sizes.push_back(vc.out(o).size());
        }
        std::size_t total = 1;
        for (auto s : sizes) {
          total *= s;
        }
        for (std::size_t idx = 0; idx < total; ++idx) {
          auto             pick = tensor_decode(sizes, idx);
          std::vector<int> letters, w2(k);
          std::string      id = "(";
          for (int i = 0; i < k; ++i) {
            int f = vc.out(w[i])[pick[i]];
            letters.push_back(f);
            w2[pi[i]] = vc.tgt(f);
            id += (i ? "," : "") + vc.morphism(f).id;
          }
          id += ")" + (symmetric ? perm_id(pi) : std::string());
          int m = c->add_morphism(word_id(vc, w) + id, widx.at(w), widx.at(w2));
          midx.emplace(std::make_pair(pi, letters), m);
          out.mors.push_back({pi, letters});
          bool ident = true;
          for (int i = 0; i < k; ++i) {
            ident = ident && pi[i] == i && vc.is_identity(letters[i]);
          }
          if (ident) {
            c->set_identity(widx.at(w), m);
          }
        }
      }
    }
    c->finalize([&](int g, int f) {
      if (c->tgt(f) != c->src(g)) {
        return -1;
      }
      auto const& mf = out.mors[f];
      auto const& mg = out.mors[g];
      std::size_t k  = mf.perm.size();
      std::vector<int> pi(k), letters(k);
      for (std::size_t i = 0; i < k; ++i) {
        pi[i]      = mg.perm[mf.perm[i]];
        letters[i] = vc.compose(mg.letters[mf.perm[i]], mf.letters[i]);
      }
      return midx.at({pi, letters});
    });
    out.cat = c;
    return out;
  }

  Functor structure_functor(FreeSMC const& w, FactorizableAction const& fa) {
    require(w.v == fa.v, ErrorCode::mismatch, "free SMC is not on fa's basics");
    auto const& a = *fa.a;
    Functor     f{w.cat, fa.a, {}, {}};
    auto size_of = [&](int o) {
      return std::stoi(a.object_id(fa.incl.obj[o]));
    };
    for (auto const& word : w.words) {
      int s = 0;
      for (int o : word) {
        s += size_of(o);
      }
      require(s <= fa.nmax, ErrorCode::size_cap, "word exceeds the action cap");
      f.obj.push_back(s);
    }
    auto const& c = *w.cat;
    for (std::size_t m = 0; m < w.mors.size(); ++m) {
      auto const& wm  = w.mors[m];
      auto const& src = w.words[c.src(static_cast<int>(m))];
      auto const& tgt = w.words[c.tgt(static_cast<int>(m))];
      std::vector<int> off_s{0}, off_t{0};
      for (std::size_t i = 0; i < src.size(); ++i) {
        off_s.push_back(off_s.back() + size_of(src[i]));
        off_t.push_back(off_t.back() + size_of(tgt[i]));
      }
      std::vector<int> p(off_s.back());
      for (std::size_t i = 0; i < src.size(); ++i) {
        auto li = fa.perm(fa.incl.mor[wm.letters[i]]);
        for (std::size_t k = 0; k < li.size(); ++k) {
          p[off_s[i] + k] = off_t[wm.perm[i]] + li[k];
        }
      }
      f.mor.push_back(fa.mor_of_perm(p));
    }
    return f;
  }

  // Horizontal extension

  Mor permute_factors(Flavor                          f,
                      std::vector<std::size_t> const& sizes,
                      std::vector<int> const&         pi) {
    std::vector<std::size_t> out_sizes(sizes.size());
    std::size_t              total = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      out_sizes[pi[i]] = sizes[i];
      total *= sizes[i];
    }
    Mor m{Flavor::set, total, total, {}, {}};
    for (std::size_t idx = 0; idx < total; ++idx) {
      auto             parts = tensor_decode(sizes, idx);
      std::vector<int> out(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out[pi[i]] = parts[i];
      }
      m.map.push_back(static_cast<int>(tensor_encode(out_sizes, out)));
    }
    return f == Flavor::set ? m : linearize(m);
  }

  std::tuple<Word, int, int> word_frame(FactorizableAction const& fa,
                                        Word const&               w,
                                        WordMorphism const&       phi) {
    auto const& ac = *fa.a;
    std::size_t k  = w.size();
    Word        w2(k);
    for (std::size_t i = 0; i < k; ++i) {
      w2[phi.pi[i]] = {ac.src(phi.s[i]), ac.tgt(phi.t[i])};
    }
    auto offsets = [](Word const& x, bool out_side) {
      std::vector<int> off{0};
      for (auto [a, b] : x) {
        off.push_back(off.back() + (out_side ? b : a));
      }
      return off;
    };
    auto oa = offsets(w, false), ob = offsets(w, true);
    auto oa2 = offsets(w2, false), ob2 = offsets(w2, true);
    // S: ⊗a' -> ⊗a and T: ⊗b -> ⊗b'
    std::vector<int> sp(oa.back()), tp(ob.back());
    for (std::size_t i = 0; i < k; ++i) {
      auto si = fa.perm(phi.s[i]);
      auto ti = fa.perm(phi.t[i]);
      for (std::size_t q = 0; q < si.size(); ++q) {
        sp[oa2[phi.pi[i]] + q] = oa[i] + si[q];
      }
      for (std::size_t q = 0; q < ti.size(); ++q) {
        tp[ob[i] + q] = ob2[phi.pi[i]] + ti[q];
      }
    }
    return {w2, fa.mor_of_perm(sp), fa.mor_of_perm(tp)};
  }


  namespace {
    Obj tensor_all(std::vector<Obj> const& xs, Flavor f) {
      return xs.empty() ? unit_obj(f) : tensor(xs);
    }

    Mor tensor_all(std::vector<Mor> const& fs, Flavor f) {
      return fs.empty() ? identity_mor(f, 1) : tensor(fs);
    }

    bool is_unit_letter(std::pair<int, int> const& l) {
      return l.first == 0 && l.second == 0;
    }

    // Complete words for (A, B), every length; letters with empty values
    // are skipped.
    void words_for(Bimodule const&         f,
                   ExtensionOptions const& o,
                   int A, int B, int units, Word& cur,
                   std::vector<Word>& out) {
      if (A == 0 && B == 0) {
        out.push_back(cur);
      }
      int n = f.n();
      for (int a = 0; a <= A && a < n; ++a) {
        for (int b = 0; b <= B && b < n; ++b) {
          if (f.value(a, b).size() == 0) {
            continue;
          }
          bool unit = a == 0 && b == 0;
          if (unit && (o.reduced || units >= o.unit_letter_cap)) {
            continue;
          }
          cur.emplace_back(a, b);
          words_for(f, o, A - a, B - b, units + unit, cur, out);
          cur.pop_back();
        }
      }
    }

    struct Relater {
      Bimodule const&           f;
      FactorizableAction const& fa;
      HorizontalExtension&      h;
      QuotientBuilder&          qb;
      int                       pair;
      int                       A, B;

      void relate(Word const& w, WordMorphism const& phi) {
        auto const& ac = *fa.a;
        std::size_t k  = w.size();
        auto [w2, S, T] = word_frame(fa, w, phi);
        std::vector<Mor>         acts;
        std::vector<std::size_t> sizes;
        for (std::size_t i = 0; i < k; ++i) {
          acts.push_back(f.act(phi.s[i], phi.t[i]));
          sizes.push_back(acts.back().cod);
        }
        Flavor fl = f.flavor();
        Mor    fphi
            = compose(permute_factors(fl, sizes, phi.pi), tensor_all(acts, fl));
        std::size_t dom = fphi.dom;
        for (int sig : ac.hom(A, A)) {
          for (int tau : ac.hom(B, B)) {
            int ba = h.block_of(pair, w, ac.compose(S, sig), ac.compose(tau, T));
            int bb = h.block_of(pair, w2, sig, tau);
            qb.relate(ba, identity_mor(fl, dom), bb, fphi);
          }
        }
      }
    };

    std::vector<int> identity_perm(std::size_t k) {
      std::vector<int> p(k);
      std::iota(p.begin(), p.end(), 0);
      return p;
    }

    // Word morphisms used as relations out of w.
    std::vector<WordMorphism> relations_for(Word const&               w,
                                            FactorizableAction const& fa,
                                            ExtensionFormula          formula) {
      auto const&               ac = *fa.a;
      std::size_t               k  = w.size();
      std::vector<WordMorphism> out;
      std::vector<int>          ids, idt;
      for (auto [a, b] : w) {
        ids.push_back(ac.identity(a));
        idt.push_back(ac.identity(b));
      }
      // block permutations allowed on this word
      auto allowed = [&](std::vector<int> const& pi) {
        if (fa.symmetric) {
          return true;
        }
        // non-symmetric: only unit letters may move past others
        int last = -1;
        for (std::size_t i = 0; i < k; ++i) {
          if (is_unit_letter(w[i])) {
            continue;
          }
          if (pi[i] < last) {
            return false;
          }
          last = pi[i];
        }
        return true;
      };
      if (formula == ExtensionFormula::coequalizer) {
        for (std::size_t i = 0; i < k; ++i) {
          for (int s : ac.hom(w[i].first, w[i].first)) {
            for (int t : ac.hom(w[i].second, w[i].second)) {
              if (ac.is_identity(s) && ac.is_identity(t)) {
                continue;
              }
              auto ss = ids, tt = idt;
              ss[i]   = s;
              tt[i]   = t;
              out.push_back({identity_perm(k), ss, tt});
            }
          }
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
          auto pi = identity_perm(k);
          std::swap(pi[i], pi[i + 1]);
          if (allowed(pi)) {
            out.push_back({pi, ids, idt});
          }
        }
        return out;
      }
      std::vector<std::vector<int>> perms
          = k == 0 ? std::vector<std::vector<int>>{{}} : all_perms(static_cast<int>(k));
      std::vector<std::size_t>        sizes;
      std::vector<std::vector<int>> choices;
      for (auto [a, b] : w) {
        std::vector<int> c;
        for (int s : ac.hom(a, a)) {
          for (int t : ac.hom(b, b)) {
            c.push_back(s * static_cast<int>(ac.num_morphisms()) + t);
          }
        }
        sizes.push_back(c.size());
        choices.push_back(c);
      }
      std::size_t total = 1;
      for (auto s : sizes) {
        total *= s;
      }
      int nm = static_cast<int>(ac.num_morphisms());
      for (auto const& pi : perms) {
        if (!allowed(pi)) {
          continue;
        }
        for (std::size_t idx = 0; idx < total; ++idx) {
          auto         pick = tensor_decode(sizes, idx);
          WordMorphism phi{pi, {}, {}};
          for (std::size_t i = 0; i < k; ++i) {
            int st = choices[i][pick[i]];
            phi.s.push_back(st / nm);
            phi.t.push_back(st % nm);
          }
          out.push_back(phi);
        }
      }
      return out;
    }
  }  // namespace

  int HorizontalExtension::block_of(int         pair,
                                    Word const& w,
                                    int         sigma,
                                    int         tau) const {
    auto it = block_index[pair].find({w, sigma, tau});
    return it == block_index[pair].end() ? -1 : it->second;
  }

  std::vector<std::size_t> HorizontalExtension::factor_sizes(int pair,
                                                             int block) const {
    std::vector<std::size_t> sizes;
    for (auto [a, b] : blocks[pair][block].word) {
      sizes.push_back(src.value(a, b).size());
    }
    (void) pair;
    return sizes;
  }

  std::pair<int, std::vector<int>> HorizontalExtension::lift(int pair,
                                                             int k) const {
    auto [b, idx] = q[pair].section[k];
    auto sizes    = factor_sizes(pair, b);
    return {b, sizes.empty() ? std::vector<int>{}
                             : tensor_decode(sizes, idx)};
  }

  Mor HorizontalExtension::point(int                     pair,
                                 int                     block,
                                 std::vector<int> const& elems) const {
    auto        sizes = factor_sizes(pair, block);
    std::size_t idx   = sizes.empty() ? 0 : tensor_encode(sizes, elems);
    std::size_t total = 1;
    for (auto s : sizes) {
      total *= s;
    }
    return q[pair].project_point(block, plethysm::point(src.flavor(), total, idx));
  }

  HorizontalExtension horizontal_extension(Bimodule const&           f,
                                           FactorizableAction const& fa,
                                           ExtensionOptions const&   o) {
    require(f.action == fa.a,
            ErrorCode::mismatch,
            "horizontal extension: bimodule is not over the action");
    require(o.cap >= 0, ErrorCode::invalid_argument, "negative word cap");
    HorizontalExtension h;
    h.src  = f;
    h.fa   = fa;
    h.opts = o;
    int    n  = f.n();
    Flavor fl = f.flavor();
    auto const& ac = *fa.a;
    h.q.resize(n * n);
    h.blocks.resize(n * n);
    h.block_index.resize(n * n);
    for (int A = 0; A < n; ++A) {
      for (int B = 0; B < n; ++B) {
        int               p = A * n + B;
        std::vector<Word> all;
        Word              cur;
        words_for(f, o, A, B, 0, cur, all);
        std::vector<Word> words;
        for (auto const& w : all) {
          if (static_cast<int>(w.size()) <= o.cap) {
            words.push_back(w);
          } else {
            h.truncated = true;
            require(o.allow_truncation,
                    ErrorCode::size_cap,
                    "cap too small: (" + std::to_string(A) + ","
                        + std::to_string(B) + ") needs words of length "
                        + std::to_string(w.size()));
          }
        }
        QuotientBuilder qb(fl);
        for (auto const& w : words) {
          std::vector<Obj> vals;
          for (auto [a, b] : w) {
            vals.push_back(f.value(a, b));
          }
          Obj blk = tensor_all(vals, fl);
          for (int sig : ac.hom(A, A)) {
            for (int tau : ac.hom(B, B)) {
              h.block_index[p].emplace(std::make_tuple(w, sig, tau),
                                       static_cast<int>(h.blocks[p].size()));
              h.blocks[p].push_back({w, sig, tau});
              qb.add_block(blk);
            }
          }
        }
        Relater rel{f, fa, h, qb, p, A, B};
        for (auto const& w : words) {
          for (auto const& phi : relations_for(w, fa, o.formula)) {
            rel.relate(w, phi);
          }
        }
        h.q[p] = qb.build();
      }
    }
    int nm = static_cast<int>(ac.num_morphisms());
    h.ext  = make_bimodule(
        fa.a,
        fl,
        [&](int a, int b) { return h.q[a * n + b].obj; },
        [&](int s, int t) {
          int from = ac.tgt(s) * n + ac.src(t);
          int to   = ac.src(s) * n + ac.tgt(t);
          std::vector<Mor> per_block;
          for (auto const& blk : h.blocks[from]) {
            int b2 = h.block_of(to, blk.word, ac.compose(blk.sigma, s),
                                ac.compose(t, blk.tau));
            per_block.push_back(h.q[to].proj_block(b2));
          }
          (void) nm;
          return section_map(h.q[from], per_block, h.q[to].obj.size());
        },
        f.name + "^x");
    return h;
  }

  HorizontalExtension iterate_extension(HorizontalExtension const& inner,
                                        ExtensionOptions const&    outer) {
    return horizontal_extension(inner.ext, inner.fa, outer);
  }

  BimoduleMap extension_map(HorizontalExtension const& s,
                            HorizontalExtension const& t,
                            BimoduleMap const&         phi) {
    int         n  = s.src.n();
    Flavor      fl = s.src.flavor();
    BimoduleMap out;
    for (int p = 0; p < n * n; ++p) {
      std::vector<Mor> per_block;
      for (auto const& blk : s.blocks[p]) {
        int tb = t.block_of(p, blk.word, blk.sigma, blk.tau);
        require(tb >= 0,
                ErrorCode::size_cap,
                "extension map: target extension lacks a word");
        std::vector<Mor> fs;
        for (auto [a, b] : blk.word) {
          fs.push_back(phi.comp[a * n + b]);
        }
        per_block.push_back(
            compose(t.q[p].proj_block(tb), tensor_all(fs, fl)));
      }
      out.comp.push_back(section_map(s.q[p], per_block, t.q[p].obj.size()));
    }
    return out;
  }

  LawReport compare_formulas(Bimodule const&           f,
                             FactorizableAction const& fa,
                             ExtensionOptions const&   o) {
    LawReport rep;
    auto      o1 = o, o2 = o;
    o1.formula   = ExtensionFormula::coequalizer;
    o2.formula   = ExtensionFormula::coend;
    auto h1      = horizontal_extension(f, fa, o1);
    auto h2      = horizontal_extension(f, fa, o2);
    for (std::size_t p = 0; p < h1.q.size(); ++p) {
      auto const& q1 = h1.q[p];
      auto const& q2 = h2.q[p];
      bool same = q1.obj.size() == q2.obj.size()
                  && q1.num_generators() == q2.num_generators();
      if (same) {
        same = f.flavor() == Flavor::set ? q1.cls == q2.cls
                                         : q1.proj == q2.proj;
      }
      if (!same) {
        rep.add("coend and coequalizer formulas differ at "
                + f.pairs->object_id(static_cast<int>(p)));
      }
    }
    return rep;
  }

  // Factorization witnesses

  int FactorizationWitness::length(int pair, int e) const {
    int c = decomp[pair][e];
    if (c < 0) {
      return -1;
    }
    auto [b, elems] = ext.lift(pair, c);
    return static_cast<int>(ext.blocks[pair][b].word.size());
  }

  namespace {
    // ρ-image of a generator of ν^⊗, or -1 outside the truncation.
    int generator_image(FactorizationWitness const& w,
                        int                         pair,
                        int                         block,
                        std::vector<int> const&     elems) {
      auto const& blk = w.ext.blocks[pair][block];
      int         n   = w.rho.n();
      int         a = 0, b = 0, acc = w.unit;
      if (acc < 0) {
        return -1;
      }
      for (std::size_t i = 0; i < blk.word.size(); ++i) {
        auto [ai, bi] = blk.word[i];
        int x = w.nu_incl.comp[ai * n + bi].map[elems[i]];
        acc   = w.hprod(a, b, acc, ai, bi, x);
        if (acc < 0) {
          return -1;
        }
        a += ai;
        b += bi;
      }
      return w.rho.act(blk.sigma, blk.tau).map[acc];
    }
  }  // namespace

  FactorizationWitness factorization_witness(Bimodule const&           rho,
                                             Bimodule const&           nu,
                                             BimoduleMap const&        incl,
                                             HorizontalProduct const&  h,
                                             int                       unit,
                                             FactorizableAction const& fa,
                                             ExtensionOptions const&   o) {
    require(rho.flavor() == Flavor::set && nu.flavor() == Flavor::set,
            ErrorCode::flavor,
            "factorization witnesses are FinSet");
    FactorizationWitness w;
    w.rho     = rho;
    w.nu      = nu;
    w.nu_incl = incl;
    w.hprod   = h;
    w.unit    = unit;
    w.ext     = horizontal_extension(nu, fa, o);
    int n     = rho.n();
    w.decomp.resize(n * n);
    w.image.resize(n * n);
    bool total = true;
    for (int p = 0; p < n * n; ++p) {
      auto const& q    = w.ext.q[p];
      auto const  name = rho.pairs->object_id(p);
      std::vector<int> img(q.obj.size(), -2);
      for (std::size_t b = 0; b < q.num_blocks(); ++b) {
        auto        sizes = w.ext.factor_sizes(p, static_cast<int>(b));
        std::size_t cnt   = q.offset[b + 1] - q.offset[b];
        for (std::size_t r = 0; r < cnt; ++r) {
          auto elems = sizes.empty() ? std::vector<int>{}
                                     : tensor_decode(sizes, r);
          int  x     = generator_image(w, p, static_cast<int>(b), elems);
          int  c     = q.class_of(static_cast<int>(b), static_cast<int>(r));
          if (img[c] == -2) {
            img[c] = x;
          } else if (img[c] != x) {
            w.report.add("at " + name + ": class " + q.obj.names[c]
                         + " has two different products");
          }
        }
      }
      w.decomp[p].assign(rho.rep.value[p].size(), -1);
      for (std::size_t c = 0; c < img.size(); ++c) {
        if (img[c] < 0) {
          ++w.outside;
          total = false;
          continue;
        }
        int& d = w.decomp[p][img[c]];
        if (d >= 0) {
          w.report.add("at " + name + ": " + rho.rep.value[p].names[img[c]]
                       + " factors in two ways");
        }
        d = static_cast<int>(c);
      }
      for (std::size_t e = 0; e < w.decomp[p].size(); ++e) {
        if (w.decomp[p][e] < 0) {
          w.report.add("at " + name + ": " + rho.rep.value[p].names[e]
                       + " has no factorization");
        }
      }
      w.image[p] = img;
    }
    if (total && w.report.ok()) {
      for (int p = 0; p < n * n; ++p) {
        w.iso.comp.push_back(Mor{Flavor::set, w.image[p].size(),
                                 rho.rep.value[p].size(), w.image[p], {}});
      }
      w.report.merge(check_bimodule_map(w.ext.ext, rho, w.iso), "iso: ");
    }
    return w;
  }

  FactorizationWitness basic_action_bimodule(FactorizableAction const& fa) {
    auto hv = hom_unit(fa.v, Flavor::set);
    auto ha = hom_unit(fa.a, Flavor::set);
    auto const& v  = *fa.v;
    auto const& a  = *fa.a;
    int  nv        = static_cast<int>(v.num_objects());
    int  na        = static_cast<int>(a.num_objects());
    Functor k{hv.pairs, ha.pairs, {}, {}};
    for (int x = 0; x < nv; ++x) {
      for (int y = 0; y < nv; ++y) {
        k.obj.push_back(fa.incl.obj[x] * na + fa.incl.obj[y]);
      }
    }
    for (int f = 0; f < static_cast<int>(v.num_morphisms()); ++f) {
      for (int g = 0; g < static_cast<int>(v.num_morphisms()); ++g) {
        k.mor.push_back(fa.incl.mor[f] * static_cast<int>(a.num_morphisms())
                        + fa.incl.mor[g]);
      }
    }
    auto     kan = pointwise_lan(hv.rep, k);
    Bimodule nu{fa.a, ha.pairs, kan.ext, "nu~"};
    // ν̃ -> ρ̃: class (x, m, e) goes to m applied to ı(e)
    BimoduleMap incl;
    for (int p = 0; p < na * na; ++p) {
      Mor m{Flavor::set, nu.rep.value[p].size(), ha.rep.value[p].size(), {},
            {}};
      for (int c = 0; c < static_cast<int>(m.dom); ++c) {
        auto [x, mm, e] = kan.lift(p, c);
        int  vx = x / nv, vy = x % nv;
        int  f  = fa.incl.mor[v.hom(vx, vy)[e]];
        int  ax = fa.incl.obj[vx], ay = fa.incl.obj[vy];
        auto const& hom = a.hom(ax, ay);
        int  pos = static_cast<int>(
            std::find(hom.begin(), hom.end(), f) - hom.begin());
        m.map.push_back(ha.rep.act[mm].map[pos]);
      }
      incl.comp.push_back(m);
    }
    HorizontalProduct h = [fa](int a1, int b1, int x, int a2, int b2, int y) {
      auto const& c  = *fa.a;
      if (a1 + a2 > fa.nmax || b1 + b2 > fa.nmax) {
        return -1;
      }
      int  mx = c.hom(a1, b1)[x];
      int  my = c.hom(a2, b2)[y];
      int  m  = fa.tensor_mor({mx, my});
      auto const& hom = c.hom(a1 + a2, b1 + b2);
      return static_cast<int>(std::find(hom.begin(), hom.end(), m) - hom.begin());
    };
    return factorization_witness(ha, nu, incl, h, 0, fa, {});
  }

  FactorizationWitness plethysm_factorization(FactorizationWitness const& w1,
                                              FactorizationWitness const& w2,
                                              PlethysmResult const&       p) {
    auto const& fa = w1.ext.fa;
    int         n  = p.product.n();
    // letter components across the middle
    auto components = [&](int A, int C, int k) {
      auto [B, x, y] = p.lift(A, C, k);
      int  cx        = w1.decomp[A * n + B][x];
      int  cy        = w2.decomp[B * n + C][y];
      require(cx >= 0 && cy >= 0,
              ErrorCode::invalid_argument,
              "plethysm factorization needs factorized operands");
      auto [bx, ex] = w1.ext.lift(A * n + B, cx);
      auto [by, ey] = w2.ext.lift(B * n + C, cy);
      auto const& kx = w1.ext.blocks[A * n + B][bx];
      auto const& ky = w2.ext.blocks[B * n + C][by];
      int  k1 = static_cast<int>(kx.word.size());
      int  k2 = static_cast<int>(ky.word.size());
      std::vector<int> letter_x, letter_y;
      for (int i = 0; i < k1; ++i) {
        letter_x.insert(letter_x.end(), kx.word[i].second, i);
      }
      for (int j = 0; j < k2; ++j) {
        letter_y.insert(letter_y.end(), ky.word[j].first, j);
      }
      auto             tx = fa.perm(kx.tau);
      auto             sy = fa.perm(ky.sigma);
      std::vector<int> parent(k1 + k2);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int u) {
        return parent[u] == u ? u : parent[u] = find(parent[u]);
      };
      for (std::size_t q = 0; q < letter_x.size(); ++q) {
        int u = find(letter_x[q]);
        int v = find(k1 + letter_y[sy[tx[q]]]);
        parent[std::max(u, v)] = std::min(u, v);
      }
      int comps = 0;
      for (int u = 0; u < k1 + k2; ++u) {
        comps += find(u) == u;
      }
      return comps;
    };
    auto [nu, incl] = sub_bimodule(
        p.product,
        [&](int A, int C, int k) { return components(A, C, k) == 1; },
        "basics");
    HorizontalProduct h = [p, h1 = w1.hprod, h2 = w2.hprod, n](int a1, int c1, int z1, int a2,
                                          int c2, int z2) {
      auto [b1, x1, y1] = p.lift(a1, c1, z1);
      auto [b2, x2, y2] = p.lift(a2, c2, z2);
      if (b1 + b2 >= n || a1 + a2 >= n || c1 + c2 >= n) {
        return -1;
      }
      int x = h1(a1, b1, x1, a2, b2, x2);
      int y = h2(b1, c1, y1, b2, c2, y2);
      if (x < 0 || y < 0) {
        return -1;
      }
      return p.cls(a1 + a2, b1 + b2, c1 + c2, x, y);
    };
    int unit = (w1.unit >= 0 && w2.unit >= 0)
                   ? p.cls(0, 0, 0, w1.unit, w2.unit)
                   : -1;
    return factorization_witness(p.product, nu, incl, h, unit, fa,
                                 w1.ext.opts);
  }

  // Pullbacks, basic pairs, heredity

  Pullback bimodule_pullback(Bimodule const&    fs,
                             BimoduleMap const& f,
                             Bimodule const&    gs,
                             BimoduleMap const& g) {
    require(fs.flavor() == Flavor::set && gs.flavor() == Flavor::set,
            ErrorCode::flavor,
            "pullbacks are computed in FinSet");
    int n = fs.n();
    std::vector<std::vector<std::pair<int, int>>> elems(n * n);
    std::vector<std::map<std::pair<int, int>, int>> idx(n * n);
    for (int p = 0; p < n * n; ++p) {
      for (std::size_t x = 0; x < f.comp[p].dom; ++x) {
        for (std::size_t y = 0; y < g.comp[p].dom; ++y) {
          if (f.comp[p].map[x] == g.comp[p].map[y]) {
            idx[p].emplace(std::make_pair(int(x), int(y)),
                           static_cast<int>(elems[p].size()));
            elems[p].emplace_back(x, y);
          }
        }
      }
    }
    auto const& c = *fs.action;
    Pullback    out;
    out.pb = make_bimodule(
        fs.action,
        Flavor::set,
        [&](int a, int b) {
          Obj o{Flavor::set, {}};
          for (auto [x, y] : elems[a * n + b]) {
            o.names.push_back(tuple_name({fs.value(a, b).names[x],
                                          gs.value(a, b).names[y]}));
          }
          return o;
        },
        [&](int s, int t) {
          int from = c.tgt(s) * n + c.src(t);
          int to   = c.src(s) * n + c.tgt(t);
          Mor m{Flavor::set, elems[from].size(), elems[to].size(), {}, {}};
          for (auto [x, y] : elems[from]) {
            m.map.push_back(idx[to].at(
                {fs.act(s, t).map[x], gs.act(s, t).map[y]}));
          }
          return m;
        },
        "pullback");
    for (int p = 0; p < n * n; ++p) {
      Mor m1{Flavor::set, elems[p].size(), fs.rep.value[p].size(), {}, {}};
      Mor m2{Flavor::set, elems[p].size(), gs.rep.value[p].size(), {}, {}};
      for (auto [x, y] : elems[p]) {
        m1.map.push_back(x);
        m2.map.push_back(y);
      }
      out.p1.comp.push_back(m1);
      out.p2.comp.push_back(m2);
    }
    return out;
  }

  BasicPairs basic_pairs(Monoid const& m, FactorizationWitness const& w) {
    BasicPairs bp;
    bp.p    = plethysm_product(m.r, m.r);
    bp.gbar = gamma_on_classes(m, bp.p);
    auto pb = bimodule_pullback(bp.p.product, bp.gbar, w.nu, w.nu_incl);
    bp.beta = pb.pb;
    bp.incl   = pb.p1;
    bp.gamma0 = pb.p2;
    return bp;
  }

  BimoduleMap basic_restriction(BimoduleMap const&          phi,
                                FactorizationWitness const& src,
                                FactorizationWitness const& tgt) {
    BimoduleMap out;
    for (std::size_t p = 0; p < phi.comp.size(); ++p) {
      auto const& si = src.nu_incl.comp[p].map;
      auto const& ti = tgt.nu_incl.comp[p].map;
      Mor         m{Flavor::set, si.size(), ti.size(), {}, {}};
      for (int x : si) {
        int y  = phi.comp[p].map[x];
        auto it = std::find(ti.begin(), ti.end(), y);
        require(it != ti.end(),
                ErrorCode::invalid_argument,
                "map does not preserve basics at "
                    + src.rho.pairs->object_id(static_cast<int>(p)));
        m.map.push_back(static_cast<int>(it - ti.begin()));
      }
      out.comp.push_back(m);
    }
    return out;
  }

  LawReport hereditary_check(BimoduleMap const&          phi,
                             FactorizationWitness const& src,
                             FactorizationWitness const& tgt) {
    LawReport rep;
    int       n = src.rho.n();
    for (int p = 0; p < n * n; ++p) {
      auto const&      name = src.rho.pairs->object_id(p);
      std::vector<int> nu_src(src.rho.rep.value[p].size(), -1);
      std::vector<int> nu_tgt(tgt.rho.rep.value[p].size(), -1);
      for (std::size_t i = 0; i < src.nu_incl.comp[p].map.size(); ++i) {
        nu_src[src.nu_incl.comp[p].map[i]] = static_cast<int>(i);
      }
      for (std::size_t i = 0; i < tgt.nu_incl.comp[p].map.size(); ++i) {
        nu_tgt[tgt.nu_incl.comp[p].map[i]] = static_cast<int>(i);
      }
      auto const& tn = tgt.rho.rep.value[p].names;
      auto const& sn = src.rho.rep.value[p].names;
      for (std::size_t x = 0; x < phi.comp[p].dom; ++x) {
        int  y      = phi.comp[p].map[x];
        bool bx     = nu_src[x] >= 0;
        bool by     = nu_tgt[y] >= 0;
        auto fibre  = "fibre over " + tn[y] + " at " + name + ": ";
        if (bx && !by) {
          rep.add(fibre + "basic " + sn[x] + " maps to a non-basic element");
        }
        if (!bx && by) {
          rep.add(fibre + "non-basic " + sn[x] + " lies over a basic element");
        }
        int lx = src.length(p, static_cast<int>(x));
        int ly = tgt.length(p, y);
        if (lx < 0 || ly < 0) {
          continue;
        }
        if (lx != ly) {
          rep.add(fibre + sn[x] + " has " + std::to_string(lx)
                  + " basic factors but its image has " + std::to_string(ly));
          continue;
        }
        // push the factorization of x through φ
        auto [b, elems] = src.ext.lift(p, src.decomp[p][x]);
        auto const& blk = src.ext.blocks[p][b];
        std::vector<int> img;
        bool             ok = true;
        for (std::size_t i = 0; i < blk.word.size(); ++i) {
          int lp = blk.word[i].first * n + blk.word[i].second;
          int r  = src.nu_incl.comp[lp].map[elems[i]];
          int ry = phi.comp[lp].map[r];
          int t  = -1;
          for (std::size_t j = 0; j < tgt.nu_incl.comp[lp].map.size(); ++j) {
            if (tgt.nu_incl.comp[lp].map[j] == ry) {
              t = static_cast<int>(j);
            }
          }
          ok = ok && t >= 0;
          img.push_back(t);
        }
        int tb = tgt.ext.block_of(p, blk.word, blk.sigma, blk.tau);
        if (!ok || tb < 0) {
          rep.add(fibre + "a factor of " + sn[x] + " leaves the basics");
          continue;
        }
        int c = tgt.ext.q[p].class_of(
            tb, static_cast<int>(tensor_encode(tgt.ext.factor_sizes(p, tb),
                                               img)));
        if (tgt.decomp[p][y] != c) {
          rep.add(fibre + "the factorization of " + sn[x]
                  + " does not map to the factorization of its image");
        }
      }
    }
    return rep;
  }

  // Monad

  BimoduleMap extension_unit(HorizontalExtension const& e) {
    auto const& f  = e.src;
    auto const& ac = *e.fa.a;
    int         n  = f.n();
    BimoduleMap out;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int              p = a * n + b;
        std::vector<Mor> pts;
        Word             w{{a, b}};
        int blk = e.block_of(p, w, ac.identity(a), ac.identity(b));
        if (blk < 0 && a == 0 && b == 0) {
          blk = e.block_of(p, {}, ac.identity(0), ac.identity(0));
          for (std::size_t x = 0; x < f.value(a, b).size(); ++x) {
            pts.push_back(e.point(p, blk, {}));
          }
        } else {
          for (std::size_t x = 0; x < f.value(a, b).size(); ++x) {
            require(blk >= 0, ErrorCode::size_cap, "extension lacks letters");
            pts.push_back(e.point(p, blk, {static_cast<int>(x)}));
          }
        }
        out.comp.push_back(
            from_points(f.flavor(), e.q[p].obj.size(), pts));
      }
    }
    return out;
  }

  BimoduleMap extension_flatten(HorizontalExtension const& inner,
                                HorizontalExtension const& outer,
                                HorizontalExtension const& target,
                                LawReport&                 report) {
    auto const& fa = inner.fa;
    auto const& ac = *fa.a;
    int         n  = inner.src.n();
    Flavor      fl = inner.src.flavor();
    BimoduleMap out;
    for (int P = 0; P < n * n; ++P) {
      std::vector<Mor> per_block;
      for (std::size_t b = 0; b < outer.blocks[P].size(); ++b) {
        auto const& blk   = outer.blocks[P][b];
        auto        sizes = outer.factor_sizes(P, static_cast<int>(b));
        std::size_t total = 1;
        for (auto s : sizes) {
          total *= s;
        }
        std::vector<Mor> pts;
        for (std::size_t idx = 0; idx < total; ++idx) {
          auto z = sizes.empty() ? std::vector<int>{}
                                 : tensor_decode(sizes, idx);
          Word             word;
          std::vector<int> elems, sigmas, taus;
          for (std::size_t j = 0; j < blk.word.size(); ++j) {
            int  pj          = blk.word[j].first * n + blk.word[j].second;
            auto [ib, iel]   = inner.lift(pj, z[j]);
            auto const& iblk = inner.blocks[pj][ib];
            word.insert(word.end(), iblk.word.begin(), iblk.word.end());
            elems.insert(elems.end(), iel.begin(), iel.end());
            sigmas.push_back(iblk.sigma);
            taus.push_back(iblk.tau);
          }
          int sig = ac.compose(fa.tensor_mor(sigmas), blk.sigma);
          int tau = ac.compose(blk.tau, fa.tensor_mor(taus));
          int tb  = target.block_of(P, word, sig, tau);
          require(tb >= 0,
                  ErrorCode::size_cap,
                  "flatten: target extension lacks a word");
          pts.push_back(target.point(P, tb, elems));
        }
        per_block.push_back(from_points(fl, target.q[P].obj.size(), pts));
      }
      auto m = outer.q[P].induce(per_block, target.q[P].obj.size());
      if (!m) {
        report.add("flattening is not well defined at "
                   + inner.src.pairs->object_id(P));
        m = section_map(outer.q[P], per_block, target.q[P].obj.size());
      }
      out.comp.push_back(*m);
    }
    return out;
  }

  namespace {
    void compare(LawReport&         rep,
                 std::string const& law,
                 Bimodule const&    at,
                 BimoduleMap const& x,
                 BimoduleMap const& y) {
      for (std::size_t p = 0; p < x.comp.size(); ++p) {
        if (!equal(x.comp[p], y.comp[p])) {
          rep.add(law + " fails at " + at.pairs->object_id(static_cast<int>(p)));
        }
      }
    }
  }  // namespace

  ExtensionMonad monad_structure(Bimodule const&           f,
                                 FactorizableAction const& fa,
                                 int                       inner,
                                 int                       outer,
                                 ExtensionOptions const&   base) {
    require(inner >= 1 && outer >= 1,
            ErrorCode::invalid_argument,
            "monad caps must be positive");
    auto with_cap = [&](int c) {
      auto o             = base;
      o.cap              = c;
      o.allow_truncation = true;
      return o;
    };
    ExtensionMonad m;
    m.e1  = horizontal_extension(f, fa, with_cap(inner));
    m.e2  = iterate_extension(m.e1, with_cap(outer));
    m.e   = horizontal_extension(f, fa, with_cap(inner * outer));
    m.eta = extension_unit(m.e1);
    m.mu  = extension_flatten(m.e1, m.e2, m.e, m.report);
    m.report.merge(check_bimodule_map(m.e2.ext, m.e.ext, m.mu), "mu: ");
    m.report.merge(check_bimodule_map(f, m.e1.ext, m.eta), "eta: ");

    auto id_f = identity_repmap(f.rep);
    // μ ∘ η_{F^⊗} is the inclusion F^⊗ -> F^⊗ with the larger cap
    compare(m.report, "left unit", f,
            compose_repmap(m.mu, extension_unit(m.e2)),
            extension_map(m.e1, m.e, id_f));
    // μ ∘ (η_F)^⊗ likewise
    auto ef = horizontal_extension(f, fa, with_cap(outer));
    compare(m.report, "right unit", f,
            compose_repmap(m.mu, extension_map(ef, m.e2, m.eta)),
            extension_map(ef, m.e, id_f));
    // μ ∘ μ^⊗ = μ ∘ μ_{F^⊗}
    auto e3   = iterate_extension(m.e2, with_cap(outer));
    auto big  = horizontal_extension(f, fa, with_cap(inner * outer * outer));
    auto ee   = iterate_extension(m.e, with_cap(outer));
    auto path_a = compose_repmap(
        extension_flatten(m.e, ee, big, m.report),
        extension_map(e3, ee, m.mu));
    auto e1big  = iterate_extension(m.e1, with_cap(outer * outer));
    auto path_b = compose_repmap(
        extension_flatten(m.e1, e1big, big, m.report),
        extension_flatten(m.e2, e3, e1big, m.report));
    compare(m.report, "associativity", f, path_a, path_b);
    return m;
  }

}  // namespace plethysm
