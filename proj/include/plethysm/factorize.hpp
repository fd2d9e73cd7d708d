#ifndef PLETHYSM_FACTORIZE_HPP_
#define PLETHYSM_FACTORIZE_HPP_

#include <functional>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "bimodule.hpp"

namespace plethysm {

  //! An action category on objects 0..nmax with ⊗ = addition, generated
  //! under ⊗ by the basic object 1. Symmetric: 𝕊 (permutations);
  //! otherwise the discrete ℕ.
  struct FactorizableAction {
    CatPtr  a;
    CatPtr  v;     // full subcategory on the basic object
    Functor incl;  // v -> a
    bool    symmetric = true;
    int     nmax      = 0;

    //! Permutation of a morphism (identity for ℕ).
    std::vector<int> perm(int mor) const;
    //! Morphism with the given permutation, or -1.
    int mor_of_perm(std::vector<int> const& p) const;
    //! Block sum of morphisms, or -1 past nmax.
    int tensor_mor(std::vector<int> const& mors) const;
    //! Basic letters of an object.
    std::vector<int> decompose(int obj) const;
  };

  //! Wraps an existing 𝕊 or ℕ category; nmax is its top object.
  FactorizableAction factorizable_action(CatPtr a, bool symmetric);
  FactorizableAction symmetric_action(int nmax);
  FactorizableAction naturals_action(int nmax);

  //! Strictified free (symmetric) monoidal category on v, words up to cap.
  //! A morphism (π, f) sends letter i along f_i to position π(i).
  struct FreeSMC {
    CatPtr                        v;
    CatPtr                        cat;
    int                           cap       = 0;
    bool                          symmetric = true;
    std::vector<std::vector<int>> words;
    struct WordMor {
      std::vector<int> perm;
      std::vector<int> letters;
    };
    std::vector<WordMor> mors;
  };

  //! Keeps a subset of words. It must be closed under prefixes (words are
  //! grown letter by letter) and under the morphisms.
  using WordFilter = std::function<bool(std::vector<int> const&)>;
  FreeSMC free_smc(CatPtr const&     v,
                   int               cap,
                   bool              symmetric,
                   WordFilter const& keep = {});
  //! μ: words -> the action category, ⊗ to +.
  Functor structure_functor(FreeSMC const& w, FactorizableAction const& fa);

  enum class ExtensionFormula { coequalizer, coend };

  struct ExtensionOptions {
    int  cap             = 8;  // word length
    bool reduced         = true;
    int  unit_letter_cap = 0;  // (0,0) letters allowed when not reduced
    //! Keep only words up to cap instead of failing. Relations preserve
    //! length, so this is a direct summand.
    bool             allow_truncation = false;
    ExtensionFormula formula          = ExtensionFormula::coequalizer;
  };

  using Word = std::vector<std::pair<int, int>>;

  //! Block (word, σ: A -> ⊗a, τ: ⊗b -> B) of the extension at (A, B).
  struct ExtBlock {
    Word word;
    int  sigma = 0;
    int  tau   = 0;
  };

  //! Letter i of a word goes along (s_i | t_i) to slot pi[i].
  struct WordMorphism {
    std::vector<int> pi;
    std::vector<int> s;
    std::vector<int> t;
  };
  //! Target word of phi with the frame S: ⊗a' -> ⊗a and T: ⊗b -> ⊗b'.
  std::tuple<Word, int, int> word_frame(FactorizableAction const& fa,
                                        Word const&               w,
                                        WordMorphism const&       phi);
  //! ⊗_i X_i -> ⊗_j X'_j sending factor i to slot pi[i].
  Mor permute_factors(Flavor                          f,
                      std::vector<std::size_t> const& sizes,
                      std::vector<int> const&         pi);

  struct HorizontalExtension {
    Bimodule                           src;
    FactorizableAction                 fa;
    ExtensionOptions                   opts;
    Bimodule                           ext;
    std::vector<Quotient>              q;       // per pair
    std::vector<std::vector<ExtBlock>> blocks;  // per pair
    std::vector<std::map<std::tuple<Word, int, int>, int>> block_index;
    bool truncated = false;

    int block_of(int pair, Word const& w, int sigma, int tau) const;
    //! Factor sizes of a block.
    std::vector<std::size_t> factor_sizes(int pair, int block) const;
    //! (block, letter elements) of the section representative of class k.
    std::pair<int, std::vector<int>> lift(int pair, int k) const;
    //! Point of the extension from a block and letter elements.
    Mor point(int pair, int block, std::vector<int> const& elems) const;
  };

  HorizontalExtension horizontal_extension(Bimodule const&           f,
                                           FactorizableAction const& fa,
                                           ExtensionOptions const&   o = {});
  //! (F^⊗)^⊗ with the outer options.
  HorizontalExtension iterate_extension(HorizontalExtension const& inner,
                                        ExtensionOptions const&    outer);
  //! φ^⊗, letterwise; t must contain every block of s.
  BimoduleMap extension_map(HorizontalExtension const& s,
                            HorizontalExtension const& t,
                            BimoduleMap const&         phi);
  //! The coend and coequalizer formulas give the same classes.
  LawReport compare_formulas(Bimodule const&           f,
                             FactorizableAction const& fa,
                             ExtensionOptions const&   o);

  //! x ⊗ y for x in ρ(a1, b1), y in ρ(a2, b2); -1 if out of range.
  using HorizontalProduct
      = std::function<int(int a1, int b1, int x, int a2, int b2, int y)>;

  //! ρ ≅ ν^⊗, with the decomposition of every element.
  struct FactorizationWitness {
    Bimodule            rho;
    Bimodule            nu;
    BimoduleMap         nu_incl;
    HorizontalProduct   hprod;
    int                 unit = 0;  // element of ρ(0,0) starting each fold
    HorizontalExtension ext;
    BimoduleMap         iso;  // ext => rho, on classes where defined
    //! Per pair and element of ρ, its class in ext.
    std::vector<std::vector<int>> decomp;
    //! Per pair and class of ext, its product in ρ (-1 when undefined).
    std::vector<std::vector<int>> image;
    //! Classes whose product falls outside the truncation.
    std::size_t outside = 0;
    LawReport   report;

    bool ok() const {
      return report.ok();
    }
    //! Number of basic letters of an element.
    int length(int pair, int e) const;
  };

  FactorizationWitness factorization_witness(Bimodule const&           rho,
                                             Bimodule const&           nu,
                                             BimoduleMap const&        incl,
                                             HorizontalProduct const&  h,
                                             int                       unit,
                                             FactorizableAction const& fa,
                                             ExtensionOptions const&   o = {});

  //! ν̃ = Lan along ı^op × ı of the hom bimodule of v, and ρ̃ ≅ ν̃^⊗.
  FactorizationWitness basic_action_bimodule(FactorizableAction const& fa);

  //! ρ1 □ ρ2 with basics the classes whose letters form one connected
  //! block across the middle.
  FactorizationWitness plethysm_factorization(FactorizationWitness const& w1,
                                              FactorizationWitness const& w2,
                                              PlethysmResult const&       p);

  struct Pullback {
    Bimodule    pb;
    BimoduleMap p1;  // mono into the source of f
    BimoduleMap p2;
  };
  Pullback bimodule_pullback(Bimodule const&    fs,
                             BimoduleMap const& f,
                             Bimodule const&    gs,
                             BimoduleMap const& g);

  struct BasicPairs {
    PlethysmResult p;
    BimoduleMap    gbar;
    Bimodule       beta;
    BimoduleMap    incl;    // beta => ρ □ ρ
    BimoduleMap    gamma0;  // beta => ν
  };
  BasicPairs basic_pairs(Monoid const& m, FactorizationWitness const& w);

  //! φ: ξ => ζ. Checks basics go to basics, that the preimage of the
  //! basics is exactly the basics, and that φ commutes with the
  //! factorizations (the extended square). Violations name the fibre.
  //! φ restricted to the basics, ν_src => ν_tgt. Throws if a basic
  //! element leaves the basics.
  BimoduleMap basic_restriction(BimoduleMap const&          phi,
                                FactorizationWitness const& src,
                                FactorizationWitness const& tgt);

  LawReport hereditary_check(BimoduleMap const&          phi,
                             FactorizationWitness const& src,
                             FactorizationWitness const& tgt);

  //! Horizontal extension monad on bimodules over fa, with word caps
  //! (inner, outer). e1 = F^⊗, e2 = (F^⊗)^⊗, e = F^⊗ with cap
  //! inner * outer.
  struct ExtensionMonad {
    HorizontalExtension e1, e2, e;
    BimoduleMap         eta;  // F => e1
    BimoduleMap         mu;   // e2 => e
    LawReport           report;
  };
  //! η: length-one words (the empty word on (0,0) in reduced mode).
  BimoduleMap extension_unit(HorizontalExtension const& e);
  //! μ: flatten words of words; inner is an extension of G, outer an
  //! extension of inner.ext, target an extension of G.
  BimoduleMap extension_flatten(HorizontalExtension const& inner,
                                HorizontalExtension const& outer,
                                HorizontalExtension const& target,
                                LawReport&                 report);
  ExtensionMonad monad_structure(Bimodule const&           f,
                                 FactorizableAction const& fa,
                                 int                       inner,
                                 int                       outer,
                                 ExtensionOptions const&   base = {});

}  // namespace plethysm

#endif  // PLETHYSM_FACTORIZE_HPP_
