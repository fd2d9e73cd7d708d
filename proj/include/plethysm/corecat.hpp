#ifndef PLETHYSM_CORECAT_HPP_
#define PLETHYSM_CORECAT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <tuple>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace plethysm {

  //! A list of violated laws; empty means lawful.
  struct LawReport {
    std::vector<std::string> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
    void add(std::string v) {
      violations.push_back(std::move(v));
    }
    void merge(LawReport const& other, std::string const& prefix = "") {
      for (auto const& v : other.violations) {
        violations.push_back(prefix + v);
      }
    }
  };

  //! Maximum number of morphisms accepted by FinCategory::finalize.
  std::size_t morphism_cap() noexcept;
  void        set_morphism_cap(std::size_t cap) noexcept;

  //! A finite category with dense composition over composable pairs.
  //!
  //! Objects and morphisms are addressed by index; ids are canonical
  //! strings used for output and lookup.
  class FinCategory {
   public:
    struct Morphism {
      std::string id;
      int         src;
      int         tgt;
    };

    int  add_object(std::string id);
    int  add_morphism(std::string id, int src, int tgt);
    void set_identity(int obj, int mor);

    //! Fills the composition table; comp(g, f) must return g∘f or -1.
    void finalize(std::function<int(int, int)> const& comp);

    std::size_t num_objects() const noexcept {
      return _objects.size();
    }
    std::size_t num_morphisms() const noexcept {
      return _mors.size();
    }
    std::string const& object_id(int o) const {
      return _objects.at(o);
    }
    Morphism const& morphism(int m) const {
      return _mors.at(m);
    }
    int src(int m) const {
      return _mors[m].src;
    }
    int tgt(int m) const {
      return _mors[m].tgt;
    }
    int identity(int o) const {
      return _identity.at(o);
    }
    bool is_identity(int m) const {
      return _identity[_mors[m].src] == m;
    }

    //! g∘f; throws if not composable.
    int compose(int g, int f) const;
    //! g∘f, or -1 if the table has no entry.
    int try_compose(int g, int f) const noexcept;

    std::vector<int> const& out(int o) const {
      return _out.at(o);
    }
    std::vector<int> const& hom(int a, int b) const;

    int find_object(std::string const& id) const;
    int find_morphism(std::string const& id) const;

    //! Inverse of f, or -1.
    int  inverse(int f) const;
    bool is_groupoid() const;

    std::string name;

   private:
    std::vector<std::string>                 _objects;
    std::vector<Morphism>                    _mors;
    std::vector<int>                         _identity;
    std::vector<std::vector<int>>            _out;
    std::vector<int>                         _outpos;
    std::vector<std::vector<int>>            _post;
    std::unordered_map<std::string, int>     _obj_index;
    std::unordered_map<std::string, int>     _mor_index;
    std::unordered_map<std::int64_t, std::vector<int>> _hom;
    std::vector<int>                         _inverse;
    bool                                     _finalized = false;
    static std::vector<int> const            _empty;
  };

  using CatPtr = std::shared_ptr<FinCategory const>;

  struct Functor {
    CatPtr           src;
    CatPtr           tgt;
    std::vector<int> obj;
    std::vector<int> mor;
  };

  struct NatTrans {
    Functor          from;
    Functor          to;
    std::vector<int> comp;  // per source object, a morphism of the target
  };

  struct CommaCategory {
    CatPtr  cat;
    Functor proj_src;
    Functor proj_tgt;
    //! Per comma object: (a, b, m : F a -> G b).
    std::vector<std::tuple<int, int, int>> objects;
  };

  LawReport validate_category(FinCategory const& c);
  LawReport check_functor(Functor const& f);
  LawReport check_nat(NatTrans const& n);

  //! c^op x d; object (a,b) has index a*|Ob d|+b, morphism (f|g) has
  //! index f*|Mor d|+g with source (tgt f, src g).
  CatPtr opposite_product(CatPtr const& c, CatPtr const& d);

  CommaCategory comma_category(Functor const& f, Functor const& g);

  Functor identity_functor(CatPtr const& c);
  Functor compose_functors(Functor const& g, Functor const& f);

  CatPtr terminal_category();
  CatPtr discrete_category(std::vector<std::string> const& ids);
  //! One-object category of a finite group with table mult[a][b] = a*b.
  CatPtr group_category(std::string const&              name,
                        std::vector<std::string> const& elems,
                        std::vector<std::vector<int>> const& mult);
  //! Skeletal Iso(FinSet) on objects 0..nmax; morphisms are permutations.
  CatPtr symmetric_groupoid(int nmax);
  //! Discrete category on 0..nmax.
  CatPtr discrete_naturals(int nmax);
  //! Full subcategory on the given objects, plus the inclusion functor.
  std::pair<CatPtr, Functor> full_subcategory(CatPtr const&           c,
                                              std::vector<int> const& objs);

  // Permutation helpers used by the symmetric groupoid.
  std::string        perm_id(std::vector<int> const& p);
  std::vector<int>   perm_from_id(std::string const& id);
  std::vector<std::vector<int>> all_perms(int n);

}  // namespace plethysm

#endif  // PLETHYSM_CORECAT_HPP_
