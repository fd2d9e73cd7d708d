#ifndef PLETHYSM_TARGET_HPP_
#define PLETHYSM_TARGET_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corecat.hpp"

namespace plethysm {

  //! The two target categories: finite sets and finite-dimensional
  //! rational vector spaces with a named basis.
  enum class Flavor { set, vect };

  std::string flavor_name(Flavor f);

  //! Sparse exact rational matrix stored by columns; each column lists
  //! its nonzero (row, value) entries in increasing row order.
  class QMatrix {
   public:
    using Entry  = std::pair<std::uint32_t, mpq_class>;
    using Column = std::vector<Entry>;

    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _c(cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    mpq_class at(std::size_t i, std::size_t j) const;
    void      set(std::size_t i, std::size_t j, mpq_class const& v);
    Column const& col(std::size_t j) const {
      return _c[j];
    }
    //! Replace a column; entries must be sorted with no zeros.
    void set_col(std::size_t j, Column c) {
      _c[j] = std::move(c);
    }
    std::size_t nnz() const;

    QMatrix operator*(QMatrix const& o) const;
    bool    operator==(QMatrix const& o) const;
    bool    operator!=(QMatrix const& o) const {
      return !(*this == o);
    }

    std::size_t rank() const;
    //! Row-major "p/q" strings.
    std::string serialize() const;

   private:
    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<Column> _c;
  };

  //! Sum of scaled sparse columns, sorted, zeros dropped.
  QMatrix::Column combine(std::vector<std::pair<mpq_class, QMatrix::Column const*>> const& terms);

  //! Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref(QMatrix& m);

  //! A finite set (element names) or a vector space (basis names).
  struct Obj {
    Flavor                   flavor = Flavor::set;
    std::vector<std::string> names;

    std::size_t size() const noexcept {
      return names.size();
    }
    static Obj set(std::vector<std::string> names) {
      return Obj{Flavor::set, std::move(names)};
    }
    static Obj vect(std::vector<std::string> names) {
      return Obj{Flavor::vect, std::move(names)};
    }
    int         index_of(std::string const& name) const;
    std::string serialize() const;
    bool        operator==(Obj const& o) const {
      return flavor == o.flavor && names == o.names;
    }
  };

  //! A function between finite sets or a matrix (cod x dom).
  struct Mor {
    Flavor           flavor = Flavor::set;
    std::size_t      dom    = 0;
    std::size_t      cod    = 0;
    std::vector<int> map;
    QMatrix          mat;

    std::string serialize() const;
  };

  Obj unit_obj(Flavor f);
  Obj initial_obj(Flavor f);
  Mor identity_mor(Obj const& x);
  Mor identity_mor(Flavor f, std::size_t n);
  Mor compose(Mor const& g, Mor const& f);
  bool equal(Mor const& a, Mor const& b);
  bool is_iso(Mor const& m);
  //! Inverse of an iso; throws otherwise.
  Mor inverse(Mor const& m);
  //! Set map as a matrix (free functor F: Set -> Vect on morphisms).
  Mor linearize(Mor const& m);
  Obj linearize(Obj const& x);
  //! The map 1 -> X picking element/basis vector i.
  Mor point(Flavor f, std::size_t cod, std::size_t i);
  //! Unique map out of the initial object.
  Mor from_initial(Flavor f, std::size_t cod);

  std::string tuple_name(std::vector<std::string> const& parts);

  //! The map n -> X whose columns/values are the given points 1 -> X.
  Mor from_points(Flavor f, std::size_t cod, std::vector<Mor> const& pts);
  //! The i-th point of the source of m pushed forward: m o point(i).
  Mor apply(Mor const& m, Mor const& pt);
  //! Symmetry X (x) Y -> Y (x) X for sizes m = |X|, n = |Y|.
  Mor tensor_swap(Flavor f, std::size_t m, std::size_t n);

  Obj tensor(Obj const& x, Obj const& y);
  Obj tensor(std::vector<Obj> const& xs);
  Mor tensor(Mor const& f, Mor const& g);
  Mor tensor(std::vector<Mor> const& fs);
  //! Decode a tensor index into per-factor indices (row-major).
  std::vector<int> tensor_decode(std::vector<std::size_t> const& sizes,
                                 std::size_t                     idx);
  std::size_t      tensor_encode(std::vector<std::size_t> const& sizes,
                                 std::vector<int> const&         parts);

  //! I (.) X; FinSet i x X, FinVect |I|-fold direct sum.
  Obj copower(std::vector<std::string> const& i, Obj const& x);
  //! Hom(I (.) X, Y) ~ Hom(I, Hom(X, Y)): split a map out of the copower.
  std::vector<Mor> copower_transpose(std::size_t i_size,
                                     Mor const&  from_copower,
                                     std::size_t x_size);
  Mor copower_untranspose(std::vector<Mor> const& family);

  struct Coproduct {
    Obj              obj;
    std::vector<Mor> inj;
  };
  Coproduct coproduct(std::vector<Obj> const& xs);

  //! A quotient of a coproduct of blocks by generated relations. The
  //! common output shape of colimits, coends and coequalizers.
  struct Quotient {
    Flavor                   flavor = Flavor::set;
    Obj                      obj;
    std::vector<std::size_t> offset;  // per block, plus the total
    std::vector<std::string> gen_names;
    // set flavor
    std::vector<int>                 cls;
    std::vector<std::pair<int, int>> set_rel;
    // vect flavor
    QMatrix                                              proj;
    std::vector<std::vector<std::pair<int, mpq_class>>> vect_rel;
    //! Per quotient element/basis vector: (block, index) representative.
    std::vector<std::pair<int, int>> section;

    std::size_t num_blocks() const {
      return offset.size() - 1;
    }
    std::size_t num_generators() const {
      return offset.back();
    }
    int class_of(int block, int elem) const {
      return cls[offset[block] + elem];
    }
    std::vector<Mor> block_proj;

    //! Coprojection of a block.
    Mor const& proj_block(int block) const {
      return block_proj[block];
    }
    //! (block, index) of a generator.
    std::pair<int, int> locate(std::size_t gen) const;
    //! Point of the quotient: coprojection of a point of a block.
    Mor project_point(int block, Mor const& pt) const {
      return compose(block_proj[block], pt);
    }
    //! Image of a vector given on a block's basis.
    std::vector<mpq_class> project(int block,
                                   std::vector<mpq_class> const& v) const;
    //! Map out of the quotient determined by per-generator images. Set:
    //! images[g] is an element of a set of size cod. Vect: columns.
    //! Returns nullopt if a relation is not respected.
    std::optional<Mor> induce_set(std::vector<int> const& images,
                                  std::size_t             cod) const;
    std::optional<Mor> induce_vect(QMatrix const& images) const;
    //! Map out of the quotient from per-block maps into a common object.
    std::optional<Mor> induce(std::vector<Mor> const& per_block,
                              std::size_t             cod) const;
  };

  //! Map out of a quotient read off on section representatives, without
  //! re-checking relations.
  Mor section_map(Quotient const&         q,
                  std::vector<Mor> const& per_block,
                  std::size_t             cod);

  class QuotientBuilder {
   public:
    explicit QuotientBuilder(Flavor f) : _flavor(f) {}

    int  add_block(Obj const& o);
    void relate(int ba, Mor const& fa, int bb, Mor const& fb);
    void relate_elems(int ba, int ea, int bb, int eb);
    Quotient build() const;

    std::size_t block_size(int b) const {
      return _offset[b + 1] - _offset[b];
    }

   private:
    Flavor                                               _flavor;
    std::vector<std::size_t>                             _offset{0};
    std::vector<std::string>                             _names;
    std::vector<std::pair<int, int>>                     _set_rel;
    std::vector<std::vector<std::pair<int, mpq_class>>> _vect_rel;
  };

  //! A functor from a finite category into the target (DiagramData).
  struct Rep {
    CatPtr           base;
    Flavor           flavor = Flavor::set;
    std::vector<Obj> value;
    std::vector<Mor> act;
  };

  //! A natural transformation between reps over the same base.
  struct RepMap {
    std::vector<Mor> comp;
  };

  LawReport check_rep(Rep const& r);
  LawReport check_repmap(Rep const& s, Rep const& t, RepMap const& m);
  //! Precomposition r o f.
  Rep     restrict_rep(Rep const& r, Functor const& f);
  Rep     constant_rep(CatPtr const& base, Obj const& x);
  RepMap  identity_repmap(Rep const& r);
  RepMap  compose_repmap(RepMap const& g, RepMap const& f);
  bool    is_iso(RepMap const& m);

  //! Colimit of a diagram: blocks = shape objects, one relation per
  //! shape morphism. Cocone = proj_block.
  Quotient colimit(Rep const& d);
  //! Coequalizer of a parallel pair f, g : X -> Y.
  Quotient coequalizer(Mor const& f, Mor const& g, Obj const& y);

  //! Number of maps out of a set colimit compatible with a cocone into a
  //! test set of the given size, counted by brute force (testing helper).
  std::size_t count_factorizations(Quotient const&         q,
                                   std::vector<Mor> const& cocone,
                                   std::size_t             test_size);

}  // namespace plethysm

#endif  // PLETHYSM_TARGET_HPP_
