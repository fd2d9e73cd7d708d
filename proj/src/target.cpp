#include "plethysm/target.hpp"

#include <algorithm>
#include <numeric>

namespace plethysm {

  std::string flavor_name(Flavor f) {
    return f == Flavor::set ? "finset" : "finvect";
  }

  // QMatrix

  QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m._c[i].emplace_back(static_cast<std::uint32_t>(i), 1);
    }
    return m;
  }

  mpq_class QMatrix::at(std::size_t i, std::size_t j) const {
    auto const& c  = _c[j];
    auto        it = std::lower_bound(
        c.begin(), c.end(), i, [](Entry const& e, std::size_t r) {
          return e.first < r;
        });
    return it != c.end() && it->first == i ? it->second : mpq_class(0);
  }

  void QMatrix::set(std::size_t i, std::size_t j, mpq_class const& v) {
    auto& c  = _c[j];
    auto  it = std::lower_bound(
        c.begin(), c.end(), i, [](Entry const& e, std::size_t r) {
          return e.first < r;
        });
    if (it != c.end() && it->first == i) {
      if (v == 0) {
        c.erase(it);
      } else {
        it->second = v;
      }
    } else if (v != 0) {
      c.insert(it, Entry{static_cast<std::uint32_t>(i), v});
    }
  }

  std::size_t QMatrix::nnz() const {
    std::size_t n = 0;
    for (auto const& c : _c) {
      n += c.size();
    }
    return n;
  }

  QMatrix::Column combine(
      std::vector<std::pair<mpq_class, QMatrix::Column const*>> const& terms) {
    if (terms.size() == 1) {
      QMatrix::Column out = *terms[0].second;
      if (terms[0].first != 1) {
        for (auto& e : out) {
          e.second *= terms[0].first;
        }
      }
      return out;
    }
    QMatrix::Column acc;
    for (auto const& [s, c] : terms) {
      for (auto const& [r, v] : *c) {
        acc.emplace_back(r, s * v);
      }
    }
    std::stable_sort(acc.begin(), acc.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    QMatrix::Column out;
    for (auto& e : acc) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second += e.second;
      } else {
        if (!out.empty() && out.back().second == 0) {
          out.pop_back();
        }
        out.push_back(std::move(e));
      }
    }
    if (!out.empty() && out.back().second == 0) {
      out.pop_back();
    }
    return out;
  }

  QMatrix QMatrix::operator*(QMatrix const& o) const {
    require(_cols == o._rows, ErrorCode::mismatch, "matrix shape mismatch");
    QMatrix r(_rows, o._cols);
    std::vector<std::pair<mpq_class, Column const*>> terms;
    for (std::size_t j = 0; j < o._cols; ++j) {
      terms.clear();
      for (auto const& [k, v] : o._c[j]) {
        if (!_c[k].empty()) {
          terms.emplace_back(v, &_c[k]);
        }
      }
      if (!terms.empty()) {
        r._c[j] = combine(terms);
      }
    }
    return r;
  }

  bool QMatrix::operator==(QMatrix const& o) const {
    return _rows == o._rows && _cols == o._cols && _c == o._c;
  }

  std::size_t QMatrix::rank() const {
    QMatrix c = *this;
    return rref(c).size();
  }

  std::string QMatrix::serialize() const {
    std::string s;
    for (std::size_t i = 0; i < _rows; ++i) {
      if (i > 0) {
        s += "; ";
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        if (j > 0) {
          s += ' ';
        }
        mpq_class q = at(i, j);
        s += q.get_num().get_str() + "/" + q.get_den().get_str();
      }
    }
    return s;
  }

  namespace {
    using SparseRow = std::vector<std::pair<std::uint32_t, mpq_class>>;

    mpq_class row_get(SparseRow const& r, std::uint32_t c) {
      auto it = std::lower_bound(
          r.begin(), r.end(), c, [](auto const& e, std::uint32_t k) {
            return e.first < k;
          });
      return it != r.end() && it->first == c ? it->second : mpq_class(0);
    }
  }  // namespace

  // Rows are reduced one at a time against a basis kept in reduced echelon
  // form, so sparse relation systems stay sparse.
  std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (auto const& [i, v] : m.col(j)) {
        rows[i].emplace_back(static_cast<std::uint32_t>(j), v);
      }
    }
    std::vector<SparseRow>        basis;
    std::vector<int>              pivot_row(m.cols(), -1);
    std::vector<std::vector<int>> occ(m.cols());
    std::vector<std::pair<mpq_class, QMatrix::Column const*>> terms;
    for (auto& r : rows) {
      if (r.empty()) {
        continue;
      }
      terms.clear();
      terms.emplace_back(1, &r);
      for (auto const& [c, v] : r) {
        if (pivot_row[c] >= 0) {
          terms.emplace_back(-v, &basis[pivot_row[c]]);
        }
      }
      SparseRow red = terms.size() == 1 ? r : combine(terms);
      if (red.empty()) {
        continue;
      }
      std::uint32_t p   = red.front().first;
      mpq_class     inv = 1 / red.front().second;
      for (auto& e : red) {
        e.second *= inv;
      }
      int idx = static_cast<int>(basis.size());
      for (int o : occ[p]) {
        mpq_class f = row_get(basis[o], p);
        if (f == 0) {
          continue;
        }
        std::vector<std::pair<mpq_class, QMatrix::Column const*>> t2{
            {1, &basis[o]}, {-f, &red}};
        basis[o] = combine(t2);
        for (auto const& e : red) {
          if (e.first != p) {
            occ[e.first].push_back(o);
          }
        }
      }
      occ[p].clear();
      for (auto const& e : red) {
        if (e.first != p) {
          occ[e.first].push_back(idx);
        }
      }
      pivot_row[p] = idx;
      basis.push_back(std::move(red));
    }
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pivot_row[c] >= 0) {
        pivots.push_back(c);
      }
    }
    QMatrix out(m.rows(), m.cols());
    std::vector<QMatrix::Column> cols(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (auto const& [c, v] : basis[pivot_row[pivots[i]]]) {
        cols[c].emplace_back(static_cast<std::uint32_t>(i), v);
      }
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.set_col(c, std::move(cols[c]));
    }
    m = std::move(out);
    return pivots;
  }

  // Obj / Mor

  int Obj::index_of(std::string const& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
  }

  std::string Obj::serialize() const {
    if (flavor == Flavor::set) {
      std::vector<std::string> sorted = names;
      std::sort(sorted.begin(), sorted.end());
      std::string s = "{";
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        s += (i > 0 ? " " : "") + sorted[i];
      }
      return s + "}";
    }
    std::string s = "Q^" + std::to_string(names.size()) + "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
      s += (i > 0 ? " " : "") + names[i];
    }
    return s + "]";
  }

  std::string Mor::serialize() const {
    if (flavor == Flavor::set) {
      std::string s = "[";
      for (std::size_t i = 0; i < map.size(); ++i) {
        s += (i > 0 ? " " : "") + std::to_string(map[i]);
      }
      return s + "]";
    }
    return "[" + mat.serialize() + "]";
  }

  Obj unit_obj(Flavor f) {
    return Obj{f, {"*"}};
  }

  Obj initial_obj(Flavor f) {
    return Obj{f, {}};
  }

  Mor identity_mor(Flavor f, std::size_t n) {
    Mor m{f, n, n, {}, {}};
    if (f == Flavor::set) {
      m.map.resize(n);
      std::iota(m.map.begin(), m.map.end(), 0);
    } else {
      m.mat = QMatrix::identity(n);
    }
    return m;
  }

  Mor identity_mor(Obj const& x) {
    return identity_mor(x.flavor, x.size());
  }

  Mor compose(Mor const& g, Mor const& f) {
    require(g.flavor == f.flavor, ErrorCode::flavor, "flavor mismatch");
    require(g.dom == f.cod,
            ErrorCode::mismatch,
            "compose: domain/codomain mismatch");
    Mor h{f.flavor, f.dom, g.cod, {}, {}};
    if (f.flavor == Flavor::set) {
      h.map.resize(f.dom);
      for (std::size_t i = 0; i < f.dom; ++i) {
        h.map[i] = g.map[f.map[i]];
      }
    } else {
      h.mat = g.mat * f.mat;
    }
    return h;
  }

  bool equal(Mor const& a, Mor const& b) {
    if (a.flavor != b.flavor || a.dom != b.dom || a.cod != b.cod) {
      return false;
    }
    return a.flavor == Flavor::set ? a.map == b.map : a.mat == b.mat;
  }

  bool is_iso(Mor const& m) {
    if (m.dom != m.cod) {
      return false;
    }
    if (m.flavor == Flavor::set) {
      std::vector<char> hit(m.cod, 0);
      for (int x : m.map) {
        if (hit[x]) {
          return false;
        }
        hit[x] = 1;
      }
      return true;
    }
    return m.mat.rank() == m.dom;
  }

  Mor inverse(Mor const& m) {
    require(is_iso(m), ErrorCode::invalid_argument, "inverse of non-iso");
    Mor r{m.flavor, m.cod, m.dom, {}, {}};
    if (m.flavor == Flavor::set) {
      r.map.resize(m.dom);
      for (std::size_t i = 0; i < m.dom; ++i) {
        r.map[m.map[i]] = static_cast<int>(i);
      }
      return r;
    }
    std::size_t n = m.dom;
    QMatrix     aug(n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      aug.set_col(j, m.mat.col(j));
      aug.set(j, n + j, 1);
    }
    rref(aug);
    r.mat = QMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      r.mat.set_col(j, aug.col(n + j));
    }
    return r;
  }

  Mor linearize(Mor const& m) {
    if (m.flavor == Flavor::vect) {
      return m;
    }
    Mor r{Flavor::vect, m.dom, m.cod, {}, QMatrix(m.cod, m.dom)};
    for (std::size_t i = 0; i < m.dom; ++i) {
      r.mat.set(m.map[i], i, 1);
    }
    return r;
  }

  Obj linearize(Obj const& x) {
    return Obj{Flavor::vect, x.names};
  }

  Mor point(Flavor f, std::size_t cod, std::size_t i) {
    Mor m{f, 1, cod, {}, {}};
    if (f == Flavor::set) {
      m.map = {static_cast<int>(i)};
    } else {
      m.mat           = QMatrix(cod, 1);
      m.mat.set(i, 0, 1);
    }
    return m;
  }

  Mor from_initial(Flavor f, std::size_t cod) {
    Mor m{f, 0, cod, {}, {}};
    if (f == Flavor::vect) {
      m.mat = QMatrix(cod, 0);
    }
    return m;
  }

  std::string tuple_name(std::vector<std::string> const& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      s += (i > 0 ? "," : "") + parts[i];
    }
    return s + ")";
  }

  Mor from_points(Flavor f, std::size_t cod, std::vector<Mor> const& pts) {
    Mor m{f, pts.size(), cod, {}, {}};
    if (f == Flavor::set) {
      for (auto const& p : pts) {
        m.map.push_back(p.map[0]);
      }
    } else {
      m.mat = QMatrix(cod, pts.size());
      for (std::size_t j = 0; j < pts.size(); ++j) {
        m.mat.set_col(j, pts[j].mat.col(0));
      }
    }
    return m;
  }

  Mor apply(Mor const& m, Mor const& pt) {
    return compose(m, pt);
  }

  Mor tensor_swap(Flavor f, std::size_t m, std::size_t n) {
    Mor s{Flavor::set, m * n, m * n, std::vector<int>(m * n), {}};
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        s.map[i * n + j] = static_cast<int>(j * m + i);
      }
    }
    return f == Flavor::set ? s : linearize(s);
  }

  std::vector<int> tensor_decode(std::vector<std::size_t> const& sizes,
                                 std::size_t                     idx) {
    std::vector<int> parts(sizes.size());
    for (std::size_t k = sizes.size(); k-- > 0;) {
      parts[k] = static_cast<int>(idx % sizes[k]);
      idx /= sizes[k];
    }
    return parts;
  }

  std::size_t tensor_encode(std::vector<std::size_t> const& sizes,
                            std::vector<int> const&         parts) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      idx = idx * sizes[k] + static_cast<std::size_t>(parts[k]);
    }
    return idx;
  }

  Obj tensor(std::vector<Obj> const& xs) {
    require(!xs.empty(), ErrorCode::invalid_argument, "empty tensor");
    Flavor                   f = xs[0].flavor;
    std::vector<std::size_t> sizes;
    std::size_t              total = 1;
    for (auto const& x : xs) {
      require(x.flavor == f, ErrorCode::flavor, "tensor flavor mismatch");
      sizes.push_back(x.size());
      total *= x.size();
    }
    Obj out{f, {}};
    out.names.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
      auto                     parts = tensor_decode(sizes, i);
      std::vector<std::string> ns;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        ns.push_back(xs[k].names[parts[k]]);
      }
      out.names.push_back(tuple_name(ns));
    }
    return out;
  }

  Obj tensor(Obj const& x, Obj const& y) {
    return tensor(std::vector<Obj>{x, y});
  }

  Mor tensor(std::vector<Mor> const& fs) {
    require(!fs.empty(), ErrorCode::invalid_argument, "empty tensor");
    Flavor                   f = fs[0].flavor;
    std::vector<std::size_t> ds, cs;
    std::size_t              dt = 1, ct = 1;
    for (auto const& m : fs) {
      require(m.flavor == f, ErrorCode::flavor, "tensor flavor mismatch");
      ds.push_back(m.dom);
      cs.push_back(m.cod);
      dt *= m.dom;
      ct *= m.cod;
    }
    Mor out{f, dt, ct, {}, {}};
    if (f == Flavor::set) {
      out.map.resize(dt);
      for (std::size_t i = 0; i < dt; ++i) {
        auto parts = tensor_decode(ds, i);
        for (std::size_t k = 0; k < fs.size(); ++k) {
          parts[k] = fs[k].map[parts[k]];
        }
        out.map[i] = static_cast<int>(tensor_encode(cs, parts));
      }
    } else {
      out.mat = QMatrix(ct, dt);
      for (std::size_t i = 0; i < dt; ++i) {
        auto dp = tensor_decode(ds, i);
        // row-major products of the factor columns stay sorted
        QMatrix::Column col{{0, 1}};
        for (std::size_t k = 0; k < fs.size(); ++k) {
          QMatrix::Column next;
          for (auto const& [r, v] : col) {
            for (auto const& [r2, v2] : fs[k].mat.col(dp[k])) {
              next.emplace_back(
                  static_cast<std::uint32_t>(r * cs[k] + r2), v * v2);
            }
          }
          col = std::move(next);
        }
        out.mat.set_col(i, std::move(col));
      }
    }
    return out;
  }

  Mor tensor(Mor const& f, Mor const& g) {
    return tensor(std::vector<Mor>{f, g});
  }

  Obj copower(std::vector<std::string> const& i, Obj const& x) {
    Obj out{x.flavor, {}};
    for (auto const& a : i) {
      for (auto const& n : x.names) {
        out.names.push_back(a + "." + n);
      }
    }
    return out;
  }

  std::vector<Mor> copower_transpose(std::size_t i_size,
                                     Mor const&  from_copower,
                                     std::size_t x_size) {
    std::vector<Mor> fam;
    for (std::size_t a = 0; a < i_size; ++a) {
      Mor m{from_copower.flavor, x_size, from_copower.cod, {}, {}};
      if (m.flavor == Flavor::set) {
        for (std::size_t e = 0; e < x_size; ++e) {
          m.map.push_back(from_copower.map[a * x_size + e]);
        }
      } else {
        m.mat = QMatrix(from_copower.cod, x_size);
        for (std::size_t e = 0; e < x_size; ++e) {
          m.mat.set_col(e, from_copower.mat.col(a * x_size + e));
        }
      }
      fam.push_back(std::move(m));
    }
    return fam;
  }

  Mor copower_untranspose(std::vector<Mor> const& family) {
    require(!family.empty(), ErrorCode::invalid_argument, "empty family");
    std::size_t x = family[0].dom, cod = family[0].cod;
    Mor         m{family[0].flavor, x * family.size(), cod, {}, {}};
    if (m.flavor == Flavor::set) {
      for (auto const& f : family) {
        m.map.insert(m.map.end(), f.map.begin(), f.map.end());
      }
    } else {
      m.mat = QMatrix(cod, m.dom);
      for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t e = 0; e < x; ++e) {
          m.mat.set_col(a * x + e, family[a].mat.col(e));
        }
      }
    }
    return m;
  }

  Coproduct coproduct(std::vector<Obj> const& xs) {
    Flavor    f = xs.empty() ? Flavor::set : xs[0].flavor;
    Coproduct c{Obj{f, {}}, {}};
    std::size_t total = 0;
    for (auto const& x : xs) {
      total += x.size();
    }
    std::size_t off = 0;
    for (std::size_t b = 0; b < xs.size(); ++b) {
      for (auto const& n : xs[b].names) {
        c.obj.names.push_back(std::to_string(b) + ":" + n);
      }
      Mor m{f, xs[b].size(), total, {}, {}};
      if (f == Flavor::set) {
        for (std::size_t e = 0; e < xs[b].size(); ++e) {
          m.map.push_back(static_cast<int>(off + e));
        }
      } else {
        m.mat = QMatrix(total, xs[b].size());
        for (std::size_t e = 0; e < xs[b].size(); ++e) {
          m.mat.set(off + e, e, 1);
        }
      }
      c.inj.push_back(std::move(m));
      off += xs[b].size();
    }
    return c;
  }

  // Quotient

  int QuotientBuilder::add_block(Obj const& o) {
    require(o.flavor == _flavor, ErrorCode::flavor, "quotient flavor mismatch");
    _names.insert(_names.end(), o.names.begin(), o.names.end());
    _offset.push_back(_offset.back() + o.size());
    return static_cast<int>(_offset.size()) - 2;
  }

  void QuotientBuilder::relate_elems(int ba, int ea, int bb, int eb) {
    require(_flavor == Flavor::set, ErrorCode::flavor, "relate_elems on vect");
    _set_rel.emplace_back(static_cast<int>(_offset[ba] + ea),
                          static_cast<int>(_offset[bb] + eb));
  }

  void QuotientBuilder::relate(int         ba,
                               Mor const&  fa,
                               int         bb,
                               Mor const&  fb) {
    require(fa.dom == fb.dom, ErrorCode::mismatch, "relation domains differ");
    require(fa.cod == block_size(ba) && fb.cod == block_size(bb),
            ErrorCode::mismatch,
            "relation codomain mismatch");
    if (_flavor == Flavor::set) {
      for (std::size_t r = 0; r < fa.dom; ++r) {
        relate_elems(ba, fa.map[r], bb, fb.map[r]);
      }
      return;
    }
    for (std::size_t r = 0; r < fa.dom; ++r) {
      std::vector<std::pair<int, mpq_class>> row;
      for (auto const& [i, v] : fa.mat.col(r)) {
        row.emplace_back(static_cast<int>(_offset[ba] + i), v);
      }
      for (auto const& [i, v] : fb.mat.col(r)) {
        row.emplace_back(static_cast<int>(_offset[bb] + i), -v);
      }
      if (!row.empty()) {
        _vect_rel.push_back(std::move(row));
      }
    }
  }

  namespace {
    int uf_find(std::vector<int>& p, int x) {
      while (p[x] != x) {
        p[x] = p[p[x]];
        x    = p[x];
      }
      return x;
    }

    std::pair<int, int> locate(std::vector<std::size_t> const& offset,
                               std::size_t                     g) {
      auto it = std::upper_bound(offset.begin(), offset.end(), g);
      int  b  = static_cast<int>(it - offset.begin()) - 1;
      return {b, static_cast<int>(g - offset[b])};
    }

    void fill_block_proj(Quotient& q) {
      q.block_proj.clear();
      for (std::size_t block = 0; block + 1 < q.offset.size(); ++block) {
        std::size_t lo = q.offset[block], hi = q.offset[block + 1];
        Mor         m{q.flavor, hi - lo, q.obj.size(), {}, {}};
        if (q.flavor == Flavor::set) {
          m.map.assign(q.cls.begin() + lo, q.cls.begin() + hi);
        } else {
          m.mat = QMatrix(q.obj.size(), hi - lo);
          for (std::size_t g = lo; g < hi; ++g) {
            m.mat.set_col(g - lo, q.proj.col(g));
          }
        }
        q.block_proj.push_back(std::move(m));
      }
    }
  }  // namespace

  Quotient QuotientBuilder::build() const {
    Quotient q;
    q.flavor    = _flavor;
    q.offset    = _offset;
    q.gen_names = _names;
    std::size_t n = _names.size();
    if (_flavor == Flavor::set) {
      q.set_rel = _set_rel;
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      for (auto [a, b] : _set_rel) {
        int ra = uf_find(parent, a), rb = uf_find(parent, b);
        if (ra != rb) {
          parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
      // elect the lexicographically least generator name per class
      std::vector<int> best(n, -1);
      for (std::size_t g = 0; g < n; ++g) {
        int r = uf_find(parent, static_cast<int>(g));
        if (best[r] < 0 || _names[g] < _names[best[r]]) {
          best[r] = static_cast<int>(g);
        }
      }
      std::vector<int> reps;
      for (std::size_t g = 0; g < n; ++g) {
        if (uf_find(parent, static_cast<int>(g)) == static_cast<int>(g)) {
          reps.push_back(best[g]);
        }
      }
      std::sort(reps.begin(), reps.end(), [&](int a, int b) {
        return _names[a] != _names[b] ? _names[a] < _names[b] : a < b;
      });
      std::vector<int> root_to_cls(n, -1);
      q.obj.flavor = Flavor::set;
      for (std::size_t c = 0; c < reps.size(); ++c) {
        root_to_cls[uf_find(parent, reps[c])] = static_cast<int>(c);
        q.obj.names.push_back(_names[reps[c]]);
        q.section.push_back(locate(_offset, reps[c]));
      }
      q.cls.resize(n);
      for (std::size_t g = 0; g < n; ++g) {
        q.cls[g] = root_to_cls[uf_find(parent, static_cast<int>(g))];
      }
      fill_block_proj(q);
      return q;
    }
    q.vect_rel = _vect_rel;
    QMatrix rel(_vect_rel.size(), n);
    {
      std::vector<std::vector<std::pair<mpq_class, std::size_t>>> bycol(n);
      for (std::size_t r = 0; r < _vect_rel.size(); ++r) {
        for (auto const& [c, v] : _vect_rel[r]) {
          bycol[c].emplace_back(v, r);
        }
      }
      for (std::size_t c = 0; c < n; ++c) {
        QMatrix::Column col;
        for (auto const& [v, r] : bycol[c]) {
          if (!col.empty() && col.back().first == r) {
            col.back().second += v;
          } else {
            col.emplace_back(static_cast<std::uint32_t>(r), v);
          }
        }
        col.erase(std::remove_if(col.begin(), col.end(),
                                 [](auto const& e) { return e.second == 0; }),
                  col.end());
        rel.set_col(c, std::move(col));
      }
    }
    auto              pivots = rref(rel);
    std::vector<char> is_pivot(n, 0);
    for (auto p : pivots) {
      is_pivot[p] = 1;
    }
    std::vector<int> basis_of(n, -1);
    q.obj.flavor = Flavor::vect;
    for (std::size_t g = 0; g < n; ++g) {
      if (!is_pivot[g]) {
        basis_of[g] = static_cast<int>(q.obj.names.size());
        q.obj.names.push_back(_names[g]);
        q.section.push_back(locate(_offset, g));
      }
    }
    // generator g maps to e_g if free, else to minus the free part of
    // its pivot row
    q.proj = QMatrix(q.obj.names.size(), n);
    std::vector<QMatrix::Column> pcols(n);
    for (std::size_t g = 0; g < n; ++g) {
      if (!is_pivot[g]) {
        pcols[g].emplace_back(static_cast<std::uint32_t>(basis_of[g]), 1);
        for (auto const& [r, v] : rel.col(g)) {
          pcols[pivots[r]].emplace_back(
              static_cast<std::uint32_t>(basis_of[g]), -v);
        }
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      q.proj.set_col(g, std::move(pcols[g]));
    }
    fill_block_proj(q);
    return q;
  }

  std::pair<int, int> Quotient::locate(std::size_t gen) const {
    auto it = std::upper_bound(offset.begin(), offset.end(), gen);
    int  b  = static_cast<int>(it - offset.begin()) - 1;
    return {b, static_cast<int>(gen - offset[b])};
  }

  std::vector<mpq_class> Quotient::project(
      int                           block,
      std::vector<mpq_class> const& v) const {
    std::vector<mpq_class> out(obj.size());
    std::size_t            lo = offset[block];
    for (std::size_t e = 0; e < v.size(); ++e) {
      if (v[e] == 0) {
        continue;
      }
      if (flavor == Flavor::set) {
        out[cls[lo + e]] += v[e];
      } else {
        for (auto const& [i, w] : proj.col(lo + e)) {
          out[i] += w * v[e];
        }
      }
    }
    return out;
  }

  std::optional<Mor> Quotient::induce_set(std::vector<int> const& images,
                                          std::size_t             cod) const {
    for (auto [a, b] : set_rel) {
      if (images[a] != images[b]) {
        return std::nullopt;
      }
    }
    Mor m{Flavor::set, obj.size(), cod, {}, {}};
    for (auto [b, e] : section) {
      m.map.push_back(images[offset[b] + e]);
    }
    return m;
  }

  std::optional<Mor> Quotient::induce_vect(QMatrix const& images) const {
    std::vector<std::pair<mpq_class, QMatrix::Column const*>> terms;
    for (auto const& row : vect_rel) {
      terms.clear();
      for (auto const& [c, v] : row) {
        if (!images.col(c).empty()) {
          terms.emplace_back(v, &images.col(c));
        }
      }
      if (!terms.empty() && !combine(terms).empty()) {
        return std::nullopt;
      }
    }
    Mor m{Flavor::vect, obj.size(), images.rows(), {}, {}};
    m.mat = QMatrix(images.rows(), obj.size());
    for (std::size_t k = 0; k < section.size(); ++k) {
      std::size_t g = offset[section[k].first] + section[k].second;
      m.mat.set_col(k, images.col(g));
    }
    return m;
  }

  std::optional<Mor> Quotient::induce(std::vector<Mor> const& per_block,
                                      std::size_t             cod) const {
    if (flavor == Flavor::set) {
      std::vector<int> images(num_generators());
      for (std::size_t b = 0; b < num_blocks(); ++b) {
        for (std::size_t e = 0; e < per_block[b].dom; ++e) {
          images[offset[b] + e] = per_block[b].map[e];
        }
      }
      return induce_set(images, cod);
    }
    QMatrix images(cod, num_generators());
    for (std::size_t b = 0; b < num_blocks(); ++b) {
      for (std::size_t e = 0; e < per_block[b].dom; ++e) {
        images.set_col(offset[b] + e, per_block[b].mat.col(e));
      }
    }
    return induce_vect(images);
  }

  Mor section_map(Quotient const&         q,
                  std::vector<Mor> const& per_block,
                  std::size_t             cod) {
    std::vector<Mor> pts;
    pts.reserve(q.obj.size());
    if (q.flavor == Flavor::vect) {
      Mor m{Flavor::vect, q.obj.size(), cod, {}, QMatrix(cod, q.obj.size())};
      for (std::size_t k = 0; k < q.section.size(); ++k) {
        auto [b, e] = q.section[k];
        m.mat.set_col(k, per_block[b].mat.col(e));
      }
      return m;
    }
    for (auto [b, e] : q.section) {
      pts.push_back(compose(per_block[b], point(q.flavor, per_block[b].dom, e)));
    }
    return from_points(q.flavor, cod, pts);
  }

  // Reps

  LawReport check_rep(Rep const& r) {
    LawReport   rep;
    auto const& c = *r.base;
    for (int o = 0; o < static_cast<int>(c.num_objects()); ++o) {
      if (!equal(r.act[c.identity(o)], identity_mor(r.value[o]))) {
        rep.add("identity not preserved at " + c.object_id(o));
      }
    }
    for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m) {
      Mor const& fm = r.act[m];
      if (fm.dom != r.value[c.src(m)].size()
          || fm.cod != r.value[c.tgt(m)].size()) {
        rep.add("action has wrong shape at " + c.morphism(m).id);
        continue;
      }
      for (int g : c.out(c.tgt(m))) {
        int gm = c.try_compose(g, m);
        if (gm >= 0 && !equal(compose(r.act[g], fm), r.act[gm])) {
          rep.add("composition not preserved at " + c.morphism(g).id + " o "
                  + c.morphism(m).id);
        }
      }
    }
    return rep;
  }

  LawReport check_repmap(Rep const& s, Rep const& t, RepMap const& m) {
    LawReport   rep;
    auto const& c = *s.base;
    for (int mo = 0; mo < static_cast<int>(c.num_morphisms()); ++mo) {
      int a = c.src(mo), b = c.tgt(mo);
      if (!equal(compose(m.comp[b], s.act[mo]),
                 compose(t.act[mo], m.comp[a]))) {
        rep.add("naturality square fails at " + c.morphism(mo).id);
      }
    }
    return rep;
  }

  Rep restrict_rep(Rep const& r, Functor const& f) {
    Rep out{f.src, r.flavor, {}, {}};
    for (int o : f.obj) {
      out.value.push_back(r.value[o]);
    }
    for (int m : f.mor) {
      out.act.push_back(r.act[m]);
    }
    return out;
  }

  Rep constant_rep(CatPtr const& base, Obj const& x) {
    Rep out{base, x.flavor, {}, {}};
    out.value.assign(base->num_objects(), x);
    out.act.assign(base->num_morphisms(), identity_mor(x));
    return out;
  }

  RepMap identity_repmap(Rep const& r) {
    RepMap m;
    for (auto const& v : r.value) {
      m.comp.push_back(identity_mor(v));
    }
    return m;
  }

  RepMap compose_repmap(RepMap const& g, RepMap const& f) {
    RepMap h;
    for (std::size_t i = 0; i < f.comp.size(); ++i) {
      h.comp.push_back(compose(g.comp[i], f.comp[i]));
    }
    return h;
  }

  bool is_iso(RepMap const& m) {
    return std::all_of(m.comp.begin(), m.comp.end(), [](Mor const& c) {
      return is_iso(c);
    });
  }

  Quotient colimit(Rep const& d) {
    QuotientBuilder qb(d.flavor);
    auto const&     c = *d.base;
    for (auto const& v : d.value) {
      qb.add_block(v);
    }
    for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m) {
      if (c.is_identity(m)) {
        continue;
      }
      qb.relate(c.src(m), identity_mor(d.value[c.src(m)]), c.tgt(m), d.act[m]);
    }
    return qb.build();
  }

  Quotient coequalizer(Mor const& f, Mor const& g, Obj const& y) {
    require(f.dom == g.dom && f.cod == g.cod && f.flavor == g.flavor,
            ErrorCode::mismatch,
            "coequalizer of non-parallel pair");
    QuotientBuilder qb(y.flavor);
    qb.add_block(y);
    qb.relate(0, f, 0, g);
    return qb.build();
  }

  std::size_t count_factorizations(Quotient const&         q,
                                   std::vector<Mor> const& cocone,
                                   std::size_t             test_size) {
    // enumerate all functions obj -> test set
    std::size_t n     = q.obj.size();
    std::size_t count = 0;
    std::vector<int> f(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t b = 0; b < q.num_blocks() && ok; ++b) {
        for (std::size_t e = 0; e < cocone[b].dom; ++e) {
          if (f[q.class_of(static_cast<int>(b), static_cast<int>(e))]
              != cocone[b].map[e]) {
            ok = false;
            break;
          }
        }
      }
      count += ok ? 1 : 0;
      std::size_t k = 0;
      while (k < n && f[k] + 1 == static_cast<int>(test_size)) {
        f[k++] = 0;
      }
      if (k == n) {
        break;
      }
      ++f[k];
    }
    return count;
  }

}  // namespace plethysm
