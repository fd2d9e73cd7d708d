#include "plethysm/fixture.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace plethysm {

  namespace {
    struct Token {
      std::string text;
      int         col = 0;
    };

    struct Line {
      int                no = 0;
      std::vector<Token> toks;
    };

    [[noreturn]] void parse_fail(int line, int col, std::string const& msg) {
      fail(ErrorCode::parse,
           "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> out;
      int               no = 0;
      std::size_t       pos = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++no;
        std::string_view s = text.substr(pos, end - pos);
        Line             l{no, {}};
        std::size_t      i = 0;
        while (i < s.size()) {
          if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
            ++i;
            continue;
          }
          if (s[i] == '#') {
            break;
          }
          std::size_t j = i;
          while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
            ++j;
          }
          l.toks.push_back({std::string(s.substr(i, j - i)), static_cast<int>(i) + 1});
          i = j;
        }
        if (!l.toks.empty()) {
          out.push_back(std::move(l));
        }
        if (end == text.size()) {
          break;
        }
        pos = end + 1;
      }
      return out;
    }

    bool is_section(std::string const& s) {
      static const char* names[] = {"OBJECTS", "MORPHISMS", "COMPOSE", "BIMODULE", "GAMMA",
                                    "ETA",     "REP",       "DECOR",   "WEIGHT"};
      for (auto n : names) {
        if (s == n) {
          return true;
        }
      }
      return false;
    }

    // A set rep over el(ρ) under construction (REP or DECOR).
    struct RepDraft {
      int                                      header = 0;
      std::vector<std::optional<Obj>>          value;  // per el object
      std::map<int, std::pair<int, Mor>>       act;    // el morphism -> (line, map)
      std::map<std::vector<int>, int>          prod;   // (A,B,C,x,y,u,v) -> w
    };

    struct Parser {
      explicit Parser(std::string_view text) : _lines(tokenize(text)) {}

      std::vector<Line> _lines;
      Fixture           _f;
      int               _header = 0;

      // category draft
      std::shared_ptr<FinCategory>                 _cat;
      std::vector<int>                             _identity;
      std::map<std::pair<int, int>, int>           _comp;
      std::map<std::string, int>                   _objs;
      std::map<std::string, int>                   _mors;

      // bimodule draft
      std::vector<std::optional<Obj>>              _values;
      std::map<std::pair<int, int>, Mor>           _left, _right;
      std::map<std::vector<int>, int>              _gamma;
      std::map<int, int>                           _eta;
      std::set<std::string>                        _seen;
      RepDraft                                     _rep, _dec;
      std::map<int, std::pair<int, std::vector<mpq_class>>> _weight;

      int n() const {
        return static_cast<int>(_cat->num_objects());
      }

      void need(Line const& l, std::size_t k, std::string const& what) {
        if (l.toks.size() < k) {
          int col = l.toks.back().col + static_cast<int>(l.toks.back().text.size());
          parse_fail(l.no, col, "expected " + what);
        }
      }
      void exact(Line const& l, std::size_t k, std::string const& what) {
        need(l, k, what);
        if (l.toks.size() > k) {
          parse_fail(l.no, l.toks[k].col, "unexpected token '" + l.toks[k].text + "'");
        }
      }

      int obj(Token const& t, int line) {
        auto it = _objs.find(t.text);
        if (it == _objs.end()) {
          parse_fail(line, t.col, "unknown object '" + t.text + "'");
        }
        return it->second;
      }
      int mor(Token const& t, int line) {
        if (!_cat) {
          parse_fail(line, t.col, "morphism before MORPHISMS");
        }
        auto it = _mors.find(t.text);
        if (it == _mors.end()) {
          parse_fail(line, t.col, "unknown morphism '" + t.text + "'");
        }
        return it->second;
      }
      Obj const& value_at(int a, int b, int line, int col) {
        int p = a * n() + b;
        if (!_values[p]) {
          parse_fail(line, col, "no values declared at (" + _cat->object_id(a) + ", "
                                    + _cat->object_id(b) + ")");
        }
        return *_values[p];
      }
      int elem(Obj const& o, Token const& t, int line) {
        int i = o.index_of(t.text);
        if (i < 0) {
          parse_fail(line, t.col, "unknown element '" + t.text + "'");
        }
        return i;
      }
      Mor images(Obj const& dom, Obj const& cod, Line const& l, std::size_t from) {
        exact(l, from + dom.size(), std::to_string(dom.size()) + " images");
        Mor m{Flavor::set, dom.size(), cod.size(), {}, {}};
        for (std::size_t i = 0; i < dom.size(); ++i) {
          m.map.push_back(elem(cod, l.toks[from + i], l.no));
        }
        return m;
      }

      void enter(std::string const& s, Line const& l) {
        if (!_seen.insert(s).second) {
          parse_fail(l.no, l.toks[0].col, "section " + s + " appears twice");
        }
        _header  = l.no;
        bool named = s == "BIMODULE" || s == "REP" || s == "DECOR";
        if (named) {
          if (l.toks.size() > 2) {
            parse_fail(l.no, l.toks[2].col, "unexpected token '" + l.toks[2].text + "'");
          }
          if (s == "BIMODULE" && l.toks.size() == 2) {
            _f.name = l.toks[1].text;
          }
        } else {
          exact(l, 1, "section name only");
        }
        auto order_fail = [&](std::string const& before) {
          parse_fail(l.no, l.toks[0].col, s + " needs " + before + " first");
        };
        if (s == "MORPHISMS" && _objs.empty()) {
          order_fail("OBJECTS");
        }
        if (s == "COMPOSE" && !_cat) {
          order_fail("MORPHISMS");
        }
        if (s == "BIMODULE") {
          if (!_cat) {
            order_fail("MORPHISMS");
          }
          finish_category(l.no);
          _values.assign(n() * n(), std::nullopt);
        }
        if ((s == "GAMMA" || s == "ETA" || s == "REP" || s == "DECOR") && !_f.bimodule
            && _values.empty()) {
          order_fail("BIMODULE");
        }
        if (s == "GAMMA" || s == "ETA" || s == "REP" || s == "DECOR" || s == "WEIGHT") {
          finish_bimodule();
        }
        if (s == "REP" || s == "DECOR") {
          auto& d  = s == "REP" ? _rep : _dec;
          d.header = l.no;
          d.value.assign(_f.el->obj_info.size(), std::nullopt);
        }
        if (s == "DECOR" && _gamma.empty()) {
          order_fail("GAMMA");
        }
        if (s == "WEIGHT" && _rep.header == 0) {
          order_fail("REP");
        }
      }

      void line(std::string const& s, Line const& l) {
        if (s == "OBJECTS") {
          if (_cat) {
            parse_fail(l.no, l.toks[0].col, "objects after morphisms");
          }
          for (auto const& t : l.toks) {
            if (_objs.count(t.text)) {
              parse_fail(l.no, t.col, "duplicate object '" + t.text + "'");
            }
            int k = static_cast<int>(_objs.size());
            _objs[t.text] = k;
            _obj_order.push_back(t.text);
          }
        } else if (s == "MORPHISMS") {
          if (!_cat) {
            _cat = std::make_shared<FinCategory>();
            for (auto const& o : _obj_order) {
              _cat->add_object(o);
            }
            _identity.assign(_obj_order.size(), -1);
          }
          need(l, 3, "<id> <src> <tgt>");
          if (l.toks.size() > 4 || (l.toks.size() == 4 && l.toks[3].text != "identity")) {
            parse_fail(l.no, l.toks[3].col, "expected 'identity' or end of line");
          }
          if (_mors.count(l.toks[0].text)) {
            parse_fail(l.no, l.toks[0].col, "duplicate morphism '" + l.toks[0].text + "'");
          }
          int a = obj(l.toks[1], l.no), b = obj(l.toks[2], l.no);
          int m = _cat->add_morphism(l.toks[0].text, a, b);
          _mors[l.toks[0].text] = m;
          if (l.toks.size() == 4) {
            if (a != b) {
              parse_fail(l.no, l.toks[3].col, "an identity must be an endomorphism");
            }
            if (_identity[a] >= 0) {
              parse_fail(l.no, l.toks[3].col, "second identity on '" + l.toks[1].text + "'");
            }
            _identity[a] = m;
            _cat->set_identity(a, m);
          }
        } else if (s == "COMPOSE") {
          exact(l, 3, "<g> <f> <g∘f>");
          int g = mor(l.toks[0], l.no), f = mor(l.toks[1], l.no), h = mor(l.toks[2], l.no);
          if (_cat->src(g) != _cat->tgt(f)) {
            parse_fail(l.no, l.toks[0].col,
                       "composition triple " + l.toks[0].text + " " + l.toks[1].text + " "
                           + l.toks[2].text + " is not composable");
          }
          if (_cat->src(h) != _cat->src(f) || _cat->tgt(h) != _cat->tgt(g)) {
            parse_fail(l.no, l.toks[2].col,
                       "composition triple " + l.toks[0].text + " " + l.toks[1].text + " "
                           + l.toks[2].text + " has the wrong endpoints");
          }
          if (!_comp.emplace(std::pair{g, f}, h).second) {
            parse_fail(l.no, l.toks[0].col, "composite given twice");
          }
        } else if (s == "BIMODULE") {
          bimodule_line(l);
        } else if (s == "GAMMA") {
          exact(l, 6, "<A> <B> <C> <x> <y> <z>");
          int a = obj(l.toks[0], l.no), b = obj(l.toks[1], l.no), c = obj(l.toks[2], l.no);
          int x = elem(value_at(a, b, l.no, l.toks[3].col), l.toks[3], l.no);
          int y = elem(value_at(b, c, l.no, l.toks[4].col), l.toks[4], l.no);
          int z = elem(value_at(a, c, l.no, l.toks[5].col), l.toks[5], l.no);
          if (!_gamma.emplace(std::vector<int>{a, b, c, x, y}, z).second) {
            parse_fail(l.no, l.toks[0].col, "product given twice");
          }
        } else if (s == "ETA") {
          exact(l, 2, "<A> <x>");
          int a = obj(l.toks[0], l.no);
          _eta[a] = elem(value_at(a, a, l.no, l.toks[1].col), l.toks[1], l.no);
        } else if (s == "REP" || s == "DECOR") {
          rep_line(s == "REP" ? _rep : _dec, l, s == "DECOR");
        } else if (s == "WEIGHT") {
          need(l, 3, "<A> <B> <x>");
          int a = obj(l.toks[0], l.no), b = obj(l.toks[1], l.no);
          int x  = elem(value_at(a, b, l.no, l.toks[2].col), l.toks[2], l.no);
          int xo = _f.el->object(a * n() + b, x);
          if (!_rep.value[xo]) {
            parse_fail(l.no, l.toks[2].col, "REP has no value here");
          }
          exact(l, 3 + _rep.value[xo]->size(), "one weight per element");
          std::vector<mpq_class> row;
          for (std::size_t i = 3; i < l.toks.size(); ++i) {
            try {
              mpq_class q(l.toks[i].text);
              q.canonicalize();
              row.push_back(q);
            } catch (std::exception const&) {
              parse_fail(l.no, l.toks[i].col, "bad rational '" + l.toks[i].text + "'");
            }
          }
          _weight[xo] = {l.no, std::move(row)};
        }
      }

      void bimodule_line(Line const& l) {
        auto const& k = l.toks[0].text;
        if (k == "V") {
          need(l, 3, "V <A> <B> <elements...>");
          int a = obj(l.toks[1], l.no), b = obj(l.toks[2], l.no);
          int p = a * n() + b;
          if (_values[p]) {
            parse_fail(l.no, l.toks[0].col, "values declared twice");
          }
          Obj v{Flavor::set, {}};
          for (std::size_t i = 3; i < l.toks.size(); ++i) {
            if (v.index_of(l.toks[i].text) >= 0) {
              parse_fail(l.no, l.toks[i].col, "duplicate element '" + l.toks[i].text + "'");
            }
            v.names.push_back(l.toks[i].text);
          }
          _values[p] = std::move(v);
        } else if (k == "L") {
          need(l, 3, "L <s> <B>");
          int s = mor(l.toks[1], l.no), b = obj(l.toks[2], l.no);
          ensure_values(s, b, true, l);
          auto m = images(*_values[_cat->tgt(s) * n() + b], *_values[_cat->src(s) * n() + b],
                          l, 3);
          if (!_left.emplace(std::pair{s, b}, std::move(m)).second) {
            parse_fail(l.no, l.toks[0].col, "left action given twice");
          }
        } else if (k == "R") {
          need(l, 3, "R <A> <t>");
          int a = obj(l.toks[1], l.no), t = mor(l.toks[2], l.no);
          ensure_values(t, a, false, l);
          auto m = images(*_values[a * n() + _cat->src(t)], *_values[a * n() + _cat->tgt(t)],
                          l, 3);
          if (!_right.emplace(std::pair{a, t}, std::move(m)).second) {
            parse_fail(l.no, l.toks[0].col, "right action given twice");
          }
        } else {
          parse_fail(l.no, l.toks[0].col, "expected V, L or R");
        }
      }

      void ensure_values(int m, int o, bool left, Line const& l) {
        for (int end : {_cat->src(m), _cat->tgt(m)}) {
          int p = left ? end * n() + o : o * n() + end;
          if (!_values[p]) {
            _values[p] = Obj{Flavor::set, {}};
          }
        }
        (void) l;
      }

      void rep_line(RepDraft& d, Line const& l, bool decor) {
        auto const& k = l.toks[0].text;
        if (k == "V") {
          need(l, 4, "V <A> <B> <x> <elements...>");
          int a = obj(l.toks[1], l.no), b = obj(l.toks[2], l.no);
          int x  = elem(_f.bimodule->value(a, b), l.toks[3], l.no);
          int xo = _f.el->object(a * n() + b, x);
          if (d.value[xo]) {
            parse_fail(l.no, l.toks[0].col, "values declared twice");
          }
          Obj v{Flavor::set, {}};
          for (std::size_t i = 4; i < l.toks.size(); ++i) {
            if (v.index_of(l.toks[i].text) >= 0) {
              parse_fail(l.no, l.toks[i].col, "duplicate element '" + l.toks[i].text + "'");
            }
            v.names.push_back(l.toks[i].text);
          }
          d.value[xo] = std::move(v);
        } else if (k == "M") {
          need(l, 4, "M <s> <t> <x>");
          int s = mor(l.toks[1], l.no), t = mor(l.toks[2], l.no);
          int a = _cat->tgt(s), b = _cat->src(t);
          int x  = elem(_f.bimodule->value(a, b), l.toks[3], l.no);
          int g  = _f.bimodule->act_index(s, t);
          int lm = _f.el->lift(g, x);
          int so = _f.el->cat->src(lm), to = _f.el->cat->tgt(lm);
          for (int o : {so, to}) {
            if (!d.value[o]) {
              d.value[o] = Obj{Flavor::set, {}};
            }
          }
          auto m = images(*d.value[so], *d.value[to], l, 4);
          if (!d.act.emplace(lm, std::pair{l.no, std::move(m)}).second) {
            parse_fail(l.no, l.toks[0].col, "action given twice");
          }
        } else if (k == "P" && decor) {
          exact(l, 9, "P <A> <B> <C> <x> <y> <u> <v> <w>");
          int a = obj(l.toks[1], l.no), b = obj(l.toks[2], l.no), c = obj(l.toks[3], l.no);
          auto const& r = *_f.bimodule;
          int x  = elem(r.value(a, b), l.toks[4], l.no);
          int y  = elem(r.value(b, c), l.toks[5], l.no);
          auto z = _gamma.find({a, b, c, x, y});
          if (z == _gamma.end()) {
            parse_fail(l.no, l.toks[4].col, "GAMMA has no product for this pair");
          }
          auto dv = [&](int pa, int pb, int e, Token const& t) -> Obj const& {
            auto const& o = d.value[_f.el->object(pa * n() + pb, e)];
            if (!o) {
              parse_fail(l.no, t.col, "DECOR has no value here");
            }
            return *o;
          };
          int u = elem(dv(a, b, x, l.toks[6]), l.toks[6], l.no);
          int v = elem(dv(b, c, y, l.toks[7]), l.toks[7], l.no);
          int w = elem(dv(a, c, z->second, l.toks[8]), l.toks[8], l.no);
          if (!d.prod.emplace(std::vector<int>{a, b, c, x, y, u, v}, w).second) {
            parse_fail(l.no, l.toks[0].col, "product given twice");
          }
        } else {
          parse_fail(l.no, l.toks[0].col, decor ? "expected V, M or P" : "expected V or M");
        }
      }

      void finish_category(int line) {
        if (_f.action) {
          return;
        }
        for (int o = 0; o < static_cast<int>(_identity.size()); ++o) {
          if (_identity[o] < 0) {
            std::string id = "1_" + _obj_order[o];
            if (_mors.count(id)) {
              parse_fail(line, 1, "cannot name the identity of " + _obj_order[o]);
            }
            int m = _cat->add_morphism(id, o, o);
            _mors[id] = m;
            _identity[o] = m;
            _cat->set_identity(o, m);
          }
        }
        auto const& c = *_cat;
        auto is_id = [&](int m) { return _identity[c.src(m)] == m; };
        for (int f = 0; f < static_cast<int>(c.num_morphisms()); ++f) {
          for (int g = 0; g < static_cast<int>(c.num_morphisms()); ++g) {
            if (c.src(g) == c.tgt(f) && !is_id(f) && !is_id(g) && !_comp.count({g, f})) {
              parse_fail(line, 1, "COMPOSE has no entry for " + c.morphism(g).id + " "
                                      + c.morphism(f).id);
            }
          }
        }
        _cat->finalize([&](int g, int f) {
          if (c.src(g) != c.tgt(f)) {
            return -1;
          }
          if (is_id(f)) {
            return g;
          }
          if (is_id(g)) {
            return f;
          }
          return _comp.at({g, f});
        });
        auto v = validate_category(c);
        if (!v.ok()) {
          parse_fail(line, 1, "not a category: " + v.violations.front());
        }
        _f.action = _cat;
      }

      void finish_bimodule() {
        if (_f.bimodule || _values.empty()) {
          return;
        }
        auto const& c = *_cat;
        for (auto& v : _values) {
          if (!v) {
            v = Obj{Flavor::set, {}};
          }
        }
        auto side = [&](std::map<std::pair<int, int>, Mor> const& tbl, int m, int o, bool left) {
          int p = left ? c.tgt(m) * n() + o : o * n() + c.src(m);
          if (c.is_identity(m)) {
            return identity_mor(Flavor::set, _values[p]->size());
          }
          auto it = tbl.find(left ? std::pair{m, o} : std::pair{o, m});
          if (it == tbl.end()) {
            if (_values[p]->size() == 0) {
              int q = left ? c.src(m) * n() + o : o * n() + c.tgt(m);
              return Mor{Flavor::set, 0, _values[q]->size(), {}, {}};
            }
            parse_fail(_header, 1, std::string(left ? "no left" : "no right") + " action for "
                                       + c.morphism(m).id + " at " + c.object_id(o));
          }
          return it->second;
        };
        _f.bimodule = make_bimodule_lr(
            _cat, Flavor::set,
            [&](int a, int b) { return *_values[a * n() + b]; },
            [&](int s, int b) { return side(_left, s, b, true); },
            [&](int a, int t) { return side(_right, t, a, false); },
            _f.name);
        auto chk = check_bimodule(*_f.bimodule);
        if (!chk.ok()) {
          parse_fail(_header, 1, "not a bimodule: " + chk.violations.front());
        }
        _f.el = element_category(*_f.bimodule);
      }

      ElementRep finish_rep(RepDraft& d, std::string const& what) {
        auto const& el = *_f.el;
        ElementRep  out{_f.el, Rep{el.cat, Flavor::set, {}, {}}};
        for (auto& v : d.value) {
          out.rep.value.push_back(v ? *v : Obj{Flavor::set, {}});
        }
        for (int m = 0; m < static_cast<int>(el.cat->num_morphisms()); ++m) {
          auto const& dom = out.rep.value[el.cat->src(m)];
          auto const& cod = out.rep.value[el.cat->tgt(m)];
          if (el.cat->is_identity(m)) {
            out.rep.act.push_back(identity_mor(Flavor::set, dom.size()));
            continue;
          }
          auto it = d.act.find(m);
          if (it == d.act.end()) {
            if (dom.size() == 0) {
              out.rep.act.push_back(Mor{Flavor::set, 0, cod.size(), {}, {}});
              continue;
            }
            auto [g, x] = el.mor_info[m];
            parse_fail(d.header, 1, what + " has no action for "
                                        + _f.bimodule->pairs->morphism(g).id + " at "
                                        + _f.bimodule->rep.value[_f.bimodule->pairs->src(g)]
                                              .names[x]);
          }
          out.rep.act.push_back(it->second.second);
        }
        auto chk = check_element_rep(out);
        if (!chk.ok()) {
          parse_fail(d.header, 1, what + " is not a functor: " + chk.violations.front());
        }
        return out;
      }

      void finish() {
        if (_cat && !_f.action) {
          finish_category(_lines.empty() ? 1 : _lines.back().no);
        }
        finish_bimodule();
        if (!_gamma.empty()) {
          auto const& r = *_f.bimodule;
          std::optional<BimoduleMap> eta;
          if (!_eta.empty()) {
            std::vector<Mor> pts;
            for (int a = 0; a < n(); ++a) {
              auto it = _eta.find(a);
              if (it == _eta.end()) {
                parse_fail(_lines.back().no, 1, "ETA has no unit at " + _cat->object_id(a));
              }
              pts.push_back(point(Flavor::set, r.value(a, a).size(), it->second));
            }
            eta = unit_from_identities(r, pts);
          }
          _f.monoid = make_monoid(
              r,
              [&](int a, int b, int c) {
                std::size_t nx = r.value(a, b).size(), ny = r.value(b, c).size();
                Mor         g{Flavor::set, nx * ny, r.value(a, c).size(), {}, {}};
                for (std::size_t x = 0; x < nx; ++x) {
                  for (std::size_t y = 0; y < ny; ++y) {
                    auto it = _gamma.find({a, b, c, static_cast<int>(x), static_cast<int>(y)});
                    if (it == _gamma.end()) {
                      parse_fail(_lines.back().no, 1,
                                 "GAMMA has no product for " + r.value(a, b).names[x] + " "
                                     + r.value(b, c).names[y] + " at (" + _cat->object_id(a)
                                     + ", " + _cat->object_id(b) + ", " + _cat->object_id(c)
                                     + ")");
                    }
                    g.map.push_back(it->second);
                  }
                }
                return g;
              },
              eta);
        }
        if (_rep.header) {
          _f.rep = finish_rep(_rep, "REP");
        }
        if (_dec.header) {
          auto d    = finish_rep(_dec, "DECOR");
          auto prod = [&](int a, int b, int c, int x, int y, int u, int v) {
            auto it = _dec.prod.find({a, b, c, x, y, u, v});
            if (it == _dec.prod.end()) {
              parse_fail(_dec.header, 1, "DECOR has no product for generator ("
                                             + std::to_string(u) + ", " + std::to_string(v)
                                             + ") over " + _f.bimodule->value(a, b).names[x]
                                             + " " + _f.bimodule->value(b, c).names[y]);
            }
            return it->second;
          };
          _f.decor = decoration_monoid(d, *_f.monoid, prod);
        }
        if (_seen.count("WEIGHT")) {
          std::vector<std::vector<mpq_class>> rows;
          for (std::size_t xo = 0; xo < _f.rep->rep.value.size(); ++xo) {
            auto it = _weight.find(static_cast<int>(xo));
            if (it == _weight.end()) {
              if (_f.rep->rep.value[xo].size() != 0) {
                parse_fail(_lines.back().no, 1, "WEIGHT has no row at "
                                                    + _f.el->cat->object_id(static_cast<int>(xo)));
              }
              rows.emplace_back();
            } else {
              rows.push_back(it->second.second);
            }
          }
          _f.weight = std::move(rows);
        }
      }

      std::vector<std::string> _obj_order;

      Fixture finish_and_take() {
        finish();
        return std::move(_f);
      }
    };

    void check_token(std::string const& s) {
      require(!s.empty() && s.find_first_of(" \t\r\n#") == std::string::npos,
              ErrorCode::invalid_argument,
              "name '" + s + "' cannot be written as a fixture token");
    }
  }  // namespace

  Fixture parse_fixture(std::string_view text) {
    Parser p(text);
    std::string section;
    for (auto const& l : p._lines) {
      auto const& t0 = l.toks[0];
      if (is_section(t0.text)) {
        p.enter(t0.text, l);
        section = t0.text;
        continue;
      }
      if (section.empty()) {
        parse_fail(l.no, t0.col, "content before the first section");
      }
      p.line(section, l);
    }
    return p.finish_and_take();
  }

  Fixture load_fixture(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::invalid_argument, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
  }

  std::string emit_fixture(Fixture const& f) {
    require(static_cast<bool>(f.action), ErrorCode::invalid_argument, "fixture has no category");
    auto const&        c = *f.action;
    std::ostringstream o;
    o << "OBJECTS\n";
    for (int a = 0; a < static_cast<int>(c.num_objects()); ++a) {
      check_token(c.object_id(a));
      o << (a ? " " : "") << c.object_id(a);
    }
    o << "\nMORPHISMS\n";
    for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m) {
      check_token(c.morphism(m).id);
      o << c.morphism(m).id << ' ' << c.object_id(c.src(m)) << ' ' << c.object_id(c.tgt(m))
        << (c.is_identity(m) ? " identity" : "") << '\n';
    }
    o << "COMPOSE\n";
    for (int f0 = 0; f0 < static_cast<int>(c.num_morphisms()); ++f0) {
      if (c.is_identity(f0)) {
        continue;
      }
      for (int g : c.out(c.tgt(f0))) {
        if (!c.is_identity(g)) {
          o << c.morphism(g).id << ' ' << c.morphism(f0).id << ' '
            << c.morphism(c.compose(g, f0)).id << '\n';
        }
      }
    }
    if (!f.bimodule) {
      return o.str();
    }
    auto const& r = *f.bimodule;
    int         n = r.n();
    check_token(f.name);
    o << "BIMODULE " << f.name << '\n';
    for (int p = 0; p < n * n; ++p) {
      auto const& v = r.rep.value[p];
      if (v.size() == 0) {
        continue;
      }
      o << "V " << c.object_id(p / n) << ' ' << c.object_id(p % n);
      for (auto const& s : v.names) {
        check_token(s);
        o << ' ' << s;
      }
      o << '\n';
    }
    auto write_map = [&](Mor const& m, Obj const& cod) {
      for (int i : m.map) {
        o << ' ' << cod.names[i];
      }
      o << '\n';
    };
    for (int s = 0; s < static_cast<int>(c.num_morphisms()); ++s) {
      if (c.is_identity(s)) {
        continue;
      }
      for (int b = 0; b < n; ++b) {
        if (r.value(c.tgt(s), b).size() == 0) {
          continue;
        }
        o << "L " << c.morphism(s).id << ' ' << c.object_id(b);
        write_map(r.left(s, b), r.value(c.src(s), b));
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int t = 0; t < static_cast<int>(c.num_morphisms()); ++t) {
        if (c.is_identity(t) || r.value(a, c.src(t)).size() == 0) {
          continue;
        }
        o << "R " << c.object_id(a) << ' ' << c.morphism(t).id;
        write_map(r.right(a, t), r.value(a, c.tgt(t)));
      }
    }
    if (f.monoid) {
      auto const& m = *f.monoid;
      o << "GAMMA\n";
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int cc = 0; cc < n; ++cc) {
            std::size_t ny = r.value(b, cc).size();
            auto const& g  = m.g(a, b, cc);
            for (std::size_t k = 0; k < g.map.size(); ++k) {
              o << c.object_id(a) << ' ' << c.object_id(b) << ' ' << c.object_id(cc) << ' '
                << r.value(a, b).names[k / ny] << ' ' << r.value(b, cc).names[k % ny] << ' '
                << r.value(a, cc).names[g.map[k]] << '\n';
            }
          }
        }
      }
      if (m.eta) {
        o << "ETA\n";
        auto const& hom = *r.action;
        for (int a = 0; a < n; ++a) {
          auto const& ids = hom.hom(a, a);
          int         k   = 0;
          for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] == hom.identity(a)) {
              k = static_cast<int>(i);
            }
          }
          o << c.object_id(a) << ' ' << r.value(a, a).names[m.eta->comp[r.pair(a, a)].map[k]]
            << '\n';
        }
      }
    }
    auto const& el = *f.el;
    auto write_rep = [&](ElementRep const& d) {
      for (std::size_t xo = 0; xo < d.rep.value.size(); ++xo) {
        auto const& v = d.rep.value[xo];
        if (v.size() == 0) {
          continue;
        }
        auto [p, x] = el.obj_info[xo];
        o << "V " << c.object_id(p / n) << ' ' << c.object_id(p % n) << ' '
          << r.rep.value[p].names[x];
        for (auto const& s : v.names) {
          check_token(s);
          o << ' ' << s;
        }
        o << '\n';
      }
      int nm = static_cast<int>(c.num_morphisms());
      for (int lm = 0; lm < static_cast<int>(el.cat->num_morphisms()); ++lm) {
        if (el.cat->is_identity(lm) || d.rep.value[el.cat->src(lm)].size() == 0) {
          continue;
        }
        auto [g, x] = el.mor_info[lm];
        int s = g / nm, t = g % nm;
        o << "M " << c.morphism(s).id << ' ' << c.morphism(t).id << ' '
          << r.value(c.tgt(s), c.src(t)).names[x];
        write_map(d.rep.act[lm], d.rep.value[el.cat->tgt(lm)]);
      }
    };
    if (f.rep) {
      o << "REP\n";
      write_rep(*f.rep);
    }
    if (f.decor) {
      auto const& dm = *f.decor;
      auto const& m  = *f.monoid;
      o << "DECOR\n";
      write_rep(dm.d);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int cc = 0; cc < n; ++cc) {
            int ny = static_cast<int>(r.value(b, cc).size());
            int nx = static_cast<int>(r.value(a, b).size());
            for (int x = 0; x < nx; ++x) {
              for (int y = 0; y < ny; ++y) {
                int z   = m.g(a, b, cc).map[x * ny + y];
                auto const& dx = dm.d.rep.value[el.object(r.pair(a, b), x)];
                auto const& dy = dm.d.rep.value[el.object(r.pair(b, cc), y)];
                auto const& dz = dm.d.rep.value[el.object(r.pair(a, cc), z)];
                for (int u = 0; u < static_cast<int>(dx.size()); ++u) {
                  for (int v = 0; v < static_cast<int>(dy.size()); ++v) {
                    o << "P " << c.object_id(a) << ' ' << c.object_id(b) << ' '
                      << c.object_id(cc) << ' ' << r.value(a, b).names[x] << ' '
                      << r.value(b, cc).names[y] << ' ' << dx.names[u] << ' ' << dy.names[v]
                      << ' ' << dz.names[decoration_product(dm, a, b, cc, x, y, u, v)] << '\n';
                  }
                }
              }
            }
          }
        }
      }
    }
    if (f.weight) {
      o << "WEIGHT\n";
      for (std::size_t xo = 0; xo < f.weight->size(); ++xo) {
        auto const& row = (*f.weight)[xo];
        if (row.empty()) {
          continue;
        }
        auto [p, x] = el.obj_info[xo];
        o << c.object_id(p / n) << ' ' << c.object_id(p % n) << ' ' << r.rep.value[p].names[x];
        for (auto const& q : row) {
          o << ' ' << q.get_str();
        }
        o << '\n';
      }
    }
    return o.str();
  }

  ElementRep linearize(ElementRep const& d) {
    ElementRep out{d.el, Rep{d.rep.base, Flavor::vect, {}, {}}};
    for (auto const& v : d.rep.value) {
      out.rep.value.push_back(linearize(v));
    }
    for (auto const& m : d.rep.act) {
      out.rep.act.push_back(linearize(m));
    }
    return out;
  }

  RepMap weight_map(Fixture const& f, ElementRep const& vect_rep) {
    require(f.weight.has_value(), ErrorCode::invalid_argument, "fixture has no WEIGHT");
    RepMap out;
    for (std::size_t xo = 0; xo < f.weight->size(); ++xo) {
      auto const& row = (*f.weight)[xo];
      std::size_t dom = vect_rep.rep.value[xo].size();
      Mor         m{Flavor::vect, dom, 1, {}, QMatrix(1, dom)};
      for (std::size_t j = 0; j < row.size(); ++j) {
        m.mat.set(0, j, row[j]);
      }
      out.comp.push_back(std::move(m));
    }
    return out;
  }

}  // namespace plethysm
