#pragma once

// Spans of finite sets.  Composition takes the canonical pullback apex
// of ordered pairs, so associativity and units hold only up to the
// structural isomorphisms; this is the weak model everything else is
// exercised against.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblift/elt.hpp"
#include "dblift/model.hpp"
#include "dblift/square.hpp"

namespace dblift {

struct SpanCell {
  FinSet src, tgt;
  FinSet apex;
  // leg_s[i] indexes src, leg_t[i] indexes tgt, for apex[i]
  std::vector<int> leg_s, leg_t;

  friend bool operator==(const SpanCell& a, const SpanCell& b) {
    return a.src == b.src && a.tgt == b.tgt && a.apex == b.apex &&
           a.leg_s == b.leg_s && a.leg_t == b.leg_t;
  }
  friend bool operator<(const SpanCell& a, const SpanCell& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.tgt != b.tgt) return a.tgt < b.tgt;
    if (a.apex != b.apex) return a.apex < b.apex;
    if (a.leg_s != b.leg_s) return a.leg_s < b.leg_s;
    return a.leg_t < b.leg_t;
  }
};

class SpanModel {
 public:
  using Obj = FinSet;
  using VMor = FnTable;
  using HCell = SpanCell;
  // wit[i] is the bottom apex index the top apex element apex[i] maps to
  using Sq = BasicSquare<Obj, VMor, HCell, std::vector<int>>;

  explicit SpanModel(int max_atoms = 2, int max_apex = 3)
      : max_atoms_(max_atoms), max_apex_(max_apex) {}

  Obj vsrc(const VMor& f) const { return f.src; }
  Obj vtgt(const VMor& f) const { return f.tgt; }
  Obj hsrc(const HCell& h) const { return h.src; }
  Obj htgt(const HCell& h) const { return h.tgt; }

  VMor vid(const Obj& a) const { return FnTable::identity(a); }
  VMor vcomp(const VMor& f, const VMor& g) const { return fn_compose(f, g); }

  HCell hunit(const Obj& a) const {
    HCell h{a, a, a, {}, {}};
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      h.leg_s.push_back(i);
      h.leg_t.push_back(i);
    }
    return h;
  }

  // Pullback apex: ordered pairs of apex elements whose middle legs
  // agree, emitted in sorted order by the outer-then-inner walk.
  HCell hcomp(const HCell& m, const HCell& n) const {
    HCell h{m.src, n.tgt, {}, {}, {}};
    for (std::size_t i = 0; i < m.apex.size(); ++i)
      for (std::size_t j = 0; j < n.apex.size(); ++j)
        if (m.leg_t[i] == n.leg_s[j]) {
          h.apex.push_back(Elt::pair(m.apex[i], n.apex[j]));
          h.leg_s.push_back(m.leg_s[i]);
          h.leg_t.push_back(n.leg_t[j]);
        }
    return h;
  }

  bool square_valid(const Sq& s) const {
    if (s.wit.size() != s.top.apex.size()) return false;
    for (std::size_t i = 0; i < s.top.apex.size(); ++i) {
      int j = s.wit[i];
      if (j < 0 || j >= static_cast<int>(s.bottom.apex.size())) return false;
      if (s.bottom.leg_s[static_cast<std::size_t>(j)] !=
          s.left.map[static_cast<std::size_t>(s.top.leg_s[i])])
        return false;
      if (s.bottom.leg_t[static_cast<std::size_t>(j)] !=
          s.right.map[static_cast<std::size_t>(s.top.leg_t[i])])
        return false;
    }
    return true;
  }

  Sq sq_id(const HCell& h) const {
    Sq s{h, vid(h.src), vid(h.tgt), h, {}};
    s.wit.resize(h.apex.size());
    for (std::size_t i = 0; i < h.apex.size(); ++i)
      s.wit[i] = static_cast<int>(i);
    return s;
  }

  Sq sq_unit(const VMor& f) const {
    return Sq{hunit(f.src), f, f, hunit(f.tgt), f.map};
  }

  Sq sq_vcomp(const Sq& a, const Sq& b) const {
    Sq s{a.top, vcomp(a.left, b.left), vcomp(a.right, b.right), b.bottom, {}};
    s.wit.resize(a.wit.size());
    for (std::size_t i = 0; i < a.wit.size(); ++i)
      s.wit[i] = b.wit[static_cast<std::size_t>(a.wit[i])];
    return s;
  }

  Sq sq_hcomp(const Sq& a, const Sq& b) const {
    HCell top = hcomp(a.top, b.top);
    HCell bottom = hcomp(a.bottom, b.bottom);
    Sq s{top, a.left, b.right, bottom, {}};
    s.wit.reserve(top.apex.size());
    for (const Elt& e : top.apex) {
      int i = set_index(a.top.apex, e.first());
      int j = set_index(b.top.apex, e.second());
      Elt img = Elt::pair(a.bottom.apex[static_cast<std::size_t>(a.wit[i])],
                          b.bottom.apex[static_cast<std::size_t>(b.wit[j])]);
      s.wit.push_back(set_index(bottom.apex, img));
    }
    return s;
  }

  // apex rebijection ((x,y),z) -> (x,(y,z))
  Sq sq_assoc(const HCell& m, const HCell& n, const HCell& p) const {
    HCell top = hcomp(hcomp(m, n), p);
    HCell bottom = hcomp(m, hcomp(n, p));
    Sq s{top, vid(m.src), vid(p.tgt), bottom, {}};
    s.wit.reserve(top.apex.size());
    for (const Elt& e : top.apex) {
      Elt img = Elt::pair(e.first().first(),
                          Elt::pair(e.first().second(), e.second()));
      s.wit.push_back(set_index(bottom.apex, img));
    }
    return s;
  }

  // (a,x) -> x; the unit component is forced by the legs
  Sq sq_unit_l(const HCell& m) const {
    HCell top = hcomp(hunit(m.src), m);
    Sq s{top, vid(m.src), vid(m.tgt), m, {}};
    s.wit.reserve(top.apex.size());
    for (const Elt& e : top.apex)
      s.wit.push_back(set_index(m.apex, e.second()));
    return s;
  }

  Sq sq_unit_r(const HCell& m) const {
    HCell top = hcomp(m, hunit(m.tgt));
    Sq s{top, vid(m.src), vid(m.tgt), m, {}};
    s.wit.reserve(top.apex.size());
    for (const Elt& e : top.apex)
      s.wit.push_back(set_index(m.apex, e.first()));
    return s;
  }

  std::optional<Sq> sq_invert(const Sq& s) const {
    auto li = fn_inverse(s.left);
    auto ri = fn_inverse(s.right);
    if (!li || !ri) return std::nullopt;
    if (s.wit.size() != s.bottom.apex.size()) return std::nullopt;
    std::vector<int> winv(s.wit.size(), -1);
    for (std::size_t i = 0; i < s.wit.size(); ++i) {
      int j = s.wit[i];
      if (winv[static_cast<std::size_t>(j)] != -1) return std::nullopt;
      winv[static_cast<std::size_t>(j)] = static_cast<int>(i);
    }
    Sq inv{s.bottom, *li, *ri, s.top, std::move(winv)};
    if (!square_valid(inv)) return std::nullopt;
    return inv;
  }

  std::optional<VMor> v_invert(const VMor& f) const { return fn_inverse(f); }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    FinSet full = atom_range(max_atoms_);
    for (unsigned mask = 0; mask < (1u << max_atoms_); ++mask) {
      FinSet s;
      for (int i = 0; i < max_atoms_; ++i)
        if (mask & (1u << i)) s.push_back(full[i]);
      out.push_back(std::move(s));
    }
    return out;
  }

  std::vector<VMor> vmors(const Obj& a, const Obj& b) const {
    return all_fns(a, b);
  }

  // Seed spans use initial-segment apexes of size up to max_apex_; the
  // family is not closed under hcomp (pullbacks grow pair apexes) and
  // does not need to be.
  std::vector<HCell> hcells(const Obj& a, const Obj& b) const {
    std::vector<HCell> out;
    for (int k = 0; k <= max_apex_; ++k) {
      FinSet apex = atom_range(k);
      if (k > 0 && (a.empty() || b.empty())) continue;
      std::vector<int> ls(static_cast<std::size_t>(k), 0);
      std::vector<int> lt(static_cast<std::size_t>(k), 0);
      for (;;) {
        out.push_back(HCell{a, b, apex, ls, lt});
        // advance the (leg_s, leg_t) odometer
        std::size_t pos = 0;
        bool carried = true;
        while (pos < static_cast<std::size_t>(2 * k)) {
          std::vector<int>& v = pos < static_cast<std::size_t>(k) ? ls : lt;
          std::size_t idx = pos < static_cast<std::size_t>(k)
                                ? pos
                                : pos - static_cast<std::size_t>(k);
          int lim = pos < static_cast<std::size_t>(k)
                        ? static_cast<int>(a.size())
                        : static_cast<int>(b.size());
          if (++v[idx] < lim) {
            carried = false;
            break;
          }
          v[idx] = 0;
          ++pos;
        }
        if (carried) break;
      }
    }
    return out;
  }

  std::vector<Sq> squares(const HCell& top, const VMor& l, const VMor& r,
                          const HCell& bottom) const {
    std::vector<Sq> out;
    if (top.apex.empty()) {
      Sq s{top, l, r, bottom, {}};
      if (square_valid(s)) out.push_back(std::move(s));
      return out;
    }
    if (bottom.apex.empty()) return out;
    std::vector<int> odo(top.apex.size(), 0);
    for (;;) {
      Sq s{top, l, r, bottom, odo};
      if (square_valid(s)) out.push_back(std::move(s));
      std::size_t i = 0;
      while (i < odo.size()) {
        if (++odo[i] < static_cast<int>(bottom.apex.size())) break;
        odo[i] = 0;
        ++i;
      }
      if (i == odo.size()) break;
    }
    return out;
  }

  std::string name() const {
    return "Span(atoms<=" + std::to_string(max_atoms_) + ",apex<=" +
           std::to_string(max_apex_) + ")";
  }
  std::string obj_str(const Obj& a) const { return set_str(a); }
  std::string vmor_str(const VMor& f) const { return fn_str(f); }
  std::string hcell_str(const HCell& h) const {
    std::string s = "span" + set_str(h.src) + "<-" + set_str(h.apex) + "->" +
                    set_str(h.tgt) + "[";
    for (std::size_t i = 0; i < h.apex.size(); ++i) {
      if (i) s += ",";
      s += h.apex[i].str() + ":" + h.src[static_cast<std::size_t>(h.leg_s[i])].str() +
           "/" + h.tgt[static_cast<std::size_t>(h.leg_t[i])].str();
    }
    return s + "]";
  }
  std::string sq_str(const Sq& s) const {
    std::string w = "(";
    for (std::size_t i = 0; i < s.wit.size(); ++i) {
      if (i) w += ",";
      w += std::to_string(s.wit[i]);
    }
    w += ")";
    return "[top " + hcell_str(s.top) + " | " + vmor_str(s.left) + " , " +
           vmor_str(s.right) + " | bottom " + hcell_str(s.bottom) + " | wit " +
           w + "]";
  }

  int max_atoms() const { return max_atoms_; }
  int max_apex() const { return max_apex_; }

 private:
  int max_atoms_;
  int max_apex_;
};

}  // namespace dblift
