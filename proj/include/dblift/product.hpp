#pragma once

// Product of two models, with componentwise cells and compositions, and
// the one-cell terminal model.  The product square keeps its component
// squares as the witness; the frame fields are assembled pairs.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblift/model.hpp"
#include "dblift/square.hpp"

namespace dblift {

template <DoubleModel M1, DoubleModel M2>
class ProdModel {
 public:
  using Obj = std::pair<typename M1::Obj, typename M2::Obj>;
  using VMor = std::pair<typename M1::VMor, typename M2::VMor>;
  using HCell = std::pair<typename M1::HCell, typename M2::HCell>;
  using Sq = BasicSquare<Obj, VMor, HCell,
                         std::pair<typename M1::Sq, typename M2::Sq>>;

  ProdModel(const M1& a, const M2& b) : a_(a), b_(b) {}

  const M1& first() const { return a_; }
  const M2& second() const { return b_; }

  Obj vsrc(const VMor& f) const {
    return {a_.vsrc(f.first), b_.vsrc(f.second)};
  }
  Obj vtgt(const VMor& f) const {
    return {a_.vtgt(f.first), b_.vtgt(f.second)};
  }
  Obj hsrc(const HCell& h) const {
    return {a_.hsrc(h.first), b_.hsrc(h.second)};
  }
  Obj htgt(const HCell& h) const {
    return {a_.htgt(h.first), b_.htgt(h.second)};
  }

  VMor vid(const Obj& x) const {
    return {a_.vid(x.first), b_.vid(x.second)};
  }
  VMor vcomp(const VMor& f, const VMor& g) const {
    return {a_.vcomp(f.first, g.first), b_.vcomp(f.second, g.second)};
  }

  HCell hunit(const Obj& x) const {
    return {a_.hunit(x.first), b_.hunit(x.second)};
  }
  HCell hcomp(const HCell& m, const HCell& n) const {
    return {a_.hcomp(m.first, n.first), b_.hcomp(m.second, n.second)};
  }

  Sq pair_sq(const typename M1::Sq& s, const typename M2::Sq& t) const {
    return Sq{{s.top, t.top},
              {s.left, t.left},
              {s.right, t.right},
              {s.bottom, t.bottom},
              {s, t}};
  }

  Sq sq_id(const HCell& h) const {
    return pair_sq(a_.sq_id(h.first), b_.sq_id(h.second));
  }
  Sq sq_unit(const VMor& f) const {
    return pair_sq(a_.sq_unit(f.first), b_.sq_unit(f.second));
  }
  Sq sq_vcomp(const Sq& s, const Sq& t) const {
    return pair_sq(a_.sq_vcomp(s.wit.first, t.wit.first),
                   b_.sq_vcomp(s.wit.second, t.wit.second));
  }
  Sq sq_hcomp(const Sq& s, const Sq& t) const {
    return pair_sq(a_.sq_hcomp(s.wit.first, t.wit.first),
                   b_.sq_hcomp(s.wit.second, t.wit.second));
  }
  Sq sq_assoc(const HCell& m, const HCell& n, const HCell& p) const {
    return pair_sq(a_.sq_assoc(m.first, n.first, p.first),
                   b_.sq_assoc(m.second, n.second, p.second));
  }
  Sq sq_unit_l(const HCell& m) const {
    return pair_sq(a_.sq_unit_l(m.first), b_.sq_unit_l(m.second));
  }
  Sq sq_unit_r(const HCell& m) const {
    return pair_sq(a_.sq_unit_r(m.first), b_.sq_unit_r(m.second));
  }

  std::optional<Sq> sq_invert(const Sq& s) const {
    auto i1 = a_.sq_invert(s.wit.first);
    auto i2 = b_.sq_invert(s.wit.second);
    if (!i1 || !i2) return std::nullopt;
    return pair_sq(*i1, *i2);
  }
  std::optional<VMor> v_invert(const VMor& f) const {
    auto i1 = a_.v_invert(f.first);
    auto i2 = b_.v_invert(f.second);
    if (!i1 || !i2) return std::nullopt;
    return VMor{*i1, *i2};
  }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    for (const auto& x : a_.objects())
      for (const auto& y : b_.objects()) out.push_back({x, y});
    return out;
  }
  std::vector<VMor> vmors(const Obj& x, const Obj& y) const {
    std::vector<VMor> out;
    for (const auto& f : a_.vmors(x.first, y.first))
      for (const auto& g : b_.vmors(x.second, y.second))
        out.push_back({f, g});
    return out;
  }
  std::vector<HCell> hcells(const Obj& x, const Obj& y) const {
    std::vector<HCell> out;
    for (const auto& m : a_.hcells(x.first, y.first))
      for (const auto& n : b_.hcells(x.second, y.second))
        out.push_back({m, n});
    return out;
  }
  std::vector<Sq> squares(const HCell& top, const VMor& l, const VMor& r,
                          const HCell& bottom) const {
    std::vector<Sq> out;
    for (const auto& s :
         a_.squares(top.first, l.first, r.first, bottom.first))
      for (const auto& t :
           b_.squares(top.second, l.second, r.second, bottom.second))
        out.push_back(pair_sq(s, t));
    return out;
  }

  std::string name() const { return a_.name() + " x " + b_.name(); }
  std::string obj_str(const Obj& x) const {
    return "(" + a_.obj_str(x.first) + "," + b_.obj_str(x.second) + ")";
  }
  std::string vmor_str(const VMor& f) const {
    return "(" + a_.vmor_str(f.first) + "," + b_.vmor_str(f.second) + ")";
  }
  std::string hcell_str(const HCell& h) const {
    return "(" + a_.hcell_str(h.first) + "," + b_.hcell_str(h.second) + ")";
  }
  std::string sq_str(const Sq& s) const {
    return "(" + a_.sq_str(s.wit.first) + "," + b_.sq_str(s.wit.second) + ")";
  }

 private:
  const M1& a_;
  const M2& b_;
};

// One object, one vertical morphism, one cell, one square.
class TerminalModel {
 public:
  using Obj = int;
  using VMor = int;
  using HCell = int;
  using Sq = BasicSquare<int, int, int, UnitWit>;

  Obj vsrc(VMor) const { return 0; }
  Obj vtgt(VMor) const { return 0; }
  Obj hsrc(HCell) const { return 0; }
  Obj htgt(HCell) const { return 0; }
  VMor vid(Obj) const { return 0; }
  VMor vcomp(VMor, VMor) const { return 0; }
  HCell hunit(Obj) const { return 0; }
  HCell hcomp(HCell, HCell) const { return 0; }

  Sq sq() const { return Sq{0, 0, 0, 0, UnitWit{}}; }
  Sq sq_id(HCell) const { return sq(); }
  Sq sq_unit(VMor) const { return sq(); }
  Sq sq_vcomp(const Sq&, const Sq&) const { return sq(); }
  Sq sq_hcomp(const Sq&, const Sq&) const { return sq(); }
  Sq sq_assoc(HCell, HCell, HCell) const { return sq(); }
  Sq sq_unit_l(HCell) const { return sq(); }
  Sq sq_unit_r(HCell) const { return sq(); }
  std::optional<Sq> sq_invert(const Sq&) const { return sq(); }
  std::optional<VMor> v_invert(VMor) const { return 0; }

  std::vector<Obj> objects() const { return {0}; }
  std::vector<VMor> vmors(Obj, Obj) const { return {0}; }
  std::vector<HCell> hcells(Obj, Obj) const { return {0}; }
  std::vector<Sq> squares(HCell, VMor, VMor, HCell) const { return {sq()}; }

  std::string name() const { return "Terminal"; }
  std::string obj_str(Obj) const { return "*"; }
  std::string vmor_str(VMor) const { return "1"; }
  std::string hcell_str(HCell) const { return "U"; }
  std::string sq_str(const Sq&) const { return "id"; }
};

}  // namespace dblift
