#pragma once

// Horizontal reversal of a model.  Cells keep their base representation;
// a reversed square stores the base square as its witness, with the
// frame fields presented in reversed orientation.  A conjoint is then
// literally a companion in the reversed model.

#include <optional>
#include <string>
#include <vector>

#include "dblift/model.hpp"
#include "dblift/square.hpp"

namespace dblift {

template <DoubleModel M>
class HOpModel {
 public:
  using Obj = typename M::Obj;
  using VMor = typename M::VMor;
  using HCell = typename M::HCell;
  using Sq = BasicSquare<Obj, VMor, HCell, typename M::Sq>;

  explicit HOpModel(const M& base) : b_(base) {}

  const M& base() const { return b_; }

  // Reversed frame: a cell read A -|-> B here runs B -|-> A underneath.
  Obj vsrc(const VMor& f) const { return b_.vsrc(f); }
  Obj vtgt(const VMor& f) const { return b_.vtgt(f); }
  Obj hsrc(const HCell& h) const { return b_.htgt(h); }
  Obj htgt(const HCell& h) const { return b_.hsrc(h); }

  VMor vid(const Obj& a) const { return b_.vid(a); }
  VMor vcomp(const VMor& f, const VMor& g) const { return b_.vcomp(f, g); }

  HCell hunit(const Obj& a) const { return b_.hunit(a); }
  HCell hcomp(const HCell& m, const HCell& n) const { return b_.hcomp(n, m); }

  Sq wrap(const typename M::Sq& s) const {
    return Sq{s.top, s.right, s.left, s.bottom, s};
  }

  Sq sq_id(const HCell& h) const { return wrap(b_.sq_id(h)); }
  Sq sq_unit(const VMor& f) const { return wrap(b_.sq_unit(f)); }
  Sq sq_vcomp(const Sq& a, const Sq& b) const {
    return wrap(b_.sq_vcomp(a.wit, b.wit));
  }
  Sq sq_hcomp(const Sq& a, const Sq& b) const {
    return wrap(b_.sq_hcomp(b.wit, a.wit));
  }

  Sq sq_assoc(const HCell& m, const HCell& n, const HCell& p) const {
    auto inv = b_.sq_invert(b_.sq_assoc(p, n, m));
    return wrap(*inv);
  }
  Sq sq_unit_l(const HCell& m) const { return wrap(b_.sq_unit_r(m)); }
  Sq sq_unit_r(const HCell& m) const { return wrap(b_.sq_unit_l(m)); }

  std::optional<Sq> sq_invert(const Sq& s) const {
    auto inv = b_.sq_invert(s.wit);
    if (!inv) return std::nullopt;
    return wrap(*inv);
  }
  std::optional<VMor> v_invert(const VMor& f) const { return b_.v_invert(f); }

  std::vector<Obj> objects() const { return b_.objects(); }
  std::vector<VMor> vmors(const Obj& a, const Obj& b) const {
    return b_.vmors(a, b);
  }
  std::vector<HCell> hcells(const Obj& a, const Obj& b) const {
    return b_.hcells(b, a);
  }
  std::vector<Sq> squares(const HCell& top, const VMor& l, const VMor& r,
                          const HCell& bottom) const {
    std::vector<Sq> out;
    for (const auto& s : b_.squares(top, r, l, bottom)) out.push_back(wrap(s));
    return out;
  }

  std::string name() const { return b_.name() + "^hop"; }
  std::string obj_str(const Obj& a) const { return b_.obj_str(a); }
  std::string vmor_str(const VMor& f) const { return b_.vmor_str(f); }
  std::string hcell_str(const HCell& h) const {
    return "hop:" + b_.hcell_str(h);
  }
  std::string sq_str(const Sq& s) const { return "hop:" + b_.sq_str(s.wit); }

 private:
  const M& b_;
};

}  // namespace dblift
