#pragma once

// Relations between finite sets.  Composition is strictly associative
// and strictly unital, and there is at most one square per boundary, so
// this model exercises the strict corner of the interface.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblift/elt.hpp"
#include "dblift/model.hpp"
#include "dblift/square.hpp"

namespace dblift {

struct RelCell {
  FinSet src, tgt;
  // sorted (index into src, index into tgt)
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const RelCell& a, const RelCell& b) {
    return a.src == b.src && a.tgt == b.tgt && a.pairs == b.pairs;
  }
  friend bool operator<(const RelCell& a, const RelCell& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.tgt != b.tgt) return a.tgt < b.tgt;
    return a.pairs < b.pairs;
  }
};

inline bool rel_contains(const RelCell& r, int i, int j) {
  return std::binary_search(r.pairs.begin(), r.pairs.end(),
                            std::make_pair(i, j));
}

class RelModel {
 public:
  using Obj = FinSet;
  using VMor = FnTable;
  using HCell = RelCell;
  using Sq = BasicSquare<Obj, VMor, HCell, UnitWit>;

  explicit RelModel(int max_atoms = 3) : max_atoms_(max_atoms) {}

  Obj vsrc(const VMor& f) const { return f.src; }
  Obj vtgt(const VMor& f) const { return f.tgt; }
  Obj hsrc(const HCell& h) const { return h.src; }
  Obj htgt(const HCell& h) const { return h.tgt; }

  VMor vid(const Obj& a) const { return FnTable::identity(a); }
  VMor vcomp(const VMor& f, const VMor& g) const { return fn_compose(f, g); }

  HCell hunit(const Obj& a) const {
    HCell h{a, a, {}};
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
      h.pairs.emplace_back(i, i);
    return h;
  }

  HCell hcomp(const HCell& m, const HCell& n) const {
    HCell h{m.src, n.tgt, {}};
    for (auto [i, j] : m.pairs)
      for (auto [j2, k] : n.pairs)
        if (j == j2) h.pairs.emplace_back(i, k);
    std::sort(h.pairs.begin(), h.pairs.end());
    h.pairs.erase(std::unique(h.pairs.begin(), h.pairs.end()), h.pairs.end());
    return h;
  }

  // A square exists when the boundary satisfies the pointwise condition;
  // its witness carries nothing.
  bool square_exists(const HCell& top, const VMor& l, const VMor& r,
                     const HCell& bottom) const {
    for (auto [i, j] : top.pairs)
      if (!rel_contains(bottom, l.map[i], r.map[j])) return false;
    return true;
  }

  Sq sq_id(const HCell& h) const {
    return Sq{h, vid(h.src), vid(h.tgt), h, {}};
  }
  Sq sq_unit(const VMor& f) const {
    return Sq{hunit(f.src), f, f, hunit(f.tgt), {}};
  }
  Sq sq_vcomp(const Sq& a, const Sq& b) const {
    return Sq{a.top, vcomp(a.left, b.left), vcomp(a.right, b.right), b.bottom,
              {}};
  }
  Sq sq_hcomp(const Sq& a, const Sq& b) const {
    return Sq{hcomp(a.top, b.top), a.left, b.right, hcomp(a.bottom, b.bottom),
              {}};
  }

  Sq sq_assoc(const HCell& m, const HCell& n, const HCell& p) const {
    HCell c = hcomp(hcomp(m, n), p);
    return Sq{c, vid(m.src), vid(p.tgt), hcomp(m, hcomp(n, p)), {}};
  }
  Sq sq_unit_l(const HCell& m) const {
    return Sq{hcomp(hunit(m.src), m), vid(m.src), vid(m.tgt), m, {}};
  }
  Sq sq_unit_r(const HCell& m) const {
    return Sq{hcomp(m, hunit(m.tgt)), vid(m.src), vid(m.tgt), m, {}};
  }

  std::optional<Sq> sq_invert(const Sq& s) const {
    auto li = fn_inverse(s.left);
    auto ri = fn_inverse(s.right);
    if (!li || !ri) return std::nullopt;
    if (!square_exists(s.bottom, *li, *ri, s.top)) return std::nullopt;
    return Sq{s.bottom, *li, *ri, s.top, {}};
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

  std::vector<HCell> hcells(const Obj& a, const Obj& b) const {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
      for (int j = 0; j < static_cast<int>(b.size()); ++j)
        all.emplace_back(i, j);
    std::vector<HCell> out;
    for (unsigned long long mask = 0; mask < (1ull << all.size()); ++mask) {
      HCell h{a, b, {}};
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask & (1ull << k)) h.pairs.push_back(all[k]);
      out.push_back(std::move(h));
    }
    return out;
  }

  std::vector<Sq> squares(const HCell& top, const VMor& l, const VMor& r,
                          const HCell& bottom) const {
    if (square_exists(top, l, r, bottom))
      return {Sq{top, l, r, bottom, {}}};
    return {};
  }

  std::string name() const {
    return "Rel(atoms<=" + std::to_string(max_atoms_) + ")";
  }
  std::string obj_str(const Obj& a) const { return set_str(a); }
  std::string vmor_str(const VMor& f) const { return fn_str(f); }
  std::string hcell_str(const HCell& h) const {
    std::string s = "rel" + set_str(h.src) + "->" + set_str(h.tgt) + "{";
    bool first = true;
    for (auto [i, j] : h.pairs) {
      if (!first) s += ",";
      first = false;
      s += h.src[i].str() + "~" + h.tgt[j].str();
    }
    return s + "}";
  }
  std::string sq_str(const Sq& s) const {
    return "[top " + hcell_str(s.top) + " | " + vmor_str(s.left) + " , " +
           vmor_str(s.right) + " | bottom " + hcell_str(s.bottom) + "]";
  }

  int max_atoms() const { return max_atoms_; }

 private:
  int max_atoms_;
};

}  // namespace dblift
