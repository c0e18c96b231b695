#pragma once

// Cartesian tensor on the finite-set models: objects multiply as pair
// sets, the unit is a fixed singleton, and the braiding swaps pair
// components.  All structural cells reindex pair apexes.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dblift/elt.hpp"
#include "dblift/rel.hpp"
#include "dblift/span.hpp"
#include "dblift/square.hpp"

namespace dblift {

inline FinSet cart_unit_set() { return make_set({Elt::atom(0)}); }

inline FnTable ten_fn(const FnTable& f, const FnTable& g) {
  return fn_from_rule(
      set_product(f.src, g.src), set_product(f.tgt, g.tgt),
      [&](const Elt& e) { return Elt::pair(f(e.first()), g(e.second())); });
}

// ((a,b),c) -> (a,(b,c))
inline FnTable cart_assoc_fn(const FinSet& a, const FinSet& b,
                             const FinSet& c) {
  return fn_from_rule(
      set_product(set_product(a, b), c), set_product(a, set_product(b, c)),
      [](const Elt& e) {
        return Elt::pair(e.first().first(),
                         Elt::pair(e.first().second(), e.second()));
      });
}

inline FnTable cart_lunit_fn(const FinSet& a) {
  return fn_from_rule(set_product(cart_unit_set(), a), a,
                      [](const Elt& e) { return e.second(); });
}

inline FnTable cart_runit_fn(const FinSet& a) {
  return fn_from_rule(set_product(a, cart_unit_set()), a,
                      [](const Elt& e) { return e.first(); });
}

inline FnTable cart_braid_fn(const FinSet& a, const FinSet& b) {
  return fn_from_rule(
      set_product(a, b), set_product(b, a),
      [](const Elt& e) { return Elt::pair(e.second(), e.first()); });
}

class RelCartesian {
 public:
  using Obj = FinSet;
  using VMor = FnTable;
  using HCell = RelCell;
  using Sq = RelModel::Sq;

  explicit RelCartesian(const RelModel& m) : m_(m) {}

  Obj unit_obj() const { return cart_unit_set(); }
  Obj ten_obj(const Obj& a, const Obj& b) const { return set_product(a, b); }
  VMor ten_v(const VMor& f, const VMor& g) const { return ten_fn(f, g); }

  HCell ten_h(const HCell& m, const HCell& n) const {
    HCell h{set_product(m.src, n.src), set_product(m.tgt, n.tgt), {}};
    for (const auto& [i, j] : m.pairs)
      for (const auto& [k, l] : n.pairs) {
        int s = set_index(h.src, Elt::pair(m.src[static_cast<std::size_t>(i)],
                                           n.src[static_cast<std::size_t>(k)]));
        int t = set_index(h.tgt, Elt::pair(m.tgt[static_cast<std::size_t>(j)],
                                           n.tgt[static_cast<std::size_t>(l)]));
        h.pairs.push_back({s, t});
      }
    std::sort(h.pairs.begin(), h.pairs.end());
    return h;
  }

  Sq ten_sq(const Sq& a, const Sq& b) const {
    return Sq{ten_h(a.top, b.top), ten_v(a.left, b.left),
              ten_v(a.right, b.right), ten_h(a.bottom, b.bottom), UnitWit{}};
  }

  VMor assoc0(const Obj& a, const Obj& b, const Obj& c) const {
    return cart_assoc_fn(a, b, c);
  }
  VMor lunit0(const Obj& a) const { return cart_lunit_fn(a); }
  VMor runit0(const Obj& a) const { return cart_runit_fn(a); }
  VMor braid0(const Obj& a, const Obj& b) const { return cart_braid_fn(a, b); }

  Sq assoc1(const HCell& m, const HCell& n, const HCell& p) const {
    return Sq{ten_h(ten_h(m, n), p),
              assoc0(m.src, n.src, p.src),
              assoc0(m.tgt, n.tgt, p.tgt),
              ten_h(m, ten_h(n, p)),
              UnitWit{}};
  }
  Sq lunit1(const HCell& m) const {
    return Sq{ten_h(m_.hunit(unit_obj()), m), lunit0(m.src), lunit0(m.tgt),
              m, UnitWit{}};
  }
  Sq runit1(const HCell& m) const {
    return Sq{ten_h(m, m_.hunit(unit_obj())), runit0(m.src), runit0(m.tgt),
              m, UnitWit{}};
  }
  Sq braid1(const HCell& m, const HCell& n) const {
    return Sq{ten_h(m, n), braid0(m.src, n.src), braid0(m.tgt, n.tgt),
              ten_h(n, m), UnitWit{}};
  }

  Sq interchanger(const HCell& m1, const HCell& n1, const HCell& m2,
                  const HCell& n2) const {
    HCell top = m_.hcomp(ten_h(m1, n1), ten_h(m2, n2));
    HCell bottom = ten_h(m_.hcomp(m1, m2), m_.hcomp(n1, n2));
    return Sq{top, m_.vid(top.src), m_.vid(top.tgt), bottom, UnitWit{}};
  }
  Sq unit_split(const Obj& a, const Obj& b) const {
    HCell top = m_.hunit(ten_obj(a, b));
    HCell bottom = ten_h(m_.hunit(a), m_.hunit(b));
    return Sq{top, m_.vid(top.src), m_.vid(top.src), bottom, UnitWit{}};
  }

 private:
  const RelModel& m_;
};

class SpanCartesian {
 public:
  using Obj = FinSet;
  using VMor = FnTable;
  using HCell = SpanCell;
  using Sq = SpanModel::Sq;

  explicit SpanCartesian(const SpanModel& m) : m_(m) {}

  Obj unit_obj() const { return cart_unit_set(); }
  Obj ten_obj(const Obj& a, const Obj& b) const { return set_product(a, b); }
  VMor ten_v(const VMor& f, const VMor& g) const { return ten_fn(f, g); }

  HCell ten_h(const HCell& m, const HCell& n) const {
    HCell h{set_product(m.src, n.src), set_product(m.tgt, n.tgt),
            set_product(m.apex, n.apex), {}, {}};
    for (const Elt& e : h.apex) {
      auto i = static_cast<std::size_t>(set_index(m.apex, e.first()));
      auto j = static_cast<std::size_t>(set_index(n.apex, e.second()));
      h.leg_s.push_back(set_index(
          h.src, Elt::pair(m.src[static_cast<std::size_t>(m.leg_s[i])],
                           n.src[static_cast<std::size_t>(n.leg_s[j])])));
      h.leg_t.push_back(set_index(
          h.tgt, Elt::pair(m.tgt[static_cast<std::size_t>(m.leg_t[i])],
                           n.tgt[static_cast<std::size_t>(n.leg_t[j])])));
    }
    return h;
  }

  Sq ten_sq(const Sq& a, const Sq& b) const {
    Sq s{ten_h(a.top, b.top), ten_v(a.left, b.left), ten_v(a.right, b.right),
         ten_h(a.bottom, b.bottom), {}};
    for (const Elt& e : s.top.apex) {
      auto i = static_cast<std::size_t>(set_index(a.top.apex, e.first()));
      auto j = static_cast<std::size_t>(set_index(b.top.apex, e.second()));
      Elt img =
          Elt::pair(a.bottom.apex[static_cast<std::size_t>(a.wit[i])],
                    b.bottom.apex[static_cast<std::size_t>(b.wit[j])]);
      s.wit.push_back(set_index(s.bottom.apex, img));
    }
    return s;
  }

  VMor assoc0(const Obj& a, const Obj& b, const Obj& c) const {
    return cart_assoc_fn(a, b, c);
  }
  VMor lunit0(const Obj& a) const { return cart_lunit_fn(a); }
  VMor runit0(const Obj& a) const { return cart_runit_fn(a); }
  VMor braid0(const Obj& a, const Obj& b) const { return cart_braid_fn(a, b); }

  Sq assoc1(const HCell& m, const HCell& n, const HCell& p) const {
    return reindex(ten_h(ten_h(m, n), p), assoc0(m.src, n.src, p.src),
                   assoc0(m.tgt, n.tgt, p.tgt), ten_h(m, ten_h(n, p)),
                   [](const Elt& e) {
                     return Elt::pair(
                         e.first().first(),
                         Elt::pair(e.first().second(), e.second()));
                   });
  }
  Sq lunit1(const HCell& m) const {
    return reindex(ten_h(m_.hunit(unit_obj()), m), lunit0(m.src),
                   lunit0(m.tgt), m,
                   [](const Elt& e) { return e.second(); });
  }
  Sq runit1(const HCell& m) const {
    return reindex(ten_h(m, m_.hunit(unit_obj())), runit0(m.src),
                   runit0(m.tgt), m, [](const Elt& e) { return e.first(); });
  }
  Sq braid1(const HCell& m, const HCell& n) const {
    return reindex(ten_h(m, n), braid0(m.src, n.src), braid0(m.tgt, n.tgt),
                   ten_h(n, m), [](const Elt& e) {
                     return Elt::pair(e.second(), e.first());
                   });
  }

  // ((x1,y1),(x2,y2)) -> ((x1,x2),(y1,y2)) on pullback-of-pairs apexes
  Sq interchanger(const HCell& m1, const HCell& n1, const HCell& m2,
                  const HCell& n2) const {
    HCell top = m_.hcomp(ten_h(m1, n1), ten_h(m2, n2));
    HCell bottom = ten_h(m_.hcomp(m1, m2), m_.hcomp(n1, n2));
    return reindex(top, m_.vid(top.src), m_.vid(top.tgt), bottom,
                   [](const Elt& e) {
                     return Elt::pair(
                         Elt::pair(e.first().first(), e.second().first()),
                         Elt::pair(e.first().second(), e.second().second()));
                   });
  }
  Sq unit_split(const Obj& a, const Obj& b) const {
    HCell top = m_.hunit(ten_obj(a, b));
    HCell bottom = ten_h(m_.hunit(a), m_.hunit(b));
    return reindex(top, m_.vid(top.src), m_.vid(top.src), bottom,
                   [](const Elt& e) { return e; });
  }

 private:
  template <class Rule>
  Sq reindex(HCell top, VMor left, VMor right, HCell bottom,
             Rule&& rule) const {
    Sq s{std::move(top), std::move(left), std::move(right),
         std::move(bottom), {}};
    s.wit.reserve(s.top.apex.size());
    for (const Elt& e : s.top.apex)
      s.wit.push_back(set_index(s.bottom.apex, rule(e)));
    return s;
  }

  const SpanModel& m_;
};

}  // namespace dblift
