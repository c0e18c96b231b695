#pragma once

// Companion and conjoint calculus.  A companion pair presents a vertical
// morphism f : A -> B as a horizontal cell lift : A -|-> B together with
// two defining squares
//
//   up   : top U_A, left 1_A, right f,   bottom lift
//   down : top lift, left f,  right 1_B, bottom U_B
//
// subject to one vertical and one horizontal cancellation equation.
// A conjoint pair presents f as a cell colift : B -|-> A; it is exactly
// a companion pair in the horizontally reversed model.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblift/errors.hpp"
#include "dblift/hop.hpp"
#include "dblift/model.hpp"
#include "dblift/rel.hpp"
#include "dblift/report.hpp"
#include "dblift/span.hpp"

namespace dblift {

template <DoubleModel M>
struct CompanionPair {
  typename M::VMor f;
  typename M::HCell lift;
  typename M::Sq up;
  typename M::Sq down;
};

// Direct frames of a conjoint of f : A -> B with colift : B -|-> A:
//   up   : top U_A,   left f,   right 1_A, bottom colift
//   down : top colift, left 1_B, right f,  bottom U_B
template <DoubleModel M>
struct ConjointPair {
  typename M::VMor f;
  typename M::HCell colift;
  typename M::Sq up;
  typename M::Sq down;
};

template <DoubleModel M>
struct AdjunctionData {
  typename M::HCell lift;    // left adjoint cell
  typename M::HCell colift;  // right adjoint cell
  typename M::Sq unit;       // U_A -> lift * colift
  typename M::Sq counit;     // colift * lift -> U_B
};

namespace detail {

template <DoubleModel M>
bool companion_frames_ok(const M& m, const CompanionPair<M>& c) {
  const auto a = m.vsrc(c.f);
  const auto b = m.vtgt(c.f);
  return c.up.top == m.hunit(a) && c.up.left == m.vid(a) && c.up.right == c.f &&
         c.up.bottom == c.lift && c.down.top == c.lift && c.down.left == c.f &&
         c.down.right == m.vid(b) && c.down.bottom == m.hunit(b);
}

template <DoubleModel M>
bool conjoint_frames_ok(const M& m, const ConjointPair<M>& j) {
  const auto a = m.vsrc(j.f);
  const auto b = m.vtgt(j.f);
  return j.up.top == m.hunit(a) && j.up.left == j.f &&
         j.up.right == m.vid(a) && j.up.bottom == j.colift &&
         j.down.top == j.colift && j.down.left == m.vid(b) &&
         j.down.right == j.f && j.down.bottom == m.hunit(b);
}

}  // namespace detail

// Vertical equation: the two defining squares stack to the unit square of f.
template <DoubleModel M>
bool companion_vertical_eq(const M& m, const CompanionPair<M>& c) {
  return checked::sq_vcomp(m, c.up, c.down) == m.sq_unit(c.f);
}

// Horizontal equation: up beside down collapses to the identity of the lift.
template <DoubleModel M>
bool companion_horizontal_eq(const M& m, const CompanionPair<M>& c) {
  auto mid = checked::sq_hcomp(m, c.up, c.down);
  auto lhs = checked::sq_vcomp_n(
      m, {checked::sq_invert(m, m.sq_unit_l(c.lift)), mid,
          m.sq_unit_r(c.lift)});
  return lhs == m.sq_id(c.lift);
}

template <DoubleModel M>
Report verify_companion(const M& m, const CompanionPair<M>& c) {
  Report r;
  r.component = "companion";
  r.model = m.name();

  CheckItem frames;
  frames.name = "companion frames";
  frames.citation = "companion pair data";
  frames.instances = 1;
  frames.pass = detail::companion_frames_ok(m, c);
  if (!frames.pass) frames.counterexample = "cell " + m.hcell_str(c.lift);
  r.add(frames);
  if (!frames.pass) return r;

  CheckItem vert;
  vert.name = "companion vertical equation";
  vert.citation = "companion cancellation";
  vert.instances = 1;
  vert.pass = companion_vertical_eq(m, c);
  if (!vert.pass)
    vert.counterexample = "stack of defining squares is " +
                          m.sq_str(checked::sq_vcomp(m, c.up, c.down));
  r.add(vert);

  CheckItem horiz;
  horiz.name = "companion horizontal equation";
  horiz.citation = "companion cancellation";
  horiz.instances = 1;
  horiz.pass = companion_horizontal_eq(m, c);
  if (!horiz.pass)
    horiz.counterexample = "row of defining squares does not collapse for " +
                           m.hcell_str(c.lift);
  r.add(horiz);
  return r;
}

template <DoubleModel M>
bool is_companion(const M& m, const CompanionPair<M>& c) {
  return detail::companion_frames_ok(m, c) && companion_vertical_eq(m, c) &&
         companion_horizontal_eq(m, c);
}

template <DoubleModel M>
CompanionPair<M> companion_of_identity(const M& m, const typename M::Obj& a) {
  auto u = m.hunit(a);
  return CompanionPair<M>{m.vid(a), u, m.sq_id(u), m.sq_id(u)};
}

// Exchange isomorphism between two companions of the same morphism.
template <DoubleModel M>
typename M::Sq theta(const M& m, const CompanionPair<M>& c1,
                     const CompanionPair<M>& c2) {
  if (!(c1.f == c2.f))
    throw CompanionMismatch("theta requires companions of one morphism, got " +
                            m.vmor_str(c1.f) + " and " + m.vmor_str(c2.f));
  auto mid = checked::sq_hcomp(m, c2.up, c1.down);
  return checked::sq_vcomp_n(
      m, {checked::sq_invert(m, m.sq_unit_l(c1.lift)), mid,
          m.sq_unit_r(c2.lift)});
}

// The property that pins theta down uniquely among globular cells.
template <DoubleModel M>
bool theta_equation_holds(const M& m, const CompanionPair<M>& c1,
                          const CompanionPair<M>& c2,
                          const typename M::Sq& th) {
  if (!(th.top == c1.lift && th.bottom == c2.lift && is_globular(m, th)))
    return false;
  auto lhs = checked::sq_vcomp_n(m, {c1.up, th, c2.down});
  return lhs == m.sq_unit(c1.f);
}

// All invertible globular cells lift1 -> lift2 satisfying the exchange
// equation.  Exactly one exists when both pairs are companions.
template <DoubleModel M>
std::vector<typename M::Sq> exchange_candidates(const M& m,
                                                const CompanionPair<M>& c1,
                                                const CompanionPair<M>& c2) {
  const auto a = m.vsrc(c1.f);
  const auto b = m.vtgt(c1.f);
  std::vector<typename M::Sq> out;
  for (const auto& s :
       m.squares(c1.lift, m.vid(a), m.vid(b), c2.lift)) {
    if (!m.sq_invert(s)) continue;
    if (theta_equation_holds(m, c1, c2, s)) out.push_back(s);
  }
  return out;
}

// Companion of a composite, built from companions of the factors.
template <DoubleModel M>
CompanionPair<M> compose_companions(const M& m, const CompanionPair<M>& cf,
                                    const CompanionPair<M>& cg) {
  if (!(m.vtgt(cf.f) == m.vsrc(cg.f)))
    throw FrameMismatch("compose_companions: " + m.vmor_str(cf.f) +
                        " then " + m.vmor_str(cg.f));
  const auto a = m.vsrc(cf.f);
  const auto c = m.vtgt(cg.f);
  auto lift = m.hcomp(cf.lift, cg.lift);

  auto up = checked::sq_vcomp_n(
      m, {checked::sq_invert(m, m.sq_unit_l(m.hunit(a))),
          checked::sq_hcomp(m, cf.up, m.sq_unit(cf.f)),
          checked::sq_hcomp(m, m.sq_id(cf.lift), cg.up)});
  auto down = checked::sq_vcomp_n(
      m, {checked::sq_hcomp(m, cf.down, m.sq_id(cg.lift)),
          checked::sq_hcomp(m, m.sq_unit(cg.f), cg.down),
          m.sq_unit_l(m.hunit(c))});
  return CompanionPair<M>{m.vcomp(cf.f, cg.f), lift, up, down};
}

// Conjoint verification runs the companion checks in the reversed model.
template <DoubleModel M>
CompanionPair<HOpModel<M>> as_reversed_companion(const HOpModel<M>& h,
                                                 const ConjointPair<M>& j) {
  return CompanionPair<HOpModel<M>>{j.f, j.colift, h.wrap(j.up),
                                    h.wrap(j.down)};
}

template <DoubleModel M>
Report verify_conjoint(const M& m, const ConjointPair<M>& j) {
  HOpModel<M> h(m);
  auto r = verify_companion(h, as_reversed_companion(h, j));
  r.component = "conjoint";
  r.model = m.name();
  for (auto& it : r.items) {
    auto pos = it.name.find("companion");
    if (pos != std::string::npos) it.name.replace(pos, 9, "conjoint");
  }
  return r;
}

template <DoubleModel M>
bool is_conjoint(const M& m, const ConjointPair<M>& j) {
  HOpModel<M> h(m);
  return is_companion(h, as_reversed_companion(h, j));
}

template <DoubleModel M>
ConjointPair<M> conjoint_of_identity(const M& m, const typename M::Obj& a) {
  auto u = m.hunit(a);
  return ConjointPair<M>{m.vid(a), u, m.sq_id(u), m.sq_id(u)};
}

// Exchange isomorphism between two conjoints of the same morphism.
template <DoubleModel M>
typename M::Sq theta_conjoint(const M& m, const ConjointPair<M>& j1,
                              const ConjointPair<M>& j2) {
  HOpModel<M> h(m);
  return theta(h, as_reversed_companion(h, j1), as_reversed_companion(h, j2))
      .wit;
}

// When f is invertible, a companion of f yields a conjoint of its inverse
// on the same underlying cell.
template <DoubleModel M>
ConjointPair<M> conjoint_of_inverse(const M& m, const CompanionPair<M>& c,
                                    const typename M::VMor& finv) {
  const auto a = m.vsrc(c.f);
  const auto b = m.vtgt(c.f);
  if (!(m.vsrc(finv) == b && m.vtgt(finv) == a &&
        m.vcomp(c.f, finv) == m.vid(a) && m.vcomp(finv, c.f) == m.vid(b)))
    throw NotInverse(m.vmor_str(finv) + " does not invert " +
                     m.vmor_str(c.f));
  auto up = checked::sq_vcomp(m, m.sq_unit(finv), c.up);
  auto down = checked::sq_vcomp(m, c.down, m.sq_unit(finv));
  return ConjointPair<M>{finv, c.lift, up, down};
}

// Unit and counit of the adjunction lift -| colift induced by a companion
// and a conjoint of the same morphism.
template <DoubleModel M>
AdjunctionData<M> adjunction(const M& m, const CompanionPair<M>& c,
                             const ConjointPair<M>& j) {
  if (!(c.f == j.f))
    throw CompanionMismatch(
        "adjunction requires a companion and a conjoint of one morphism, "
        "got " +
        m.vmor_str(c.f) + " and " + m.vmor_str(j.f));
  const auto a = m.vsrc(c.f);
  const auto b = m.vtgt(c.f);
  auto unit = checked::sq_vcomp(
      m, checked::sq_invert(m, m.sq_unit_l(m.hunit(a))),
      checked::sq_hcomp(m, c.up, j.up));
  auto counit = checked::sq_vcomp(m, checked::sq_hcomp(m, j.down, c.down),
                                  m.sq_unit_l(m.hunit(b)));
  return AdjunctionData<M>{c.lift, j.colift, unit, counit};
}

// Triangle identities for the unit and counit above.
template <DoubleModel M>
bool adjunction_triangles_hold(const M& m, const AdjunctionData<M>& adj) {
  const auto& e = adj.lift;
  const auto& v = adj.colift;
  auto t1 = checked::sq_vcomp_n(
      m, {checked::sq_invert(m, m.sq_unit_l(e)),
          checked::sq_hcomp(m, adj.unit, m.sq_id(e)),
          m.sq_assoc(e, v, e),
          checked::sq_hcomp(m, m.sq_id(e), adj.counit), m.sq_unit_r(e)});
  if (!(t1 == m.sq_id(e))) return false;
  auto t2 = checked::sq_vcomp_n(
      m, {checked::sq_invert(m, m.sq_unit_r(v)),
          checked::sq_hcomp(m, m.sq_id(v), adj.unit),
          checked::sq_invert(m, m.sq_assoc(v, e, v)),
          checked::sq_hcomp(m, adj.counit, m.sq_id(v)), m.sq_unit_l(v)});
  return t2 == m.sq_id(v);
}

// Exhaustive companion search: every (lift, up, down) satisfying the two
// cancellation equations.  Feasible on the finite models.
template <DoubleModel M>
std::vector<CompanionPair<M>> companion_search(const M& m,
                                               const typename M::VMor& f) {
  const auto a = m.vsrc(f);
  const auto b = m.vtgt(f);
  std::vector<CompanionPair<M>> out;
  for (const auto& lift : m.hcells(a, b)) {
    auto ups = m.squares(m.hunit(a), m.vid(a), f, lift);
    if (ups.empty()) continue;
    auto downs = m.squares(lift, f, m.vid(b), m.hunit(b));
    for (const auto& up : ups)
      for (const auto& down : downs) {
        CompanionPair<M> c{f, lift, up, down};
        if (companion_vertical_eq(m, c) && companion_horizontal_eq(m, c))
          out.push_back(c);
      }
  }
  return out;
}

template <DoubleModel M>
std::vector<ConjointPair<M>> conjoint_search(const M& m,
                                             const typename M::VMor& f) {
  HOpModel<M> h(m);
  std::vector<ConjointPair<M>> out;
  for (const auto& c : companion_search(h, f))
    out.push_back(ConjointPair<M>{f, c.lift, c.up.wit, c.down.wit});
  return out;
}

// Closed forms on the relational model: the graph of f and its transpose.
inline CompanionPair<RelModel> rel_companion(const RelModel& m,
                                             const FnTable& f) {
  RelCell lift{f.src, f.tgt, {}};
  for (std::size_t i = 0; i < f.src.size(); ++i)
    lift.pairs.push_back({static_cast<int>(i), f.map[i]});
  std::sort(lift.pairs.begin(), lift.pairs.end());
  auto a = f.src;
  auto b = f.tgt;
  typename RelModel::Sq up{m.hunit(a), m.vid(a), f, lift, UnitWit{}};
  typename RelModel::Sq down{lift, f, m.vid(b), m.hunit(b), UnitWit{}};
  return CompanionPair<RelModel>{f, lift, up, down};
}

inline ConjointPair<RelModel> rel_conjoint(const RelModel& m,
                                           const FnTable& f) {
  RelCell colift{f.tgt, f.src, {}};
  for (std::size_t i = 0; i < f.src.size(); ++i)
    colift.pairs.push_back({f.map[i], static_cast<int>(i)});
  std::sort(colift.pairs.begin(), colift.pairs.end());
  colift.pairs.erase(std::unique(colift.pairs.begin(), colift.pairs.end()),
                     colift.pairs.end());
  auto a = f.src;
  auto b = f.tgt;
  typename RelModel::Sq up{m.hunit(a), f, m.vid(a), colift, UnitWit{}};
  typename RelModel::Sq down{colift, m.vid(b), f, m.hunit(b), UnitWit{}};
  return ConjointPair<RelModel>{f, colift, up, down};
}

// Closed forms on the span model: apex A with legs (identity, f) for the
// companion and legs (f, identity) for the conjoint.
inline CompanionPair<SpanModel> span_companion(const SpanModel& m,
                                               const FnTable& f) {
  std::vector<int> idlegs(f.src.size());
  for (std::size_t i = 0; i < idlegs.size(); ++i)
    idlegs[i] = static_cast<int>(i);
  SpanCell lift{f.src, f.tgt, f.src, idlegs, f.map};
  auto a = f.src;
  auto b = f.tgt;
  // The unit span on A has apex A with identity legs, so indices line up.
  typename SpanModel::Sq up{m.hunit(a), m.vid(a), f, lift, idlegs};
  typename SpanModel::Sq down{lift, f, m.vid(b), m.hunit(b), f.map};
  return CompanionPair<SpanModel>{f, lift, up, down};
}

inline ConjointPair<SpanModel> span_conjoint(const SpanModel& m,
                                             const FnTable& f) {
  std::vector<int> idlegs(f.src.size());
  for (std::size_t i = 0; i < idlegs.size(); ++i)
    idlegs[i] = static_cast<int>(i);
  SpanCell colift{f.tgt, f.src, f.src, f.map, idlegs};
  auto a = f.src;
  auto b = f.tgt;
  typename SpanModel::Sq up{m.hunit(a), f, m.vid(a), colift, idlegs};
  typename SpanModel::Sq down{colift, m.vid(b), f, m.hunit(b), f.map};
  return ConjointPair<SpanModel>{f, colift, up, down};
}

}  // namespace dblift
