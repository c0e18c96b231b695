#pragma once

// Interface every double-category model implements, plus frame-checked
// wrappers around the raw operations.  Models assume well-framed input;
// the checked:: wrappers are the single place frame errors are raised,
// so evaluators and verifiers route through them.

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "dblift/errors.hpp"

namespace dblift {

template <class M>
concept DoubleModel = requires(const M m, typename M::Obj a,
                               typename M::VMor f, typename M::HCell h,
                               typename M::Sq s) {
  typename M::Obj;
  typename M::VMor;
  typename M::HCell;
  typename M::Sq;

  // frames
  { m.vsrc(f) } -> std::convertible_to<typename M::Obj>;
  { m.vtgt(f) } -> std::convertible_to<typename M::Obj>;
  { m.hsrc(h) } -> std::convertible_to<typename M::Obj>;
  { m.htgt(h) } -> std::convertible_to<typename M::Obj>;

  // strict category of objects and vertical morphisms
  { m.vid(a) } -> std::convertible_to<typename M::VMor>;
  { m.vcomp(f, f) } -> std::convertible_to<typename M::VMor>;

  // horizontal cells
  { m.hunit(a) } -> std::convertible_to<typename M::HCell>;
  { m.hcomp(h, h) } -> std::convertible_to<typename M::HCell>;

  // squares
  { m.sq_id(h) } -> std::convertible_to<typename M::Sq>;
  { m.sq_unit(f) } -> std::convertible_to<typename M::Sq>;
  { m.sq_vcomp(s, s) } -> std::convertible_to<typename M::Sq>;
  { m.sq_hcomp(s, s) } -> std::convertible_to<typename M::Sq>;

  // coherence constraints, globular and invertible
  { m.sq_assoc(h, h, h) } -> std::convertible_to<typename M::Sq>;
  { m.sq_unit_l(h) } -> std::convertible_to<typename M::Sq>;
  { m.sq_unit_r(h) } -> std::convertible_to<typename M::Sq>;

  // exact inverses where they exist
  { m.sq_invert(s) } -> std::convertible_to<std::optional<typename M::Sq>>;
  { m.v_invert(f) } -> std::convertible_to<std::optional<typename M::VMor>>;

  // bounded enumeration
  { m.objects() } -> std::convertible_to<std::vector<typename M::Obj>>;
  { m.vmors(a, a) } -> std::convertible_to<std::vector<typename M::VMor>>;
  { m.hcells(a, a) } -> std::convertible_to<std::vector<typename M::HCell>>;
  { m.squares(h, f, f, h) } -> std::convertible_to<std::vector<typename M::Sq>>;

  // rendering for reports and errors
  { m.name() } -> std::convertible_to<std::string>;
  { m.obj_str(a) } -> std::convertible_to<std::string>;
  { m.vmor_str(f) } -> std::convertible_to<std::string>;
  { m.hcell_str(h) } -> std::convertible_to<std::string>;
  { m.sq_str(s) } -> std::convertible_to<std::string>;
};

namespace checked {

template <DoubleModel M>
typename M::VMor vcomp(const M& m, const typename M::VMor& f,
                       const typename M::VMor& g) {
  if (!(m.vtgt(f) == m.vsrc(g)))
    throw FrameMismatch("vcomp: " + m.vmor_str(f) + " then " + m.vmor_str(g));
  return m.vcomp(f, g);
}

template <DoubleModel M>
typename M::HCell hcomp(const M& m, const typename M::HCell& h,
                        const typename M::HCell& k) {
  if (!(m.htgt(h) == m.hsrc(k)))
    throw FrameMismatch("hcomp: " + m.hcell_str(h) + " then " + m.hcell_str(k));
  return m.hcomp(h, k);
}

template <DoubleModel M>
typename M::Sq sq_vcomp(const M& m, const typename M::Sq& a,
                        const typename M::Sq& b) {
  if (!(a.bottom == b.top))
    throw FrameMismatch("sq_vcomp: bottom " + m.hcell_str(a.bottom) +
                        " vs top " + m.hcell_str(b.top));
  return m.sq_vcomp(a, b);
}

template <DoubleModel M>
typename M::Sq sq_hcomp(const M& m, const typename M::Sq& a,
                        const typename M::Sq& b) {
  if (!(a.right == b.left))
    throw FrameMismatch("sq_hcomp: right " + m.vmor_str(a.right) +
                        " vs left " + m.vmor_str(b.left));
  return m.sq_hcomp(a, b);
}

// n-ary folds, diagram order
template <DoubleModel M>
typename M::Sq sq_vcomp_n(const M& m, const std::vector<typename M::Sq>& s) {
  if (s.empty()) throw FrameMismatch("sq_vcomp_n: empty");
  auto acc = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) acc = sq_vcomp(m, acc, s[i]);
  return acc;
}

template <DoubleModel M>
typename M::Sq sq_hcomp_n(const M& m, const std::vector<typename M::Sq>& s) {
  if (s.empty()) throw FrameMismatch("sq_hcomp_n: empty");
  auto acc = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) acc = sq_hcomp(m, acc, s[i]);
  return acc;
}

template <DoubleModel M>
typename M::Sq sq_invert(const M& m, const typename M::Sq& s) {
  auto inv = m.sq_invert(s);
  if (!inv) throw NotInverse("sq_invert: " + m.sq_str(s));
  return *inv;
}

template <DoubleModel M>
typename M::VMor v_invert(const M& m, const typename M::VMor& f) {
  auto inv = m.v_invert(f);
  if (!inv) throw NotInverse("v_invert: " + m.vmor_str(f));
  return *inv;
}

}  // namespace checked

// A square is globular when both vertical legs are identities.
template <DoubleModel M>
bool is_globular(const M& m, const typename M::Sq& s) {
  return s.left == m.vid(m.hsrc(s.top)) && s.right == m.vid(m.htgt(s.top));
}

// A square is vertically invertible when some square composes with it
// to identities on both sides.
template <DoubleModel M>
bool is_iso(const M& m, const typename M::Sq& s) {
  return m.sq_invert(s).has_value();
}

}  // namespace dblift
