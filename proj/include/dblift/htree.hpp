#pragma once

// Formal bracketings of horizontal cells, with explicit unit leaves.
// canonical_constraint builds the unique structural isomorphism between
// two bracketings of the same cell list by normalizing each side to the
// flat left-nested unit-free composite.

#include <memory>
#include <string>
#include <vector>

#include "dblift/errors.hpp"
#include "dblift/model.hpp"

namespace dblift {

template <DoubleModel M>
struct HTree {
  enum class Kind { Leaf, Unit, Node };
  Kind kind;
  typename M::HCell cell;  // Leaf
  typename M::Obj obj;     // Unit
  std::shared_ptr<const HTree> l, r;  // Node

  static HTree leaf(typename M::HCell c) {
    HTree t;
    t.kind = Kind::Leaf;
    t.cell = std::move(c);
    return t;
  }
  static HTree unit(typename M::Obj a) {
    HTree t;
    t.kind = Kind::Unit;
    t.obj = std::move(a);
    return t;
  }
  static HTree node(HTree a, HTree b) {
    HTree t;
    t.kind = Kind::Node;
    t.l = std::make_shared<const HTree>(std::move(a));
    t.r = std::make_shared<const HTree>(std::move(b));
    return t;
  }
};

// Left-nested composite of a nonempty prefix list, extended leaf by leaf.
template <DoubleModel M>
typename M::Obj tree_src(const M& m, const HTree<M>& t) {
  switch (t.kind) {
    case HTree<M>::Kind::Leaf: return m.hsrc(t.cell);
    case HTree<M>::Kind::Unit: return t.obj;
    default: return tree_src(m, *t.l);
  }
}

template <DoubleModel M>
typename M::Obj tree_tgt(const M& m, const HTree<M>& t) {
  switch (t.kind) {
    case HTree<M>::Kind::Leaf: return m.htgt(t.cell);
    case HTree<M>::Kind::Unit: return t.obj;
    default: return tree_tgt(m, *t.r);
  }
}

template <DoubleModel M>
typename M::HCell tree_eval(const M& m, const HTree<M>& t) {
  switch (t.kind) {
    case HTree<M>::Kind::Leaf: return t.cell;
    case HTree<M>::Kind::Unit: return m.hunit(t.obj);
    default:
      return checked::hcomp(m, tree_eval(m, *t.l), tree_eval(m, *t.r));
  }
}

// Unit leaves are dropped; the result is the list of genuine cells in
// left-to-right order.
template <DoubleModel M>
void tree_leaves_into(const HTree<M>& t, std::vector<typename M::HCell>& out) {
  switch (t.kind) {
    case HTree<M>::Kind::Leaf: out.push_back(t.cell); break;
    case HTree<M>::Kind::Unit: break;
    default:
      tree_leaves_into(*t.l, out);
      tree_leaves_into(*t.r, out);
  }
}

template <DoubleModel M>
std::vector<typename M::HCell> tree_leaves(const M&, const HTree<M>& t) {
  std::vector<typename M::HCell> out;
  tree_leaves_into(t, out);
  return out;
}

namespace detail {

// Globular isomorphism from a value to its normal form, together with
// the normal form itself and its unit-free leaf count.
template <DoubleModel M>
struct NormResult {
  typename M::Sq iso;  // eval(t) -> nf(t)
  typename M::HCell nf;
  std::size_t leaves;
};

// merge: given flat cells built from `la` and `lb` leaves, the iso
// hcomp(na, nb) -> flat concatenation.  Unit-free flat cells are
// left-nested, so appending walks the right spine of nb.
template <DoubleModel M>
NormResult<M> merge_flat(const M& m, const typename M::HCell& na,
                         std::size_t la,
                         const std::vector<typename M::HCell>& lb_list,
                         std::size_t lb_begin, std::size_t lb_end) {
  // reconstruct nb from its leaf range
  auto fold = [&](std::size_t b, std::size_t e) {
    typename M::HCell acc = lb_list[b];
    for (std::size_t i = b + 1; i < e; ++i)
      acc = checked::hcomp(m, acc, lb_list[i]);
    return acc;
  };
  std::size_t nb_count = lb_end - lb_begin;
  if (la == 0) {
    // na is a unit; strip it
    typename M::HCell nb =
        nb_count == 0 ? m.hunit(m.htgt(na)) : fold(lb_begin, lb_end);
    return {m.sq_unit_l(nb), nb, nb_count};
  }
  if (nb_count == 0) {
    return {m.sq_unit_r(na), na, la};
  }
  if (nb_count == 1) {
    typename M::HCell flat = checked::hcomp(m, na, lb_list[lb_begin]);
    return {m.sq_id(flat), flat, la + 1};
  }
  // nb = hcomp(nb', last): reassociate then recurse on the prefix
  typename M::HCell nbp = fold(lb_begin, lb_end - 1);
  const typename M::HCell& last = lb_list[lb_end - 1];
  auto assoc = checked::sq_invert(m, m.sq_assoc(na, nbp, last));
  auto rec = merge_flat(m, na, la, lb_list, lb_begin, lb_end - 1);
  auto step = checked::sq_hcomp(m, rec.iso, m.sq_id(last));
  typename M::HCell flat = checked::hcomp(m, rec.nf, last);
  return {checked::sq_vcomp(m, assoc, step), flat, la + nb_count};
}

template <DoubleModel M>
NormResult<M> normalize(const M& m, const HTree<M>& t) {
  switch (t.kind) {
    case HTree<M>::Kind::Leaf:
      return {m.sq_id(t.cell), t.cell, 1};
    case HTree<M>::Kind::Unit: {
      auto u = m.hunit(t.obj);
      return {m.sq_id(u), u, 0};
    }
    default: {
      auto a = normalize(m, *t.l);
      auto b = normalize(m, *t.r);
      auto side = checked::sq_hcomp(m, a.iso, b.iso);
      std::vector<typename M::HCell> lb = tree_leaves(m, *t.r);
      auto mg = merge_flat(m, a.nf, a.leaves, lb, 0, lb.size());
      return {checked::sq_vcomp(m, side, mg.iso), mg.nf,
              a.leaves + b.leaves};
    }
  }
}

}  // namespace detail

// Structural isomorphism eval(s) -> eval(t).  Both trees must carry the
// same unit-free leaf list and the same endpoints.
template <DoubleModel M>
typename M::Sq canonical_constraint(const M& m, const HTree<M>& s,
                                    const HTree<M>& t) {
  auto ls = tree_leaves(m, s);
  auto lt = tree_leaves(m, t);
  if (!(ls == lt))
    throw LeafMismatch("canonical_constraint: leaf lists differ (" +
                       std::to_string(ls.size()) + " vs " +
                       std::to_string(lt.size()) + " cells)");
  if (!(tree_src(m, s) == tree_src(m, t)) ||
      !(tree_tgt(m, s) == tree_tgt(m, t)))
    throw LeafMismatch("canonical_constraint: endpoints differ");
  auto ns = detail::normalize(m, s);
  auto nt = detail::normalize(m, t);
  return checked::sq_vcomp(m, ns.iso, checked::sq_invert(m, nt.iso));
}

}  // namespace dblift
