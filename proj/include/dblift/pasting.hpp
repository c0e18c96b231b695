#pragma once

// Expression trees over squares.  Evaluation is eager and frame-checked;
// a frame error is rethrown with the path of the offending node so a
// failing template names the exact composite step.

#include <memory>
#include <string>
#include <vector>

#include "dblift/htree.hpp"
#include "dblift/model.hpp"

namespace dblift {

template <DoubleModel M>
struct PastingExpr {
  enum class Kind { Leaf, VComp, HComp, Constraint };
  Kind kind = Kind::Leaf;
  typename M::Sq sq;                        // Leaf
  std::vector<PastingExpr> kids;            // VComp, HComp (diagram order)
  std::shared_ptr<const HTree<M>> cs, ct;   // Constraint

  static PastingExpr leaf(typename M::Sq s) {
    PastingExpr e;
    e.kind = Kind::Leaf;
    e.sq = std::move(s);
    return e;
  }
  // top-to-bottom
  static PastingExpr vcomp(std::vector<PastingExpr> ks) {
    PastingExpr e;
    e.kind = Kind::VComp;
    e.kids = std::move(ks);
    return e;
  }
  // left-to-right
  static PastingExpr hcomp(std::vector<PastingExpr> ks) {
    PastingExpr e;
    e.kind = Kind::HComp;
    e.kids = std::move(ks);
    return e;
  }
  static PastingExpr constraint(HTree<M> s, HTree<M> t) {
    PastingExpr e;
    e.kind = Kind::Constraint;
    e.cs = std::make_shared<const HTree<M>>(std::move(s));
    e.ct = std::make_shared<const HTree<M>>(std::move(t));
    return e;
  }
};

namespace detail {

template <DoubleModel M>
typename M::Sq eval_pasting_at(const M& m, const PastingExpr<M>& e,
                               const std::string& path) {
  try {
    switch (e.kind) {
      case PastingExpr<M>::Kind::Leaf:
        return e.sq;
      case PastingExpr<M>::Kind::Constraint:
        return canonical_constraint(m, *e.cs, *e.ct);
      case PastingExpr<M>::Kind::VComp: {
        if (e.kids.empty()) throw FrameMismatch("vcomp node with no factors");
        auto acc = eval_pasting_at(m, e.kids[0], path + ".v0");
        for (std::size_t i = 1; i < e.kids.size(); ++i) {
          std::string at = path + ".v" + std::to_string(i);
          auto nxt = eval_pasting_at(m, e.kids[i], at);
          if (!(acc.bottom == nxt.top))
            throw FrameMismatch("vcomp: bottom " + m.hcell_str(acc.bottom) +
                                " vs top " + m.hcell_str(nxt.top) +
                                " at node " + at);
          acc = m.sq_vcomp(acc, nxt);
        }
        return acc;
      }
      default: {
        if (e.kids.empty()) throw FrameMismatch("hcomp node with no factors");
        auto acc = eval_pasting_at(m, e.kids[0], path + ".h0");
        for (std::size_t i = 1; i < e.kids.size(); ++i) {
          std::string at = path + ".h" + std::to_string(i);
          auto nxt = eval_pasting_at(m, e.kids[i], at);
          if (!(acc.right == nxt.left))
            throw FrameMismatch("hcomp: right " + m.vmor_str(acc.right) +
                                " vs left " + m.vmor_str(nxt.left) +
                                " at node " + at);
          acc = m.sq_hcomp(acc, nxt);
        }
        return acc;
      }
    }
  } catch (const FrameMismatch& ex) {
    // tag once, at the innermost failing node
    std::string msg = ex.what();
    const std::string pre = "frame mismatch: ";
    if (msg.rfind(pre, 0) == 0) msg = msg.substr(pre.size());
    if (msg.find(" at node ") == std::string::npos)
      throw FrameMismatch(msg + " at node " + path);
    throw;
  }
}

}  // namespace detail

template <DoubleModel M>
typename M::Sq eval_pasting(const M& m, const PastingExpr<M>& e) {
  return detail::eval_pasting_at(m, e, "root");
}

}  // namespace dblift
