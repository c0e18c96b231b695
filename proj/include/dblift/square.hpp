#pragma once

// The universal value every verification compares: a 2-morphism with
// its full frame.  The witness payload is model-specific; equality of
// squares is frame equality plus witness equality.

#include <compare>
#include <tuple>

namespace dblift {

template <class Obj, class VMor, class HCell, class Wit>
struct BasicSquare {
  HCell top;
  VMor left;
  VMor right;
  HCell bottom;
  Wit wit;

  friend bool operator==(const BasicSquare& a, const BasicSquare& b) {
    return std::tie(a.top, a.left, a.right, a.bottom, a.wit) ==
           std::tie(b.top, b.left, b.right, b.bottom, b.wit);
  }
  friend bool operator<(const BasicSquare& a, const BasicSquare& b) {
    return std::tie(a.top, a.left, a.right, a.bottom, a.wit) <
           std::tie(b.top, b.left, b.right, b.bottom, b.wit);
  }
};

// Witness for locally posetal models: there is at most one square per
// boundary, so the witness carries no information.
struct UnitWit {
  friend bool operator==(const UnitWit&, const UnitWit&) { return true; }
  friend bool operator<(const UnitWit&, const UnitWit&) { return false; }
};

}  // namespace dblift
