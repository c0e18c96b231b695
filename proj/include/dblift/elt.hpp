#pragma once

// Element values for finite-set models.  An Elt is either an integer
// atom or an ordered pair of Elts; pairs are how product sets encode
// their elements, so tensor constructions stay decidable and every
// structural bijection (reassociation, swap, projection) is a plain
// function on values.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dblift {

class Elt {
 public:
  Elt() = default;

  static Elt atom(int v) {
    Elt e;
    e.atom_ = v;
    return e;
  }

  static Elt pair(Elt a, Elt b) {
    Elt e;
    e.kids_ = std::make_shared<const std::pair<Elt, Elt>>(std::move(a),
                                                          std::move(b));
    return e;
  }

  bool is_atom() const { return kids_ == nullptr; }
  bool is_pair() const { return kids_ != nullptr; }

  int value() const {
    assert(is_atom());
    return atom_;
  }

  const Elt& first() const {
    assert(is_pair());
    return kids_->first;
  }

  const Elt& second() const {
    assert(is_pair());
    return kids_->second;
  }

  // Total order: atoms before pairs, atoms by value, pairs lexicographic.
  friend std::strong_ordering operator<=>(const Elt& a, const Elt& b) {
    if (a.is_atom() != b.is_atom())
      return a.is_atom() ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    if (a.is_atom()) return a.atom_ <=> b.atom_;
    if (auto c = a.first() <=> b.first(); c != 0) return c;
    return a.second() <=> b.second();
  }

  friend bool operator==(const Elt& a, const Elt& b) {
    return (a <=> b) == 0;
  }

  friend bool operator<(const Elt& a, const Elt& b) { return (a <=> b) < 0; }

  std::string str() const {
    if (is_atom()) return std::to_string(atom_);
    return "(" + first().str() + "," + second().str() + ")";
  }

 private:
  int atom_ = 0;
  std::shared_ptr<const std::pair<Elt, Elt>> kids_;
};

// A finite set is a sorted, duplicate-free vector of Elts.
using FinSet = std::vector<Elt>;

inline FinSet make_set(std::vector<Elt> elts) {
  std::sort(elts.begin(), elts.end());
  elts.erase(std::unique(elts.begin(), elts.end()), elts.end());
  return elts;
}

inline FinSet atom_range(int n) {
  FinSet s;
  s.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.push_back(Elt::atom(i));
  return s;
}

inline bool set_contains(const FinSet& s, const Elt& e) {
  return std::binary_search(s.begin(), s.end(), e);
}

// Index of e in s, or -1 when absent.
inline int set_index(const FinSet& s, const Elt& e) {
  auto it = std::lower_bound(s.begin(), s.end(), e);
  if (it == s.end() || !(*it == e)) return -1;
  return static_cast<int>(it - s.begin());
}

// Outer-then-inner iteration emits pairs already in sorted order.
inline FinSet set_product(const FinSet& a, const FinSet& b) {
  FinSet p;
  p.reserve(a.size() * b.size());
  for (const Elt& x : a)
    for (const Elt& y : b) p.push_back(Elt::pair(x, y));
  return p;
}

inline std::string set_str(const FinSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].str();
  }
  return out + "}";
}

// A function between finite sets, tabulated by target indices:
// map[i] is the index in tgt of the image of src[i].
struct FnTable {
  FinSet src;
  FinSet tgt;
  std::vector<int> map;

  static FnTable identity(FinSet s) {
    FnTable f;
    f.map.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) f.map[i] = static_cast<int>(i);
    f.src = s;
    f.tgt = std::move(s);
    return f;
  }

  const Elt& operator()(const Elt& e) const {
    int i = set_index(src, e);
    assert(i >= 0);
    return tgt[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])];
  }

  friend std::strong_ordering operator<=>(const FnTable&,
                                          const FnTable&) = default;
  friend bool operator==(const FnTable&, const FnTable&) = default;
};

// g after f, in diagram order: (f |> g)(x) = g(f(x)).
inline FnTable fn_compose(const FnTable& f, const FnTable& g) {
  assert(f.tgt == g.src);
  FnTable h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.map.resize(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    h.map[i] = g.map[static_cast<std::size_t>(f.map[i])];
  return h;
}

inline bool fn_is_identity(const FnTable& f) {
  if (!(f.src == f.tgt)) return false;
  for (std::size_t i = 0; i < f.map.size(); ++i)
    if (f.map[i] != static_cast<int>(i)) return false;
  return true;
}

inline bool fn_is_bijection(const FnTable& f) {
  if (f.src.size() != f.tgt.size()) return false;
  std::vector<bool> hit(f.tgt.size(), false);
  for (int i : f.map) {
    if (hit[static_cast<std::size_t>(i)]) return false;
    hit[static_cast<std::size_t>(i)] = true;
  }
  return true;
}

inline std::optional<FnTable> fn_inverse(const FnTable& f) {
  if (!fn_is_bijection(f)) return std::nullopt;
  FnTable g;
  g.src = f.tgt;
  g.tgt = f.src;
  g.map.resize(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    g.map[static_cast<std::size_t>(f.map[i])] = static_cast<int>(i);
  return g;
}

// Every function a -> b, in odometer order over target indices.  The
// count is |b|^|a|, so callers bound their arguments.
inline std::vector<FnTable> all_fns(const FinSet& a, const FinSet& b) {
  std::vector<FnTable> out;
  if (a.empty()) {
    out.push_back(FnTable{a, b, {}});
    return out;
  }
  if (b.empty()) return out;
  std::vector<int> odo(a.size(), 0);
  for (;;) {
    out.push_back(FnTable{a, b, odo});
    std::size_t i = 0;
    while (i < odo.size()) {
      if (++odo[i] < static_cast<int>(b.size())) break;
      odo[i] = 0;
      ++i;
    }
    if (i == odo.size()) break;
  }
  return out;
}

inline std::string fn_str(const FnTable& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.map.size(); ++i) {
    if (i) out += ",";
    out += f.src[i].str() + ">" +
           f.tgt[static_cast<std::size_t>(f.map[i])].str();
  }
  return out + "]" + set_str(f.src) + "->" + set_str(f.tgt);
}

// Function built from an Elt-level rule; the rule must land in tgt.
template <class Fn>
FnTable fn_from_rule(FinSet src, FinSet tgt, Fn&& rule) {
  FnTable f;
  f.map.reserve(src.size());
  for (const Elt& e : src) {
    int i = set_index(tgt, rule(e));
    assert(i >= 0);
    f.map.push_back(i);
  }
  f.src = std::move(src);
  f.tgt = std::move(tgt);
  return f;
}

}  // namespace dblift
