#pragma once

// Axiom verifier for double-category models.  Per axiom: when the whole
// configuration population fits the budget the check is exhaustive, in
// enumeration order (small frames first, so a failing report carries a
// small counterexample); otherwise instances are drawn from a per-axiom
// seeded stream.  Failures are recorded, never thrown.

#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblift/model.hpp"
#include "dblift/report.hpp"
#include "dblift/rng.hpp"

namespace dblift {

inline long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<long long>::max() / b)
    return std::numeric_limits<long long>::max();
  return a * b;
}

inline long long sat_add(long long a, long long b) {
  if (a > std::numeric_limits<long long>::max() - b)
    return std::numeric_limits<long long>::max();
  return a + b;
}

// Memoizes the model's bounded enumerations; sampling re-visits the
// same frames constantly.
template <DoubleModel M>
class FamilyCache {
 public:
  explicit FamilyCache(const M& m) : m_(m), objs_(m.objects()) {}

  const std::vector<typename M::Obj>& objects() const { return objs_; }

  const std::vector<typename M::VMor>& vmors(const typename M::Obj& a,
                                             const typename M::Obj& b) const {
    auto key = std::make_pair(a, b);
    auto it = vfam_.find(key);
    if (it == vfam_.end()) it = vfam_.emplace(key, m_.vmors(a, b)).first;
    return it->second;
  }

  const std::vector<typename M::HCell>& hcells(const typename M::Obj& a,
                                               const typename M::Obj& b) const {
    auto key = std::make_pair(a, b);
    auto it = hfam_.find(key);
    if (it == hfam_.end()) it = hfam_.emplace(key, m_.hcells(a, b)).first;
    return it->second;
  }

 private:
  const M& m_;
  std::vector<typename M::Obj> objs_;
  mutable std::map<std::pair<typename M::Obj, typename M::Obj>,
                   std::vector<typename M::VMor>>
      vfam_;
  mutable std::map<std::pair<typename M::Obj, typename M::Obj>,
                   std::vector<typename M::HCell>>
      hfam_;
};

// Seeded generator of cells and composable square configurations.
// Random search with degenerate fallbacks: a draw always succeeds, so
// sampled axiom runs always reach their instance count.
template <DoubleModel M>
class Sampler {
 public:
  Sampler(const M& m, const FamilyCache<M>& fam, Rng rng)
      : m_(m), fam_(fam), rng_(rng) {}

  const typename M::Obj& obj() {
    const auto& os = fam_.objects();
    return os[static_cast<std::size_t>(rng_.below(os.size()))];
  }

  typename M::VMor vmor() {
    for (int t = 0; t < 64; ++t) {
      const auto& fs = fam_.vmors(obj(), obj());
      if (!fs.empty()) return pick(fs);
    }
    return m_.vid(fam_.objects().front());
  }

  typename M::VMor vmor_from(const typename M::Obj& a) {
    for (int t = 0; t < 64; ++t) {
      const auto& fs = fam_.vmors(a, obj());
      if (!fs.empty()) return pick(fs);
    }
    return m_.vid(a);
  }

  typename M::HCell hcell() {
    for (int t = 0; t < 64; ++t) {
      const auto& hs = fam_.hcells(obj(), obj());
      if (!hs.empty()) return pick(hs);
    }
    return m_.hunit(fam_.objects().front());
  }

  typename M::HCell hcell_from(const typename M::Obj& a) {
    for (int t = 0; t < 64; ++t) {
      const auto& hs = fam_.hcells(a, obj());
      if (!hs.empty()) return pick(hs);
    }
    return m_.hunit(a);
  }

  typename M::Sq square() {
    for (int t = 0; t < 100; ++t) {
      auto top = hcell();
      auto f = vmor_from(m_.hsrc(top));
      auto g = vmor_from(m_.htgt(top));
      const auto& bots = fam_.hcells(m_.vtgt(f), m_.vtgt(g));
      if (bots.empty()) continue;
      auto ss = m_.squares(top, f, g, pick(bots));
      if (!ss.empty()) return pick(ss);
    }
    return rng_.below(2) ? m_.sq_unit(vmor()) : m_.sq_id(hcell());
  }

  typename M::Sq square_with_top(const typename M::HCell& top) {
    for (int t = 0; t < 100; ++t) {
      auto f = vmor_from(m_.hsrc(top));
      auto g = vmor_from(m_.htgt(top));
      const auto& bots = fam_.hcells(m_.vtgt(f), m_.vtgt(g));
      if (bots.empty()) continue;
      auto ss = m_.squares(top, f, g, pick(bots));
      if (!ss.empty()) return pick(ss);
    }
    return m_.sq_id(top);
  }

  // next square below: top must equal the given square's bottom
  typename M::Sq square_below(const typename M::Sq& a) {
    return square_with_top(a.bottom);
  }

  // next square to the right: left leg must equal the given right leg
  typename M::Sq square_right(const typename M::Sq& a) {
    for (int t = 0; t < 100; ++t) {
      auto top = hcell_from(m_.htgt(a.top));
      auto g = vmor_from(m_.htgt(top));
      const auto& bots = fam_.hcells(m_.htgt(a.bottom), m_.vtgt(g));
      if (bots.empty()) continue;
      auto ss = m_.squares(top, a.right, g, pick(bots));
      if (!ss.empty()) return pick(ss);
    }
    return m_.sq_unit(a.right);
  }

  // square with both the top and the left leg prescribed
  std::optional<typename M::Sq> square_with_top_left(
      const typename M::HCell& top, const typename M::VMor& left) {
    for (int t = 0; t < 100; ++t) {
      auto g = vmor_from(m_.htgt(top));
      const auto& bots = fam_.hcells(m_.vtgt(left), m_.vtgt(g));
      if (bots.empty()) continue;
      auto ss = m_.squares(top, left, g, pick(bots));
      if (!ss.empty()) return pick(ss);
    }
    return std::nullopt;
  }

  Rng& rng() { return rng_; }

 private:
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(rng_.below(v.size()))];
  }

  const M& m_;
  const FamilyCache<M>& fam_;
  Rng rng_;
};

namespace detail {

struct AxiomTally {
  CheckItem it;
  explicit AxiomTally(std::string name, std::string citation) {
    it.name = std::move(name);
    it.citation = std::move(citation);
  }
  // Records one instance; on the first failure captures the rendering.
  template <class CexFn>
  bool note(bool cond, CexFn&& cex) {
    ++it.instances;
    if (!cond && it.pass) {
      it.pass = false;
      it.counterexample = cex();
    }
    return it.pass;
  }
};

// A defective structure may emit ill-framed cells; any evaluation
// error inside an axiom instance counts as a failure of the instance.
template <class Body>
bool eval_axiom(Body&& body) {
  try {
    return body();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace detail

template <DoubleModel M>
Report verify_double_category(const M& m, std::uint64_t seed,
                              long long budget = 5000) {
  Report rep;
  rep.component = "double_category";
  rep.model = m.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<M> fam(m);
  const auto& objs = fam.objects();
  auto nv = [&](const typename M::Obj& a, const typename M::Obj& b) {
    return static_cast<long long>(fam.vmors(a, b).size());
  };
  auto nh = [&](const typename M::Obj& a, const typename M::Obj& b) {
    return static_cast<long long>(fam.hcells(a, b).size());
  };
  auto sampler = [&](const std::string& axiom) {
    return Sampler<M>(m, fam, Rng::for_axiom(seed, axiom));
  };

  // object category: units
  {
    detail::AxiomTally t("object category: unit laws", "category axioms");
    long long pop = 0;
    for (const auto& a : objs)
      for (const auto& b : objs) pop = sat_add(pop, nv(a, b));
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& f : fam.vmors(a, b)) {
              bool ok = m.vcomp(m.vid(a), f) == f && m.vcomp(f, m.vid(b)) == f;
              if (!t.note(ok, [&] { return "f=" + m.vmor_str(f); })) return;
            }
      }();
    } else {
      t.it.mode = "sampled";
      auto s = sampler(t.it.name);
      for (long long i = 0; i < budget && t.it.pass; ++i) {
        auto f = s.vmor();
        bool ok = m.vcomp(m.vid(m.vsrc(f)), f) == f &&
                  m.vcomp(f, m.vid(m.vtgt(f))) == f;
        t.note(ok, [&] { return "f=" + m.vmor_str(f); });
      }
    }
    rep.add(t.it);
  }

  // object category: associativity
  {
    detail::AxiomTally t("object category: associativity", "category axioms");
    long long pop = 0;
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& c : objs)
          for (const auto& d : objs)
            pop = sat_add(pop, sat_mul(nv(a, b), sat_mul(nv(b, c), nv(c, d))));
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs)
              for (const auto& d : objs)
                for (const auto& f : fam.vmors(a, b))
                  for (const auto& g : fam.vmors(b, c))
                    for (const auto& h : fam.vmors(c, d)) {
                      bool ok = m.vcomp(m.vcomp(f, g), h) ==
                                m.vcomp(f, m.vcomp(g, h));
                      if (!t.note(ok, [&] {
                            return "f=" + m.vmor_str(f) + " g=" +
                                   m.vmor_str(g) + " h=" + m.vmor_str(h);
                          }))
                        return;
                    }
      }();
    } else {
      t.it.mode = "sampled";
      auto s = sampler(t.it.name);
      for (long long i = 0; i < budget && t.it.pass; ++i) {
        auto f = s.vmor();
        auto g = s.vmor_from(m.vtgt(f));
        auto h = s.vmor_from(m.vtgt(g));
        bool ok = m.vcomp(m.vcomp(f, g), h) == m.vcomp(f, m.vcomp(g, h));
        t.note(ok, [&] {
          return "f=" + m.vmor_str(f) + " g=" + m.vmor_str(g) + " h=" +
                 m.vmor_str(h);
        });
      }
    }
    rep.add(t.it);
  }

  // squares form a category under vertical composition: unit laws
  {
    detail::AxiomTally t("square category: unit laws", "category axioms");
    t.it.mode = "sampled";
    auto s = sampler(t.it.name);
    for (long long i = 0; i < budget && t.it.pass; ++i) {
      auto a = s.square();
      bool ok = m.sq_vcomp(m.sq_id(a.top), a) == a &&
                m.sq_vcomp(a, m.sq_id(a.bottom)) == a;
      t.note(ok, [&] { return "a=" + m.sq_str(a); });
    }
    rep.add(t.it);
  }

  // squares form a category under vertical composition: associativity
  {
    detail::AxiomTally t("square category: associativity", "category axioms");
    t.it.mode = "sampled";
    auto s = sampler(t.it.name);
    for (long long i = 0; i < budget && t.it.pass; ++i) {
      auto a = s.square();
      auto b = s.square_below(a);
      auto c = s.square_below(b);
      bool ok = m.sq_vcomp(m.sq_vcomp(a, b), c) ==
                m.sq_vcomp(a, m.sq_vcomp(b, c));
      t.note(ok, [&] {
        return "a=" + m.sq_str(a) + " b=" + m.sq_str(b) + " c=" + m.sq_str(c);
      });
    }
    rep.add(t.it);
  }

  // source/target of composites match the composed boundaries
  {
    detail::AxiomTally t("frame functors: boundaries of composites",
                         "source/target strictness");
    t.it.mode = "sampled";
    auto s = sampler(t.it.name);
    for (long long i = 0; i < budget && t.it.pass; ++i) {
      auto a = s.square();
      auto b = s.square_below(a);
      auto v = m.sq_vcomp(a, b);
      bool ok = v.top == a.top && v.bottom == b.bottom &&
                v.left == m.vcomp(a.left, b.left) &&
                v.right == m.vcomp(a.right, b.right);
      auto c = s.square_right(a);
      auto h = m.sq_hcomp(a, c);
      ok = ok && h.top == m.hcomp(a.top, c.top) &&
           h.bottom == m.hcomp(a.bottom, c.bottom) && h.left == a.left &&
           h.right == c.right;
      t.note(ok, [&] { return "a=" + m.sq_str(a); });
    }
    rep.add(t.it);
  }

  // unit functor: identities (the unit square of an identity is the
  // identity square of the unit cell)
  {
    detail::AxiomTally t("unit functor: identities", "unit functoriality");
    for (const auto& a : objs) {
      bool ok = m.sq_unit(m.vid(a)) == m.sq_id(m.hunit(a));
      if (!t.note(ok, [&] { return "A=" + m.obj_str(a); })) break;
    }
    rep.add(t.it);
  }

  // unit functor: composites
  {
    detail::AxiomTally t("unit functor: composites", "unit functoriality");
    long long pop = 0;
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& c : objs)
          pop = sat_add(pop, sat_mul(nv(a, b), nv(b, c)));
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs)
              for (const auto& f : fam.vmors(a, b))
                for (const auto& g : fam.vmors(b, c)) {
                  bool ok = m.sq_unit(m.vcomp(f, g)) ==
                            m.sq_vcomp(m.sq_unit(f), m.sq_unit(g));
                  if (!t.note(ok, [&] {
                        return "f=" + m.vmor_str(f) + " g=" + m.vmor_str(g);
                      }))
                    return;
                }
      }();
    } else {
      t.it.mode = "sampled";
      auto s = sampler(t.it.name);
      for (long long i = 0; i < budget && t.it.pass; ++i) {
        auto f = s.vmor();
        auto g = s.vmor_from(m.vtgt(f));
        bool ok =
            m.sq_unit(m.vcomp(f, g)) == m.sq_vcomp(m.sq_unit(f), m.sq_unit(g));
        t.note(ok,
               [&] { return "f=" + m.vmor_str(f) + " g=" + m.vmor_str(g); });
      }
    }
    rep.add(t.it);
  }

  // horizontal composition preserves identity squares
  {
    detail::AxiomTally t("horizontal composition: identities",
                         "functoriality of horizontal composition");
    long long pop = 0;
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& c : objs)
          pop = sat_add(pop, sat_mul(nh(a, b), nh(b, c)));
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs)
              for (const auto& hm : fam.hcells(a, b))
                for (const auto& hn : fam.hcells(b, c)) {
                  bool ok = m.sq_hcomp(m.sq_id(hm), m.sq_id(hn)) ==
                            m.sq_id(m.hcomp(hm, hn));
                  if (!t.note(ok, [&] {
                        return "M=" + m.hcell_str(hm) + " N=" +
                               m.hcell_str(hn);
                      }))
                    return;
                }
      }();
    } else {
      t.it.mode = "sampled";
      auto s = sampler(t.it.name);
      for (long long i = 0; i < budget && t.it.pass; ++i) {
        auto hm = s.hcell();
        auto hn = s.hcell_from(m.htgt(hm));
        bool ok =
            m.sq_hcomp(m.sq_id(hm), m.sq_id(hn)) == m.sq_id(m.hcomp(hm, hn));
        t.note(ok, [&] {
          return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn);
        });
      }
    }
    rep.add(t.it);
  }

  // interchange
  {
    detail::AxiomTally t("interchange", "interchange law");
    t.it.mode = "sampled";
    auto s = sampler(t.it.name);
    for (long long i = 0; i < budget && t.it.pass; ++i) {
      auto a = s.square();
      auto b = s.square_right(a);
      auto c = s.square_below(a);
      auto d = s.square_with_top_left(b.bottom, c.right);
      if (!d) {
        c = m.sq_id(a.bottom);
        d = m.sq_id(b.bottom);
      }
      bool ok = m.sq_hcomp(m.sq_vcomp(a, c), m.sq_vcomp(b, *d)) ==
                m.sq_vcomp(m.sq_hcomp(a, b), m.sq_hcomp(c, *d));
      t.note(ok, [&] {
        return "a=" + m.sq_str(a) + " b=" + m.sq_str(b) + " c=" +
               m.sq_str(c) + " d=" + m.sq_str(*d);
      });
    }
    rep.add(t.it);
  }

  // associativity constraint: globular isomorphism with correct frame
  {
    detail::AxiomTally t("associativity constraint: globular isomorphism",
                         "constraint invertibility");
    long long pop = 0;
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& c : objs)
          for (const auto& d : objs)
            pop = sat_add(pop, sat_mul(nh(a, b), sat_mul(nh(b, c), nh(c, d))));
    auto check = [&](const typename M::HCell& hm, const typename M::HCell& hn,
                     const typename M::HCell& hp) {
      auto x = m.sq_assoc(hm, hn, hp);
      if (!(x.top == m.hcomp(m.hcomp(hm, hn), hp)) ||
          !(x.bottom == m.hcomp(hm, m.hcomp(hn, hp))))
        return false;
      if (!is_globular(m, x)) return false;
      auto xi = m.sq_invert(x);
      if (!xi) return false;
      return m.sq_vcomp(x, *xi) == m.sq_id(x.top) &&
             m.sq_vcomp(*xi, x) == m.sq_id(x.bottom);
    };
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs)
              for (const auto& d : objs)
                for (const auto& hm : fam.hcells(a, b))
                  for (const auto& hn : fam.hcells(b, c))
                    for (const auto& hp : fam.hcells(c, d)) {
                      if (!t.note(check(hm, hn, hp), [&] {
                            return "M=" + m.hcell_str(hm) + " N=" +
                                   m.hcell_str(hn) + " P=" + m.hcell_str(hp);
                          }))
                        return;
                    }
      }();
    } else {
      t.it.mode = "sampled";
      auto s = sampler(t.it.name);
      for (long long i = 0; i < budget && t.it.pass; ++i) {
        auto hm = s.hcell();
        auto hn = s.hcell_from(m.htgt(hm));
        auto hp = s.hcell_from(m.htgt(hn));
        t.note(check(hm, hn, hp), [&] {
          return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn) + " P=" +
                 m.hcell_str(hp);
        });
      }
    }
    rep.add(t.it);
  }

  // unit constraints: globular isomorphisms with correct frames
  {
    detail::AxiomTally t("unit constraints: globular isomorphisms",
                         "constraint invertibility");
    long long pop = 0;
    for (const auto& a : objs)
      for (const auto& b : objs) pop = sat_add(pop, nh(a, b));
    auto check = [&](const typename M::HCell& hm) {
      auto lu = m.sq_unit_l(hm);
      auto ru = m.sq_unit_r(hm);
      if (!(lu.top == m.hcomp(m.hunit(m.hsrc(hm)), hm)) || !(lu.bottom == hm))
        return false;
      if (!(ru.top == m.hcomp(hm, m.hunit(m.htgt(hm)))) || !(ru.bottom == hm))
        return false;
      if (!is_globular(m, lu) || !is_globular(m, ru)) return false;
      auto li = m.sq_invert(lu);
      auto ri = m.sq_invert(ru);
      if (!li || !ri) return false;
      return m.sq_vcomp(lu, *li) == m.sq_id(lu.top) &&
             m.sq_vcomp(*li, lu) == m.sq_id(hm) &&
             m.sq_vcomp(ru, *ri) == m.sq_id(ru.top) &&
             m.sq_vcomp(*ri, ru) == m.sq_id(hm);
    };
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& hm : fam.hcells(a, b)) {
              if (!t.note(check(hm), [&] { return "M=" + m.hcell_str(hm); }))
                return;
            }
      }();
    } else {
      t.it.mode = "sampled";
      auto s = sampler(t.it.name);
      for (long long i = 0; i < budget && t.it.pass; ++i) {
        auto hm = s.hcell();
        t.note(check(hm), [&] { return "M=" + m.hcell_str(hm); });
      }
    }
    rep.add(t.it);
  }

  // naturality of the associativity constraint
  {
    detail::AxiomTally t("associativity constraint: naturality",
                         "naturality of constraints");
    t.it.mode = "sampled";
    auto s = sampler(t.it.name);
    for (long long i = 0; i < budget && t.it.pass; ++i) {
      auto a = s.square();
      auto b = s.square_right(a);
      auto c = s.square_right(b);
      auto lhs = m.sq_vcomp(m.sq_assoc(a.top, b.top, c.top),
                            m.sq_hcomp(a, m.sq_hcomp(b, c)));
      auto rhs = m.sq_vcomp(m.sq_hcomp(m.sq_hcomp(a, b), c),
                            m.sq_assoc(a.bottom, b.bottom, c.bottom));
      t.note(lhs == rhs, [&] {
        return "a=" + m.sq_str(a) + " b=" + m.sq_str(b) + " c=" + m.sq_str(c);
      });
    }
    rep.add(t.it);
  }

  // naturality of the unit constraints
  {
    detail::AxiomTally t("unit constraints: naturality",
                         "naturality of constraints");
    t.it.mode = "sampled";
    auto s = sampler(t.it.name);
    for (long long i = 0; i < budget && t.it.pass; ++i) {
      auto a = s.square();
      auto l_lhs = m.sq_vcomp(m.sq_hcomp(m.sq_unit(a.left), a),
                              m.sq_unit_l(a.bottom));
      auto l_rhs = m.sq_vcomp(m.sq_unit_l(a.top), a);
      auto r_lhs = m.sq_vcomp(m.sq_hcomp(a, m.sq_unit(a.right)),
                              m.sq_unit_r(a.bottom));
      auto r_rhs = m.sq_vcomp(m.sq_unit_r(a.top), a);
      t.note(l_lhs == l_rhs && r_lhs == r_rhs,
             [&] { return "a=" + m.sq_str(a); });
    }
    rep.add(t.it);
  }

  // pentagon
  {
    detail::AxiomTally t("pentagon", "Mac Lane pentagon");
    long long pop = 0;
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& c : objs)
          for (const auto& d : objs)
            for (const auto& e : objs)
              pop = sat_add(
                  pop, sat_mul(sat_mul(nh(a, b), nh(b, c)),
                               sat_mul(nh(c, d), nh(d, e))));
    auto check = [&](const typename M::HCell& hm, const typename M::HCell& hn,
                     const typename M::HCell& hp, const typename M::HCell& hq) {
      auto two = m.sq_vcomp(m.sq_assoc(m.hcomp(hm, hn), hp, hq),
                            m.sq_assoc(hm, hn, m.hcomp(hp, hq)));
      auto three = m.sq_vcomp(
          m.sq_vcomp(m.sq_hcomp(m.sq_assoc(hm, hn, hp), m.sq_id(hq)),
                     m.sq_assoc(hm, m.hcomp(hn, hp), hq)),
          m.sq_hcomp(m.sq_id(hm), m.sq_assoc(hn, hp, hq)));
      return two == three;
    };
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs)
              for (const auto& d : objs)
                for (const auto& e : objs)
                  for (const auto& hm : fam.hcells(a, b))
                    for (const auto& hn : fam.hcells(b, c))
                      for (const auto& hp : fam.hcells(c, d))
                        for (const auto& hq : fam.hcells(d, e)) {
                          if (!t.note(check(hm, hn, hp, hq), [&] {
                                return "M=" + m.hcell_str(hm) + " N=" +
                                       m.hcell_str(hn) + " P=" +
                                       m.hcell_str(hp) + " Q=" +
                                       m.hcell_str(hq);
                              }))
                            return;
                        }
      }();
    } else {
      t.it.mode = "sampled";
      auto s = sampler(t.it.name);
      for (long long i = 0; i < budget && t.it.pass; ++i) {
        auto hm = s.hcell();
        auto hn = s.hcell_from(m.htgt(hm));
        auto hp = s.hcell_from(m.htgt(hn));
        auto hq = s.hcell_from(m.htgt(hp));
        t.note(check(hm, hn, hp, hq), [&] {
          return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn) + " P=" +
                 m.hcell_str(hp) + " Q=" + m.hcell_str(hq);
        });
      }
    }
    rep.add(t.it);
  }

  // triangle
  {
    detail::AxiomTally t("triangle", "Mac Lane triangle");
    long long pop = 0;
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& c : objs)
          pop = sat_add(pop, sat_mul(nh(a, b), nh(b, c)));
    auto check = [&](const typename M::HCell& hm, const typename M::HCell& hn) {
      auto via = m.sq_vcomp(m.sq_assoc(hm, m.hunit(m.htgt(hm)), hn),
                            m.sq_hcomp(m.sq_id(hm), m.sq_unit_l(hn)));
      auto direct = m.sq_hcomp(m.sq_unit_r(hm), m.sq_id(hn));
      return via == direct;
    };
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs)
              for (const auto& hm : fam.hcells(a, b))
                for (const auto& hn : fam.hcells(b, c)) {
                  if (!t.note(check(hm, hn), [&] {
                        return "M=" + m.hcell_str(hm) + " N=" +
                               m.hcell_str(hn);
                      }))
                    return;
                }
      }();
    } else {
      t.it.mode = "sampled";
      auto s = sampler(t.it.name);
      for (long long i = 0; i < budget && t.it.pass; ++i) {
        auto hm = s.hcell();
        auto hn = s.hcell_from(m.htgt(hm));
        t.note(check(hm, hn), [&] {
          return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn);
        });
      }
    }
    rep.add(t.it);
  }

  return rep;
}

}  // namespace dblift
