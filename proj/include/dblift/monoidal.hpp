#pragma once

// Monoidal, braided, and symmetric structure on a double-category
// model: a tensor acting on objects, vertical morphisms, cells, and
// squares, strict in the vertical direction and pseudo in the
// horizontal one.  The horizontal comparison cells are the
// interchanger
//
//   x(M1, N1, M2, N2) : hcomp(M1 (x) N1, M2 (x) N2)
//                         -> hcomp(M1, M2) (x) hcomp(N1, N2)
//
// and the unit comparison u(A, B) : U_{A (x) B} -> U_A (x) U_B.
// Structure constraints live at two levels: vertical morphisms
// assoc0 / lunit0 / runit0 / braid0 between tensor objects, and
// globular-legged squares assoc1 / lunit1 / runit1 / braid1 between
// tensor cells, framed by the corresponding level-zero constraints.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblift/check.hpp"
#include "dblift/companion.hpp"
#include "dblift/functor.hpp"
#include "dblift/model.hpp"
#include "dblift/product.hpp"
#include "dblift/report.hpp"
#include "dblift/rng.hpp"

namespace dblift {

template <class T, class M>
concept MonoidalStructureOf =
    DoubleModel<M> &&
    requires(const T& t, const typename M::Obj& a, const typename M::VMor& f,
             const typename M::HCell& h, const typename M::Sq& s) {
      { t.unit_obj() } -> std::convertible_to<typename M::Obj>;
      { t.ten_obj(a, a) } -> std::convertible_to<typename M::Obj>;
      { t.ten_v(f, f) } -> std::convertible_to<typename M::VMor>;
      { t.ten_h(h, h) } -> std::convertible_to<typename M::HCell>;
      { t.ten_sq(s, s) } -> std::convertible_to<typename M::Sq>;
      { t.assoc0(a, a, a) } -> std::convertible_to<typename M::VMor>;
      { t.lunit0(a) } -> std::convertible_to<typename M::VMor>;
      { t.runit0(a) } -> std::convertible_to<typename M::VMor>;
      { t.assoc1(h, h, h) } -> std::convertible_to<typename M::Sq>;
      { t.lunit1(h) } -> std::convertible_to<typename M::Sq>;
      { t.runit1(h) } -> std::convertible_to<typename M::Sq>;
      { t.interchanger(h, h, h, h) } -> std::convertible_to<typename M::Sq>;
      { t.unit_split(a, a) } -> std::convertible_to<typename M::Sq>;
    };

template <class T, class M>
concept BraidedStructureOf =
    MonoidalStructureOf<T, M> &&
    requires(const T& t, const typename M::Obj& a, const typename M::HCell& h) {
      { t.braid0(a, a) } -> std::convertible_to<typename M::VMor>;
      { t.braid1(h, h) } -> std::convertible_to<typename M::Sq>;
    };

// The tensor as a structure map out of the product model; its
// comparison cells are the interchanger and the unit comparison.
template <DoubleModel M, class T>
  requires MonoidalStructureOf<T, M>
struct TensorFunctor {
  const M& cod;
  const T& st;

  using P = ProdModel<M, M>;

  typename M::Obj obj(const typename P::Obj& a) const {
    return st.ten_obj(a.first, a.second);
  }
  typename M::VMor v(const typename P::VMor& f) const {
    return st.ten_v(f.first, f.second);
  }
  typename M::HCell h(const typename P::HCell& c) const {
    return st.ten_h(c.first, c.second);
  }
  typename M::Sq sq(const typename P::Sq& s) const {
    return st.ten_sq(s.wit.first, s.wit.second);
  }
  typename M::Sq comp(const typename P::HCell& a,
                      const typename P::HCell& b) const {
    return st.interchanger(a.first, a.second, b.first, b.second);
  }
  typename M::Sq unit(const typename P::Obj& a) const {
    return st.unit_split(a.first, a.second);
  }
};

// Companion of a tensor of vertical morphisms, transported from the
// paired companions of the factors.
template <DoubleModel M, class T>
  requires MonoidalStructureOf<T, M>
CompanionPair<M> tensor_companions(const M& m, const T& st,
                                   const CompanionPair<M>& c1,
                                   const CompanionPair<M>& c2) {
  ProdModel<M, M> pm(m, m);
  TensorFunctor<M, T> fn{m, st};
  CompanionPair<ProdModel<M, M>> c{{c1.f, c2.f},
                                   {c1.lift, c2.lift},
                                   pm.pair_sq(c1.up, c2.up),
                                   pm.pair_sq(c1.down, c2.down)};
  return map_companion(pm, m, fn, c);
}

template <DoubleModel M, class T>
  requires MonoidalStructureOf<T, M>
Report verify_monoidal(const M& m, const T& st, std::uint64_t seed,
                       long long budget = 5000) {
  Report rep;
  rep.component = "monoidal";
  rep.model = m.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<M> fam(m);
  const auto& objs = fam.objects();
  const long long no = static_cast<long long>(objs.size());
  auto sampler = [&](const std::string& axiom) {
    return Sampler<M>(m, fam, Rng::for_axiom(seed, axiom));
  };

  const auto I = st.unit_obj();
  auto sv = [&](const typename M::Sq& a, const typename M::Sq& b) {
    return checked::sq_vcomp(m, a, b);
  };
  auto sv3 = [&](const typename M::Sq& a, const typename M::Sq& b,
                 const typename M::Sq& c) {
    return checked::sq_vcomp_n(m, {a, b, c});
  };
  auto sh = [&](const typename M::Sq& a, const typename M::Sq& b) {
    return checked::sq_hcomp(m, a, b);
  };
  auto vc = [&](const typename M::VMor& f, const typename M::VMor& g) {
    return checked::vcomp(m, f, g);
  };
  auto viso = [&](const typename M::VMor& f) {
    auto i = m.v_invert(f);
    return i.has_value() && vc(f, *i) == m.vid(m.vsrc(f)) &&
           vc(*i, f) == m.vid(m.vtgt(f));
  };
  auto siso = [&](const typename M::Sq& s) {
    auto i = m.sq_invert(s);
    return i.has_value() && sv(s, *i) == m.sq_id(s.top) &&
           sv(*i, s) == m.sq_id(s.bottom);
  };

  // tensor is strict on frames at every level
  {
    detail::AxiomTally t("tensor: frame strictness",
                         "source/target strictness");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto f = smp.vmor();
      auto g = smp.vmor();
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      auto sa = smp.square();
      auto sb = smp.square();
      bool ok = detail::eval_axiom([&] {
        auto tf = st.ten_v(f, g);
        auto th = st.ten_h(hm, hn);
        auto ts = st.ten_sq(sa, sb);
        return m.vsrc(tf) == st.ten_obj(m.vsrc(f), m.vsrc(g)) &&
               m.vtgt(tf) == st.ten_obj(m.vtgt(f), m.vtgt(g)) &&
               m.hsrc(th) == st.ten_obj(m.hsrc(hm), m.hsrc(hn)) &&
               m.htgt(th) == st.ten_obj(m.htgt(hm), m.htgt(hn)) &&
               ts.top == st.ten_h(sa.top, sb.top) &&
               ts.bottom == st.ten_h(sa.bottom, sb.bottom) &&
               ts.left == st.ten_v(sa.left, sb.left) &&
               ts.right == st.ten_v(sa.right, sb.right);
      });
      if (!t.note(ok, [&] { return "a=" + m.sq_str(sa) + " b=" + m.sq_str(sb); }))
        break;
    }
    rep.add(t.it);
  }

  // tensor preserves vertical identities and composition
  {
    detail::AxiomTally t("tensor: vertical functoriality", "functor laws");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto a = smp.obj();
      auto b = smp.obj();
      auto f1 = smp.vmor_from(a);
      auto f2 = smp.vmor_from(m.vtgt(f1));
      auto g1 = smp.vmor_from(b);
      auto g2 = smp.vmor_from(m.vtgt(g1));
      bool ok = detail::eval_axiom([&] {
        return st.ten_v(m.vid(a), m.vid(b)) == m.vid(st.ten_obj(a, b)) &&
               st.ten_v(vc(f1, f2), vc(g1, g2)) ==
                   vc(st.ten_v(f1, g1), st.ten_v(f2, g2));
      });
      if (!t.note(ok, [&] {
            return "f1=" + m.vmor_str(f1) + " g1=" + m.vmor_str(g1);
          }))
        break;
    }
    rep.add(t.it);
  }

  // tensor preserves identity squares and vertical pasting of squares
  {
    detail::AxiomTally t("tensor: square functoriality", "functor laws");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      auto a1 = smp.square();
      auto a2 = smp.square_below(a1);
      auto b1 = smp.square();
      auto b2 = smp.square_below(b1);
      bool ok = detail::eval_axiom([&] {
        return st.ten_sq(m.sq_id(hm), m.sq_id(hn)) ==
                   m.sq_id(st.ten_h(hm, hn)) &&
               st.ten_sq(sv(a1, a2), sv(b1, b2)) ==
                   sv(st.ten_sq(a1, b1), st.ten_sq(a2, b2));
      });
      if (!t.note(ok, [&] {
            return "a1=" + m.sq_str(a1) + " b1=" + m.sq_str(b1);
          }))
        break;
    }
    rep.add(t.it);
  }

  // level-zero constraints: correct frames, two-sided inverses
  {
    detail::AxiomTally t("object constraints: isomorphisms",
                         "constraint invertibility");
    auto check_units = [&](const typename M::Obj& a) {
      auto lu = st.lunit0(a);
      auto ru = st.runit0(a);
      return m.vsrc(lu) == st.ten_obj(I, a) && m.vtgt(lu) == a && viso(lu) &&
             m.vsrc(ru) == st.ten_obj(a, I) && m.vtgt(ru) == a && viso(ru);
    };
    auto check_assoc = [&](const typename M::Obj& a, const typename M::Obj& b,
                           const typename M::Obj& c) {
      auto as = st.assoc0(a, b, c);
      return m.vsrc(as) == st.ten_obj(st.ten_obj(a, b), c) &&
             m.vtgt(as) == st.ten_obj(a, st.ten_obj(b, c)) && viso(as);
    };
    long long pop = sat_add(no, sat_mul(no, sat_mul(no, no)));
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs) {
          bool ok = detail::eval_axiom([&] { return check_units(a); });
          if (!t.note(ok, [&] { return "A=" + m.obj_str(a); })) return;
        }
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs) {
              bool ok = detail::eval_axiom([&] { return check_assoc(a, b, c); });
              if (!t.note(ok, [&] {
                    return "A=" + m.obj_str(a) + " B=" + m.obj_str(b) + " C=" +
                           m.obj_str(c);
                  }))
                return;
            }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        auto c = smp.obj();
        bool ok = detail::eval_axiom(
            [&] { return check_units(a) && check_assoc(a, b, c); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b) + " C=" +
                     m.obj_str(c);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  // level-zero constraints commute with tensored morphisms
  {
    detail::AxiomTally t("object constraints: naturality",
                         "naturality of constraints");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto f = smp.vmor();
      auto g = smp.vmor();
      auto h = smp.vmor();
      bool ok = detail::eval_axiom([&] {
        auto a = m.vsrc(f);
        auto b = m.vsrc(g);
        auto c = m.vsrc(h);
        auto a2 = m.vtgt(f);
        auto b2 = m.vtgt(g);
        auto c2 = m.vtgt(h);
        bool nat_a = vc(st.assoc0(a, b, c), st.ten_v(f, st.ten_v(g, h))) ==
                     vc(st.ten_v(st.ten_v(f, g), h), st.assoc0(a2, b2, c2));
        bool nat_l = vc(st.ten_v(m.vid(I), f), st.lunit0(a2)) ==
                     vc(st.lunit0(a), f);
        bool nat_r = vc(st.ten_v(f, m.vid(I)), st.runit0(a2)) ==
                     vc(st.runit0(a), f);
        return nat_a && nat_l && nat_r;
      });
      if (!t.note(ok, [&] {
            return "f=" + m.vmor_str(f) + " g=" + m.vmor_str(g) + " h=" +
                   m.vmor_str(h);
          }))
        break;
    }
    rep.add(t.it);
  }

  // pentagon for the level-zero associator
  {
    detail::AxiomTally t("object pentagon", "Mac Lane pentagon");
    auto check = [&](const typename M::Obj& a, const typename M::Obj& b,
                     const typename M::Obj& c, const typename M::Obj& d) {
      auto lhs = vc(vc(st.ten_v(st.assoc0(a, b, c), m.vid(d)),
                       st.assoc0(a, st.ten_obj(b, c), d)),
                    st.ten_v(m.vid(a), st.assoc0(b, c, d)));
      auto rhs = vc(st.assoc0(st.ten_obj(a, b), c, d),
                    st.assoc0(a, b, st.ten_obj(c, d)));
      return lhs == rhs;
    };
    long long pop = sat_mul(sat_mul(no, no), sat_mul(no, no));
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs)
              for (const auto& d : objs) {
                bool ok = detail::eval_axiom([&] { return check(a, b, c, d); });
                if (!t.note(ok, [&] {
                      return "A=" + m.obj_str(a) + " B=" + m.obj_str(b) +
                             " C=" + m.obj_str(c) + " D=" + m.obj_str(d);
                    }))
                  return;
              }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        auto c = smp.obj();
        auto d = smp.obj();
        bool ok = detail::eval_axiom([&] { return check(a, b, c, d); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b) + " C=" +
                     m.obj_str(c) + " D=" + m.obj_str(d);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  // triangle for the level-zero unitors
  {
    detail::AxiomTally t("object triangle", "Mac Lane triangle");
    auto check = [&](const typename M::Obj& a, const typename M::Obj& b) {
      return vc(st.assoc0(a, I, b), st.ten_v(m.vid(a), st.lunit0(b))) ==
             st.ten_v(st.runit0(a), m.vid(b));
    };
    long long pop = sat_mul(no, no);
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs) {
            bool ok = detail::eval_axiom([&] { return check(a, b); });
            if (!t.note(ok, [&] {
                  return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
                }))
              return;
          }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        bool ok = detail::eval_axiom([&] { return check(a, b); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  // level-one constraints: framed by the level-zero ones, invertible
  {
    detail::AxiomTally t("cell constraints: frames and isomorphisms",
                         "constraint invertibility");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      auto hp = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto as = st.assoc1(hm, hn, hp);
        auto lu = st.lunit1(hm);
        auto ru = st.runit1(hm);
        bool fa = as.top == st.ten_h(st.ten_h(hm, hn), hp) &&
                  as.bottom == st.ten_h(hm, st.ten_h(hn, hp)) &&
                  as.left == st.assoc0(m.hsrc(hm), m.hsrc(hn), m.hsrc(hp)) &&
                  as.right == st.assoc0(m.htgt(hm), m.htgt(hn), m.htgt(hp));
        bool fl = lu.top == st.ten_h(m.hunit(I), hm) && lu.bottom == hm &&
                  lu.left == st.lunit0(m.hsrc(hm)) &&
                  lu.right == st.lunit0(m.htgt(hm));
        bool fr = ru.top == st.ten_h(hm, m.hunit(I)) && ru.bottom == hm &&
                  ru.left == st.runit0(m.hsrc(hm)) &&
                  ru.right == st.runit0(m.htgt(hm));
        return fa && fl && fr && siso(as) && siso(lu) && siso(ru);
      });
      if (!t.note(ok, [&] {
            return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn) + " P=" +
                   m.hcell_str(hp);
          }))
        break;
    }
    rep.add(t.it);
  }

  // level-one constraints commute with tensored squares
  {
    detail::AxiomTally t("cell constraints: naturality",
                         "naturality of constraints");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto a = smp.square();
      auto b = smp.square();
      auto c = smp.square();
      bool ok = detail::eval_axiom([&] {
        bool nat_a = sv(st.assoc1(a.top, b.top, c.top),
                        st.ten_sq(a, st.ten_sq(b, c))) ==
                     sv(st.ten_sq(st.ten_sq(a, b), c),
                        st.assoc1(a.bottom, b.bottom, c.bottom));
        bool nat_l = sv(st.ten_sq(m.sq_id(m.hunit(I)), a),
                        st.lunit1(a.bottom)) == sv(st.lunit1(a.top), a);
        bool nat_r = sv(st.ten_sq(a, m.sq_id(m.hunit(I))),
                        st.runit1(a.bottom)) == sv(st.runit1(a.top), a);
        return nat_a && nat_l && nat_r;
      });
      if (!t.note(ok, [&] { return "a=" + m.sq_str(a) + " b=" + m.sq_str(b); }))
        break;
    }
    rep.add(t.it);
  }

  // pentagon for the level-one associator
  {
    detail::AxiomTally t("cell pentagon", "Mac Lane pentagon");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      auto hp = smp.hcell();
      auto hq = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto lhs = sv3(st.ten_sq(st.assoc1(hm, hn, hp), m.sq_id(hq)),
                       st.assoc1(hm, st.ten_h(hn, hp), hq),
                       st.ten_sq(m.sq_id(hm), st.assoc1(hn, hp, hq)));
        auto rhs = sv(st.assoc1(st.ten_h(hm, hn), hp, hq),
                      st.assoc1(hm, hn, st.ten_h(hp, hq)));
        return lhs == rhs;
      });
      if (!t.note(ok, [&] {
            return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn) + " P=" +
                   m.hcell_str(hp) + " Q=" + m.hcell_str(hq);
          }))
        break;
    }
    rep.add(t.it);
  }

  // triangle for the level-one unitors
  {
    detail::AxiomTally t("cell triangle", "Mac Lane triangle");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        return sv(st.assoc1(hm, m.hunit(I), hn),
                  st.ten_sq(m.sq_id(hm), st.lunit1(hn))) ==
               st.ten_sq(st.runit1(hm), m.sq_id(hn));
      });
      if (!t.note(ok, [&] {
            return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn);
          }))
        break;
    }
    rep.add(t.it);
  }

  // interchanger: globular isomorphism with the comparison frame
  {
    detail::AxiomTally t("interchanger: globular isomorphism",
                         "constraint invertibility");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto m1 = smp.hcell();
      auto m2 = smp.hcell_from(m.htgt(m1));
      auto n1 = smp.hcell();
      auto n2 = smp.hcell_from(m.htgt(n1));
      bool ok = detail::eval_axiom([&] {
        auto x = st.interchanger(m1, n1, m2, n2);
        return x.top == m.hcomp(st.ten_h(m1, n1), st.ten_h(m2, n2)) &&
               x.bottom == st.ten_h(m.hcomp(m1, m2), m.hcomp(n1, n2)) &&
               is_globular(m, x) && siso(x);
      });
      if (!t.note(ok, [&] {
            return "M1=" + m.hcell_str(m1) + " N1=" + m.hcell_str(n1) +
                   " M2=" + m.hcell_str(m2) + " N2=" + m.hcell_str(n2);
          }))
        break;
    }
    rep.add(t.it);
  }

  // unit comparison: globular isomorphism with the comparison frame
  {
    detail::AxiomTally t("unit comparison: globular isomorphism",
                         "constraint invertibility");
    auto check = [&](const typename M::Obj& a, const typename M::Obj& b) {
      auto u = st.unit_split(a, b);
      return u.top == m.hunit(st.ten_obj(a, b)) &&
             u.bottom == st.ten_h(m.hunit(a), m.hunit(b)) &&
             is_globular(m, u) && siso(u);
    };
    long long pop = sat_mul(no, no);
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs) {
            bool ok = detail::eval_axiom([&] { return check(a, b); });
            if (!t.note(ok, [&] {
                  return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
                }))
              return;
          }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        bool ok = detail::eval_axiom([&] { return check(a, b); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  // interchanger commutes with horizontally pasted squares
  {
    detail::AxiomTally t("interchanger: naturality",
                         "naturality of constraints");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto a1 = smp.square();
      auto a2 = smp.square_right(a1);
      auto b1 = smp.square();
      auto b2 = smp.square_right(b1);
      bool ok = detail::eval_axiom([&] {
        auto lhs = sv(st.interchanger(a1.top, b1.top, a2.top, b2.top),
                      st.ten_sq(sh(a1, a2), sh(b1, b2)));
        auto rhs = sv(sh(st.ten_sq(a1, b1), st.ten_sq(a2, b2)),
                      st.interchanger(a1.bottom, b1.bottom, a2.bottom,
                                      b2.bottom));
        return lhs == rhs;
      });
      if (!t.note(ok, [&] {
            return "a1=" + m.sq_str(a1) + " b1=" + m.sq_str(b1);
          }))
        break;
    }
    rep.add(t.it);
  }

  // unit comparison commutes with unit squares
  {
    detail::AxiomTally t("unit comparison: naturality",
                         "naturality of constraints");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto f = smp.vmor();
      auto g = smp.vmor();
      bool ok = detail::eval_axiom([&] {
        auto lhs = sv(st.unit_split(m.vsrc(f), m.vsrc(g)),
                      st.ten_sq(m.sq_unit(f), m.sq_unit(g)));
        auto rhs = sv(m.sq_unit(st.ten_v(f, g)),
                      st.unit_split(m.vtgt(f), m.vtgt(g)));
        return lhs == rhs;
      });
      if (!t.note(ok, [&] {
            return "f=" + m.vmor_str(f) + " g=" + m.vmor_str(g);
          }))
        break;
    }
    rep.add(t.it);
  }

  // hexagon tying the interchanger to both associators
  {
    detail::AxiomTally t("tensor coherence hexagon", "pseudofunctor coherence");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto m1 = smp.hcell();
      auto m2 = smp.hcell_from(m.htgt(m1));
      auto m3 = smp.hcell_from(m.htgt(m2));
      auto n1 = smp.hcell();
      auto n2 = smp.hcell_from(m.htgt(n1));
      auto n3 = smp.hcell_from(m.htgt(n2));
      bool ok = detail::eval_axiom([&] {
        auto lhs = sv3(
            sh(st.interchanger(m1, n1, m2, n2), m.sq_id(st.ten_h(m3, n3))),
            st.interchanger(m.hcomp(m1, m2), m.hcomp(n1, n2), m3, n3),
            st.ten_sq(m.sq_assoc(m1, m2, m3), m.sq_assoc(n1, n2, n3)));
        auto rhs = sv3(
            m.sq_assoc(st.ten_h(m1, n1), st.ten_h(m2, n2), st.ten_h(m3, n3)),
            sh(m.sq_id(st.ten_h(m1, n1)), st.interchanger(m2, n2, m3, n3)),
            st.interchanger(m1, n1, m.hcomp(m2, m3), m.hcomp(n2, n3)));
        return lhs == rhs;
      });
      if (!t.note(ok, [&] {
            return "M1=" + m.hcell_str(m1) + " M2=" + m.hcell_str(m2) +
                   " N1=" + m.hcell_str(n1) + " N2=" + m.hcell_str(n2);
          }))
        break;
    }
    rep.add(t.it);
  }

  // unit comparison against the left and right unitors of the model
  {
    detail::AxiomTally t("tensor unit coherence", "pseudofunctor coherence");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto a = m.hsrc(hm);
        auto a2 = m.hsrc(hn);
        auto b = m.htgt(hm);
        auto b2 = m.htgt(hn);
        auto th = st.ten_h(hm, hn);
        auto left =
            sv3(sh(st.unit_split(a, a2), m.sq_id(th)),
                st.interchanger(m.hunit(a), m.hunit(a2), hm, hn),
                st.ten_sq(m.sq_unit_l(hm), m.sq_unit_l(hn)));
        auto right =
            sv3(sh(m.sq_id(th), st.unit_split(b, b2)),
                st.interchanger(hm, hn, m.hunit(b), m.hunit(b2)),
                st.ten_sq(m.sq_unit_r(hm), m.sq_unit_r(hn)));
        return left == m.sq_unit_l(th) && right == m.sq_unit_r(th);
      });
      if (!t.note(ok, [&] {
            return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn);
          }))
        break;
    }
    rep.add(t.it);
  }

  // the level-one associator respects horizontal composition, with the
  // interchanger mediating the two ways of regrouping three factors
  {
    detail::AxiomTally t("associativity vs interchanger",
                         "transformation axioms");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto m1 = smp.hcell();
      auto m2 = smp.hcell_from(m.htgt(m1));
      auto n1 = smp.hcell();
      auto n2 = smp.hcell_from(m.htgt(n1));
      auto p1 = smp.hcell();
      auto p2 = smp.hcell_from(m.htgt(p1));
      bool ok = detail::eval_axiom([&] {
        auto f_comp =
            sv(st.interchanger(st.ten_h(m1, n1), p1, st.ten_h(m2, n2), p2),
               st.ten_sq(st.interchanger(m1, n1, m2, n2),
                         m.sq_id(m.hcomp(p1, p2))));
        auto g_comp =
            sv(st.interchanger(m1, st.ten_h(n1, p1), m2, st.ten_h(n2, p2)),
               st.ten_sq(m.sq_id(m.hcomp(m1, m2)),
                         st.interchanger(n1, p1, n2, p2)));
        auto lhs = sv(f_comp, st.assoc1(m.hcomp(m1, m2), m.hcomp(n1, n2),
                                        m.hcomp(p1, p2)));
        auto rhs = sv(sh(st.assoc1(m1, n1, p1), st.assoc1(m2, n2, p2)), g_comp);
        return lhs == rhs;
      });
      if (!t.note(ok, [&] {
            return "M1=" + m.hcell_str(m1) + " N1=" + m.hcell_str(n1) +
                   " P1=" + m.hcell_str(p1);
          }))
        break;
    }
    rep.add(t.it);
  }

  // the level-one associator respects horizontal units, with the unit
  // comparison mediating the two ways of splitting a triple unit
  {
    detail::AxiomTally t("associativity vs unit comparison",
                         "transformation axioms");
    auto check = [&](const typename M::Obj& a, const typename M::Obj& b,
                     const typename M::Obj& c) {
      auto f_unit = sv(st.unit_split(st.ten_obj(a, b), c),
                       st.ten_sq(st.unit_split(a, b), m.sq_id(m.hunit(c))));
      auto g_unit = sv(st.unit_split(a, st.ten_obj(b, c)),
                       st.ten_sq(m.sq_id(m.hunit(a)), st.unit_split(b, c)));
      return sv(f_unit, st.assoc1(m.hunit(a), m.hunit(b), m.hunit(c))) ==
             sv(m.sq_unit(st.assoc0(a, b, c)), g_unit);
    };
    long long pop = sat_mul(no, sat_mul(no, no));
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs) {
              bool ok = detail::eval_axiom([&] { return check(a, b, c); });
              if (!t.note(ok, [&] {
                    return "A=" + m.obj_str(a) + " B=" + m.obj_str(b) + " C=" +
                           m.obj_str(c);
                  }))
                return;
            }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        auto c = smp.obj();
        bool ok = detail::eval_axiom([&] { return check(a, b, c); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b) + " C=" +
                     m.obj_str(c);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  // the level-one unitors respect horizontal composition and units
  {
    detail::AxiomTally t("unit constraints vs tensor", "transformation axioms");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell_from(m.htgt(hm));
      auto a = smp.obj();
      bool ok = detail::eval_axiom([&] {
        auto ui = m.hunit(I);
        auto mn = m.hcomp(hm, hn);
        bool rho1 = sh(st.runit1(hm), st.runit1(hn)) ==
                    sv3(st.interchanger(hm, ui, hn, ui),
                        st.ten_sq(m.sq_id(mn), m.sq_unit_l(ui)),
                        st.runit1(mn));
        bool rho2 = sv(st.unit_split(a, I), st.runit1(m.hunit(a))) ==
                    m.sq_unit(st.runit0(a));
        bool lam1 = sh(st.lunit1(hm), st.lunit1(hn)) ==
                    sv3(st.interchanger(ui, hm, ui, hn),
                        st.ten_sq(m.sq_unit_l(ui), m.sq_id(mn)),
                        st.lunit1(mn));
        bool lam2 = sv(st.unit_split(I, a), st.lunit1(m.hunit(a))) ==
                    m.sq_unit(st.lunit0(a));
        return rho1 && rho2 && lam1 && lam2;
      });
      if (!t.note(ok, [&] {
            return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn) + " A=" +
                   m.obj_str(a);
          }))
        break;
    }
    rep.add(t.it);
  }

  return rep;
}

template <DoubleModel M, class T>
  requires BraidedStructureOf<T, M>
Report verify_braided(const M& m, const T& st, std::uint64_t seed,
                      long long budget = 5000) {
  Report rep;
  rep.component = "braided";
  rep.model = m.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<M> fam(m);
  const auto& objs = fam.objects();
  const long long no = static_cast<long long>(objs.size());
  auto sampler = [&](const std::string& axiom) {
    return Sampler<M>(m, fam, Rng::for_axiom(seed, axiom));
  };

  auto sv = [&](const typename M::Sq& a, const typename M::Sq& b) {
    return checked::sq_vcomp(m, a, b);
  };
  auto sv3 = [&](const typename M::Sq& a, const typename M::Sq& b,
                 const typename M::Sq& c) {
    return checked::sq_vcomp_n(m, {a, b, c});
  };
  auto sh = [&](const typename M::Sq& a, const typename M::Sq& b) {
    return checked::sq_hcomp(m, a, b);
  };
  auto vc = [&](const typename M::VMor& f, const typename M::VMor& g) {
    return checked::vcomp(m, f, g);
  };
  auto vc3 = [&](const typename M::VMor& f, const typename M::VMor& g,
                 const typename M::VMor& h) { return vc(vc(f, g), h); };
  auto viso = [&](const typename M::VMor& f) {
    auto i = m.v_invert(f);
    return i.has_value() && vc(f, *i) == m.vid(m.vsrc(f)) &&
           vc(*i, f) == m.vid(m.vtgt(f));
  };
  auto siso = [&](const typename M::Sq& s) {
    auto i = m.sq_invert(s);
    return i.has_value() && sv(s, *i) == m.sq_id(s.top) &&
           sv(*i, s) == m.sq_id(s.bottom);
  };

  // level-zero braiding: correct frame, two-sided inverse
  {
    detail::AxiomTally t("object braiding: isomorphisms",
                         "constraint invertibility");
    auto check = [&](const typename M::Obj& a, const typename M::Obj& b) {
      auto br = st.braid0(a, b);
      return m.vsrc(br) == st.ten_obj(a, b) &&
             m.vtgt(br) == st.ten_obj(b, a) && viso(br);
    };
    long long pop = sat_mul(no, no);
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs) {
            bool ok = detail::eval_axiom([&] { return check(a, b); });
            if (!t.note(ok, [&] {
                  return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
                }))
              return;
          }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        bool ok = detail::eval_axiom([&] { return check(a, b); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  // level-zero braiding commutes with tensored morphisms
  {
    detail::AxiomTally t("object braiding: naturality",
                         "naturality of constraints");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto f = smp.vmor();
      auto g = smp.vmor();
      bool ok = detail::eval_axiom([&] {
        return vc(st.ten_v(f, g), st.braid0(m.vtgt(f), m.vtgt(g))) ==
               vc(st.braid0(m.vsrc(f), m.vsrc(g)), st.ten_v(g, f));
      });
      if (!t.note(ok, [&] {
            return "f=" + m.vmor_str(f) + " g=" + m.vmor_str(g);
          }))
        break;
    }
    rep.add(t.it);
  }

  // level-zero hexagons
  {
    detail::AxiomTally t("object braiding hexagons", "braiding hexagons");
    auto check = [&](const typename M::Obj& a, const typename M::Obj& b,
                     const typename M::Obj& c) {
      auto ia1 = m.v_invert(st.assoc0(a, b, c));
      auto ia2 = m.v_invert(st.assoc0(c, a, b));
      auto ia3 = m.v_invert(st.assoc0(a, c, b));
      if (!ia1 || !ia2 || !ia3) return false;
      bool hx1 = vc3(st.assoc0(a, b, c), st.braid0(a, st.ten_obj(b, c)),
                     st.assoc0(b, c, a)) ==
                 vc3(st.ten_v(st.braid0(a, b), m.vid(c)), st.assoc0(b, a, c),
                     st.ten_v(m.vid(b), st.braid0(a, c)));
      bool hx2 = vc3(*ia1, st.braid0(st.ten_obj(a, b), c), *ia2) ==
                 vc3(st.ten_v(m.vid(a), st.braid0(b, c)), *ia3,
                     st.ten_v(st.braid0(a, c), m.vid(b)));
      return hx1 && hx2;
    };
    long long pop = sat_mul(no, sat_mul(no, no));
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs)
            for (const auto& c : objs) {
              bool ok = detail::eval_axiom([&] { return check(a, b, c); });
              if (!t.note(ok, [&] {
                    return "A=" + m.obj_str(a) + " B=" + m.obj_str(b) + " C=" +
                           m.obj_str(c);
                  }))
                return;
            }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        auto c = smp.obj();
        bool ok = detail::eval_axiom([&] { return check(a, b, c); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b) + " C=" +
                     m.obj_str(c);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  // level-one braiding: framed by the level-zero braiding, invertible
  {
    detail::AxiomTally t("cell braiding: frames and isomorphisms",
                         "constraint invertibility");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto br = st.braid1(hm, hn);
        return br.top == st.ten_h(hm, hn) && br.bottom == st.ten_h(hn, hm) &&
               br.left == st.braid0(m.hsrc(hm), m.hsrc(hn)) &&
               br.right == st.braid0(m.htgt(hm), m.htgt(hn)) && siso(br);
      });
      if (!t.note(ok, [&] {
            return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn);
          }))
        break;
    }
    rep.add(t.it);
  }

  // level-one braiding commutes with tensored squares
  {
    detail::AxiomTally t("cell braiding: naturality",
                         "naturality of constraints");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto a = smp.square();
      auto b = smp.square();
      bool ok = detail::eval_axiom([&] {
        return sv(st.braid1(a.top, b.top), st.ten_sq(b, a)) ==
               sv(st.ten_sq(a, b), st.braid1(a.bottom, b.bottom));
      });
      if (!t.note(ok, [&] { return "a=" + m.sq_str(a) + " b=" + m.sq_str(b); }))
        break;
    }
    rep.add(t.it);
  }

  // level-one hexagons
  {
    detail::AxiomTally t("cell braiding hexagons", "braiding hexagons");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      auto hp = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto ia1 = m.sq_invert(st.assoc1(hm, hn, hp));
        auto ia2 = m.sq_invert(st.assoc1(hp, hm, hn));
        auto ia3 = m.sq_invert(st.assoc1(hm, hp, hn));
        if (!ia1 || !ia2 || !ia3) return false;
        bool hx1 = sv3(st.assoc1(hm, hn, hp),
                       st.braid1(hm, st.ten_h(hn, hp)),
                       st.assoc1(hn, hp, hm)) ==
                   sv3(st.ten_sq(st.braid1(hm, hn), m.sq_id(hp)),
                       st.assoc1(hn, hm, hp),
                       st.ten_sq(m.sq_id(hn), st.braid1(hm, hp)));
        bool hx2 = sv3(*ia1, st.braid1(st.ten_h(hm, hn), hp), *ia2) ==
                   sv3(st.ten_sq(m.sq_id(hm), st.braid1(hn, hp)), *ia3,
                       st.ten_sq(st.braid1(hm, hp), m.sq_id(hn)));
        return hx1 && hx2;
      });
      if (!t.note(ok, [&] {
            return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn) + " P=" +
                   m.hcell_str(hp);
          }))
        break;
    }
    rep.add(t.it);
  }

  // braiding against the interchanger
  {
    detail::AxiomTally t("braiding vs interchanger", "transformation axioms");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto m1 = smp.hcell();
      auto m2 = smp.hcell_from(m.htgt(m1));
      auto n1 = smp.hcell();
      auto n2 = smp.hcell_from(m.htgt(n1));
      bool ok = detail::eval_axiom([&] {
        return sv(st.interchanger(m1, n1, m2, n2),
                  st.braid1(m.hcomp(m1, m2), m.hcomp(n1, n2))) ==
               sv(sh(st.braid1(m1, n1), st.braid1(m2, n2)),
                  st.interchanger(n1, m1, n2, m2));
      });
      if (!t.note(ok, [&] {
            return "M1=" + m.hcell_str(m1) + " N1=" + m.hcell_str(n1) +
                   " M2=" + m.hcell_str(m2) + " N2=" + m.hcell_str(n2);
          }))
        break;
    }
    rep.add(t.it);
  }

  // braiding against the unit comparison
  {
    detail::AxiomTally t("braiding vs unit comparison",
                         "transformation axioms");
    auto check = [&](const typename M::Obj& a, const typename M::Obj& b) {
      return sv(st.unit_split(a, b), st.braid1(m.hunit(a), m.hunit(b))) ==
             sv(m.sq_unit(st.braid0(a, b)), st.unit_split(b, a));
    };
    long long pop = sat_mul(no, no);
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs) {
            bool ok = detail::eval_axiom([&] { return check(a, b); });
            if (!t.note(ok, [&] {
                  return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
                }))
              return;
          }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        bool ok = detail::eval_axiom([&] { return check(a, b); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  return rep;
}

template <DoubleModel M, class T>
  requires BraidedStructureOf<T, M>
Report verify_symmetric(const M& m, const T& st, std::uint64_t seed,
                        long long budget = 5000) {
  Report rep;
  rep.component = "symmetric";
  rep.model = m.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<M> fam(m);
  const auto& objs = fam.objects();
  const long long no = static_cast<long long>(objs.size());
  auto sampler = [&](const std::string& axiom) {
    return Sampler<M>(m, fam, Rng::for_axiom(seed, axiom));
  };

  // braiding twice is the identity on objects
  {
    detail::AxiomTally t("object symmetry: involution", "symmetry involution");
    auto check = [&](const typename M::Obj& a, const typename M::Obj& b) {
      return checked::vcomp(m, st.braid0(a, b), st.braid0(b, a)) ==
             m.vid(st.ten_obj(a, b));
    };
    long long pop = sat_mul(no, no);
    if (pop <= budget) {
      [&] {
        for (const auto& a : objs)
          for (const auto& b : objs) {
            bool ok = detail::eval_axiom([&] { return check(a, b); });
            if (!t.note(ok, [&] {
                  return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
                }))
              return;
          }
      }();
    } else {
      t.it.mode = "sampled";
      auto smp = sampler(t.it.name);
      for (long long i = 0; i < budget; ++i) {
        auto a = smp.obj();
        auto b = smp.obj();
        bool ok = detail::eval_axiom([&] { return check(a, b); });
        if (!t.note(ok, [&] {
              return "A=" + m.obj_str(a) + " B=" + m.obj_str(b);
            }))
          break;
      }
    }
    rep.add(t.it);
  }

  // braiding twice is the identity on cells
  {
    detail::AxiomTally t("cell symmetry: involution", "symmetry involution");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        return checked::sq_vcomp(m, st.braid1(hm, hn), st.braid1(hn, hm)) ==
               m.sq_id(st.ten_h(hm, hn));
      });
      if (!t.note(ok, [&] {
            return "M=" + m.hcell_str(hm) + " N=" + m.hcell_str(hn);
          }))
        break;
    }
    rep.add(t.it);
  }

  return rep;
}

}  // namespace dblift
