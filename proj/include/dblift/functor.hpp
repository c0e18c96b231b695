#pragma once

// Structure-preserving maps between models: object/vertical action,
// cell/square action, and two globular constraint cells
//
//   comp(M, N) : hcomp(F M, F N) -> F(hcomp(M, N))
//   unit(A)    : U_{F A}         -> F(U_A)
//
// subject to the coherence axioms below.  Companions transport along
// any such map.

#include <string>
#include <utility>
#include <vector>

#include "dblift/check.hpp"
#include "dblift/companion.hpp"
#include "dblift/model.hpp"
#include "dblift/product.hpp"
#include "dblift/report.hpp"

namespace dblift {

template <class F, class MD, class ME>
concept DblFunctorOf =
    DoubleModel<MD> && DoubleModel<ME> &&
    requires(const F& fn, const typename MD::Obj& a,
             const typename MD::VMor& v, const typename MD::HCell& h,
             const typename MD::Sq& s) {
      { fn.obj(a) } -> std::convertible_to<typename ME::Obj>;
      { fn.v(v) } -> std::convertible_to<typename ME::VMor>;
      { fn.h(h) } -> std::convertible_to<typename ME::HCell>;
      { fn.sq(s) } -> std::convertible_to<typename ME::Sq>;
      { fn.comp(h, h) } -> std::convertible_to<typename ME::Sq>;
      { fn.unit(a) } -> std::convertible_to<typename ME::Sq>;
    };

template <DoubleModel M>
struct IdentityFunctor {
  const M& m;

  typename M::Obj obj(const typename M::Obj& a) const { return a; }
  typename M::VMor v(const typename M::VMor& f) const { return f; }
  typename M::HCell h(const typename M::HCell& c) const { return c; }
  typename M::Sq sq(const typename M::Sq& s) const { return s; }
  typename M::Sq comp(const typename M::HCell& a,
                      const typename M::HCell& b) const {
    return m.sq_id(m.hcomp(a, b));
  }
  typename M::Sq unit(const typename M::Obj& a) const {
    return m.sq_id(m.hunit(a));
  }
};

// G after F; constraints compose through G.
template <DoubleModel MD, DoubleModel ME, DoubleModel MK, class F, class G>
  requires DblFunctorOf<F, MD, ME> && DblFunctorOf<G, ME, MK>
struct CompositeFunctor {
  const ME& mid;
  const MK& cod;
  const F& f;
  const G& g;

  typename MK::Obj obj(const typename MD::Obj& a) const {
    return g.obj(f.obj(a));
  }
  typename MK::VMor v(const typename MD::VMor& m) const {
    return g.v(f.v(m));
  }
  typename MK::HCell h(const typename MD::HCell& c) const {
    return g.h(f.h(c));
  }
  typename MK::Sq sq(const typename MD::Sq& s) const { return g.sq(f.sq(s)); }
  typename MK::Sq comp(const typename MD::HCell& a,
                       const typename MD::HCell& b) const {
    return checked::sq_vcomp(cod, g.comp(f.h(a), f.h(b)), g.sq(f.comp(a, b)));
  }
  typename MK::Sq unit(const typename MD::Obj& a) const {
    return checked::sq_vcomp(cod, g.unit(f.obj(a)), g.sq(f.unit(a)));
  }
};

template <DoubleModel M1, DoubleModel M2>
struct SwapFunctor {
  const ProdModel<M1, M2>& dom;
  const ProdModel<M2, M1>& cod;

  using PD = ProdModel<M1, M2>;
  using PC = ProdModel<M2, M1>;

  typename PC::Obj obj(const typename PD::Obj& a) const {
    return {a.second, a.first};
  }
  typename PC::VMor v(const typename PD::VMor& f) const {
    return {f.second, f.first};
  }
  typename PC::HCell h(const typename PD::HCell& c) const {
    return {c.second, c.first};
  }
  typename PC::Sq sq(const typename PD::Sq& s) const {
    return cod.pair_sq(s.wit.second, s.wit.first);
  }
  typename PC::Sq comp(const typename PD::HCell& a,
                       const typename PD::HCell& b) const {
    return cod.sq_id(cod.hcomp(h(a), h(b)));
  }
  typename PC::Sq unit(const typename PD::Obj& a) const {
    return cod.sq_id(cod.hunit(obj(a)));
  }
};

// Coherence report for a functor between two models.
template <DoubleModel MD, DoubleModel ME, class F>
  requires DblFunctorOf<F, MD, ME>
Report verify_functor(const MD& d, const ME& e, const F& fn,
                      std::uint64_t seed, long long budget = 5000) {
  Report rep;
  rep.component = "functor";
  rep.model = d.name() + " -> " + e.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<MD> fam(d);
  auto sampler = [&](const std::string& axiom) {
    return Sampler<MD>(d, fam, Rng::for_axiom(seed, axiom));
  };

  {
    detail::AxiomTally t("frame preservation", "frame compatibility");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto s = smp.square();
      auto fs = fn.sq(s);
      bool ok = fs.top == fn.h(s.top) && fs.bottom == fn.h(s.bottom) &&
                fs.left == fn.v(s.left) && fs.right == fn.v(s.right) &&
                e.hsrc(fn.h(s.top)) == fn.obj(d.hsrc(s.top)) &&
                e.htgt(fn.h(s.top)) == fn.obj(d.htgt(s.top)) &&
                e.vsrc(fn.v(s.left)) == fn.obj(d.vsrc(s.left));
      if (!t.note(ok, [&] { return "square " + d.sq_str(s); })) break;
    }
    rep.add(t.it);
  }
  {
    detail::AxiomTally t("vertical functoriality", "functor laws");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto a = smp.obj();
      auto f = smp.vmor_from(a);
      auto g = smp.vmor_from(d.vtgt(f));
      bool ok = fn.v(d.vid(a)) == e.vid(fn.obj(a)) &&
                fn.v(d.vcomp(f, g)) == e.vcomp(fn.v(f), fn.v(g));
      if (!t.note(ok,
                  [&] { return d.vmor_str(f) + " ; " + d.vmor_str(g); }))
        break;
    }
    rep.add(t.it);
  }
  {
    detail::AxiomTally t("square functoriality", "functor laws");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto a = smp.square();
      auto b = smp.square_below(a);
      bool ok = fn.sq(d.sq_id(a.top)) == e.sq_id(fn.h(a.top)) &&
                fn.sq(d.sq_vcomp(a, b)) == e.sq_vcomp(fn.sq(a), fn.sq(b));
      if (!t.note(ok, [&] { return "square " + d.sq_str(a); })) break;
    }
    rep.add(t.it);
  }
  {
    detail::AxiomTally t("constraint cells are globular isomorphisms",
                         "constraint invertibility");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto m = smp.hcell();
      auto n = smp.hcell_from(d.htgt(m));
      auto a = smp.obj();
      auto c = fn.comp(m, n);
      auto u = fn.unit(a);
      bool ok = c.top == e.hcomp(fn.h(m), fn.h(n)) &&
                c.bottom == fn.h(d.hcomp(m, n)) && is_globular(e, c) &&
                is_iso(e, c) && u.top == e.hunit(fn.obj(a)) &&
                u.bottom == fn.h(d.hunit(a)) && is_globular(e, u) &&
                is_iso(e, u);
      if (!t.note(ok,
                  [&] { return d.hcell_str(m) + " , " + d.hcell_str(n); }))
        break;
    }
    rep.add(t.it);
  }
  {
    detail::AxiomTally t("naturality of the composition constraint",
                         "constraint naturality");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto a = smp.square();
      auto b = smp.square_right(a);
      auto lhs = checked::sq_vcomp(e, fn.comp(a.top, b.top),
                                   fn.sq(d.sq_hcomp(a, b)));
      auto rhs = checked::sq_vcomp(e, e.sq_hcomp(fn.sq(a), fn.sq(b)),
                                   fn.comp(a.bottom, b.bottom));
      if (!t.note(lhs == rhs, [&] { return "square " + d.sq_str(a); })) break;
    }
    rep.add(t.it);
  }
  {
    detail::AxiomTally t("naturality of the unit constraint",
                         "constraint naturality");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto f = smp.vmor();
      auto lhs =
          checked::sq_vcomp(e, fn.unit(d.vsrc(f)), fn.sq(d.sq_unit(f)));
      auto rhs =
          checked::sq_vcomp(e, e.sq_unit(fn.v(f)), fn.unit(d.vtgt(f)));
      if (!t.note(lhs == rhs, [&] { return d.vmor_str(f); })) break;
    }
    rep.add(t.it);
  }
  {
    detail::AxiomTally t("composition coherence hexagon",
                         "pseudofunctor coherence");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto m = smp.hcell();
      auto n = smp.hcell_from(d.htgt(m));
      auto p = smp.hcell_from(d.htgt(n));
      auto lhs = checked::sq_vcomp_n(
          e, {checked::sq_hcomp(e, fn.comp(m, n), e.sq_id(fn.h(p))),
              fn.comp(d.hcomp(m, n), p), fn.sq(d.sq_assoc(m, n, p))});
      auto rhs = checked::sq_vcomp_n(
          e, {e.sq_assoc(fn.h(m), fn.h(n), fn.h(p)),
              checked::sq_hcomp(e, e.sq_id(fn.h(m)), fn.comp(n, p)),
              fn.comp(m, d.hcomp(n, p))});
      if (!t.note(lhs == rhs, [&] {
            return d.hcell_str(m) + " , " + d.hcell_str(n) + " , " +
                   d.hcell_str(p);
          }))
        break;
    }
    rep.add(t.it);
  }
  {
    detail::AxiomTally t("unit coherence", "pseudofunctor coherence");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto m = smp.hcell();
      auto a = d.hsrc(m);
      auto b = d.htgt(m);
      auto left = checked::sq_vcomp_n(
          e, {checked::sq_hcomp(e, fn.unit(a), e.sq_id(fn.h(m))),
              fn.comp(d.hunit(a), m), fn.sq(d.sq_unit_l(m))});
      auto right = checked::sq_vcomp_n(
          e, {checked::sq_hcomp(e, e.sq_id(fn.h(m)), fn.unit(b)),
              fn.comp(m, d.hunit(b)), fn.sq(d.sq_unit_r(m))});
      bool ok = left == e.sq_unit_l(fn.h(m)) && right == e.sq_unit_r(fn.h(m));
      if (!t.note(ok, [&] { return d.hcell_str(m); })) break;
    }
    rep.add(t.it);
  }
  return rep;
}

// Image of a companion pair under a functor; the defining squares are
// conjugated by the unit constraint.
template <DoubleModel MD, DoubleModel ME, class F>
  requires DblFunctorOf<F, MD, ME>
CompanionPair<ME> map_companion(const MD& d, const ME& e, const F& fn,
                                const CompanionPair<MD>& c) {
  auto up = checked::sq_vcomp(e, fn.unit(d.vsrc(c.f)), fn.sq(c.up));
  auto down = checked::sq_vcomp(
      e, fn.sq(c.down), checked::sq_invert(e, fn.unit(d.vtgt(c.f))));
  return CompanionPair<ME>{fn.v(c.f), fn.h(c.lift), up, down};
}

}  // namespace dblift
