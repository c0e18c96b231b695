#pragma once

// The horizontal bicategory of a double-category model and the
// companion calculus above it.  Vertical transformations between
// functors of models lift, through chosen companions and conjoints of
// their components, to an oplax and a lax transformation between the
// induced functors of horizontal bicategories, adjoint to each other
// componentwise.  Every comparison cell in sight is an exchange
// square between composite companions: the local composition and unit
// constraints, the compositor and unitor across levels, and the mates
// of modifications.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dblift/check.hpp"
#include "dblift/companion.hpp"
#include "dblift/errors.hpp"
#include "dblift/functor.hpp"
#include "dblift/model.hpp"
#include "dblift/product.hpp"
#include "dblift/rel.hpp"
#include "dblift/report.hpp"
#include "dblift/rng.hpp"
#include "dblift/span.hpp"

namespace dblift {

// ---------------------------------------------------------------------------
// horizontal bicategory

// One-object-layer view of a model: 1-cells are horizontal cells,
// 2-cells are globular squares, with vertical square composition as
// 2-cell composition and horizontal square composition as whiskering.
template <DoubleModel M>
struct HorizontalBicategory {
  const M& m;

  typename M::HCell unit(const typename M::Obj& a) const { return m.hunit(a); }
  typename M::HCell comp(const typename M::HCell& x,
                         const typename M::HCell& y) const {
    return checked::hcomp(m, x, y);
  }
  typename M::Sq id2(const typename M::HCell& x) const { return m.sq_id(x); }
  typename M::Sq vert(const typename M::Sq& s, const typename M::Sq& t) const {
    require_two_cell(s);
    require_two_cell(t);
    return checked::sq_vcomp(m, s, t);
  }
  typename M::Sq horiz(const typename M::Sq& s, const typename M::Sq& t) const {
    require_two_cell(s);
    require_two_cell(t);
    return checked::sq_hcomp(m, s, t);
  }
  typename M::Sq assoc(const typename M::HCell& x, const typename M::HCell& y,
                       const typename M::HCell& z) const {
    return m.sq_assoc(x, y, z);
  }
  typename M::Sq lunit(const typename M::HCell& x) const {
    return m.sq_unit_l(x);
  }
  typename M::Sq runit(const typename M::HCell& x) const {
    return m.sq_unit_r(x);
  }

  void require_two_cell(const typename M::Sq& s) const {
    if (!is_globular(m, s))
      throw FrameMismatch("two-cell must be globular: " + m.sq_str(s));
  }
};

template <DoubleModel M>
HorizontalBicategory<M> horizontal_bicategory(const M& m) {
  return {m};
}

namespace detail {

// Globular square with the given top; identity square when none other
// turns up within the allotted tries.
template <DoubleModel M>
typename M::Sq globular_square_with_top(const M& m, const FamilyCache<M>& fam,
                                        Sampler<M>& smp,
                                        const typename M::HCell& top,
                                        int tries = 8) {
  auto a = m.hsrc(top);
  auto b = m.htgt(top);
  const auto& bots = fam.hcells(a, b);
  for (int i = 0; i < tries && !bots.empty(); ++i) {
    const auto& bot =
        bots[static_cast<std::size_t>(smp.rng().below(bots.size()))];
    auto cand = m.squares(top, m.vid(a), m.vid(b), bot);
    if (!cand.empty())
      return cand[static_cast<std::size_t>(smp.rng().below(cand.size()))];
  }
  return m.sq_id(top);
}

// Globular square with a sampled top.
template <DoubleModel M>
typename M::Sq globular_square(const M& m, const FamilyCache<M>& fam,
                               Sampler<M>& smp) {
  return globular_square_with_top(m, fam, smp, smp.hcell());
}

}  // namespace detail

template <DoubleModel M>
Report verify_bicategory(const M& m, std::uint64_t seed,
                         long long budget = 2000) {
  Report rep;
  rep.component = "bicategory";
  rep.model = m.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<M> fam(m);
  auto sampler = [&](const std::string& axiom) {
    return Sampler<M>(m, fam, Rng::for_axiom(seed, axiom));
  };
  auto sv = [&](const typename M::Sq& a, const typename M::Sq& b) {
    return checked::sq_vcomp(m, a, b);
  };
  auto sh = [&](const typename M::Sq& a, const typename M::Sq& b) {
    return checked::sq_hcomp(m, a, b);
  };

  // 2-cells close under both compositions
  {
    detail::AxiomTally t("two-cells: closure under composition",
                         "globular squares form hom categories");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      bool ok = detail::eval_axiom([&] {
        auto s = detail::globular_square(m, fam, smp);
        auto below = detail::globular_square_with_top(m, fam, smp, s.bottom);
        auto right = detail::globular_square_with_top(
            m, fam, smp, smp.hcell_from(m.htgt(s.top)));
        return is_globular(m, sv(s, below)) && is_globular(m, sh(s, right));
      });
      t.note(ok, [&] { return std::string("closure failed"); });
    }
    rep.add(t.it);
  }

  // Mac Lane pentagon for the associator
  {
    detail::AxiomTally t("associator: pentagon", "Mac Lane pentagon");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto w = smp.hcell();
      auto x = smp.hcell_from(m.htgt(w));
      auto y = smp.hcell_from(m.htgt(x));
      auto z = smp.hcell_from(m.htgt(y));
      bool ok = detail::eval_axiom([&] {
        auto lhs = sv(m.sq_assoc(checked::hcomp(m, w, x), y, z),
                      m.sq_assoc(w, x, checked::hcomp(m, y, z)));
        auto rhs = checked::sq_vcomp_n(
            m, {sh(m.sq_assoc(w, x, y), m.sq_id(z)),
                m.sq_assoc(w, checked::hcomp(m, x, y), z),
                sh(m.sq_id(w), m.sq_assoc(x, y, z))});
        return lhs == rhs;
      });
      t.note(ok, [&] { return m.hcell_str(w) + " ; " + m.hcell_str(x); });
    }
    rep.add(t.it);
  }

  // unit triangle relating the associator to the unitors
  {
    detail::AxiomTally t("unitors: triangle", "unit triangle");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto x = smp.hcell();
      auto y = smp.hcell_from(m.htgt(x));
      bool ok = detail::eval_axiom([&] {
        auto lhs = sv(m.sq_assoc(x, m.hunit(m.htgt(x)), y),
                      sh(m.sq_id(x), m.sq_unit_l(y)));
        auto rhs = sh(m.sq_unit_r(x), m.sq_id(y));
        return lhs == rhs;
      });
      t.note(ok, [&] { return m.hcell_str(x) + " ; " + m.hcell_str(y); });
    }
    rep.add(t.it);
  }

  // interchange of vertical and horizontal 2-cell composition
  {
    detail::AxiomTally t("two-cells: interchange", "interchange law");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      bool ok = detail::eval_axiom([&] {
        auto s1 = detail::globular_square(m, fam, smp);
        auto s2 = detail::globular_square_with_top(
            m, fam, smp, smp.hcell_from(m.htgt(s1.top)));
        auto t1 = detail::globular_square_with_top(m, fam, smp, s1.bottom);
        auto t2 = detail::globular_square_with_top(m, fam, smp, s2.bottom);
        return sv(sh(s1, s2), sh(t1, t2)) == sh(sv(s1, t1), sv(s2, t2));
      });
      t.note(ok, [&] { return std::string("interchange failed"); });
    }
    rep.add(t.it);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// functors between horizontal bicategories

// View of a double functor on the horizontal layer: strict on nothing,
// with comparison cells comp : hcomp(F x, F y) => F(hcomp(x, y)) and
// unit : U_{F a} => F(U_a).
template <DoubleModel MD, DoubleModel ME, class F>
  requires DblFunctorOf<F, MD, ME>
struct BicatFunctor {
  const MD& dom;
  const ME& cod;
  const F& fn;

  typename ME::Obj obj(const typename MD::Obj& a) const { return fn.obj(a); }
  typename ME::HCell one(const typename MD::HCell& x) const { return fn.h(x); }
  typename ME::Sq two(const typename MD::Sq& s) const {
    if (!is_globular(dom, s))
      throw FrameMismatch("two-cell must be globular: " + dom.sq_str(s));
    return fn.sq(s);
  }
  typename ME::Sq comp(const typename MD::HCell& x,
                       const typename MD::HCell& y) const {
    return fn.comp(x, y);
  }
  typename ME::Sq unit(const typename MD::Obj& a) const { return fn.unit(a); }
};

template <DoubleModel MD, DoubleModel ME, class F>
  requires DblFunctorOf<F, MD, ME>
BicatFunctor<MD, ME, F> h_on_functor(const MD& d, const ME& e, const F& fn) {
  return {d, e, fn};
}

template <DoubleModel MD, DoubleModel ME, class F>
  requires DblFunctorOf<F, MD, ME>
Report verify_bicat_functor(const MD& d, const ME& e, const F& fn,
                            std::uint64_t seed, long long budget = 500) {
  Report rep;
  rep.component = "bicategory_functor";
  rep.model = d.name() + " -> " + e.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<MD> fam(d);
  auto sampler = [&](const std::string& axiom) {
    return Sampler<MD>(d, fam, Rng::for_axiom(seed, axiom));
  };
  auto sh = [&](const typename ME::Sq& a, const typename ME::Sq& b) {
    return checked::sq_hcomp(e, a, b);
  };
  auto siso = [&](const typename ME::Sq& s) {
    auto i = e.sq_invert(s);
    return i.has_value() &&
           checked::sq_vcomp(e, s, *i) == e.sq_id(s.top) &&
           checked::sq_vcomp(e, *i, s) == e.sq_id(s.bottom);
  };

  // constraint cells are globular isomorphisms
  {
    detail::AxiomTally t("constraints: globular isomorphisms",
                         "pseudofunctor constraint cells");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto x = smp.hcell();
      auto y = smp.hcell_from(d.htgt(x));
      auto a = smp.obj();
      bool ok = detail::eval_axiom([&] {
        auto cc = fn.comp(x, y);
        auto cu = fn.unit(a);
        return is_globular(e, cc) && siso(cc) && is_globular(e, cu) &&
               siso(cu) &&
               cc.top == checked::hcomp(e, fn.h(x), fn.h(y)) &&
               cc.bottom == fn.h(checked::hcomp(d, x, y)) &&
               cu.top == e.hunit(fn.obj(a)) && cu.bottom == fn.h(d.hunit(a));
      });
      t.note(ok, [&] { return d.hcell_str(x) + " ; " + d.hcell_str(y); });
    }
    rep.add(t.it);
  }

  // hexagon relating the composition constraint to the associators
  {
    detail::AxiomTally t("composition constraint: associativity coherence",
                         "pseudofunctor coherence");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto x = smp.hcell();
      auto y = smp.hcell_from(d.htgt(x));
      auto z = smp.hcell_from(d.htgt(y));
      bool ok = detail::eval_axiom([&] {
        auto lhs = checked::sq_vcomp_n(
            e, {sh(fn.comp(x, y), e.sq_id(fn.h(z))),
                fn.comp(checked::hcomp(d, x, y), z),
                fn.sq(d.sq_assoc(x, y, z))});
        auto rhs = checked::sq_vcomp_n(
            e, {e.sq_assoc(fn.h(x), fn.h(y), fn.h(z)),
                sh(e.sq_id(fn.h(x)), fn.comp(y, z)),
                fn.comp(x, checked::hcomp(d, y, z))});
        return lhs == rhs;
      });
      t.note(ok, [&] { return d.hcell_str(x) + " ; " + d.hcell_str(y); });
    }
    rep.add(t.it);
  }

  // triangles relating the unit constraint to the unitors
  {
    detail::AxiomTally t("unit constraint: unitor coherence",
                         "pseudofunctor coherence");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto x = smp.hcell();
      auto a = d.hsrc(x);
      auto b = d.htgt(x);
      bool ok = detail::eval_axiom([&] {
        auto left = checked::sq_vcomp_n(
            e, {sh(fn.unit(a), e.sq_id(fn.h(x))), fn.comp(d.hunit(a), x),
                fn.sq(d.sq_unit_l(x))});
        auto right = checked::sq_vcomp_n(
            e, {sh(e.sq_id(fn.h(x)), fn.unit(b)), fn.comp(x, d.hunit(b)),
                fn.sq(d.sq_unit_r(x))});
        return left == e.sq_unit_l(fn.h(x)) && right == e.sq_unit_r(fn.h(x));
      });
      t.note(ok, [&] { return d.hcell_str(x); });
    }
    rep.add(t.it);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// vertical transformations

// Transformation between double functors: a vertical morphism per
// object and a square per horizontal cell.
template <class A, class MD, class ME>
concept DblTransformationOf =
    DoubleModel<MD> && DoubleModel<ME> &&
    requires(const A& al, const typename MD::Obj& a,
             const typename MD::HCell& h) {
      { al.v(a) } -> std::convertible_to<typename ME::VMor>;
      { al.sq(h) } -> std::convertible_to<typename ME::Sq>;
    };

template <DoubleModel MD, DoubleModel ME, class F>
  requires DblFunctorOf<F, MD, ME>
struct IdentityTransformation {
  const MD& dom;
  const ME& cod;
  const F& fn;

  typename ME::VMor v(const typename MD::Obj& a) const {
    return cod.vid(fn.obj(a));
  }
  typename ME::Sq sq(const typename MD::HCell& h) const {
    return cod.sq_id(fn.h(h));
  }
};

// Vertical composite of transformations sharing a middle functor.
template <DoubleModel ME, class A, class B>
struct CompositeTransformation {
  const ME& cod;
  const A& first;
  const B& second;

  auto v(const auto& a) const {
    return checked::vcomp(cod, first.v(a), second.v(a));
  }
  auto sq(const auto& h) const {
    return checked::sq_vcomp(cod, first.sq(h), second.sq(h));
  }
};

// Horizontal (Godement) product of transformations at consecutive
// levels: the outer one evaluated after the image of the inner one.
// Components are vcomp(h(inner_A), outer_{g A}) for inner between
// functors into the middle model with codomain functor g, and outer
// between functors out of it with domain functor h.
template <DoubleModel ME, DoubleModel MK, class G, class H, class A, class B>
struct GodementTransformation {
  const ME& mid;
  const MK& cod;
  const G& g;
  const H& h;
  const A& inner;
  const B& outer;

  auto v(const auto& a) const {
    return checked::vcomp(cod, h.v(inner.v(a)), outer.v(g.obj(a)));
  }
  auto sq(const auto& c) const {
    return checked::sq_vcomp(cod, h.sq(inner.sq(c)), outer.sq(g.h(c)));
  }
};

template <DoubleModel MD, DoubleModel ME, class F, class G, class A>
  requires DblFunctorOf<F, MD, ME> && DblFunctorOf<G, MD, ME> &&
           DblTransformationOf<A, MD, ME>
Report verify_transformation(const MD& d, const ME& e, const F& f, const G& g,
                             const A& al, std::uint64_t seed,
                             long long budget = 2000) {
  Report rep;
  rep.component = "transformation";
  rep.model = d.name() + " -> " + e.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<MD> fam(d);
  auto sampler = [&](const std::string& axiom) {
    return Sampler<MD>(d, fam, Rng::for_axiom(seed, axiom));
  };
  auto sv = [&](const typename ME::Sq& a, const typename ME::Sq& b) {
    return checked::sq_vcomp(e, a, b);
  };
  auto sh = [&](const typename ME::Sq& a, const typename ME::Sq& b) {
    return checked::sq_hcomp(e, a, b);
  };

  // components are framed by the two functors
  {
    detail::AxiomTally t("components: frames", "transformation frames");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto a = smp.obj();
      auto hm = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto va = al.v(a);
        auto s = al.sq(hm);
        return e.vsrc(va) == f.obj(a) && e.vtgt(va) == g.obj(a) &&
               s.top == f.h(hm) && s.bottom == g.h(hm) &&
               s.left == al.v(d.hsrc(hm)) && s.right == al.v(d.htgt(hm));
      });
      t.note(ok, [&] { return d.obj_str(a) + " ; " + d.hcell_str(hm); });
    }
    rep.add(t.it);
  }

  // components commute with the action on vertical morphisms
  {
    detail::AxiomTally t("components: naturality on vertical morphisms",
                         "transformation naturality");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto vf = smp.vmor();
      bool ok = detail::eval_axiom([&] {
        auto a = d.vsrc(vf);
        auto b = d.vtgt(vf);
        return checked::vcomp(e, f.v(vf), al.v(b)) ==
               checked::vcomp(e, al.v(a), g.v(vf));
      });
      t.note(ok, [&] { return d.vmor_str(vf); });
    }
    rep.add(t.it);
  }

  // components commute with the action on squares
  {
    detail::AxiomTally t("components: naturality on squares",
                         "transformation naturality");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto s = smp.square();
      bool ok = detail::eval_axiom([&] {
        return sv(f.sq(s), al.sq(s.bottom)) == sv(al.sq(s.top), g.sq(s));
      });
      t.note(ok, [&] { return d.sq_str(s); });
    }
    rep.add(t.it);
  }

  // components respect horizontal composition via the constraints
  {
    detail::AxiomTally t("components: horizontal composition",
                         "transformation functoriality");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell_from(d.htgt(hm));
      bool ok = detail::eval_axiom([&] {
        auto lhs = sv(f.comp(hm, hn), al.sq(checked::hcomp(d, hm, hn)));
        auto rhs = sv(sh(al.sq(hm), al.sq(hn)), g.comp(hm, hn));
        return lhs == rhs;
      });
      t.note(ok, [&] { return d.hcell_str(hm) + " ; " + d.hcell_str(hn); });
    }
    rep.add(t.it);
  }

  // components respect horizontal units via the constraints
  {
    detail::AxiomTally t("components: units", "transformation functoriality");
    for (const auto& a : fam.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto lhs = sv(f.unit(a), al.sq(d.hunit(a)));
        auto rhs = sv(e.sq_unit(al.v(a)), g.unit(a));
        return lhs == rhs;
      });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  return rep;
}

// Componentwise invertibility, exhaustive on objects and sampled on
// horizontal cells.
template <DoubleModel MD, DoubleModel ME, class A>
  requires DblTransformationOf<A, MD, ME>
bool transformation_invertible(const MD& d, const ME& e, const A& al,
                               std::uint64_t seed, long long budget = 200) {
  for (const auto& a : d.objects())
    if (!e.v_invert(al.v(a)).has_value()) return false;
  FamilyCache<MD> fam(d);
  Sampler<MD> smp(d, fam, Rng::for_axiom(seed, "transformation invertible"));
  for (long long i = 0; i < budget; ++i)
    if (!e.sq_invert(al.sq(smp.hcell())).has_value()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// companion choices

// Table of chosen companions and conjoints, keyed by the vertical
// morphism they lift.  Lifting constructions look their data up here,
// so two tables induce genuinely different lifts of the same
// transformation.
template <DoubleModel M>
struct CompanionChoices {
  std::map<typename M::VMor, CompanionPair<M>> companions;
  std::map<typename M::VMor, ConjointPair<M>> conjoints;

  CompanionChoices& set(CompanionPair<M> c) {
    auto key = c.f;
    companions.insert_or_assign(std::move(key), std::move(c));
    return *this;
  }
  CompanionChoices& set(ConjointPair<M> j) {
    auto key = j.f;
    conjoints.insert_or_assign(std::move(key), std::move(j));
    return *this;
  }

  bool has_companion(const typename M::VMor& f) const {
    return companions.count(f) > 0;
  }
  bool has_conjoint(const typename M::VMor& f) const {
    return conjoints.count(f) > 0;
  }

  const CompanionPair<M>& companion(const M& m,
                                    const typename M::VMor& f) const {
    auto it = companions.find(f);
    if (it == companions.end())
      throw MissingCompanion("no chosen companion for " + m.vmor_str(f));
    return it->second;
  }
  const ConjointPair<M>& conjoint(const M& m,
                                  const typename M::VMor& f) const {
    auto it = conjoints.find(f);
    if (it == conjoints.end())
      throw MissingCompanion("no chosen conjoint for " + m.vmor_str(f));
    return it->second;
  }
};

// Canonical tables over an explicit family of sets: graph companions
// and cograph conjoints for every function between listed sets.  Lets
// a table cover tensor products and other sets beyond the enumerated
// objects.
inline CompanionChoices<RelModel> rel_choices_over(
    const RelModel& m, const std::vector<typename RelModel::Obj>& sets) {
  CompanionChoices<RelModel> ch;
  for (const auto& a : sets)
    for (const auto& b : sets)
      for (const auto& f : m.vmors(a, b)) {
        ch.set(rel_companion(m, f));
        ch.set(rel_conjoint(m, f));
      }
  return ch;
}

inline CompanionChoices<SpanModel> span_choices_over(
    const SpanModel& m, const std::vector<typename SpanModel::Obj>& sets) {
  CompanionChoices<SpanModel> ch;
  for (const auto& a : sets)
    for (const auto& b : sets)
      for (const auto& f : m.vmors(a, b)) {
        ch.set(span_companion(m, f));
        ch.set(span_conjoint(m, f));
      }
  return ch;
}

// Canonical complete tables on the enumerated objects.
inline CompanionChoices<RelModel> rel_choices(const RelModel& m) {
  return rel_choices_over(m, m.objects());
}

inline CompanionChoices<SpanModel> span_choices(const SpanModel& m) {
  return span_choices_over(m, m.objects());
}

// Componentwise table on a product model.
template <DoubleModel M1, DoubleModel M2>
CompanionChoices<ProdModel<M1, M2>> pair_choices(
    const ProdModel<M1, M2>& p, const CompanionChoices<M1>& c1,
    const CompanionChoices<M2>& c2) {
  using P = ProdModel<M1, M2>;
  CompanionChoices<P> out;
  for (const auto& [f1, a] : c1.companions)
    for (const auto& [f2, b] : c2.companions)
      out.set(CompanionPair<P>{{a.f, b.f},
                               {a.lift, b.lift},
                               p.pair_sq(a.up, b.up),
                               p.pair_sq(a.down, b.down)});
  for (const auto& [f1, a] : c1.conjoints)
    for (const auto& [f2, b] : c2.conjoints)
      out.set(ConjointPair<P>{{a.f, b.f},
                              {a.colift, b.colift},
                              p.pair_sq(a.up, b.up),
                              p.pair_sq(a.down, b.down)});
  return out;
}

// Every entry of a table is what it claims to be.
template <DoubleModel M>
Report verify_choices(const M& m, const CompanionChoices<M>& ch) {
  Report rep;
  rep.component = "companion_choices";
  rep.model = m.name();

  detail::AxiomTally tc("chosen companions are companions",
                        "companion choice");
  for (const auto& kv : ch.companions) {
    bool ok = detail::eval_axiom(
        [&] { return kv.second.f == kv.first && is_companion(m, kv.second); });
    tc.note(ok, [&] { return m.vmor_str(kv.first); });
  }
  rep.add(tc.it);

  detail::AxiomTally tj("chosen conjoints are conjoints", "conjoint choice");
  for (const auto& kv : ch.conjoints) {
    bool ok = detail::eval_axiom(
        [&] { return kv.second.f == kv.first && is_conjoint(m, kv.second); });
    tj.note(ok, [&] { return m.vmor_str(kv.first); });
  }
  rep.add(tj.it);

  return rep;
}

// ---------------------------------------------------------------------------
// lifted transformations

// A vertical transformation lifted through chosen companions and
// conjoints of its components.  The oplax cell at a horizontal cell M
// pastes the companion folding squares around the transformation
// square; the lax cell does the same with the conjoint squares.  The
// two are adjoint mates under the componentwise companion-conjoint
// adjunctions.
template <DoubleModel MD, DoubleModel ME, class F, class G, class A>
  requires DblFunctorOf<F, MD, ME> && DblFunctorOf<G, MD, ME> &&
           DblTransformationOf<A, MD, ME>
class LiftedTransformation {
 public:
  LiftedTransformation(const MD& d, const ME& e, const F& f, const G& g,
                       const A& al, const CompanionChoices<ME>& choices)
      : d_(d), e_(e), f_(f), g_(g), al_(al), ch_(choices) {
    // every component needs both a chosen companion and conjoint
    for (const auto& a : d.objects()) {
      ch_.companion(e_, al_.v(a));
      ch_.conjoint(e_, al_.v(a));
    }
  }

  const MD& dom() const { return d_; }
  const ME& cod() const { return e_; }
  const F& functor_src() const { return f_; }
  const G& functor_tgt() const { return g_; }
  const A& base() const { return al_; }
  const CompanionChoices<ME>& choices() const { return ch_; }

  const CompanionPair<ME>& companion_at(const typename MD::Obj& a) const {
    return ch_.companion(e_, al_.v(a));
  }
  const ConjointPair<ME>& conjoint_at(const typename MD::Obj& a) const {
    return ch_.conjoint(e_, al_.v(a));
  }
  typename ME::HCell lift_at(const typename MD::Obj& a) const {
    return companion_at(a).lift;
  }
  typename ME::HCell colift_at(const typename MD::Obj& a) const {
    return conjoint_at(a).colift;
  }
  AdjunctionData<ME> adjunction_at(const typename MD::Obj& a) const {
    return adjunction(e_, companion_at(a), conjoint_at(a));
  }

  // globular, hcomp(F m, lift_at(B)) => hcomp(lift_at(A), G m)
  const typename ME::Sq& oplax_at(const typename MD::HCell& m) const {
    auto it = oplax_.find(m);
    if (it != oplax_.end()) return it->second;
    const auto& e = e_;
    const auto& ca = companion_at(d_.hsrc(m));
    const auto& cb = companion_at(d_.htgt(m));
    auto fm = f_.h(m);
    auto raw = checked::sq_hcomp_n(e, {ca.up, al_.sq(m), cb.down});
    auto cell = checked::sq_vcomp_n(
        e, {checked::sq_hcomp(e, checked::sq_invert(e, e.sq_unit_l(fm)),
                              e.sq_id(cb.lift)),
            raw, e.sq_unit_r(checked::hcomp(e, ca.lift, g_.h(m)))});
    return oplax_.emplace(m, std::move(cell)).first->second;
  }

  // globular, hcomp(colift_at(A), F m) => hcomp(G m, colift_at(B))
  const typename ME::Sq& lax_at(const typename MD::HCell& m) const {
    auto it = lax_.find(m);
    if (it != lax_.end()) return it->second;
    const auto& e = e_;
    const auto& ja = conjoint_at(d_.hsrc(m));
    const auto& jb = conjoint_at(d_.htgt(m));
    auto gm = g_.h(m);
    auto raw = checked::sq_hcomp_n(e, {ja.down, al_.sq(m), jb.up});
    auto cell = checked::sq_vcomp_n(
        e, {checked::sq_invert(
                e, e.sq_unit_r(checked::hcomp(e, ja.colift, f_.h(m)))),
            raw,
            checked::sq_hcomp(e, e.sq_unit_l(gm), e.sq_id(jb.colift))});
    return lax_.emplace(m, std::move(cell)).first->second;
  }

  // mate of the oplax cell under the component adjunctions; agrees
  // with lax_at on the nose
  typename ME::Sq lax_via_adjunction(const typename MD::HCell& m) const {
    const auto& e = e_;
    auto a = d_.hsrc(m);
    auto b = d_.htgt(m);
    auto adj_a = adjunction_at(a);
    auto adj_b = adjunction_at(b);
    auto ka = colift_at(a);
    auto kb = colift_at(b);
    auto ha = lift_at(a);
    auto hb = lift_at(b);
    auto x = f_.h(m);
    auto y = g_.h(m);
    const auto& phi = oplax_at(m);
    auto kx = checked::hcomp(e, ka, x);
    return checked::sq_vcomp_n(
        e,
        {checked::sq_invert(e, e.sq_unit_r(kx)),
         checked::sq_hcomp(e, e.sq_id(kx), adj_b.unit),
         checked::sq_invert(e, e.sq_assoc(kx, hb, kb)),
         checked::sq_hcomp(e, e.sq_assoc(ka, x, hb), e.sq_id(kb)),
         checked::sq_hcomp(e, checked::sq_hcomp(e, e.sq_id(ka), phi),
                           e.sq_id(kb)),
         checked::sq_hcomp(e, checked::sq_invert(e, e.sq_assoc(ka, ha, y)),
                           e.sq_id(kb)),
         checked::sq_hcomp(e, checked::sq_hcomp(e, adj_a.counit, e.sq_id(y)),
                           e.sq_id(kb)),
         checked::sq_hcomp(e, e.sq_unit_l(y), e.sq_id(kb))});
  }

 private:
  const MD& d_;
  const ME& e_;
  const F& f_;
  const G& g_;
  const A& al_;
  const CompanionChoices<ME>& ch_;
  mutable std::map<typename MD::HCell, typename ME::Sq> oplax_;
  mutable std::map<typename MD::HCell, typename ME::Sq> lax_;
};

template <DoubleModel MD, DoubleModel ME, class F, class G, class A>
  requires DblFunctorOf<F, MD, ME> && DblFunctorOf<G, MD, ME> &&
           DblTransformationOf<A, MD, ME>
LiftedTransformation<MD, ME, F, G, A> lift_transformation(
    const MD& d, const ME& e, const F& f, const G& g, const A& al,
    const CompanionChoices<ME>& choices) {
  return LiftedTransformation<MD, ME, F, G, A>(d, e, f, g, al, choices);
}

template <DoubleModel MD, DoubleModel ME, class F, class G, class A>
Report verify_lifted_transformation(
    const LiftedTransformation<MD, ME, F, G, A>& cj, std::uint64_t seed,
    long long budget = 300, bool expect_invertible = false) {
  Report rep;
  rep.component = "lifted_transformation";
  const MD& d = cj.dom();
  const ME& e = cj.cod();
  const F& f = cj.functor_src();
  const G& g = cj.functor_tgt();
  rep.model = d.name() + " -> " + e.name();
  rep.seed = seed;
  rep.budget = budget;

  FamilyCache<MD> fam(d);
  auto sampler = [&](const std::string& axiom) {
    return Sampler<MD>(d, fam, Rng::for_axiom(seed, axiom));
  };
  auto sv = [&](const typename ME::Sq& a, const typename ME::Sq& b) {
    return checked::sq_vcomp(e, a, b);
  };
  auto sh = [&](const typename ME::Sq& a, const typename ME::Sq& b) {
    return checked::sq_hcomp(e, a, b);
  };
  auto inv = [&](const typename ME::Sq& s) {
    return checked::sq_invert(e, s);
  };

  // chosen component data is genuine
  {
    detail::AxiomTally t("components: chosen companions and conjoints",
                         "companion choice");
    for (const auto& a : fam.objects()) {
      bool ok = detail::eval_axiom([&] {
        return is_companion(e, cj.companion_at(a)) &&
               is_conjoint(e, cj.conjoint_at(a));
      });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  // unit and counit of each component adjunction satisfy the triangles
  {
    detail::AxiomTally t("components: adjunction triangles",
                         "companion-conjoint adjunction");
    for (const auto& a : fam.objects()) {
      bool ok = detail::eval_axiom(
          [&] { return adjunction_triangles_hold(e, cj.adjunction_at(a)); });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  // oplax and lax cells carry the stated globular frames
  {
    detail::AxiomTally t("lifted cells: frames", "lifted cell frames");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto a = d.hsrc(hm);
        auto b = d.htgt(hm);
        const auto& op = cj.oplax_at(hm);
        const auto& lx = cj.lax_at(hm);
        return is_globular(e, op) && is_globular(e, lx) &&
               op.top == checked::hcomp(e, f.h(hm), cj.lift_at(b)) &&
               op.bottom == checked::hcomp(e, cj.lift_at(a), g.h(hm)) &&
               lx.top == checked::hcomp(e, cj.colift_at(a), f.h(hm)) &&
               lx.bottom == checked::hcomp(e, g.h(hm), cj.colift_at(b));
      });
      t.note(ok, [&] { return d.hcell_str(hm); });
    }
    rep.add(t.it);
  }

  // oplax cells are natural in globular 2-cells
  {
    detail::AxiomTally t("oplax cells: naturality", "oplax naturality");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto s = detail::globular_square(d, fam, smp);
      bool ok = detail::eval_axiom([&] {
        auto a = d.hsrc(s.top);
        auto b = d.htgt(s.top);
        auto lhs = sv(sh(f.sq(s), e.sq_id(cj.lift_at(b))),
                      cj.oplax_at(s.bottom));
        auto rhs = sv(cj.oplax_at(s.top),
                      sh(e.sq_id(cj.lift_at(a)), g.sq(s)));
        return lhs == rhs;
      });
      t.note(ok, [&] { return d.sq_str(s); });
    }
    rep.add(t.it);
  }

  // oplax cells respect horizontal composition
  {
    detail::AxiomTally t("oplax cells: composition", "oplax composition");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      auto hn = smp.hcell_from(d.htgt(hm));
      bool ok = detail::eval_axiom([&] {
        auto a = d.hsrc(hm);
        auto b = d.htgt(hm);
        auto c = d.htgt(hn);
        auto fm = f.h(hm);
        auto fn_ = f.h(hn);
        auto gm = g.h(hm);
        auto gn = g.h(hn);
        auto p1 = sv(sh(f.comp(hm, hn), e.sq_id(cj.lift_at(c))),
                     cj.oplax_at(checked::hcomp(d, hm, hn)));
        auto p2 = checked::sq_vcomp_n(
            e, {e.sq_assoc(fm, fn_, cj.lift_at(c)),
                sh(e.sq_id(fm), cj.oplax_at(hn)),
                inv(e.sq_assoc(fm, cj.lift_at(b), gn)),
                sh(cj.oplax_at(hm), e.sq_id(gn)),
                e.sq_assoc(cj.lift_at(a), gm, gn),
                sh(e.sq_id(cj.lift_at(a)), g.comp(hm, hn))});
        return p1 == p2;
      });
      t.note(ok, [&] { return d.hcell_str(hm) + " ; " + d.hcell_str(hn); });
    }
    rep.add(t.it);
  }

  // oplax cells respect horizontal units
  {
    detail::AxiomTally t("oplax cells: units", "oplax unit axiom");
    for (const auto& a : fam.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto ha = cj.lift_at(a);
        auto p1 = sv(sh(f.unit(a), e.sq_id(ha)), cj.oplax_at(d.hunit(a)));
        auto p2 = checked::sq_vcomp_n(
            e, {e.sq_unit_l(ha), inv(e.sq_unit_r(ha)),
                sh(e.sq_id(ha), g.unit(a))});
        return p1 == p2;
      });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  // pasting with the adjunction unit relates the oplax to the lax cell
  {
    detail::AxiomTally t("conjunction: unit-side pasting",
                         "conjunction compatibility");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto a = d.hsrc(hm);
        auto b = d.htgt(hm);
        auto fm = f.h(hm);
        auto gm = g.h(hm);
        auto ha = cj.lift_at(a);
        auto hb = cj.lift_at(b);
        auto ka = cj.colift_at(a);
        auto kb = cj.colift_at(b);
        auto eta_a = cj.adjunction_at(a).unit;
        auto eta_b = cj.adjunction_at(b).unit;
        auto lhs = checked::sq_vcomp_n(
            e, {inv(e.sq_unit_r(fm)), sh(e.sq_id(fm), eta_b),
                inv(e.sq_assoc(fm, hb, kb)),
                sh(cj.oplax_at(hm), e.sq_id(kb))});
        auto rhs = checked::sq_vcomp_n(
            e, {inv(e.sq_unit_l(fm)), sh(eta_a, e.sq_id(fm)),
                e.sq_assoc(ha, ka, fm), sh(e.sq_id(ha), cj.lax_at(hm)),
                inv(e.sq_assoc(ha, gm, kb))});
        return lhs == rhs;
      });
      t.note(ok, [&] { return d.hcell_str(hm); });
    }
    rep.add(t.it);
  }

  // pasting with the adjunction counit closes the other square
  {
    detail::AxiomTally t("conjunction: counit-side pasting",
                         "conjunction compatibility");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto a = d.hsrc(hm);
        auto b = d.htgt(hm);
        auto fm = f.h(hm);
        auto gm = g.h(hm);
        auto ha = cj.lift_at(a);
        auto hb = cj.lift_at(b);
        auto ka = cj.colift_at(a);
        auto kb = cj.colift_at(b);
        auto eps_a = cj.adjunction_at(a).counit;
        auto eps_b = cj.adjunction_at(b).counit;
        auto lhs = checked::sq_vcomp_n(
            e, {sh(cj.lax_at(hm), e.sq_id(hb)), e.sq_assoc(gm, kb, hb),
                sh(e.sq_id(gm), eps_b), e.sq_unit_r(gm)});
        auto rhs = checked::sq_vcomp_n(
            e, {e.sq_assoc(ka, fm, hb), sh(e.sq_id(ka), cj.oplax_at(hm)),
                inv(e.sq_assoc(ka, ha, gm)), sh(eps_a, e.sq_id(gm)),
                e.sq_unit_l(gm)});
        return lhs == rhs;
      });
      t.note(ok, [&] { return d.hcell_str(hm); });
    }
    rep.add(t.it);
  }

  // the lax part is determined by the oplax part as its adjoint mate
  {
    detail::AxiomTally t("lax cells are adjoint mates of oplax cells",
                         "adjoint mate calculus");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      bool ok = detail::eval_axiom(
          [&] { return cj.lax_via_adjunction(hm) == cj.lax_at(hm); });
      t.note(ok, [&] { return d.hcell_str(hm); });
    }
    rep.add(t.it);
  }

  if (expect_invertible) {
    // invertible components make both parts pseudo
    detail::AxiomTally t("invertible case: oplax and lax cells invertible",
                         "pseudo transformation");
    t.it.mode = "sampled";
    auto smp = sampler(t.it.name);
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        return e.sq_invert(cj.oplax_at(hm)).has_value() &&
               e.sq_invert(cj.lax_at(hm)).has_value();
      });
      t.note(ok, [&] { return d.hcell_str(hm); });
    }
    rep.add(t.it);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// modifications and mates

// Object-indexed family of globular cells between the lifted 1-cells
// of two lifted transformations.
template <DoubleModel MD, DoubleModel ME>
struct Modification {
  const MD& dom;
  const ME& cod;
  std::map<typename MD::Obj, typename ME::Sq> at;

  const typename ME::Sq& operator()(const typename MD::Obj& a) const {
    auto it = at.find(a);
    if (it == at.end())
      throw FrameMismatch("modification: no component at " + dom.obj_str(a));
    return it->second;
  }
};

// Pasting equality making a component family a modification between
// oplax transformations sharing functor boundaries: whiskering the
// target component before the destination 2-cell agrees with
// whiskering the source component after the origin 2-cell.
template <DoubleModel ME>
bool modification_axiom_holds(const ME& e, const typename ME::HCell& fm,
                              const typename ME::HCell& gm,
                              const typename ME::Sq& mu_src,
                              const typename ME::Sq& mu_tgt,
                              const typename ME::Sq& from_cell,
                              const typename ME::Sq& to_cell) {
  auto lhs = checked::sq_vcomp(
      e, checked::sq_hcomp(e, e.sq_id(fm), mu_tgt), to_cell);
  auto rhs = checked::sq_vcomp(
      e, from_cell, checked::sq_hcomp(e, mu_src, e.sq_id(gm)));
  return lhs == rhs;
}

// Mate of a comparison between oplax parts: a comparison between the
// lax parts in the opposite direction, built from the component
// adjunctions.  Components of mu run src.lift_at(a) => dst.lift_at(a);
// components of the result run dst.colift_at(a) => src.colift_at(a).
template <DoubleModel MD, DoubleModel ME, class CSrc, class CDst>
Modification<MD, ME> mate(const MD& d, const ME& e, const CSrc& src,
                          const CDst& dst, const Modification<MD, ME>& mu) {
  Modification<MD, ME> out{d, e, {}};
  for (const auto& [a, cell] : mu.at) {
    if (!(cell.top == src.lift_at(a) && cell.bottom == dst.lift_at(a) &&
          is_globular(e, cell)))
      throw FrameMismatch("mate: component at " + d.obj_str(a) +
                          " is not framed by the lifted cells");
    auto adj_src = src.adjunction_at(a);
    auto adj_dst = dst.adjunction_at(a);
    auto kd = dst.colift_at(a);
    auto ks = src.colift_at(a);
    out.at.emplace(
        a, checked::sq_vcomp_n(
               e, {checked::sq_invert(e, e.sq_unit_r(kd)),
                   checked::sq_hcomp(e, e.sq_id(kd), adj_src.unit),
                   checked::sq_invert(
                       e, e.sq_assoc(kd, src.lift_at(a), ks)),
                   checked::sq_hcomp(
                       e, checked::sq_hcomp(e, e.sq_id(kd), cell),
                       e.sq_id(ks)),
                   checked::sq_hcomp(e, adj_dst.counit, e.sq_id(ks)),
                   e.sq_unit_l(ks)}));
  }
  return out;
}

// Inverse construction: from a comparison between lax parts back to a
// comparison between oplax parts.  Components of nu run
// dst.colift_at(a) => src.colift_at(a); components of the result run
// src.lift_at(a) => dst.lift_at(a).
template <DoubleModel MD, DoubleModel ME, class CSrc, class CDst>
Modification<MD, ME> comate(const MD& d, const ME& e, const CSrc& src,
                            const CDst& dst, const Modification<MD, ME>& nu) {
  Modification<MD, ME> out{d, e, {}};
  for (const auto& [a, cell] : nu.at) {
    if (!(cell.top == dst.colift_at(a) && cell.bottom == src.colift_at(a) &&
          is_globular(e, cell)))
      throw FrameMismatch("comate: component at " + d.obj_str(a) +
                          " is not framed by the lifted cells");
    auto adj_src = src.adjunction_at(a);
    auto adj_dst = dst.adjunction_at(a);
    auto hs = src.lift_at(a);
    auto hd = dst.lift_at(a);
    out.at.emplace(
        a, checked::sq_vcomp_n(
               e, {checked::sq_invert(e, e.sq_unit_l(hs)),
                   checked::sq_hcomp(e, adj_dst.unit, e.sq_id(hs)),
                   e.sq_assoc(hd, dst.colift_at(a), hs),
                   checked::sq_hcomp(
                       e, e.sq_id(hd),
                       checked::sq_hcomp(e, cell, e.sq_id(hs))),
                   checked::sq_hcomp(e, e.sq_id(hd), adj_src.counit),
                   e.sq_unit_r(hd)}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// the local functor on transformations

// Exchange comparing the chosen lift of a composite vertical morphism
// with the composite of the chosen lifts.
template <DoubleModel M>
typename M::Sq composition_constraint(const M& m,
                                      const CompanionChoices<M>& ch,
                                      const typename M::VMor& f,
                                      const typename M::VMor& g) {
  return theta(m, ch.companion(m, checked::vcomp(m, f, g)),
               compose_companions(m, ch.companion(m, f), ch.companion(m, g)));
}

// Exchange from the chosen lift of an identity to the unit cell.
template <DoubleModel M>
typename M::Sq unit_constraint(const M& m, const CompanionChoices<M>& ch,
                               const typename M::Obj& a) {
  return theta(m, ch.companion(m, m.vid(a)), companion_of_identity(m, a));
}

// The hom-wise functor induced by lifting: transformations go to their
// lifted oplax parts, with the exchange squares above as composition
// and unit constraints.
template <DoubleModel MD, DoubleModel ME>
struct LocalFunctor {
  const MD& dom;
  const ME& cod;
  const CompanionChoices<ME>& choices;

  template <class F, class G, class A>
    requires DblFunctorOf<F, MD, ME> && DblFunctorOf<G, MD, ME> &&
             DblTransformationOf<A, MD, ME>
  LiftedTransformation<MD, ME, F, G, A> lift(const F& f, const G& g,
                                             const A& al) const {
    return lift_transformation(dom, cod, f, g, al, choices);
  }
  typename ME::Sq comp_at(const typename ME::VMor& f,
                          const typename ME::VMor& g) const {
    return composition_constraint(cod, choices, f, g);
  }
  typename ME::Sq unit_at(const typename ME::Obj& x) const {
    return unit_constraint(cod, choices, x);
  }
};

template <DoubleModel MD, DoubleModel ME>
LocalFunctor<MD, ME> functor_on_transformations(
    const MD& d, const ME& e, const CompanionChoices<ME>& choices) {
  return {d, e, choices};
}

// Coherence of the local constraints: exchange squares are pinned
// isomorphisms, they satisfy the associativity pentagon on a
// composable triple of transformations, and the unit constraints
// satisfy both triangles.
template <DoubleModel MD, DoubleModel ME, class A, class B, class C>
Report verify_local_functor(const MD& d, const ME& e,
                            const CompanionChoices<ME>& ch, const A& al,
                            const B& be, const C& ga) {
  Report rep;
  rep.component = "local_functor";
  rep.model = d.name() + " -> " + e.name();

  auto sv = [&](const typename ME::Sq& a, const typename ME::Sq& b) {
    return checked::sq_vcomp(e, a, b);
  };
  auto sh = [&](const typename ME::Sq& a, const typename ME::Sq& b) {
    return checked::sq_hcomp(e, a, b);
  };
  auto inv = [&](const typename ME::Sq& s) {
    return checked::sq_invert(e, s);
  };
  auto siso = [&](const typename ME::Sq& s) {
    auto i = e.sq_invert(s);
    return i.has_value() && sv(s, *i) == e.sq_id(s.top) &&
           sv(*i, s) == e.sq_id(s.bottom);
  };

  // constraints are invertible exchange squares
  {
    detail::AxiomTally t("constraints: pinned exchange isomorphisms",
                         "exchange uniqueness");
    for (const auto& a : d.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto fa = al.v(a);
        auto fb = be.v(a);
        auto fc = ga.v(a);
        auto pair_ab = compose_companions(e, ch.companion(e, fa),
                                          ch.companion(e, fb));
        auto pair_bc = compose_companions(e, ch.companion(e, fb),
                                          ch.companion(e, fc));
        auto c_ab = composition_constraint(e, ch, fa, fb);
        auto c_bc = composition_constraint(e, ch, fb, fc);
        auto u = unit_constraint(e, ch, e.vsrc(fa));
        return siso(c_ab) && siso(c_bc) && siso(u) &&
               theta_equation_holds(
                   e, ch.companion(e, checked::vcomp(e, fa, fb)), pair_ab,
                   c_ab) &&
               theta_equation_holds(
                   e, ch.companion(e, checked::vcomp(e, fb, fc)), pair_bc,
                   c_bc) &&
               theta_equation_holds(e, ch.companion(e, e.vid(e.vsrc(fa))),
                                    companion_of_identity(e, e.vsrc(fa)), u);
      });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  // associativity pentagon for the composition constraints
  {
    detail::AxiomTally t("constraints: associativity coherence",
                         "pseudofunctor coherence");
    for (const auto& a : d.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto fa = al.v(a);
        auto fb = be.v(a);
        auto fc = ga.v(a);
        auto ha = ch.companion(e, fa).lift;
        auto hb = ch.companion(e, fb).lift;
        auto hc = ch.companion(e, fc).lift;
        auto p1 = sv(composition_constraint(e, ch, checked::vcomp(e, fa, fb),
                                            fc),
                     sh(composition_constraint(e, ch, fa, fb), e.sq_id(hc)));
        auto p2 = checked::sq_vcomp_n(
            e, {composition_constraint(e, ch, fa, checked::vcomp(e, fb, fc)),
                sh(e.sq_id(ha), composition_constraint(e, ch, fb, fc)),
                inv(e.sq_assoc(ha, hb, hc))});
        // both pentagon paths agree with the one-step exchange
        auto whole = theta(
            e,
            ch.companion(e, checked::vcomp(e, checked::vcomp(e, fa, fb), fc)),
            compose_companions(
                e,
                compose_companions(e, ch.companion(e, fa),
                                   ch.companion(e, fb)),
                ch.companion(e, fc)));
        return p1 == p2 && p1 == whole;
      });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  // unit triangles for every vertical morphism of the codomain
  {
    detail::AxiomTally t("constraints: unit triangles",
                         "pseudofunctor coherence");
    FamilyCache<ME> fem(e);
    for (const auto& x : fem.objects())
      for (const auto& y : fem.objects())
        for (const auto& vf : fem.vmors(x, y)) {
          bool ok = detail::eval_axiom([&] {
            auto hf = ch.companion(e, vf).lift;
            auto left = checked::sq_vcomp_n(
                e, {composition_constraint(e, ch, e.vid(x), vf),
                    sh(unit_constraint(e, ch, x), e.sq_id(hf)),
                    e.sq_unit_l(hf)});
            auto right = checked::sq_vcomp_n(
                e, {composition_constraint(e, ch, vf, e.vid(y)),
                    sh(e.sq_id(hf), unit_constraint(e, ch, y)),
                    e.sq_unit_r(hf)});
            return left == e.sq_id(hf) && right == e.sq_id(hf);
          });
          t.note(ok, [&] { return e.vmor_str(vf); });
        }
    rep.add(t.it);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// choice comparison

// Componentwise exchange between the lifts of one transformation from
// two choice tables.
template <DoubleModel M>
struct ChoiceComparison {
  const M& cod;
  const CompanionChoices<M>& one;
  const CompanionChoices<M>& two;

  typename M::Sq at(const typename M::VMor& f) const {
    return theta(cod, one.companion(cod, f), two.companion(cod, f));
  }
  typename M::Sq at_conjoint(const typename M::VMor& f) const {
    return theta_conjoint(cod, one.conjoint(cod, f), two.conjoint(cod, f));
  }
};

template <DoubleModel M>
ChoiceComparison<M> choice_comparison(const M& m,
                                      const CompanionChoices<M>& one,
                                      const CompanionChoices<M>& two) {
  return {m, one, two};
}

// The comparison is an invertible modification between the two lifts,
// and its mate is the conjoint-side exchange.
template <DoubleModel MD, DoubleModel ME, class F, class G, class A>
  requires DblFunctorOf<F, MD, ME> && DblFunctorOf<G, MD, ME> &&
           DblTransformationOf<A, MD, ME>
Report verify_choice_comparison(const MD& d, const ME& e, const F& f,
                                const G& g, const A& al,
                                const CompanionChoices<ME>& one,
                                const CompanionChoices<ME>& two,
                                std::uint64_t seed, long long budget = 300) {
  Report rep;
  rep.component = "choice_comparison";
  rep.model = d.name() + " -> " + e.name();
  rep.seed = seed;
  rep.budget = budget;

  auto cmp = choice_comparison(e, one, two);
  auto lift1 = lift_transformation(d, e, f, g, al, one);
  auto lift2 = lift_transformation(d, e, f, g, al, two);

  Modification<MD, ME> mu{d, e, {}};
  for (const auto& a : d.objects()) mu.at.emplace(a, cmp.at(al.v(a)));

  auto sv = [&](const typename ME::Sq& a, const typename ME::Sq& b) {
    return checked::sq_vcomp(e, a, b);
  };
  auto siso = [&](const typename ME::Sq& s) {
    auto i = e.sq_invert(s);
    return i.has_value() && sv(s, *i) == e.sq_id(s.top) &&
           sv(*i, s) == e.sq_id(s.bottom);
  };

  // components are pinned exchange isomorphisms
  {
    detail::AxiomTally t("comparison: pinned exchange isomorphisms",
                         "exchange uniqueness");
    for (const auto& a : d.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto va = al.v(a);
        return siso(mu(a)) &&
               theta_equation_holds(e, one.companion(e, va),
                                    two.companion(e, va), mu(a));
      });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  // the component family is a modification between the two lifts
  {
    detail::AxiomTally t("comparison: modification axiom",
                         "modification axiom");
    t.it.mode = "sampled";
    FamilyCache<MD> fam(d);
    Sampler<MD> smp(d, fam, Rng::for_axiom(seed, t.it.name));
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto a = d.hsrc(hm);
        auto b = d.htgt(hm);
        return modification_axiom_holds(e, f.h(hm), g.h(hm), mu(a), mu(b),
                                        lift1.oplax_at(hm),
                                        lift2.oplax_at(hm));
      });
      t.note(ok, [&] { return d.hcell_str(hm); });
    }
    rep.add(t.it);
  }

  // the mate of the comparison is the conjoint-side exchange
  {
    detail::AxiomTally t("comparison: mate is the conjoint exchange",
                         "adjoint mate calculus");
    auto mu_bar = mate(d, e, lift1, lift2, mu);
    for (const auto& a : d.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto va = al.v(a);
        return mu_bar(a) ==
               theta_conjoint(e, two.conjoint(e, va), one.conjoint(e, va));
      });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  // the mate construction is involutive
  {
    detail::AxiomTally t("comparison: double mate is the identity",
                         "adjoint mate calculus");
    auto mu_bar = mate(d, e, lift1, lift2, mu);
    auto mu_back = comate(d, e, lift1, lift2, mu_bar);
    for (const auto& a : d.objects()) {
      bool ok =
          detail::eval_axiom([&] { return mu_back(a) == mu(a); });
      t.note(ok, [&] { return d.obj_str(a); });
    }
    rep.add(t.it);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// compositor and unitor across levels

// Oplax 2-cell of the horizontal (Godement) composite of two lifted
// transformations: the inner lift passes through the outer functor
// level, then the outer lift acts.  Starts at
// hcomp(HF m, hcomp(H lift_inner(B), lift_outer(G B))).
template <DoubleModel MC, DoubleModel MD, DoubleModel ME, class CI, class CO>
typename ME::Sq godement_oplax_cell(const MC& c, const MD&, const ME& e,
                                    const CI& inner, const CO& outer,
                                    const typename MC::HCell& m) {
  const auto& f = inner.functor_src();
  const auto& g = inner.functor_tgt();
  const auto& h = outer.functor_src();
  const auto& k = outer.functor_tgt();
  auto a = c.hsrc(m);
  auto b = c.htgt(m);
  auto hat_a = h.h(inner.lift_at(a));
  auto hat_b = h.h(inner.lift_at(b));
  auto out_a = outer.lift_at(g.obj(a));
  auto out_b = outer.lift_at(g.obj(b));
  auto hfm = h.h(f.h(m));
  auto hgm = h.h(g.h(m));
  auto kgm = k.h(g.h(m));
  auto inner_img = checked::sq_vcomp_n(
      e, {h.comp(f.h(m), inner.lift_at(b)), h.sq(inner.oplax_at(m)),
          checked::sq_invert(e, h.comp(inner.lift_at(a), g.h(m)))});
  return checked::sq_vcomp_n(
      e, {checked::sq_invert(e, e.sq_assoc(hfm, hat_b, out_b)),
          checked::sq_hcomp(e, inner_img, e.sq_id(out_b)),
          e.sq_assoc(hat_a, hgm, out_b),
          checked::sq_hcomp(e, e.sq_id(hat_a), outer.oplax_at(g.h(m))),
          checked::sq_invert(e, e.sq_assoc(hat_a, out_a, kgm))});
}

// Compositor: exchange from the composite of lifted transformations,
// the inner one mapped through the connecting functor, to the chosen
// lift of their Godement composite.
template <DoubleModel MC, DoubleModel MD, DoubleModel ME, class G, class H,
          class A, class B>
  requires DblFunctorOf<G, MC, MD> && DblFunctorOf<H, MD, ME> &&
           DblTransformationOf<A, MC, MD> && DblTransformationOf<B, MD, ME>
typename ME::Sq compositor_at(const MC&, const MD& d, const ME& e,
                              const G& g, const H& h, const A& al, const B& be,
                              const CompanionChoices<MD>& chd,
                              const CompanionChoices<ME>& che,
                              const typename MC::Obj& a) {
  auto inner = map_companion(d, e, h, chd.companion(d, al.v(a)));
  const auto& outer = che.companion(e, be.v(g.obj(a)));
  auto composite = compose_companions(e, inner, outer);
  auto target =
      che.companion(e, checked::vcomp(e, h.v(al.v(a)), be.v(g.obj(a))));
  return theta(e, composite, target);
}

// Compositor and unitor checks for one composable pair of lifted
// transformations across levels.  The unitor is the unit constraint of
// the local functor, so the triangles below pin it rather than any
// separate datum.
template <DoubleModel MC, DoubleModel MD, DoubleModel ME, class F, class G,
          class H, class K, class A, class B>
  requires DblFunctorOf<F, MC, MD> && DblFunctorOf<G, MC, MD> &&
           DblFunctorOf<H, MD, ME> && DblFunctorOf<K, MD, ME> &&
           DblTransformationOf<A, MC, MD> && DblTransformationOf<B, MD, ME>
Report verify_compositor(const MC& c, const MD& d, const ME& e, const F& f,
                         const G& g, const H& h, const K& k, const A& al,
                         const B& be, const CompanionChoices<MC>& chc,
                         const CompanionChoices<MD>& chd,
                         const CompanionChoices<ME>& che, std::uint64_t seed,
                         long long budget = 200) {
  Report rep;
  rep.component = "compositor";
  rep.model = c.name() + " -> " + d.name() + " -> " + e.name();
  rep.seed = seed;
  rep.budget = budget;

  CompositeFunctor<MC, MD, ME, F, H> hf{d, e, f, h};
  CompositeFunctor<MC, MD, ME, G, K> kg{d, e, g, k};
  GodementTransformation<MD, ME, G, H, A, B> god{d, e, g, h, al, be};
  auto inner = lift_transformation(c, d, f, g, al, chd);
  auto outer = lift_transformation(d, e, h, k, be, che);
  auto lifted = lift_transformation(c, e, hf, kg, god, che);

  auto sv = [&](const typename ME::Sq& x, const typename ME::Sq& y) {
    return checked::sq_vcomp(e, x, y);
  };
  auto siso = [&](const typename ME::Sq& s) {
    auto i = e.sq_invert(s);
    return i.has_value() && sv(s, *i) == e.sq_id(s.top) &&
           sv(*i, s) == e.sq_id(s.bottom);
  };
  auto chi = [&](const typename MC::Obj& a) {
    return compositor_at(c, d, e, g, h, al, be, chd, che, a);
  };

  // compositor components are pinned exchange isomorphisms
  {
    detail::AxiomTally t("compositor: pinned exchange isomorphisms",
                         "exchange uniqueness");
    for (const auto& a : c.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto composite = compose_companions(
            e, map_companion(d, e, h, chd.companion(d, al.v(a))),
            che.companion(e, be.v(g.obj(a))));
        auto target = che.companion(e, god.v(a));
        auto x = chi(a);
        return siso(x) && theta_equation_holds(e, composite, target, x);
      });
      t.note(ok, [&] { return c.obj_str(a); });
    }
    rep.add(t.it);
  }

  // the compositor is a modification from the composite of the lifts
  // to the lift of the composite
  {
    detail::AxiomTally t("compositor: modification axiom",
                         "modification axiom");
    t.it.mode = "sampled";
    FamilyCache<MC> fam(c);
    Sampler<MC> smp(c, fam, Rng::for_axiom(seed, t.it.name));
    for (long long i = 0; i < budget; ++i) {
      auto hm = smp.hcell();
      bool ok = detail::eval_axiom([&] {
        auto a = c.hsrc(hm);
        auto b = c.htgt(hm);
        return modification_axiom_holds(
            e, hf.h(hm), kg.h(hm), chi(a), chi(b),
            godement_oplax_cell(c, d, e, inner, outer, hm),
            lifted.oplax_at(hm));
      });
      t.note(ok, [&] { return c.hcell_str(hm); });
    }
    rep.add(t.it);
  }

  // composing the identity lifts and comparing gives the unit
  // constraint back
  {
    detail::AxiomTally t("compositor: identity lifts compose to the unit",
                         "unit comparison");
    IdentityTransformation<MC, MD, F> one_f{c, d, f};
    IdentityTransformation<MD, ME, H> one_h{d, e, h};
    for (const auto& a : c.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto fa = f.obj(a);
        auto hfa = h.obj(fa);
        auto u = e.hunit(hfa);
        auto iota_d = unit_constraint(d, chd, fa);
        auto iota_e = unit_constraint(e, che, hfa);
        auto lift_arrow =
            sv(h.unit(fa), h.sq(checked::sq_invert(d, iota_d)));
        auto chi11 =
            compositor_at(c, d, e, f, h, one_f, one_h, chd, che, a);
        auto path = checked::sq_vcomp_n(
            e, {checked::sq_invert(e, e.sq_unit_l(u)),
                checked::sq_hcomp(e, lift_arrow,
                                  checked::sq_invert(e, iota_e)),
                chi11});
        return path == checked::sq_invert(e, iota_e);
      });
      t.note(ok, [&] { return c.obj_str(a); });
    }
    rep.add(t.it);
  }

  // whiskering with an identity transformation on either side reduces
  // the compositor to a unitor triangle
  {
    detail::AxiomTally t("compositor: unit triangles", "unit comparison");
    IdentityFunctor<MC> idc{c};
    IdentityFunctor<MD> idd{d};
    IdentityTransformation<MC, MC, IdentityFunctor<MC>> one_c{c, c, idc};
    IdentityTransformation<MD, MD, IdentityFunctor<MD>> one_d{d, d, idd};
    for (const auto& a : c.objects()) {
      bool ok = detail::eval_axiom([&] {
        auto hat_a = chd.companion(d, al.v(a)).lift;
        auto right = checked::sq_vcomp_n(
            d, {checked::sq_invert(d, d.sq_unit_r(hat_a)),
                checked::sq_hcomp(
                    d, d.sq_id(hat_a),
                    checked::sq_invert(
                        d, unit_constraint(d, chd, g.obj(a)))),
                compositor_at(c, d, d, g, idd, al, one_d, chd, chd, a)});
        auto left = checked::sq_vcomp_n(
            d, {checked::sq_invert(d, d.sq_unit_l(hat_a)),
                checked::sq_hcomp(
                    d,
                    checked::sq_vcomp(
                        d, f.unit(a),
                        f.sq(checked::sq_invert(
                            c, unit_constraint(c, chc, a)))),
                    d.sq_id(hat_a)),
                compositor_at(c, c, d, idc, f, one_c, al, chc, chd, a)});
        return right == d.sq_id(hat_a) && left == d.sq_id(hat_a);
      });
      t.note(ok, [&] { return c.obj_str(a); });
    }
    rep.add(t.it);
  }

  return rep;
}

// Interchange of compositors: for vertically composable pairs at both
// levels, splitting the lifted composites and interchanging through
// the outer lift agrees with the compositor of the composites followed
// by the local composition constraint.
template <DoubleModel MC, DoubleModel MD, DoubleModel ME, class C1, class C2,
          class C3, class C4>
bool compositor_interchange_holds(const MC& c, const MD& d, const ME& e,
                                  const C1& cs, const C2& ct, const C3& cphi,
                                  const C4& cpsi) {
  const auto& chd = cs.choices();
  const auto& che = cphi.choices();
  const auto& q1 = cphi.functor_src();
  const auto& q2 = cphi.functor_tgt();
  CompositeTransformation st{d, cs.base(), ct.base()};
  CompositeTransformation pp{e, cphi.base(), cpsi.base()};
  auto inv = [&](const typename ME::Sq& s) {
    return checked::sq_invert(e, s);
  };
  auto sh = [&](const typename ME::Sq& x, const typename ME::Sq& y) {
    return checked::sq_hcomp(e, x, y);
  };
  for (const auto& a : c.objects()) {
    auto p2a = ct.functor_src().obj(a);
    auto p3a = ct.functor_tgt().obj(a);
    // lifts read from the shared tables so the splits match
    auto sh_a = chd.companion(d, cs.base().v(a)).lift;
    auto th_a = chd.companion(d, ct.base().v(a)).lift;
    auto w = q1.h(sh_a);
    auto x = q1.h(th_a);
    auto y = che.companion(e, cphi.base().v(p3a)).lift;
    auto z = che.companion(e, cpsi.base().v(p3a)).lift;
    auto phi2 = che.companion(e, cphi.base().v(p2a)).lift;
    auto x2 = q2.h(th_a);
    auto lsplit = checked::sq_vcomp_n(
        e, {q1.sq(composition_constraint(d, chd, cs.base().v(a),
                                         ct.base().v(a))),
            inv(q1.comp(sh_a, th_a))});
    auto rsplit = composition_constraint(e, che, cphi.base().v(p3a),
                                         cpsi.base().v(p3a));
    auto chi_st = compositor_at(c, d, e, cs.functor_tgt(), q1, cs.base(),
                                cphi.base(), chd, che, a);
    auto chi_tp = compositor_at(c, d, e, ct.functor_tgt(), q2, ct.base(),
                                cpsi.base(), chd, che, a);
    auto top_right = checked::sq_vcomp_n(
        e, {sh(lsplit, rsplit),
            inv(e.sq_assoc(checked::hcomp(e, w, x), y, z)),
            sh(e.sq_assoc(w, x, y), e.sq_id(z)),
            sh(sh(e.sq_id(w), cphi.oplax_at(th_a)), e.sq_id(z)),
            sh(inv(e.sq_assoc(w, phi2, x2)), e.sq_id(z)),
            e.sq_assoc(checked::hcomp(e, w, phi2), x2, z),
            sh(chi_st, chi_tp)});
    auto first_comp = checked::vcomp(
        e, q1.v(cs.base().v(a)), cphi.base().v(p2a));
    auto second_comp = checked::vcomp(
        e, q2.v(ct.base().v(a)), cpsi.base().v(p3a));
    auto left_bottom = checked::sq_vcomp(
        e,
        compositor_at(c, d, e, ct.functor_tgt(), q1, st, pp, chd, che, a),
        composition_constraint(e, che, first_comp, second_comp));
    if (!(top_right == left_bottom)) return false;
  }
  return true;
}

// Associativity of compositors across three levels: comparing inside
// the image of the outermost functor first agrees with comparing the
// outer pair first, across the evident reassociation bridge.
template <DoubleModel MC, DoubleModel MD, DoubleModel ME, DoubleModel MQ,
          class CA, class CB, class CG>
bool compositor_associativity_holds(const MC& c, const MD& d, const ME& e,
                                    const MQ& q, const CA& c_al,
                                    const CB& c_be, const CG& c_ga) {
  const auto& g = c_al.functor_tgt();
  const auto& h = c_be.functor_src();
  const auto& k = c_be.functor_tgt();
  const auto& l = c_ga.functor_src();
  const auto& chd = c_al.choices();
  const auto& che = c_be.choices();
  const auto& chq = c_ga.choices();
  using G = std::decay_t<decltype(g)>;
  using H = std::decay_t<decltype(h)>;
  using K = std::decay_t<decltype(k)>;
  using L = std::decay_t<decltype(l)>;
  CompositeFunctor<MC, MD, ME, G, K> kg{d, e, g, k};
  CompositeFunctor<MD, ME, MQ, H, L> lh{e, q, h, l};
  GodementTransformation ba{d, e, g, h, c_al.base(), c_be.base()};
  GodementTransformation gb{e, q, k, l, c_be.base(), c_ga.base()};
  for (const auto& a : c.objects()) {
    auto ga_obj = g.obj(a);
    auto kga = k.obj(ga_obj);
    auto hat_a = c_al.lift_at(a);
    auto h_hat = h.h(hat_a);
    auto be_hat = c_be.lift_at(ga_obj);
    auto ga_hat = c_ga.lift_at(kga);
    auto lh_hat = l.h(h_hat);
    auto l_be = l.h(be_hat);
    auto chi12 = compositor_at(c, d, e, g, h, c_al.base(), c_be.base(), chd,
                               che, a);
    auto chi23 = compositor_at(d, e, q, k, l, c_be.base(), c_ga.base(), che,
                               chq, ga_obj);
    auto path_l = checked::sq_vcomp(
        q, checked::sq_hcomp(q, l.sq(chi12), q.sq_id(ga_hat)),
        compositor_at(c, e, q, kg, l, ba, c_ga.base(), che, chq, a));
    auto bridge = checked::sq_vcomp_n(
        q, {checked::sq_hcomp(
                q, checked::sq_invert(q, l.comp(h_hat, be_hat)),
                q.sq_id(ga_hat)),
            q.sq_assoc(lh_hat, l_be, ga_hat)});
    auto path_r = checked::sq_vcomp(
        q, checked::sq_hcomp(q, q.sq_id(lh_hat), chi23),
        compositor_at(c, d, q, g, lh, c_al.base(), gb, chd, chq, a));
    if (!(path_l == checked::sq_vcomp(q, bridge, path_r))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// oplax cells at lifted companions

template <DoubleModel ME>
struct OplaxCellComparison {
  typename ME::Sq lifted;
  typename ME::Sq exchange;
  bool equal = false;
};

// At the companion lift of a vertical morphism, the oplax cell of a
// lifted transformation is itself the exchange square between the two
// composite companions of the naturality square's diagonal.
template <DoubleModel MD, DoubleModel ME, class CJ>
OplaxCellComparison<ME> oplax_cell_is_theta(const MD& d, const ME& e,
                                            const CJ& cj,
                                            const CompanionPair<MD>& cf) {
  auto a = d.vsrc(cf.f);
  auto b = d.vtgt(cf.f);
  auto left = compose_companions(
      e, map_companion(d, e, cj.functor_src(), cf), cj.companion_at(b));
  auto right = compose_companions(
      e, cj.companion_at(a), map_companion(d, e, cj.functor_tgt(), cf));
  auto th = theta(e, left, right);
  auto lifted = cj.oplax_at(cf.lift);
  return {lifted, th, lifted == th};
}

}  // namespace dblift
