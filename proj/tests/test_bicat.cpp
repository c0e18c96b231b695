#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "dblift/bicat.hpp"
#include "dblift/cartesian.hpp"
#include "dblift/monoidal.hpp"

using namespace dblift;

namespace {

using PS = ProdModel<SpanModel, SpanModel>;
using Ten = TensorFunctor<SpanModel, SpanCartesian>;
using Swap = SwapFunctor<SpanModel, SpanModel>;
using TenSwap = CompositeFunctor<PS, PS, SpanModel, Swap, Ten>;
using IdSpan = IdentityFunctor<SpanModel>;
using IdRel = IdentityFunctor<RelModel>;

// components a (x) b -> b (x) a over the product model
struct Braiding {
  const SpanCartesian& st;
  FnTable v(const PS::Obj& a) const { return st.braid0(a.first, a.second); }
  SpanModel::Sq sq(const PS::HCell& h) const {
    return st.braid1(h.first, h.second);
  }
};

struct InverseBraiding {
  const SpanCartesian& st;
  FnTable v(const PS::Obj& a) const { return st.braid0(a.second, a.first); }
  SpanModel::Sq sq(const PS::HCell& h) const {
    return st.braid1(h.second, h.first);
  }
};

// x (x) - as an endofunctor; the composition constraint folds the
// doubled unit through the left unitor square.
template <class M, class T>
struct LeftTensorFunctor {
  const M& m;
  const T& st;
  typename M::Obj x;

  typename M::Obj obj(const typename M::Obj& a) const {
    return st.ten_obj(x, a);
  }
  typename M::VMor v(const typename M::VMor& f) const {
    return st.ten_v(m.vid(x), f);
  }
  typename M::HCell h(const typename M::HCell& c) const {
    return st.ten_h(m.hunit(x), c);
  }
  typename M::Sq sq(const typename M::Sq& s) const {
    return st.ten_sq(m.sq_id(m.hunit(x)), s);
  }
  typename M::Sq comp(const typename M::HCell& a,
                      const typename M::HCell& b) const {
    auto u = m.hunit(x);
    return checked::sq_vcomp(
        m, st.interchanger(u, a, u, b),
        st.ten_sq(m.sq_unit_l(u), m.sq_id(m.hcomp(a, b))));
  }
  typename M::Sq unit(const typename M::Obj& a) const {
    return st.unit_split(x, a);
  }
};

static_assert(DblTransformationOf<Braiding, PS, SpanModel>);
static_assert(DblTransformationOf<InverseBraiding, PS, SpanModel>);
static_assert(DblFunctorOf<TenSwap, PS, SpanModel>);
static_assert(
    DblFunctorOf<LeftTensorFunctor<RelModel, RelCartesian>, RelModel,
                 RelModel>);
static_assert(
    DblFunctorOf<LeftTensorFunctor<SpanModel, SpanCartesian>, SpanModel,
                 SpanModel>);

// Companion and conjoint tables over all objects together with all
// binary products of objects, so braiding components have entries.
CompanionChoices<SpanModel> tensor_closed_choices(const SpanModel& span,
                                                  const SpanCartesian& st) {
  std::vector<FinSet> sets = span.objects();
  for (const auto& a : span.objects())
    for (const auto& b : span.objects()) sets.push_back(st.ten_obj(a, b));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return span_choices_over(span, sets);
}

// Relabels apex positions of chosen companions and conjoints by a
// cyclic shift wherever the predicate admits the morphism; the result
// is a different but equally valid table.
template <class Pred>
CompanionChoices<SpanModel> shifted_span_choices(CompanionChoices<SpanModel> ch,
                                                 Pred&& keep) {
  for (auto& kv : ch.companions) {
    auto& c = kv.second;
    auto n = static_cast<int>(c.lift.apex.size());
    if (n < 2 || !keep(kv.first)) continue;
    std::vector<int> sig(n), sinv(n);
    for (int i = 0; i < n; ++i) sig[i] = (i + 1) % n;
    for (int i = 0; i < n; ++i) sinv[sig[i]] = i;
    auto lift2 = c.lift;
    for (int i = 0; i < n; ++i) {
      lift2.leg_s[i] = c.lift.leg_s[sig[i]];
      lift2.leg_t[i] = c.lift.leg_t[sig[i]];
    }
    auto up2 = c.up;
    up2.bottom = lift2;
    for (auto& w : up2.wit) w = sinv[w];
    auto down2 = c.down;
    down2.top = lift2;
    for (int i = 0; i < n; ++i) down2.wit[i] = c.down.wit[sig[i]];
    kv.second = CompanionPair<SpanModel>{c.f, lift2, up2, down2};
  }
  for (auto& kv : ch.conjoints) {
    auto& c = kv.second;
    auto n = static_cast<int>(c.colift.apex.size());
    if (n < 2 || !keep(kv.first)) continue;
    std::vector<int> sig(n), sinv(n);
    for (int i = 0; i < n; ++i) sig[i] = (i + 1) % n;
    for (int i = 0; i < n; ++i) sinv[sig[i]] = i;
    auto colift2 = c.colift;
    for (int i = 0; i < n; ++i) {
      colift2.leg_s[i] = c.colift.leg_s[sig[i]];
      colift2.leg_t[i] = c.colift.leg_t[sig[i]];
    }
    auto up2 = c.up;
    up2.bottom = colift2;
    for (auto& w : up2.wit) w = sinv[w];
    auto down2 = c.down;
    down2.top = colift2;
    for (int i = 0; i < n; ++i) down2.wit[i] = c.down.wit[sig[i]];
    kv.second = ConjointPair<SpanModel>{c.f, colift2, up2, down2};
  }
  return ch;
}

std::vector<RelModel::HCell> all_rel_hcells(const RelModel& m) {
  std::vector<RelModel::HCell> out;
  for (const auto& a : m.objects())
    for (const auto& b : m.objects())
      for (const auto& h : m.hcells(a, b)) out.push_back(h);
  return out;
}

}  // namespace

TEST_CASE("the horizontal bicategory inherits coherent structure",
          "[bicat]") {
  SECTION("relations") {
    RelModel rel(2);
    auto hb = horizontal_bicategory(rel);
    auto a = rel.objects().back();
    CHECK(rel.hsrc(hb.unit(a)) == a);
    auto r = verify_bicategory(rel, 97, 150);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("spans") {
    SpanModel span(2, 2);
    auto r = verify_bicategory(span, 101, 60);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("the terminal model") {
    TerminalModel t;
    auto r = verify_bicategory(t, 3, 10);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("hom posets of relations") {
    // globular squares between parallel relations detect containment
    // and are unique, so every coherence cell is forced
    RelModel rel(2);
    int parallel = 0, found = 0;
    for (const auto& a : rel.objects())
      for (const auto& b : rel.objects())
        for (const auto& t : rel.hcells(a, b))
          for (const auto& u : rel.hcells(a, b)) {
            auto sq = rel.squares(t, rel.vid(a), rel.vid(b), u);
            bool sub = std::includes(u.pairs.begin(), u.pairs.end(),
                                     t.pairs.begin(), t.pairs.end());
            CHECK(sq.size() == (sub ? 1u : 0u));
            ++parallel;
            found += static_cast<int>(sq.size());
          }
    CHECK(parallel == 343);
    CHECK(found < parallel);
  }
}

TEST_CASE("functors act on the horizontal bicategory", "[bicat]") {
  SECTION("identity on relations") {
    RelModel rel(2);
    IdRel idr{rel};
    auto r = verify_bicat_functor(rel, rel, idr, 5, 60);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("tensor out of the product model") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    auto r = verify_bicat_functor(prod2, span, ten, 13, 40);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("tensor after swap") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    auto r = verify_bicat_functor(prod2, span, tsw, 19, 40);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("left tensor endofunctor") {
    RelModel rel(2);
    RelCartesian rt(rel);
    LeftTensorFunctor<RelModel, RelCartesian> lt{rel, rt,
                                                 rel.objects().back()};
    auto r = verify_bicat_functor(rel, rel, lt, 7, 80);
    INFO(r.text());
    CHECK(r.ok());

    SpanModel span(2, 2);
    SpanCartesian st(span);
    LeftTensorFunctor<SpanModel, SpanCartesian> lts{span, st,
                                                    span.objects()[1]};
    auto rs = verify_bicat_functor(span, span, lts, 7, 40);
    INFO(rs.text());
    CHECK(rs.ok());
  }

  SECTION("the induced map forwards cells on the nose") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    auto bf = h_on_functor(prod2, span, tsw);

    auto x = span.objects().back();
    auto cells = span.hcells(x, x);
    REQUIRE(cells.size() >= 6);
    PS::HCell h1{cells[3], cells[5]};
    PS::HCell h2{cells[5], cells[2]};
    CHECK(bf.one(h1) == tsw.h(h1));
    CHECK(bf.two(prod2.sq_id(h1)) == span.sq_id(tsw.h(h1)));
    CHECK(bf.comp(h1, h2) == tsw.comp(h1, h2));
    PS::Obj aa{x, x};
    CHECK(bf.unit(aa) == tsw.unit(aa));
  }
}

TEST_CASE("vertical transformations pass the coherence checks", "[bicat]") {
  SECTION("identity transformation on relations") {
    RelModel rel(2);
    IdRel idr{rel};
    IdentityTransformation<RelModel, RelModel, IdRel> one{rel, rel, idr};
    auto r = verify_transformation(rel, rel, idr, idr, one, 5, 60);
    INFO(r.text());
    CHECK(r.ok());
    CHECK(transformation_invertible(rel, rel, one, 5, 30));
  }

  SECTION("braiding from tensor to twisted tensor") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    Braiding braid{st};
    auto r = verify_transformation(prod2, span, ten, tsw, braid, 17, 60);
    INFO(r.text());
    CHECK(r.ok());
    CHECK(transformation_invertible(prod2, span, braid, 17, 40));

    InverseBraiding invbraid{st};
    auto ri = verify_transformation(prod2, span, tsw, ten, invbraid, 17, 50);
    INFO(ri.text());
    CHECK(ri.ok());
  }

  SECTION("vertical composite of braiding and inverse") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    Braiding braid{st};
    InverseBraiding invbraid{st};
    CompositeTransformation<SpanModel, Braiding, InverseBraiding> both{
        span, braid, invbraid};
    auto r = verify_transformation(prod2, span, ten, ten, both, 29, 40);
    INFO(r.text());
    CHECK(r.ok());
    // the involution is strict on components
    for (const auto& a : prod2.objects())
      CHECK(both.v(a) == span.vid(ten.obj(a)));
  }

  SECTION("whiskered composite along identities") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    Braiding braid{st};
    IdSpan idsp{span};
    IdentityTransformation<SpanModel, SpanModel, IdSpan> one_sp{span, span,
                                                                idsp};
    CompositeFunctor<PS, SpanModel, SpanModel, Ten, IdSpan> hf{span, span,
                                                               ten, idsp};
    CompositeFunctor<PS, SpanModel, SpanModel, TenSwap, IdSpan> kg{
        span, span, tsw, idsp};
    GodementTransformation god{span, span, tsw, idsp, braid, one_sp};
    auto r = verify_transformation(prod2, span, hf, kg, god, 23, 40);
    INFO(r.text());
    CHECK(r.ok());
  }
}

TEST_CASE("lifting a transformation yields adjoint oplax and lax parts",
          "[bicat]") {
  SECTION("the braiding lifts with invertible cells") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    Braiding braid{st};
    auto chs = tensor_closed_choices(span, st);
    REQUIRE(verify_choices(span, chs).ok());
    auto cj = lift_transformation(prod2, span, ten, tsw, braid, chs);
    auto r = verify_lifted_transformation(cj, 19, 25, true);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("identity lift on relations") {
    RelModel rel(2);
    IdRel idr{rel};
    IdentityTransformation<RelModel, RelModel, IdRel> one{rel, rel, idr};
    auto ch = rel_choices(rel);
    auto cj = lift_transformation(rel, rel, idr, idr, one, ch);
    auto r = verify_lifted_transformation(cj, 5, 40, true);
    INFO(r.text());
    CHECK(r.ok());

    // chosen lifts of identities are the unit cells
    for (const auto& a : rel.objects())
      CHECK(cj.lift_at(a) == rel.hunit(a));

    // the lifted cell degenerates to a whiskered unitor
    for (const auto& m : all_rel_hcells(rel)) {
      auto expected = checked::sq_vcomp(
          rel, rel.sq_unit_r(m),
          checked::sq_invert(rel, rel.sq_unit_l(m)));
      CHECK(cj.oplax_at(m) == expected);
    }
  }

  SECTION("missing table entries are reported") {
    RelModel rel(2);
    IdRel idr{rel};
    IdentityTransformation<RelModel, RelModel, IdRel> one{rel, rel, idr};
    CompanionChoices<RelModel> none;
    CHECK_THROWS_AS(lift_transformation(rel, rel, idr, idr, one, none),
                    MissingCompanion);
  }
}

TEST_CASE("doctrinal adjunction reconstructs the lax part", "[bicat]") {
  SECTION("relations, exhaustively") {
    RelModel rel(2);
    IdRel idr{rel};
    IdentityTransformation<RelModel, RelModel, IdRel> one{rel, rel, idr};
    auto ch = rel_choices(rel);
    auto cj = lift_transformation(rel, rel, idr, idr, one, ch);
    for (const auto& m : all_rel_hcells(rel))
      CHECK(cj.lax_via_adjunction(m) == cj.lax_at(m));
  }

  SECTION("spans along the braiding") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    Braiding braid{st};
    auto chs = tensor_closed_choices(span, st);
    auto cj = lift_transformation(prod2, span, ten, tsw, braid, chs);

    FinSet s0{Elt::atom(0)};
    FinSet s1{Elt::atom(1)};
    FinSet s01{Elt::atom(0), Elt::atom(1)};
    PS::Obj aa{s0, s1};
    PS::Obj bb{s01, s0};
    for (const auto& h1 : span.hcells(s0, s01))
      for (const auto& h2 : span.hcells(s1, s0)) {
        PS::HCell m{h1, h2};
        auto lax = cj.lax_at(m);
        CHECK(lax.top ==
              span.hcomp(cj.colift_at(aa), ten.h(m)));
        CHECK(lax.bottom ==
              span.hcomp(tsw.h(m), cj.colift_at(bb)));
        CHECK(cj.lax_via_adjunction(m) == lax);
      }
  }
}

TEST_CASE("modifications and their mates", "[bicat]") {
  SpanModel span(2, 2);
  SpanCartesian st(span);
  PS prod2(span, span);
  Ten ten{span, st};
  Swap sw{prod2, prod2};
  TenSwap tsw{prod2, span, sw, ten};
  Braiding braid{st};
  auto chs = tensor_closed_choices(span, st);
  auto shifted = shifted_span_choices(
      chs, [](const FnTable& f) { return f.src.size() >= 2; });
  auto third = shifted_span_choices(
      chs, [](const FnTable& f) { return f.src == f.tgt; });

  SECTION("relabelled tables still verify") {
    auto r1 = verify_choices(span, shifted);
    INFO(r1.text());
    CHECK(r1.ok());
    auto r2 = verify_choices(span, third);
    INFO(r2.text());
    CHECK(r2.ok());
  }

  SECTION("comparison between two tables") {
    auto r = verify_choice_comparison(prod2, span, ten, tsw, braid, chs,
                                      shifted, 23, 25);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("exchange cells compose along a chain of tables") {
    auto cmp12 = choice_comparison(span, chs, shifted);
    auto cmp21 = choice_comparison(span, shifted, chs);
    auto cmp23 = choice_comparison(span, shifted, third);
    auto cmp13 = choice_comparison(span, chs, third);
    for (const auto& kv : span_choices(span).companions) {
      const auto& f = kv.first;
      auto chain = checked::sq_vcomp(span, cmp12.at(f), cmp23.at(f));
      CHECK(chain == cmp13.at(f));
      auto loop = checked::sq_vcomp(span, cmp12.at(f), cmp21.at(f));
      CHECK(loop == span.sq_id(chs.companion(span, f).lift));
      auto cchain =
          checked::sq_vcomp(span, cmp12.at_conjoint(f), cmp23.at_conjoint(f));
      CHECK(cchain == cmp13.at_conjoint(f));
    }
  }

  SECTION("mate of the comparison is the conjoint exchange") {
    auto cj = lift_transformation(prod2, span, ten, tsw, braid, chs);
    auto cj_sh = lift_transformation(prod2, span, ten, tsw, braid, shifted);
    auto cmp12 = choice_comparison(span, chs, shifted);
    auto cmp21 = choice_comparison(span, shifted, chs);
    Modification<PS, SpanModel> mu{prod2, span, {}};
    for (const auto& a : prod2.objects())
      mu.at.emplace(a, cmp12.at(braid.v(a)));
    auto mb = mate(prod2, span, cj, cj_sh, mu);
    for (const auto& a : prod2.objects())
      CHECK(mb(a) == cmp21.at_conjoint(braid.v(a)));
    auto back = comate(prod2, span, cj, cj_sh, mb);
    for (const auto& a : prod2.objects()) CHECK(back(a) == mu(a));
  }

  SECTION("mate of the identity modification is the identity") {
    auto cj = lift_transformation(prod2, span, ten, tsw, braid, chs);
    Modification<PS, SpanModel> mu{prod2, span, {}};
    for (const auto& a : prod2.objects())
      mu.at.emplace(a, span.sq_id(cj.lift_at(a)));
    auto mb = mate(prod2, span, cj, cj, mu);
    for (const auto& a : prod2.objects())
      CHECK(mb(a) == span.sq_id(cj.colift_at(a)));
  }
}

TEST_CASE("local functor constraints compose coherently", "[bicat]") {
  SECTION("relations") {
    RelModel rel(2);
    IdRel idr{rel};
    IdentityTransformation<RelModel, RelModel, IdRel> one{rel, rel, idr};
    auto ch = rel_choices(rel);
    auto r = verify_local_functor(rel, rel, ch, one, one, one);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("spans along braidings") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Braiding braid{st};
    InverseBraiding invbraid{st};
    auto chs = tensor_closed_choices(span, st);
    auto r = verify_local_functor(prod2, span, chs, braid, invbraid, braid);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("braiding composed with its inverse") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    auto chs = tensor_closed_choices(span, st);
    auto lf = functor_on_transformations(span, span, chs);
    for (const auto& a : span.objects())
      for (const auto& b : span.objects()) {
        auto s = st.braid0(a, b);
        auto si = st.braid0(b, a);
        auto c = lf.comp_at(s, si);
        auto composite = compose_companions(span, chs.companion(span, s),
                                            chs.companion(span, si));
        auto target = chs.companion(span, span.vcomp(s, si));
        CHECK(theta_equation_holds(span, target, composite, c));
        auto ci = span.sq_invert(c);
        REQUIRE(ci.has_value());
        CHECK(checked::sq_vcomp(span, c, *ci) == span.sq_id(c.top));
        CHECK(checked::sq_vcomp(span, *ci, c) == span.sq_id(c.bottom));
      }
  }
}

TEST_CASE("composition and unit comparisons across levels", "[bicat]") {
  SECTION("relations, all identities") {
    RelModel rel(2);
    IdRel idr{rel};
    IdentityTransformation<RelModel, RelModel, IdRel> one{rel, rel, idr};
    auto ch = rel_choices(rel);
    auto r = verify_compositor(rel, rel, rel, idr, idr, idr, idr, one, one,
                               ch, ch, ch, 5, 20);
    INFO(r.text());
    CHECK(r.ok());

    auto cj = lift_transformation(rel, rel, idr, idr, one, ch);
    auto cj2 = lift_transformation(rel, rel, idr, idr, one, ch);
    CHECK(compositor_interchange_holds(rel, rel, rel, cj, cj2, cj, cj2));
    CHECK(compositor_associativity_holds(rel, rel, rel, rel, cj, cj, cj));
  }

  SECTION("spans along the braiding") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    Braiding braid{st};
    IdSpan idsp{span};
    IdentityTransformation<SpanModel, SpanModel, IdSpan> one_sp{span, span,
                                                                idsp};
    auto chs = tensor_closed_choices(span, st);
    auto ch_small = span_choices(span);
    auto chp = pair_choices(prod2, ch_small, ch_small);
    auto r = verify_compositor(prod2, span, span, ten, tsw, idsp, idsp,
                               braid, one_sp, chp, chs, chs, 29, 25);
    INFO(r.text());
    CHECK(r.ok());
  }

  SECTION("interchange and associativity of the comparisons") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    Braiding braid{st};
    InverseBraiding invbraid{st};
    IdSpan idsp{span};
    IdentityTransformation<SpanModel, SpanModel, IdSpan> one_sp{span, span,
                                                                idsp};
    auto chs = tensor_closed_choices(span, st);
    auto cj = lift_transformation(prod2, span, ten, tsw, braid, chs);
    auto cj_inv = lift_transformation(prod2, span, tsw, ten, invbraid, chs);
    auto cj_one = lift_transformation(span, span, idsp, idsp, one_sp, chs);
    CHECK(compositor_interchange_holds(prod2, span, span, cj, cj_inv, cj_one,
                                       cj_one));
    CHECK(compositor_associativity_holds(prod2, span, span, span, cj, cj_one,
                                         cj_one));
  }
}

TEST_CASE("lifted cells at chosen companions are exchange squares",
          "[bicat]") {
  SECTION("relations") {
    RelModel rel(2);
    IdRel idr{rel};
    IdentityTransformation<RelModel, RelModel, IdRel> one{rel, rel, idr};
    auto ch = rel_choices(rel);
    auto cj = lift_transformation(rel, rel, idr, idr, one, ch);
    for (const auto& kv : ch.companions) {
      auto oc = oplax_cell_is_theta(rel, rel, cj, kv.second);
      CHECK(oc.equal);
    }
  }

  SECTION("spans along the braiding") {
    SpanModel span(2, 2);
    SpanCartesian st(span);
    PS prod2(span, span);
    Ten ten{span, st};
    Swap sw{prod2, prod2};
    TenSwap tsw{prod2, span, sw, ten};
    Braiding braid{st};
    auto chs = tensor_closed_choices(span, st);
    auto ch_small = span_choices(span);
    auto chp = pair_choices(prod2, ch_small, ch_small);
    auto cj = lift_transformation(prod2, span, ten, tsw, braid, chs);
    int checked_cells = 0;
    for (const auto& kv : chp.companions) {
      auto oc = oplax_cell_is_theta(prod2, span, cj, kv.second);
      CHECK(oc.equal);
      ++checked_cells;
    }
    CHECK(checked_cells == 324);
  }
}
