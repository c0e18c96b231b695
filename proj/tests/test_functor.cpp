#include <catch2/catch_amalgamated.hpp>

#include <utility>

#include "dblift/check.hpp"
#include "dblift/companion.hpp"
#include "dblift/functor.hpp"
#include "dblift/product.hpp"
#include "dblift/rel.hpp"
#include "dblift/span.hpp"

using namespace dblift;

static_assert(DoubleModel<TerminalModel>);
static_assert(DoubleModel<ProdModel<RelModel, TerminalModel>>);
static_assert(DoubleModel<ProdModel<RelModel, SpanModel>>);
static_assert(DblFunctorOf<IdentityFunctor<RelModel>, RelModel, RelModel>);
static_assert(DblFunctorOf<SwapFunctor<RelModel, SpanModel>,
                           ProdModel<RelModel, SpanModel>,
                           ProdModel<SpanModel, RelModel>>);
static_assert(DblFunctorOf<
    CompositeFunctor<RelModel, RelModel, RelModel, IdentityFunctor<RelModel>,
                     IdentityFunctor<RelModel>>,
    RelModel, RelModel>);

TEST_CASE("products of models are double categories", "[product]") {
  RelModel rel(2);

  SECTION("pairing with the terminal model") {
    TerminalModel term;
    ProdModel<RelModel, TerminalModel> p(rel, term);
    Report rep = verify_double_category(p, 3, 200);
    INFO(rep.text());
    CHECK(rep.ok());
    CHECK(rep.items.size() >= 14);
  }

  SECTION("pairing two nontrivial models") {
    SpanModel span(2, 2);
    ProdModel<RelModel, SpanModel> p(rel, span);
    Report rep = verify_double_category(p, 5, 60);
    INFO(rep.text());
    CHECK(rep.ok());
  }
}

TEST_CASE("product cells compose componentwise", "[product]") {
  RelModel rel(2);
  SpanModel span(2, 2);
  ProdModel<RelModel, SpanModel> p(rel, span);
  FamilyCache<ProdModel<RelModel, SpanModel>> fam(p);
  Sampler<ProdModel<RelModel, SpanModel>> smp(p, fam,
                                              Rng::for_axiom(11, "pairing"));
  for (int i = 0; i < 25; ++i) {
    auto a = smp.square();
    auto b = smp.square_below(a);
    auto c = p.sq_vcomp(a, b);
    CHECK(c.wit.first == rel.sq_vcomp(a.wit.first, b.wit.first));
    CHECK(c.wit.second == span.sq_vcomp(a.wit.second, b.wit.second));
    auto r = smp.square_right(a);
    auto h = p.sq_hcomp(a, r);
    CHECK(h.wit.first == rel.sq_hcomp(a.wit.first, r.wit.first));
    CHECK(h.wit.second == span.sq_hcomp(a.wit.second, r.wit.second));
  }
}

TEST_CASE("identity and composite maps pass the coherence checks",
          "[functor]") {
  RelModel rel(2);
  IdentityFunctor<RelModel> idf{rel};

  SECTION("identity on relations") {
    Report rep = verify_functor(rel, rel, idf, 13, 150);
    INFO(rep.text());
    CHECK(rep.ok());
    CHECK(rep.items.size() == 8);
  }

  SECTION("composite of identities") {
    CompositeFunctor<RelModel, RelModel, RelModel, IdentityFunctor<RelModel>,
                     IdentityFunctor<RelModel>>
        cf{rel, rel, idf, idf};
    Report rep = verify_functor(rel, rel, cf, 17, 100);
    INFO(rep.text());
    CHECK(rep.ok());
  }

  SECTION("identity on spans") {
    SpanModel span(2, 2);
    IdentityFunctor<SpanModel> ids{span};
    Report rep = verify_functor(span, span, ids, 19, 80);
    INFO(rep.text());
    CHECK(rep.ok());
  }
}

TEST_CASE("swapping product factors is a coherent involution", "[functor]") {
  RelModel rel(2);
  SpanModel span(2, 2);
  ProdModel<RelModel, SpanModel> p(rel, span);
  ProdModel<SpanModel, RelModel> q(span, rel);
  SwapFunctor<RelModel, SpanModel> fwd{p, q};
  SwapFunctor<SpanModel, RelModel> bwd{q, p};

  Report rep = verify_functor(p, q, fwd, 23, 60);
  INFO(rep.text());
  CHECK(rep.ok());

  FamilyCache<ProdModel<RelModel, SpanModel>> fam(p);
  Sampler<ProdModel<RelModel, SpanModel>> smp(p, fam,
                                              Rng::for_axiom(29, "swap"));
  for (int i = 0; i < 25; ++i) {
    auto s = smp.square();
    CHECK(bwd.sq(fwd.sq(s)) == s);
    CHECK(bwd.h(fwd.h(s.top)) == s.top);
    CHECK(bwd.v(fwd.v(s.left)) == s.left);
    CHECK(bwd.obj(fwd.obj(p.hsrc(s.top))) == p.hsrc(s.top));
  }
}

TEST_CASE("companions transport along structure maps",
          "[functor][companion]") {
  RelModel rel(2);
  ProdModel<RelModel, RelModel> p(rel, rel);
  ProdModel<RelModel, RelModel> q(rel, rel);
  SwapFunctor<RelModel, RelModel> fn{p, q};
  using PM = ProdModel<RelModel, RelModel>;

  int mapped = 0;
  for (const auto& a : rel.objects())
    for (const auto& b : rel.objects())
      for (const auto& f : rel.vmors(a, b))
        for (const auto& g : rel.vmors(a, b)) {
          auto cf = rel_companion(rel, f);
          auto cg = rel_companion(rel, g);
          CompanionPair<PM> c{{f, g},
                              {cf.lift, cg.lift},
                              p.pair_sq(cf.up, cg.up),
                              p.pair_sq(cf.down, cg.down)};
          REQUIRE(is_companion(p, c));
          auto mc = map_companion(p, q, fn, c);
          CHECK(is_companion(q, mc));
          CHECK(mc.f == PM::VMor(g, f));
          CHECK(mc.lift == PM::HCell(cg.lift, cf.lift));
          ++mapped;
        }
  CHECK(mapped >= 16);

  SECTION("the exchange cell maps to the exchange cell") {
    auto a = rel.objects()[3];
    for (const auto& f : rel.vmors(a, a))
      for (const auto& g : rel.vmors(a, a)) {
        auto cf = rel_companion(rel, f);
        auto cg = rel_companion(rel, g);
        CompanionPair<PM> c1{{f, g},
                             {cf.lift, cg.lift},
                             p.pair_sq(cf.up, cg.up),
                             p.pair_sq(cf.down, cg.down)};
        auto c2 = compose_companions(p, companion_of_identity(p, {a, a}), c1);
        REQUIRE(is_companion(p, c2));
        auto th = theta(p, c1, c2);
        auto m1 = map_companion(p, q, fn, c1);
        auto m2 = map_companion(p, q, fn, c2);
        CHECK(theta(q, m1, m2) == fn.sq(th));
      }
  }
}
