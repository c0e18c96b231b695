#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "dblift/companion.hpp"
#include "dblift/hop.hpp"
#include "dblift/model.hpp"
#include "dblift/rel.hpp"
#include "dblift/span.hpp"

using namespace dblift;

static_assert(DoubleModel<HOpModel<RelModel>>);
static_assert(DoubleModel<HOpModel<SpanModel>>);

namespace {

// All vertical morphisms of a model, grouped by endpoints.
template <DoubleModel M>
std::vector<typename M::VMor> all_vmors(const M& m) {
  std::vector<typename M::VMor> out;
  for (const auto& a : m.objects())
    for (const auto& b : m.objects())
      for (const auto& f : m.vmors(a, b)) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("closed-form companions satisfy both equations", "[companion]") {
  SECTION("relations: the graph of f") {
    RelModel m(3);
    for (const auto& f : all_vmors(m)) {
      auto c = rel_companion(m, f);
      auto r = verify_companion(m, c);
      INFO(r.text());
      REQUIRE(r.ok());
      CHECK(c.lift.pairs.size() == f.src.size());
    }
  }
  SECTION("spans: apex A with legs (identity, f)") {
    SpanModel m(2, 3);
    for (const auto& f : all_vmors(m)) {
      auto c = span_companion(m, f);
      auto r = verify_companion(m, c);
      INFO(r.text());
      REQUIRE(r.ok());
      CHECK(c.lift.apex == f.src);
    }
  }
  SECTION("identity companion is the unit cell with identity squares") {
    SpanModel m(2, 3);
    for (const auto& a : m.objects()) {
      auto c = companion_of_identity(m, a);
      REQUIRE(is_companion(m, c));
      CHECK(c.lift == m.hunit(a));
      CHECK(c.up == m.sq_id(m.hunit(a)));
    }
  }
}

TEST_CASE("closed-form conjoints satisfy the reversed equations",
          "[companion]") {
  SECTION("relations: the transpose of the graph") {
    RelModel m(3);
    for (const auto& f : all_vmors(m)) {
      auto j = rel_conjoint(m, f);
      auto r = verify_conjoint(m, j);
      INFO(r.text());
      REQUIRE(r.ok());
      CHECK(r.items.at(0).name == "conjoint frames");
    }
  }
  SECTION("spans: apex A with legs (f, identity)") {
    SpanModel m(2, 3);
    for (const auto& f : all_vmors(m)) {
      auto j = span_conjoint(m, f);
      auto r = verify_conjoint(m, j);
      INFO(r.text());
      REQUIRE(r.ok());
    }
  }
  SECTION("identity conjoint") {
    SpanModel m(2, 3);
    for (const auto& a : m.objects())
      REQUIRE(is_conjoint(m, conjoint_of_identity(m, a)));
  }
}

TEST_CASE("exchange cell between two companions", "[companion]") {
  SpanModel m(2, 3);
  FinSet A = atom_range(2);
  auto f = fn_from_rule(A, A, [](const Elt& e) { return Elt::atom(1 - e.value()); });

  auto found = companion_search(m, f);
  REQUIRE(found.size() >= 2);

  SECTION("theta on one companion is the identity cell") {
    for (const auto& c : found)
      CHECK(theta(m, c, c) == m.sq_id(c.lift));
    auto cf = span_companion(m, f);
    CHECK(theta(m, cf, cf) == m.sq_id(cf.lift));
  }
  SECTION("theta satisfies the exchange property and is invertible") {
    for (const auto& c1 : found)
      for (const auto& c2 : found) {
        auto th = theta(m, c1, c2);
        CHECK(theta_equation_holds(m, c1, c2, th));
        auto inv = m.sq_invert(th);
        REQUIRE(inv.has_value());
        CHECK(*inv == theta(m, c2, c1));
      }
  }
  SECTION("theta composes transitively") {
    auto c1 = found.at(0);
    auto c2 = found.at(1);
    auto c3 = span_companion(m, f);
    auto lhs = checked::sq_vcomp(m, theta(m, c1, c2), theta(m, c2, c3));
    CHECK(lhs == theta(m, c1, c3));
  }
  SECTION("mismatched morphisms are rejected") {
    auto cid = companion_of_identity(m, A);
    CHECK_THROWS_AS(theta(m, found.at(0), cid), CompanionMismatch);
  }
}

TEST_CASE("theta is the unique invertible exchange cell", "[companion]") {
  SpanModel m(2, 3);
  std::size_t pairs = 0;
  for (const auto& f : all_vmors(m)) {
    // Search results, plus composites with identity companions; the
    // latter have pair-shaped apexes outside the enumeration family.
    auto found = companion_search(m, f);
    auto base = found;
    for (const auto& c : base) {
      found.push_back(compose_companions(
          m, companion_of_identity(m, m.vsrc(f)), c));
      found.push_back(compose_companions(
          m, c, companion_of_identity(m, m.vtgt(f))));
    }
    for (const auto& c1 : found)
      for (const auto& c2 : found) {
        auto cands = exchange_candidates(m, c1, c2);
        REQUIRE(cands.size() == 1);
        CHECK(cands.at(0) == theta(m, c1, c2));
        ++pairs;
      }
  }
  // Enough distinct ordered pairs to make the uniqueness sweep meaningful.
  CHECK(pairs >= 50);
}

TEST_CASE("companions compose along vertical composition", "[companion]") {
  SpanModel m(2, 3);
  FinSet A = atom_range(2);
  auto swap = fn_from_rule(A, A, [](const Elt& e) { return Elt::atom(1 - e.value()); });
  auto cnst = fn_from_rule(A, A, [](const Elt&) { return Elt::atom(0); });

  SECTION("the composite satisfies both companion equations") {
    for (const auto& f : {swap, cnst})
      for (const auto& g : {swap, cnst}) {
        auto cc2 =
            compose_companions(m, span_companion(m, f), span_companion(m, g));
        REQUIRE(is_companion(m, cc2));
        CHECK(cc2.f == fn_compose(f, g));
        CHECK(cc2.lift == m.hcomp(span_companion(m, f).lift,
                                  span_companion(m, g).lift));
      }
  }
  SECTION("relations compose too") {
    RelModel rm(3);
    FinSet B = atom_range(3);
    auto f = fn_from_rule(A, B, [](const Elt& e) { return Elt::atom(e.value() + 1); });
    auto g = fn_from_rule(B, A, [](const Elt& e) { return Elt::atom(e.value() % 2); });
    auto cc2 =
        compose_companions(rm, rel_companion(rm, f), rel_companion(rm, g));
    REQUIRE(is_companion(rm, cc2));
  }
  SECTION("composition with an identity companion is theta-trivial") {
    auto c = span_companion(m, swap);
    auto left = compose_companions(m, companion_of_identity(m, A), c);
    auto right = compose_companions(m, c, companion_of_identity(m, A));
    CHECK(theta(m, c, left) ==
          checked::sq_invert(m, m.sq_unit_l(c.lift)));
    CHECK(theta(m, c, right) ==
          checked::sq_invert(m, m.sq_unit_r(c.lift)));
  }
  SECTION("exchange cells are compatible with composition") {
    auto cf = companion_search(m, swap);
    auto cg = companion_search(m, cnst);
    REQUIRE(cf.size() >= 2);
    REQUIRE(cg.size() >= 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) {
        auto lhs = checked::sq_hcomp(m, theta(m, cf[0], cf[i]),
                                     theta(m, cg[0], cg[k]));
        auto rhs = theta(m, compose_companions(m, cf[0], cg[0]),
                         compose_companions(m, cf[i], cg[k]));
        CHECK(lhs == rhs);
      }
  }
  SECTION("non-composable factors are rejected") {
    FinSet B = make_set({Elt::atom(0)});
    auto h = fn_from_rule(B, B, [](const Elt& e) { return e; });
    CHECK_THROWS_AS(
        compose_companions(m, span_companion(m, swap), span_companion(m, h)),
        FrameMismatch);
  }
}

TEST_CASE("conjoint of an inverse shares the companion cell", "[companion]") {
  SpanModel m(2, 3);
  FinSet A = atom_range(2);
  auto swap = fn_from_rule(A, A, [](const Elt& e) { return Elt::atom(1 - e.value()); });
  auto idA = FnTable::identity(A);

  SECTION("valid inverses produce a conjoint on the same cell") {
    for (const auto& f : {swap, idA}) {
      auto c = span_companion(m, f);
      auto j = conjoint_of_inverse(m, c, f == idA ? idA : swap);
      REQUIRE(is_conjoint(m, j));
      CHECK(j.colift == c.lift);
      CHECK(j.f == (f == idA ? idA : swap));
    }
  }
  SECTION("non-inverses are rejected") {
    auto cnst = fn_from_rule(A, A, [](const Elt&) { return Elt::atom(0); });
    auto c = span_companion(m, swap);
    CHECK_THROWS_AS(conjoint_of_inverse(m, c, cnst), NotInverse);
  }
}

TEST_CASE("companion and conjoint of f form an adjunction", "[companion]") {
  SECTION("triangle identities hold for every span morphism") {
    SpanModel m(2, 3);
    for (const auto& f : all_vmors(m)) {
      auto adj = adjunction(m, span_companion(m, f), span_conjoint(m, f));
      INFO("f = " << fn_str(f));
      CHECK(adjunction_triangles_hold(m, adj));
    }
  }
  SECTION("triangle identities hold for every relational morphism") {
    RelModel m(3);
    for (const auto& f : all_vmors(m)) {
      auto adj = adjunction(m, rel_companion(m, f), rel_conjoint(m, f));
      INFO("f = " << fn_str(f));
      CHECK(adjunction_triangles_hold(m, adj));
    }
  }
  SECTION("unit and counit are invertible exactly when f is") {
    SpanModel m(2, 3);
    for (const auto& f : all_vmors(m)) {
      auto adj = adjunction(m, span_companion(m, f), span_conjoint(m, f));
      bool iso = fn_inverse(f).has_value();
      if (iso) {
        CHECK(m.sq_invert(adj.unit).has_value());
        CHECK(m.sq_invert(adj.counit).has_value());
      } else {
        CHECK(!(m.sq_invert(adj.unit).has_value() &&
                m.sq_invert(adj.counit).has_value()));
      }
    }
  }
  SECTION("mismatched morphisms are rejected") {
    SpanModel m(2, 3);
    FinSet A = atom_range(2);
    auto swap = fn_from_rule(A, A, [](const Elt& e) { return Elt::atom(1 - e.value()); });
    CHECK_THROWS_AS(adjunction(m, span_companion(m, swap),
                               span_conjoint(m, FnTable::identity(A))),
                    CompanionMismatch);
  }
}

TEST_CASE("reversed model is a double category", "[companion]") {
  SECTION("search in the reversed model agrees with direct conjoints") {
    SpanModel m(2, 3);
    FinSet A = atom_range(2);
    auto swap = fn_from_rule(A, A, [](const Elt& e) { return Elt::atom(1 - e.value()); });
    auto found = conjoint_search(m, swap);
    REQUIRE(found.size() >= 2);
    for (const auto& j : found) REQUIRE(is_conjoint(m, j));
    bool has_closed_form = false;
    for (const auto& j : found)
      if (j.colift == span_conjoint(m, swap).colift) has_closed_form = true;
    CHECK(has_closed_form);
  }
  SECTION("conjoint exchange cells mirror the companion ones") {
    SpanModel m(2, 3);
    FinSet A = atom_range(2);
    auto swap = fn_from_rule(A, A, [](const Elt& e) { return Elt::atom(1 - e.value()); });
    auto found = conjoint_search(m, swap);
    REQUIRE(found.size() >= 2);
    auto th = theta_conjoint(m, found.at(0), found.at(0));
    CHECK(th == m.sq_id(found.at(0).colift));
    auto th12 = theta_conjoint(m, found.at(0), found.at(1));
    CHECK(th12.top == found.at(0).colift);
    CHECK(th12.bottom == found.at(1).colift);
    REQUIRE(m.sq_invert(th12).has_value());
    CHECK(*m.sq_invert(th12) == theta_conjoint(m, found.at(1), found.at(0)));
  }
  SECTION("reversal swaps the unit constraints") {
    SpanModel m(2, 3);
    HOpModel<SpanModel> h(m);
    FinSet A = atom_range(2), B = atom_range(1);
    SpanCell sp{A, B, atom_range(2), {0, 1}, {0, 0}};
    CHECK(h.hsrc(sp) == B);
    CHECK(h.sq_unit_l(sp).wit == m.sq_unit_r(sp));
    CHECK(h.sq_unit_r(sp).wit == m.sq_unit_l(sp));
    auto assoc = h.sq_assoc(h.hunit(B), h.hunit(B), sp);
    CHECK(is_globular(h, assoc));
    REQUIRE(h.sq_invert(assoc).has_value());
  }
}
