#include <catch2/catch_amalgamated.hpp>

#include "dblift/htree.hpp"
#include "dblift/model.hpp"
#include "dblift/span.hpp"

using namespace dblift;

static_assert(DoubleModel<SpanModel>);

namespace {

SpanCell span_of(const FinSet& a, const FinSet& b, int apex_size,
                 std::vector<int> ls, std::vector<int> lt) {
  return SpanCell{a, b, atom_range(apex_size), std::move(ls), std::move(lt)};
}

}  // namespace

TEST_CASE("pullback composition matches the hand computation", "[span]") {
  SpanModel m(2, 3);
  FinSet A = atom_range(2), B = atom_range(3), C = atom_range(2);
  SpanCell M = span_of(A, B, 3, {0, 0, 1}, {0, 1, 1});
  SpanCell N = span_of(B, C, 2, {1, 1}, {0, 1});

  SpanCell MN = m.hcomp(M, N);
  // matches: M sends apex 1,2 to middle 1; N reads middle 1 at apex 0,1
  FinSet expect_apex = make_set({
      Elt::pair(Elt::atom(1), Elt::atom(0)),
      Elt::pair(Elt::atom(1), Elt::atom(1)),
      Elt::pair(Elt::atom(2), Elt::atom(0)),
      Elt::pair(Elt::atom(2), Elt::atom(1)),
  });
  CHECK(MN.apex == expect_apex);
  CHECK(MN.leg_s == std::vector<int>{0, 0, 1, 1});
  CHECK(MN.leg_t == std::vector<int>{0, 1, 0, 1});
  CHECK(std::is_sorted(MN.apex.begin(), MN.apex.end()));

  SECTION("composition with units is not strict") {
    CHECK(!(m.hcomp(m.hunit(A), M) == M));
    CHECK(!(m.hcomp(M, m.hunit(B)) == M));
  }

  SECTION("empty middles give empty composites") {
    SpanCell Z = span_of(B, C, 0, {}, {});
    CHECK(m.hcomp(M, Z).apex.empty());
  }
}

TEST_CASE("structural squares are valid isomorphisms", "[span]") {
  SpanModel m(2, 3);
  FinSet A = atom_range(2), B = atom_range(2);
  SpanCell M = span_of(A, B, 2, {0, 1}, {1, 0});
  SpanCell N = span_of(B, A, 3, {0, 0, 1}, {0, 1, 1});
  SpanCell P = span_of(A, B, 2, {1, 1}, {0, 1});

  auto a = m.sq_assoc(M, N, P);
  CHECK(m.square_valid(a));
  CHECK(is_globular(m, a));
  auto ai = m.sq_invert(a);
  REQUIRE(ai.has_value());
  CHECK(m.sq_vcomp(a, *ai) == m.sq_id(a.top));
  CHECK(m.sq_vcomp(*ai, a) == m.sq_id(a.bottom));

  auto ul = m.sq_unit_l(M);
  auto ur = m.sq_unit_r(M);
  CHECK(m.square_valid(ul));
  CHECK(m.square_valid(ur));
  CHECK(m.sq_invert(ul).has_value());
  CHECK(m.sq_invert(ur).has_value());

  SECTION("identity square on the unit is the unit square on the identity") {
    CHECK(m.sq_id(m.hunit(A)) == m.sq_unit(m.vid(A)));
  }
}

TEST_CASE("pentagon and triangle hold on concrete spans", "[span]") {
  SpanModel m(2, 3);
  FinSet A = atom_range(2), B = atom_range(2), C = atom_range(2),
         D = atom_range(2), E = atom_range(2);
  SpanCell M = span_of(A, B, 2, {0, 1}, {0, 0});
  SpanCell N = span_of(B, C, 3, {0, 0, 1}, {0, 1, 1});
  SpanCell P = span_of(C, D, 2, {1, 0}, {0, 1});
  SpanCell Q = span_of(D, E, 2, {0, 0}, {0, 1});

  SECTION("pentagon") {
    auto route_short = m.sq_vcomp(m.sq_assoc(m.hcomp(M, N), P, Q),
                                  m.sq_assoc(M, N, m.hcomp(P, Q)));
    auto route_long = m.sq_vcomp(
        m.sq_vcomp(m.sq_hcomp(m.sq_assoc(M, N, P), m.sq_id(Q)),
                   m.sq_assoc(M, m.hcomp(N, P), Q)),
        m.sq_hcomp(m.sq_id(M), m.sq_assoc(N, P, Q)));
    CHECK(route_short == route_long);
  }

  SECTION("triangle") {
    auto via_assoc = m.sq_vcomp(m.sq_assoc(M, m.hunit(B), N),
                                m.sq_hcomp(m.sq_id(M), m.sq_unit_l(N)));
    auto direct = m.sq_hcomp(m.sq_unit_r(M), m.sq_id(N));
    CHECK(via_assoc == direct);
  }

  SECTION("interchange") {
    SpanCell M2 = span_of(A, B, 2, {0, 0}, {0, 0});
    SpanCell M1 = span_of(A, B, 1, {0}, {0});
    SpanCell N2 = span_of(B, C, 2, {0, 0}, {0, 0});
    SpanCell N1 = span_of(B, C, 1, {0}, {0});
    auto collapse_m = m.squares(M2, m.vid(A), m.vid(B), M1);
    auto collapse_n = m.squares(N2, m.vid(B), m.vid(C), N1);
    REQUIRE(collapse_m.size() == 1);
    REQUIRE(collapse_n.size() == 1);
    auto am = collapse_m[0];
    auto an = collapse_n[0];
    auto lhs = m.sq_hcomp(m.sq_vcomp(am, m.sq_id(M1)),
                          m.sq_vcomp(an, m.sq_id(N1)));
    auto rhs = m.sq_vcomp(m.sq_hcomp(am, an),
                          m.sq_hcomp(m.sq_id(M1), m.sq_id(N1)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical constraints over spans", "[span][htree]") {
  SpanModel m(2, 3);
  FinSet A = atom_range(2), B = atom_range(2);
  SpanCell M = span_of(A, B, 2, {0, 1}, {0, 0});
  SpanCell N = span_of(B, A, 2, {0, 0}, {0, 1});
  SpanCell P = span_of(A, B, 1, {1}, {0});

  using T = HTree<SpanModel>;
  T s = T::node(T::node(T::leaf(M), T::unit(B)), T::node(T::leaf(N), T::leaf(P)));
  T t = T::node(T::leaf(M), T::node(T::leaf(N), T::node(T::unit(A), T::leaf(P))));
  T u = T::node(T::node(T::node(T::leaf(M), T::leaf(N)), T::leaf(P)), T::unit(B));

  auto cst = canonical_constraint(m, s, t);
  CHECK(cst.top == tree_eval(m, s));
  CHECK(cst.bottom == tree_eval(m, t));
  CHECK(is_globular(m, cst));
  CHECK(m.square_valid(cst));
  REQUIRE(m.sq_invert(cst).has_value());

  SECTION("inverse pairs cancel") {
    auto cts = canonical_constraint(m, t, s);
    CHECK(m.sq_vcomp(cst, cts) == m.sq_id(tree_eval(m, s)));
  }

  SECTION("constraints compose transitively") {
    auto ctu = canonical_constraint(m, t, u);
    auto csu = canonical_constraint(m, s, u);
    CHECK(m.sq_vcomp(cst, ctu) == csu);
  }
}

TEST_CASE("span enumeration families", "[span]") {
  SpanModel m(2, 3);
  FinSet A = atom_range(2), B = atom_range(2);

  CHECK(m.objects().size() == 4);
  CHECK(m.hcells(A, B).size() == 85);  // sum over k<=3 of 4^k
  CHECK(m.hcells(FinSet{}, B).size() == 1);
  CHECK(m.vmors(A, B).size() == 4);

  SECTION("square enumeration matches the leg constraints") {
    CHECK(m.squares(m.hunit(A), m.vid(A), m.vid(A), m.hunit(A)).size() == 1);
    SpanCell dbl = span_of(A, A, 2, {0, 0}, {0, 0});
    CHECK(m.squares(dbl, m.vid(A), m.vid(A), dbl).size() == 4);
    SpanCell empty = span_of(A, A, 0, {}, {});
    CHECK(m.squares(empty, m.vid(A), m.vid(A), dbl).size() == 1);
    CHECK(m.squares(dbl, m.vid(A), m.vid(A), empty).empty());
  }
}
