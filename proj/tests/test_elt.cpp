#include <catch2/catch_amalgamated.hpp>

#include "dblift/elt.hpp"

using namespace dblift;

TEST_CASE("element ordering is total and stable", "[elt]") {
  Elt a0 = Elt::atom(0);
  Elt a1 = Elt::atom(1);
  Elt p = Elt::pair(a0, a1);
  Elt q = Elt::pair(a1, a0);

  SECTION("atoms sort by value, atoms before pairs") {
    CHECK(a0 < a1);
    CHECK(a1 < p);
    CHECK(p < q);
  }

  SECTION("pairs compare lexicographically") {
    CHECK(Elt::pair(a0, a0) < Elt::pair(a0, a1));
    CHECK(Elt::pair(a0, a1) < Elt::pair(a1, a0));
    CHECK(Elt::pair(a0, p) == Elt::pair(a0, Elt::pair(a0, a1)));
  }

  SECTION("rendering") {
    CHECK(a0.str() == "0");
    CHECK(p.str() == "(0,1)");
    CHECK(Elt::pair(p, a0).str() == "((0,1),0)");
  }
}

TEST_CASE("finite sets stay sorted and duplicate-free", "[elt]") {
  FinSet s = make_set({Elt::atom(2), Elt::atom(0), Elt::atom(2)});
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Elt::atom(0));
  CHECK(s[1] == Elt::atom(2));
  CHECK(set_contains(s, Elt::atom(2)));
  CHECK(!set_contains(s, Elt::atom(1)));
  CHECK(set_index(s, Elt::atom(2)) == 1);
  CHECK(set_index(s, Elt::atom(1)) == -1);

  SECTION("products are sorted without re-sorting") {
    FinSet p = set_product(atom_range(2), atom_range(3));
    REQUIRE(p.size() == 6);
    CHECK(std::is_sorted(p.begin(), p.end()));
    CHECK(p.front() == Elt::pair(Elt::atom(0), Elt::atom(0)));
    CHECK(p.back() == Elt::pair(Elt::atom(1), Elt::atom(2)));
  }

  SECTION("empty factors give empty products") {
    CHECK(set_product(FinSet{}, atom_range(3)).empty());
    CHECK(set_product(atom_range(3), FinSet{}).empty());
  }
}

TEST_CASE("function tables compose like functions", "[elt]") {
  FinSet a = atom_range(3);
  FinSet b = atom_range(2);
  FnTable f{a, b, {0, 1, 1}};
  FnTable g{b, a, {2, 0}};

  SECTION("application agrees with the table") {
    CHECK(f(Elt::atom(0)) == Elt::atom(0));
    CHECK(f(Elt::atom(2)) == Elt::atom(1));
  }

  SECTION("composition is in diagram order") {
    FnTable h = fn_compose(f, g);
    CHECK(h(Elt::atom(0)) == g(f(Elt::atom(0))));
    CHECK(h(Elt::atom(2)) == g(f(Elt::atom(2))));
  }

  SECTION("identities are units") {
    CHECK(fn_compose(FnTable::identity(a), f) == f);
    CHECK(fn_compose(f, FnTable::identity(b)) == f);
    CHECK(fn_is_identity(FnTable::identity(a)));
    CHECK(!fn_is_identity(f));
  }

  SECTION("inverse exists exactly for bijections") {
    CHECK(!fn_inverse(f).has_value());
    FnTable s{b, b, {1, 0}};
    auto si = fn_inverse(s);
    REQUIRE(si.has_value());
    CHECK(fn_is_identity(fn_compose(s, *si)));
    CHECK(fn_is_identity(fn_compose(*si, s)));
  }

  SECTION("rule-built tables agree with pointwise evaluation") {
    FnTable sw = fn_from_rule(set_product(a, b), set_product(b, a),
                              [](const Elt& e) {
                                return Elt::pair(e.second(), e.first());
                              });
    for (const Elt& e : sw.src)
      CHECK(sw(e) == Elt::pair(e.second(), e.first()));
    CHECK(fn_is_bijection(sw));
  }
}

TEST_CASE("function enumeration counts and order", "[elt]") {
  FinSet a = atom_range(2);
  FinSet b = atom_range(3);

  CHECK(all_fns(a, b).size() == 9);
  CHECK(all_fns(b, a).size() == 8);
  CHECK(all_fns(FinSet{}, b).size() == 1);
  CHECK(all_fns(a, FinSet{}).empty());
  CHECK(all_fns(FinSet{}, FinSet{}).size() == 1);

  SECTION("enumeration is deterministic and duplicate-free") {
    auto fs = all_fns(a, b);
    auto gs = all_fns(a, b);
    CHECK(fs == gs);
    std::sort(fs.begin(), fs.end());
    CHECK(std::adjacent_find(fs.begin(), fs.end()) == fs.end());
  }
}
