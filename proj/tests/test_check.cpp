#include <catch2/catch_amalgamated.hpp>

#include "dblift/check.hpp"
#include "dblift/rel.hpp"
#include "dblift/span.hpp"

using namespace dblift;

TEST_CASE("relation model passes every axiom", "[check]") {
  RelModel m(3);
  Report rep = verify_double_category(m, 7, 400);

  INFO(rep.text());
  CHECK(rep.ok());
  CHECK(rep.items.size() >= 14);
  for (const auto& it : rep.items) {
    CHECK(it.instances > 0);
    CHECK((it.mode == "exhaustive" || it.mode == "sampled"));
    CHECK(it.counterexample.empty());
  }
}

TEST_CASE("span model passes every axiom", "[check]") {
  SpanModel m(2, 3);
  Report rep = verify_double_category(m, 11, 300);

  INFO(rep.text());
  CHECK(rep.ok());

  SECTION("pentagon runs sampled at this budget") {
    bool saw = false;
    for (const auto& it : rep.items)
      if (it.name == "pentagon") {
        saw = true;
        CHECK(it.mode == "sampled");
        CHECK(it.instances == 300);
      }
    CHECK(saw);
  }
}

TEST_CASE("reports are deterministic for a fixed seed", "[check][report]") {
  SpanModel m(2, 2);
  Report a = verify_double_category(m, 42, 100);
  Report b = verify_double_category(m, 42, 100);
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));

  Report c = verify_double_category(m, 43, 100);
  CHECK(c.ok());

  SECTION("text rendering carries one line per axiom") {
    std::string txt = a.text();
    for (const auto& it : a.items)
      CHECK(txt.find(it.name) != std::string::npos);
    CHECK(txt.find("all checks passed") != std::string::npos);
  }

  SECTION("json shape") {
    auto j = a.to_json();
    CHECK(j["report_version"] == 1);
    CHECK(j["component"] == "double_category");
    CHECK(j["ok"] == true);
    CHECK(j["items"].is_array());
    CHECK(j["items"].size() == a.items.size());
  }
}

TEST_CASE("small exhaustive families are labeled exhaustive", "[check]") {
  RelModel m(2);
  Report rep = verify_double_category(m, 5, 5000);
  INFO(rep.text());
  CHECK(rep.ok());
  for (const auto& it : rep.items) {
    if (it.name == "unit functor: identities" ||
        it.name == "unit constraints: globular isomorphisms")
      CHECK(it.mode == "exhaustive");
  }
}
