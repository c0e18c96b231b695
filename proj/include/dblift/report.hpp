#pragma once

// Verification results as data.  Reports serialize to JSON with a fixed
// key order and no timing fields, so identical inputs and seeds produce
// byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dblift {

struct CheckItem {
  std::string name;
  std::string citation;
  bool pass = true;
  // "exhaustive" when the whole population fit the budget, else "sampled"
  std::string mode = "exhaustive";
  long long instances = 0;
  std::string counterexample;
};

struct Report {
  std::string component;
  std::string model;
  std::uint64_t seed = 0;
  long long budget = 0;
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  long long total_instances() const {
    long long n = 0;
    for (const auto& it : items) n += it.instances;
    return n;
  }

  void add(CheckItem item) { items.push_back(std::move(item)); }

  void extend(const Report& other) {
    for (const auto& it : other.items) items.push_back(it);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["report_version"] = 1;
    j["component"] = component;
    j["model"] = model;
    j["seed"] = seed;
    j["budget"] = budget;
    j["ok"] = ok();
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& it : items) {
      nlohmann::ordered_json ji;
      ji["name"] = it.name;
      ji["citation"] = it.citation;
      ji["pass"] = it.pass;
      ji["mode"] = it.mode;
      ji["instances"] = it.instances;
      ji["counterexample"] = it.counterexample;
      j["items"].push_back(std::move(ji));
    }
    return j;
  }

  std::string text() const {
    std::string out = component + " on " + model + " (seed " +
                      std::to_string(seed) + ", budget " +
                      std::to_string(budget) + ")\n";
    for (const auto& it : items) {
      out += std::string(it.pass ? "  PASS " : "  FAIL ") + it.name + " [" +
             it.citation + "] " + it.mode + " n=" +
             std::to_string(it.instances);
      if (!it.pass) out += "\n    counterexample: " + it.counterexample;
      out += "\n";
    }
    out += items.empty() ? "(no checks)\n"
                         : (ok() ? "all checks passed\n" : "FAILURES above\n");
    return out;
  }
};

}  // namespace dblift
