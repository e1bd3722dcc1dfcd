#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baaz/poset.hpp"

namespace baaz::structures {

namespace detail {

// Shared 10-element skeleton: 0, four atoms, four coatoms, 1, with each
// atom below the three coatoms named in its row of `links`.
inline FinitePoset tenpoint(
    const std::vector<std::pair<std::string, std::string>>& links,
    bool with_complement_table, const std::string& label) {
  std::vector<std::string> names = {"0",      "a",      "b",      "c",
                                    "d",      "aprime", "bprime", "cprime",
                                    "dprime", "1"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (const std::string& atom : {"a", "b", "c", "d"})
    covers.emplace_back("0", atom);
  covers.insert(covers.end(), links.begin(), links.end());
  for (const std::string& coatom : {"aprime", "bprime", "cprime", "dprime"})
    covers.emplace_back(coatom, "1");
  std::vector<std::pair<std::string, std::string>> comps;
  if (with_complement_table) {
    comps = {{"0", "1"},           {"a", "aprime"},    {"b", "bprime"},
             {"c", "cprime"},      {"d", "dprime"},    {"aprime", "a"},
             {"bprime", "b"},      {"cprime", "c"},    {"dprime", "d"},
             {"1", "0"}};
  }
  return build_poset(names, covers, comps, label);
}

}  // namespace detail

// Bounded complemented but non-distributive 10-element poset. Ships with
// its complement table spelled out so the table itself gets validated.
inline FinitePoset np10() {
  return detail::tenpoint(
      {{"a", "bprime"}, {"a", "cprime"}, {"a", "dprime"},
       {"b", "aprime"}, {"b", "dprime"},
       {"c", "aprime"}, {"c", "dprime"},
       {"d", "aprime"}, {"d", "bprime"}, {"d", "cprime"}},
      /*with_complement_table=*/true, "np10");
}

// 10-element Boolean poset that is not a lattice: each atom sits below
// exactly the three coatoms other than its complement.
inline FinitePoset bp10() {
  return detail::tenpoint(
      {{"a", "bprime"}, {"a", "cprime"}, {"a", "dprime"},
       {"b", "aprime"}, {"b", "cprime"}, {"b", "dprime"},
       {"c", "aprime"}, {"c", "bprime"}, {"c", "dprime"},
       {"d", "aprime"}, {"d", "bprime"}, {"d", "cprime"}},
      /*with_complement_table=*/false, "bp10");
}

// 16-element Boolean algebra on four atoms, with the rank-2 layer named
// e, g, h and their complements.
inline FinitePoset cube16() {
  std::vector<std::string> names = {
      "0",      "a",      "b",      "c",      "d",      "e",
      "g",      "h",      "hprime", "gprime", "eprime", "dprime",
      "cprime", "bprime", "aprime", "1"};
  std::vector<std::pair<std::string, std::string>> covers = {
      {"0", "a"},           {"0", "b"},           {"0", "c"},
      {"0", "d"},           {"a", "e"},           {"a", "g"},
      {"a", "h"},           {"b", "e"},           {"b", "hprime"},
      {"b", "gprime"},      {"c", "g"},           {"c", "hprime"},
      {"c", "eprime"},      {"d", "h"},           {"d", "gprime"},
      {"d", "eprime"},      {"e", "dprime"},      {"e", "cprime"},
      {"g", "dprime"},      {"g", "bprime"},      {"h", "cprime"},
      {"h", "bprime"},      {"hprime", "dprime"}, {"hprime", "aprime"},
      {"gprime", "cprime"}, {"gprime", "aprime"}, {"eprime", "bprime"},
      {"eprime", "aprime"}, {"dprime", "1"},      {"cprime", "1"},
      {"bprime", "1"},      {"aprime", "1"}};
  return build_poset(names, covers, {}, "cube16");
}

}  // namespace baaz::structures
