// Runs the order-24 census and compares it with the published list.

#include <iostream>

#include <powerchord/powerchord.hpp>

int main() {
  using namespace powerchord;
  const auto rep = census(24);
  std::cout << census_table(rep);
  for (const auto &list : published_lists_for(24)) {
    const auto cmp = compare(rep, list);
    std::cout << list.label << ": " << (cmp.exact() ? "matches" : "differs") << "\n";
    for (const auto &name : cmp.missing)
      std::cout << "  listed but computed chordal: " << name << "\n";
    for (const auto &name : cmp.extra)
      std::cout << "  computed non-chordal but not listed: " << name << "\n";
  }
}
