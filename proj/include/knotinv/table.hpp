#pragma once

#include <array>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "knotinv/diagram.hpp"

namespace knotinv {

struct KnotTableEntry {
  std::string name;
  std::vector<std::array<int, 4>> pd;
  int unknots = 0;
  LinkDiagram diagram;
};

// A diagram together with the table name it was resolved from.
struct NamedKnot {
  std::string name;
  LinkDiagram diagram;
};

class KnotTable {
 public:
  // Raises DuplicateName.
  void add(KnotTableEntry entry);

  const std::vector<KnotTableEntry>& entries() const { return entries_; }
  const KnotTableEntry* find(std::string_view name) const;

  // Plain names, "unknot", connected sums "A#B" and powers "A^k".
  // Raises UnknownKnot.
  LinkDiagram resolve(std::string_view name) const;
  NamedKnot named(std::string_view name) const { return {std::string(name), resolve(name)}; }

 private:
  std::vector<KnotTableEntry> entries_;
};

// One JSON object per line with fields name, pd and optional unknots. Blank
// lines are skipped. Raises MalformedEntry naming the line, or DuplicateName.
KnotTable parse_table(std::istream& in);
// Raises FileNotFound.
KnotTable load_table(const std::string& path);

// The table compiled into the library.
const KnotTable& bundled_table();
// The file named by KNOTTABLE when set, else the bundled table. Loaded once.
const KnotTable& default_table();

}  // namespace knotinv
