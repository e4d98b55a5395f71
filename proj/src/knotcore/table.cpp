#include "knotinv/table.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bundled_table.hpp"
#include "knotinv/error.hpp"

namespace knotinv {

namespace {

KnotTableEntry parse_entry(const std::string& line, int line_no) {
  auto malformed = [&](const std::string& why) {
    return Error(ErrorKind::MalformedEntry, "line " + std::to_string(line_no) + ": " + why);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed(std::string("invalid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) throw malformed("expected a JSON object");
  if (!j.contains("name") || !j["name"].is_string()) throw malformed("missing string field 'name'");
  if (!j.contains("pd") || !j["pd"].is_array()) throw malformed("missing array field 'pd'");

  KnotTableEntry entry;
  entry.name = j["name"].get<std::string>();
  if (entry.name.empty() || entry.name.find_first_of("#^ ") != std::string::npos)
    throw malformed("name must be nonempty and free of '#', '^' and spaces");
  for (const auto& quad : j["pd"]) {
    if (!quad.is_array() || quad.size() != 4) throw malformed("pd entries must be 4-element arrays");
    std::array<int, 4> q{};
    for (int i = 0; i < 4; ++i) {
      if (!quad[i].is_number_integer()) throw malformed("pd labels must be integers");
      q[i] = quad[i].get<int>();
    }
    entry.pd.push_back(q);
  }
  if (j.contains("unknots")) {
    if (!j["unknots"].is_number_integer()) throw malformed("'unknots' must be an integer");
    entry.unknots = j["unknots"].get<int>();
  }
  try {
    entry.diagram = from_pd(entry.pd, entry.unknots);
  } catch (const Error& e) {
    throw malformed(e.what());
  }
  if (!entry.diagram.is_knot()) throw malformed("'" + entry.name + "' is not a knot");
  return entry;
}

}  // namespace

void KnotTable::add(KnotTableEntry entry) {
  if (find(entry.name)) throw Error(ErrorKind::DuplicateName, "duplicate knot name '" + entry.name + "'");
  entries_.push_back(std::move(entry));
}

const KnotTableEntry* KnotTable::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

LinkDiagram KnotTable::resolve(std::string_view name) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto base = [&](std::string_view s) {
    s = trim(s);
    if (s == "unknot") return LinkDiagram::unknot();
    if (const auto* e = find(s)) return e->diagram;
    throw Error(ErrorKind::UnknownKnot, "unknown knot '" + std::string(s) + "'");
  };
  auto term = [&](std::string_view s) {
    auto caret = s.find('^');
    if (caret == std::string_view::npos) return base(s);
    std::string_view exp = trim(s.substr(caret + 1));
    if (exp.empty() || exp.size() > 3 ||
        !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::UnknownKnot, "bad power in knot name '" + std::string(s) + "'");
    return self_sum(base(s.substr(0, caret)), std::stoi(std::string(exp)));
  };

  LinkDiagram acc = LinkDiagram::unknot();
  std::size_t start = 0;
  for (;;) {
    auto hash = name.find('#', start);
    acc = connected_sum(acc, term(name.substr(start, hash - start)));
    if (hash == std::string_view::npos) break;
    start = hash + 1;
  }
  return acc;
}

KnotTable parse_table(std::istream& in) {
  KnotTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    table.add(parse_entry(line, line_no));
  }
  return table;
}

KnotTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open knot table '" + path + "'");
  return parse_table(in);
}

const KnotTable& bundled_table() {
  static const KnotTable table = [] {
    std::istringstream in(detail::kBundledTable);
    return parse_table(in);
  }();
  return table;
}

const KnotTable& default_table() {
  static const KnotTable table = [] {
    if (const char* path = std::getenv("KNOTTABLE"); path && *path) return load_table(path);
    return bundled_table();
  }();
  return table;
}

}  // namespace knotinv
