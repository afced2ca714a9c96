#include "crflag/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include "crflag/error.hpp"

namespace crflag {

namespace {

// Exceptional real forms, Bourbaki numbering, 1-based.
constexpr std::string_view kExceptional = R"(EI    E 6 black {} arrows {}
EII   E 6 black {} arrows {(1,6),(3,5)}
EIII  E 6 black {3,4,5} arrows {(1,6)}
EIV   E 6 black {2,3,4,5} arrows {}
EV    E 7 black {} arrows {}
EVI   E 7 black {2,5,7} arrows {}
EVII  E 7 black {2,3,4,5} arrows {}
EVIII E 8 black {} arrows {}
EIX   E 8 black {2,3,4,5} arrows {}
FI    F 4 black {} arrows {}
FII   F 4 black {1,2,3} arrows {}
G     G 2 black {} arrows {}
)";

struct TableRecord {
  std::string label;
  SatakeData data;
};

std::vector<int> ints_in(std::string_view s) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] >= '0' && s[i] <= '9') {
      int v = 0;
      auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
      out.push_back(v);
      i = static_cast<std::size_t>(p - s.data());
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<TableRecord> parse_table(std::string_view text) {
  std::vector<TableRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string label, type, rank;
    ls >> label >> type >> rank;
    const auto b0 = line.find("black"), a0 = line.find("arrows");
    if (b0 == std::string::npos || a0 == std::string::npos)
      throw DataIntegrityError("malformed catalog record: " + line);
    TableRecord rec{label, {DynkinGraph::parse(type + rank), {}, {}}};
    for (int b : ints_in(std::string_view(line).substr(b0, a0 - b0))) rec.data.black.insert(b - 1);
    const auto arrow_ints = ints_in(std::string_view(line).substr(a0));
    for (std::size_t k = 0; k + 1 < arrow_ints.size(); k += 2)
      rec.data.arrows.emplace_back(arrow_ints[k] - 1, arrow_ints[k + 1] - 1);
    out.push_back(std::move(rec));
  }
  return out;
}

const std::map<std::string, SatakeDiagram>& exceptional_forms() {
  static const std::map<std::string, SatakeDiagram> forms = [] {
    std::map<std::string, SatakeDiagram> m;
    for (auto& rec : parse_table(kExceptional)) {
      try {
        SatakeDiagram d(std::move(rec.data));
        d.set_name("exc(" + rec.label + ")");
        m.emplace(rec.label, std::move(d));
      } catch (const Error& e) {
        throw DataIntegrityError("catalog entry " + rec.label + " failed validation: " + e.what());
      }
    }
    return m;
  }();
  return forms;
}

int to_int(const std::string& s, std::string_view form) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw OutOfRange(std::string(form) + ": expected an integer parameter, got '" + s + "'");
  return v;
}

NodeSet range_nodes(int from, int to) {  // 1-based inclusive
  NodeSet s;
  for (int i = from; i <= to; ++i) s.insert(i - 1);
  return s;
}

SatakeDiagram make(std::string type_rank, NodeSet black, std::vector<std::pair<int, int>> arrows1,
                   std::string name) {
  SatakeData data{DynkinGraph::parse(type_rank), black, {}};
  for (auto [i, j] : arrows1) data.arrows.emplace_back(i - 1, j - 1);
  try {
    SatakeDiagram d(std::move(data));
    d.set_name(std::move(name));
    return d;
  } catch (const MalformedGraph& e) {
    throw;
  } catch (const Error& e) {
    throw DataIntegrityError("catalog form " + name + " failed validation: " + e.what());
  }
}

std::string join_params(const std::vector<std::string>& args, char sep) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += sep;
    s += args[i];
  }
  return s;
}

void expect_args(std::string_view name, const std::vector<std::string>& args, std::size_t n) {
  if (args.size() != n)
    throw OutOfRange(std::string(name) + " takes " + std::to_string(n) + " parameter(s), got " +
                     std::to_string(args.size()));
}

SatakeDiagram su(int p, int q, const std::string& name) {
  if (p > q) std::swap(p, q);
  const int n = p + q;
  if (p < 0 || n < 2) throw OutOfRange(name + ": need 0 <= p <= q and p+q >= 2");
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= p && i < n - i; ++i) arrows.emplace_back(i, n - i);
  return make("A" + std::to_string(n - 1), range_nodes(p + 1, q - 1), arrows, name);
}

SatakeDiagram so(int p, int q, const std::string& name) {
  if (p > q) std::swap(p, q);
  const int n = p + q;
  if (p < 0) throw OutOfRange(name + ": p must be nonnegative");
  if (n % 2 == 1) {
    if (n < 5) throw OutOfRange(name + ": odd p+q must be at least 5");
    const int l = (n - 1) / 2;
    return make("B" + std::to_string(l), range_nodes(p + 1, l), {}, name);
  }
  if (n < 8) throw OutOfRange(name + ": even p+q must be at least 8");
  const int l = n / 2;
  if (p == l - 1) return make("D" + std::to_string(l), {}, {{l - 1, l}}, name);
  if (p == l) return make("D" + std::to_string(l), {}, {}, name);
  return make("D" + std::to_string(l), range_nodes(p + 1, l), {}, name);
}

SatakeDiagram so_star(int two_n, const std::string& name) {
  if (two_n % 2 != 0 || two_n < 8) throw OutOfRange(name + ": parameter must be even and at least 8");
  const int n = two_n / 2;
  NodeSet black;
  std::vector<std::pair<int, int>> arrows;
  if (n % 2 == 0) {
    for (int i = 1; i < n; i += 2) black.insert(i - 1);
  } else {
    for (int i = 1; i <= n - 2; i += 2) black.insert(i - 1);
    arrows.emplace_back(n - 1, n);
  }
  return make("D" + std::to_string(n), black, arrows, name);
}

SatakeDiagram sp(int p, int q, const std::string& name) {
  if (p > q) std::swap(p, q);
  const int n = p + q;
  if (p < 0 || n < 2) throw OutOfRange(name + ": need 0 <= p <= q and p+q >= 2");
  NodeSet black;
  for (int i = 1; i <= 2 * p - 1; i += 2) black.insert(i - 1);
  black = black | range_nodes(2 * p + 1, n);
  return make("C" + std::to_string(n), black, {}, name);
}

SatakeDiagram compact(const std::string& type, int l, const std::string& name) {
  return make(type + std::to_string(l), NodeSet::first_n(l), {}, name);
}

SatakeDiagram complex_form(const std::string& type, int l, const std::string& name) {
  const std::string t = type + std::to_string(l);
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= l; ++i) arrows.emplace_back(i, l + i);
  SatakeDiagram d = make(t + "+" + t, {}, arrows, name);
  std::vector<std::string> labels;
  for (int i = 1; i <= l; ++i) labels.push_back(std::to_string(i));
  for (int i = 1; i <= l; ++i) labels.push_back(std::to_string(i) + "'");
  d.set_labels(std::move(labels));
  return d;
}

// Simple types of rank <= rank_max, one representative per isomorphism class.
std::vector<std::pair<std::string, int>> simple_types(int rank_max) {
  std::vector<std::pair<std::string, int>> out;
  for (int l = 1; l <= std::min(rank_max, kMaxComponentRank); ++l) {
    out.emplace_back("A", l);
    if (l >= 2) out.emplace_back("B", l);
    if (l >= 3) out.emplace_back("C", l);
    if (l >= 4) out.emplace_back("D", l);
    if (l >= 6 && l <= 8) out.emplace_back("E", l);
    if (l == 4) out.emplace_back("F", l);
    if (l == 2) out.emplace_back("G", l);
  }
  return out;
}

}  // namespace

std::string_view exceptional_table() { return kExceptional; }

SatakeDiagram catalog_lookup(std::string_view name, const std::vector<std::string>& args) {
  const std::string full = std::string(name) + "(" + join_params(args, ',') + ")";
  if (name == "su") {
    expect_args(name, args, 2);
    return su(to_int(args[0], name), to_int(args[1], name), full);
  }
  if (name == "sl_r") {
    expect_args(name, args, 1);
    const int n = to_int(args[0], name);
    if (n < 2) throw OutOfRange(full + ": n must be at least 2");
    return make("A" + std::to_string(n - 1), {}, {}, full);
  }
  if (name == "sl_h") {
    expect_args(name, args, 1);
    const int m = to_int(args[0], name);
    if (m < 1) throw OutOfRange(full + ": m must be at least 1");
    NodeSet black;
    for (int i = 1; i <= 2 * m - 1; i += 2) black.insert(i - 1);
    return make("A" + std::to_string(2 * m - 1), black, {}, full);
  }
  if (name == "so") {
    expect_args(name, args, 2);
    return so(to_int(args[0], name), to_int(args[1], name), full);
  }
  if (name == "so_star") {
    expect_args(name, args, 1);
    return so_star(to_int(args[0], name), full);
  }
  if (name == "sp_r") {
    expect_args(name, args, 1);
    const int n = to_int(args[0], name);
    if (n < 2) throw OutOfRange(full + ": n must be at least 2");
    return make("C" + std::to_string(n), {}, {}, full);
  }
  if (name == "sp") {
    expect_args(name, args, 2);
    return sp(to_int(args[0], name), to_int(args[1], name), full);
  }
  if (name == "compact" || name == "complex") {
    expect_args(name, args, 2);
    const std::string& type = args[0];
    if (type.size() != 1 || std::string("ABCDEFG").find(type[0]) == std::string::npos)
      throw OutOfRange(full + ": unknown Dynkin type '" + type + "'");
    const int l = to_int(args[1], name);
    try {
      return name == "compact" ? compact(type, l, full) : complex_form(type, l, full);
    } catch (const MalformedGraph& e) {
      throw OutOfRange(full + ": " + e.what());
    }
  }
  if (name == "exc") {
    expect_args(name, args, 1);
    const auto& forms = exceptional_forms();
    const auto it = forms.find(args[0]);
    if (it == forms.end()) throw OutOfRange(full + ": unknown exceptional label '" + args[0] + "'");
    return it->second;
  }
  throw UnknownForm("unknown real form '" + std::string(name) + "'");
}

const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> f{"su",      "sl_r",    "sl_h", "so",  "so_star",
                                          "sp_r",    "sp",      "compact", "complex", "exc"};
  return f;
}

std::vector<CatalogEntry> catalog_family(std::string_view family, int rank_max) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::vector<std::string> args, int rank) {
    if (rank > rank_max || rank > kMaxComponentRank) return;
    out.push_back({std::string(family), join_params(args, ';'), rank, catalog_lookup(family, args)});
  };
  const auto s = [](int v) { return std::to_string(v); };
  if (family == "su") {
    for (int n = 2; n - 1 <= rank_max; ++n)
      for (int p = 1; p <= n / 2; ++p) add({s(p), s(n - p)}, n - 1);
  } else if (family == "sl_r") {
    for (int n = 2; n - 1 <= rank_max; ++n) add({s(n)}, n - 1);
  } else if (family == "sl_h") {
    for (int m = 1; 2 * m - 1 <= rank_max; ++m) add({s(m)}, 2 * m - 1);
  } else if (family == "so") {
    for (int n = 5; n / 2 <= rank_max; ++n) {
      if (n % 2 == 0 && n < 8) continue;
      for (int p = 1; p <= n / 2; ++p) add({s(p), s(n - p)}, n / 2);
    }
  } else if (family == "so_star") {
    for (int n = 4; n <= rank_max; ++n) add({s(2 * n)}, n);
  } else if (family == "sp_r") {
    for (int n = 2; n <= rank_max; ++n) add({s(n)}, n);
  } else if (family == "sp") {
    for (int n = 2; n <= rank_max; ++n)
      for (int p = 1; p <= n / 2; ++p) add({s(p), s(n - p)}, n);
  } else if (family == "compact" || family == "complex") {
    for (const auto& [t, l] : simple_types(rank_max)) add({t, s(l)}, l);
  } else if (family == "exc") {
    for (const auto& [label, d] : exceptional_forms()) {
      const int rank = d.rank();
      if (rank > rank_max) continue;
      out.push_back({"exc", label, rank, d});
    }
  } else {
    throw UnknownForm("unknown family '" + std::string(family) + "'");
  }
  return out;
}

std::vector<CatalogEntry> catalog_forms(int rank_max) {
  std::vector<CatalogEntry> out;
  for (const auto& f : catalog_families()) {
    auto part = catalog_family(f, rank_max);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.diagram.name() < b.diagram.name();
  });
  return out;
}

}  // namespace crflag
