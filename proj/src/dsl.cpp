#include "crflag/dsl.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crflag/catalog.hpp"
#include "crflag/error.hpp"

namespace crflag {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Int: return "integer " + t.text;
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j - i > 6) throw ParseError(i, "a small integer", "'" + std::string(s.substr(i, j - i)) + "'");
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("(){},+").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError(i, "a name, integer or one of ( ) { } , +", "'" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// A label list whose range is checked once the rank is known.
struct Labels {
  std::vector<std::pair<int, std::size_t>> items;  // label, position
};

struct PairList {
  std::vector<std::pair<int, int>> items;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  CrossedDiagram spec() {
    SatakeDiagram d = form();
    NodeSet crosses;
    if (peek_ident("cross")) {
      next();
      crosses = to_nodes(set(), d.rank());
    }
    expect_end();
    return CrossedDiagram(std::move(d), crosses);
  }

  NodeSet standalone_set() {
    Labels l = set();
    expect_end();
    return to_nodes(l, NodeSet::kMaxNodes);
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_ == toks_.size() - 1 ? at_ : at_++]; }
  bool peek_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool peek_ident(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().pos, expected, describe(peek()));
  }
  void expect_punct(char c) {
    if (!peek_punct(c)) fail(std::string("'") + c + "'");
    next();
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("end of input");
  }
  int integer() {
    if (peek().kind != Tok::Int) fail("integer");
    return std::stoi(next().text);
  }

  SatakeDiagram form() {
    if (peek().kind != Tok::Ident) fail("form name");
    if (peek().text == "custom") {
      next();
      return custom();
    }
    static const std::vector<std::string> kNames = {"su", "sl_r", "sl_h", "so", "so_star", "sp_r",
                                                    "sp", "compact", "complex", "exc"};
    bool known = false;
    for (const auto& n : kNames) known |= n == peek().text;
    if (!known) fail("one of su, sl_r, sl_h, so, so_star, sp_r, sp, compact, complex, exc, custom");
    const std::string name = next().text;
    expect_punct('(');
    std::vector<std::string> args;
    for (;;) {
      if (peek().kind != Tok::Int && peek().kind != Tok::Ident) fail("argument");
      args.push_back(next().text);
      if (peek_punct(')')) break;
      expect_punct(',');
    }
    next();
    return catalog_lookup(name, args);
  }

  SatakeDiagram custom() {
    if (peek().kind != Tok::Ident) fail("Dynkin type");
    const std::size_t type_pos = peek().pos;
    std::string type = next().text;
    while (peek_punct('+')) {
      next();
      if (peek().kind != Tok::Ident) fail("Dynkin type");
      type += "+" + next().text;
    }
    const std::size_t rank_pos = peek().pos;
    const int rank = integer();
    DynkinGraph graph = make_graph(type, rank, type_pos, rank_pos);

    Labels black;
    PairList arrows;
    if (peek_ident("black")) {
      next();
      black = set();
    }
    if (peek_ident("arrows")) {
      next();
      arrows = pairset();
    }
    SatakeData data{graph, to_nodes(black, graph.rank()), {}};
    for (auto [a, b] : arrows.items) {
      check_label(a, graph.rank());
      check_label(b, graph.rank());
      data.arrows.emplace_back(a - 1, b - 1);
    }
    return SatakeDiagram(std::move(data));
  }

  static DynkinGraph make_graph(const std::string& type, int rank, std::size_t type_pos,
                                std::size_t rank_pos) {
    const bool letter = type.size() == 1;
    DynkinGraph g = [&] {
      try {
        return DynkinGraph::parse(letter ? type + std::to_string(rank) : type);
      } catch (const MalformedGraph& e) {
        throw ParseError(type_pos, "a Dynkin type such as A, D or A1+A1", "'" + type + "' (" + e.what() + ")");
      }
    }();
    if (g.rank() != rank)
      throw ParseError(rank_pos, "rank " + std::to_string(g.rank()) + " for type " + type, std::to_string(rank));
    return g;
  }

  Labels set() {
    Labels out;
    expect_punct('{');
    if (peek_punct('}')) {
      next();
      return out;
    }
    for (;;) {
      const std::size_t pos = peek().pos;
      out.items.emplace_back(integer(), pos);
      if (peek_punct('}')) break;
      expect_punct(',');
    }
    next();
    return out;
  }

  PairList pairset() {
    PairList out;
    expect_punct('{');
    for (;;) {
      expect_punct('(');
      const int a = integer();
      expect_punct(',');
      const int b = integer();
      expect_punct(')');
      out.items.emplace_back(a, b);
      if (peek_punct('}')) break;
      expect_punct(',');
    }
    next();
    return out;
  }

  static void check_label(int label, int rank) {
    if (label < 1 || label > rank)
      throw OutOfRange("node " + std::to_string(label) + " out of range (diagram has " + std::to_string(rank) +
                       " nodes)");
  }

  static NodeSet to_nodes(const Labels& l, int rank) {
    NodeSet s;
    for (auto [label, pos] : l.items) {
      check_label(label, rank);
      s.insert(label - 1);
    }
    return s;
  }
};

CrossedDiagram parse_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "valid json", e.what());
  }
  auto field = [&](const char* key) -> const json& {
    if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("json field \"") + key + "\"", "none");
    return j.at(key);
  };
  try {
    const std::string type = field("type").get<std::string>();
    const int rank = field("rank").get<int>();
    DynkinGraph graph = [&] {
      if (type.empty() && rank == 0) return DynkinGraph({});
      try {
        return DynkinGraph::parse(type.size() == 1 ? type + std::to_string(rank) : type);
      } catch (const MalformedGraph& e) {
        throw ParseError(0, "a Dynkin type in \"type\"", "'" + type + "'");
      }
    }();
    if (graph.rank() != rank)
      throw ParseError(0, "\"rank\" " + std::to_string(graph.rank()), std::to_string(rank));
    auto nodes = [&](const char* key) {
      NodeSet s;
      for (int label : field(key).get<std::vector<int>>()) {
        if (label < 1 || label > rank)
          throw OutOfRange("node " + std::to_string(label) + " out of range (diagram has " +
                           std::to_string(rank) + " nodes)");
        s.insert(label - 1);
      }
      return s;
    };
    SatakeData data{graph, nodes("black"), {}};
    for (const auto& pair : field("arrows").get<std::vector<std::vector<int>>>()) {
      if (pair.size() != 2) throw ParseError(0, "arrow pairs of two labels", std::to_string(pair.size()) + " labels");
      for (int label : pair)
        if (label < 1 || label > rank)
          throw OutOfRange("node " + std::to_string(label) + " out of range (diagram has " +
                           std::to_string(rank) + " nodes)");
      data.arrows.emplace_back(pair[0] - 1, pair[1] - 1);
    }
    const NodeSet crosses = nodes("cross");
    return CrossedDiagram(SatakeDiagram(std::move(data)), crosses);
  } catch (const json::exception& e) {
    throw ParseError(0, "the diagram json schema", e.what());
  }
}

}  // namespace

CrossedDiagram parse_spec(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return Parser(text).spec();
}

NodeSet parse_node_set(std::string_view text) { return Parser(text).standalone_set(); }

}  // namespace crflag
