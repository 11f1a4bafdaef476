#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cograph_hc/cotree.hpp"
#include "cograph_hc/error.hpp"

namespace cohc {

std::string newick_subtree(const Cotree& t, NodeId u) {
  std::string out;
  // (node, next child index); explicit stack so caterpillars of any depth work.
  std::vector<std::pair<NodeId, std::size_t>> stack{{u, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nd = t.node(v);
    if (nd.is_leaf()) {
      out += t.names()[nd.vertex];
      stack.pop_back();
      continue;
    }
    if (next == nd.children.size()) {
      out += ')';
      out += nd.label == Label::Join ? '1' : '0';
      stack.pop_back();
      continue;
    }
    out += next == 0 ? '(' : ',';
    NodeId child = nd.children[next++];
    stack.emplace_back(child, 0);
  }
  return out;
}

std::string newick_write(const Cotree& t) { return newick_subtree(t, t.root()) + ";"; }

namespace {

[[noreturn]] void parse_fail(std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::Parse, "parse-error", "byte " + std::to_string(offset) + ": " + what);
}

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' && c != ';' && c != ':';
}

// Parses into a builder whose leaf vertex ids are resolved by `resolve`.
template <class Resolve>
Cotree parse(std::string_view s, std::vector<std::string> names, Resolve&& resolve) {
  CotreeBuilder b(std::move(names));
  std::vector<std::vector<NodeId>> open;  // child lists of the open parentheses
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  NodeId last = -1;  // most recently completed subtree
  bool expect_subtree = true;

  skip_ws();
  while (true) {
    skip_ws();
    if (i >= s.size()) parse_fail(i, "unexpected end of input");
    char c = s[i];
    if (expect_subtree) {
      if (c == '(') {
        open.emplace_back();
        ++i;
        continue;
      }
      if (!is_name_char(c)) parse_fail(i, std::string("expected '(' or a leaf name, found '") + c + "'");
      std::size_t start = i;
      while (i < s.size() && is_name_char(s[i])) ++i;
      last = b.add_leaf(resolve(s.substr(start, i - start), start));
      expect_subtree = false;
      continue;
    }
    // After a complete subtree: ',' ')' or ';'.
    if (c == ',') {
      if (open.empty()) parse_fail(i, "',' outside parentheses");
      open.back().push_back(last);
      ++i;
      expect_subtree = true;
      continue;
    }
    if (c == ')') {
      if (open.empty()) parse_fail(i, "unbalanced ')'");
      open.back().push_back(last);
      const std::size_t close = i++;
      skip_ws();
      if (i >= s.size() || !is_name_char(s[i])) parse_fail(i, "missing inner node label after ')'");
      std::size_t start = i;
      while (i < s.size() && is_name_char(s[i])) ++i;
      std::string_view label = s.substr(start, i - start);
      if (label != "0" && label != "1")
        throw Error(ErrorCode::Parse, "bad-label",
                    "byte " + std::to_string(start) + ": inner label '" + std::string(label) + "' is not 0 or 1");
      if (open.back().size() < 2) parse_fail(close, "inner node needs at least two children");
      last = b.add_inner(label == "1" ? Label::Join : Label::Union, std::move(open.back()));
      open.pop_back();
      continue;
    }
    if (c == ';') {
      if (!open.empty()) parse_fail(i, "';' before all parentheses are closed");
      ++i;
      skip_ws();
      if (i != s.size()) parse_fail(i, "trailing characters after ';'");
      break;
    }
    parse_fail(i, std::string("unexpected '") + c + "'");
  }
  return b.build(last);
}

}  // namespace

Cotree newick_read(std::string_view text) {
  // First pass collects leaf names so the builder knows the vertex count.
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  {
    std::size_t i = 0;
    bool after_close = false;
    while (i < text.size()) {
      char c = text[i];
      if (!is_name_char(c)) {
        after_close = c == ')' || (after_close && std::isspace(static_cast<unsigned char>(c)));
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && is_name_char(text[i])) ++i;
      if (!after_close) {
        std::string name(text.substr(start, i - start));
        if (index.count(name)) parse_fail(start, "duplicate leaf '" + name + "'");
        index.emplace(name, static_cast<VertexId>(names.size()));
        names.push_back(std::move(name));
      }
      after_close = false;
    }
  }
  if (names.empty()) parse_fail(0, "no leaves");
  return parse(text, names, [&](std::string_view name, std::size_t) { return index.at(std::string(name)); });
}

Cotree newick_read(std::string_view text, const Graph& g) {
  std::unordered_map<std::string_view, VertexId> index;
  for (std::size_t v = 0; v < g.size(); ++v) index.emplace(g.name(static_cast<VertexId>(v)), static_cast<VertexId>(v));
  try {
    return parse(text, g.names(), [&](std::string_view name, std::size_t offset) {
      auto it = index.find(name);
      if (it == index.end())
        throw Error(ErrorCode::Mismatch, "cotree-graph-mismatch",
                    "byte " + std::to_string(offset) + ": leaf '" + std::string(name) + "' is not a graph vertex");
      return it->second;
    });
  } catch (const Error& e) {
    if (e.key() == "invalid-cotree") throw Error(ErrorCode::Mismatch, "cotree-graph-mismatch", e.what());
    throw;
  }
}

Cotree read_newick_file(const std::string& path, const Graph& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "io-error", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return newick_read(buf.str(), g);
}

}  // namespace cohc
