#include "cograph_hc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cograph_hc/error.hpp"

namespace cohc {

std::string default_vertex_name(std::size_t i) { return "v" + std::to_string(i); }

Graph::Graph(std::size_t n) : names_(n), adjacency_(n, Bitset(n)) {
  for (std::size_t i = 0; i < n; ++i) names_[i] = default_vertex_name(i);
}

Graph::Graph(std::size_t n, std::vector<std::string> names) : names_(std::move(names)), adjacency_(n, Bitset(n)) {
  if (names_.size() != n)
    throw Error(ErrorCode::InvalidArgument, "bad-names", "expected " + std::to_string(n) + " names");
  std::unordered_set<std::string_view> seen;
  for (const auto& s : names_) {
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "bad-names", "empty vertex name");
    if (s.find_first_of(" \t\r\n#(),;:") != std::string::npos)
      throw Error(ErrorCode::InvalidArgument, "bad-names", "vertex name '" + s + "' contains a reserved character");
    if (!seen.insert(s).second) throw Error(ErrorCode::InvalidArgument, "duplicate-name", s);
  }
}

void Graph::add_edge(VertexId u, VertexId v) {
  const auto n = static_cast<VertexId>(size());
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw Error(ErrorCode::InvalidArgument, "bad-vertex-id",
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop", "vertex " + std::to_string(u));
  adjacency_[u].set(static_cast<std::size_t>(v));
  adjacency_[v].set(static_cast<std::size_t>(u));
}

void Graph::add_join_edges(const std::vector<VertexSet>& parts) {
  if (parts.size() < 2) return;
  Bitset all(size());
  Bitset part(size());
  std::size_t lo = size(), hi = 0;
  for (const auto& p : parts) {
    for (VertexId v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= size())
        throw Error(ErrorCode::InvalidArgument, "bad-vertex-id", std::to_string(v));
      if (all.test(static_cast<std::size_t>(v)))
        throw Error(ErrorCode::InvalidArgument, "overlapping-parts", std::to_string(v));
      all.set(static_cast<std::size_t>(v));
      lo = std::min(lo, static_cast<std::size_t>(v) / Bitset::kWordBits);
      hi = std::max(hi, static_cast<std::size_t>(v) / Bitset::kWordBits);
    }
  }
  for (const auto& p : parts) {
    for (VertexId v : p) part.set(static_cast<std::size_t>(v));
    for (VertexId v : p) {
      Bitset& row = adjacency_[v];
      for (std::size_t w = lo; w <= hi; ++w) row.word(w) |= all.word(w) & ~part.word(w);
    }
    for (VertexId v : p) part.reset(static_cast<std::size_t>(v));
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < static_cast<VertexId>(size()); ++u) {
    adjacency_[u].for_each([&](std::size_t v) {
      if (static_cast<VertexId>(v) > u) out.emplace_back(u, static_cast<VertexId>(v));
    });
  }
  return out;
}

VertexId Graph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<VertexId>(i);
  return -1;
}

bool Graph::has_default_names() const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] != default_vertex_name(i)) return false;
  return true;
}

bool Graph::same_edges(const Graph& other) const { return adjacency_ == other.adjacency_; }

Graph complement(const Graph& g) {
  const std::size_t n = g.size();
  Graph out(n, g.names());
  for (VertexId u = 0; u < static_cast<VertexId>(n); ++u)
    for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
  if (vs.empty()) throw Error(ErrorCode::InvalidArgument, "empty-induced-set", "no vertices given");
  std::vector<char> used(g.size(), 0);
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (VertexId v : vs) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size() || used[v])
      throw Error(ErrorCode::InvalidArgument, "bad-vertex-id", std::to_string(v));
    used[v] = 1;
    names.push_back(g.name(v));
  }
  Graph out(vs.size(), std::move(names));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) out.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return out;
}

namespace {

// BFS over the vertices of vs, following edges of g (complement == false) or
// non-edges of g (complement == true). Words outside [lo, hi] are never
// touched, so the cost per visited vertex is proportional to the id span of vs.
std::vector<VertexSet> components_impl(const Graph& g, const VertexSet& vs, bool complement) {
  std::vector<VertexSet> out;
  if (vs.empty()) return out;
  Bitset remaining(g.size());
  for (VertexId v : vs) remaining.set(static_cast<std::size_t>(v));
  const std::size_t lo = static_cast<std::size_t>(vs.front()) / Bitset::kWordBits;
  const std::size_t hi = static_cast<std::size_t>(vs.back()) / Bitset::kWordBits;

  std::vector<VertexId> queue;
  for (VertexId start : vs) {
    if (!remaining.test(static_cast<std::size_t>(start))) continue;
    remaining.reset(static_cast<std::size_t>(start));
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Bitset& row = g.neighbors(queue[head]);
      for (std::size_t w = lo; w <= hi; ++w) {
        Bitset::Word hit = remaining.word(w) & (complement ? ~row.word(w) : row.word(w));
        if (!hit) continue;
        remaining.word(w) &= ~hit;
        while (hit) {
          queue.push_back(static_cast<VertexId>(w * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(hit))));
          hit &= hit - 1;
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& vs) {
  return components_impl(g, vs, false);
}

std::vector<VertexSet> complement_components(const Graph& g, const VertexSet& vs) {
  return components_impl(g, vs, true);
}

std::vector<VertexSet> connected_components(const Graph& g) { return components_impl(g, all_vertices(g), false); }

VertexSet all_vertices(const Graph& g) {
  VertexSet vs(g.size());
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<VertexId>(i);
  return vs;
}

namespace {

Graph combine(const std::vector<Graph>& gs, bool cross_edges) {
  if (gs.empty()) throw Error(ErrorCode::InvalidArgument, "empty-list", "no graphs to combine");
  std::size_t n = 0;
  for (const auto& g : gs) n += g.size();

  std::vector<std::string> names;
  names.reserve(n);
  std::unordered_set<std::string> taken;
  for (const auto& g : gs) {
    for (const auto& s : g.names()) {
      std::string name = s;
      for (int k = 1; taken.count(name); ++k) name = s + "_" + std::to_string(k);
      taken.insert(name);
      names.push_back(std::move(name));
    }
  }

  Graph out(n, std::move(names));
  VertexId offset = 0;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (const auto& [u, v] : gs[i].edges()) out.add_edge(u + offset, v + offset);
    offset += static_cast<VertexId>(gs[i].size());
  }
  if (cross_edges) {
    std::vector<VertexSet> parts;
    offset = 0;
    for (const auto& g : gs) {
      VertexSet p(g.size());
      for (std::size_t j = 0; j < p.size(); ++j) p[j] = offset + static_cast<VertexId>(j);
      offset += static_cast<VertexId>(g.size());
      parts.push_back(std::move(p));
    }
    out.add_join_edges(parts);
  }
  return out;
}

}  // namespace

Graph disjoint_union(const std::vector<Graph>& gs) { return combine(gs, false); }

Graph join(const std::vector<Graph>& gs) { return combine(gs, true); }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u < static_cast<VertexId>(n); ++u)
    for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u + 1 < static_cast<VertexId>(n); ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(static_cast<VertexId>(n - 1), 0);
  return g;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "parse-error", "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool parse_uint(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool have_n = false;
  bool can_name = false;
  std::size_t n = 0;
  std::vector<std::pair<std::string, std::string>> pending;
  std::vector<std::size_t> pending_lines;
  std::vector<std::string> names;

  while (std::getline(in, raw)) {
    ++lineno;
    auto tokens = split_ws(strip_comment(raw));
    if (tokens.empty()) continue;
    if (!have_n) {
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_uint(tokens[1], n))
        parse_fail(lineno, "expected 'n <count>' header");
      have_n = true;
      can_name = true;
      continue;
    }
    if (tokens[0] == "names" && can_name) {
      if (tokens.size() != n + 1)
        parse_fail(lineno, "names line lists " + std::to_string(tokens.size() - 1) + " names for " +
                               std::to_string(n) + " vertices");
      names.assign(tokens.begin() + 1, tokens.end());
      can_name = false;
      continue;
    }
    can_name = false;
    if (tokens.size() != 2) parse_fail(lineno, "expected '<u> <v>'");
    pending.emplace_back(tokens[0], tokens[1]);
    pending_lines.push_back(lineno);
  }
  if (!have_n) parse_fail(lineno, "missing 'n <count>' header");

  Graph g = names.empty() ? Graph(n) : Graph(n, std::move(names));
  std::unordered_map<std::string_view, VertexId> by_name;
  for (std::size_t i = 0; i < n; ++i) by_name.emplace(g.name(static_cast<VertexId>(i)), static_cast<VertexId>(i));
  auto resolve = [&](const std::string& tok, std::size_t line) -> VertexId {
    if (auto it = by_name.find(tok); it != by_name.end()) return it->second;
    std::size_t id = 0;
    if (parse_uint(tok, id) && id < n) return static_cast<VertexId>(id);
    parse_fail(line, "unknown vertex '" + tok + "'");
  };
  for (std::size_t i = 0; i < pending.size(); ++i) {
    VertexId u = resolve(pending[i].first, pending_lines[i]);
    VertexId v = resolve(pending[i].second, pending_lines[i]);
    if (u == v) parse_fail(pending_lines[i], "self-loop on '" + pending[i].first + "'");
    g.add_edge(u, v);
  }
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.size() << "\n";
  if (!g.has_default_names()) {
    out << "names";
    for (const auto& s : g.names()) out << ' ' << s;
    out << "\n";
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << "\n";
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "io-error", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "io-error", "cannot write " + path);
  out << format_edge_list(g);
}

}  // namespace cohc
