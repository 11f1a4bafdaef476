#include "cograph_hc/hc_algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "cograph_hc/error.hpp"

namespace cohc {

// ---------------------------------------------------------------------------
// Injection choosers

InjectionChooser InjectionChooser::identity_prefix() { return InjectionChooser(); }

InjectionChooser InjectionChooser::seeded_random(std::uint64_t seed) {
  InjectionChooser c;
  c.strategy_ = Strategy::SeededRandom;
  c.rng_ = Rng(seed);
  return c;
}

InjectionChooser InjectionChooser::exhaustive(Callback pick) {
  InjectionChooser c;
  c.strategy_ = Strategy::ExhaustiveCallback;
  c.pick_ = std::move(pick);
  return c;
}

std::vector<Color> InjectionChooser::choose(const std::vector<Color>& source, const std::vector<Color>& target) {
  const std::size_t k = source.size();
  const std::size_t s = target.size();
  if (k > s) throw Error(ErrorCode::InvalidArgument, "injection-size-order", "source larger than target");
  std::vector<Color> image(k);
  switch (strategy_) {
    case Strategy::IdentityPrefix:
      std::copy_n(target.begin(), k, image.begin());
      break;
    case Strategy::SeededRandom: {
      std::vector<Color> pool = target;
      for (std::size_t i = 0; i < k; ++i) {
        std::swap(pool[i], pool[i + rng_.below(s - i)]);
        image[i] = pool[i];
      }
      break;
    }
    case Strategy::ExhaustiveCallback: {
      // Unrank a k-permutation of the target in lexicographic order.
      std::size_t options = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (options > SIZE_MAX / (s - i))
          throw Error(ErrorCode::SizeGuard, "size-guard", "too many injections to enumerate");
        options *= s - i;
      }
      std::size_t index = pick_(options);
      if (index >= options) throw Error(ErrorCode::InvalidArgument, "bad-choice", "injection index out of range");
      std::vector<Color> pool = target;
      std::size_t block = options;
      for (std::size_t i = 0; i < k; ++i) {
        block /= s - i;
        const std::size_t digit = index / block;
        index %= block;
        image[i] = pool[digit];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
      }
      break;
    }
  }
  return image;
}

bool ChoiceOdometer::next() {
  if (!started_) {
    started_ = true;
    depth_ = 0;
    return true;
  }
  digits_.resize(depth_);
  radix_.resize(depth_);
  while (!digits_.empty() && digits_.back() + 1 >= radix_.back()) {
    digits_.pop_back();
    radix_.pop_back();
  }
  if (digits_.empty()) return false;
  ++digits_.back();
  depth_ = 0;
  return true;
}

InjectionChooser ChoiceOdometer::chooser() {
  depth_ = 0;
  return InjectionChooser::exhaustive([this](std::size_t options) {
    if (depth_ < digits_.size()) {
      radix_[depth_] = options;
      return digits_[depth_++];
    }
    digits_.push_back(0);
    radix_.push_back(options);
    ++depth_;
    return std::size_t{0};
  });
}

// ---------------------------------------------------------------------------
// Recursively minimal colorings

namespace {

// Bottom-up recoloring along t; shared by both algorithms.
Coloring color_along(const Cotree& t, InjectionChooser& chooser) {
  const std::size_t n = t.vertex_count();
  std::vector<Color> color(n);
  std::iota(color.begin(), color.end(), 1);
  const std::vector<std::size_t> chi = chromatic_numbers(t);

  auto colors_of = [&](const VertexSet& vs) {
    std::vector<Color> s;
    s.reserve(vs.size());
    for (VertexId v : vs) s.push_back(color[v]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };

  for (NodeId u : t.postorder()) {
    const auto& nd = t.node(u);
    if (nd.is_leaf() || nd.label != Label::Union) continue;
    NodeId best = nd.children.front();
    for (NodeId c : nd.children)
      if (chi[c] > chi[best]) best = c;
    const std::vector<Color> target = colors_of(t.leaves(best));
    for (NodeId c : nd.children) {
      if (c == best) continue;
      const VertexSet vs = t.leaves(c);
      const std::vector<Color> source = colors_of(vs);
      const std::vector<Color> image = chooser.choose(source, target);
      for (VertexId v : vs) {
        auto pos = std::lower_bound(source.begin(), source.end(), color[v]) - source.begin();
        color[v] = image[static_cast<std::size_t>(pos)];
      }
    }
  }

  // Order-preserving rename onto 1..k.
  std::vector<Color> used = color;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& c : color) c = static_cast<Color>(std::lower_bound(used.begin(), used.end(), c) - used.begin() + 1);
  return Coloring(std::move(color));
}

}  // namespace

Alg1Result alg1_color(const Graph& g, InjectionChooser chooser) {
  Alg1Result r;
  r.cotree = require_cotree(g);
  r.coloring = color_along(r.cotree, chooser);
  return r;
}

Coloring alg2_color(const Graph& g, const Cotree& t, InjectionChooser chooser) {
  if (!realizes(t, g)) throw Error(ErrorCode::Mismatch, "cotree-graph-mismatch", "the cotree does not realize the graph");
  return color_along(t, chooser);
}

// ---------------------------------------------------------------------------
// Reconstruction

BinaryCotree reconstruct_cotree(const Graph& g, const Coloring& c) {
  check_domain(g, c);
  const Verdict verdict = is_hc_coloring(g, c);
  if (!verdict.accepted) {
    std::string msg = std::string(axiom_name(verdict.axiom)) + " fails between {";
    for (std::size_t i = 0; i < verdict.first.size(); ++i) msg += (i ? " " : "") + g.name(verdict.first[i]);
    msg += "} and {";
    for (std::size_t i = 0; i < verdict.second.size(); ++i) msg += (i ? " " : "") + g.name(verdict.second[i]);
    msg += "}";
    throw Error(ErrorCode::NotHc, "not-hc", msg);
  }

  // A work item is a vertex set, optionally with its split already known
  // (the remainder after peeling one part off keeps the other parts).
  struct Item {
    VertexSet vs;
    std::size_t parent;
    std::optional<std::pair<Label, std::vector<VertexSet>>> split;
  };
  struct Proto {
    VertexId vertex = -1;
    Label label = Label::Union;
    std::vector<std::size_t> children;
  };
  std::vector<Proto> protos;
  std::vector<Item> stack;
  stack.push_back({all_vertices(g), SIZE_MAX, std::nullopt});

  auto merged = [](const std::vector<VertexSet>& parts) {
    VertexSet out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
  };

  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const std::size_t self = protos.size();
    protos.emplace_back();
    if (item.parent != SIZE_MAX) protos[item.parent].children.push_back(self);
    if (item.vs.size() == 1) {
      protos[self].vertex = item.vs.front();
      continue;
    }
    if (!item.split) {
      auto comps = connected_components(g, item.vs);
      if (comps.size() > 1)
        item.split.emplace(Label::Union, std::move(comps));
      else
        item.split.emplace(Label::Join, complement_components(g, item.vs));
    }
    auto& [label, parts] = *item.split;
    protos[self].label = label;

    std::size_t pick = 0;  // join: the part holding the smallest vertex
    if (label == Label::Union) {
      std::size_t fewest = SIZE_MAX;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::size_t k = c.color_set(parts[i]).size();
        if (k < fewest) {
          fewest = k;
          pick = i;
        }
      }
    }
    VertexSet first = std::move(parts[pick]);
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(pick));
    Item rest;
    rest.parent = self;
    if (parts.size() == 1) {
      rest.vs = std::move(parts.front());
    } else {
      rest.vs = merged(parts);
      rest.split.emplace(label, std::move(parts));
    }
    stack.push_back(std::move(rest));
    stack.push_back({std::move(first), self, std::nullopt});
  }

  CotreeBuilder b(g.names());
  std::vector<NodeId> ids(protos.size(), -1);
  for (std::size_t k = protos.size(); k-- > 0;) {
    if (protos[k].vertex >= 0) {
      ids[k] = b.add_leaf(protos[k].vertex);
    } else {
      std::vector<NodeId> ch;
      for (std::size_t x : protos[k].children) ch.push_back(ids[x]);
      ids[k] = b.add_inner(protos[k].label, std::move(ch));
    }
  }
  return BinaryCotree(b.build(ids[0]));
}

// ---------------------------------------------------------------------------
// Counting

BigInt g_injections(std::size_t s1, std::size_t s2) {
  if (s1 > s2)
    throw Error(ErrorCode::InvalidArgument, "injection-size-order",
                "cannot inject " + std::to_string(s1) + " colors into " + std::to_string(s2));
  BigInt r = 1;
  for (std::size_t i = 0; i < s1; ++i) r *= s2 - i;
  return r;
}

BigInt factorial(std::size_t n) { return g_injections(n, n); }

CountReport count_hc_wrt(const BinaryCotree& bt) {
  const Cotree& t = bt.tree();
  CountReport r{bt, std::vector<BigInt>(t.node_count(), 1), std::vector<std::size_t>(t.node_count(), 1), 0};
  for (NodeId u : t.postorder()) {
    const auto& nd = t.node(u);
    if (nd.is_leaf()) continue;
    const NodeId a = nd.children[0], b = nd.children[1];
    r.per_node[u] = r.per_node[a] * r.per_node[b];
    if (nd.label == Label::Join) {
      r.colors[u] = r.colors[a] + r.colors[b];
    } else {
      const std::size_t lo = std::min(r.colors[a], r.colors[b]);
      const std::size_t hi = std::max(r.colors[a], r.colors[b]);
      r.per_node[u] *= g_injections(lo, hi);
      r.colors[u] = hi;
    }
  }
  r.labeled_total = r.per_node[t.root()] * factorial(r.colors[t.root()]);
  return r;
}

CountReport count_hc_total(const Graph& g) {
  const Cotree disc = require_cotree(g);
  CountReport r = count_hc_wrt(to_binary(disc, BinarizeStrategy::MaxFirst));

  std::vector<NodeId> components;
  if (disc.node(disc.root()).is_leaf() || disc.node(disc.root()).label == Label::Join)
    components.push_back(disc.root());
  else
    components = disc.node(disc.root()).children;
  const std::vector<std::size_t> chi = chromatic_numbers(disc);
  const std::size_t s = chi[disc.root()];

  BigInt total = 1;
  for (NodeId comp : components) {
    const Graph sub = induced_subgraph(g, disc.leaves(comp));
    const CountReport part = count_hc_wrt(to_binary(require_cotree(sub), BinarizeStrategy::MaxFirst));
    total *= g_injections(chi[comp], s) * part.per_node[part.tree.tree().root()];
  }
  r.labeled_total = total;
  return r;
}

std::string format_count_report(const CountReport& r) {
  const Cotree& t = r.tree.tree();
  std::string out;
  for (NodeId u = 0; u < static_cast<NodeId>(t.node_count()); ++u)
    out += "node " + newick_subtree(t, u) + " N " + r.per_node[u].str() + " s " + std::to_string(r.colors[u]) + "\n";
  out += "labeled_total " + r.labeled_total.str() + "\n";
  return out;
}

}  // namespace cohc
