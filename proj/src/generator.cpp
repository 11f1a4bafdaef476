#include "cograph_hc/generator.hpp"

#include <algorithm>
#include <numeric>

#include "cograph_hc/error.hpp"
#include "cograph_hc/oracle.hpp"
#include "cograph_hc/rng.hpp"

namespace cohc {

void for_each_cograph(std::size_t n, const std::function<void(const Graph&)>& f) {
  if (n == 0 || n > kMaxExhaustiveN)
    throw Error(ErrorCode::SizeGuard, "size-guard", "exhaustive enumeration supports 1 <= n <= " + std::to_string(kMaxExhaustiveN));
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < static_cast<VertexId>(n); ++u)
    for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    if (!oracle::find_induced_p4(g)) f(g);
  }
}

std::vector<Graph> exhaustive_cographs(std::size_t n) {
  std::vector<Graph> out;
  for_each_cograph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

GeneratedCograph random_cograph(const GenParams& p) {
  if (p.n == 0) throw Error(ErrorCode::InvalidArgument, "bad-params", "n must be positive");
  if (p.max_arity < 2) throw Error(ErrorCode::InvalidArgument, "bad-params", "max arity must be at least 2");
  if (!(p.balance >= 0.0 && p.balance <= 1.0)) throw Error(ErrorCode::InvalidArgument, "bad-params", "balance must lie in [0,1]");

  Rng rng(p.seed);
  std::vector<VertexId> perm(p.n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = p.n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  // Leaves of a node occupy the slot range [begin, begin + size) of perm.
  struct Item {
    std::size_t begin, size;
    std::size_t parent;
  };
  struct Proto {
    VertexId vertex = -1;
    Label label = Label::Union;
    std::vector<std::size_t> children;
  };
  std::vector<Proto> protos;
  std::vector<Item> stack{{0, p.n, SIZE_MAX}};
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    const std::size_t self = protos.size();
    protos.emplace_back();
    if (item.parent != SIZE_MAX) protos[item.parent].children.push_back(self);
    if (item.size == 1) {
      protos[self].vertex = perm[item.begin];
      continue;
    }
    protos[self].label = rng.chance(p.balance) ? Label::Join : Label::Union;
    const std::size_t arity = 2 + rng.below(std::min(p.max_arity, item.size) - 1);
    std::vector<std::size_t> cuts;
    while (cuts.size() + 1 < arity) {
      std::size_t c = 1 + rng.below(item.size - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(item.size);
    for (std::size_t i = cuts.size() - 1; i-- > 0;)
      stack.push_back({item.begin + cuts[i], cuts[i + 1] - cuts[i], self});
  }

  CotreeBuilder b(p.n);
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
  GeneratedCograph out;
  out.cotree = b.build(ids[0]);
  out.graph = realized_graph(out.cotree);
  return out;
}

}  // namespace cohc
