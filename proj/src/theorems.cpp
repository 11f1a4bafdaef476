#include "cograph_hc/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "cograph_hc/coloring.hpp"
#include "cograph_hc/cotree.hpp"
#include "cograph_hc/error.hpp"
#include "cograph_hc/hc_algorithms.hpp"
#include "cograph_hc/oracle.hpp"

namespace cohc::oracle {

namespace {

constexpr std::size_t kTheoremCount = std::size(kAllTheorems);

std::string graph_text(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) {
    if (!s.empty()) s += ' ';
    s += g.name(u) + "-" + g.name(v);
  }
  return s;
}

std::string coloring_text(const Coloring& c) {
  std::string s;
  for (Color x : c.colors()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

std::uint64_t partition_key(const Coloring& canonical) {
  std::uint64_t key = 0;
  for (std::size_t i = canonical.size(); i-- > 0;) key = key * 8 + static_cast<std::uint64_t>(canonical[static_cast<VertexId>(i)]);
  return key;
}

struct Outcome {
  bool ran = false;
  bool skipped = false;
  std::size_t count = 0;
  std::vector<Counterexample> listed;
  std::vector<std::string> notes;
  int root_count_varies = -1;  // COUNT only: -1 not measured
};

struct Instance {
  std::size_t index;
  const Graph& g;
  std::size_t cap;
  std::array<Outcome, kTheoremCount> out{};

  void fail(TheoremId id, std::string cotree, const Coloring* c, std::string detail) {
    Outcome& o = out[static_cast<std::size_t>(id)];
    ++o.count;
    if (o.listed.size() < cap)
      o.listed.push_back({index, graph_text(g), std::move(cotree), c ? coloring_text(*c) : "", std::move(detail)});
  }
};

void run_instance(Instance& in, const std::array<bool, kTheoremCount>& selected) {
  const Graph& g = in.g;
  const std::size_t n = g.size();
  auto on = [&](TheoremId id) { return selected[static_cast<std::size_t>(id)]; };
  auto mark = [&](TheoremId id) { in.out[static_cast<std::size_t>(id)].ran = true; };

  if (n > kMaxEnumerationN)
    throw Error(ErrorCode::SizeGuard, "size-guard",
                "theorem checks support n <= " + std::to_string(kMaxEnumerationN) + ", got " + std::to_string(n));
  if (n == 0 || find_induced_p4(g)) {
    for (TheoremId id : kAllTheorems)
      if (on(id)) {
        Outcome& o = in.out[static_cast<std::size_t>(id)];
        o.skipped = true;
        o.notes.push_back(n == 0 ? "instance " + std::to_string(in.index) + ": empty-graph"
                                 : "instance " + std::to_string(in.index) + ": not-a-cograph");
      }
    return;
  }

  const std::vector<Coloring> parts = all_partitions(n);
  std::unordered_map<std::uint64_t, std::size_t> part_index;
  for (std::size_t p = 0; p < parts.size(); ++p) part_index.emplace(partition_key(parts[p]), p);

  const std::vector<BinaryCotree> trees = all_binary_cotrees(g);
  const std::vector<std::size_t> sub_chi = subset_chromatic(g);
  const std::size_t full = (std::size_t{1} << n) - 1;
  const std::size_t chi = sub_chi[full];

  std::vector<HcVerifier> verifiers;
  std::vector<TreeOracle> tree_oracles;
  std::vector<std::string> newick;
  for (const auto& t : trees) {
    verifiers.emplace_back(g, t);
    tree_oracles.emplace_back(g, t);
    newick.push_back(newick_write(t.tree()));
  }

  std::vector<char> is_proper_part(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) is_proper_part[p] = proper(g, parts[p]);

  // verify_hc on every (tree, partition) pair.
  std::vector<std::vector<Verdict>> verdict(trees.size());
  for (std::size_t t = 0; t < trees.size(); ++t) {
    verdict[t].reserve(parts.size());
    for (const auto& c : parts) verdict[t].push_back(verifiers[t].verify(c));
  }
  std::vector<char> hc_some(parts.size(), 0), hc_every(parts.size(), 1);
  std::vector<std::size_t> accepted_on(trees.size(), 0);
  for (std::size_t t = 0; t < trees.size(); ++t)
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (verdict[t][p].accepted) {
        hc_some[p] = 1;
        ++accepted_on[t];
      } else {
        hc_every[p] = 0;
      }
    }

  std::set<Coloring> first_fits;
  std::set<std::size_t> greedy_parts;
  if (on(TheoremId::L3) || on(TheoremId::GreedyIff)) {
    first_fits = all_first_fit_colorings(g);
    for (const auto& c : first_fits) greedy_parts.insert(part_index.at(partition_key(c.canonical())));
  }

  if (on(TheoremId::T1)) {
    mark(TheoremId::T1);
    for (std::size_t t = 0; t < trees.size(); ++t)
      for (std::size_t p = 0; p < parts.size(); ++p) {
        const Verdict& v = verdict[t][p];
        const Coloring& c = parts[p];
        if (v.accepted != tree_oracles[t].satisfies_axioms(c))
          in.fail(TheoremId::T1, newick[t], &c, "verify_hc disagrees with the axiom oracle");
        if (v.accepted && c.color_count() != chi)
          in.fail(TheoremId::T1, newick[t], &c, "accepted coloring uses " + std::to_string(c.color_count()) +
                                                     " colors, chromatic number " + std::to_string(chi));
        if (!v.accepted && !v.certificate_holds())
          in.fail(TheoremId::T1, newick[t], &c, "rejection certificate does not hold");
        if (!v.accepted && is_proper_part[p] && v.axiom == Axiom::K2)
          in.fail(TheoremId::T1, newick[t], &c, "proper coloring rejected by K2");
      }
  }

  if (on(TheoremId::L2)) {
    mark(TheoremId::L2);
    const std::size_t grundy = brute_grundy(g);
    const std::size_t tree_chi = chromatic_number(require_cotree(g));
    if (grundy != chi || tree_chi != chi)
      in.fail(TheoremId::L2, "", nullptr,
              "grundy " + std::to_string(grundy) + ", brute chi " + std::to_string(chi) + ", cotree chi " +
                  std::to_string(tree_chi));
    std::uint32_t all = static_cast<std::uint32_t>(full);
    const auto comps = component_masks(g, all);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      const Coloring c = greedy_coloring(g, order);
      if (c != first_fit(g, order)) {
        in.fail(TheoremId::L2, "", &c, "greedy_coloring differs from first-fit");
        continue;
      }
      for (std::uint32_t comp : comps) {
        VertexSet vs;
        for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
          if (comp >> v & 1U) vs.push_back(v);
        const auto set = c.color_set(vs);
        const auto k = static_cast<Color>(sub_chi[comp]);
        if (set.size() != static_cast<std::size_t>(k) || set.front() != 1 || set.back() != k)
          in.fail(TheoremId::L2, "", &c, "component colors are not 1..chi of the component");
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }

  if (on(TheoremId::L3)) {
    mark(TheoremId::L3);
    for (const auto& c : first_fits) {
      const std::size_t p = part_index.at(partition_key(c.canonical()));
      for (std::size_t t = 0; t < trees.size(); ++t)
        if (!verdict[t][p].accepted) in.fail(TheoremId::L3, newick[t], &c, "greedy coloring rejected by verify_hc");
    }
  }

  if (on(TheoremId::GreedyIff)) {
    mark(TheoremId::GreedyIff);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const Coloring& c = parts[p];
      const bool every = hc_every[p];
      const bool by_order = greedy_parts.count(p) > 0;
      bool by_witness = false;
      if (is_proper_part[p]) {
        // Every renaming of the classes onto 1..k.
        std::vector<Color> perm(c.color_count());
        std::iota(perm.begin(), perm.end(), 1);
        do {
          std::vector<Color> colors(n);
          for (std::size_t v = 0; v < n; ++v) colors[v] = perm[c[static_cast<VertexId>(v)] - 1];
          const Coloring labeled(std::move(colors));
          const bool witness = is_greedy(g, labeled);
          if (witness != (first_fits.count(labeled) > 0))
            in.fail(TheoremId::GreedyIff, "", &labeled, "is_greedy disagrees with order enumeration");
          by_witness = by_witness || witness;
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      if (every != by_order || every != by_witness)
        in.fail(TheoremId::GreedyIff, "", &c,
                std::string("hc for every cotree=") + (every ? "yes" : "no") + " greedy by order=" +
                    (by_order ? "yes" : "no") + " greedy by witness=" + (by_witness ? "yes" : "no"));
    }
  }

  std::vector<char> minimal_some;
  if (on(TheoremId::T3) || on(TheoremId::T4)) {
    minimal_some.assign(parts.size(), 0);
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (std::size_t t = 0; t < trees.size() && !minimal_some[p]; ++t)
        if (tree_oracles[t].color_minimal(parts[p], sub_chi)) minimal_some[p] = 1;
  }

  if (on(TheoremId::T3)) {
    mark(TheoremId::T3);
    const Cotree disc = require_cotree(g);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const Coloring& c = parts[p];
      const Verdict decided = is_hc_coloring(g, c);
      const bool on_disc = is_hc_coloring(g, disc, c).accepted;
      const bool some = hc_some[p];
      const bool minimal = minimal_some[p];
      if (decided.accepted != some || decided.accepted != minimal || decided.accepted != on_disc ||
          is_recursively_minimal(g, c) != decided.accepted)
        in.fail(TheoremId::T3, "", &c,
                std::string("is_hc_coloring=") + (decided.accepted ? "yes" : "no") + " exists cotree=" +
                    (some ? "yes" : "no") + " recursively minimal=" + (minimal ? "yes" : "no"));
      if (decided.accepted) {
        const BinaryCotree bt = reconstruct_cotree(g, c);
        if (!realizes(bt.tree(), g) || !verify_hc(g, bt, c).accepted)
          in.fail(TheoremId::T3, newick_write(bt.tree()), &c, "reconstructed cotree does not accept the coloring");
      } else {
        bool refused = false;
        try {
          reconstruct_cotree(g, c);
        } catch (const Error& e) {
          refused = e.key() == "not-hc";
        }
        if (!refused) in.fail(TheoremId::T3, "", &c, "reconstruct_cotree accepted a non-hc coloring");
      }
    }
  }

  if (on(TheoremId::T4)) {
    mark(TheoremId::T4);
    std::set<std::size_t> produced;
    for (ChoiceOdometer odo; odo.next();) {
      const Alg1Result r = alg1_color(g, odo.chooser());
      const Coloring& c = r.coloring;
      const std::size_t p = part_index.at(partition_key(c.canonical()));
      produced.insert(p);
      if (!is_recursively_minimal(g, c) || !minimal_some[p] || c.color_count() != chi)
        in.fail(TheoremId::T4, newick_write(r.cotree), &c, "alg1 output is not recursively minimal");
    }
    for (std::size_t p = 0; p < parts.size(); ++p)
      if (hc_some[p] && !produced.count(p))
        in.fail(TheoremId::T4, "", &parts[p], "hc-coloring never produced by alg1");
    for (std::size_t t = 0; t < trees.size(); ++t) {
      const Coloring c = alg2_color(g, trees[t].tree(), InjectionChooser::identity_prefix());
      if (!verifiers[t].verify(c).accepted)
        in.fail(TheoremId::T4, newick[t], &c, "alg2 output rejected by its own cotree");
    }
  }

  if (on(TheoremId::Count)) {
    mark(TheoremId::Count);
    const BigInt relabel = factorial(chi);
    std::set<std::size_t> roots;
    for (std::size_t t = 0; t < trees.size(); ++t) {
      const CountReport r = count_hc_wrt(trees[t]);
      roots.insert(accepted_on[t]);
      if (r.per_node[0] != accepted_on[t] || r.labeled_total != relabel * accepted_on[t])
        in.fail(TheoremId::Count, newick[t], nullptr,
                "count " + r.labeled_total.str() + ", brute force " + BigInt(relabel * accepted_on[t]).str());
    }
    const std::size_t some = static_cast<std::size_t>(std::count(hc_some.begin(), hc_some.end(), 1));
    const CountReport total = count_hc_total(g);
    if (total.labeled_total != relabel * some)
      in.fail(TheoremId::Count, "", nullptr,
              "total count " + total.labeled_total.str() + ", brute force " + BigInt(relabel * some).str());
    in.out[static_cast<std::size_t>(TheoremId::Count)].root_count_varies = roots.size() > 1 ? 1 : 0;
  }
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::L2: return "L2";
    case TheoremId::L3: return "L3";
    case TheoremId::GreedyIff: return "T-greedy-iff";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::Count: return "COUNT";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (theorem_name(id) == name) return id;
  return std::nullopt;
}

std::size_t resolve_threads(std::size_t requested) {
  std::size_t threads = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("COGRAPH_HC_THREADS")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) threads = std::min<std::size_t>(threads, cap);
  }
  return threads;
}

std::vector<TheoremReport> check_theorems(const std::vector<Graph>& corpus, const CheckOptions& options) {
  std::array<bool, kTheoremCount> selected{};
  if (options.theorems.empty()) selected.fill(true);
  for (TheoremId id : options.theorems) selected[static_cast<std::size_t>(id)] = true;

  for (const Graph& g : corpus)
    if (g.size() > kMaxEnumerationN)
      throw Error(ErrorCode::SizeGuard, "size-guard",
                  "theorem checks support n <= " + std::to_string(kMaxEnumerationN) + ", got " + std::to_string(g.size()));

  std::vector<Instance> instances;
  instances.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) instances.push_back({i, corpus[i], options.max_listed});

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(corpus.size());
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      try {
        run_instance(instances[i], selected);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(resolve_threads(options.threads), std::max<std::size_t>(corpus.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<TheoremReport> reports;
  for (TheoremId id : kAllTheorems) {
    const auto k = static_cast<std::size_t>(id);
    if (!selected[k]) continue;
    TheoremReport r;
    r.id = id;
    std::size_t measured = 0, varies = 0;
    for (const Instance& in : instances) {
      const Outcome& o = in.out[k];
      if (o.skipped) ++r.skipped;
      if (o.ran) ++r.checked;
      r.counterexample_count += o.count;
      for (const auto& c : o.listed)
        if (r.counterexamples.size() < options.max_listed) r.counterexamples.push_back(c);
      r.notes.insert(r.notes.end(), o.notes.begin(), o.notes.end());
      if (o.root_count_varies >= 0) {
        ++measured;
        varies += static_cast<std::size_t>(o.root_count_varies);
      }
    }
    if (id == TheoremId::Count && measured > 0)
      r.notes.push_back("root count differs between binary cotrees on " + std::to_string(varies) + " of " +
                        std::to_string(measured) + " graphs");
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string format_reports(const std::vector<TheoremReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    const std::string id(theorem_name(r.id));
    out += id + ": checked " + std::to_string(r.checked) + ", skipped " + std::to_string(r.skipped) + "\n";
    for (const auto& note : r.notes) out += "  note: " + note + "\n";
    for (const auto& c : r.counterexamples) {
      out += "  counterexample instance=" + std::to_string(c.instance) + " graph=[" + c.graph + "]";
      if (!c.cotree.empty()) out += " cotree=" + c.cotree;
      if (!c.coloring.empty()) out += " coloring=[" + c.coloring + "]";
      out += " : " + c.detail + "\n";
    }
  }
  for (const auto& r : reports)
    out += "THEOREM " + std::string(theorem_name(r.id)) + (r.passed() ? " PASS" : " FAIL") +
           " checked=" + std::to_string(r.checked) + " counterexamples=" + std::to_string(r.counterexample_count) + "\n";
  return out;
}

}  // namespace cohc::oracle
