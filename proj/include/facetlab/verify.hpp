#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "facetlab/cell_complex.hpp"
#include "facetlab/circuits.hpp"
#include "facetlab/collapse.hpp"
#include "facetlab/duality.hpp"
#include "facetlab/generators.hpp"
#include "facetlab/graph.hpp"
#include "facetlab/hypertree.hpp"
#include "facetlab/json_io.hpp"
#include "facetlab/linalg.hpp"

namespace facetlab {

// Request to run one registered connectivity check.  Unset fields fall back
// to the check's default grid; seeds == 0 keeps the default sample count.
struct CheckSpec {
  std::string theorem_id;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<std::uint64_t> p;
  int seeds = 0;
  bool exhaustive = false;
};

// Outcome of a check run.  Each violation is a self-contained JSON payload
// carrying the parameters and data needed to rebuild the failing instance.
struct CheckReport {
  std::string theorem_id;
  long long instances = 0;
  std::vector<Json> violations;
  std::map<std::string, long long> extremes;
  double wall_seconds = 0.0;

  bool pass() const { return violations.empty(); }
};

namespace verifydetail {

constexpr long long kPrimitiveBudget = 10'000'000;

struct Tally {
  long long instances = 0;
  std::vector<Json> violations;
  std::map<std::string, long long> extremes;

  void count(long long k = 1) { instances += k; }

  void minimize(const std::string& key, long long v) {
    auto [it, fresh] = extremes.emplace(key, v);
    if (!fresh) it->second = std::min(it->second, v);
  }

  void maximize(const std::string& key, long long v) {
    auto [it, fresh] = extremes.emplace(key, v);
    if (!fresh) it->second = std::max(it->second, v);
  }

  void violation(Json j) { violations.push_back(std::move(j)); }

  void merge(Tally&& o) {
    instances += o.instances;
    for (Json& v : o.violations) violations.push_back(std::move(v));
    for (const auto& [k, v] : o.extremes) {
      if (k.rfind("min", 0) == 0)
        minimize(k, v);
      else
        maximize(k, v);
    }
  }
};

using Job = std::function<void(Tally&)>;

inline int worker_count(std::size_t jobs) {
  long long cap = 0;
  if (const char* s = std::getenv("FACETLAB_THREADS")) cap = std::atoll(s);
  if (cap < 1) {
    unsigned hw = std::thread::hardware_concurrency();
    cap = hw == 0 ? 1 : static_cast<long long>(std::min(hw, 8u));
  }
  return static_cast<int>(std::min<long long>(
      cap, static_cast<long long>(std::max<std::size_t>(jobs, 1))));
}

// Runs every job once.  The list is cut into contiguous chunks, one worker
// per chunk, and chunk tallies merge back in list order, so the report is
// identical to a serial run.
inline void run_jobs(std::vector<Job>& jobs, Tally& out) {
  int workers = worker_count(jobs.size());
  if (workers <= 1 || jobs.size() < 4) {
    for (Job& j : jobs) j(out);
    return;
  }
  std::size_t per = (jobs.size() + static_cast<std::size_t>(workers) - 1) /
                    static_cast<std::size_t>(workers);
  std::vector<Tally> parts(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * per;
    std::size_t hi = std::min(jobs.size(), lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&jobs, &parts, &errors, lo, hi, w] {
      try {
        for (std::size_t i = lo; i < hi; ++i)
          jobs[i](parts[static_cast<std::size_t>(w)]);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  for (Tally& part : parts) out.merge(std::move(part));
}

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t seed_of(std::string_view check, std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : check) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return mix(h ^ mix(index));
}

inline std::vector<int> int_grid(const std::optional<int>& forced, int lo,
                                 int hi) {
  if (forced) return {*forced};
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

inline std::vector<std::uint64_t> prime_grid(
    const CheckSpec& spec, std::initializer_list<std::uint64_t> defaults) {
  if (spec.p) return {*spec.p};
  return defaults;
}

inline int sample_budget(const CheckSpec& spec, int fallback) {
  return spec.seeds > 0 ? spec.seeds : fallback;
}

inline Json simplex_json(const Simplex& s) {
  Json arr = Json::array();
  for (int v : s.vertices()) arr.push_back(v);
  return arr;
}

inline Json simplex_list_json(const std::vector<Simplex>& faces) {
  Json arr = Json::array();
  for (const Simplex& s : faces) arr.push_back(simplex_json(s));
  return arr;
}

inline Json payload(
    std::initializer_list<std::pair<std::string, Json>> fields) {
  Json j = Json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  return j;
}

inline Chain random_chain(std::mt19937_64& rng, int n, int dim,
                          std::uint64_t p) {
  std::vector<Simplex> pool = all_faces_of_dim(n, dim);
  Chain z(dim, p);
  std::size_t terms = 1 + rng() % static_cast<std::size_t>(dim + 3);
  for (std::size_t i = 0; i < terms; ++i) {
    const Simplex& s = pool[rng() % pool.size()];
    z.set_coeff(s, static_cast<Scalar>(1 + rng() % (p - 1)));
  }
  return z;
}

inline std::vector<Simplex> sample_faces(std::mt19937_64& rng,
                                         std::vector<Simplex> pool,
                                         std::size_t want) {
  want = std::min(want, pool.size());
  for (std::size_t i = 0; i < want; ++i) {
    std::size_t j = i + rng() % (pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(want);
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline long long subset_count(int m, int kmax) {
  long long total = 0;
  for (int k = 0; k <= std::min(m, kmax); ++k) {
    total += binomial(m, k);
    if (total > kPrimitiveBudget) return total;
  }
  return total;
}

// Visits every subset of {0..m-1} with at most kmax elements, the empty
// set first and supersets after their prefixes.
template <typename Fn>
inline void for_each_index_subset(int m, int kmax, Fn&& fn) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    fn(static_cast<const std::vector<int>&>(pick));
    if (static_cast<int>(pick.size()) == kmax) return;
    for (int i = next; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<int> component_labels(const Graph& g,
                                         const std::vector<char>& removed) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (removed[s] || label[s] != -1) continue;
    std::vector<int> stack{static_cast<int>(s)};
    label[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adj[static_cast<std::size_t>(u)]) {
        std::size_t vi = static_cast<std::size_t>(v);
        if (removed[vi] || label[vi] != -1) continue;
        label[vi] = next;
        stack.push_back(v);
      }
    }
    ++next;
  }
  return label;
}

inline SparseCol chain_to_col(const Chain& c,
                              const std::map<Simplex, int>& rows) {
  SparseCol col;
  for (const auto& [s, v] : c.terms()) col.push_back({rows.at(s), v});
  std::sort(col.begin(), col.end());
  return col;
}

inline std::vector<Simplex> distinct_edge_labels(const FacetGraph& fg) {
  std::set<Simplex> seen;
  for (const auto& [e, f] : fg.edge_labels) seen.insert(f);
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// cycle-connectivity: facet graphs of simple d-cycles are (d+1)-connected.

inline void check_cycle_connectivity(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 50);
  for (int d : int_grid(spec.d, 1, 3)) {
    for (std::uint64_t p : prime_grid(spec, {2, 3, 5})) {
      jobs.push_back([=](Tally& t) {
        Chain z = cross_polytope_cycle(d, p);
        FacetGraph fg = build_facet_graph(z.support());
        int kappa = vertex_connectivity(fg);
        t.count();
        t.minimize("min connectivity slack", kappa - (d + 1));
        if (kappa != d + 1)
          t.violation(payload({{"check", "cycle-connectivity"},
                               {"instance", "cross-polytope"},
                               {"d", d},
                               {"p", p},
                               {"kappa", kappa},
                               {"expected", d + 1}}));
        for (const auto& row : fg.graph.adj)
          if (static_cast<int>(row.size()) != d + 1)
            t.violation(payload({{"check", "cycle-connectivity"},
                                 {"instance", "cross-polytope-degree"},
                                 {"d", d},
                                 {"p", p},
                                 {"degree", row.size()},
                                 {"expected", d + 1}}));
        std::vector<int> top(static_cast<std::size_t>(d) + 2);
        std::iota(top.begin(), top.end(), 1);
        Chain b = simplex_boundary_cycle(Simplex(top), p);
        FacetGraph bf = build_facet_graph(b.support());
        t.count();
        if (!graphalg::is_complete(bf.graph) ||
            vertex_connectivity(bf) != d + 1)
          t.violation(payload({{"check", "cycle-connectivity"},
                               {"instance", "simplex-boundary"},
                               {"d", d},
                               {"p", p},
                               {"kappa", vertex_connectivity(bf)},
                               {"expected", d + 1}}));
        if (d == 2) {
          Chain tz = torus_cycle(4, p);
          FacetGraph tf = build_facet_graph(tz.support());
          int tk = vertex_connectivity(tf);
          t.count();
          if (tk != 3)
            t.violation(payload({{"check", "cycle-connectivity"},
                                 {"instance", "torus"},
                                 {"p", p},
                                 {"kappa", tk},
                                 {"expected", 3}}));
        }
      });
      for (int n : int_grid(spec.n, d + 2, 7)) {
        jobs.push_back([=](Tally& t) {
          for (int s = 0; s < seeds; ++s) {
            std::uint64_t seed = seed_of(
                "cycle-connectivity",
                ((static_cast<std::uint64_t>(d) * 64 + n) * 64 + p) * 4096 +
                    static_cast<std::uint64_t>(s));
            Chain z = random_simple_cycle(n, d, p, seed);
            FacetGraph fg = build_facet_graph(z.support());
            int kappa = vertex_connectivity(fg);
            t.count();
            t.minimize("min connectivity slack", kappa - (d + 1));
            t.maximize("max facet graph order",
                       static_cast<long long>(fg.graph.order()));
            if (kappa < d + 1)
              t.violation(payload({{"check", "cycle-connectivity"},
                                   {"instance", "random-simple-cycle"},
                                   {"n", n},
                                   {"d", d},
                                   {"p", p},
                                   {"seed", seed},
                                   {"kappa", kappa},
                                   {"required", d + 1},
                                   {"chain", chain_to_json(z, n)}}));
          }
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// cycle-mixed-removal: the facet graph of a simple d-cycle stays connected
// after deleting any r facets and q ridge labels with r + q <= d.

inline void mixed_removal_sweep(const Chain& z, int n, int d, Json meta,
                                Tally& t) {
  FacetGraph fg = build_facet_graph(z.support());
  std::vector<Simplex> labels = distinct_edge_labels(fg);
  int items = static_cast<int>(fg.vertices.size() + labels.size());
  if (subset_count(items, d) > kPrimitiveBudget)
    throw InstanceTooLarge("mixed removal sweep over " +
                           std::to_string(items) +
                           " items exceeds the primitive check budget");
  t.maximize("max removal items", items);
  for_each_index_subset(items, d, [&](const std::vector<int>& pick) {
    std::vector<Simplex> verts;
    std::vector<Simplex> labs;
    for (int i : pick) {
      if (i < static_cast<int>(fg.vertices.size()))
        verts.push_back(fg.vertices[static_cast<std::size_t>(i)]);
      else
        labs.push_back(
            labels[static_cast<std::size_t>(i) - fg.vertices.size()]);
    }
    t.count();
    if (!connected_after_mixed_removal(fg, verts, labs)) {
      Json v = meta;
      v["check"] = "cycle-mixed-removal";
      v["n"] = n;
      v["d"] = d;
      v["removed_facets"] = simplex_list_json(verts);
      v["removed_labels"] = simplex_list_json(labs);
      v["chain"] = chain_to_json(z, n);
      t.violation(std::move(v));
    }
  });
}

inline void check_cycle_mixed_removal(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 3);
  for (std::uint64_t p : prime_grid(spec, {3})) {
    for (int d : int_grid(spec.d, 2, 3)) {
      jobs.push_back([=](Tally& t) {
        Chain z = cross_polytope_cycle(d, p);
        mixed_removal_sweep(z, 2 * (d + 1), d,
                            payload({{"instance", "cross-polytope"},
                                     {"p", p}}),
                            t);
      });
      if (d == 2)
        jobs.push_back([=](Tally& t) {
          Chain z = torus_cycle(4, p);
          mixed_removal_sweep(z, 16, d,
                              payload({{"instance", "torus"}, {"p", p}}), t);
        });
      for (int n : int_grid(spec.n, d + 2, 6)) {
        jobs.push_back([=](Tally& t) {
          for (int s = 0; s < seeds; ++s) {
            std::uint64_t seed = seed_of(
                "cycle-mixed-removal",
                ((static_cast<std::uint64_t>(d) * 64 + n) * 64 + p) * 4096 +
                    static_cast<std::uint64_t>(s));
            Chain z = random_simple_cycle(n, d, p, seed);
            mixed_removal_sweep(
                z, n, d,
                payload({{"instance", "random-simple-cycle"},
                         {"p", p},
                         {"seed", seed}}),
                t);
          }
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// biconnected-sets: classes closed under "lies on a common circuit" of size
// at least two have (d+1)-connected facet graphs.

inline void check_biconnected_sets(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 20);
  for (int d : int_grid(spec.d, 1, 2)) {
    for (std::uint64_t p : prime_grid(spec, {2, 3})) {
      for (int n : int_grid(spec.n, d + 2, 6)) {
        jobs.push_back([=](Tally& t) {
          std::vector<Simplex> pool = all_faces_of_dim(n, d);
          auto audit = [&](const std::vector<Simplex>& family,
                           const Json& meta) {
            auto classes = biconnected_classes(family, p);
            std::size_t total = 0;
            for (const auto& cls : classes) total += cls.size();
            if (total != family.size()) {
              Json v = meta;
              v["check"] = "biconnected-sets";
              v["problem"] = "classes do not partition the family";
              t.violation(std::move(v));
            }
            t.maximize("max classes", static_cast<long long>(classes.size()));
            for (const auto& cls : classes) {
              if (cls.size() < 2) continue;
              int kappa = vertex_connectivity(build_facet_graph(cls));
              t.count();
              t.minimize("min class connectivity slack", kappa - (d + 1));
              if (kappa < d + 1) {
                Json v = meta;
                v["check"] = "biconnected-sets";
                v["class"] = simplex_list_json(cls);
                v["kappa"] = kappa;
                v["required"] = d + 1;
                t.violation(std::move(v));
              }
            }
            return classes.size();
          };
          std::size_t full_classes = audit(
              pool, payload({{"instance", "complete-complex"},
                             {"n", n},
                             {"d", d},
                             {"p", p}}));
          if (full_classes != 1)
            t.violation(payload({{"check", "biconnected-sets"},
                                 {"instance", "complete-complex"},
                                 {"n", n},
                                 {"d", d},
                                 {"p", p},
                                 {"classes", full_classes},
                                 {"expected", 1}}));
          std::mt19937_64 rng(seed_of(
              "biconnected-sets",
              (static_cast<std::uint64_t>(d) * 64 + n) * 64 + p));
          for (int s = 0; s < seeds; ++s) {
            std::size_t lo = static_cast<std::size_t>(d) + 2;
            std::size_t hi = std::min<std::size_t>(pool.size(), 12);
            std::size_t m = lo + rng() % (hi - lo + 1);
            std::vector<Simplex> family = sample_faces(rng, pool, m);
            audit(family, payload({{"instance", "random-family"},
                                   {"n", n},
                                   {"d", d},
                                   {"p", p},
                                   {"sample", s}}));
          }
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// tree-connectivity: facet graphs of hypertrees are d-connected, and the
// perturbed tree pins minimum degree exactly d.

inline void check_tree_connectivity(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 20);
  for (int d : int_grid(spec.d, 1, 3)) {
    for (int n : int_grid(spec.n, d + 2, 7)) {
      for (std::uint64_t p : prime_grid(spec, {2, 3, 5})) {
        jobs.push_back([=](Tally& t) {
          auto audit = [&](const Hypertree& tree, const std::string& kind,
                           std::uint64_t seed) {
            t.count();
            if (!is_hypertree(tree)) {
              t.violation(payload({{"check", "tree-connectivity"},
                                   {"instance", kind},
                                   {"n", n},
                                   {"d", d},
                                   {"p", p},
                                   {"seed", seed},
                                   {"problem", "not a hypertree"}}));
              return;
            }
            FacetGraph fg = build_facet_graph(tree.simplices);
            int kappa = vertex_connectivity(fg);
            t.minimize("min connectivity slack", kappa - d);
            if (kappa < d)
              t.violation(payload({{"check", "tree-connectivity"},
                                   {"instance", kind},
                                   {"n", n},
                                   {"d", d},
                                   {"p", p},
                                   {"seed", seed},
                                   {"kappa", kappa},
                                   {"required", d},
                                   {"faces",
                                    simplex_list_json(tree.simplices)}}));
            if (kind == "perturbed-tree") {
              std::size_t mindeg = fg.graph.order();
              for (const auto& row : fg.graph.adj)
                mindeg = std::min(mindeg, row.size());
              t.minimize("min perturbed degree",
                         static_cast<long long>(mindeg));
              if (static_cast<int>(mindeg) != d)
                t.violation(payload({{"check", "tree-connectivity"},
                                     {"instance", "perturbed-tree-degree"},
                                     {"n", n},
                                     {"d", d},
                                     {"p", p},
                                     {"min_degree", mindeg},
                                     {"expected", d}}));
            }
          };
          audit(star_hypertree(n, d, p), "star-tree", 0);
          audit(hypertree_greedy(n, d, p), "greedy-tree", 0);
          audit(perturbed_hypertree(n, d, p), "perturbed-tree", 0);
          for (int s = 0; s < seeds; ++s) {
            std::uint64_t seed = seed_of(
                "tree-connectivity",
                ((static_cast<std::uint64_t>(d) * 64 + n) * 64 + p) * 4096 +
                    static_cast<std::uint64_t>(s));
            audit(hypertree_random(n, d, p, seed), "random-tree", seed);
          }
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// r-connected-complex: if every d-hypercut meets the face set in at least
// r faces then the facet graph is (d+r-1)-connected.

inline void check_r_connected_complex(const CheckSpec& spec, Tally& out) {
  std::vector<std::pair<int, int>> grid;
  if (spec.n || spec.d) {
    int n = spec.n.value_or(6);
    int d = spec.d.value_or(2);
    grid.push_back({n, d});
  } else {
    grid = {{5, 1}, {6, 1}, {5, 2}, {6, 2}, {5, 3}, {6, 3}, {6, 4}};
  }
  int seeds = sample_budget(spec, 10);
  std::vector<Job> jobs;
  for (auto [n, d] : grid) {
    if (binomial(n, d + 1) > static_cast<long long>(kCircuitSearchMaxCols))
      throw InstanceTooLarge("hypercut enumeration needs at most " +
                             std::to_string(kCircuitSearchMaxCols) +
                             " candidate faces");
    for (std::uint64_t p : prime_grid(spec, {2, 3})) {
      jobs.push_back([=](Tally& t) {
        std::vector<Chain> cuts = enumerate_hypercuts(n, d, p);
        t.maximize("max hypercut count", static_cast<long long>(cuts.size()));
        std::vector<std::vector<Simplex>> supports;
        supports.reserve(cuts.size());
        for (const Chain& h : cuts) supports.push_back(h.support());
        auto meeting = [&](const std::vector<Simplex>& faces) {
          long long best = -1;
          for (const auto& supp : supports) {
            std::vector<Simplex> both;
            std::set_intersection(supp.begin(), supp.end(), faces.begin(),
                                  faces.end(), std::back_inserter(both));
            long long hit = static_cast<long long>(both.size());
            if (best < 0 || hit < best) best = hit;
          }
          return best < 0 ? 0 : best;
        };
        std::vector<Simplex> pool = all_faces_of_dim(n, d);
        long long rfull = meeting(pool);
        t.count();
        if (rfull != n - d)
          t.violation(payload({{"check", "r-connected-complex"},
                               {"instance", "complete-complex"},
                               {"n", n},
                               {"d", d},
                               {"p", p},
                               {"meeting", rfull},
                               {"expected", n - d}}));
        int kfull = vertex_connectivity(build_facet_graph(pool));
        if (kfull < d + static_cast<int>(rfull) - 1)
          t.violation(payload({{"check", "r-connected-complex"},
                               {"instance", "complete-complex"},
                               {"n", n},
                               {"d", d},
                               {"p", p},
                               {"kappa", kfull},
                               {"required", d + rfull - 1}}));
        std::mt19937_64 rng(seed_of(
            "r-connected-complex",
            (static_cast<std::uint64_t>(n) * 64 + d) * 64 + p));
        for (int s = 0; s < seeds; ++s) {
          std::size_t lo = static_cast<std::size_t>(d) + 2;
          std::size_t m = lo + rng() % (pool.size() - lo + 1);
          std::vector<Simplex> faces = sample_faces(rng, pool, m);
          long long r = meeting(faces);
          t.count();
          t.maximize("max meeting number", r);
          if (r < 1) continue;
          int kappa = vertex_connectivity(build_facet_graph(faces));
          t.minimize("min connectivity slack",
                     kappa - (d + static_cast<int>(r) - 1));
          if (kappa < d + static_cast<int>(r) - 1)
            t.violation(payload({{"check", "r-connected-complex"},
                                 {"instance", "random-family"},
                                 {"n", n},
                                 {"d", d},
                                 {"p", p},
                                 {"sample", s},
                                 {"meeting", r},
                                 {"kappa", kappa},
                                 {"required", d + r - 1},
                                 {"faces", simplex_list_json(faces)}}));
        }
      });
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// hypercut-complement: faces outside a d-hypercut form a (d-1)-connected
// facet graph.

inline void check_hypercut_complement(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 10);
  for (int d : int_grid(spec.d, 1, 3)) {
    for (int n : int_grid(spec.n, d + 2, 6)) {
      for (std::uint64_t p : prime_grid(spec, {2, 3})) {
        jobs.push_back([=](Tally& t) {
          std::vector<Simplex> pool = all_faces_of_dim(n, d);
          auto audit = [&](const Chain& h, const Json& meta) {
            std::vector<Simplex> supp = h.support();
            std::vector<Simplex> rest;
            std::set_difference(pool.begin(), pool.end(), supp.begin(),
                                supp.end(), std::back_inserter(rest));
            t.count();
            if (rest.empty()) return;
            int kappa = vertex_connectivity(build_facet_graph(rest));
            t.minimize("min complement connectivity slack", kappa - (d - 1));
            if (kappa < d - 1) {
              Json v = meta;
              v["check"] = "hypercut-complement";
              v["n"] = n;
              v["d"] = d;
              v["p"] = p;
              v["kappa"] = kappa;
              v["required"] = d - 1;
              v["hypercut"] = chain_to_json(h, n);
              t.violation(std::move(v));
            }
          };
          for (const Simplex& tau : all_faces_of_dim(n, d - 1))
            audit(star_hypercut(tau, n, p),
                  payload({{"instance", "star-hypercut"},
                           {"core", simplex_json(tau)}}));
          if (n >= d + 3) {
            for (int s = 0; s < seeds; ++s) {
              std::uint64_t seed = seed_of(
                  "hypercut-complement",
                  ((static_cast<std::uint64_t>(d) * 64 + n) * 64 + p) * 4096 +
                      static_cast<std::uint64_t>(s));
              Chain h =
                  dual(random_simple_cycle(n, n - d - 2, p, seed), n);
              if (!is_hypercut(h, n))
                t.violation(payload({{"check", "hypercut-complement"},
                                     {"instance", "dual-cycle"},
                                     {"n", n},
                                     {"d", d},
                                     {"p", p},
                                     {"seed", seed},
                                     {"problem", "dual is not a hypercut"}}));
              audit(h, payload({{"instance", "dual-cycle"}, {"seed", seed}}));
            }
          }
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// hypercut-connectivity: facet graphs of d-hypercuts over [n] are
// (n-d-1)-connected, with equality on star hypercuts.

inline void check_hypercut_connectivity(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 10);
  for (int d : int_grid(spec.d, 1, 3)) {
    for (int n : int_grid(spec.n, d + 2, 7)) {
      for (std::uint64_t p : prime_grid(spec, {2, 3, 5})) {
        jobs.push_back([=](Tally& t) {
          for (const Simplex& tau : all_faces_of_dim(n, d - 1)) {
            Chain h = star_hypercut(tau, n, p);
            FacetGraph fg = build_facet_graph(h.support());
            int kappa = vertex_connectivity(fg);
            t.count();
            if (kappa != n - d - 1 || !graphalg::is_complete(fg.graph))
              t.violation(payload({{"check", "hypercut-connectivity"},
                                   {"instance", "star-hypercut"},
                                   {"core", simplex_json(tau)},
                                   {"n", n},
                                   {"d", d},
                                   {"p", p},
                                   {"kappa", kappa},
                                   {"expected", n - d - 1}}));
          }
          if (n >= d + 3) {
            for (int s = 0; s < seeds; ++s) {
              std::uint64_t seed = seed_of(
                  "hypercut-connectivity",
                  ((static_cast<std::uint64_t>(d) * 64 + n) * 64 + p) * 4096 +
                      static_cast<std::uint64_t>(s));
              Chain h =
                  dual(random_simple_cycle(n, n - d - 2, p, seed), n);
              int kappa = vertex_connectivity(build_facet_graph(h.support()));
              t.count();
              t.minimize("min connectivity slack", kappa - (n - d - 1));
              if (!is_hypercut(h, n) || kappa < n - d - 1)
                t.violation(payload({{"check", "hypercut-connectivity"},
                                     {"instance", "dual-cycle"},
                                     {"n", n},
                                     {"d", d},
                                     {"p", p},
                                     {"seed", seed},
                                     {"kappa", kappa},
                                     {"required", n - d - 1},
                                     {"hypercut", chain_to_json(h, n)}}));
            }
          }
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// two-cocycle: nonzero 2-cocycles over [n] have 2-connected facet graphs.
// The analogous statement fails in dimension 3; a fixed sum of two star
// hypercuts with disjoint cores splits into two components.

inline void check_two_cocycle(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 50);
  for (int n : int_grid(spec.n, 5, 7)) {
    for (std::uint64_t p : prime_grid(spec, {2, 3, 5})) {
      jobs.push_back([=](Tally& t) {
        std::vector<Simplex> edges = all_faces_of_dim(n, 1);
        std::mt19937_64 rng(
            seed_of("two-cocycle", static_cast<std::uint64_t>(n) * 64 + p));
        for (int s = 0; s < seeds; ++s) {
          Chain z(2, p);
          for (int attempt = 0; attempt < 64 && z.zero(); ++attempt) {
            Chain c(1, p);
            for (const Simplex& e : edges)
              if (rng() % 2)
                c.set_coeff(e, static_cast<Scalar>(1 + rng() % (p - 1)));
            z = coboundary(c, n);
          }
          t.count();
          if (z.zero()) continue;
          if (!is_cocycle(z, n)) {
            t.violation(payload({{"check", "two-cocycle"},
                                 {"instance", "random-cocycle"},
                                 {"n", n},
                                 {"p", p},
                                 {"sample", s},
                                 {"problem", "coboundary is not a cocycle"}}));
            continue;
          }
          int kappa = vertex_connectivity(build_facet_graph(z.support()));
          t.minimize("min cocycle connectivity", kappa);
          t.maximize("max cocycle support",
                     static_cast<long long>(z.support_size()));
          if (kappa < 2)
            t.violation(payload({{"check", "two-cocycle"},
                                 {"instance", "random-cocycle"},
                                 {"n", n},
                                 {"p", p},
                                 {"sample", s},
                                 {"kappa", kappa},
                                 {"required", 2},
                                 {"cocycle", chain_to_json(z, n)}}));
        }
        if (n == 7) {
          Chain h = star_hypercut(Simplex({1, 2, 3}), 7, p);
          h.add(star_hypercut(Simplex({4, 5, 6}), 7, p));
          t.count();
          int comps = graphalg::components(build_facet_graph(h.support()).graph);
          if (!is_cocycle(h, 7) || comps != 2)
            t.violation(payload({{"check", "two-cocycle"},
                                 {"instance", "disjoint-star-sum"},
                                 {"n", 7},
                                 {"p", p},
                                 {"components", comps},
                                 {"expected", 2}}));
        }
      });
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// duality-identity: dualizing the boundary equals the coboundary of the
// dual, term for term.

inline void check_duality_identity(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 200);
  for (int n : int_grid(spec.n, 3, 8)) {
    for (std::uint64_t p : prime_grid(spec, {3, 5})) {
      jobs.push_back([=](Tally& t) {
        std::mt19937_64 rng(seed_of("duality-identity",
                                    static_cast<std::uint64_t>(n) * 64 + p));
        for (int s = 0; s < seeds; ++s) {
          int dim = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                     n - 2));
          Chain z = random_chain(rng, n, dim, p);
          Chain lhs = dual(boundary(z), n);
          Chain rhs = coboundary(dual(z, n), n);
          t.count();
          if (!(lhs == rhs))
            t.violation(payload({{"check", "duality-identity"},
                                 {"n", n},
                                 {"p", p},
                                 {"sample", s},
                                 {"chain", chain_to_json(z, n)}}));
        }
      });
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// double-dual: dualizing twice reproduces the chain up to the global sign
// determined by n.

inline void check_double_dual(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 100);
  for (int n : int_grid(spec.n, 3, 8)) {
    for (std::uint64_t p : prime_grid(spec, {3, 5})) {
      jobs.push_back([=](Tally& t) {
        Fp fp(p);
        Scalar sign = double_dual_sign(n) < 0 ? fp.neg(1) : 1;
        std::mt19937_64 rng(
            seed_of("double-dual", static_cast<std::uint64_t>(n) * 64 + p));
        for (int s = 0; s < seeds; ++s) {
          int dim = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
          Chain z = random_chain(rng, n, dim, p);
          Chain twice = dual(dual(z, n), n);
          Chain expected = z;
          expected.scale(sign);
          t.count();
          if (!(twice == expected))
            t.violation(payload({{"check", "double-dual"},
                                 {"n", n},
                                 {"p", p},
                                 {"sample", s},
                                 {"chain", chain_to_json(z, n)}}));
        }
      });
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// duality-graph-isomorphism: complementation maps the facet graph of a
// circuit isomorphically onto the facet graph of its dual hypercut.

inline void check_duality_graph_isomorphism(const CheckSpec& spec,
                                            Tally& out) {
  std::vector<Job> jobs;
  int families = sample_budget(spec, 12);
  for (int n : int_grid(spec.n, 4, 7)) {
    for (int d : int_grid(spec.d, 1, n - 3)) {
      if (d < 1 || d > n - 3) continue;
      for (std::uint64_t p : prime_grid(spec, {2, 3})) {
        jobs.push_back([=](Tally& t) {
          auto audit = [&](const Chain& z, const Json& meta) {
            Chain h = dual(z, n);
            t.count();
            t.maximize("max circuit support",
                       static_cast<long long>(z.support_size()));
            Json v = meta;
            v["check"] = "duality-graph-isomorphism";
            v["n"] = n;
            v["d"] = d;
            v["p"] = p;
            v["circuit"] = chain_to_json(z, n);
            if (!is_hypercut(h, n)) {
              v["problem"] = "dual of circuit is not a hypercut";
              t.violation(std::move(v));
              return;
            }
            FacetGraph a = build_facet_graph(z.support());
            FacetGraph b = build_facet_graph(h.support());
            if (a.graph.order() != b.graph.order() ||
                a.graph.size() != b.graph.size()) {
              v["problem"] = "graph sizes differ";
              t.violation(std::move(v));
              return;
            }
            std::vector<int> to_b(a.graph.order(), -1);
            for (std::size_t i = 0; i < a.vertices.size(); ++i) {
              int j = b.index_of(complement(a.vertices[i], n));
              if (j < 0) {
                v["problem"] = "complement misses the dual support";
                t.violation(std::move(v));
                return;
              }
              to_b[i] = j;
            }
            for (const auto& labeled : a.edge_labels) {
              const std::pair<int, int>& edge = labeled.first;
              int mi = to_b[static_cast<std::size_t>(edge.first)];
              int mj = to_b[static_cast<std::size_t>(edge.second)];
              auto key = std::minmax(mi, mj);
              if (!b.edge_labels.count({key.first, key.second})) {
                v["problem"] = "adjacency is not preserved";
                v["edge"] = Json::array({simplex_json(a.vertices[
                                             static_cast<std::size_t>(
                                                 edge.first)]),
                                         simplex_json(a.vertices[
                                             static_cast<std::size_t>(
                                                 edge.second)])});
                t.violation(std::move(v));
                return;
              }
            }
          };
          std::vector<int> top(static_cast<std::size_t>(d) + 2);
          for (int i = 0; i < d + 2; ++i)
            top[static_cast<std::size_t>(i)] = i + 1;
          audit(simplex_boundary_cycle(Simplex(top), p),
                payload({{"instance", "simplex-boundary"}}));
          std::vector<Simplex> pool = all_faces_of_dim(n, d);
          std::mt19937_64 rng(seed_of(
              "duality-graph-isomorphism",
              (static_cast<std::uint64_t>(n) * 64 + d) * 64 + p));
          for (int s = 0; s < families; ++s) {
            std::size_t lo = static_cast<std::size_t>(d) + 2;
            std::size_t hi = std::min<std::size_t>(pool.size(), 10);
            if (hi < lo) break;
            std::size_t m = lo + rng() % (hi - lo + 1);
            std::vector<Chain> circuits =
                enumerate_circuits(sample_faces(rng, pool, m), p);
            std::size_t take = std::min<std::size_t>(circuits.size(), 4);
            for (std::size_t i = 0; i < take; ++i)
              audit(circuits[i], payload({{"instance", "random-circuit"},
                                          {"sample", s}}));
          }
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// small-set-acyclicity: closures of at most d simplices of dimension at
// most d carry no reduced homology in dimension d-1, collapse to their
// (d-2)-skeleton, and every (d-1)-cycle in them bounds explicitly.

inline void check_small_set_acyclicity(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 100);
  for (int d : int_grid(spec.d, 2, 4)) {
    for (std::uint64_t p : prime_grid(spec, {2, 3})) {
      jobs.push_back([=](Tally& t) {
        std::mt19937_64 rng(
            seed_of("small-set-acyclicity", static_cast<std::uint64_t>(d) * 64 + p));
        for (int s = 0; s < seeds; ++s) {
          int n = spec.n.value_or(
              d + 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                   8 - (d + 2) + 1)));
          std::size_t size = 1 + rng() % static_cast<std::uint64_t>(d);
          std::vector<Simplex> set_faces;
          for (std::size_t i = 0; i < size; ++i) {
            int fdim = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
            std::vector<Simplex> pool = all_faces_of_dim(n, fdim);
            if (pool.empty()) continue;
            set_faces.push_back(pool[rng() % pool.size()]);
          }
          if (set_faces.empty()) continue;
          Json meta = payload({{"check", "small-set-acyclicity"},
                               {"n", n},
                               {"d", d},
                               {"p", p},
                               {"sample", s},
                               {"set", simplex_list_json(set_faces)}});
          Complex k = Complex::closure(set_faces, n);
          t.count();
          t.maximize("max set size", static_cast<long long>(size));
          int b = betti_reduced(k, d - 1, p);
          if (b != 0) {
            Json v = meta;
            v["betti"] = b;
            v["expected"] = 0;
            t.violation(std::move(v));
          }
          CollapseCertificate cert = collapse_small_set(d, set_faces);
          t.maximize("max collapse steps",
                     static_cast<long long>(cert.steps.size()));
          if (cert.residual.face_count(d) != 0 ||
              cert.residual.face_count(d - 1) != 0) {
            Json v = meta;
            v["problem"] = "collapse leaves top-dimensional faces";
            t.violation(std::move(v));
          }
          const std::vector<Simplex>& dfaces = k.faces(d);
          if (!dfaces.empty()) {
            Chain w(d, p);
            for (const Simplex& f : dfaces)
              w.set_coeff(f, static_cast<Scalar>(rng() % p));
            Chain z = boundary(w);
            Chain u = express_cycle_as_boundary(z, set_faces, d);
            if (!(boundary(u) == z)) {
              Json v = meta;
              v["problem"] = "expressed chain does not bound the cycle";
              v["cycle"] = chain_to_json(z, n);
              t.violation(std::move(v));
            }
          }
        }
      });
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// components-localization: when deleting facets D splits the facet graph of
// a simple cycle into m components, the component boundaries have disjoint
// supports, any m-1 of them stay independent modulo the boundaries of D,
// and all m together become dependent.

inline void localization_audit(const Chain& z, int n,
                               const std::vector<int>& removed_idx, Tally& t,
                               const FacetGraph& fg, const Json& meta) {
  std::uint64_t p = z.p();
  Fp fp(p);
  std::vector<char> gone(fg.graph.order(), 0);
  std::vector<Simplex> removed;
  for (int i : removed_idx) {
    gone[static_cast<std::size_t>(i)] = 1;
    removed.push_back(fg.vertices[static_cast<std::size_t>(i)]);
  }
  std::vector<int> label = component_labels(fg.graph, gone);
  int m = 0;
  for (int l : label) m = std::max(m, l + 1);
  t.count();
  if (m <= 1) return;
  t.maximize("max components", m);

  std::vector<Chain> parts(static_cast<std::size_t>(m),
                           Chain(z.dim() - 1, p));
  {
    std::vector<Chain> zi(static_cast<std::size_t>(m), Chain(z.dim(), p));
    for (std::size_t i = 0; i < fg.vertices.size(); ++i)
      if (label[i] >= 0)
        zi[static_cast<std::size_t>(label[i])].set_coeff(
            fg.vertices[i], z.coeff(fg.vertices[i]));
    for (int i = 0; i < m; ++i)
      parts[static_cast<std::size_t>(i)] =
          boundary(zi[static_cast<std::size_t>(i)]);
  }

  Json base = meta;
  base["check"] = "components-localization";
  base["n"] = n;
  base["removed"] = simplex_list_json(removed);
  base["chain"] = chain_to_json(z, n);

  std::map<Simplex, int> owner;
  for (int i = 0; i < m; ++i)
    for (const Simplex& s : parts[static_cast<std::size_t>(i)].support()) {
      auto [it, fresh] = owner.emplace(s, i);
      if (!fresh && it->second != i) {
        Json v = base;
        v["problem"] = "component boundaries overlap";
        v["face"] = simplex_json(s);
        t.violation(std::move(v));
        return;
      }
    }

  std::map<Simplex, int> rows;
  std::vector<Chain> dcols;
  for (const Simplex& s : removed) {
    Chain c(z.dim(), p);
    c.set_coeff(s, 1);
    dcols.push_back(boundary(c));
  }
  for (const Chain& c : dcols)
    for (const auto& [s, v] : c.terms()) rows.emplace(s, 0);
  for (const Chain& c : parts)
    for (const auto& [s, v] : c.terms()) rows.emplace(s, 0);
  int next = 0;
  for (auto& [s, idx] : rows) idx = next++;

  GaussianEliminator elim(rows.size(), fp);
  for (const Chain& c : dcols) elim.push(chain_to_col(c, rows));
  int dpushes = static_cast<int>(dcols.size());
  for (int i = 0; i < m; ++i) {
    auto dep = elim.push(chain_to_col(parts[static_cast<std::size_t>(i)], rows));
    if (i + 1 < m) {
      if (dep) {
        Json v = base;
        v["problem"] = "a proper subset of component boundaries is dependent";
        v["subset_size"] = i + 1;
        t.violation(std::move(v));
        return;
      }
      continue;
    }
    if (!dep) {
      Json v = base;
      v["problem"] = "component boundaries stay independent";
      t.violation(std::move(v));
      return;
    }
    std::set<int> involved;
    for (const auto& [col, coeff] : *dep)
      if (col >= dpushes && coeff != 0) involved.insert(col - dpushes);
    if (static_cast<int>(involved.size()) != m) {
      Json v = base;
      v["problem"] = "the dependency misses a component";
      v["involved"] = involved.size();
      v["components"] = m;
      t.violation(std::move(v));
    }
  }
}

inline void check_components_localization(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 10);
  for (std::uint64_t p : prime_grid(spec, {2, 3})) {
    for (int d : int_grid(spec.d, 1, 3)) {
      jobs.push_back([=](Tally& t) {
        Chain z = cross_polytope_cycle(d, p);
        FacetGraph fg = build_facet_graph(z.support());
        for_each_index_subset(
            static_cast<int>(fg.vertices.size()), 4,
            [&](const std::vector<int>& pick) {
              localization_audit(z, 2 * (d + 1), pick, t, fg,
                                 payload({{"instance", "cross-polytope"},
                                          {"d", d},
                                          {"p", p}}));
            });
      });
      for (int n : int_grid(spec.n, d + 2, 7)) {
        jobs.push_back([=](Tally& t) {
          std::mt19937_64 rng(seed_of(
              "components-localization",
              (static_cast<std::uint64_t>(d) * 64 + n) * 64 + p));
          for (int s = 0; s < seeds; ++s) {
            Chain z = random_simple_cycle(n, d, p, rng());
            FacetGraph fg = build_facet_graph(z.support());
            int order = static_cast<int>(fg.vertices.size());
            for (int rep = 0; rep < 30; ++rep) {
              std::size_t size = 1 + rng() % 4;
              std::set<int> pick;
              while (pick.size() < size)
                pick.insert(static_cast<int>(rng() %
                                             static_cast<std::uint64_t>(order)));
              localization_audit(
                  z, n, {pick.begin(), pick.end()}, t, fg,
                  payload({{"instance", "random-simple-cycle"},
                           {"d", d},
                           {"p", p},
                           {"sample", s}}));
            }
          }
        });
      }
    }
    jobs.push_back([=, exhaustive = spec.exhaustive](Tally& t) {
      Chain z = torus_cycle(4, p);
      FacetGraph fg = build_facet_graph(z.support());
      for_each_index_subset(
          static_cast<int>(fg.vertices.size()), exhaustive ? 4 : 3,
          [&](const std::vector<int>& pick) {
            localization_audit(z, 16, pick, t, fg,
                               payload({{"instance", "torus"}, {"p", p}}));
          });
    });
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// component-bound: deleting a facet set S from the facet graph of a simple
// d-cycle leaves at most 1 + reduced Betti number of K(S) in dimension d-1
// components.

inline void check_component_bound(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 10);
  for (std::uint64_t p : prime_grid(spec, {2, 3})) {
    auto sweep = [=](const Chain& z, int n, int depth, const Json& meta,
                     Tally& t) {
      int d = z.dim();
      FacetGraph fg = build_facet_graph(z.support());
      if (subset_count(static_cast<int>(fg.vertices.size()), depth) >
          kPrimitiveBudget)
        throw InstanceTooLarge("component bound sweep exceeds the budget");
      for_each_index_subset(
          static_cast<int>(fg.vertices.size()), depth,
          [&](const std::vector<int>& pick) {
            std::vector<Simplex> removed;
            for (int i : pick)
              removed.push_back(fg.vertices[static_cast<std::size_t>(i)]);
            int comps = components_after_removal(fg, removed);
            int betti = betti_reduced(Complex::closure(removed, n), d - 1, p);
            t.count();
            t.maximize("max components", comps);
            t.maximize("max betti bound", betti);
            if (comps > 1 + betti) {
              Json v = meta;
              v["check"] = "component-bound";
              v["n"] = n;
              v["d"] = d;
              v["p"] = p;
              v["removed"] = simplex_list_json(removed);
              v["components"] = comps;
              v["bound"] = 1 + betti;
              v["chain"] = chain_to_json(z, n);
              t.violation(std::move(v));
            }
          });
    };
    for (int d : int_grid(spec.d, 1, 3))
      jobs.push_back([=](Tally& t) {
        sweep(cross_polytope_cycle(d, p), 2 * (d + 1), 4,
              payload({{"instance", "cross-polytope"}}), t);
      });
    jobs.push_back([=](Tally& t) {
      sweep(torus_cycle(4, p), 16, 4, payload({{"instance", "torus"}}), t);
    });
    for (int d : int_grid(spec.d, 1, 3)) {
      for (int n : int_grid(spec.n, d + 2, 7)) {
        jobs.push_back([=](Tally& t) {
          std::mt19937_64 rng(
              seed_of("component-bound",
                      (static_cast<std::uint64_t>(d) * 64 + n) * 64 + p));
          for (int s = 0; s < seeds; ++s) {
            Chain z = random_simple_cycle(n, d, p, rng());
            sweep(z, n, 2,
                  payload({{"instance", "random-simple-cycle"},
                           {"sample", s}}),
                  t);
          }
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// betti-crude-bound: the reduced Betti number of K(D) in dimension d-1 is
// at most d times the set size, full r-skeleta have cycle space dimension
// binomial(n-1, r+1), and colex-compressed families maximize the cycle
// space dimension at every size.

inline void check_betti_crude_bound(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 100);
  for (std::uint64_t p : prime_grid(spec, {2, 3})) {
    for (int d : int_grid(spec.d, 1, 4)) {
      jobs.push_back([=](Tally& t) {
        std::mt19937_64 rng(
            seed_of("betti-crude-bound", static_cast<std::uint64_t>(d) * 64 + p));
        for (int s = 0; s < seeds; ++s) {
          int n = spec.n.value_or(
              d + 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                   8 - (d + 2) + 1)));
          std::vector<Simplex> pool = all_faces_of_dim(n, d);
          if (pool.empty()) continue;
          std::size_t size = 1 + rng() % 8;
          std::vector<Simplex> faces = sample_faces(rng, pool, size);
          int betti = betti_reduced(Complex::closure(faces, n), d - 1, p);
          long long bound = static_cast<long long>(d) *
                            static_cast<long long>(faces.size());
          t.count();
          t.maximize("max betti", betti);
          if (betti > bound)
            t.violation(payload({{"check", "betti-crude-bound"},
                                 {"instance", "random-set"},
                                 {"n", n},
                                 {"d", d},
                                 {"p", p},
                                 {"sample", s},
                                 {"betti", betti},
                                 {"bound", bound},
                                 {"set", simplex_list_json(faces)}}));
        }
      });
    }
    for (int n : int_grid(spec.n, 3, 7)) {
      jobs.push_back([=](Tally& t) {
        for (int r = 0; r <= n - 2; ++r) {
          int dim = cycle_space_dim(all_faces_of_dim(n, r), p);
          long long expected = binomial(n - 1, r + 1);
          t.count();
          if (dim != expected)
            t.violation(payload({{"check", "betti-crude-bound"},
                                 {"instance", "full-skeleton"},
                                 {"n", n},
                                 {"r", r},
                                 {"p", p},
                                 {"cycle_dim", dim},
                                 {"expected", expected}}));
        }
      });
    }
    std::vector<std::pair<int, int>> oracle_grid = {
        {4, 1}, {5, 1}, {6, 1}, {4, 2}, {5, 2}, {5, 3}, {6, 3}, {6, 4}};
    for (auto [n, r] : oracle_grid) {
      if (spec.n && *spec.n != n) continue;
      jobs.push_back([=](Tally& t) {
        std::vector<Simplex> pool = all_faces_of_dim(n, r);
        std::sort(pool.begin(), pool.end(),
                  [](const Simplex& a, const Simplex& b) {
                    return std::lexicographical_compare(
                        a.vertices().rbegin(), a.vertices().rend(),
                        b.vertices().rbegin(), b.vertices().rend());
                  });
        int m = static_cast<int>(pool.size());
        if (m > 15)
          throw InstanceTooLarge(
              "compressed-family oracle is capped at 15 faces");
        std::vector<int> best(static_cast<std::size_t>(m) + 1, 0);
        for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
          std::vector<Simplex> subset;
          for (int i = 0; i < m; ++i)
            if (mask & (1ul << i))
              subset.push_back(pool[static_cast<std::size_t>(i)]);
          std::size_t sz = subset.size();
          best[sz] = std::max(best[sz], cycle_space_dim(subset, p));
        }
        for (int size = 0; size <= m; ++size) {
          std::vector<Simplex> prefix(pool.begin(), pool.begin() + size);
          int compressed =
              prefix.empty() ? 0 : cycle_space_dim(prefix, p);
          t.count();
          if (compressed != best[static_cast<std::size_t>(size)])
            t.violation(payload({{"check", "betti-crude-bound"},
                                 {"instance", "compressed-family"},
                                 {"n", n},
                                 {"r", r},
                                 {"p", p},
                                 {"size", size},
                                 {"compressed", compressed},
                                 {"optimum",
                                  best[static_cast<std::size_t>(size)]}}));
        }
      });
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// toughness: deleting s facets from the facet graph of a simple cycle
// leaves at most max(s, 1) components; removing one side of the
// cross-polytope graph's bipartition attains equality.

inline void check_toughness(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  int seeds = sample_budget(spec, 10);
  std::uint64_t p = spec.p.value_or(2);
  auto sweep = [=](const Chain& z, int n, int depth, const Json& meta,
                   Tally& t) {
    FacetGraph fg = build_facet_graph(z.support());
    if (subset_count(static_cast<int>(fg.vertices.size()), depth) >
        kPrimitiveBudget)
      throw InstanceTooLarge("toughness sweep exceeds the budget");
    for_each_index_subset(
        static_cast<int>(fg.vertices.size()), depth,
        [&](const std::vector<int>& pick) {
          std::vector<Simplex> removed;
          for (int i : pick)
            removed.push_back(fg.vertices[static_cast<std::size_t>(i)]);
          int comps = components_after_removal(fg, removed);
          t.count();
          t.maximize("max components", comps);
          if (comps > std::max<int>(1, static_cast<int>(removed.size()))) {
            Json v = meta;
            v["check"] = "toughness";
            v["n"] = n;
            v["removed"] = simplex_list_json(removed);
            v["components"] = comps;
            v["allowed"] = std::max<int>(1, static_cast<int>(removed.size()));
            v["chain"] = chain_to_json(z, n);
            t.violation(std::move(v));
          }
        });
  };
  for (int d : int_grid(spec.d, 1, 3)) {
    jobs.push_back([=](Tally& t) {
      Chain z = cross_polytope_cycle(d, p);
      sweep(z, 2 * (d + 1), 4, payload({{"instance", "cross-polytope"}}), t);
      FacetGraph fg = build_facet_graph(z.support());
      if (!graphalg::is_bipartite(fg.graph)) {
        t.violation(payload({{"check", "toughness"},
                             {"instance", "cross-polytope-bipartition"},
                             {"d", d},
                             {"problem", "facet graph is not bipartite"}}));
        return;
      }
      std::vector<int> color = graphalg::bipartition(fg.graph);
      std::vector<Simplex> side;
      for (std::size_t i = 0; i < fg.vertices.size(); ++i)
        if (color[i] == 0) side.push_back(fg.vertices[i]);
      int comps = components_after_removal(fg, side);
      long long expected = 1ll << d;
      t.count();
      if (static_cast<long long>(side.size()) != expected ||
          comps != expected)
        t.violation(payload({{"check", "toughness"},
                             {"instance", "cross-polytope-bipartition"},
                             {"d", d},
                             {"removed", side.size()},
                             {"components", comps},
                             {"expected", expected}}));
    });
    for (int n : int_grid(spec.n, d + 2, 7)) {
      jobs.push_back([=](Tally& t) {
        std::mt19937_64 rng(
            seed_of("toughness", static_cast<std::uint64_t>(d) * 64 + n));
        for (int s = 0; s < seeds; ++s) {
          Chain z = random_simple_cycle(n, d, p, rng());
          sweep(z, n, 2,
                payload({{"instance", "random-simple-cycle"},
                         {"d", d},
                         {"sample", s}}),
                t);
        }
      });
    }
  }
  jobs.push_back([=](Tally& t) {
    sweep(torus_cycle(4, p), 16, 4, payload({{"instance", "torus"}}), t);
  });
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// hypersimplex-connectivity: the facet graph of the full d-skeleton on n
// vertices has connectivity exactly (d+1)(n-d-1).

inline void check_hypersimplex_connectivity(const CheckSpec& spec,
                                            Tally& out) {
  std::vector<Job> jobs;
  for (int n : int_grid(spec.n, 2, 7)) {
    for (int d : int_grid(spec.d, 0, n - 2)) {
      if (d < 0 || d > n - 2) continue;
      jobs.push_back([=](Tally& t) {
        FacetGraph fg = hypersimplex_graph(n, d + 1);
        int kappa = vertex_connectivity(fg);
        int expected = (d + 1) * (n - d - 1);
        t.count();
        t.maximize("max connectivity", kappa);
        if (kappa != expected)
          t.violation(payload({{"check", "hypersimplex-connectivity"},
                               {"n", n},
                               {"d", d},
                               {"kappa", kappa},
                               {"expected", expected}}));
        std::size_t mindeg = fg.graph.order();
        for (const auto& row : fg.graph.adj)
          mindeg = std::min(mindeg, row.size());
        if (fg.graph.order() > 1 && static_cast<int>(mindeg) != expected)
          t.violation(payload({{"check", "hypersimplex-connectivity"},
                               {"instance", "degree"},
                               {"n", n},
                               {"d", d},
                               {"min_degree", mindeg},
                               {"expected", expected}}));
      });
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// mixed-connectivity: boundaries of small polytopes stay r-acyclic under
// every admissible open-face removal, and removing open vertex stars
// matches the Alexander-complement computation set for set.

inline void check_mixed_connectivity(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  for (int d : int_grid(spec.d, 1, 3)) {
    for (int r = 0; r <= d - 1; ++r) {
      for (std::uint64_t p : prime_grid(spec, {2, 3})) {
        jobs.push_back([=](Tally& t) {
          MixedConnectivityReport rep =
              mixed_connectivity_check(Complex::complete(d + 2, d), d, r, p);
          t.count(rep.sets_checked);
          t.maximize("max removal sets", rep.sets_checked);
          for (const std::string& w : rep.violations)
            t.violation(payload({{"check", "mixed-connectivity"},
                                 {"instance", "simplex-boundary"},
                                 {"d", d},
                                 {"r", r},
                                 {"p", p},
                                 {"witness", w}}));
          MixedConnectivityReport alex = alexander_equivalence_check(d, r, p);
          t.count(alex.sets_checked);
          for (const std::string& w : alex.violations)
            t.violation(payload({{"check", "mixed-connectivity"},
                                 {"instance", "alexander"},
                                 {"d", d},
                                 {"r", r},
                                 {"p", p},
                                 {"witness", w}}));
          if (alex.sets_checked != rep.sets_checked)
            t.violation(payload({{"check", "mixed-connectivity"},
                                 {"instance", "alexander"},
                                 {"d", d},
                                 {"r", r},
                                 {"p", p},
                                 {"problem",
                                  "removal enumerations have different sizes"},
                                 {"direct", rep.sets_checked},
                                 {"alexander", alex.sets_checked}}));
        });
      }
    }
  }
  if (!spec.d || *spec.d == 2) {
    for (int r = 0; r <= 1; ++r) {
      for (std::uint64_t p : prime_grid(spec, {2, 3})) {
        jobs.push_back([=](Tally& t) {
          Complex octa =
              Complex::closure(cross_polytope_cycle(2, p).support(), 6);
          MixedConnectivityReport rep = mixed_connectivity_check(octa, 2, r, p);
          t.count(rep.sets_checked);
          for (const std::string& w : rep.violations)
            t.violation(payload({{"check", "mixed-connectivity"},
                                 {"instance", "octahedron"},
                                 {"r", r},
                                 {"p", p},
                                 {"witness", w}}));
        });
      }
    }
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// Shared zoo of cell posets for the cell checks.

inline std::vector<std::pair<std::string, CellPoset>> cell_zoo(
    std::uint64_t p) {
  std::vector<std::pair<std::string, CellPoset>> zoo;
  zoo.emplace_back("triangle-complex",
                   simplicial_import(Complex::complete(4, 2), p));
  zoo.emplace_back("full-3-skeleton",
                   simplicial_import(Complex::complete(5, 3), p));
  zoo.emplace_back(
      "octahedron",
      simplicial_import(
          Complex::closure(cross_polytope_cycle(2, p).support(), 6), p));
  zoo.emplace_back(
      "torus",
      simplicial_import(Complex::closure(torus_cycle(4, p).support(), 16),
                        p));
  for (int k = 3; k <= 8; ++k)
    zoo.emplace_back("polygon-" + std::to_string(k), polygon_cells(k, p));
  zoo.emplace_back("cube", cube_cells(p));
  zoo.emplace_back("prism", prism_cells(p));
  zoo.emplace_back("pentagon", pentagon_cells(p));
  return zoo;
}

// ---------------------------------------------------------------------------
// cell-axioms: every poset in the zoo satisfies the three cell axioms.

inline void check_cell_axioms(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  for (std::uint64_t p : prime_grid(spec, {2, 3, 5})) {
    jobs.push_back([=](Tally& t) {
      for (const auto& [name, poset] : cell_zoo(p)) {
        AxiomReport rep = validate_axioms(poset);
        t.count();
        t.maximize("max poset size", static_cast<long long>(poset.size()));
        auto flag = [&](const char* axiom, const AxiomCheck& c) {
          if (!c.pass)
            t.violation(payload({{"check", "cell-axioms"},
                                 {"instance", name},
                                 {"p", p},
                                 {"axiom", axiom},
                                 {"witness", c.witness}}));
        };
        flag("lattice", rep.a1);
        flag("boundary", rep.a2);
        flag("unique-cycle", rep.a3);
      }
    });
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// cell-cycle-connectivity: boundaries of cells are compatible simple
// cycles whose facet graphs are (dim)-connected with at least dim+1 cells.

inline void check_cell_cycle_connectivity(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  for (std::uint64_t p : prime_grid(spec, {2, 3, 5})) {
    jobs.push_back([=](Tally& t) {
      for (const auto& [name, poset] : cell_zoo(p)) {
        for (int i = 0; i < poset.size(); ++i) {
          if (poset.cell(i).dim < 2) continue;
          CellChain z;
          for (const auto& [j, c] : poset.boundary_terms(i))
            z[poset.cell(j).id] = c;
          CellCycleReport rep = cell_cycle_check(poset, z);
          t.count();
          Json meta = payload({{"check", "cell-cycle-connectivity"},
                               {"instance", name},
                               {"p", p},
                               {"cell", poset.cell(i).id}});
          if (!rep.is_cycle || !rep.is_simple || !rep.compatible ||
              !rep.min_size_ok) {
            Json v = meta;
            v["problem"] = "cell boundary is not a compatible simple cycle";
            v["is_cycle"] = rep.is_cycle;
            v["is_simple"] = rep.is_simple;
            v["compatible"] = rep.compatible;
            v["min_size_ok"] = rep.min_size_ok;
            t.violation(std::move(v));
            continue;
          }
          std::vector<std::string> ids;
          for (const auto& [id, c] : z) ids.push_back(id);
          CellFacetGraph g = cell_facet_graph(poset, ids);
          int kappa = graphalg::vertex_connectivity(g.graph);
          int need = poset.cell(i).dim;
          t.minimize("min connectivity slack", kappa - need);
          if (kappa < need) {
            Json v = meta;
            v["kappa"] = kappa;
            v["required"] = need;
            t.violation(std::move(v));
          }
        }
      }
    });
  }
  run_jobs(jobs, out);
}

// ---------------------------------------------------------------------------
// pentagon: the chord triangulation of the pentagon passes the axioms and
// carries a simple but incompatible 2-cycle whose facet graph has
// connectivity exactly 2.

inline void check_pentagon(const CheckSpec& spec, Tally& out) {
  std::vector<Job> jobs;
  for (std::uint64_t p : prime_grid(spec, {2, 3, 5})) {
    jobs.push_back([=](Tally& t) {
      CellPoset poset = pentagon_cells(p);
      t.count();
      AxiomReport rep = validate_axioms(poset);
      if (!rep.all_pass())
        t.violation(payload({{"check", "pentagon"},
                             {"p", p},
                             {"problem", "axioms fail"},
                             {"a1", rep.a1.witness},
                             {"a2", rep.a2.witness},
                             {"a3", rep.a3.witness}}));
      Scalar minus = static_cast<Scalar>(p - 1);
      CellChain z{{"1.2.3.4.5", 1},
                  {"1.2.3", minus},
                  {"1.3.4", minus},
                  {"1.4.5", minus}};
      CellCycleReport cyc = cell_cycle_check(poset, z);
      if (!cyc.is_cycle || !cyc.is_simple || cyc.compatible ||
          !cyc.min_size_ok)
        t.violation(payload({{"check", "pentagon"},
                             {"p", p},
                             {"problem",
                              "chord cycle is not a simple incompatible "
                              "cycle of size 4"},
                             {"is_cycle", cyc.is_cycle},
                             {"is_simple", cyc.is_simple},
                             {"compatible", cyc.compatible},
                             {"min_size_ok", cyc.min_size_ok}}));
      std::vector<std::string> ids;
      for (const auto& [id, c] : z) ids.push_back(id);
      CellFacetGraph g = cell_facet_graph(poset, ids);
      int kappa = graphalg::vertex_connectivity(g.graph);
      t.maximize("max chord cycle connectivity", kappa);
      if (kappa != 2)
        t.violation(payload({{"check", "pentagon"},
                             {"p", p},
                             {"kappa", kappa},
                             {"expected", 2}}));
    });
  }
  run_jobs(jobs, out);
}

using CheckFn = void (*)(const CheckSpec&, Tally&);

inline const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table = {
      {"cycle-connectivity", check_cycle_connectivity},
      {"cycle-mixed-removal", check_cycle_mixed_removal},
      {"biconnected-sets", check_biconnected_sets},
      {"tree-connectivity", check_tree_connectivity},
      {"r-connected-complex", check_r_connected_complex},
      {"hypercut-complement", check_hypercut_complement},
      {"hypercut-connectivity", check_hypercut_connectivity},
      {"two-cocycle", check_two_cocycle},
      {"duality-identity", check_duality_identity},
      {"double-dual", check_double_dual},
      {"duality-graph-isomorphism", check_duality_graph_isomorphism},
      {"small-set-acyclicity", check_small_set_acyclicity},
      {"components-localization", check_components_localization},
      {"component-bound", check_component_bound},
      {"betti-crude-bound", check_betti_crude_bound},
      {"toughness", check_toughness},
      {"hypersimplex-connectivity", check_hypersimplex_connectivity},
      {"mixed-connectivity", check_mixed_connectivity},
      {"cell-axioms", check_cell_axioms},
      {"cell-cycle-connectivity", check_cell_cycle_connectivity},
      {"pentagon", check_pentagon},
  };
  return table;
}

}  // namespace verifydetail

inline std::vector<std::string> registered_checks() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : verifydetail::check_table()) out.push_back(id);
  return out;
}

inline CheckReport run_check(const CheckSpec& spec) {
  const auto& table = verifydetail::check_table();
  auto it = table.find(spec.theorem_id);
  if (it == table.end())
    throw UnknownTheorem("no check is registered under \"" + spec.theorem_id +
                         "\"");
  auto start = std::chrono::steady_clock::now();
  verifydetail::Tally tally;
  it->second(spec, tally);
  auto stop = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.theorem_id = spec.theorem_id;
  rep.instances = tally.instances;
  rep.violations = std::move(tally.violations);
  rep.extremes = std::move(tally.extremes);
  rep.wall_seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(stop - start)
          .count();
  return rep;
}

inline std::string render_report(const CheckReport& rep, bool as_json) {
  if (as_json) {
    Json j = Json::object();
    j["theorem"] = rep.theorem_id;
    j["pass"] = rep.pass();
    j["instances"] = rep.instances;
    j["wall_seconds"] = rep.wall_seconds;
    Json extremes = Json::object();
    for (const auto& [k, v] : rep.extremes) extremes[k] = v;
    j["extremes"] = extremes;
    Json violations = Json::array();
    for (const Json& v : rep.violations) violations.push_back(v);
    j["violations"] = violations;
    return j.dump(2);
  }
  char secs[32];
  std::snprintf(secs, sizeof(secs), "%.2fs", rep.wall_seconds);
  std::string out = (rep.pass() ? "PASS " : "FAIL ") + rep.theorem_id + "  " +
                    std::to_string(rep.instances) + " instances  " + secs;
  for (const auto& [k, v] : rep.extremes)
    out += "\n  " + k + " = " + std::to_string(v);
  std::size_t shown = std::min<std::size_t>(rep.violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i)
    out += "\n  violation: " + rep.violations[i].dump();
  if (rep.violations.size() > shown)
    out += "\n  ... " + std::to_string(rep.violations.size() - shown) +
           " more violations";
  return out;
}

}  // namespace facetlab
