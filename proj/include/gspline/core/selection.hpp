#pragma once

#include <gspline/core/invariants.hpp>
#include <gspline/error.hpp>
#include <gspline/graph/trail.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gspline {

/// A long zero trail together with the quotient of each of its labels by
/// the trail gcd; factors[k] belongs to trail.edges[k]. The factors are
/// coprime as a set.
template <GcdDomain R>
struct FactorSet {
  Trail<R> trail;
  std::vector<R> factors;

  const R& factor_of(std::size_t edge) const {
    for (std::size_t k = 0; k < trail.edges.size(); ++k)
      if (trail.edges[k] == edge) return factors[k];
    throw precondition_error("edge is not on this trail");
  }
};

/// Factor sets of every zero trail of v_i with more than one edge, in
/// zero-trail order, plus the flow-up modulus of v_i.
template <GcdDomain R>
struct FactorSets {
  std::size_t vertex = 0;
  R modulus;
  std::vector<FactorSet<R>> sets;
};

/// Valid for the interior vertices 1 <= i <= n-2 (0-based). The last vertex
/// has only zero edges and is handled by top_spline.
template <GcdDomain R>
FactorSets<R> factor_sets(const LabeledGraph<R>& g, std::size_t i, std::size_t cap = default_trail_cap) {
  if (i == 0 || i + 1 >= g.vertex_count())
    throw precondition_error("factor sets are defined for interior vertices v_2..v_{n-1} only");
  FactorSets<R> d;
  d.vertex = i;
  d.modulus = flowup_modulus(g, i, cap);
  for (auto& t : zero_trails(g, i, cap)) {
    if (t.length() < 2) continue;
    FactorSet<R> s;
    s.factors.reserve(t.length());
    for (std::size_t k : t.edges) s.factors.push_back(exact_div(g.edge(k).label, t.gcd));
    s.trail = std::move(t);
    d.sets.push_back(std::move(s));
  }
  return d;
}

/// One edge chosen from every long zero trail of v_i. `edges` is the set
/// of distinct chosen edges, i.e. the edge set of the subgraph the
/// selection spans.
template <GcdDomain R>
struct Selection {
  std::size_t vertex = 0;
  std::vector<std::size_t> chosen;  // per factor set
  std::vector<R> factors;           // per factor set
  std::vector<std::size_t> edges;   // ascending, distinct
  R product;                        // canonical product of factors
  R modulus;

  /// The value placed on the nonzero vertices of the constructed spline.
  R value() const { return canonical_associate(product * modulus); }

  bool uses_edge(std::size_t e) const { return std::binary_search(edges.begin(), edges.end(), e); }
};

template <GcdDomain R>
Selection<R> make_selection(const FactorSets<R>& d, std::vector<std::size_t> chosen) {
  if (chosen.size() != d.sets.size()) throw precondition_error("a selection needs one edge per long zero trail");
  Selection<R> a;
  a.vertex = d.vertex;
  a.modulus = d.modulus;
  R product(1);
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    if (!d.sets[t].trail.contains_edge(chosen[t])) throw precondition_error("chosen edge does not lie on its trail");
    a.factors.push_back(d.sets[t].factor_of(chosen[t]));
    product = product * a.factors.back();
  }
  a.product = canonical_associate(product);
  a.edges = chosen;
  std::sort(a.edges.begin(), a.edges.end());
  a.edges.erase(std::unique(a.edges.begin(), a.edges.end()), a.edges.end());
  a.chosen = std::move(chosen);
  return a;
}

/// Selection from a minimal hitting edge set: every trail takes its
/// lowest-indexed edge in the set.
template <GcdDomain R>
Selection<R> canonical_selection(const FactorSets<R>& d, std::span<const std::size_t> edges) {
  std::vector<std::size_t> chosen;
  chosen.reserve(d.sets.size());
  for (const auto& s : d.sets) {
    std::optional<std::size_t> best;
    for (std::size_t e : s.trail.edges)
      if (std::find(edges.begin(), edges.end(), e) != edges.end() && (!best || e < *best)) best = e;
    if (!best) throw precondition_error("edge set misses a long zero trail");
    chosen.push_back(*best);
  }
  return make_selection(d, std::move(chosen));
}

/// A selection whose chosen edges are exactly `edges` (every edge used by
/// at least one trail), taking the lexicographically smallest assignment.
/// nullopt if no such assignment exists.
template <GcdDomain R>
std::optional<Selection<R>> selection_covering(const FactorSets<R>& d, std::span<const std::size_t> edges) {
  std::vector<std::size_t> target(edges.begin(), edges.end());
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  const std::size_t trails = d.sets.size();
  if (target.size() > trails) return std::nullopt;

  std::vector<std::vector<std::size_t>> options(trails);
  for (std::size_t t = 0; t < trails; ++t) {
    for (std::size_t e : d.sets[t].trail.edge_set())
      if (std::binary_search(target.begin(), target.end(), e)) options[t].push_back(e);
    if (options[t].empty()) return std::nullopt;
  }
  // last_trail[j]: last trail index that can still supply target[j].
  std::vector<std::size_t> last_trail(target.size(), 0);
  for (std::size_t j = 0; j < target.size(); ++j) {
    bool found = false;
    for (std::size_t t = 0; t < trails; ++t)
      if (std::binary_search(options[t].begin(), options[t].end(), target[j])) {
        last_trail[j] = t;
        found = true;
      }
    if (!found) return std::nullopt;
  }

  std::vector<std::size_t> chosen(trails);
  std::vector<std::size_t> uses(target.size(), 0);
  auto index_of = [&](std::size_t e) {
    return static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), e) - target.begin());
  };
  auto search = [&](auto&& self, std::size_t t, std::size_t uncovered) -> bool {
    if (t == trails) return uncovered == 0;
    if (uncovered > trails - t) return false;
    for (std::size_t j = 0; j < target.size(); ++j)
      if (uses[j] == 0 && last_trail[j] < t) return false;
    for (std::size_t e : options[t]) {
      const std::size_t j = index_of(e);
      chosen[t] = e;
      const bool fresh = uses[j]++ == 0;
      if (self(self, t + 1, uncovered - (fresh ? 1 : 0))) return true;
      --uses[j];
    }
    return false;
  };
  if (!search(search, 0, target.size())) return std::nullopt;
  return make_selection(d, std::move(chosen));
}

/// True iff dropping any chosen edge leaves some long zero trail unhit.
template <GcdDomain R>
bool is_minimal(const FactorSets<R>& d, const Selection<R>& a) {
  for (std::size_t drop : a.edges) {
    bool still_hits = true;
    for (const auto& s : d.sets) {
      bool hit = false;
      for (std::size_t e : s.trail.edges)
        if (e != drop && a.uses_edge(e)) hit = true;
      if (!hit) {
        still_hits = false;
        break;
      }
    }
    if (still_hits) return false;
  }
  return true;
}

namespace detail {

// Minimal hitting sets of the long zero trails by depth-first branching
// with criticality pruning: every chosen edge must remain the only chosen
// edge on at least one trail. Each minimal set is produced exactly once.
class MinimalHittingSets {
 public:
  explicit MinimalHittingSets(std::vector<std::vector<std::size_t>> sets, std::size_t universe)
      : sets_(std::move(sets)), in_set_(sets_.size(), std::vector<char>(universe, 0)) {
    for (std::size_t t = 0; t < sets_.size(); ++t)
      for (std::size_t e : sets_[t]) in_set_[t][e] = 1;
    hit_count_.assign(sets_.size(), 0);
    candidate_.assign(universe, 1);
  }

  std::vector<std::vector<std::size_t>> run() {
    recurse();
    return std::move(found_);
  }

 private:
  void recurse() {
    std::optional<std::size_t> pick;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t t = 0; t < sets_.size(); ++t) {
      if (hit_count_[t] != 0) continue;
      std::size_t options = 0;
      for (std::size_t e : sets_[t]) options += candidate_[e];
      if (options < fewest) {
        fewest = options;
        pick = t;
      }
    }
    if (!pick) {
      std::vector<std::size_t> s = chosen_;
      std::sort(s.begin(), s.end());
      found_.push_back(std::move(s));
      return;
    }
    std::vector<std::size_t> branch;
    for (std::size_t e : sets_[*pick])
      if (candidate_[e]) branch.push_back(e);
    std::sort(branch.begin(), branch.end());
    for (std::size_t e : branch) candidate_[e] = 0;
    for (std::size_t e : branch) {
      add(e);
      if (all_critical()) recurse();
      remove(e);
      candidate_[e] = 1;
    }
  }

  void add(std::size_t e) {
    chosen_.push_back(e);
    for (std::size_t t = 0; t < sets_.size(); ++t) hit_count_[t] += in_set_[t][e];
  }

  void remove(std::size_t e) {
    chosen_.pop_back();
    for (std::size_t t = 0; t < sets_.size(); ++t) hit_count_[t] -= in_set_[t][e];
  }

  bool all_critical() const {
    for (std::size_t f : chosen_) {
      bool critical = false;
      for (std::size_t t = 0; t < sets_.size() && !critical; ++t)
        critical = hit_count_[t] == 1 && in_set_[t][f];
      if (!critical) return false;
    }
    return true;
  }

  std::vector<std::vector<std::size_t>> sets_;
  std::vector<std::vector<char>> in_set_;
  std::vector<std::size_t> hit_count_;
  std::vector<char> candidate_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace detail

/// All selections whose edge sets are minimal under inclusion, each edge
/// set once with its canonical assignment, ordered lexicographically by
/// edge set. With no long zero trails the single empty selection is
/// returned.
template <GcdDomain R>
std::vector<Selection<R>> minimal_selections(const FactorSets<R>& d, std::size_t edge_universe) {
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(d.sets.size());
  for (const auto& s : d.sets) sets.push_back(s.trail.edge_set());
  auto edge_sets = detail::MinimalHittingSets(std::move(sets), edge_universe).run();
  std::sort(edge_sets.begin(), edge_sets.end());
  std::vector<Selection<R>> out;
  out.reserve(edge_sets.size());
  for (const auto& es : edge_sets) out.push_back(canonical_selection(d, std::span<const std::size_t>(es)));
  return out;
}

template <GcdDomain R>
std::vector<Selection<R>> minimal_selections(const LabeledGraph<R>& g, std::size_t i,
                                             std::size_t cap = default_trail_cap) {
  return minimal_selections(factor_sets(g, i, cap), g.edge_count());
}

}  // namespace gspline
