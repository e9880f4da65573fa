#pragma once

#include <gspline/error.hpp>
#include <gspline/graph/labeled_graph.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gspline {

inline constexpr std::size_t default_trail_cap = 1'000'000;

/// Walk that repeats no edge. `edges` is in traversal order; `gcd` caches
/// the canonical gcd of the labels along it.
template <GcdDomain R>
struct Trail {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::size_t> edges;
  R gcd;

  std::size_t length() const { return edges.size(); }

  /// Edge indices, ascending.
  std::vector<std::size_t> edge_set() const {
    std::vector<std::size_t> s = edges;
    std::sort(s.begin(), s.end());
    return s;
  }

  bool contains_edge(std::size_t e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }
};

template <GcdDomain R>
R trail_gcd(const LabeledGraph<R>& g, std::span<const std::size_t> edges) {
  R acc(0);
  for (std::size_t k : edges) acc = gcd(acc, g.edge(k).label);
  return acc;
}

/// Structural check: consecutive edges chain from start to end, no edge repeats.
template <GcdDomain R>
bool is_valid_trail(const LabeledGraph<R>& g, const Trail<R>& t) {
  if (t.edges.empty()) return false;
  std::vector<bool> used(g.edge_count(), false);
  std::size_t at = t.start;
  for (std::size_t k : t.edges) {
    if (k >= g.edge_count() || used[k] || !g.edge(k).touches(at)) return false;
    used[k] = true;
    at = g.edge(k).other(at);
  }
  return at == t.end;
}

namespace detail {

struct Verdict {
  bool record;
  bool descend;
};

template <GcdDomain R, class Visit>
class TrailSearch {
 public:
  TrailSearch(const LabeledGraph<R>& g, std::size_t cap, Visit visit)
      : g_(g), cap_(cap), visit_(std::move(visit)), used_(g.edge_count(), false), visits_(g.vertex_count(), 0) {}

  // Depth-first over edges in index order. visit(at, revisit) decides
  // whether the current path is recorded and whether it is extended.
  void run(std::size_t from, std::vector<Trail<R>>& out) {
    from_ = from;
    out_ = &out;
    ++visits_[from];
    extend(from);
    --visits_[from];
  }

 private:
  void extend(std::size_t at) {
    for (std::size_t k : g_.incident(at)) {
      if (used_[k]) continue;
      const std::size_t next = g_.edge(k).other(at);
      used_[k] = true;
      path_.push_back(k);
      const auto [record, descend] = visit_(next, visits_[next] > 0);
      if (record) {
        if (out_->size() >= cap_)
          throw enumeration_limit_error("trail enumeration exceeded the cap of " + std::to_string(cap_) + " trails");
        out_->push_back({from_, next, path_, trail_gcd(g_, std::span<const std::size_t>(path_))});
      }
      if (descend) {
        ++visits_[next];
        extend(next);
        --visits_[next];
      }
      path_.pop_back();
      used_[k] = false;
    }
  }

  const LabeledGraph<R>& g_;
  std::size_t cap_;
  Visit visit_;
  std::vector<bool> used_;
  std::vector<std::size_t> visits_;
  std::vector<std::size_t> path_;
  std::size_t from_ = 0;
  std::vector<Trail<R>>* out_ = nullptr;
};

}  // namespace detail

/// All trails from `from` to `to`, in lexicographic order of their edge
/// index sequences. Vertices may repeat, including `to` itself mid-trail.
template <GcdDomain R>
std::vector<Trail<R>> enumerate_trails(const LabeledGraph<R>& g, std::size_t from, std::size_t to,
                                       std::size_t cap = default_trail_cap) {
  if (from >= g.vertex_count() || to >= g.vertex_count()) throw precondition_error("vertex out of range");
  if (from == to) throw precondition_error("enumerate_trails needs distinct endpoints");
  std::vector<Trail<R>> out;
  auto visit = [to](std::size_t at, bool) { return detail::Verdict{at == to, true}; };
  detail::TrailSearch<R, decltype(visit)>(g, cap, visit).run(from, out);
  return out;
}

/// Drops every trail whose edge set strictly contains another trail's edge
/// set, and keeps only the first of trails with identical edge sets.
template <GcdDomain R>
std::vector<Trail<R>> prune_contained(std::vector<Trail<R>> trails) {
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(trails.size());
  for (const auto& t : trails) sets.push_back(t.edge_set());
  std::vector<Trail<R>> kept;
  for (std::size_t a = 0; a < trails.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < trails.size() && !dominated; ++b) {
      if (a == b) continue;
      const bool subset = std::includes(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end());
      if (!subset) continue;
      // b inside a: strictly smaller, or an equal set seen earlier.
      dominated = sets[b].size() < sets[a].size() || b < a;
    }
    if (!dominated) kept.push_back(std::move(trails[a]));
  }
  return kept;
}

/// Zero trails of vertex i (0-based, i >= 1): trails from v_i to any earlier
/// vertex, reduced to those containing no other zero trail.
///
/// The search never continues past an earlier vertex and never revisits a
/// vertex: a trail doing either contains a shorter zero trail (its prefix,
/// or itself with the closed sub-walk cut out) and would be pruned anyway.
template <GcdDomain R>
std::vector<Trail<R>> zero_trails(const LabeledGraph<R>& g, std::size_t i, std::size_t cap = default_trail_cap) {
  if (i >= g.vertex_count()) throw precondition_error("vertex out of range");
  if (i == 0) throw precondition_error("the first vertex has no zero trails");
  std::vector<Trail<R>> out;
  auto visit = [i](std::size_t at, bool revisit) {
    if (at < i) return detail::Verdict{true, false};
    return detail::Verdict{false, !revisit};
  };
  detail::TrailSearch<R, decltype(visit)>(g, cap, visit).run(i, out);
  return prune_contained(std::move(out));
}

}  // namespace gspline
