#pragma once

// Collapsing Kostant pictures along columns, with join bookkeeping and the
// ancestry of collapsed loops.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mvcycles/kostant.hpp"

namespace mv {

struct Join {
  Loop result;
  Loop left_parent;
  Loop right_parent;
};

struct CollapseResult {
  KostantPicture picture;
  int column = 0;   // column of the input picture that was removed
  int removed = 0;  // N: number of levels
  std::vector<Join> joins;
  std::vector<std::pair<Loop, Loop>> survivors;  // old loop -> renumbered loop
};

namespace detail {

inline std::pair<int, int> renumber(int left, int right, int col) {
  if (right < col) return {left, right};
  if (left > col) return {left - 1, right - 1};
  return {left, right - 1};
}

}  // namespace detail

inline CollapseResult collapse_column(const KostantPicture& p, int col) {
  if (p.n() < 2) throw std::invalid_argument("collapse needs at least two columns");
  if (col < 1 || col > p.n()) throw std::out_of_range("collapse column out of range");
  auto levels = levels_through_column(p, col);

  CollapseResult res;
  res.column = col;
  res.removed = static_cast<int>(levels.size());

  // Survivors first; equal intervals keep their relative copy order.
  struct Pending {
    int left, right;
    int group;  // 0 = survivor, 1 + level for joins
    int order;
    std::size_t source;
  };
  std::vector<Pending> pend;
  std::vector<Loop> kept;
  for (const auto& L : p.loops())
    if (!L.passes_through(col)) kept.push_back(L);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    auto [l, r] = detail::renumber(kept[k].left, kept[k].right, col);
    pend.push_back({l, r, 0, kept[k].copy, k});
  }
  std::vector<std::pair<Loop, Loop>> parents;
  for (std::size_t lv = 0; lv < levels.size(); ++lv) {
    const auto& row = levels[lv];
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
      auto [l, r] = detail::renumber(row[j].left, row[j + 1].right, col);
      pend.push_back({l, r, 1 + static_cast<int>(lv), static_cast<int>(j), parents.size()});
      parents.emplace_back(row[j], row[j + 1]);
    }
  }
  std::sort(pend.begin(), pend.end(), [](const Pending& a, const Pending& b) {
    return std::tie(a.left, a.right, a.group, a.order) < std::tie(b.left, b.right, b.group, b.order);
  });
  std::vector<Loop> out;
  out.reserve(pend.size());
  for (std::size_t k = 0; k < pend.size(); ++k) {
    const auto& q = pend[k];
    int copy = 0;
    if (k > 0 && pend[k - 1].left == q.left && pend[k - 1].right == q.right) copy = out.back().copy + 1;
    Loop nl{q.left, q.right, copy};
    out.push_back(nl);
    if (q.group == 0) {
      res.survivors.emplace_back(kept[q.source], nl);
    } else {
      res.joins.push_back({nl, parents[q.source].first, parents[q.source].second});
    }
  }
  res.picture = KostantPicture::from_loops(p.n() - 1, std::move(out));
  return res;
}

struct CollapseTrace {
  KostantPicture input;
  std::vector<int> order;    // columns in the original numbering
  std::vector<int> offsets;  // h(m)
  std::vector<CollapseResult> steps;

  const KostantPicture& result() const { return steps.empty() ? input : steps.back().picture; }
  std::vector<int> removed_counts() const {
    std::vector<int> out;
    for (const auto& s : steps) out.push_back(s.removed);
    return out;
  }
};

inline void check_column_order(int n, const std::vector<int>& order) {
  std::set<int> seen;
  for (int c : order) {
    if (c < 1 || c > n) throw std::out_of_range("collapse column " + std::to_string(c) + " out of range");
    if (!seen.insert(c).second) throw std::invalid_argument("duplicate collapse column " + std::to_string(c));
  }
}

inline int collapse_offset(const std::vector<int>& order, std::size_t m) {
  int h = 0;
  for (std::size_t j = 0; j < m; ++j) h += order[j] < order[m] ? 1 : 0;
  return h;
}

inline CollapseTrace collapse_sequence(const KostantPicture& p, const std::vector<int>& order) {
  check_column_order(p.n(), order);
  CollapseTrace tr;
  tr.input = p;
  tr.order = order;
  const KostantPicture* cur = &p;
  for (std::size_t m = 0; m < order.size(); ++m) {
    int h = collapse_offset(order, m);
    tr.offsets.push_back(h);
    if (cur->n() < 2) {
      // Collapsing the only column leaves the empty picture on zero columns.
      CollapseResult last;
      last.column = order[m] - h;
      last.picture = KostantPicture(0);
      tr.steps.push_back(std::move(last));
    } else {
      tr.steps.push_back(collapse_column(*cur, order[m] - h));
    }
    cur = &tr.steps.back().picture;
  }
  return tr;
}

/// Ancestry of one loop of a collapsed picture, as indices into p.loops().
struct LoopAncestry {
  Loop loop;
  std::vector<std::size_t> ancestors;   // sorted
  std::vector<Loop> components;         // top ancestors (not encircled by another ancestor), left to right
};

inline std::vector<LoopAncestry> ancestry(const KostantPicture& p, const std::vector<int>& order) {
  auto tr = collapse_sequence(p, order);
  std::map<Loop, std::set<std::size_t>> cur;
  for (std::size_t k = 0; k < p.loops().size(); ++k) cur[p.loops()[k]] = {k};
  for (const auto& step : tr.steps) {
    std::map<Loop, std::set<std::size_t>> next;
    for (const auto& [old, neu] : step.survivors) next[neu] = cur.at(old);
    for (const auto& j : step.joins) {
      auto a = cur.at(j.left_parent);
      const auto& b = cur.at(j.right_parent);
      a.insert(b.begin(), b.end());
      next[j.result] = std::move(a);
    }
    cur = std::move(next);
  }
  std::vector<LoopAncestry> out;
  for (const auto& L : tr.result().loops()) {
    LoopAncestry a;
    a.loop = L;
    const auto& anc = cur.at(L);
    a.ancestors.assign(anc.begin(), anc.end());
    for (std::size_t x : anc) {
      bool top = true;
      for (std::size_t y : anc)
        if (y != x && encircles(p.loops()[y], p.loops()[x])) top = false;
      if (top) a.components.push_back(p.loops()[x]);
    }
    std::sort(a.components.begin(), a.components.end(),
              [](const Loop& u, const Loop& v) { return std::tie(u.left, u.right) < std::tie(v.left, v.right); });
    out.push_back(std::move(a));
  }
  return out;
}

/// A single discrepancy found by a checker, with a description of the input.
struct CheckFailure {
  std::string what;
  KostantPicture picture;
  std::vector<int> order;
};

/// Visits every ordering of every nonempty column subset by depth-first
/// extension, reusing shared prefixes. f(order, picture) is called per node.
template <class Fn>
void for_each_collapse_order(const KostantPicture& p, Fn&& f) {
  std::vector<int> order;
  std::vector<char> used(static_cast<std::size_t>(p.n()) + 1, 0);
  auto rec = [&](auto&& self, const KostantPicture& cur) -> void {
    for (int c = 1; c <= p.n(); ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      order.push_back(c);
      used[static_cast<std::size_t>(c)] = 1;
      int h = collapse_offset(order, order.size() - 1);
      KostantPicture next = cur.n() >= 2 ? collapse_column(cur, c - h).picture : KostantPicture(0);
      f(static_cast<const std::vector<int>&>(order), static_cast<const KostantPicture&>(next));
      self(self, next);
      used[static_cast<std::size_t>(c)] = 0;
      order.pop_back();
    }
  };
  rec(rec, p);
}

/// Checks that the collapse along a column set does not depend on the order.
inline std::vector<CheckFailure> verify_commutativity(const KostantPicture& p) {
  std::vector<CheckFailure> fails;
  std::map<unsigned, std::pair<std::vector<int>, KostantPicture>> first;
  for_each_collapse_order(p, [&](const std::vector<int>& order, const KostantPicture& q) {
    unsigned mask = 0;
    for (int c : order) mask |= 1u << c;
    auto it = first.find(mask);
    if (it == first.end()) {
      first.emplace(mask, std::make_pair(order, q));
    } else if (!(it->second.second == q)) {
      std::string msg = "order-dependent collapse: ";
      for (int c : it->second.first) msg += std::to_string(c);
      msg += " gives " + it->second.second.str() + ", ";
      for (int c : order) msg += std::to_string(c);
      msg += " gives " + q.str();
      fails.push_back({msg, p, order});
    }
  });
  return fails;
}

/// |J| = s - 1 and the endpoint condition, for every loop of the collapse.
inline std::vector<CheckFailure> verify_ancestry_claims(const KostantPicture& p, const std::vector<int>& order) {
  std::vector<CheckFailure> fails;
  std::set<int> cols(order.begin(), order.end());
  for (const auto& a : ancestry(p, order)) {
    std::vector<int> J;
    for (int c : cols) {
      bool hit = false;
      for (const auto& L : a.components) hit = hit || L.passes_through(c);
      if (hit) J.push_back(c);
    }
    const auto s = a.components.size();
    if (J.size() + 1 != s) {
      fails.push_back({"loop " + a.loop.str() + ": |J|=" + std::to_string(J.size()) + " but s=" + std::to_string(s), p,
                       order});
      continue;
    }
    for (std::size_t m = 0; m < s; ++m) {
      const Loop& L = a.components[m];
      bool ok = (m == 0 || L.passes_through(J[m - 1])) && (m + 1 == s || L.passes_through(J[m]));
      if (!ok) fails.push_back({"loop " + a.loop.str() + ": component " + L.str() + " misses its columns", p, order});
    }
  }
  return fails;
}

}  // namespace mv
