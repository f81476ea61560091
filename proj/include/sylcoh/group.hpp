#pragma once

/*
 * Finite groups as explicit multiplication tables. Index 0 is always the
 * identity. Tables are validated on construction: Latin-square property,
 * two-sided identity and inverses, and associativity (exhaustive for order
 * <= 128, otherwise one million deterministically sampled triples).
 *
 * Maximal elementary abelian subgroups are exactly the closures of maximal
 * cliques in the commuting graph on involutions: every such clique, together
 * with the identity, is already a subgroup, and distinct maximal cliques give
 * distinct subgroups. Enumeration is Bron-Kerbosch with pivoting.
 */

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "common.hpp"

namespace sylcoh {

struct GroupTable {
  int order = 0;
  std::vector<std::uint16_t> mul;  // order x order, row-major
  std::vector<std::uint16_t> inv;
  int id = 0;  // always index 0
  std::vector<std::string> labels;

  int at(int a, int b) const {
    return mul[static_cast<size_t>(a) * static_cast<size_t>(order) + static_cast<size_t>(b)];
  }
  void set(int a, int b, int v) {
    mul[static_cast<size_t>(a) * static_cast<size_t>(order) + static_cast<size_t>(b)] =
        static_cast<std::uint16_t>(v);
  }
};

struct Subgroup {
  const GroupTable* parent = nullptr;
  std::vector<int> members;  // sorted ascending; contains 0

  size_t order() const { return members.size(); }
};

inline bool commute(const GroupTable& g, int a, int b) { return g.at(a, b) == g.at(b, a); }

inline int element_order(const GroupTable& g, int x) {
  int n = 1;
  int p = x;
  while (p != g.id) {
    p = g.at(p, x);
    ++n;
  }
  return n;
}

inline void validate(const GroupTable& g) {
  const int n = g.order;
  require_usage(n >= 1, "group table: empty");
  require_internal(g.mul.size() == static_cast<size_t>(n) * static_cast<size_t>(n),
                   "group table: wrong mul size");
  require_internal(g.inv.size() == static_cast<size_t>(n), "group table: wrong inv size");
  require_internal(g.labels.size() == static_cast<size_t>(n), "group table: wrong label count");
  require_internal(g.id == 0, "group table: identity must be index 0");

  std::set<std::string> seen;
  for (const std::string& l : g.labels) {
    require_usage(!l.empty() && l.find_first_of(" \t\n") == std::string::npos,
                  "group table: labels must be nonempty and whitespace-free");
    require_usage(seen.insert(l).second, "group table: duplicate label");
  }

  std::vector<bool> hit(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::fill(hit.begin(), hit.end(), false);
    for (int b = 0; b < n; ++b) {
      int p = g.at(a, b);
      require_usage(p >= 0 && p < n, "group table: product out of range");
      require_usage(!hit[static_cast<size_t>(p)], "group table: row is not a permutation");
      hit[static_cast<size_t>(p)] = true;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(hit.begin(), hit.end(), false);
    for (int a = 0; a < n; ++a) {
      int p = g.at(a, b);
      require_usage(!hit[static_cast<size_t>(p)], "group table: column is not a permutation");
      hit[static_cast<size_t>(p)] = true;
    }
  }
  for (int a = 0; a < n; ++a) {
    require_usage(g.at(0, a) == a && g.at(a, 0) == a, "group table: identity fails");
    int ia = g.inv[static_cast<size_t>(a)];
    require_usage(ia >= 0 && ia < n, "group table: inverse out of range");
    require_usage(g.at(a, ia) == 0 && g.at(ia, a) == 0, "group table: inverse fails");
  }

  if (n <= 128) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          require_usage(g.at(g.at(a, b), c) == g.at(a, g.at(b, c)),
                        "group table: associativity fails");
  } else {
    SplitMix64 rng(0x67746162u);  // fixed seed: deterministic triple sample
    for (int trial = 0; trial < 1000000; ++trial) {
      int a = static_cast<int>(rng.below(static_cast<u64>(n)));
      int b = static_cast<int>(rng.below(static_cast<u64>(n)));
      int c = static_cast<int>(rng.below(static_cast<u64>(n)));
      require_usage(g.at(g.at(a, b), c) == g.at(a, g.at(b, c)),
                    "group table: associativity fails (sampled)");
    }
  }
}

inline std::vector<int> involutions(const GroupTable& g) {
  std::vector<int> out;
  for (int x = 1; x < g.order; ++x)
    if (g.at(x, x) == g.id) out.push_back(x);
  return out;
}

inline Subgroup center(const GroupTable& g) {
  Subgroup z;
  z.parent = &g;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order && central; ++y) central = commute(g, x, y);
    if (central) z.members.push_back(x);
  }
  return z;
}

inline bool is_elementary_abelian(const GroupTable& g, const std::vector<int>& members) {
  for (int x : members) {
    if (x != g.id && g.at(x, x) != g.id) return false;
    for (int y : members)
      if (!commute(g, x, y)) return false;
  }
  return true;
}

/* True iff every involution is central and the center is elementary abelian. */
inline bool central_involution_property(const GroupTable& g) {
  Subgroup z = center(g);
  if (!is_elementary_abelian(g, z.members)) return false;
  std::vector<bool> central(static_cast<size_t>(g.order), false);
  for (int x : z.members) central[static_cast<size_t>(x)] = true;
  for (int t : involutions(g))
    if (!central[static_cast<size_t>(t)]) return false;
  return true;
}

inline int subgroup_rank(const Subgroup& s) {
  size_t n = s.members.size();
  int r = 0;
  while ((size_t(1) << r) < n) ++r;
  require_internal((size_t(1) << r) == n, "subgroup_rank: order is not a power of 2");
  return r;
}

namespace detail {

inline void bron_kerbosch(const std::vector<BitVector>& adj, std::vector<int>& r,
                          BitVector p, BitVector x, std::vector<std::vector<int>>& out) {
  if (p.is_zero() && x.is_zero()) {
    out.push_back(r);
    return;
  }
  /* Pivot: vertex of P union X with the most neighbours in P (lowest index on ties). */
  size_t pivot = kNpos, best = 0;
  for (size_t u = 0; u < adj.size(); ++u) {
    if (!p.get(u) && !x.get(u)) continue;
    BitVector t = p;
    size_t cnt = 0;
    for (size_t k = 0; k < t.words().size(); ++k)
      cnt += static_cast<size_t>(std::popcount(t.words()[k] & adj[u].words()[k]));
    if (pivot == kNpos || cnt > best) {
      pivot = u;
      best = cnt;
    }
  }
  for (size_t v = 0; v < adj.size(); ++v) {
    if (!p.get(v) || (pivot != kNpos && adj[pivot].get(v))) continue;
    BitVector np(adj.size()), nx(adj.size());
    for (size_t k = 0; k < np.words().size(); ++k) {
      np.words()[k] = p.words()[k] & adj[v].words()[k];
      nx.words()[k] = x.words()[k] & adj[v].words()[k];
    }
    r.push_back(static_cast<int>(v));
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.set(v, false);
    x.set(v, true);
  }
}

}  // namespace detail

/*
 * All maximal elementary abelian subgroups, sorted by (rank, smallest
 * non-identity member). Requires order <= 1024.
 */
inline std::vector<Subgroup> maximal_elementary_abelians(const GroupTable& g) {
  require_usage(g.order <= 1024, "maximal_elementary_abelians: order cap is 1024");
  std::vector<int> invs = involutions(g);
  if (invs.empty()) {
    Subgroup triv;
    triv.parent = &g;
    triv.members = {g.id};
    return {triv};
  }

  const size_t nv = invs.size();
  std::vector<BitVector> adj(nv, BitVector(nv));
  for (size_t i = 0; i < nv; ++i)
    for (size_t j = i + 1; j < nv; ++j)
      if (commute(g, invs[i], invs[j])) {
        adj[i].set(j, true);
        adj[j].set(i, true);
      }

  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  BitVector p(nv), x(nv);
  for (size_t i = 0; i < nv; ++i) p.set(i, true);
  detail::bron_kerbosch(adj, r, p, x, cliques);

  std::vector<Subgroup> out;
  for (const auto& clique : cliques) {
    std::set<int> members = {g.id};
    for (int v : clique) members.insert(invs[static_cast<size_t>(v)]);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(members.begin(), members.end());
      for (int a : cur)
        for (int b : cur)
          if (members.insert(g.at(a, b)).second) grew = true;
    }
    Subgroup s;
    s.parent = &g;
    s.members.assign(members.begin(), members.end());
    require_internal(is_elementary_abelian(g, s.members),
                     "maximal_elementary_abelians: closure is not elementary abelian");
    require_internal(s.members.size() == clique.size() + 1,
                     "maximal_elementary_abelians: maximal clique not closed");
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

inline int two_rank(const GroupTable& g) {
  std::vector<Subgroup> maxes = maximal_elementary_abelians(g);
  int best = 0;
  for (const Subgroup& s : maxes) best = std::max(best, subgroup_rank(s));
  return best;
}

/* Relabel a subgroup as a standalone group table (members keep their labels). */
inline GroupTable subgroup_table(const GroupTable& g, const std::vector<int>& members) {
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  require_internal(!sorted.empty() && sorted[0] == g.id, "subgroup_table: missing identity");
  std::map<int, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);

  GroupTable h;
  h.order = static_cast<int>(sorted.size());
  h.mul.assign(static_cast<size_t>(h.order) * static_cast<size_t>(h.order), 0);
  h.inv.assign(static_cast<size_t>(h.order), 0);
  for (int a = 0; a < h.order; ++a) {
    h.labels.push_back(g.labels[static_cast<size_t>(sorted[static_cast<size_t>(a)])]);
    for (int b = 0; b < h.order; ++b) {
      auto it = index.find(g.at(sorted[static_cast<size_t>(a)], sorted[static_cast<size_t>(b)]));
      require_usage(it != index.end(), "subgroup_table: set is not closed");
      h.set(a, b, it->second);
    }
    h.inv[static_cast<size_t>(a)] =
        static_cast<std::uint16_t>(index.at(g.inv[static_cast<size_t>(sorted[static_cast<size_t>(a)])]));
  }
  validate(h);
  return h;
}

/* Direct product; element (x, y) has index x*|b| + y and label "(lx,ly)". */
inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  long long n = static_cast<long long>(a.order) * b.order;
  require_usage(n <= 4096, "direct_product: combined order cap is 4096");
  GroupTable p;
  p.order = static_cast<int>(n);
  p.mul.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  p.inv.assign(static_cast<size_t>(n), 0);
  p.labels.reserve(static_cast<size_t>(n));
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y)
      p.labels.push_back("(" + a.labels[static_cast<size_t>(x)] + "," +
                         b.labels[static_cast<size_t>(y)] + ")");
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1) {
      int i = x1 * b.order + y1;
      p.inv[static_cast<size_t>(i)] = static_cast<std::uint16_t>(
          a.inv[static_cast<size_t>(x1)] * b.order + b.inv[static_cast<size_t>(y1)]);
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          p.set(i, x2 * b.order + y2, a.at(x1, x2) * b.order + b.at(y1, y2));
    }
  validate(p);
  return p;
}

/*
 * For central Z <= G: build Z x G and check that the second-factor injection
 * followed by the multiplication map Z x G -> G is the identity on G, and
 * that the multiplication map is a homomorphism (which needs centrality).
 */
inline bool central_product_splitting_check(const GroupTable& g, const Subgroup& z) {
  for (int x : z.members)
    for (int y = 0; y < g.order; ++y)
      require_usage(commute(g, x, y), "splitting check: subgroup is not central");
  GroupTable zt = subgroup_table(g, z.members);
  GroupTable p = direct_product(zt, g);
  std::vector<int> mu(static_cast<size_t>(p.order));
  for (int i = 0; i < zt.order; ++i)
    for (int x = 0; x < g.order; ++x)
      mu[static_cast<size_t>(i * g.order + x)] = g.at(z.members[static_cast<size_t>(i)], x);
  for (int i = 0; i < p.order; ++i)
    for (int j = 0; j < p.order; ++j)
      if (mu[static_cast<size_t>(p.at(i, j))] !=
          g.at(mu[static_cast<size_t>(i)], mu[static_cast<size_t>(j)]))
        return false;
  for (int x = 0; x < g.order; ++x)
    if (mu[static_cast<size_t>(0 * g.order + x)] != x) return false;
  return true;
}

/*
 * Deterministic closure of generators under an opaque multiplication.
 * `key` must injectively name elements (equality = equal keys); indices are
 * assigned in discovery order except that the identity is moved to index 0.
 */
template <class T, class Mul, class Key, class Label>
GroupTable close_generators(const std::vector<T>& gens, Mul&& mulop, Key&& key,
                            Label&& label, size_t cap) {
  require_usage(cap >= 1 && cap <= 1024, "close_generators: cap must be in [1, 1024]");
  std::vector<T> elems;
  std::map<decltype(key(gens[0])), int> index;
  auto try_add = [&](const T& t) -> int {
    auto k = key(t);
    auto it = index.find(k);
    if (it != index.end()) return -1;
    require_usage(elems.size() < cap, "close_generators: closure exceeds cap");
    elems.push_back(t);
    index.emplace(std::move(k), static_cast<int>(elems.size() - 1));
    return static_cast<int>(elems.size() - 1);
  };

  require_usage(!gens.empty(), "close_generators: no generators");
  std::deque<std::pair<int, int>> pending;
  auto enqueue_for = [&](int fresh) {
    int n = static_cast<int>(elems.size());
    for (int j = 0; j < n; ++j) {
      pending.emplace_back(fresh, j);
      if (j != fresh) pending.emplace_back(j, fresh);
    }
  };
  for (const T& t : gens)
    if (int idx = try_add(t); idx >= 0) enqueue_for(idx);
  while (!pending.empty()) {
    auto [i, j] = pending.front();
    pending.pop_front();
    if (int idx = try_add(mulop(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
        idx >= 0)
      enqueue_for(idx);
  }

  /* The identity is the unique idempotent. */
  int ident = -1;
  for (size_t i = 0; i < elems.size(); ++i)
    if (key(mulop(elems[i], elems[i])) == key(elems[i])) {
      require_internal(ident < 0, "close_generators: several idempotents");
      ident = static_cast<int>(i);
    }
  require_internal(ident >= 0, "close_generators: no identity found");

  std::vector<int> order_map(elems.size());  // old index -> new index
  order_map[static_cast<size_t>(ident)] = 0;
  int next = 1;
  for (size_t i = 0; i < elems.size(); ++i)
    if (static_cast<int>(i) != ident) order_map[i] = next++;

  GroupTable g;
  g.order = static_cast<int>(elems.size());
  g.mul.assign(static_cast<size_t>(g.order) * static_cast<size_t>(g.order), 0);
  g.inv.assign(static_cast<size_t>(g.order), 0);
  g.labels.assign(static_cast<size_t>(g.order), "");
  for (size_t i = 0; i < elems.size(); ++i)
    g.labels[static_cast<size_t>(order_map[i])] = label(elems[i]);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      auto it = index.find(key(mulop(elems[i], elems[j])));
      require_internal(it != index.end(), "close_generators: product escaped closure");
      g.set(order_map[i], order_map[j], order_map[static_cast<size_t>(it->second)]);
    }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.at(a, b) == 0) g.inv[static_cast<size_t>(a)] = static_cast<std::uint16_t>(b);
  validate(g);
  return g;
}

}  // namespace sylcoh
