#pragma once

/*
 * Brute-force group isomorphism oracle for small orders (<= 64). Independent
 * of the library's structural code: it works directly on multiplication
 * tables via an element-order census plus backtracking over generator images.
 */

#include <algorithm>
#include <map>
#include <vector>

#include "sylcoh/group.hpp"

namespace oracle {

inline std::vector<int> order_census(const sylcoh::GroupTable& g) {
  std::vector<int> orders;
  for (int x = 0; x < g.order; ++x) orders.push_back(sylcoh::element_order(g, x));
  std::sort(orders.begin(), orders.end());
  return orders;
}

inline std::vector<int> closure_of(const sylcoh::GroupTable& g, const std::vector<int>& gens) {
  std::vector<bool> in(static_cast<size_t>(g.order), false);
  std::vector<int> members = {g.id};
  in[0] = true;
  for (size_t head = 0; head < members.size(); ++head)
    for (int s : gens) {
      int y = g.at(members[head], s);
      if (!in[static_cast<size_t>(y)]) {
        in[static_cast<size_t>(y)] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

/* Greedy minimal-ish generating sequence: always add the smallest outside element. */
inline std::vector<int> generating_sequence(const sylcoh::GroupTable& g) {
  std::vector<int> gens;
  std::vector<int> cur = {g.id};
  while (static_cast<int>(cur.size()) < g.order) {
    int pick = -1;
    for (int x = 0; x < g.order && pick < 0; ++x)
      if (!std::binary_search(cur.begin(), cur.end(), x)) pick = x;
    gens.push_back(pick);
    cur = closure_of(g, gens);
  }
  return gens;
}

inline bool check_iso_map(const sylcoh::GroupTable& a, const sylcoh::GroupTable& b,
                          const std::vector<int>& gens, const std::vector<int>& images) {
  std::vector<int> phi(static_cast<size_t>(a.order), -1);
  phi[0] = 0;
  std::vector<int> queue = {0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (size_t s = 0; s < gens.size(); ++s) {
      int xa = a.at(x, gens[s]);
      int xb = b.at(phi[static_cast<size_t>(x)], images[s]);
      if (phi[static_cast<size_t>(xa)] == -1) {
        phi[static_cast<size_t>(xa)] = xb;
        queue.push_back(xa);
      } else if (phi[static_cast<size_t>(xa)] != xb) {
        return false;
      }
    }
  }
  if (queue.size() != static_cast<size_t>(a.order)) return false;
  std::vector<bool> hit(static_cast<size_t>(b.order), false);
  for (int v : phi) {
    if (v < 0 || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = true;
  }
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < a.order; ++y)
      if (phi[static_cast<size_t>(a.at(x, y))] !=
          b.at(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)]))
        return false;
  return true;
}

inline bool extend_images(const sylcoh::GroupTable& a, const sylcoh::GroupTable& b,
                          const std::vector<int>& gens, std::vector<int>& images, size_t k) {
  if (k == gens.size()) return check_iso_map(a, b, gens, images);
  int want = sylcoh::element_order(a, gens[k]);
  for (int y = 0; y < b.order; ++y) {
    if (sylcoh::element_order(b, y) != want) continue;
    images.push_back(y);
    if (extend_images(a, b, gens, images, k + 1)) return true;
    images.pop_back();
  }
  return false;
}

inline bool isomorphic(const sylcoh::GroupTable& a, const sylcoh::GroupTable& b) {
  if (a.order != b.order) return false;
  if (order_census(a) != order_census(b)) return false;
  std::vector<int> gens = generating_sequence(a);
  std::vector<int> images;
  return extend_images(a, b, gens, images, 0);
}

}  // namespace oracle
