#pragma once

/* Small built-in 2-groups used for tests, demos, and cross-checks. */

#include <functional>
#include <string>
#include <vector>

#include "common.hpp"
#include "group.hpp"

namespace sylcoh {

/* Cyclic group of order m; labels 1, g, g^2, ... */
inline GroupTable cyclic_group(int m) {
  require_usage(m >= 1 && m <= 4096, "cyclic_group: order out of range");
  GroupTable g;
  g.order = m;
  g.mul.assign(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
  g.inv.assign(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    g.labels.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    g.inv[static_cast<size_t>(a)] = static_cast<std::uint16_t>((m - a) % m);
    for (int b = 0; b < m; ++b) g.set(a, b, (a + b) % m);
  }
  validate(g);
  return g;
}

/* (Z/2)^r with index = bit mask and product = xor; labels 1, a1, a1*a2, ... */
inline GroupTable elementary_abelian_group(int r) {
  require_usage(r >= 0 && r <= 10, "elementary_abelian_group: rank out of range [0, 10]");
  int m = 1 << r;
  GroupTable g;
  g.order = m;
  g.mul.assign(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
  g.inv.assign(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    std::string l;
    for (int bit = 0; bit < r; ++bit)
      if (a & (1 << bit)) {
        if (!l.empty()) l += "*";
        l += "a" + std::to_string(bit + 1);
      }
    g.labels.push_back(l.empty() ? "1" : l);
    g.inv[static_cast<size_t>(a)] = static_cast<std::uint16_t>(a);
    for (int b = 0; b < m; ++b) g.set(a, b, a ^ b);
  }
  validate(g);
  return g;
}

/* Dihedral group of order 8: r^4 = s^2 = 1, s*r*s = r^-1. Index = a + 4b for r^a s^b. */
inline GroupTable dihedral8_group() {
  GroupTable g;
  g.order = 8;
  g.mul.assign(64, 0);
  g.inv.assign(8, 0);
  auto idx = [](int a, int b) { return ((a % 4 + 4) % 4) + 4 * (b % 2); };
  const char* names[8] = {"1", "r", "r^2", "r^3", "s", "r*s", "r^2*s", "r^3*s"};
  for (int i = 0; i < 8; ++i) g.labels.push_back(names[i]);
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          /* (r^a1 s^b1)(r^a2 s^b2): moving s past r^a2 inverts it. */
          int a = b1 ? a1 - a2 : a1 + a2;
          g.set(idx(a1, b1), idx(a2, b2), idx(a, b1 + b2));
        }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (g.at(i, j) == 0) g.inv[static_cast<size_t>(i)] = static_cast<std::uint16_t>(j);
  validate(g);
  return g;
}

/* Quaternion group of order 8: {1, -1, i, -i, j, -j, k, -k}. */
inline GroupTable quaternion8_group() {
  /* Element = (sign, base) with base 0..3 naming 1, i, j, k. */
  auto idx = [](int sign, int base) { return base == 0 ? sign : 2 * base + sign; };
  struct SB {
    int sign, base;
  };
  auto unidx = [](int i) -> SB {
    if (i < 2) return {i, 0};
    return {i % 2, i / 2};
  };
  /* base_mul[b1][b2] = (sign, base) of the product of the unsigned bases. */
  static const int bm_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int bm_base[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

  GroupTable g;
  g.order = 8;
  g.mul.assign(64, 0);
  g.inv.assign(8, 0);
  const char* names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (int i = 0; i < 8; ++i) g.labels.push_back(names[i]);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      SB x = unidx(i), y = unidx(j);
      int base = bm_base[x.base][y.base];
      int sign = (x.sign + y.sign + bm_sign[x.base][y.base]) % 2;
      g.set(i, j, idx(sign, base));
    }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (g.at(i, j) == 0) g.inv[static_cast<size_t>(i)] = static_cast<std::uint16_t>(j);
  validate(g);
  return g;
}

/* Semidihedral group of order 16: r^8 = s^2 = 1, s*r*s = r^3. Index = a + 8b. */
inline GroupTable semidihedral16_group() {
  GroupTable g;
  g.order = 16;
  g.mul.assign(256, 0);
  g.inv.assign(16, 0);
  auto idx = [](int a, int b) { return ((a % 8 + 8) % 8) + 8 * (b % 2); };
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 8; ++a) {
      std::string l = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
      if (b) l += l.empty() ? "s" : "*s";
      g.labels.push_back(l.empty() ? "1" : l);
    }
  for (int a1 = 0; a1 < 8; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 8; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          /* Moving s past r^a2 cubes it. */
          int a = b1 ? a1 + 3 * a2 : a1 + a2;
          g.set(idx(a1, b1), idx(a2, b2), idx(a, b1 + b2));
        }
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      if (g.at(i, j) == 0) g.inv[static_cast<size_t>(i)] = static_cast<std::uint16_t>(j);
  validate(g);
  return g;
}

struct Fixture {
  std::string name;
  std::string description;
  std::function<GroupTable()> build;
};

inline const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> reg = {
      {"z2", "cyclic group of order 2", [] { return cyclic_group(2); }},
      {"z4", "cyclic group of order 4", [] { return cyclic_group(4); }},
      {"v4", "elementary abelian group of order 4", [] { return elementary_abelian_group(2); }},
      {"e8", "elementary abelian group of order 8", [] { return elementary_abelian_group(3); }},
      {"d8", "dihedral group of order 8", [] { return dihedral8_group(); }},
      {"q8", "quaternion group of order 8", [] { return quaternion8_group(); }},
      {"sd16", "semidihedral group of order 16", [] { return semidihedral16_group(); }},
  };
  return reg;
}

inline GroupTable build_fixture(const std::string& name) {
  for (const Fixture& f : fixture_registry())
    if (f.name == name) return f.build();
  throw usage_error("unknown fixture: " + name);
}

}  // namespace sylcoh
