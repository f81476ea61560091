#pragma once

/*
 * Plain-text serialization for group tables ("gtab" format, version 1):
 *
 *   gtab v1 <order>
 *   <label of element 0>
 *   ...
 *   <label of element order-1>
 *   <order integers: row 0 of the multiplication table>
 *   ...
 *   <order integers: row order-1>
 *
 * Labels are whitespace-free. Row a lists a*b for b = 0..order-1. The writer
 * is byte-deterministic; the reader validates the table fully.
 */

#include <fstream>
#include <sstream>
#include <string>

#include "common.hpp"
#include "group.hpp"

namespace sylcoh {

inline std::string write_gtab(const GroupTable& g) {
  std::ostringstream out;
  out << "gtab v1 " << g.order << "\n";
  for (const std::string& l : g.labels) out << l << "\n";
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (b) out << ' ';
      out << g.at(a, b);
    }
    out << "\n";
  }
  return out.str();
}

inline GroupTable parse_gtab(const std::string& text) {
  std::istringstream in(text);
  std::string magic, version;
  int order = 0;
  if (!(in >> magic >> version >> order) || magic != "gtab" || version != "v1")
    throw usage_error("gtab: bad header (expected 'gtab v1 <order>')");
  require_usage(order >= 1 && order <= 4096, "gtab: order out of range [1, 4096]");

  GroupTable g;
  g.order = order;
  g.labels.reserve(static_cast<size_t>(order));
  for (int i = 0; i < order; ++i) {
    std::string l;
    if (!(in >> l)) throw usage_error("gtab: truncated label section");
    g.labels.push_back(l);
  }
  g.mul.assign(static_cast<size_t>(order) * static_cast<size_t>(order), 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int v = -1;
      if (!(in >> v)) throw usage_error("gtab: truncated table section");
      require_usage(v >= 0 && v < order, "gtab: table entry out of range");
      g.set(a, b, v);
    }
  std::string extra;
  if (in >> extra) throw usage_error("gtab: trailing data after table");

  g.inv.assign(static_cast<size_t>(order), 0);
  for (int a = 0; a < order; ++a) {
    bool found = false;
    for (int b = 0; b < order; ++b)
      if (g.at(a, b) == 0 && g.at(b, a) == 0) {
        g.inv[static_cast<size_t>(a)] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    require_usage(found, "gtab: element without a two-sided inverse");
  }
  validate(g);
  return g;
}

inline void save_gtab_file(const GroupTable& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require_usage(out.good(), "cannot open for writing: " + path);
  out << write_gtab(g);
  require_usage(out.good(), "write failed: " + path);
}

inline GroupTable load_gtab_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require_usage(in.good(), "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gtab(buf.str());
}

}  // namespace sylcoh
