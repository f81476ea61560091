#pragma once

/*
 * Command-line front end.
 *
 * Exit codes: 0 when every requested check passed, 1 when a mathematical
 * check failed (the report carries the witness) or an internal cross-check
 * aborted the run, 2 for usage and resource errors (bad arguments, caps
 * exceeded, unreadable files).
 *
 * Reports are written only after a run completes, never partially. The
 * SYLCOH_CACHE_DIR environment variable, when set, enables the binary
 * resolution cache inside that directory.
 */

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmcheck.hpp"
#include "common.hpp"
#include "field.hpp"
#include "fixtures.hpp"
#include "gtab.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "sylow.hpp"
#include "tower.hpp"

namespace sylcoh {

namespace cli_detail {

inline std::optional<u32> parse_poly_bits(const std::string& s) {
  if (s.empty()) return std::nullopt;
  require_usage(s.size() >= 2 && s.size() <= 32 && s.front() == '1',
                "--field-poly: expected a leading-1 binary string like 10011");
  u32 v = 0;
  for (char c : s) {
    require_usage(c == '0' || c == '1', "--field-poly: expected only binary digits");
    v = v << 1 | static_cast<u32>(c - '0');
  }
  return v;
}

inline GroupTable build_family_table(const std::string& family, int n,
                                     std::optional<u32> poly, bool large,
                                     std::vector<LemmaCheck>& checks) {
  if (family == "psu3") {
    Psu3Sylow s = build_psu3_sylow(n, poly);
    checks = psu3_lemma_checks(s);
    return std::move(s.table);
  }
  if (family == "sz") {
    require_usage(n == 1 || large,
                  "sz with n >= 2 builds a group of order 2^(3(2n+1)) >= 1024; pass --large "
                  "to confirm");
    SzSylow s = build_sz_sylow(n, poly);
    checks = sz_lemma_checks(s);
    return std::move(s.table);
  }
  throw usage_error("unknown family '" + family + "' (expected psu3 or sz)");
}

inline int print_lemma_checks(const std::vector<LemmaCheck>& checks) {
  bool all = true;
  for (const LemmaCheck& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact Sylow 2-subgroups of unitary and Suzuki groups and computational "
               "certification of the Cohen-Macaulay property of their mod-2 cohomology"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  std::function<int()> action;

  /* ---- field inspect ---- */
  auto* field = app.add_subcommand("field", "finite-field tower information");
  field->require_subcommand(1);
  auto* inspect = field->add_subcommand("inspect", "print the quadratic tower for a given n");
  auto fi_n = std::make_shared<int>(1);
  auto fi_poly = std::make_shared<std::string>();
  inspect->add_option("--n", *fi_n, "tower parameter (subfield GF(2^n))")->required();
  inspect->add_option("--field-poly", *fi_poly,
                      "extension modulus as a binary string, most significant bit first");
  inspect->callback([fi_n, fi_poly, &action] {
    action = [fi_n, fi_poly] {
      TowerSpec t = build_tower(*fi_n, cli_detail::parse_poly_bits(*fi_poly));
      std::cout << "tower n=" << *fi_n << "\n"
                << "subfield GF(2^" << t.sub.k << ") modulus " << spec_string(t.sub) << "\n"
                << "extension GF(2^" << t.big.k << ") modulus " << spec_string(t.big) << "\n"
                << "rho " << element_string(t.rho) << " multiplicative-order "
                << multiplicative_order(t.rho) << "\n"
                << "lambda " << element_string(t.lambda) << "\n";
      return 0;
    };
  });

  /* ---- sylow build ---- */
  auto* sylow = app.add_subcommand("sylow", "construct Sylow 2-subgroups");
  sylow->require_subcommand(1);
  auto* build = sylow->add_subcommand("build", "write a Sylow 2-subgroup as a gtab file");
  auto sb_family = std::make_shared<std::string>();
  auto sb_n = std::make_shared<int>(1);
  auto sb_out = std::make_shared<std::string>();
  auto sb_poly = std::make_shared<std::string>();
  auto sb_large = std::make_shared<bool>(false);
  build->add_option("--family", *sb_family, "group family: psu3 or sz")->required();
  build->add_option("--n", *sb_n, "family parameter")->required();
  build->add_option("--out", *sb_out, "output path (default <family>_n<N>.gtab)");
  build->add_option("--field-poly", *sb_poly, "extension modulus override, binary string");
  build->add_flag("--large", *sb_large, "allow group orders above the default caps");
  build->callback([sb_family, sb_n, sb_out, sb_poly, sb_large, &action] {
    action = [sb_family, sb_n, sb_out, sb_poly, sb_large] {
      std::vector<LemmaCheck> checks;
      GroupTable g = cli_detail::build_family_table(
          *sb_family, *sb_n, cli_detail::parse_poly_bits(*sb_poly), *sb_large, checks);
      std::string path = sb_out->empty()
                             ? *sb_family + "_n" + std::to_string(*sb_n) + ".gtab"
                             : *sb_out;
      save_gtab_file(g, path);
      std::cout << "wrote " << path << " (order " << g.order << ")\n";
      return 0;
    };
  });

  /* ---- verify lemmas ---- */
  auto* verify = app.add_subcommand("verify", "run structural checks");
  verify->require_subcommand(1);
  auto* lemmas = verify->add_subcommand("lemmas", "verify the structural law of a family");
  auto vl_family = std::make_shared<std::string>();
  auto vl_n = std::make_shared<int>(1);
  auto vl_poly = std::make_shared<std::string>();
  auto vl_large = std::make_shared<bool>(false);
  lemmas->add_option("--family", *vl_family, "group family: psu3 or sz")->required();
  lemmas->add_option("--n", *vl_n, "family parameter")->required();
  lemmas->add_option("--field-poly", *vl_poly, "extension modulus override, binary string");
  lemmas->add_flag("--large", *vl_large, "allow group orders above the default caps");
  lemmas->callback([vl_family, vl_n, vl_poly, vl_large, &action] {
    action = [vl_family, vl_n, vl_poly, vl_large] {
      std::vector<LemmaCheck> checks;
      cli_detail::build_family_table(*vl_family, *vl_n,
                                     cli_detail::parse_poly_bits(*vl_poly), *vl_large, checks);
      return cli_detail::print_lemma_checks(checks);
    };
  });

  /* ---- cohomology betti / cm-check ---- */
  auto* coh = app.add_subcommand("cohomology", "minimal resolutions and certification");
  coh->require_subcommand(1);

  auto* betti_cmd = coh->add_subcommand("betti", "print minimal-resolution ranks");
  auto cb_group = std::make_shared<std::string>();
  auto cb_deg = std::make_shared<int>(8);
  betti_cmd->add_option("--group", *cb_group, "gtab file of a 2-group of order <= 512")
      ->required();
  betti_cmd->add_option("--max-degree", *cb_deg, "top degree (default 8, cap 12)");
  betti_cmd->callback([cb_group, cb_deg, &action] {
    action = [cb_group, cb_deg] {
      GroupTable g = load_gtab_file(*cb_group);
      std::vector<size_t> b = betti(g, *cb_deg);
      for (size_t k = 0; k < b.size(); ++k) std::cout << (k ? " " : "") << b[k];
      std::cout << "\n";
      return 0;
    };
  });

  auto* cm = coh->add_subcommand("cm-check", "run the Cohen-Macaulay certification pipeline");
  auto cc_family = std::make_shared<std::string>();
  auto cc_fixture = std::make_shared<std::string>();
  auto cc_n = std::make_shared<int>(1);
  auto cc_deg = std::make_shared<int>(8);
  auto cc_report = std::make_shared<std::string>();
  auto cc_poly = std::make_shared<std::string>();
  auto cc_timings = std::make_shared<bool>(false);
  auto cc_large = std::make_shared<bool>(false);
  cm->add_option("--family", *cc_family, "psu3, sz, or fixture")->required();
  cm->add_option("--fixture", *cc_fixture, "fixture name when --family fixture");
  cm->add_option("--n", *cc_n, "family parameter (default 1)");
  cm->add_option("--max-degree", *cc_deg, "certification degree bound (default 8, cap 12)");
  cm->add_option("--report", *cc_report, "write the JSON report to this file");
  cm->add_option("--field-poly", *cc_poly, "extension modulus override, binary string");
  cm->add_flag("--timings", *cc_timings,
               "include wall-clock stage timings (reports are then not byte-reproducible)");
  cm->add_flag("--large", *cc_large, "allow group orders above the default caps");
  cm->callback([cc_family, cc_fixture, cc_n, cc_deg, cc_report, cc_poly, cc_timings, cc_large,
                &action] {
    action = [cc_family, cc_fixture, cc_n, cc_deg, cc_report, cc_poly, cc_timings, cc_large] {
      RunConfig cfg;
      cfg.family = *cc_family;
      cfg.fixture = *cc_fixture;
      cfg.n = *cc_n;
      cfg.max_degree = *cc_deg;
      cfg.report_path = *cc_report;
      cfg.timings = *cc_timings;
      cfg.large = *cc_large;
      cfg.field_poly = cli_detail::parse_poly_bits(*cc_poly);

      CMReport rep;
      if (cfg.family == "fixture") {
        require_usage(!cfg.fixture.empty(), "--family fixture needs --fixture <name>");
        rep = cm_report_fixture(cfg.fixture, cfg.max_degree);
      } else {
        rep = cm_report(cfg.family, cfg.n, cfg.max_degree, cfg.field_poly);
      }

      nlohmann::ordered_json j = report_json(rep, cfg);
      if (cfg.report_path.empty()) {
        std::cout << report_text(j);
      } else {
        write_report_file(j, cfg.report_path);
        std::cout << "report written to " << cfg.report_path << "\n";
      }
      std::cerr << "verdict: " << rep.verdict << " (degree bound " << rep.max_degree << ")\n";

      bool lemma_fail = false;
      for (const LemmaCheck& c : rep.lemmas) lemma_fail = lemma_fail || !c.pass;
      return (rep.verdict == "failed" || lemma_fail) ? 1 : 0;
    };
  });

  /* ---- fixtures ---- */
  auto* fixtures = app.add_subcommand("fixtures", "built-in reference groups");
  fixtures->require_subcommand(1);
  auto* list = fixtures->add_subcommand("list", "list the built-in groups");
  list->callback([&action] {
    action = [] {
      for (const Fixture& f : fixture_registry()) {
        GroupTable g = f.build();
        std::cout << f.name << " " << g.order << " " << f.description << "\n";
      }
      return 0;
    };
  });
  auto* dump = fixtures->add_subcommand("dump", "write a built-in group as a gtab file");
  auto fd_name = std::make_shared<std::string>();
  auto fd_out = std::make_shared<std::string>();
  dump->add_option("--name", *fd_name, "fixture name")->required();
  dump->add_option("--out", *fd_out, "output path (default <name>.gtab)");
  dump->callback([fd_name, fd_out, &action] {
    action = [fd_name, fd_out] {
      GroupTable g = build_fixture(*fd_name);
      std::string path = fd_out->empty() ? *fd_name + ".gtab" : *fd_out;
      save_gtab_file(g, path);
      std::cout << "wrote " << path << " (order " << g.order << ")\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
    return action ? action() : 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const check_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sylcoh
