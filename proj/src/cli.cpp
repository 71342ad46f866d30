// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "picard/analysis.hpp"
#include "picard/reach_table.hpp"
#include "picard/serialize.hpp"

namespace picard::cli {
namespace {

struct Options {
  unsigned threads = 1;
  int g = 0;
  Value rho = 0;
  int g_min = 1;
  int g_max = 0;
  int ell = 0;
  std::string format = "text";
  std::string out_path;
  bool all_shapes = false;
  std::size_t max_shapes = 1000;
};

int do_compute(ReachTable& table, const Options& o, std::ostream& out) {
  const PicardSet& r = table.compute_R(o.g);
  if (o.format == "json") {
    out << set_to_json(r);
  } else if (o.format == "csv") {
    out << set_to_csv(r);
  } else {
    out << set_to_text(r);
  }
  return kOk;
}

int do_density(ReachTable& table, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.g_max < o.g_min) {
    err << "density: --g-max must be >= --g-min\n";
    return kUsage;
  }
  std::vector<DensityRow> rows;
  for (int g = o.g_min; g <= o.g_max; ++g) {
    const PicardSet& r = table.compute_R(g);
    rows.push_back({g, r.size(), static_cast<Value>(g) * g, density(table, g)});
  }
  const std::string text = o.format == "text" && o.out_path.empty() ? density_to_text(rows) : density_to_csv(rows);
  if (o.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) {
    err << "density: cannot open " << o.out_path << '\n';
    return kUsage;
  }
  file << text;
  file.close();
  if (!file) {
    err << "density: write to " << o.out_path << " failed\n";
    return kUsage;
  }
  out << "wrote " << rows.size() << " row(s) to " << o.out_path << '\n';
  return kOk;
}

int do_cert(ReachTable& table, const Options& o, std::ostream& out) {
  const auto cert = table.find_certificate(o.g, o.rho);
  if (!cert) {
    out << "UNREALIZABLE\n";
    return kNegative;
  }
  if (o.all_shapes) {
    out << certificate_with_shapes_to_json(*cert, table.enumerate_shapes(o.g, o.rho, o.max_shapes));
  } else {
    out << decomposition_to_json(*cert);
  }
  return kOk;
}

int do_verify(ReachTable& table, const Options& o, std::ostream& out) {
  std::size_t applicable = 0;
  std::size_t failed = 0;
  for (int g = 1; g <= o.g_max; ++g) {
    const VerificationReport report = verify_theorems(table, g);
    out << report_to_text(report);
    for (const Check& c : report.checks) {
      if (!c.applicable) continue;
      ++applicable;
      if (!c.passed) ++failed;
    }
  }
  for (const DistributionOnset& onset : distribution_onsets(table, 4, o.g_max)) {
    out << "onset\tell=" << onset.ell << "\tfirst_g=";
    if (onset.first_g) {
      out << *onset.first_g;
    } else {
      out << "none";
    }
    out << "\tholds_for_all_larger=" << (onset.holds_for_all_larger ? "true" : "false") << "\ttested=" << onset.tested
        << '\n';
  }
  out << "summary\t" << applicable << " applicable check(s), " << failed << " failed\n";
  return failed == 0 ? kOk : kNegative;
}

int do_distribution(ReachTable& table, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.g < 4) {
    err << "distribution: requires --g >= 4\n";
    return kUsage;
  }
  const int threshold = large_threshold(o.g);
  if (o.ell < 0 || o.ell > threshold) {
    err << "distribution: --ell must lie in [0, " << threshold << "] for g = " << o.g << '\n';
    return kUsage;
  }
  const DistributionCheck check = verify_distribution(table, o.g, o.ell);
  out << distribution_to_text(check);
  return check.holds ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Realizable Picard numbers of complex abelian varieties", "picard"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads per row")->check(CLI::Range(1u, 256u));

  auto* compute = app.add_subcommand("compute", "Print R_g");
  compute->add_option("--g", o.g, "Dimension")->required()->check(CLI::PositiveNumber);
  compute->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* gaps = app.add_subcommand("gaps", "Print the maximal gaps of R_g");
  gaps->add_option("--g", o.g, "Dimension")->required()->check(CLI::PositiveNumber);

  auto* dens = app.add_subcommand("density", "Tabulate #R_g / g^2");
  dens->add_option("--g-min", o.g_min, "First dimension")->required()->check(CLI::PositiveNumber);
  dens->add_option("--g-max", o.g_max, "Last dimension")->required()->check(CLI::PositiveNumber);
  dens->add_option("--out", o.out_path, "CSV output path (stdout if omitted)");
  dens->add_option("--format", o.format, "Stdout format")->check(CLI::IsMember({"csv", "text"}));

  auto* cert = app.add_subcommand("cert", "Print a decomposition certificate");
  cert->add_option("--g", o.g, "Dimension")->required()->check(CLI::PositiveNumber);
  cert->add_option("--rho", o.rho, "Picard number")->required();
  cert->add_flag("--all-shapes", o.all_shapes, "Also list every decomposition shape");
  cert->add_option("--max-shapes", o.max_shapes, "Shape enumeration limit")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the theorem checks for g = 1..G");
  verify->add_option("--g-max", o.g_max, "Largest dimension")->required()->check(CLI::PositiveNumber);

  auto* dist = app.add_subcommand("distribution", "Compare the top of R_g with its translates");
  dist->add_option("--g", o.g, "Dimension")->required()->check(CLI::PositiveNumber);
  dist->add_option("--ell", o.ell, "Number of translates")->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    EngineConfig config = EngineConfig::from_environment();
    config.threads = o.threads;
    ReachTable table(config);
    if (*compute) return do_compute(table, o, out);
    if (*gaps) {
      out << gaps_to_text(gaps_of(table.compute_R(o.g)));
      return kOk;
    }
    if (*dens) return do_density(table, o, out, err);
    if (*cert) return do_cert(table, o, out);
    if (*verify) return do_verify(table, o, out);
    if (*dist) return do_distribution(table, o, out, err);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace picard::cli
