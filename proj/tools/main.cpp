// Command-line front end: exact counts, table reproduction, formula-vs-sweep
// verification, cycle index rendering, and digraph export.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicirc/counting.hpp"
#include "dicirc/cycles.hpp"
#include "dicirc/numth.hpp"
#include "dicirc/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitUsage = 2;

using dicirc::BigInt;
using dicirc::CountReport;
using dicirc::GroupTag;

void require_prime(std::uint32_t p) {
  if (!dicirc::is_prime(p)) throw CLI::ValidationError("--p", "p must be prime");
}

std::string degree_line(const std::vector<BigInt>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

struct CountFlags {
  std::uint32_t p = 0;
  std::int64_t k = -1;
  bool connected = false;
  bool by_degree = false;
  std::string format = "text";
  std::string group = "";
};

int run_count(const CountFlags& flags) {
  require_prime(flags.p);
  std::vector<CountReport> reports;
  if (flags.p == 2) {
    const dicirc::QuaternionReports q = dicirc::quaternion_counts();
    if (flags.group.empty() || flags.group == "alpha") reports.push_back(q.alpha);
    if (flags.group.empty() || flags.group == "full") reports.push_back(q.full);
  } else {
    reports.push_back(dicirc::full_report(flags.p));
  }

  if (flags.format == "json") {
    std::cout << dicirc::reports_to_json(reports);
    return kExitOk;
  }

  const bool tag_lines = reports.size() > 1;
  for (const CountReport& report : reports) {
    std::ostringstream line;
    if (flags.k >= 0) {
      const std::size_t k = static_cast<std::size_t>(flags.k);
      if (k >= report.by_degree.size())
        throw CLI::ValidationError("--k", "k must lie in [0, 4p-1]");
      line << (flags.connected ? report.connected_by_degree[k] : report.by_degree[k]);
    } else if (flags.by_degree) {
      line << degree_line(flags.connected ? report.connected_by_degree : report.by_degree);
    } else if (flags.connected) {
      line << report.connected;
    } else if (flags.p == 2) {
      line << "total " << report.total << ", connected " << report.connected;
    } else {
      std::cout << dicirc::report_to_text(report);
      continue;
    }
    std::cout << line.str();
    if (tag_lines) std::cout << " (" << dicirc::to_string(report.group_tag) << ")";
    std::cout << "\n";
  }
  return kExitOk;
}

int run_table(std::uint32_t p_max, const std::string& format) {
  const dicirc::TableFormat table_format =
      format == "csv" ? dicirc::TableFormat::csv : dicirc::TableFormat::text;
  std::cout << dicirc::render_connected_table(p_max, table_format);
  return kExitOk;
}

int run_verify(std::uint32_t p, const dicirc::SweepOptions& options) {
  require_prime(p);
  const dicirc::VerificationReport report = dicirc::verify_formulas(p, options);
  std::cout << dicirc::render(report);
  return report.all_pass() ? kExitOk : kExitVerifyMismatch;
}

int run_cycle_index(std::uint32_t p) {
  require_prime(p);
  dicirc::CycleIndexPoly poly;
  if (p == 2) {
    std::cout << "# order 8: cycle index of the (s,t) family, which is a proper\n"
                 "# subgroup of the full automorphism group at this order\n";
    poly = dicirc::cycle_index_direct(2);
  } else {
    poly = dicirc::cycle_index(p);
  }
  std::cout << dicirc::to_string(poly) << "\n";
  dicirc::Rational sum = 0;
  for (const auto& [monomial, coeff] : poly.terms) {
    (void)monomial;
    sum += coeff;
  }
  std::cout << "# coefficient sum = " << sum << "\n";
  std::cout << "# evaluation at 2 = " << dicirc::evaluate_at_constant(poly, 2) << "\n";
  return kExitOk;
}

struct ExportFlags {
  std::uint32_t p = 0;
  std::int64_t k = -1;
  bool connected = false;
  std::string format = "text";
  std::string out_dir = ".";
  dicirc::SweepOptions sweep;
};

int run_export(const ExportFlags& flags) {
  require_prime(flags.p);
  if (flags.k < 0 || flags.k > 4 * flags.p - 1)
    throw CLI::ValidationError("--k", "k must lie in [0, 4p-1]");
  const std::uint32_t k = static_cast<std::uint32_t>(flags.k);
  const std::vector<std::uint64_t> reps =
      dicirc::representatives(flags.p, k, flags.connected, GroupTag::alpha_family, flags.sweep);

  std::filesystem::create_directories(flags.out_dir);
  const int hex_digits = (4 * static_cast<int>(flags.p) - 1 + 3) / 4;
  const std::string extension = flags.format == "dot" ? ".dot" : ".txt";
  for (std::uint64_t mask : reps) {
    std::ostringstream name;
    name << "cay_p" << flags.p << "_k" << k << "_0x" << std::hex << std::setw(hex_digits)
         << std::setfill('0') << mask;
    const std::filesystem::path path =
        std::filesystem::path(flags.out_dir) / (name.str() + extension);
    std::ofstream file(path);
    file << (flags.format == "dot" ? dicirc::render_dot(flags.p, mask)
                                   : dicirc::render_arc_list(flags.p, mask));
    std::cout << path.string() << "\n";
  }
  std::cout << "wrote " << reps.size() << " file" << (reps.size() == 1 ? "" : "s") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of Cayley digraphs over dicyclic groups T_{4p}"};
  app.require_subcommand(1);

  CountFlags count_flags;
  CLI::App* count = app.add_subcommand("count", "Isomorphism-class counts for one prime");
  count->add_option("--p", count_flags.p, "prime p (order 4p)")->required();
  count->add_option("--k", count_flags.k, "restrict to out-degree k");
  count->add_flag("--connected", count_flags.connected, "connected digraphs only");
  count->add_flag("--by-degree", count_flags.by_degree, "print the whole out-degree vector");
  count->add_option("--format", count_flags.format, "text|json")
      ->check(CLI::IsMember({"text", "json", "json-like-structured"}));
  count->add_option("--group", count_flags.group, "p=2 only: alpha|full")
      ->check(CLI::IsMember({"alpha", "full"}));

  std::uint32_t p_max = 11;
  std::string table_format = "text";
  CLI::App* table = app.add_subcommand("table", "Connected counts per out-degree, one row per prime");
  table->add_option("--p-max", p_max, "largest prime to include")->required();
  table->add_option("--format", table_format, "text|csv")->check(CLI::IsMember({"text", "csv"}));

  std::uint32_t verify_p = 3;
  dicirc::SweepOptions verify_options;
  CLI::App* verify = app.add_subcommand("verify", "Compare every formula against the orbit sweep");
  verify->add_option("--p", verify_p, "prime p")->required();
  verify->add_option("--budget", verify_options.budget, "max subsets x group size");
  verify->add_option("--partitions", verify_options.partitions, "parallel sweep partitions");

  std::uint32_t index_p = 3;
  CLI::App* cycle = app.add_subcommand("cycle-index", "Render the cycle index polynomial");
  cycle->add_option("--p", index_p, "prime p")->required();

  ExportFlags export_flags;
  CLI::App* exporter = app.add_subcommand("export", "Write one digraph file per orbit representative");
  exporter->add_option("--p", export_flags.p, "prime p")->required();
  exporter->add_option("--k", export_flags.k, "out-degree")->required();
  exporter->add_flag("--connected", export_flags.connected, "connected representatives only");
  exporter->add_option("--format", export_flags.format, "text|dot")
      ->check(CLI::IsMember({"text", "dot"}));
  exporter->add_option("--out-dir", export_flags.out_dir, "output directory");
  exporter->add_option("--budget", export_flags.sweep.budget, "max subsets x group size");
  exporter->add_option("--partitions", export_flags.sweep.partitions, "parallel sweep partitions");

  try {
    app.parse(argc, argv);
    if (count->parsed()) {
      if (count_flags.format == "json-like-structured") count_flags.format = "json";
      return run_count(count_flags);
    }
    if (table->parsed()) return run_table(p_max, table_format);
    if (verify->parsed()) return run_verify(verify_p, verify_options);
    if (cycle->parsed()) return run_cycle_index(index_p);
    if (exporter->parsed()) return run_export(export_flags);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const dicirc::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
