#pragma once

// Command-line front end: riley, table, classify, epi, verify.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "riley/classify.hpp"
#include "riley/epimorphism.hpp"
#include "riley/rep_verify.hpp"
#include "riley/riley.hpp"
#include "riley/serialize.hpp"
#include "riley/two_bridge.hpp"

namespace riley::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kInputError = 2,
  kIoError = 3,
  kNumericalFailure = 4,
};

enum class Format { kText, kCsv, kJson };

struct CliConfig {
  std::string command;
  std::vector<std::int64_t> numbers;  // positional alpha/beta values
  std::int64_t max_alpha = 0;
  bool scan = false;
  bool torus_check = false;
  Format format = Format::kText;
  std::string cache_path;
  unsigned jobs = 1;
  double root_tol = kDefaultRootTolerance;
  double rep_tol = kDefaultRepTolerance;
};

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

inline std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

/// Accepts odd or even beta; even beta is normalized with a note on stderr.
inline TwoBridgePair read_pair(std::int64_t alpha, std::int64_t beta, std::ostream& err) {
  try {
    if (beta % 2 == 0 && beta != 0 && alpha % 2 != 0) {
      auto p = normalize_odd(alpha, beta);
      err << "note: S(" << alpha << "," << beta << ") normalized to " << p << "\n";
      return p;
    }
    return TwoBridgePair::validate(alpha, beta);
  } catch (const InvalidPair& e) {
    throw CliError(kInputError, "invalid pair S(" + std::to_string(alpha) + "," + std::to_string(beta) +
                                    "): " + e.what());
  }
}

/// Even bounds are rounded down to the nearest odd value.
inline std::int64_t read_max_alpha(std::int64_t max_alpha, std::ostream& err) {
  if (max_alpha % 2 == 0) {
    err << "warning: --max-alpha " << max_alpha << " rounded down to " << max_alpha - 1 << "\n";
    --max_alpha;
  }
  if (max_alpha < 3) throw CliError(kInputError, "--max-alpha must be at least 3");
  return max_alpha;
}

// --- riley ---------------------------------------------------------------

inline int cmd_riley(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.numbers.size() != 2) throw CliError(kInputError, "riley expects ALPHA BETA");
  const auto rec = make_record(read_pair(cfg.numbers[0], cfg.numbers[1], err));
  switch (cfg.format) {
    case Format::kJson: out << to_json(rec).dump() << "\n"; break;
    case Format::kCsv: out << kTableCsvHeader << "\n" << table_csv_row(rec) << "\n"; break;
    case Format::kText:
      out << rec.pair << "\n"
          << "eps = " << render_eps(rec.eps) << "\n"
          << "phi = " << rec.phi << "\n";
      break;
  }
  return kOk;
}

// --- table ---------------------------------------------------------------

inline std::string cache_path_from(const CliConfig& cfg) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv("RILEY_CACHE")) return env;
  return {};
}

/// Verifies an existing cache against recomputation, then rewrites it.
inline void refresh_cache(const std::string& path, const RileyTable& table) {
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) throw CliError(kIoError, "cannot read cache " + path);
    try {
      verify_records(read_jsonl(in));
    } catch (const FormatError& e) {
      throw CliError(kIoError, "cache " + path + " is corrupt: " + e.what());
    }
  }
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw CliError(kIoError, "cannot write cache " + path);
  write_jsonl(os, table.records());
  if (!os.flush()) throw CliError(kIoError, "cannot write cache " + path);
}

inline int cmd_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto max_alpha = read_max_alpha(cfg.max_alpha, err);
  const auto table = build_table(max_alpha, false, cfg.jobs);
  if (const auto path = cache_path_from(cfg); !path.empty()) refresh_cache(path, table);

  switch (cfg.format) {
    case Format::kJson: write_jsonl(out, table.records()); break;
    case Format::kCsv:
      out << kTableCsvHeader << "\n";
      for (const auto& r : table.records()) out << table_csv_row(r) << "\n";
      break;
    case Format::kText:
      for (const auto& r : table.records()) out << r.pair << "  phi = " << r.phi << "\n";
      break;
  }
  return kOk;
}

// --- classify ------------------------------------------------------------

inline int cmd_classify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto max_alpha = read_max_alpha(cfg.max_alpha, err);
  const auto report = full_report(max_alpha, cfg.jobs);

  switch (cfg.format) {
    case Format::kJson: out << to_json(report).dump(2) << "\n"; break;
    case Format::kCsv:
      out << "alpha,sbar_size,classes\n";
      for (const auto& c : report.per_alpha) out << c.alpha << "," << c.sbar_size << "," << c.class_count << "\n";
      break;
    case Format::kText: {
      out << "max alpha: " << max_alpha << "\n"
          << "pairs in S+: " << report.table.records().size() << "\n"
          << "knot classes up to mirror: " << report.classes.size() << "\n"
          << "S-bar size: " << report.injectivity.sbar_size << "\n";
      out << "per alpha (alpha: S-bar size / classes):\n";
      for (const auto& c : report.per_alpha)
        out << "  " << c.alpha << ": " << c.sbar_size << " / " << c.class_count << "\n";
      out << "pairs sharing a polynomial: " << report.equal_polynomials.duplicate_groups.size()
          << " groups, " << report.equal_polynomials.violations.size() << " non-equivalent\n";
      for (const auto& v : report.equal_polynomials.violations)
        out << "  VIOLATION " << v.first << " ~ " << v.second << "  phi = " << v.phi << "\n";
      out << "Riley map on S-bar: "
          << (report.injectivity.duplicate_groups.empty() ? "injective" : "NOT injective") << "\n";
      for (const auto& g : report.injectivity.duplicate_groups) {
        out << "  COLLISION";
        for (const auto& p : g.members) out << " " << p;
        out << "\n";
      }
      out << "divisibility epimorphisms across alpha: " << report.epi_pairs.size() << "\n";
      for (const auto& e : report.epi_pairs) out << "  " << e.source << " -> " << e.target << "\n";
      out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
      break;
    }
  }
  return report.passed() ? kOk : kViolation;
}

// --- epi -----------------------------------------------------------------

inline void print_epi_text(std::ostream& out, const EpiPair& e) {
  out << e.source << " -> " << e.target << ": factor: yes";
  if (e.integral()) {
    out << "; psi = " << *e.cofactor;
  } else {
    out << " (non-integral cofactor); psi = " << cofactor_json(e).dump();
  }
  out << "\n";
}

inline int cmd_epi(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.scan) {
    if (!cfg.numbers.empty()) throw CliError(kInputError, "epi --scan takes no pairs");
    const auto pairs = scan_epi_pairs(read_max_alpha(cfg.max_alpha, err), cfg.jobs);
    switch (cfg.format) {
      case Format::kJson: {
        Json arr = Json::array();
        for (const auto& e : pairs) arr.push_back(to_json(e));
        out << arr.dump(2) << "\n";
        break;
      }
      case Format::kCsv:
        out << kEpiCsvHeader << "\n";
        for (const auto& e : pairs) out << epi_csv_row(e) << "\n";
        break;
      case Format::kText:
        for (const auto& e : pairs) print_epi_text(out, e);
        out << pairs.size() << " pair(s)\n";
        break;
    }
    return kOk;
  }

  if (cfg.numbers.size() != 4) throw CliError(kInputError, "epi expects ALPHA1 BETA1 ALPHA2 BETA2 or --scan");
  const auto k1 = read_pair(cfg.numbers[0], cfg.numbers[1], err);
  const auto k2 = read_pair(cfg.numbers[2], cfg.numbers[3], err);
  const auto e = detects_epimorphism(k1, k2);
  switch (cfg.format) {
    case Format::kJson: {
      Json j{{"source", to_json(k1)}, {"target", to_json(k2)}, {"factor", e.has_value()}};
      if (e) {
        j["integral"] = e->integral();
        j["cofactor"] = cofactor_json(*e);
      }
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << kEpiCsvHeader << "\n";
      if (e) out << epi_csv_row(*e) << "\n";
      break;
    case Format::kText:
      if (e)
        print_epi_text(out, *e);
      else
        out << k1 << " -> " << k2 << ": factor: no\n";
      break;
  }
  return kOk;
}

// --- verify --------------------------------------------------------------

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.numbers.size() != 2) throw CliError(kInputError, "verify expects ALPHA BETA");
  const auto p = read_pair(cfg.numbers[0], cfg.numbers[1], err);

  std::optional<RepCheckReport> found;
  try {
    found = verify_representations(p, cfg.root_tol, cfg.rep_tol, cfg.jobs);
  } catch (const RootFindError& e) {
    err << "error: " << e.what() << "\n";
    for (std::size_t i = 0; i < e.iterate().size(); ++i)
      err << "  z = " << format_complex(e.iterate()[i]) << "  |phi| = " << format_double(e.residuals()[i]) << "\n";
    return kNumericalFailure;
  }
  const RepCheckReport& report = *found;

  bool ok = report.passed();
  std::optional<bool> all_real;
  if (cfg.torus_check) {
    all_real = std::all_of(report.roots.begin(), report.roots.end(),
                           [&](const RootCheck& r) { return std::abs(r.u.imag()) < cfg.root_tol; });
    if (is_torus(p) && !*all_real) ok = false;
  }

  switch (cfg.format) {
    case Format::kJson: {
      Json j = to_json(report);
      if (all_real) j["all_roots_real"] = *all_real;
      j["passed"] = ok;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "re,im,multiplicity,phi_residual,relator_residual,nonabelian,passed\n";
      for (const auto& r : report.roots) {
        out << Json(r.u.real()).dump() << "," << Json(r.u.imag()).dump() << "," << r.multiplicity << ","
            << Json(r.phi_residual).dump() << "," << Json(r.relator_residual).dump() << ","
            << (r.nonabelian ? "true" : "false") << "," << (r.passed ? "true" : "false") << "\n";
      }
      break;
    case Format::kText:
      out << p << "  phi = " << report.phi << "\n";
      out << "roots: " << report.root_count() << "\n";
      for (const auto& r : report.roots) {
        out << "  u = " << format_complex(r.u);
        if (r.multiplicity > 1) out << "  (multiplicity " << r.multiplicity << ")";
        out << "  |phi| = " << format_double(r.phi_residual)
            << "  relator residual = " << format_double(r.relator_residual) << "  "
            << (r.passed ? "ok" : "FAIL") << "\n";
      }
      if (all_real) out << "all roots real: " << (*all_real ? "yes" : "no") << "\n";
      out << "all checks passed: " << (ok ? "yes" : "no") << "\n";
      break;
  }
  return ok ? kOk : kViolation;
}

// --- entry point ---------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Riley polynomials of 2-bridge knots S(alpha,beta)", "riley"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--cache", cfg.cache_path, "JSON-lines cache for the table command (default: $RILEY_CACHE)");
  app.add_option("--jobs", cfg.jobs, "Worker threads; 0 uses every core")->capture_default_str();
  app.add_option("--root-tol", cfg.root_tol, "Root tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--rep-tol", cfg.rep_tol, "Relator residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* riley = app.add_subcommand("riley", "Epsilon sequence and Riley polynomial of S(alpha,beta)");
  riley->add_option("pair", cfg.numbers, "Schubert parameters")->expected(2)->required();

  auto* table = app.add_subcommand("table", "Riley polynomials of every pair in S+ up to --max-alpha");
  table->add_option("--max-alpha", cfg.max_alpha, "Largest alpha")->required();

  auto* classify = app.add_subcommand("classify", "Equal-polynomial, S-bar injectivity and epimorphism scans");
  classify->add_option("--max-alpha", cfg.max_alpha, "Largest alpha")->required();

  auto* epi = app.add_subcommand("epi", "Epimorphism detection by Riley polynomial divisibility");
  epi->add_option("pairs", cfg.numbers, "ALPHA1 BETA1 ALPHA2 BETA2");
  epi->add_flag("--scan", cfg.scan, "Scan all pairs in S+ with alpha1 > alpha2");
  epi->add_option("--max-alpha", cfg.max_alpha, "Largest alpha for --scan");

  auto* verify = app.add_subcommand("verify", "Roots of the Riley polynomial and the relator check at each");
  verify->add_option("pair", cfg.numbers, "Schubert parameters")->expected(2)->required();
  verify->add_flag("--torus-check", cfg.torus_check, "Also report whether every root is real");

  for (auto* sub : {riley, table, classify, epi, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  cfg.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kText;
  if (cfg.jobs == 0) cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "riley") return cmd_riley(cfg, out, err);
    if (cfg.command == "table") return cmd_table(cfg, out, err);
    if (cfg.command == "classify") return cmd_classify(cfg, out, err);
    if (cfg.command == "epi") {
      if (cfg.scan && cfg.max_alpha == 0) throw CliError(kInputError, "epi --scan requires --max-alpha");
      return cmd_epi(cfg, out, err);
    }
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  }
  return kInputError;
}

}  // namespace riley::cli
