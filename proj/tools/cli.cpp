#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqcheck/combinatorics.hpp"
#include "seqcheck/power_series.hpp"

namespace seqcheck::cli {

namespace {

// A rendered cell. Numbers are small machine integers (indices, valuations);
// big integers and rationals travel as text so JSON consumers never round them.
struct Cell {
  enum class Kind { Number, Text, Bool };
  std::string text;
  Kind kind = Kind::Text;

  static Cell number(std::int64_t v) { return {std::to_string(v), Kind::Number}; }
  static Cell text_of(std::string s) { return {std::move(s), Kind::Text}; }
  static Cell boolean(bool b) { return {b ? "true" : "false", Kind::Bool}; }
};

struct Grid {
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

void render_csv(const Grid& g, std::ostream& out) {
  for (std::size_t i = 0; i < g.headers.size(); ++i) out << (i ? "," : "") << g.headers[i];
  out << '\n';
  for (const auto& row : g.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& t = row[i].text;
      const bool quote = t.find_first_of(",\"\n") != std::string::npos;
      out << (i ? "," : "");
      if (quote) {
        out << '"';
        for (char c : t) out << (c == '"' ? "\"\"" : std::string(1, c));
        out << '"';
      } else {
        out << t;
      }
    }
    out << '\n';
  }
}

void render_json(const Grid& g, std::ostream& out) {
  out << '[';
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < g.headers.size(); ++i) {
      const Cell& c = g.rows[r][i];
      switch (c.kind) {
        case Cell::Kind::Number: obj[g.headers[i]] = std::stoll(c.text); break;
        case Cell::Kind::Bool: obj[g.headers[i]] = c.text == "true"; break;
        case Cell::Kind::Text: obj[g.headers[i]] = c.text; break;
      }
    }
    out << (r ? ",\n " : "\n ") << obj.dump();
  }
  out << (g.rows.empty() ? "]\n" : "\n]\n");
}

void render_table(const Grid& g, std::ostream& out) {
  std::vector<std::size_t> width(g.headers.size());
  for (std::size_t i = 0; i < g.headers.size(); ++i) width[i] = g.headers[i].size();
  for (const auto& row : g.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].text.size());
  }
  auto line = [&](auto cell_text) {
    std::string s;
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string t = cell_text(i);
      if (i) s += "  ";
      s += std::string(width[i] - t.size(), ' ') + t;
    }
    out << s << '\n';
  };
  line([&](std::size_t i) { return g.headers[i]; });
  for (const auto& row : g.rows) line([&](std::size_t i) { return row[i].text; });
}

void render(const Grid& g, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Csv: render_csv(g, out); break;
    case OutputFormat::Json: render_json(g, out); break;
    case OutputFormat::Table: render_table(g, out); break;
    case OutputFormat::Bfile: throw UsageError("bfile format applies only to integer sequence output");
  }
}

std::int64_t require_non_negative(std::int64_t v, const char* flag) {
  if (v < 0) throw UsageError(std::string(flag) + " must be non-negative, got " + std::to_string(v));
  return v;
}

std::int64_t require_positive(std::int64_t v, const char* flag) {
  if (v < 1) throw UsageError(std::string(flag) + " must be at least 1, got " + std::to_string(v));
  return v;
}

// Commands

struct TableArgs {
  std::int64_t max_n = 12;
  std::string method = "recurrence";
  std::string format = "csv";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const std::int64_t max_n = require_non_negative(a.max_n, "--max-n");
  const OutputFormat format = parse_format(a.format);

  if (a.method != "all") {
    const auto method = parse_method(a.method);
    if (!method) throw UsageError("unknown method: " + a.method);
    const auto records = compute_sequence(*method, max_n);
    if (format == OutputFormat::Bfile) {
      out << render_bfile(records);
      return kSuccess;
    }
    Grid g{{"n", "a_n"}, {}};
    for (const auto& r : records) g.rows.push_back({Cell::number(static_cast<std::int64_t>(r.n)), Cell::text_of(r.value.to_string())});
    render(g, format, out);
    return kSuccess;
  }

  if (format == OutputFormat::Bfile) throw UsageError("bfile output needs a single --method");
  std::vector<std::vector<SequenceRecord>> columns;
  Grid g{{"n"}, {}};
  for (MethodId m : kAllMethods) {
    columns.push_back(compute_sequence(m, max_n));
    g.headers.emplace_back(to_string(m));
  }
  g.headers.emplace_back("agree");
  bool all_agree = true;
  for (std::size_t n = 0; n <= static_cast<std::size_t>(max_n); ++n) {
    std::vector<Cell> row{Cell::number(static_cast<std::int64_t>(n))};
    bool agree = true;
    for (const auto& col : columns) {
      row.push_back(Cell::text_of(col[n].value.to_string()));
      agree = agree && col[n].value == columns.front()[n].value;
    }
    row.push_back(Cell::boolean(agree));
    all_agree = all_agree && agree;
    g.rows.push_back(std::move(row));
  }
  render(g, format, out);
  return all_agree ? kSuccess : kVerificationFailure;
}

struct VerifyArgs {
  std::int64_t max_n = 200;
  std::int64_t series_order = 64;
  std::string format = "table";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.n_max = require_non_negative(a.max_n, "--max-n");
  options.series_order = require_non_negative(a.series_order, "--series-order");
  const OutputFormat format = parse_format(a.format);
  if (format == OutputFormat::Bfile) throw UsageError("bfile format applies only to integer sequence output");

  const VerificationReport report = cross_verify(options);

  if (format == OutputFormat::Table) {
    std::size_t name_width = 0;
    for (const auto& c : report.checks) name_width = std::max(name_width, c.name.size());
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(name_width - c.name.size() + 2, ' ') << c.range;
      if (c.counterexample) {
        out << "  first counterexample " << c.counterexample->index << ": expected " << c.counterexample->expected
            << ", got " << c.counterexample->actual;
      }
      out << '\n';
      passed += c.passed ? 1 : 0;
    }
    out << passed << '/' << report.checks.size() << " checks passed\n";
  } else {
    Grid g{{"name", "status", "range", "index", "expected", "actual"}, {}};
    for (const auto& c : report.checks) {
      const Counterexample ce = c.counterexample.value_or(Counterexample{});
      g.rows.push_back({Cell::text_of(c.name), Cell::text_of(c.passed ? "pass" : "fail"), Cell::text_of(c.range),
                        Cell::text_of(ce.index), Cell::text_of(ce.expected), Cell::text_of(ce.actual)});
    }
    render(g, format, out);
  }

  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed && c.counterexample) {
        err << "verification failed: " << c.name << " at " << c.counterexample->index << " (expected "
            << c.counterexample->expected << ", got " << c.counterexample->actual << ")\n";
        break;
      }
    }
    return kVerificationFailure;
  }
  return kSuccess;
}

struct ExportArgs {
  std::int64_t max_n = 100;
  std::string out_path;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  const std::int64_t max_n = require_non_negative(a.max_n, "--max-n");
  const std::string body = render_bfile(a_recurrence(max_n));
  std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open " + a.out_path + " for writing");
  file.write(body.data(), static_cast<std::streamsize>(body.size()));
  file.close();
  if (!file) throw UsageError("failed writing " + a.out_path);
  out << "wrote " << (max_n + 1) << " terms to " << a.out_path << '\n';
  return kSuccess;
}

struct ScanArgs {
  std::int64_t prime = 2;
  std::int64_t max_n = 100;
  std::string format = "csv";
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const Integer p(a.prime);
  if (a.prime < 2 || !is_prime(p)) throw UsageError("--prime must be prime, got " + std::to_string(a.prime));
  const std::int64_t max_n = require_positive(a.max_n, "--max-n");
  const OutputFormat format = parse_format(a.format);
  Grid g{{"n", "valuation", "digitsum", "holds"}, {}};
  for (const auto& row : valuation_scan(p, max_n)) {
    g.rows.push_back({Cell::number(row.n), Cell::number(row.lhs), Cell::number(row.rhs), Cell::boolean(row.holds)});
  }
  render(g, format, out);
  return kSuccess;
}

struct GenocchiArgs {
  std::int64_t max_n = 20;
  std::string format = "csv";
};

int cmd_genocchi(const GenocchiArgs& a, std::ostream& out, std::ostream& err) {
  const std::int64_t max_n = require_non_negative(a.max_n, "--max-n");
  const OutputFormat format = parse_format(a.format);
  const auto egf = genocchi_egf_recurrence(max_n);
  const auto seidel = genocchi_seidel(max_n);
  for (std::size_t n = 0; n <= static_cast<std::size_t>(max_n); ++n) {
    if (egf[n] != seidel[n]) {
      err << "Genocchi algorithms disagree at n = " << n << ": " << egf[n] << " vs " << seidel[n] << '\n';
      return kVerificationFailure;
    }
  }
  if (format == OutputFormat::Bfile) {
    std::vector<SequenceRecord> records;
    for (std::size_t n = 0; n < egf.values.size(); ++n) records.push_back({n, egf[n], MethodId::Recurrence});
    out << render_bfile(records);
    return kSuccess;
  }
  Grid g{{"n", "G_n"}, {}};
  for (std::size_t n = 0; n < egf.values.size(); ++n) {
    g.rows.push_back({Cell::number(static_cast<std::int64_t>(n)), Cell::text_of(egf[n].to_string())});
  }
  render(g, format, out);
  return kSuccess;
}

struct StirlingArgs {
  std::int64_t kind = 1;
  std::int64_t max_n = 10;
  std::string format = "csv";
};

int cmd_stirling(const StirlingArgs& a, std::ostream& out) {
  if (a.kind != 1 && a.kind != 2) throw UsageError("--kind must be 1 or 2, got " + std::to_string(a.kind));
  const std::int64_t max_n = require_non_negative(a.max_n, "--max-n");
  const OutputFormat format = parse_format(a.format);
  if (format == OutputFormat::Bfile) throw UsageError("bfile format applies only to integer sequence output");
  const auto rows = static_cast<std::size_t>(max_n);
  const StirlingFirstTable first(a.kind == 1 ? rows : 0);
  const StirlingSecondTable second(a.kind == 2 ? rows : 0);
  auto entry = [&](std::size_t n, std::size_t k) -> const Integer& {
    return a.kind == 1 ? first.at(n, k) : second.at(n, k);
  };

  if (format == OutputFormat::Table) {
    for (std::size_t n = 0; n <= rows; ++n) {
      out << n << ':';
      for (std::size_t k = 0; k <= n; ++k) out << ' ' << entry(n, k);
      out << '\n';
    }
    return kSuccess;
  }
  Grid g{{"n", "k", "value"}, {}};
  for (std::size_t n = 0; n <= rows; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      g.rows.push_back({Cell::number(static_cast<std::int64_t>(n)), Cell::number(static_cast<std::int64_t>(k)),
                        Cell::text_of(entry(n, k).to_string())});
    }
  }
  render(g, format, out);
  return kSuccess;
}

struct SeriesArgs {
  std::string name = "f";
  std::int64_t order = 8;
  std::string format = "csv";
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  const auto order = static_cast<std::size_t>(require_non_negative(a.order, "--order"));
  const OutputFormat format = parse_format(a.format);
  if (format == OutputFormat::Bfile) throw UsageError("bfile format applies only to integer sequence output");
  TruncatedSeries s(0);
  if (a.name == "f") {
    s = series_f(order);
  } else if (a.name == "g") {
    s = series_g(order);
  } else if (a.name == "h") {
    s = series_h(order);
  } else {
    throw UsageError("--name must be f, g or h, got " + a.name);
  }
  Grid g{{"j", "coefficient"}, {}};
  for (std::size_t j = 0; j <= s.order(); ++j) {
    g.rows.push_back({Cell::number(static_cast<std::int64_t>(j)), Cell::text_of(s.coeff(j).to_string())});
  }
  render(g, format, out);
  return kSuccess;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "bfile") return OutputFormat::Bfile;
  throw UsageError("unknown format: " + std::string(name));
}

std::string render_bfile(std::span<const SequenceRecord> records) {
  std::string body;
  for (const auto& r : records) {
    body += std::to_string(r.n);
    body += ' ';
    body += r.value.to_string();
    body += '\n';
  }
  return body;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation and verification of a_n = (n/2) a_(n-1) + (n-1)!", "seqcheck"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a_n for n = 0..max-n");
  table_cmd->add_option("--max-n", table.max_n, "Largest index (also the series order for egf)")->capture_default_str();
  table_cmd->add_option("--method", table.method, "all|recurrence|closed|genocchi-stirling|reduced|egf")->capture_default_str();
  table_cmd->add_option("--format", table.format, "table|csv|json|bfile")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check and report pass/fail");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest index for method agreement")->capture_default_str();
  verify_cmd->add_option("--series-order", verify.series_order, "Truncation order for series identities")->capture_default_str();
  verify_cmd->add_option("--format", verify.format, "table|csv|json")->capture_default_str();

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Write a b-file of a_0..a_max-n");
  export_cmd->add_option("--max-n", exp.max_n, "Largest index")->capture_default_str();
  export_cmd->add_option("--out", exp.out_path, "Output path")->required();

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Compare val_p(sum p^k/k) with s_p(n)");
  scan_cmd->add_option("--prime", scan.prime, "Prime p")->required();
  scan_cmd->add_option("--max-n", scan.max_n, "Largest n")->capture_default_str();
  scan_cmd->add_option("--format", scan.format, "table|csv|json")->capture_default_str();

  GenocchiArgs genocchi;
  auto* genocchi_cmd = app.add_subcommand("genocchi", "Print G_0..G_max-n");
  genocchi_cmd->add_option("--max-n", genocchi.max_n, "Largest index")->capture_default_str();
  genocchi_cmd->add_option("--format", genocchi.format, "table|csv|json|bfile")->capture_default_str();

  StirlingArgs stirling;
  auto* stirling_cmd = app.add_subcommand("stirling", "Print a Stirling triangle");
  stirling_cmd->add_option("--kind", stirling.kind, "1 (signed first kind) or 2")->required();
  stirling_cmd->add_option("--max-n", stirling.max_n, "Last row")->capture_default_str();
  stirling_cmd->add_option("--format", stirling.format, "table|csv|json")->capture_default_str();

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Print coefficients of f, g or h");
  series_cmd->add_option("--name", series.name, "f|g|h")->required();
  series_cmd->add_option("--order", series.order, "Truncation order")->capture_default_str();
  series_cmd->add_option("--format", series.format, "table|csv|json")->capture_default_str();

  try {
    // CLI11 consumes a reversed argument vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*export_cmd) return cmd_export(exp, out);
    if (*scan_cmd) return cmd_scan(scan, out);
    if (*genocchi_cmd) return cmd_genocchi(genocchi, out, err);
    if (*stirling_cmd) return cmd_stirling(stirling, out);
    if (*series_cmd) return cmd_series(series, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace seqcheck::cli
