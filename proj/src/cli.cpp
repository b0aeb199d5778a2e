// Copyright 2026 The dbcayley Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dbcayley/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

namespace dbcayley::cli {

namespace {

using nlohmann::json;

const BigInt kJsonExactLimit = BigInt(1) << 53;

struct Options {
  std::string spec;
  std::string format = "json";
  std::string out_path;
  std::uint64_t cap = kDefaultStateCap;
  unsigned workers = 0;
  bool warn_only = false;
  int k = 0;
  int t = 0;
  int r = 0;
  std::string d_range;
  std::string ell = "auto";
  bool undirected = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(part, &used);
      if (used == part.size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError("bad degree range '" + text + "' (expected D or LO..HI)");
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int d = to_int(text);
    return {d, d};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty degree range '" + text + "'");
  return {lo, hi};
}

std::string histogram_text(const std::vector<std::uint64_t>& histogram) {
  std::string out;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(histogram[i]);
  }
  return out;
}

void print_field(std::ostream& out, const std::string& name, const std::string& value) {
  out << std::left << std::setw(18) << name << value << '\n';
}

void print_report_table(std::ostream& out, const GraphReport& report, bool with_bfs) {
  print_field(out, "spec", report.spec.to_string());
  print_field(out, "directed", report.directed ? "yes" : "no");
  const GroupParams params = report.spec.params();
  print_field(out, "group", "Z_" + std::to_string(params.t()) + "^" + std::to_string(params.r()) +
                                " x| Z_" + std::to_string(params.r()));
  std::string order_formula;
  std::string degree_formula;
  switch (report.spec.kind) {
    case ConstructionKind::kShiftDirected:
      order_formula = "(k-1)(d-k+3)^(k-1)";
      degree_formula = "t+r-2";
      break;
    case ConstructionKind::kShiftUndirected:
      order_formula = "(k-1)(floor((d-k)/2)+2)^(k-1)";
      degree_formula = "2t+r-3";
      break;
    case ConstructionKind::kBlockDirected:
      order_formula = "r t^r";
      degree_formula = "t^l+(r-1)t^m-1";
      break;
    case ConstructionKind::kBlockUndirected:
      order_formula = "r t^r";
      degree_formula = "2t^l+(2r-3)t^m-r";
      break;
  }
  print_field(out, "order", order_formula + " = " + report.order.str());
  print_field(out, report.directed ? "outdegree" : "degree",
              degree_formula + " = " + std::to_string(report.validation.expected_size) +
                  " (generators: " + std::to_string(report.degree) + ")");
  if (report.validation.degree_slack) {
    print_field(out, "degree slack", std::to_string(*report.validation.degree_slack));
  }
  print_field(out, "claimed diameter", std::to_string(report.claimed_diameter));
  if (with_bfs) {
    print_field(out, "diameter", report.diameter ? std::to_string(*report.diameter) : "not computed");
    print_field(out, "histogram", histogram_text(report.histogram));
  }
  print_field(out, "moore ratio",
              to_string(report.moore_ratio) + " (" + to_decimal(report.moore_ratio, 6) + ")");
  print_field(out, "validation", report.validation.ok() ? "ok" : "FAILED");
  for (const std::string& d : report.discrepancies) print_field(out, "  !", d);
}

GraphReport build_report(const ConstructionSpec& spec) {
  const GeneratorSet set = build(spec);
  GraphReport report;
  report.spec = spec;
  report.order = construction_order(spec);
  report.degree = set.size();
  report.directed = set.directed();
  report.claimed_diameter = spec.claimed_diameter();
  report.validation = validate(set);
  const BigInt moore = moore_bound(static_cast<int>(std::max<std::size_t>(report.degree, 1)),
                                   report.claimed_diameter, report.directed);
  report.moore_ratio = Rational(report.order, moore);
  for (const std::string& failure : report.validation.failures) {
    report.discrepancies.push_back("validation: " + failure);
  }
  return report;
}

// Writes to --out when given, otherwise to out.
template <typename Writer>
void emit(const Options& opts, std::ostream& out, Writer&& writer) {
  if (opts.out_path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + opts.out_path + "' for writing");
  writer(file);
  if (!file) throw UsageError("write to '" + opts.out_path + "' failed");
}

int cmd_build(const Options& opts, std::ostream& out, std::ostream& err) {
  const ResolvedSpec resolved = resolve_spec(opts.spec);
  const GraphReport report = build_report(resolved.spec);
  emit(opts, out, [&](std::ostream& os) {
    if (opts.format == "table") {
      if (resolved.corollary) {
        print_field(os, "resolved", opts.spec + " -> " + resolved.spec.to_string());
      }
      print_report_table(os, report, false);
    } else {
      os << report_to_json(report).dump(2) << '\n';
    }
  });
  if (!report.validation.ok()) {
    err << "validation failed for " << report.spec.to_string() << '\n';
    return opts.warn_only ? kSuccess : kInvariantFailure;
  }
  return kSuccess;
}

int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
  const ResolvedSpec resolved = resolve_spec(opts.spec);
  const GraphReport report = verify_construction(resolved.spec, {opts.cap, opts.workers});
  if (report.refusal) {
    err << "refused: " << *report.refusal << '\n';
    return kResourceRefusal;
  }
  emit(opts, out, [&](std::ostream& os) {
    if (opts.format == "table") {
      print_report_table(os, report, true);
    } else {
      os << report_to_json(report).dump(2) << '\n';
    }
  });
  if (!report.discrepancies.empty()) {
    for (const std::string& d : report.discrepancies) err << "discrepancy: " << d << '\n';
    return opts.warn_only ? kSuccess : kInvariantFailure;
  }
  return kSuccess;
}

int cmd_compare(const Options& opts, std::ostream& out, std::ostream&) {
  const auto [lo, hi] = parse_range(opts.d_range);
  if (opts.k < 1 || lo < 1) throw UsageError("compare requires k >= 1 and d >= 1");
  const bool directed = !opts.undirected;
  std::vector<BoundRow> rows;
  for (int d = lo; d <= hi; ++d) rows.push_back(compare(d, opts.k, directed));

  emit(opts, out, [&](std::ostream& os) {
    if (opts.format == "table") {
      const std::string first = directed ? "thm1" : "thm2";
      const std::vector<std::string> rivals =
          directed ? std::vector<std::string>{"vetrik", "debruijn", "moore"}
                   : std::vector<std::string>{"mssv", "mss", "debruijn", "moore"};
      os << (directed ? "directed" : "undirected") << ", k=" << opts.k << '\n';
      os << std::left << std::setw(8) << "d" << std::setw(16) << first << std::setw(16) << "second";
      for (const auto& name : rivals) os << std::setw(16) << name;
      os << "winner\n";
      std::string previous;
      for (const BoundRow& row : rows) {
        os << std::setw(8) << row.d << std::setw(16) << (row.our_order ? row.our_order->str() : "-")
           << std::setw(16) << (row.second ? row.second->order.str() : "-");
        for (const auto& name : rivals) {
          auto it = row.competitor_orders.find(name);
          os << std::setw(16) << (it == row.competitor_orders.end() ? "-" : it->second.str());
        }
        os << row.winner;
        if (!previous.empty() && previous != row.winner) os << "  <- crossover";
        os << '\n';
        previous = row.winner;
      }
    } else {
      json doc;
      doc["k"] = opts.k;
      doc["directed"] = directed;
      doc["rows"] = json::array();
      std::string previous;
      for (const BoundRow& row : rows) {
        json item = row_to_json(row);
        item["crossover"] = !previous.empty() && previous != row.winner;
        previous = row.winner;
        doc["rows"].push_back(std::move(item));
      }
      os << doc.dump(2) << '\n';
    }
  });
  return kSuccess;
}

int cmd_export(const Options& opts, std::ostream& out, std::ostream&) {
  const ExportFormat format = parse_export_format(opts.format);
  const ResolvedSpec resolved = resolve_spec(opts.spec);
  const GeneratorSet set = build(resolved.spec);
  emit(opts, out, [&](std::ostream& os) { export_graph(set, format, os, opts.cap); });
  return kSuccess;
}

int cmd_certificate(const Options& opts, std::ostream& out, std::ostream& err) {
  std::optional<int> ell;
  if (opts.ell != "auto") {
    try {
      ell = std::stoi(opts.ell);
    } catch (const std::exception&) {
      throw UsageError("--l expects an integer or 'auto'");
    }
  }
  const CorollaryCertificate cert = corollary_certificate(opts.k, ell, !opts.undirected);
  emit(opts, out, [&](std::ostream& os) {
    if (opts.format == "table") {
      print_field(os, "instance", "k=" + std::to_string(cert.k) + " l=" + std::to_string(cert.ell) +
                                      " r=" + std::to_string(cert.r) + " m=" + std::to_string(cert.m) +
                                      (cert.directed ? " directed" : " undirected"));
      print_field(os, "degree", cert.d.str());
      print_field(os, "order", cert.order.str());
      for (const CertificateCheck& c : cert.checks) {
        os << "  " << std::left << std::setw(9) << to_string(c.verdict) << c.name << "   (" << c.lhs
           << " vs " << c.rhs << ")\n";
      }
      print_field(os, "certificate", cert.inequality_holds ? "holds" : "FAILED");
    } else {
      os << certificate_to_json(cert).dump(2) << '\n';
    }
  });
  if (!cert.inequality_holds) {
    err << "certificate chain does not hold\n";
    return kInvariantFailure;
  }
  return kSuccess;
}

int cmd_optimal(const Options& opts, std::ostream& out, std::ostream&) {
  const OptimalEll best = optimal_ell(opts.k, opts.t, opts.r);
  emit(opts, out, [&](std::ostream& os) {
    if (opts.format == "table") {
      print_field(os, "l", std::to_string(best.ell));
      print_field(os, "m", std::to_string(best.m));
      print_field(os, "degree", best.degree.str());
      std::ostringstream cont;
      cont << std::setprecision(6) << best.continuous;
      print_field(os, "continuous l*", cont.str());
    } else {
      json doc = {{"k", opts.k},     {"t", opts.t},
                  {"r", opts.r},     {"l", best.ell},
                  {"m", best.m},     {"degree", big_to_json(best.degree)},
                  {"continuous", best.continuous}};
      os << doc.dump(2) << '\n';
    }
  });
  return kSuccess;
}

}  // namespace

json big_to_json(const BigInt& value) {
  if (value <= kJsonExactLimit && value >= -kJsonExactLimit) {
    return json(static_cast<std::int64_t>(value));
  }
  return json(value.str());
}

json report_to_json(const GraphReport& report) {
  const ValidationReport& v = report.validation;
  json validation = {
      {"ok", v.ok()},
      {"distinct", v.distinct},
      {"identity_free", v.identity_free},
      {"symmetric", v.symmetric ? json(*v.symmetric) : json(nullptr)},
      {"size", v.actual_size},
      {"expected_size", v.expected_size},
      {"degree_slack", v.degree_slack ? json(*v.degree_slack) : json(nullptr)},
      {"failures", v.failures},
      {"discrepancies", report.discrepancies},
  };
  return json{
      {"spec", report.spec.to_string()},
      {"order", big_to_json(report.order)},
      {"degree", report.degree},
      {"directed", report.directed},
      {"diameter", report.diameter ? json(*report.diameter) : json(nullptr)},
      {"claimed_diameter", report.claimed_diameter},
      {"histogram", report.histogram},
      {"moore_ratio", to_string(report.moore_ratio)},
      {"validation", std::move(validation)},
  };
}

json row_to_json(const BoundRow& row) {
  json competitors = json::object();
  for (const auto& [name, order] : row.competitor_orders) competitors[name] = big_to_json(order);
  json second = nullptr;
  if (row.second) {
    second = {{"spec", row.second->spec.to_string()},
              {"order", big_to_json(row.second->order)},
              {"degree", big_to_json(row.second->degree)}};
  }
  return json{{"k", row.k},
              {"d", row.d},
              {"directed", row.directed},
              {"our_order", row.our_order ? big_to_json(*row.our_order) : json(nullptr)},
              {"second", std::move(second)},
              {"competitor_orders", std::move(competitors)},
              {"winner", row.winner}};
}

json certificate_to_json(const CorollaryCertificate& cert) {
  auto interval = [](const Interval& x) {
    return json{{"lo", to_string(x.lo)}, {"hi", to_string(x.hi)}};
  };
  json checks = json::array();
  for (const CertificateCheck& c : cert.checks) {
    checks.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return json{{"k", cert.k},
              {"l", cert.ell},
              {"r", cert.r},
              {"m", cert.m},
              {"directed", cert.directed},
              {"d", big_to_json(cert.d)},
              {"order", big_to_json(cert.order)},
              {"theta", interval(cert.theta)},
              {"n0", interval(cert.n0)},
              {cert.directed ? "d_plus" : "q", interval(cert.degree_cap)},
              {"lower_bound", interval(cert.lower_bound)},
              {"checks", std::move(checks)},
              {"inequality_holds", cert.inequality_holds}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs and digraphs on Z_t^r x| Z_r for the degree-diameter problem",
               "dbcayley"};
  app.require_subcommand(1);
  Options opts;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opts.out_path, "Write output to this path instead of stdout");
  };

  CLI::App* build_cmd = app.add_subcommand("build", "Build and validate a generator set, no BFS");
  build_cmd->add_option("spec", opts.spec, "Construction spec, e.g. thm1:k=4,d=3 or cor:k=3")->required();
  build_cmd->add_flag("--warn-only", opts.warn_only, "Exit 0 even when validation fails");
  add_format(build_cmd);
  add_out(build_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify order, degree and diameter by BFS");
  verify_cmd->add_option("spec", opts.spec, "Construction spec")->required();
  verify_cmd->add_option("--cap", opts.cap, "Maximum number of BFS states")->capture_default_str();
  verify_cmd->add_option("--workers", opts.workers, "BFS worker threads (0 = all cores)");
  verify_cmd->add_flag("--warn-only", opts.warn_only, "Report discrepancies but exit 0");
  add_format(verify_cmd);
  add_out(verify_cmd);

  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare orders against prior constructions");
  compare_cmd->add_option("--k", opts.k, "Diameter")->required();
  compare_cmd->add_option("--d", opts.d_range, "Degree or range LO..HI")->required();
  compare_cmd->add_flag("--undirected", opts.undirected, "Compare undirected graphs");
  add_format(compare_cmd);
  add_out(compare_cmd);

  CLI::App* export_cmd = app.add_subcommand("export", "Write the explicit graph");
  export_cmd->add_option("spec", opts.spec, "Construction spec")->required();
  export_cmd->add_option("--format", opts.format, "edge-list, dot or adjacency")
      ->check(CLI::IsMember({"edge-list", "dot", "adjacency"}))
      ->required();
  export_cmd->add_option("--cap", opts.cap, "Maximum number of vertices")->capture_default_str();
  add_out(export_cmd);

  CLI::App* cert_cmd = app.add_subcommand("certificate", "Check the t=2 corollary inequality chain");
  cert_cmd->add_option("--k", opts.k, "Diameter (>= 3)")->required();
  cert_cmd->add_option("--l", opts.ell, "Block length or 'auto'")->capture_default_str();
  cert_cmd->add_flag("--undirected", opts.undirected, "Undirected corollary");
  add_format(cert_cmd);
  add_out(cert_cmd);

  CLI::App* optimal_cmd = app.add_subcommand("optimal", "Degree-minimizing block length for fixed t, r");
  optimal_cmd->add_option("--k", opts.k, "Diameter")->required();
  optimal_cmd->add_option("--t", opts.t, "Coordinate modulus")->required();
  optimal_cmd->add_option("--r", opts.r, "Vector length")->required();
  add_format(optimal_cmd);
  add_out(optimal_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(opts, out, err);
    if (verify_cmd->parsed()) return cmd_verify(opts, out, err);
    if (compare_cmd->parsed()) return cmd_compare(opts, out, err);
    if (export_cmd->parsed()) return cmd_export(opts, out, err);
    if (cert_cmd->parsed()) return cmd_certificate(opts, out, err);
    if (optimal_cmd->parsed()) return cmd_optimal(opts, out, err);
  } catch (const CapacityError& e) {
    err << "refused: " << e.what() << '\n';
    return kResourceRefusal;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvariantFailure;
  }
  return kUsageError;
}

}  // namespace dbcayley::cli
