// Command-line front end: generators, copsi engines, closed-form formulas,
// verification suites and extremal searches, with table or JSON output.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copsi/copsi.hpp"

namespace {

using copsi::BigInt;
using copsi::Graph;
using ordered_json = nlohmann::ordered_json;

// Exit contract: 0 success/confirmed, 1 verification failure, 2 usage or
// parse error, 3 feasibility cap. When several occur, parse beats
// verification beats cap.
struct ExitTracker {
  void usage_error() { worst(2); }
  void verify_failure() { worst(1); }
  void cap_exceeded() { worst(3); }
  int code = 0;

 private:
  void worst(int candidate) {
    static constexpr int severity[] = {0, 2, 3, 1};  // indexed by exit code
    if (severity[candidate] > severity[code]) code = candidate;
  }
};

// Field-ordered record rendered as key=value pairs or one JSON object.
// Integers are carried as decimal strings so JSON consumers cannot lose
// precision.
class Record {
 public:
  void add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, ordered_json(value));
  }
  void add(const std::string& key, const BigInt& value) {
    add(key, copsi::to_string(value));
  }
  void add(const std::string& key, long long value) {
    add(key, std::to_string(value));
  }
  void add_raw(const std::string& key, ordered_json value) {
    fields_.emplace_back(key, std::move(value));
  }

  void print(bool json) const {
    if (json) {
      ordered_json obj;
      for (const auto& [key, value] : fields_) obj[key] = value;
      std::cout << obj.dump() << "\n";
      return;
    }
    bool first = true;
    for (const auto& [key, value] : fields_) {
      std::cout << (first ? "" : " ") << key << "=";
      if (value.is_string())
        std::cout << value.get<std::string>();
      else
        std::cout << value.dump();
      first = false;
    }
    std::cout << "\n";
  }

 private:
  std::vector<std::pair<std::string, ordered_json>> fields_;
};

copsi::Family require_family(const std::string& name) {
  auto family = copsi::parse_family(name);
  if (!family)
    throw CLI::ValidationError("family must be star, path, cycle or complete");
  return *family;
}

Graph make_family_graph(copsi::Family family, int param) {
  switch (family) {
    case copsi::Family::star: return copsi::make_star(param);
    case copsi::Family::path: return copsi::make_path(param);
    case copsi::Family::cycle: return copsi::make_cycle(param);
    case copsi::Family::complete: return copsi::make_complete(param);
  }
  throw std::logic_error("unreachable");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct CopsiCmdOptions {
  std::string family;
  int param = 0;
  std::string file;
  std::string engine = "classes";
  bool breakdown = false;
  bool json = false;
  bool timing = false;
  std::size_t cap = copsi::CopsiOptions{}.subset_cap;
};

void run_copsi_on_graph(const CopsiCmdOptions& cmd, const std::string& input,
                        const Graph& g, ExitTracker& exits) {
  Record rec;
  rec.add("command", "copsi");
  rec.add("input", input);
  rec.add("graph6", copsi::graph6_encode(g));
  rec.add("order", g.order());
  rec.add("size", g.size());
  rec.add("engine", cmd.engine);
  copsi::CopsiOptions opt{cmd.cap};
  auto start = std::chrono::steady_clock::now();
  try {
    if (cmd.engine == "naive") {
      rec.add("total", copsi::copsi_naive(g, opt));
    } else if (cmd.engine == "classes") {
      rec.add("total", copsi::copsi_classes(g, opt));
    } else {
      BigInt naive = copsi::copsi_naive(g, opt);
      BigInt classes = copsi::copsi_classes(g, opt);
      rec.add("total_naive", naive);
      rec.add("total_classes", classes);
      rec.add("agree", naive == classes ? "yes" : "no");
      if (naive != classes) exits.verify_failure();
    }
    if (cmd.breakdown) {
      copsi::CopsiBreakdown split = copsi::copsi_breakdown(g, opt);
      rec.add("singleton", split.singleton);
      rec.add("edge", split.edge);
      rec.add("third", split.third);
      rec.add("total_breakdown", split.total);
    }
  } catch (const copsi::CapExceededError& e) {
    rec.add("error", std::string(e.what()));
    exits.cap_exceeded();
  }
  if (cmd.timing)
    rec.add("timing_ms", static_cast<long long>(elapsed_ms(start)));
  rec.print(cmd.json);
}

void run_copsi_stream(const CopsiCmdOptions& cmd, std::istream& in,
                      ExitTracker& exits) {
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = copsi::graph6_decode(line);
      run_copsi_on_graph(cmd, line, g, exits);
    } catch (const copsi::Graph6ParseError& e) {
      Record rec;
      rec.add("command", "copsi");
      rec.add("input", line);
      rec.add("line", line_no);
      rec.add("error", std::string(e.what()));
      rec.print(cmd.json);
      exits.usage_error();
    }
  }
}

void print_verify_report(const std::string& suite,
                         const copsi::VerifyReport& report, bool json,
                         ExitTracker& exits) {
  if (!report.ok) exits.verify_failure();
  if (json) {
    Record rec;
    rec.add("command", "verify");
    rec.add("suite", suite);
    rec.add("ok", report.ok ? "yes" : "no");
    rec.add_raw("lines", ordered_json(report.lines));
    rec.print(true);
    return;
  }
  for (const std::string& line : report.lines)
    std::cout << (report.ok ? "[PASS] " : "[FAIL] ") << suite << ": " << line
              << "\n";
}

void print_extremal(const copsi::ExtremalReport& report, bool confirmed,
                    bool json) {
  std::string mode =
      report.kind == copsi::ExtremalReport::Kind::by_size ? "size" : "order";
  if (json) {
    Record rec;
    rec.add("command", "extremal");
    rec.add("mode", mode);
    rec.add("parameter", report.parameter);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
      const auto& c = report.candidates[i];
      Graph g = copsi::graph6_decode(c.graph6);
      ordered_json row;
      row["rank"] = std::to_string(i + 1);
      row["graph6"] = c.graph6;
      row["order"] = std::to_string(g.order());
      row["size"] = std::to_string(g.size());
      row["copsi"] = copsi::to_string(c.copsi);
      rows.push_back(std::move(row));
    }
    rec.add_raw("candidates", std::move(rows));
    rec.add("maximum", report.maximum);
    ordered_json maxers = ordered_json::array();
    for (const auto& code : report.maximizers) maxers.push_back(code.bytes);
    rec.add_raw("maximizers", std::move(maxers));
    rec.add("confirmed", confirmed ? "yes" : "no");
    rec.print(true);
    return;
  }
  std::cout << "extremal by-" << mode << " parameter=" << report.parameter
            << " candidates=" << report.candidates.size() << "\n";
  std::cout << "rank graph6 order size copsi\n";
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const auto& c = report.candidates[i];
    Graph g = copsi::graph6_decode(c.graph6);
    std::cout << (i + 1) << " " << c.graph6 << " " << g.order() << " "
              << g.size() << " " << c.copsi << "\n";
  }
  std::cout << "maximum=" << report.maximum
            << " maximizers=" << report.maximizers.size()
            << " confirmed=" << (confirmed ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"connected partial symmetry index toolkit"};
  app.require_subcommand(1);
  ExitTracker exits;

  auto* gen = app.add_subcommand("gen", "emit a family graph as graph6");
  std::string gen_family;
  int gen_param = 0;
  bool gen_json = false;
  gen->add_option("family", gen_family, "star|path|cycle|complete")
      ->required();
  gen->add_option("param", gen_param, "rays for star, order otherwise")
      ->required();
  gen->add_flag("--json", gen_json, "JSON output");

  auto* cop = app.add_subcommand(
      "copsi", "compute copsi for graph6 input or a named family");
  CopsiCmdOptions cop_opts;
  cop->add_option("--family", cop_opts.family, "star|path|cycle|complete");
  cop->add_option("--param", cop_opts.param, "family parameter");
  cop->add_option("--file", cop_opts.file, "graph6 file, one graph per line");
  cop->add_option("--engine", cop_opts.engine, "naive|classes|both")
      ->check(CLI::IsMember({"naive", "classes", "both"}))
      ->capture_default_str();
  cop->add_flag("--breakdown", cop_opts.breakdown,
                "split into singleton/edge/third counts");
  cop->add_option("--cap", cop_opts.cap, "connected-subset feasibility cap")
      ->capture_default_str();
  cop->add_flag("--json", cop_opts.json, "JSON lines output");
  cop->add_flag("--timing", cop_opts.timing, "include wall-clock field");

  auto* formula =
      app.add_subcommand("formula", "evaluate a closed form, no enumeration");
  std::string formula_family;
  int formula_param = 0;
  bool formula_json = false;
  formula->add_option("family", formula_family, "star|path|cycle|complete")
      ->required();
  formula->add_option("param", formula_param, "family parameter")->required();
  formula->add_flag("--json", formula_json, "JSON output");

  auto* seq = app.add_subcommand("sequence", "leading closed-form values");
  std::string seq_family;
  int seq_count = 0;
  bool seq_summands = false;
  bool seq_json = false;
  seq->add_option("family", seq_family, "star|path|cycle|complete")
      ->required();
  seq->add_option("count", seq_count, "how many values")->required();
  seq->add_flag("--summands", seq_summands,
                "also list the two star-formula summands");
  seq->add_flag("--json", seq_json, "JSON output");

  auto* ext = app.add_subcommand(
      "extremal", "exhaustive maximizer search over small graphs");
  std::optional<int> ext_size, ext_order;
  int ext_jobs = 1;
  bool ext_json = false;
  auto* by_size = ext->add_option("--by-size", ext_size,
                                  "connected graphs with this many edges");
  auto* by_order =
      ext->add_option("--by-order", ext_order, "all graphs of this order");
  by_size->excludes(by_order);
  ext->add_option("--jobs", ext_jobs,
                  "worker threads (1 = reproducible default)")
      ->capture_default_str();
  ext->add_flag("--json", ext_json, "JSON output");

  auto* ver = app.add_subcommand("verify", "run invariant suites");
  std::string ver_suite = "all";
  int ver_bound = 5;
  bool ver_json = false;
  ver->add_option("--suite", ver_suite, "lemma|engines|formulas|all")
      ->check(CLI::IsMember({"lemma", "engines", "formulas", "all"}))
      ->capture_default_str();
  ver->add_option("--order-bound", ver_bound,
                  "exhaustive order bound for lemma/engines")
      ->capture_default_str();
  ver->add_flag("--json", ver_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      Graph g = make_family_graph(require_family(gen_family), gen_param);
      if (gen_json) {
        Record rec;
        rec.add("command", "gen");
        rec.add("family", gen_family);
        rec.add("param", gen_param);
        rec.add("graph6", copsi::graph6_encode(g));
        rec.print(true);
      } else {
        std::cout << copsi::graph6_encode(g) << "\n";
      }
    } else if (*cop) {
      if (!cop_opts.family.empty()) {
        Graph g =
            make_family_graph(require_family(cop_opts.family), cop_opts.param);
        std::string input =
            cop_opts.family + "(" + std::to_string(cop_opts.param) + ")";
        run_copsi_on_graph(cop_opts, input, g, exits);
      } else if (!cop_opts.file.empty()) {
        std::ifstream in(cop_opts.file);
        if (!in) throw CLI::ValidationError("cannot open " + cop_opts.file);
        run_copsi_stream(cop_opts, in, exits);
      } else {
        run_copsi_stream(cop_opts, std::cin, exits);
      }
    } else if (*formula) {
      copsi::Family fam = require_family(formula_family);
      BigInt value;
      switch (fam) {
        case copsi::Family::star:
          value = copsi::star_formula(formula_param);
          break;
        case copsi::Family::path:
          value = copsi::path_formula(formula_param);
          break;
        case copsi::Family::cycle:
          value = copsi::cycle_formula(formula_param);
          break;
        case copsi::Family::complete:
          value = copsi::copsi_complete_formula(formula_param);
          break;
      }
      Record rec;
      rec.add("command", "formula");
      rec.add("family", formula_family);
      rec.add("param", formula_param);
      rec.add("value", value);
      rec.print(formula_json);
    } else if (*seq) {
      copsi::Family fam = require_family(seq_family);
      if (seq_summands && fam != copsi::Family::star)
        throw CLI::ValidationError("--summands applies to the star family");
      std::vector<BigInt> values = copsi::sequence_values(fam, seq_count);
      Record rec;
      rec.add("command", "sequence");
      rec.add("family", seq_family);
      rec.add("count", seq_count);
      rec.add("first_param", copsi::sequence_first_parameter(fam));
      auto join = [](const std::vector<BigInt>& xs) {
        std::string out;
        for (const BigInt& x : xs)
          out += (out.empty() ? "" : ",") + copsi::to_string(x);
        return out;
      };
      rec.add("values", join(values));
      if (seq_summands) {
        std::vector<BigInt> quad, psin;
        for (int n = 0; n < seq_count; ++n) {
          auto [q, p] = copsi::star_formula_summands(n);
          quad.push_back(q);
          psin.push_back(p);
        }
        rec.add("summand_quadratic", join(quad));
        rec.add("summand_psin", join(psin));
      }
      rec.print(seq_json);
    } else if (*ext) {
      if (!ext_size && !ext_order)
        throw CLI::ValidationError(
            "one of --by-size or --by-order is required");
      copsi::ExtremalReport report;
      copsi::CanonicalCode expected;
      BigInt expected_value;
      if (ext_size) {
        report = copsi::extremal_by_size(*ext_size, ext_jobs);
        expected = copsi::canonical_code(copsi::make_star(*ext_size));
        expected_value = copsi::star_formula(*ext_size);
      } else {
        report = copsi::extremal_by_order(*ext_order, ext_jobs);
        expected = copsi::canonical_code(copsi::make_complete(*ext_order));
        expected_value = copsi::copsi_complete_formula(*ext_order);
      }
      bool confirmed = report.maximizers.size() == 1 &&
                       report.maximizers.front() == expected &&
                       report.maximum == expected_value;
      if (!confirmed) exits.verify_failure();
      print_extremal(report, confirmed, ext_json);
    } else if (*ver) {
      auto run_suite = [&](const std::string& name,
                           const copsi::VerifyReport& report) {
        print_verify_report(name, report, ver_json, exits);
      };
      if (ver_suite == "lemma" || ver_suite == "all")
        run_suite("lemma", copsi::verify_lemma(ver_bound));
      if (ver_suite == "engines" || ver_suite == "all")
        run_suite("engines",
                  copsi::verify_engines(ver_bound, 100, std::min(ver_bound, 8)));
      if (ver_suite == "formulas" || ver_suite == "all")
        run_suite("formulas", copsi::verify_formulas());
      if (!ver_json)
        std::cout << (exits.code == 0 ? "verify: all suites passed"
                                      : "verify: FAILURES above")
                  << "\n";
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const copsi::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const copsi::Graph6ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exits.code;
}
