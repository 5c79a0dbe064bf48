// qpkit: classify, construct, verify, survey, and supergraph workflows.
//
// Exit codes: 0 success (whatever the verdicts), 1 a proved statement was
// violated during `verify`, 2 malformed input or usage, 3 a limit was hit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpkit/constructions.hpp"
#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/harness.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/prime_sets.hpp"
#include "qpkit/structure.hpp"

namespace {

using qpkit::Graph;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct Options {
  std::string input = "-";
  std::string format = "graph6";
  std::string mode;
  int limit = 0;  // 0: QPKIT_LIMIT or the built-in default
  int threads = 1;
  std::string out;
  std::string csv;
  int n_max = 6;
  int k_max = 2;
  bool all_colourings = false;
  bool perfect_shortcut = false;
  std::string suite;
  std::vector<std::string> notation;
};

int recognition_limit(const Options& opt) {
  if (opt.limit > 0) return opt.limit;
  if (const char* env = std::getenv("QPKIT_LIMIT")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
    throw qpkit::ParseError(std::string("QPKIT_LIMIT: not a positive integer: ") + env);
  }
  return qpkit::kDefaultRecognitionLimit;
}

std::vector<Graph> read_graphs(const Options& opt, int limit) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (opt.input != "-") {
    file.open(opt.input);
    if (!file) throw qpkit::ParseError("cannot open " + opt.input);
    in = &file;
  }
  return opt.format == "edgelist" ? qpkit::read_edge_lists(*in, limit)
                                  : qpkit::read_graph6_stream(*in, limit);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw qpkit::ParseError("cannot write " + path);
  out << text;
}

void emit(const Options& opt, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    write_text(opt.out, text);
  }
}

int cmd_classify(const Options& opt) {
  qpkit::RecognizerConfig config;
  config.mode = opt.mode == "pure" ? qpkit::Mode::Pure : qpkit::Mode::Accelerated;
  config.perfect_shortcut = opt.perfect_shortcut;
  config.vertex_limit = recognition_limit(opt);
  qpkit::Recognizer recognizer(config);

  const auto graphs = read_graphs(opt, config.vertex_limit);
  if (!opt.out.empty()) std::filesystem::create_directories(opt.out);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const auto outcome = recognizer.recognize(g);
    auto record = qpkit::classify(g, outcome);
    Json certificate;
    if (outcome.quasiperfect) {
      certificate = qpkit::certificate_to_json(g, *outcome.certificate);
      if (!opt.out.empty()) {
        const std::string name = "cert-" + std::to_string(i) + ".json";
        write_text((std::filesystem::path(opt.out) / name).string(), certificate.dump(2) + "\n");
        record.cert_ref = name;
      }
    }
    Json line = qpkit::to_json(record);
    line["mode"] = qpkit::to_string(config.mode);
    if (outcome.quasiperfect && opt.out.empty()) line["certificate"] = certificate;
    line["stats"] = {{"nodes_explored", outcome.stats.nodes_explored},
                     {"memo_hits", outcome.stats.memo_hits},
                     {"wall_ms", outcome.stats.wall_ms}};
    std::cout << line.dump() << "\n";
  }
  return kExitOk;
}

Json set_json(const qpkit::VertexSet s) { return s.to_vector(); }

int cmd_construct(const Options& opt) {
  std::string text;
  for (const auto& part : opt.notation) text += (text.empty() ? "" : " ") + part;
  const auto spec = qpkit::parse_construction(text);

  Json doc;
  Graph g;
  if (const auto* family = std::get_if<qpkit::FamilySpec>(&spec)) {
    const auto fg = qpkit::odd_cycle_family(*family);
    g = fg.graph;
    doc["construction"] = family->notation();
    const auto pk = qpkit::family_prime_clique(fg);
    const auto pk_defect = qpkit::check_prime_clique(g, pk);
    const auto pi = qpkit::family_prime_independent_set(fg);
    Json labels = Json::array();
    for (int v = 0; v < g.order(); ++v) labels.push_back(fg.label(v));
    doc["labels"] = labels;
    doc["pk"] = set_json(pk);
    doc["pk_labels"] = fg.label(pk);
    doc["pk_prime_clique"] = pk_defect == qpkit::PrimeSetDefect::None;
    doc["pk_defect"] = qpkit::to_string(pk_defect);
    doc["pk_residue_block_graph"] = qpkit::is_block_graph(qpkit::remove_vertices(g, pk));
    doc["pi"] = set_json(pi.set);
    doc["pi_labels"] = fg.label(pi.set);
    doc["pi_route"] = qpkit::to_string(pi.route);
    doc["pi_residue_forest"] = qpkit::is_forest(qpkit::remove_vertices(g, pi.set));
  } else {
    const int t = std::get<qpkit::BlowupSpec>(spec).t;
    g = qpkit::remark_counterexample(t);
    doc["construction"] = "c5blowup t=" + std::to_string(t);
  }
  doc["n"] = g.order();
  doc["m"] = g.edge_count();
  if (opt.format == "edgelist") {
    doc["edge_list"] = qpkit::emit_edge_list(g);
  } else {
    doc["graph6"] = qpkit::emit_graph6(g);
  }
  emit(opt, doc);
  return kExitOk;
}

qpkit::SuiteOptions suite_options(const Options& opt) {
  qpkit::SuiteOptions options;
  options.threads = opt.threads;
  options.all_colourings = opt.all_colourings;
  return options;
}

void summarize(const qpkit::SuiteReport& report) {
  std::cerr << report.suite << ": " << report.graphs_scanned << " graphs, "
            << report.violations.size() << " violations, "
            << (report.passed() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const Options& opt) {
  static const std::vector<std::string> all{"theorem1", "theorem2", "perfect-subset",
                                            "certificates", "color-removal"};
  std::vector<std::string> names;
  if (opt.suite == "all") {
    names = all;
  } else if (std::find(all.begin(), all.end(), opt.suite) != all.end()) {
    names = {opt.suite};
  } else {
    std::cerr << "qpkit: unknown suite '" << opt.suite << "'\n";
    return kExitUsage;
  }

  bool failed = false;
  Json reports = Json::array();
  for (const auto& name : names) {
    const auto report = qpkit::run_suite(name, opt.n_max, suite_options(opt));
    summarize(report);
    failed = failed || (report.kind == "theorem" && !report.passed());
    reports.push_back(qpkit::to_json(report));
  }
  emit(opt, names.size() == 1 ? reports.front() : reports);
  return failed ? kExitViolation : kExitOk;
}

int cmd_survey(const Options& opt) {
  if (opt.suite == "census") {
    qpkit::Recognizer recognizer({qpkit::Mode::Pure, qpkit::Reading::Conjunctive, false,
                                  std::max(opt.n_max, qpkit::kDefaultRecognitionLimit)});
    std::ostringstream csv;
    csv << qpkit::csv_header() << "\n";
    Json counts = Json::object();
    int qp = 0;
    int perfect = 0;
    const auto graphs = qpkit::enumerate_graphs_up_to(opt.n_max);
    for (const Graph& g : graphs) {
      const auto record = qpkit::classify(g, recognizer.recognize(g));
      qp += record.quasiperfect ? 1 : 0;
      perfect += record.perfect.value_or(false) ? 1 : 0;
      csv << qpkit::to_csv_row(record) << "\n";
    }
    if (!opt.csv.empty()) write_text(opt.csv, csv.str());
    emit(opt, {{"schema", qpkit::kReportSchema},
               {"suite", "census"},
               {"n_max", opt.n_max},
               {"graphs_scanned", graphs.size()},
               {"quasiperfect", qp},
               {"perfect", perfect}});
    return kExitOk;
  }
  if (opt.suite != "color-removal" && opt.suite != "reading-divergence") {
    std::cerr << "qpkit: unknown survey '" << opt.suite << "'\n";
    return kExitUsage;
  }
  const auto report = qpkit::run_suite(opt.suite, opt.n_max, suite_options(opt));
  summarize(report);
  emit(opt, qpkit::to_json(report));
  return kExitOk;
}

int cmd_supergraph(const Options& opt) {
  const int limit = recognition_limit(opt);
  qpkit::RecognizerConfig config;
  config.vertex_limit = limit;
  config.mode = opt.mode == "accelerated" ? qpkit::Mode::Accelerated : qpkit::Mode::Pure;
  qpkit::Recognizer recognizer(config);
  Json results = Json::array();
  for (const Graph& g : read_graphs(opt, limit)) {
    const auto witness = qpkit::minimal_qp_supergraph(g, opt.k_max, recognizer);
    Json entry{{"input", qpkit::emit_graph6(g)}, {"k_max", opt.k_max}, {"found", witness.has_value()}};
    if (witness) {
      entry["added"] = witness->added;
      entry["graph6"] = qpkit::emit_graph6(witness->graph);
    }
    results.push_back(entry);
  }
  emit(opt, results.size() == 1 ? results.front() : results);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact recognition and verification toolkit for quasiperfect graphs"};
  app.require_subcommand(1);
  Options opt;

  const auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Graph format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
  };

  auto* classify = app.add_subcommand("classify", "Decide quasiperfection and emit records");
  classify->add_option("input", opt.input, "Input file, '-' for stdin");
  add_format(classify);
  classify->add_option("--mode", opt.mode, "Recognition mode")
      ->check(CLI::IsMember({"pure", "accelerated"}));
  classify->add_flag("--perfect-shortcut", opt.perfect_shortcut,
                     "Accelerated mode: accept perfect graphs early");
  classify->add_option("--limit", opt.limit, "Recognition vertex limit");
  classify->add_option("--out", opt.out, "Directory for certificate files");
  add_threads(classify);

  auto* construct = app.add_subcommand("construct", "Build a family graph or the C5 blow-up");
  construct->add_option("notation", opt.notation, "e.g. family n=5 k=1 | c5blowup t=3")
      ->required();
  add_format(construct);
  construct->add_option("--out", opt.out, "Output file");

  auto* verify = app.add_subcommand("verify", "Run a theorem suite over all small graphs");
  verify->add_option("suite", opt.suite,
                     "theorem1 | theorem2 | perfect-subset | certificates | color-removal | all")
      ->required();
  verify->add_option("--n-max", opt.n_max, "Largest order scanned")->check(CLI::Range(0, 8));
  verify->add_option("--mode", opt.mode, "Suites always run pure")->check(CLI::IsMember({"pure"}));
  verify->add_flag("--all-colourings", opt.all_colourings, "Sweep all optimal colourings (n<=5)");
  verify->add_option("--out", opt.out, "Report file");
  add_threads(verify);

  auto* survey = app.add_subcommand("survey", "Run an exploratory survey");
  survey->add_option("name", opt.suite, "color-removal | reading-divergence | census")->required();
  survey->add_option("--n-max", opt.n_max, "Largest order scanned")->check(CLI::Range(0, 8));
  survey->add_flag("--all-colourings", opt.all_colourings, "Sweep all optimal colourings (n<=5)");
  survey->add_option("--csv", opt.csv, "Census CSV output");
  survey->add_option("--out", opt.out, "Report file");
  add_threads(survey);

  auto* supergraph = app.add_subcommand("supergraph", "Smallest quasiperfect supergraph search");
  supergraph->add_option("input", opt.input, "Input file, '-' for stdin");
  add_format(supergraph);
  supergraph->add_option("--k-max", opt.k_max, "Most vertices to add")->check(CLI::Range(0, 4));
  supergraph->add_option("--mode", opt.mode, "Recognition mode")
      ->check(CLI::IsMember({"pure", "accelerated"}));
  supergraph->add_option("--limit", opt.limit, "Recognition vertex limit");
  supergraph->add_option("--out", opt.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) {
      if (opt.mode.empty()) opt.mode = "accelerated";
      return cmd_classify(opt);
    }
    if (*construct) return cmd_construct(opt);
    if (*verify) return cmd_verify(opt);
    if (*survey) return cmd_survey(opt);
    if (*supergraph) return cmd_supergraph(opt);
  } catch (const qpkit::LimitError& e) {
    std::cerr << "qpkit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const qpkit::TheoremViolation& e) {
    std::cerr << "qpkit: " << e.what() << "\n";
    return kExitViolation;
  } catch (const qpkit::Error& e) {
    std::cerr << "qpkit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
