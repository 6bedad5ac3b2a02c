// Command-line front end: validate corpora, render prompts, run extractors,
// and score run files. Exit codes: 0 success, 1 validation or usage failure,
// 2 remote extraction failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "locdesc/errors.hpp"
#include "locdesc/eval.hpp"
#include "locdesc/extraction.hpp"
#include "locdesc/geoknowledge.hpp"
#include "locdesc/prompting.hpp"
#include "locdesc/report.hpp"
#include "locdesc/version.hpp"

namespace {

using namespace locdesc;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// read_run_file treats a missing file as an empty run so extraction can
// start fresh; when scoring, a missing run file is a user error instead.
void require_readable(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << content;
}

// IOB unless the first non-whitespace byte says JSON.
Corpus load_corpus(const std::string& path) {
  std::string text = read_file(path);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '[') return parse_json(text);
  return parse_iob(text);
}

std::vector<std::string> read_id_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

// Owns custom banks loaded from disk; builtin names resolve to the
// process-wide instances.
struct BankSlot {
  const ExampleBank* bank = nullptr;
  ExampleBank owned;

  void resolve(const std::string& name_or_path) {
    if (const ExampleBank* builtin = find_builtin_bank(name_or_path)) {
      bank = builtin;
      return;
    }
    owned = parse_bank_json(read_file(name_or_path));
    auto findings = validate_bank(owned);
    if (!findings.empty()) {
      std::string message = "bank '" + owned.name + "' failed validation:";
      for (const auto& f : findings) message += "\n  " + f.detail;
      throw std::runtime_error(message);
    }
    bank = &owned;
  }
};

struct PolicyOptions {
  bool relaxed = false;
  std::string measure = "gold-coverage";
  double threshold = 0.75;
  bool category_aware = false;

  void attach(CLI::App* cmd, bool with_aware) {
    cmd->add_flag("--relaxed", relaxed, "overlap-based matching instead of exact spans");
    cmd->add_option("--measure", measure, "overlap measure under --relaxed")
        ->check(CLI::IsMember({"gold-coverage", "prediction-coverage", "jaccard"}))
        ->capture_default_str();
    cmd->add_option("--threshold", threshold, "overlap must exceed this ratio")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    if (with_aware) {
      cmd->add_flag("--category-aware", category_aware,
                    "matched spans must also agree on category");
    }
  }

  MatchPolicy policy() const {
    MatchPolicy p;
    p.mode = relaxed ? MatchMode::Relaxed : MatchMode::Strict;
    if (measure == "prediction-coverage") {
      p.measure = OverlapMeasure::PredictionCoverage;
    } else if (measure == "jaccard") {
      p.measure = OverlapMeasure::Jaccard;
    } else {
      p.measure = OverlapMeasure::GoldCoverage;
    }
    p.threshold = threshold;
    p.category_aware = category_aware;
    return p;
  }
};

struct ScoredRun {
  std::vector<ScoredMessage> scored;
  std::string bank_name = "-";
  std::string prompt_mode = "-";
};

ScoredRun score_run(const Corpus& corpus, const std::vector<RunRecord>& records,
                    const MatchPolicy& policy) {
  std::unordered_map<std::string, const AnnotatedMessage*> by_id;
  for (const auto& m : corpus.messages) by_id[m.id] = &m;
  ScoredRun run;
  if (!records.empty()) {
    run.bank_name = records.front().bank;
    run.prompt_mode = records.front().prompt_mode;
  }
  for (const auto& r : records) {
    auto it = by_id.find(r.id);
    if (it == by_id.end()) {
      throw CorpusError(CorpusErrorKind::UnknownId,
                        0, "run file references unknown message id '" + r.id + "'");
    }
    run.scored.push_back(score_message(*it->second, parse_answer(r.answer), policy));
  }
  return run;
}

int run_app(int argc, char** argv) {
  CLI::App app{"location description extraction toolkit"};
  app.set_version_flag("--version", "locdesc " + std::string(kToolVersion));
  app.require_subcommand(1);

  // validate
  std::string v_path;
  bool v_is_bank = false;
  auto* v = app.add_subcommand("validate", "check a corpus (or bank) file and summarize it");
  v->add_option("path", v_path, "corpus file (IOB or JSON)")->required();
  v->add_flag("--bank", v_is_bank, "treat the file as an example bank");

  // prompt
  std::string p_bank = "geo22", p_mode = "geo", p_text, p_message_id, p_corpus, p_out;
  auto* p = app.add_subcommand("prompt", "render a prompt to stdout or a file");
  p->add_option("--bank", p_bank, "builtin bank name or bank JSON path")->capture_default_str();
  p->add_option("--mode", p_mode, "prompt flavor")
      ->check(CLI::IsMember({"geo", "default"}))
      ->capture_default_str();
  p->add_option("--text", p_text, "query sentence (default: the {TEXT} placeholder)");
  p->add_option("--message-id", p_message_id, "take the query from this corpus message");
  p->add_option("--corpus", p_corpus, "corpus file for --message-id");
  p->add_option("--out", p_out, "output file (default stdout)");

  // extract
  std::string e_corpus, e_extractor, e_bank = "geo22", e_mode = "geo", e_config, e_out, e_holdout;
  auto* e = app.add_subcommand("extract", "run an extractor over a corpus into a run file");
  e->add_option("--corpus", e_corpus, "corpus file")->required();
  e->add_option("--extractor", e_extractor, "which extractor to run")
      ->check(CLI::IsMember({"echo_gold", "regex_baseline", "remote"}))
      ->required();
  e->add_option("--bank", e_bank, "builtin bank name or bank JSON path")->capture_default_str();
  e->add_option("--mode", e_mode, "prompt flavor")
      ->check(CLI::IsMember({"geo", "default"}))
      ->capture_default_str();
  e->add_option("--config", e_config, "extractor config JSON (required for remote)");
  e->add_option("--out", e_out, "run file to append to")->required();
  e->add_option("--holdout", e_holdout, "file of message ids to exclude (one per line)");

  // eval
  std::string ev_corpus, ev_run, ev_format = "table", ev_out, ev_extractor = "unspecified";
  PolicyOptions ev_policy;
  auto* ev = app.add_subcommand("eval", "score a run file against its corpus");
  ev->add_option("--corpus", ev_corpus, "corpus file")->required();
  ev->add_option("--run", ev_run, "run file produced by extract")->required();
  ev_policy.attach(ev, /*with_aware=*/true);
  ev->add_option("--format", ev_format, "report format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  ev->add_option("--out", ev_out, "output file (default stdout)");
  ev->add_option("--extractor-name", ev_extractor, "extractor name recorded in the report")
      ->capture_default_str();

  // matrix
  std::string mx_corpus, mx_run, mx_format = "table", mx_out, mx_extractor = "unspecified";
  PolicyOptions mx_policy;
  auto* mx = app.add_subcommand("matrix", "confusion matrix for a run file");
  mx->add_option("--corpus", mx_corpus, "corpus file")->required();
  mx->add_option("--run", mx_run, "run file produced by extract")->required();
  mx_policy.attach(mx, /*with_aware=*/false);
  mx->add_option("--format", mx_format, "report format")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();
  mx->add_option("--out", mx_out, "output file (default stdout)");
  mx->add_option("--extractor-name", mx_extractor, "extractor name recorded in the report")
      ->capture_default_str();

  // convert
  std::string c_in, c_to, c_out;
  auto* c = app.add_subcommand("convert", "convert a corpus between IOB and JSON");
  c->add_option("--in", c_in, "input corpus file")->required();
  c->add_option("--to", c_to, "target format")
      ->check(CLI::IsMember({"iob", "json"}))
      ->required();
  c->add_option("--out", c_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 1;  // --help/--version parse as "errors" with code 0
  }

  if (v->parsed()) {
    if (v_is_bank) {
      ExampleBank bank = parse_bank_json(read_file(v_path));
      auto findings = validate_bank(bank);
      for (const auto& f : findings) std::cout << f.detail << "\n";
      std::size_t spans = 0;
      for (const auto& m : bank.examples) spans += m.gold.size();
      std::cout << "bank '" << bank.name << "': " << bank.examples.size() << " examples, "
                << spans << " spans\n";
      return findings.empty() ? 0 : 1;
    }
    Corpus corpus = load_corpus(v_path);
    std::size_t spans = 0;
    for (const auto& m : corpus.messages) spans += m.gold.size();
    std::cout << corpus.messages.size() << " messages, " << spans << " spans\n";
    return 0;
  }

  if (p->parsed()) {
    std::string query{kQueryPlaceholder};
    if (!p_text.empty()) {
      query = p_text;
    } else if (!p_message_id.empty()) {
      if (p_corpus.empty()) throw std::runtime_error("--message-id needs --corpus");
      Corpus corpus = load_corpus(p_corpus);
      bool found = false;
      for (const auto& m : corpus.messages) {
        if (m.id == p_message_id) {
          query = m.canonical_text;
          found = true;
          break;
        }
      }
      if (!found) {
        throw CorpusError(CorpusErrorKind::UnknownId, 0,
                          "message id '" + p_message_id + "' not in corpus");
      }
    }
    RenderedPrompt prompt;
    if (p_mode == "default") {
      prompt = render_default_prompt(query);
    } else {
      BankSlot slot;
      slot.resolve(p_bank);
      prompt = render_geo_prompt(*slot.bank, query);
    }
    write_output(p_out, prompt.text);
    std::cerr << prompt.char_count() << " chars, ~" << prompt.token_estimate() << " tokens\n";
    return 0;
  }

  if (e->parsed()) {
    Corpus corpus = load_corpus(e_corpus);
    if (!e_holdout.empty()) {
      corpus = split_holdout(corpus, read_id_lines(e_holdout)).first;
    }
    PromptPlan plan;
    plan.mode = e_mode;
    BankSlot slot;
    if (e_mode == "geo") {
      slot.resolve(e_bank);
      plan.bank = slot.bank;
    }
    std::unique_ptr<Extractor> extractor;
    int concurrency = 1;
    if (e_extractor == "echo_gold") {
      extractor = make_echo_gold();
    } else if (e_extractor == "regex_baseline") {
      extractor = make_regex_baseline();
    } else {
      if (e_config.empty()) throw std::runtime_error("remote extractor needs --config");
      ExtractorConfig config = parse_extractor_config(read_file(e_config));
      concurrency = config.max_in_flight;
      extractor = make_remote(std::move(config));
    }
    RunProgress progress = run_extraction(corpus, *extractor, plan, e_out, concurrency);
    std::cerr << "answered " << progress.answered << ", skipped " << progress.skipped << "\n";
    return 0;
  }

  if (ev->parsed()) {
    Corpus corpus = load_corpus(ev_corpus);
    MatchPolicy policy = ev_policy.policy();
    require_readable(ev_run);
    ScoredRun run = score_run(corpus, read_run_file(ev_run), policy);
    CategoryMetrics metrics = corpus_metrics(run.scored);
    RunManifest manifest =
        make_manifest(ev_corpus, ev_run, run.bank_name, run.prompt_mode, ev_extractor);
    std::string report;
    if (ev_format == "csv") {
      report = render_metrics_csv(manifest, policy, metrics);
    } else if (ev_format == "json") {
      report = render_metrics_json(manifest, policy, metrics);
    } else {
      report = render_metrics_table(manifest, policy, metrics);
    }
    write_output(ev_out, report);
    return 0;
  }

  if (mx->parsed()) {
    Corpus corpus = load_corpus(mx_corpus);
    MatchPolicy policy = mx_policy.policy();
    policy.category_aware = false;  // pairing is decided on text alone
    require_readable(mx_run);
    ScoredRun run = score_run(corpus, read_run_file(mx_run), policy);
    ConfusionMatrix matrix = confusion_matrix(run.scored);
    RunManifest manifest =
        make_manifest(mx_corpus, mx_run, run.bank_name, run.prompt_mode, mx_extractor);
    std::string report = mx_format == "csv" ? render_matrix_csv(manifest, policy, matrix)
                                            : render_matrix_table(manifest, policy, matrix);
    write_output(mx_out, report);
    return 0;
  }

  if (c->parsed()) {
    Corpus corpus = load_corpus(c_in);
    write_output(c_out, c_to == "json" ? emit_json(corpus) : emit_iob(corpus));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const RemoteError& e) {
    std::cerr << "remote extraction failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
