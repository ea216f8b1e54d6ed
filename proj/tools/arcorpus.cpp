// arcorpus: corpus cleaning, error injection, and error-rate scoring.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "arcorpus/error.hpp"
#include "arcorpus/kernels/edit_distance.hpp"
#include "arcorpus/manifest.hpp"
#include "arcorpus/parallel.hpp"
#include "arcorpus/pipeline.hpp"

namespace {

using namespace arcorpus;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  unsigned workers = default_workers();
  std::string manifest_path;
};

ToolConfig load_config(const GlobalOptions& g) {
  ToolConfig config = g.config_path.empty() ? ToolConfig{} : ToolConfig::load(g.config_path);
  if (g.seed) config.corruption.seed = *g.seed;
  return config;
}

void write_manifest(const GlobalOptions& g, Manifest m) {
  if (g.manifest_path.empty()) return;
  m.seed = g.seed.value_or(m.seed);
  m.write(g.manifest_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic corpus cleaning, synthetic error injection, and CER/WER scoring"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--config", g.config_path, "JSON config (normalizer, filter, and corruption keys)")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Seed override for injection and splitting");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--manifest", g.manifest_path, "Write a provenance manifest here");

  // clean
  auto* clean = app.add_subcommand("clean", "Normalize and segment raw articles into candidate lines");
  std::string clean_in, clean_out, clean_format = "jsonl";
  clean->add_option("input", clean_in, "Article file or directory")->required();
  clean->add_option("-o,--output", clean_out, "Output sentence file")->required();
  clean->add_option("--format", clean_format, "Article format")->check(CLI::IsMember({"jsonl", "plain"}));

  // filter
  auto* filter = app.add_subcommand("filter", "Apply the corpus filter rules to candidate lines");
  std::string filter_in, filter_out, filter_report;
  filter->add_option("input", filter_in, "Candidate line file")->required()->check(CLI::ExistingFile);
  filter->add_option("-o,--output", filter_out, "Kept lines")->required();
  filter->add_option("--report", filter_report, "Drop report TSV (reason, count)");

  // inject
  auto* inject = app.add_subcommand("inject", "Generate corrupted/clean sentence pairs");
  std::string inject_in, inject_out, inject_log;
  std::optional<double> fixed_psi;
  std::vector<double> mixed_psi;
  std::vector<double> varied_psi;
  inject->add_option("input", inject_in, "Clean sentence file")->required()->check(CLI::ExistingFile);
  inject->add_option("-o,--output", inject_out, "Pair TSV")->required();
  inject->add_option("--op-log", inject_log, "Per-pair operation log (JSON lines)");
  auto* psi_opt = inject->add_option("--psi", fixed_psi, "Fixed corruption ratio")->check(CLI::Range(0.0, 1.0));
  auto* mixed_opt = inject->add_option("--mixed", mixed_psi, "Emit every line once per ratio")
                        ->delimiter(',')
                        ->check(CLI::Range(0.0, 1.0));
  auto* varied_opt = inject->add_option("--varied", varied_psi, "Per-line ratio drawn from MIN,MAX")
                         ->delimiter(',')
                         ->expected(2);
  psi_opt->excludes(mixed_opt)->excludes(varied_opt);
  mixed_opt->excludes(varied_opt);

  // mix
  auto* mix = app.add_subcommand("mix", "Concatenate pair files");
  std::vector<std::string> mix_in;
  std::string mix_out;
  mix->add_option("inputs", mix_in, "Pair TSV files, in order")->required()->check(CLI::ExistingFile);
  mix->add_option("-o,--output", mix_out, "Mixed pair TSV")->required();

  // split
  auto* split = app.add_subcommand("split", "Shuffle clean lines into train/dev/test");
  std::string split_in, split_dir;
  SplitSpec split_spec;
  split->add_option("input", split_in, "Clean sentence file")->required()->check(CLI::ExistingFile);
  split->add_option("--out-dir", split_dir, "Directory for train.txt, dev.txt, test.txt")->required();
  split->add_option("--test-size", split_spec.test_size, "Test sentences")->capture_default_str();
  split->add_option("--dev-size", split_spec.dev_size, "Dev sentences")->capture_default_str();

  // stats
  auto* stats = app.add_subcommand("stats", "CER/WER of the corrupted side against the clean side");
  std::string stats_in, stats_format = "json";
  bool stats_macro = false;
  stats->add_option("pairs", stats_in, "Pair TSV")->required()->check(CLI::ExistingFile);
  stats->add_option("--format", stats_format)->check(CLI::IsMember({"json", "text"}));
  stats->add_flag("--macro", stats_macro, "Average per-pair rates instead of pooling counts");

  // eval
  auto* eval = app.add_subcommand("eval", "Score hypotheses against references; CERR/WERR with --src");
  std::string eval_ref, eval_hyp, eval_src, eval_format = "json";
  bool eval_macro = false;
  eval->add_option("--ref", eval_ref, "Reference sentences")->required()->check(CLI::ExistingFile);
  eval->add_option("--hyp", eval_hyp, "Hypothesis sentences")->required()->check(CLI::ExistingFile);
  eval->add_option("--src", eval_src, "Uncorrected input sentences")->check(CLI::ExistingFile);
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"json", "text"}));
  eval->add_flag("--macro", eval_macro, "Average per-pair rates instead of pooling counts");

  // config
  auto* config_cmd = app.add_subcommand("config", "Print the effective configuration as JSON");
  auto* kernel_cmd = app.add_subcommand("kernels", "List edit-distance kernels and the active one");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    ToolConfig config = load_config(g);
    Manifest m;

    if (*clean) {
      const auto format = clean_format == "plain" ? ArticleFormat::Plain : ArticleFormat::Jsonl;
      const auto s = run_clean(clean_in, format, clean_out, config.normalizer, g.workers);
      std::cerr << "clean: " << s.articles << " articles (" << s.skipped << " malformed skipped) -> "
                << s.lines << " lines\n";
      m.stage = "clean";
      m.config_digest = sha256_hex(normalizer_config_to_json(config.normalizer));
      if (!g.manifest_path.empty()) {
        m.add_input(clean_in);
        m.add_output(clean_out);
      }
      m.count_in = s.articles;
      m.count_out = s.lines;
    } else if (*filter) {
      const auto report = run_filter(filter_in, filter_out, filter_report, config.filter, g.workers);
      std::cerr << "filter: kept " << report.kept() << " of " << report.total() << " lines\n";
      m.stage = "filter";
      m.config_digest = sha256_hex(filter_config_to_json(config.filter));
      if (!g.manifest_path.empty()) {
        m.add_input(filter_in);
        m.add_output(filter_out);
        if (!filter_report.empty()) m.add_output(filter_report);
      }
      m.count_in = report.total();
      m.count_out = report.kept();
    } else if (*inject) {
      if (fixed_psi) config.corruption.psi = FixedPsi{*fixed_psi};
      if (!mixed_psi.empty()) config.corruption.psi = MixedPsi{mixed_psi};
      if (!varied_psi.empty()) config.corruption.psi = VariedPsi{varied_psi[0], varied_psi[1]};
      const auto s = run_inject(inject_in, inject_out, inject_log, config.corruption, g.workers);
      std::cerr << "inject: " << s.lines << " lines -> " << s.pairs << " pairs (" << s.discarded
                << " discarded)\n";
      m.stage = "inject";
      m.config_digest = sha256_hex(corruption_config_to_json(config.corruption));
      m.seed = config.corruption.seed;
      if (!g.manifest_path.empty()) {
        m.add_input(inject_in);
        m.add_output(inject_out);
        if (!inject_log.empty()) m.add_output(inject_log);
      }
      m.count_in = s.lines;
      m.count_out = s.pairs;
    } else if (*mix) {
      std::vector<fs::path> files(mix_in.begin(), mix_in.end());
      const auto rows = mix_corpora(files);
      auto out = open_output(mix_out);
      for (const auto& r : rows) out << r.corrupted << '\t' << r.clean << '\n';
      out.close();
      std::cerr << "mix: " << files.size() << " files -> " << rows.size() << " pairs\n";
      m.stage = "mix";
      m.config_digest = sha256_hex("");
      if (!g.manifest_path.empty()) {
        for (const auto& f : files) m.add_input(f);
        m.add_output(mix_out);
      }
      m.count_in = rows.size();
      m.count_out = rows.size();
    } else if (*split) {
      split_spec.seed = g.seed.value_or(config.corruption.seed);
      const auto lines = read_lines(split_in);
      const auto parts = split_corpus(lines, split_spec);
      const fs::path dir(split_dir);
      write_lines(dir / "train.txt", parts.train);
      write_lines(dir / "dev.txt", parts.dev);
      write_lines(dir / "test.txt", parts.test);
      std::cerr << "split: " << lines.size() << " lines -> train " << parts.train.size() << ", dev "
                << parts.dev.size() << ", test " << parts.test.size() << "\n";
      m.stage = "split";
      m.config_digest = sha256_hex("test_size=" + std::to_string(split_spec.test_size) +
                                   ";dev_size=" + std::to_string(split_spec.dev_size));
      m.seed = split_spec.seed;
      if (!g.manifest_path.empty()) {
        m.add_input(split_in);
        for (const char* name : {"train.txt", "dev.txt", "test.txt"}) m.add_output(dir / name);
      }
      m.count_in = lines.size();
      m.count_out = lines.size();
    } else if (*stats) {
      const auto r = stats_command(stats_in, g.workers, stats_macro ? Averaging::Macro : Averaging::Micro);
      std::cout << (stats_format == "json" ? rate_report_to_json(r) + "\n" : rate_report_to_text(r, "corrupted"));
      m.stage = "stats";
      m.config_digest = sha256_hex(stats_macro ? "macro" : "micro");
      if (!g.manifest_path.empty()) m.add_input(stats_in);
      m.count_in = r.pairs;
    } else if (*eval) {
      std::optional<fs::path> src;
      if (!eval_src.empty()) src = eval_src;
      const auto r = eval_command(eval_ref, eval_hyp, src, g.workers,
                                  eval_macro ? Averaging::Macro : Averaging::Micro);
      std::cout << (eval_format == "json" ? eval_report_to_json(r) + "\n" : eval_report_to_text(r));
      m.stage = "eval";
      m.config_digest = sha256_hex(eval_macro ? "macro" : "micro");
      if (!g.manifest_path.empty()) {
        m.add_input(eval_ref);
        m.add_input(eval_hyp);
        if (src) m.add_input(*src);
      }
      m.count_in = r.hypothesis.pairs;
    } else if (*config_cmd) {
      std::cout << config.to_json() << "\n";
      return 0;
    } else if (*kernel_cmd) {
      for (auto isa : kernels::available_isas()) {
        std::cout << kernels::to_string(isa) << (isa == kernels::active_isa() ? " (active)" : "") << "\n";
      }
      return 0;
    }
    write_manifest(g, std::move(m));
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}
