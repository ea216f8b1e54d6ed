#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arcorpus/filter.hpp"
#include "arcorpus/injector.hpp"
#include "arcorpus/io.hpp"
#include "arcorpus/metrics.hpp"
#include "arcorpus/normalizer.hpp"

namespace arcorpus {

namespace fs = std::filesystem;

// One JSON document may carry every stage's keys; each stage reads its own.
struct ToolConfig {
  NormalizerConfig normalizer = NormalizerConfig::defaults();
  FilterConfig filter;
  CorruptionConfig corruption = CorruptionConfig::defaults();

  static ToolConfig from_json(std::string_view json);
  static ToolConfig load(const fs::path& path);
  std::string to_json() const;
};

// ---- article input ------------------------------------------------------

enum class ArticleFormat { Jsonl, Plain };

struct ArticleReadStats {
  std::uint64_t articles = 0;
  std::uint64_t skipped = 0;  // malformed jsonl records
};

// `path` is a file or a directory (searched recursively, files visited in
// lexicographic path order). jsonl: one object per line with a string "text"
// and optional "id". plain: blank-line-separated articles.
ArticleReadStats for_each_article(const fs::path& path, ArticleFormat format,
                                  const std::function<void(RawArticle&&)>& fn);

struct ArticleSet {
  std::vector<RawArticle> articles;
  std::uint64_t skipped = 0;
};

ArticleSet read_articles(const fs::path& path, ArticleFormat format);

// ---- stages ---------------------------------------------------------------

struct CleanStats {
  std::uint64_t articles = 0;
  std::uint64_t skipped = 0;
  std::uint64_t lines = 0;
};

CleanStats run_clean(const fs::path& input, ArticleFormat format, const fs::path& output,
                     const NormalizerConfig& config, unsigned workers);

// Streams the file twice: lexicon, then verdicts. The drop report TSV is
// written when `report` is non-empty.
DropReport run_filter(const fs::path& input, const fs::path& output, const fs::path& report,
                      const FilterConfig& config, unsigned workers);

struct InjectStats {
  std::uint64_t lines = 0;
  std::uint64_t pairs = 0;
  std::uint64_t discarded = 0;
};

// Writes `corrupted<TAB>clean` rows, plus one op-log record per row when
// `op_log` is non-empty. Output bytes depend only on the input and config.
InjectStats run_inject(const fs::path& input, const fs::path& output, const fs::path& op_log,
                       const CorruptionConfig& config, unsigned workers,
                       std::size_t batch_size = 4096);

struct SplitSpec {
  std::size_t test_size = 100000;
  std::size_t dev_size = 10000;
  std::uint64_t seed = 0;
};

struct Splits {
  std::vector<std::string> train;
  std::vector<std::string> dev;
  std::vector<std::string> test;
};

// Seeded Fisher-Yates shuffle, then test, dev, and train slices in shuffled
// order. Throws Error(InsufficientCorpus) unless test + dev < lines.size().
Splits split_corpus(const std::vector<std::string>& lines, const SplitSpec& spec);

// Concatenates pair files in order. Throws Error(SchemaMismatch) on a row
// that is not `corrupted<TAB>clean`, Error(EmptyCorpus) on an empty list.
std::vector<PairRow> mix_corpora(const std::vector<fs::path>& pair_files);

// Corruption level of a pair file: clean is the reference, corrupted the
// hypothesis.
RateReport stats_command(const fs::path& pair_file, unsigned workers,
                         Averaging averaging = Averaging::Micro);

struct EvalReport {
  RateReport hypothesis;
  std::optional<RateReport> source;
  std::optional<double> cerr;  // unset when no source, or the source CER is 0
  std::optional<double> werr;
};

// Throws Error(LineCountMismatch) when the files are not line-aligned.
EvalReport eval_command(const fs::path& ref_file, const fs::path& hyp_file,
                        const std::optional<fs::path>& src_file, unsigned workers,
                        Averaging averaging = Averaging::Micro);

// ---- reports --------------------------------------------------------------

std::string rate_report_to_json(const RateReport& report);
std::string eval_report_to_json(const EvalReport& report);
// Aligned plain-text table with rates in percent.
std::string rate_report_to_text(const RateReport& report, std::string_view label);
std::string eval_report_to_text(const EvalReport& report);

}  // namespace arcorpus
