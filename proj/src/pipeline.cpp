#include "arcorpus/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "arcorpus/error.hpp"
#include "arcorpus/parallel.hpp"
#include "arcorpus/rng.hpp"

namespace arcorpus {

namespace {

constexpr std::size_t kBatch = 4096;
constexpr std::uint64_t kSplitSalt = 0x73706c6974;  // "split"

}  // namespace

ToolConfig ToolConfig::from_json(std::string_view json) {
  ToolConfig c;
  c.normalizer = normalizer_config_from_json(json);
  c.filter = filter_config_from_json(json);
  c.corruption = corruption_config_from_json(json);
  return c;
}

ToolConfig ToolConfig::load(const fs::path& path) { return from_json(read_file(path)); }

std::string ToolConfig::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const std::string& part : {normalizer_config_to_json(normalizer), filter_config_to_json(filter),
                                  corruption_config_to_json(corruption)}) {
    const auto parsed = nlohmann::ordered_json::parse(part);
    for (const auto& [k, v] : parsed.items()) j[k] = v;
  }
  return j.dump(2, ' ', true);
}

// ---- article input ------------------------------------------------------

namespace {

std::vector<fs::path> list_inputs(const fs::path& path) {
  if (!fs::exists(path)) throw Error(ErrorKind::Io, "no such file or directory: " + path.string());
  if (!fs::is_directory(path)) return {path};
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(path)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

ArticleReadStats for_each_article(const fs::path& path, ArticleFormat format,
                                  const std::function<void(RawArticle&&)>& fn) {
  ArticleReadStats stats;
  for (const auto& file : list_inputs(path)) {
    auto in = open_input(file);
    std::string line;
    std::size_t number = 0;
    if (format == ArticleFormat::Jsonl) {
      while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        RawArticle article;
        try {
          const auto j = nlohmann::json::parse(line);
          article.text = j.at("text").get<std::string>();
          article.id = j.contains("id") ? (j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump())
                                        : file.filename().string() + ":" + std::to_string(number);
        } catch (const nlohmann::json::exception&) {
          ++stats.skipped;
          continue;
        }
        if (article.id.empty()) article.id = file.filename().string() + ":" + std::to_string(number);
        ++stats.articles;
        fn(std::move(article));
      }
    } else {
      std::string text;
      std::size_t block = 0;
      auto flush = [&] {
        if (text.empty()) return;
        ++stats.articles;
        fn(RawArticle{file.filename().string() + "#" + std::to_string(block++), std::move(text)});
        text.clear();
      };
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) {
          flush();
        } else {
          if (!text.empty()) text += '\n';
          text += line;
        }
      }
      flush();
    }
    if (in.bad()) throw Error(ErrorKind::Io, "read failed on " + file.string());
  }
  return stats;
}

ArticleSet read_articles(const fs::path& path, ArticleFormat format) {
  ArticleSet set;
  const auto stats = for_each_article(path, format, [&](RawArticle&& a) { set.articles.push_back(std::move(a)); });
  set.skipped = stats.skipped;
  return set;
}

// ---- stages ---------------------------------------------------------------

CleanStats run_clean(const fs::path& input, ArticleFormat format, const fs::path& output,
                     const NormalizerConfig& config, unsigned workers) {
  auto out = open_output(output);
  CleanStats stats;
  std::vector<RawArticle> batch;
  auto drain = [&] {
    const auto segmented = parallel_map<std::vector<CandidateLine>>(
        batch.size(), workers, [&](std::size_t i) { return segment_article(batch[i], config); });
    for (const auto& lines : segmented) {
      for (const auto& l : lines) out << l.text << '\n';
      stats.lines += lines.size();
    }
    batch.clear();
  };
  const auto read = for_each_article(input, format, [&](RawArticle&& a) {
    batch.push_back(std::move(a));
    if (batch.size() == kBatch) drain();
  });
  drain();
  if (!out) throw Error(ErrorKind::Io, "write failed on " + output.string());
  stats.articles = read.articles;
  stats.skipped = read.skipped;
  return stats;
}

DropReport run_filter(const fs::path& input, const fs::path& output, const fs::path& report_path,
                      const FilterConfig& config, unsigned workers) {
  Lexicon lexicon;
  for_each_line_batch(input, kBatch, [&](std::vector<std::string>& lines, std::size_t) {
    lexicon.merge(build_lexicon(lines, workers));
  });

  auto out = open_output(output);
  DropReport report;
  for_each_line_batch(input, kBatch, [&](std::vector<std::string>& lines, std::size_t) {
    const auto verdicts = parallel_map<Verdict>(
        lines.size(), workers, [&](std::size_t i) { return check_line(lines[i], lexicon, config); });
    for (std::size_t i = 0; i < lines.size(); ++i) {
      ++report[verdicts[i].reason];
      if (verdicts[i].keep) out << lines[i] << '\n';
    }
  });
  if (!out) throw Error(ErrorKind::Io, "write failed on " + output.string());
  if (!report_path.empty()) {
    auto rep = open_output(report_path);
    rep << report.to_tsv();
  }
  return report;
}

InjectStats run_inject(const fs::path& input, const fs::path& output, const fs::path& op_log,
                       const CorruptionConfig& config, unsigned workers, std::size_t batch_size) {
  config.validate();
  auto out = open_output(output);
  std::ofstream log;
  if (!op_log.empty()) log = open_output(op_log);
  InjectStats stats;
  const std::size_t slots = psi_slots(config.psi);
  for (std::size_t slot = 0; slot < slots; ++slot) {
    for_each_line_batch(input, std::max<std::size_t>(1, batch_size),
                        [&](std::vector<std::string>& lines, std::size_t first) {
                          if (slot == 0) stats.lines += lines.size();
                          const auto result = corrupt_batch(lines, config, slot, first, workers);
                          stats.discarded += result.discarded;
                          stats.pairs += result.pairs.size();
                          for (const auto& p : result.pairs) {
                            out << p.corrupted << '\t' << p.clean << '\n';
                            if (log.is_open()) log << op_log_record(p) << '\n';
                          }
                        });
  }
  if (!out) throw Error(ErrorKind::Io, "write failed on " + output.string());
  return stats;
}

Splits split_corpus(const std::vector<std::string>& lines, const SplitSpec& spec) {
  if (spec.test_size + spec.dev_size >= lines.size()) {
    throw Error(ErrorKind::InsufficientCorpus,
                "corpus of " + std::to_string(lines.size()) + " lines cannot hold test " +
                    std::to_string(spec.test_size) + " + dev " + std::to_string(spec.dev_size));
  }
  std::vector<std::size_t> order(lines.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(derive_seed(spec.seed, kSplitSalt));
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::swap(order[i], order[rng.uniform_index(i + 1)]);
  }
  Splits s;
  s.test.reserve(spec.test_size);
  s.dev.reserve(spec.dev_size);
  s.train.reserve(lines.size() - spec.test_size - spec.dev_size);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::string& l = lines[order[k]];
    if (k < spec.test_size) {
      s.test.push_back(l);
    } else if (k < spec.test_size + spec.dev_size) {
      s.dev.push_back(l);
    } else {
      s.train.push_back(l);
    }
  }
  return s;
}

std::vector<PairRow> mix_corpora(const std::vector<fs::path>& pair_files) {
  if (pair_files.empty()) throw Error(ErrorKind::EmptyCorpus, "mix needs at least one pair file");
  std::vector<PairRow> all;
  for (const auto& f : pair_files) {
    auto in = open_input(f);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      PairRow row;
      if (!parse_pair_row(line, row)) {
        throw Error(ErrorKind::SchemaMismatch,
                    f.string() + ":" + std::to_string(number) + ": expected corrupted<TAB>clean");
      }
      all.push_back(std::move(row));
    }
  }
  return all;
}

RateReport stats_command(const fs::path& pair_file, unsigned workers, Averaging averaging) {
  const auto rows = read_pairs(pair_file);
  if (rows.empty()) throw Error(ErrorKind::EmptyCorpus, pair_file.string() + " has no pairs");
  std::vector<TextPair> pairs;
  pairs.reserve(rows.size());
  for (const auto& r : rows) pairs.emplace_back(r.clean, r.corrupted);
  return corpus_rates(pairs, averaging, workers);
}

EvalReport eval_command(const fs::path& ref_file, const fs::path& hyp_file,
                        const std::optional<fs::path>& src_file, unsigned workers, Averaging averaging) {
  const auto ref = read_lines(ref_file);
  const auto hyp = read_lines(hyp_file);
  auto mismatch = [&](const fs::path& other, std::size_t n) {
    return Error(ErrorKind::LineCountMismatch, ref_file.string() + " has " + std::to_string(ref.size()) +
                                                   " lines but " + other.string() + " has " +
                                                   std::to_string(n));
  };
  if (hyp.size() != ref.size()) throw mismatch(hyp_file, hyp.size());
  if (ref.empty()) throw Error(ErrorKind::EmptyCorpus, ref_file.string() + " is empty");

  auto score = [&](const std::vector<std::string>& other) {
    std::vector<TextPair> pairs;
    pairs.reserve(ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) pairs.emplace_back(ref[i], other[i]);
    return corpus_rates(pairs, averaging, workers);
  };

  EvalReport report;
  report.hypothesis = score(hyp);
  if (src_file) {
    const auto src = read_lines(*src_file);
    if (src.size() != ref.size()) throw mismatch(*src_file, src.size());
    report.source = score(src);
    if (report.source->cer > 0.0) report.cerr = err(report.source->cer, report.hypothesis.cer);
    if (report.source->wer > 0.0) report.werr = err(report.source->wer, report.hypothesis.wer);
  }
  return report;
}

// ---- reports --------------------------------------------------------------

namespace {

nlohmann::ordered_json counts_json(const EditCounts& c) {
  nlohmann::ordered_json j;
  j["substitutions"] = c.substitutions;
  j["deletions"] = c.deletions;
  j["insertions"] = c.insertions;
  j["reference_length"] = c.reference_length;
  return j;
}

nlohmann::ordered_json report_json(const RateReport& r) {
  nlohmann::ordered_json j;
  j["cer"] = r.cer;
  j["wer"] = r.wer;
  j["pairs"] = r.pairs;
  j["counts"] = {{"char", counts_json(r.counts_char)}, {"word", counts_json(r.counts_word)}};
  return j;
}

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v * 100.0);
  return buf;
}

std::string row(std::string_view label, const std::vector<std::string>& cells) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-12.*s", static_cast<int>(label.size()), label.data());
  std::string out = buf;
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof buf, "%10s", c.c_str());
    out += buf;
  }
  out += '\n';
  return out;
}

}  // namespace

std::string rate_report_to_json(const RateReport& report) { return report_json(report).dump(2); }

std::string eval_report_to_json(const EvalReport& report) {
  nlohmann::ordered_json j = report_json(report.hypothesis);
  j["cerr"] = report.cerr ? nlohmann::ordered_json(*report.cerr) : nlohmann::ordered_json(nullptr);
  j["werr"] = report.werr ? nlohmann::ordered_json(*report.werr) : nlohmann::ordered_json(nullptr);
  if (report.source) j["source"] = report_json(*report.source);
  return j.dump(2);
}

std::string rate_report_to_text(const RateReport& report, std::string_view label) {
  std::string out = row("", {"CER (%)", "WER (%)"});
  out += row(label, {pct(report.cer), pct(report.wer)});
  return out;
}

std::string eval_report_to_text(const EvalReport& report) {
  std::string out = row("", {"CER (%)", "WER (%)", "CERR (%)", "WERR (%)"});
  if (report.source) out += row("source", {pct(report.source->cer), pct(report.source->wer), "-", "-"});
  out += row("hypothesis", {pct(report.hypothesis.cer), pct(report.hypothesis.wer),
                            report.cerr ? pct(*report.cerr) : "-", report.werr ? pct(*report.werr) : "-"});
  return out;
}

}  // namespace arcorpus
