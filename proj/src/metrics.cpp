#include "arcorpus/metrics.hpp"

#include <unordered_map>

#include "arcorpus/error.hpp"
#include "arcorpus/parallel.hpp"
#include "arcorpus/utf8.hpp"

namespace arcorpus {

EditCounts& EditCounts::operator+=(const EditCounts& other) noexcept {
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  reference_length += other.reference_length;
  return *this;
}

EditCounts edit_counts(std::span<const kernels::Symbol> reference,
                       std::span<const kernels::Symbol> hypothesis) {
  const auto cost = kernels::align(reference, hypothesis);
  const std::int64_t n = static_cast<std::int64_t>(reference.size());
  const std::int64_t m = static_cast<std::int64_t>(hypothesis.size());
  const std::int64_t gaps = static_cast<std::int64_t>(cost.distance) - cost.substitutions;
  EditCounts counts;
  counts.substitutions = cost.substitutions;
  counts.deletions = static_cast<std::uint64_t>((gaps + n - m) / 2);
  counts.insertions = static_cast<std::uint64_t>((gaps - n + m) / 2);
  counts.reference_length = reference.size();
  return counts;
}

namespace {

template <typename Token>
void intern(const std::vector<Token>& tokens, std::unordered_map<std::string_view, kernels::Symbol>& ids,
            std::vector<kernels::Symbol>& out) {
  out.clear();
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, _] = ids.try_emplace(std::string_view(t), static_cast<kernels::Symbol>(ids.size()));
    out.push_back(it->second);
  }
}

template <typename Token>
EditCounts interned_counts(const std::vector<Token>& reference, const std::vector<Token>& hypothesis) {
  std::unordered_map<std::string_view, kernels::Symbol> ids;
  std::vector<kernels::Symbol> ref_ids;
  std::vector<kernels::Symbol> hyp_ids;
  intern(reference, ids, ref_ids);
  intern(hypothesis, ids, hyp_ids);
  return edit_counts(ref_ids, hyp_ids);
}

}  // namespace

EditCounts edit_counts(const std::vector<std::string>& reference,
                       const std::vector<std::string>& hypothesis) {
  if (reference.empty()) throw Error(ErrorKind::EmptyReference, "reference has no tokens");
  return interned_counts(reference, hypothesis);
}

EditCounts edit_counts(std::string_view reference, std::string_view hypothesis,
                       Granularity granularity) {
  if (granularity == Granularity::Character) {
    const CodepointString ref = decode_utf8(reference);
    const CodepointString hyp = decode_utf8(hypothesis);
    const std::vector<kernels::Symbol> ref_syms(ref.begin(), ref.end());
    const std::vector<kernels::Symbol> hyp_syms(hyp.begin(), hyp.end());
    return edit_counts(ref_syms, hyp_syms);
  }
  return interned_counts(split_words(reference), split_words(hypothesis));
}

double rate(std::string_view reference, std::string_view hypothesis, Granularity granularity) {
  const EditCounts counts = edit_counts(reference, hypothesis, granularity);
  if (counts.reference_length == 0) {
    throw Error(ErrorKind::EmptyReference, "reference has no tokens at the requested granularity");
  }
  return static_cast<double>(counts.distance()) / static_cast<double>(counts.reference_length);
}

double err(double er_before, double er_after) {
  if (er_before == 0.0) {
    throw Error(ErrorKind::DivisionByZero, "error reduction rate undefined for a zero baseline");
  }
  return (er_before - er_after) / er_before;
}

ReductionReport reduction(double er_before, double er_after) {
  return {er_before, er_after, err(er_before, er_after)};
}

void RateAccumulator::add(std::string_view reference, std::string_view hypothesis) {
  const EditCounts c = edit_counts(reference, hypothesis, Granularity::Character);
  const EditCounts w = edit_counts(reference, hypothesis, Granularity::Word);
  chars_ += c;
  words_ += w;
  if (c.reference_length > 0) {
    cer_sum_ += static_cast<double>(c.distance()) / static_cast<double>(c.reference_length);
    ++cer_pairs_;
  }
  if (w.reference_length > 0) {
    wer_sum_ += static_cast<double>(w.distance()) / static_cast<double>(w.reference_length);
    ++wer_pairs_;
  }
  ++pairs_;
}

void RateAccumulator::merge(const RateAccumulator& other) {
  chars_ += other.chars_;
  words_ += other.words_;
  cer_sum_ += other.cer_sum_;
  wer_sum_ += other.wer_sum_;
  cer_pairs_ += other.cer_pairs_;
  wer_pairs_ += other.wer_pairs_;
  pairs_ += other.pairs_;
}

RateReport RateAccumulator::report(Averaging averaging) const {
  if (pairs_ == 0) throw Error(ErrorKind::EmptyCorpus, "no pairs to score");
  if (chars_.reference_length == 0 || words_.reference_length == 0) {
    throw Error(ErrorKind::EmptyReference, "pooled reference length is zero");
  }
  RateReport r;
  r.counts_char = chars_;
  r.counts_word = words_;
  r.pairs = pairs_;
  if (averaging == Averaging::Micro) {
    r.cer = static_cast<double>(chars_.distance()) / static_cast<double>(chars_.reference_length);
    r.wer = static_cast<double>(words_.distance()) / static_cast<double>(words_.reference_length);
  } else {
    r.cer = cer_sum_ / static_cast<double>(cer_pairs_);
    r.wer = wer_sum_ / static_cast<double>(wer_pairs_);
  }
  return r;
}

RateReport corpus_rates(std::span<const TextPair> pairs, Averaging averaging, unsigned workers) {
  std::vector<RateAccumulator> partial = parallel_chunks<RateAccumulator>(
      pairs.size(), workers, [&](std::size_t begin, std::size_t end) {
        RateAccumulator acc;
        for (std::size_t i = begin; i < end; ++i) acc.add(pairs[i].first, pairs[i].second);
        return acc;
      });
  RateAccumulator total;
  for (const auto& p : partial) total.merge(p);
  return total.report(averaging);
}

}  // namespace arcorpus
