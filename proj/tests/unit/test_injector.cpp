#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcorpus/error.hpp"
#include "arcorpus/injector.hpp"
#include "arcorpus/metrics.hpp"
#include "arcorpus/normalizer.hpp"

using namespace arcorpus;

namespace {

const CorruptionConfig& defaults() {
  static const auto c = CorruptionConfig::defaults();
  return c;
}

const std::vector<std::string> kLines{
    "كان المسجد الكبير في المدينة القديمة مركزا للعلم",
    "تقع القرية على الضفة الشرقية للنهر الكبير",
    "ذهب الرجل مسرعا إلى الغابة في الصباح الباكر",
    "إن الذهب من المعادن النفيسة",
    "يختلف شكل المخطط البركاني باختلاف المواد التي يتراكب منها",
    "الأردن عاصمتها عمان وهي أكبر مدنها",
    "وقال محمد أن الاستثمارات بلغت ثلاث مليارات دولار",
    "هل سبق وزرت المدينة القديمة في الشتاء",
    "النطاق الذي يحيط بسواحل المحيط الهادي واسع جدا",
    "كتب الشاعر قصيدة طويلة عن الحرب والسلام",
};

std::size_t total_bound(const SentencePair& p) {
  std::size_t b = 0;
  for (const auto& op : p.ops) b += op.cost_bound();
  return b;
}

}  // namespace

TEST_CASE("op_count") {
  CHECK(op_count(40, 0.05) == 2);
  CHECK(op_count(15, 0.05) == 0);
  CHECK(op_count(128, 0.10) == 12);
  CHECK(op_count(100, 0.29) == 29);
  CHECK(op_count(0, 0.5) == 0);
  CHECK(op_count(37, 1.0) == 37);
}

TEST_CASE("edit primitives") {
  CodepointString s = U"اب";
  auto r = transpose_at(s, 0);
  CHECK(s == U"با");
  CHECK(r.cost_bound() == 2);

  s = U"سلام";
  r = delete_at(s, 1);
  CHECK(s == U"سام");
  CHECK(r.removed == "ل");
  CHECK(r.cost_bound() == 1);

  s = U"سلام";
  r = insert_at(s, 2, U'ق');
  CHECK(s == U"سلقام");
  CHECK(r.added == "ق");

  s = U"سلام";
  r = substitute_at(s, 0, U'ش');
  CHECK(s == U"شلام");

  s = U"سلام";
  r = replace_at(s, 1, 2, U"ل");
  CHECK(s == U"سلم");
  CHECK(r.cost_bound() == 2);

  s = U"سلام";
  CHECK_FALSE(delete_at(s, 9).applied);
  CHECK_FALSE(transpose_at(s, 3).applied);
  CHECK(s == U"سلام");
}

TEST_CASE("mapping replaces a matching pattern with a target") {
  auto c = defaults();
  c.mapping_rules = {{U"ة", {U"ه"}}};
  Rng rng(1);
  CodepointString line = U"المدرسة";
  const auto rec = apply_op(line, OpKind::Mapping, rng, c);
  REQUIRE(rec);
  CHECK(rec->applied);
  CHECK(line == U"المدرسه");

  CodepointString none = U"كتب";
  const auto noop = apply_op(none, OpKind::Mapping, rng, c);
  REQUIRE(noop);
  CHECK_FALSE(noop->applied);
  CHECK(none == U"كتب");
}

TEST_CASE("keyboard substitution lands on a neighbor") {
  auto c = defaults();
  c.substitution_keyboard_prob = 1.0;
  const auto& kb = c.keyboard_neighbors;
  REQUIRE(kb.count(U'س'));
  CHECK(kb.at(U'س').find(U'ش') != CodepointString::npos);
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    Rng rng(seed);
    CodepointString line = U"كتبالدرسواليوم";
    const auto rec = apply_op(line, OpKind::Substitution, rng, c);
    REQUIRE(rec);
    const auto from = decode_utf8(rec->removed), to = decode_utf8(rec->added);
    REQUIRE(from.size() == 1);
    REQUIRE(to.size() == 1);
    REQUIRE(kb.at(from[0]).find(to[0]) != CodepointString::npos);
  }
}

TEST_CASE("keyboard adjacency is symmetric among base keys") {
  const auto kb = arabic_keyboard_neighbors();
  const CodepointString shifted = U"أإآ";
  for (const auto& [key, ns] : kb) {
    if (shifted.find(key) != CodepointString::npos) continue;
    for (auto n : ns) {
      if (shifted.find(n) != CodepointString::npos) continue;
      CAPTURE(encode_utf8(CodepointString(1, key)));
      CHECK(kb.at(n).find(key) != CodepointString::npos);
    }
  }
}

TEST_CASE("random substitution never keeps the original") {
  auto c = defaults();
  c.substitution_keyboard_prob = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    CodepointString line = U"كتب الدرس";
    const auto rec = apply_op(line, OpKind::Substitution, rng, c);
    REQUIRE(rec);
    REQUIRE(rec->removed != rec->added);
    REQUIRE(c.alphabet.find(decode_utf8(rec->added)[0]) != CodepointString::npos);
  }
}

TEST_CASE("preconditions") {
  Rng rng(2);
  CodepointString empty;
  CHECK_FALSE(apply_op(empty, OpKind::Deletion, rng, defaults()));
  CHECK_FALSE(apply_op(empty, OpKind::Substitution, rng, defaults()));
  CodepointString one = U"ب";
  CHECK_FALSE(apply_op(one, OpKind::Transposition, rng, defaults()));
  CHECK(apply_op(empty, OpKind::Insertion, rng, defaults()));
}

TEST_CASE("corrupt_line identities and determinism") {
  const auto zero = corrupt_line(kLines[0], 0.0, 5, defaults());
  CHECK(zero.corrupted == zero.clean);
  CHECK(zero.ops.empty());

  const std::string fifteen = "كتب الولد الدرس";
  REQUIRE(codepoint_count(fifteen) == 15);
  const auto short_pair = corrupt_line(fifteen, 0.05, 5, defaults());
  CHECK(short_pair.corrupted == fifteen);
  CHECK(short_pair.ops.empty());

  for (const auto& line : kLines) {
    CHECK(corrupt_line(line, 0.1, 77, defaults()) == corrupt_line(line, 0.1, 77, defaults()));
  }
  CHECK(corrupt_line(kLines[0], 0.2, 1, defaults()).corrupted !=
        corrupt_line(kLines[0], 0.2, 2, defaults()).corrupted);
}

TEST_CASE("op count comes from the original length") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = corrupt_line(kLines[4], 0.1, seed, defaults());
    REQUIRE(p.ops.size() == op_count(codepoint_count(kLines[4]), 0.1));
  }
}

TEST_CASE("edit distance stays within the per-op bound") {
  auto with_patterns = defaults();
  with_patterns.pattern_deletion = true;
  with_patterns.mapping_rules.push_back({U"لا", {U"ال", U"ل"}});
  for (const CorruptionConfig* c : {&defaults(), static_cast<const CorruptionConfig*>(&with_patterns)}) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      for (const auto& line : kLines) {
        const auto p = corrupt_line(line, 0.15, seed, *c);
        const auto d = edit_counts(p.clean, p.corrupted, Granularity::Character).distance();
        REQUIRE(d <= total_bound(p));
        if (c == &defaults()) REQUIRE(d <= 2 * p.ops.size());
      }
    }
  }
}

TEST_CASE("corrupted text stays inside the alphabet") {
  const std::set<Codepoint> alpha(defaults().alphabet.begin(), defaults().alphabet.end());
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    for (const auto& line : kLines) {
      for (auto cp : decode_utf8(corrupt_line(line, 0.3, seed, defaults()).corrupted)) REQUIRE(alpha.count(cp));
    }
  }
}

TEST_CASE("psi policies") {
  auto c = defaults();
  c.psi = FixedPsi{0.05};
  auto fixed = corrupt_corpus(kLines, c);
  CHECK(fixed.pairs.size() == 10);
  for (const auto& p : fixed.pairs) CHECK(p.psi_used == 0.05);

  c.psi = MixedPsi{{0.05, 0.10}};
  auto mixed = corrupt_corpus(kLines, c);
  REQUIRE(mixed.pairs.size() == 20);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(mixed.pairs[i].psi_used == 0.05);
    CHECK(mixed.pairs[i + 10].psi_used == 0.10);
    CHECK(mixed.pairs[i].clean == kLines[i]);
    CHECK(mixed.pairs[i + 10].clean == kLines[i]);
  }

  c.psi = VariedPsi{0.025, 0.10};
  auto varied = corrupt_corpus(kLines, c);
  CHECK(varied.pairs.size() == 10);
  std::set<double> seen;
  for (const auto& p : varied.pairs) {
    CHECK(p.psi_used >= 0.025);
    CHECK(p.psi_used <= 0.10);
    seen.insert(p.psi_used);
  }
  CHECK(seen.size() > 1);
}

TEST_CASE("batching and workers do not change output") {
  auto c = defaults();
  c.psi = VariedPsi{0.05, 0.3};
  c.seed = 99;
  const auto whole = corrupt_corpus(kLines, c, 1);
  std::vector<SentencePair> pieces;
  for (std::size_t start = 0; start < kLines.size(); start += 3) {
    const std::size_t n = std::min<std::size_t>(3, kLines.size() - start);
    auto part = corrupt_batch(std::span(kLines).subspan(start, n), c, 0, start, 4);
    pieces.insert(pieces.end(), part.pairs.begin(), part.pairs.end());
  }
  CHECK(pieces == whole.pairs);
  CHECK(corrupt_corpus(kLines, c, 16).pairs == whole.pairs);
}

TEST_CASE("pairs that lose every character are discarded") {
  auto c = defaults();
  c.ops = {OpKind::Deletion};
  c.psi = FixedPsi{1.0};
  const std::vector<std::string> lines{"ابج", "كتب الولد"};
  const auto r = corrupt_corpus(lines, c);
  CHECK(r.discarded == 2);
  CHECK(r.pairs.empty());
}

TEST_CASE("op weights steer the kind draw") {
  auto c = defaults();
  c.op_weights = {0, 0, 0, 1, 0};
  const auto p = corrupt_line(kLines[0], 0.2, 3, c);
  REQUIRE_FALSE(p.ops.empty());
  for (const auto& op : p.ops) CHECK(op.kind == OpKind::Transposition);
}

TEST_CASE("config validation") {
  auto bad = defaults();
  bad.psi = FixedPsi{1.5};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = defaults();
  bad.psi = VariedPsi{0.1, 0.1};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = defaults();
  bad.ops.clear();
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = defaults();
  bad.keyboard_neighbors[U'س'] = U"x";
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = defaults();
  bad.mapping_rules.push_back({U"ة", {U"5"}});
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK_NOTHROW(defaults().validate());
}

TEST_CASE("config JSON round-trip") {
  auto c = defaults();
  c.psi = MixedPsi{{0.05, 0.1}};
  c.seed = 42;
  c.pattern_deletion = true;
  const auto back = corruption_config_from_json(corruption_config_to_json(c));
  CHECK(std::get<MixedPsi>(back.psi).psis == std::vector<double>{0.05, 0.1});
  CHECK(back.seed == 42);
  CHECK(back.pattern_deletion);
  CHECK(back.keyboard_neighbors == c.keyboard_neighbors);
  CHECK(back.alphabet == c.alphabet);
  CHECK(back.mapping_rules.size() == c.mapping_rules.size());
  CHECK(std::get<FixedPsi>(corruption_config_from_json(R"({"psi": 0.1})").psi).psi == 0.1);
  CHECK(std::get<VariedPsi>(corruption_config_from_json(R"({"psi": {"policy": "varied", "min": 0.02, "max": 0.2}})").psi)
            .max == 0.2);
  CHECK_THROWS_AS(corruption_config_from_json(R"({"ops": ["swap"]})"), Error);
}

TEST_CASE("op log record") {
  auto p = corrupt_line(kLines[0], 0.1, 4, defaults());
  p.line_index = 17;
  const auto j = nlohmann::json::parse(op_log_record(p));
  CHECK(j["index"] == 17);
  CHECK(j["psi"] == 0.1);
  REQUIRE(j["ops"].size() == p.ops.size());
  CHECK(op_kind_from_string(j["ops"][0]["kind"].get<std::string>()) == p.ops[0].kind);
  CHECK(j["ops"][0]["applied"] == p.ops[0].applied);
}

TEST_CASE("output is pinned for a fixed seed") {
  // mt19937_64 plus in-house range mapping: identical on every platform.
  const auto p = corrupt_line(kLines[0], 0.1, 42, defaults());
  CHECK(p.corrupted == "كان السمجد الكبير ي إلمدينة اقلديمة مركزا للعلم");
  REQUIRE(p.ops.size() == 4);
  CHECK(p.ops[0] == OpRecord{OpKind::Transposition, 30, "لق", "قل", true});
  CHECK(p.ops[3] == OpRecord{OpKind::Deletion, 18, "ف", "", true});
}
