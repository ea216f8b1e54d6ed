#include <doctest.h>

#include "arcorpus/error.hpp"
#include "arcorpus/normalizer.hpp"
#include "arcorpus/rng.hpp"

using namespace arcorpus;

namespace {

const NormalizerConfig& cfg() {
  static const auto c = NormalizerConfig::defaults();
  return c;
}

}  // namespace

TEST_CASE("lam-alef presentation forms expand") {
  CHECK(normalize_line("ﻻ", cfg()) == "لا");
  CHECK(normalize_line("ﻷ", cfg()) == "لأ");
  CHECK(normalize_line("ﻹ", cfg()) == "لإ");
  CHECK(normalize_line("ﻵ", cfg()) == "لآ");
}

TEST_CASE("runs longer than two are squeezed") {
  CHECK(normalize_line("كتااااب", cfg()) == "كتااب");
  CHECK(normalize_line("هه", cfg()) == "هه");
}

TEST_CASE("diacritics are removed") {
  CHECK(normalize_line("كَتَب", cfg()) == "كتب");
  CHECK(normalize_line("هٰذا", cfg()) == "هذا");
}

TEST_CASE("foreign characters become spaces, then collapse") {
  CHECK(normalize_line("abc كتب", cfg()) == "كتب");
  CHECK(normalize_line("كتبXكتب", cfg()) == "كتب كتب");
  CHECK(normalize_line("  ب\t\tب 1990 ", cfg()) == "ب ب");
  CHECK(normalize_line("", cfg()).empty());
  CHECK(normalize_line("ـ", cfg()).empty());  // tatweel
}

TEST_CASE("diacritics between repeats still let the run squeeze") {
  // Removal happens before squeezing.
  CHECK(normalize_line("بَبَب", cfg()) == "بب");
}

TEST_CASE("ligature expansion can leave a legal double letter") {
  CHECK(normalize_line("لﻻ", cfg()) == "للا");
  CHECK(normalize_line("للﻻ", cfg()) == "للا");
}

TEST_CASE("idempotence on random mixed text") {
  Rng rng(8);
  const std::u32string pool = U"ابل َّﻻﻷaZ5٥.،ـ\n";
  for (int t = 0; t < 5000; ++t) {
    std::u32string s;
    const std::size_t len = rng.uniform_index(40);
    for (std::size_t i = 0; i < len; ++i) s.push_back(pool[rng.uniform_index(pool.size())]);
    const auto once = normalize_line(encode_utf8(s), cfg());
    REQUIRE(normalize_line(once, cfg()) == once);
  }
}

TEST_CASE("segment_article") {
  const RawArticle two{"a1", "كتب الولد\nذهب الرجل"};
  const auto lines = segment_article(two, cfg());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].text == "كتب الولد");
  CHECK(lines[1].text == "ذهب الرجل");
  CHECK(lines[1].source_article == "a1");

  CHECK(segment_article({"e", ""}, cfg()).empty());
  CHECK(segment_article({"latin", "Only Latin text here, nothing else"}, cfg()).empty());

  const auto stops = segment_article({"s", "بب. تت؟ ثث۔جج"}, cfg());
  CHECK(stops.size() == 4);
}

TEST_CASE("default config") {
  const auto& c = cfg();
  CHECK(c.max_repeat == 2);
  CHECK(c.valid_chars.count(0x0621));
  CHECK(c.valid_chars.count(0x064A));
  CHECK_FALSE(c.valid_chars.count(0x0640));
  CHECK_FALSE(c.valid_chars.count('5'));
  CHECK(c.ligatures.size() == 4);
  CHECK(c.is_valid(' '));
  const auto alpha = c.alphabet();
  CHECK(alpha.size() == c.valid_chars.size() + 1);
}

TEST_CASE("config JSON round-trip and validation") {
  const auto json = normalizer_config_to_json(cfg());
  const auto back = normalizer_config_from_json(json);
  CHECK(back.valid_chars == cfg().valid_chars);
  CHECK(back.diacritics == cfg().diacritics);
  CHECK(back.ligatures == cfg().ligatures);
  CHECK(back.max_repeat == 2);

  CHECK(normalizer_config_from_json("{}").valid_chars == cfg().valid_chars);
  CHECK_THROWS_AS(normalizer_config_from_json(R"({"max_repeat": 0})"), Error);
  CHECK_THROWS_AS(normalizer_config_from_json(R"({"valid_chars": "abc"})"), Error);
  CHECK_THROWS_AS(normalizer_config_from_json(R"({"ligatures": {}})"), Error);
  CHECK_THROWS_AS(normalizer_config_from_json("not json"), Error);
}
