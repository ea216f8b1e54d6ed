#include "arcorpus/normalizer.hpp"

#include <json.hpp>

#include "arcorpus/error.hpp"

namespace arcorpus {

NormalizerConfig NormalizerConfig::defaults() {
  NormalizerConfig c;
  for (Codepoint cp = 0x0621; cp <= 0x063A; ++cp) c.valid_chars.insert(cp);
  for (Codepoint cp = 0x0641; cp <= 0x064A; ++cp) c.valid_chars.insert(cp);
  for (Codepoint cp = 0x064B; cp <= 0x0652; ++cp) c.diacritics.insert(cp);
  c.diacritics.insert(0x0670);  // superscript (dagger) alif
  c.ligatures = {
      {0xFEFB, {0x0644, 0x0627}},
      {0xFEF7, {0x0644, 0x0623}},
      {0xFEF9, {0x0644, 0x0625}},
      {0xFEF5, {0x0644, 0x0622}},
  };
  c.max_repeat = 2;
  return c;
}

CodepointString NormalizerConfig::alphabet() const {
  CodepointString out(valid_chars.begin(), valid_chars.end());
  if (!valid_chars.count(kSpace)) out.push_back(kSpace);
  return out;
}

CodepointString normalize_codepoints(std::u32string_view text, const NormalizerConfig& config) {
  // Ligatures and diacritics in one sweep: expansions are emitted verbatim and
  // never contain diacritics under a validated config.
  CodepointString expanded;
  expanded.reserve(text.size());
  for (Codepoint cp : text) {
    if (auto it = config.ligatures.find(cp); it != config.ligatures.end()) {
      expanded += it->second;
    } else if (!config.diacritics.count(cp)) {
      expanded.push_back(cp);
    }
  }

  CodepointString squeezed;
  squeezed.reserve(expanded.size());
  std::size_t run = 0;
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    run = (i > 0 && expanded[i] == expanded[i - 1]) ? run + 1 : 1;
    if (run <= config.max_repeat) squeezed.push_back(expanded[i]);
  }

  CodepointString out;
  out.reserve(squeezed.size());
  for (Codepoint cp : squeezed) {
    const Codepoint mapped = config.is_valid(cp) ? cp : kSpace;
    if (mapped == kSpace && (out.empty() || out.back() == kSpace)) continue;
    out.push_back(mapped);
  }
  if (!out.empty() && out.back() == kSpace) out.pop_back();
  return out;
}

std::string normalize_line(std::string_view text, const NormalizerConfig& config) {
  return encode_utf8(normalize_codepoints(decode_utf8(text), config));
}

namespace {

bool is_segment_break(Codepoint cp) {
  switch (cp) {
    case '\n':
    case '\r':
    case '.':
    case '!':
    case '?':
    case 0x061F:  // Arabic question mark
    case 0x06D4:  // Arabic full stop
    case 0x2029:  // paragraph separator
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<CandidateLine> segment_article(const RawArticle& article, const NormalizerConfig& config) {
  std::vector<CandidateLine> lines;
  const CodepointString text = decode_utf8(article.text);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && !is_segment_break(text[i])) continue;
    if (i > start) {
      CodepointString norm =
          normalize_codepoints(std::u32string_view(text).substr(start, i - start), config);
      if (!norm.empty()) lines.push_back({encode_utf8(norm), article.id});
    }
    start = i + 1;
  }
  return lines;
}

namespace {

std::string chars_to_string(const std::set<Codepoint>& set) {
  std::string out;
  for (Codepoint cp : set) append_utf8(out, cp);
  return out;
}

std::set<Codepoint> string_to_chars(const std::string& s) {
  const CodepointString cps = decode_utf8(s);
  return {cps.begin(), cps.end()};
}

}  // namespace

std::string normalizer_config_to_json(const NormalizerConfig& config) {
  nlohmann::ordered_json j;
  j["valid_chars"] = chars_to_string(config.valid_chars);
  j["diacritics"] = chars_to_string(config.diacritics);
  nlohmann::ordered_json lig = nlohmann::ordered_json::object();
  for (const auto& [from, to] : config.ligatures) {
    std::string key;
    append_utf8(key, from);
    lig[key] = encode_utf8(to);
  }
  j["ligatures"] = lig;
  j["max_repeat"] = config.max_repeat;
  return j.dump(2, ' ', /*ensure_ascii=*/true);
}

NormalizerConfig normalizer_config_from_json(std::string_view text) {
  NormalizerConfig c = NormalizerConfig::defaults();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (j.contains("valid_chars")) c.valid_chars = string_to_chars(j["valid_chars"].get<std::string>());
    if (j.contains("diacritics")) c.diacritics = string_to_chars(j["diacritics"].get<std::string>());
    if (j.contains("ligatures")) {
      c.ligatures.clear();
      for (const auto& [key, value] : j["ligatures"].items()) {
        const CodepointString k = decode_utf8(key);
        if (k.size() != 1) throw Error(ErrorKind::InvalidConfig, "ligature key must be one codepoint");
        c.ligatures[k[0]] = decode_utf8(value.get<std::string>());
      }
    }
    if (j.contains("max_repeat")) c.max_repeat = j["max_repeat"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("normalizer config: ") + e.what());
  }
  if (c.max_repeat < 1) throw Error(ErrorKind::InvalidConfig, "max_repeat must be at least 1");
  for (Codepoint required : {0xFEFBu, 0xFEF7u, 0xFEF9u, 0xFEF5u}) {
    if (!c.ligatures.count(required)) {
      throw Error(ErrorKind::InvalidConfig, "ligatures must cover the four lam-alef forms");
    }
  }
  for (Codepoint cp : c.valid_chars) {
    if (is_digit(cp) || is_ascii_letter(cp)) {
      throw Error(ErrorKind::InvalidConfig, "valid_chars must not contain digits or Latin letters");
    }
    if (c.diacritics.count(cp) || c.ligatures.count(cp)) {
      throw Error(ErrorKind::InvalidConfig, "valid_chars overlaps diacritics or ligature keys");
    }
  }
  for (const auto& [from, to] : c.ligatures) {
    for (Codepoint cp : to) {
      if (c.diacritics.count(cp) || c.ligatures.count(cp)) {
        throw Error(ErrorKind::InvalidConfig, "ligature expansion contains a diacritic or ligature");
      }
    }
  }
  return c;
}

}  // namespace arcorpus
