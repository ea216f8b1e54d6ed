#include "arcorpus/injector.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "arcorpus/error.hpp"
#include "arcorpus/normalizer.hpp"
#include "arcorpus/parallel.hpp"

namespace arcorpus {

namespace {

constexpr int kMaxRedraws = 16;
constexpr std::uint64_t kPsiSalt = 0x707369;  // "psi"

constexpr std::array<const char*, kOpKindCount> kOpNames = {
    "insertion", "deletion", "substitution", "transposition", "mapping"};

std::string utf8(std::u32string_view s) { return encode_utf8(s); }

std::string utf8(Codepoint cp) {
  std::string out;
  append_utf8(out, cp);
  return out;
}

}  // namespace

const char* to_string(OpKind kind) noexcept { return kOpNames[static_cast<std::size_t>(kind)]; }

std::optional<OpKind> op_kind_from_string(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kOpNames.size(); ++i) {
    if (name == kOpNames[i]) return static_cast<OpKind>(i);
  }
  return std::nullopt;
}

CorruptionConfig CorruptionConfig::defaults() {
  CorruptionConfig c;
  c.alphabet = NormalizerConfig::defaults().alphabet();
  c.keyboard_neighbors = arabic_keyboard_neighbors();
  c.mapping_rules = default_mapping_rules();
  return c;
}

void CorruptionConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidConfig, msg); };
  auto check_psi = [&](double p) {
    if (!(p >= 0.0 && p <= 1.0)) fail("corruption ratio must lie in [0, 1]");
  };
  std::visit(
      [&](const auto& policy) {
        using T = std::decay_t<decltype(policy)>;
        if constexpr (std::is_same_v<T, FixedPsi>) {
          check_psi(policy.psi);
        } else if constexpr (std::is_same_v<T, MixedPsi>) {
          if (policy.psis.empty()) fail("mixed policy needs at least one ratio");
          for (double p : policy.psis) check_psi(p);
        } else {
          check_psi(policy.min);
          check_psi(policy.max);
          if (!(policy.min < policy.max)) fail("varied policy needs min < max");
        }
      },
      psi);
  if (ops.empty()) fail("ops must not be empty");
  if (!op_weights.empty()) {
    if (op_weights.size() != ops.size()) fail("op_weights must match ops in length");
    double total = 0.0;
    for (double w : op_weights) {
      if (!(w >= 0.0) || !std::isfinite(w)) fail("op weights must be finite and non-negative");
      total += w;
    }
    if (!(total > 0.0)) fail("op weights must not all be zero");
  }
  if (!(substitution_keyboard_prob >= 0.0 && substitution_keyboard_prob <= 1.0)) {
    fail("substitution_keyboard_prob must lie in [0, 1]");
  }
  const std::set<Codepoint> valid(alphabet.begin(), alphabet.end());
  if (valid.size() < 2) fail("alphabet needs at least two codepoints");
  for (const auto& [key, neighbors] : keyboard_neighbors) {
    for (Codepoint n : neighbors) {
      if (!valid.count(n)) fail("keyboard neighbor outside the alphabet");
    }
  }
  for (const auto& rule : mapping_rules) {
    if (rule.pattern.empty()) fail("mapping pattern must not be empty");
    if (rule.targets.empty()) fail("mapping rule needs at least one target");
    for (const auto& t : rule.targets) {
      for (Codepoint cp : t) {
        if (!valid.count(cp)) fail("mapping target outside the alphabet");
      }
    }
  }
}

std::size_t OpRecord::cost_bound() const {
  if (!applied) return 0;
  if (kind == OpKind::Transposition) return 2;
  return std::max(codepoint_count(removed), codepoint_count(added));
}

std::size_t op_count(std::size_t length, double psi) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(length) * psi + 1e-9));
}

OpRecord insert_at(CodepointString& line, std::size_t pos, Codepoint cp) {
  if (pos > line.size()) return {OpKind::Insertion, pos, "", "", false};
  line.insert(line.begin() + static_cast<std::ptrdiff_t>(pos), cp);
  return {OpKind::Insertion, pos, "", utf8(cp), true};
}

OpRecord delete_at(CodepointString& line, std::size_t pos, std::size_t count) {
  if (count == 0 || pos + count > line.size()) return {OpKind::Deletion, pos, "", "", false};
  OpRecord rec{OpKind::Deletion, pos, utf8(std::u32string_view(line).substr(pos, count)), "", true};
  line.erase(pos, count);
  return rec;
}

OpRecord substitute_at(CodepointString& line, std::size_t pos, Codepoint cp) {
  if (pos >= line.size()) return {OpKind::Substitution, pos, "", "", false};
  OpRecord rec{OpKind::Substitution, pos, utf8(line[pos]), utf8(cp), true};
  line[pos] = cp;
  return rec;
}

OpRecord transpose_at(CodepointString& line, std::size_t pos) {
  if (pos + 1 >= line.size()) return {OpKind::Transposition, pos, "", "", false};
  OpRecord rec{OpKind::Transposition, pos, utf8(std::u32string_view(line).substr(pos, 2)), "", true};
  std::swap(line[pos], line[pos + 1]);
  rec.added = utf8(std::u32string_view(line).substr(pos, 2));
  return rec;
}

OpRecord replace_at(CodepointString& line, std::size_t pos, std::size_t length,
                    const CodepointString& target) {
  if (pos + length > line.size()) return {OpKind::Mapping, pos, "", "", false};
  OpRecord rec{OpKind::Mapping, pos, utf8(std::u32string_view(line).substr(pos, length)), utf8(target),
               true};
  line.replace(pos, length, target);
  return rec;
}

namespace {

struct Match {
  std::size_t rule;
  std::vector<std::size_t> positions;
};

std::vector<Match> find_patterns(const CodepointString& line, const std::vector<MappingRule>& rules) {
  std::vector<Match> matches;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    Match m{r, {}};
    for (std::size_t p = line.find(rules[r].pattern); p != CodepointString::npos;
         p = line.find(rules[r].pattern, p + 1)) {
      m.positions.push_back(p);
    }
    if (!m.positions.empty()) matches.push_back(std::move(m));
  }
  return matches;
}

Codepoint draw_other(Rng& rng, const CodepointString& alphabet, Codepoint exclude) {
  const std::size_t skip = alphabet.find(exclude);
  if (skip == CodepointString::npos) return alphabet[rng.uniform_index(alphabet.size())];
  std::size_t k = rng.uniform_index(alphabet.size() - 1);
  if (k >= skip) ++k;
  return alphabet[k];
}

OpKind draw_kind(Rng& rng, const CorruptionConfig& config) {
  if (config.op_weights.empty()) return config.ops[rng.uniform_index(config.ops.size())];
  double total = 0.0;
  for (double w : config.op_weights) total += w;
  double u = rng.uniform_real() * total;
  for (std::size_t i = 0; i < config.ops.size(); ++i) {
    if (u < config.op_weights[i]) return config.ops[i];
    u -= config.op_weights[i];
  }
  return config.ops.back();
}

}  // namespace

std::optional<OpRecord> apply_op(CodepointString& line, OpKind kind, Rng& rng,
                                 const CorruptionConfig& config) {
  switch (kind) {
    case OpKind::Insertion: {
      const std::size_t pos = rng.uniform_index(line.size() + 1);
      return insert_at(line, pos, config.alphabet[rng.uniform_index(config.alphabet.size())]);
    }
    case OpKind::Deletion: {
      if (line.empty()) return std::nullopt;
      if (config.pattern_deletion && rng.uniform_real() < 0.5) {
        const auto matches = find_patterns(line, config.mapping_rules);
        if (!matches.empty()) {
          const Match& m = matches[rng.uniform_index(matches.size())];
          const std::size_t pos = m.positions[rng.uniform_index(m.positions.size())];
          return delete_at(line, pos, config.mapping_rules[m.rule].pattern.size());
        }
      }
      return delete_at(line, rng.uniform_index(line.size()));
    }
    case OpKind::Substitution: {
      if (line.empty()) return std::nullopt;
      const std::size_t pos = rng.uniform_index(line.size());
      const Codepoint original = line[pos];
      const bool keyboard = rng.uniform_real() < config.substitution_keyboard_prob;
      if (keyboard) {
        if (auto it = config.keyboard_neighbors.find(original);
            it != config.keyboard_neighbors.end() && !it->second.empty()) {
          return substitute_at(line, pos, it->second[rng.uniform_index(it->second.size())]);
        }
      }
      return substitute_at(line, pos, draw_other(rng, config.alphabet, original));
    }
    case OpKind::Transposition: {
      if (line.size() < 2) return std::nullopt;
      return transpose_at(line, rng.uniform_index(line.size() - 1));
    }
    case OpKind::Mapping: {
      if (line.empty()) return std::nullopt;
      const auto matches = find_patterns(line, config.mapping_rules);
      if (matches.empty()) return OpRecord{OpKind::Mapping, 0, "", "", false};
      const Match& m = matches[rng.uniform_index(matches.size())];
      const MappingRule& rule = config.mapping_rules[m.rule];
      const std::size_t pos = m.positions[rng.uniform_index(m.positions.size())];
      const CodepointString& target = rule.targets[rng.uniform_index(rule.targets.size())];
      return replace_at(line, pos, rule.pattern.size(), target);
    }
  }
  return std::nullopt;
}

SentencePair corrupt_line(std::string_view line, double psi, std::uint64_t seed,
                          const CorruptionConfig& config) {
  CodepointString work = decode_utf8(line);
  const std::size_t ops = op_count(work.size(), psi);
  Rng rng(seed);
  SentencePair pair;
  pair.clean = std::string(line);
  pair.psi_used = psi;
  pair.ops.reserve(ops);
  for (std::size_t k = 0; k < ops; ++k) {
    OpKind kind = OpKind::Insertion;
    std::optional<OpRecord> rec;
    for (int attempt = 0; attempt < kMaxRedraws && !rec; ++attempt) {
      kind = draw_kind(rng, config);
      rec = apply_op(work, kind, rng, config);
    }
    pair.ops.push_back(rec ? *rec : OpRecord{kind, 0, "", "", false});
  }
  pair.corrupted = ops == 0 ? pair.clean : encode_utf8(work);
  return pair;
}

std::size_t psi_slots(const PsiPolicy& policy) {
  if (const auto* mixed = std::get_if<MixedPsi>(&policy)) return mixed->psis.size();
  return 1;
}

namespace {

double slot_psi(const CorruptionConfig& config, std::uint64_t index, std::size_t slot) {
  return std::visit(
      [&](const auto& policy) -> double {
        using T = std::decay_t<decltype(policy)>;
        if constexpr (std::is_same_v<T, FixedPsi>) {
          return policy.psi;
        } else if constexpr (std::is_same_v<T, MixedPsi>) {
          return policy.psis[slot];
        } else {
          Rng rng(derive_seed(config.seed, index, kPsiSalt));
          return policy.min + (policy.max - policy.min) * rng.uniform_real();
        }
      },
      config.psi);
}

}  // namespace

CorruptionResult corrupt_batch(std::span<const std::string> lines, const CorruptionConfig& config,
                               std::size_t slot, std::uint64_t first_index, unsigned workers) {
  auto pairs = parallel_map<SentencePair>(lines.size(), workers, [&](std::size_t i) {
    const std::uint64_t index = first_index + i;
    SentencePair p = corrupt_line(lines[i], slot_psi(config, index, slot),
                                  derive_seed(config.seed, index, slot), config);
    p.line_index = index;
    return p;
  });
  CorruptionResult result;
  result.pairs.reserve(pairs.size());
  for (auto& p : pairs) {
    if (p.corrupted.empty()) {
      ++result.discarded;
    } else {
      result.pairs.push_back(std::move(p));
    }
  }
  return result;
}

CorruptionResult corrupt_corpus(std::span<const std::string> lines, const CorruptionConfig& config,
                                unsigned workers) {
  config.validate();
  CorruptionResult all;
  for (std::size_t slot = 0; slot < psi_slots(config.psi); ++slot) {
    CorruptionResult part = corrupt_batch(lines, config, slot, 0, workers);
    all.discarded += part.discarded;
    std::move(part.pairs.begin(), part.pairs.end(), std::back_inserter(all.pairs));
  }
  return all;
}

std::string op_log_record(const SentencePair& pair) {
  nlohmann::ordered_json j;
  j["index"] = pair.line_index;
  j["psi"] = pair.psi_used;
  nlohmann::ordered_json ops = nlohmann::ordered_json::array();
  for (const auto& op : pair.ops) {
    nlohmann::ordered_json o;
    o["kind"] = to_string(op.kind);
    o["pos"] = op.position;
    o["removed"] = op.removed;
    o["added"] = op.added;
    o["applied"] = op.applied;
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  return j.dump(-1, ' ', true);
}

// JSON layout:
//   {"psi": {"policy": "fixed", "value": 0.05}
//          | {"policy": "mixed", "values": [...]}
//          | {"policy": "varied", "min": a, "max": b},
//    "ops": ["insertion", ...], "op_weights": [...],
//    "keyboard_neighbors": {"<char>": "<neighbors>"},
//    "mapping_rules": [{"pattern": "...", "targets": ["..."]}],
//    "substitution_keyboard_prob": p, "pattern_deletion": bool,
//    "alphabet": "...", "seed": n}
std::string corruption_config_to_json(const CorruptionConfig& config) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json psi;
  std::visit(
      [&](const auto& policy) {
        using T = std::decay_t<decltype(policy)>;
        if constexpr (std::is_same_v<T, FixedPsi>) {
          psi["policy"] = "fixed";
          psi["value"] = policy.psi;
        } else if constexpr (std::is_same_v<T, MixedPsi>) {
          psi["policy"] = "mixed";
          psi["values"] = policy.psis;
        } else {
          psi["policy"] = "varied";
          psi["min"] = policy.min;
          psi["max"] = policy.max;
        }
      },
      config.psi);
  j["psi"] = psi;
  std::vector<std::string> ops;
  for (OpKind k : config.ops) ops.emplace_back(to_string(k));
  j["ops"] = ops;
  if (!config.op_weights.empty()) j["op_weights"] = config.op_weights;
  nlohmann::ordered_json kb = nlohmann::ordered_json::object();
  for (const auto& [key, neighbors] : config.keyboard_neighbors) kb[utf8(key)] = utf8(neighbors);
  j["keyboard_neighbors"] = kb;
  nlohmann::ordered_json rules = nlohmann::ordered_json::array();
  for (const auto& rule : config.mapping_rules) {
    nlohmann::ordered_json r;
    r["pattern"] = utf8(rule.pattern);
    std::vector<std::string> targets;
    for (const auto& t : rule.targets) targets.push_back(utf8(t));
    r["targets"] = targets;
    rules.push_back(r);
  }
  j["mapping_rules"] = rules;
  j["substitution_keyboard_prob"] = config.substitution_keyboard_prob;
  j["pattern_deletion"] = config.pattern_deletion;
  j["alphabet"] = utf8(config.alphabet);
  j["seed"] = config.seed;
  return j.dump(2, ' ', true);
}

CorruptionConfig corruption_config_from_json(std::string_view text) {
  CorruptionConfig c = CorruptionConfig::defaults();
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.contains("psi")) {
      const auto& p = j["psi"];
      if (p.is_number()) {
        c.psi = FixedPsi{p.get<double>()};
      } else {
        const std::string policy = p.at("policy").get<std::string>();
        if (policy == "fixed") {
          c.psi = FixedPsi{p.at("value").get<double>()};
        } else if (policy == "mixed") {
          c.psi = MixedPsi{p.at("values").get<std::vector<double>>()};
        } else if (policy == "varied") {
          c.psi = VariedPsi{p.at("min").get<double>(), p.at("max").get<double>()};
        } else {
          throw Error(ErrorKind::InvalidConfig, "unknown psi policy '" + policy + "'");
        }
      }
    }
    if (j.contains("ops")) {
      c.ops.clear();
      for (const auto& name : j["ops"]) {
        auto kind = op_kind_from_string(name.get<std::string>());
        if (!kind) throw Error(ErrorKind::InvalidConfig, "unknown op '" + name.get<std::string>() + "'");
        c.ops.push_back(*kind);
      }
    }
    if (j.contains("op_weights")) c.op_weights = j["op_weights"].get<std::vector<double>>();
    if (j.contains("alphabet")) c.alphabet = decode_utf8(j["alphabet"].get<std::string>());
    if (j.contains("keyboard_neighbors")) {
      c.keyboard_neighbors.clear();
      for (const auto& [key, value] : j["keyboard_neighbors"].items()) {
        const CodepointString k = decode_utf8(key);
        if (k.size() != 1) throw Error(ErrorKind::InvalidConfig, "keyboard key must be one codepoint");
        c.keyboard_neighbors[k[0]] = decode_utf8(value.get<std::string>());
      }
    }
    if (j.contains("mapping_rules")) {
      c.mapping_rules.clear();
      for (const auto& r : j["mapping_rules"]) {
        MappingRule rule;
        rule.pattern = decode_utf8(r.at("pattern").get<std::string>());
        for (const auto& t : r.at("targets")) rule.targets.push_back(decode_utf8(t.get<std::string>()));
        c.mapping_rules.push_back(std::move(rule));
      }
    }
    c.substitution_keyboard_prob = j.value("substitution_keyboard_prob", c.substitution_keyboard_prob);
    c.pattern_deletion = j.value("pattern_deletion", c.pattern_deletion);
    c.seed = j.value("seed", c.seed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("corruption config: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace arcorpus
