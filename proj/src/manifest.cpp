#include "arcorpus/manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <memory>

#include <json.hpp>

#include "arcorpus/error.hpp"
#include "arcorpus/io.hpp"

namespace arcorpus {

namespace {

using MdCtx = std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)>;

MdCtx new_sha256() {
  MdCtx ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 init failed");
  }
  return ctx;
}

std::string finish_hex(EVP_MD_CTX* ctx) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  auto ctx = new_sha256();
  EVP_DigestUpdate(ctx.get(), data.data(), data.size());
  return finish_hex(ctx.get());
}

std::string sha256_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  auto ctx = new_sha256();
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return finish_hex(ctx.get());
}

void Manifest::add_input(const std::filesystem::path& p) {
  if (!std::filesystem::is_directory(p)) {
    inputs.push_back({p.string(), sha256_file(p)});
    return;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(p)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) inputs.push_back({f.string(), sha256_file(f)});
}

void Manifest::add_output(const std::filesystem::path& p) {
  outputs.push_back({p.string(), sha256_file(p)});
}

std::string Manifest::to_json() const {
  auto files = [](const std::vector<FileDigest>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : v) arr.push_back({{"path", f.path}, {"sha256", f.sha256}});
    return arr;
  };
  nlohmann::ordered_json j;
  j["stage"] = stage;
  j["inputs"] = files(inputs);
  j["outputs"] = files(outputs);
  j["config_digest"] = config_digest;
  j["seed"] = seed;
  j["count_in"] = count_in;
  j["count_out"] = count_out;
  return j.dump(2);
}

Manifest Manifest::from_json(std::string_view text) {
  Manifest m;
  try {
    const auto j = nlohmann::json::parse(text);
    m.stage = j.at("stage").get<std::string>();
    for (const auto& f : j.at("inputs")) m.inputs.push_back({f.at("path"), f.at("sha256")});
    for (const auto& f : j.at("outputs")) m.outputs.push_back({f.at("path"), f.at("sha256")});
    m.config_digest = j.at("config_digest").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.count_in = j.at("count_in").get<std::uint64_t>();
    m.count_out = j.at("count_out").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedRecord, std::string("manifest: ") + e.what());
  }
  return m;
}

void Manifest::write(const std::filesystem::path& path) const {
  auto out = open_output(path);
  out << to_json() << '\n';
}

}  // namespace arcorpus
