#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace arcorpus {

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

struct FileDigest {
  std::string path;
  std::string sha256;
};

// Provenance record written next to every stage's outputs. A stage's input
// digests match the output digests of the manifest that produced them, which
// is how chained manifests link up.
struct Manifest {
  std::string stage;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  std::string config_digest;  // sha256 of the canonical config JSON
  std::uint64_t seed = 0;
  std::uint64_t count_in = 0;
  std::uint64_t count_out = 0;

  // A directory adds every regular file below it, in path order.
  void add_input(const std::filesystem::path& p);
  void add_output(const std::filesystem::path& p);

  std::string to_json() const;
  static Manifest from_json(std::string_view json);
  void write(const std::filesystem::path& path) const;
};

}  // namespace arcorpus
