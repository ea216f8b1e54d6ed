#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace arcorpus {

// Throws Error(Io) naming the path when the file cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

// Reads LF-terminated lines (a trailing CR is stripped).
std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);

// Calls fn with up to `batch` lines at a time plus the 0-based index of the
// first line in the batch.
void for_each_line_batch(const std::filesystem::path& path, std::size_t batch,
                         const std::function<void(std::vector<std::string>&, std::size_t)>& fn);

struct PairRow {
  std::string corrupted;
  std::string clean;
};

// `corrupted<TAB>clean`; returns false unless there is exactly one tab.
bool parse_pair_row(std::string_view line, PairRow& out);

// Throws Error(MalformedRecord) with "path:line" on a bad row.
std::vector<PairRow> read_pairs(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace arcorpus
