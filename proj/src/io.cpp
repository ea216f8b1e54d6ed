#include "arcorpus/io.hpp"

#include <sstream>

#include "arcorpus/error.hpp"

namespace arcorpus {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  return out;
}

namespace {

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<std::string> lines;
  std::string line;
  while (next_line(in, line)) lines.push_back(line);
  if (in.bad()) throw Error(ErrorKind::Io, "read failed on " + path.string());
  return lines;
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  auto out = open_output(path);
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw Error(ErrorKind::Io, "write failed on " + path.string());
}

void for_each_line_batch(const std::filesystem::path& path, std::size_t batch,
                         const std::function<void(std::vector<std::string>&, std::size_t)>& fn) {
  auto in = open_input(path);
  std::vector<std::string> lines;
  std::size_t first = 0;
  std::string line;
  while (next_line(in, line)) {
    lines.push_back(std::move(line));
    if (lines.size() == batch) {
      fn(lines, first);
      first += lines.size();
      lines.clear();
    }
  }
  if (in.bad()) throw Error(ErrorKind::Io, "read failed on " + path.string());
  if (!lines.empty()) fn(lines, first);
}

bool parse_pair_row(std::string_view line, PairRow& out) {
  const std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) return false;
  out.corrupted.assign(line.substr(0, tab));
  out.clean.assign(line.substr(tab + 1));
  return true;
}

std::vector<PairRow> read_pairs(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<PairRow> rows;
  std::string line;
  std::size_t number = 0;
  while (next_line(in, line)) {
    ++number;
    PairRow row;
    if (!parse_pair_row(line, row)) {
      throw Error(ErrorKind::MalformedRecord,
                  path.string() + ":" + std::to_string(number) + ": expected corrupted<TAB>clean");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace arcorpus
