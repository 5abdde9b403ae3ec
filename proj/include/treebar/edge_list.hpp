#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <fcntl.h>
#include <sys/mman.h>
#include <sys/stat.h>
#include <unistd.h>

namespace treebar {

// Parsing failure with 1-based line number; message carries origin:line context.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::uint64_t line)
      : std::runtime_error(msg), line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

class IOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  // Each character is a line-comment prefix. '%' covers Konect, '#' covers SNAP.
  std::string comment_prefixes = "%#";
};

struct RawEdgeList {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::uint64_t skipped_lines = 0;  // comment and blank lines
  std::string origin = "<memory>";
  bool declared_directed = false;  // set when a header comment mentions "asym"
};

namespace detail {

inline bool parse_u64(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

inline std::string_view next_token(std::string_view& rest) {
  std::size_t b = rest.find_first_not_of(" \t");
  if (b == std::string_view::npos) {
    rest = {};
    return {};
  }
  std::size_t e = rest.find_first_of(" \t", b);
  std::string_view tok = rest.substr(b, e == std::string_view::npos ? e : e - b);
  rest = e == std::string_view::npos ? std::string_view{} : rest.substr(e);
  return tok;
}

}  // namespace detail

// Parse a whole in-memory edge-list text. Lines hold two integer ids followed
// by optional extra tokens (weights, timestamps) which are ignored.
inline RawEdgeList parse_edge_list(std::string_view text, const ParseOptions& opts = {},
                                   std::string origin = "<memory>") {
  RawEdgeList raw;
  raw.origin = std::move(origin);
  std::uint64_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      ++raw.skipped_lines;
      continue;
    }
    if (opts.comment_prefixes.find(line[first]) != std::string::npos) {
      ++raw.skipped_lines;
      if (raw.edges.empty() && line.find("asym") != std::string_view::npos)
        raw.declared_directed = true;
      continue;
    }
    std::string_view rest = line.substr(first);
    std::string_view t1 = detail::next_token(rest);
    std::string_view t2 = detail::next_token(rest);
    std::uint64_t u = 0, v = 0;
    if (!detail::parse_u64(t1, u) || !detail::parse_u64(t2, v))
      throw ParseError(raw.origin + ":" + std::to_string(line_no) +
                           ": malformed edge line (expected two integer ids)",
                       line_no);
    raw.edges.emplace_back(u, v);
  }
  if (raw.edges.empty())
    throw ParseError(raw.origin + ": no edges", line_no);
  return raw;
}

inline RawEdgeList parse_edge_list(std::istream& in, const ParseOptions& opts = {},
                                   std::string origin = "<stream>") {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_edge_list(std::string_view(text), opts, std::move(origin));
}

namespace detail {

// Read-only memory map, used for inputs too large to slurp comfortably.
class MappedFile {
 public:
  explicit MappedFile(const std::string& path) {
    fd_ = ::open(path.c_str(), O_RDONLY);
    if (fd_ < 0) throw IOError("cannot open file: " + path);
    struct stat st{};
    if (::fstat(fd_, &st) != 0) {
      ::close(fd_);
      throw IOError("cannot stat file: " + path);
    }
    size_ = static_cast<std::size_t>(st.st_size);
    if (size_ > 0) {
      void* p = ::mmap(nullptr, size_, PROT_READ, MAP_PRIVATE, fd_, 0);
      if (p == MAP_FAILED) {
        ::close(fd_);
        throw IOError("cannot mmap file: " + path);
      }
      data_ = static_cast<const char*>(p);
      ::madvise(const_cast<char*>(data_), size_, MADV_SEQUENTIAL);
    }
  }
  MappedFile(const MappedFile&) = delete;
  MappedFile& operator=(const MappedFile&) = delete;
  ~MappedFile() {
    if (data_) ::munmap(const_cast<char*>(data_), size_);
    if (fd_ >= 0) ::close(fd_);
  }
  std::string_view view() const { return {data_, size_}; }

 private:
  int fd_ = -1;
  const char* data_ = nullptr;
  std::size_t size_ = 0;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultMmapThreshold = 1ull << 30;  // 1 GiB

inline RawEdgeList parse_edge_list_file(const std::string& path,
                                        const ParseOptions& opts = {},
                                        std::uint64_t mmap_threshold = kDefaultMmapThreshold) {
  struct stat st{};
  if (::stat(path.c_str(), &st) != 0)
    throw IOError("cannot open file: " + path);
  if (static_cast<std::uint64_t>(st.st_size) >= mmap_threshold) {
    detail::MappedFile mf(path);
    return parse_edge_list(mf.view(), opts, path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open file: " + path);
  return parse_edge_list(in, opts, path);
}

// Validation for callers that require a symmetric edge relation as written:
// every non-loop (u,v) line must have a matching (v,u) line somewhere.
inline void check_strict_undirected(const RawEdgeList& raw) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  pairs.reserve(raw.edges.size());
  for (const auto& [u, v] : raw.edges)
    if (u != v) pairs.emplace_back(u, v);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [u, v] : pairs) {
    if (!std::binary_search(pairs.begin(), pairs.end(), std::make_pair(v, u)))
      throw ValidationError(raw.origin + ": asymmetric edge (" +
                            std::to_string(u) + "," + std::to_string(v) +
                            ") has no reverse entry");
  }
}

}  // namespace treebar
