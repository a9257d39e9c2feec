#include "vpos/io.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

namespace vpos {

namespace {

constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'
constexpr uint64_t kMaxParseVertices = 1 << 22;

[[noreturn]] void fail(const std::string& msg, size_t offset) {
  throw ParseError(msg + " at byte " + std::to_string(offset), offset);
}

int sixbits(std::string_view s, size_t i) {
  if (i >= s.size()) fail("graph6 data truncated", s.size());
  unsigned char c = s[i];
  if (c < kLo || c > kHi) fail("graph6 character out of range", i);
  return c - kLo;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) fail("empty graph6 string", 0);

  size_t pos = 0;
  uint64_t n;
  if (sixbits(text, 0) < 63) {
    n = sixbits(text, 0);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) != kHi) {
    n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | sixbits(text, i);
    pos = 4;
  } else {
    n = 0;
    for (size_t i = 2; i <= 7; ++i) n = (n << 6) | sixbits(text, i);
    pos = 8;
  }
  if (n > kMaxParseVertices) fail("graph too large", 0);

  uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (text.size() - pos < nbytes) fail("graph6 data truncated", text.size());
  if (text.size() - pos > nbytes) fail("trailing bytes after graph6 data", pos + nbytes);

  std::vector<Edge> edges;
  uint64_t bit = 0;
  for (int j = 1; j < static_cast<int>(n); ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int b = sixbits(text, pos + bit / 6);
      if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  // padding bits must be zero
  if (nbytes > 0) {
    int last = sixbits(text, pos + nbytes - 1);
    int pad = static_cast<int>(nbytes * 6 - nbits);
    if (last & ((1 << pad) - 1)) fail("nonzero padding bits", pos + nbytes - 1);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  uint64_t n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLo));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kHi));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kLo));
  } else {
    out.push_back(static_cast<char>(kHi));
    out.push_back(static_cast<char>(kHi));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kLo));
  }
  uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<char> body((nbits + 5) / 6, 0);
  uint64_t bit = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) body[bit / 6] |= 1 << (5 - bit % 6);
  for (char b : body) out.push_back(static_cast<char>(b + kLo));
  return out;
}

namespace {

[[noreturn]] void fail_line(const std::string& msg, size_t line) {
  throw ParseError(msg + " at line " + std::to_string(line), line);
}

bool parse_int(std::string_view tok, long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

// splits a significant line into whitespace-separated tokens
std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  long n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> seen;
  size_t lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = tokens_of(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (toks.size() != 2) fail_line("expected two integers", lineno);
    long a, b;
    if (!parse_int(toks[0], a) || !parse_int(toks[1], b))
      fail_line("malformed integer", lineno);
    if (n < 0) {
      if (a < 0 || b < 0) fail_line("negative counts in header", lineno);
      n = a;
      m = b;
      seen.assign(n, std::vector<char>(n, 0));
      continue;
    }
    if (static_cast<long>(edges.size()) >= m) fail_line("more edges than declared", lineno);
    if (a < 0 || a >= n || b < 0 || b >= n) fail_line("vertex id out of range", lineno);
    if (a == b) fail_line("self-loop", lineno);
    if (seen[a][b]) fail_line("duplicate edge", lineno);
    seen[a][b] = seen[b][a] = 1;
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) fail_line("missing header", lineno);
  if (static_cast<long>(edges.size()) != m) fail_line("fewer edges than declared", lineno);
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace vpos
