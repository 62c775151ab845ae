#include "ustcon/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ustcon/errors.hpp"

namespace ustcon {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

// Parses exactly `count` unsigned integers separated by spaces.
std::vector<std::uint64_t> parse_fields(const std::string& line, std::size_t lineno,
                                        std::size_t count) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError(lineno, "expected an unsigned integer in '" + line + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  if (out.size() != count) {
    throw ParseError(lineno, "expected " + std::to_string(count) + " fields, got " +
                                 std::to_string(out.size()));
  }
  return out;
}

}  // namespace

MultiGraph parse_edge_list(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected header 'N M'");
  const auto header = parse_fields(lines[0], 1, 2);
  MultiGraph g;
  g.n = static_cast<std::uint32_t>(header[0]);
  const std::uint64_t m = header[1];
  if (lines.size() != 1 + m) {
    throw ParseError(lines.size() < 1 + m ? lines.size() + 1 : 2 + m,
                     "header promises " + std::to_string(m) + " edges, file has " +
                         std::to_string(lines.size() - 1) + " edge lines");
  }
  for (std::uint64_t e = 0; e < m; ++e) {
    const std::size_t lineno = 2 + e;
    const auto f = parse_fields(lines[1 + e], lineno, 2);
    if (f[0] >= g.n || f[1] >= g.n) {
      throw ParseError(lineno, "endpoint out of range [0, " + std::to_string(g.n) + ")");
    }
    g.edges.emplace_back(static_cast<std::uint32_t>(f[0]), static_cast<std::uint32_t>(f[1]));
  }
  return g;
}

std::string write_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

RotationMap parse_rotation_map(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected header 'N D'");
  const auto header = parse_fields(lines[0], 1, 2);
  RotationMap r;
  r.n = header[0];
  r.d = static_cast<std::uint32_t>(header[1]);
  const std::uint64_t slots = r.slots();
  if (lines.size() != 1 + slots) {
    throw ParseError(lines.size() < 1 + slots ? lines.size() + 1 : 2 + slots,
                     "header promises " + std::to_string(slots) + " slot lines, file has " +
                         std::to_string(lines.size() - 1));
  }
  r.table.assign(slots, 0);
  for (std::uint64_t s = 0; s < slots; ++s) {
    const std::size_t lineno = 2 + s;
    const auto f = parse_fields(lines[1 + s], lineno, 4);
    if (f[0] != s / r.d || f[1] != s % r.d) {
      throw ParseError(lineno, "slots must appear in lexicographic (v, i) order");
    }
    if (f[2] >= r.n || f[3] >= r.d) {
      throw ParseError(lineno, "image slot out of range");
    }
    r.table[s] = f[2] * r.d + f[3];
  }
  const auto verdict = validate_rotation_map(r);
  if (!verdict.valid) {
    throw ParseError(1, "table is not an involution: " + verdict.violations.front());
  }
  return r;
}

std::string write_rotation_map(const RotationMap& r) {
  std::ostringstream out;
  out << r.n << ' ' << r.d << '\n';
  for (std::uint64_t s = 0; s < r.slots(); ++s) {
    out << s / r.d << ' ' << s % r.d << ' ' << r.table[s] / r.d << ' ' << r.table[s] % r.d << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

}  // namespace ustcon
