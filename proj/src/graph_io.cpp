#include "toughtree/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace toughtree {

namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxPrintable = 126;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t body_length(std::size_t n) { return (n * (n - 1) / 2 + 5) / 6; }

// Splits a line into whitespace-separated unsigned integers.
std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer", line_no);
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

bool blank(std::string_view line) { return line.find_first_not_of(" \t\r") == std::string_view::npos; }

// Parses an edge-list block whose header is at lines[0]; `first_line` is its line number.
Graph edgelist_block(const std::vector<std::string>& lines, std::size_t first_line) {
  auto header = parse_numbers(lines.at(0), first_line);
  if (header.size() != 2) throw ParseError("line " + std::to_string(first_line) + ": header must be \"n m\"", first_line);
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  if (n == 0 || n > Graph::kMaxOrder) {
    throw ParseError("line " + std::to_string(first_line) + ": order must lie in 1.." +
                         std::to_string(Graph::kMaxOrder),
                     first_line);
  }
  if (lines.size() != m + 1) {
    throw ParseError("line " + std::to_string(first_line) + ": header announces " + std::to_string(m) +
                         " edges but " + std::to_string(lines.size() - 1) + " follow",
                     first_line + lines.size() - 1);
  }
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t line_no = first_line + i;
    auto uv = parse_numbers(lines[i], line_no);
    if (uv.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": edge must be \"u v\"", line_no);
    if (uv[0] >= n || uv[1] >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range", line_no);
    }
    if (uv[0] == uv[1]) throw ParseError("line " + std::to_string(line_no) + ": self-loop", line_no);
    if (seen[uv[0]][uv[1]]) throw ParseError("line " + std::to_string(line_no) + ": duplicate edge", line_no);
    seen[uv[0]][uv[1]] = seen[uv[1]][uv[0]] = true;
    edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  return Graph(n, edges);
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (record.empty()) throw ParseError("empty graph6 record", 0);
  for (std::size_t i = 0; i < record.size(); ++i) {
    const auto c = static_cast<unsigned char>(record[i]);
    if (c < kBias || c > kMaxPrintable) {
      throw ParseError("byte " + std::to_string(i) + ": character code " + std::to_string(c) +
                           " outside graph6 range [63,126]",
                       i);
    }
  }
  const auto head = static_cast<unsigned char>(record[0]);
  if (head == kMaxPrintable) {
    throw ParseError("byte 0: extended graph6 order header (n > 62) is not supported", 0);
  }
  const std::size_t n = head - kBias;
  if (n == 0) throw ParseError("byte 0: graph6 order 0 is not supported", 0);

  const std::size_t expected = body_length(n);
  const std::size_t have = record.size() - 1;
  if (have < expected) {
    throw ParseError("byte " + std::to_string(record.size()) + ": truncated body, expected " +
                         std::to_string(expected) + " bytes after header, found " + std::to_string(have),
                     record.size());
  }
  if (have > expected) {
    throw ParseError("byte " + std::to_string(1 + expected) + ": trailing data after graph6 body", 1 + expected);
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const auto byte = static_cast<unsigned char>(record[1 + bit / 6]) - kBias;
      if ((byte >> (5 - bit % 6)) & 1U) edges.push_back({i, j});
    }
  }
  const std::size_t total_bits = expected * 6;
  for (; bit < total_bits; ++bit) {
    const auto byte = static_cast<unsigned char>(record[1 + bit / 6]) - kBias;
    if ((byte >> (5 - bit % 6)) & 1U) {
      throw ParseError("byte " + std::to_string(1 + bit / 6) + ": nonzero padding bit", 1 + bit / 6);
    }
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw std::invalid_argument("graph6 writer supports order <= 62, got " + std::to_string(n));
  }
  std::string out(1 + body_length(n), '\0');
  out[0] = static_cast<char>(kBias + n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] | (1 << (5 - bit % 6)));
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = static_cast<char>(out[i] + kBias);
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t first_line = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (lines.empty()) first_line = line_no;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty edge list", 0);
  return edgelist_block(lines, first_line);
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

GraphStreamReader::GraphStreamReader(std::istream& in, StreamFormat format, bool strict)
    : in_(in), format_(format), strict_(strict) {}

bool GraphStreamReader::next_line(std::string& line) {
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::optional<StreamItem> GraphStreamReader::next() {
  return format_ == StreamFormat::graph6 ? next_graph6() : next_edgelist();
}

std::optional<StreamItem> GraphStreamReader::next_graph6() {
  std::string line;
  while (next_line(line)) {
    std::string_view record = line;
    if (line_no_ == 1 && record.starts_with(kGraph6Header)) record.remove_prefix(kGraph6Header.size());
    if (record.empty()) continue;
    StreamItem item{index_++, line_no_, StreamRecordError{}};
    try {
      item.value = parse_graph6(record);
    } catch (const ParseError& e) {
      if (strict_) throw ParseError("line " + std::to_string(line_no_) + ": " + e.what(), line_no_);
      item.value = StreamRecordError{line_no_, e.what()};
    } catch (const std::invalid_argument& e) {
      if (strict_) throw ParseError("line " + std::to_string(line_no_) + ": " + e.what(), line_no_);
      item.value = StreamRecordError{line_no_, e.what()};
    }
    return item;
  }
  return std::nullopt;
}

std::optional<StreamItem> GraphStreamReader::next_edgelist() {
  std::string line;
  while (next_line(line)) {
    if (blank(line)) continue;
    const std::size_t first = line_no_;
    std::vector<std::string> block{line};
    StreamItem item{index_++, first, StreamRecordError{}};
    try {
      auto header = parse_numbers(line, first);
      if (header.size() != 2) throw ParseError("line " + std::to_string(first) + ": header must be \"n m\"", first);
      for (std::size_t i = 0; i < header[1]; ++i) {
        if (!next_line(line)) {
          throw ParseError("line " + std::to_string(line_no_) + ": stream ended inside an edge block", line_no_);
        }
        block.push_back(line);
      }
      item.value = edgelist_block(block, first);
    } catch (const ParseError& e) {
      if (strict_) throw;
      item.value = StreamRecordError{e.offset() == 0 ? first : e.offset(), e.what()};
    }
    return item;
  }
  return std::nullopt;
}

std::vector<StreamItem> read_stream(std::istream& in, StreamFormat format, bool strict) {
  GraphStreamReader reader(in, format, strict);
  std::vector<StreamItem> out;
  while (auto item = reader.next()) out.push_back(std::move(*item));
  return out;
}

}  // namespace toughtree
