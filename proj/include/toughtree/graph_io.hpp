#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "toughtree/graph.hpp"

namespace toughtree {

/// Decoding failure; `offset` is the 0-based byte position inside the record
/// (or line number for edge lists) where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset) : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest order representable with the single-byte graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one graph6 record (no trailing newline). Order 0 is rejected
/// because Graph requires at least one vertex.
Graph parse_graph6(std::string_view record);

std::string write_graph6(const Graph& g);

/// "n m" header followed by m lines "u v" (0-based).
Graph parse_edgelist(std::string_view text);
std::string write_edgelist(const Graph& g);

enum class StreamFormat { graph6, edgelist };

struct StreamRecordError {
  std::size_t line = 0;  // 1-based line number in the input
  std::string message;
};

struct StreamItem {
  std::size_t index = 0;  // 0-based position among records
  std::size_t line = 0;
  std::variant<Graph, StreamRecordError> value;

  bool ok() const { return std::holds_alternative<Graph>(value); }
  const Graph& graph() const { return std::get<Graph>(value); }
  const StreamRecordError& error() const { return std::get<StreamRecordError>(value); }
};

/// Sequential reader over a graph stream. graph6 streams hold one record per
/// line (blank lines and a leading ">>graph6<<" header are skipped); edge-list
/// streams hold consecutive "n m" blocks.
///
/// In strict mode the first malformed record throws ParseError (offset = line
/// number); in lenient mode it is yielded as an error item and reading goes on.
class GraphStreamReader {
 public:
  GraphStreamReader(std::istream& in, StreamFormat format, bool strict = true);

  std::optional<StreamItem> next();

 private:
  bool next_line(std::string& line);
  std::optional<StreamItem> next_graph6();
  std::optional<StreamItem> next_edgelist();

  std::istream& in_;
  StreamFormat format_;
  bool strict_;
  std::size_t line_no_ = 0;
  std::size_t index_ = 0;
};

/// Convenience: the whole stream as a vector.
std::vector<StreamItem> read_stream(std::istream& in, StreamFormat format, bool strict = true);

}  // namespace toughtree
