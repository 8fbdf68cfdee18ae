#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "periodlab/classification.hpp"
#include "periodlab/counting.hpp"
#include "periodlab/descriptor.hpp"
#include "periodlab/gapshift.hpp"
#include "periodlab/realize.hpp"
#include "periodlab/sofic.hpp"
#include "periodlab/zeta.hpp"

namespace periodlab {

using Json = nlohmann::ordered_json;

// Malformed input. Syntax errors carry line and column (1-based); schema
// errors carry the JSON pointer of the offending value instead.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             std::string pointer, const std::string& message);

  std::string source;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string pointer;
};

Json parse_json_text(const std::string& text, const std::string& source = "<input>");
std::string read_text_file(const std::string& path);

enum class InputKind { graph, labeled_graph, gap_set, forbidden_words, descriptor, rational_function };
std::string to_string(InputKind kind);
// Decided by the keys present; throws ParseError when nothing fits.
InputKind detect_input_kind(const Json& j, const std::string& source = "<input>");

Json to_json(const DirectedMultigraph& g);
Json to_json(const LabeledGraph& lg);
Json to_json(const PeriodSetDescriptor& desc);
Json to_json(const RationalFunction& f);
Json to_json(const GapSet& s);
Json to_json(const ForbiddenWordSpec& spec);
Json to_json(const std::vector<PeriodWitness>& witnesses);
Json to_json(const KriegerVerdict& verdict);
// First `count` generator words and the branch flag.
Json to_json(const ArbitrarySubshift& handle, std::size_t count);

// `source` names the input in diagnostics.
DirectedMultigraph graph_from_json(const Json& j, const std::string& source = "<input>");
LabeledGraph labeled_graph_from_json(const Json& j, const std::string& source = "<input>");
PeriodSetDescriptor descriptor_from_json(const Json& j, const std::string& source = "<input>");
RationalFunction rational_function_from_json(const Json& j, const std::string& source = "<input>");
GapSet gap_set_from_json(const Json& j, const std::string& source = "<input>");
ForbiddenWordSpec forbidden_words_from_json(const Json& j, const std::string& source = "<input>");

// Header n,p,q and one row per n.
std::string count_table_csv(const CountTable& table);

std::string to_dot(const DirectedMultigraph& g);
std::string to_dot(const LabeledGraph& lg);

struct DotGraph {
  DirectedMultigraph graph;
  std::optional<std::vector<char>> labels;  // present iff every edge has one
};
// Reads the subset of DOT written by to_dot.
DotGraph parse_dot(const std::string& text, const std::string& source = "<input>");

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace periodlab
