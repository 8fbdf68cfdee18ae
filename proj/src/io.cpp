#include "periodlab/io.hpp"

#include <cctype>
#include <cstdio>
#include <limits>
#include <fstream>
#include <sstream>

namespace periodlab {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column,
                       std::string pointer, const std::string& message)
    : std::runtime_error([&] {
        std::string where = source;
        if (line > 0)
          where += ":" + std::to_string(line) + ":" + std::to_string(column);
        if (!pointer.empty())
          where += " at " + pointer;
        return where + ": " + message;
      }()),
      source(source),
      line(line),
      column(column),
      pointer(std::move(pointer))
{
}

Json parse_json_text(const std::string& text, const std::string& source)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at ..."
    if (auto p = msg.find(": "); p != std::string::npos)
      msg = msg.substr(p + 2);
    throw ParseError(source, line, column, "", msg);
  }
}

std::string read_text_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path, 0, 0, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string to_string(InputKind kind)
{
  switch (kind) {
    case InputKind::graph:
      return "graph";
    case InputKind::labeled_graph:
      return "labeled_graph";
    case InputKind::gap_set:
      return "gap_set";
    case InputKind::forbidden_words:
      return "forbidden_words";
    case InputKind::descriptor:
      return "descriptor";
    case InputKind::rational_function:
      break;
  }
  return "rational_function";
}

InputKind detect_input_kind(const Json& j, const std::string& source)
{
  if (!j.is_object())
    throw ParseError(source, 0, 0, "", "expected a JSON object");
  if (j.contains("vertices")) {
    const auto edges = j.find("edges");
    if (edges != j.end() && edges->is_array() && !edges->empty() && (*edges)[0].is_object() &&
        (*edges)[0].contains("label"))
      return InputKind::labeled_graph;
    return InputKind::graph;
  }
  if (j.contains("alphabet"))
    return InputKind::forbidden_words;
  if (j.contains("progressions"))
    return InputKind::gap_set;
  if (j.contains("components") || j.contains("finite"))
    return InputKind::descriptor;
  if (j.contains("num") || j.contains("den"))
    return InputKind::rational_function;
  throw ParseError(source, 0, 0, "", "cannot tell what kind of input this is");
}

namespace {

struct Reader {
  const std::string& source;

  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const
  {
    throw ParseError(source, 0, 0, ptr.empty() ? "/" : ptr, msg);
  }

  const Json& field(const Json& j, const std::string& ptr, const char* key) const
  {
    if (!j.is_object())
      fail(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
      fail(ptr, std::string("missing field \"") + key + "\"");
    return *it;
  }

  const Json* optional_field(const Json& j, const std::string& ptr, const char* key) const
  {
    if (!j.is_object())
      fail(ptr, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
  }

  const Json& array(const Json& j, const std::string& ptr) const
  {
    if (!j.is_array())
      fail(ptr, "expected an array");
    return j;
  }

  std::string string(const Json& j, const std::string& ptr) const
  {
    if (!j.is_string())
      fail(ptr, "expected a string");
    return j.get<std::string>();
  }

  char symbol(const Json& j, const std::string& ptr) const
  {
    const std::string s = string(j, ptr);
    if (s.size() != 1)
      fail(ptr, "expected a single-character symbol");
    return s[0];
  }

  u64 natural(const Json& j, const std::string& ptr) const
  {
    if (!j.is_number_unsigned())
      fail(ptr, "expected a nonnegative integer");
    return j.get<u64>();
  }

  bool boolean(const Json& j, const std::string& ptr) const
  {
    if (!j.is_boolean())
      fail(ptr, "expected true or false");
    return j.get<bool>();
  }

  BigInt integer(const Json& j, const std::string& ptr) const
  {
    if (j.is_number_integer())
      return j.is_number_unsigned() ? BigInt(j.get<u64>()) : BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
      if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
        return BigInt(s);
    }
    fail(ptr, "expected an integer");
  }

  std::set<u64> naturals(const Json& j, const std::string& ptr) const
  {
    std::set<u64> out;
    const Json& a = array(j, ptr);
    for (std::size_t k = 0; k < a.size(); ++k)
      out.insert(natural(a[k], ptr + "/" + std::to_string(k)));
    return out;
  }
};

Json integer_json(const BigInt& v)
{
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json polynomial_json(const IntPolynomial& p)
{
  Json a = Json::array();
  for (const BigInt& c : p.coeffs())
    a.push_back(integer_json(c));
  if (a.empty())
    a.push_back(0);
  return a;
}

struct ParsedGraph {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<char> labels;
};

ParsedGraph parse_graph(const Json& j, const Reader& r, bool labeled)
{
  ParsedGraph out;
  const Json& vs = r.array(r.field(j, "", "vertices"), "/vertices");
  for (std::size_t k = 0; k < vs.size(); ++k)
    out.vertices.push_back(r.string(vs[k], "/vertices/" + std::to_string(k)));
  const Json& es = r.array(r.field(j, "", "edges"), "/edges");
  for (std::size_t k = 0; k < es.size(); ++k) {
    const std::string ptr = "/edges/" + std::to_string(k);
    EdgeSpec e;
    e.id = r.string(r.field(es[k], ptr, "id"), ptr + "/id");
    e.from = r.string(r.field(es[k], ptr, "from"), ptr + "/from");
    e.to = r.string(r.field(es[k], ptr, "to"), ptr + "/to");
    if (labeled)
      out.labels.push_back(r.symbol(r.field(es[k], ptr, "label"), ptr + "/label"));
    out.edges.push_back(std::move(e));
  }
  return out;
}

DirectedMultigraph build_graph(ParsedGraph& pg, const Reader& r)
{
  try {
    return DirectedMultigraph(std::move(pg.vertices), pg.edges);
  } catch (const std::invalid_argument& e) {
    r.fail("/edges", e.what());
  }
}

}  // namespace

Json to_json(const DirectedMultigraph& g)
{
  Json j;
  j["vertices"] = g.vertex_ids();
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"id", e.id}, {"from", g.vertex_ids()[e.from]}, {"to", g.vertex_ids()[e.to]}});
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const LabeledGraph& lg)
{
  Json j = to_json(lg.graph());
  for (std::size_t k = 0; k < lg.labels().size(); ++k)
    j["edges"][k]["label"] = std::string(1, lg.label(k));
  return j;
}

Json to_json(const PeriodSetDescriptor& desc)
{
  Json j;
  j["finite"] = desc.finite();
  Json comps = Json::array();
  for (const auto& c : desc.components())
    comps.push_back({{"d", c.d}, {"threshold", c.threshold}, {"extras", c.extras}});
  j["components"] = std::move(comps);
  j["certified"] = desc.certified();
  return j;
}

Json to_json(const RationalFunction& f)
{
  return {{"num", polynomial_json(f.num())}, {"den", polynomial_json(f.den())}};
}

Json to_json(const GapSet& s)
{
  Json j;
  j["finite"] = s.finite();
  Json ps = Json::array();
  for (const auto& p : s.progressions())
    ps.push_back({{"a", p.a}, {"r", p.r}});
  j["progressions"] = std::move(ps);
  return j;
}

Json to_json(const ForbiddenWordSpec& spec)
{
  return {{"alphabet", spec.alphabet}, {"forbidden", spec.forbidden}};
}

Json to_json(const std::vector<PeriodWitness>& witnesses)
{
  Json a = Json::array();
  for (const auto& w : witnesses)
    a.push_back({{"period", w.period}, {"word", w.word}, {"layer", w.layer}, {"component", w.component}});
  return a;
}

Json to_json(const KriegerVerdict& v)
{
  auto bounds = [](const PerronBounds& b) {
    return Json{{"lower", b.lower.str()}, {"upper", b.upper.str()}};
  };
  Json j;
  j["verdict"] = to_string(v.kind);
  if (v.kind == KriegerVerdict::Kind::entropy_fail)
    j["certified"] = v.entropy_certified;
  j["spectral_radius_x"] = bounds(v.x_bounds);
  j["spectral_radius_y"] = bounds(v.y_bounds);
  j["horizon"] = v.horizon;
  if (v.kind == KriegerVerdict::Kind::period_fail) {
    j["witness_n"] = v.witness;
    j["q_x"] = integer_json(v.witness_qx);
    j["q_y"] = integer_json(v.witness_qy);
  }
  if (v.kind == KriegerVerdict::Kind::pass_at_desk_scale)
    j["all_n"] = v.all_n;
  return j;
}

Json to_json(const ArbitrarySubshift& handle, std::size_t count)
{
  return {{"branch", handle.contains_one() ? "one_in_s" : "one_not_in_s"},
          {"infinite", handle.infinite()},
          {"generators", handle.first_generators(count)}};
}

DirectedMultigraph graph_from_json(const Json& j, const std::string& source)
{
  const Reader r{source};
  ParsedGraph pg = parse_graph(j, r, false);
  return build_graph(pg, r);
}

LabeledGraph labeled_graph_from_json(const Json& j, const std::string& source)
{
  const Reader r{source};
  ParsedGraph pg = parse_graph(j, r, true);
  std::vector<char> labels = std::move(pg.labels);
  return LabeledGraph(build_graph(pg, r), std::move(labels));
}

PeriodSetDescriptor descriptor_from_json(const Json& j, const std::string& source)
{
  const Reader r{source};
  std::set<u64> finite;
  if (const Json* f = r.optional_field(j, "", "finite"))
    finite = r.naturals(*f, "/finite");
  std::vector<DescriptorComponent> comps;
  if (const Json* cs = r.optional_field(j, "", "components")) {
    r.array(*cs, "/components");
    for (std::size_t k = 0; k < cs->size(); ++k) {
      const std::string ptr = "/components/" + std::to_string(k);
      DescriptorComponent c;
      c.d = r.natural(r.field((*cs)[k], ptr, "d"), ptr + "/d");
      c.threshold = r.natural(r.field((*cs)[k], ptr, "threshold"), ptr + "/threshold");
      if (const Json* e = r.optional_field((*cs)[k], ptr, "extras"))
        c.extras = r.naturals(*e, ptr + "/extras");
      if (c.d == 0 || c.threshold == 0)
        r.fail(ptr, "scale and threshold must be positive");
      comps.push_back(std::move(c));
    }
  }
  if (finite.count(0))
    r.fail("/finite", "periods are positive");
  bool certified = true;
  if (const Json* c = r.optional_field(j, "", "certified"))
    certified = r.boolean(*c, "/certified");
  return PeriodSetDescriptor(std::move(finite), std::move(comps), certified);
}

RationalFunction rational_function_from_json(const Json& j, const std::string& source)
{
  const Reader r{source};
  auto poly = [&](const char* key) {
    const std::string ptr = std::string("/") + key;
    const Json& a = r.array(r.field(j, "", key), ptr);
    std::vector<BigInt> c;
    for (std::size_t k = 0; k < a.size(); ++k)
      c.push_back(r.integer(a[k], ptr + "/" + std::to_string(k)));
    return IntPolynomial(std::move(c));
  };
  IntPolynomial num = poly("num"), den = poly("den");
  try {
    return RationalFunction(std::move(num), std::move(den));
  } catch (const std::invalid_argument& e) {
    r.fail("/den", e.what());
  }
}

GapSet gap_set_from_json(const Json& j, const std::string& source)
{
  const Reader r{source};
  std::set<u64> finite;
  if (const Json* f = r.optional_field(j, "", "finite"))
    finite = r.naturals(*f, "/finite");
  std::vector<Progression> ps;
  if (const Json* a = r.optional_field(j, "", "progressions")) {
    r.array(*a, "/progressions");
    for (std::size_t k = 0; k < a->size(); ++k) {
      const std::string ptr = "/progressions/" + std::to_string(k);
      Progression p;
      p.a = r.natural(r.field((*a)[k], ptr, "a"), ptr + "/a");
      p.r = r.natural(r.field((*a)[k], ptr, "r"), ptr + "/r");
      if (p.r == 0)
        r.fail(ptr + "/r", "common difference must be positive");
      ps.push_back(p);
    }
  }
  return GapSet(std::move(finite), std::move(ps));
}

ForbiddenWordSpec forbidden_words_from_json(const Json& j, const std::string& source)
{
  const Reader r{source};
  ForbiddenWordSpec spec;
  const Json& a = r.field(j, "", "alphabet");
  if (a.is_string()) {
    spec.alphabet = a.get<std::string>();
  } else {
    r.array(a, "/alphabet");
    for (std::size_t k = 0; k < a.size(); ++k)
      spec.alphabet.push_back(r.symbol(a[k], "/alphabet/" + std::to_string(k)));
  }
  if (const Json* f = r.optional_field(j, "", "forbidden")) {
    r.array(*f, "/forbidden");
    for (std::size_t k = 0; k < f->size(); ++k)
      spec.forbidden.push_back(r.string((*f)[k], "/forbidden/" + std::to_string(k)));
  }
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    r.fail("", e.what());
  }
  return spec;
}

std::string count_table_csv(const CountTable& table)
{
  std::string out = "n,p,q\n";
  for (u64 n = 1; n <= table.horizon; ++n)
    out += std::to_string(n) + "," + table.p[n - 1].str() + "," + table.q[n - 1].str() + "\n";
  return out;
}

namespace {

std::string dot_quote(const std::string& s)
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot_text(const DirectedMultigraph& g, const std::vector<char>* labels)
{
  std::string out = "digraph G {\n";
  for (const auto& v : g.vertex_ids())
    out += "  " + dot_quote(v) + ";\n";
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    out += "  " + dot_quote(g.vertex_ids()[e.from]) + " -> " + dot_quote(g.vertex_ids()[e.to]) +
           " [id=" + dot_quote(e.id);
    if (labels)
      out += ", label=" + dot_quote(std::string(1, (*labels)[k]));
    out += "];\n";
  }
  return out + "}\n";
}

}  // namespace

std::string to_dot(const DirectedMultigraph& g)
{
  return dot_text(g, nullptr);
}

std::string to_dot(const LabeledGraph& lg)
{
  return dot_text(lg.graph(), &lg.labels());
}

DotGraph parse_dot(const std::string& text, const std::string& source)
{
  std::size_t pos = 0, line = 1, col = 1;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(source, line, col, "", msg); };
  auto advance = [&]() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };
  auto skip = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  };
  auto expect = [&](const std::string& tok) {
    skip();
    if (text.compare(pos, tok.size(), tok) != 0)
      fail("expected '" + tok + "'");
    for (std::size_t k = 0; k < tok.size(); ++k)
      advance();
  };
  auto peek = [&](const std::string& tok) {
    skip();
    return text.compare(pos, tok.size(), tok) == 0;
  };
  auto quoted = [&]() {
    skip();
    if (pos >= text.size() || text[pos] != '"')
      fail("expected a quoted string");
    advance();
    std::string out;
    while (pos < text.size() && text[pos] != '"') {
      if (text[pos] == '\\')
        advance();
      if (pos >= text.size())
        break;
      out += text[pos];
      advance();
    }
    if (pos >= text.size())
      fail("unterminated string");
    advance();
    return out;
  };
  auto word = [&]() {
    skip();
    std::string out;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      out += text[pos];
      advance();
    }
    if (out.empty())
      fail("expected an attribute name");
    return out;
  };

  expect("digraph");
  skip();
  if (!peek("{"))
    word();
  expect("{");
  std::vector<std::string> ids;
  std::vector<EdgeSpec> edges;
  std::vector<char> labels;
  std::size_t labeled = 0;
  while (!peek("}")) {
    if (pos >= text.size())
      fail("unexpected end of input");
    const std::string from = quoted();
    if (peek("->")) {
      expect("->");
      EdgeSpec e;
      e.from = from;
      e.to = quoted();
      e.id = "e" + std::to_string(edges.size());
      char label = 0;
      if (peek("[")) {
        expect("[");
        while (!peek("]")) {
          const std::string key = word();
          expect("=");
          const std::string value = quoted();
          if (key == "id") {
            e.id = value;
          } else if (key == "label") {
            if (value.size() != 1)
              fail("edge labels are single symbols");
            label = value[0];
          }
          if (peek(","))
            expect(",");
        }
        expect("]");
      }
      if (label) {
        labels.push_back(label);
        ++labeled;
      } else {
        labels.push_back('?');
      }
      edges.push_back(std::move(e));
    } else {
      ids.push_back(from);
    }
    expect(";");
  }
  expect("}");

  DotGraph out;
  try {
    out.graph = DirectedMultigraph(std::move(ids), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line, col, "", e.what());
  }
  if (labeled == edges.size() && !edges.empty())
    out.labels = std::move(labels);
  else if (labeled != 0)
    throw ParseError(source, line, col, "", "either every edge or no edge carries a label");
  return out;
}

std::string fnv1a_hex(const std::string& bytes)
{
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace periodlab
