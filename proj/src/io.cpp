#include "hgsparse/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace hgsparse {

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::malformed_header: return "malformed header";
    case ParseErrorKind::malformed_number: return "malformed number";
    case ParseErrorKind::index_out_of_range: return "index out of range";
    case ParseErrorKind::nonpositive_weight: return "nonpositive weight";
    case ParseErrorKind::arity_mismatch: return "arity mismatch";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         std::string(to_string(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-empty lines after comment stripping, split on blanks.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) l.tokens.push_back(line.substr(start, i - start));
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError(ParseErrorKind::malformed_number, line, "'" + std::string(tok) + "'");
  }
  return v;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || !std::isfinite(v)) {
    throw ParseError(ParseErrorKind::malformed_number, line, "'" + std::string(tok) + "'");
  }
  if (!(v > 0.0)) {
    throw ParseError(ParseErrorKind::nonpositive_weight, line, "'" + std::string(tok) + "'");
  }
  return v;
}

struct Cursor {
  const Line& line;
  std::size_t pos = 0;

  std::string_view next() {
    if (pos >= line.tokens.size()) {
      throw ParseError(ParseErrorKind::arity_mismatch, line.number, "record ends early");
    }
    return line.tokens[pos++];
  }
  void finish() const {
    if (pos != line.tokens.size()) {
      throw ParseError(ParseErrorKind::arity_mismatch, line.number, "trailing tokens");
    }
  }
};

std::vector<VertexId> read_side(Cursor& c, std::size_t n) {
  const std::size_t k = parse_count(c.next(), c.line.number);
  if (k == 0) throw ParseError(ParseErrorKind::arity_mismatch, c.line.number, "empty vertex set");
  if (k > c.line.tokens.size()) {
    throw ParseError(ParseErrorKind::arity_mismatch, c.line.number, "record ends early");
  }
  std::vector<VertexId> vs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t v = parse_count(c.next(), c.line.number);
    if (v >= n) {
      throw ParseError(ParseErrorKind::index_out_of_range, c.line.number,
                       "vertex " + std::to_string(v) + " >= n = " + std::to_string(n));
    }
    vs[i] = static_cast<VertexId>(v);
  }
  return vs;
}

struct Header {
  bool directed;
  std::size_t n, m;
};

Header read_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(ParseErrorKind::malformed_header, 1, "empty input");
  const Line& l0 = lines[0];
  if (l0.tokens.size() != 2 || (l0.tokens[0] != "dhg" && l0.tokens[0] != "uhg") ||
      l0.tokens[1] != "1") {
    throw ParseError(ParseErrorKind::malformed_header, l0.number, "expected 'dhg 1' or 'uhg 1'");
  }
  if (lines.size() < 2) {
    throw ParseError(ParseErrorKind::malformed_header, l0.number + 1, "missing 'n m' line");
  }
  const Line& l1 = lines[1];
  if (l1.tokens.size() != 2) {
    throw ParseError(ParseErrorKind::malformed_header, l1.number, "expected 'n m'");
  }
  Header h{l0.tokens[0] == "dhg", parse_count(l1.tokens[0], l1.number),
           parse_count(l1.tokens[1], l1.number)};
  if (h.n > std::size_t{1} << 32) {
    throw ParseError(ParseErrorKind::malformed_header, l1.number, "n too large");
  }
  const std::size_t records = lines.size() - 2;
  if (records != h.m) {
    const std::size_t at = records > h.m ? lines[2 + h.m].number : lines.back().number;
    throw ParseError(ParseErrorKind::arity_mismatch, at,
                     "header declares " + std::to_string(h.m) + " record(s), found " +
                         std::to_string(records));
  }
  return h;
}

DirectedHypergraph build_directed(const std::vector<Line>& lines, const Header& hd) {
  DirectedHypergraph h(hd.n);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    Cursor c{lines[r]};
    const double w = parse_weight(c.next(), c.line.number);
    const auto tail = read_side(c, hd.n);
    const auto head = read_side(c, hd.n);
    c.finish();
    h.add_arc(tail, head, w);
  }
  return h;
}

UndirectedHypergraph build_undirected(const std::vector<Line>& lines, const Header& hd) {
  UndirectedHypergraph h(hd.n);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    Cursor c{lines[r]};
    const double w = parse_weight(c.next(), c.line.number);
    const auto vs = read_side(c, hd.n);
    c.finish();
    h.add_edge(vs, w);
  }
  return h;
}

void append_side(std::string& out, std::span<const VertexId> vs) {
  out += ' ';
  out += std::to_string(vs.size());
  for (VertexId v : vs) {
    out += ' ';
    out += std::to_string(v);
  }
}

}  // namespace

AnyHypergraph parse(std::string_view text) {
  const auto lines = tokenize(text);
  const Header hd = read_header(lines);
  if (hd.directed) return build_directed(lines, hd);
  return build_undirected(lines, hd);
}

DirectedHypergraph parse_directed(std::string_view text) {
  const auto lines = tokenize(text);
  const Header hd = read_header(lines);
  if (!hd.directed) {
    throw ParseError(ParseErrorKind::malformed_header, lines[0].number, "expected 'dhg 1'");
  }
  return build_directed(lines, hd);
}

UndirectedHypergraph parse_undirected(std::string_view text) {
  const auto lines = tokenize(text);
  const Header hd = read_header(lines);
  if (hd.directed) {
    throw ParseError(ParseErrorKind::malformed_header, lines[0].number, "expected 'uhg 1'");
  }
  return build_undirected(lines, hd);
}

std::string format_double(double x) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, p);
}

std::string write(const DirectedHypergraph& h) {
  std::string out = "dhg 1\n" + std::to_string(h.num_vertices()) + ' ' +
                    std::to_string(h.num_arcs()) + '\n';
  for (ArcIndex f = 0; f < h.num_arcs(); ++f) {
    const ArcRef a = h.arc(f);
    out += format_double(a.weight);
    append_side(out, a.tail);
    append_side(out, a.head);
    out += '\n';
  }
  return out;
}

std::string write(const UndirectedHypergraph& h) {
  std::string out = "uhg 1\n" + std::to_string(h.num_vertices()) + ' ' +
                    std::to_string(h.num_edges()) + '\n';
  for (ArcIndex f = 0; f < h.num_edges(); ++f) {
    const EdgeRef e = h.edge(f);
    out += format_double(e.weight);
    append_side(out, e.vertices);
    out += '\n';
  }
  return out;
}

std::string write(const AnyHypergraph& h) {
  return std::visit([](const auto& g) { return write(g); }, h);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hgsparse
