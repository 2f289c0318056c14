#ifndef HGSPARSE_IO_HPP_
#define HGSPARSE_IO_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "hgsparse/core.hpp"

namespace hgsparse {

// Text format, LF-terminated, '#' starts a comment:
//   dhg 1                      or  uhg 1
//   n m
//   w k_t v_1 .. v_kt k_h u_1 .. u_kh     (one line per arc)
//   w k v_1 .. v_k                         (one line per hyperedge)

enum class ParseErrorKind {
  malformed_header,
  malformed_number,
  index_out_of_range,
  nonpositive_weight,
  arity_mismatch,
};

std::string_view to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

using AnyHypergraph = std::variant<DirectedHypergraph, UndirectedHypergraph>;

/// Either kind, chosen by the magic. Throws ParseError.
AnyHypergraph parse(std::string_view text);
DirectedHypergraph parse_directed(std::string_view text);
UndirectedHypergraph parse_undirected(std::string_view text);

/// Canonical form; weights in shortest round-trip decimal.
std::string write(const DirectedHypergraph& h);
std::string write(const UndirectedHypergraph& h);
std::string write(const AnyHypergraph& h);

/// Shortest round-trip decimal of a finite double.
std::string format_double(double x);

/// Whole-file helpers. Throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hgsparse

#endif  // HGSPARSE_IO_HPP_
