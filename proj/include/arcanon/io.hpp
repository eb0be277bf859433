#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "arcanon/hypergraph.hpp"
#include "arcanon/types.hpp"

namespace arcanon {

// Text formats.
//
//   graph N            header; vertices are named 1..N unless a "names:" line
//   names: a b c       follows the header
//   a b                one edge per line
//
//   hypergraph N
//   names: ...
//   a c d color=2 mult=3     one hyperedge per line; suffix tokens optional
//   empty                    the empty hyperedge
//
// Matrices are bare rows of 0/1 characters with no header. '#' starts a
// comment anywhere; blank lines are skipped.

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_ = 1;
};

Graph parse_graph(std::istream& in);
Hypergraph parse_hypergraph(std::istream& in);
BinaryMatrix parse_matrix(std::istream& in);

Graph parse_graph(const std::string& text);
Hypergraph parse_hypergraph(const std::string& text);
BinaryMatrix parse_matrix(const std::string& text);

// Exact round-trip with the parsers.
std::string emit_graph(const Graph& g);
std::string emit_hypergraph(const Hypergraph& h);
std::string emit_matrix(const BinaryMatrix& m);

}  // namespace arcanon
