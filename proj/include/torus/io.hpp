#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torus/board.hpp"
#include "torus/dims.hpp"
#include "torus/move.hpp"

namespace torus {

/// Parse failure with 1-based line/column location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, int col, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + what),
        source_(std::move(source)),
        line_(line),
        col_(col) {}
  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string source_;
  int line_;
  int col_;
};

namespace detail {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

inline std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back(Token{line.substr(start, i - start), lineno, int(start) + 1});
    }
  }
  return out;
}

inline std::int64_t parse_int(const Token& tok, const std::string& source) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok.text, &pos);
  } catch (const std::exception&) {
    throw ParseError(source, tok.line, tok.col, "expected integer, got '" + tok.text + "'");
  }
  if (pos != tok.text.size()) {
    throw ParseError(source, tok.line, tok.col, "trailing characters in integer '" + tok.text + "'");
  }
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instance files: first line "m n", then m lines of n integers forming a
// permutation of 1..mn.

inline NaiveBoard parse_instance(std::istream& in, const std::string& source = "instance") {
  const auto tokens = detail::tokenize(in);
  if (tokens.size() < 2) throw ParseError(source, 1, 1, "expected 'm n' header");
  const std::int64_t m = detail::parse_int(tokens[0], source);
  const std::int64_t n = detail::parse_int(tokens[1], source);
  if (m < 2 || n < 2) {
    throw ParseError(source, tokens[0].line, tokens[0].col,
                     "both dimensions must be >= 2, got " + std::to_string(m) + "x" +
                         std::to_string(n));
  }
  if (m * n > (std::int64_t(1) << 26)) {
    throw ParseError(source, tokens[0].line, tokens[0].col, "board too large");
  }
  const Dims dims{int(m), int(n)};
  if (std::int64_t(tokens.size()) != 2 + dims.cells()) {
    throw ParseError(source, tokens.back().line, tokens.back().col,
                     "expected " + std::to_string(dims.cells()) + " cells, got " +
                         std::to_string(tokens.size() - 2));
  }
  std::vector<Value> cells(dims.cells());
  std::vector<bool> seen(dims.cells(), false);
  for (std::size_t t = 2; t < tokens.size(); ++t) {
    const std::int64_t v = detail::parse_int(tokens[t], source);
    if (v < 1 || v > dims.cells() || seen[std::size_t(v - 1)]) {
      throw ParseError(source, tokens[t].line, tokens[t].col,
                       "cells must form a permutation of 1.." + std::to_string(dims.cells()) +
                           "; offending value " + std::to_string(v));
    }
    seen[std::size_t(v - 1)] = true;
    cells[t - 2] = Value(v);
  }
  return NaiveBoard(dims, std::move(cells));
}

inline NaiveBoard parse_instance(const std::string& text, const std::string& source = "instance") {
  std::istringstream in(text);
  return parse_instance(in, source);
}

template <class Board>
void format_instance(const Board& board, std::ostream& out) {
  const Dims d = board.dims();
  out << d.m << ' ' << d.n << '\n';
  for (int i = 1; i <= d.m; ++i) {
    for (int j = 1; j <= d.n; ++j) {
      if (j > 1) out << ' ';
      out << board.at(i, j);
    }
    out << '\n';
  }
}

template <class Board>
std::string format_instance(const Board& board) {
  std::ostringstream out;
  format_instance(board, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Move files: whitespace-separated tokens r<i>, l<i>, d<j>, u<j>, each
// optionally suffixed *<k> for a compound count, e.g. "d3*2 r1".

inline std::string format_move(const Move& mv) {
  char c = 0;
  switch (mv.dir) {
    case Dir::Right: c = 'r'; break;
    case Dir::Left: c = 'l'; break;
    case Dir::Down: c = 'd'; break;
    case Dir::Up: c = 'u'; break;
  }
  std::string out(1, c);
  out += std::to_string(mv.line.index);
  if (mv.count != 1) {
    out += '*';
    out += std::to_string(mv.count);
  }
  return out;
}

inline void format_moves(std::span<const Move> moves, std::ostream& out,
                         int tokens_per_line = 16) {
  int on_line = 0;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (on_line == tokens_per_line) {
      out << '\n';
      on_line = 0;
    }
    if (on_line > 0) out << ' ';
    out << format_move(moves[i]);
    ++on_line;
  }
  if (on_line > 0) out << '\n';
}

inline std::string format_moves(std::span<const Move> moves, int tokens_per_line = 16) {
  std::ostringstream out;
  format_moves(moves, out, tokens_per_line);
  return out.str();
}

inline std::vector<Move> parse_moves(std::istream& in, const std::string& source = "moves") {
  std::vector<Move> out;
  for (const auto& tok : detail::tokenize(in)) {
    const std::string& s = tok.text;
    Dir dir;
    switch (s[0]) {
      case 'r': dir = Dir::Right; break;
      case 'l': dir = Dir::Left; break;
      case 'd': dir = Dir::Down; break;
      case 'u': dir = Dir::Up; break;
      default:
        throw ParseError(source, tok.line, tok.col,
                         "unknown move token '" + s + "' (expected r/l/d/u prefix)");
    }
    const std::size_t star = s.find('*');
    const std::string index_part = s.substr(1, star == std::string::npos ? star : star - 1);
    if (index_part.empty() || index_part.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(source, tok.line, tok.col, "bad line index in move token '" + s + "'");
    }
    std::int64_t count = 1;
    if (star != std::string::npos) {
      const std::string count_part = s.substr(star + 1);
      if (count_part.empty() || count_part.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(source, tok.line, tok.col, "bad compound count in move token '" + s + "'");
      }
      count = std::stoll(count_part);
      if (count < 1) throw ParseError(source, tok.line, tok.col, "compound count must be >= 1");
    }
    const int index = int(std::stoll(index_part));
    if (index < 1) throw ParseError(source, tok.line, tok.col, "line index must be >= 1");
    const Axis axis = axis_of(dir);
    out.push_back(Move{Line{axis, index}, dir, count});
  }
  return out;
}

inline std::vector<Move> parse_moves(const std::string& text, const std::string& source = "moves") {
  std::istringstream in(text);
  return parse_moves(in, source);
}

}  // namespace torus
