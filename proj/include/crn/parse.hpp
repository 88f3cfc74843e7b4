// Copyright 2026 The crn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

struct ParseError : std::runtime_error {
  size_t line;
  size_t col;
  ParseError(size_t line_, size_t col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                           ": " + msg),
        line(line_),
        col(col_) {}
};

/// Result of parsing a .crn document: always a network, plus rates when every
/// reaction line carried one.
struct ParsedNetwork {
  ReactionNetwork network;
  std::optional<std::vector<Rat>> rates;

  MassActionSystem to_system() const {
    if (!rates) throw std::invalid_argument("document has no rates; a mass-action system is required");
    return MassActionSystem(network, *rates);
  }
};

namespace detail {

struct Token {
  enum class Kind { Ident, Number, Arrow, Plus, At, LBracket, RBracket, Comma, End };
  Kind kind;
  std::string text;
  size_t col;
};

inline std::vector<Token> lex_line(const std::string& line, size_t lineno) {
  std::vector<Token> out;
  size_t i = 0;
  auto fail = [&](const std::string& m) { throw ParseError(lineno, i + 1, m); };
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Kind::Arrow, "->", start + 1});
      i += 2;
    } else if (c == '+') {
      out.push_back({Token::Kind::Plus, "+", start + 1});
      ++i;
    } else if (c == '@') {
      out.push_back({Token::Kind::At, "@", start + 1});
      ++i;
    } else if (c == '[') {
      out.push_back({Token::Kind::LBracket, "[", start + 1});
      ++i;
    } else if (c == ']') {
      out.push_back({Token::Kind::RBracket, "]", start + 1});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::Kind::Comma, ",", start + 1});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      // integer or rational, optionally negative: -3, 12, 3/2, -1/2
      std::string t;
      if (c == '-') {
        t.push_back(c);
        ++i;
        if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
          fail("expected digits after '-'");
      }
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) t.push_back(line[i++]);
      if (i < line.size() && line[i] == '/') {
        t.push_back(line[i++]);
        if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
          fail("expected digits after '/'");
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
          t.push_back(line[i++]);
      }
      out.push_back({Token::Kind::Number, std::move(t), start + 1});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        t.push_back(line[i++]);
      out.push_back({Token::Kind::Ident, std::move(t), start + 1});
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", line.size() + 1});
  return out;
}

struct SideParser {
  const std::vector<Token>& toks;
  size_t pos;
  size_t lineno;
  const std::map<std::string, size_t>* species;  // may be null before declaration

  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError(lineno, toks[pos].col, m);
  }

  bool at(Token::Kind k) const { return toks[pos].kind == k; }

  /// Parses one side: a raw bracketed vertex or an integer-coefficient
  /// species sum (with "0" for the zero complex). Returns coords when the
  /// species context is available; raw coordinate lists are returned as-is.
  RatVec parse_side(size_t expected_dim) {
    if (at(Token::Kind::LBracket)) {
      ++pos;
      RatVec coords;
      if (at(Token::Kind::RBracket)) fail("empty vertex brackets");
      for (;;) {
        if (!at(Token::Kind::Number)) fail("expected a rational coordinate");
        coords.push_back(parse_rat(toks[pos].text));
        ++pos;
        if (at(Token::Kind::Comma)) {
          ++pos;
          continue;
        }
        if (at(Token::Kind::RBracket)) {
          ++pos;
          break;
        }
        fail("expected ',' or ']' in vertex");
      }
      if (expected_dim != SIZE_MAX && coords.size() != expected_dim)
        fail("vertex has " + std::to_string(coords.size()) + " coordinates, expected " +
             std::to_string(expected_dim));
      return coords;
    }
    if (!species)
      fail("named complexes require a 'species' line (or use bracketed vertices)");
    RatVec coords(expected_dim, Rat(0));
    // "0" alone denotes the zero complex
    if (at(Token::Kind::Number) && toks[pos].text == "0") {
      size_t next = pos + 1;
      if (toks[next].kind == Token::Kind::Arrow || toks[next].kind == Token::Kind::At ||
          toks[next].kind == Token::Kind::End) {
        ++pos;
        return coords;
      }
    }
    for (;;) {
      Rat coeff = 1;
      if (at(Token::Kind::Number)) {
        coeff = parse_rat(toks[pos].text);
        if (denominator(coeff) != 1 || coeff <= 0)
          fail("complex coefficients must be positive integers");
        ++pos;
      }
      if (!at(Token::Kind::Ident)) fail("expected a species name");
      auto it = species->find(toks[pos].text);
      if (it == species->end()) fail("unknown species '" + toks[pos].text + "'");
      coords[it->second] += coeff;
      ++pos;
      if (at(Token::Kind::Plus)) {
        ++pos;
        continue;
      }
      break;
    }
    return coords;
  }
};

}  // namespace detail

/// Parses the line-oriented .crn format:
///
///   # comment
///   species A B
///   A + B -> 2A @ 3/2
///   0 -> B
///   vertex [0,0] -> [0,2] @ 1
///
/// The species line fixes coordinate order and may be omitted when every
/// reaction uses bracketed vertices (coordinates are then named x1..xn).
/// Duplicate reaction lines merge by summing rates. Either every reaction
/// carries a rate or none does.
inline ParsedNetwork parse_network(const std::string& text) {
  std::map<std::string, size_t> species;
  bool have_species = false;
  size_t dim = SIZE_MAX;
  std::vector<std::string> names;

  struct Edge {
    RatVec src, dst;
    std::optional<Rat> rate;
    size_t lineno;
  };
  std::vector<Edge> edges;

  size_t lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    ++lineno;

    std::vector<detail::Token> toks = detail::lex_line(line, lineno);
    if (toks[0].kind == detail::Token::Kind::End) continue;

    if (toks[0].kind == detail::Token::Kind::Ident && toks[0].text == "species") {
      if (have_species) throw ParseError(lineno, toks[0].col, "duplicate species line");
      if (!edges.empty())
        throw ParseError(lineno, toks[0].col, "species line must precede reactions");
      size_t p = 1;
      while (toks[p].kind == detail::Token::Kind::Ident) {
        if (toks[p].text == "species" || toks[p].text == "vertex")
          throw ParseError(lineno, toks[p].col, "'" + toks[p].text + "' is a reserved word");
        if (!species.emplace(toks[p].text, names.size()).second)
          throw ParseError(lineno, toks[p].col, "duplicate species '" + toks[p].text + "'");
        names.push_back(toks[p].text);
        ++p;
      }
      if (toks[p].kind != detail::Token::Kind::End)
        throw ParseError(lineno, toks[p].col, "expected species names");
      if (names.empty()) throw ParseError(lineno, toks[0].col, "species line declares no species");
      have_species = true;
      dim = names.size();
      continue;
    }

    size_t p = 0;
    if (toks[p].kind == detail::Token::Kind::Ident && toks[p].text == "vertex") ++p;

    detail::SideParser sp{toks, p, lineno, have_species ? &species : nullptr};
    RatVec lhs = sp.parse_side(dim);
    if (dim == SIZE_MAX) dim = lhs.size();
    if (!sp.at(detail::Token::Kind::Arrow))
      throw ParseError(lineno, toks[sp.pos].col, "expected '->'");
    ++sp.pos;
    RatVec rhs = sp.parse_side(dim);
    std::optional<Rat> rate;
    if (sp.at(detail::Token::Kind::At)) {
      ++sp.pos;
      if (!sp.at(detail::Token::Kind::Number))
        throw ParseError(lineno, toks[sp.pos].col, "expected a rate after '@'");
      rate = parse_rat(toks[sp.pos].text);
      if (*rate <= 0)
        throw ParseError(lineno, toks[sp.pos].col, "rate must be strictly positive");
      ++sp.pos;
    }
    if (!sp.at(detail::Token::Kind::End))
      throw ParseError(lineno, toks[sp.pos].col, "unexpected trailing input");
    if (lhs == rhs)
      throw ParseError(lineno, 1, "self-loop: source and target complexes coincide");
    edges.push_back({std::move(lhs), std::move(rhs), std::move(rate), lineno});
  }

  if (edges.empty() && !have_species)
    throw ParseError(1, 1, "document declares neither species nor reactions");
  if (!have_species) {
    for (size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  }

  bool rated = false, unrated = false;
  for (const Edge& e : edges) {
    if (e.rate)
      rated = true;
    else
      unrated = true;
  }
  if (rated && unrated) {
    for (const Edge& e : edges)
      if (!e.rate)
        throw ParseError(e.lineno, 1, "reaction lacks a rate while other reactions have one");
  }

  // first-appearance vertex order; duplicate (src,dst) lines merge
  std::map<RatVec, size_t, RatVecLess> vertex_index;
  std::vector<RatVec> vertices;
  auto intern = [&](const RatVec& v) {
    auto it = vertex_index.find(v);
    if (it != vertex_index.end()) return it->second;
    vertex_index.emplace(v, vertices.size());
    vertices.push_back(v);
    return vertices.size() - 1;
  };
  std::map<std::pair<size_t, size_t>, size_t> edge_index;
  std::vector<Reaction> reactions;
  std::vector<Rat> rates;
  for (const Edge& e : edges) {
    size_t s = intern(e.src), t = intern(e.dst);
    auto key = std::make_pair(s, t);
    auto it = edge_index.find(key);
    if (it == edge_index.end()) {
      edge_index.emplace(key, reactions.size());
      reactions.push_back({s, t});
      if (rated) rates.push_back(*e.rate);
    } else if (rated) {
      rates[it->second] += *e.rate;
    }
  }

  ParsedNetwork out{
      ReactionNetwork(SpeciesContext(names), std::move(vertices), std::move(reactions)),
      std::nullopt};
  if (rated) out.rates = std::move(rates);
  return out;
}

namespace detail {

inline bool renderable_as_complex(const RatVec& v) {
  for (const Rat& c : v)
    if (c < 0 || denominator(c) != 1) return false;
  return true;
}

inline std::string complex_str(const RatVec& v, const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += rat_str(v[i]);
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

inline std::string raw_vertex_str(const RatVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + "]";
}

}  // namespace detail

/// Canonical text form; parse(serialize(x)) reproduces x structurally.
inline std::string serialize_network(const ReactionNetwork& g,
                                     const std::optional<std::vector<Rat>>& rates = std::nullopt) {
  std::string out = "species";
  for (const std::string& s : g.context().names) out += " " + s;
  out += "\n";
  for (size_t e = 0; e < g.num_reactions(); ++e) {
    const RatVec& src = g.vertices()[g.reactions()[e].source];
    const RatVec& dst = g.vertices()[g.reactions()[e].target];
    if (detail::renderable_as_complex(src) && detail::renderable_as_complex(dst)) {
      out += detail::complex_str(src, g.context().names) + " -> " +
             detail::complex_str(dst, g.context().names);
    } else {
      out += "vertex " + detail::raw_vertex_str(src) + " -> " + detail::raw_vertex_str(dst);
    }
    if (rates) out += " @ " + rat_str((*rates)[e]);
    out += "\n";
  }
  return out;
}

inline std::string serialize_system(const MassActionSystem& sys) {
  return serialize_network(sys.network(), sys.rates());
}

}  // namespace crn
