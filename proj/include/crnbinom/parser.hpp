#pragma once

#include "crnbinom/network.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crnbinom {

enum class ParseErrorKind { Syntax, UnknownSymbol, Duplicate, Arity };

inline const char* to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::UnknownSymbol: return "unknown-symbol";
    case ParseErrorKind::Duplicate: return "duplicate";
    case ParseErrorKind::Arity: return "arity";
  }
  return "syntax";
}

struct ParseError {
  int line{1};    // 1-based
  int column{1};  // 1-based
  ParseErrorKind kind{ParseErrorKind::Syntax};
  std::string message;
};

inline std::string format_error(const ParseError& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column) + ": " +
         to_string(e.kind) + ": " + e.message;
}

/// Either a network (errors empty) or a nonempty error list.
struct ParseResult {
  std::optional<ReactionNetwork> network;
  std::vector<ParseError> errors;
  bool ok() const { return network.has_value(); }
};

namespace parser_detail {

enum class Tok { Ident, Int, Colon, Plus, Comma, LBracket, RBracket, ArrowRev, ArrowIrr, End };

struct Token {
  Tok kind{Tok::End};
  std::string text;
  long value{};
  int column{1};
};

struct Lexer {
  static std::optional<std::vector<Token>> run(const std::string& line, int line_no,
                                               std::vector<ParseError>& errors) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto fail = [&](int col, std::string msg) {
      errors.push_back({line_no, col, ParseErrorKind::Syntax, std::move(msg)});
      return std::nullopt;
    };
    while (i < line.size()) {
      char c = line[i];
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c == '#') break;
      int col = static_cast<int>(i) + 1;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
        out.push_back({Tok::Ident, line.substr(i, j - i), 0, col});
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        std::string digits = line.substr(i, j - i);
        if (digits.size() > 9) return fail(col, "numeric literal too large");
        out.push_back({Tok::Int, digits, std::stol(digits), col});
        i = j;
        continue;
      }
      switch (c) {
        case ':': out.push_back({Tok::Colon, ":", 0, col}); ++i; continue;
        case '+': out.push_back({Tok::Plus, "+", 0, col}); ++i; continue;
        case ',': out.push_back({Tok::Comma, ",", 0, col}); ++i; continue;
        case '[': out.push_back({Tok::LBracket, "[", 0, col}); ++i; continue;
        case ']': out.push_back({Tok::RBracket, "]", 0, col}); ++i; continue;
        case '<':
          if (line.compare(i, 3, "<=>") == 0) {
            out.push_back({Tok::ArrowRev, "<=>", 0, col});
            i += 3;
            continue;
          }
          return fail(col, "expected '<=>'");
        case '-':
          if (line.compare(i, 2, "->") == 0) {
            out.push_back({Tok::ArrowIrr, "->", 0, col});
            i += 2;
            continue;
          }
          return fail(col, "expected '->'");
        default:
          return fail(col, std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({Tok::End, "", 0, static_cast<int>(line.size()) + 1});
    return out;
  }
};

}  // namespace parser_detail

/// Parses the reaction-list text format:
///
///   file     := line*                        ('#' starts a comment)
///   header   := "species" ":" ident+         (optional, once, first statement)
///   reaction := ident ":" complex ("<=>" | "->") complex "[" rate ("," rate)? "]"
///   complex  := "0" | coeff? ident ("+" coeff? ident)*
///
/// Reaction names and rate symbols share one namespace; species names live
/// in their own. Species ids follow header order when a header is present,
/// first-use order otherwise. All line errors are collected; a network is
/// returned only when there are none, and it passes validate().
inline ParseResult parse_network(std::string_view text) {
  using parser_detail::Tok;
  using parser_detail::Token;

  ParseResult result;
  ReactionNetwork net;
  std::map<std::string, int> species_ids;
  std::map<std::string, int> symbols;          // reaction names + rate symbols
  std::vector<char> species_used;
  std::vector<std::pair<std::string, int>> declared;  // header names with columns
  bool header_seen = false;
  bool reaction_seen = false;
  int header_line = 0;

  auto error = [&](int line, int col, ParseErrorKind kind, std::string msg) {
    result.errors.push_back({line, col, kind, std::move(msg)});
  };

  struct Cursor {
    const std::vector<Token>& toks;
    std::size_t i{0};
    const Token& peek(std::size_t ahead = 0) const {
      std::size_t j = i + ahead;
      return j < toks.size() ? toks[j] : toks.back();
    }
    const Token& take() {
      const Token& t = toks[i];
      if (t.kind != Tok::End) ++i;
      return t;
    }
  };

  auto resolve_species = [&](const Token& tok, int line) -> std::optional<int> {
    auto it = species_ids.find(tok.text);
    if (it != species_ids.end()) return it->second;
    if (header_seen) {
      error(line, tok.column, ParseErrorKind::UnknownSymbol,
            "species '" + tok.text + "' is not declared in the species header");
      return std::nullopt;
    }
    int id = net.add_species(tok.text);
    species_ids.emplace(tok.text, id);
    species_used.push_back(0);
    return id;
  };

  // Parses one complex; returns nullopt only on structural failure.
  auto parse_complex = [&](Cursor& cur, int line) -> std::optional<Complex> {
    if (cur.peek().kind == Tok::Int && cur.peek().value == 0 &&
        cur.peek(1).kind != Tok::Ident) {
      cur.take();
      return Complex::zero();
    }
    std::map<int, int> terms;
    while (true) {
      int coeff = 1;
      if (cur.peek().kind == Tok::Int) {
        const Token& t = cur.take();
        if (t.value < 1) {
          error(line, t.column, ParseErrorKind::Syntax,
                "stoichiometric coefficient must be at least 1");
        } else {
          coeff = static_cast<int>(t.value);
        }
      }
      if (cur.peek().kind != Tok::Ident) {
        error(line, cur.peek().column, ParseErrorKind::Syntax, "expected species name");
        return std::nullopt;
      }
      const Token& name = cur.take();
      if (auto id = resolve_species(name, line)) {
        if (terms.count(*id)) {
          error(line, name.column, ParseErrorKind::Duplicate,
                "species '" + name.text + "' appears twice in one complex");
        } else {
          terms[*id] = coeff;
          species_used[static_cast<std::size_t>(*id)] = 1;
        }
      }
      if (cur.peek().kind != Tok::Plus) break;
      cur.take();
    }
    return Complex(std::move(terms));
  };

  auto claim_symbol = [&](const Token& tok, int line) {
    if (!symbols.emplace(tok.text, line).second) {
      error(line, tok.column, ParseErrorKind::Duplicate,
            "symbol '" + tok.text + "' is already used as a reaction or rate name");
    }
  };

  // Line loop; \r\n and a missing final newline are both accepted.
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, (nl == std::string_view::npos ? text.size() : nl) - pos));
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto lexed = parser_detail::Lexer::run(line, line_no, result.errors);
    if (!lexed) continue;
    Cursor cur{*lexed};
    if (cur.peek().kind == Tok::End) continue;

    if (cur.peek().kind == Tok::Ident && cur.peek().text == "species" &&
        cur.peek(1).kind == Tok::Colon) {
      cur.take();
      cur.take();
      if (header_seen || reaction_seen) {
        error(line_no, 1, ParseErrorKind::Syntax,
              "species header must appear once, before any reaction");
        continue;
      }
      header_seen = true;
      header_line = line_no;
      if (cur.peek().kind == Tok::End) {
        error(line_no, cur.peek().column, ParseErrorKind::Syntax, "expected species name");
        continue;
      }
      while (cur.peek().kind != Tok::End) {
        if (cur.peek().kind != Tok::Ident) {
          error(line_no, cur.peek().column, ParseErrorKind::Syntax, "expected species name");
          break;
        }
        const Token& name = cur.take();
        if (species_ids.count(name.text)) {
          error(line_no, name.column, ParseErrorKind::Duplicate,
                "duplicate species '" + name.text + "' in header");
          continue;
        }
        int id = net.add_species(name.text);
        species_ids.emplace(name.text, id);
        species_used.push_back(0);
        declared.emplace_back(name.text, name.column);
      }
      continue;
    }

    // Reaction statement.
    reaction_seen = true;
    if (cur.peek().kind != Tok::Ident) {
      error(line_no, cur.peek().column, ParseErrorKind::Syntax, "expected reaction name");
      continue;
    }
    const Token& rname = cur.take();
    claim_symbol(rname, line_no);
    if (cur.peek().kind != Tok::Colon) {
      error(line_no, cur.peek().column, ParseErrorKind::Syntax, "expected ':' after reaction name");
      continue;
    }
    cur.take();

    auto reactant = parse_complex(cur, line_no);
    if (!reactant) continue;

    const Token& arrow = cur.peek();
    if (arrow.kind != Tok::ArrowRev && arrow.kind != Tok::ArrowIrr) {
      error(line_no, arrow.column, ParseErrorKind::Syntax, "expected '<=>' or '->'");
      continue;
    }
    cur.take();
    bool reversible = arrow.kind == Tok::ArrowRev;

    auto product = parse_complex(cur, line_no);
    if (!product) continue;

    const Token& lb = cur.peek();
    if (lb.kind != Tok::LBracket) {
      error(line_no, lb.column, ParseErrorKind::Syntax, "expected '[' before rate symbols");
      continue;
    }
    cur.take();
    if (cur.peek().kind != Tok::Ident) {
      error(line_no, cur.peek().column, ParseErrorKind::Syntax, "expected rate symbol");
      continue;
    }
    const Token& rate1 = cur.take();
    claim_symbol(rate1, line_no);
    std::optional<Token> rate2;
    if (cur.peek().kind == Tok::Comma) {
      cur.take();
      if (cur.peek().kind != Tok::Ident) {
        error(line_no, cur.peek().column, ParseErrorKind::Syntax, "expected rate symbol");
        continue;
      }
      rate2 = cur.take();
      claim_symbol(*rate2, line_no);
    }
    if (cur.peek().kind != Tok::RBracket) {
      error(line_no, cur.peek().column, ParseErrorKind::Syntax, "expected ']' after rate symbols");
      continue;
    }
    cur.take();
    if (cur.peek().kind != Tok::End) {
      error(line_no, cur.peek().column, ParseErrorKind::Syntax, "unexpected trailing input");
      continue;
    }

    if (reversible && !rate2) {
      error(line_no, lb.column, ParseErrorKind::Arity,
            "reversible reaction requires two rate symbols");
      continue;
    }
    if (!reversible && rate2) {
      error(line_no, rate2->column, ParseErrorKind::Arity,
            "irreversible reaction takes exactly one rate symbol");
      continue;
    }
    if (*reactant == *product) {
      error(line_no, arrow.column, ParseErrorKind::Syntax,
            "reactant and product complexes are identical");
      continue;
    }

    net.add_reaction(rname.text, std::move(*reactant), std::move(*product), rate1.text,
                     rate2 ? std::optional<std::string>(rate2->text) : std::nullopt);
  }

  if (header_seen) {
    for (const auto& [name, col] : declared) {
      int id = species_ids.at(name);
      if (!species_used[static_cast<std::size_t>(id)]) {
        error(header_line, col, ParseErrorKind::UnknownSymbol,
              "species '" + name + "' is declared but never used");
      }
    }
  }

  if (result.errors.empty()) {
    // The checks above mirror validate(); this guards the invariant that a
    // returned network always validates cleanly.
    for (const std::string& v : validate(net)) {
      error(1, 1, ParseErrorKind::Syntax, v);
    }
  }
  if (result.errors.empty()) result.network = std::move(net);
  return result;
}

inline std::string format_complex(const ReactionNetwork& net, const Complex& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [id, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(coeff) + " " + net.species_name(id);
  }
  return out;
}

/// Inverse of parse_network: emits a species header (fixing species id
/// order) and one line per reaction, in id order.
inline std::string format_network(const ReactionNetwork& net) {
  std::string out;
  if (net.species_count() > 0) {
    out += "species:";
    for (const std::string& s : net.species_names()) out += " " + s;
    out += "\n";
  }
  for (const Reaction& r : net.reactions()) {
    out += r.name + ": " + format_complex(net, r.reactant);
    out += r.reversible ? " <=> " : " -> ";
    out += format_complex(net, r.product);
    out += " [" + net.rate_name(r.forward_rate);
    if (r.reversible) out += ", " + net.rate_name(*r.backward_rate);
    out += "]\n";
  }
  return out;
}

}  // namespace crnbinom
