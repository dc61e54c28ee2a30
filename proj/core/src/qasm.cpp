// Copyright 2026 The lcnns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <charconv>
#include <optional>

#include "lcnns/circuit.hpp"
#include "lcnns/error.hpp"

namespace lcnns {
namespace {

enum class Tok { Ident, Int, Real, String, Symbol, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    const std::size_t start = pos_;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        advance();
      }
      t.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      t.kind = Tok::Int;
      if (pos_ < src_.size() && src_[pos_] == '.') {
        advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        t.kind = Tok::Real;
      }
    } else if (c == '"') {
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') advance();
      if (pos_ >= src_.size() || src_[pos_] != '"') {
        throw ParseError("unterminated string", t.line, t.column);
      }
      advance();
      t.kind = Tok::String;
    } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      advance();
      advance();
      t.kind = Tok::Arrow;
    } else if (c == ';' || c == ',' || c == '[' || c == ']') {
      advance();
      t.kind = Tok::Symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }
    t.text = src_.substr(start, pos_ - start);
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Register {
  std::string name;
  int size = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { shift(); }

  Circuit run() {
    if (is_ident("OPENQASM")) {
      shift();
      if (cur_.kind != Tok::Real && cur_.kind != Tok::Int) fail("expected version number");
      if (cur_.text != "2.0" && cur_.text != "2") fail("only OpenQASM 2.0 is supported");
      shift();
      expect_symbol(";");
    }
    while (cur_.kind != Tok::End) statement();
    Circuit c(qreg_ ? qreg_->size : 0, creg_ ? creg_->size : 0);
    for (const auto& [gate, where] : gates_) {
      try {
        c.add(gate);
      } catch (const InputError& e) {
        throw ParseError(e.what(), where.line, where.column);
      }
    }
    return c;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, cur_.line, cur_.column);
  }

  bool is_ident(std::string_view word) const {
    return cur_.kind == Tok::Ident && cur_.text == word;
  }

  void expect_symbol(std::string_view sym) {
    if (cur_.kind != Tok::Symbol || cur_.text != sym) {
      fail("expected '" + std::string(sym) + "'");
    }
    shift();
  }

  int expect_int() {
    if (cur_.kind != Tok::Int) fail("expected an integer");
    int v = 0;
    auto [ptr, ec] = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), v);
    if (ec != std::errc() || ptr != cur_.text.data() + cur_.text.size()) fail("integer too large");
    shift();
    return v;
  }

  std::string expect_ident() {
    if (cur_.kind != Tok::Ident) fail("expected an identifier");
    std::string s(cur_.text);
    shift();
    return s;
  }

  void declare(std::optional<Register>& slot, const char* what) {
    const Token at = cur_;
    shift();
    Register r;
    r.name = expect_ident();
    expect_symbol("[");
    r.size = expect_int();
    expect_symbol("]");
    expect_symbol(";");
    if (slot) {
      throw ParseError(std::string("only one ") + what + " is supported", at.line, at.column);
    }
    if ((qreg_ && qreg_->name == r.name) || (creg_ && creg_->name == r.name)) {
      throw ParseError("register '" + r.name + "' already declared", at.line, at.column);
    }
    slot = r;
  }

  // name[index] on a declared register; index checked against its size.
  int operand(const std::optional<Register>& reg, const char* what) {
    const Token at = cur_;
    const std::string name = expect_ident();
    if (!reg || reg->name != name) {
      throw ParseError("unknown " + std::string(what) + " '" + name + "'", at.line, at.column);
    }
    expect_symbol("[");
    const Token idx_at = cur_;
    const int idx = expect_int();
    expect_symbol("]");
    if (idx >= reg->size) {
      throw ParseError("index " + std::to_string(idx) + " exceeds " + name + "[" +
                           std::to_string(reg->size) + "]",
                       idx_at.line, idx_at.column);
    }
    return idx;
  }

  void statement() {
    const Token at = cur_;
    if (cur_.kind != Tok::Ident) fail("expected a statement");
    if (is_ident("include")) {
      shift();
      if (cur_.kind != Tok::String) fail("expected a file name");
      shift();
      expect_symbol(";");
      return;
    }
    if (is_ident("qreg")) return declare(qreg_, "qreg");
    if (is_ident("creg")) return declare(creg_, "creg");

    Gate g;
    if (is_ident("cx") || is_ident("CX")) {
      shift();
      const int c = operand(qreg_, "quantum register");
      expect_symbol(",");
      const int t = operand(qreg_, "quantum register");
      if (c == t) throw ParseError("cx control and target must differ", at.line, at.column);
      g = Gate::cx(c, t);
    } else if (is_ident("h") || is_ident("x") || is_ident("z")) {
      const char kind = cur_.text[0];
      shift();
      const int q = operand(qreg_, "quantum register");
      g = kind == 'h' ? Gate::h(q) : kind == 'x' ? Gate::x(q) : Gate::z(q);
    } else if (is_ident("measure")) {
      shift();
      const int q = operand(qreg_, "quantum register");
      if (cur_.kind != Tok::Arrow) fail("expected '->'");
      shift();
      const int c = operand(creg_, "classical register");
      g = Gate::measure(q, c);
    } else {
      fail("unsupported statement '" + std::string(cur_.text) + "'");
    }
    expect_symbol(";");
    gates_.push_back({g, at});
  }

  Lexer lex_;
  Token cur_;
  std::optional<Register> qreg_;
  std::optional<Register> creg_;
  std::vector<std::pair<Gate, Token>> gates_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(text).run(); }

std::string write_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (c.num_qubits() > 0) out += "qreg q[" + std::to_string(c.num_qubits()) + "];\n";
  if (c.num_clbits() > 0) out += "creg c[" + std::to_string(c.num_clbits()) + "];\n";
  for (const auto& g : c.gates()) {
    const std::string qa = "q[" + std::to_string(g.a) + "]";
    switch (g.kind) {
      case GateKind::CX:
        out += "cx " + qa + ",q[" + std::to_string(g.b) + "];\n";
        break;
      case GateKind::Measure:
        out += "measure " + qa + " -> c[" + std::to_string(g.b) + "];\n";
        break;
      default:
        out += std::string(gate_name(g.kind)) + " " + qa + ";\n";
        break;
    }
  }
  return out;
}

}  // namespace lcnns
