//  Copyright 2026 The eitt Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <cctype>
#include <fstream>
#include <sstream>

#include "eitt/theory.hpp"

namespace eitt {

namespace {

// Comments are blanked out rather than removed so that error offsets still
// point into the original text.
std::string strip_comments(std::string_view text) {
  std::string out(text);
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool hash = out[i] == '#';
    bool slashes = out[i] == '/' && i + 1 < out.size() && out[i + 1] == '/';
    if (!hash && !slashes) continue;
    while (i < out.size() && out[i] != '\n') out[i++] = ' ';
  }
  return out;
}

class TheoryReader {
 public:
  explicit TheoryReader(std::string text) : text_(std::move(text)) {}

  Theory read() {
    expect_word("theory");
    std::string name = ident();
    expect('{');
    std::vector<std::string> atoms;
    std::vector<Theory::OrderAxiom> order;
    std::vector<std::pair<std::string, Type>> arrows;
    bool seen_atoms = false;

    while (!peek('}')) {
      std::string section = ident();
      expect(':');
      if (section == "atoms") {
        seen_atoms = true;
        atoms.push_back(ident());
        while (peek(',')) {
          ++pos_;
          atoms.push_back(ident());
        }
        expect(';');
      } else if (section == "order") {
        while (entry_follows()) {
          std::string lo = ident();
          expect_word("<=");
          std::string hi = ident();
          expect(';');
          order.emplace_back(std::move(lo), std::move(hi));
        }
      } else if (section == "arrows") {
        while (entry_follows()) {
          std::string atom = ident();
          expect('~');
          skip_ws();
          std::size_t start = pos_;
          std::size_t end = text_.find(';', pos_);
          if (end == std::string::npos) fail("expected ';'");
          Type body;
          try {
            body = normalize(
                parse_type_expr(std::string_view(text_).substr(start, end - start)));
          } catch (const SyntaxError& e) {
            throw SyntaxError(e.what(), start + e.position());
          }
          pos_ = end + 1;
          arrows.emplace_back(std::move(atom), body);
        }
      } else {
        fail("unknown section '" + section + "'");
      }
    }
    expect('}');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing text after theory");
    if (!seen_atoms) fail("missing atoms section");
    return Theory(std::move(name), std::move(atoms), std::move(order),
                  std::move(arrows));
  }

 private:
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  // An entry starts with an identifier that is not a section header.
  bool entry_follows() {
    skip_ws();
    std::size_t p = pos_;
    if (p >= text_.size() || !ident_char(text_[p])) return false;
    while (p < text_.size() && ident_char(text_[p])) ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p >= text_.size() || text_[p] != ':';
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '_'))
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) != 0)
      fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("theory syntax error: " + msg, pos_);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Theory parse_theory(std::string_view text) {
  return TheoryReader(strip_comments(text)).read();
}

std::string print_theory(const Theory& th) {
  std::ostringstream os;
  os << "theory " << th.name() << " {\n  atoms: ";
  for (std::size_t i = 0; i < th.atoms().size(); ++i)
    os << (i ? ", " : "") << th.atoms()[i];
  os << ";\n  order:";
  for (const auto& [lo, hi] : th.order_axioms())
    os << "\n    " << lo << " <= " << hi << ";";
  os << "\n  arrows:";
  for (const auto& [atom, body] : th.arrow_axioms())
    os << "\n    " << atom << " ~ " << body.str() << ";";
  os << "\n}\n";
  return os.str();
}

Theory load_theory(std::string_view text) {
  Theory th = parse_theory(text);
  ValidationReport report = validate_theory(th);
  if (!report.ok()) throw ValidationError(std::move(report));
  return th;
}

Theory load_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open theory file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_theory(buf.str());
}

void save_theory_file(const Theory& th, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write theory file '" + path + "'");
  out << print_theory(th);
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace eitt
