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

#include "eitt/lambda.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>

#include "eitt/errors.hpp"

namespace eitt {

namespace detail {

struct TermNode {
  Term::Kind kind;
  std::string name;  // Var name or Abs hint
  std::size_t index = 0;
  std::shared_ptr<const TermNode> left, right;
  std::size_t size = 1;
  std::size_t height = 1;
  std::vector<std::string> free;
  std::vector<std::size_t> loose;
  std::size_t hash = 0;
};

}  // namespace detail

using detail::TermNode;

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2));
}

template <typename T>
std::vector<T> merged(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

Term Term::var(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::Var;
  n->hash = mix(1, std::hash<std::string>{}(name));
  n->free = {name};
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::bound(std::size_t index) {
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::Bound;
  n->index = index;
  n->loose = {index};
  n->hash = mix(2, index);
  return Term(std::move(n));
}

namespace {

Term make_abs(std::string hint, const Term& body);

// Binds Var(x) to index `depth`.
Term close(const Term& t, const std::string& x, std::size_t depth) {
  const auto& fv = t.free_vars();
  if (!std::binary_search(fv.begin(), fv.end(), x)) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      return Term::bound(depth);
    case Term::Kind::Bound:
      return t;
    case Term::Kind::Abs:
      return make_abs(t.hint(), close(t.body(), x, depth + 1));
    case Term::Kind::App:
      return Term::app(close(t.fun(), x, depth), close(t.arg(), x, depth));
  }
  return t;
}

// Replaces Bound(depth) by the locally closed `value`.
Term replace(const Term& t, std::size_t depth, const Term& value) {
  const auto& lo = t.loose();
  if (!std::binary_search(lo.begin(), lo.end(), depth)) return t;
  switch (t.kind()) {
    case Term::Kind::Bound:
      return value;
    case Term::Kind::Abs:
      return make_abs(t.hint(), replace(t.body(), depth + 1, value));
    case Term::Kind::App:
      return Term::app(replace(t.fun(), depth, value),
                       replace(t.arg(), depth, value));
    case Term::Kind::Var:
      return t;
  }
  return t;
}

}  // namespace

class TermBuilder {
 public:
  static Term abs_node(std::string hint, const Term& body) {
    auto n = std::make_shared<TermNode>();
    n->kind = Term::Kind::Abs;
    n->name = std::move(hint);
    n->left = body.node_;
    n->size = 1 + body.size();
    n->height = 1 + body.height();
    n->free = body.free_vars();
    for (std::size_t i : body.loose())
      if (i > 0) n->loose.push_back(i - 1);
    n->hash = mix(3, body.hash());
    return Term(std::move(n));
  }
};

namespace {

Term make_abs(std::string hint, const Term& body) {
  return TermBuilder::abs_node(std::move(hint), body);
}

}  // namespace

Term Term::abs(const std::string& binder, const Term& body) {
  return make_abs(binder, close(body, binder, 0));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::App;
  n->size = 1 + fun.size() + arg.size();
  n->height = 1 + std::max(fun.height(), arg.height());
  n->free = merged(fun.free_vars(), arg.free_vars());
  n->loose = merged(fun.loose(), arg.loose());
  n->hash = mix(mix(4, fun.hash()), arg.hash());
  n->left = std::move(fun.node_);
  n->right = std::move(arg.node_);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
std::size_t Term::index() const { return node_->index; }
const std::string& Term::hint() const { return node_->name; }
Term Term::body() const { return Term(node_->left); }
Term Term::fun() const { return Term(node_->left); }
Term Term::arg() const { return Term(node_->right); }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::height() const { return node_->height; }
const std::vector<std::string>& Term::free_vars() const { return node_->free; }
const std::vector<std::size_t>& Term::loose() const { return node_->loose; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind())
    return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.name() == b.name();
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Abs:
      return a.body() == b.body();
    case Term::Kind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

Term open_body(const Term& abs, const std::string& name) {
  return replace(abs.body(), 0, Term::var(name));
}

Term instantiate(const Term& body, const Term& value) {
  return replace(body, 0, value);
}

Term substitute(const Term& t, const std::string& x, const Term& u) {
  const auto& fv = t.free_vars();
  if (!std::binary_search(fv.begin(), fv.end(), x)) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      return u;
    case Term::Kind::Bound:
      return t;
    case Term::Kind::Abs:
      return make_abs(t.hint(), substitute(t.body(), x, u));
    case Term::Kind::App:
      return Term::app(substitute(t.fun(), x, u), substitute(t.arg(), x, u));
  }
  return t;
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  std::string name = base;
  while (avoid.count(name)) name += '\'';
  return name;
}

namespace {

std::optional<Term> step(const Term& t, std::set<std::string>& avoid) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Bound:
      return std::nullopt;
    case Term::Kind::App: {
      if (t.fun().is_abs()) return instantiate(t.fun().body(), t.arg());
      if (auto f = step(t.fun(), avoid)) return Term::app(*f, t.arg());
      if (auto a = step(t.arg(), avoid)) return Term::app(t.fun(), *a);
      return std::nullopt;
    }
    case Term::Kind::Abs: {
      std::string x = fresh_name(t.hint(), avoid);
      avoid.insert(x);
      auto b = step(open_body(t, x), avoid);
      avoid.erase(x);
      if (!b) return std::nullopt;
      Term r = Term::abs(x, *b);
      return make_abs(t.hint(), r.body());
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Term> beta_step(const Term& t) {
  std::set<std::string> avoid(t.free_vars().begin(), t.free_vars().end());
  return step(t, avoid);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

class Printer {
 public:
  std::string run(const Term& t) {
    print(t, false, false);
    return out_;
  }

 private:
  // `as_fun`: left of an application; `as_arg`: right of one.
  void print(const Term& t, bool as_fun, bool as_arg) {
    switch (t.kind()) {
      case Term::Kind::Var:
        out_ += t.name();
        return;
      case Term::Kind::Bound:
        if (t.index() < scope_.size())
          out_ += scope_[scope_.size() - 1 - t.index()];
        else
          out_ += "#" + std::to_string(t.index() - scope_.size());
        return;
      case Term::Kind::Abs: {
        const bool paren = as_fun || as_arg;
        if (paren) out_ += '(';
        out_ += '\\';
        std::size_t pushed = 0;
        Term cur = t;
        while (cur.is_abs()) {
          if (pushed) out_ += ' ';
          std::string name = binder_name(cur);
          out_ += name;
          scope_.push_back(name);
          ++pushed;
          cur = cur.body();
        }
        out_ += '.';
        print(cur, false, false);
        scope_.resize(scope_.size() - pushed);
        if (paren) out_ += ')';
        return;
      }
      case Term::Kind::App: {
        if (as_arg) out_ += '(';
        print(t.fun(), true, false);
        out_ += ' ';
        print(t.arg(), false, true);
        if (as_arg) out_ += ')';
        return;
      }
    }
  }

  // The hint, primed until it clashes neither with a free name of the body
  // nor with an enclosing binder the body refers to.
  std::string binder_name(const Term& abs) {
    const Term body = abs.body();
    std::set<std::string> avoid(body.free_vars().begin(),
                                body.free_vars().end());
    for (std::size_t i : body.loose())
      if (i >= 1 && i - 1 < scope_.size())
        avoid.insert(scope_[scope_.size() - i]);
    return fresh_name(abs.hint(), avoid);
  }

  std::string out_;
  std::vector<std::string> scope_;
};

}  // namespace

std::string to_string(const Term& t) { return Printer().run(t); }
std::string Term::str() const { return to_string(*this); }
std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << t.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  Term term() {
    skip_ws();
    if (at('\\')) {
      ++pos_;
      std::vector<std::string> binders;
      skip_ws();
      while (pos_ < text_.size() && ident_start(text_[pos_])) {
        binders.push_back(ident());
        skip_ws();
      }
      if (binders.empty()) fail("expected binder");
      if (!at('.')) fail("expected '.'");
      ++pos_;
      Term body = term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Term::abs(*it, body);
      return body;
    }
    Term t = bterm();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && (at('(') || ident_start(text_[pos_])))
        t = Term::app(t, bterm());
      else
        return t;
    }
  }

  Term bterm() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of term");
    if (at('(')) {
      ++pos_;
      Term t = term();
      skip_ws();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return t;
    }
    if (ident_start(text_[pos_])) return Term::var(ident());
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'';
  }
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("term syntax error: " + msg, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

namespace combinators {

Term i() { return parse_term("\\x.x"); }
Term k() { return parse_term("\\x y.x"); }
Term delta() { return parse_term("\\x.x x"); }
Term delta_delta() { return Term::app(delta(), delta()); }

}  // namespace combinators

}  // namespace eitt
