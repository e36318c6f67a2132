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

#include "eitt/assignment.hpp"

#include <algorithm>
#include <sstream>

#include "eitt/errors.hpp"

namespace eitt {

// ---------------------------------------------------------------------------
// Bases and derivations

std::optional<Type> Basis::lookup(const std::string& x) const {
  auto it = bindings_.find(x);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

Basis Basis::with(const std::string& x, Type a) const {
  if (contains(x))
    throw PreconditionError("variable '" + x + "' is already in the basis");
  Basis out = *this;
  out.bindings_.emplace(x, a);
  return out;
}

std::string Basis::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, a] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += x + ": " + a.str();
  }
  return out + "}";
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::AxTop: return "axTop";
    case Rule::ArrowIntro: return "->I";
    case Rule::ArrowElim: return "->E";
    case Rule::MeetIntro: return "&I";
    case Rule::Sub: return "<=";
  }
  return "?";
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

namespace {

class Checker {
 public:
  explicit Checker(const Theory& th) : th_(th) {}

  CheckResult run(const Derivation& d) {
    try {
      check(d, "root");
    } catch (const UnknownAtomError& e) {
      fail(path_, e.what());
    }
    return result_;
  }

 private:
  bool fail(const std::string& path, const std::string& msg) {
    if (result_.ok) result_ = {false, path, msg};
    return false;
  }

  bool check(const Derivation& d, const std::string& path) {
    path_ = path;
    th_.check_type(d.type);
    for (const auto& [x, a] : d.basis.bindings()) th_.check_type(a);
    if (!d.term.locally_closed()) return fail(path, "term is not locally closed");

    auto arity = [&](std::size_t n) {
      return d.premises.size() == n ||
             fail(path, rule_name(d.rule) + " expects " + std::to_string(n) +
                            " premises");
    };
    auto same_context = [&](const Derivation& p) {
      return p.basis == d.basis || fail(path, "premise basis differs");
    };

    switch (d.rule) {
      case Rule::Ax: {
        if (!arity(0)) return false;
        if (!d.term.is_var()) return fail(path, "ax on a non-variable");
        auto b = d.basis.lookup(d.term.name());
        if (!b) return fail(path, "variable not in basis");
        if (*b != d.type) return fail(path, "type differs from the basis");
        break;
      }
      case Rule::AxTop:
        if (!arity(0)) return false;
        if (!d.type.is_top()) return fail(path, "axTop must conclude Top");
        break;
      case Rule::ArrowIntro: {
        if (!arity(1)) return false;
        if (!d.term.is_abs()) return fail(path, "->I on a non-abstraction");
        if (!d.type.is_arrow()) return fail(path, "->I must conclude an arrow");
        const Derivation& p = d.premises[0];
        std::optional<std::string> x;
        for (const auto& [name, a] : p.basis.bindings()) {
          if (d.basis.contains(name)) {
            if (*d.basis.lookup(name) != a)
              return fail(path, "premise rebinds '" + name + "'");
          } else if (x) {
            return fail(path, "premise adds more than one variable");
          } else {
            x = name;
          }
        }
        if (!x || p.basis.bindings().size() != d.basis.bindings().size() + 1)
          return fail(path, "premise must add exactly one variable");
        const auto& fv = d.term.free_vars();
        if (std::binary_search(fv.begin(), fv.end(), *x))
          return fail(path, "opened variable is free in the abstraction");
        if (!(p.term == open_body(d.term, *x)))
          return fail(path, "premise term is not the opened body");
        if (*p.basis.lookup(*x) != d.type.domain())
          return fail(path, "domain differs from the opened variable's type");
        if (p.type != d.type.codomain())
          return fail(path, "codomain differs from the premise type");
        break;
      }
      case Rule::ArrowElim: {
        if (!arity(2)) return false;
        if (!d.term.is_app()) return fail(path, "->E on a non-application");
        const Derivation& f = d.premises[0];
        const Derivation& a = d.premises[1];
        if (!same_context(f) || !same_context(a)) return false;
        if (!(f.term == d.term.fun()) || !(a.term == d.term.arg()))
          return fail(path, "premise terms do not match the application");
        if (f.type != Type::arrow(a.type, d.type))
          return fail(path, "function type is not argument -> conclusion");
        break;
      }
      case Rule::MeetIntro: {
        if (!arity(2)) return false;
        for (const auto& p : d.premises) {
          if (!same_context(p)) return false;
          if (!(p.term == d.term)) return fail(path, "premise term differs");
        }
        if (d.type != Type::meet(d.premises[0].type, d.premises[1].type))
          return fail(path, "conclusion is not the meet of the premises");
        break;
      }
      case Rule::Sub: {
        if (!arity(1)) return false;
        const Derivation& p = d.premises[0];
        if (!same_context(p)) return false;
        if (!(p.term == d.term)) return fail(path, "premise term differs");
        if (!d.side) return fail(path, "<= without a side judgement");
        if (d.side->lhs != p.type || d.side->rhs != d.type)
          return fail(path, "side judgement does not connect premise and conclusion");
        if (!subtype(th_, d.side->lhs, d.side->rhs))
          return fail(path, "side judgement " + d.side->lhs.str() + " <= " +
                                d.side->rhs.str() + " does not hold");
        break;
      }
    }
    for (std::size_t i = 0; i < d.premises.size(); ++i)
      if (!check(d.premises[i], path + "." + std::to_string(i))) return false;
    return true;
  }

  const Theory& th_;
  CheckResult result_;
  std::string path_;
};

void serialize_into(const Derivation& d, std::size_t indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += "[" + rule_name(d.rule) + "] " + d.basis.str() + " |- " +
         d.term.str() + " : " + d.type.str();
  if (d.side) out += "   by " + d.side->lhs.str() + " <= " + d.side->rhs.str();
  out += '\n';
  for (const auto& p : d.premises) serialize_into(p, indent + 1, out);
}

}  // namespace

CheckResult check_derivation(const Theory& th, const Derivation& d) {
  return Checker(th).run(d);
}

std::string serialize(const Derivation& d) {
  std::string out;
  serialize_into(d, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Inference

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

struct Result {
  Bits bits;
  Type gen;
};
using ResultPtr = std::shared_ptr<const Result>;

struct Key {
  const void* node;
  std::size_t depth;
  std::vector<std::uint64_t> context;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = std::hash<const void*>{}(k.node) * 31 + k.depth;
    for (auto c : k.context) h = h * 0x100000001B3ull ^ c;
    return h;
  }
};

Derivation leaf(Rule r, const Basis& g, const Term& t, Type a) {
  return Derivation{r, g, t, a, {}, std::nullopt};
}

Derivation weaken(Derivation d, Type target) {
  if (d.type == target) return d;
  Basis g = d.basis;
  Term t = d.term;
  Judgement side{d.type, target};
  std::vector<Derivation> prem;
  prem.push_back(std::move(d));
  return Derivation{Rule::Sub, std::move(g), std::move(t), target,
                    std::move(prem), side};
}

Derivation meet_intro(Derivation a, Derivation b) {
  Basis g = a.basis;
  Term t = a.term;
  Type ty = Type::meet(a.type, b.type);
  std::vector<Derivation> prem;
  prem.push_back(std::move(a));
  prem.push_back(std::move(b));
  return Derivation{Rule::MeetIntro, std::move(g), std::move(t), ty,
                    std::move(prem), std::nullopt};
}

}  // namespace

struct Inferencer::Impl {
  Theory th;
  TypeUniverse u;
  InferLimits limits;
  std::size_t n;
  std::size_t words;
  std::vector<std::int8_t> le;  // n*n, -1 unknown
  std::unordered_map<std::uint64_t, ResultPtr> up_results;
  std::unordered_map<Key, std::pair<Term, ResultPtr>, KeyHash> memo;
  std::size_t steps = 0;

  Impl(Theory t, TypeUniverse univ, InferLimits lim)
      : th(std::move(t)), u(std::move(univ)), limits(lim), n(u.size()),
        words((n + 63) / 64), le(n * n, -1) {
    for (Type m : u.members()) th.check_type(m);
  }

  bool leq(std::size_t i, std::size_t j) {
    auto& c = le[i * n + j];
    if (c < 0) c = subtype(th, u[i], u[j]) ? 1 : 0;
    return c == 1;
  }

  ResultPtr up(Type t) {
    auto it = up_results.find(t.id());
    if (it != up_results.end()) return it->second;
    auto r = std::make_shared<Result>();
    r->bits.assign(words, 0);
    for (std::size_t i = 0; i < n; ++i) {
      bool in;
      if (auto k = u.index_of(t))
        in = leq(*k, i);
      else
        in = subtype(th, t, u[i]);
      if (in) set(r->bits, i);
    }
    r->gen = t;
    up_results.emplace(t.id(), r);
    return r;
  }

  ResultPtr eval(const Basis& basis, const Term& t, std::size_t depth,
                 std::vector<Type>& stack) {
    depth = std::min(depth, t.height());
    if (depth == 0) return up(Type::top());

    Key key{t.node_id(), depth, {}};
    for (const auto& x : t.free_vars()) {
      auto b = basis.lookup(x);
      key.context.push_back(b ? b->id() : Type::top().id());
    }
    for (std::size_t i : t.loose()) key.context.push_back(stack_at(stack, i).id());
    if (auto it = memo.find(key); it != memo.end()) return it->second.second;

    if (++steps > limits.budget)
      throw ResourceError("inference budget of " +
                          std::to_string(limits.budget) + " steps exhausted");

    ResultPtr r;
    switch (t.kind()) {
      case Term::Kind::Var:
        r = up(basis.lookup(t.name()).value_or(Type::top()));
        break;
      case Term::Kind::Bound:
        r = up(stack_at(stack, t.index()));
        break;
      case Term::Kind::App: {
        ResultPtr rf = eval(basis, t.fun(), depth - 1, stack);
        ResultPtr ra = eval(basis, t.arg(), depth - 1, stack);
        r = up(apply_generator(th, rf->gen, ra->gen));
        break;
      }
      case Term::Kind::Abs:
        r = up(abs_arrows(basis, t, depth, stack));
        break;
    }
    memo.emplace(std::move(key), std::make_pair(t, r));
    return r;
  }

  static Type stack_at(const std::vector<Type>& stack, std::size_t i) {
    if (i >= stack.size())
      throw PreconditionError("term has a dangling bound variable");
    return stack[stack.size() - 1 - i];
  }

  // Meet of B -> g_B over B in u. Top-like arrows are dropped, then any
  // arrow implied by another (B <= B' with g_B ~ g_B'), then, largest
  // first, any arrow implied by the meet of the rest. The result is
  // equivalent to the full meet.
  Type abs_arrows(const Basis& basis, const Term& t, std::size_t depth,
                  std::vector<Type>& stack) {
    std::vector<std::pair<std::size_t, Type>> found;
    for (std::size_t b = 0; b < n; ++b) {
      stack.push_back(u[b]);
      ResultPtr body = eval(basis, t.body(), depth - 1, stack);
      stack.pop_back();
      if (!is_top_equiv(th, body->gen)) found.emplace_back(b, body->gen);
    }
    std::vector<Type> arrows;
    for (const auto& [b, g] : found) {
      bool dominated = false;
      for (const auto& [b2, g2] : found) {
        if (b2 == b || !leq(b, b2)) continue;
        if (leq(b2, b) && b2 > b) continue;
        if (g2 == g || equiv(th, g, g2)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) arrows.push_back(Type::arrow(u[b], g));
    }
    std::sort(arrows.begin(), arrows.end());
    for (std::size_t i = arrows.size(); i-- > 0 && arrows.size() > 1;) {
      std::vector<Type> rest = arrows;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (subtype(th, Type::meet(rest), arrows[i])) arrows = std::move(rest);
    }
    return Type::meet(arrows);
  }

  ResultPtr result(const Basis& basis, const Term& t, std::size_t depth) {
    if (!t.locally_closed())
      throw PreconditionError("term has a dangling bound variable");
    for (const auto& [x, a] : basis.bindings()) th.check_type(a);
    std::vector<Type> stack;
    return eval(basis, t, depth, stack);
  }

  bool derivable(const Basis& basis, const Term& t, Type a, std::size_t depth) {
    th.check_type(a);
    return subtype(th, result(basis, t, depth)->gen, a);
  }

  // Builds a derivation of basis |- t : a; `a` must be derivable.
  Derivation build(const Basis& basis, const Term& t, Type a,
                   std::size_t depth) {
    depth = std::min(depth, t.height());
    if (is_top_equiv(th, a))
      return weaken(leaf(Rule::AxTop, basis, t, Type::top()), a);

    switch (t.kind()) {
      case Term::Kind::Var: {
        auto b = basis.lookup(t.name());
        if (!b) throw Error("internal: unbound variable typed above Top");
        return weaken(leaf(Rule::Ax, basis, t, *b), a);
      }
      case Term::Kind::App: {
        ResultPtr rf = result(basis, t.fun(), depth - 1);
        ResultPtr ra = result(basis, t.arg(), depth - 1);
        Type b = ra->gen;
        for (std::size_t i = 0; i < n; ++i) {
          if (test(ra->bits, i) &&
              subtype(th, rf->gen, Type::arrow(u[i], a))) {
            b = u[i];
            break;
          }
        }
        std::vector<Derivation> prem;
        prem.push_back(build(basis, t.fun(), Type::arrow(b, a), depth - 1));
        prem.push_back(build(basis, t.arg(), b, depth - 1));
        return Derivation{Rule::ArrowElim, basis, t, a, std::move(prem),
                          std::nullopt};
      }
      case Term::Kind::Abs:
        return build_abs(basis, t, a, depth);
      case Term::Kind::Bound:
        break;
    }
    throw PreconditionError("term has a dangling bound variable");
  }

  Derivation build_abs(const Basis& basis, const Term& t, Type a,
                       std::size_t depth) {
    if (a.is_intersection()) {
      std::optional<Derivation> acc;
      for (Type p : a.parts()) {
        Derivation d = build(basis, t, p, depth);
        acc = acc ? meet_intro(std::move(*acc), std::move(d)) : std::move(d);
      }
      return std::move(*acc);
    }
    if (a.is_atom()) {
      // psi ~ body(psi), and body(psi) is a meet of arrows.
      Type body = *th.body(a.name());
      return weaken(build(basis, t, body, depth), a);
    }

    const Type c = a.domain(), d = a.codomain();
    std::set<std::string> avoid(t.free_vars().begin(), t.free_vars().end());
    for (const auto& [x, ty] : basis.bindings()) avoid.insert(x);
    const std::string x = fresh_name(t.hint(), avoid);
    const Term opened = open_body(t, x);

    if (u.contains(c)) {
      Basis inner = basis.with(x, c);
      if (derivable(inner, opened, d, depth - 1))
        return intro(basis, t, c, build(inner, opened, d, depth - 1));
    }

    // Collect the arrows B -> g_B with c <= B whose codomains meet below d,
    // then drop any that are not needed.
    std::vector<std::pair<Type, Type>> used;
    for (std::size_t i = 0; i < n; ++i) {
      if (!subtype(th, c, u[i])) continue;
      Type g = result(basis.with(x, u[i]), opened, depth - 1)->gen;
      used.emplace_back(u[i], g);
    }
    auto closes = [&](const std::vector<std::pair<Type, Type>>& v) {
      if (v.empty()) return false;
      std::vector<Type> cods;
      for (const auto& p : v) cods.push_back(p.second);
      return subtype(th, Type::meet(cods), d);
    };
    if (!closes(used)) throw Error("internal: abstraction not derivable");
    for (std::size_t i = used.size(); i-- > 0;) {
      auto trial = used;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (closes(trial)) used = std::move(trial);
    }
    std::optional<Derivation> acc;
    for (const auto& [b, g] : used) {
      Basis inner = basis.with(x, b);
      Derivation one = intro(basis, t, b, build(inner, opened, g, depth - 1));
      acc = acc ? meet_intro(std::move(*acc), std::move(one)) : std::move(one);
    }
    return weaken(std::move(*acc), a);
  }

  static Derivation intro(const Basis& basis, const Term& t, Type dom,
                          Derivation body) {
    Type ty = Type::arrow(dom, body.type);
    std::vector<Derivation> prem;
    prem.push_back(std::move(body));
    return Derivation{Rule::ArrowIntro, basis, t, ty, std::move(prem),
                      std::nullopt};
  }
};

Inferencer::Inferencer(Theory th, TypeUniverse u, InferLimits limits)
    : impl_(std::make_unique<Impl>(std::move(th), std::move(u), limits)) {}
Inferencer::~Inferencer() = default;
Inferencer::Inferencer(Inferencer&&) noexcept = default;
Inferencer& Inferencer::operator=(Inferencer&&) noexcept = default;

const Theory& Inferencer::theory() const { return impl_->th; }
const TypeUniverse& Inferencer::universe() const { return impl_->u; }
bool Inferencer::leq(std::size_t i, std::size_t j) { return impl_->leq(i, j); }
std::size_t Inferencer::steps() const { return impl_->steps; }

std::vector<Type> Inferencer::infer(const Basis& basis, const Term& t,
                                    std::size_t depth) {
  ResultPtr r = impl_->result(basis, t, depth);
  std::vector<Type> out;
  for (std::size_t i = 0; i < impl_->n; ++i)
    if (test(r->bits, i)) out.push_back(impl_->u[i]);
  return out;
}

Type Inferencer::generator(const Basis& basis, const Term& t,
                           std::size_t depth) {
  return impl_->result(basis, t, depth)->gen;
}

bool Inferencer::derivable(const Basis& basis, const Term& t, Type a,
                           std::size_t depth) {
  return impl_->derivable(basis, t, a, depth);
}

std::optional<Derivation> Inferencer::certify(const Basis& basis,
                                              const Term& t, Type a,
                                              std::size_t depth) {
  if (!impl_->derivable(basis, t, a, depth)) return std::nullopt;
  return impl_->build(basis, t, a, depth);
}

std::vector<Type> infer(const Theory& th, const Basis& basis, const Term& t,
                        const TypeUniverse& u, std::size_t depth) {
  return Inferencer(th, u).infer(basis, t, depth);
}

bool intersection_elim_check(const Theory& th, const Basis& basis,
                             const Term& t, Type a, Type b,
                             const TypeUniverse& u, std::size_t depth) {
  Inferencer inf(th, u);
  if (!inf.derivable(basis, t, Type::meet(a, b), depth)) return true;
  for (Type part : {a, b}) {
    auto d = inf.certify(basis, t, part, depth);
    if (!d || !check_derivation(th, *d)) return false;
  }
  return true;
}

}  // namespace eitt
