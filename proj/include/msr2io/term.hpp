#pragma once

/*
 * First-order terms over a user signature plus fresh names, public names and
 * sorted variables.
 *
 * Terms are immutable shared trees with a precomputed structural hash. The
 * total order (variant tag, then name/id, then arguments lexicographically)
 * is the canonical order used everywhere determinism matters: multiset keys,
 * exponent sorting, enumeration output, JSON dumps.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"

namespace msr2io {

enum class SymKind { Constructor, Destructor, Format, Crypto };

inline const char* to_string(SymKind k) {
  switch (k) {
    case SymKind::Constructor: return "constructor";
    case SymKind::Destructor: return "destructor";
    case SymKind::Format: return "format";
    case SymKind::Crypto: return "crypto";
  }
  return "?";
}

struct Symbol {
  std::string name;
  int arity = 0;
  SymKind kind = SymKind::Constructor;
};

// Term signature. Symbol names are unique; order of declaration is preserved
// and used for deterministic enumeration.
class Signature {
 public:
  void add(Symbol s) { syms_.push_back(std::move(s)); }
  const std::vector<Symbol>& symbols() const { return syms_; }
  const Symbol* find(const std::string& name) const {
    for (const auto& s : syms_)
      if (s.name == name) return &s;
    return nullptr;
  }
  std::optional<int> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < syms_.size(); ++i)
      if (syms_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
  }

 private:
  std::vector<Symbol> syms_;
};

enum class Sort { Msg, Fresh, Pub };

enum class TermKind { Fresh, Pub, Var, App };

class Term;
using TermVec = std::vector<Term>;

struct TermNode {
  TermKind kind;
  std::string name;      // fresh: display name; pub: literal; var: name; app: symbol
  std::uint64_t id = 0;  // fresh names only; identity
  Sort sort = Sort::Msg; // variables only
  SymKind symkind = SymKind::Constructor;  // apps only
  TermVec args;          // apps only
  std::size_t hash = 0;
};

class Term {
 public:
  Term() = default;  // empty; only for containers, never a valid term

  static Term fresh(std::string name, std::uint64_t id) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::Fresh;
    n->name = std::move(name);
    n->id = id;
    n->hash = hash_combine(0x11, std::hash<std::uint64_t>{}(id));
    return Term(std::move(n));
  }
  static Term pub(std::string name) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::Pub;
    n->name = std::move(name);
    n->hash = hash_combine(0x22, std::hash<std::string>{}(n->name));
    return Term(std::move(n));
  }
  static Term var(std::string name, Sort sort = Sort::Msg) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::Var;
    n->name = std::move(name);
    n->sort = sort;
    n->hash = hash_combine(
        hash_combine(0x33, std::hash<std::string>{}(n->name)),
        static_cast<std::size_t>(sort));
    return Term(std::move(n));
  }
  static Term app(std::string name, SymKind kind, TermVec args) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::App;
    n->name = std::move(name);
    n->symkind = kind;
    n->args = std::move(args);
    std::size_t h = hash_combine(0x44, std::hash<std::string>{}(n->name));
    for (const auto& a : n->args) h = hash_combine(h, a.hash());
    n->hash = h;
    return Term(std::move(n));
  }
  static Term app(const Symbol& sym, TermVec args) {
    return app(sym.name, sym.kind, std::move(args));
  }

  bool valid() const { return node_ != nullptr; }
  TermKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  std::uint64_t fresh_id() const { return node_->id; }
  Sort sort() const { return node_->sort; }
  SymKind symkind() const { return node_->symkind; }
  const TermVec& args() const { return node_->args; }
  std::size_t hash() const { return node_ ? node_->hash : 0; }

  bool is_fresh() const { return node_->kind == TermKind::Fresh; }
  bool is_pub() const { return node_->kind == TermKind::Pub; }
  bool is_var() const { return node_->kind == TermKind::Var; }
  bool is_app() const { return node_->kind == TermKind::App; }
  bool is_name() const { return is_fresh() || is_pub(); }
  bool is_app_of(const std::string& f) const {
    return is_app() && node_->name == f;
  }

  bool is_ground() const {
    if (is_var()) return false;
    if (!is_app()) return true;
    for (const auto& a : args())
      if (!a.is_ground()) return false;
    return true;
  }

  // Syntactic depth: names and variables have depth 0, f(...) has
  // 1 + max(args), 0-ary applications have depth 1.
  int depth() const {
    if (!is_app()) return 0;
    int d = 0;
    for (const auto& a : args()) d = std::max(d, a.depth());
    return d + 1;
  }

  int size() const {
    if (!is_app()) return 1;
    int s = 1;
    for (const auto& a : args()) s += a.size();
    return s;
  }

  int compare(const Term& o) const {
    if (node_ == o.node_) return 0;
    auto ka = static_cast<int>(kind()), kb = static_cast<int>(o.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (kind()) {
      case TermKind::Fresh:
        if (fresh_id() != o.fresh_id())
          return fresh_id() < o.fresh_id() ? -1 : 1;
        return 0;
      case TermKind::Pub:
        return name().compare(o.name());
      case TermKind::Var: {
        int c = name().compare(o.name());
        if (c != 0) return c;
        auto sa = static_cast<int>(sort()), sb = static_cast<int>(o.sort());
        if (sa != sb) return sa < sb ? -1 : 1;
        return 0;
      }
      case TermKind::App: {
        int c = name().compare(o.name());
        if (c != 0) return c;
        if (args().size() != o.args().size())
          return args().size() < o.args().size() ? -1 : 1;
        for (std::size_t i = 0; i < args().size(); ++i) {
          c = args()[i].compare(o.args()[i]);
          if (c != 0) return c;
        }
        return 0;
      }
    }
    return 0;
  }

  bool operator==(const Term& o) const {
    if (node_ == o.node_) return true;
    if (hash() != o.hash()) return false;
    return compare(o) == 0;
  }
  bool operator!=(const Term& o) const { return !(*this == o); }
  bool operator<(const Term& o) const { return compare(o) < 0; }

  void collect_vars(std::vector<Term>& out) const {
    if (is_var()) {
      for (const auto& v : out)
        if (v == *this) return;
      out.push_back(*this);
      return;
    }
    if (is_app())
      for (const auto& a : args()) a.collect_vars(out);
  }
  std::vector<Term> vars() const {
    std::vector<Term> out;
    collect_vars(out);
    return out;
  }

  void collect_subterms(std::vector<Term>& out) const {
    out.push_back(*this);
    if (is_app())
      for (const auto& a : args()) a.collect_subterms(out);
  }

  bool contains(const Term& t) const {
    if (*this == t) return true;
    if (is_app())
      for (const auto& a : args())
        if (a.contains(t)) return true;
    return false;
  }

  std::string str() const {
    std::string out;
    print(out);
    return out;
  }

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}

  void print(std::string& out) const {
    switch (kind()) {
      case TermKind::Fresh:
        out += '~';
        out += name();
        return;
      case TermKind::Pub:
        out += '\'';
        out += name();
        out += '\'';
        return;
      case TermKind::Var:
        if (sort() == Sort::Fresh) out += '~';
        if (sort() == Sort::Pub) out += '$';
        out += name();
        return;
      case TermKind::App:
        if (name() == "^" && args().size() == 2) {
          // left operand parenthesized when itself an exponentiation
          bool lp = args()[0].is_app_of("^");
          if (lp) out += '(';
          args()[0].print(out);
          if (lp) out += ')';
          out += '^';
          bool rp = args()[1].is_app_of("^");
          if (rp) out += '(';
          args()[1].print(out);
          if (rp) out += ')';
          return;
        }
        if (name() == "pair" && args().size() == 2) {
          out += '<';
          args()[0].print(out);
          out += ',';
          args()[1].print(out);
          out += '>';
          return;
        }
        out += name();
        if (!args().empty()) {
          out += '(';
          for (std::size_t i = 0; i < args().size(); ++i) {
            if (i) out += ',';
            args()[i].print(out);
          }
          out += ')';
        }
        return;
    }
  }

  std::shared_ptr<const TermNode> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Finite map from variables (identified by name) to terms. In this tool
// substitutions produced by matching are ground-ranged, which makes them
// idempotent by construction; apply() asserts nothing but callers rely on it.
class Substitution {
 public:
  bool bind(const Term& v, const Term& t) {
    auto it = map_.find(v.name());
    if (it != map_.end()) return it->second == t;
    map_.emplace(v.name(), t);
    return true;
  }
  const Term* lookup(const std::string& var_name) const {
    auto it = map_.find(var_name);
    return it == map_.end() ? nullptr : &it->second;
  }
  bool bound(const Term& v) const { return map_.count(v.name()) > 0; }

  Term apply(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Var: {
        auto it = map_.find(t.name());
        return it == map_.end() ? t : it->second;
      }
      case TermKind::App: {
        TermVec args;
        args.reserve(t.args().size());
        bool changed = false;
        for (const auto& a : t.args()) {
          args.push_back(apply(a));
          if (!(args.back() == a)) changed = true;
        }
        if (!changed) return t;
        return Term::app(t.name(), t.symkind(), std::move(args));
      }
      default:
        return t;
    }
  }

  const std::map<std::string, Term>& entries() const { return map_; }
  std::size_t size() const { return map_.size(); }

  int compare(const Substitution& o) const {
    auto a = map_.begin();
    auto b = o.map_.begin();
    for (; a != map_.end() && b != o.map_.end(); ++a, ++b) {
      int c = a->first.compare(b->first);
      if (c != 0) return c;
      c = a->second.compare(b->second);
      if (c != 0) return c;
    }
    if (a != map_.end()) return 1;
    if (b != o.map_.end()) return -1;
    return 0;
  }
  bool operator==(const Substitution& o) const { return compare(o) == 0; }
  bool operator<(const Substitution& o) const { return compare(o) < 0; }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : map_) {
      if (!first) out += ", ";
      first = false;
      out += k + " -> " + v.str();
    }
    out += "}";
    return out;
  }

 private:
  std::map<std::string, Term> map_;
};

}  // namespace msr2io
