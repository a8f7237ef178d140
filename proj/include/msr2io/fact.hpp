#pragma once

/*
 * Facts and fact multisets.
 *
 * FactInstance carries the symbol name and kind by value so instances from
 * independently parsed models compare by content; labels produced by two
 * systems under comparison never depend on signature object identity.
 *
 * FactMultiset is a counted map in canonical (sorted) order. Persistent
 * facts are capped at multiplicity 1 when states are built through
 * apply_rule-style updates; the raw multiset operations themselves are plain
 * counting arithmetic with saturating difference.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "support.hpp"
#include "term.hpp"

namespace msr2io {

enum class FactKind { Linear, Persistent };

enum class FactClass { Action, Env, In, Out, State, Buffer, EqRestrict };

inline const char* to_string(FactKind k) {
  return k == FactKind::Linear ? "linear" : "persistent";
}

inline const char* to_string(FactClass c) {
  switch (c) {
    case FactClass::Action: return "action";
    case FactClass::Env: return "env";
    case FactClass::In: return "in";
    case FactClass::Out: return "out";
    case FactClass::State: return "state";
    case FactClass::Buffer: return "buffer";
    case FactClass::EqRestrict: return "eq";
  }
  return "?";
}

struct FactSymbol {
  std::string name;
  int arity = 0;
  FactKind kind = FactKind::Linear;
  FactClass cls = FactClass::Env;
  std::string role;  // State/Buffer facts belong to a role
};

struct FactInstance {
  std::string name;
  FactKind kind = FactKind::Linear;
  TermVec args;

  FactInstance() = default;
  FactInstance(std::string n, FactKind k, TermVec a)
      : name(std::move(n)), kind(k), args(std::move(a)) {}
  static FactInstance of(const FactSymbol& sym, TermVec a) {
    return FactInstance(sym.name, sym.kind, std::move(a));
  }

  bool is_ground() const {
    for (const auto& a : args)
      if (!a.is_ground()) return false;
    return true;
  }

  int compare(const FactInstance& o) const {
    int c = name.compare(o.name);
    if (c != 0) return c;
    if (args.size() != o.args.size()) return args.size() < o.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < args.size(); ++i) {
      c = args[i].compare(o.args[i]);
      if (c != 0) return c;
    }
    return 0;
  }
  bool operator==(const FactInstance& o) const { return compare(o) == 0; }
  bool operator<(const FactInstance& o) const { return compare(o) < 0; }

  std::size_t hash() const {
    std::size_t h = std::hash<std::string>{}(name);
    for (const auto& a : args) h = hash_combine(h, a.hash());
    return h;
  }

  std::string str() const {
    std::string out = name;
    if (!args.empty()) {
      out += '(';
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += args[i].str();
      }
      out += ')';
    }
    return out;
  }
};

class FactMultiset {
 public:
  using Map = std::map<FactInstance, std::uint32_t>;

  FactMultiset() = default;
  explicit FactMultiset(std::vector<FactInstance> facts) {
    for (auto& f : facts) add(std::move(f), 1);
  }

  bool empty() const { return map_.empty(); }
  std::size_t distinct() const { return map_.size(); }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [f, c] : map_) n += c;
    return n;
  }

  void add(FactInstance f, std::uint32_t n = 1) {
    if (n == 0) return;
    map_[std::move(f)] += n;
  }

  std::uint32_t count(const FactInstance& f) const {
    auto it = map_.find(f);
    return it == map_.end() ? 0 : it->second;
  }
  bool contains(const FactInstance& f) const { return count(f) > 0; }

  // Removes up to n copies (saturating); persistent semantics are handled by
  // callers never removing persistent facts.
  void remove(const FactInstance& f, std::uint32_t n = 1) {
    auto it = map_.find(f);
    if (it == map_.end()) return;
    if (it->second <= n)
      map_.erase(it);
    else
      it->second -= n;
  }

  // Caps a fact's multiplicity; used to normalize persistent facts to 1 so
  // state deduplication is insensitive to re-derivation.
  void cap(const FactInstance& f, std::uint32_t m) {
    auto it = map_.find(f);
    if (it != map_.end() && it->second > m) it->second = m;
  }

  FactMultiset union_with(const FactMultiset& o) const {
    FactMultiset out = *this;
    for (const auto& [f, c] : o.map_) out.add(f, c);
    return out;
  }

  // Saturating multiset difference.
  FactMultiset diff(const FactMultiset& o) const {
    FactMultiset out = *this;
    for (const auto& [f, c] : o.map_) out.remove(f, c);
    return out;
  }

  FactMultiset intersect(const FactMultiset& o) const {
    FactMultiset out;
    for (const auto& [f, c] : map_) {
      auto n = std::min(c, o.count(f));
      if (n) out.add(f, n);
    }
    return out;
  }

  bool subset_of(const FactMultiset& o) const {
    for (const auto& [f, c] : map_)
      if (o.count(f) < c) return false;
    return true;
  }

  template <typename Pred>
  FactMultiset filter(Pred keep) const {
    FactMultiset out;
    for (const auto& [f, c] : map_)
      if (keep(f)) out.add(f, c);
    return out;
  }

  const Map& entries() const { return map_; }

  int compare(const FactMultiset& o) const {
    auto a = map_.begin(), b = o.map_.begin();
    for (; a != map_.end() && b != o.map_.end(); ++a, ++b) {
      int c = a->first.compare(b->first);
      if (c != 0) return c;
      if (a->second != b->second) return a->second < b->second ? -1 : 1;
    }
    if (a != map_.end()) return 1;
    if (b != o.map_.end()) return -1;
    return 0;
  }
  bool operator==(const FactMultiset& o) const { return compare(o) == 0; }
  bool operator!=(const FactMultiset& o) const { return !(*this == o); }
  bool operator<(const FactMultiset& o) const { return compare(o) < 0; }

  std::size_t hash() const {
    std::size_t h = 0x5151;
    for (const auto& [f, c] : map_) {
      h = hash_combine(h, f.hash());
      h = hash_combine(h, c);
    }
    return h;
  }

  // Canonical printing: sorted facts, multiplicity as repetition.
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [f, c] : map_)
      for (std::uint32_t i = 0; i < c; ++i) {
        if (!first) out += ", ";
        first = false;
        out += f.str();
      }
    out += "}";
    return out;
  }

  std::vector<std::string> printed_facts() const {
    std::vector<std::string> out;
    for (const auto& [f, c] : map_)
      for (std::uint32_t i = 0; i < c; ++i) out.push_back(f.str());
    return out;
  }

 private:
  Map map_;
};

}  // namespace msr2io
