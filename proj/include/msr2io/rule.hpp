#pragma once

/*
 * Rules, fact signatures, and the protocol model.
 *
 * Rule sides are vectors of fact patterns (facts whose arguments may contain
 * variables). A model partitions its rules into environment rules and
 * per-role rule sets; the fact signature is partitioned into classes
 * (action, env, in, out, per-role state, per-role buffer, eq-restriction).
 */

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fact.hpp"
#include "support.hpp"
#include "term.hpp"
#include "theory.hpp"

namespace msr2io {

class FactSignature {
 public:
  const FactSymbol& add(FactSymbol s) {
    if (find(s.name)) throw Error("duplicate fact symbol: " + s.name);
    symbols_.push_back(std::move(s));
    return symbols_.back();
  }

  const FactSymbol* find(const std::string& name) const {
    for (const auto& s : symbols_)
      if (s.name == name) return &s;
    return nullptr;
  }

  const FactSymbol& get(const std::string& name) const {
    const FactSymbol* s = find(name);
    if (!s) throw Error("unknown fact symbol: " + name);
    return *s;
  }

  const std::vector<FactSymbol>& symbols() const { return symbols_; }

  std::vector<FactSymbol> of_class(FactClass c) const {
    std::vector<FactSymbol> out;
    for (const auto& s : symbols_)
      if (s.cls == c) out.push_back(s);
    return out;
  }

 private:
  std::vector<FactSymbol> symbols_;
};

inline bool is_setup_fact(const std::string& name) {
  return name.rfind("Setup_", 0) == 0;
}

enum class EqKind { Equal, NotEqual };

// One restriction check derived from a Sigma_eq label fact: the fact's two
// arguments under the rule's instantiation must be equal (or distinct) mod E.
struct EqAtom {
  EqKind kind = EqKind::Equal;
  Term lhs;
  Term rhs;

  bool holds(const Substitution& sub, const Theory& th) const {
    bool eq = th.eq(sub.apply(lhs), sub.apply(rhs));
    return kind == EqKind::Equal ? eq : !eq;
  }
};

struct Rule {
  std::string id;
  std::string role;  // empty for environment rules
  std::vector<FactInstance> lhs;
  std::vector<FactInstance> label;
  std::vector<FactInstance> rhs;
  std::vector<EqAtom> eq_atoms;  // derived from eq-class label facts

  bool is_env() const { return role.empty(); }

  std::vector<Term> all_vars() const {
    std::set<Term> seen;
    std::vector<Term> out;
    auto scan = [&](const std::vector<FactInstance>& side) {
      for (const auto& f : side)
        for (const auto& a : f.args)
          for (const auto& v : a.vars())
            if (seen.insert(v).second) out.push_back(v);
    };
    scan(lhs);
    scan(label);
    scan(rhs);
    return out;
  }

  std::string str() const {
    auto side = [](const std::vector<FactInstance>& fs) {
      std::string out = "[";
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += ", ";
        out += fs[i].str();
      }
      return out + "]";
    };
    return id + ": " + side(lhs) + " --" + side(label) + "-> " + side(rhs);
  }
};

enum class FieldKind { Fixed, LenPrefixed, Raw };

struct FormatField {
  std::string name;
  FieldKind kind = FieldKind::Raw;
  // Fixed: exact byte width. LenPrefixed: width of the big-endian length
  // prefix. Raw: no length discipline at all (only sensible as a final field;
  // kept so deliberately ambiguous layouts can be expressed and caught).
  std::size_t width = 0;
};

struct FormatSpec {
  std::string symbol;
  Bytes tag;
  std::vector<FormatField> fields;

  int arity() const { return static_cast<int>(fields.size()); }

  // Total encoded length range [min, max]; max is nullopt when unbounded.
  std::size_t min_len() const {
    std::size_t n = tag.size();
    for (const auto& f : fields)
      n += f.kind == FieldKind::Fixed ? f.width
                                      : (f.kind == FieldKind::LenPrefixed ? f.width : 0);
    return n;
  }
  std::optional<std::size_t> max_len() const {
    std::size_t n = tag.size();
    for (const auto& f : fields) {
      if (f.kind == FieldKind::Fixed)
        n += f.width;
      else
        return std::nullopt;
    }
    return n;
  }
};

struct Role {
  std::string name;
  int params = 0;  // k_i, the arity of Setup_<name>
};

struct PropertySpec {
  enum class Kind { Secrecy, Agreement };
  std::string id;
  Kind kind = Kind::Secrecy;
  // Secrecy: no collision-free trace has both fact(..., args[pos], ...) and
  // K(same value).
  std::string fact;
  int arg_pos = 1;  // 1-based
  // Agreement (non-injective): every commit label is preceded by a running
  // label agreeing on the listed argument positions.
  std::string commit;
  std::string running;
  std::vector<int> positions;  // 1-based, empty = all
};

struct MsrModel {
  std::string name;
  Signature sig;
  Theory theory;
  FactSignature facts;
  std::vector<FormatSpec> formats;
  std::vector<Role> roles;
  std::vector<Rule> env_rules;
  std::map<std::string, std::vector<Rule>> role_rules;
  std::map<std::string, EqKind> phi_eq;  // restriction map over eq-class facts
  std::vector<PropertySpec> properties;

  // Names written literally in the model text; seeds the ground universe.
  std::vector<std::string> pub_names;

  const Role* find_role(const std::string& r) const {
    for (const auto& x : roles)
      if (x.name == r) return &x;
    return nullptr;
  }

  const FormatSpec* find_format(const std::string& sym) const {
    for (const auto& f : formats)
      if (f.symbol == sym) return &f;
    return nullptr;
  }

  std::vector<const Rule*> all_rules() const {
    std::vector<const Rule*> out;
    for (const auto& r : env_rules) out.push_back(&r);
    for (const auto& role : roles) {
      auto it = role_rules.find(role.name);
      if (it == role_rules.end()) continue;
      for (const auto& r : it->second) out.push_back(&r);
    }
    return out;
  }

  const Rule* find_rule(const std::string& id) const {
    for (const Rule* r : all_rules())
      if (r->id == id) return r;
    return nullptr;
  }
};

}  // namespace msr2io
