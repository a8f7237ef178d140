#pragma once

/*
 * Equational theories of the supported fragment: a convergent rewrite
 * subsystem plus at most one commutative exponentiation symbol.
 *
 * Admission is syntactic and conservative. A rewrite equation is accepted
 * only if its right side is a proper subterm of the left side, or it strictly
 * shrinks term size with no variable occurring more often on the right.
 * Either way every ground instance strictly decreases, so innermost rewriting
 * terminates; the step budget exists for theories constructed directly in
 * code, bypassing admission.
 *
 * The commutative symbol is declared by an equation of shape
 * (b^x)^y = (b^y)^x. Normal forms keep exponent chains left-nested with the
 * exponent multiset sorted in the canonical term order.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "support.hpp"
#include "term.hpp"

namespace msr2io {

enum class Orientation { Rewrite, AcCommutes };

struct Equation {
  Term lhs, rhs;
  Orientation orient = Orientation::Rewrite;
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

// Plain first-order matching (no theory): extends subst so that
// subst(pattern) == subject syntactically. Nonlinear patterns require equal
// subterms.
inline bool match_syntactic(const Term& pattern, const Term& subject,
                            Substitution& subst) {
  switch (pattern.kind()) {
    case TermKind::Var: {
      if (pattern.sort() == Sort::Fresh && !subject.is_fresh() &&
          !(subject.is_var() && subject.sort() == Sort::Fresh))
        return false;
      if (pattern.sort() == Sort::Pub && !subject.is_pub() &&
          !(subject.is_var() && subject.sort() == Sort::Pub))
        return false;
      return subst.bind(pattern, subject);
    }
    case TermKind::Fresh:
    case TermKind::Pub:
      return pattern == subject;
    case TermKind::App: {
      if (!subject.is_app() || subject.name() != pattern.name() ||
          subject.args().size() != pattern.args().size())
        return false;
      for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_syntactic(pattern.args()[i], subject.args()[i], subst))
          return false;
      return true;
    }
  }
  return false;
}

class Theory {
 public:
  std::vector<Equation> rewrites;
  std::optional<std::string> comm;  // commutative exponentiation symbol
  int max_steps = 10000;

  // All declared equations, for reports and golden output.
  std::vector<Equation> declared() const {
    std::vector<Equation> out = rewrites;
    if (comm) {
      Term b = Term::var("x"), x = Term::var("y"), y = Term::var("z");
      auto c = [&](Term l, Term r) {
        return Term::app(*comm, SymKind::Crypto, {std::move(l), std::move(r)});
      };
      out.push_back(Equation{c(c(b, x), y), c(c(b, y), x),
                             Orientation::AcCommutes});
    }
    return out;
  }

  bool is_comm(const Term& t) const {
    return comm && t.is_app_of(*comm) && t.args().size() == 2;
  }

  // Flattens a chain c(c(c(b,e1),e2),e3) into (b, [e1,e2,e3]).
  void flatten_comm(const Term& t, Term& base, TermVec& exps) const {
    if (is_comm(t)) {
      flatten_comm(t.args()[0], base, exps);
      exps.push_back(t.args()[1]);
    } else {
      base = t;
    }
  }

  Term rebuild_comm(const Term& base, TermVec exps) const {
    Term acc = base;
    for (auto& e : exps)
      acc = Term::app(*comm, SymKind::Crypto, {acc, std::move(e)});
    return acc;
  }

  Term normalize(const Term& t) const {
    int budget = max_steps;
    return nf(t, budget);
  }

  bool eq(const Term& a, const Term& b) const {
    if (a == b) return true;
    return normalize(a) == normalize(b);
  }

  bool ground_eq_possible(const Term& t) const { return t.valid(); }

 private:
  Term nf(const Term& t, int& budget) const {
    if (!t.is_app()) return t;
    TermVec args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(nf(a, budget));
    Term cur = Term::app(t.name(), t.symkind(), std::move(args));
    if (is_comm(cur)) {
      Term base;
      TermVec exps;
      flatten_comm(cur, base, exps);
      std::sort(exps.begin(), exps.end());
      cur = rebuild_comm(base, std::move(exps));
    }
    for (const auto& rw : rewrites) {
      Substitution s;
      if (match_syntactic(rw.lhs, cur, s)) {
        if (--budget < 0)
          throw NonTerminatingTheory(
              "rewriting exceeded the step budget while normalizing " +
              t.str());
        return nf(s.apply(rw.rhs), budget);
      }
    }
    return cur;
  }
};

inline int var_occurrences(const Term& t, const Term& v) {
  if (t.is_var()) return t == v ? 1 : 0;
  if (!t.is_app()) return 0;
  int n = 0;
  for (const auto& a : t.args()) n += var_occurrences(a, v);
  return n;
}

inline bool contains_name(const Term& t) {
  if (t.is_name()) return true;
  if (t.is_app())
    for (const auto& a : t.args())
      if (contains_name(a)) return true;
  return false;
}

inline bool contains_fresh_name(const Term& t) {
  if (t.is_fresh()) return true;
  if (t.is_app())
    for (const auto& a : t.args())
      if (contains_fresh_name(a)) return true;
  return false;
}

// Recognizes the commutative-exponentiation declaration
// (b^x)^y = (b^y)^x with x, y distinct variables not occurring in b.
inline std::optional<std::string> commutator_symbol(const Term& lhs,
                                                    const Term& rhs) {
  if (!lhs.is_app() || !rhs.is_app()) return std::nullopt;
  if (lhs.name() != rhs.name() || lhs.args().size() != 2 ||
      rhs.args().size() != 2)
    return std::nullopt;
  const std::string& c = lhs.name();
  const Term& li = lhs.args()[0];
  const Term& ri = rhs.args()[0];
  if (!li.is_app_of(c) || !ri.is_app_of(c) || li.args().size() != 2 ||
      ri.args().size() != 2)
    return std::nullopt;
  const Term& b1 = li.args()[0];
  const Term& x = li.args()[1];
  const Term& y = lhs.args()[1];
  const Term& b2 = ri.args()[0];
  const Term& u = ri.args()[1];
  const Term& v = rhs.args()[1];
  if (!(b1 == b2) || !x.is_var() || !y.is_var() || x == y) return std::nullopt;
  if (!(x == v) || !(y == u)) return std::nullopt;
  if (b1.contains(x) || b1.contains(y)) return std::nullopt;
  return c;
}

// Admission for the supported theory class. Throws UnsupportedEquation for
// anything outside the fragment.
inline Theory classify_equations(const std::vector<Equation>& raw) {
  Theory th;
  for (const auto& e : raw) {
    if (contains_fresh_name(e.lhs) || contains_fresh_name(e.rhs))
      throw UnsupportedEquation("equation contains a fresh name: " + e.str());
    if (auto c = commutator_symbol(e.lhs, e.rhs)) {
      if (th.comm && *th.comm != *c)
        throw UnsupportedEquation(
            "at most one commutative symbol is supported, saw " + *th.comm +
            " and " + *c);
      th.comm = *c;
      continue;
    }
    if (!e.lhs.is_app())
      throw UnsupportedEquation("left side must be an application: " +
                                e.str());
    for (const auto& v : e.rhs.vars())
      if (var_occurrences(e.lhs, v) == 0)
        throw UnsupportedEquation("right side introduces variable " +
                                  v.str() + ": " + e.str());
    bool proper_subterm = e.lhs.contains(e.rhs) && !(e.lhs == e.rhs);
    bool shrinking = e.rhs.size() < e.lhs.size();
    if (shrinking)
      for (const auto& v : e.rhs.vars())
        if (var_occurrences(e.rhs, v) > var_occurrences(e.lhs, v))
          shrinking = false;
    if (!proper_subterm && !shrinking)
      throw UnsupportedEquation(
          "equation is neither a destructor rule nor size-decreasing: " +
          e.str());
    Equation rw = e;
    rw.orient = Orientation::Rewrite;
    th.rewrites.push_back(std::move(rw));
  }
  return th;
}

}  // namespace msr2io
