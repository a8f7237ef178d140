#pragma once

/*
 * Matching modulo the supported theory: all substitutions s with
 * normalize(s(pattern)) == normalize(subject), for ground subjects.
 *
 * Patterns are normalized first and must be rigid afterwards: no application
 * of a rewrite-rule root symbol may still contain variables (such patterns,
 * e.g. fst(x), have unboundedly many matches and sit outside the fragment;
 * the call fails loudly). The commutative exponentiation symbol is handled
 * by flattening chains and enumerating injections of pattern exponents into
 * the subject's exponent multiset; a variable in base position absorbs the
 * base together with the unmatched exponents.
 */

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "term.hpp"
#include "theory.hpp"

namespace msr2io {

namespace detail {

inline bool rigid_ok(const Term& t, const std::set<std::string>& roots,
                     const Theory& th) {
  if (!t.is_app()) return true;
  if (roots.count(t.name()) && !t.is_ground()) return false;
  for (const auto& a : t.args())
    if (!rigid_ok(a, roots, th)) return false;
  return true;
}

inline bool sort_admits(Sort s, const Term& ground) {
  switch (s) {
    case Sort::Msg: return true;
    case Sort::Fresh: return ground.is_fresh();
    case Sort::Pub: return ground.is_pub();
  }
  return false;
}

class Matcher {
 public:
  Matcher(const Theory& th) : th_(th) {}

  void run(const Term& p, const Term& s, Substitution sub,
           std::set<Substitution>& out) {
    step(p, s, std::move(sub), [&](Substitution r) { out.insert(std::move(r)); });
  }

  template <typename K>
  void step(const Term& p, const Term& s, Substitution sub, K&& yield) {
    switch (p.kind()) {
      case TermKind::Var: {
        if (const Term* b = sub.lookup(p.name())) {
          if (*b == s) yield(std::move(sub));
          return;
        }
        if (!sort_admits(p.sort(), s)) return;
        sub.bind(p, s);
        yield(std::move(sub));
        return;
      }
      case TermKind::Fresh:
      case TermKind::Pub:
        if (p == s) yield(std::move(sub));
        return;
      case TermKind::App: {
        if (th_.is_comm(p)) {
          comm_step(p, s, std::move(sub), yield);
          return;
        }
        if (!s.is_app() || s.name() != p.name() ||
            s.args().size() != p.args().size())
          return;
        list_step(p.args(), s.args(), 0, std::move(sub), yield);
        return;
      }
    }
  }

  template <typename K>
  void list_step(const TermVec& ps, const TermVec& ss, std::size_t i,
                 Substitution sub, K&& yield) {
    if (i == ps.size()) {
      yield(std::move(sub));
      return;
    }
    step(ps[i], ss[i], std::move(sub), [&](Substitution r) {
      list_step(ps, ss, i + 1, std::move(r), yield);
    });
  }

 private:
  // Pattern and subject both rooted at the commutative symbol. The pattern
  // is re-instantiated under the current substitution so that exponents
  // contributed by already-bound variables take part in the flattening.
  template <typename K>
  void comm_step(const Term& p, const Term& s, Substitution sub, K&& yield) {
    Term inst = th_.normalize(sub.apply(p));
    if (!th_.is_comm(inst)) {
      // fully ground after instantiation, or collapsed; plain comparison
      if (inst.is_ground()) {
        if (inst == s) yield(std::move(sub));
        return;
      }
      step(inst, s, std::move(sub), yield);
      return;
    }
    if (!th_.is_comm(s)) return;
    Term pbase, sbase;
    TermVec pexp, sexp;
    th_.flatten_comm(inst, pbase, pexp);
    th_.flatten_comm(s, sbase, sexp);
    if (pexp.size() > sexp.size()) return;
    bool base_absorbs = pbase.is_var() && !sub.bound(pbase) &&
                        pbase.sort() == Sort::Msg;
    if (!base_absorbs && pexp.size() != sexp.size()) return;
    std::vector<int> chosen;
    inject(pbase, pexp, sbase, sexp, 0, chosen, std::move(sub), yield);
  }

  template <typename K>
  void inject(const Term& pbase, const TermVec& pexp, const Term& sbase,
              const TermVec& sexp, std::size_t i, std::vector<int>& chosen,
              Substitution sub, K&& yield) {
    if (i == pexp.size()) {
      if (pexp.size() == sexp.size()) {
        step(pbase, sbase, std::move(sub), yield);
        return;
      }
      TermVec rest;
      for (std::size_t j = 0; j < sexp.size(); ++j)
        if (std::find(chosen.begin(), chosen.end(), static_cast<int>(j)) ==
            chosen.end())
          rest.push_back(sexp[j]);
      Term residue = th_.rebuild_comm(sbase, std::move(rest));
      step(pbase, residue, std::move(sub), yield);
      return;
    }
    for (std::size_t j = 0; j < sexp.size(); ++j) {
      if (std::find(chosen.begin(), chosen.end(), static_cast<int>(j)) !=
          chosen.end())
        continue;
      Substitution snapshot = sub;
      chosen.push_back(static_cast<int>(j));
      step(pexp[i], sexp[j], std::move(snapshot), [&](Substitution r) {
        inject(pbase, pexp, sbase, sexp, i + 1, chosen, std::move(r), yield);
      });
      chosen.pop_back();
    }
  }

  const Theory& th_;
};

}  // namespace detail

inline void require_supported_pattern(const Term& pattern_nf,
                                      const Theory& th) {
  std::set<std::string> roots;
  for (const auto& rw : th.rewrites) roots.insert(rw.lhs.name());
  if (!detail::rigid_ok(pattern_nf, roots, th))
    throw Error(ExitClass::ParseOrValidate,
                "pattern outside the supported matching fragment (rewrite "
                "root applied to variables): " +
                    pattern_nf.str());
}

// Complete, deduplicated match set for the supported fragment.
inline std::vector<Substitution> match_mod_e(const Term& pattern,
                                             const Term& subject,
                                             const Theory& th,
                                             const Substitution& seed = {}) {
  Term p = th.normalize(pattern);
  require_supported_pattern(p, th);
  Term s = th.normalize(subject);
  std::set<Substitution> out;
  detail::Matcher m(th);
  m.run(p, s, seed, out);
  return {out.begin(), out.end()};
}

// Simultaneous matching of parallel term lists (fact arguments).
inline std::vector<Substitution> match_list_mod_e(const TermVec& patterns,
                                                  const TermVec& subjects,
                                                  const Theory& th,
                                                  const Substitution& seed = {}) {
  if (patterns.size() != subjects.size()) return {};
  TermVec ps, ss;
  ps.reserve(patterns.size());
  ss.reserve(subjects.size());
  for (const auto& p : patterns) {
    Term n = th.normalize(p);
    require_supported_pattern(n, th);
    ps.push_back(n);
  }
  for (const auto& s : subjects) ss.push_back(th.normalize(s));
  std::set<Substitution> out;
  detail::Matcher m(th);
  m.list_step(ps, ss, 0, seed,
              [&](Substitution r) { out.insert(std::move(r)); });
  return {out.begin(), out.end()};
}

}  // namespace msr2io
