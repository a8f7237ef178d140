#pragma once

/*
 * Bounded ground-term enumeration: the normal forms of every ground term of
 * syntactic depth <= depth over a name pool and signature.
 *
 * Candidates are counted before normalization; crossing the cap raises
 * BudgetExceeded (the bound is too generous, tighten depth or pool). Output
 * is sorted in the canonical term order and deduplicated, so it is stable
 * across runs and platforms.
 */

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "term.hpp"
#include "theory.hpp"

namespace msr2io {

struct NamePool {
  std::vector<Term> fresh;
  std::vector<Term> pub;

  std::vector<Term> all() const {
    std::vector<Term> out = fresh;
    out.insert(out.end(), pub.begin(), pub.end());
    return out;
  }
};

inline std::vector<Term> enumerate_ground(const NamePool& pool,
                                          const Signature& sig, int depth,
                                          const Theory& th,
                                          std::size_t cap = 1000000) {
  std::set<Term> forms;
  std::size_t candidates = 0;
  auto admit = [&](const Term& t) {
    if (++candidates > cap)
      throw BudgetExceeded("ground enumeration exceeded the candidate cap (" +
                           std::to_string(cap) + ") at depth " +
                           std::to_string(depth));
    forms.insert(th.normalize(t));
  };

  for (const auto& n : pool.fresh) admit(n);
  for (const auto& n : pool.pub) admit(n);

  // Level sets over normal forms. Normalization is compositional for the
  // innermost strategy, so building on representatives yields the same set
  // of normal forms as building on raw syntactic terms.
  std::vector<Term> prev(forms.begin(), forms.end());
  for (int d = 1; d <= depth; ++d) {
    std::set<Term> next;
    for (const auto& sym : sig.symbols()) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(sym.arity), 0);
      bool done = false;
      if (sym.arity > 0 && prev.empty()) continue;
      while (!done) {
        TermVec args;
        args.reserve(idx.size());
        for (auto i : idx) args.push_back(prev[i]);
        Term t = Term::app(sym, std::move(args));
        if (++candidates > cap)
          throw BudgetExceeded(
              "ground enumeration exceeded the candidate cap (" +
              std::to_string(cap) + ") at depth " + std::to_string(depth));
        Term n = th.normalize(t);
        if (!forms.count(n)) next.insert(n);
        // odometer over argument indices
        done = true;
        for (std::size_t k = idx.size(); k-- > 0;) {
          if (++idx[k] < prev.size()) {
            done = false;
            break;
          }
          idx[k] = 0;
        }
        if (idx.empty()) done = true;
      }
    }
    forms.insert(next.begin(), next.end());
    prev.assign(forms.begin(), forms.end());
  }
  return prev;
}

}  // namespace msr2io
