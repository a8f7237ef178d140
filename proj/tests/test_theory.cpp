#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "msr2io/theory.hpp"

using namespace msr2io;

namespace {

Term V(const char* n) { return Term::var(n); }
Term P(const char* n) { return Term::pub(n); }
Term app(const char* f, TermVec a, SymKind k = SymKind::Crypto) {
  return Term::app(f, k, std::move(a));
}

// signed-DH style theory: one commutative exponentiation, one verify rule
Theory dh_theory() {
  Term m = V("m"), k = V("k"), b = V("b"), x = V("x"), y = V("y");
  std::vector<Equation> eqs;
  eqs.push_back({app("^", {app("^", {b, x}), y}),
                 app("^", {app("^", {b, y}), x})});
  eqs.push_back({app("verify", {app("sign", {m, k}), app("pk", {k})}),
                 app("true", {})});
  return classify_equations(eqs);
}

Theory senc_theory() {
  Term m = V("m"), k = V("k");
  std::vector<Equation> eqs;
  eqs.push_back({app("dec", {k, app("enc", {k, m})}), m});
  return classify_equations(eqs);
}

}  // namespace

TEST_CASE("equation classification accepts the supported fragment") {
  Theory th = dh_theory();
  REQUIRE(th.comm.has_value());
  CHECK(*th.comm == "^");
  REQUIRE(th.rewrites.size() == 1);
  CHECK(th.rewrites[0].lhs.name() == "verify");
  CHECK(th.declared().size() == 2);

  Theory se = senc_theory();
  CHECK(!se.comm.has_value());
  REQUIRE(se.rewrites.size() == 1);
}

TEST_CASE("equation classification rejects what it cannot handle") {
  Term x = V("x"), y = V("y");

  SECTION("fresh names in equations") {
    std::vector<Equation> eqs = {
        {app("h", {Term::fresh("n", 1)}), Term::fresh("n", 1)}};
    CHECK_THROWS_AS(classify_equations(eqs), UnsupportedEquation);
  }
  SECTION("two distinct commutative operators") {
    auto comm = [&](const char* op) {
      Term b = V("b");
      return Equation{app(op, {app(op, {b, x}), y}),
                      app(op, {app(op, {b, y}), x})};
    };
    std::vector<Equation> eqs = {comm("^"), comm("exp")};
    CHECK_THROWS_AS(classify_equations(eqs), UnsupportedEquation);
  }
  SECTION("size-increasing non-subterm rule") {
    std::vector<Equation> eqs = {{app("g", {x}), app("h", {app("h", {x})})}};
    CHECK_THROWS_AS(classify_equations(eqs), UnsupportedEquation);
  }
  SECTION("rhs introduces a variable") {
    std::vector<Equation> eqs = {{app("f", {x}), app("g", {y})}};
    CHECK_THROWS_AS(classify_equations(eqs), UnsupportedEquation);
  }
  SECTION("variable lhs") {
    std::vector<Equation> eqs = {{x, app("h", {x})}};
    CHECK_THROWS_AS(classify_equations(eqs), UnsupportedEquation);
  }
  SECTION("duplicating rhs variable without shrinking") {
    // f(x,y) -> g(x,x): size does not shrink (3 -> 3), not a subterm
    std::vector<Equation> eqs = {{app("f", {x, y}), app("g", {x, x})}};
    CHECK_THROWS_AS(classify_equations(eqs), UnsupportedEquation);
  }
  SECTION("shrinking but variable-duplicating rule") {
    // size shrinks on the bare rule but an instantiated x can grow it back
    std::vector<Equation> eqs = {{app("f", {x, y, V("z")}), app("g", {x, x})}};
    CHECK_THROWS_AS(classify_equations(eqs), UnsupportedEquation);
  }
}

TEST_CASE("normalize: names and free terms are fixed points") {
  Theory th = dh_theory();
  Term n = Term::fresh("n", 3);
  CHECK(th.normalize(n) == n);
  CHECK(th.normalize(P("A")) == P("A"));
  Term t = app("sign", {P("A"), n});
  CHECK(th.normalize(t) == t);
}

TEST_CASE("normalize: signature verification rewrites to true") {
  Theory th = dh_theory();
  Term m = P("m"), k = Term::fresh("k", 1);
  Term t = app("verify", {app("sign", {m, k}), app("pk", {k})});
  CHECK(th.normalize(t) == app("true", {}));
  // wrong key: no rewrite
  Term w = app("verify", {app("sign", {m, k}), app("pk", {Term::fresh("j", 2)})});
  CHECK(th.normalize(w) == w);
}

TEST_CASE("normalize: commuting exponents share one normal form") {
  Theory th = dh_theory();
  Term g = app("g", {});
  Term a = Term::fresh("a", 1), b = Term::fresh("b", 2), c = Term::fresh("c", 3);
  auto exp = [&](Term base, Term e) { return app("^", {base, e}); };

  Term t1 = exp(exp(g, a), b);
  Term t2 = exp(exp(g, b), a);
  CHECK(th.normalize(t1) == th.normalize(t2));
  CHECK(th.eq(t1, t2));

  Term u1 = exp(exp(exp(g, c), b), a);
  Term u2 = exp(exp(exp(g, a), c), b);
  Term u3 = exp(exp(exp(g, b), a), c);
  CHECK(th.normalize(u1) == th.normalize(u2));
  CHECK(th.normalize(u2) == th.normalize(u3));

  CHECK(!th.eq(exp(g, a), exp(g, b)));
  CHECK(!th.eq(exp(a, b), exp(b, a)));  // bases do not commute
}

TEST_CASE("normalize inside exponent chains") {
  Theory th = dh_theory();
  Term g = app("g", {});
  Term k = Term::fresh("k", 1), m = P("m");
  Term ver = app("verify", {app("sign", {m, k}), app("pk", {k})});
  // exponent containing a redex still canonicalizes the chain
  Term t = app("^", {app("^", {g, ver}), Term::fresh("a", 2)});
  Term s = app("^", {app("^", {g, Term::fresh("a", 2)}), app("true", {})});
  CHECK(th.normalize(t) == th.normalize(s));
}

TEST_CASE("symmetric encryption round-trip") {
  Theory th = senc_theory();
  Term k = Term::fresh("k", 1), m = P("m");
  CHECK(th.eq(app("dec", {k, app("enc", {k, m})}), m));
  CHECK(!th.eq(app("dec", {Term::fresh("j", 2), app("enc", {k, m})}), m));
  CHECK(th.eq(P("a"), P("a")));
}

namespace {

Term random_term(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 6 : 2);
  switch (pick(rng)) {
    case 0: return Term::fresh("n", rng() % 3);
    case 1: return P(rng() % 2 ? "A" : "B");
    case 2: return app("g", {});
    case 3: return app("pk", {random_term(rng, depth - 1)});
    case 4:
      return app("^", {random_term(rng, depth - 1), random_term(rng, depth - 1)});
    case 5:
      return app("sign",
                 {random_term(rng, depth - 1), random_term(rng, depth - 1)});
    default:
      return app("verify",
                 {random_term(rng, depth - 1), random_term(rng, depth - 1)});
  }
}

}  // namespace

TEST_CASE("normalization is idempotent on random terms") {
  Theory th = dh_theory();
  std::mt19937 rng(20260814);
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(rng, 4);
    Term n1 = th.normalize(t);
    CHECK(th.normalize(n1) == n1);
  }
}

TEST_CASE("equality mod E is a congruence on random samples") {
  Theory th = dh_theory();
  std::mt19937 rng(412);
  Term g = app("g", {});
  auto exp = [&](Term b, Term e) { return app("^", {b, e}); };
  for (int i = 0; i < 200; ++i) {
    Term e1 = random_term(rng, 2);
    Term e2 = random_term(rng, 2);
    Term t1 = exp(exp(g, e1), e2);
    Term t2 = exp(exp(g, e2), e1);
    REQUIRE(th.eq(t1, t2));
    CHECK(th.eq(app("pk", {t1}), app("pk", {t2})));
    CHECK(th.eq(app("sign", {t1, e1}), app("sign", {t2, e1})));
    CHECK(th.eq(exp(t1, e1), exp(t2, e1)));
  }
}

TEST_CASE("rewrite budget failure is reported as non-termination") {
  Theory th = senc_theory();
  Term k = Term::fresh("k", 1);
  Term redex = app("dec", {k, app("enc", {k, P("a")})});
  // balanced f-tree with 2^levels redex leaves: terminating, but the step
  // count crosses the budget, which must be reported rather than ground on
  auto tree = [&](int levels) {
    Term t = redex;
    for (int i = 0; i < levels; ++i)
      t = app("f", {t, t}, SymKind::Constructor);
    return t;
  };
  CHECK_THROWS_AS(th.normalize(tree(14)), NonTerminatingTheory);  // 16384 steps
  Term ok = th.normalize(tree(3));  // 8 steps
  CHECK(ok.is_app_of("f"));
  CHECK(ok.args()[0].args()[0].args()[0] == P("a"));
}
