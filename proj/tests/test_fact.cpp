#include <catch2/catch_amalgamated.hpp>

#include "msr2io/fact.hpp"

using namespace msr2io;

namespace {

FactInstance F(const char* name, TermVec args = {},
               FactKind k = FactKind::Linear) {
  return FactInstance(name, k, std::move(args));
}

Term P(const char* n) { return Term::pub(n); }

}  // namespace

TEST_CASE("fact instances compare by content") {
  FactInstance a = F("K", {P("m")}, FactKind::Persistent);
  FactInstance b = F("K", {P("m")}, FactKind::Persistent);
  FactInstance c = F("K", {P("n")}, FactKind::Persistent);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(!(a == c));
  CHECK(a.str() == "K('m')");
  CHECK(F("Fr").str() == "Fr");
}

TEST_CASE("multiset arithmetic follows counting semantics") {
  FactMultiset s;
  s.add(F("A"), 2);
  s.add(F("B"));
  CHECK(s.total() == 3);
  CHECK(s.distinct() == 2);
  CHECK(s.count(F("A")) == 2);

  FactMultiset t;
  t.add(F("A"), 1);
  t.add(F("C"), 1);

  SECTION("union adds multiplicities") {
    auto u = s.union_with(t);
    CHECK(u.count(F("A")) == 3);
    CHECK(u.count(F("B")) == 1);
    CHECK(u.count(F("C")) == 1);
  }
  SECTION("difference saturates at zero") {
    auto d = s.diff(t);
    CHECK(d.count(F("A")) == 1);
    CHECK(d.count(F("B")) == 1);
    CHECK(d.count(F("C")) == 0);
    auto d2 = t.diff(s);
    CHECK(d2.count(F("A")) == 0);
    CHECK(d2.count(F("C")) == 1);
    // removing more copies than present leaves nothing, never negative
    FactMultiset big;
    big.add(F("A"), 5);
    CHECK(s.diff(big).count(F("A")) == 0);
  }
  SECTION("intersection takes minima") {
    auto i = s.intersect(t);
    CHECK(i.count(F("A")) == 1);
    CHECK(i.total() == 1);
  }
  SECTION("subset respects multiplicities") {
    FactMultiset one;
    one.add(F("A"), 1);
    CHECK(one.subset_of(s));
    FactMultiset three;
    three.add(F("A"), 3);
    CHECK(!three.subset_of(s));
    CHECK(FactMultiset{}.subset_of(s));
    CHECK(!s.subset_of(t));
  }
}

TEST_CASE("canonical printing repeats multiplicities in sorted order") {
  FactMultiset s;
  s.add(F("Out", {P("m")}));
  s.add(F("Fr", {P("n")}), 2);
  CHECK(s.str() == "{Fr('n'), Fr('n'), Out('m')}");
  CHECK(FactMultiset{}.str() == "{}");
  auto printed = s.printed_facts();
  REQUIRE(printed.size() == 3);
  CHECK(printed[0] == "Fr('n')");
}

TEST_CASE("comparison and hashing are consistent") {
  FactMultiset s, t;
  s.add(F("A"), 2);
  t.add(F("A"), 2);
  CHECK(s == t);
  CHECK(s.hash() == t.hash());
  t.add(F("B"));
  CHECK(s != t);
  CHECK(s < t);
  FactMultiset u;
  u.add(F("A"), 1);
  CHECK(u < s);  // same fact, lower multiplicity
}

TEST_CASE("persistent facts can be capped to multiplicity one") {
  FactMultiset s;
  s.add(F("K", {P("m")}, FactKind::Persistent), 4);
  s.cap(F("K", {P("m")}, FactKind::Persistent), 1);
  CHECK(s.count(F("K", {P("m")}, FactKind::Persistent)) == 1);
}

TEST_CASE("filter keeps the matching slice") {
  FactMultiset s;
  s.add(F("K", {P("m")}, FactKind::Persistent));
  s.add(F("Out", {P("m")}));
  auto only_k = s.filter(
      [](const FactInstance& f) { return f.kind == FactKind::Persistent; });
  CHECK(only_k.total() == 1);
  CHECK(only_k.contains(F("K", {P("m")}, FactKind::Persistent)));
}
