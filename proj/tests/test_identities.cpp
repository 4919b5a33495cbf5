#include <catch2/catch_amalgamated.hpp>

#include "lideal/fixtures.hpp"
#include "lideal/identities.hpp"

using namespace lideal;

namespace {

const CheckResult& find_check(const CheckReport& rep, const std::string& id) {
  for (const auto& c : rep.checks)
    if (c.id == id) return c;
  FAIL("no such check: " + id);
  static CheckResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("full catalog passes on the lattice implication fixtures") {
  auto cat = identity_catalog();
  for (const std::string name : {"ex3.1", "chain2", "trivial1"}) {
    auto ca = fixture(name);
    REQUIRE(ca.cls.is_lia);
    auto rep = verify_identities(ca, cat);
    INFO("fixture " << name);
    CHECK(rep.all_pass());
    for (const auto& c : rep.checks) {
      CHECK(c.applicable);  // a LIA gets the whole catalog
      if (c.required) {
        INFO("identity " << c.id);
        CHECK(c.pass);
      }
    }
  }
}

TEST_CASE("the transcribed T2.2-7 variant is informative only") {
  auto cat = identity_catalog();
  auto rep = verify_identities(fixture("ex3.1"), cat);
  const auto& c = find_check(rep, "T2.2-7");
  CHECK_FALSE(c.required);
  // The variant genuinely fails; the corrected form T2.2-9 holds.
  CHECK_FALSE(c.pass);
  CHECK(find_check(rep, "T2.2-9").pass);
  CHECK(rep.all_pass());
}

TEST_CASE("residuated and MTL identities pass on ex4.3, LIA ones are gated") {
  auto ca = fixture("ex4.3");
  auto rep = verify_identities(ca, identity_catalog());
  CHECK(rep.all_pass());
  for (int i = 1; i <= 14; ++i) {
    const auto& c = find_check(rep, "R" + std::to_string(i));
    CHECK(c.applicable);
    CHECK(c.pass);
  }
  for (int i = 1; i <= 8; ++i) {
    const auto& c = find_check(rep, "M" + std::to_string(i));
    CHECK(c.applicable);
    CHECK(c.pass);
  }
  CHECK(find_check(rep, "R8").pass);  // x' = x''' and x <= x''
  // x' = x -> 0 holds by construction of neg, but the LIA-scoped entry is
  // filtered on a non-LIA algebra.
  CHECK_FALSE(find_check(rep, "T2.2-2").applicable);
  CHECK_FALSE(find_check(rep, "T2.3-15").applicable);
}

TEST_CASE("identities pass on ex4.6") {
  auto rep = verify_identities(fixture("ex4.6"), identity_catalog());
  CHECK(rep.all_pass());
}

TEST_CASE("a broken table produces a witness") {
  auto raw = fixture_raw("ex4.6");
  (*raw.otimes)[2][2] = 2;  // b*b = b breaks x*y <= min on this chain? keep assoc?
  auto ca = analyze(std::move(raw));
  // The tampered product may or may not stay residuated; if a scope applies,
  // any failing identity must carry a witness tuple.
  auto rep = verify_identities(ca, identity_catalog());
  for (const auto& c : rep.checks)
    if (c.applicable && !c.pass) CHECK_FALSE(c.witness.empty());
}

TEST_CASE("parallel verification matches the sequential report") {
  auto cat = identity_catalog();
  for (const std::string name : {"ex3.1", "ex4.3"}) {
    auto ca = fixture(name);
    auto seq = verify_identities(ca, cat, {.workers = 1});
    auto par = verify_identities(ca, cat, {.workers = 4});
    REQUIRE(seq.checks.size() == par.checks.size());
    for (std::size_t i = 0; i < seq.checks.size(); ++i) {
      CHECK(seq.checks[i].id == par.checks[i].id);
      CHECK(seq.checks[i].pass == par.checks[i].pass);
      CHECK(seq.checks[i].witness == par.checks[i].witness);
    }
  }
}

TEST_CASE("indexed identities fall back to small subsets on large carriers") {
  auto ca = fixture("ex4.3");
  VerifyOptions opt;
  opt.full_powerset_limit = 2;  // force the pairs-and-triples path
  auto rep = verify_identities(ca, identity_catalog(), opt);
  CHECK(rep.all_pass());
}
