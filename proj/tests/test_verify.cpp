#include <gtest/gtest.h>

#include <set>

#include "ncurve/error.hpp"
#include "ncurve/verify.hpp"

using namespace ncurve;

TEST(Verify, Scopes) {
  const auto& s = verify_scopes();
  ASSERT_EQ(s.size(), 11u);
  std::set<int> crit;
  for (const auto& name : s) crit.insert(scope_criterion(name));
  EXPECT_EQ(crit, (std::set<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_THROW(scope_criterion("nope"), Error);
  VerifyOptions o;
  o.scope = "nope";
  EXPECT_THROW(verify_paper(o), Error);
}

TEST(Verify, SingleScope) {
  VerifyOptions o;
  o.scope = "monomial";
  const auto rows = verify_paper(o);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    EXPECT_EQ(r.scope, "monomial");
    EXPECT_EQ(r.criterion, 1);
    EXPECT_TRUE(r.pass) << r.id << ": " << r.computed;
  }
}

TEST(Verify, FaultInjectionFails) {
  for (const std::string scope : {"monomial", "p5"}) {
    VerifyOptions o;
    o.scope = scope;
    o.inject_fault = true;
    bool any_fail = false;
    for (const auto& r : verify_paper(o)) any_fail = any_fail || !r.pass;
    EXPECT_TRUE(any_fail) << scope;
  }
}

TEST(Verify, CheapScopesPass) {
  for (const std::string scope : {"sacchiero", "alzati-re", "p5", "fibers", "p4", "negdim"}) {
    VerifyOptions o;
    o.scope = scope;
    for (const auto& r : verify_paper(o)) EXPECT_TRUE(r.pass) << r.id << " expected " << r.expected << " got " << r.computed;
  }
}
