#include <gtest/gtest.h>

#include "clonesub/clone.hpp"
#include "table1.hpp"

using namespace clonesub;

TEST(Clone, IdentifiesEveryReferenceBase) {
  for (const auto& e : table1::entries()) {
    EXPECT_EQ(identifyClone(e.base), e.clone) << cloneName(e.clone);
  }
}

TEST(Clone, CanonicalBasesIdentifyThemselves) {
  for (CloneId c : cloneInventory()) {
    EXPECT_EQ(identifyClone(canonicalFunctions(c)), c) << cloneName(c);
  }
}

TEST(Clone, NamesRoundTrip) {
  for (CloneId c : cloneInventory()) EXPECT_EQ(cloneFromName(cloneName(c)), c);
  EXPECT_FALSE(cloneFromName("Q7").has_value());
}

TEST(Clone, ContainmentFollowsThePostLattice) {
  const std::vector<BoolFun> andNot{fns::conj(), fns::neg()};
  for (CloneId c : cloneInventory()) EXPECT_TRUE(cloneContains(c, andNot)) << cloneName(c);
  const std::vector<BoolFun> conj{fns::conj()};
  EXPECT_TRUE(cloneContains(CloneId::E2, conj));
  EXPECT_FALSE(cloneContains(CloneId::E0, conj));
  EXPECT_TRUE(cloneSubset(conj, CloneId::E));
  EXPECT_FALSE(cloneSubset(conj, CloneId::V));
}

TEST(Clone, UnnamedClonesAreOther) {
  const std::vector<BoolFun> lattice{fns::conj(), fns::disj()};  // M2
  EXPECT_EQ(identifyClone(lattice), CloneId::Other);
}

// The dual of a clone is identified from the pointwise duals of its base.
TEST(Clone, DualityTableMatchesDualizedBases) {
  for (CloneId c : cloneInventory()) {
    std::vector<BoolFun> dual;
    for (const auto& f : canonicalFunctions(c)) dual.push_back(f.dual());
    EXPECT_EQ(identifyClone(dual), dualClone(c)) << cloneName(c);
  }
  EXPECT_EQ(dualClone(CloneId::E), CloneId::V);
  EXPECT_EQ(dualClone(CloneId::E2), CloneId::V2);
  EXPECT_EQ(dualClone(CloneId::S00), CloneId::S10);
  EXPECT_EQ(dualClone(CloneId::N2), CloneId::N2);
}
