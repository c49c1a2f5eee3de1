#include <gtest/gtest.h>

#include "tightpoly/word.hpp"
#include "tightpoly/errors.hpp"

using namespace tightpoly;

TEST(Word, ParseSkipsWhitespace) {
  EXPECT_EQ(Word::parse("ab c").to_string(), "abc");
  EXPECT_TRUE(Word::parse("").empty());
  EXPECT_THROW(Word::parse("abd"), InvalidPresentation);
}

TEST(Word, SigmaHelpersExpand) {
  EXPECT_EQ(Word::sigma1().to_string(), "ab");
  EXPECT_EQ(Word::sigma2().to_string(), "bc");
  EXPECT_EQ(Word::sigma1_power(-1).to_string(), "ba");
  EXPECT_EQ(Word::sigma2_power(3).to_string(), "bcbcbc");
}

TEST(Word, InverseIsReversal) {
  const Word w = Word::parse("abcab");
  EXPECT_EQ(w.inverse().to_string(), "bacba");
  EXPECT_TRUE((w * w.inverse()).freely_reduced().empty());
}

TEST(Word, FreeAndCyclicReduction) {
  EXPECT_EQ(Word::parse("abbc").freely_reduced().to_string(), "ac");
  EXPECT_EQ(Word::parse("aabbcc").freely_reduced().to_string(), "");
  EXPECT_EQ(Word::parse("abca").cyclically_reduced().to_string(), "bc");
}

TEST(Word, CyclicEquivalenceUpToRotationAndReversal) {
  const Word w = Word::parse("abcb");
  EXPECT_TRUE(w.cyclically_equivalent(Word::parse("bcba")));
  EXPECT_TRUE(w.cyclically_equivalent(w.inverse()));
  EXPECT_FALSE(w.cyclically_equivalent(Word::parse("abab")));
  EXPECT_TRUE(Word::parse("acac").cyclically_equivalent(Word::parse("caca")));
}

TEST(Word, DualSwapsOuterLetters) {
  EXPECT_EQ(Word::parse("abcb").dualized().to_string(), "cbab");
  EXPECT_EQ(Word::parse("abcb").dualized().dualized(), Word::parse("abcb"));
}

TEST(Word, PowerAndRotation) {
  EXPECT_EQ(Word::sigma1().power(2).to_string(), "abab");
  EXPECT_EQ(Word::sigma1().power(-1).to_string(), "ba");
  EXPECT_EQ(Word::parse("abc").rotated(1).to_string(), "bca");
}
