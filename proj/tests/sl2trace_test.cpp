#include <gtest/gtest.h>

#include <Eigen/LU>
#include <random>

#include "charvar/errors.hpp"
#include "charvar/format.hpp"
#include "charvar/freeword.hpp"
#include "charvar/polyalg.hpp"
#include "charvar/trace.hpp"
#include "charvar/trace_oracle.hpp"

namespace charvar {
namespace {

const Vars& xyz() { return TraceCoords::standard().vars(); }
MultiPoly P(std::string_view text) { return parse_poly(text, xyz()); }
FreeWord W(std::string_view text) { return parse_word(text); }

FreeWord random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    letters.push_back({coin(rng) ? Generator::First : Generator::Second, coin(rng) ? 1 : -1});
  }
  return reduce(FreeWord(letters));
}

TEST(Reduce, Examples) {
  EXPECT_TRUE(reduce(W("a a^-1")).empty());
  EXPECT_EQ(reduce(W("a^2 a^3")), W("a^5"));
  EXPECT_EQ(reduce(W("a b b^-1 a")), W("a^2"));
  EXPECT_TRUE(reduce(W("a^2 a^3")).is_reduced());
  EXPECT_FALSE(W("a a").is_reduced());
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(W("a b")), W("b a"));
  EXPECT_EQ(reverse(W("a b^-1 a^-1 b")), W("b a^-1 b^-1 a"));
  EXPECT_TRUE(reverse(FreeWord()).empty());
}

TEST(ParseWord, CustomNamesAndErrors) {
  EXPECT_EQ(parse_word("a w^-1 a w", "a", "w"), FreeWord({{Generator::First, 1}, {Generator::Second, -1},
                                                           {Generator::First, 1}, {Generator::Second, 1}}));
  EXPECT_THROW(parse_word("a c"), ParseError);
  EXPECT_THROW(parse_word("a^"), ParseError);
  EXPECT_THROW(parse_word("a^0"), ParseError);
  EXPECT_EQ(to_string(W("a b^-2")), "a b^-2");
}

TEST(TracePoly, Examples) {
  EXPECT_EQ(trace_poly(W("a")), P("x"));
  EXPECT_EQ(trace_poly(W("b")), P("y"));
  EXPECT_EQ(trace_poly(W("a b")), P("z"));
  EXPECT_EQ(trace_poly(W("a b^-1")), P("x*y - z"));
  EXPECT_EQ(trace_poly(W("a b a^-1 b^-1")), P("x^2 + y^2 + z^2 - x*y*z - 2"));
  EXPECT_EQ(trace_poly(W("a b a b a b")), P("z^3 - 3*z"));
  EXPECT_EQ(trace_poly(FreeWord()), P("2"));
  EXPECT_EQ(trace_poly(W("a^2")), P("x^2 - 2"));
}

TEST(TracePoly, UnreducedInputIsReducedFirst) { EXPECT_EQ(trace_poly(W("a b b^-1 a")), P("x^2 - 2")); }

TEST(TracePoly, CommutatorMatchesNumericOracle) {
  EXPECT_TRUE(numeric_trace_oracle(W("a b a^-1 b^-1"), 100, 1e-8, kDefaultSeed));
  EXPECT_TRUE(numeric_trace_oracle(W("a b a b a b"), P("z^3 - 3*z"), 100, 1e-8, kDefaultSeed));
  EXPECT_TRUE(numeric_trace_oracle(W("a b^-1 a b"), 100, 1e-8, kDefaultSeed));
}

TEST(TracePoly, OracleRejectsCorruptedPolynomial) {
  EXPECT_FALSE(numeric_trace_oracle(W("a b a^-1 b^-1"), P("x^2 + y^2 + z^2 - x*y*z - 1"), 5, 1e-8, kDefaultSeed));
  EXPECT_TRUE(numeric_trace_oracle(W("a"), 10, 1e-8, kDefaultSeed));
}

TEST(TracePoly, ReversalRotationInversionInvariance) {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> shift(0, 12);
  for (int i = 0; i < 500; ++i) {
    const auto w = random_word(rng, 12);
    const auto t = trace_poly(w);
    EXPECT_EQ(trace_poly(reverse(w)), t) << to_string(w);
    EXPECT_EQ(trace_poly(w.inverse()), t) << to_string(w);
    EXPECT_EQ(trace_poly(rotate(w, shift(rng))), t) << to_string(w);
  }
}

TEST(TracePoly, NumericOracleOnRandomWords) {
  std::mt19937_64 rng(kDefaultSeed + 1);
  for (int i = 0; i < 100; ++i) {
    const auto w = random_word(rng, 12);
    EXPECT_TRUE(numeric_trace_oracle(w, 20, 1e-8, kDefaultSeed + i)) << to_string(w);
  }
}

Eigen::Matrix2cd to_matrix(const QuadBasisElem& e, const Sl2Pair& m) {
  const std::map<std::string, std::complex<double>> pt{
      {"x", m.first.trace()}, {"y", m.second.trace()}, {"z", (m.first * m.second).trace()}};
  const Eigen::Matrix2cd ab = m.first * m.second;
  return eval_complex(e.one, pt) * Eigen::Matrix2cd::Identity() + eval_complex(e.a, pt) * m.first +
         eval_complex(e.b, pt) * m.second + eval_complex(e.ab, pt) * ab;
}

TEST(LeftMultiply, TableMatchesMatrixProducts) {
  const auto coords = TraceCoords::standard();
  Sl2Sampler sampler(kDefaultSeed);
  const std::vector<FreeWord> basis_words{FreeWord(), W("a"), W("b"), W("a b")};
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = sampler.next_pair();
    for (const auto& w : basis_words) {
      const auto e = fold(w, coords);
      for (auto gen : {Generator::First, Generator::Second}) {
        for (int exp : {1, -1}) {
          Eigen::Matrix2cd g = gen == Generator::First ? m.first : m.second;
          if (exp < 0) g = g.inverse().eval();
          const Eigen::Matrix2cd expected = g * to_matrix(e, m);
          const Eigen::Matrix2cd got = to_matrix(left_multiply({gen, exp}, e, coords), m);
          EXPECT_LT((expected - got).norm(), 1e-9);
        }
      }
    }
  }
}

TEST(LeftMultiply, LettersComposeLikeTheProductWord) {
  const auto coords = TraceCoords::standard();
  for (const auto& w : {FreeWord(), W("a"), W("b"), W("a b")}) {
    const auto e = fold(w, coords);
    const auto b_then_a =
        left_multiply({Generator::First, 1}, left_multiply({Generator::Second, 1}, e, coords), coords);
    EXPECT_EQ(b_then_a, fold(W("a b") * w, coords));
  }
}

TEST(LeftMultiply, InverseLettersUndoLetters) {
  const auto coords = TraceCoords::standard();
  const std::vector<FreeWord> words{FreeWord(), W("a"), W("b"), W("a b")};
  for (const auto& w : words) {
    const auto e = fold(w, coords);
    for (auto gen : {Generator::First, Generator::Second}) {
      const auto back = left_multiply({gen, -1}, left_multiply({gen, 1}, e, coords), coords);
      EXPECT_EQ(back, e);
    }
  }
}

TEST(Chebyshev, Examples) {
  const auto y = make_vars({"y"});
  EXPECT_EQ(chebyshev_s(2, y, "y"), parse_poly("y^2 - 1", y));
  EXPECT_EQ(chebyshev_s(-1, y, "y"), parse_poly("0", y));
  EXPECT_EQ(chebyshev_s(-2, y, "y"), parse_poly("-1", y));
  EXPECT_EQ(specialize(chebyshev_s(7, y, "y"), "y", -1), parse_poly("-1", y));
  EXPECT_EQ(chebyshev_t(4, y, "y"), parse_poly("y^4 - 4*y^2 + 2", y));
  EXPECT_EQ(chebyshev({ChebyshevKind::Kind::T, 4}, y, "y"), chebyshev_s(4, y, "y") - chebyshev_s(2, y, "y"));
}

TEST(Chebyshev, RecursionHoldsForAllIndices) {
  const auto y = make_vars({"y"});
  const auto Y = MultiPoly::variable(y, "y");
  for (int k = -12; k <= 12; ++k) {
    EXPECT_EQ(chebyshev_s(k + 1, y, "y"), Y * chebyshev_s(k, y, "y") - chebyshev_s(k - 1, y, "y"));
    EXPECT_EQ(chebyshev_t(k + 1, y, "y"), Y * chebyshev_t(k, y, "y") - chebyshev_t(k - 1, y, "y"));
    EXPECT_EQ(chebyshev_t(k, y, "y"), chebyshev_s(k, y, "y") - chebyshev_s(k - 2, y, "y"));
  }
}

TEST(Chebyshev, ValuesAtTwoFollowTheRecursion) {
  // The recursion gives S_k(2) = k + 1 and S_k(-2) = (-1)^k (k + 1).
  const auto y = make_vars({"y"});
  for (int k = 0; k <= 10; ++k) {
    EXPECT_EQ(specialize(chebyshev_s(k, y, "y"), "y", 2).constant_term(), k + 1);
    EXPECT_EQ(specialize(chebyshev_s(k, y, "y"), "y", -2).constant_term(), (k % 2 ? -1 : 1) * (k + 1));
  }
}

TEST(Chebyshev, TraceOfPowerIsT) {
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(trace_poly(W("a b").power(k)), chebyshev_t(k, xyz(), "z"));
  }
}

}  // namespace
}  // namespace charvar
