#include <gtest/gtest.h>

#include <random>

#include "pathhom/matrix.hpp"
#include "pathhom/smith.hpp"

using namespace pathhom;

namespace {

using Q = RationalField;
using QVec = std::vector<mpq_class>;

std::vector<std::vector<long>> random_ints(std::mt19937& rng, std::size_t r, std::size_t c, int span) {
  std::vector<std::vector<long>> m(r, std::vector<long>(c));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<long>(rng() % (2 * span + 1)) - span;
  return m;
}

// Largest k with a nonzero k x k minor, by exhaustive choice of rows and columns.
std::size_t rank_by_minors(const std::vector<std::vector<long>>& a) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::size_t best = 0;
  for (unsigned rmask = 1; rmask < (1u << rows); ++rmask) {
    for (unsigned cmask = 1; cmask < (1u << cols); ++cmask) {
      auto k = static_cast<std::size_t>(__builtin_popcount(rmask));
      if (k != static_cast<std::size_t>(__builtin_popcount(cmask)) || k <= best) continue;
      IntegerMatrix m(k, k);
      std::size_t i = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!(rmask >> r & 1)) continue;
        std::size_t j = 0;
        for (std::size_t c = 0; c < cols; ++c) {
          if (cmask >> c & 1) m(i, j++) = a[r][c];
        }
        ++i;
      }
      if (sgn(determinant(m)) != 0) best = k;
    }
  }
  return best;
}

// Over GF(p): rank = cols - log_p |{x : Ax = 0}|, counting the kernel by enumeration.
std::size_t rank_by_counting(const ExactMatrix<PrimeField>& a) {
  const auto p = a.field().p;
  std::size_t total = 1, kernel = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) total *= p;
  std::vector<std::uint32_t> x(a.cols());
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (auto& xi : x) xi = static_cast<std::uint32_t>(rest % p), rest /= p;
    bool zero = true;
    for (auto y : multiply(a, std::span<const std::uint32_t>(x))) zero = zero && y == 0;
    kernel += zero;
  }
  std::size_t nullity = 0;
  while (kernel > 1) kernel /= p, ++nullity;
  return a.cols() - nullity;
}

}  // namespace

TEST(Field, Parse) {
  EXPECT_TRUE(parse_field("Q").is_rational());
  EXPECT_EQ(parse_field("F2").p, 2u);
  EXPECT_EQ(parse_field("GF(3)").p, 3u);
  EXPECT_EQ(parse_field("F101").name(), "F101");
  EXPECT_EQ(parse_field("Q").name(), "Q");
  for (auto bad : {"F4", "F1", "F0", "R", "GF()", "F", "F2x"}) {
    try {
      parse_field(bad);
      ADD_FAILURE() << bad;
    } catch (const error& e) {
      EXPECT_EQ(e.kind(), error_kind::invalid_field) << bad;
    }
  }
}

TEST(Field, PrimeArithmetic) {
  PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inverse(a)), 1u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_integer(mpz_class(-15)), 6u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_TRUE(f.is_unit_sign(6));
  EXPECT_EQ(PrimeField(2).one(), 1u);
}

TEST(Field, RationalCanonical) {
  Q f;
  auto a = f.div(f.from_int(4), f.from_int(-6));
  EXPECT_TRUE(f.is_canonical(a));
  EXPECT_EQ(f.to_string(a), "-2/3");
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(ExactMatrix<Q>::identity(Q{}, 2)), 2u);
  EXPECT_EQ(rank(ExactMatrix<PrimeField>::from_ints(PrimeField(2), {{1, 1}, {1, 1}})), 1u);
  EXPECT_EQ(rank(ExactMatrix<Q>::from_ints(Q{}, {{2, 4}, {1, 2}})), 1u);
  EXPECT_EQ(rank(ExactMatrix<Q>(Q{}, 0, 3)), 0u);
}

TEST(Rank, FieldMatters) {
  std::vector<std::vector<long>> a{{2, 0}, {0, 1}};
  EXPECT_EQ(rank(ExactMatrix<Q>::from_ints(Q{}, a)), 2u);
  EXPECT_EQ(rank(ExactMatrix<PrimeField>::from_ints(PrimeField(2), a)), 1u);
}

TEST(Rank, AgreesWithMinorsOverQ) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_ints(rng, 1 + rng() % 4, 1 + rng() % 4, trial % 3 == 0 ? 1 : 3);
    EXPECT_EQ(rank(ExactMatrix<Q>::from_ints(Q{}, a)), rank_by_minors(a));
  }
}

TEST(Rank, AgreesWithKernelCountOverPrimes) {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto m = ExactMatrix<PrimeField>::from_ints(PrimeField(p), random_ints(rng, 1 + rng() % 4, 1 + rng() % 5, 2));
      EXPECT_EQ(rank(m), rank_by_counting(m));
    }
  }
}

TEST(Kernel, Examples) {
  auto zero = kernel_basis(ExactMatrix<Q>(Q{}, 2, 3));
  ASSERT_EQ(zero.size(), 3u);
  EXPECT_EQ(zero[0], (QVec{1, 0, 0}));
  EXPECT_EQ(zero[2], (QVec{0, 0, 1}));

  auto gf2 = kernel_basis(ExactMatrix<PrimeField>::from_ints(PrimeField(2), {{1, 1}}));
  ASSERT_EQ(gf2.size(), 1u);
  EXPECT_EQ(gf2[0], (std::vector<std::uint32_t>{1, 1}));

  auto m = ExactMatrix<Q>::from_ints(Q{}, {{1, 2, 3}});
  auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (QVec{-2, 1, 0}));
  EXPECT_EQ(k[1], (QVec{-3, 0, 1}));
  for (auto& v : k) EXPECT_EQ(multiply(m, std::span<const mpq_class>(v)), (QVec{0}));
}

TEST(Kernel, RankNullityRandom) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = ExactMatrix<Q>::from_ints(Q{}, random_ints(rng, 1 + rng() % 5, 1 + rng() % 6, 2));
    auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), m.cols());
    for (auto& v : k) {
      for (auto& y : multiply(m, std::span<const mpq_class>(v))) EXPECT_EQ(y, 0);
    }
  }
}

TEST(Rref, Canonical) {
  auto m = ExactMatrix<Q>::from_ints(Q{}, {{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
  auto pivots = rref(m);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(m, ExactMatrix<Q>::from_ints(Q{}, {{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
}

TEST(Spans, Intersections) {
  Q f;
  QVec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  EXPECT_EQ(intersect_spans(f, 3, {e1}, {e1}), (std::vector<QVec>{e1}));
  EXPECT_TRUE(intersect_spans(f, 3, {e1}, {e2}).empty());
  EXPECT_EQ(intersect_spans(f, 3, {e1, e2}, {e2, e3}), (std::vector<QVec>{e2}));
  EXPECT_EQ(intersect_spans(f, 3, {e1, e2}, {QVec{1, 1, 0}}), (std::vector<QVec>{QVec{1, 1, 0}}));
  try {
    intersect_spans(f, 3, {QVec{1, 0}}, {e1});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::dimension_mismatch);
  }
}

TEST(Solve, Errors) {
  Q f;
  auto a = ExactMatrix<Q>::from_ints(f, {{1}, {0}});
  auto x = solve_independent(a, ExactMatrix<Q>::from_ints(f, {{3}, {0}}));
  EXPECT_EQ(x(0, 0), 3);
  try {
    solve_independent(a, ExactMatrix<Q>::from_ints(f, {{0}, {1}}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_in_span);
  }
  try {
    solve_independent(ExactMatrix<Q>::from_ints(f, {{1, 2}, {1, 2}}), ExactMatrix<Q>::from_ints(f, {{1}, {1}}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::dimension_mismatch);
  }
}

TEST(Tsv, Dump) {
  EXPECT_EQ(to_tsv(ExactMatrix<Q>::from_ints(Q{}, {{1, -2}, {0, 3}})), "1\t-2\n0\t3\n");
}
