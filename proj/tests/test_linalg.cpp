#include "corpus.hpp"

#include <doctest.h>

using namespace folinv;

namespace {

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread, double density) {
  std::uniform_int_distribution<int> v(-spread, spread);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng) < density) m(i, j) = v(rng);
  return m;
}

} // namespace

TEST_CASE("bareiss rank on small matrices") {
  IntMatrix m(3, 3);
  CHECK(bareiss_rank_serial(m) == 0);
  m(0, 0) = 1;
  m(1, 1) = 2;
  m(2, 0) = 3;
  m(2, 1) = 6;
  CHECK(bareiss_rank_serial(m) == 2);
  CHECK(bareiss_rank_parallel(m) == 2);
  IntMatrix wide(2, 5);
  wide(0, 4) = 7;
  wide(1, 4) = -7;
  CHECK(bareiss_rank_serial(wide) == 1);
  CHECK(bareiss_rank_serial(IntMatrix()) == 0);
}

TEST_CASE("serial and parallel bareiss agree") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng() % 25, c = 1 + rng() % 25;
    IntMatrix m = random_int_matrix(rng, r, c, 5, trial % 3 == 0 ? 0.15 : 0.6);
    // force some dependent rows
    if (r > 2)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3 - m(1, j);
    CHECK(bareiss_rank_serial(m) == bareiss_rank_parallel(m));
  }
}

TEST_CASE("rank of rational matrices through integer rows") {
  RationalMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(3, 2);
  m(1, 1) = 1;
  CHECK(rank(m) == 1);
  m(1, 1) = 2;
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel basis and column spaces") {
  RationalMatrix shift(3, 3);
  shift(1, 0) = 1;
  shift(2, 1) = 1;
  RationalMatrix k = kernel_basis(shift);
  CHECK(k.cols() == 1);
  CHECK(is_zero(multiply(shift, k)));
  // kernel of the y-shift on {1, y, y^2} is spanned by y^2, which is also the image of shift^2
  CHECK(same_column_space(k, multiply(shift, shift)));
  CHECK_FALSE(same_column_space(k, shift));
  CHECK(kernel_basis(identity(3)).cols() == 0);
  CHECK(same_column_space(kernel_basis(RationalMatrix(2, 2)), identity(2)));
}

TEST_CASE("macaulay rows are identical for serial and parallel ranks") {
  auto fk = corpus::fk(4);
  std::vector<Poly> gens{fk.P, fk.Q};
  for (int bound : {8, 12, 16}) CHECK(macaulay_dim(gens, bound) == macaulay_dim_serial(gens, bound));
}
