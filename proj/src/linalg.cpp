#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

std::size_t rank(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; row scaling preserves rank.
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& x = m(r, c);
      if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& x = m(r, c);
      a[r * cols + c] = x.is_zero() ? mpz_class(0) : x.numerator() * (l / x.denominator());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(rank, j));
    const mpz_class pivot = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pivot * at(i, j) - lead * at(rank, j);
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("Bareiss step is not exact");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace leibniz
