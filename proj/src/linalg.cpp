#include "folinv/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace folinv {

namespace {

bool select_pivot(IntMatrix& m, std::size_t r, std::size_t c) {
  for (std::size_t i = r; i < m.rows(); ++i) {
    if (sgn(m(i, c)) != 0) {
      if (i != r)
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(r, k));
      return true;
    }
  }
  return false;
}

// One Bareiss update of row j against pivot row r: every entry becomes a minor,
// so the division by the previous pivot is exact.
void eliminate_row(IntMatrix& m, std::size_t r, std::size_t c, std::size_t j, const Integer& prev) {
  const Integer& pivot = m(r, c);
  Integer lead = m(j, c);
  Integer tmp;
  for (std::size_t k = c + 1; k < m.cols(); ++k) {
    mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), m(j, k).get_mpz_t());
    mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m(r, k).get_mpz_t());
    mpz_divexact(m(j, k).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
  }
  m(j, c) = 0;
}

} // namespace

std::size_t bareiss_rank_serial(IntMatrix m) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!select_pivot(m, r, c)) continue;
    for (std::size_t j = r + 1; j < m.rows(); ++j) eliminate_row(m, r, c, j, prev);
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t bareiss_rank_parallel(IntMatrix m) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!select_pivot(m, r, c)) continue;
    const long first = static_cast<long>(r + 1);
    const long last = static_cast<long>(m.rows());
#pragma omp parallel for schedule(dynamic, 4)
    for (long j = first; j < last; ++j) eliminate_row(m, r, c, static_cast<std::size_t>(j), prev);
    prev = m(r, c);
    ++r;
  }
  return r;
}

IntMatrix integer_rows(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer den = 1;
    for (std::size_t k = 0; k < m.cols(); ++k)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, k).get_den_mpz_t());
    for (std::size_t k = 0; k < m.cols(); ++k)
      out(i, k) = m(i, k).get_num() * (den / m(i, k).get_den());
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return bareiss_rank_parallel(integer_rows(m)); }

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool is_zero(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) return false;
  return true;
}

RationalMatrix kernel_basis(const RationalMatrix& input) {
  RationalMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    Rational inv = 1 / m(r, c);
    for (std::size_t k = 0; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t k = 0; k < cols; ++k) m(i, k) -= f * m(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix basis(cols, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) basis(pivot_cols[i], f) = -m(i, free_cols[f]);
  }
  return basis;
}

RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat needs equal row counts");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

bool same_column_space(const RationalMatrix& a, const RationalMatrix& b) {
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(hconcat(a, b)) == ra;
}

std::string str(const RationalMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).get_str();
    out += "]\n";
  }
  return out;
}

} // namespace folinv
