#include "surfhh/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfhh {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(int characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(characteristic));
}

std::string FieldSpec::name() const {
  return characteristic_ == 0 ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

bool IntMatrix::is_zero_mod(int p) const {
  return std::all_of(data_.begin(), data_.end(), [p](std::int64_t x) { return x % p == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

namespace {

std::size_t rank_rational(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  // Bareiss: after step k every entry of the trailing block is a (k+1)-minor,
  // and the division by the previous pivot is exact.
  cpp_int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_mod(const IntMatrix& m, std::int64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((m(i, j) % p) + p) % p;

  auto inverse = [p](std::int64_t x) {
    // Fermat: x^(p-2)
    std::int64_t result = 1, base = x, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const auto inv = inverse(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const auto f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m, const FieldSpec& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (field.characteristic() == 0) return rank_rational(m);
  return rank_mod(m, field.characteristic());
}

}  // namespace surfhh
