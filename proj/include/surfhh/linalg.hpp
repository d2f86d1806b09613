#pragma once

// Exact rank computations for small dense integer matrices.
//
// Characteristic 0 uses fraction-free (Bareiss) elimination over arbitrary
// precision integers, so the rank is the rank over Q. Characteristic p
// reduces entries mod p and eliminates over GF(p).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace surfhh {

class FieldSpec {
 public:
  // 0 or a prime; throws std::invalid_argument otherwise.
  explicit FieldSpec(int characteristic = 0);

  int characteristic() const noexcept { return characteristic_; }
  bool is_char2() const noexcept { return characteristic_ == 2; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  int characteristic_;
};

bool is_prime(int n);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_zero_mod(int p) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Plain integer product; throws std::invalid_argument on shape mismatch.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

std::size_t rank(const IntMatrix& m, const FieldSpec& field);

}  // namespace surfhh
