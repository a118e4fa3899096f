#pragma once

#include "lefkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace lefkit {

/// Dense row-major matrix over the rationals. Immutable once built; the
/// elimination routines copy what they need.
class RatMatrix {
public:
    RatMatrix() = default;
    /// Zero matrix.
    RatMatrix(std::size_t rows, std::size_t cols);
    /// Takes `entries` in row-major order; size must equal rows * cols.
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const noexcept { return data_; }

    RatMatrix transposed() const;
    std::vector<Rational> multiply(const std::vector<Rational>& v) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace lefkit
