#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tamesys/field.hpp"

namespace tamesys {

class Mat;

/// Reduced row-echelon form together with rank and pivot columns.
struct RrefResult {
    std::vector<Elem> entries;          // row-major, same shape as the input
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;    // ascending column indices
};

/// Dense matrix over a finite field. Row-major storage; all entries share one
/// field handle. Value semantics, no aliasing.
class Mat {
  public:
    Mat(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(FieldPtr f, std::size_t n);

    /// Build from signed integer literals (reduced into the field).
    static Mat from_rows(FieldPtr f, const std::vector<std::vector<long long>>& rows);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    RrefResult rref() const;
    std::size_t rank() const { return rref().rank; }

    /// Rows form a basis of the right kernel {v : M v = 0}; one basis vector
    /// per free column, in ascending free-column order.
    Mat kernel_basis() const;

    /// True iff v is a linear combination of this matrix's rows.
    bool row_space_contains(std::span<const Elem> v) const;

    Mat transpose() const;
    Mat mul(const Mat& other) const;
    Mat select_columns(std::span<const std::size_t> cols) const;
    Mat vstack(const Mat& below) const;
    bool is_zero() const;

    bool operator==(const Mat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_ &&
               f_->same(*other.f_);
    }

  private:
    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

}  // namespace tamesys
