#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace muxdeg {

struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;
};

/// Compressed-sparse-row matrix over exact 64-bit integers. Entries are kept
/// sorted by (row, col); duplicate triplets are summed on construction and
/// zero entries dropped.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> entries);

    std::size_t rows() const
    {
        return rows_;
    }

    std::size_t cols() const
    {
        return cols_;
    }

    std::size_t nnz() const
    {
        return col_.size();
    }

    bool is_square() const
    {
        return rows_ == cols_;
    }

    /// Value at (row, col); zero when the entry is not stored.
    std::int64_t at(std::size_t row, std::size_t col) const;

    /// Visits stored entries in (row, col) order.
    template <typename F>
    void for_each(F&& fn) const
    {
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
                fn(r, col_[k], val_[k]);
            }
        }
    }

    std::vector<std::int64_t> column_sums() const;

    /// Per-column count of stored entries (binary degree of the column).
    std::vector<std::int64_t> column_support() const;

    /// Support pattern with every stored entry replaced by 1.
    SparseMatrix binarized() const;

    SparseMatrix transposed() const;

    /// Entrywise sum; shapes must match.
    SparseMatrix plus(const SparseMatrix& other) const;

    bool is_symmetric() const;

    /// Debug dump: one `row col value` line per entry, sorted by (row, col).
    std::string coordinate_text() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_ = {0};
    std::vector<std::size_t> col_;
    std::vector<std::int64_t> val_;
};

} // namespace muxdeg
