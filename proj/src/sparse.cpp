#include "muxdeg/sparse.hpp"

#include <algorithm>
#include <sstream>

#include "muxdeg/errors.hpp"

namespace muxdeg {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0)
{
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries)
{
    for (const auto& t : entries) {
        if (t.row >= rows || t.col >= cols) {
            throw Error(ErrorKind::dimension_mismatch,
                        "triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                            ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        std::int64_t sum = 0;
        while (j < entries.size() && entries[j].row == entries[i].row &&
               entries[j].col == entries[i].col) {
            sum += entries[j].value;
            ++j;
        }
        if (sum != 0) {
            m.col_.push_back(entries[i].col);
            m.val_.push_back(sum);
            m.row_ptr_[entries[i].row + 1] += 1;
        }
        i = j;
    }
    for (std::size_t r = 0; r < rows; ++r) {
        m.row_ptr_[r + 1] += m.row_ptr_[r];
    }
    return m;
}

std::int64_t SparseMatrix::at(std::size_t row, std::size_t col) const
{
    if (row >= rows_ || col >= cols_) {
        throw Error(ErrorKind::dimension_mismatch,
                    "index (" + std::to_string(row) + ", " + std::to_string(col) + ") outside " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    const auto begin = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
    const auto end = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
    const auto it = std::lower_bound(begin, end, col);
    if (it == end || *it != col) {
        return 0;
    }
    return val_[static_cast<std::size_t>(it - col_.begin())];
}

std::vector<std::int64_t> SparseMatrix::column_sums() const
{
    std::vector<std::int64_t> sums(cols_, 0);
    for_each([&](std::size_t, std::size_t c, std::int64_t v) { sums[c] += v; });
    return sums;
}

std::vector<std::int64_t> SparseMatrix::column_support() const
{
    std::vector<std::int64_t> counts(cols_, 0);
    for_each([&](std::size_t, std::size_t c, std::int64_t) { counts[c] += 1; });
    return counts;
}

SparseMatrix SparseMatrix::binarized() const
{
    SparseMatrix m = *this;
    std::fill(m.val_.begin(), m.val_.end(), 1);
    return m;
}

SparseMatrix SparseMatrix::transposed() const
{
    std::vector<Triplet> entries;
    entries.reserve(nnz());
    for_each([&](std::size_t r, std::size_t c, std::int64_t v) {
        entries.push_back(Triplet{c, r, v});
    });
    return from_triplets(cols_, rows_, std::move(entries));
}

SparseMatrix SparseMatrix::plus(const SparseMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::dimension_mismatch,
                    "cannot add " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                        std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    }
    std::vector<Triplet> entries;
    entries.reserve(nnz() + other.nnz());
    for_each([&](std::size_t r, std::size_t c, std::int64_t v) {
        entries.push_back(Triplet{r, c, v});
    });
    other.for_each([&](std::size_t r, std::size_t c, std::int64_t v) {
        entries.push_back(Triplet{r, c, v});
    });
    return from_triplets(rows_, cols_, std::move(entries));
}

bool SparseMatrix::is_symmetric() const
{
    return is_square() && *this == transposed();
}

std::string SparseMatrix::coordinate_text() const
{
    std::ostringstream out;
    for_each([&](std::size_t r, std::size_t c, std::int64_t v) {
        out << r << ' ' << c << ' ' << v << '\n';
    });
    return out.str();
}

} // namespace muxdeg
