#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace subdual {

using Word = std::uint64_t;

inline constexpr int kMaxDim = 64;

/// Low `n` bits set, for 0 <= n <= 64.
constexpr Word low_mask(int n) noexcept
{
    return n >= 64 ? ~Word{0} : ((Word{1} << n) - 1);
}

/// Dense boolean matrix with at most 64 rows and 64 columns. Row i is a single
/// machine word whose bit j is entry (i, j). Unused rows and bits stay zero so
/// that equality and hashing can look at the raw storage.
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(int rows, int cols) : rows_(static_cast<std::uint8_t>(rows)), cols_(static_cast<std::uint8_t>(cols))
    {
        if (rows < 0 || rows > kMaxDim || cols < 0 || cols > kMaxDim) {
            throw std::length_error("bit matrix dimension out of range: " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
        }
    }

    static BitMatrix identity(int n)
    {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i] = Word{1} << i;
        return m;
    }

    static BitMatrix full(int rows, int cols)
    {
        BitMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) m.data_[i] = low_mask(cols);
        return m;
    }

    /// Row-major bit code: entry (i, j) is bit i * cols + j. Requires rows * cols <= 64.
    static BitMatrix from_code(int rows, int cols, Word code)
    {
        BitMatrix m(rows, cols);
        if (rows * cols > 64) throw std::length_error("bit matrix too large for a 64-bit code");
        for (int i = 0; i < rows; ++i) m.data_[i] = (code >> (i * cols)) & low_mask(cols);
        return m;
    }

    Word code() const
    {
        if (rows_ * cols_ > 64) throw std::length_error("bit matrix too large for a 64-bit code");
        Word c = 0;
        for (int i = 0; i < rows_; ++i) c |= data_[i] << (i * cols_);
        return c;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    bool test(int i, int j) const noexcept { return (data_[i] >> j) & 1U; }
    void set(int i, int j, bool v = true) noexcept
    {
        if (v)
            data_[i] |= Word{1} << j;
        else
            data_[i] &= ~(Word{1} << j);
    }

    Word row(int i) const noexcept { return data_[i]; }
    void set_row(int i, Word w) noexcept { data_[i] = w & low_mask(cols_); }

    /// Column j packed as a word over the rows.
    Word column(int j) const noexcept
    {
        Word c = 0;
        for (int i = 0; i < rows_; ++i) c |= ((data_[i] >> j) & 1U) << i;
        return c;
    }

    int count() const noexcept
    {
        int n = 0;
        for (int i = 0; i < rows_; ++i) n += std::popcount(data_[i]);
        return n;
    }

    bool empty() const noexcept
    {
        for (int i = 0; i < rows_; ++i)
            if (data_[i]) return false;
        return true;
    }

    BitMatrix transposed() const noexcept
    {
        BitMatrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        for (int i = 0; i < rows_; ++i) {
            Word r = data_[i];
            while (r) {
                const int j = std::countr_zero(r);
                r &= r - 1;
                t.data_[j] |= Word{1} << i;
            }
        }
        return t;
    }

    /// Boolean product: (i, k) set iff some j has (i, j) in *this and (j, k) in rhs.
    /// This is "first *this, then rhs" in relational terms.
    BitMatrix then(const BitMatrix& rhs) const
    {
        if (cols_ != rhs.rows_) throw std::invalid_argument("bit matrix product: inner dimensions differ");
        BitMatrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i) {
            Word r = data_[i];
            Word acc = 0;
            while (r) {
                acc |= rhs.data_[std::countr_zero(r)];
                r &= r - 1;
            }
            out.data_[i] = acc;
        }
        return out;
    }

    BitMatrix operator&(const BitMatrix& rhs) const
    {
        check_same_shape(rhs);
        BitMatrix out(rows_, cols_);
        for (int i = 0; i < rows_; ++i) out.data_[i] = data_[i] & rhs.data_[i];
        return out;
    }

    BitMatrix operator|(const BitMatrix& rhs) const
    {
        check_same_shape(rhs);
        BitMatrix out(rows_, cols_);
        for (int i = 0; i < rows_; ++i) out.data_[i] = data_[i] | rhs.data_[i];
        return out;
    }

    BitMatrix complemented() const noexcept
    {
        BitMatrix out(rows_, cols_);
        for (int i = 0; i < rows_; ++i) out.data_[i] = ~data_[i] & low_mask(cols_);
        return out;
    }

    /// Inclusion of the set of pairs.
    bool subset_of(const BitMatrix& rhs) const
    {
        check_same_shape(rhs);
        for (int i = 0; i < rows_; ++i)
            if (data_[i] & ~rhs.data_[i]) return false;
        return true;
    }

    bool operator==(const BitMatrix& rhs) const noexcept
    {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
        for (int i = 0; i < rows_; ++i)
            if (data_[i] != rhs.data_[i]) return false;
        return true;
    }

    /// Total order: shape first, then rows from 0 upward.
    bool operator<(const BitMatrix& rhs) const noexcept
    {
        if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
        if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
        for (int i = 0; i < rows_; ++i)
            if (data_[i] != rhs.data_[i]) return data_[i] < rhs.data_[i];
        return false;
    }

private:
    void check_same_shape(const BitMatrix& rhs) const
    {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("bit matrix shapes differ");
    }

    std::array<Word, kMaxDim> data_{};
    std::uint8_t rows_ = 0;
    std::uint8_t cols_ = 0;
};

}  // namespace subdual
