#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/contract.hpp"

namespace sigma {

/// Fixed-length vector over GF(2), packed 64 coordinates per word.
/// Coordinate k lives in word k / 64 at bit k % 64; bits past size() are
/// kept at zero so word-level comparisons and popcounts are exact.
class BitVector {
  public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t len);

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_bits(std::span<const int> bits);
    /// Parses a string of '0'/'1' characters, coordinate 0 first.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t len, std::size_t index);
    static BitVector ones(std::size_t len);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t k) const {
        require(k < len_, "BitVector::get: index out of range");
        return ((words_[k / kWordBits] >> (k % kWordBits)) & 1U) != 0;
    }
    void set(std::size_t k, bool value = true) {
        require(k < len_, "BitVector::set: index out of range");
        const Word mask = Word{1} << (k % kWordBits);
        if (value) {
            words_[k / kWordBits] |= mask;
        } else {
            words_[k / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t k);
    bool operator[](std::size_t k) const { return get(k); }

    std::size_t weight() const;
    bool parity() const { return (weight() & 1U) != 0; }
    bool is_zero() const;
    /// Standard bilinear form sum_k a_k b_k over GF(2).
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    /// Adds `other` into coordinates offset .. offset + other.size() - 1.
    BitVector& xor_at(const BitVector& other, std::size_t offset);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator+(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& other) const = default;

    std::span<const Word> words() const { return words_; }

    /// "0110..." with coordinate 0 first.
    std::string to_string() const;

  private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

/// Dense matrix over GF(2) stored as packed rows.
///
/// The `symmetric` flag is an assertion carried with the value: it can only
/// be set through mark_symmetric(), which verifies m[i][j] == m[j][i], and
/// it survives operations known to preserve symmetry (sum and Kronecker
/// product of flagged matrices, transpose).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Flagged symmetric when square.
    static BitMatrix zero(std::size_t rows, std::size_t cols);
    static BitMatrix from_rows(std::vector<BitVector> rows);
    static BitMatrix from_columns(std::span<const BitVector> columns, std::size_t rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool value = true);
    void flip(std::size_t i, std::size_t j);
    const BitVector& row(std::size_t i) const { return data_[i]; }
    BitVector column(std::size_t j) const;
    BitVector diagonal() const;

    bool is_symmetric() const;
    bool flagged_symmetric() const { return symmetric_; }
    /// Verifies symmetry and sets the flag; throws ContractError otherwise.
    BitMatrix& mark_symmetric();

    BitMatrix transpose() const;
    BitMatrix power(std::size_t exponent) const;

    BitMatrix& operator+=(const BitMatrix& other);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend BitVector operator*(const BitMatrix& a, const BitVector& v);
    friend BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);

    /// Entry equality; the symmetry flag is metadata and not compared.
    bool operator==(const BitMatrix& other) const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
    bool symmetric_ = false;
};

/// (a ⊗ b)[i * b.rows + k][j * b.cols + l] = a[i][j] * b[k][l].
BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);

/// Gauss-Jordan reduction of a matrix, keeping the row transform so that
/// many right-hand sides can be solved against one factorization.
///
/// Pivot rule: columns are scanned left to right; the pivot is the first
/// row at or below the current rank with a one in that column, swapped
/// into place. The reduced form is fully reduced (zeros above and below
/// each pivot), so solve() and kernel() outputs are deterministic.
class RowReduction {
  public:
    explicit RowReduction(const BitMatrix& m);

    std::size_t rank() const { return pivot_cols_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }

    /// Some x with m * x = b, free variables set to zero; nullopt if b is
    /// not in the column space.
    std::optional<BitVector> solve(const BitVector& b) const;
    bool consistent(const BitVector& b) const;

    /// Basis of {x : m * x = 0}: one vector per free column in increasing
    /// column order, that free variable set to one and the others to zero.
    std::vector<BitVector> kernel() const;

  private:
    BitVector transformed(const BitVector& b) const;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<BitVector> reduced_;
    std::vector<BitVector> transform_;
    std::vector<std::size_t> pivot_cols_;
};

std::size_t rank(const BitMatrix& m);
std::vector<BitVector> kernel_basis(const BitMatrix& m);
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

/// b ∈ Im m. For matrices flagged symmetric this is decided as
/// orthogonality to a kernel basis (Im m = (Ker m)^⊥ for self-adjoint m);
/// otherwise it falls back to solve().
bool in_image(const BitMatrix& m, const BitVector& b);
bool in_image_by_orthogonality(const std::vector<BitVector>& kernel, const BitVector& b);

/// Applies `map` to axis `axis` of a tensor laid out row-major over `dims`
/// (axis 0 slowest). The result is laid out over `dims` with
/// dims[axis] replaced by map.rows().
BitVector apply_on_axis(const BitVector& v, std::span<const std::size_t> dims, std::size_t axis,
                        const BitMatrix& map);

}  // namespace sigma
