#include "sigma/gf2.hpp"

#include <bit>
#include <numeric>
#include <utility>

#include "sigma/contract.hpp"

namespace sigma {

namespace {

std::size_t words_for(std::size_t len) {
    return (len + BitVector::kWordBits - 1) / BitVector::kWordBits;
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    return from_bits(std::span<const int>(bits.begin(), bits.size()));
}

BitVector BitVector::from_bits(std::span<const int> bits) {
    BitVector v(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        require(bits[k] == 0 || bits[k] == 1, "BitVector::from_bits: entries must be 0 or 1");
        v.set(k, bits[k] == 1);
    }
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        require(bits[k] == '0' || bits[k] == '1', "BitVector::from_string: expected '0' or '1'");
        v.set(k, bits[k] == '1');
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
    BitVector v(len);
    v.set(index);
    return v;
}

BitVector BitVector::ones(std::size_t len) {
    BitVector v(len);
    for (auto& w : v.words_) {
        w = ~Word{0};
    }
    if (const auto tail = len % kWordBits; tail != 0) {
        v.words_.back() &= (Word{1} << tail) - 1;
    }
    return v;
}

void BitVector::flip(std::size_t k) {
    require(k < len_, "BitVector::flip: index out of range");
    words_[k / kWordBits] ^= Word{1} << (k % kWordBits);
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (const Word w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::is_zero() const {
    for (const Word w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    require(len_ == other.len_, "BitVector::dot: length mismatch");
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require(len_ == other.len_, "BitVector: length mismatch in addition");
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector& BitVector::xor_at(const BitVector& other, std::size_t offset) {
    require(offset + other.len_ <= len_, "BitVector::xor_at: range out of bounds");
    const std::size_t shift = offset % kWordBits;
    const std::size_t base = offset / kWordBits;
    for (std::size_t w = 0; w < other.words_.size(); ++w) {
        const Word src = other.words_[w];
        if (src == 0) {
            continue;
        }
        words_[base + w] ^= src << shift;
        if (shift != 0 && base + w + 1 < words_.size()) {
            words_[base + w + 1] ^= src >> (kWordBits - shift);
        }
    }
    return *this;
}

std::string BitVector::to_string() const {
    std::string out(len_, '0');
    for (std::size_t k = 0; k < len_; ++k) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::zero(std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    m.symmetric_ = rows == cols;
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.data_[i].set(i);
    }
    m.symmetric_ = true;
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        require(r.size() == m.cols_, "BitMatrix::from_rows: ragged rows");
    }
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> columns, std::size_t rows) {
    BitMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require(columns[j].size() == rows, "BitMatrix::from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            if (columns[j].get(i)) {
                m.data_[i].set(j);
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (const auto r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    return from_rows(std::move(parsed));
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
    require(i < rows_, "BitMatrix::set: row out of range");
    data_[i].set(j, value);
    symmetric_ = false;
}

void BitMatrix::flip(std::size_t i, std::size_t j) {
    require(i < rows_, "BitMatrix::flip: row out of range");
    data_[i].flip(j);
    symmetric_ = false;
}

BitVector BitMatrix::column(std::size_t j) const {
    require(j < cols_, "BitMatrix::column: index out of range");
    BitVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (data_[i].get(j)) {
            c.set(i);
        }
    }
    return c;
}

BitVector BitMatrix::diagonal() const {
    require(is_square(), "BitMatrix::diagonal: matrix is not square");
    BitVector d(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        d.set(i, data_[i].get(i));
    }
    return d;
}

bool BitMatrix::is_symmetric() const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (data_[i].get(j) != data_[j].get(i)) {
                return false;
            }
        }
    }
    return true;
}

BitMatrix& BitMatrix::mark_symmetric() {
    require(is_symmetric(), "BitMatrix::mark_symmetric: matrix is not symmetric");
    symmetric_ = true;
    return *this;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (data_[i].get(j)) {
                t.data_[j].set(i);
            }
        }
    }
    t.symmetric_ = symmetric_;
    return t;
}

BitMatrix BitMatrix::power(std::size_t exponent) const {
    require(is_square(), "BitMatrix::power: matrix is not square");
    BitMatrix result = identity(rows_);
    BitMatrix base = *this;
    while (exponent > 0) {
        if ((exponent & 1U) != 0) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    // (A^k)^T = (A^T)^k
    result.symmetric_ = symmetric_;
    return result;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "BitMatrix: shape mismatch in addition");
    for (std::size_t i = 0; i < rows_; ++i) {
        data_[i] ^= other.data_[i];
    }
    symmetric_ = symmetric_ && other.symmetric_;
    return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    require(a.cols_ == b.rows_, "BitMatrix: shape mismatch in product");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const BitVector& ar = a.data_[i];
        BitVector& acc = out.data_[i];
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (ar.get(j)) {
                acc ^= b.data_[j];
            }
        }
    }
    return out;
}

BitVector operator*(const BitMatrix& a, const BitVector& v) {
    require(a.cols_ == v.size(), "BitMatrix: shape mismatch in matrix-vector product");
    BitVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        if (a.data_[i].dot(v)) {
            out.set(i);
        }
    }
    return out;
}

bool BitMatrix::operator==(const BitMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string BitMatrix::to_string() const {
    std::string out;
    for (const auto& r : data_) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                out.data_[i * b.rows() + k].xor_at(b.data_[k], j * b.cols());
            }
        }
    }
    // (a ⊗ b)^T = a^T ⊗ b^T, so no re-check is needed.
    out.symmetric_ = a.symmetric_ && b.symmetric_;
    return out;
}

// ---------------------------------------------------------------------------
// RowReduction

RowReduction::RowReduction(const BitMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    reduced_.reserve(rows_);
    transform_.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        reduced_.push_back(m.row(i));
        transform_.push_back(BitVector::unit(rows_, i));
    }

    std::size_t next = 0;
    for (std::size_t col = 0; col < cols_ && next < rows_; ++col) {
        std::size_t pivot = next;
        while (pivot < rows_ && !reduced_[pivot].get(col)) {
            ++pivot;
        }
        if (pivot == rows_) {
            continue;
        }
        std::swap(reduced_[pivot], reduced_[next]);
        std::swap(transform_[pivot], transform_[next]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != next && reduced_[r].get(col)) {
                reduced_[r] ^= reduced_[next];
                transform_[r] ^= transform_[next];
            }
        }
        pivot_cols_.push_back(col);
        ++next;
    }
}

BitVector RowReduction::transformed(const BitVector& b) const {
    require(b.size() == rows_, "RowReduction: right-hand side length must equal row count");
    BitVector c(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (transform_[r].dot(b)) {
            c.set(r);
        }
    }
    return c;
}

bool RowReduction::consistent(const BitVector& b) const {
    const BitVector c = transformed(b);
    for (std::size_t r = rank(); r < rows_; ++r) {
        if (c.get(r)) {
            return false;
        }
    }
    return true;
}

std::optional<BitVector> RowReduction::solve(const BitVector& b) const {
    const BitVector c = transformed(b);
    for (std::size_t r = rank(); r < rows_; ++r) {
        if (c.get(r)) {
            return std::nullopt;
        }
    }
    BitVector x(cols_);
    for (std::size_t r = 0; r < rank(); ++r) {
        x.set(pivot_cols_[r], c.get(r));
    }
    return x;
}

std::vector<BitVector> RowReduction::kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (const auto c : pivot_cols_) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    basis.reserve(cols_ - rank());
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v = BitVector::unit(cols_, free);
        for (std::size_t r = 0; r < rank(); ++r) {
            if (reduced_[r].get(free)) {
                v.set(pivot_cols_[r]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const BitMatrix& m) { return RowReduction(m).rank(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) { return RowReduction(m).kernel(); }

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    require(b.size() == m.rows(), "solve: right-hand side length must equal row count");
    return RowReduction(m).solve(b);
}

bool in_image_by_orthogonality(const std::vector<BitVector>& kernel, const BitVector& b) {
    for (const auto& k : kernel) {
        if (k.dot(b)) {
            return false;
        }
    }
    return true;
}

bool in_image(const BitMatrix& m, const BitVector& b) {
    require(b.size() == m.rows(), "in_image: vector length must equal row count");
    if (m.flagged_symmetric()) {
        return in_image_by_orthogonality(kernel_basis(m), b);
    }
    return solve(m, b).has_value();
}

BitVector apply_on_axis(const BitVector& v, std::span<const std::size_t> dims, std::size_t axis,
                        const BitMatrix& map) {
    require(axis < dims.size(), "apply_on_axis: axis out of range");
    require(map.cols() == dims[axis], "apply_on_axis: map width must equal axis size");
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                              std::multiplies<>());
    require(v.size() == total, "apply_on_axis: vector length must equal product of dims");

    std::size_t outer = 1;
    for (std::size_t i = 0; i < axis; ++i) {
        outer *= dims[i];
    }
    std::size_t inner = 1;
    for (std::size_t i = axis + 1; i < dims.size(); ++i) {
        inner *= dims[i];
    }
    const std::size_t in_len = dims[axis];
    const std::size_t out_len = map.rows();

    BitVector out(outer * out_len * inner);
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t in = 0; in < inner; ++in) {
            for (std::size_t j = 0; j < in_len; ++j) {
                if (!v.get((o * in_len + j) * inner + in)) {
                    continue;
                }
                for (std::size_t i = 0; i < out_len; ++i) {
                    if (map.get(i, j)) {
                        out.flip((o * out_len + i) * inner + in);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace sigma
