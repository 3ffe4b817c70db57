#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vbs/multiloop.hpp"

namespace vbs {

// Sparse row-major matrix over the two-element field.  Each row keeps its
// nonzero columns sorted.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    static F2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::uint32_t>& row(std::size_t r) const { return rows_[r]; }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void toggle(std::size_t r, std::size_t c);

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;
};

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b);

// Gaussian elimination on bit-packed rows, pivot columns in increasing order.
std::size_t f2_rank(const F2Matrix& m);

struct NotAChainComplex : std::logic_error {
    using std::logic_error::logic_error;
};

// boundary(i, j) is the coefficient of generator i in the boundary of
// generator j.
struct ChainComplexF2 {
    std::vector<MultiLoop> generators;
    F2Matrix boundary;

    bool squares_to_zero() const { return multiply(boundary, boundary).is_zero(); }
};

// generators - 2 * rank, after checking that the boundary squares to zero.
std::size_t homology_dim(const ChainComplexF2& c);

}  // namespace vbs
