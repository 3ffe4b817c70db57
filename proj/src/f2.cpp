#include "vbs/f2.hpp"

#include <algorithm>

namespace vbs {

namespace {

using Word = std::uint64_t;
constexpr std::size_t kBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kBits - 1) / kBits; }

}  // namespace

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back(static_cast<std::uint32_t>(i));
    return m;
}

std::size_t F2Matrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
    const auto& row = rows_.at(r);
    return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(c));
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (get(r, c) != value) toggle(r, c);
}

void F2Matrix::toggle(std::size_t r, std::size_t c) {
    if (c >= cols_) throw std::out_of_range("F2Matrix column out of range");
    auto& row = rows_.at(r);
    auto key = static_cast<std::uint32_t>(c);
    auto it = std::lower_bound(row.begin(), row.end(), key);
    if (it != row.end() && *it == key)
        row.erase(it);
    else
        row.insert(it, key);
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("F2Matrix dimension mismatch");
    F2Matrix c(a.rows(), b.cols());
    std::vector<Word> acc(words_for(b.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (auto k : a.row(i))
            for (auto j : b.row(k)) acc[j / kBits] ^= Word{1} << (j % kBits);
        for (std::size_t w = 0; w < acc.size(); ++w)
            for (Word bits = acc[w]; bits; bits &= bits - 1)
                c.toggle(i, w * kBits + static_cast<std::size_t>(__builtin_ctzll(bits)));
    }
    return c;
}

std::size_t f2_rank(const F2Matrix& m) {
    const std::size_t words = words_for(m.cols());
    std::vector<std::vector<Word>> rows(m.rows(), std::vector<Word>(words, 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto j : m.row(i)) rows[i][j / kBits] |= Word{1} << (j % kBits);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
        const std::size_t w = col / kBits;
        const Word bit = Word{1} << (col % kBits);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i)
            if (rows[i][w] & bit)
                for (std::size_t k = w; k < words; ++k) rows[i][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

std::size_t homology_dim(const ChainComplexF2& c) {
    if (c.boundary.rows() != c.generators.size() || c.boundary.cols() != c.generators.size())
        throw std::invalid_argument("boundary matrix does not match the generator list");
    if (!c.squares_to_zero()) throw NotAChainComplex("boundary does not square to zero");
    return c.generators.size() - 2 * f2_rank(c.boundary);
}

}  // namespace vbs
