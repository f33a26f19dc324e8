#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace hmcl {

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

struct SmithForm {
    // Nonzero diagonal entries d_1 | d_2 | ... | d_k, all positive.
    std::vector<mpz_class> invariant_factors;
    // cols - k: rank of the cokernel's free part when rows are relations.
    std::size_t free_rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

mpz_class determinant(const IntMatrix& m);

} // namespace hmcl
