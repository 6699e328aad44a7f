#ifndef TRISECT_MATRIX_HPP
#define TRISECT_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisect {

class OverflowError : public std::runtime_error {
public:
    OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

// Matrix entries are 128-bit: Smith reduction transforms routinely outgrow
// 64 bits even for small inputs. All arithmetic stays overflow-checked.
using MInt = __int128;

inline MInt checked_add(MInt a, MInt b) {
    MInt r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline MInt checked_sub(MInt a, MInt b) {
    MInt r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline MInt checked_mul(MInt a, MInt b) {
    MInt r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

std::string mint_to_string(MInt v);

/// Dense integer matrix with exact, overflow-checked arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    MInt& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    MInt at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IntMatrix multiplied(const IntMatrix& other) const;
    IntMatrix transposed() const;
    bool operator==(const IntMatrix&) const = default;

    /// Exact determinant (square matrices) via fraction-free elimination.
    /// Throws OverflowError when intermediates leave 128-bit range.
    MInt determinant() const;

    /// Exact test |det| == 1, via modular determinants over enough primes to
    /// cover the Hadamard bound; never overflows.
    bool is_unimodular() const;

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<MInt> a_;
};

/// Exact equality test A*B*C == D via modular residues over enough primes to
/// cover the entry bound; immune to intermediate overflow.
bool triple_product_equals(const IntMatrix& A, const IntMatrix& B, const IntMatrix& C,
                           const IntMatrix& D);

/// Smith normal form U * M * V = D with unimodular U, V and a diagonal
/// divisibility chain d1 | d2 | ... (zeros last, entries non-negative).
struct SNFResult {
    IntMatrix U, V, D;
    std::vector<long long> diagonal; // length min(rows, cols)
    int rank = 0;                    // number of nonzero diagonal entries

    int zero_count() const { return static_cast<int>(diagonal.size()) - rank; }
};

SNFResult smith_normal_form(const IntMatrix& M);

} // namespace trisect

#endif
