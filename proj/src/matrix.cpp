#include "trisect/matrix.hpp"

#include "trisect/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace trisect {

namespace {
MInt mint_abs(MInt v) { return v < 0 ? -v : v; }
} // namespace

std::string mint_to_string(MInt v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
        s += char('0' + (int)(v % 10));
        v /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InternalError("matrix shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            MInt v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) = checked_add(out.at(i, j), checked_mul(v, other.at(k, j)));
        }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

MInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw InternalError("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; exact divisions throughout.
    IntMatrix m = *this;
    MInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                MInt num = checked_sub(checked_mul(m.at(i, j), m.at(k, k)),
                                       checked_mul(m.at(i, k), m.at(k, j)));
                m.at(i, j) = num / prev;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

long long det_mod_p(const IntMatrix& M, long long p) {
    int n = M.rows();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = (long long)(((M.at(i, j) % p) + p) % p);
    auto mulmod = [&](long long x, long long y) { return (long long)((__int128)x * y % p); };
    auto powmod = [&](long long b, long long e) {
        long long r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    long long det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = p - det;
        }
        det = mulmod(det, a[k][k]);
        long long inv = powmod(a[k][k], p - 2);
        for (int i = k + 1; i < n; ++i) {
            long long f = mulmod(a[i][k], inv);
            if (f == 0) continue;
            for (int j = k; j < n; ++j) a[i][j] = (a[i][j] - mulmod(f, a[k][j]) % p + p) % p;
        }
    }
    return det % p;
}

} // namespace

bool IntMatrix::is_unimodular() const {
    if (rows_ != cols_) return false;
    int n = rows_;
    if (n == 0) return true;
    MInt maxabs = 1;
    for (MInt v : a_) maxabs = std::max(maxabs, v < 0 ? -v : v);
    // |det| <= (sqrt(n) * maxabs)^n; primes must cover twice that.
    double bound_log2 = n * (std::log2((double)(long double)maxabs) + 0.5 * std::log2((double)n)) + 2.0;
    static const long long primes[] = {
        2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
        2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
        2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
        2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
        2147483053, 2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
        2147482937, 2147482921, 2147482877, 2147482873, 2147482867, 2147482859,
        2147482819, 2147482817, 2147482811, 2147482801, 2147482763, 2147482739,
        2147482697, 2147482693, 2147482681, 2147482663, 2147482661, 2147482621,
        2147482591, 2147482583, 2147482577, 2147482507, 2147482501, 2147482481,
        2147482417, 2147482409, 2147482367, 2147482361, 2147482349, 2147482343,
        2147482327, 2147482291, 2147482273, 2147482237};
    double covered = 0.0;
    int sign = 0; // +1, -1, or 0 = unknown yet
    for (long long p : primes) {
        long long d = det_mod_p(*this, p);
        int s;
        if (d == 1)
            s = 1;
        else if (d == p - 1)
            s = -1;
        else
            return false;
        if (sign == 0) sign = s;
        if (s != sign) return false;
        covered += std::log2((double)p);
        if (covered >= bound_log2) return true;
    }
    throw InternalError("unimodularity check ran out of primes");
}

bool triple_product_equals(const IntMatrix& A, const IntMatrix& B, const IntMatrix& C,
                           const IntMatrix& D) {
    if (A.cols() != B.rows() || B.cols() != C.rows()) throw InternalError("shape mismatch");
    if (D.rows() != A.rows() || D.cols() != C.cols()) return false;
    auto maxabs = [](const IntMatrix& M) {
        MInt mx = 1;
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) mx = std::max(mx, M.at(i, j) < 0 ? -M.at(i, j) : M.at(i, j));
        return mx;
    };
    double bound_log2 = std::log2((double)(long double)maxabs(A)) +
                        std::log2((double)(long double)maxabs(B)) +
                        std::log2((double)(long double)maxabs(C)) +
                        std::log2((double)std::max(1, A.cols())) +
                        std::log2((double)std::max(1, B.cols())) + 1.0;
    bound_log2 = std::max(bound_log2, std::log2((double)(long double)maxabs(D)));
    bound_log2 += 2.0;
    static const long long primes[] = {
        2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
        2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
        2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
        2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
        2147483053, 2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
        2147482937, 2147482921, 2147482877, 2147482873, 2147482867, 2147482859,
        2147482819, 2147482817, 2147482811, 2147482801, 2147482763, 2147482739,
        2147482697, 2147482693, 2147482681, 2147482663, 2147482661, 2147482621,
        2147482591, 2147482583, 2147482577, 2147482507, 2147482501, 2147482481,
        2147482417, 2147482409, 2147482367, 2147482361, 2147482349, 2147482343,
        2147482327, 2147482291, 2147482273, 2147482237};
    auto mod_of = [](const IntMatrix& M, long long p) {
        std::vector<std::vector<long long>> a(M.rows(), std::vector<long long>(M.cols()));
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) a[i][j] = (long long)(((M.at(i, j) % p) + p) % p);
        return a;
    };
    double covered = 0.0;
    for (long long p : primes) {
        auto a = mod_of(A, p), b = mod_of(B, p), c = mod_of(C, p), d = mod_of(D, p);
        // (a*b) mod p
        std::vector<std::vector<long long>> ab(A.rows(), std::vector<long long>(B.cols(), 0));
        for (int i = 0; i < A.rows(); ++i)
            for (int k = 0; k < B.rows(); ++k) {
                if (a[i][k] == 0) continue;
                for (int j = 0; j < B.cols(); ++j)
                    ab[i][j] = (long long)((ab[i][j] + (__int128)a[i][k] * b[k][j]) % p);
            }
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < C.cols(); ++j) {
                __int128 acc = 0;
                for (int k = 0; k < C.rows(); ++k) acc += (__int128)ab[i][k] * c[k][j] % p;
                if ((long long)(acc % p) != d[i][j] % p) return false;
            }
        covered += std::log2((double)p);
        if (covered >= bound_log2) return true;
    }
    throw InternalError("triple product check ran out of primes");
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) out << mint_to_string(at(i, j)) << (j + 1 < cols_ ? " " : "");
        out << (i + 1 < rows_ ? ";\n" : "]");
    }
    return out.str();
}

namespace {

struct SNFWork {
    IntMatrix M, U, V;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
        for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
        for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    void add_row(int dst, int src, MInt f) { // row dst += f * row src
        for (int j = 0; j < M.cols(); ++j)
            M.at(dst, j) = checked_add(M.at(dst, j), checked_mul(f, M.at(src, j)));
        for (int j = 0; j < U.cols(); ++j)
            U.at(dst, j) = checked_add(U.at(dst, j), checked_mul(f, U.at(src, j)));
    }
    void add_col(int dst, int src, MInt f) {
        for (int i = 0; i < M.rows(); ++i)
            M.at(i, dst) = checked_add(M.at(i, dst), checked_mul(f, M.at(i, src)));
        for (int i = 0; i < V.rows(); ++i)
            V.at(i, dst) = checked_add(V.at(i, dst), checked_mul(f, V.at(i, src)));
    }
    void negate_row(int r) {
        for (int j = 0; j < M.cols(); ++j) M.at(r, j) = checked_mul(M.at(r, j), -1);
        for (int j = 0; j < U.cols(); ++j) U.at(r, j) = checked_mul(U.at(r, j), -1);
    }
};

} // namespace

SNFResult smith_normal_form(const IntMatrix& M) {
    int m = M.rows(), n = M.cols();
    SNFWork w{M, IntMatrix::identity(m), IntMatrix::identity(n)};
    int dim = std::min(m, n);

    for (int k = 0; k < dim; ++k) {
        while (true) {
            // The globally smallest nonzero entry of the block becomes the
            // pivot each round; quotients stay small and remainders strictly
            // shrink the minimum, so the loop terminates.
            int pi = -1, pj = -1;
            for (int i = k; i < m; ++i)
                for (int j = k; j < n; ++j)
                    if (w.M.at(i, j) != 0 &&
                        (pi < 0 || mint_abs(w.M.at(i, j)) < mint_abs(w.M.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break; // remaining block is zero
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            // One mod-pivot sweep over column k and row k.
            for (int i = k + 1; i < m; ++i)
                if (w.M.at(i, k) != 0) w.add_row(i, k, -(w.M.at(i, k) / w.M.at(k, k)));
            for (int j = k + 1; j < n; ++j)
                if (w.M.at(k, j) != 0) w.add_col(j, k, -(w.M.at(k, j) / w.M.at(k, k)));

            bool clear = true;
            for (int i = k + 1; i < m; ++i)
                if (w.M.at(i, k) != 0) clear = false;
            for (int j = k + 1; j < n; ++j)
                if (w.M.at(k, j) != 0) clear = false;
            if (!clear) continue;

            // Divisibility: fold one offending row in and redo; the pivot then
            // shrinks to a proper divisor of its old value.
            int fold = -1;
            for (int i = k + 1; i < m && fold < 0; ++i)
                for (int j = k + 1; j < n && fold < 0; ++j)
                    if (w.M.at(i, j) % w.M.at(k, k) != 0) fold = i;
            if (fold < 0) break;
            w.add_row(k, fold, 1);
        }
        if (w.M.at(k, k) < 0) w.negate_row(k);
    }

    SNFResult res;
    res.U = w.U;
    res.V = w.V;
    res.D = w.M;
    res.diagonal.resize(dim);
    for (int k = 0; k < dim; ++k) {
        MInt d = w.M.at(k, k);
        if (d > (MInt)INT64_MAX || d < -(MInt)INT64_MAX)
            throw OverflowError(); // invariant factor outside 64-bit range
        res.diagonal[k] = (long long)d;
    }
    for (long long d : res.diagonal)
        if (d != 0) res.rank++;

    // Verification: U*M*V = D, both transforms unimodular, chain divisibility.
    if (!triple_product_equals(w.U, M, w.V, w.M))
        throw InternalError("SNF verification failed: U*M*V != D");
    if (!w.U.is_unimodular() || !w.V.is_unimodular())
        throw InternalError("SNF verification failed: transforms not unimodular");
    for (int k = 0; k + 1 < dim; ++k) {
        long long a = res.diagonal[k], b = res.diagonal[k + 1];
        if (a == 0 && b != 0) throw InternalError("SNF: zero before nonzero");
        if (a != 0 && b % a != 0) throw InternalError("SNF: divisibility chain broken");
    }
    return res;
}

} // namespace trisect
