#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace torfacet {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Sparse triplet form for the {-1,0,+1} differentials produced by the
/// complex builders; converted to a backend representation on demand.
struct SignMatrix {
    long rows = 0;
    long cols = 0;
    struct Entry {
        long row;
        long col;
        int sign;
    };
    std::vector<Entry> entries;

    void add(long r, long c, int s) { entries.push_back({r, c, s}); }
    long long nnz() const { return static_cast<long long>(entries.size()); }
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static IntMatrix from_sign(const SignMatrix& s);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Int& at(long r, long c) { return a_[r * cols_ + c]; }
    const Int& at(long r, long c) const { return a_[r * cols_ + c]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    static IntMatrix identity(long n);
    bool operator==(const IntMatrix&) const = default;

private:
    long rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SNFResult {
    std::vector<Int> diagonal;        ///< d1 | d2 | ..., nonnegative, zeros trailing
    std::optional<IntMatrix> left;    ///< U with U*A*V = diag
    std::optional<IntMatrix> right;   ///< V
    long rank() const;
    /// Diagonal entries > 1 (the torsion coefficients), in chain order.
    std::vector<Int> nontrivial_divisors() const;
};

/// Smith normal form over Z with exact arbitrary-precision arithmetic.
/// Pivoting on minimal absolute value to control coefficient growth. When
/// transforms are requested the pure dense elimination is used; otherwise
/// unit entries are eliminated first on a sparse representation and only the
/// dense core goes through full SNF (identical diagonals either way).
SNFResult smith_normal_form(const IntMatrix& A, bool with_transforms = false);
SNFResult smith_normal_form(const SignMatrix& A, bool with_transforms = false);

/// Rank over Q of an integer matrix (dense fraction-free Bareiss).
long rank_over_q_dense(const IntMatrix& A);
/// Rank over Q via sparse unit-pivot pre-reduction, then Bareiss on the core.
long rank_over_q_sparse(const SignMatrix& A);
/// Dispatches on size; both backends must agree (tested).
long rank_over_q(const SignMatrix& A);

/// Rank over F_p. Dense Gaussian elimination or sparse column reduction
/// depending on size; identical results (tested).
long rank_over_fp(const SignMatrix& A, std::int64_t p);
long rank_over_fp_dense(const SignMatrix& A, std::int64_t p);
long rank_over_fp_sparse(const SignMatrix& A, std::int64_t p);

// --- generic dense field matrices -----------------------------------------

/// Field context for F_p, p prime. Elements normalized to 0..p-1.
struct FpCtx {
    using value = std::int64_t;
    std::int64_t p;

    value from_int(long long n) const {
        value v = n % p;
        return v < 0 ? v + p : v;
    }
    value add(value a, value b) const { return (a + b) % p; }
    value sub(value a, value b) const { return (a - b + p) % p; }
    value mul(value a, value b) const { return static_cast<value>((__int128)a * b % p); }
    value neg(value a) const { return a == 0 ? 0 : p - a; }
    value inv(value a) const;
    value div(value a, value b) const { return mul(a, inv(b)); }
    bool is_zero(value a) const { return a == 0; }
};

/// Field context for Q.
struct RatCtx {
    using value = Rat;
    value from_int(long long n) const { return Rat(n); }
    value add(const value& a, const value& b) const { return a + b; }
    value sub(const value& a, const value& b) const { return a - b; }
    value mul(const value& a, const value& b) const { return a * b; }
    value neg(const value& a) const { return -a; }
    value inv(const value& a) const { return 1 / a; }
    value div(const value& a, const value& b) const { return a / b; }
    bool is_zero(const value& a) const { return a == 0; }
};

template <class Ctx>
struct Mat {
    using value = typename Ctx::value;
    long rows = 0, cols = 0;
    std::vector<value> a;

    Mat() = default;
    Mat(long r, long c) : rows(r), cols(c), a(r * c) {}
    value& at(long r, long c) { return a[r * cols + c]; }
    const value& at(long r, long c) const { return a[r * cols + c]; }

    static Mat from_sign(const SignMatrix& s, const Ctx& ctx) {
        Mat m(s.rows, s.cols);
        for (auto& e : s.entries) m.at(e.row, e.col) = ctx.from_int(e.sign);
        return m;
    }
};

/// Reduced row echelon form in place; returns the pivot column of each pivot
/// row. Column order may be permuted through `col_order` (used for the
/// alternative-pivot determinism checks); identity order when empty.
template <class Ctx>
std::vector<long> rref(const Ctx& ctx, Mat<Ctx>& M, const std::vector<long>& col_order = {});

template <class Ctx>
struct LinearSolution {
    std::optional<std::vector<typename Ctx::value>> solution;  ///< first echelon solution
    std::vector<std::vector<typename Ctx::value>> kernel;      ///< basis of ker A
};

/// Solves A x = b over the field; also returns a kernel basis. Inconsistent
/// systems yield an empty solution, not an error. Deterministic: free
/// variables of the particular solution are set to zero in echelon order.
template <class Ctx>
LinearSolution<Ctx> solve_linear(const Ctx& ctx, const Mat<Ctx>& A,
                                 const std::vector<typename Ctx::value>& b,
                                 const std::vector<long>& col_order = {});

bool is_prime(std::int64_t p);

}  // namespace torfacet
