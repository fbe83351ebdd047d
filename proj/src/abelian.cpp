#include "spherec/abelian.hpp"

#include "spherec/errors.hpp"

#include <algorithm>
#include <utility>

namespace spherec {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
    if (cols_ != other.rows())
        throw InternalError("matrix product shape mismatch");
    IntegerMatrix out(rows_, other.cols());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols(); ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

Int IntegerMatrix::determinant() const {
    if (rows_ != cols_)
        throw InternalError("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0)
        return 1;

    // Bareiss fraction-free elimination with row pivoting.
    IntegerMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m.at(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

struct SnfWork {
    IntegerMatrix a;     // being diagonalized in place
    IntegerMatrix left;  // accumulates row operations
    IntegerMatrix right; // accumulates column operations

    void swapRows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < left.cols(); ++c)
            std::swap(left.at(i, c), left.at(j, c));
    }

    void swapCols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < right.rows(); ++r)
            std::swap(right.at(r, i), right.at(r, j));
    }

    void addRow(std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.at(dst, c) += factor * a.at(src, c);
        for (std::size_t c = 0; c < left.cols(); ++c)
            left.at(dst, c) += factor * left.at(src, c);
    }

    void addCol(std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            a.at(r, dst) += factor * a.at(r, src);
        for (std::size_t r = 0; r < right.rows(); ++r)
            right.at(r, dst) += factor * right.at(r, src);
    }

    void negateRow(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < left.cols(); ++c)
            left.at(i, c) = -left.at(i, c);
    }

    // Minimal |nonzero| in the block with top-left (s,s); ties by lowest row
    // then lowest column. Returns false if the block is zero.
    bool findPivot(std::size_t s, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = s; i < a.rows(); ++i)
            for (std::size_t j = s; j < a.cols(); ++j) {
                const Int& v = a.at(i, j);
                if (v == 0)
                    continue;
                Int av = abs(v);
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

} // namespace

SmithForm smithNormalForm(const IntegerMatrix& input) {
    SnfWork w{input, IntegerMatrix::identity(input.rows()),
              IntegerMatrix::identity(input.cols())};

    std::size_t bound = std::min(input.rows(), input.cols());
    std::size_t s = 0;
    while (s < bound) {
        std::size_t pi = s, pj = s;
        if (!w.findPivot(s, pi, pj))
            break;
        w.swapRows(s, pi);
        w.swapCols(s, pj);
        if (w.a.at(s, s) < 0)
            w.negateRow(s);

        // Euclidean sweeps: reduce column s and row s against the pivot,
        // re-picking a smaller pivot until both are clear.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = s + 1; i < w.a.rows(); ++i) {
                if (w.a.at(i, s) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, s).get_mpz_t(),
                           w.a.at(s, s).get_mpz_t());
                w.addRow(i, s, -q);
                if (w.a.at(i, s) != 0)
                    clean = false;
            }
            for (std::size_t j = s + 1; j < w.a.cols(); ++j) {
                if (w.a.at(s, j) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(s, j).get_mpz_t(),
                           w.a.at(s, s).get_mpz_t());
                w.addCol(j, s, -q);
                if (w.a.at(s, j) != 0)
                    clean = false;
            }
            if (!clean) {
                std::size_t qi = s, qj = s;
                w.findPivot(s, qi, qj);
                w.swapRows(s, qi);
                w.swapCols(s, qj);
                if (w.a.at(s, s) < 0)
                    w.negateRow(s);
            }
        }

        // Divisibility fix-up: fold any non-multiple from the trailing block
        // into row s and redo the elimination at s.
        bool redo = false;
        for (std::size_t i = s + 1; i < w.a.rows() && !redo; ++i)
            for (std::size_t j = s + 1; j < w.a.cols() && !redo; ++j)
                if (w.a.at(i, j) % w.a.at(s, s) != 0) {
                    w.addRow(s, i, 1);
                    redo = true;
                }
        if (!redo)
            ++s;
    }

    SmithForm f;
    f.rank = s;
    f.diagonal.reserve(s);
    for (std::size_t i = 0; i < s; ++i)
        f.diagonal.push_back(w.a.at(i, i));
    f.left = std::move(w.left);
    f.right = std::move(w.right);
    return f;
}

IntegerMatrix relationMatrix(const GroupPresentation& p) {
    IntegerMatrix m(p.generatorCount(), p.relatorCount());
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (const Letter& l : p.relators[j].letters())
            m.at(l.generator, j) += l.sign;
    return m;
}

AbelianizationResult abelianization(const GroupPresentation& p) {
    SmithForm snf = smithNormalForm(relationMatrix(p));
    AbelianizationResult r;
    r.freeRank = p.generatorCount() - snf.rank;
    for (const Int& d : snf.diagonal)
        if (d > 1)
            r.torsion.push_back(d);
    r.isTrivial = r.freeRank == 0 && r.torsion.empty();
    return r;
}

} // namespace spherec
