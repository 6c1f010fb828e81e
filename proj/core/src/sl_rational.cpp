#include "latorus/sl_rational.hpp"

namespace latorus {

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix m(size_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.size_ != b.size_) throw ShapeMismatch("rational matrix: size mismatch");
    RationalMatrix m(a.size_);
    for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
    return m;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return a + (-b); }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.size_ != b.size_) throw ShapeMismatch("rational matrix: size mismatch");
    RationalMatrix m(a.size_);
    for (int i = 1; i <= a.size_; ++i)
        for (int k = 1; k <= a.size_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 1; j <= a.size_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix m(size_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * c;
    return m;
}

RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

ChevalleyBasis::ChevalleyBasis(int ell) : ell_(ell), system_(ell) {}

RationalMatrix ChevalleyBasis::e(const Root& alpha) const {
    if (alpha.is_zero()) throw AlgebraError("chevalley basis: e of zero root");
    return RationalMatrix::unit(ell_ + 1, alpha.i(), alpha.j());
}

RationalMatrix ChevalleyBasis::h(int k) const {
    if (k < 1 || k > ell_) throw AlgebraError("chevalley basis: h index out of range");
    RationalMatrix m(ell_ + 1);
    m.at(k, k) = Rational(1);
    m.at(k + 1, k + 1) = Rational(-1);
    return m;
}

RationalMatrix ChevalleyBasis::h_of(const Root& alpha) const {
    if (alpha.is_zero()) throw AlgebraError("chevalley basis: coroot of zero root");
    RationalMatrix m(ell_ + 1);
    m.at(alpha.i(), alpha.i()) = Rational(1);
    m.at(alpha.j(), alpha.j()) = Rational(-1);
    return m;
}

std::vector<RationalMatrix> ChevalleyBasis::elements() const {
    std::vector<RationalMatrix> out;
    for (const Root& r : system_.nonzero_roots()) out.push_back(e(r));
    for (int k = 1; k <= ell_; ++k) out.push_back(h(k));
    return out;
}

int rational_row_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    int rank = 0;
    size_t pivot_col = 0;
    for (size_t r = 0; r < rows.size() && pivot_col < cols; ++pivot_col) {
        size_t pr = r;
        while (pr < rows.size() && rows[pr][pivot_col].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        const Rational inv = rows[r][pivot_col].inverse();
        for (size_t c = pivot_col; c < cols; ++c) rows[r][c] *= inv;
        for (size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == r || rows[rr][pivot_col].is_zero()) continue;
            const Rational f = rows[rr][pivot_col];
            for (size_t c = pivot_col; c < cols; ++c) rows[rr][c] -= f * rows[r][c];
        }
        ++rank;
        ++r;
    }
    return rank;
}

}  // namespace latorus
