#include "negacode/linalg.hpp"

#include <algorithm>

#include "negacode/error.hpp"

namespace negacode {

namespace {

std::size_t pivot_of(const Word& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!row[i].is_zero()) return i;
    return row.size();
}

}  // namespace

std::size_t rref(Matrix& m) {
    if (m.empty()) return 0;
    std::size_t width = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        FieldElem piv = inv(m[rank][col]);
        for (auto& v : m[rank]) v *= piv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            FieldElem f = m[r][col];
            for (std::size_t c = col; c < width; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    m.resize(rank == 0 ? 0 : rank);
    std::sort(m.begin(), m.end(),
              [](const Word& a, const Word& b) { return pivot_of(a) < pivot_of(b); });
    return rank;
}

std::size_t rank_of(Matrix m) { return rref(m); }

Matrix nullspace(const Matrix& m, std::size_t width, const FieldCtx* f) {
    Matrix r = m;
    std::size_t rank = rref(r);
    std::vector<std::int64_t> pivot_row(width, -1);
    for (std::size_t i = 0; i < rank; ++i) pivot_row[pivot_of(r[i])] = static_cast<std::int64_t>(i);
    Matrix basis;
    for (std::size_t free_col = 0; free_col < width; ++free_col) {
        if (pivot_row[free_col] >= 0) continue;
        Word v(width, f->zero());
        v[free_col] = f->one();
        for (std::size_t col = 0; col < width; ++col) {
            if (pivot_row[col] < 0) continue;
            v[col] = -r[static_cast<std::size_t>(pivot_row[col])][free_col];
        }
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

FieldElem dot(const Word& a, const Word& b) {
    require(a.size() == b.size() && !a.empty(), Errc::LengthMismatch, "dot of unequal words");
    FieldElem acc = a[0].ctx()->zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool in_rowspace(const Matrix& rref_rows, Word w) {
    for (const auto& row : rref_rows) {
        std::size_t p = pivot_of(row);
        if (p == row.size()) continue;
        if (!w[p].is_zero()) {
            FieldElem f = w[p];
            for (std::size_t c = p; c < w.size(); ++c) w[c] -= f * row[c];
        }
    }
    return std::all_of(w.begin(), w.end(), [](const FieldElem& c) { return c.is_zero(); });
}

std::size_t word_weight(const Word& w) {
    std::size_t n = 0;
    for (const auto& c : w) n += !c.is_zero();
    return n;
}

}  // namespace negacode
