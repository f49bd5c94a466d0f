#pragma once

#include <cstdint>
#include <vector>

#include "negacode/field.hpp"

namespace negacode {

using Word = std::vector<FieldElem>;
using Matrix = std::vector<Word>;

// In-place reduced row echelon form; returns the rank. Zero rows are removed.
std::size_t rref(Matrix& m);

std::size_t rank_of(Matrix m);

// Basis (in RREF) of { v : m v^T = 0 } inside F^width.
Matrix nullspace(const Matrix& m, std::size_t width, const FieldCtx* f);

FieldElem dot(const Word& a, const Word& b);

// Reduce w against RREF rows; true iff the residual is zero.
bool in_rowspace(const Matrix& rref_rows, Word w);

std::size_t word_weight(const Word& w);

}  // namespace negacode
