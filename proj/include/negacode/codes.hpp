#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "negacode/linalg.hpp"
#include "negacode/ring.hpp"
#include "negacode/spectral.hpp"
#include "negacode/util.hpp"

namespace negacode {

/// A 2-quasi (nega)cyclic code of length 2n as a canonical RREF generator
/// matrix. Shift-stability is validated on construction.
struct QuasiCode {
    RingCtxPtr ctx;
    Matrix rows;  // RREF, width 2n
    std::optional<std::pair<RingElem, RingElem>> gen_pair;

    std::size_t dim() const { return rows.size(); }
    std::size_t length() const { return 2 * ctx->n(); }
    Rational rate() const { return Rational(static_cast<std::int64_t>(dim()),
                                            static_cast<std::int64_t>(length())); }
};

// Simultaneous (nega)cyclic shift of both halves of a length-2n word.
Word double_shift(const RingCtx* ctx, const Word& w);

bool is_shift_stable(const RingCtx* ctx, const Matrix& rref_rows);

// Row space of { x^i (a, b) }; dimension is computed, not asserted.
QuasiCode code_from_pair(const RingElem& a, const RingElem& b);

// Wrap externally produced rows (validates shift stability).
QuasiCode code_from_rows(RingCtxPtr ctx, Matrix rows);

QuasiCode dual_code(const QuasiCode& c);

bool is_self_dual(const QuasiCode& c);

struct WeightReport {
    std::size_t min_weight = 0;
    Rational relative;
    Rational rate;
    bool exhaustive = true;  // false: sampled upper bound only
    std::uint64_t enumerated = 0;
};

// Exhaustive when q^dim <= budget (Gray-walk message enumeration with
// incremental codeword updates); otherwise a sampled upper bound unless
// exhaustive mode was explicitly requested.
WeightReport min_weight(const QuasiCode& c, std::uint64_t budget,
                        bool require_exhaustive = false, std::uint64_t seed = 0);

// Whether C_{1,g} (g a unit) contains a nonzero word of weight <= w_max.
// Exact: every such word is f*(1,g) with 1 <= wt(f) <= w_max - 1.
bool pair_code_has_low_weight(const RingElem& g, std::size_t w_max,
                              std::uint64_t budget = 10'000'000);

// All q^dim codewords by message odometer (cap-guarded).
std::vector<Word> enumerate_codewords(const QuasiCode& c, std::uint64_t cap);

// q-ary entropy; exact domain check 0 <= delta <= 1 - 1/q, endpoint values
// by continuity.
double entropy_hq(const Rational& delta, std::uint64_t q);

struct BalancedBoundReport {
    std::size_t ideal_dim = 0;   // dim A
    std::size_t k = 0;           // dim (A x A)
    std::uint64_t low_count = 0; // |(A x A)^{<= delta}|
    double bound = 0.0;          // q^(k * h_q(delta))
    bool ok = false;
};

// Exhaustive check of the low-weight counting bound for A x A, where A is
// the direct sum of the chosen minimal ideals of the spectral decomposition.
BalancedBoundReport balanced_bound_check(const SpectralData& sd,
                                         const std::vector<std::size_t>& idem_indices,
                                         const Rational& delta, std::uint64_t cap);

}  // namespace negacode
