#pragma once

// Cellular chain complex of the associated graph over Q: 0-cells are the
// vertices, 1-cells the solid edges, 2-cells the closed faces (E-points).
// Open faces and angles contribute no cells.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zap/zgraph.hpp"

namespace zap {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool is_zero() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on GMP integers.
std::size_t exact_rank(const IntMatrix& m);

struct ChainComplex {
    IntMatrix d1;  // e x v: row (u,v) has -1 at u, +1 at v
    IntMatrix d2;  // f x e: one row per E-point, +-1 by traversal direction
};

/// Requires every E-point of `g` to be a well-formed cycle (throws DomainError otherwise).
ChainComplex chain_complex(const ZappaticGraph& g);

struct BettiVector {
    std::int64_t b0 = 0;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;

    std::int64_t euler() const { return b0 - b1 + b2; }
    bool operator==(const BettiVector&) const = default;
};

struct HomologyResult {
    BettiVector betti;
    std::size_t rank_d1 = 0;
    std::size_t rank_d2 = 0;
    std::size_t cells0 = 0;
    std::size_t cells1 = 0;
    std::size_t cells2 = 0;
};

HomologyResult homology(const ZappaticGraph& g);
BettiVector betti(const ZappaticGraph& g);

}  // namespace zap
