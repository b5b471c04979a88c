#include "zap/homology.hpp"

#include <gmpxx.h>

#include <utility>

#include "zap/errors.hpp"

namespace zap {

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DomainError("matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (auto x : data_)
        if (x != 0) return false;
    return true;
}

std::size_t exact_rank(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m(i, j));

    // Bareiss: after step k every entry below the pivot row is a (k+1)-minor,
    // so the division by the previous pivot is exact.
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const mpz_class& p = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const mpz_class lead = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = p * a[i][j] - lead * a[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

ChainComplex chain_complex(const ZappaticGraph& g) {
    ChainComplex cc;
    const std::size_t v = g.vertex_count(), e = g.edge_count();
    cc.d1 = IntMatrix(e, v);
    for (EdgeId id = 0; id < e; ++id) {
        const auto& ed = g.edges[id];
        if (ed.u >= v || ed.v >= v || ed.u == ed.v) throw DomainError("edge " + std::to_string(id) + " is not a proper edge");
        cc.d1(id, ed.u) -= 1;
        cc.d1(id, ed.v) += 1;
    }
    std::vector<const SingularPoint*> faces;
    for (const auto& p : g.points)
        if (p.kind == PointKind::E) faces.push_back(&p);
    cc.d2 = IntMatrix(faces.size(), e);
    for (std::size_t row = 0; row < faces.size(); ++row) {
        const auto& face = *faces[row];
        const auto shape = analyze_point(g, face);
        if (!shape.ok) throw DomainError("E-point is not a cycle: " + shape.error);
        const std::size_t n = face.edges.size();
        for (std::size_t i = 0; i < n; ++i) {
            const VertexId from = shape.vertices[(i + n - 1) % n];
            const VertexId to = shape.vertices[i];
            const auto& ed = g.edges[face.edges[i]];
            cc.d2(row, face.edges[i]) = (ed.u == from && ed.v == to) ? 1 : -1;
        }
    }
    return cc;
}

HomologyResult homology(const ZappaticGraph& g) {
    const auto cc = chain_complex(g);
    HomologyResult h;
    h.cells0 = g.vertex_count();
    h.cells1 = g.edge_count();
    h.cells2 = cc.d2.rows();
    h.rank_d1 = exact_rank(cc.d1);
    h.rank_d2 = exact_rank(cc.d2);
    auto i = [](std::size_t x) { return static_cast<std::int64_t>(x); };
    h.betti.b0 = i(h.cells0) - i(h.rank_d1);
    h.betti.b1 = i(h.cells1) - i(h.rank_d1) - i(h.rank_d2);
    h.betti.b2 = i(h.cells2) - i(h.rank_d2);
    return h;
}

BettiVector betti(const ZappaticGraph& g) { return homology(g).betti; }

}  // namespace zap
