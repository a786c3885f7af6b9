#include "dense.hpp"

#include <utility>

namespace oracle {

Dense zeros(std::size_t rows, std::size_t cols) { return Dense(rows, std::vector<Q>(cols, Q(0))); }

Dense to_dense(const weakore::Matrix& m) {
    Dense d = zeros(m.rows(), m.cols());
    for (const auto& t : m.entries()) d[t.row][t.col] = t.value.rational();
    return d;
}

std::size_t rank(Dense m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

long Groupoid::product(std::size_t a, std::size_t b) const {
    const std::size_t ga = a / (n * n), ia = (a / n) % n, ja = a % n;
    const std::size_t gb = b / (n * n), ib = (b / n) % n, jb = b % n;
    if (ja != ib) return -1;
    return static_cast<long>(index((ga + gb) % m, ia, jb));
}

Dense groupoid_coderivation_system(const Groupoid& G, const std::vector<Q>& g, const std::vector<Q>& h) {
    // For δ = E_rc (δ(b_c) = b_r): Δδ(b_k) − Σ over Δ(b_k) = b_k⊗b_k of g b_k ⊗ δ(b_k) + δ(b_k) ⊗ b_k h.
    const std::size_t d = G.dim(), d2 = d * d;
    Dense sys = zeros(d * d2, d2);
    auto mul_left = [&](const std::vector<Q>& x, std::size_t b) {
        std::vector<Q> out(d, Q(0));
        for (std::size_t a = 0; a < d; ++a)
            if (x[a] != 0)
                if (long p = G.product(a, b); p >= 0) out[p] += x[a];
        return out;
    };
    auto mul_right = [&](std::size_t b, const std::vector<Q>& x) {
        std::vector<Q> out(d, Q(0));
        for (std::size_t a = 0; a < d; ++a)
            if (x[a] != 0)
                if (long p = G.product(b, a); p >= 0) out[p] += x[a];
        return out;
    };
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) {
            const std::size_t col = c * d + r;
            // Δ(δ(b_c)) = b_r⊗b_r, placed at k = c.
            sys[c * d2 + r * d + r][col] += 1;
            // −(g b_c ⊗ b_r + b_r ⊗ b_c h), also at k = c.
            const auto gb = mul_left(g, c);
            const auto bh = mul_right(c, h);
            for (std::size_t i = 0; i < d; ++i) {
                if (gb[i] != 0) sys[c * d2 + i * d + r][col] -= gb[i];
                if (bh[i] != 0) sys[c * d2 + r * d + i][col] -= bh[i];
            }
        }
    return sys;
}

Dense groupoid_alpha_system(const Groupoid& G, const std::vector<Q>& chi) {
    const std::size_t d = G.dim();
    Dense sys;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            std::vector<Q> row(d, Q(0));
            if (long p = G.product(a, b); p >= 0) row[p] += 1;
            row[a] -= 1;  // ε(b) = 1 for every basis element
            row[b] -= chi[a];
            sys.push_back(std::move(row));
        }
    for (std::size_t i = 0; i < G.n; ++i) {
        std::vector<Q> row(d, Q(0));
        row[G.index(0, i, i)] = 1;
        sys.push_back(std::move(row));
    }
    return sys;
}

std::size_t partial_injections_nonempty(std::size_t n) {
    // Σ_k C(n,k)^2 k!
    std::size_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        std::size_t binom = 1, fact = 1;
        for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
        for (std::size_t i = 2; i <= k; ++i) fact *= i;
        total += binom * binom * fact;
    }
    return total - 1;
}

}  // namespace oracle
