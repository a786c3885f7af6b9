#include "weakore/coderivation.hpp"

#include <algorithm>

#include "weakore/grouplike.hpp"

namespace weakore {

std::optional<std::pair<std::size_t, std::size_t>> sigma_derivation_failure(const Algebra& a, const Matrix& sigma,
                                                                            const Matrix& delta) {
    const auto sc = sigma.columns();
    const auto dc = delta.columns();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector lhs = delta.apply(a.product(i, j));
            Vector rhs = a.multiply(dc[i], a.basis(j)) + a.multiply(sc[i], dc[j]);
            if (!(lhs == rhs)) return std::pair{i, j};
        }
    return std::nullopt;
}

bool is_sigma_derivation(const Algebra& a, const Matrix& sigma, const Matrix& delta) {
    if (sigma_derivation_failure(a, sigma, delta)) return false;
    // Leibniz at (1,1) gives δ(1) = δ(1) + σ(1)δ(1), so δ(1) = 0 once σ is unital.
    if (sigma.apply(a.one()) == a.one() && !delta.apply(a.one()).is_zero())
        throw InvariantViolation("sigma-derivation with delta(1) != 0");
    return true;
}

namespace {

// Σ c F(b_i)⊗G(b_j) over Δ(b_k) = Σ c b_i⊗b_j.
Vector apply_pair(const WeakBialgebra& wb, std::size_t k, const std::vector<Vector>& f, const std::vector<Vector>& g) {
    const std::size_t n = wb.dim();
    Accumulator acc(n * n);
    for (const auto& [p, c] : wb.coalgebra().coproduct(k).entries()) {
        const Vector& a = f[p / n];
        const Vector& b = g[p % n];
        if (a.is_zero() || b.is_zero()) continue;
        acc.add_scaled(tensor(a, b), c);
    }
    return acc.take();
}

}  // namespace

std::vector<std::size_t> coderivation_failures(const WeakBialgebra& wb, const Matrix& delta, const Vector& g,
                                               const Vector& h) {
    const std::size_t n = wb.dim();
    const auto dc = delta.columns();
    const auto lg = wb.algebra().left_multiplication(g).columns();
    const auto lh = wb.algebra().left_multiplication(h).columns();
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = wb.delta(dc[k]);
        Vector rhs = apply_pair(wb, k, lg, dc) + apply_pair(wb, k, dc, lh);
        if (!(lhs == rhs)) out.push_back(k);
    }
    return out;
}

bool is_coderivation(const WeakBialgebra& wb, const Matrix& delta, const Vector& g, const Vector& h) {
    return coderivation_failures(wb, delta, g, h).empty();
}

Matrix coderivation_constraint_matrix(const WeakBialgebra& wb, const Vector& g, const Vector& h) {
    const std::size_t n = wb.dim();
    const std::size_t n2 = n * n;
    const Algebra& A = wb.algebra();
    std::vector<Vector> gb, bh;
    for (std::size_t i = 0; i < n; ++i) {
        gb.push_back(A.multiply(g, A.basis(i)));
        bh.push_back(A.multiply(A.basis(i), h));
    }
    // Column (c, r) of the operator: δ = E_rc, i.e. δ(b_c) = b_r and δ vanishes on other basis elements.
    std::vector<Matrix::Triplet> t;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t col = c * n + r;
            const Vector br = A.basis(r);
            Accumulator acc(n * n2);
            for (const auto& [p, v] : wb.coalgebra().coproduct(r).entries()) acc.add(c * n2 + p, v);
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [p, v] : wb.coalgebra().coproduct(k).entries()) {
                    std::size_t i = p / n, j = p % n;
                    if (j == c) {
                        const Vector term = tensor(gb[i], br);
                        for (const auto& [q, w] : term.entries()) acc.add(k * n2 + q, -(v * w));
                    }
                    if (i == c) {
                        const Vector term = tensor(br, bh[j]);
                        for (const auto& [q, w] : term.entries()) acc.add(k * n2 + q, -(v * w));
                    }
                }
            const Vector image = acc.take();
            for (const auto& [row, v] : image.entries()) t.push_back({row, col, v});
        }
    Matrix full(n * n2, n2, std::move(t));
    auto rows = full.row_vectors();
    std::vector<Vector> kept;
    for (auto& row : rows)
        if (!row.is_zero()) kept.push_back(std::move(row));
    std::sort(kept.begin(), kept.end(), [](const Vector& a, const Vector& b) { return canonical_less(a, b); });
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return Matrix::from_rows(n2, kept);
}

Matrix unknowns_to_matrix(std::size_t dim, const Vector& v) {
    std::vector<Matrix::Triplet> t;
    for (const auto& [u, c] : v.entries()) t.push_back({u % dim, u / dim, c});
    return Matrix(dim, dim, std::move(t));
}

std::vector<Matrix> coderivation_space(const WeakBialgebra& wb, const Vector& g, const Vector& h) {
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(coderivation_constraint_matrix(wb, g, h))) {
        out.push_back(unknowns_to_matrix(wb.dim(), v));
        if (!is_coderivation(wb, out.back(), g, h))
            throw InvariantViolation("kernel element of the coderivation system fails the coderivation identity");
    }
    return out;
}

Matrix inner_coderivation(const WeakBialgebra& wb, const Functional& chi) {
    Matrix d = winding(wb, chi, Side::Right) - winding(wb, chi, Side::Left);
    const Vector& one = wb.algebra().one();
    if (!is_coderivation(wb, d, one, one)) throw InvariantViolation("inner coderivation fails the coderivation identity");
    return d;
}

bool kills_source_base(const WeakBialgebra& wb, const Matrix& delta) {
    for (const auto& a : base_subalgebras(wb).source)
        if (!delta.apply(a).is_zero()) return false;
    return true;
}

AxiomReport eps_delta_report(const WeakBialgebra& wb, const Matrix& delta, const Vector& g, const Vector& h,
                             const Matrix* sigma) {
    AxiomReport r;
    const std::size_t n = wb.dim();
    const Vector& one = wb.algebra().one();
    const auto& labels = wb.labels();
    const bool coder = is_coderivation(wb, delta, g, h);
    const bool sg = wb.eps_s(g) == one;
    const bool sh = wb.eps_s(h) == one;
    r.hypothesis("delta_is_gh_coderivation", coder);
    r.hypothesis("eps_s_g_is_one", sg);
    r.hypothesis("eps_s_h_is_one", sh);

    const bool eps_delta_applies = coder && sg && sh;
    if (eps_delta_applies) {
        r.touch("eps_delta_zero");
        for (std::size_t k = 0; k < n; ++k) {
            Scalar v = wb.epsilon(delta.column(k));
            if (!v.is_zero()) r.fail("eps_delta_zero", Witness{{k}, {labels[k]}, v.to_string(), "0"});
        }
    }
    if (!sigma) return r;

    const bool kills = kills_source_base(wb, delta);
    const Functional chi = compose(wb.coalgebra().counit(), *sigma);
    const bool left_char = is_weak_character(wb, chi, Side::Left);
    const bool winding_eq = winding(wb, chi, Side::Left) == *sigma;
    r.hypothesis("delta_kills_R_s", kills);
    r.hypothesis("sigma_eq_tau_l_eps_sigma", left_char && winding_eq);
    if (eps_delta_applies && kills && left_char && winding_eq) {
        r.touch("eps_a_delta_b_zero");
        const auto dc = delta.columns();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Scalar v = wb.epsilon(wb.multiply(wb.algebra().basis(a), dc[b]));
                if (!v.is_zero())
                    r.fail("eps_a_delta_b_zero", Witness{{a, b}, {labels[a], labels[b]}, v.to_string(), "0"});
            }
    }
    return r;
}

}  // namespace weakore
