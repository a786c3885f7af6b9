#include "weakore/grouplike.hpp"

#include <functional>

#include "weakore/fixtures.hpp"

namespace weakore {

bool is_weak_grouplike(const WeakBialgebra& wb, const Vector& g) {
    Vector dg = wb.delta(g);
    Vector gg = tensor(g, g);
    return dg == wb.tensor_multiply(wb.delta_one(), gg) && dg == wb.tensor_multiply(gg, wb.delta_one());
}

std::optional<Vector> is_grouplike(const WeakBialgebra& wb, const Vector& g) {
    if (!is_weak_grouplike(wb, g)) return std::nullopt;
    return wb.algebra().inverse_of(g);
}

Vector permutation_element(std::size_t n, const std::vector<std::size_t>& pi) {
    std::vector<Vector::Entry> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i * n + pi[i], Scalar(1));
    return Vector(n * n, std::move(e));
}

MatrixGrouplikes enumerate_weak_grouplikes_matrix(std::size_t n) {
    if (n == 0) throw AlgebraError(ErrorKind::ZeroDimension, "matrix size must be positive");
    const WeakHopfAlgebra mn = matrix_algebra(n);
    MatrixGrouplikes out;
    std::vector<std::optional<std::size_t>> sigma(n);
    std::vector<char> used(n, 0);

    auto emit = [&] {
        std::vector<Vector::Entry> e;
        for (std::size_t i = 0; i < n; ++i)
            if (sigma[i]) e.emplace_back(i * n + *sigma[i], Scalar(1));
        WeakGrouplike g;
        g.element = Vector(n * n, std::move(e));
        g.partial_injection = sigma;
        if (!is_weak_grouplike(mn.wb, g.element))
            throw InvariantViolation("enumerated partial injection is not weak group-like");
        g.inverse = mn.wb.algebra().inverse_of(g.element);
        g.is_invertible = g.inverse.has_value();
        if (g.element.is_zero())
            out.zero = std::move(g);
        else
            out.nonzero.push_back(std::move(g));
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) return emit();
        sigma[i].reset();
        rec(i + 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            sigma[i] = j;
            rec(i + 1);
            used[j] = 0;
        }
        sigma[i].reset();
    };
    rec(0);
    return out;
}

std::vector<Vector> brute_force_weak_grouplikes(const WeakBialgebra& wb) {
    const Field f = wb.field();
    if (!f.is_prime()) throw AlgebraError(ErrorKind::FieldMismatch, "brute force requires a prime field");
    const std::uint64_t p = f.modulus();
    const std::size_t n = wb.dim();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= p;
        if (total > 1000000) throw AlgebraError(ErrorKind::TooLarge, "p^dim exceeds 10^6");
    }
    std::vector<Vector> out;
    std::vector<std::uint64_t> digits(n, 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        std::vector<Vector::Entry> e;
        for (std::size_t i = 0; i < n; ++i)
            if (digits[i]) e.emplace_back(i, Scalar::residue(static_cast<std::int64_t>(digits[i]), p));
        Vector g(n, std::move(e));
        if (is_weak_grouplike(wb, g)) out.push_back(std::move(g));
        for (std::size_t i = n; i-- > 0;) {  // last coordinate fastest: lexicographic order
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return out;
}

Matrix winding(const WeakBialgebra& wb, const Functional& chi, Side side) {
    const std::size_t n = wb.dim();
    if (chi.dim() != n) throw AlgebraError(ErrorKind::DimensionMismatch, "functional dimension");
    std::vector<Matrix::Triplet> t;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [p, c] : wb.coalgebra().coproduct(k).entries()) {
            std::size_t i = p / n, j = p % n;
            if (side == Side::Left)
                t.push_back({j, k, c * chi.at(i)});
            else
                t.push_back({i, k, c * chi.at(j)});
        }
    // Matrix constructor sums repeated positions
    return Matrix(n, n, std::move(t));
}

bool is_unital_algebra_map(const Algebra& a, const Matrix& m) {
    if (!(m.apply(a.one()) == a.one())) return false;
    const auto cols = m.columns();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!(m.apply(a.product(i, j)) == a.multiply(cols[i], cols[j]))) return false;
    return true;
}

bool is_weak_character(const WeakBialgebra& wb, const Functional& chi, Side side) {
    return is_unital_algebra_map(wb.algebra(), winding(wb, chi, side));
}

namespace {

// Rows k of the linear system for the unknown χ' in χ'∗χ (left) or χ∗χ' (right).
std::vector<Matrix::Triplet> inverse_rows(const WeakBialgebra& wb, const Functional& chi, Side side,
                                          std::size_t row_offset) {
    const std::size_t n = wb.dim();
    std::vector<Matrix::Triplet> t;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [p, c] : wb.coalgebra().coproduct(k).entries()) {
            std::size_t i = p / n, j = p % n;
            if (side == Side::Left)
                t.push_back({row_offset + k, i, c * chi.at(j)});
            else
                t.push_back({row_offset + k, j, c * chi.at(i)});
        }
    return t;
}

std::optional<Functional> solve_inverse(const WeakBialgebra& wb, std::vector<Matrix::Triplet> rows,
                                        std::size_t nrows, const Vector& rhs) {
    auto x = solve(Matrix(nrows, wb.dim(), std::move(rows)), rhs);
    if (!x) return std::nullopt;
    return Functional(*x);
}

}  // namespace

ConvolutionInverse convolution_inverse(const WeakBialgebra& wb, const Functional& chi) {
    const std::size_t n = wb.dim();
    const Vector& eps = wb.coalgebra().counit().coeffs;
    ConvolutionInverse out;
    out.left = solve_inverse(wb, inverse_rows(wb, chi, Side::Left, 0), n, eps);
    out.right = solve_inverse(wb, inverse_rows(wb, chi, Side::Right, 0), n, eps);
    if (out.left && out.right) {
        auto rows = inverse_rows(wb, chi, Side::Left, 0);
        auto more = inverse_rows(wb, chi, Side::Right, n);
        rows.insert(rows.end(), more.begin(), more.end());
        std::vector<Vector::Entry> e;
        for (const auto& [k, c] : eps.entries()) {
            e.emplace_back(k, c);
            e.emplace_back(n + k, c);
        }
        out.two_sided = solve_inverse(wb, std::move(rows), 2 * n, Vector(2 * n, std::move(e)));
    }
    const Functional& eps_f = wb.coalgebra().counit();
    if (out.left && !(convolution(wb, *out.left, chi) == eps_f))
        throw InvariantViolation("left convolution inverse does not verify");
    if (out.right && !(convolution(wb, chi, *out.right) == eps_f))
        throw InvariantViolation("right convolution inverse does not verify");
    return out;
}

std::optional<Character> classify_character(const WeakBialgebra& wb, const Functional& chi) {
    bool left = is_weak_character(wb, chi, Side::Left);
    bool right = is_weak_character(wb, chi, Side::Right);
    if (!left && !right) return std::nullopt;
    Character c{chi, left && right ? Character::Kind::Both : left ? Character::Kind::Left : Character::Kind::Right,
                convolution_inverse(wb, chi).two_sided};
    return c;
}

Functional compose(const Functional& chi, const Matrix& m) {
    std::vector<Vector::Entry> e;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        Scalar v = chi(m.column(k));
        if (!v.is_zero()) e.emplace_back(k, v);
    }
    return Functional(Vector(m.cols(), std::move(e)));
}

std::optional<EndoCharacter> character_from_endo(const WeakBialgebra& wb, const Matrix& sigma) {
    const std::size_t n = wb.dim();
    if (!is_unital_algebra_map(wb.algebra(), sigma))
        throw AlgebraError(ErrorKind::NotAlgebraMap, "endomorphism is not a unital algebra map");
    const auto cols = sigma.columns();
    auto sig = [&](std::size_t i) { return cols[i]; };
    bool right = true, left = true;
    for (std::size_t k = 0; k < n && (right || left); ++k) {
        Vector lhs = wb.delta(cols[k]);
        const Vector& d = wb.coalgebra().coproduct(k);
        if (right && !(lhs == map_leg(d, n, 2, 1, 1, sig))) right = false;
        if (left && !(lhs == map_leg(d, n, 2, 0, 1, sig))) left = false;
    }
    if (!right && !left) return std::nullopt;
    Functional chi = compose(wb.coalgebra().counit(), sigma);
    Side side = right ? Side::Right : Side::Left;
    if (!(winding(wb, chi, side) == sigma)) throw InvariantViolation("winding of eps∘sigma differs from sigma");
    return EndoCharacter{chi, side};
}

AxiomReport grouplike_identity_report(const WeakBialgebra& wb, const Vector& g, const Matrix* antipode) {
    AxiomReport r;
    const Algebra& A = wb.algebra();
    const auto show = [&](const Vector& v) { return A.show(v); };
    const Witness gw{{}, {show(g)}, "", ""};
    auto with = [&](const Vector& lhs, const Vector& rhs) {
        Witness w = gw;
        w.lhs = show(lhs);
        w.rhs = show(rhs);
        return w;
    };

    r.hypothesis("g_weak_grouplike", is_weak_grouplike(wb, g));
    Vector et = wb.eps_t(g), es = wb.eps_s(g);
    Vector etp = wb.eps_t_prime(g), esp = wb.eps_s_prime(g);
    if (r.hypothesis_holds("g_weak_grouplike")) {
        Vector a = wb.multiply(et, g), b = wb.multiply(g, es);
        r.check("g_eq_eps_t_g_times_g", a == g, with(a, g));
        r.check("g_eq_g_times_eps_s_g", b == g, with(b, g));
        if (antipode) {
            Vector sg = antipode->apply(g);
            Vector gs = wb.multiply(g, sg), sgg = wb.multiply(sg, g);
            r.check("eps_t_g_eq_g_S_g", et == gs, with(et, gs));
            r.check("eps_s_g_eq_S_g_g", es == sgg, with(es, sgg));
            r.check("eps_t_g_idempotent", wb.multiply(et, et) == et, with(wb.multiply(et, et), et));
            r.check("eps_s_g_idempotent", wb.multiply(es, es) == es, with(wb.multiply(es, es), es));
        }
    }

    // Power test up to m = 4 on every basis element, in both directions of each equivalence.
    constexpr unsigned kMaxPower = 4;
    std::optional<Witness> right_fail, left_fail;
    Vector gm = A.one();
    for (unsigned m = 1; m <= kMaxPower; ++m) {
        gm = A.multiply(gm, g);
        for (std::size_t i = 0; i < wb.dim(); ++i) {
            Vector a = A.basis(i);
            Scalar ea = wb.epsilon(a);
            Scalar rv = wb.epsilon(A.multiply(a, gm));
            Scalar lv = wb.epsilon(A.multiply(gm, a));
            if (!right_fail && !(rv == ea))
                right_fail = Witness{{i, m}, {A.label(i), std::to_string(m)}, rv.to_string(), ea.to_string()};
            if (!left_fail && !(lv == ea))
                left_fail = Witness{{i, m}, {A.label(i), std::to_string(m)}, lv.to_string(), ea.to_string()};
        }
    }
    const Vector& one = A.one();
    const bool right_holds = !right_fail, left_holds = !left_fail;
    r.hypothesis("eps_t_g_is_one", et == one);
    r.hypothesis("eps_s_g_is_one", es == one);
    r.hypothesis("eps_s_prime_g_is_one", esp == one);
    r.hypothesis("eps_t_prime_g_is_one", etp == one);
    r.hypothesis("eps_a_g_pow_m_eq_eps_a", right_holds);
    r.hypothesis("eps_g_pow_m_a_eq_eps_a", left_holds);
    auto iff = [&](const char* name, bool power, bool proj, const std::optional<Witness>& fail, const Vector& p) {
        Witness w = fail ? *fail : Witness{{}, {show(g)}, show(p), "1"};
        r.check(name, power == proj, w);
    };
    iff("power_right_iff_eps_t_one", right_holds, et == one, right_fail, et);
    iff("power_right_iff_eps_s_prime_one", right_holds, esp == one, right_fail, esp);
    iff("power_left_iff_eps_s_one", left_holds, es == one, left_fail, es);
    iff("power_left_iff_eps_t_prime_one", left_holds, etp == one, left_fail, etp);
    return r;
}

AxiomReport char_antipode_report(const WeakHopfAlgebra& h, const Functional& chi) {
    const WeakBialgebra& wb = h.wb;
    AxiomReport r;
    const bool left = is_weak_character(wb, chi, Side::Left);
    const bool right = is_weak_character(wb, chi, Side::Right);
    r.hypothesis("chi_weak_left_character", left);
    r.hypothesis("chi_weak_right_character", right);
    if (!left || !right) return r;

    const Matrix tl = winding(wb, chi, Side::Left);
    const Matrix tr = winding(wb, chi, Side::Right);
    const Matrix& S = h.antipode;
    auto matrix_check = [&](const char* name, const Matrix& a, const Matrix& b) {
        auto col = first_differing_column(a, b);
        if (!col)
            r.touch(name);
        else
            r.fail(name, Witness{{*col}, {wb.algebra().label(*col)}, wb.algebra().show(a.column(*col)),
                                 wb.algebra().show(b.column(*col))});
    };
    matrix_check("S_conv_tau_r_eq_eps_s_tau_r", convolve_maps(wb, S, tr), wb.eps_s_matrix() * tr);
    matrix_check("tau_l_conv_S_eq_eps_t_tau_l", convolve_maps(wb, tl, S), wb.eps_t_matrix() * tl);

    const Functional chis = compose(chi, S);
    const Functional& eps = wb.coalgebra().counit();
    const bool inverse = convolution(wb, chis, chi) == eps && convolution(wb, chi, chis) == eps;
    r.hypothesis("chi_S_is_convolution_inverse", inverse);
    if (inverse) {
        matrix_check("S_eq_tau_l_S_tau_r", tl * S * tr, S);
        matrix_check("S_eq_tau_r_S_tau_l", tr * S * tl, S);
    }
    return r;
}

}  // namespace weakore
