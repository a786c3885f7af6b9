#pragma once

// σ-derivations, (g,h)-coderivations and (g,h)-primitive elements.

#include <optional>
#include <string>
#include <vector>

#include "weakore/algebra.hpp"

namespace weakore {

/// δ(ab) = δ(a)b + σ(a)δ(b) on all basis pairs; the first failing pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> sigma_derivation_failure(const Algebra& a, const Matrix& sigma,
                                                                            const Matrix& delta);
bool is_sigma_derivation(const Algebra& a, const Matrix& sigma, const Matrix& delta);

/// Δδ = (λ_g⊗δ + δ⊗λ_h)Δ on every basis element.
bool is_coderivation(const WeakBialgebra& wb, const Matrix& delta, const Vector& g, const Vector& h);
/// Basis elements where the coderivation identity fails.
std::vector<std::size_t> coderivation_failures(const WeakBialgebra& wb, const Matrix& delta, const Vector& g,
                                               const Vector& h);

/// Matrix of δ ↦ Δδ − (λ_g⊗δ + δ⊗λ_h)Δ with duplicate rows removed.
/// Unknown δ(r, c) sits in column c*dim + r; output rows index (k, pair) as k*dim² + pair.
Matrix coderivation_constraint_matrix(const WeakBialgebra& wb, const Vector& g, const Vector& h);
/// Reshapes a solution vector of the constraint system to a dim×dim matrix.
Matrix unknowns_to_matrix(std::size_t dim, const Vector& v);
/// Basis of the space of (g,h)-coderivations.
std::vector<Matrix> coderivation_space(const WeakBialgebra& wb, const Vector& g, const Vector& h);

/// a ↦ a_1χ(a_2) − χ(a_1)a_2, asserted to be a (1,1)-coderivation.
Matrix inner_coderivation(const WeakBialgebra& wb, const Functional& chi);

// ---------------------------------------------------------------- skew-primitives

/// Adapter giving skew-primitive checks access to a weak bialgebra.
struct BialgebraContext {
    using Element = Vector;
    using TensorElement = Vector;

    const WeakBialgebra& wb;

    TensorElement delta(const Element& x) const { return wb.delta(x); }
    TensorElement delta_one() const { return wb.delta_one(); }
    TensorElement pure(const Element& a, const Element& b) const { return tensor(a, b); }
    TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) const { return wb.tensor_multiply(a, b); }
    Element multiply(const Element& a, const Element& b) const { return wb.multiply(a, b); }
    Element eps_t(const Element& x) const { return wb.eps_t(x); }
    Element eps_s(const Element& x) const { return wb.eps_s(x); }
    std::string show(const Element& x) const { return wb.algebra().show(x); }
};

/// Δ(x) = Δ(1)(g⊗x + x⊗h) and Δ(x) = (g⊗x + x⊗h)Δ(1).
template <class Ctx>
bool is_skew_primitive(const Ctx& ctx, const typename Ctx::Element& x, const typename Ctx::Element& g,
                       const typename Ctx::Element& h) {
    auto e = ctx.pure(g, x) + ctx.pure(x, h);
    auto dx = ctx.delta(x);
    return dx == ctx.tensor_mul(ctx.delta_one(), e) && dx == ctx.tensor_mul(e, ctx.delta_one());
}

/// x = ε_t(g)x + ε_t(x)h and x = gε_s(x) + xε_s(h).
template <class Ctx>
AxiomReport skew_primitive_identity_report(const Ctx& ctx, const typename Ctx::Element& x,
                                           const typename Ctx::Element& g, const typename Ctx::Element& h) {
    AxiomReport r;
    const bool prim = is_skew_primitive(ctx, x, g, h);
    r.hypothesis("x_gh_primitive", prim);
    if (!prim) return r;
    auto t = ctx.multiply(ctx.eps_t(g), x) + ctx.multiply(ctx.eps_t(x), h);
    auto s = ctx.multiply(g, ctx.eps_s(x)) + ctx.multiply(x, ctx.eps_s(h));
    r.check("x_eq_eps_t_g_x_plus_eps_t_x_h", t == x, Witness{{}, {ctx.show(x)}, ctx.show(t), ctx.show(x)});
    r.check("x_eq_g_eps_s_x_plus_x_eps_s_h", s == x, Witness{{}, {ctx.show(x)}, ctx.show(s), ctx.show(x)});
    r.info("eps_t_x", ctx.show(ctx.eps_t(x)));
    r.info("eps_s_x", ctx.show(ctx.eps_s(x)));
    return r;
}

/// εδ = 0 when ε_s(g) = ε_s(h) = 1; ε(aδ(b)) = 0 on basis pairs when δ(R_s) = 0 and σ = τ^l_χ.
/// Conclusions are only checked under hypotheses that hold; each hypothesis is reported.
AxiomReport eps_delta_report(const WeakBialgebra& wb, const Matrix& delta, const Vector& g, const Vector& h,
                             const Matrix* sigma = nullptr);

/// δ(a) = 0 for every a in R_s.
bool kills_source_base(const WeakBialgebra& wb, const Matrix& delta);

}  // namespace weakore
