#pragma once

// Decision procedures for extending a weak (Hopf) bialgebra structure from R to R[x; σ, δ]
// with x a (g,1)-primitive, and constructors for coefficient rings M_n(kG).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weakore/algebra.hpp"
#include "weakore/groups.hpp"

namespace weakore {

struct PanovVerdict {
    bool passed = false;
    /// χ = ε∘σ; set whenever σ = τ^l_χ holds.
    std::optional<Functional> chi;
    /// One AXIOM entry per clause, plus hypotheses and infos.
    AxiomReport report;

    /// Report text followed by `CHI <label> <value>` lines and `VERDICT PASS|FAIL`.
    std::string to_text(const std::vector<std::string>& labels) const;
};

/// a ↦ gag⁻¹; throws NotInvertible.
Matrix ad_map(const Algebra& a, const Vector& g);

bool is_cocommutative(const WeakBialgebra& wb);

/// Conditions that any extension with Δ(x) = Δ(1)(g⊗x + x⊗1) forces.
/// Clauses: eps_t_g_is_one, delta_g1_coderivation, sigma_eq_tau_l_chi, chi_weak_left_character,
/// chi_has_right_inverse, delta_sigma_times_g1, delta_sigma_eq_sigma_first_leg, delta_delta_split.
PanovVerdict panov_necessary(const WeakBialgebra& r, const Matrix& sigma, const Matrix& delta, const Vector& g);

/// Clauses: g_grouplike, eps_a_delta_b_zero, chi_weak_left_character, chi_weak_right_character,
/// chi_convolution_invertible, sigma_eq_tau_l_chi, sigma_eq_Ad_g_tau_r_chi, delta_g1_coderivation.
PanovVerdict panov_sufficient(const WeakBialgebra& r, const Matrix& sigma, const Matrix& delta, const Vector& g);

/// Clauses: g_grouplike, delta_kills_R_s, the character clauses of panov_sufficient, delta_g1_coderivation,
/// Ad_g_S_eq_sigma_S_sigma, delta_S_sigma_eq_lambda_g_S_delta.
/// σ being an automorphism and δ a σ-derivation are recorded as hypotheses, not clauses.
PanovVerdict hopf_conditions(const WeakHopfAlgebra& h, const Matrix& sigma, const Matrix& delta, const Vector& g);

/// M_n(kG), checked against every axiom and against M_n(k)⊗kG under gE_ij ↦ E_ij⊗g.
WeakHopfAlgebra build_groupoid_algebra(const GroupPresentation& g, std::size_t n, Field field = Field::rationals());
/// Basis permutation gE_ij ↦ E_ij⊗g from groupoid_structure(g, n) to tensor_product(M_n, kG).
std::vector<std::size_t> groupoid_tensor_permutation(const GroupPresentation& g, std::size_t n);

/// χ(gE_ij) = q_i⁻¹ q_j ρ(g), asserted to be a two-sided character inverted by χ∘S.
Functional groupoid_character(const WeakHopfAlgebra& r, const GroupPresentation& g, std::size_t n,
                              const std::vector<Scalar>& rho, const std::vector<Scalar>& q);

/// Elements 1·E_ii of M_n(kG).
std::vector<Vector> diagonal_units(const WeakBialgebra& r, std::size_t n);

struct AlphaSolution {
    std::vector<Functional> basis;
    /// Rows α(ab) − α(a)ε(b) − χ(a)α(b) over basis pairs, then α(v) for each v in vanish_on.
    Matrix constraints;
};

/// Functionals with α(ab) = α(a)ε(b) + χ(a)α(b) on all basis pairs and α(v) = 0 for v in vanish_on.
AlphaSolution solve_alpha(const WeakBialgebra& r, const Functional& chi, const std::vector<Vector>& vanish_on = {});

/// δ(a) = (1 − g)τ^l_α(a); throws NotCentral or NotGrouplike. Asserts that δ is a τ^l_χ-derivation,
/// a (g,1)-coderivation and vanishes on R_s.
Matrix build_section5_delta(const WeakBialgebra& r, const Vector& g, const Functional& chi, const Functional& alpha);

/// Entry g_central (Ad_g = id on every basis element) with the hypotheses under which it must hold.
AxiomReport centrality_report(const WeakHopfAlgebra& h, const Matrix& sigma, const Matrix& delta, const Vector& g,
                              const Functional& chi);

}  // namespace weakore
