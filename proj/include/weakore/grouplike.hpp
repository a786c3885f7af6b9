#pragma once

// Weak group-likes, weak characters and winding maps.

#include <cstddef>
#include <optional>
#include <vector>

#include "weakore/algebra.hpp"

namespace weakore {

bool is_weak_grouplike(const WeakBialgebra& wb, const Vector& g);
/// Two-sided inverse of g when g is weak group-like and a unit; nullopt otherwise.
std::optional<Vector> is_grouplike(const WeakBialgebra& wb, const Vector& g);

struct WeakGrouplike {
    Vector element;
    bool is_invertible = false;
    std::optional<Vector> inverse;
    /// For matrix enumeration: image[i] = σ(i) for i ∈ I, nullopt outside I.
    std::vector<std::optional<std::size_t>> partial_injection;
};

struct MatrixGrouplikes {
    WeakGrouplike zero;                   // the empty sum, I = ∅
    std::vector<WeakGrouplike> nonzero;   // I ≠ ∅
};

/// All Σ_{i∈I} E_{iσ(i)} for I ⊆ {1..n} and σ: I → {1..n} injective, on matrix_algebra(n).
MatrixGrouplikes enumerate_weak_grouplikes_matrix(std::size_t n);

/// Permutation matrix Σ_i E_{i,π(i)}.
Vector permutation_element(std::size_t n, const std::vector<std::size_t>& pi);

/// Exhaustive scan over F_p; every solution including 0, in lexicographic order. Throws TooLarge past 10^6 vectors.
std::vector<Vector> brute_force_weak_grouplikes(const WeakBialgebra& wb);

enum class Side { Left, Right };

/// τ^l_χ(a) = χ(a_1)a_2, τ^r_χ(a) = a_1χ(a_2).
Matrix winding(const WeakBialgebra& wb, const Functional& chi, Side side);
bool is_unital_algebra_map(const Algebra& a, const Matrix& m);
bool is_weak_character(const WeakBialgebra& wb, const Functional& chi, Side side);

struct ConvolutionInverse {
    std::optional<Functional> left;       // χ'∗χ = ε
    std::optional<Functional> right;      // χ∗χ' = ε
    std::optional<Functional> two_sided;
};
ConvolutionInverse convolution_inverse(const WeakBialgebra& wb, const Functional& chi);

struct Character {
    enum class Kind { Left, Right, Both };
    Functional functional;
    Kind kind;
    std::optional<Functional> inverse;  // two-sided convolution inverse
};
/// Classifies χ; nullopt if it is neither a weak left nor a weak right character.
std::optional<Character> classify_character(const WeakBialgebra& wb, const Functional& chi);

struct EndoCharacter {
    Functional chi;
    Side side;
};
/// χ = ε∘σ when Δσ = (id⊗σ)Δ (right) or Δσ = (σ⊗id)Δ (left); throws NotAlgebraMap.
std::optional<EndoCharacter> character_from_endo(const WeakBialgebra& wb, const Matrix& sigma);

/// g = ε_t(g)g = gε_s(g), the antipode forms of ε_t(g), ε_s(g), and the power test
/// ε(ag^m) = ε(a) for m ≤ 4 against ε_t(g) = 1 and against ε_s'(g) = 1.
AxiomReport grouplike_identity_report(const WeakBialgebra& wb, const Vector& g, const Matrix* antipode = nullptr);
inline AxiomReport grouplike_identity_report(const WeakHopfAlgebra& h, const Vector& g) {
    return grouplike_identity_report(h.wb, g, &h.antipode);
}

/// S∗τ^r_χ = ε_sτ^r_χ, τ^l_χ∗S = ε_tτ^l_χ, and when χS inverts χ, S = τ^l_χSτ^r_χ = τ^r_χSτ^l_χ.
AxiomReport char_antipode_report(const WeakHopfAlgebra& h, const Functional& chi);

/// χ∘S as a functional.
Functional compose(const Functional& chi, const Matrix& m);

}  // namespace weakore
