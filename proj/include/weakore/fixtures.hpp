#pragma once

// Standard weak Hopf algebras used as inputs throughout.

#include <cstddef>
#include <string>

#include "weakore/algebra.hpp"
#include "weakore/groups.hpp"

namespace weakore {

/// M_n(kG) with basis gE_ij at index g*n*n + i*n + j (0-based i, j), labelled "E12", "tE12".
/// Δ(gE_ij) = gE_ij⊗gE_ij, ε(gE_ij) = 1, S(gE_ij) = g⁻¹E_ji. For n = 1 the labels are the group labels.
WeakHopfAlgebra groupoid_structure(const GroupPresentation& g, std::size_t n, Field field = Field::rationals());

/// Index of gE_ij in groupoid_structure(g, n).
inline std::size_t groupoid_index(std::size_t n, std::size_t group_elem, std::size_t i, std::size_t j) {
    return group_elem * n * n + i * n + j;
}

/// M_n(k) with Δ(E_ij) = E_ij⊗E_ij.
WeakHopfAlgebra matrix_algebra(std::size_t n, Field field = Field::rationals());
/// kG with Δ(g) = g⊗g.
WeakHopfAlgebra group_algebra(const GroupPresentation& g, Field field = Field::rationals());
/// The one-dimensional Hopf algebra k.
WeakHopfAlgebra trivial_hopf_algebra(Field field = Field::rationals());
/// Four-dimensional Hopf algebra on 1, g, x, gx with g² = 1, x² = 0, xg = -gx,
/// Δ(g) = g⊗g, Δ(x) = g⊗x + x⊗1. Neither commutative nor cocommutative.
WeakHopfAlgebra sweedler_four(Field field = Field::rationals());

/// Matrix of a linear map given by its images of the basis.
Matrix map_from_images(std::size_t dim, const std::vector<Vector>& images);

}  // namespace weakore
