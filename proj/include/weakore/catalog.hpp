#pragma once

// Ready-made spec files for the CLI `example` command, the tests and the Python package.

#include <cstddef>
#include <vector>

#include "weakore/spec_io.hpp"

namespace weakore {

/// QZ_2 with maps sigma (t ↦ -t), delta = 0, element g = t and functional chi = ε∘σ.
AlgebraSpec sweedler_data_spec();
/// M_n(Q) with its groupoid weak Hopf structure.
AlgebraSpec matrix_spec(std::size_t n);
/// M_n(Q Z_m).
AlgebraSpec groupoid_spec(std::size_t m, std::size_t n);

/// M_n(Q Z_m) with chi(gE_ij) = q_i⁻¹q_jρ(g), sigma = τ^l_chi, g = t·1, the first solved alpha
/// (or zero when the solution space is trivial) and delta = (1 - g)τ^l_alpha.
/// `rho` lists ρ(t^k) for k < m.
AlgebraSpec section5_spec(std::size_t m, std::size_t n, const std::vector<Scalar>& rho, const std::vector<Scalar>& q);

}  // namespace weakore
