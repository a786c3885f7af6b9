#include "weakore/catalog.hpp"

#include "weakore/fixtures.hpp"
#include "weakore/grouplike.hpp"
#include "weakore/panov.hpp"

namespace weakore {

AlgebraSpec sweedler_data_spec() {
    const auto r = group_algebra(GroupPresentation::cyclic(2));
    const Algebra& A = r.wb.algebra();
    AlgebraSpec s = spec_from(r);
    const Vector t = A.basis(1);
    const Matrix sigma = map_from_images(2, {A.one(), -t});
    s.maps["sigma"] = sigma;
    s.maps["delta"] = Matrix(2, 2);
    s.elements["g"] = t;
    s.functionals["chi"] = compose(r.wb.coalgebra().counit(), sigma).coeffs;
    return s;
}

AlgebraSpec matrix_spec(std::size_t n) { return spec_from(matrix_algebra(n)); }

AlgebraSpec groupoid_spec(std::size_t m, std::size_t n) {
    return spec_from(build_groupoid_algebra(GroupPresentation::cyclic(m), n));
}

AlgebraSpec section5_spec(std::size_t m, std::size_t n, const std::vector<Scalar>& rho, const std::vector<Scalar>& q) {
    const GroupPresentation g = GroupPresentation::cyclic(m);
    const WeakHopfAlgebra r = build_groupoid_algebra(g, n);
    const Algebra& A = r.wb.algebra();
    const Functional chi = groupoid_character(r, g, n, rho, q);
    const AlphaSolution sol = solve_alpha(r.wb, chi, diagonal_units(r.wb, n));
    const Functional alpha = sol.basis.empty() ? Functional(Vector(A.dim())) : sol.basis.front();

    Vector central(A.dim());
    for (std::size_t i = 0; i < n; ++i) central += A.basis(groupoid_index(n, m > 1 ? 1 : 0, i, i));

    AlgebraSpec s = spec_from(r);
    s.elements["g"] = central;
    s.functionals["chi"] = chi.coeffs;
    s.functionals["alpha"] = alpha.coeffs;
    s.maps["sigma"] = winding(r.wb, chi, Side::Left);
    s.maps["delta"] = build_section5_delta(r.wb, central, chi, alpha);
    return s;
}

}  // namespace weakore
