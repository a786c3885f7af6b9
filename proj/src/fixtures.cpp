#include "weakore/fixtures.hpp"

namespace weakore {

namespace {

std::string matrix_unit_label(std::size_t n, std::size_t i, std::size_t j) {
    if (n < 10) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
    return "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

}  // namespace

WeakHopfAlgebra groupoid_structure(const GroupPresentation& g, std::size_t n, Field field) {
    if (n == 0) throw AlgebraError(ErrorKind::ZeroDimension, "matrix size must be positive");
    const std::size_t dim = g.order() * n * n;
    std::vector<std::string> labels(dim);
    std::vector<StructureTerm> mult, comult;
    std::vector<Vector> s_images(dim);
    const Scalar one = field.one();
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t idx = groupoid_index(n, a, i, j);
                if (n == 1)
                    labels[idx] = g.label(a);
                else
                    labels[idx] = (a == 0 ? "" : g.label(a)) + matrix_unit_label(n, i, j);
                comult.push_back({idx, idx, idx, one});
                s_images[idx] = Vector::unit(dim, groupoid_index(n, g.inverse(a), j, i), one);
                for (std::size_t b = 0; b < g.order(); ++b)
                    for (std::size_t l = 0; l < n; ++l)
                        mult.push_back({idx, groupoid_index(n, b, j, l), groupoid_index(n, g.mul(a, b), i, l), one});
            }
    std::vector<Vector::Entry> unit, counit;
    for (std::size_t i = 0; i < n; ++i) unit.emplace_back(groupoid_index(n, 0, i, i), one);
    for (std::size_t k = 0; k < dim; ++k) counit.emplace_back(k, one);
    Algebra alg = Algebra::make(field, std::move(labels), std::move(mult), Vector(dim, std::move(unit)));
    Coalgebra co = Coalgebra::make(field, dim, std::move(comult), Vector(dim, std::move(counit)));
    return WeakHopfAlgebra{WeakBialgebra(std::move(alg), std::move(co)), map_from_images(dim, s_images)};
}

WeakHopfAlgebra matrix_algebra(std::size_t n, Field field) {
    return groupoid_structure(GroupPresentation::trivial(), n, field);
}

WeakHopfAlgebra group_algebra(const GroupPresentation& g, Field field) { return groupoid_structure(g, 1, field); }

WeakHopfAlgebra trivial_hopf_algebra(Field field) {
    return groupoid_structure(GroupPresentation::trivial(), 1, field);
}

WeakHopfAlgebra sweedler_four(Field field) {
    // basis 0:1, 1:g, 2:x, 3:gx
    const Scalar one = field.one();
    const Scalar m1 = -one;
    std::vector<StructureTerm> mult = {
        {0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}, {0, 3, 3, one},
        {1, 0, 1, one}, {1, 1, 0, one}, {1, 2, 3, one}, {1, 3, 2, one},
        {2, 0, 2, one}, {2, 1, 3, m1},  // x·g = -gx
        {3, 0, 3, one}, {3, 1, 2, m1},  // gx·g = -x
    };
    std::vector<StructureTerm> comult = {
        {0, 0, 0, one},
        {1, 1, 1, one},
        {1, 2, 2, one}, {2, 0, 2, one},  // Δx = g⊗x + x⊗1
        {0, 3, 3, one}, {3, 1, 3, one},  // Δ(gx) = 1⊗gx + gx⊗g
    };
    Algebra alg = Algebra::make(field, {"1", "g", "x", "gx"}, std::move(mult), Vector::unit(4, 0, one));
    Coalgebra co = Coalgebra::make(field, 4, std::move(comult), Vector(4, {{0, one}, {1, one}}));
    Matrix s = map_from_images(4, {Vector::unit(4, 0, one), Vector::unit(4, 1, one), Vector::unit(4, 3, m1),
                                   Vector::unit(4, 2, one)});
    return WeakHopfAlgebra{WeakBialgebra(std::move(alg), std::move(co)), std::move(s)};
}

Matrix map_from_images(std::size_t dim, const std::vector<Vector>& images) {
    return Matrix::from_columns(dim, images);
}

}  // namespace weakore
