#include "weakore/groups.hpp"

#include "weakore/errors.hpp"

namespace weakore {

GroupPresentation GroupPresentation::from_table(std::string name, std::vector<std::string> labels,
                                                std::vector<std::vector<std::size_t>> table) {
    const std::size_t n = labels.size();
    if (n == 0) throw AlgebraError(ErrorKind::ZeroDimension, "group must have at least one element");
    if (table.size() != n) throw AlgebraError(ErrorKind::DimensionMismatch, "group table has wrong size");
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) throw AlgebraError(ErrorKind::DimensionMismatch, "group table row has wrong size");
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] >= n) throw AlgebraError(ErrorKind::DimensionMismatch, "group table entry out of range", {a, b});
    }
    for (std::size_t a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a)
            throw AlgebraError(ErrorKind::UnitFails, "index 0 is not the identity", {a});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw AlgebraError(ErrorKind::NotAssociative, "group table is not associative", {a, b, c});
    GroupPresentation g;
    g.inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == 0 && table[b][a] == 0) g.inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (g.inverse_[a] == n) throw AlgebraError(ErrorKind::NotInvertible, "group element without inverse", {a});
    g.name_ = std::move(name);
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);
    return g;
}

GroupPresentation GroupPresentation::cyclic(std::size_t m, const std::string& generator) {
    if (m == 0) throw AlgebraError(ErrorKind::ZeroDimension, "cyclic group order must be positive");
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
        labels.push_back(a == 0 ? "1" : a == 1 ? generator : generator + "^" + std::to_string(a));
        for (std::size_t b = 0; b < m; ++b) table[a][b] = (a + b) % m;
    }
    return from_table("Z" + std::to_string(m), std::move(labels), std::move(table));
}

GroupPresentation GroupPresentation::trivial() { return cyclic(1); }

void GroupPresentation::validate_character(const std::vector<Scalar>& rho) const {
    if (rho.size() != order()) throw AlgebraError(ErrorKind::InvalidGroupCharacter, "character has wrong length");
    if (!rho[0].is_one()) throw AlgebraError(ErrorKind::InvalidGroupCharacter, "character is not 1 at the identity", {0});
    for (std::size_t a = 0; a < order(); ++a) {
        if (rho[a].is_zero()) throw AlgebraError(ErrorKind::InvalidGroupCharacter, "character vanishes", {a});
        for (std::size_t b = 0; b < order(); ++b)
            if (!(rho[mul(a, b)] == rho[a] * rho[b]))
                throw AlgebraError(ErrorKind::InvalidGroupCharacter, "character is not multiplicative", {a, b});
    }
}

}  // namespace weakore
