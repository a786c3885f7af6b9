#pragma once

// JSON algebra spec files.
//
//   {"field": {"kind": "rationals"} | {"kind": "prime", "p": 5},
//    "dimension": n, "labels": [...],
//    "mult":   [[i, j, k, "c"], ...]   coefficient of b_k in b_i b_j
//    "unit":   ["c_0", ...],
//    "comult": [[i, j, k, "c"], ...]   coefficient of b_i⊗b_j in Δ(b_k)
//    "counit": ["c_0", ...],
//    "antipode": [[column 0], [column 1], ...]          (optional)
//    "elements": {"g": [...]}, "functionals": {"chi": [...]},
//    "maps": {"sigma": [[column 0], ...]}}               (all optional)
//
// Scalars are strings "num/den" or integers.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weakore/algebra.hpp"

namespace weakore {

struct AlgebraSpec {
    Field field;
    std::vector<std::string> labels;
    std::vector<StructureTerm> mult;
    Vector unit;
    std::vector<StructureTerm> comult;
    Vector counit;
    std::optional<Matrix> antipode;
    std::map<std::string, Vector> elements;
    std::map<std::string, Vector> functionals;
    std::map<std::string, Matrix> maps;

    std::size_t dim() const { return labels.size(); }
};

/// Throws ParseError with the byte offset or JSON path of the problem.
AlgebraSpec parse_spec(const std::string& text);
AlgebraSpec load_spec(const std::string& path);
std::string emit_spec(const AlgebraSpec& spec);

/// Structure of a weak (Hopf) bialgebra as a spec, with no named data.
AlgebraSpec spec_from(const WeakBialgebra& wb, const std::optional<Matrix>& antipode = std::nullopt);
inline AlgebraSpec spec_from(const WeakHopfAlgebra& h) { return spec_from(h.wb, h.antipode); }

/// Validated objects; construction failures surface as ValidationError naming the original kind.
WeakBialgebra build_weak_bialgebra(const AlgebraSpec& spec);
/// Requires an antipode; the antipode axioms are checked as well.
WeakHopfAlgebra build_weak_hopf_algebra(const AlgebraSpec& spec);

/// Structural equality: field, labels, structure constants (sorted), unit, counit, antipode and named data.
bool same_spec(const AlgebraSpec& a, const AlgebraSpec& b);

}  // namespace weakore
