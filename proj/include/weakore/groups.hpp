#pragma once

// Finite groups by multiplication table.

#include <cstddef>
#include <string>
#include <vector>

#include "weakore/scalar.hpp"

namespace weakore {

class GroupPresentation {
public:
    /// Validates closure, associativity, identity at index 0 and inverses.
    static GroupPresentation from_table(std::string name, std::vector<std::string> labels,
                                        std::vector<std::vector<std::size_t>> table);
    /// Z_m with elements 1, t, t^2, ...
    static GroupPresentation cyclic(std::size_t m, const std::string& generator = "t");
    static GroupPresentation trivial();

    std::size_t order() const { return labels_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::string& label(std::size_t a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    /// Checks ρ(e)=1, ρ(ab)=ρ(a)ρ(b) and ρ(a)≠0; throws InvalidGroupCharacter.
    void validate_character(const std::vector<Scalar>& rho) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
};

}  // namespace weakore
