#pragma once

#include "octalg/algebra.hpp"

#include <string>
#include <vector>

namespace octalg {

enum class SubalgebraType { Real, Complex, SplitComplex, Quaternion, SplitQuaternion, Unrecognized };

std::string_view type_name(SubalgebraType t) noexcept;

struct SubalgebraEntry {
    std::vector<int> basis; ///< always starts with 0
    SubalgebraType type;
    bool closed;      ///< every product of two members is +-member
    bool associative; ///< every basis triple associates
};

struct SubalgebraReport {
    AlgebraKind kind;
    std::vector<SubalgebraEntry> entries; ///< {E0}, seven 2-dim, seven 4-dim
    std::vector<std::string> problems;    ///< non-closed or unrecognized candidates

    [[nodiscard]] bool ok() const noexcept { return problems.empty(); }
};

/// The 4-dimensional candidates are {E_0, E_mu, E_mu+1, E_mu+3} with indices
/// taken cyclically in 1..7.
std::vector<int> quaternionic_triple(int mu);

SubalgebraReport classify_subalgebras(AlgebraKind kind);

} // namespace octalg
