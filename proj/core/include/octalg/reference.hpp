#pragma once

/**
 * @file reference.hpp
 * @brief Published component lists for gamma, b, B and the subalgebra types, and
 * comparisons of the table-derived data against them.
 */

#include "octalg/check.hpp"
#include "octalg/subalgebra.hpp"
#include "octalg/tensors.hpp"

#include <array>
#include <vector>

namespace octalg {

struct ComponentValue {
    std::vector<int> indices;
    int value;
};

/// gamma_00..gamma_77.
std::array<int, kDim> reference_gamma(AlgebraKind kind);

/// The seven listed b triples. For the octonions b_{mu nu kappa} = -c_{mu nu kappa}
/// with c = +1 on 124, 235, 346, 457, 561, 672, 713.
std::vector<ComponentValue> reference_b(AlgebraKind kind);

/// The seven listed B quadruples: all +1 for the octonions; all -1 except B_1435 = +1
/// for the split algebra.
std::vector<ComponentValue> reference_B(AlgebraKind kind);

/// Expected type of each entry of classify_subalgebras(kind), in report order.
std::vector<SubalgebraType> reference_subalgebra_types(AlgebraKind kind);

/// Whole-tensor comparisons. The listed components are extended by total
/// antisymmetry, every other component must vanish, and the result is matched
/// against the computed tensor up to a global sign which is recorded in notes.
CheckResult compare_gamma_reference(const StructureTensors &t);
CheckResult compare_b_reference(const StructureTensors &t);
CheckResult compare_B_reference(const StructureTensors &t);
CheckResult compare_subalgebra_reference(const SubalgebraReport &r);

} // namespace octalg
