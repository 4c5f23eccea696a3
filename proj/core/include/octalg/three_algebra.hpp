#pragma once

/**
 * @file three_algebra.hpp
 * @brief Inner derivations, the 3-bracket [a,b,x] = D_{a,b}x, the generalized
 * (split) Lie 3-algebra axioms and the 4-index structure constants f.
 */

#include "octalg/check.hpp"
#include "octalg/tensors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace octalg {

/// D_{a,b}x = 1/2 [a(bx) - b(ax) + (xb)a - (xa)b + a(xb) - (ax)b]
Element derivation_apply(AlgebraKind kind, const Element &a, const Element &b, const Element &x);

/// 2[(B.X)(A.E) - (A.X)(B.E)] - B_{ABXE}
Element derivation_closed_form(AlgebraKind kind, const Element &a, const Element &b, const Element &x);

/// D_{a,b} as a linear operator.
class Derivation {
  public:
    Derivation(AlgebraKind kind, Element a, Element b) : kind_(kind), a_(std::move(a)), b_(std::move(b)) {}

    [[nodiscard]] AlgebraKind kind() const noexcept { return kind_; }
    [[nodiscard]] const Element &a() const noexcept { return a_; }
    [[nodiscard]] const Element &b() const noexcept { return b_; }
    [[nodiscard]] Element operator()(const Element &x) const { return derivation_apply(kind_, a_, b_, x); }
    /// Column i is D(E_i).
    [[nodiscard]] std::array<Element, kDim> matrix() const;

  private:
    AlgebraKind kind_;
    Element a_;
    Element b_;
};

/// The three operator commutators that make up D_{a,b}.
///  LL: [L_a,L_b]x = 1/2 [a(bx) - b(ax)]
///  RR: [R_a,R_b]x = 1/2 [(xb)a - (xa)b]
///  LR: [L_a,R_b]x = 1/2 [a(xb) - (ax)b]
enum class OperatorPair { LL, RR, LR };

std::string_view operator_pair_name(OperatorPair p) noexcept;
Element operator_commutator(AlgebraKind kind, OperatorPair p, const Element &a, const Element &b, const Element &x);
/// Tensor forms:
///  LL: b_{ABX} + X_0 b_{ABE} - B_{ABXE} + (B.X)(A.E) - (A.X)(B.E)
///  RR: b_{BAX} + X_0 b_{BAE} - B_{ABXE} + (B.X)(A.E) - (A.X)(B.E)
///  LR: B_{ABXE}
Element operator_commutator_closed(AlgebraKind kind, OperatorPair p, const Element &a, const Element &b,
                                   const Element &x);

/// [a,b,x] = D_{a,b}x
Element three_bracket(AlgebraKind kind, const Element &a, const Element &b, const Element &x);

/// D(xy) - (Dx)y - x(Dy)
Element leibniz_residual(AlgebraKind kind, const Element &a, const Element &b, const Element &x, const Element &y);
bool leibniz_check(AlgebraKind kind, const Element &a, const Element &b, const Element &x, const Element &y);

/// [x,y,[a,b,c]] - [[x,y,a],b,c] - [a,[x,y,b],c] - [a,b,[x,y,c]]
Element fundamental_identity_residual(AlgebraKind kind, const Element &x, const Element &y, const Element &a,
                                      const Element &b, const Element &c);
bool fundamental_identity_check(AlgebraKind kind, const Element &x, const Element &y, const Element &a,
                                const Element &b, const Element &c);

/// ([a,b,x],y) + (x,[a,b,y])
Rational metric_compatibility_residual(AlgebraKind kind, const Element &a, const Element &b, const Element &x,
                                       const Element &y);
bool metric_compatibility_check(AlgebraKind kind, const Element &a, const Element &b, const Element &x,
                                const Element &y);

/// ([x,y,a],b) - (a,[x,y,b]), exactly as the axiom is written.
Rational additional_symmetry_residual(AlgebraKind kind, const Element &x, const Element &y, const Element &a,
                                      const Element &b);
bool additional_symmetry_check(AlgebraKind kind, const Element &x, const Element &y, const Element &a,
                               const Element &b);
/// ([x,y,a],b) - ([a,b,x],y): the pair-exchange symmetry of the 4-form f.
Rational pair_exchange_residual(AlgebraKind kind, const Element &x, const Element &y, const Element &a,
                                const Element &b);

/// Exhaustive sweeps over basis elements 0..7, plus @p trials seeded random
/// rational tuples where noted.
CheckResult sweep_derivation_dual_path(AlgebraKind kind, int trials, std::uint64_t seed);
CheckResult sweep_derivation_antisymmetry(AlgebraKind kind);
CheckResult sweep_operator_closed_forms(AlgebraKind kind);
CheckResult sweep_leibniz(AlgebraKind kind);
CheckResult sweep_fundamental_identity(AlgebraKind kind);
CheckResult sweep_metric_compatibility(AlgebraKind kind, int trials, std::uint64_t seed);
CheckResult sweep_additional_symmetry(AlgebraKind kind);
CheckResult sweep_pair_exchange(AlgebraKind kind);

/// Supporting bilinear-form properties.
///  - "(ab,x)+(a,bx)" as written, over all basis triples;
///  - "(ab,x)+(a,xb)" for imaginary b;
///  - "(ab,xy)-(ba,yx)" as written, over all basis quadruples;
///  - the same restricted to imaginary units.
std::vector<CheckResult> bilinear_lemma_sweeps(AlgebraKind kind);

/// Flexibility (a,x,b) = -(b,x,a) over all basis triples, with the associator
/// (ax)b - a(xb) and with the variant (ax)b - a(bx).
std::vector<CheckResult> flexibility_sweeps(AlgebraKind kind);

/// Dimension of the span of the 64 operators D_{E_mu,E_nu}.
int derivation_span_dimension(AlgebraKind kind);

// ---------------------------------------------------------------------------
// Structure constants of the 3-bracket

struct FTensor {
    static constexpr std::size_t kSize = kDim * kDim * kDim * kDim;

    AlgebraKind kind;
    std::vector<Rational> mixed;   ///< f_{mu nu lambda}^kappa, indices 0..7
    std::vector<Rational> lowered; ///< f_{mu nu kappa lambda} = f_{mu nu kappa}^sigma gamma_{sigma lambda}

    static std::size_t flat(int i, int j, int k, int l) {
        return ((static_cast<std::size_t>(i) * kDim + j) * kDim + k) * kDim + l;
    }
    [[nodiscard]] const Rational &f_mixed(int i, int j, int k, int l) const { return mixed.at(flat(i, j, k, l)); }
    [[nodiscard]] const Rational &f(int i, int j, int k, int l) const { return lowered.at(flat(i, j, k, l)); }
};

/// Raised by extract_f when the lowered tensor lacks the pair symmetries.
class FSymmetryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Violations of f_{mu nu kappa lambda} = -f_{nu mu kappa lambda} = -f_{mu nu lambda kappa} = f_{kappa lambda mu nu}.
std::vector<std::string> f_symmetry_violations(const FTensor &f);

/// Reads f from [E_mu,E_nu,E_lambda] over 0..7. Throws FSymmetryError.
FTensor extract_f(AlgebraKind kind);
/// Cached.
const FTensor &f_tensor(AlgebraKind kind);

/// t = unit-weight total antisymmetrization of f, p_{mu nu} = f_{mu nu mu nu}.
struct FDecomposition {
    AlgebraKind kind;
    std::vector<Rational> t; ///< 8^4, FTensor::flat indexing
    std::array<std::array<Rational, kDim>, kDim> p;
    /// Components where f != t + (delta delta - delta delta) p.
    std::vector<std::string> unexplained;

    [[nodiscard]] const Rational &t_at(int i, int j, int k, int l) const { return t.at(FTensor::flat(i, j, k, l)); }
    [[nodiscard]] bool exact() const noexcept { return unexplained.empty(); }
};

FDecomposition decompose_f(const FTensor &f);

CheckResult f_zero_patterns(const FTensor &f);

/// One entry of a published value list for f.
struct FReference {
    std::array<int, 4> indices;
    int expected;
};

/// The seven listed components per algebra.
std::vector<FReference> f_reference_values(AlgebraKind kind);

struct FReferenceReport {
    AlgebraKind kind;
    std::optional<int> global_sign; ///< s with f_listed = s * f_computed on the most entries
    std::vector<std::pair<FReference, Rational>> entries; ///< listed value and computed value
    std::vector<FReference> mismatches;                   ///< under global_sign
    std::size_t pair_components{0};                        ///< f_{mu nu mu nu} compared, mu != nu
    std::vector<std::string> pair_mismatches;
    [[nodiscard]] bool pass() const noexcept {
        return global_sign && mismatches.empty() && pair_mismatches.empty();
    }
};

/// Compares the computed f with the listed components and with the listed
/// f_{mu nu mu nu} rule (-2 for the octonions; +2 when E_mu^2 != E_nu^2 and
/// -2 otherwise for the split algebra).
FReferenceReport compare_f_reference(const FTensor &f);

struct CosetEntry {
    std::array<int, 3> triple;     ///< associative triple, ascending
    std::array<int, 4> complement; ///< ascending
    Rational t_value;              ///< t on the complement, ascending order
};

struct CosetReport {
    AlgebraKind kind;
    std::vector<CosetEntry> entries;
    std::vector<std::array<int, 4>> nonzero_t_quadruples; ///< ascending, distinct indices only
    bool bijective{false};
    std::vector<std::string> problems;
    [[nodiscard]] bool pass() const noexcept { return bijective && problems.empty(); }
};

/// Every nonzero t quadruple is the complement in {1..7} of an associative triple.
CosetReport coset_correspondence(AlgebraKind kind);

} // namespace octalg
