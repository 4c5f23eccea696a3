#pragma once

/**
 * @file tensors.hpp
 * @brief Metric, structure tensor b and its dual B, all read off a Cayley table.
 *
 * Greek indices run over the imaginary units 1..7. Tensors are stored with all
 * indices lowered; the metric is diagonal with entries +-1, so raising an
 * index multiplies by the same diagonal entry.
 *
 * Elements enter contractions through their imaginary coefficients, which are
 * contravariant components: for a = A_0 + A^mu E_mu,
 *   A.B     = gamma_{mu nu} A^mu B^nu
 *   b_{ABE} = b_{mu nu}^kappa A^mu B^nu E_kappa
 *   B_{ABXE} = B_{mu nu rho}^sigma A^mu B^nu X^rho E_sigma
 */

#include "octalg/algebra.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace octalg {

/// Raised when a table cannot produce consistent tensors.
class TableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kImag = 7;

class Metric {
  public:
    Metric(AlgebraKind kind, const std::array<int, kDim> &diag) : kind_(kind), diag_(diag) {}

    [[nodiscard]] AlgebraKind kind() const noexcept { return kind_; }
    /// gamma_{ii}, valid for 0..7.
    [[nodiscard]] int diag(int i) const { return diag_.at(i); }
    /// gamma_{ij} == gamma^{ij}
    [[nodiscard]] int operator()(int i, int j) const { return i == j ? diag_.at(i) : 0; }
    [[nodiscard]] const std::array<int, kDim> &diagonal() const noexcept { return diag_; }

  private:
    AlgebraKind kind_;
    std::array<int, kDim> diag_;
};

/// Dense integer tensor over imaginary indices, all lowered.
template <int Rank> class ImagTensor {
  public:
    static constexpr std::size_t kSize = [] {
        std::size_t n = 1;
        for (int i = 0; i < Rank; ++i) {
            n *= kImag;
        }
        return n;
    }();

    explicit ImagTensor(AlgebraKind kind) : kind_(kind) {}

    [[nodiscard]] AlgebraKind kind() const noexcept { return kind_; }

    template <class... I> [[nodiscard]] int operator()(I... idx) const {
        static_assert(sizeof...(I) == Rank);
        return values_[flat(idx...)];
    }
    template <class... I> int &at(I... idx) {
        static_assert(sizeof...(I) == Rank);
        return values_[flat(idx...)];
    }
    [[nodiscard]] const std::array<int, kSize> &values() const noexcept { return values_; }

    friend bool operator==(const ImagTensor &, const ImagTensor &) = default;

  private:
    template <class... I> static std::size_t flat(I... idx) {
        std::size_t f = 0;
        ((f = f * kImag + static_cast<std::size_t>(check(idx) - 1)), ...);
        return f;
    }
    static int check(int i) {
        if (i < 1 || i > kImag) {
            throw std::out_of_range("imaginary index must be in 1..7");
        }
        return i;
    }

    AlgebraKind kind_;
    std::array<int, kSize> values_{};
};

using Tensor3 = ImagTensor<3>;
using Tensor4 = ImagTensor<4>;

/// gamma_{ij} = Re(E_i E_j), read from the table diagonal; gamma_00 = +1.
Metric metric_from_table(const CayleyTable &table);

/// b_{mu nu lambda} = b_{mu nu}^kappa gamma_{kappa lambda} with b_{mu nu}^kappa
/// read from E_mu E_nu = gamma_{mu nu} + b_{mu nu}^kappa E_kappa. Throws
/// TableError if the lowered tensor is not totally antisymmetric.
Tensor3 structure_tensor_from_table(const CayleyTable &table, const Metric &gamma);

/// Sign of the permutation (i_1..i_7) of (1..7), epsilon_{1234567} = +1;
/// zero when an index repeats.
int epsilon7(std::span<const int, kImag> idx);

/// B_{mu nu rho sigma} = (1/6) eps_{mu nu rho sigma kappa lambda eta} b^{kappa lambda eta}.
Tensor4 dual_tensor(const Tensor3 &b, const Metric &gamma);

/// (1/24) eps_{mu nu lambda kappa rho sigma eta} B^{kappa rho sigma eta}; equals
/// round_trip_sign * b.
Tensor3 dual_round_trip(const Tensor4 &B, const Metric &gamma);

/// +1 or -1 if dual_round_trip(dual_tensor(b)) == sign * b, nullopt otherwise.
std::optional<int> round_trip_sign(const Tensor3 &b, const Metric &gamma);

template <int Rank> bool is_totally_antisymmetric(const ImagTensor<Rank> &t);

struct StructureTensors {
    Metric gamma;
    Tensor3 b;
    Tensor4 B;

    [[nodiscard]] AlgebraKind kind() const noexcept { return gamma.kind(); }
    /// b_{mu nu}^kappa
    [[nodiscard]] int b_mixed(int mu, int nu, int kappa) const { return b(mu, nu, kappa) * gamma.diag(kappa); }
    /// B_{mu nu rho}^sigma
    [[nodiscard]] int B_mixed(int mu, int nu, int rho, int sigma) const {
        return B(mu, nu, rho, sigma) * gamma.diag(sigma);
    }
};

StructureTensors build_tensors(const CayleyTable &table);
/// Cached tensors of the built-in table.
const StructureTensors &structure_tensors(AlgebraKind kind);

// Index-as-component contractions.
Rational dot(AlgebraKind kind, const Element &a, const Element &b);
Rational contract_b(AlgebraKind kind, const Element &a, const Element &b, const Element &x);
Element contract_b_e(AlgebraKind kind, const Element &a, const Element &b);
Element contract_B_e(AlgebraKind kind, const Element &a, const Element &b, const Element &x);

/// A_0 B_0 + A.B + A_0 (B.E) + B_0 (A.E) + b_{ABE}
Element unified_product(const StructureTensors &t, const Element &a, const Element &b);
Element unified_product(AlgebraKind kind, const Element &a, const Element &b);

struct ProductMismatch {
    int i;
    int j;
    std::string table_value;
    std::string unified_value;
};

struct CrosscheckReport {
    int pairs_checked{0};
    std::vector<ProductMismatch> mismatches;
    std::string error; ///< set when tensors could not be built from the table
    [[nodiscard]] bool pass() const noexcept { return error.empty() && mismatches.empty(); }
};

/// All 64 basis pairs: unified formula against the table product.
CrosscheckReport unified_product_crosscheck(const CayleyTable &table);

struct JacobianReport {
    AlgebraKind kind;
    int triples_checked{0};
    std::optional<std::array<int, 3>> first_violation; ///< J != -3 B_{mu nu kappa E}
    int element_triples_checked{0};
    std::optional<std::array<int, 3>> first_element_violation; ///< J(x,y,z) != 3 B_{XYZE}
    /// J_{mu nu kappa} = ratio * b_{[nu kappa}^lambda b_{mu] lambda E} (unit weight); nullopt
    /// when no single ratio fits.
    std::optional<Rational> bracket_ratio;

    [[nodiscard]] bool pass() const noexcept { return !first_violation && !first_element_violation; }
};

/// Exhaustive over 1..7: J_{mu nu kappa} (nested commutators of basis units) against
/// -3 B_{mu nu kappa}^sigma E_sigma, and the element Jacobian against 3 B_{XYZE}.
JacobianReport jacobian_tensor_check(AlgebraKind kind);

} // namespace octalg
