#pragma once

/**
 * @file super_affine.hpp
 * @brief Graded Fourier-mode algebra of the N=1 super-affine extension.
 *
 * Generators are psi_mu^m (odd), phi_mu^m (even), mu = 0..7, m an integer, and a
 * central even K. With f_{mu nu}^lambda = b_{mu nu}^lambda (zero when an index is 0):
 *
 *   {psi_mu^m, psi_nu^n} = pairing(mu,nu) delta_{m+n,0} K
 *   [psi_mu^m, phi_nu^n] = s1 f_{mu nu}^lambda psi_lambda^{m+n}
 *   [phi_mu^m, phi_nu^n] = s2 f_{mu nu}^lambda phi_lambda^{m+n} + s3 m pairing(mu,nu) delta_{m+n,0} K
 *
 * and [phi, psi] follows from graded antisymmetry [x,y] = (-1)^{e_x e_y + 1} [y,x].
 */

#include "octalg/check.hpp"
#include "octalg/tensors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octalg {

enum class Species { Psi, Phi, K };

struct ModeGenerator {
    Species species{Species::K};
    int index{0};
    int mode{0};

    static ModeGenerator psi(int index, int mode) { return {Species::Psi, index, mode}; }
    static ModeGenerator phi(int index, int mode) { return {Species::Phi, index, mode}; }
    static ModeGenerator central() { return {Species::K, 0, 0}; }

    /// 1 for psi, 0 otherwise.
    [[nodiscard]] int parity() const noexcept { return species == Species::Psi ? 1 : 0; }

    friend auto operator<=>(const ModeGenerator &, const ModeGenerator &) = default;
};

/// "psi_3^-1", "phi_0^2", "K"
std::string to_string(const ModeGenerator &g);

/// Finite formal sum with exact coefficients, kept sorted and free of zeros.
template <class Key, class Coeff> class FormalSum {
  public:
    using Term = std::pair<Key, Coeff>;

    FormalSum() = default;
    FormalSum(const Key &k, const Coeff &c) { add(k, c); }

    void add(const Key &k, const Coeff &c) {
        if (c == 0) {
            return;
        }
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term &t, const Key &key) { return t.first < key; });
        if (it != terms_.end() && it->first == k) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        } else {
            terms_.insert(it, Term{k, c});
        }
    }

    FormalSum &operator+=(const FormalSum &o) {
        for (const auto &[k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }
    FormalSum &operator-=(const FormalSum &o) {
        for (const auto &[k, c] : o.terms_) {
            add(k, -c);
        }
        return *this;
    }
    FormalSum &operator*=(const Coeff &s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &t : terms_) {
            t.second *= s;
        }
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum &b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum &b) { return a -= b; }
    friend FormalSum operator*(const Coeff &s, FormalSum a) { return a *= s; }
    friend bool operator==(const FormalSum &, const FormalSum &) = default;

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] const std::vector<Term> &terms() const noexcept { return terms_; }
    [[nodiscard]] Coeff coefficient(const Key &k) const {
        for (const auto &[key, c] : terms_) {
            if (key == k) {
                return c;
            }
        }
        return Coeff(0);
    }

  private:
    std::vector<Term> terms_;
};

using GradedElement = FormalSum<ModeGenerator, Rational>;

std::string to_string(const GradedElement &e);
/// Parity of a homogeneous nonzero element; nullopt for zero or mixed elements.
std::optional<int> parity(const GradedElement &e);

enum class Pairing { Gamma, Delta };

struct BracketConvention {
    int s1{1};
    int s2{1};
    int s3{1};
    Pairing pairing{Pairing::Gamma};

    /// "s1=+ s2=- s3=+ gamma"
    [[nodiscard]] std::string name() const;
    friend bool operator==(const BracketConvention &, const BracketConvention &) = default;

    /// The 16 conventions in a fixed order (pairing outermost, then s1, s2, s3; + before -).
    static std::vector<BracketConvention> all();
};

GradedElement mode_bracket(AlgebraKind kind, const BracketConvention &conv, const ModeGenerator &g1,
                           const ModeGenerator &g2);
/// Bilinear extension. Homogeneous arguments only; throws std::invalid_argument otherwise.
GradedElement graded_bracket(AlgebraKind kind, const BracketConvention &conv, const GradedElement &x,
                             const GradedElement &y);

/// psi_mu^m and phi_mu^m for mu = 0..7 and |m| <= bound, then K.
std::vector<ModeGenerator> generators(int mode_bound);

/// bracket(g1,g2) = (-1)^{e1 e2 + 1} bracket(g2,g1) over all pairs with |mode| <= bound.
CheckResult graded_antisymmetry_check(AlgebraKind kind, const BracketConvention &conv, int mode_bound);

/// K central, mode additivity of non-central terms, central terms only at m1+m2 = 0,
/// and output parity e1+e2, over all pairs with |mode| <= bound.
CheckResult bracket_invariants_check(AlgebraKind kind, const BracketConvention &conv, int mode_bound);

/// iota(E_mu) = s2 phi_mu^0 carries the commutator [E_mu,E_nu] to the mode bracket,
/// checked on all 64 basis pairs.
CheckResult mode_zero_homomorphism_check(AlgebraKind kind, const BracketConvention &conv);

/// On phi^0 generators the graded Jacobian nests the other way round from the element
/// Jacobian J(x,y,z) = [[x,y],z] + cyclic, so super_jacobian(phi_mu^0, phi_nu^0, phi_k^0)
/// must equal -sum_l J(E_mu,E_nu,E_k)_l phi_l^0 whatever s2 is. Checked on all 8^3 triples.
CheckResult even_super_jacobian_check(AlgebraKind kind, const BracketConvention &conv);

/// (-1)^{e1 e3} [g1,[g2,g3]] + (-1)^{e3 e2} [g3,[g1,g2]] + (-1)^{e2 e1} [g2,[g3,g1]]
GradedElement super_jacobian(AlgebraKind kind, const BracketConvention &conv, const GradedElement &x,
                             const GradedElement &y, const GradedElement &z);
GradedElement super_jacobian(AlgebraKind kind, const BracketConvention &conv, const ModeGenerator &x,
                             const ModeGenerator &y, const ModeGenerator &z);

/// How the Malcev identity J(x,y,[x,z]) = [J(x,y,z),x] is carried over to the graded algebra.
///  - GrassmannEnvelope: the identity holds in the Grassmann envelope. Each generator is
///    tensored with a fresh odd Grassmann unit when odd; x appears twice, so the identity
///    is linearized in x (x1 = x theta_1, x2 = x theta_2):
///      J(x1,y,[x2,z]) + J(x2,y,[x1,z]) - [J(x1,y,z),x2] - [J(x2,y,z),x1] = 0.
///  - LiteralSuperJacobian: the displayed graded Jacobian substituted into the identity
///    as written.
enum class MalcevReading { GrassmannEnvelope, LiteralSuperJacobian };

std::string_view reading_name(MalcevReading r) noexcept;

/// Residual of the Malcev identity for one generator triple. For the envelope reading the
/// Grassmann monomial common to all terms is stripped.
GradedElement super_malcev_residual(AlgebraKind kind, const BracketConvention &conv, MalcevReading reading,
                                    const ModeGenerator &x, const ModeGenerator &y, const ModeGenerator &z);

struct MalcevCounterexample {
    ModeGenerator x;
    ModeGenerator y;
    ModeGenerator z;
    std::string residual;
};

struct SuperMalcevResult {
    MalcevReading reading;
    std::uint64_t triples_checked{0};
    std::optional<MalcevCounterexample> counterexample; ///< first violating triple; the sweep stops there
    [[nodiscard]] bool pass() const noexcept { return !counterexample; }
};

/// All generator triples with |mode| <= bound, in generators() order.
SuperMalcevResult super_malcev_check(AlgebraKind kind, const BracketConvention &conv, int mode_bound,
                                     MalcevReading reading = MalcevReading::GrassmannEnvelope);

struct ConventionOutcome {
    BracketConvention convention;
    CheckResult antisymmetry;
    SuperMalcevResult malcev; ///< envelope reading
    [[nodiscard]] bool pass() const noexcept { return antisymmetry.pass() && malcev.pass(); }
};

/// Runs graded antisymmetry and the envelope Malcev sweep for all 16 conventions.
std::vector<ConventionOutcome> convention_search(AlgebraKind kind, int mode_bound);

} // namespace octalg
