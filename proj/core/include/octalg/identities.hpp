#pragma once

/**
 * @file identities.hpp
 * @brief Exhaustive evaluation of the eighteen b/B/gamma contraction identities.
 *
 * Square brackets antisymmetrize with unit weight,
 *   U_[a1..ai V_a(i+1)..an] = (1/n!) sum_sigma sign(sigma) U_sigma(..) V_sigma(..),
 * and every residual LHS - RHS is computed exactly over all free-index
 * assignments in 1..7.
 */

#include "octalg/tensors.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace octalg {

enum class IdentityId {
    A1 = 1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13, A14, A15, A16, A17, A18
};

inline constexpr int kIdentityCount = 18;

std::vector<IdentityId> all_identities();
std::string identity_label(IdentityId id);
/// The identity in ASCII index notation, as transcribed.
std::string_view identity_formula(IdentityId id);

/// How a transcribed identity is read.
///  - Printed: literally. An index that occurs only on one side (tau in A4) is a
///    further free index.
///  - TauAsLambda: A4 with tau replaced by lambda so that both sides carry the
///    same free indices.
enum class Reading { Printed, TauAsLambda };

std::string_view reading_name(Reading r) noexcept;
/// Readings evaluated for @p id; Printed is always first.
std::vector<Reading> readings_for(IdentityId id);

/// LHS - RHS over every free-index tuple, stored as exact integer numerators over
/// one common denominator. Tuples are ordered lexicographically, indices 1..7.
struct ResidualField {
    int rank{0};
    std::int64_t denominator{1};
    std::vector<std::int64_t> numerators;

    [[nodiscard]] std::size_t size() const noexcept { return numerators.size(); }
    [[nodiscard]] Rational at(std::size_t flat) const { return make_rational(numerators.at(flat), denominator); }
    [[nodiscard]] std::vector<int> indices(std::size_t flat) const;
    [[nodiscard]] std::size_t nonzero_count() const;
};

/// Names of the free indices in tuple order, e.g. {"mu","nu","rho","sigma"}.
std::vector<std::string> free_indices(IdentityId id, Reading reading);

ResidualField identity_residuals(const StructureTensors &t, IdentityId id, Reading reading);

struct Residual {
    std::vector<int> indices;
    Rational value;
};

struct ReadingResult {
    Reading reading;
    std::size_t tuples{0};
    std::size_t nonzero{0};
    std::vector<Residual> samples; ///< first few nonzero residuals
    [[nodiscard]] bool holds() const noexcept { return nonzero == 0; }
};

struct IdentityReport {
    IdentityId id;
    AlgebraKind kind;
    std::vector<ReadingResult> readings;
    /// Full contraction value for A1 (b^2) and A2 (B^2).
    std::optional<Rational> scalar;

    /// Holds under at least one evaluated reading.
    [[nodiscard]] bool pass() const noexcept;
    /// The reading that holds, Printed preferred.
    [[nodiscard]] std::optional<Reading> holding_reading() const noexcept;
};

IdentityReport verify_identity(AlgebraKind kind, IdentityId id);
IdentityReport verify_identity(const StructureTensors &t, IdentityId id);

/// b_{mu nu lambda} b^{mu nu lambda} and B_{mu nu rho sigma} B^{mu nu rho sigma}.
std::int64_t b_squared(const StructureTensors &t);
std::int64_t B_squared(const StructureTensors &t);

} // namespace octalg
