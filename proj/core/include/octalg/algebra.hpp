#pragma once

/**
 * @file algebra.hpp
 * @brief Element-level arithmetic for the octonions and the split-octonions.
 *
 * Both algebras are defined by their hard-coded Cayley tables. Every other
 * object in the library (metric, structure tensors, 3-bracket constants) is
 * derived from these tables and cross-checked against them.
 */

#include "octalg/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octalg {

enum class AlgebraKind { Octonion, SplitOctonion };

inline constexpr std::array<AlgebraKind, 2> kAllKinds{AlgebraKind::Octonion,
                                                      AlgebraKind::SplitOctonion};

/// "octonion" or "split"; the spelling used by the CLI and file formats.
std::string_view kind_name(AlgebraKind kind) noexcept;
std::optional<AlgebraKind> parse_kind(std::string_view name) noexcept;

inline std::ostream &operator<<(std::ostream &os, AlgebraKind kind) { return os << kind_name(kind); }

inline constexpr int kDim = 8;

/// Index of a basis unit E_0..E_7. E_0 is the real unit.
class BasisIndex {
  public:
    constexpr explicit BasisIndex(int i) : value_(i) {
        if (i < 0 || i >= kDim) {
            throw std::out_of_range("basis index must be in 0..7");
        }
    }
    [[nodiscard]] constexpr int value() const noexcept { return value_; }
    [[nodiscard]] constexpr bool is_real() const noexcept { return value_ == 0; }
    friend constexpr bool operator==(BasisIndex, BasisIndex) = default;

  private:
    int value_;
};

/// A basis unit with a sign, i.e. one Cayley table entry. sign == 0 is the
/// canonical zero marker and always carries index 0.
struct SignedBasis {
    int sign{0};
    int index{0};

    static constexpr SignedBasis zero() noexcept { return {}; }
    [[nodiscard]] constexpr SignedBasis operator-() const noexcept { return {-sign, index}; }
    friend constexpr bool operator==(const SignedBasis &, const SignedBasis &) = default;
};

/// "4", "-0", "0" (the zero marker renders as "0" too; it never occurs in
/// the built-in tables).
std::string to_string(SignedBasis s);
/// Parses the notation produced by to_string; throws std::invalid_argument.
SignedBasis parse_signed_basis(std::string_view text);

using TableEntries = std::array<std::array<SignedBasis, kDim>, kDim>;

class CayleyTable {
  public:
    CayleyTable(AlgebraKind kind, const TableEntries &entries) : kind_(kind), entries_(entries) {}

    [[nodiscard]] AlgebraKind kind() const noexcept { return kind_; }
    [[nodiscard]] SignedBasis at(int i, int j) const { return entries_.at(i).at(j); }
    [[nodiscard]] const TableEntries &entries() const noexcept { return entries_; }
    void set(int i, int j, SignedBasis s) { entries_.at(i).at(j) = s; }

    friend bool operator==(const CayleyTable &, const CayleyTable &) = default;

  private:
    AlgebraKind kind_;
    TableEntries entries_;
};

/// The built-in table for @p kind, transcribed entry by entry.
const CayleyTable &cayley_table(AlgebraKind kind);

/// One structural defect found by check_table.
struct TableViolation {
    enum class Rule { Identity, Antisymmetry, Diagonal, Range };
    Rule rule;
    int row;
    int col;
    std::string message;
};

/// Identity row/column, off-diagonal antisymmetry of the imaginary block, and
/// diagonal entries equal to +-E_0. Empty result means the table is sound.
std::vector<TableViolation> check_table(const CayleyTable &table);

SignedBasis basis_product(AlgebraKind kind, BasisIndex i, BasisIndex j);

class Element {
  public:
    Element() = default;
    explicit Element(const std::array<Rational, kDim> &coeffs) : coeffs_(coeffs) {}

    static Element basis(int i, const Rational &scale = 1);
    static Element zero() { return {}; }

    [[nodiscard]] const Rational &operator[](int i) const { return coeffs_.at(i); }
    Rational &operator[](int i) { return coeffs_.at(i); }
    [[nodiscard]] const std::array<Rational, kDim> &coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] const Rational &real() const { return coeffs_[0]; }
    /// Copy with the real coefficient cleared.
    [[nodiscard]] Element imag() const;
    [[nodiscard]] bool is_zero() const;

    Element &operator+=(const Element &o);
    Element &operator-=(const Element &o);
    Element &operator*=(const Rational &s);

    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend Element operator*(const Rational &s, Element a) { return a *= s; }
    friend Element operator*(Element a, const Rational &s) { return a *= s; }
    friend bool operator==(const Element &, const Element &) = default;

  private:
    std::array<Rational, kDim> coeffs_{};
};

/// "3/2 E0 - E3 + 2 E7"; "0" for the zero element.
std::string to_string(const Element &e);

Element multiply(const CayleyTable &table, const Element &a, const Element &b);
Element multiply(AlgebraKind kind, const Element &a, const Element &b);

Element conjugate(const Element &a);

/// (a, b) = Re(a conj(b)). Positive definite for the octonions, signature
/// (4,4) for the split-octonions.
Rational bilinear_form(AlgebraKind kind, const Element &a, const Element &b);

/// The commutator is normalized as [a,b] = kCommutatorScale * (ab - ba).
/// Multiply by 2 to compare with the unnormalized convention.
inline const Rational kCommutatorScale = make_rational(1, 2);

Element commutator(AlgebraKind kind, const Element &a, const Element &b);

/// (a,x,b) = (ax)b - a(xb).
Element associator(AlgebraKind kind, const Element &a, const Element &x, const Element &b);

/// J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y] with the normalized commutator.
Element jacobian(AlgebraKind kind, const Element &x, const Element &y, const Element &z);

struct MalcevResult {
    bool pass;
    Element discrepancy; ///< J(x,y,[x,z]) - [J(x,y,z),x]
};

MalcevResult malcev_check(AlgebraKind kind, const Element &x, const Element &y, const Element &z);

} // namespace octalg
