#pragma once

/**
 * @file report.hpp
 * @brief Suite runner, markdown/JSON reports, tensor export and table rendering.
 *
 * Report text is a pure function of the library version and the selection:
 * nothing time- or environment-dependent is written into it.
 */

#include "octalg/algebra.hpp"
#include "octalg/tensors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace octalg {

std::string_view library_version() noexcept;

enum class AlgebraChoice { Octonion, Split, Both };

std::string_view choice_name(AlgebraChoice c) noexcept;
std::optional<AlgebraChoice> parse_choice(std::string_view name) noexcept;
std::vector<AlgebraKind> kinds_of(AlgebraChoice c);

enum class Suite { Tables, Tensors, Identities, Malcev, Lie3, FConst, SuperAffine };

std::string_view suite_name(Suite s) noexcept;
/// Accepts the suite names and "all" (which yields nullopt here; see parse_suites).
std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::vector<Suite> all_suites();
/// Comma-free list of names, "all" allowed. Result is deduplicated and in canonical order.
/// Throws std::invalid_argument on an unknown name.
std::vector<Suite> parse_suites(const std::vector<std::string> &names);

struct SuiteSelection {
    AlgebraChoice algebra{AlgebraChoice::Both};
    std::vector<Suite> suites{all_suites()};
    std::uint64_t seed{0};
    int trials{1000};
    int mode_bound{2};
    /// Replaces the built-in table of its kind in the tables suite.
    std::optional<CayleyTable> table_override;
};

/// One line of a suite report. Lines with counted == false are informational findings:
/// they are printed with their outcome but never change the exit code.
struct ReportLine {
    std::string check;
    bool pass{true};
    bool counted{true};
    std::size_t checked{0};
    std::size_t failures{0};
    std::string detail;
};

struct SuiteReport {
    Suite suite;
    AlgebraKind kind;
    std::vector<ReportLine> lines;
    std::vector<std::pair<std::string, std::string>> scalars; ///< name, value
    std::vector<std::string> notes;
};

struct RunReport {
    SuiteSelection selection;
    std::vector<SuiteReport> suites;

    /// Counted lines that failed.
    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] int exit_code() const { return failures() == 0 ? 0 : 1; }
    [[nodiscard]] std::string markdown() const;
    [[nodiscard]] std::string json() const;
};

RunReport run(const SuiteSelection &selection);

// ---------------------------------------------------------------------------
// Export

enum class ExportTensor { Gamma, b, B, f, t, p };
enum class ExportFormat { Json, Csv };

std::string_view tensor_name(ExportTensor t) noexcept;
std::optional<ExportTensor> parse_tensor(std::string_view name) noexcept;
std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept;

struct ExportRecord {
    std::vector<int> indices;
    Rational value;
    friend bool operator==(const ExportRecord &, const ExportRecord &) = default;
};

/// Nonzero components, sorted lexicographically by indices. gamma, f, t and p use
/// indices 0..7; b and B use 1..7.
std::vector<ExportRecord> export_records(AlgebraKind kind, ExportTensor tensor);
std::string render_export(AlgebraKind kind, ExportTensor tensor, ExportFormat format);
/// Inverse of render_export's record list. Throws std::invalid_argument.
std::vector<ExportRecord> parse_export(std::string_view text, ExportFormat format);

/// Rebuilds tensors from exported records.
Metric metric_from_records(AlgebraKind kind, const std::vector<ExportRecord> &records);
Tensor3 tensor3_from_records(AlgebraKind kind, const std::vector<ExportRecord> &records);
Tensor4 tensor4_from_records(AlgebraKind kind, const std::vector<ExportRecord> &records);

// ---------------------------------------------------------------------------
// Tables

enum class TableFormat { Ascii, Json };

std::optional<TableFormat> parse_table_format(std::string_view name) noexcept;
/// Ascii: eight lines, row i lists E_i E_j for j = 0..7 separated by single spaces.
std::string render_table(const CayleyTable &table, TableFormat format);
/// {"algebra": "...", "rows": [["0","1",...], ...]}. Throws std::invalid_argument.
CayleyTable load_table_json(std::string_view text);

} // namespace octalg
