#include "octalg/algebra.hpp"

#include <charconv>
#include <sstream>

namespace octalg {

namespace {

// Rows of the two multiplication tables exactly as printed; "-0" is -E_0.
constexpr const char *kOctonionRows[kDim] = {
    "0 1 2 3 4 5 6 7",      "1 -0 4 7 -2 6 -5 -3", "2 -4 -0 5 1 -3 7 -6", "3 -7 -5 -0 6 2 -4 1",
    "4 2 -1 -6 -0 7 3 -5", "5 -6 3 -2 -7 -0 1 4", "6 5 -7 4 -3 -1 -0 2", "7 3 6 -1 5 -4 -2 -0",
};

constexpr const char *kSplitRows[kDim] = {
    "0 1 2 3 4 5 6 7",     "1 0 4 -7 2 -6 -5 -3", "2 -4 -0 5 1 -3 7 -6", "3 7 -5 0 -6 -2 -4 1",
    "4 -2 -1 6 0 -7 3 -5", "5 6 3 2 7 0 1 4",     "6 5 -7 4 -3 -1 -0 2", "7 3 6 -1 5 -4 -2 -0",
};

CayleyTable parse_rows(AlgebraKind kind, const char *const (&rows)[kDim]) {
    TableEntries entries{};
    for (int i = 0; i < kDim; ++i) {
        std::istringstream in(rows[i]);
        std::string tok;
        for (int j = 0; j < kDim; ++j) {
            in >> tok;
            entries[i][j] = parse_signed_basis(tok);
        }
    }
    return {kind, entries};
}

} // namespace

std::string_view kind_name(AlgebraKind kind) noexcept {
    return kind == AlgebraKind::Octonion ? "octonion" : "split";
}

std::optional<AlgebraKind> parse_kind(std::string_view name) noexcept {
    if (name == "octonion") {
        return AlgebraKind::Octonion;
    }
    if (name == "split") {
        return AlgebraKind::SplitOctonion;
    }
    return std::nullopt;
}

std::string to_string(SignedBasis s) {
    if (s.sign == 0) {
        return "0";
    }
    return (s.sign < 0 ? "-" : "") + std::to_string(s.index);
}

SignedBasis parse_signed_basis(std::string_view text) {
    int sign = 1;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        sign = text.front() == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    int index = -1;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
    if (ec != std::errc{} || ptr != text.data() + text.size() || index < 0 || index >= kDim) {
        throw std::invalid_argument("bad table entry '" + std::string(text) + "'");
    }
    return {sign, index};
}

const CayleyTable &cayley_table(AlgebraKind kind) {
    static const CayleyTable octonion = parse_rows(AlgebraKind::Octonion, kOctonionRows);
    static const CayleyTable split = parse_rows(AlgebraKind::SplitOctonion, kSplitRows);
    return kind == AlgebraKind::Octonion ? octonion : split;
}

std::vector<TableViolation> check_table(const CayleyTable &table) {
    std::vector<TableViolation> out;
    auto name = [](int i, int j) {
        return "E" + std::to_string(i) + "*E" + std::to_string(j);
    };
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const SignedBasis s = table.at(i, j);
            if (s.sign != 1 && s.sign != -1) {
                out.push_back({TableViolation::Rule::Range, i, j, name(i, j) + " is not +-E_k"});
            }
        }
    }
    for (int j = 0; j < kDim; ++j) {
        if (table.at(0, j) != SignedBasis{1, j}) {
            out.push_back({TableViolation::Rule::Identity, 0, j,
                           name(0, j) + " = " + to_string(table.at(0, j)) + ", expected E" +
                               std::to_string(j)});
        }
        if (j > 0 && table.at(j, 0) != SignedBasis{1, j}) {
            out.push_back({TableViolation::Rule::Identity, j, 0,
                           name(j, 0) + " = " + to_string(table.at(j, 0)) + ", expected E" +
                               std::to_string(j)});
        }
    }
    for (int mu = 1; mu < kDim; ++mu) {
        const SignedBasis d = table.at(mu, mu);
        if (d.index != 0 || d.sign == 0) {
            out.push_back({TableViolation::Rule::Diagonal, mu, mu,
                           name(mu, mu) + " = " + to_string(d) + ", expected +-E0"});
        }
        for (int nu = mu + 1; nu < kDim; ++nu) {
            const SignedBasis a = table.at(mu, nu);
            const SignedBasis b = table.at(nu, mu);
            if (a != -b || a.index == 0 || a.index == mu || a.index == nu) {
                out.push_back({TableViolation::Rule::Antisymmetry, mu, nu,
                               name(mu, nu) + " = " + to_string(a) + " but " + name(nu, mu) +
                                   " = " + to_string(b)});
            }
        }
    }
    return out;
}

SignedBasis basis_product(AlgebraKind kind, BasisIndex i, BasisIndex j) {
    return cayley_table(kind).at(i.value(), j.value());
}

Element Element::basis(int i, const Rational &scale) {
    Element e;
    e.coeffs_.at(i) = scale;
    return e;
}

Element Element::imag() const {
    Element e = *this;
    e.coeffs_[0] = 0;
    return e;
}

bool Element::is_zero() const {
    for (const auto &c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

Element &Element::operator+=(const Element &o) {
    for (int i = 0; i < kDim; ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

Element &Element::operator-=(const Element &o) {
    for (int i = 0; i < kDim; ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
}

Element &Element::operator*=(const Rational &s) {
    for (auto &c : coeffs_) {
        c *= s;
    }
    return *this;
}

std::string to_string(const Element &e) {
    std::string out;
    for (int i = 0; i < kDim; ++i) {
        const Rational &c = e[i];
        if (sgn(c) == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (out.empty()) {
            out += sgn(c) < 0 ? "-" : "";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += mag.get_str() + " ";
        }
        out += "E" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Element multiply(const CayleyTable &table, const Element &a, const Element &b) {
    Element out;
    Rational term;
    for (int i = 0; i < kDim; ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (int j = 0; j < kDim; ++j) {
            if (sgn(b[j]) == 0) {
                continue;
            }
            const SignedBasis s = table.at(i, j);
            if (s.sign == 0) {
                continue;
            }
            term = a[i] * b[j];
            if (s.sign > 0) {
                out[s.index] += term;
            } else {
                out[s.index] -= term;
            }
        }
    }
    return out;
}

Element multiply(AlgebraKind kind, const Element &a, const Element &b) {
    return multiply(cayley_table(kind), a, b);
}

Element conjugate(const Element &a) {
    Element out = -a;
    out[0] = a[0];
    return out;
}

Rational bilinear_form(AlgebraKind kind, const Element &a, const Element &b) {
    return multiply(kind, a, conjugate(b)).real();
}

Element commutator(AlgebraKind kind, const Element &a, const Element &b) {
    return kCommutatorScale * (multiply(kind, a, b) - multiply(kind, b, a));
}

Element associator(AlgebraKind kind, const Element &a, const Element &x, const Element &b) {
    return multiply(kind, multiply(kind, a, x), b) - multiply(kind, a, multiply(kind, x, b));
}

Element jacobian(AlgebraKind kind, const Element &x, const Element &y, const Element &z) {
    return commutator(kind, commutator(kind, x, y), z) +
           commutator(kind, commutator(kind, y, z), x) +
           commutator(kind, commutator(kind, z, x), y);
}

MalcevResult malcev_check(AlgebraKind kind, const Element &x, const Element &y, const Element &z) {
    Element d = jacobian(kind, x, y, commutator(kind, x, z)) -
                commutator(kind, jacobian(kind, x, y, z), x);
    const bool ok = d.is_zero();
    return {ok, std::move(d)};
}

} // namespace octalg
