#include "octalg/subalgebra.hpp"

#include <algorithm>

namespace octalg {

std::string_view type_name(SubalgebraType t) noexcept {
    switch (t) {
    case SubalgebraType::Real:
        return "R";
    case SubalgebraType::Complex:
        return "C";
    case SubalgebraType::SplitComplex:
        return "SC";
    case SubalgebraType::Quaternion:
        return "H";
    case SubalgebraType::SplitQuaternion:
        return "SH";
    case SubalgebraType::Unrecognized:
        break;
    }
    return "?";
}

std::vector<int> quaternionic_triple(int mu) {
    auto wrap = [](int i) { return (i - 1) % 7 + 1; };
    return {wrap(mu), wrap(mu + 1), wrap(mu + 3)};
}

namespace {

SubalgebraEntry inspect(AlgebraKind kind, std::vector<int> basis) {
    const CayleyTable &t = cayley_table(kind);
    SubalgebraEntry e{std::move(basis), SubalgebraType::Unrecognized, true, true};
    auto member = [&](int i) { return std::find(e.basis.begin(), e.basis.end(), i) != e.basis.end(); };
    for (int i : e.basis) {
        for (int j : e.basis) {
            if (!member(t.at(i, j).index)) {
                e.closed = false;
            }
        }
    }
    for (int i : e.basis) {
        for (int j : e.basis) {
            for (int k : e.basis) {
                if (!associator(kind, Element::basis(i), Element::basis(j), Element::basis(k))
                         .is_zero()) {
                    e.associative = false;
                }
            }
        }
    }
    int negative = 0;
    for (int i : e.basis) {
        if (i != 0 && t.at(i, i).sign < 0) {
            ++negative;
        }
    }
    const int imaginary = static_cast<int>(e.basis.size()) - 1;
    if (!e.closed) {
        return e;
    }
    if (imaginary == 0) {
        e.type = SubalgebraType::Real;
    } else if (imaginary == 1) {
        e.type = negative == 1 ? SubalgebraType::Complex : SubalgebraType::SplitComplex;
    } else if (imaginary == 3 && e.associative) {
        // Split quaternions have one imaginary unit squaring to -1 and two to +1.
        if (negative == 3) {
            e.type = SubalgebraType::Quaternion;
        } else if (negative == 1) {
            e.type = SubalgebraType::SplitQuaternion;
        }
    }
    return e;
}

} // namespace

SubalgebraReport classify_subalgebras(AlgebraKind kind) {
    SubalgebraReport report{kind, {}, {}};
    report.entries.push_back(inspect(kind, {0}));
    for (int mu = 1; mu <= 7; ++mu) {
        report.entries.push_back(inspect(kind, {0, mu}));
    }
    for (int mu = 1; mu <= 7; ++mu) {
        auto triple = quaternionic_triple(mu);
        report.entries.push_back(inspect(kind, {0, triple[0], triple[1], triple[2]}));
    }
    for (const auto &e : report.entries) {
        if (!e.closed || e.type == SubalgebraType::Unrecognized) {
            std::string set;
            for (int i : e.basis) {
                set += (set.empty() ? "E" : ",E") + std::to_string(i);
            }
            report.problems.push_back("{" + set + "}" + (e.closed ? " unrecognized" : " not closed"));
        }
    }
    return report;
}

} // namespace octalg
