#include "octalg/reference.hpp"

#include <algorithm>

namespace octalg {

std::array<int, kDim> reference_gamma(AlgebraKind kind) {
    if (kind == AlgebraKind::Octonion) {
        return {1, -1, -1, -1, -1, -1, -1, -1};
    }
    return {1, 1, -1, 1, 1, 1, -1, -1};
}

std::vector<ComponentValue> reference_b(AlgebraKind kind) {
    if (kind == AlgebraKind::Octonion) {
        return {{{1, 2, 4}, -1}, {{2, 3, 5}, -1}, {{3, 4, 6}, -1}, {{4, 5, 7}, -1},
                {{5, 6, 1}, -1}, {{6, 7, 2}, -1}, {{7, 1, 3}, -1}};
    }
    return {{{1, 2, 4}, 1}, {{2, 3, 5}, 1}, {{3, 4, 6}, 1}, {{4, 5, 7}, 1},
            {{5, 6, 1}, 1}, {{6, 7, 2}, -1}, {{7, 1, 3}, 1}};
}

std::vector<ComponentValue> reference_B(AlgebraKind kind) {
    const int v = kind == AlgebraKind::Octonion ? 1 : -1;
    return {{{1, 2, 7, 5}, v}, {{1, 2, 3, 6}, v}, {{1, 4, 3, 5}, 1}, {{1, 4, 6, 7}, v},
            {{2, 4, 7, 3}, v}, {{2, 4, 6, 5}, v}, {{3, 6, 5, 7}, v}};
}

std::vector<SubalgebraType> reference_subalgebra_types(AlgebraKind kind) {
    using T = SubalgebraType;
    if (kind == AlgebraKind::Octonion) {
        return {T::Real,       T::Complex,    T::Complex,    T::Complex,    T::Complex,
                T::Complex,    T::Complex,    T::Complex,    T::Quaternion, T::Quaternion,
                T::Quaternion, T::Quaternion, T::Quaternion, T::Quaternion, T::Quaternion};
    }
    // {E0,E_mu}: complex for mu in {2,6,7}; the 4-dim sets are split quaternions
    // except {E0,E6,E7,E2}.
    return {T::Real,
            T::SplitComplex,
            T::Complex,
            T::SplitComplex,
            T::SplitComplex,
            T::SplitComplex,
            T::Complex,
            T::Complex,
            T::SplitQuaternion,
            T::SplitQuaternion,
            T::SplitQuaternion,
            T::SplitQuaternion,
            T::SplitQuaternion,
            T::Quaternion,
            T::SplitQuaternion};
}

namespace {

std::size_t flat(const std::vector<int> &idx) {
    std::size_t f = 0;
    for (int i : idx) {
        f = f * kImag + static_cast<std::size_t>(i - 1);
    }
    return f;
}

std::vector<int> unflat(std::size_t f, std::size_t rank) {
    std::vector<int> idx(rank);
    for (std::size_t p = rank; p-- > 0;) {
        idx[p] = static_cast<int>(f % kImag) + 1;
        f /= kImag;
    }
    return idx;
}

std::string index_string(const std::vector<int> &idx) {
    std::string s;
    for (int i : idx) {
        s += std::to_string(i);
    }
    return s;
}

template <std::size_t N>
CheckResult compare_antisymmetric(std::string name, const std::array<int, N> &computed,
                                  const std::vector<ComponentValue> &listed, std::size_t rank) {
    CheckResult r(std::move(name));
    std::vector<int> expected(N, 0);
    for (const auto &c : listed) {
        std::vector<int> perm(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            perm[i] = static_cast<int>(i);
        }
        do {
            int inv = 0;
            for (std::size_t a = 0; a < rank; ++a) {
                for (std::size_t b = a + 1; b < rank; ++b) {
                    inv += perm[a] > perm[b] ? 1 : 0;
                }
            }
            std::vector<int> idx(rank);
            for (std::size_t i = 0; i < rank; ++i) {
                idx[i] = c.indices[static_cast<std::size_t>(perm[i])];
            }
            expected[flat(idx)] = inv % 2 == 0 ? c.value : -c.value;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    auto matches = [&](int sign) {
        for (std::size_t f = 0; f < N; ++f) {
            if (computed[f] != sign * expected[f]) {
                return false;
            }
        }
        return true;
    };
    r.checked = N;
    if (matches(1)) {
        r.notes.push_back("global sign +1");
    } else if (matches(-1)) {
        r.notes.push_back("global sign -1 relative to the listed values");
    } else {
        for (std::size_t f = 0; f < N; ++f) {
            if (computed[f] != expected[f]) {
                const auto idx = unflat(f, rank);
                r.fail("component " + index_string(idx) + " = " + std::to_string(computed[f]) + ", listed " +
                       std::to_string(expected[f]));
            }
        }
    }
    return r;
}

} // namespace

CheckResult compare_gamma_reference(const StructureTensors &t) {
    CheckResult r("gamma against listed signature");
    const auto ref = reference_gamma(t.kind());
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            ++r.checked;
            const int expected = i == j ? ref[i] : 0;
            if (t.gamma(i, j) != expected) {
                r.fail("gamma_" + std::to_string(i) + std::to_string(j) + " = " + std::to_string(t.gamma(i, j)) +
                       ", listed " + std::to_string(expected));
            }
        }
    }
    return r;
}

CheckResult compare_b_reference(const StructureTensors &t) {
    return compare_antisymmetric("b against listed triples", t.b.values(), reference_b(t.kind()), 3);
}

CheckResult compare_B_reference(const StructureTensors &t) {
    return compare_antisymmetric("B against listed quadruples", t.B.values(), reference_B(t.kind()), 4);
}

CheckResult compare_subalgebra_reference(const SubalgebraReport &rep) {
    CheckResult r("subalgebra classification");
    const auto expected = reference_subalgebra_types(rep.kind);
    for (const auto &p : rep.problems) {
        r.fail(p);
    }
    for (std::size_t i = 0; i < rep.entries.size() && i < expected.size(); ++i) {
        ++r.checked;
        const auto &e = rep.entries[i];
        if (e.type != expected[i]) {
            std::string set;
            for (int b : e.basis) {
                set += (set.empty() ? "E" : ",E") + std::to_string(b);
            }
            r.fail("{" + set + "} is " + std::string(type_name(e.type)) + ", expected " +
                   std::string(type_name(expected[i])));
        }
    }
    if (rep.entries.size() != expected.size()) {
        r.fail("expected " + std::to_string(expected.size()) + " candidate sets, got " +
               std::to_string(rep.entries.size()));
    }
    return r;
}

} // namespace octalg
