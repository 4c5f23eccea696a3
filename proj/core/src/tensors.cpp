#include "octalg/tensors.hpp"

#include <algorithm>
#include <numeric>

namespace octalg {

Metric metric_from_table(const CayleyTable &table) {
    std::array<int, kDim> diag{};
    diag[0] = 1;
    for (int mu = 1; mu < kDim; ++mu) {
        const SignedBasis s = table.at(mu, mu);
        if (s.index != 0 || s.sign == 0) {
            throw TableError("E" + std::to_string(mu) + "^2 = " + to_string(s) + " is not +-E0");
        }
        diag[mu] = s.sign;
    }
    return {table.kind(), diag};
}

template <int Rank> bool is_totally_antisymmetric(const ImagTensor<Rank> &t) {
    std::array<int, Rank> idx{};
    for (std::size_t f = 0; f < ImagTensor<Rank>::kSize; ++f) {
        std::size_t rest = f;
        for (int p = Rank - 1; p >= 0; --p) {
            idx[p] = static_cast<int>(rest % kImag) + 1;
            rest /= kImag;
        }
        const int v = t.values()[f];
        for (int p = 0; p + 1 < Rank; ++p) {
            for (int q = p + 1; q < Rank; ++q) {
                auto swapped = idx;
                std::swap(swapped[p], swapped[q]);
                const int w = std::apply([&](auto... i) { return t(i...); }, swapped);
                if (w != -v) {
                    return false;
                }
            }
        }
    }
    return true;
}

template bool is_totally_antisymmetric<3>(const ImagTensor<3> &);
template bool is_totally_antisymmetric<4>(const ImagTensor<4> &);

Tensor3 structure_tensor_from_table(const CayleyTable &table, const Metric &gamma) {
    Tensor3 b(table.kind());
    for (int mu = 1; mu <= kImag; ++mu) {
        for (int nu = 1; nu <= kImag; ++nu) {
            if (mu == nu) {
                continue;
            }
            const SignedBasis s = table.at(mu, nu);
            if (s.index == 0 || s.sign == 0) {
                throw TableError("E" + std::to_string(mu) + "*E" + std::to_string(nu) +
                                 " has a real part");
            }
            b.at(mu, nu, s.index) = s.sign * gamma.diag(s.index);
        }
    }
    if (!is_totally_antisymmetric(b)) {
        throw TableError("lowered structure tensor is not totally antisymmetric");
    }
    return b;
}

int epsilon7(std::span<const int, kImag> idx) {
    // Parity by cycle decomposition.
    std::array<int, kImag> p{};
    std::array<bool, kImag> seen{};
    for (int i = 0; i < kImag; ++i) {
        const int v = idx[i];
        if (v < 1 || v > kImag || seen[v - 1]) {
            return 0;
        }
        seen[v - 1] = true;
        p[i] = v - 1;
    }
    seen.fill(false);
    int sign = 1;
    for (int i = 0; i < kImag; ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) {
            sign = -sign;
        }
    }
    return sign;
}

Tensor4 dual_tensor(const Tensor3 &b, const Metric &gamma) {
    Tensor4 B(b.kind());
    std::array<int, kImag> idx{};
    for (int m = 1; m <= kImag; ++m) {
        for (int n = 1; n <= kImag; ++n) {
            for (int r = 1; r <= kImag; ++r) {
                for (int s = 1; s <= kImag; ++s) {
                    int sum = 0;
                    for (int k = 1; k <= kImag; ++k) {
                        for (int l = 1; l <= kImag; ++l) {
                            for (int e = 1; e <= kImag; ++e) {
                                idx = {m, n, r, s, k, l, e};
                                const int eps = epsilon7(idx);
                                if (eps != 0) {
                                    sum += eps * gamma.diag(k) * gamma.diag(l) * gamma.diag(e) *
                                           b(k, l, e);
                                }
                            }
                        }
                    }
                    if (sum % 6 != 0) {
                        throw TableError("dual tensor is not integral");
                    }
                    B.at(m, n, r, s) = sum / 6;
                }
            }
        }
    }
    return B;
}

Tensor3 dual_round_trip(const Tensor4 &B, const Metric &gamma) {
    Tensor3 out(B.kind());
    std::array<int, kImag> idx{};
    for (int m = 1; m <= kImag; ++m) {
        for (int n = 1; n <= kImag; ++n) {
            for (int l = 1; l <= kImag; ++l) {
                int sum = 0;
                for (int k = 1; k <= kImag; ++k) {
                    for (int r = 1; r <= kImag; ++r) {
                        for (int s = 1; s <= kImag; ++s) {
                            for (int e = 1; e <= kImag; ++e) {
                                idx = {m, n, l, k, r, s, e};
                                const int eps = epsilon7(idx);
                                if (eps != 0) {
                                    sum += eps * gamma.diag(k) * gamma.diag(r) * gamma.diag(s) *
                                           gamma.diag(e) * B(k, r, s, e);
                                }
                            }
                        }
                    }
                }
                if (sum % 24 != 0) {
                    throw TableError("dual round trip is not integral");
                }
                out.at(m, n, l) = sum / 24;
            }
        }
    }
    return out;
}

std::optional<int> round_trip_sign(const Tensor3 &b, const Metric &gamma) {
    const Tensor3 back = dual_round_trip(dual_tensor(b, gamma), gamma);
    for (int sign : {1, -1}) {
        bool match = true;
        for (std::size_t f = 0; f < Tensor3::kSize && match; ++f) {
            match = back.values()[f] == sign * b.values()[f];
        }
        if (match) {
            return sign;
        }
    }
    return std::nullopt;
}

StructureTensors build_tensors(const CayleyTable &table) {
    Metric gamma = metric_from_table(table);
    Tensor3 b = structure_tensor_from_table(table, gamma);
    Tensor4 B = dual_tensor(b, gamma);
    return {gamma, b, B};
}

const StructureTensors &structure_tensors(AlgebraKind kind) {
    static const StructureTensors octonion = build_tensors(cayley_table(AlgebraKind::Octonion));
    static const StructureTensors split = build_tensors(cayley_table(AlgebraKind::SplitOctonion));
    return kind == AlgebraKind::Octonion ? octonion : split;
}

namespace {

Rational dot(const StructureTensors &t, const Element &a, const Element &b) {
    Rational out;
    for (int mu = 1; mu <= kImag; ++mu) {
        if (sgn(a[mu]) != 0 && sgn(b[mu]) != 0) {
            out += t.gamma.diag(mu) * (a[mu] * b[mu]);
        }
    }
    return out;
}

Element contract_b_e(const StructureTensors &t, const Element &a, const Element &b) {
    Element out;
    for (int mu = 1; mu <= kImag; ++mu) {
        if (sgn(a[mu]) == 0) {
            continue;
        }
        for (int nu = 1; nu <= kImag; ++nu) {
            if (sgn(b[nu]) == 0) {
                continue;
            }
            const Rational ab = a[mu] * b[nu];
            for (int k = 1; k <= kImag; ++k) {
                if (const int c = t.b_mixed(mu, nu, k); c != 0) {
                    out[k] += c * ab;
                }
            }
        }
    }
    return out;
}

} // namespace

Rational dot(AlgebraKind kind, const Element &a, const Element &b) {
    return dot(structure_tensors(kind), a, b);
}

Rational contract_b(AlgebraKind kind, const Element &a, const Element &b, const Element &x) {
    const StructureTensors &t = structure_tensors(kind);
    Rational out;
    for (int mu = 1; mu <= kImag; ++mu) {
        if (sgn(a[mu]) == 0) {
            continue;
        }
        for (int nu = 1; nu <= kImag; ++nu) {
            if (sgn(b[nu]) == 0) {
                continue;
            }
            for (int rho = 1; rho <= kImag; ++rho) {
                if (const int c = t.b(mu, nu, rho); c != 0 && sgn(x[rho]) != 0) {
                    out += c * (a[mu] * b[nu] * x[rho]);
                }
            }
        }
    }
    return out;
}

Element contract_b_e(AlgebraKind kind, const Element &a, const Element &b) {
    return contract_b_e(structure_tensors(kind), a, b);
}

Element contract_B_e(AlgebraKind kind, const Element &a, const Element &b, const Element &x) {
    const StructureTensors &t = structure_tensors(kind);
    Element out;
    for (int mu = 1; mu <= kImag; ++mu) {
        if (sgn(a[mu]) == 0) {
            continue;
        }
        for (int nu = 1; nu <= kImag; ++nu) {
            if (sgn(b[nu]) == 0) {
                continue;
            }
            for (int rho = 1; rho <= kImag; ++rho) {
                if (sgn(x[rho]) == 0) {
                    continue;
                }
                const Rational abx = a[mu] * b[nu] * x[rho];
                for (int s = 1; s <= kImag; ++s) {
                    if (const int c = t.B_mixed(mu, nu, rho, s); c != 0) {
                        out[s] += c * abx;
                    }
                }
            }
        }
    }
    return out;
}

Element unified_product(const StructureTensors &t, const Element &a, const Element &b) {
    const Element ai = a.imag();
    const Element bi = b.imag();
    Element out = contract_b_e(t, ai, bi);
    out += a.real() * bi;
    out += b.real() * ai;
    out[0] += a.real() * b.real() + dot(t, ai, bi);
    return out;
}

Element unified_product(AlgebraKind kind, const Element &a, const Element &b) {
    return unified_product(structure_tensors(kind), a, b);
}

CrosscheckReport unified_product_crosscheck(const CayleyTable &table) {
    CrosscheckReport report;
    std::optional<StructureTensors> t;
    try {
        t.emplace(build_tensors(table));
    } catch (const TableError &e) {
        report.error = e.what();
        return report;
    }
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const Element ei = Element::basis(i);
            const Element ej = Element::basis(j);
            const Element direct = multiply(table, ei, ej);
            const Element formula = unified_product(*t, ei, ej);
            ++report.pairs_checked;
            if (direct != formula) {
                report.mismatches.push_back({i, j, to_string(direct), to_string(formula)});
            }
        }
    }
    return report;
}

JacobianReport jacobian_tensor_check(AlgebraKind kind) {
    const StructureTensors &t = structure_tensors(kind);
    JacobianReport report{kind, 0, std::nullopt, 0, std::nullopt, std::nullopt};
    auto E = [](int i) { return Element::basis(i); };
    auto comm = [kind](const Element &x, const Element &y) { return commutator(kind, x, y); };

    // Bracketed form, unit weight: (1/6) sum over permutations of (nu kappa mu).
    auto bracket = [&](int mu, int nu, int kappa) {
        const std::array<int, 3> ref{nu, kappa, mu};
        std::array<int, 3> perm{0, 1, 2};
        Element out;
        do {
            int inversions = 0;
            for (int p = 0; p < 3; ++p) {
                for (int q = p + 1; q < 3; ++q) {
                    inversions += perm[p] > perm[q] ? 1 : 0;
                }
            }
            const int sign = inversions % 2 == 0 ? 1 : -1;
            const int n = ref[perm[0]], k = ref[perm[1]], m = ref[perm[2]];
            for (int lambda = 1; lambda <= kImag; ++lambda) {
                const int c1 = t.b_mixed(n, k, lambda);
                if (c1 == 0) {
                    continue;
                }
                for (int s = 1; s <= kImag; ++s) {
                    out[s] += sign * c1 * t.b_mixed(m, lambda, s);
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return make_rational(1, 6) * out;
    };

    bool ratio_consistent = true;
    std::optional<Rational> ratio;
    for (int mu = 1; mu <= kImag; ++mu) {
        for (int nu = 1; nu <= kImag; ++nu) {
            for (int kappa = 1; kappa <= kImag; ++kappa) {
                const Element J = comm(E(mu), comm(E(nu), E(kappa))) +
                                  comm(E(nu), comm(E(kappa), E(mu))) +
                                  comm(E(kappa), comm(E(mu), E(nu)));
                Element expected;
                for (int s = 1; s <= kImag; ++s) {
                    expected[s] = -3 * t.B_mixed(mu, nu, kappa, s);
                }
                ++report.triples_checked;
                if (J != expected && !report.first_violation) {
                    report.first_violation = std::array<int, 3>{mu, nu, kappa};
                }

                const Element element_J = jacobian(kind, E(mu), E(nu), E(kappa));
                ++report.element_triples_checked;
                if (element_J != Rational(3) * contract_B_e(kind, E(mu), E(nu), E(kappa)) &&
                    !report.first_element_violation) {
                    report.first_element_violation = std::array<int, 3>{mu, nu, kappa};
                }

                const Element br = bracket(mu, nu, kappa);
                for (int s = 1; s <= kImag; ++s) {
                    if (sgn(br[s]) == 0) {
                        if (sgn(J[s]) != 0) {
                            ratio_consistent = false;
                        }
                        continue;
                    }
                    const Rational r = J[s] / br[s];
                    if (!ratio) {
                        ratio = r;
                    } else if (*ratio != r) {
                        ratio_consistent = false;
                    }
                }
            }
        }
    }
    if (ratio_consistent) {
        report.bracket_ratio = ratio;
    }
    return report;
}

} // namespace octalg
