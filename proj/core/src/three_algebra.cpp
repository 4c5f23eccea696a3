#include "octalg/three_algebra.hpp"

#include "octalg/random.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace octalg {

namespace {

const Rational kHalf = make_rational(1, 2);

Element mul(AlgebraKind k, const Element &a, const Element &b) { return multiply(k, a, b); }

Element E(int i) { return Element::basis(i); }

std::string elem_tuple(std::initializer_list<int> idx) {
    std::string s = "(";
    bool first = true;
    for (int i : idx) {
        s += (first ? "E" : ",E") + std::to_string(i);
        first = false;
    }
    return s + ")";
}

} // namespace

Element derivation_apply(AlgebraKind k, const Element &a, const Element &b, const Element &x) {
    const Element xb = mul(k, x, b);
    const Element ax = mul(k, a, x);
    Element sum = mul(k, a, mul(k, b, x));
    sum -= mul(k, b, ax);
    sum += mul(k, xb, a);
    sum -= mul(k, mul(k, x, a), b);
    sum += mul(k, a, xb);
    sum -= mul(k, ax, b);
    return kHalf * sum;
}

Element derivation_closed_form(AlgebraKind k, const Element &a, const Element &b, const Element &x) {
    const Element A = a.imag();
    const Element B = b.imag();
    Element out = dot(k, B, x) * A - dot(k, A, x) * B;
    out *= Rational(2);
    out -= contract_B_e(k, a, b, x);
    return out;
}

std::array<Element, kDim> Derivation::matrix() const {
    std::array<Element, kDim> cols;
    for (int i = 0; i < kDim; ++i) {
        cols[i] = (*this)(E(i));
    }
    return cols;
}

std::string_view operator_pair_name(OperatorPair p) noexcept {
    switch (p) {
    case OperatorPair::LL:
        return "[L_a,L_b]";
    case OperatorPair::RR:
        return "[R_a,R_b]";
    case OperatorPair::LR:
        return "[L_a,R_b]";
    }
    return "?";
}

Element operator_commutator(AlgebraKind k, OperatorPair p, const Element &a, const Element &b, const Element &x) {
    switch (p) {
    case OperatorPair::LL:
        return kHalf * (mul(k, a, mul(k, b, x)) - mul(k, b, mul(k, a, x)));
    case OperatorPair::RR:
        return kHalf * (mul(k, mul(k, x, b), a) - mul(k, mul(k, x, a), b));
    case OperatorPair::LR:
        return kHalf * (mul(k, a, mul(k, x, b)) - mul(k, mul(k, a, x), b));
    }
    return {};
}

Element operator_commutator_closed(AlgebraKind k, OperatorPair p, const Element &a, const Element &b,
                                   const Element &x) {
    if (p == OperatorPair::LR) {
        return contract_B_e(k, a, b, x);
    }
    const Element A = a.imag();
    const Element B = b.imag();
    const bool left = p == OperatorPair::LL;
    const Element &first = left ? A : B;
    const Element &second = left ? B : A;
    Element out = Element::basis(0, contract_b(k, first, second, x));
    out += x[0] * contract_b_e(k, first, second);
    out -= contract_B_e(k, a, b, x);
    out += dot(k, B, x) * A;
    out -= dot(k, A, x) * B;
    return out;
}

Element three_bracket(AlgebraKind k, const Element &a, const Element &b, const Element &x) {
    return derivation_apply(k, a, b, x);
}

Element leibniz_residual(AlgebraKind k, const Element &a, const Element &b, const Element &x, const Element &y) {
    const Derivation D(k, a, b);
    return D(mul(k, x, y)) - mul(k, D(x), y) - mul(k, x, D(y));
}

bool leibniz_check(AlgebraKind k, const Element &a, const Element &b, const Element &x, const Element &y) {
    return leibniz_residual(k, a, b, x, y).is_zero();
}

Element fundamental_identity_residual(AlgebraKind k, const Element &x, const Element &y, const Element &a,
                                      const Element &b, const Element &c) {
    const Derivation Dxy(k, x, y);
    Element r = Dxy(three_bracket(k, a, b, c));
    r -= three_bracket(k, Dxy(a), b, c);
    r -= three_bracket(k, a, Dxy(b), c);
    r -= three_bracket(k, a, b, Dxy(c));
    return r;
}

bool fundamental_identity_check(AlgebraKind k, const Element &x, const Element &y, const Element &a,
                                const Element &b, const Element &c) {
    return fundamental_identity_residual(k, x, y, a, b, c).is_zero();
}

Rational metric_compatibility_residual(AlgebraKind k, const Element &a, const Element &b, const Element &x,
                                       const Element &y) {
    return bilinear_form(k, three_bracket(k, a, b, x), y) + bilinear_form(k, x, three_bracket(k, a, b, y));
}

bool metric_compatibility_check(AlgebraKind k, const Element &a, const Element &b, const Element &x,
                                const Element &y) {
    return sgn(metric_compatibility_residual(k, a, b, x, y)) == 0;
}

Rational additional_symmetry_residual(AlgebraKind k, const Element &x, const Element &y, const Element &a,
                                      const Element &b) {
    return bilinear_form(k, three_bracket(k, x, y, a), b) - bilinear_form(k, a, three_bracket(k, x, y, b));
}

bool additional_symmetry_check(AlgebraKind k, const Element &x, const Element &y, const Element &a,
                               const Element &b) {
    return sgn(additional_symmetry_residual(k, x, y, a, b)) == 0;
}

Rational pair_exchange_residual(AlgebraKind k, const Element &x, const Element &y, const Element &a,
                                const Element &b) {
    return bilinear_form(k, three_bracket(k, x, y, a), b) - bilinear_form(k, three_bracket(k, a, b, x), y);
}

// ---------------------------------------------------------------------------
// Sweeps

CheckResult sweep_derivation_dual_path(AlgebraKind k, int trials, std::uint64_t seed) {
    CheckResult r{"derivation dual path"};
    for_each_tuple<3>(0, 7, [&](const auto &t) {
        ++r.checked;
        const Element lhs = derivation_apply(k, E(t[0]), E(t[1]), E(t[2]));
        const Element rhs = derivation_closed_form(k, E(t[0]), E(t[1]), E(t[2]));
        if (lhs != rhs) {
            r.fail("D" + elem_tuple({t[0], t[1], t[2]}) + ": " + to_string(lhs) + " vs " + to_string(rhs));
        }
    });
    ElementSampler rng(seed);
    for (int i = 0; i < trials; ++i) {
        const Element a = rng.element(), b = rng.element(), x = rng.element();
        ++r.checked;
        if (derivation_apply(k, a, b, x) != derivation_closed_form(k, a, b, x)) {
            r.fail("random trial " + std::to_string(i));
        }
    }
    return r;
}

CheckResult sweep_derivation_antisymmetry(AlgebraKind k) {
    CheckResult r{"derivation antisymmetry"};
    for_each_tuple<3>(0, 7, [&](const auto &t) {
        ++r.checked;
        if (!(derivation_apply(k, E(t[0]), E(t[1]), E(t[2])) + derivation_apply(k, E(t[1]), E(t[0]), E(t[2])))
                 .is_zero()) {
            r.fail("D" + elem_tuple({t[0], t[1], t[2]}));
        }
    });
    return r;
}

CheckResult sweep_operator_closed_forms(AlgebraKind k) {
    CheckResult r{"L/R commutator closed forms"};
    for (OperatorPair p : {OperatorPair::LL, OperatorPair::RR, OperatorPair::LR}) {
        for_each_tuple<3>(0, 7, [&](const auto &t) {
            ++r.checked;
            if (operator_commutator(k, p, E(t[0]), E(t[1]), E(t[2])) !=
                operator_commutator_closed(k, p, E(t[0]), E(t[1]), E(t[2]))) {
                r.fail(std::string(operator_pair_name(p)) + elem_tuple({t[0], t[1], t[2]}));
            }
        });
    }
    return r;
}

CheckResult sweep_leibniz(AlgebraKind k) {
    CheckResult r{"Leibniz rule"};
    for_each_tuple<4>(0, 7, [&](const auto &t) {
        ++r.checked;
        if (!leibniz_check(k, E(t[0]), E(t[1]), E(t[2]), E(t[3]))) {
            r.fail("D_{a,b}(xy) at (a,b,x,y)=" + elem_tuple({t[0], t[1], t[2], t[3]}));
        }
    });
    return r;
}

CheckResult sweep_fundamental_identity(AlgebraKind k) {
    CheckResult r{"fundamental identity"};
    for_each_tuple<5>(0, 7, [&](const auto &t) {
        ++r.checked;
        const Element res = fundamental_identity_residual(k, E(t[0]), E(t[1]), E(t[2]), E(t[3]), E(t[4]));
        if (!res.is_zero()) {
            r.fail("(x,y,a,b,c)=" + elem_tuple({t[0], t[1], t[2], t[3], t[4]}) + " residual " + to_string(res));
        }
    });
    return r;
}

CheckResult sweep_metric_compatibility(AlgebraKind k, int trials, std::uint64_t seed) {
    CheckResult r{"metric compatibility"};
    for_each_tuple<4>(0, 7, [&](const auto &t) {
        ++r.checked;
        const Rational v = metric_compatibility_residual(k, E(t[0]), E(t[1]), E(t[2]), E(t[3]));
        if (sgn(v) != 0) {
            r.fail("(a,b,x,y)=" + elem_tuple({t[0], t[1], t[2], t[3]}) + " residual " + to_string(v));
        }
    });
    ElementSampler rng(seed);
    for (int i = 0; i < trials; ++i) {
        const Element a = rng.element(), b = rng.element(), x = rng.element(), y = rng.element();
        ++r.checked;
        if (!metric_compatibility_check(k, a, b, x, y)) {
            r.fail("random trial " + std::to_string(i));
        }
    }
    return r;
}

CheckResult sweep_additional_symmetry(AlgebraKind k) {
    CheckResult r{"additional symmetry"};
    for_each_tuple<4>(0, 7, [&](const auto &t) {
        ++r.checked;
        const Rational v = additional_symmetry_residual(k, E(t[0]), E(t[1]), E(t[2]), E(t[3]));
        if (sgn(v) != 0) {
            r.fail("(x,y,a,b)=" + elem_tuple({t[0], t[1], t[2], t[3]}) + " residual " + to_string(v));
        }
    });
    return r;
}

CheckResult sweep_pair_exchange(AlgebraKind k) {
    CheckResult r{"pair exchange ([x,y,a],b) = ([a,b,x],y)"};
    for_each_tuple<4>(0, 7, [&](const auto &t) {
        ++r.checked;
        const Rational v = pair_exchange_residual(k, E(t[0]), E(t[1]), E(t[2]), E(t[3]));
        if (sgn(v) != 0) {
            r.fail("(x,y,a,b)=" + elem_tuple({t[0], t[1], t[2], t[3]}) + " residual " + to_string(v));
        }
    });
    return r;
}

std::vector<CheckResult> bilinear_lemma_sweeps(AlgebraKind k) {
    auto form = [k](const Element &u, const Element &v) { return bilinear_form(k, u, v); };
    std::vector<CheckResult> out(4);
    out[0].name = "(ab,x)+(a,bx)=0";
    out[1].name = "(ab,x)+(a,xb)=0, b imaginary";
    out[2].name = "(ab,xy)-(ba,yx)=0";
    out[3].name = "(ab,xy)-(ba,yx)=0, imaginary units";
    for_each_tuple<3>(0, 7, [&](const auto &t) {
        const Element a = E(t[0]), b = E(t[1]), x = E(t[2]);
        ++out[0].checked;
        if (sgn(form(mul(k, a, b), x) + form(a, mul(k, b, x))) != 0) {
            out[0].fail("(a,b,x)=" + elem_tuple({t[0], t[1], t[2]}));
        }
        if (t[1] != 0) {
            ++out[1].checked;
            if (sgn(form(mul(k, a, b), x) + form(a, mul(k, x, b))) != 0) {
                out[1].fail("(a,b,x)=" + elem_tuple({t[0], t[1], t[2]}));
            }
        }
    });
    for_each_tuple<4>(0, 7, [&](const auto &t) {
        const Element a = E(t[0]), b = E(t[1]), x = E(t[2]), y = E(t[3]);
        const bool bad = sgn(form(mul(k, a, b), mul(k, x, y)) - form(mul(k, b, a), mul(k, y, x))) != 0;
        const auto where = "(a,b,x,y)=" + elem_tuple({t[0], t[1], t[2], t[3]});
        ++out[2].checked;
        if (bad) {
            out[2].fail(where);
        }
        if (std::all_of(t.begin(), t.end(), [](int i) { return i != 0; })) {
            ++out[3].checked;
            if (bad) {
                out[3].fail(where);
            }
        }
    });
    return out;
}

std::vector<CheckResult> flexibility_sweeps(AlgebraKind k) {
    std::vector<CheckResult> out(2);
    out[0].name = "(a,x,b)=-(b,x,a) with (a,x,b)=(ax)b-a(xb)";
    out[1].name = "(a,x,b)=-(b,x,a) with (a,x,b)=(ax)b-a(bx)";
    auto variant = [k](const Element &a, const Element &x, const Element &b) {
        return mul(k, mul(k, a, x), b) - mul(k, a, mul(k, b, x));
    };
    for_each_tuple<3>(0, 7, [&](const auto &t) {
        const Element a = E(t[0]), x = E(t[1]), b = E(t[2]);
        ++out[0].checked;
        ++out[1].checked;
        if (!(associator(k, a, x, b) + associator(k, b, x, a)).is_zero()) {
            out[0].fail("(a,x,b)=" + elem_tuple({t[0], t[1], t[2]}));
        }
        if (!(variant(a, x, b) + variant(b, x, a)).is_zero()) {
            out[1].fail("(a,x,b)=" + elem_tuple({t[0], t[1], t[2]}));
        }
    });
    return out;
}

int derivation_span_dimension(AlgebraKind k) {
    // Row-reduce the 64 flattened 8x8 operator matrices.
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const auto cols = Derivation(k, E(i), E(j)).matrix();
            std::vector<Rational> v;
            v.reserve(kDim * kDim);
            for (int c = 0; c < kDim; ++c) {
                for (int r = 0; r < kDim; ++r) {
                    v.push_back(cols[c][r]);
                }
            }
            rows.push_back(std::move(v));
        }
    }
    int rank = 0;
    const std::size_t width = kDim * kDim;
    for (std::size_t col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [col](const auto &r) { return sgn(r[col]) != 0; });
        if (pivot == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + rank, pivot);
        const auto &p = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][col]) == 0) {
                continue;
            }
            const Rational factor = rows[r][col] / p[col];
            for (std::size_t c = col; c < width; ++c) {
                rows[r][c] -= factor * p[c];
            }
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// f constants

std::vector<std::string> f_symmetry_violations(const FTensor &f) {
    std::vector<std::string> out;
    for_each_tuple<4>(0, 7, [&](const auto &t) {
        const auto &v = f.f(t[0], t[1], t[2], t[3]);
        const bool ok = v == -f.f(t[1], t[0], t[2], t[3]) && v == -f.f(t[0], t[1], t[3], t[2]) &&
                        v == f.f(t[2], t[3], t[0], t[1]);
        if (!ok && out.size() < 10) {
            out.push_back("f" + tuple_string(t) + " = " + to_string(v));
        }
    });
    return out;
}

FTensor extract_f(AlgebraKind k) {
    const Metric &g = structure_tensors(k).gamma;
    FTensor f{k, std::vector<Rational>(FTensor::kSize), std::vector<Rational>(FTensor::kSize)};
    for_each_tuple<3>(0, 7, [&](const auto &t) {
        const Element v = three_bracket(k, E(t[0]), E(t[1]), E(t[2]));
        for (int s = 0; s < kDim; ++s) {
            f.mixed[FTensor::flat(t[0], t[1], t[2], s)] = v[s];
            f.lowered[FTensor::flat(t[0], t[1], t[2], s)] = g.diag(s) * v[s];
        }
    });
    if (const auto bad = f_symmetry_violations(f); !bad.empty()) {
        std::string msg = "f lacks the pair symmetries:";
        for (const auto &b : bad) {
            msg += " " + b;
        }
        throw FSymmetryError(msg);
    }
    return f;
}

const FTensor &f_tensor(AlgebraKind k) {
    static std::once_flag once;
    static std::unique_ptr<FTensor> cache[2];
    std::call_once(once, [] {
        cache[0] = std::make_unique<FTensor>(extract_f(AlgebraKind::Octonion));
        cache[1] = std::make_unique<FTensor>(extract_f(AlgebraKind::SplitOctonion));
    });
    return *cache[k == AlgebraKind::Octonion ? 0 : 1];
}

FDecomposition decompose_f(const FTensor &f) {
    FDecomposition d{f.kind, std::vector<Rational>(FTensor::kSize), {}, {}};
    const Rational weight = make_rational(1, 24);
    std::array<int, 4> perm{0, 1, 2, 3};
    std::vector<std::pair<std::array<int, 4>, int>> perms;
    do {
        int inv = 0;
        for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
                inv += perm[a] > perm[b] ? 1 : 0;
            }
        }
        perms.emplace_back(perm, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for_each_tuple<4>(0, 7, [&](const auto &t) {
        Rational s;
        for (const auto &[p, sign] : perms) {
            const Rational &v = f.f(t[p[0]], t[p[1]], t[p[2]], t[p[3]]);
            if (sign > 0) {
                s += v;
            } else {
                s -= v;
            }
        }
        d.t[FTensor::flat(t[0], t[1], t[2], t[3])] = weight * s;
    });
    for (int m = 0; m < kDim; ++m) {
        for (int n = 0; n < kDim; ++n) {
            d.p[m][n] = f.f(m, n, m, n);
        }
    }
    for_each_tuple<4>(0, 7, [&](const auto &t) {
        const int m = t[0], n = t[1], kk = t[2], l = t[3];
        const int delta = (m == kk && n == l ? 1 : 0) - (m == l && n == kk ? 1 : 0);
        const Rational rebuilt = d.t_at(m, n, kk, l) + delta * d.p[m][n];
        if (rebuilt != f.f(m, n, kk, l)) {
            d.unexplained.push_back("f" + tuple_string(t) + " = " + to_string(f.f(m, n, kk, l)) + ", t + p gives " +
                                    to_string(rebuilt));
        }
    });
    return d;
}

CheckResult f_zero_patterns(const FTensor &f) {
    CheckResult r{"f zero patterns"};
    for_each_tuple<3>(0, 7, [&](const auto &t) {
        ++r.checked;
        if (sgn(f.f(0, t[0], t[1], t[2])) != 0) {
            r.fail("f_{0" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]) + "} != 0");
        }
    });
    const Tensor3 &b = structure_tensors(f.kind).b;
    for (int m = 1; m <= kImag; ++m) {
        for (int n = m + 1; n <= kImag; ++n) {
            for (int l = n + 1; l <= kImag; ++l) {
                if (b(m, n, l) == 0) {
                    continue;
                }
                std::array<int, 3> tri{m, n, l};
                do {
                    for (int s = 0; s < kDim; ++s) {
                        ++r.checked;
                        if (sgn(f.f(tri[0], tri[1], tri[2], s)) != 0) {
                            r.fail("f_{" + std::to_string(tri[0]) + std::to_string(tri[1]) +
                                   std::to_string(tri[2]) + std::to_string(s) + "} != 0");
                        }
                    }
                } while (std::next_permutation(tri.begin(), tri.end()));
            }
        }
    }
    return r;
}

std::vector<FReference> f_reference_values(AlgebraKind k) {
    if (k == AlgebraKind::Octonion) {
        return {{{1, 2, 5, 7}, 1}, {{1, 2, 3, 6}, -1}, {{2, 3, 4, 7}, -1}, {{3, 4, 1, 5}, 1},
                {{4, 5, 2, 6}, 1}, {{5, 6, 3, 7}, 1},  {{6, 7, 1, 2}, -1}};
    }
    return {{{1, 2, 5, 7}, -1}, {{1, 2, 3, 6}, 1}, {{2, 3, 4, 7}, 1}, {{3, 4, 1, 5}, 1},
            {{4, 5, 2, 6}, -1}, {{5, 6, 3, 7}, -1}, {{6, 7, 1, 2}, 1}};
}

FReferenceReport compare_f_reference(const FTensor &f) {
    FReferenceReport rep{f.kind, std::nullopt, {}, {}, 0, {}};
    int agree[2] = {0, 0}; // sign +1, sign -1
    for (const auto &ref : f_reference_values(f.kind)) {
        const auto &i = ref.indices;
        const Rational v = f.f(i[0], i[1], i[2], i[3]);
        rep.entries.emplace_back(ref, v);
        agree[0] += v == Rational(ref.expected) ? 1 : 0;
        agree[1] += v == Rational(-ref.expected) ? 1 : 0;
    }
    if (agree[0] == 0 && agree[1] == 0) {
        return rep;
    }
    const int s = agree[0] >= agree[1] ? 1 : -1;
    rep.global_sign = s;
    for (const auto &[ref, v] : rep.entries) {
        if (s * v != Rational(ref.expected)) {
            rep.mismatches.push_back(ref);
        }
    }
    const Metric &g = structure_tensors(f.kind).gamma;
    for (int m = 1; m <= kImag; ++m) {
        for (int n = 1; n <= kImag; ++n) {
            if (m == n) {
                continue;
            }
            ++rep.pair_components;
            int expected = -2;
            if (f.kind == AlgebraKind::SplitOctonion && g.diag(m) != g.diag(n)) {
                expected = 2;
            }
            const Rational v = f.f(m, n, m, n);
            if (s * v != Rational(expected)) {
                rep.pair_mismatches.push_back("f_{" + std::to_string(m) + std::to_string(n) + std::to_string(m) +
                                              std::to_string(n) + "} = " + to_string(v) + ", listed " +
                                              std::to_string(expected));
            }
        }
    }
    return rep;
}

CosetReport coset_correspondence(AlgebraKind k) {
    CosetReport rep{k, {}, {}, false, {}};
    const Tensor3 &b = structure_tensors(k).b;
    const FDecomposition d = decompose_f(f_tensor(k));

    std::set<std::array<int, 4>> nonzero;
    for (int a = 1; a <= kImag; ++a)
        for (int c = a + 1; c <= kImag; ++c)
            for (int e = c + 1; e <= kImag; ++e)
                for (int h = e + 1; h <= kImag; ++h)
                    if (sgn(d.t_at(a, c, e, h)) != 0) {
                        nonzero.insert({a, c, e, h});
                    }
    rep.nonzero_t_quadruples.assign(nonzero.begin(), nonzero.end());

    std::set<std::array<int, 4>> images;
    for (int m = 1; m <= kImag; ++m) {
        for (int n = m + 1; n <= kImag; ++n) {
            for (int l = n + 1; l <= kImag; ++l) {
                if (b(m, n, l) == 0) {
                    continue;
                }
                CosetEntry e{{m, n, l}, {}, {}};
                int w = 0;
                for (int i = 1; i <= kImag; ++i) {
                    if (i != m && i != n && i != l) {
                        e.complement[w++] = i;
                    }
                }
                const auto &c = e.complement;
                e.t_value = d.t_at(c[0], c[1], c[2], c[3]);
                if (sgn(e.t_value) == 0) {
                    rep.problems.push_back("t vanishes on the complement of " + tuple_string(e.triple));
                }
                images.insert(c);
                rep.entries.push_back(e);
            }
        }
    }
    for (const auto &q : nonzero) {
        if (images.count(q) == 0) {
            rep.problems.push_back("nonzero t on " + tuple_string(q) + " is not the complement of a triple");
        }
    }
    rep.bijective = rep.entries.size() == 7 && images.size() == 7 && images == nonzero;
    return rep;
}

} // namespace octalg
