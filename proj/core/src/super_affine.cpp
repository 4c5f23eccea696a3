#include "octalg/super_affine.hpp"

#include <bit>
#include <stdexcept>

namespace octalg {

std::string to_string(const ModeGenerator &g) {
    switch (g.species) {
    case Species::K:
        return "K";
    case Species::Psi:
        return "psi_" + std::to_string(g.index) + "^" + std::to_string(g.mode);
    case Species::Phi:
        return "phi_" + std::to_string(g.index) + "^" + std::to_string(g.mode);
    }
    return "?";
}

std::string to_string(const GradedElement &e) {
    if (e.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto &[g, c] : e.terms()) {
        const bool neg = sgn(c) < 0;
        const Rational mag = neg ? Rational(-c) : c;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mag != 1) {
            s += octalg::to_string(mag) + " ";
        }
        s += to_string(g);
    }
    return s;
}

std::optional<int> parity(const GradedElement &e) {
    std::optional<int> p;
    for (const auto &[g, c] : e.terms()) {
        if (p && *p != g.parity()) {
            return std::nullopt;
        }
        p = g.parity();
    }
    return p;
}

std::string BracketConvention::name() const {
    auto s = [](int v) { return v > 0 ? "+" : "-"; };
    return std::string("s1=") + s(s1) + " s2=" + s(s2) + " s3=" + s(s3) +
           (pairing == Pairing::Gamma ? " gamma" : " delta");
}

std::vector<BracketConvention> BracketConvention::all() {
    std::vector<BracketConvention> out;
    for (Pairing p : {Pairing::Gamma, Pairing::Delta}) {
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                for (int s3 : {1, -1}) {
                    out.push_back({s1, s2, s3, p});
                }
            }
        }
    }
    return out;
}

std::string_view reading_name(MalcevReading r) noexcept {
    return r == MalcevReading::GrassmannEnvelope ? "Grassmann envelope" : "literal super-Jacobian";
}

namespace {

/// Emits the terms of [a,b] as (generator, integer coefficient).
template <class Emit>
void bracket_terms(const StructureTensors &t, const BracketConvention &c, const ModeGenerator &a,
                   const ModeGenerator &b, Emit &&emit) {
    if (a.species == Species::K || b.species == Species::K) {
        return;
    }
    const auto pairing = [&](int mu, int nu) {
        return c.pairing == Pairing::Gamma ? t.gamma(mu, nu) : (mu == nu ? 1 : 0);
    };
    const auto structure = [&](int mu, int nu, auto &&out) {
        if (mu == 0 || nu == 0) {
            return;
        }
        for (int l = 1; l <= kImag; ++l) {
            if (const int v = t.b_mixed(mu, nu, l); v != 0) {
                out(l, v);
            }
        }
    };
    const int m = a.mode + b.mode;
    if (a.species == Species::Psi && b.species == Species::Psi) {
        if (m == 0) {
            if (const int p = pairing(a.index, b.index); p != 0) {
                emit(ModeGenerator::central(), p);
            }
        }
    } else if (a.species == Species::Psi) {
        structure(a.index, b.index, [&](int l, int v) { emit(ModeGenerator::psi(l, m), c.s1 * v); });
    } else if (b.species == Species::Psi) {
        // [phi_a, psi_b] = -[psi_b, phi_a]
        structure(b.index, a.index, [&](int l, int v) { emit(ModeGenerator::psi(l, m), -c.s1 * v); });
    } else {
        structure(a.index, b.index, [&](int l, int v) { emit(ModeGenerator::phi(l, m), c.s2 * v); });
        if (m == 0) {
            if (const int p = pairing(a.index, b.index); p != 0) {
                emit(ModeGenerator::central(), c.s3 * a.mode * p);
            }
        }
    }
}

/// A generator tensored with a Grassmann monomial (bitmask over theta_1..theta_4).
struct EnvKey {
    ModeGenerator g;
    unsigned mask{0};
    friend auto operator<=>(const EnvKey &, const EnvKey &) = default;
};

/// Sign of reordering theta_g theta_h into ascending order.
int merge_sign(unsigned g, unsigned h) {
    int swaps = 0;
    for (unsigned bit = 0; bit < 8; ++bit) {
        if (h & (1U << bit)) {
            swaps += std::popcount(g >> (bit + 1));
        }
    }
    return swaps % 2 == 0 ? 1 : -1;
}

template <class C> class Engine {
  public:
    using Sum = FormalSum<EnvKey, C>;

    Engine(AlgebraKind kind, const BracketConvention &conv) : t_(structure_tensors(kind)), conv_(conv) {}

    /// Envelope bracket [a (x) g, b (x) h] = (-1)^{|g||b|} [a,b] (x) gh; with empty masks it is
    /// the plain graded bracket.
    Sum bracket(const Sum &x, const Sum &y) const {
        Sum out;
        for (const auto &[ka, ca] : x.terms()) {
            for (const auto &[kb, cb] : y.terms()) {
                if (ka.mask & kb.mask) {
                    continue;
                }
                int sign = merge_sign(ka.mask, kb.mask);
                if ((std::popcount(ka.mask) & 1) && kb.g.parity()) {
                    sign = -sign;
                }
                const C coeff = ca * cb;
                const unsigned mask = ka.mask | kb.mask;
                bracket_terms(t_, conv_, ka.g, kb.g, [&](const ModeGenerator &g, int v) {
                    out.add(EnvKey{g, mask}, C(sign * v) * coeff);
                });
            }
        }
        return out;
    }

    Sum jacobian(const Sum &x, const Sum &y, const Sum &z) const {
        Sum j = bracket(bracket(x, y), z);
        j += bracket(bracket(y, z), x);
        j += bracket(bracket(z, x), y);
        return j;
    }

    static int parity_of(const Sum &s) {
        return s.is_zero() ? 0 : s.terms().front().first.g.parity();
    }

    Sum super_jacobian(const Sum &x, const Sum &y, const Sum &z) const {
        const int ex = parity_of(x), ey = parity_of(y), ez = parity_of(z);
        Sum j = C((ex * ez) % 2 ? -1 : 1) * bracket(x, bracket(y, z));
        j += C((ez * ey) % 2 ? -1 : 1) * bracket(z, bracket(x, y));
        j += C((ey * ex) % 2 ? -1 : 1) * bracket(y, bracket(z, x));
        return j;
    }

    Sum malcev(MalcevReading reading, const ModeGenerator &x, const ModeGenerator &y,
               const ModeGenerator &z) const {
        if (reading == MalcevReading::LiteralSuperJacobian) {
            const Sum X = lift(x, 0), Y = lift(y, 0), Z = lift(z, 0);
            return super_jacobian(X, Y, bracket(X, Z)) - bracket(super_jacobian(X, Y, Z), X);
        }
        const Sum X1 = lift(x, 1), X2 = lift(x, 2), Y = lift(y, 4), Z = lift(z, 8);
        Sum p = jacobian(X1, Y, bracket(X2, Z));
        p += jacobian(X2, Y, bracket(X1, Z));
        p -= bracket(jacobian(X1, Y, Z), X2);
        p -= bracket(jacobian(X2, Y, Z), X1);
        return p;
    }

    static Sum lift(const ModeGenerator &g, unsigned theta) {
        return Sum(EnvKey{g, g.parity() ? theta : 0U}, C(1));
    }

  private:
    const StructureTensors &t_;
    BracketConvention conv_;
};

using ExactEngine = Engine<Rational>;
using FastEngine = Engine<std::int64_t>;

ExactEngine::Sum embed(const GradedElement &e) {
    ExactEngine::Sum s;
    for (const auto &[g, c] : e.terms()) {
        s.add(EnvKey{g, 0}, c);
    }
    return s;
}

template <class C> GradedElement strip(const FormalSum<EnvKey, C> &s) {
    GradedElement out;
    for (const auto &[k, c] : s.terms()) {
        if constexpr (std::is_same_v<C, Rational>) {
            out.add(k.g, c);
        } else {
            out.add(k.g, Rational(static_cast<long>(c)));
        }
    }
    return out;
}

void require_homogeneous(const GradedElement &e) {
    if (!e.is_zero() && !parity(e)) {
        throw std::invalid_argument("graded bracket needs homogeneous arguments: " + to_string(e));
    }
}

} // namespace

GradedElement mode_bracket(AlgebraKind kind, const BracketConvention &conv, const ModeGenerator &g1,
                           const ModeGenerator &g2) {
    GradedElement out;
    bracket_terms(structure_tensors(kind), conv, g1, g2,
                  [&](const ModeGenerator &g, int v) { out.add(g, Rational(v)); });
    return out;
}

GradedElement graded_bracket(AlgebraKind kind, const BracketConvention &conv, const GradedElement &x,
                             const GradedElement &y) {
    require_homogeneous(x);
    require_homogeneous(y);
    return strip(ExactEngine(kind, conv).bracket(embed(x), embed(y)));
}

std::vector<ModeGenerator> generators(int mode_bound) {
    std::vector<ModeGenerator> out;
    for (Species s : {Species::Psi, Species::Phi}) {
        for (int mu = 0; mu < kDim; ++mu) {
            for (int m = -mode_bound; m <= mode_bound; ++m) {
                out.push_back({s, mu, m});
            }
        }
    }
    out.push_back(ModeGenerator::central());
    return out;
}

CheckResult graded_antisymmetry_check(AlgebraKind kind, const BracketConvention &conv, int mode_bound) {
    CheckResult r("graded antisymmetry");
    const auto gens = generators(mode_bound);
    for (const auto &a : gens) {
        for (const auto &b : gens) {
            ++r.checked;
            const Rational sign((a.parity() * b.parity()) % 2 ? 1 : -1);
            const GradedElement lhs = mode_bracket(kind, conv, a, b);
            const GradedElement rhs = sign * mode_bracket(kind, conv, b, a);
            if (lhs != rhs) {
                r.fail("[" + to_string(a) + "," + to_string(b) + "] = " + to_string(lhs) + " but graded swap gives " +
                       to_string(rhs));
            }
        }
    }
    return r;
}

CheckResult bracket_invariants_check(AlgebraKind kind, const BracketConvention &conv, int mode_bound) {
    CheckResult r("centrality, mode and grading additivity");
    const auto gens = generators(mode_bound);
    for (const auto &a : gens) {
        for (const auto &b : gens) {
            ++r.checked;
            const GradedElement v = mode_bracket(kind, conv, a, b);
            const auto where = "[" + to_string(a) + "," + to_string(b) + "]";
            if ((a.species == Species::K || b.species == Species::K) && !v.is_zero()) {
                r.fail(where + " involves K but is " + to_string(v));
            }
            for (const auto &[g, c] : v.terms()) {
                if (g.species == Species::K) {
                    if (a.mode + b.mode != 0) {
                        r.fail(where + " has a central term at total mode " + std::to_string(a.mode + b.mode));
                    }
                } else if (g.mode != a.mode + b.mode) {
                    r.fail(where + " has term " + to_string(g) + " off the mode sum");
                }
                if (g.parity() != (a.parity() + b.parity()) % 2) {
                    r.fail(where + " has term " + to_string(g) + " of the wrong parity");
                }
            }
        }
    }
    return r;
}

CheckResult mode_zero_homomorphism_check(AlgebraKind kind, const BracketConvention &conv) {
    CheckResult r("mode-0 even subalgebra");
    const Rational s(conv.s2);
    for (int mu = 0; mu < kDim; ++mu) {
        for (int nu = 0; nu < kDim; ++nu) {
            ++r.checked;
            const Element c = commutator(kind, Element::basis(mu), Element::basis(nu));
            GradedElement image;
            for (int l = 0; l < kDim; ++l) {
                image.add(ModeGenerator::phi(l, 0), s * c[l]);
            }
            const GradedElement br =
                (s * s) * mode_bracket(kind, conv, ModeGenerator::phi(mu, 0), ModeGenerator::phi(nu, 0));
            if (br != image) {
                r.fail("[E" + std::to_string(mu) + ",E" + std::to_string(nu) + "] maps to " + to_string(image) +
                       " but the mode bracket gives " + to_string(br));
            }
        }
    }
    return r;
}

GradedElement super_jacobian(AlgebraKind kind, const BracketConvention &conv, const GradedElement &x,
                             const GradedElement &y, const GradedElement &z) {
    require_homogeneous(x);
    require_homogeneous(y);
    require_homogeneous(z);
    return strip(ExactEngine(kind, conv).super_jacobian(embed(x), embed(y), embed(z)));
}

GradedElement super_jacobian(AlgebraKind kind, const BracketConvention &conv, const ModeGenerator &x,
                             const ModeGenerator &y, const ModeGenerator &z) {
    return super_jacobian(kind, conv, GradedElement(x, 1), GradedElement(y, 1), GradedElement(z, 1));
}

CheckResult even_super_jacobian_check(AlgebraKind kind, const BracketConvention &conv) {
    CheckResult r("mode-0 super-Jacobian against the element Jacobian");
    for_each_tuple<3>(0, kDim - 1, [&](const auto &t) {
        ++r.checked;
        const Element j = jacobian(kind, Element::basis(t[0]), Element::basis(t[1]), Element::basis(t[2]));
        GradedElement expected;
        for (int l = 0; l < kDim; ++l) {
            expected.add(ModeGenerator::phi(l, 0), -j[l]);
        }
        const GradedElement got = super_jacobian(kind, conv, ModeGenerator::phi(t[0], 0), ModeGenerator::phi(t[1], 0),
                                                 ModeGenerator::phi(t[2], 0));
        if (got != expected) {
            r.fail("phi^0" + tuple_string(t) + ": " + to_string(got) + " vs " + to_string(expected));
        }
    });
    return r;
}

GradedElement super_malcev_residual(AlgebraKind kind, const BracketConvention &conv, MalcevReading reading,
                                    const ModeGenerator &x, const ModeGenerator &y, const ModeGenerator &z) {
    return strip(ExactEngine(kind, conv).malcev(reading, x, y, z));
}

SuperMalcevResult super_malcev_check(AlgebraKind kind, const BracketConvention &conv, int mode_bound,
                                     MalcevReading reading) {
    if (mode_bound < 1) {
        throw std::invalid_argument("mode bound must be at least 1");
    }
    SuperMalcevResult r{reading, 0, std::nullopt};
    const FastEngine engine(kind, conv);
    const auto gens = generators(mode_bound);
    for (const auto &x : gens) {
        for (const auto &y : gens) {
            for (const auto &z : gens) {
                ++r.triples_checked;
                const auto res = engine.malcev(reading, x, y, z);
                if (!res.is_zero()) {
                    r.counterexample = MalcevCounterexample{x, y, z, to_string(strip(res))};
                    return r;
                }
            }
        }
    }
    return r;
}

std::vector<ConventionOutcome> convention_search(AlgebraKind kind, int mode_bound) {
    std::vector<ConventionOutcome> out;
    for (const auto &conv : BracketConvention::all()) {
        out.push_back({conv, graded_antisymmetry_check(kind, conv, mode_bound),
                       super_malcev_check(kind, conv, mode_bound, MalcevReading::GrassmannEnvelope)});
    }
    return out;
}

} // namespace octalg
