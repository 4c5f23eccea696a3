#include "octalg/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>

namespace octalg {

namespace {

constexpr int N = kImag;

template <int K> struct Perms {
    std::vector<std::array<int, K>> perm;
    std::vector<int> sign;
    Perms() {
        std::array<int, K> p{};
        for (int i = 0; i < K; ++i) {
            p[i] = i;
        }
        do {
            int inv = 0;
            for (int a = 0; a < K; ++a) {
                for (int b = a + 1; b < K; ++b) {
                    inv += p[a] > p[b] ? 1 : 0;
                }
            }
            perm.push_back(p);
            sign.push_back(inv % 2 == 0 ? 1 : -1);
        } while (std::next_permutation(p.begin(), p.end()));
    }
};

const Perms<3> &perms3() {
    static const Perms<3> p;
    return p;
}
const Perms<4> &perms4() {
    static const Perms<4> p;
    return p;
}

/// Signed sum over permutations of the slot values (3! times the unit-weight bracket).
template <class F> std::int64_t asym3(F &&f, int a, int b, int c) {
    const std::array<int, 3> v{a, b, c};
    std::int64_t s = 0;
    const auto &P = perms3();
    for (std::size_t i = 0; i < P.perm.size(); ++i) {
        const auto &p = P.perm[i];
        s += P.sign[i] * f(v[p[0]], v[p[1]], v[p[2]]);
    }
    return s;
}

template <class F> std::int64_t asym4(F &&f, int a, int b, int c, int d) {
    const std::array<int, 4> v{a, b, c, d};
    std::int64_t s = 0;
    const auto &P = perms4();
    for (std::size_t i = 0; i < P.perm.size(); ++i) {
        const auto &p = P.perm[i];
        s += P.sign[i] * f(v[p[0]], v[p[1]], v[p[2]], v[p[3]]);
    }
    return s;
}

std::size_t pow7(int r) {
    std::size_t n = 1;
    for (int i = 0; i < r; ++i) {
        n *= N;
    }
    return n;
}

/// Precomputed single-index contractions used by several identities.
class Contractions {
  public:
    explicit Contractions(const StructureTensors &t) : t_(t) {
        bb_.resize(pow7(4));
        bB_.resize(pow7(5));
        BB_.resize(pow7(6));
        for (int a = 1; a <= N; ++a)
            for (int c = 1; c <= N; ++c)
                for (int d = 1; d <= N; ++d)
                    for (int e = 1; e <= N; ++e) {
                        int s = 0;
                        for (int k = 1; k <= N; ++k) {
                            s += t.b(k, a, c) * g(k) * t.b(k, d, e);
                        }
                        bb_[idx(a, c, d, e)] = s;
                        for (int f = 1; f <= N; ++f) {
                            int u = 0;
                            for (int k = 1; k <= N; ++k) {
                                u += t.b(k, a, c) * g(k) * t.B(k, d, e, f);
                            }
                            bB_[idx(a, c, d, e, f)] = u;
                            for (int h = 1; h <= N; ++h) {
                                int w = 0;
                                for (int k = 1; k <= N; ++k) {
                                    w += t.B(k, a, c, d) * g(k) * t.B(k, e, f, h);
                                }
                                BB_[idx(a, c, d, e, f, h)] = w;
                            }
                        }
                    }
    }

    [[nodiscard]] int g(int i) const { return t_.gamma.diag(i); }
    [[nodiscard]] int G(int i, int j) const { return t_.gamma(i, j); }
    [[nodiscard]] int b(int i, int j, int k) const { return t_.b(i, j, k); }
    [[nodiscard]] int B(int i, int j, int k, int l) const { return t_.B(i, j, k, l); }
    /// b_{k a c} b^k_{d e}
    [[nodiscard]] int bb(int a, int c, int d, int e) const { return bb_[idx(a, c, d, e)]; }
    /// b_{k a c} B^k_{d e f}
    [[nodiscard]] int bB(int a, int c, int d, int e, int f) const { return bB_[idx(a, c, d, e, f)]; }
    /// B_{k a c d} B^k_{e f h}
    [[nodiscard]] int BB(int a, int c, int d, int e, int f, int h) const {
        return BB_[idx(a, c, d, e, f, h)];
    }

  private:
    template <class... I> static std::size_t idx(I... i) {
        std::size_t f = 0;
        ((f = f * N + static_cast<std::size_t>(i - 1)), ...);
        return f;
    }

    const StructureTensors &t_;
    std::vector<int> bb_;
    std::vector<int> bB_;
    std::vector<int> BB_;
};

using Evaluator = std::function<std::int64_t(const int *)>;

struct Plan {
    int rank;
    std::int64_t denominator;
    Evaluator residual; ///< denominator * (LHS - RHS)
};

Plan plan_for(const Contractions &c, IdentityId id, Reading reading) {
    auto G = [&c](int i, int j) { return c.G(i, j); };
    auto b = [&c](int i, int j, int k) { return c.b(i, j, k); };
    auto B = [&c](int i, int j, int k, int l) { return c.B(i, j, k, l); };
    auto bb = [&c](int a, int d, int e, int f) { return c.bb(a, d, e, f); };
    auto bB = [&c](int a, int d, int e, int f, int h) { return c.bB(a, d, e, f, h); };

    switch (id) {
    case IdentityId::A1:
        return {0, 1, [&c](const int *) {
                    std::int64_t s = 0;
                    for (int m = 1; m <= N; ++m)
                        for (int n = 1; n <= N; ++n)
                            for (int l = 1; l <= N; ++l)
                                s += c.b(m, n, l) * c.b(m, n, l) * c.g(m) * c.g(n) * c.g(l);
                    return s + 42;
                }};
    case IdentityId::A2:
        return {0, 1, [&c](const int *) {
                    std::int64_t s = 0;
                    for (int m = 1; m <= N; ++m)
                        for (int n = 1; n <= N; ++n)
                            for (int r = 1; r <= N; ++r)
                                for (int q = 1; q <= N; ++q) {
                                    const int v = c.B(m, n, r, q);
                                    s += v * v * c.g(m) * c.g(n) * c.g(r) * c.g(q);
                                }
                    return s - 168;
                }};
    case IdentityId::A3:
        // b_{mu k l} b_nu^{k l} = -6 gamma_{mu nu}
        return {2, 1, [&c](const int *x) {
                    const int mu = x[0], nu = x[1];
                    std::int64_t s = 0;
                    for (int k = 1; k <= N; ++k)
                        for (int l = 1; l <= N; ++l)
                            s += c.b(mu, k, l) * c.g(k) * c.g(l) * c.b(nu, k, l);
                    return s + 6 * c.G(mu, nu);
                }};
    case IdentityId::A4: {
        // Free: rho eta sigma mu nu lambda [tau]. Brackets over (mu nu lambda).
        const bool printed = reading == Reading::Printed;
        return {printed ? 7 : 6, 6, [=](const int *x) {
                    const int r = x[0], e = x[1], s = x[2], m = x[3], n = x[4], l = x[5];
                    const int t = printed ? x[6] : l;
                    const std::int64_t lhs =
                        asym3([&](int p, int q, int u) { return b(r, p, q) * b(u, e, s); }, m, n, l) +
                        asym3([&](int p, int q, int u) { return b(s, p, q) * b(u, r, e); }, m, n, l) +
                        asym3([&](int p, int q, int u) { return b(e, p, q) * b(u, s, r); }, m, n, l);
                    const std::int64_t rhs =
                        asym3([&](int p, int q, int u) { return B(r, e, p, q) * G(u, s); }, m, n, l) +
                        asym3([&](int p, int q, int u) { return B(e, s, p, q) * G(u, r); }, m, n, l) +
                        asym3([&](int p, int q, int u) { return B(s, r, p, q) * G(u, e); }, m, n, l) -
                        6 * (G(e, n) * G(r, s) * G(t, m) + G(s, n) * G(t, r) * G(e, m) +
                             G(t, n) * G(e, r) * G(s, m));
                    return lhs - rhs;
                }};
    }
    case IdentityId::A5:
        // b_{k mu rho} b^k_{nu lambda} + b_{k mu lambda} b^k_{nu rho}
        //   = gamma_{mu rho} gamma_{nu lambda} - gamma_{mu lambda} gamma_{nu rho} - 2 gamma_{mu nu} gamma_{rho lambda}
        return {4, 1, [=](const int *x) {
                    const int m = x[0], n = x[1], r = x[2], l = x[3];
                    return std::int64_t{bb(m, r, n, l) + bb(m, l, n, r)} -
                           (G(m, r) * G(n, l) - G(m, l) * G(n, r) - 2 * G(m, n) * G(r, l));
                }};
    case IdentityId::A6:
        return {4, 1, [=](const int *x) {
                    const int m = x[0], n = x[1], r = x[2], s = x[3];
                    return std::int64_t{bb(m, n, r, s)} -
                           (B(m, n, r, s) - G(m, r) * G(n, s) + G(m, s) * G(n, r));
                }};
    case IdentityId::A7:
        // b_{k l rho} B^{k l}_{mu nu} = -4 b_{rho mu nu}
        return {3, 1, [&c](const int *x) {
                    const int r = x[0], m = x[1], n = x[2];
                    std::int64_t s = 0;
                    for (int k = 1; k <= N; ++k)
                        for (int l = 1; l <= N; ++l)
                            s += c.b(k, l, r) * c.g(k) * c.g(l) * c.B(k, l, m, n);
                    return s + 4 * c.b(r, m, n);
                }};
    case IdentityId::A8:
        return {2, 1, [&c](const int *x) {
                    const int mu = x[0], nu = x[1];
                    std::int64_t s = 0;
                    for (int k = 1; k <= N; ++k)
                        for (int l = 1; l <= N; ++l)
                            for (int e = 1; e <= N; ++e)
                                s += c.B(mu, k, l, e) * c.g(k) * c.g(l) * c.g(e) * c.B(nu, k, l, e);
                    return s - 24 * c.G(mu, nu);
                }};
    case IdentityId::A9:
        // b_{k mu rho} b^k_{nu sigma} = -1/2 b_{k mu nu} b^k_{rho sigma} + 1/2 B_{mu nu rho sigma}
        //   + 1/2 (gamma_{mu rho} gamma_{nu sigma} + gamma_{mu sigma} gamma_{nu rho}) - gamma_{mu nu} gamma_{rho sigma}
        return {4, 2, [=](const int *x) {
                    const int m = x[0], n = x[1], r = x[2], s = x[3];
                    return std::int64_t{2 * bb(m, r, n, s)} -
                           (-bb(m, n, r, s) + B(m, n, r, s) + G(m, r) * G(n, s) + G(m, s) * G(n, r) -
                            2 * G(m, n) * G(r, s));
                }};
    case IdentityId::A10:
        // B_{mu nu k l} B^{k l}_{sigma tau} = 4 (gamma_{mu sigma} gamma_{nu tau} - gamma_{mu tau} gamma_{nu sigma}) - 2 B_{mu nu sigma tau}
        return {4, 1, [&c](const int *x) {
                    const int m = x[0], n = x[1], s = x[2], t = x[3];
                    std::int64_t v = 0;
                    for (int k = 1; k <= N; ++k)
                        for (int l = 1; l <= N; ++l)
                            v += c.B(m, n, k, l) * c.g(k) * c.g(l) * c.B(k, l, s, t);
                    return v - (4 * (c.G(m, s) * c.G(n, t) - c.G(m, t) * c.G(n, s)) - 2 * c.B(m, n, s, t));
                }};
    case IdentityId::A11:
        // 2 b_{k[mu nu} B^k_{rho eta]sigma} = b_{k[mu nu} B^k_{rho]eta sigma} - b_{k eta[mu} B^k_{nu rho]sigma}
        return {5, 24, [=](const int *x) {
                    const int m = x[0], n = x[1], r = x[2], e = x[3], s = x[4];
                    const std::int64_t lhs =
                        2 * asym4([&](int p, int q, int u, int w) { return bB(p, q, u, w, s); }, m, n, r, e);
                    const std::int64_t rhs =
                        4 * asym3([&](int p, int q, int u) { return bB(p, q, u, e, s); }, m, n, r) -
                        4 * asym3([&](int p, int q, int u) { return bB(e, p, q, u, s); }, m, n, r);
                    return lhs - rhs;
                }};
    case IdentityId::A12:
        // b_{k tau[mu} B^k_{nu rho]sigma} - b_{k sigma[mu} B^k_{nu rho]tau}
        //   = b_{sigma[mu nu} gamma_{rho]tau} - b_{tau[mu nu} gamma_{rho]sigma}
        return {5, 6, [=](const int *x) {
                    const int m = x[0], n = x[1], r = x[2], s = x[3], t = x[4];
                    const std::int64_t lhs =
                        asym3([&](int p, int q, int u) { return bB(t, p, q, u, s); }, m, n, r) -
                        asym3([&](int p, int q, int u) { return bB(s, p, q, u, t); }, m, n, r);
                    const std::int64_t rhs =
                        asym3([&](int p, int q, int u) { return b(s, p, q) * G(u, t); }, m, n, r) -
                        asym3([&](int p, int q, int u) { return b(t, p, q) * G(u, s); }, m, n, r);
                    return lhs - rhs;
                }};
    case IdentityId::A13:
        // b_{k[mu nu} B^k_{sigma]rho eta} = -2 (b_{rho[mu nu} gamma_{sigma]eta} - b_{eta[mu nu} gamma_{sigma]rho})
        return {5, 6, [=](const int *x) {
                    const int m = x[0], n = x[1], s = x[2], r = x[3], e = x[4];
                    const std::int64_t lhs =
                        asym3([&](int p, int q, int u) { return bB(p, q, u, r, e); }, m, n, s);
                    const std::int64_t rhs =
                        -2 * (asym3([&](int p, int q, int u) { return b(r, p, q) * G(u, e); }, m, n, s) -
                              asym3([&](int p, int q, int u) { return b(e, p, q) * G(u, r); }, m, n, s));
                    return lhs - rhs;
                }};
    case IdentityId::A14:
        // b_{k mu nu} B^k_{rho eta sigma} = 3 (b_{mu[rho eta} gamma_{sigma]nu} - b_{nu[rho eta} gamma_{sigma]mu})
        return {5, 2, [=](const int *x) {
                    const int m = x[0], n = x[1], r = x[2], e = x[3], s = x[4];
                    const std::int64_t lhs = 2 * bB(m, n, r, e, s);
                    const std::int64_t rhs =
                        asym3([&](int p, int q, int u) { return b(m, p, q) * G(u, n); }, r, e, s) -
                        asym3([&](int p, int q, int u) { return b(n, p, q) * G(u, m); }, r, e, s);
                    return lhs - rhs;
                }};
    case IdentityId::A15:
        // b_{k[rho eta} B^k_{mu nu]tau} = 2 b_{[mu nu rho} gamma_{eta]tau}; the rank-3 symbol on the
        // right is printed with a capital letter and read as b.
        return {5, 24, [=](const int *x) {
                    const int r = x[0], e = x[1], m = x[2], n = x[3], t = x[4];
                    const std::int64_t lhs =
                        asym4([&](int p, int q, int u, int w) { return bB(p, q, u, w, t); }, r, e, m, n);
                    const std::int64_t rhs =
                        2 * asym4([&](int p, int q, int u, int w) { return b(p, q, u) * G(w, t); }, m, n, r, e);
                    return lhs - rhs;
                }};
    case IdentityId::A16:
        // b_{[mu nu rho} gamma_{eta]sigma} - b_{[mu nu rho} gamma_{sigma]eta}
        //   = 3/4 (b_{sigma[mu nu} gamma_{rho]eta} - b_{eta[mu nu} gamma_{rho]sigma})
        return {5, 24, [=](const int *x) {
                    const int m = x[0], n = x[1], r = x[2], e = x[3], s = x[4];
                    const std::int64_t lhs =
                        asym4([&](int p, int q, int u, int w) { return b(p, q, u) * G(w, s); }, m, n, r, e) -
                        asym4([&](int p, int q, int u, int w) { return b(p, q, u) * G(w, e); }, m, n, r, s);
                    const std::int64_t rhs =
                        3 * (asym3([&](int p, int q, int u) { return b(s, p, q) * G(u, e); }, m, n, r) -
                             asym3([&](int p, int q, int u) { return b(e, p, q) * G(u, s); }, m, n, r));
                    return lhs - rhs;
                }};
    case IdentityId::A17:
        // B_{k mu nu rho} B^k_{eta sigma tau} = gamma_{eta nu} gamma_{rho sigma} gamma_{tau mu}
        //   + gamma_{sigma nu} gamma_{tau rho} gamma_{eta mu} + gamma_{tau nu} gamma_{eta rho} gamma_{sigma mu}
        //   - 3 (B_{eta sigma[mu nu} gamma_{rho]tau} + B_{sigma tau[mu nu} gamma_{rho]eta} + B_{tau eta[mu nu} gamma_{rho]sigma})
        return {6, 2, [&c, G, B](const int *x) {
                    const int m = x[0], n = x[1], r = x[2], e = x[3], s = x[4], t = x[5];
                    const std::int64_t lhs = 2 * c.BB(m, n, r, e, s, t);
                    const std::int64_t ggg =
                        G(e, n) * G(r, s) * G(t, m) + G(s, n) * G(t, r) * G(e, m) + G(t, n) * G(e, r) * G(s, m);
                    const std::int64_t bg =
                        asym3([&](int p, int q, int u) { return B(e, s, p, q) * G(u, t); }, m, n, r) +
                        asym3([&](int p, int q, int u) { return B(s, t, p, q) * G(u, e); }, m, n, r) +
                        asym3([&](int p, int q, int u) { return B(t, e, p, q) * G(u, s); }, m, n, r);
                    return lhs - (2 * ggg - bg);
                }};
    case IdentityId::A18:
        // B_{k sigma[mu nu} B^k_{rho eta]tau} = b_{sigma[mu nu} b_{rho eta]tau} - B_{mu nu rho eta} gamma_{sigma tau}
        //   - 2 (B_{sigma[mu nu rho} gamma_{eta]tau} + B_{tau[mu nu rho} gamma_{eta]sigma})
        return {6, 24, [&c, G, B, b](const int *x) {
                    const int s = x[0], m = x[1], n = x[2], r = x[3], e = x[4], t = x[5];
                    const std::int64_t lhs =
                        asym4([&](int p, int q, int u, int w) { return c.BB(s, p, q, u, w, t); }, m, n, r, e);
                    const std::int64_t rhs =
                        asym4([&](int p, int q, int u, int w) { return b(s, p, q) * b(u, w, t); }, m, n, r, e) -
                        24 * B(m, n, r, e) * G(s, t) -
                        2 * (asym4([&](int p, int q, int u, int w) { return B(s, p, q, u) * G(w, t); }, m, n, r, e) +
                             asym4([&](int p, int q, int u, int w) { return B(t, p, q, u) * G(w, s); }, m, n, r, e));
                    return lhs - rhs;
                }};
    }
    throw std::invalid_argument("unknown identity");
}

} // namespace

std::vector<IdentityId> all_identities() {
    std::vector<IdentityId> out;
    for (int i = 1; i <= kIdentityCount; ++i) {
        out.push_back(static_cast<IdentityId>(i));
    }
    return out;
}

std::string identity_label(IdentityId id) { return "A" + std::to_string(static_cast<int>(id)); }

std::string_view identity_formula(IdentityId id) {
    switch (id) {
    case IdentityId::A1:
        return "b_{mu nu lambda} b^{mu nu lambda} = -42";
    case IdentityId::A2:
        return "B_{mu nu rho sigma} B^{mu nu rho sigma} = 168";
    case IdentityId::A3:
        return "b_{mu k l} b_nu^{k l} = -6 g_{mu nu}";
    case IdentityId::A4:
        return "b_{rho[mu nu} b_{lambda]eta sigma} + b_{sigma[mu nu} b_{lambda]rho eta} + b_{eta[mu nu} "
               "b_{lambda]sigma rho} = B_{rho eta[mu nu} g_{lambda]sigma} + B_{eta sigma[mu nu} "
               "g_{lambda]rho} + B_{sigma rho[mu nu} g_{lambda]eta} - g_{eta nu} g_{rho sigma} g_{tau mu} "
               "- g_{sigma nu} g_{tau rho} g_{eta mu} - g_{tau nu} g_{eta rho} g_{sigma mu}";
    case IdentityId::A5:
        return "b_{k mu rho} b^k_{nu lambda} + b_{k mu lambda} b^k_{nu rho} = g_{mu rho} g_{nu lambda} - "
               "g_{mu lambda} g_{nu rho} - 2 g_{mu nu} g_{rho lambda}";
    case IdentityId::A6:
        return "b_{k mu nu} b^k_{rho sigma} = B_{mu nu rho sigma} - g_{mu rho} g_{nu sigma} + g_{mu sigma} "
               "g_{nu rho}";
    case IdentityId::A7:
        return "b_{k l rho} B^{k l}_{mu nu} = -4 b_{rho mu nu}";
    case IdentityId::A8:
        return "B_{mu k l e} B_nu^{k l e} = 24 g_{mu nu}";
    case IdentityId::A9:
        return "b_{k mu rho} b^k_{nu sigma} = -1/2 b_{k mu nu} b^k_{rho sigma} + 1/2 B_{mu nu rho sigma} + "
               "1/2 (g_{mu rho} g_{nu sigma} + g_{mu sigma} g_{nu rho}) - g_{mu nu} g_{rho sigma}";
    case IdentityId::A10:
        return "B_{mu nu k l} B^{k l}_{sigma tau} = 4 (g_{mu sigma} g_{nu tau} - g_{mu tau} g_{nu sigma}) - "
               "2 B_{mu nu sigma tau}";
    case IdentityId::A11:
        return "2 b_{k[mu nu} B^k_{rho eta]sigma} = b_{k[mu nu} B^k_{rho]eta sigma} - b_{k eta[mu} "
               "B^k_{nu rho]sigma}";
    case IdentityId::A12:
        return "b_{k tau[mu} B^k_{nu rho]sigma} - b_{k sigma[mu} B^k_{nu rho]tau} = b_{sigma[mu nu} "
               "g_{rho]tau} - b_{tau[mu nu} g_{rho]sigma}";
    case IdentityId::A13:
        return "b_{k[mu nu} B^k_{sigma]rho eta} = -2 (b_{rho[mu nu} g_{sigma]eta} - b_{eta[mu nu} "
               "g_{sigma]rho})";
    case IdentityId::A14:
        return "b_{k mu nu} B^k_{rho eta sigma} = 3 (b_{mu[rho eta} g_{sigma]nu} - b_{nu[rho eta} "
               "g_{sigma]mu})";
    case IdentityId::A15:
        return "b_{k[rho eta} B^k_{mu nu]tau} = 2 b_{[mu nu rho} g_{eta]tau}";
    case IdentityId::A16:
        return "b_{[mu nu rho} g_{eta]sigma} - b_{[mu nu rho} g_{sigma]eta} = 3/4 (b_{sigma[mu nu} "
               "g_{rho]eta} - b_{eta[mu nu} g_{rho]sigma})";
    case IdentityId::A17:
        return "B_{k mu nu rho} B^k_{eta sigma tau} = g_{eta nu} g_{rho sigma} g_{tau mu} + g_{sigma nu} "
               "g_{tau rho} g_{eta mu} + g_{tau nu} g_{eta rho} g_{sigma mu} - 3 (B_{eta sigma[mu nu} "
               "g_{rho]tau} + B_{sigma tau[mu nu} g_{rho]eta} + B_{tau eta[mu nu} g_{rho]sigma})";
    case IdentityId::A18:
        return "B_{k sigma[mu nu} B^k_{rho eta]tau} = b_{sigma[mu nu} b_{rho eta]tau} - B_{mu nu rho eta} "
               "g_{sigma tau} - 2 (B_{sigma[mu nu rho} g_{eta]tau} + B_{tau[mu nu rho} g_{eta]sigma})";
    }
    return "";
}

std::string_view reading_name(Reading r) noexcept {
    return r == Reading::Printed ? "printed" : "tau->lambda";
}

std::vector<Reading> readings_for(IdentityId id) {
    if (id == IdentityId::A4) {
        return {Reading::Printed, Reading::TauAsLambda};
    }
    return {Reading::Printed};
}

std::vector<std::string> free_indices(IdentityId id, Reading reading) {
    switch (id) {
    case IdentityId::A1:
    case IdentityId::A2:
        return {};
    case IdentityId::A3:
    case IdentityId::A8:
        return {"mu", "nu"};
    case IdentityId::A4:
        if (reading == Reading::Printed) {
            return {"rho", "eta", "sigma", "mu", "nu", "lambda", "tau"};
        }
        return {"rho", "eta", "sigma", "mu", "nu", "lambda"};
    case IdentityId::A5:
        return {"mu", "nu", "rho", "lambda"};
    case IdentityId::A6:
    case IdentityId::A9:
        return {"mu", "nu", "rho", "sigma"};
    case IdentityId::A7:
        return {"rho", "mu", "nu"};
    case IdentityId::A10:
        return {"mu", "nu", "sigma", "tau"};
    case IdentityId::A11:
    case IdentityId::A14:
    case IdentityId::A16:
        return {"mu", "nu", "rho", "eta", "sigma"};
    case IdentityId::A12:
        return {"mu", "nu", "rho", "sigma", "tau"};
    case IdentityId::A13:
        return {"mu", "nu", "sigma", "rho", "eta"};
    case IdentityId::A15:
        return {"rho", "eta", "mu", "nu", "tau"};
    case IdentityId::A17:
        return {"mu", "nu", "rho", "eta", "sigma", "tau"};
    case IdentityId::A18:
        return {"sigma", "mu", "nu", "rho", "eta", "tau"};
    }
    return {};
}

std::vector<int> ResidualField::indices(std::size_t flat) const {
    std::vector<int> out(static_cast<std::size_t>(rank));
    for (int p = rank - 1; p >= 0; --p) {
        out[static_cast<std::size_t>(p)] = static_cast<int>(flat % N) + 1;
        flat /= N;
    }
    return out;
}

std::size_t ResidualField::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(numerators.begin(), numerators.end(), [](std::int64_t v) { return v != 0; }));
}

ResidualField identity_residuals(const StructureTensors &t, IdentityId id, Reading reading) {
    const Contractions c(t);
    const Plan plan = plan_for(c, id, reading);
    ResidualField field;
    field.rank = plan.rank;
    field.denominator = plan.denominator;
    const std::size_t total = pow7(plan.rank);
    field.numerators.resize(total);
    std::vector<int> idx(static_cast<std::size_t>(std::max(plan.rank, 1)), 1);
    for (std::size_t f = 0; f < total; ++f) {
        field.numerators[f] = plan.residual(idx.data());
        for (int p = plan.rank - 1; p >= 0; --p) {
            auto &v = idx[static_cast<std::size_t>(p)];
            if (++v <= N) {
                break;
            }
            v = 1;
        }
    }
    return field;
}

std::int64_t b_squared(const StructureTensors &t) {
    std::int64_t s = 0;
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= N; ++n)
            for (int l = 1; l <= N; ++l)
                s += t.b(m, n, l) * t.b(m, n, l) * t.gamma.diag(m) * t.gamma.diag(n) * t.gamma.diag(l);
    return s;
}

std::int64_t B_squared(const StructureTensors &t) {
    std::int64_t s = 0;
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= N; ++n)
            for (int r = 1; r <= N; ++r)
                for (int q = 1; q <= N; ++q) {
                    const int v = t.B(m, n, r, q);
                    s += v * v * t.gamma.diag(m) * t.gamma.diag(n) * t.gamma.diag(r) * t.gamma.diag(q);
                }
    return s;
}

bool IdentityReport::pass() const noexcept { return holding_reading().has_value(); }

std::optional<Reading> IdentityReport::holding_reading() const noexcept {
    for (const auto &r : readings) {
        if (r.holds()) {
            return r.reading;
        }
    }
    return std::nullopt;
}

IdentityReport verify_identity(const StructureTensors &t, IdentityId id) {
    IdentityReport report{id, t.kind(), {}, std::nullopt};
    for (Reading reading : readings_for(id)) {
        const ResidualField field = identity_residuals(t, id, reading);
        ReadingResult r{reading, field.size(), 0, {}};
        for (std::size_t f = 0; f < field.size(); ++f) {
            if (field.numerators[f] == 0) {
                continue;
            }
            ++r.nonzero;
            if (r.samples.size() < 5) {
                r.samples.push_back({field.indices(f), field.at(f)});
            }
        }
        report.readings.push_back(std::move(r));
    }
    if (id == IdentityId::A1) {
        report.scalar = Rational(static_cast<long>(b_squared(t)));
    } else if (id == IdentityId::A2) {
        report.scalar = Rational(static_cast<long>(B_squared(t)));
    }
    return report;
}

IdentityReport verify_identity(AlgebraKind kind, IdentityId id) {
    return verify_identity(structure_tensors(kind), id);
}

} // namespace octalg
