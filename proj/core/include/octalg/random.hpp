#pragma once

#include "octalg/algebra.hpp"

#include <cstdint>
#include <random>

namespace octalg {

/// Seeded source of small random rational elements. Coefficients have
/// numerators in [-9, 9] and denominators in [1, 9]; the identities checked
/// with them are multilinear so small supports are enough.
class ElementSampler {
  public:
    explicit ElementSampler(std::uint64_t seed) : rng_(seed) {}

    Rational scalar() {
        Rational r(num_(rng_), den_(rng_));
        r.canonicalize();
        return r;
    }

    Element element() {
        Element e;
        for (int i = 0; i < kDim; ++i) {
            e[i] = scalar();
        }
        return e;
    }

    Element imaginary_element() { return element().imag(); }

  private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> num_{-9, 9};
    std::uniform_int_distribution<unsigned> den_{1, 9};
};

} // namespace octalg
