#pragma once

/**
 * @file check.hpp
 * @brief Outcome of an exhaustive or sampled verification sweep.
 */

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace octalg {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t checked{0};
    std::size_t failures{0};
    std::string first_failure; ///< human-readable description of the first violation
    std::vector<std::string> notes;

    [[nodiscard]] bool pass() const noexcept { return failures == 0; }

    void fail(std::string what) {
        if (failures++ == 0) {
            first_failure = std::move(what);
        }
    }
};

/// Calls f(std::array<int, N>) for every tuple in {lo..hi}^N, last index fastest.
template <std::size_t N, class F> void for_each_tuple(int lo, int hi, F &&f) {
    std::array<int, N> t;
    t.fill(lo);
    while (true) {
        f(std::as_const(t));
        std::size_t p = N;
        while (p > 0) {
            --p;
            if (++t[p] <= hi) {
                break;
            }
            t[p] = lo;
            if (p == 0) {
                return;
            }
        }
        if constexpr (N == 0) {
            return;
        }
    }
}

/// "(1,2,3)"
template <std::size_t N> std::string tuple_string(const std::array<int, N> &t) {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) {
        s += (i ? "," : "") + std::to_string(t[i]);
    }
    return s + ")";
}

} // namespace octalg
