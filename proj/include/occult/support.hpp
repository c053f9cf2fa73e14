#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace occult {

/// A failed check, naming the first violated clause in definition order.
struct Violation {
    std::string clause;
    std::string detail;
};

inline std::string to_string(const Violation& v) { return v.clause + ": " + v.detail; }

/// Result of a validator: empty means the property holds.
using CheckResult = std::optional<Violation>;

/// Thrown when an operation's stated precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string clause_, const std::string& detail)
        : std::invalid_argument(clause_ + ": " + detail), clause(std::move(clause_)) {}
    std::string clause;
};

/// Deterministic seeded RNG. All generators draw through this wrapper so that
/// identical (parameters, seed) yield identical structures on every platform
/// that ships the standard mt19937_64 engine.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform value in [0, n). n must be positive.
    int below(int n) {
        if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
        return static_cast<int>(next() % static_cast<std::uint64_t>(n));
    }

    /// Uniform value in [lo, hi] inclusive.
    int range(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("Rng::range: empty range");
        return lo + below(hi - lo + 1);
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        if (xs.empty()) throw std::invalid_argument("Rng::pick: empty vector");
        return xs[static_cast<std::size_t>(below(static_cast<int>(xs.size())))];
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace occult
