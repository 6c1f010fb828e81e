#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latorus {

/// One verification step inside a suite. A failing check carries a
/// counterexample string that can be replayed through the library.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string counterexample;  // empty when passing
    std::string details;
};

/// Machine-readable result of one verification suite.
struct CheckReport {
    std::string suite;
    int window = 0;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string counterexample = "", std::string details = "") {
        checks.push_back({std::move(name), pass, std::move(counterexample), std::move(details)});
    }
};

/// Deterministic generator for seeded sampling in the property suites
/// (splitmix64). Self-contained so reports never depend on the platform's
/// distribution implementations.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi] (bias irrelevant for sampling).
    std::int64_t pick(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Nonzero integer in [lo, hi] (requires the range to contain one).
    std::int64_t pick_nonzero(std::int64_t lo, std::int64_t hi) {
        for (;;) {
            std::int64_t v = pick(lo, hi);
            if (v != 0) return v;
        }
    }

private:
    std::uint64_t state_;
};

/// Options shared by the verification suites.
struct VerifyOptions {
    std::uint64_t seed = 0;
    int workers = 1;
    int pair_samples = 200;
};

}  // namespace latorus
