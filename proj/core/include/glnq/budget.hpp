#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glnq {

/// Thrown when an enumeration or summation would exceed the configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Resource limits for the exhaustive computations.
///
/// max_scan bounds the raw odometer states an enumerator may visit (e.g.
/// q^(n^2) candidate matrices for GL_n(F_q)); max_elements bounds the group
/// elements a single summation may consume (inner products, induced-character
/// sums); max_flags bounds the size of a flag basis.
struct EnumBudget {
    std::uint64_t max_scan = 100'000'000;
    std::uint64_t max_elements = 10'000'000;
    std::uint64_t max_flags = 100'000;
};

/// q^e if it is <= limit, otherwise throws budget_error tagged with `what`.
inline std::uint64_t checked_pow(std::uint64_t q, int e, std::uint64_t limit, const char* what) {
    std::uint64_t acc = 1;
    for (int i = 0; i < e; ++i) {
        if (acc > limit / q) throw budget_error(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(e) + " exceeds budget " + std::to_string(limit));
        acc *= q;
    }
    if (acc > limit) throw budget_error(std::string(what) + " exceeds budget");
    return acc;
}

} // namespace glnq
