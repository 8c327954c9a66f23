#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "glnq/characters.hpp"

namespace glnq {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on success, diagnostic on failure
};

/// Seeded-random invertible matrix (rejection sampling, deterministic per rng
/// state).
FqMatrix random_gl(int n, const FieldSpec& f, std::mt19937_64& rng);

/// Seeded-random element of M^lambda with small integer coefficients on a few
/// flags of the given enumeration; never zero.
MVector random_mvector(const Partition& lambda, const CoeffField& K,
                       const std::vector<Flag>& flags, std::mt19937_64& rng);

/// Checks that `count` seeded-random cyclic submodules V of M^lambda each
/// satisfy S^lambda <= V or V <= (S^lambda)^perp.
CheckResult check_submodule_dichotomy(const Partition& lambda, const FieldSpec& f,
                                      const CoeffField& K, int count, std::mt19937_64& rng,
                                      EnumBudget budget = {});

/// Exhaustive verification of the tableau/module identities at (n, q):
/// conjugation equivariance of U(T), P(T) and psi_T, translation of m_T and
/// e_T, the psi eigenvector property, the bar-twist identities, the k_T
/// image/scaling laws, cross-shape vanishing, the intersection dichotomy, the
/// flag-orbit classification, plus the randomized submodule dichotomy and
/// seed independence of dim S^lambda.
std::vector<CheckResult> verify_lemmas(int n, int q, const CoeffField& K, std::uint64_t seed,
                                       EnumBudget budget = {});

/// Character-level checks at (n, q), characteristic 0: orthonormality of the
/// chi_{S^lambda}, the degree-sum identity, trivial/Steinberg anchors,
/// class-function and action-matrix multiplicativity spot checks.
std::vector<CheckResult> verify_characters(int n, int q, std::uint64_t seed,
                                           EnumBudget budget = {},
                                           const std::filesystem::path& cache_dir = {});

/// Multiplicity identities at (n, q), characteristic 0: the
/// generalized-Gelfand-Graev/Kostka-polynomial identity, the degenerate
/// Gelfand-Graev/Kostka-number identity, the parabolic-induction identity,
/// and the consistency of the two Kostka quantities.
std::vector<CheckResult> verify_kostka(int n, int q, EnumBudget budget = {},
                                       const std::filesystem::path& cache_dir = {});

} // namespace glnq
