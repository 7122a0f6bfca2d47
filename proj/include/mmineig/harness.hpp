#ifndef MMINEIG_HARNESS_HPP
#define MMINEIG_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mmineig/matrix.hpp"

namespace mmineig {

enum class GenFamily { sdd, ds_inverse, ds_complete };

/// Deterministic recipe for one random instance. Identical specs produce
/// bitwise-identical matrices (mt19937_64 with a fixed draw order).
struct GenSpec {
    GenFamily family = GenFamily::sdd;
    int n = 5;
    std::uint64_t seed = 0;
    double dominance_margin = 0.1; // sdd family
    double density = 1.0;          // sdd family
    double magnitude = 1.0;        // sdd family
    double strength = 1.0;         // ds_inverse family: off-diagonal mass s
};

/// Strictly diagonally dominant M-matrix with seeded off-diagonal pattern.
DenseMatrix gen_sdd_m(const GenSpec& spec);

/// A = (s+1) I - P where P >= 0 has zero diagonal and all row and column
/// sums equal to s, mixed from seeded cyclic derangements. The inverse is
/// doubly stochastic and the diagonal is constant.
DenseMatrix gen_ds_inverse(int n, std::uint64_t seed, double strength);

/// The complete-graph instance of the same family: all off-diagonal entries
/// equal to -s/(n-1), diagonal s+1.
DenseMatrix ds_complete(int n, double strength);

struct PropertyFailure {
    std::string property;
    GenSpec spec;
    std::string detail;
};

struct PropertyReport {
    int trials = 0;
    std::vector<PropertyFailure> failures;
    double max_gap = 0.0; // worst tau - best-lower-bound gap observed

    bool passed() const { return failures.empty(); }
};

/// Evaluates the full invariant battery on each generated instance:
/// the ladder ordering chain, the inverse-entry inequalities, soundness of
/// every applicable bound against the oracle, monotonicity in t, the
/// pair-vs-single ordering, the Hadamard two-bound chain with a random
/// nonnegative B, and the equal-diagonal family orderings on ds_inverse
/// instances.
PropertyReport check_properties(const std::vector<GenSpec>& specs, int t_max);

} // namespace mmineig

#endif
