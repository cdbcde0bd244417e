#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "storagecode/algebra.hpp"
#include "storagecode/bitmatrix.hpp"
#include "storagecode/rational.hpp"

namespace storagecode {

// Finitely generated ideal of P_n. The ideal is the span of {g * monomial}
// over all generators g; dimensions come from the rank of the stacked
// multiplication-operator matrices, nothing cleverer.
struct IdealHandle {
    int arity = 0;
    std::vector<AlgebraElement> generators;
};

IdealHandle ideal(std::vector<AlgebraElement> generators);
IdealHandle principal_ideal(AlgebraElement f);

std::size_t ideal_dim(const IdealHandle& id);
SubspaceBasis ideal_basis(const IdealHandle& id);
Rational ideal_rate(const IdealHandle& id);  // dim / 2^n

// ann(f) = kernel of the multiplication-by-f operator
std::size_t annihilator_dim(const AlgebraElement& f);
SubspaceBasis annihilator_basis(const AlgebraElement& f);
bool annihilator_contains(const AlgebraElement& f, const AlgebraElement& candidate);

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);

// One verification item: a batch of exact checks of the same shape.
struct Section3Item {
    std::string name;
    std::int64_t checks = 0;
    bool pass = true;
    std::vector<std::string> dims;             // per-check dimension records
    std::vector<std::string> counterexamples;  // filled on failure
};

struct Section3Report {
    int n = 0;
    std::uint64_t seed = 0;
    int partition_count = 0;
    std::vector<Section3Item> items;
    bool pass = true;
};

inline constexpr std::uint64_t kSection3Seed = 0x5ec3u;

// Exact checks, all dimensions computed twice by unrelated routes:
//   a. ann(x_i+1) equals <x_i+1> as a span, every i
//   b. dim of the iterated intersection of <x_i+1>, i <= k, equals the dim
//      of their product ideal, every k
//   c. dim(<x_1+1> + ... + <x_k+1>) = 2^n - 2^{n-k}, every k
//   d. dim multiplicativity across the blocks of random variable partitions
Section3Report verify_section3(int n, std::uint64_t seed = kSection3Seed,
                               int partition_count = 50);

std::string section3_json(const Section3Report& r);

} // namespace storagecode
