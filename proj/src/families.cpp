#include "storagecode/families.hpp"

#include <cmath>

#include "json.hpp"

namespace storagecode {

namespace {

// prod_{j=lo..hi} (x_j + 1); empty range gives 1
AlgebraElement block_product(int n, int lo, int hi) {
    AlgebraElement acc = monomial(n, 0);
    for (int j = lo; j <= hi; ++j) acc = mul(acc, var_plus_one(n, j));
    return acc;
}

std::pair<Rational, Rational> bounds_for(Family f, int r, int k) {
    switch (f) {
        case Family::hamming: {
            Rational up(3, 4);
            return {up * pow2_inv_complement(r - 1), up};
        }
        case Family::seven_eighths: {
            Rational up(7, 8);
            Rational c = pow2_inv_complement(k);
            return {up * c * c * c, up};
        }
        case Family::generalized: {
            Rational up = pow2_inv_complement(r);
            Rational lo = up;
            Rational c = pow2_inv_complement(k);
            int m = (1 << (r - 1)) - 1;
            for (int i = 0; i < m; ++i) lo = lo * c;
            return {lo, up};
        }
    }
    fail(errc::bad_parameter, "unknown family");
}

FamilyInstance seal(Family fam, int r, int k, AlgebraElement f) {
    FamilyInstance inst;
    inst.family = fam;
    inst.r = r;
    inst.k = k;
    inst.arity = f.arity;
    inst.element = std::move(f);
    auto [lo, up] = bounds_for(fam, r, k);
    inst.rate_lower = lo;
    inst.rate_upper = up;
    return inst;
}

} // namespace

FamilyInstance hamming_element(int r) {
    if (r < 2) fail(errc::bad_parameter, "hamming family needs r >= 2");
    int n = r + 1;
    if (n > kMaxAlgebraArity)
        fail(errc::out_of_range, "hamming r=" + std::to_string(r) + " needs arity " +
                                     std::to_string(n));
    AlgebraElement f = mul(var_plus_one(n, r), var_plus_one(n, r + 1));
    f = add(f, mul(monomial(n, std::uint64_t(1) << (r - 1)), block_product(n, 1, r - 1)));
    return seal(Family::hamming, r, 0, std::move(f));
}

FamilyInstance seven_eighths_element(int k) {
    if (k < 1) fail(errc::bad_parameter, "seven_eighths family needs k >= 1");
    long long nn = 3LL * k + 3;
    if (nn > kMaxAlgebraArity)
        fail(errc::out_of_range, "seven_eighths k=" + std::to_string(k) + " needs arity " +
                                     std::to_string(nn));
    int n = static_cast<int>(nn);
    auto bit = [](int j) { return std::uint64_t(1) << (j - 1); };
    AlgebraElement f = block_product(n, 3 * k + 1, 3 * k + 3);
    f = add(f, mul(monomial(n, bit(3 * k + 1) | bit(3 * k + 2)), block_product(n, 1, k)));
    f = add(f, mul(monomial(n, bit(3 * k + 1) | bit(3 * k + 3)), block_product(n, k + 1, 2 * k)));
    f = add(f, mul(monomial(n, bit(3 * k + 2) | bit(3 * k + 3)), block_product(n, 2 * k + 1, 3 * k)));
    return seal(Family::seven_eighths, 0, k, std::move(f));
}

FamilyInstance generalized_element(int r, int k) {
    if (r < 2 || k < 1) fail(errc::bad_parameter, "generalized family needs r >= 2, k >= 1");
    if (r > kMaxAlgebraArity)
        fail(errc::out_of_range, "generalized r=" + std::to_string(r) + " is past the arity cap");
    long long m = (1LL << (r - 1)) - 1;
    long long nn = m * k + r;
    if (nn > kMaxAlgebraArity)
        fail(errc::out_of_range, "generalized r=" + std::to_string(r) + " k=" +
                                     std::to_string(k) + " needs arity " + std::to_string(nn));
    int n = static_cast<int>(nn);
    AlgebraElement f = block_product(n, static_cast<int>(m) * k + 1, static_cast<int>(m) * k + r);
    int i = 0;
    for (std::uint64_t t = 1; t < (std::uint64_t(1) << r); ++t) {
        if (__builtin_popcountll(t) & 1) continue;  // h_i runs over even weights, ascending
        ++i;
        AlgebraElement term = mul(monomial(n, t << (m * k)),
                                  block_product(n, (i - 1) * k + 1, i * k));
        f = add(f, term);
    }
    return seal(Family::generalized, r, k, std::move(f));
}

std::pair<Rational, Rational> family_bounds(const FamilyInstance& inst) {
    return bounds_for(inst.family, inst.r, inst.k);
}

SparsityCheck sparsity_check(int r, int k) {
    FamilyInstance inst = generalized_element(r, k);
    SparsityCheck sc;
    sc.vertices = std::int64_t(1) << inst.arity;
    std::int64_t half = std::int64_t(1) << (r - 1);
    sc.predicted_degree = half + (half - 1) * (std::int64_t(1) << k);
    auto supp = support(inst.element);
    sc.actual_degree = static_cast<std::int64_t>(supp.size());
    if (!supp.empty() && supp.front() == 0) sc.actual_degree -= 1;
    double edges = 0.5 * static_cast<double>(sc.actual_degree) * static_cast<double>(sc.vertices);
    sc.exponent_estimate = std::log(edges) / std::log(static_cast<double>(sc.vertices));
    return sc;
}

std::string family_tag(Family f) {
    switch (f) {
        case Family::hamming: return "hamming";
        case Family::seven_eighths: return "seven_eighths";
        case Family::generalized: return "generalized";
    }
    return "unknown";
}

std::string instance_json(const FamilyInstance& inst) {
    nlohmann::ordered_json j;
    j["family"] = family_tag(inst.family);
    if (inst.family != Family::seven_eighths) j["r"] = inst.r;
    if (inst.family != Family::hamming) j["k"] = inst.k;
    j["arity"] = inst.arity;
    j["polynomial"] = format_polynomial(inst.element);
    j["rate_lower"] = inst.rate_lower.str();
    j["rate_upper"] = inst.rate_upper.str();
    return j.dump(2);
}

} // namespace storagecode
