#include "storagecode/ideals.hpp"

#include <random>
#include <utility>

#include "json.hpp"

namespace storagecode {

IdealHandle ideal(std::vector<AlgebraElement> generators) {
    if (generators.empty()) fail(errc::bad_parameter, "ideal needs at least one generator");
    IdealHandle id;
    id.arity = generators.front().arity;
    for (const auto& g : generators)
        if (g.arity != id.arity) fail(errc::arity_mismatch, "generator arities differ");
    id.generators = std::move(generators);
    return id;
}

IdealHandle principal_ideal(AlgebraElement f) {
    std::vector<AlgebraElement> gens;
    gens.push_back(std::move(f));
    return ideal(std::move(gens));
}

namespace {

// one multiplication-operator block per generator, stacked vertically
BitMatrix stacked_operator(const IdealHandle& id) {
    if (id.arity > dense_arity_limit())
        fail(errc::resource, "arity " + std::to_string(id.arity) + " exceeds dense ceiling " +
                                 std::to_string(dense_arity_limit()));
    const std::size_t n = std::size_t(1) << id.arity;
    BitMatrix m(n * id.generators.size(), n);
    std::size_t base = 0;
    for (const auto& g : id.generators) {
        for (std::size_t v = 0; v < n; ++v)
            xor_shift_words(m.row(base + v), g.coeffs.w.data(), m.wpr, v);
        base += n;
    }
    return m;
}

} // namespace

std::size_t ideal_dim(const IdealHandle& id) {
    BitMatrix m = stacked_operator(id);
    return rank_destructive(m);
}

SubspaceBasis ideal_basis(const IdealHandle& id) { return row_space(stacked_operator(id)); }

Rational ideal_rate(const IdealHandle& id) {
    return Rational(static_cast<std::int64_t>(ideal_dim(id)), std::int64_t(1) << id.arity);
}

std::size_t annihilator_dim(const AlgebraElement& f) {
    BitMatrix m = mult_operator_matrix(f);
    return f.size() - rank_destructive(m);
}

SubspaceBasis annihilator_basis(const AlgebraElement& f) {
    return right_kernel(mult_operator_matrix(f));
}

bool annihilator_contains(const AlgebraElement& f, const AlgebraElement& candidate) {
    return mul(f, candidate).is_zero();
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    if (a.arity != b.arity) fail(errc::arity_mismatch, "ideal arities differ");
    std::vector<AlgebraElement> gens;
    gens.reserve(a.generators.size() * b.generators.size());
    for (const auto& ga : a.generators)
        for (const auto& gb : b.generators) gens.push_back(mul(ga, gb));
    return ideal(std::move(gens));
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    if (a.arity != b.arity) fail(errc::arity_mismatch, "ideal arities differ");
    std::vector<AlgebraElement> gens = a.generators;
    gens.insert(gens.end(), b.generators.begin(), b.generators.end());
    return ideal(std::move(gens));
}

namespace {

AlgebraElement vars_product(int n, const std::vector<int>& vars) {
    AlgebraElement acc = monomial(n, 0);
    for (int j : vars) acc = mul(acc, var_plus_one(n, j));
    return acc;
}

std::string blocks_str(const std::vector<std::vector<int>>& blocks) {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += " | ";
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(blocks[i][j]);
        }
    }
    return s + "}";
}

} // namespace

Section3Report verify_section3(int n, std::uint64_t seed, int partition_count) {
    if (n < 2) fail(errc::bad_parameter, "verify_section3 needs n >= 2");
    if (n > 12) fail(errc::resource, "verify_section3 is capped at n = 12");
    if (partition_count < 0) fail(errc::bad_parameter, "negative partition count");
    Section3Report rep;
    rep.n = n;
    rep.seed = seed;
    rep.partition_count = partition_count;
    const std::int64_t full = std::int64_t(1) << n;

    // a. annihilator of x_i+1 is the principal ideal it generates, as a span
    Section3Item a;
    a.name = "annihilator_equals_principal_ideal";
    for (int i = 1; i <= n; ++i) {
        AlgebraElement g = var_plus_one(n, i);
        SubspaceBasis ann = annihilator_basis(g);
        SubspaceBasis idl = ideal_basis(principal_ideal(g));
        ++a.checks;
        a.dims.push_back("i=" + std::to_string(i) + " ann=" + std::to_string(ann.dim()) +
                         " ideal=" + std::to_string(idl.dim()));
        if (ann.dim() != idl.dim() || !same_span(ann, idl)) {
            a.pass = false;
            a.counterexamples.push_back("x_" + std::to_string(i) + "+1: ann dim " +
                                        std::to_string(ann.dim()) + " vs ideal dim " +
                                        std::to_string(idl.dim()) + ", spans differ");
        }
    }
    rep.items.push_back(std::move(a));

    // b. iterated intersection of <x_i+1> matches the product ideal, and both
    //    land on 2^{n-k}
    Section3Item b;
    b.name = "intersection_equals_product";
    SubspaceBasis inter = ideal_basis(principal_ideal(var_plus_one(n, 1)));
    IdealHandle prod = principal_ideal(var_plus_one(n, 1));
    for (int k = 2; k <= n; ++k) {
        inter = subspace_intersection(inter, ideal_basis(principal_ideal(var_plus_one(n, k))));
        prod = ideal_product(prod, principal_ideal(var_plus_one(n, k)));
        const std::size_t pd = ideal_dim(prod);
        const std::int64_t expect = full >> k;
        ++b.checks;
        b.dims.push_back("k=" + std::to_string(k) + " intersection=" +
                         std::to_string(inter.dim()) + " product=" + std::to_string(pd));
        if (inter.dim() != pd || static_cast<std::int64_t>(pd) != expect) {
            b.pass = false;
            b.counterexamples.push_back(
                "k=" + std::to_string(k) + ": intersection dim " + std::to_string(inter.dim()) +
                ", product dim " + std::to_string(pd) + ", expected " + std::to_string(expect));
        }
    }
    rep.items.push_back(std::move(b));

    // c. dim(<x_1+1> + ... + <x_k+1>) = 2^n - 2^{n-k}, i.e. rate 1 - 2^{-k}
    Section3Item c;
    c.name = "sum_rate";
    IdealHandle sum = principal_ideal(var_plus_one(n, 1));
    for (int k = 1; k <= n; ++k) {
        if (k > 1) sum = ideal_sum(sum, principal_ideal(var_plus_one(n, k)));
        const std::size_t d = ideal_dim(sum);
        const std::int64_t expect = full - (full >> k);
        ++c.checks;
        c.dims.push_back("k=" + std::to_string(k) + " dim=" + std::to_string(d));
        if (static_cast<std::int64_t>(d) != expect ||
            !(Rational(static_cast<std::int64_t>(d), full) == pow2_inv_complement(k))) {
            c.pass = false;
            c.counterexamples.push_back("k=" + std::to_string(k) + ": dim " + std::to_string(d) +
                                        ", expected " + std::to_string(expect));
        }
    }
    rep.items.push_back(std::move(c));

    // d. rate multiplicativity over random partitions, folded pairwise so
    //    each check is the exact integer identity dim(ab)*2^n = dim a * dim b
    Section3Item d;
    d.name = "block_multiplicativity";
    std::mt19937_64 rng(seed + std::uint64_t(n) * 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < partition_count; ++t) {
        const int nblocks = (n >= 3 && (rng() & 1)) ? 3 : 2;
        std::vector<std::vector<int>> blocks;
        for (;;) {
            blocks.assign(nblocks, {});
            for (int j = 1; j <= n; ++j) blocks[rng() % nblocks].push_back(j);
            bool filled = true;
            for (const auto& bl : blocks)
                if (bl.empty()) filled = false;
            if (filled) break;
        }
        IdealHandle acc = principal_ideal(vars_product(n, blocks[0]));
        std::int64_t acc_dim = static_cast<std::int64_t>(ideal_dim(acc));
        for (int i = 1; i < nblocks; ++i) {
            IdealHandle bi = principal_ideal(vars_product(n, blocks[i]));
            const std::int64_t bd = static_cast<std::int64_t>(ideal_dim(bi));
            IdealHandle pr = ideal_product(acc, bi);
            const std::int64_t pd = static_cast<std::int64_t>(ideal_dim(pr));
            ++d.checks;
            if (pd * full != acc_dim * bd) {
                d.pass = false;
                d.counterexamples.push_back("partition " + blocks_str(blocks) + ": dim(ab)*2^n=" +
                                            std::to_string(pd * full) + ", dim a*dim b=" +
                                            std::to_string(acc_dim * bd));
            }
            acc = std::move(pr);
            acc_dim = pd;
        }
    }
    d.dims.push_back(std::to_string(partition_count) + " partitions into 2 or 3 blocks");
    rep.items.push_back(std::move(d));

    rep.pass = true;
    for (const auto& it : rep.items) rep.pass = rep.pass && it.pass;
    return rep;
}

std::string section3_json(const Section3Report& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["partitions"] = r.partition_count;
    j["pass"] = r.pass;
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& it : r.items) {
        nlohmann::ordered_json ji;
        ji["name"] = it.name;
        ji["checks"] = it.checks;
        ji["pass"] = it.pass;
        ji["dims"] = it.dims;
        ji["counterexamples"] = it.counterexamples;
        j["items"].push_back(std::move(ji));
    }
    return j.dump(2);
}

} // namespace storagecode
