// Acceptance gate: one line per criterion, exit 0 only if all pass.
// Expected values are pinned as exact rationals and integer dimensions that
// were computed twice by unrelated routes before being frozen here.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "storagecode/code.hpp"
#include "storagecode/families.hpp"
#include "storagecode/ideals.hpp"

using namespace storagecode;

namespace {

struct Criterion {
    int id = 0;
    std::string title;
    bool pass = true;
    double secs = 0;
    std::vector<std::string> notes;
};

void expect(Criterion& c, bool cond, const std::string& what) {
    if (!cond) {
        c.pass = false;
        c.notes.push_back("failed: " + what);
    }
}

void budget(Criterion& c, double limit) {
    if (c.secs >= limit)
        expect(c, false,
               "runtime " + std::to_string(c.secs) + " s exceeds the " +
                   std::to_string(limit) + " s budget");
}

// Analyses are cached by support so instances shared between criteria (the
// r=3 generalized elements equal the seven-eighths ones) cost one elimination.
struct Analysis {
    ConnectionSet set;
    std::size_t rank = 0;
    SubspaceBasis code;
    Rational rate;
    std::optional<Rational> ceiling;
    bool triangle_free = false;

    std::int64_t dim() const { return std::int64_t(set.vertex_count()) - std::int64_t(rank); }
};

std::map<std::pair<int, std::vector<std::uint64_t>>, Analysis> g_cache;

const Analysis& analysis_for(const AlgebraElement& f) {
    auto key = std::make_pair(f.arity, support(f));
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
    Analysis a;
    a.set = connection_set_from_element(f);
    CodeAnalysis ca = analyze_code(a.set, true);
    a.rank = ca.rank;
    a.code = std::move(*ca.code);
    a.rate = Rational(a.dim(), std::int64_t(a.set.vertex_count()));
    a.ceiling = necessary_conditions(a.set, 3);
    a.triangle_free = is_triangle_free(a.set);
    return g_cache.emplace(std::move(key), std::move(a)).first->second;
}

Rational rat(std::int64_t n, std::int64_t d) { return Rational(n, d); }

std::string rk(int r, int k) { return "r=" + std::to_string(r) + " k=" + std::to_string(k); }

// ---- criterion bodies ----

void criterion1(Criterion& c) {
    const std::int64_t frozen_dim[] = {10, 22, 46, 94, 190, 382};
    for (int r = 3; r <= 8; ++r) {
        FamilyInstance inst = hamming_element(r);
        const Analysis& a = analysis_for(inst.element);
        const Rational lower = rat(3, 4) * pow2_inv_complement(r - 1);
        expect(c, a.triangle_free, "r=" + std::to_string(r) + " not triangle-free");
        expect(c, lower <= a.rate && a.rate <= rat(3, 4),
               "r=" + std::to_string(r) + " rate " + a.rate.str() + " outside [" + lower.str() +
                   ", 3/4]");
        expect(c, a.dim() == frozen_dim[r - 3],
               "r=" + std::to_string(r) + " dim " + std::to_string(a.dim()) + " != frozen " +
                   std::to_string(frozen_dim[r - 3]));
    }
    c.notes.push_back("rates 5/8, 11/16, 23/32, 47/64, 95/128, 191/256 climbing toward 3/4");
}

void criterion2(Criterion& c) {
    const std::int64_t frozen_dim[] = {32, 280, 2696};  // k = 1..3; k=4 is bounds-checked only
    const Rational frozen_ceiling[] = {rat(1, 2), rat(3, 4), rat(7, 8), rat(7, 8)};
    for (int k = 1; k <= 4; ++k) {
        FamilyInstance inst = seven_eighths_element(k);
        const Analysis& a = analysis_for(inst.element);
        const Rational cc = pow2_inv_complement(k);
        const Rational lower = rat(7, 8) * cc * cc * cc;
        expect(c, a.triangle_free, "k=" + std::to_string(k) + " not triangle-free");
        expect(c, lower <= a.rate && a.rate <= rat(7, 8),
               "k=" + std::to_string(k) + " rate " + a.rate.str() + " outside [" + lower.str() +
                   ", 7/8]");
        expect(c, a.ceiling.has_value() && *a.ceiling == frozen_ceiling[k - 1],
               "k=" + std::to_string(k) + " ceiling " +
                   (a.ceiling ? a.ceiling->str() : std::string("none")) + " != frozen " +
                   frozen_ceiling[k - 1].str());
        expect(c, *a.ceiling <= rat(7, 8), "k=" + std::to_string(k) + " cap exceeds 7/8");
        if (k <= 3)
            expect(c, a.dim() == frozen_dim[k - 1],
                   "k=" + std::to_string(k) + " dim " + std::to_string(a.dim()) + " != frozen " +
                       std::to_string(frozen_dim[k - 1]));
    }
    c.notes.push_back(
        "note: the tightest necessary-condition cap is 1/2 at k=1 and 3/4 at k=2; the "
        "family-wide 7/8 cap is attained exactly from k=3 on (every instance stays <= 7/8)");
}

struct GenRow {
    int r, k;
    std::int64_t dim;  // -1 when too large to have been frozen
    Rational ceiling;
};

void criterion3(Criterion& c) {
    const GenRow rows[] = {
        {2, 1, 4, rat(1, 2)},    {2, 2, 10, rat(3, 4)},   {2, 3, 22, rat(3, 4)},
        {2, 4, 46, rat(3, 4)},   {2, 5, 94, rat(3, 4)},   {2, 6, 190, rat(3, 4)},
        {3, 1, 32, rat(1, 2)},   {3, 2, 280, rat(3, 4)},  {3, 3, 2696, rat(7, 8)},
        {3, 4, -1, rat(7, 8)},   {4, 1, 1024, rat(1, 2)},
    };
    for (const GenRow& row : rows) {
        FamilyInstance inst = generalized_element(row.r, row.k);
        const Analysis& a = analysis_for(inst.element);
        const int m = (1 << (row.r - 1)) - 1;
        const Rational up = pow2_inv_complement(row.r);
        Rational lower = up;
        for (int i = 0; i < m; ++i) lower = lower * pow2_inv_complement(row.k);
        expect(c, a.triangle_free, rk(row.r, row.k) + " not triangle-free");
        expect(c, lower <= a.rate && a.rate <= up,
               rk(row.r, row.k) + " rate " + a.rate.str() + " outside [" + lower.str() + ", " +
                   up.str() + "]");
        expect(c, a.ceiling.has_value() && *a.ceiling == row.ceiling,
               rk(row.r, row.k) + " ceiling " +
                   (a.ceiling ? a.ceiling->str() : std::string("none")) + " != frozen " +
                   row.ceiling.str());
        expect(c, *a.ceiling <= up, rk(row.r, row.k) + " cap exceeds " + up.str());
        if (row.dim >= 0)
            expect(c, a.dim() == row.dim,
                   rk(row.r, row.k) + " dim " + std::to_string(a.dim()) + " != frozen " +
                       std::to_string(row.dim));
    }
    c.notes.push_back(
        "note: every k=1 instance caps at 1/2; the 1-2^-r cap is attained from k=2 (r=2) "
        "and k=3 (r=3), and every computed cap stays <= 1-2^-r");
}

void criterion4(Criterion& c) {
    for (int n = 2; n <= 12; ++n) {
        Section3Report rep = verify_section3(n);
        expect(c, rep.pass, "identity suite failed at n=" + std::to_string(n));
        for (const auto& item : rep.items)
            for (const auto& ce : item.counterexamples)
                c.notes.push_back("n=" + std::to_string(n) + " " + item.name + ": " + ce);
    }
    c.notes.push_back("sum rates, intersection=product dims, annihilator spans, and block "
                      "multiplicativity checked exactly for n=2..12, 50 partitions each");
}

void criterion5(Criterion& c) {
    std::mt19937_64 rng(0xACC5);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + int(rng() % 7);
        std::vector<std::uint64_t> masks{0};
        for (std::uint64_t v = 1; v < (std::uint64_t(1) << n); ++v)
            if (rng() & 1) masks.push_back(v);
        ConnectionSet s = connection_set_from_masks(n, masks);
        AlgebraElement f = elem_from_monomials(n, masks);
        const std::size_t h_rank = analyze_code(s, false).rank;
        const std::size_t full = std::size_t(1) << n;
        expect(c, ideal_dim(principal_ideal(f)) == h_rank,
               "trial " + std::to_string(trial) + ": ideal dim != rank(H)");
        expect(c, annihilator_dim(f) == full - h_rank,
               "trial " + std::to_string(trial) + ": annihilator dim != 2^n - rank(H)");
        ++checked;
    }
    c.notes.push_back(std::to_string(checked) + " random connection sets, n <= 8");
}

std::vector<AlgebraElement> criteria_instances() {
    std::vector<AlgebraElement> out;
    for (int r = 3; r <= 8; ++r) out.push_back(hamming_element(r).element);
    for (int k = 1; k <= 4; ++k) out.push_back(seven_eighths_element(k).element);
    for (int k = 1; k <= 6; ++k) out.push_back(generalized_element(2, k).element);
    for (int k = 1; k <= 4; ++k) out.push_back(generalized_element(3, k).element);
    out.push_back(generalized_element(4, 1).element);
    return out;
}

void criterion6(Criterion& c) {
    std::uint64_t seed = 0xC0DE;
    std::size_t words_checked = 0, repairs = 0;
    for (const AlgebraElement& f : criteria_instances()) {
        const Analysis& a = analysis_for(f);
        std::vector<BitVec> words = sample_codewords(a.code, 100, seed++);
        for (const BitVec& w : words) {
            if (!check_storage_property(a.set, w)) {
                expect(c, false, "sampled codeword fails the storage property at arity " +
                                     std::to_string(f.arity));
                return;
            }
            ++words_checked;
        }
        for (std::size_t i = 0; i < 10; ++i) {
            const BitVec& w = words[i];
            for (std::uint64_t v = 0; v < a.set.vertex_count(); ++v) {
                if (repair_coordinate(a.set, w, v, true) != w.get(v)) {
                    expect(c, false, "repair missed vertex " + std::to_string(v) +
                                         " at arity " + std::to_string(f.arity));
                    return;
                }
                ++repairs;
            }
        }
    }
    c.notes.push_back(std::to_string(words_checked) + " sampled codewords verified, " +
                      std::to_string(repairs) + " single-vertex repairs recovered");
}

void criterion7(Criterion& c) {
    struct Frozen {
        int k;
        std::int64_t predicted, actual;
        double exponent;
    };
    const Frozen rows[] = {
        {2, 16, 13, 1.3000488575712326},
        {3, 28, 25, 1.3036546824812272},
        {4, 52, 49, 1.307647322941014},
        {5, 100, 97, 1.311106269010396},
    };
    const double target = 4.0 / 3.0;
    double prev_gap = 1e9;
    for (const Frozen& row : rows) {
        SparsityCheck sc = sparsity_check(3, row.k);
        expect(c, sc.predicted_degree == row.predicted && sc.actual_degree == row.actual,
               "k=" + std::to_string(row.k) + " degrees " + std::to_string(sc.predicted_degree) +
                   "/" + std::to_string(sc.actual_degree) + " != frozen");
        expect(c, sc.predicted_degree - sc.actual_degree == 3,
               "k=" + std::to_string(row.k) + " headline-count discrepancy is not 3");
        expect(c, std::abs(sc.exponent_estimate - row.exponent) < 1e-12,
               "k=" + std::to_string(row.k) + " exponent drifted from frozen value");
        const double gap = target - sc.exponent_estimate;
        expect(c, gap > 0 && gap < prev_gap,
               "k=" + std::to_string(row.k) + " exponent not strictly closer to 4/3");
        prev_gap = gap;
    }
    c.notes.push_back("exponents 1.3000, 1.3037, 1.3076, 1.3111 approach 4/3 from below; the "
                      "headline degree overcounts the true degree by 2^{r-1}-1 = 3 because the "
                      "bare h_i monomials cancel in the short terms");
}

void criterion8(Criterion& c) {
    std::size_t members = 0;
    for (const AlgebraElement& f : criteria_instances()) {
        if (f.arity > 12) continue;  // the 32768-vertex instance is covered by criteria 2-3
        const Analysis& a = analysis_for(f);
        const std::size_t full = std::size_t(1) << f.arity;
        expect(c, annihilator_dim(f) == full - a.rank,
               "arity " + std::to_string(f.arity) +
                   ": annihilator route disagrees with dense elimination");
        for (std::size_t i = 0; i < a.code.dim(); ++i) {
            BitVec w(full);
            std::copy_n(a.code.vectors.row(i), a.code.vectors.wpr, w.w.begin());
            AlgebraElement g(f.arity);
            g.coeffs = w;
            if (!check_storage_property(a.set, w) || !annihilator_contains(f, g)) {
                expect(c, false, "nullspace basis vector " + std::to_string(i) +
                                     " fails membership at arity " + std::to_string(f.arity));
                return;
            }
            ++members;
        }
    }
    const Analysis& f4 = analysis_for(hamming_element(4).element);
    expect(c, f4.dim() == 22 && f4.rate == rat(11, 16),
           "32-vertex instance rate " + f4.rate.str() + " != 11/16");
    c.notes.push_back("exact rate of the 32-vertex instance established as 11/16 (dim 22); " +
                      std::to_string(members) + " nullspace basis vectors passed membership");
}

void criterion9(Criterion& c) {
    std::mt19937_64 rng(0x61E9);
    BitMatrix m(8192, 8192);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t w = 0; w < m.wpr; ++w) m.row(i)[w] = rng();
    const std::size_t r = rank_destructive(m);
    expect(c, r >= 8100, "rank " + std::to_string(r) + " implausibly low for a random matrix");
    c.notes.push_back("rank " + std::to_string(r) + " of a random 8192 x 8192 matrix");
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        void (*body)(Criterion&);
        double limit;  // seconds; 0 = no budget
    };
    const Entry entries[] = {
        {1, "hamming family sweep r=3..8", criterion1, 10},
        {2, "seven-eighths family k=1..4", criterion2, 300},
        {3, "generalized family grid", criterion3, 0},
        {4, "ideal identity suite n=2..12", criterion4, 60},
        {5, "rank/ideal/annihilator consistency on random sets", criterion5, 60},
        {6, "storage property and single-vertex repair", criterion6, 120},
        {7, "sparsity exponents for r=3", criterion7, 0},
        {8, "dual-path rate figures and nullspace membership", criterion8, 0},
        {9, "performance gate: random 8192 x 8192 rank", criterion9, 5},
    };

    bool all = true;
    int passed = 0;
    for (const Entry& e : entries) {
        Criterion c;
        c.id = e.id;
        c.title = e.title;
        const auto t0 = std::chrono::steady_clock::now();
        e.body(c);
        c.secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (e.limit > 0) budget(c, e.limit);
        std::printf("criterion %d: %s (%.2f s) %s\n", c.id, c.pass ? "PASS" : "FAIL", c.secs,
                    c.title.c_str());
        for (const std::string& note : c.notes) std::printf("    - %s\n", note.c_str());
        all = all && c.pass;
        passed += c.pass;
    }
    std::printf("acceptance: %d/9 criteria passed\n", passed);
    return all ? 0 : 1;
}
