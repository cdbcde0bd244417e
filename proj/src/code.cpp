#include "storagecode/code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace storagecode {

ConnectionSet connection_set_from_masks(int arity, std::vector<std::uint64_t> masks) {
    if (arity < 1 || arity > kMaxAlgebraArity)
        fail(errc::bad_parameter, "bad arity " + std::to_string(arity));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (masks.empty()) fail(errc::bad_parameter, "empty connection set");
    if (masks.front() != 0)
        fail(errc::convention, "connection set must contain 0 (S' = S u {0})");
    if (masks.back() >> arity)
        fail(errc::out_of_range, "mask exceeds arity " + std::to_string(arity));
    ConnectionSet s;
    s.arity = arity;
    s.masks = std::move(masks);
    return s;
}

ConnectionSet connection_set_from_element(const AlgebraElement& f) {
    if (f.is_zero()) fail(errc::bad_parameter, "zero element has no connection set");
    if (!f.coeffs.get(0))
        fail(errc::convention, "constant coefficient is 0; the convention requires 0 in S");
    return connection_set_from_masks(f.arity, support(f));
}

bool is_triangle_free(const ConnectionSet& s) {
    // no three distinct nonzero masks XOR to zero <=> for distinct nonzero
    // a, b the value a^b is outside the set
    std::unordered_set<std::uint64_t> in(s.masks.begin(), s.masks.end());
    for (std::size_t i = 1; i < s.masks.size(); ++i)
        for (std::size_t j = i + 1; j < s.masks.size(); ++j)
            if (in.count(s.masks[i] ^ s.masks[j])) return false;
    return true;
}

BitMatrix coset_matrix(const ConnectionSet& s) {
    if (s.arity > dense_arity_limit())
        fail(errc::resource, "arity " + std::to_string(s.arity) + " exceeds dense ceiling " +
                                 std::to_string(dense_arity_limit()));
    const std::size_t n = s.vertex_count();
    BitMatrix h(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t* r = h.row(v);
        for (auto w : s.masks) {
            const std::size_t c = v ^ w;
            r[c >> 6] |= std::uint64_t(1) << (c & 63);
        }
    }
    return h;
}

CodeAnalysis analyze_code(const ConnectionSet& s, bool with_nullspace) {
    CodeAnalysis out;
    BitMatrix h = coset_matrix(s);
    if (!with_nullspace) {
        out.rank = rank_destructive(h);
        return out;
    }
    // H is symmetric, so the left nullspace is the right kernel
    SubspaceBasis code = right_kernel(h);
    out.rank = s.vertex_count() - code.dim();
    out.code = std::move(code);
    return out;
}

CodeReport code_rate(const ConnectionSet& s, int max_k) {
    CodeReport r;
    r.arity = s.arity;
    r.code_length = std::int64_t(1) << s.arity;
    const std::size_t rank = analyze_code(s, false).rank;
    r.code_dim = r.code_length - std::int64_t(rank);
    r.rate = Rational(r.code_dim, r.code_length);
    r.triangle_free = is_triangle_free(s);
    r.degree = std::int64_t(s.degree());
    r.edge_count = r.code_length * r.degree / 2;
    r.ceiling_from_necessary_conditions = necessary_conditions(s, max_k);
    r.edgeless = s.masks.size() == 1;
    return r;
}

bool check_storage_property(const ConnectionSet& s, const BitVec& codeword) {
    if (codeword.nbits != s.vertex_count())
        fail(errc::out_of_range, "codeword length != vertex count");
    const std::size_t n = s.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        unsigned acc = 0;
        for (auto w : s.masks)
            if (w) acc ^= unsigned(codeword.get(v ^ w));
        if (acc != unsigned(codeword.get(v))) return false;
    }
    return true;
}

bool repair_coordinate(const ConnectionSet& s, const BitVec& codeword, std::uint64_t v,
                       bool assume_valid) {
    if (codeword.nbits != s.vertex_count())
        fail(errc::out_of_range, "codeword length != vertex count");
    if (v >= s.vertex_count()) fail(errc::out_of_range, "vertex out of range");
    if (!assume_valid && !check_storage_property(s, codeword))
        fail(errc::repair_unsound, "codeword fails the storage property; repair is unsound");
    unsigned acc = 0;
    for (auto w : s.masks)
        if (w) acc ^= unsigned(codeword.get(v ^ w));
    return acc != 0;
}

std::optional<Rational> necessary_conditions(const ConnectionSet& s, int max_k) {
    if (max_k < 1) fail(errc::bad_parameter, "max_k must be >= 1");
    // M: arity x |S| over the nonzero masks; columns are the masks
    std::vector<std::uint64_t> cols(s.masks.begin() + 1, s.masks.end());
    if (cols.size() % 2 == 0) return Rational(1, 2);
    for (int i = 0; i < s.arity; ++i) {
        std::size_t weight = 0;
        for (auto c : cols) weight += c >> i & 1;
        if (weight % 2) return Rational(1, 2);
    }
    // ascending k: the first odd common intersection gives the tightest cap
    for (int k = 2; k <= max_k && k <= s.arity; ++k) {
        // iterate k-subsets of rows
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint64_t meet_mask = 0;
            for (int i : idx) meet_mask |= std::uint64_t(1) << i;
            std::size_t inter = 0;
            for (auto c : cols) inter += (c & meet_mask) == meet_mask;
            if (inter % 2)
                return Rational((std::int64_t(1) << k) - 1, std::int64_t(1) << k);
            int i = k - 1;
            while (i >= 0 && idx[i] == s.arity - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

GraphStats graph_stats(const ConnectionSet& s) {
    GraphStats g;
    g.vertices = std::int64_t(1) << s.arity;
    g.degree = std::int64_t(s.degree());
    g.edges = g.vertices * g.degree / 2;
    return g;
}

std::vector<BitVec> sample_codewords(const SubspaceBasis& code, std::size_t count,
                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BitVec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        BitVec c(code.ambient_dim);
        std::uint64_t coins = 0;
        for (std::size_t b = 0; b < code.dim(); ++b) {
            if (b % 64 == 0) coins = rng();
            if (coins >> (b % 64) & 1)
                for (std::size_t w = 0; w < code.vectors.wpr; ++w)
                    c.w[w] ^= code.vectors.row(b)[w];
        }
        out.push_back(std::move(c));
    }
    return out;
}

// ---- file formats ----

ConnectionSet read_connection_set(std::istream& in) {
    std::vector<std::uint64_t> masks;
    int arity = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) continue;
        if (t.rfind("n=", 0) == 0) {
            try {
                arity = std::stoi(t.substr(2));
            } catch (...) {
                fail(errc::parse, "bad arity header: " + t);
            }
            continue;
        }
        std::uint64_t v = 0;
        auto res = std::from_chars(t.data(), t.data() + t.size(), v, 16);
        if (res.ec != std::errc() || res.ptr != t.data() + t.size())
            fail(errc::parse, "bad mask line '" + t + "'");
        masks.push_back(v);
    }
    if (!arity) {
        std::uint64_t top = 0;
        for (auto m : masks) top |= m;
        arity = top ? 64 - std::countl_zero(top) : 1;
    }
    return connection_set_from_masks(arity, std::move(masks));
}

void write_connection_set(std::ostream& out, const ConnectionSet& s) {
    out << "n=" << s.arity << "\n";
    char buf[17];
    for (auto m : s.masks) {
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(m));
        out << buf << "\n";
    }
    if (!out) fail(errc::io, "connection set write failed");
}

void write_edge_list(std::ostream& out, const ConnectionSet& s) {
    const std::size_t n = s.vertex_count();
    for (std::size_t u = 0; u < n; ++u)
        for (auto w : s.masks)
            if (w && (u ^ w) > u) out << u << " " << (u ^ w) << "\n";
    if (!out) fail(errc::io, "edge list write failed");
}

void write_dimacs(std::ostream& out, const ConnectionSet& s) {
    GraphStats g = graph_stats(s);
    out << "p edge " << g.vertices << " " << g.edges << "\n";
    const std::size_t n = s.vertex_count();
    for (std::size_t u = 0; u < n; ++u)
        for (auto w : s.masks)
            if (w && (u ^ w) > u) out << "e " << u + 1 << " " << (u ^ w) + 1 << "\n";
    if (!out) fail(errc::io, "dimacs write failed");
}

void write_codewords(std::ostream& out, const SubspaceBasis& code) {
    for (std::size_t i = 0; i < code.dim(); ++i) {
        for (std::size_t j = 0; j < code.ambient_dim; ++j)
            out << (code.vectors.get(i, j) ? '1' : '0');
        out << '\n';
    }
    if (!out) fail(errc::io, "codeword write failed");
}

std::string report_json(const CodeReport& r, std::optional<std::uint64_t> seed) {
    nlohmann::ordered_json j;
    j["arity"] = r.arity;
    j["code_length"] = r.code_length;
    j["code_dim"] = r.code_dim;
    j["rate"] = r.rate.str();
    j["rate_float"] = r.rate.to_double();
    j["triangle_free"] = r.triangle_free;
    j["degree"] = r.degree;
    j["edge_count"] = r.edge_count;
    j["ceiling_from_necessary_conditions"] =
        r.ceiling_from_necessary_conditions ? r.ceiling_from_necessary_conditions->str() : "none";
    j["edgeless"] = r.edgeless;
    if (seed) j["seed"] = *seed;
    return j.dump(2) + "\n";
}

} // namespace storagecode
