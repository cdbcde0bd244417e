#include "storagecode/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace storagecode {

AlgebraElement::AlgebraElement(int n) {
    if (n < 1) fail(errc::bad_parameter, "arity must be positive, got " + std::to_string(n));
    if (n > kMaxAlgebraArity)
        fail(errc::resource, "arity " + std::to_string(n) + " exceeds algebra ceiling " +
                                 std::to_string(kMaxAlgebraArity));
    arity = n;
    coeffs = BitVec(std::size_t(1) << n);
}

static void check_same_arity(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.arity != b.arity)
        fail(errc::arity_mismatch, "arity mismatch: " + std::to_string(a.arity) + " vs " +
                                       std::to_string(b.arity));
}

AlgebraElement elem_from_monomials(int arity, const std::vector<std::uint64_t>& masks) {
    AlgebraElement e(arity);
    for (auto m : masks) {
        if (m >= e.size())
            fail(errc::out_of_range, "monomial mask " + std::to_string(m) + " out of range for arity " +
                                         std::to_string(arity));
        e.coeffs.flip(m);  // duplicates cancel in pairs
    }
    return e;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_arity(a, b);
    AlgebraElement out = a;
    out.coeffs.xor_with(b.coeffs);
    return out;
}

void xor_shift_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords,
                     std::uint64_t mask) {
    // dst[i ^ mask] ^= src[i]. Split the mask into a word part and an
    // in-word part; the in-word part is a butterfly of conditional swaps.
    const std::uint64_t whi = mask >> 6;
    const unsigned lo = unsigned(mask & 63);
    static constexpr std::uint64_t kLane[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
        0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
    for (std::size_t w = 0; w < nwords; ++w) {
        std::uint64_t x = src[w ^ whi];
        for (unsigned d = 0; d < 6; ++d)
            if (lo >> d & 1) {
                const unsigned sh = 1u << d;
                x = ((x & kLane[d]) << sh) | ((x >> sh) & kLane[d]);
            }
        dst[w] ^= x;
    }
}

void xor_shift_into(BitVec& dst, const BitVec& src, std::uint64_t mask) {
    xor_shift_words(dst.w.data(), src.w.data(), dst.words(), mask);
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_arity(a, b);
    // iterate the sparser support, XOR-shifting the other coefficient vector
    const bool a_sparser = a.coeffs.popcount() <= b.coeffs.popcount();
    const AlgebraElement& s = a_sparser ? a : b;
    const AlgebraElement& d = a_sparser ? b : a;
    AlgebraElement out(a.arity);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.coeffs.get(i)) xor_shift_into(out.coeffs, d.coeffs, i);
    return out;
}

// Superset-sum zeta transform over F_2; self-inverse, used in both directions.
static void zeta_superset(BitVec& v, int n) {
    static constexpr std::uint64_t kLane[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
        0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
    for (int d = 0; d < n && d < 6; ++d)
        for (auto& x : v.w) x ^= (x >> (1u << d)) & kLane[d];
    for (int d = 6; d < n; ++d) {
        const std::size_t half = std::size_t(1) << (d - 6);
        for (std::size_t w = 0; w < v.words(); ++w)
            if (!(w & half)) v.w[w] ^= v.w[w | half];
    }
}

B2Coordinates to_b2(const AlgebraElement& a) {
    B2Coordinates c;
    c.arity = a.arity;
    c.coords = a.coeffs;
    zeta_superset(c.coords, a.arity);
    return c;
}

AlgebraElement from_b2(const B2Coordinates& c) {
    AlgebraElement a(c.arity);
    a.coeffs = c.coords;
    zeta_superset(a.coeffs, c.arity);
    return a;
}

std::vector<std::uint64_t> support(const AlgebraElement& a) {
    std::vector<std::uint64_t> out;
    for (std::size_t w = 0; w < a.coeffs.words(); ++w) {
        std::uint64_t x = a.coeffs.w[w];
        while (x) {
            out.push_back(w * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

bool disjoint_variables(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_arity(a, b);
    std::uint64_t ua = 0, ub = 0;
    for (auto m : support(a)) ua |= m;
    for (auto m : support(b)) ub |= m;
    return (ua & ub) == 0;
}

AlgebraElement monomial(int arity, std::uint64_t mask) {
    return elem_from_monomials(arity, {mask});
}

AlgebraElement var_plus_one(int arity, int i) {
    if (i < 1 || i > arity)
        fail(errc::out_of_range, "variable index " + std::to_string(i) + " out of range");
    return elem_from_monomials(arity, {std::uint64_t(1) << (i - 1), 0});
}

// ---- text format ----

AlgebraElement parse_polynomial(const std::string& text) {
    std::istringstream in(text);
    return parse_polynomial(in);
}

AlgebraElement parse_polynomial(std::istream& in) {
    std::string body;
    int declared_arity = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // optional header line n=<int>
        std::string trimmed;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.rfind("n=", 0) == 0) {
            if (declared_arity)
                fail(errc::parse, "duplicate arity header");
            try {
                declared_arity = std::stoi(trimmed.substr(2));
            } catch (...) {
                fail(errc::parse, "bad arity header: " + trimmed);
            }
            if (declared_arity < 1 || declared_arity > kMaxAlgebraArity)
                fail(errc::parse, "arity header out of range: " + trimmed);
            continue;
        }
        body += trimmed;
    }
    if (body.empty()) fail(errc::parse, "empty polynomial");

    std::vector<std::uint64_t> masks;
    int max_var = 0;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto plus = body.find('+', pos);
        std::string term = body.substr(pos, plus == std::string::npos ? plus : plus - pos);
        pos = plus == std::string::npos ? body.size() + 1 : plus + 1;
        if (term.empty()) fail(errc::parse, "empty term");
        if (term == "1") {
            masks.push_back(0);
            continue;
        }
        std::uint64_t mask = 0;
        std::size_t t = 0;
        while (t < term.size()) {
            if (term[t] != 'x') fail(errc::parse, "expected variable in term '" + term + "'");
            ++t;
            std::size_t start = t;
            while (t < term.size() && std::isdigit(static_cast<unsigned char>(term[t]))) ++t;
            if (start == t) fail(errc::parse, "missing variable index in '" + term + "'");
            int idx = 0;
            try {
                idx = std::stoi(term.substr(start, t - start));
            } catch (...) {
                fail(errc::parse, "bad variable index in '" + term + "'");
            }
            if (idx < 1 || idx > kMaxAlgebraArity)
                fail(errc::parse, "variable index out of range in '" + term + "'");
            if (mask >> (idx - 1) & 1)
                fail(errc::parse, "repeated variable in term '" + term + "'");
            mask |= std::uint64_t(1) << (idx - 1);
            max_var = std::max(max_var, idx);
            if (t < term.size()) {
                if (term[t] != '*') fail(errc::parse, "expected '*' in term '" + term + "'");
                ++t;
                if (t == term.size()) fail(errc::parse, "dangling '*' in term '" + term + "'");
            }
        }
        masks.push_back(mask);
    }
    int arity = declared_arity ? declared_arity : max_var;
    if (arity == 0) arity = 1;  // bare constant with no header
    if (max_var > arity)
        fail(errc::parse, "variable x" + std::to_string(max_var) + " exceeds declared arity " +
                              std::to_string(arity));
    return elem_from_monomials(arity, masks);
}

std::string format_polynomial(const AlgebraElement& a) {
    std::string out = "n=" + std::to_string(a.arity) + "\n";
    auto masks = support(a);
    if (masks.empty()) {
        // no zero element in the format; callers shouldn't serialize 0, but
        // keep the round trip total by emitting a canceling pair
        return out + "1 + 1\n";
    }
    bool first = true;
    for (auto m : masks) {
        if (!first) out += " + ";
        first = false;
        if (m == 0) {
            out += "1";
            continue;
        }
        bool star = false;
        for (int i = 1; i <= a.arity; ++i)
            if (m >> (i - 1) & 1) {
                if (star) out += "*";
                out += "x" + std::to_string(i);
                star = true;
            }
    }
    out += "\n";
    return out;
}

} // namespace storagecode
