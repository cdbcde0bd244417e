#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "storagecode/bitvec.hpp"
#include "storagecode/errors.hpp"

namespace storagecode {

// Arity ceilings. Pure algebra elements are capped at 24 variables (16 MB of
// coefficients); dense matrix work is capped separately (see bitmatrix.hpp).
inline constexpr int kMaxAlgebraArity = 24;

// Element of P_n = F_2[x_1..x_n]/<x_i^2-1>. Coefficient of the monomial with
// variable set T sits at bit mask(T), where x_i corresponds to bit i-1.
struct AlgebraElement {
    int arity = 0;
    BitVec coeffs;  // length 2^arity

    AlgebraElement() = default;
    explicit AlgebraElement(int n);

    std::size_t size() const { return std::size_t(1) << arity; }
    bool is_zero() const { return !coeffs.any(); }
    bool operator==(const AlgebraElement& o) const {
        return arity == o.arity && coeffs == o.coeffs;
    }
};

// Coordinates in the shifted basis {prod (x_i+1)^{s_i}}.
struct B2Coordinates {
    int arity = 0;
    BitVec coords;
};

AlgebraElement elem_from_monomials(int arity, const std::vector<std::uint64_t>& masks);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
B2Coordinates to_b2(const AlgebraElement& a);
AlgebraElement from_b2(const B2Coordinates& c);
std::vector<std::uint64_t> support(const AlgebraElement& a);
bool disjoint_variables(const AlgebraElement& a, const AlgebraElement& b);

// x_i as an element (1-indexed), and x_i + 1
AlgebraElement monomial(int arity, std::uint64_t mask);
AlgebraElement var_plus_one(int arity, int i);

// XOR-translate: coefficient vector of (monomial mask) * a. Exposed because
// the multiplication-operator matrix and mul() both build on it. The raw-word
// form writes matrix rows without an intermediate BitVec.
void xor_shift_into(BitVec& dst, const BitVec& src, std::uint64_t mask);
void xor_shift_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords,
                     std::uint64_t mask);

// Polynomial text format: '+'-separated terms, each '1' or '*'-joined
// x<digits>; '#' starts a comment; optional 'n=<int>' header, else arity is
// the largest variable index seen.
AlgebraElement parse_polynomial(std::istream& in);
AlgebraElement parse_polynomial(const std::string& text);
std::string format_polynomial(const AlgebraElement& a);

} // namespace storagecode
