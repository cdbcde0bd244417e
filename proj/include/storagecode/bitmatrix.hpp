#pragma once
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "storagecode/algebra.hpp"
#include "storagecode/bitvec.hpp"
#include "storagecode/errors.hpp"

namespace storagecode {

// Dense ceiling for matrix-backed operations (2^15 x 2^15 = 128 MB).
// STORAGECODE_MAX_ARITY overrides the arity form of the gate.
int dense_arity_limit();

// Row-major packed GF(2) matrix. Column j of a row sits in word j/64 at bit
// j%64; pad bits are kept zero.
struct BitMatrix {
    std::size_t rows = 0, cols = 0, wpr = 0;
    std::vector<std::uint64_t> data;

    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c);

    std::uint64_t* row(std::size_t i) { return data.data() + i * wpr; }
    const std::uint64_t* row(std::size_t i) const { return data.data() + i * wpr; }
    bool get(std::size_t i, std::size_t j) const { return row(i)[j >> 6] >> (j & 63) & 1u; }
    void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= std::uint64_t(1) << (j & 63); }
    void flip(std::size_t i, std::size_t j) { row(i)[j >> 6] ^= std::uint64_t(1) << (j & 63); }
    bool operator==(const BitMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

struct EchelonInfo {
    std::size_t rank = 0;
    // (pivot column, row index) in ascending column order
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

// Forward elimination, in place. Deterministic: pivot column is the lowest
// column holding a set bit among unprocessed rows; rows enter a column's
// queue in reduction order and the head becomes the pivot row. No physical
// row swaps; the pivot list carries the bookkeeping.
EchelonInfo ref_in_place(BitMatrix& m);

// ref_in_place plus upward elimination, leaving reduced row-echelon content.
EchelonInfo rref_in_place(BitMatrix& m);

std::size_t rank(const BitMatrix& m);       // copies
std::size_t rank_destructive(BitMatrix& m); // eliminates in place

BitMatrix transpose(const BitMatrix& m);

// Basis of a subspace of F_2^ambient_dim. Rows are independent with distinct
// leading (orientation low) or trailing (orientation high) one-positions;
// kernel bases come out high, row-space bases low.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    bool high_echelon = false;
    BitMatrix vectors;

    std::size_t dim() const { return vectors.rows; }
};

// Right kernel {z : M z = 0}. Eliminates a copy of m.
SubspaceBasis right_kernel(const BitMatrix& m);
// Left nullspace {c : c M = 0}; for the symmetric coset matrices this is the
// storage code itself.
SubspaceBasis nullspace(const BitMatrix& m);
SubspaceBasis row_space(const BitMatrix& m);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b);
bool subspace_contains(const SubspaceBasis& s, const BitVec& v);
bool same_span(const SubspaceBasis& a, const SubspaceBasis& b);

// 2^n x 2^n matrix of multiplication by f in the monomial basis; row v holds
// the coefficients of (monomial v) * f.
BitMatrix mult_operator_matrix(const AlgebraElement& f);

// Text serialization: "gf2 <rows> <cols>" then one row per line as hex words,
// most significant word last.
void write_matrix(std::ostream& out, const BitMatrix& m);
BitMatrix read_matrix(std::istream& in);

} // namespace storagecode
