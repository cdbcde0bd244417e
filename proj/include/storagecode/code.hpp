#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "storagecode/algebra.hpp"
#include "storagecode/bitmatrix.hpp"
#include "storagecode/rational.hpp"

namespace storagecode {

// S' = S u {0}: the masks whose Cayley graph the coset matrix indexes.
struct ConnectionSet {
    int arity = 0;
    std::vector<std::uint64_t> masks;  // sorted, unique, contains 0

    std::size_t vertex_count() const { return std::size_t(1) << arity; }
    std::size_t degree() const { return masks.size() - 1; }
};

struct CodeReport {
    int arity = 0;
    std::int64_t code_length = 0;
    std::int64_t code_dim = 0;
    Rational rate;
    bool triangle_free = false;
    std::int64_t degree = 0;
    std::int64_t edge_count = 0;
    std::optional<Rational> ceiling_from_necessary_conditions;
    bool edgeless = false;
};

ConnectionSet connection_set_from_element(const AlgebraElement& f);
ConnectionSet connection_set_from_masks(int arity, std::vector<std::uint64_t> masks);

bool is_triangle_free(const ConnectionSet& s);
BitMatrix coset_matrix(const ConnectionSet& s);

// rank/nullspace of the coset matrix without keeping H around; the nullspace
// basis is the storage code itself
struct CodeAnalysis {
    std::size_t rank = 0;
    std::optional<SubspaceBasis> code;  // filled when with_nullspace
};
CodeAnalysis analyze_code(const ConnectionSet& s, bool with_nullspace);

CodeReport code_rate(const ConnectionSet& s, int max_k = 3);

bool check_storage_property(const ConnectionSet& s, const BitVec& codeword);
// XOR of the neighbors of v; throws repair_unsound when the codeword fails
// the storage property. Callers that already validated the codeword (e.g.
// when repairing every vertex of one codeword) can skip the re-check.
bool repair_coordinate(const ConnectionSet& s, const BitVec& codeword, std::uint64_t v,
                       bool assume_valid = false);

std::optional<Rational> necessary_conditions(const ConnectionSet& s, int max_k);

struct GraphStats {
    std::int64_t vertices = 0;
    std::int64_t degree = 0;
    std::int64_t edges = 0;
};
GraphStats graph_stats(const ConnectionSet& s);

// deterministic codeword sampling: XOR-combinations of nullspace basis rows
std::vector<BitVec> sample_codewords(const SubspaceBasis& code, std::size_t count,
                                     std::uint64_t seed);

// file formats
ConnectionSet read_connection_set(std::istream& in);
void write_connection_set(std::ostream& out, const ConnectionSet& s);
void write_edge_list(std::ostream& out, const ConnectionSet& s);
void write_dimacs(std::ostream& out, const ConnectionSet& s);
void write_codewords(std::ostream& out, const SubspaceBasis& code);

std::string report_json(const CodeReport& r, std::optional<std::uint64_t> seed = {});

} // namespace storagecode
