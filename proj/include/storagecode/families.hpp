#pragma once
#include <string>

#include "storagecode/algebra.hpp"
#include "storagecode/rational.hpp"

namespace storagecode {

enum class Family { hamming, seven_eighths, generalized };

struct FamilyInstance {
    Family family;
    int r = 0;  // unused by seven_eighths
    int k = 0;  // unused by hamming
    AlgebraElement element;
    int arity = 0;
    Rational rate_lower;
    Rational rate_upper;
};

// f_r = (x_r+1)(x_{r+1}+1) + x_r (x_1+1)...(x_{r-1}+1) in P_{r+1}
FamilyInstance hamming_element(int r);
// f_k in P_{3k+3}: the (x+1)-product over the top three variables plus three
// two-variable "long" terms, one per k-block
FamilyInstance seven_eighths_element(int k);
// f_{r,k} in P_{mk+r}, m = 2^{r-1}-1: top (x+1)-product over r variables plus
// h_i-weighted k-block products; h_i are the nonzero even-weight monomials in
// the top variables, taken in ascending mask order
FamilyInstance generalized_element(int r, int k);

std::pair<Rational, Rational> family_bounds(const FamilyInstance& inst);

// predicted_degree is the headline count 2^{r-1} + (2^{r-1}-1) 2^k, which
// overcounts: each long term's bare h_i monomial cancels the copy of h_i
// inside the short term's expansion, so the true degree is smaller by
// exactly 2^{r-1}-1. Both values are reported; the gap never changes the
// exponent's limit.
struct SparsityCheck {
    std::int64_t vertices = 0;          // N = 2^{mk+r}
    std::int64_t predicted_degree = 0;  // 2^{r-1} + (2^{r-1}-1) 2^k
    std::int64_t actual_degree = 0;     // 2^{r-1} + (2^{r-1}-1)(2^k - 1)
    double exponent_estimate = 0;       // log |E| / log N
};
SparsityCheck sparsity_check(int r, int k);

std::string family_tag(Family f);
std::string instance_json(const FamilyInstance& inst);

} // namespace storagecode
