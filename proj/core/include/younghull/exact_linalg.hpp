#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace younghull {

// All determinants and linear solves in this project are exact. Entries are
// small (0/1/2 for rim matrices, at most N^2/4 for the cyclic distance
// matrix), so fraction-free Bareiss elimination over 64- or 128-bit integers
// covers every supported N without arbitrary precision.

using Int128 = __int128;

std::string int128_to_string(Int128 v);

// Exact determinant by fraction-free Bareiss elimination with row pivoting.
// `m` is row-major n x n and is consumed.
Int128 bareiss_determinant(std::vector<Int128> m, int n);
long long bareiss_determinant_ll(const std::vector<long long>& m, int n);

// Exact solution of A x = b. Returns x as (num, den) with x_i = num[i]/den,
// den > 0 and gcd(num..., den) = 1, or nullopt if A is singular.
struct ExactSolution {
    std::vector<Int128> num;
    Int128 den = 1;
};
std::optional<ExactSolution> solve_linear_exact(std::vector<Int128> a,
                                                std::vector<Int128> b, int n);

}  // namespace younghull
