#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace younghull {

// 1-based coordinates of a box in a Young diagram (English convention:
// row 1 on top, column 1 on the left).
struct Corner {
    int row = 0;
    int col = 0;
    auto operator<=>(const Corner&) const = default;
};

// An integer partition in canonical form: weakly decreasing positive parts,
// never any trailing zeros. The empty sequence is the empty partition ().
//
// Text format: comma-separated decreasing parts ("5,3,3,2"); the single
// token "0" spells the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool is_empty() const { return parts_.empty(); }
    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }
    long long size() const;

    // parts[0] + #parts - 1, the hook length of the (1,1) box; 0 for ().
    int max_hook() const;

    // Conjugate (transpose) diagram; an involution.
    Partition dual() const;

    // Removable boxes, top row first. Their count is s(lambda).
    std::vector<Corner> inner_corners() const;
    int corner_count() const;

    // True iff `mu` arises from this partition by deleting one inner corner.
    bool covers(const Partition& mu) const;

    // Diagram with the box at `c` deleted; `c` must be an inner corner.
    Partition remove_corner(const Corner& c) const;

    // Side length of the largest d x d square of boxes in the diagram.
    int durfee_side() const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// True iff lambda has maximal hook length strictly below n.
bool in_young(const Partition& lambda, int n);

// Throws std::invalid_argument unless lambda lies in Y_n.
void require_in_young(const Partition& lambda, int n);

// All partitions with maximal hook length < n, in lexicographic order on
// the part sequences (empty partition first). Exactly 2^(n-1) entries.
std::vector<Partition> enumerate_young(int n);

// The mutually inverse cyclic actions of order n on Y_n:
//   tau(lambda)   = (n-m-1, lambda_1 - 1, ..., lambda_m - 1), zeros stripped,
//   sigma(lambda) = (lambda_2 + 1, ..., lambda_{n - lambda_1} + 1),
// where lambda is read with zero parts appended up to n - lambda_1 rows.
Partition tau(const Partition& lambda, int n);
Partition sigma(const Partition& lambda, int n);

// Number of partitions in Y_n with exactly s inner corners: binom(n, 2s).
long long count_by_inner_corners(int n, int s);

// Exact binomial coefficient, 0 when k < 0 or k > n.
long long binomial(int n, int k);

}  // namespace younghull
