#include "younghull/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace younghull {

std::string int128_to_string(Int128 v) {
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

namespace {

Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Small rational on Int128, enough for back substitution of systems whose
// Bareiss pivots stay well inside 128 bits.
struct Frac {
    Int128 num = 0;
    Int128 den = 1;

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

Frac frac_sub_mul(const Frac& acc, Int128 coeff, const Frac& x) {
    // acc - coeff * x
    Frac r;
    r.num = acc.num * x.den - coeff * x.num * acc.den;
    r.den = acc.den * x.den;
    r.reduce();
    return r;
}

// Eliminates [a | b] in place to upper triangular form, fraction-free.
// Returns the determinant of a (0 if singular).
Int128 eliminate(std::vector<Int128>& a, std::vector<Int128>* b, int n) {
    auto at = [&](int i, int j) -> Int128& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    Int128 prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(at(k, j), at(pivot, j));
            if (b)
                std::swap((*b)[k], (*b)[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            if (b)
                (*b)[i] = ((*b)[i] * at(k, k) - at(i, k) * (*b)[k]) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace

Int128 bareiss_determinant(std::vector<Int128> m, int n) {
    if (n == 0)
        return 1;
    if (static_cast<int>(m.size()) != n * n)
        throw std::invalid_argument("bareiss_determinant: bad matrix size");
    return eliminate(m, nullptr, n);
}

long long bareiss_determinant_ll(const std::vector<long long>& m, int n) {
    std::vector<Int128> wide(m.begin(), m.end());
    Int128 d = bareiss_determinant(std::move(wide), n);
    return static_cast<long long>(d);
}

std::optional<ExactSolution> solve_linear_exact(std::vector<Int128> a,
                                                std::vector<Int128> b, int n) {
    if (static_cast<int>(a.size()) != n * n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_linear_exact: bad dimensions");
    Int128 det = eliminate(a, &b, n);
    if (det == 0)
        return std::nullopt;
    auto at = [&](int i, int j) -> Int128 { return a[static_cast<size_t>(i) * n + j]; };

    std::vector<Frac> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Frac acc{b[static_cast<size_t>(i)], 1};
        for (int j = i + 1; j < n; ++j)
            acc = frac_sub_mul(acc, at(i, j), x[static_cast<size_t>(j)]);
        acc.den *= at(i, i);
        acc.reduce();
        x[static_cast<size_t>(i)] = acc;
    }

    Int128 common = 1;
    for (const auto& f : x)
        common = common / gcd128(common, f.den) * f.den;
    ExactSolution sol;
    sol.den = common;
    sol.num.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        sol.num[static_cast<size_t>(i)] =
            x[static_cast<size_t>(i)].num * (common / x[static_cast<size_t>(i)].den);
    return sol;
}

}  // namespace younghull
