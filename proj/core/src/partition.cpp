#include "younghull/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace younghull {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    if (text == "0")
        return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::max_hook() const {
    if (parts_.empty())
        return 0;
    return parts_.front() + rows() - 1;
}

Partition Partition::dual() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<size_t>(parts_.front()));
        for (int c = 1; c <= parts_.front(); ++c)
            cols[static_cast<size_t>(c - 1)] =
                static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                               [c](int p) { return p >= c; }));
    }
    return Partition(std::move(cols));
}

std::vector<Corner> Partition::inner_corners() const {
    std::vector<Corner> corners;
    for (int i = 1; i <= rows(); ++i) {
        int here = parts_[static_cast<size_t>(i - 1)];
        int below = i < rows() ? parts_[static_cast<size_t>(i)] : 0;
        if (here > below)
            corners.push_back({i, here});
    }
    return corners;
}

int Partition::corner_count() const {
    return static_cast<int>(inner_corners().size());
}

Partition Partition::remove_corner(const Corner& c) const {
    auto corners = inner_corners();
    if (std::find(corners.begin(), corners.end(), c) == corners.end())
        throw std::invalid_argument("not an inner corner of the partition");
    std::vector<int> parts = parts_;
    parts[static_cast<size_t>(c.row - 1)] -= 1;
    return Partition(std::move(parts));
}

bool Partition::covers(const Partition& mu) const {
    if (size() != mu.size() + 1)
        return false;
    for (const Corner& c : inner_corners())
        if (remove_corner(c) == mu)
            return true;
    return false;
}

int Partition::durfee_side() const {
    int d = 0;
    while (d < rows() && parts_[static_cast<size_t>(d)] >= d + 1)
        ++d;
    return d;
}

std::string Partition::to_string() const {
    if (parts_.empty())
        return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool in_young(const Partition& lambda, int n) {
    return lambda.max_hook() < n;
}

void require_in_young(const Partition& lambda, int n) {
    if (n < 2)
        throw std::invalid_argument("n must be at least 2");
    if (!in_young(lambda, n))
        throw std::invalid_argument("partition " + lambda.to_string() +
                                    " has maximal hook >= " + std::to_string(n));
}

namespace {

void extend_lex(std::vector<int>& prefix, int n, std::vector<Partition>& out) {
    out.push_back(Partition(prefix));
    int hi = prefix.empty() ? n - 1 : prefix.back();
    // Appending keeps the first part fixed, so only the length bound moves.
    if (!prefix.empty() && prefix.front() + static_cast<int>(prefix.size()) >= n)
        return;
    for (int p = 1; p <= hi; ++p) {
        prefix.push_back(p);
        extend_lex(prefix, n, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_young(int n) {
    if (n < 2)
        throw std::invalid_argument("enumerate_young requires n >= 2");
    std::vector<Partition> out;
    out.reserve(static_cast<size_t>(1) << (n - 1));
    std::vector<int> prefix;
    extend_lex(prefix, n, out);
    return out;
}

Partition tau(const Partition& lambda, int n) {
    require_in_young(lambda, n);
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(lambda.rows()) + 1);
    parts.push_back(n - lambda.rows() - 1);
    for (int p : lambda.parts())
        parts.push_back(p - 1);
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

Partition sigma(const Partition& lambda, int n) {
    require_in_young(lambda, n);
    std::vector<int> parts;
    int padded_rows = n - lambda.first_part();
    for (int i = 2; i <= padded_rows; ++i) {
        int part = i <= lambda.rows() ? lambda.parts()[static_cast<size_t>(i - 1)] : 0;
        parts.push_back(part + 1);
    }
    return Partition(std::move(parts));
}

long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

long long count_by_inner_corners(int n, int s) {
    if (n < 2)
        throw std::invalid_argument("count_by_inner_corners requires n >= 2");
    if (s < 0)
        throw std::invalid_argument("corner count must be nonnegative");
    return binomial(n, 2 * s);
}

}  // namespace younghull
