#include "secant/partition.hpp"

#include <algorithm>
#include <functional>

#include "secant/checked.hpp"
#include "secant/error.hpp"

namespace secant {

namespace {

DerivedQuantities compute_derived(const std::vector<std::int64_t>& parts)
{
    DerivedQuantities q;
    const std::size_t r = parts.size();

    for (auto di : parts)
        q.total_degree = checked_add(q.total_degree, di);

    std::int64_t squares = 0;
    for (auto di : parts)
        squares = checked_add(squares, checked_mul(di, di));

    // 2D = d^2 - sum d_i^2
    const std::int64_t d2 = checked_mul(q.total_degree, q.total_degree);
    q.pair_products = checked_sub(d2, squares) / 2;

    q.ambient_dim = checked_sub(choose2(checked_add(q.total_degree, 2)), 1);

    q.cofactor_sum.resize(r);
    q.cofactor_pairs.resize(r);
    for (std::size_t e = 0; e < r; ++e) {
        q.cofactor_sum[e] = q.total_degree - parts[e];
        q.cofactor_pairs[e] = checked_sub(q.pair_products, checked_mul(parts[e], q.cofactor_sum[e]));
    }
    q.tail_sum = q.cofactor_sum[0];
    q.tail_pairs = q.cofactor_pairs[0];
    return q;
}

void check_range(std::int64_t bound, std::int64_t r_min, std::int64_t r_max)
{
    if (r_min < 2 || r_max < r_min || bound < 1)
        throw Error(ErrorCode::InvalidRange, "need 2 <= r_min <= r_max and a positive bound");
}

// Appends every non-increasing sequence of length `len`, entries in [1, cap],
// summing to `remaining`, in lexicographic order.
void fill_parts(std::vector<std::int64_t>& prefix, std::int64_t remaining, std::int64_t len, std::int64_t cap,
                const std::function<void(const std::vector<std::int64_t>&)>& emit)
{
    if (len == 0) {
        if (remaining == 0)
            emit(prefix);
        return;
    }
    // the remaining len-1 parts need at least len-1 and at most (len-1)*part
    const std::int64_t lo = std::max<std::int64_t>(1, (remaining + len - 1) / len);
    const std::int64_t hi = std::min(cap, remaining - (len - 1));
    for (std::int64_t part = lo; part <= hi; ++part) {
        prefix.push_back(part);
        fill_parts(prefix, remaining - part, len - 1, part, emit);
        prefix.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<std::int64_t> sorted_parts)
    : parts_(std::move(sorted_parts))
    , derived_(compute_derived(parts_))
{}

Partition Partition::from_parts(std::span<const std::int64_t> raw)
{
    if (raw.empty())
        throw Error(ErrorCode::EmptyInput, "partition has no parts");
    for (auto v : raw) {
        if (v < 1)
            throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(v) + " is not positive");
    }
    if (raw.size() < 2)
        throw Error(ErrorCode::TooFewParts, "a reducible curve needs at least two factors");
    std::vector<std::int64_t> parts(raw.begin(), raw.end());
    std::ranges::sort(parts, std::greater<>{});
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    return "[" + to_csv_list() + "]";
}

std::string Partition::to_csv_list() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> enumerate_partitions(std::int64_t d_max, std::int64_t r_min, std::int64_t r_max)
{
    if (d_max < 2)
        throw Error(ErrorCode::InvalidRange, "d_max must be at least 2");
    check_range(d_max, r_min, r_max);

    std::vector<Partition> out;
    std::vector<std::int64_t> prefix;
    for (std::int64_t d = 2; d <= d_max; ++d) {
        for (std::int64_t r = r_min; r <= std::min(r_max, d); ++r) {
            fill_parts(prefix, d, r, d, [&](const std::vector<std::int64_t>& p) {
                out.push_back(Partition::from_parts(p));
            });
        }
    }
    return out;
}

std::vector<Partition> enumerate_bounded_parts(std::int64_t max_part, std::int64_t r_min, std::int64_t r_max)
{
    check_range(max_part, r_min, r_max);
    const std::int64_t d_hi = checked_mul(max_part, r_max);

    std::vector<Partition> out;
    std::vector<std::int64_t> prefix;
    for (std::int64_t d = 2; d <= d_hi; ++d) {
        for (std::int64_t r = r_min; r <= std::min(r_max, d); ++r) {
            if (d > checked_mul(max_part, r))
                continue;
            fill_parts(prefix, d, r, max_part, [&](const std::vector<std::int64_t>& p) {
                out.push_back(Partition::from_parts(p));
            });
        }
    }
    return out;
}

Partition lower_part(const Partition& lambda, std::size_t index)
{
    if (index >= lambda.size())
        throw Error(ErrorCode::InvalidArgument, "part index out of range");
    if (lambda[index] < 2)
        throw Error(ErrorCode::InvalidArgument, "cannot lower a part equal to 1");
    std::vector<std::int64_t> parts = lambda.parts();
    parts[index] -= 1;
    return Partition::from_parts(parts);
}

}  // namespace secant
