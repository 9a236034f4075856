#include "umbral/partitions.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace umbral {

// ---------------------------------------------------------------------------
// Integer partitions

IntegerPartition::IntegerPartition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("integer partition with a zero part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("integer partition parts must be nonincreasing");
        n_ += parts_[i];
    }
}

std::vector<unsigned> IntegerPartition::multiplicities() const {
    std::vector<unsigned> m(n_ + 1, 0);
    for (unsigned p : parts_) ++m[p];
    return m;
}

Rational IntegerPartition::multiplicity_factorial() const {
    Rational r = 1;
    for (unsigned mi : multiplicities()) r *= factorial(mi);
    return r;
}

Rational IntegerPartition::part_factorial() const {
    Rational r = 1;
    for (unsigned p : parts_) r *= factorial(p);
    return r;
}

Rational IntegerPartition::set_partition_count() const {
    return factorial(n_) / (part_factorial() * multiplicity_factorial());
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                    std::vector<IntegerPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

void require_enum_bound(unsigned n, unsigned max, const char* what) {
    if (n < 1 || n > max) {
        throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(max) + "]");
    }
}

}  // namespace

std::vector<IntegerPartition> integer_partitions(unsigned n) {
    std::vector<IntegerPartition> out;
    std::vector<unsigned> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

// ---------------------------------------------------------------------------
// Set partitions

SetPartition::SetPartition(unsigned n, const std::vector<std::vector<unsigned>>& blocks) {
    if (n > kMaxGround) throw std::invalid_argument("set partition ground set exceeds " + std::to_string(kMaxGround));
    std::vector<int> owner(n + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("set partition has an empty block");
        for (unsigned x : blocks[b]) {
            if (x < 1 || x > n) throw std::invalid_argument("set partition element " + std::to_string(x) + " outside [1, n]");
            if (owner[x] != -1) throw std::invalid_argument("set partition element " + std::to_string(x) + " appears twice");
            owner[x] = static_cast<int>(b);
        }
    }
    std::vector<unsigned> labels(n);
    for (unsigned i = 1; i <= n; ++i) {
        if (owner[i] == -1) throw std::invalid_argument("set partition does not cover element " + std::to_string(i));
        labels[i - 1] = static_cast<unsigned>(owner[i]);
    }
    *this = from_labels(labels);
}

SetPartition SetPartition::from_labels(const std::vector<unsigned>& labels) {
    if (labels.size() > kMaxGround) throw std::invalid_argument("set partition ground set exceeds " + std::to_string(kMaxGround));
    SetPartition p;
    p.n_ = static_cast<std::uint8_t>(labels.size());
    std::vector<std::optional<unsigned>> remap;
    unsigned next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= remap.size()) remap.resize(labels[i] + 1);
        auto& slot = remap[labels[i]];
        if (!slot) slot = next++;
        p.labels_[i] = static_cast<std::uint8_t>(*slot);
    }
    p.num_blocks_ = static_cast<std::uint8_t>(next);
    return p;
}

SetPartition SetPartition::finest(unsigned n) {
    std::vector<unsigned> labels(n);
    for (unsigned i = 0; i < n; ++i) labels[i] = i;
    return from_labels(labels);
}

SetPartition SetPartition::coarsest(unsigned n) { return from_labels(std::vector<unsigned>(n, 0)); }

std::vector<std::vector<unsigned>> SetPartition::blocks() const {
    std::vector<std::vector<unsigned>> out(num_blocks_);
    for (unsigned i = 0; i < n_; ++i) out[labels_[i]].push_back(i + 1);
    return out;
}

std::vector<unsigned> SetPartition::block_sizes() const {
    std::vector<unsigned> sizes(num_blocks_, 0);
    for (unsigned i = 0; i < n_; ++i) ++sizes[labels_[i]];
    return sizes;
}

void for_each_set_partition(unsigned n, const std::function<void(const SetPartition&)>& visit) {
    if (n > kMaxGround) throw std::out_of_range("for_each_set_partition: n too large");
    if (n == 0) {
        visit(SetPartition::from_labels({}));
        return;
    }
    // Restricted growth strings a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}), in
    // lexicographic order.
    std::vector<unsigned> rgs(n, 0);
    std::vector<unsigned> prefix_max(n, 0);
    while (true) {
        visit(SetPartition::from_labels(rgs));
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<SetPartition> set_partitions(unsigned n) {
    require_enum_bound(n, kMaxSetPartitionEnum, "set_partitions");
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

namespace {

// Stack scan: a block may only receive a new element while it is the most
// recently opened block that is still open.
bool labels_noncrossing(const std::vector<unsigned>& labels, unsigned num_blocks) {
    std::vector<std::size_t> last(num_blocks, 0);
    std::vector<bool> opened(num_blocks, false);
    for (std::size_t i = 0; i < labels.size(); ++i) last[labels[i]] = i;
    std::vector<unsigned> stack;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const unsigned b = labels[i];
        if (!opened[b]) {
            opened[b] = true;
            stack.push_back(b);
        } else if (stack.empty() || stack.back() != b) {
            return false;
        }
        if (last[b] == i) stack.pop_back();
    }
    return true;
}

std::vector<unsigned> labels_of(const SetPartition& p) {
    std::vector<unsigned> labels(p.n());
    for (unsigned i = 1; i <= p.n(); ++i) labels[i - 1] = p.label(i);
    return labels;
}

}  // namespace

bool is_noncrossing(const SetPartition& p) { return labels_noncrossing(labels_of(p), p.num_blocks()); }

std::vector<SetPartition> noncrossing_partitions(unsigned n) {
    require_enum_bound(n, kMaxSetPartitionEnum, "noncrossing_partitions");
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) {
        if (is_noncrossing(p)) out.push_back(p);
    });
    return out;
}

bool is_interval(const SetPartition& p) {
    // Canonical labels make a partition interval exactly when labels never
    // return to an earlier block.
    for (unsigned i = 2; i <= p.n(); ++i) {
        if (p.label(i) != p.label(i - 1) && p.label(i) != p.label(i - 1) + 1) return false;
    }
    return true;
}

std::vector<SetPartition> interval_partitions(unsigned n) {
    require_enum_bound(n, kMaxGround, "interval_partitions");
    // Bit i of the mask (i = 1..n-1) set means a cut between i and i+1.
    std::vector<SetPartition> out;
    const unsigned cuts = n - 1;
    for (unsigned mask = 0; mask < (1U << cuts); ++mask) {
        std::vector<unsigned> labels(n, 0);
        for (unsigned i = 1; i < n; ++i) labels[i] = labels[i - 1] + ((mask >> (i - 1)) & 1U);
        out.push_back(SetPartition::from_labels(labels));
    }
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        return labels_of(a) < labels_of(b);
    });
    return out;
}

bool leq_refinement(const SetPartition& sigma, const SetPartition& pi) {
    if (sigma.n() != pi.n()) throw std::invalid_argument("leq_refinement: ground sets differ");
    // σ ≤ π iff every σ-block maps into a single π-block.
    std::vector<int> image(sigma.num_blocks(), -1);
    for (unsigned i = 1; i <= sigma.n(); ++i) {
        int& target = image[sigma.label(i)];
        const int here = static_cast<int>(pi.label(i));
        if (target == -1) {
            target = here;
        } else if (target != here) {
            return false;
        }
    }
    return true;
}

IntervalType interval_type(const SetPartition& sigma, const SetPartition& pi) {
    if (!leq_refinement(sigma, pi)) throw std::invalid_argument("interval_type: sigma is not finer than pi");
    std::vector<unsigned> sigma_blocks_in(pi.num_blocks(), 0);
    std::vector<bool> seen(sigma.num_blocks(), false);
    for (unsigned i = 1; i <= sigma.n(); ++i) {
        if (!seen[sigma.label(i)]) {
            seen[sigma.label(i)] = true;
            ++sigma_blocks_in[pi.label(i)];
        }
    }
    IntervalType t{std::vector<unsigned>(sigma.n(), 0)};
    for (unsigned count : sigma_blocks_in) ++t.k[count - 1];
    return t;
}

IntegerPartition shape(const SetPartition& p) {
    auto sizes = p.block_sizes();
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return IntegerPartition(std::move(sizes));
}

SetPartition kreweras_complement(const SetPartition& pi) {
    if (!is_noncrossing(pi)) throw std::invalid_argument("kreweras_complement: input partition is crossing");
    const unsigned n = pi.n();
    if (n == 0) return pi;
    require_enum_bound(n, kMaxSetPartitionEnum, "kreweras_complement");

    // Interleave i -> position 2i-2, barred i -> position 2i-1. Barred block
    // labels are offset past π's labels.
    std::vector<unsigned> joint(2 * n);
    for (unsigned i = 1; i <= n; ++i) joint[2 * i - 2] = pi.label(i);

    std::optional<SetPartition> best;
    std::vector<SetPartition> compatible;
    for_each_set_partition(n, [&](const SetPartition& cand) {
        for (unsigned i = 1; i <= n; ++i) joint[2 * i - 1] = pi.num_blocks() + cand.label(i);
        if (!labels_noncrossing(joint, pi.num_blocks() + cand.num_blocks())) return;
        compatible.push_back(cand);
        if (!best || cand.num_blocks() < best->num_blocks()) best = cand;
    });

    // The complement must dominate every compatible partition.
    for (const auto& c : compatible) {
        if (!leq_refinement(c, *best)) throw std::logic_error("kreweras_complement: no unique coarsest compatible partition");
    }
    return *best;
}

Rational count_by_shape(const IntegerPartition& lambda, Lattice lattice) {
    const auto ell = static_cast<unsigned>(lambda.length());
    switch (lattice) {
        case Lattice::All:
            return lambda.set_partition_count();
        case Lattice::Noncrossing:
            if (ell == 0) return 1;
            return falling_factorial(Rational(lambda.size()), ell - 1) / lambda.multiplicity_factorial();
        case Lattice::Interval:
            return factorial(ell) / lambda.multiplicity_factorial();
    }
    throw std::invalid_argument("count_by_shape: unknown lattice");
}

}  // namespace umbral
