#pragma once

#include <vector>

namespace krsdet {

/// Non-increasing sequence of positive row lengths. Trailing zeros on input
/// are stripped; the empty shape is allowed.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);
    Shape(std::initializer_list<int> parts) : Shape(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int total() const;

    bool operator==(const Shape& o) const { return parts_ == o.parts_; }
    bool operator<(const Shape& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/// Sum of the first k parts; missing parts count 0.
int alpha(const Shape& s, int k);

/// Sum over parts of max(part - t + 1, 0).
int gamma(const Shape& s, int t);

/// Column-length shape; an involution.
Shape dual_shape(const Shape& s);

/// True iff alpha_k(rho) <= alpha_k(sigma) for all k.
bool shape_leq(const Shape& rho, const Shape& sigma);

/// All partitions of d with at most max_parts parts, each at most max_part.
/// max_parts < 0 means unbounded.
std::vector<Shape> partitions_of(int d, int max_part, int max_parts = -1);

}  // namespace krsdet
