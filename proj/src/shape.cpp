#include "krsdet/shape.hpp"

#include <numeric>
#include <stdexcept>

namespace krsdet {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("shape parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("shape parts must be non-increasing");
    }
}

int Shape::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int alpha(const Shape& s, int k) {
    int sum = 0;
    for (std::size_t i = 0; i < s.length() && static_cast<int>(i) < k; ++i)
        sum += s.parts()[i];
    return sum;
}

int gamma(const Shape& s, int t) {
    int sum = 0;
    for (int p : s.parts())
        if (p - t + 1 > 0) sum += p - t + 1;
    return sum;
}

Shape dual_shape(const Shape& s) {
    if (s.empty()) return Shape{};
    std::vector<int> dual(s.parts()[0], 0);
    for (int p : s.parts())
        for (int i = 0; i < p; ++i) ++dual[i];
    return Shape(std::move(dual));
}

bool shape_leq(const Shape& rho, const Shape& sigma) {
    std::size_t len = std::max(rho.length(), sigma.length());
    int a = 0, b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        a += rho.part(i);
        b += sigma.part(i);
        if (a > b) return false;
    }
    return true;
}

namespace {
void collect_partitions(int remaining, int max_part, int max_parts,
                        std::vector<int>& cur, std::vector<Shape>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        collect_partitions(remaining - p, p, max_parts - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Shape> partitions_of(int d, int max_part, int max_parts) {
    std::vector<Shape> out;
    if (d < 0) return out;
    std::vector<int> cur;
    collect_partitions(d, max_part, max_parts < 0 ? d : max_parts, cur, out);
    return out;
}

}  // namespace krsdet
