#include "krsdet/greene.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "krsdet/krs.hpp"

namespace krsdet {

Shape DecompositionWitness::shape() const {
    std::vector<int> parts;
    for (const auto& b : blocks) parts.push_back(static_cast<int>(b.size()));
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Shape(std::move(parts));
}

bool DecompositionWitness::validates(const std::vector<int>& seq) const {
    std::vector<char> used(seq.size(), 0);
    for (const auto& block : blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            int idx = block[i];
            if (idx < 0 || idx >= static_cast<int>(seq.size()) || used[idx]) return false;
            used[idx] = 1;
            if (i > 0) {
                if (block[i - 1] >= idx) return false;
                int prev = seq[block[i - 1]], cur = seq[idx];
                if (kind == DecompKind::increasing ? prev >= cur : prev < cur)
                    return false;
            }
        }
    }
    for (char u : used)
        if (!u) return false;
    return true;
}

int hat_alpha(const std::vector<int>& seq, int k) {
    return alpha(ins(seq).shape(), k);
}

int hat_gamma(const std::vector<int>& seq, int t) {
    return gamma(ins(seq).shape(), t);
}

int hat_alpha_star(const std::vector<int>& seq, int k) {
    return alpha(dual_shape(ins(seq).shape()), k);
}

int w_stat(const std::vector<int>& seq, int t) {
    if (t < 1) throw std::invalid_argument("w requires t >= 1");
    return alpha(dual_shape(ins(seq).shape()), t - 1);
}

namespace {

// Enumerates all decompositions of seq into blocks whose induced
// subsequences are strictly increasing (or weakly non-increasing); calls
// visit with the block tails' index lists. Blocks extend only at their tail,
// and set partitions are generated in restricted-growth form so each
// decomposition appears once.
void for_each_decomposition(const std::vector<int>& seq, DecompKind kind,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == seq.size()) {
            visit(blocks);
            return;
        }
        // index-based: deeper recursion may reallocate the block vector
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            int tail = seq[blocks[bi].back()];
            bool ok = kind == DecompKind::increasing ? tail < seq[i] : tail >= seq[i];
            if (ok) {
                blocks[bi].push_back(static_cast<int>(i));
                rec(i + 1);
                blocks[bi].pop_back();
            }
        }
        blocks.push_back({static_cast<int>(i)});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

BruteResult maximize(const std::vector<int>& seq, DecompKind kind, std::size_t max_len,
                     const std::function<int(const Shape&)>& objective) {
    if (seq.size() > max_len)
        throw std::invalid_argument("brute-force mode: sequence exceeds length bound");
    BruteResult best;
    best.value = -1;
    for_each_decomposition(seq, kind, [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<int> parts;
        for (const auto& b : blocks) parts.push_back(static_cast<int>(b.size()));
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        int val = objective(Shape(parts));
        if (val > best.value) {
            best.value = val;
            best.witness.blocks = blocks;
            best.witness.kind = kind;
        }
    });
    if (best.value < 0) {  // empty sequence
        best.value = 0;
        best.witness.kind = kind;
    }
    return best;
}

}  // namespace

BruteResult hat_alpha_brute(const std::vector<int>& seq, int k, std::size_t max_len) {
    return maximize(seq, DecompKind::increasing, max_len,
                    [k](const Shape& s) { return alpha(s, k); });
}

BruteResult hat_gamma_brute(const std::vector<int>& seq, int t, std::size_t max_len) {
    return maximize(seq, DecompKind::increasing, max_len,
                    [t](const Shape& s) { return gamma(s, t); });
}

BruteResult hat_alpha_star_brute(const std::vector<int>& seq, int k, std::size_t max_len) {
    return maximize(seq, DecompKind::non_increasing, max_len,
                    [k](const Shape& s) { return alpha(s, k); });
}

std::vector<Shape> decomposition_shapes(const std::vector<int>& seq, DecompKind kind,
                                        std::size_t max_len) {
    if (seq.size() > max_len)
        throw std::invalid_argument("decomposition_shapes: sequence exceeds length bound");
    std::vector<Shape> out;
    for_each_decomposition(seq, kind, [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<int> parts;
        for (const auto& b : blocks) parts.push_back(static_cast<int>(b.size()));
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out.emplace_back(std::move(parts));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int hat_alpha(const PositionMonomial& mon, int k) {
    return hat_alpha(monomial_to_array(mon).bottom, k);
}

int hat_gamma(const PositionMonomial& mon, int t) {
    return hat_gamma(monomial_to_array(mon).bottom, t);
}

int w_stat(const PositionMonomial& mon, int t) {
    return w_stat(monomial_to_array(mon).bottom, t);
}

}  // namespace krsdet
