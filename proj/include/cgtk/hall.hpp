#pragma once

// Hall basis of basic commutators of bounded weight.
//
// Basic commutators of weight 1 are the generators x_1 < ... < x_m. A pair
// [x,y] of basic commutators is basic when y < x and, if x = [u,v], v <= y.
// Cross-weight order is by weight; the same-weight order (which the defining
// conditions leave open) is lexicographic by (right ordinal, left ordinal).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace cgtk {

struct BasicCommutator {
    int weight;
    int left = -1;   // ordinal of left component, -1 for a leaf
    int right = -1;  // ordinal of right component
    int gen = 0;     // generator index for a leaf
    int ordinal = -1;

    bool leaf() const { return left < 0; }
};

class HallBasis {
public:
    HallBasis(int m, int maxWeight, int weightLimit = 8) : m_(m), maxWeight_(maxWeight) {
        if (m < 1) throw std::invalid_argument("hall_basis: rank must be >= 1");
        if (maxWeight < 1) throw std::invalid_argument("hall_basis: maxWeight must be >= 1");
        if (maxWeight > weightLimit)
            throw std::invalid_argument("hall_basis: maxWeight beyond configured bound (" +
                                        std::to_string(weightLimit) + ")");
        levels_.assign(static_cast<size_t>(maxWeight), {});
        for (int g = 1; g <= m; ++g) {
            BasicCommutator c;
            c.weight = 1;
            c.gen = g;
            push(c);
        }
        for (int w = 2; w <= maxWeight; ++w) {
            std::vector<std::pair<int, int>> candidates;  // (leftOrd, rightOrd)
            for (int k1 = 1; k1 < w; ++k1) {
                int k2 = w - k1;
                for (int x : levels_[static_cast<size_t>(k1 - 1)])
                    for (int y : levels_[static_cast<size_t>(k2 - 1)]) {
                        if (y >= x) continue;
                        if (!elems_[static_cast<size_t>(x)].leaf() &&
                            elems_[static_cast<size_t>(x)].right > y)
                            continue;
                        candidates.emplace_back(x, y);
                    }
            }
            std::sort(candidates.begin(), candidates.end(),
                      [](const auto& a, const auto& b) {
                          if (a.second != b.second) return a.second < b.second;
                          return a.first < b.first;
                      });
            for (auto [x, y] : candidates) {
                BasicCommutator c;
                c.weight = w;
                c.left = x;
                c.right = y;
                push(c);
            }
        }
    }

    int rank() const { return m_; }
    int maxWeight() const { return maxWeight_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const BasicCommutator& at(int ordinal) const { return elems_.at(static_cast<size_t>(ordinal)); }
    const std::vector<int>& level(int weight) const {
        return levels_.at(static_cast<size_t>(weight - 1));
    }
    std::vector<std::size_t> levelSizes() const {
        std::vector<std::size_t> out;
        for (const auto& l : levels_) out.push_back(l.size());
        return out;
    }

    // Ordinal of the basic pair [left,right], or -1 when the pair is not basic
    // (or exceeds maxWeight).
    int pairOrdinal(int left, int right) const {
        auto it = pairIndex_.find({left, right});
        return it == pairIndex_.end() ? -1 : it->second;
    }

    int leafOrdinal(int gen) const { return gen - 1; }

    bool isBasicPair(int left, int right) const {
        const auto& x = elems_[static_cast<size_t>(left)];
        const auto& y = elems_[static_cast<size_t>(right)];
        if (right >= left) return false;
        if (!x.leaf() && x.right > right) return false;
        return x.weight + y.weight <= maxWeight_;
    }

    // The basic commutator as a reduced word of F_m.
    Word word(int ordinal) const {
        const auto& c = at(ordinal);
        if (c.leaf()) return generator(m_, c.gen);
        return commutator(word(c.left), word(c.right));
    }

    std::string expr(int ordinal, const std::vector<std::string>* names = nullptr) const {
        const auto& c = at(ordinal);
        if (c.leaf()) {
            if (names) return (*names)[static_cast<size_t>(c.gen - 1)];
            return "x" + std::to_string(c.gen);
        }
        return "[" + expr(c.left, names) + "," + expr(c.right, names) + "]";
    }

private:
    void push(BasicCommutator c) {
        c.ordinal = static_cast<int>(elems_.size());
        if (!c.leaf()) pairIndex_[{c.left, c.right}] = c.ordinal;
        levels_[static_cast<size_t>(c.weight - 1)].push_back(c.ordinal);
        elems_.push_back(c);
    }

    int m_;
    int maxWeight_;
    std::vector<BasicCommutator> elems_;
    std::vector<std::vector<int>> levels_;
    std::map<std::pair<int, int>, int> pairIndex_;
};

inline HallBasis hall_basis(int m, int maxWeight, int weightLimit = 8) {
    return HallBasis(m, maxWeight, weightLimit);
}

// Witt necklace count: rank of A_q^m, (1/q) sum_{d|q} mu(d) m^{q/d}.
inline long long witt_count(int m, int q) {
    auto mobius = [](int n) {
        int result = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                result = -result;
            }
        }
        if (n > 1) result = -result;
        return result;
    };
    long long sum = 0;
    for (int d = 1; d <= q; ++d) {
        if (q % d) continue;
        long long pw = 1;
        for (int i = 0; i < q / d; ++i) pw *= m;
        sum += mobius(d) * pw;
    }
    return sum / q;
}

}  // namespace cgtk
