#pragma once

// Reduced-word arithmetic in free groups F_m. Words are stored in syllable
// (run-length) form: relators elsewhere in the project contain runs like
// y^900, so letter-level storage is wasteful.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cgtk {

struct Syllable {
    int gen;           // generator index, 1-based: 1..m
    std::int64_t exp;  // nonzero

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
public:
    Word() : rank_(0) {}
    explicit Word(int rank) : rank_(rank) {
        if (rank < 0) throw std::invalid_argument("Word: negative rank");
    }

    // Builds a word from syllables, merging/cancelling as needed.
    Word(int rank, std::vector<Syllable> sylls) : rank_(rank) {
        for (const auto& s : sylls) append(s.gen, s.exp);
    }

    int rank() const { return rank_; }
    bool empty() const { return sylls_.empty(); }
    const std::vector<Syllable>& syllables() const { return sylls_; }

    // Word length |w| over the standard generators.
    std::int64_t length() const {
        std::int64_t n = 0;
        for (const auto& s : sylls_) n += s.exp < 0 ? -s.exp : s.exp;
        return n;
    }

    // Appends x_gen^exp on the right, keeping the free reduction invariant.
    void append(int gen, std::int64_t exp) {
        if (exp == 0) return;
        if (gen < 1 || gen > rank_) throw std::out_of_range("Word: generator index out of range");
        if (!sylls_.empty() && sylls_.back().gen == gen) {
            sylls_.back().exp += exp;
            if (sylls_.back().exp == 0) sylls_.pop_back();
            return;
        }
        sylls_.push_back({gen, exp});
    }

    void append(const Word& other) {
        if (other.rank_ != rank_) throw std::invalid_argument("Word: rank mismatch");
        for (const auto& s : other.sylls_) append(s.gen, s.exp);
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        r.append(b);
        return r;
    }

    Word inverse() const {
        Word r(rank_);
        r.sylls_.reserve(sylls_.size());
        for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
            r.sylls_.push_back({it->gen, -it->exp});
        return r;
    }

    Word pow(std::int64_t n) const {
        if (n == 0) return Word(rank_);
        Word base = n > 0 ? *this : inverse();
        std::int64_t k = n > 0 ? n : -n;
        // repeated squaring; cancellation across copies is handled by append
        Word acc(rank_);
        Word sq = base;
        while (k > 0) {
            if (k & 1) acc.append(sq);
            sq.append(sq);
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.rank_ == b.rank_ && a.sylls_ == b.sylls_;
    }

    // Total stable order, used as a canonical key for deduplication.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
        const auto &x = a.sylls_, &y = b.sylls_;
        for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
            if (x[i].gen != y[i].gen) return x[i].gen < y[i].gen;
            if (x[i].exp != y[i].exp) return x[i].exp < y[i].exp;
        }
        return x.size() < y.size();
    }

    // Expands to single letters: +g for x_g, -g for x_g^{-1}.
    std::vector<int> letters() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(length()));
        for (const auto& s : sylls_) {
            int sign = s.exp < 0 ? -1 : 1;
            std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
            for (std::int64_t i = 0; i < n; ++i) out.push_back(sign * s.gen);
        }
        return out;
    }

    std::string str(const std::vector<std::string>* names = nullptr) const {
        if (sylls_.empty()) return "1";
        std::string out;
        for (size_t i = 0; i < sylls_.size(); ++i) {
            if (i) out += ' ';
            if (names)
                out += (*names)[static_cast<size_t>(sylls_[i].gen - 1)];
            else
                out += "x" + std::to_string(sylls_[i].gen);
            if (sylls_[i].exp != 1) out += "^" + std::to_string(sylls_[i].exp);
        }
        return out;
    }

private:
    int rank_;
    std::vector<Syllable> sylls_;
};

// reduce: builds the unique freely reduced word from raw signed letters.
// Letters use the convention +g / -g for x_g / x_g^{-1}.
inline Word reduce(int rank, const std::vector<int>& raw) {
    Word w(rank);
    for (int letter : raw) {
        if (letter == 0) throw std::out_of_range("reduce: letter 0 is not a generator");
        int gen = letter > 0 ? letter : -letter;
        w.append(gen, letter > 0 ? 1 : -1);
    }
    return w;
}

inline Word multiply(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& a) { return a.inverse(); }

inline Word generator(int rank, int g, std::int64_t exp = 1) {
    Word w(rank);
    w.append(g, exp);
    return w;
}

// Left-normed iterated commutator [w1,...,wr] = [[w1,...,w_{r-1}],wr],
// [u,v] = u^{-1} v^{-1} u v.
inline Word commutator(const std::vector<Word>& args) {
    if (args.empty()) throw std::invalid_argument("commutator: empty argument list");
    Word acc = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
        const Word& v = args[i];
        if (v.rank() != acc.rank()) throw std::invalid_argument("commutator: rank mismatch");
        acc = acc.inverse() * v.inverse() * acc * v;
    }
    return acc;
}

inline Word commutator(const Word& a, const Word& b) { return commutator(std::vector<Word>{a, b}); }

// substitute_powers: x_i -> x_i^n throughout, then reduce.
inline Word substitute_powers(const Word& w, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("substitute_powers: n must be >= 1");
    Word r(w.rank());
    for (const auto& s : w.syllables()) r.append(s.gen, s.exp * n);
    return r;
}

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull ^ static_cast<size_t>(w.rank());
        for (const auto& s : w.syllables()) {
            h = (h ^ static_cast<size_t>(s.gen)) * 1099511628211ull;
            h = (h ^ static_cast<size_t>(s.exp)) * 1099511628211ull;
        }
        return h;
    }
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ball of the Cayley graph of F_rank over an arbitrary finite generating set,
// with exact lengths. Fails loudly on the element cap instead of swapping.
struct BallEntry {
    Word element;
    int dist;
};

inline std::vector<BallEntry> ball(int rank, int radius, const std::vector<Word>& generators,
                                   std::size_t elementCap = 50'000'000) {
    if (radius < 0) throw std::invalid_argument("ball: negative radius");
    std::vector<Word> steps;
    for (const auto& g : generators) {
        if (g.rank() != rank) throw std::invalid_argument("ball: generator rank mismatch");
        steps.push_back(g);
        steps.push_back(g.inverse());
    }
    std::vector<BallEntry> out;
    std::unordered_map<Word, int, WordHash> seen;
    std::vector<Word> frontier{Word(rank)};
    seen.emplace(Word(rank), 0);
    out.push_back({Word(rank), 0});
    for (int d = 1; d <= radius && !frontier.empty(); ++d) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (const auto& s : steps) {
                Word v = w * s;
                if (seen.emplace(v, d).second) {
                    if (seen.size() > elementCap)
                        throw CapacityError("ball: element cap exceeded");
                    out.push_back({v, d});
                    next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace cgtk
