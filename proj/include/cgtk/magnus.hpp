#pragma once

// Truncated Magnus expansion x_i -> 1 + X_i into the free associative ring on
// noncommuting X_1..X_m. Serves as the independent oracle for lower central
// series membership: w lies in gamma_q(F_m) iff its expansion has no term of
// degree in [1, q-1] (in free groups the dimension subgroups equal the gamma_q).
//
// Monomials of degree <= cap are indexed densely: id(empty) = 0,
// id(u x_g) = id(u)*m + g. Coefficients are arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "word.hpp"

namespace cgtk {

using Int = boost::multiprecision::cpp_int;

class MagnusSeries {
public:
    MagnusSeries(int m, int degreeCap) : m_(m), cap_(degreeCap) {
        if (degreeCap < 1) throw std::invalid_argument("MagnusSeries: degreeCap must be >= 1");
        size_t count = 1;
        offsets_.push_back(0);
        size_t levelSize = 1;
        for (int d = 1; d <= degreeCap; ++d) {
            levelSize *= static_cast<size_t>(m);
            offsets_.push_back(count);
            count += levelSize;
        }
        coeff_.assign(count, Int(0));
        coeff_[0] = 1;
    }

    int rank() const { return m_; }
    int degreeCap() const { return cap_; }
    size_t monomialCount() const { return coeff_.size(); }

    const Int& coefficient(size_t id) const { return coeff_[id]; }
    Int& coefficient(size_t id) { return coeff_[id]; }

    // Coefficient of the monomial X_{g1} X_{g2} ... (1-based generator indices).
    const Int& coefficient(const std::vector<int>& mono) const {
        size_t id = 0;
        for (int g : mono) id = id * static_cast<size_t>(m_) + static_cast<size_t>(g);
        return coeff_[id];
    }

    int degreeOf(size_t id) const {
        int d = static_cast<int>(offsets_.size()) - 1;
        while (d > 0 && id < offsets_[static_cast<size_t>(d)]) --d;
        return d;
    }

    size_t degreeBegin(int d) const { return offsets_[static_cast<size_t>(d)]; }
    size_t degreeEnd(int d) const {
        return d == cap_ ? coeff_.size() : offsets_[static_cast<size_t>(d + 1)];
    }

    std::vector<int> monomial(size_t id) const {
        int d = degreeOf(id);
        std::vector<int> mono(static_cast<size_t>(d));
        size_t cur = id;
        for (int i = d - 1; i >= 0; --i) {
            size_t parent = (cur - 1) / static_cast<size_t>(m_);
            mono[static_cast<size_t>(i)] = static_cast<int>(cur - parent * static_cast<size_t>(m_));
            cur = parent;
        }
        return mono;
    }

    bool isOne() const {
        if (coeff_[0] != 1) return false;
        for (size_t i = 1; i < coeff_.size(); ++i)
            if (coeff_[i] != 0) return false;
        return true;
    }

    // Lowest degree in [1, cap] with a nonzero coefficient; 0 when none.
    int lowestDegree() const {
        for (int d = 1; d <= cap_; ++d)
            for (size_t id = degreeBegin(d); id < degreeEnd(d); ++id)
                if (coeff_[id] != 0) return d;
        return 0;
    }

    friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
        if (a.m_ != b.m_ || a.cap_ != b.cap_)
            throw std::invalid_argument("MagnusSeries: incompatible factors");
        MagnusSeries r(a.m_, a.cap_);
        r.coeff_[0] = 0;
        for (int da = 0; da <= a.cap_; ++da) {
            for (size_t ia = a.degreeBegin(da); ia < a.degreeEnd(da); ++ia) {
                if (a.coeff_[ia] == 0) continue;
                for (int db = 0; da + db <= a.cap_; ++db) {
                    for (size_t ib = b.degreeBegin(db); ib < b.degreeEnd(db); ++ib) {
                        if (b.coeff_[ib] == 0) continue;
                        size_t target = concatIds(a.m_, ia, ib, db);
                        r.coeff_[target] += a.coeff_[ia] * b.coeff_[ib];
                    }
                }
            }
        }
        return r;
    }

    bool operator==(const MagnusSeries& other) const {
        return m_ == other.m_ && cap_ == other.cap_ && coeff_ == other.coeff_;
    }

private:
    static size_t concatIds(int m, size_t idA, size_t idB, int degB) {
        // rebuild idB's digit path on top of idA
        std::vector<size_t> digits(static_cast<size_t>(degB));
        size_t cur = idB;
        for (int i = degB - 1; i >= 0; --i) {
            size_t parent = (cur - 1) / static_cast<size_t>(m);
            digits[static_cast<size_t>(i)] = cur - parent * static_cast<size_t>(m);
            cur = parent;
        }
        size_t id = idA;
        for (size_t d : digits) id = id * static_cast<size_t>(m) + d;
        return id;
    }

    int m_;
    int cap_;
    std::vector<size_t> offsets_;
    std::vector<Int> coeff_;
};

namespace detail {

// (e choose j) for arbitrary integer e (generalized binomial, always integral).
inline Int generalized_binomial(std::int64_t e, int j) {
    Int num = 1;
    for (int i = 0; i < j; ++i) num *= Int(e - i);
    Int den = 1;
    for (int i = 2; i <= j; ++i) den *= i;
    return num / den;
}

}  // namespace detail

// Expansion of a single syllable x_g^e: sum_j (e choose j) X_g^j, exact
// modulo degree cap (for e < 0 this is the truncated geometric-series inverse).
inline MagnusSeries magnus_syllable(int m, int cap, int gen, std::int64_t e) {
    MagnusSeries s(m, cap);
    size_t id = 0;
    for (int j = 1; j <= cap; ++j) {
        id = id * static_cast<size_t>(m) + static_cast<size_t>(gen);
        s.coefficient(id) = detail::generalized_binomial(e, j);
    }
    return s;
}

inline MagnusSeries magnus_expand(const Word& w, int degreeCap) {
    MagnusSeries acc(w.rank(), degreeCap);
    for (const auto& syl : w.syllables())
        acc = acc * magnus_syllable(w.rank(), degreeCap, syl.gen, syl.exp);
    return acc;
}

// Largest q <= cap with w in gamma_q(F_m); returns cap+1 when w lies in
// gamma_{cap+1} as far as the oracle can see (in particular for w = 1).
inline int lcs_depth(const Word& w, int cap) {
    if (cap < 1) throw std::invalid_argument("lcs_depth: cap must be >= 1");
    MagnusSeries s = magnus_expand(w, cap);
    int low = s.lowestDegree();
    return low == 0 ? cap + 1 : low;
}

inline bool in_gamma(const Word& w, int q) {
    if (q <= 1) return true;
    return magnus_expand(w, q - 1).isOne();
}

}  // namespace cgtk
