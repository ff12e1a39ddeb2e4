#pragma once

// Coordinates of w*gamma_{q+1} on the weight-q Hall basis of
// A_q^m = gamma_q(F_m)/gamma_{q+1}(F_m).
//
// For w in gamma_q the degree-q part of magnus_expand(w) - 1 is a Lie element;
// expanding each basic commutator to its Lie polynomial
// P([u,v]) = P(u)P(v) - P(v)P(u) and solving the (overdetermined, consistent)
// integer system gives the coordinates exactly.

#include <stdexcept>
#include <vector>

#include "hall.hpp"
#include "magnus.hpp"
#include "matrix.hpp"

namespace cgtk {

struct CoordinateVector {
    int weight;
    std::vector<Int> entries;  // indexed by the weight-q level of the Hall basis

    Int l1norm() const {
        Int n = 0;
        for (const auto& e : entries) n += e < 0 ? -e : e;
        return n;
    }

    friend bool operator==(const CoordinateVector&, const CoordinateVector&) = default;
};

struct NotInGammaError : std::domain_error {
    using std::domain_error::domain_error;
};

// Lie polynomial of a basic commutator, homogeneous of degree = weight.
inline MagnusSeries lie_polynomial(const HallBasis& basis, int ordinal, int cap) {
    const auto& c = basis.at(ordinal);
    if (c.leaf()) {
        MagnusSeries s(basis.rank(), cap);
        s.coefficient(0) = 0;
        s.coefficient(static_cast<size_t>(c.gen)) = 1;
        return s;
    }
    MagnusSeries l = lie_polynomial(basis, c.left, cap);
    MagnusSeries r = lie_polynomial(basis, c.right, cap);
    MagnusSeries out = l * r;
    MagnusSeries rl = r * l;
    for (size_t id = 0; id < out.monomialCount(); ++id)
        out.coefficient(id) -= rl.coefficient(id);
    return out;
}

inline CoordinateVector abelian_coords(const Word& w, int q, const HallBasis& basis) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (q < 1 || q > basis.maxWeight())
        throw std::invalid_argument("abelian_coords: weight out of basis range");
    if (w.rank() != basis.rank()) throw std::invalid_argument("abelian_coords: rank mismatch");
    MagnusSeries s = magnus_expand(w, q);
    int low = s.lowestDegree();
    if (low != 0 && low < q)
        throw NotInGammaError("abelian_coords: word is not in gamma_" + std::to_string(q));

    const auto& lvl = basis.level(q);
    std::size_t nEq = s.degreeEnd(q) - s.degreeBegin(q);
    std::vector<std::vector<Rat>> rows(nEq, std::vector<Rat>(lvl.size(), Rat(0)));
    std::vector<Rat> rhs(nEq);
    for (std::size_t j = 0; j < lvl.size(); ++j) {
        MagnusSeries pj = lie_polynomial(basis, lvl[j], q);
        for (std::size_t e = 0; e < nEq; ++e)
            rows[e][j] = Rat(pj.coefficient(s.degreeBegin(q) + e));
    }
    for (std::size_t e = 0; e < nEq; ++e) rhs[e] = Rat(s.coefficient(s.degreeBegin(q) + e));

    std::vector<Rat> sol = solve_unique(std::move(rows), std::move(rhs), lvl.size());
    CoordinateVector out;
    out.weight = q;
    out.entries.reserve(lvl.size());
    for (const auto& v : sol) {
        if (denominator(v) != 1)
            throw std::logic_error("abelian_coords: non-integer coordinate");
        out.entries.push_back(numerator(v));
    }
    return out;
}

// Fact check: v(x_1^n,..,x_m^n) == v(x_1,..,x_m)^{n^r} mod gamma_{r+1},
// decided through the Magnus oracle.
inline bool verify_bci(const HallBasis& basis, int ordinal, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("verify_bci: n must be >= 1");
    const auto& c = basis.at(ordinal);
    Word v = basis.word(ordinal);
    std::int64_t power = 1;
    for (int i = 0; i < c.weight; ++i) power *= n;
    Word diff = substitute_powers(v, n) * v.pow(-power);
    return in_gamma(diff, c.weight + 1);
}

}  // namespace cgtk
