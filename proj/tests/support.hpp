#pragma once

// Shared helpers for the test suites: ring shorthands and seeded random
// polynomial generators.

#include <random>
#include <string>
#include <vector>

#include <varinterp/varinterp.hpp>

namespace varinterp::testing {

inline RingPtr ring_of(std::vector<std::string> vars, Field field = Field::rational) {
    return Ring::make(std::move(vars), field);
}

/// Parses an expression in the given ring.
struct PolyFactory {
    RingPtr ring;
    Polynomial operator()(std::string_view text) const { return parse_polynomial(ring, text); }
    std::vector<Polynomial> operator()(std::initializer_list<std::string_view> texts) const {
        std::vector<Polynomial> out;
        for (auto t : texts) out.push_back(parse_polynomial(ring, t));
        return out;
    }
    Ideal ideal(std::initializer_list<std::string_view> texts) const { return Ideal(ring, (*this)(texts)); }
};

inline std::vector<Monomial> monomials_of_degree(std::size_t dim, unsigned degree) {
    std::vector<Monomial> out;
    Monomial m(dim);
    auto rec = [&](auto&& self, std::size_t j, unsigned left) -> void {
        if (dim == 0) {
            if (left == 0) out.push_back(m);
            return;
        }
        if (j + 1 == dim) {
            m[j] = left;
            out.push_back(m);
            m[j] = 0;
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            m[j] = e;
            self(self, j + 1, left - e);
        }
        m[j] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

class RandomPolynomials {
public:
    explicit RandomPolynomials(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Scalar coefficient(const RingPtr& ring, int bound = 3) {
        auto nonzero = [&] {
            int v = 0;
            while (v == 0) v = integer(-bound, bound);
            return v;
        };
        Rational re(nonzero(), integer(1, 2));
        re.canonicalize();
        if (ring->field() == Field::gaussian_rational && integer(0, 1) == 1)
            return Scalar(re, Rational(integer(-bound, bound)));
        return Scalar(re);
    }

    /// Homogeneous polynomial of the given degree; `terms` random monomials.
    Polynomial homogeneous(const RingPtr& ring, unsigned degree, int terms, bool nonzero = true) {
        auto monos = monomials_of_degree(ring->dimension(), degree);
        for (;;) {
            Polynomial p(ring);
            for (int k = 0; k < terms; ++k)
                p.add_term(monos[static_cast<std::size_t>(integer(0, static_cast<int>(monos.size()) - 1))],
                           coefficient(ring));
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    /// Polynomial of exact total degree `degree` with a few terms per degree slice.
    Polynomial dense_ish(const RingPtr& ring, unsigned degree, int terms_per_degree = 2) {
        Polynomial p = homogeneous(ring, degree, terms_per_degree);
        for (unsigned k = 0; k < degree; ++k)
            if (integer(0, 2) != 0) p += homogeneous(ring, k, terms_per_degree, false);
        return p;
    }

    /// Sparse polynomial of total degree at most `degree` with up to `terms` terms.
    Polynomial sparse(const RingPtr& ring, unsigned degree, int terms) {
        Polynomial p(ring);
        while (p.is_zero()) {
            for (int k = 0; k < terms; ++k) {
                unsigned deg = static_cast<unsigned>(integer(0, static_cast<int>(degree)));
                p += homogeneous(ring, deg, 1);
            }
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace varinterp::testing
