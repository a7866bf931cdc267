#pragma once

/**
 * @file interp.hpp
 * @brief Interpolation of polynomial data on varieties given by ideals.
 *
 * A problem pairs ideals J_1..J_n with data p_1..p_n; an interpolant f
 * satisfies f - p_k in J_k for every k, which makes f agree with p_k on the
 * variety of J_k. Every feasible result carries one membership certificate
 * per variety.
 *
 * Solvers:
 *  - interpolate_disjoint: Lagrange-style sum over separating polynomials;
 *    needs pairwise disjoint varieties.
 *  - interpolate_pair: exact two-variety criterion p1 - p2 in J1 + J2.
 *  - interpolate_sequential: folds the pair solver over a running union.
 *  - interpolate_restricted: averaged construction under a sufficient
 *    membership hypothesis; failure of the hypothesis is "undecided".
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "polynomial.hpp"

namespace varinterp {

/// Two varieties meet, so no separating polynomial exists.
class VarietiesIntersect : public PreconditionError {
public:
    VarietiesIntersect(std::size_t first, std::size_t second, const std::string& detail)
        : PreconditionError(detail), first_(first), second_(second) {}
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

struct InterpolationProblem {
    std::vector<Ideal> ideals;
    std::vector<Polynomial> data;

    std::size_t size() const { return ideals.size(); }
    const RingPtr& ring() const { return ideals.at(0).ring(); }

    void validate(std::size_t minimum = 1) const {
        if (ideals.size() != data.size()) throw PreconditionError("ideals and data differ in length");
        if (ideals.size() < minimum)
            throw PreconditionError("interpolation needs at least " + std::to_string(minimum) + " varieties");
        for (std::size_t k = 0; k < ideals.size(); ++k) {
            if (!same_ring(ideals[k].ring(), ring())) throw RingMismatch("ideal " + std::to_string(k + 1));
            if (!same_ring(data[k].ring(), ring())) throw RingMismatch("datum " + std::to_string(k + 1));
        }
    }
};

enum class Status { feasible, infeasible, undecided_precondition };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::feasible: return "feasible";
        case Status::infeasible: return "infeasible";
        case Status::undecided_precondition: return "undecided-precondition";
    }
    return "undecided-precondition";
}

/// `difference` failed membership in `tested`. Indices are 0-based problem positions.
struct Witness {
    std::size_t first = 0;
    std::size_t second = 0;
    Polynomial difference;
    Ideal tested;
};

struct InterpolationResult {
    Status status = Status::infeasible;
    std::optional<Polynomial> interpolant;
    /// certificates[k] proves interpolant - p_k in J_k.
    std::vector<Certificate> certificates;
    std::vector<Witness> witnesses;
    /// Sequential solver only: 0-based index of the variety whose step failed.
    std::optional<std::size_t> failed_step;
    /// Sequential solver only: radicality of U_m + J_{m+1} for each step m >= 1.
    std::vector<Radicality> step_radicality;

    bool feasible() const { return status == Status::feasible; }
};

/// p - q = g1 + g2 with g1 in J1 and g2 in J2, both certified.
struct MembershipSplit {
    Certificate first;
    Certificate second;
};

/**
 * Certified split of `diff` over J1 + J2. Generators are concatenated with
 * J2's duplicates of J1 generators dropped, so shared generators are
 * attributed to J1.
 */
inline std::optional<MembershipSplit> split_membership(const Polynomial& diff, const Ideal& first, const Ideal& second) {
    first.check_ring(second);
    const RingPtr& ring = first.ring();
    std::vector<Polynomial> combined = first.generators();
    std::vector<std::optional<std::size_t>> second_slot;
    for (const auto& g : second.generators()) {
        bool duplicate = std::find(first.generators().begin(), first.generators().end(), g) != first.generators().end();
        if (duplicate) {
            second_slot.push_back(std::nullopt);
        } else {
            second_slot.push_back(combined.size());
            combined.push_back(g);
        }
    }
    auto cert = ideal_member(diff, combined);
    if (!cert) return std::nullopt;

    MembershipSplit split{{Polynomial(ring), first.generators(), {}}, {Polynomial(ring), second.generators(), {}}};
    for (std::size_t i = 0; i < first.generators().size(); ++i) {
        split.first.cofactors.push_back(cert->cofactors[i]);
        split.first.target += cert->cofactors[i] * first.generators()[i];
    }
    for (std::size_t i = 0; i < second.generators().size(); ++i) {
        Polynomial c = second_slot[i] ? cert->cofactors[*second_slot[i]] : Polynomial(ring);
        split.second.target += c * second.generators()[i];
        split.second.cofactors.push_back(std::move(c));
    }
    return split;
}

inline Certificate negated(Certificate c) {
    c.target = -c.target;
    for (auto& f : c.cofactors) f = -f;
    return c;
}

/// Certificate that f - p lies in J; the caller guarantees membership.
inline Certificate require_membership(const Polynomial& f, const Polynomial& p, const Ideal& j) {
    auto cert = j.member(f - p);
    if (!cert) throw std::logic_error("constructed interpolant failed membership: " + (f - p).to_string());
    return *cert;
}

struct Separation {
    Polynomial f;
    Certificate one_on_first;   ///< f - 1 in J1
    Certificate zero_on_second; ///< f in J2
};

/// f with f = 1 on V(J1) and f = 0 on V(J2), regrouped from 1 = g1 + g2.
inline Separation separator(const Ideal& first, const Ideal& second) {
    auto split = split_membership(Polynomial::constant(first.ring(), Scalar(1)), first, second);
    if (!split) throw VarietiesIntersect(0, 1, "varieties intersect: 1 is not in J1 + J2");
    Polynomial f = split->second.target;
    return {f, negated(split->first), split->second};
}

struct LagrangeFunction {
    Polynomial f;
    /// certificates[j] proves f - [j == k] in J_j.
    std::vector<Certificate> certificates;
};

namespace detail {

inline Polynomial reduce_modulo(const Polynomial& f, const Ideal& j) {
    if (j.is_zero()) return f;
    return normal_form(f, j.groebner());
}

inline Ideal intersection_except(const std::vector<Ideal>& ideals, std::size_t skip) {
    std::optional<Ideal> acc;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
        if (j == skip) continue;
        acc = acc ? ideal_intersection(*acc, ideals[j]) : ideals[j];
    }
    return *acc;
}

}  // namespace detail

/**
 * f_k = 1 on V_k and 0 on every other V_j. Each f_k is returned as its normal
 * form modulo the intersection of all the ideals, which leaves every
 * interpolation condition intact; on points this is the classical basis.
 */
inline std::vector<LagrangeFunction> lagrange_basis(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw PreconditionError("no varieties");
    const RingPtr& ring = ideals.front().ring();
    for (const auto& j : ideals) j.check_ring(ideals.front());
    const Polynomial one = Polynomial::constant(ring, Scalar(1));
    const Polynomial zero(ring);

    std::vector<LagrangeFunction> out;
    if (ideals.size() == 1) {
        out.push_back({one, {require_membership(one, one, ideals.front())}});
        return out;
    }
    for (std::size_t a = 0; a < ideals.size(); ++a)
        for (std::size_t b = a + 1; b < ideals.size(); ++b)
            if (!ideal_sum(ideals[a], ideals[b]).is_unit())
                throw VarietiesIntersect(a, b, "varieties " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                                   " intersect");

    Ideal all = ideal_intersection(ideals);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
        Separation s = separator(ideals[k], detail::intersection_except(ideals, k));
        Polynomial f = detail::reduce_modulo(s.f, all);
        LagrangeFunction lf{f, {}};
        for (std::size_t j = 0; j < ideals.size(); ++j)
            lf.certificates.push_back(require_membership(f, j == k ? one : zero, ideals[j]));
        out.push_back(std::move(lf));
    }
    return out;
}

/// f = sum p_k f_k over the Lagrange basis, reduced modulo the intersection.
inline InterpolationResult interpolate_disjoint(const InterpolationProblem& problem) {
    problem.validate();
    std::vector<LagrangeFunction> basis;
    try {
        basis = lagrange_basis(problem.ideals);
    } catch (const VarietiesIntersect& e) {
        throw VarietiesIntersect(e.first(), e.second(),
                                 std::string(e.what()) + "; use the sequential solver for intersecting varieties");
    }
    Polynomial f(problem.ring());
    for (std::size_t k = 0; k < problem.size(); ++k) f += problem.data[k] * basis[k].f;
    if (problem.size() > 1) f = detail::reduce_modulo(f, ideal_intersection(problem.ideals));

    InterpolationResult result;
    result.status = Status::feasible;
    for (std::size_t k = 0; k < problem.size(); ++k)
        result.certificates.push_back(require_membership(f, problem.data[k], problem.ideals[k]));
    result.interpolant = std::move(f);
    return result;
}

/// Two varieties: feasible iff p1 - p2 in J1 + J2; then f = p2 + g2.
inline InterpolationResult interpolate_pair(const Ideal& first, const Ideal& second, const Polynomial& p1,
                                            const Polynomial& p2) {
    first.check_ring(second);
    p1.check_ring(p2);
    if (!same_ring(p1.ring(), first.ring())) throw RingMismatch();

    InterpolationResult result;
    Polynomial diff = p1 - p2;
    auto split = split_membership(diff, first, second);
    if (!split) {
        result.status = Status::infeasible;
        result.witnesses.push_back({0, 1, diff, ideal_sum(first, second)});
        return result;
    }
    Polynomial f = p2 + split->second.target;
    result.status = Status::feasible;
    result.certificates.push_back(negated(split->first));  // f - p1 = -g1
    result.certificates.push_back(split->second);          // f - p2 = g2
    result.interpolant = std::move(f);
    return result;
}

/**
 * Processes varieties in the given order, keeping a running interpolant f_m
 * and the running union ideal U_m = J_1 ∩ ... ∩ J_m. Step m+1 solves the pair
 * problem (U_m, J_{m+1}; f_m, p_{m+1}). The radicality of U_m + J_{m+1} is
 * recorded per step when that sum is zero-dimensional.
 */
inline InterpolationResult interpolate_sequential(const InterpolationProblem& problem) {
    problem.validate();
    InterpolationResult result;
    Polynomial f = problem.data[0];
    Ideal running = problem.ideals[0];
    for (std::size_t m = 1; m < problem.size(); ++m) {
        result.step_radicality.push_back(radicality(ideal_sum(running, problem.ideals[m])));
        InterpolationResult step = interpolate_pair(running, problem.ideals[m], f, problem.data[m]);
        if (!step.feasible()) {
            result.status = Status::infeasible;
            result.failed_step = m;
            Witness w = step.witnesses.front();
            w.first = m - 1;  // the union of varieties 0..m-1
            w.second = m;
            result.witnesses.push_back(std::move(w));
            return result;
        }
        f = *step.interpolant;
        if (m + 1 < problem.size()) running = ideal_intersection(running, problem.ideals[m]);
    }
    result.status = Status::feasible;
    for (std::size_t k = 0; k < problem.size(); ++k)
        result.certificates.push_back(require_membership(f, problem.data[k], problem.ideals[k]));
    result.interpolant = std::move(f);
    return result;
}

/**
 * Sufficient-condition solver: if p_i - p_j lies in J_i + ∩_{k≠i} J_k for all
 * i, j, then with f_i = p_i - mean(p) split as f_i = a_i + g_i (a_i in J_i,
 * g_i in every other J_k), f = mean(p) + sum g_i interpolates. Any failed
 * check yields undecided-precondition listing every failing pair, since the
 * condition is not necessary. The 1/n averaging needs characteristic zero.
 */
inline InterpolationResult interpolate_restricted(const InterpolationProblem& problem) {
    problem.validate(2);
    const std::size_t n = problem.size();
    const RingPtr& ring = problem.ring();

    std::vector<Ideal> others;
    for (std::size_t i = 0; i < n; ++i) others.push_back(detail::intersection_except(problem.ideals, i));

    InterpolationResult result;
    for (std::size_t i = 0; i < n; ++i) {
        Ideal tested = ideal_sum(problem.ideals[i], others[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Polynomial diff = problem.data[i] - problem.data[j];
            if (!tested.contains(diff)) result.witnesses.push_back({i, j, diff, tested});
        }
    }
    if (!result.witnesses.empty()) {
        result.status = Status::undecided_precondition;
        return result;
    }

    Polynomial mean(ring);
    for (const auto& p : problem.data) mean += p;
    mean *= Scalar::fraction(1, static_cast<long>(n));

    Polynomial f = mean;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial fi = problem.data[i] - mean;
        auto split = split_membership(fi, problem.ideals[i], others[i]);
        if (!split) throw std::logic_error("averaged datum escaped the tested ideal");
        f += split->second.target;
    }
    result.status = Status::feasible;
    for (std::size_t k = 0; k < n; ++k)
        result.certificates.push_back(require_membership(f, problem.data[k], problem.ideals[k]));
    result.interpolant = std::move(f);
    return result;
}

struct CompatibilityEntry {
    std::size_t first;
    std::size_t second;
    Polynomial difference;
    bool compatible;
};

/// Pairwise necessary condition: p_j - p_k vanishes on V_j ∩ V_k.
struct CompatibilityReport {
    std::vector<CompatibilityEntry> pairs;
    bool all_compatible() const {
        return std::all_of(pairs.begin(), pairs.end(), [](const auto& e) { return e.compatible; });
    }
};

inline CompatibilityReport compatibility_check(const InterpolationProblem& problem) {
    problem.validate();
    CompatibilityReport report;
    for (std::size_t j = 0; j < problem.size(); ++j) {
        for (std::size_t k = j + 1; k < problem.size(); ++k) {
            Polynomial diff = problem.data[j] - problem.data[k];
            bool ok = radical_member(diff, ideal_sum(problem.ideals[j], problem.ideals[k]));
            report.pairs.push_back({j, k, std::move(diff), ok});
        }
    }
    return report;
}

}  // namespace varinterp
