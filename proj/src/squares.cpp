#include "aronson/squares.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace aronson {

namespace {

class SquareSolver {
  public:
    SquareSolver(const SquareConstraint& c, std::size_t count) : c_(c) {
        // Keep propagated assignments for up to two compositions beyond the
        // emitted horizon; chains past that cannot constrain the prefix.
        Term horizon = checked_add(c.n0, static_cast<Term>(count) + 4);
        prop_limit_ = checked_add(
            checked_mul(c.y, checked_add(checked_mul(c.y, horizon), std::abs(c.z))),
            std::abs(c.z) + kCandidateSlack);
    }

    GeneratedSequence run(std::size_t count) {
        std::vector<Term> journal;
        for (auto& [idx, val] : c_.forced) {
            if (idx < c_.n0) throw ContradictionAtStart("seed index below n0");
            if (!assign(idx, val, journal))
                throw ContradictionAtStart("seed terms are inconsistent");
        }
        std::vector<Term> out;
        out.reserve(count);
        for (Term n = c_.n0; out.size() < count; ++n) {
            auto it = known_.find(n);
            if (it != known_.end()) {
                out.push_back(it->second);
                continue;
            }
            out.push_back(commit_free_index(n));
        }
        return GeneratedSequence(c_.n0, std::move(out), Provenance{describe(), true});
    }

  private:
    static constexpr Term kCandidateSlack = 64;
    static constexpr Term kFreeScanBound = 1 << 20;

    std::string describe() const {
        std::string s = "solve_square(y=" + std::to_string(c_.y) + ",z=" + std::to_string(c_.z)
                        + ",n0=" + std::to_string(c_.n0);
        for (auto& [i, v] : c_.forced)
            s += ",s(" + std::to_string(i) + ")=" + std::to_string(v);
        s += ")";
        return s;
    }

    // Insert s(n) = v if consistent with order and pigeonhole room against
    // the neighbouring known assignments, then propagate to a fixed point.
    // Returns false (with journal-recorded inserts left for the caller to
    // undo) on any conflict.
    bool assign(Term n, Term v, std::vector<Term>& journal) {
        if (v < c_.n0) return false;
        auto it = known_.lower_bound(n);
        if (it != known_.end() && it->first == n) return it->second == v;
        if (it != known_.end()) {
            // next known index above n
            if (v >= it->second || it->second - v < it->first - n) return false;
        }
        if (it != known_.begin()) {
            auto lo = std::prev(it);
            if (v <= lo->second || v - lo->second < n - lo->first) return false;
        }
        known_.emplace_hint(it, n, v);
        journal.push_back(n);
        if (n >= c_.first_constrained && v <= prop_limit_) {
            Term target = checked_add(checked_mul(c_.y, n), c_.z);
            return assign(v, target, journal);
        }
        return true;
    }

    void rollback(std::vector<Term>& journal) {
        for (Term k : journal) known_.erase(k);
        journal.clear();
    }

    Term commit_free_index(Term n) {
        auto it = known_.lower_bound(n);
        Term lo = c_.n0, ub;
        if (it != known_.begin()) {
            auto p = std::prev(it);
            lo = std::max(p->second + 1, p->second + (n - p->first));
        }
        if (it != known_.end())
            ub = it->second - (it->first - n);
        else
            ub = checked_add(lo, kFreeScanBound);
        for (Term cand = lo; cand <= ub; ++cand) {
            std::vector<Term> journal;
            if (assign(n, cand, journal)) return cand;
            rollback(journal);
        }
        throw Contradiction("no monotone value fits index " + std::to_string(n) + " for "
                            + describe());
    }

    SquareConstraint c_;
    Term prop_limit_;
    std::map<Term, Term> known_;
};

bool whitelisted(const SquareConstraint& c) {
    return c.y == 4 && c.z == 0 && c.n0 == 0;  // the fake even numbers, A080588
}

}  // namespace

GeneratedSequence solve_square(const SquareConstraint& constraint, std::size_t count) {
    if (constraint.y < 2) throw InvalidParameters("solve_square requires y >= 2");
    if ((constraint.y + constraint.z) % 2 == 0 && constraint.forced.empty()
        && !whitelisted(constraint))
        throw InvalidParameters(
            "y and z of equal parity admit no certified seedless solution here");
    auto forced = constraint.forced;
    std::sort(forced.begin(), forced.end());
    SquareConstraint c = constraint;
    c.forced = std::move(forced);
    return SquareSolver(c, count).run(count);
}

GeneratedSequence mod_family_sequence(Term y, Term z, std::size_t count) {
    SquareConstraint c;
    c.y = y;
    c.z = z;
    c.n0 = 1;
    c.first_constrained = 1;
    if (!c.mod_family_shape())
        throw InvalidParameters("mod_family_sequence requires y >= 2, opposite parity, y+z >= 1, "
                                "2y+z >= 4");
    c.forced = {{1, (y + z + 1) / 2}};
    return solve_square(c, count);
}

}  // namespace aronson
