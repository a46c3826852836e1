#include "locho/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace locho {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Finite points are matched with the L-inf ground cost; the diagonal accepts
// a point at half its persistence.
double linf_cost(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max(std::fabs(a.birth - b.birth), std::fabs(a.death - b.death));
}

double diagonal_cost(const DiagramPoint& p) { return (p.death - p.birth) / 2.0; }

enum class Kind { finite, ess_death, ess_birth, ess_both };

Kind kind_of(const DiagramPoint& p) {
    const bool bi = p.birth == -kInf;
    const bool di = p.death == kInf;
    if (bi && di) return Kind::ess_both;
    if (di) return Kind::ess_death;
    if (bi) return Kind::ess_birth;
    return Kind::finite;
}

struct DimGroup {
    std::vector<std::size_t> finite, ess_death, ess_birth, ess_both;
};

std::map<int, DimGroup> group_by_dim(const PersistenceDiagram& d) {
    std::map<int, DimGroup> groups;
    for (std::size_t i = 0; i < d.points().size(); ++i) {
        const DiagramPoint& p = d.points()[i];
        DimGroup& g = groups[p.dim];
        switch (kind_of(p)) {
            case Kind::finite: g.finite.push_back(i); break;
            case Kind::ess_death: g.ess_death.push_back(i); break;
            case Kind::ess_birth: g.ess_birth.push_back(i); break;
            case Kind::ess_both: g.ess_both.push_back(i); break;
        }
    }
    return groups;
}

struct FiniteProblem {
    const PersistenceDiagram* d1 = nullptr;
    const PersistenceDiagram* d2 = nullptr;
    std::vector<std::size_t> left, right;  // finite point indices per side

    double cost(std::size_t i, std::size_t j) const {
        return linf_cost(d1->points()[left[i]], d2->points()[right[j]]);
    }
    double diag_left(std::size_t i) const { return diagonal_cost(d1->points()[left[i]]); }
    double diag_right(std::size_t j) const { return diagonal_cost(d2->points()[right[j]]); }
};

// Kuhn augmenting-path matching that tries to cover every `required` vertex
// on the from-side; adjacency is "cost <= t". Returns false if some required
// vertex cannot be covered. match_from/match_to use npos for unmatched.
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool cover_required(const std::vector<std::size_t>& required, std::size_t to_count,
                    const std::function<bool(std::size_t, std::size_t)>& adjacent,
                    std::vector<std::size_t>& match_from, std::vector<std::size_t>& match_to) {
    std::vector<char> visited(to_count);
    auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t v = 0; v < to_count; ++v) {
            if (visited[v] || !adjacent(u, v)) continue;
            visited[v] = 1;
            if (match_to[v] == kNone || self(self, match_to[v])) {
                match_to[v] = u;
                match_from[u] = v;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u : required) {
        if (match_from[u] != kNone) continue;
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, u)) return false;
    }
    return true;
}

// Feasibility at radius t: every point with persistence > 2t on either side
// must be matched to a real point of the other side within cost t. By the
// Mendelsohn-Dulmage theorem, separate coverings of the two required sets
// guarantee a single matching covering both.
bool feasible(const FiniteProblem& pr, double t,
              std::vector<std::size_t>* out_m1_left,   // left -> right
              std::vector<std::size_t>* out_m2_right)  // right -> left
{
    const std::size_t n1 = pr.left.size(), n2 = pr.right.size();
    std::vector<std::size_t> req1, req2;
    for (std::size_t i = 0; i < n1; ++i)
        if (pr.diag_left(i) > t) req1.push_back(i);
    for (std::size_t j = 0; j < n2; ++j)
        if (pr.diag_right(j) > t) req2.push_back(j);

    std::vector<std::size_t> m1_from(n1, kNone), m1_to(n2, kNone);
    if (!cover_required(req1, n2, [&](std::size_t u, std::size_t v) { return pr.cost(u, v) <= t; },
                        m1_from, m1_to))
        return false;
    std::vector<std::size_t> m2_from(n2, kNone), m2_to(n1, kNone);
    if (!cover_required(req2, n1, [&](std::size_t u, std::size_t v) { return pr.cost(v, u) <= t; },
                        m2_from, m2_to))
        return false;
    if (out_m1_left) *out_m1_left = std::move(m1_from);
    if (out_m2_right) *out_m2_right = std::move(m2_from);
    return true;
}

double solve_finite(const FiniteProblem& pr) {
    if (pr.left.empty() && pr.right.empty()) return 0.0;
    std::vector<double> candidates{0.0};
    for (std::size_t i = 0; i < pr.left.size(); ++i) candidates.push_back(pr.diag_left(i));
    for (std::size_t j = 0; j < pr.right.size(); ++j) candidates.push_back(pr.diag_right(j));
    for (std::size_t i = 0; i < pr.left.size(); ++i)
        for (std::size_t j = 0; j < pr.right.size(); ++j) candidates.push_back(pr.cost(i, j));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    // The largest candidate (everything matchable) is always feasible.
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(pr, candidates[mid], nullptr, nullptr))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

// Mendelsohn-Dulmage combination: starting from M1 (covering the left
// required set), reroute along M2/M1 alternating paths so every right
// required vertex also becomes covered, never uncovering a required vertex.
void combine_matchings(const FiniteProblem& pr, double t, std::vector<std::size_t>& m1_left,
                       const std::vector<std::size_t>& m2_right) {
    const std::size_t n1 = pr.left.size(), n2 = pr.right.size();
    std::vector<std::size_t> m1_right(n2, kNone);
    for (std::size_t i = 0; i < n1; ++i)
        if (m1_left[i] != kNone) m1_right[m1_left[i]] = i;

    for (std::size_t j = 0; j < n2; ++j) {
        if (!(pr.diag_right(j) > t) || m1_right[j] != kNone) continue;
        // Alternating walk: M2 edge into the left side, M1 edge back.
        std::size_t q = j;
        while (q != kNone && m2_right[q] != kNone) {
            const std::size_t p = m2_right[q];
            const std::size_t q_next = m1_left[p];
            m1_left[p] = q;
            m1_right[q] = p;
            q = q_next;
            if (q != kNone) m1_right[q] = kNone;
        }
    }
}

struct DimResult {
    double cost = 0.0;
    std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> pairs;
};

DimResult solve_dimension(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                          const DimGroup& g1, const DimGroup& g2, bool want_matching) {
    DimResult res;

    // Essential sub-problems: exact cardinality, sorted coordinate matching.
    auto essential_part = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                              bool by_birth) {
        if (a.size() != b.size()) {
            res.cost = kInf;
            if (want_matching) {
                for (std::size_t i : a) res.pairs.emplace_back(static_cast<std::ptrdiff_t>(i),
                                                               Matching::kDiagonal);
                for (std::size_t j : b) res.pairs.emplace_back(Matching::kDiagonal,
                                                               static_cast<std::ptrdiff_t>(j));
            }
            return;
        }
        auto key = [&](const PersistenceDiagram& d, std::size_t i) {
            return by_birth ? d.points()[i].birth : d.points()[i].death;
        };
        std::vector<std::size_t> sa = a, sb = b;
        std::sort(sa.begin(), sa.end(), [&](auto x, auto y) { return key(d1, x) < key(d1, y); });
        std::sort(sb.begin(), sb.end(), [&](auto x, auto y) { return key(d2, x) < key(d2, y); });
        for (std::size_t i = 0; i < sa.size(); ++i) {
            res.cost = std::max(res.cost, std::fabs(key(d1, sa[i]) - key(d2, sb[i])));
            if (want_matching)
                res.pairs.emplace_back(static_cast<std::ptrdiff_t>(sa[i]),
                                       static_cast<std::ptrdiff_t>(sb[i]));
        }
    };
    essential_part(g1.ess_death, g2.ess_death, /*by_birth=*/true);
    essential_part(g1.ess_birth, g2.ess_birth, /*by_birth=*/false);
    if (g1.ess_both.size() != g2.ess_both.size())
        res.cost = kInf;
    else if (want_matching)
        for (std::size_t i = 0; i < g1.ess_both.size(); ++i)
            res.pairs.emplace_back(static_cast<std::ptrdiff_t>(g1.ess_both[i]),
                                   static_cast<std::ptrdiff_t>(g2.ess_both[i]));

    // Finite sub-problem.
    FiniteProblem pr{&d1, &d2, g1.finite, g2.finite};
    const double t = solve_finite(pr);
    res.cost = std::max(res.cost, t);

    if (want_matching && !(pr.left.empty() && pr.right.empty())) {
        std::vector<std::size_t> m1_left, m2_right;
        const bool ok = feasible(pr, t, &m1_left, &m2_right);
        if (!ok) throw std::logic_error("bottleneck: solved radius infeasible");
        combine_matchings(pr, t, m1_left, m2_right);
        std::vector<char> right_used(pr.right.size(), 0);
        for (std::size_t i = 0; i < pr.left.size(); ++i) {
            if (m1_left[i] == kNone) {
                res.pairs.emplace_back(static_cast<std::ptrdiff_t>(pr.left[i]),
                                       Matching::kDiagonal);
            } else {
                right_used[m1_left[i]] = 1;
                res.pairs.emplace_back(static_cast<std::ptrdiff_t>(pr.left[i]),
                                       static_cast<std::ptrdiff_t>(pr.right[m1_left[i]]));
            }
        }
        for (std::size_t j = 0; j < pr.right.size(); ++j)
            if (!right_used[j])
                res.pairs.emplace_back(Matching::kDiagonal,
                                       static_cast<std::ptrdiff_t>(pr.right[j]));
    }
    return res;
}

Matching solve(const PersistenceDiagram& d1, const PersistenceDiagram& d2, bool want_matching) {
    Matching m;
    auto groups1 = group_by_dim(d1);
    auto groups2 = group_by_dim(d2);
    std::vector<int> dims;
    for (const auto& [dim, g] : groups1) dims.push_back(dim);
    for (const auto& [dim, g] : groups2)
        if (!groups1.count(dim)) dims.push_back(dim);
    std::sort(dims.begin(), dims.end());

    for (int dim : dims) {
        static const DimGroup empty_group;
        const DimGroup& g1 = groups1.count(dim) ? groups1[dim] : empty_group;
        const DimGroup& g2 = groups2.count(dim) ? groups2[dim] : empty_group;
        DimResult r = solve_dimension(d1, d2, g1, g2, want_matching);
        m.cost = std::max(m.cost, r.cost);
        m.pairs.insert(m.pairs.end(), r.pairs.begin(), r.pairs.end());
    }
    return m;
}

}  // namespace

double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
    return solve(d1, d2, /*want_matching=*/false).cost;
}

Matching bottleneck_matching(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
    return solve(d1, d2, /*want_matching=*/true);
}

bool interleaving_certificate(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                              double claimed_bound) {
    return bottleneck_distance(d1, d2) <= claimed_bound + kInterleavingTolerance;
}

}  // namespace locho
