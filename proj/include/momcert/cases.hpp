#pragma once

// Combinatorics of geometric Mom-n structures over index triples.
//
// Collections are multisets: two triples of the same type stand for two
// inequivalent triples.  Only n = 2, 3 matter here.

#include "momcert/bounds.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace momcert {

using TripleCollection = std::vector<TripleType>;

namespace detail {

inline std::set<int> index_union(const TripleCollection& coll)
{
    std::set<int> s;
    for (const auto& t : coll) s.insert(t.indices().begin(), t.indices().end());
    return s;
}

} // namespace detail

/// Exactly n triples whose indices all lie in one n-element index set.
inline bool is_geometric_mom_n(const TripleCollection& coll, int n)
{
    if (n != 2 && n != 3) throw std::invalid_argument("only Mom-2 and Mom-3 are modeled");
    return static_cast<int>(coll.size()) == n && static_cast<int>(detail::index_union(coll).size()) <= n;
}

/// A Mom-2, or a Mom-3 with no distinct-index type occurring exactly twice.
inline bool is_torus_friendly(const TripleCollection& coll)
{
    bool mom2 = coll.size() == 2 && is_geometric_mom_n(coll, 2);
    bool mom3 = coll.size() == 3 && is_geometric_mom_n(coll, 3);
    if (!mom2 && !mom3) throw std::invalid_argument("is_torus_friendly: not a geometric Mom-2 or Mom-3");
    if (mom2) return true;
    std::map<TripleType, int> count;
    for (const auto& t : coll) ++count[t];
    return std::none_of(count.begin(), count.end(), [](const auto& kv) { return kv.first.distinct() && kv.second == 2; });
}

/// Whether some sub-multiset is a torus-friendly geometric Mom-2 or Mom-3.
inline bool contains_certifiable_mom(const TripleCollection& coll)
{
    const std::size_t n = coll.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (is_geometric_mom_n({coll[i], coll[j]}, 2)) return true;
            for (std::size_t k = j + 1; k < n; ++k) {
                TripleCollection sub{coll[i], coll[j], coll[k]};
                if (is_geometric_mom_n(sub, 3) && is_torus_friendly(sub)) return true;
            }
        }
    return false;
}

/// The seven triple types with indices in {1, 2, 3}.
inline std::vector<TripleType> triple_types_123()
{
    std::vector<TripleType> out;
    for (int p = 1; p <= 3; ++p)
        for (int q = p; q <= 3; ++q)
            for (int r = q; r <= 3; ++r)
                if (!(p == q && q == r)) out.emplace_back(p, q, r);
    return out;
}

/// The eighteen maximal collections without a torus-friendly Mom-2/Mom-3.
inline std::vector<CaseSpec> the_18_cases()
{
    using T = TripleType;
    const T t112{1, 1, 2}, t113{1, 1, 3}, t122{1, 2, 2}, t133{1, 3, 3}, t223{2, 2, 3}, t233{2, 3, 3}, t123{1, 2, 3};
    std::vector<std::vector<T>> lists = {
        {t112, t113}, {t112, t133}, {t112, t223}, {t112, t233}, {t122, t113}, {t122, t133},
        {t122, t223}, {t122, t233}, {t113, t223}, {t113, t233}, {t133, t223}, {t133, t233},
        {t112, t123, t123}, {t122, t123, t123}, {t113, t123, t123},
        {t133, t123, t123}, {t223, t123, t123}, {t233, t123, t123},
    };
    std::vector<CaseSpec> out;
    for (std::size_t i = 0; i < lists.size(); ++i) out.push_back({static_cast<int>(i + 1), lists[i]});
    return out;
}

inline CaseSpec case_by_id(int id)
{
    auto all = the_18_cases();
    if (id < 1 || id > static_cast<int>(all.size())) throw std::out_of_range("case id must be in 1..18");
    return all[static_cast<std::size_t>(id - 1)];
}

/// Not certifiable, and adding any one more triple type makes it certifiable.
inline bool is_maximal(const TripleCollection& coll)
{
    if (contains_certifiable_mom(coll)) return false;
    for (const auto& t : triple_types_123()) {
        TripleCollection bigger = coll;
        bigger.push_back(t);
        if (!contains_certifiable_mom(bigger)) return false;
    }
    return true;
}

inline bool verify_maximality(const CaseSpec& cs) { return is_maximal(cs.triples); }

inline bool is_submultiset(TripleCollection small, TripleCollection big)
{
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Every multiset of triple types over {1,2,3} of size <= max_size with each
/// type at most max_multiplicity times, sorted ascending.
///
/// Caps: three copies of one type already form a torus-friendly Mom-3 (their
/// indices span at most three values and no type occurs exactly twice), and
/// any four triples contain a 3-subset with at most one (1,2,3), which is a
/// torus-friendly Mom-3.  Larger collections are therefore never needed.
inline std::vector<TripleCollection> enumerate_collections(int max_size = 4, int max_multiplicity = 3)
{
    const auto types = triple_types_123();
    std::vector<TripleCollection> out;
    TripleCollection current;
    auto rec = [&](auto&& self, std::size_t from, int run) -> void {
        out.push_back(current);
        if (static_cast<int>(current.size()) == max_size) return;
        for (std::size_t i = from; i < types.size(); ++i) {
            int mult = (i == from && !current.empty() && current.back() == types[i]) ? run + 1 : 1;
            if (mult > max_multiplicity) continue;
            current.push_back(types[i]);
            self(self, i, mult);
            current.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Maximal non-certifiable collections found by exhaustive search.
inline std::vector<TripleCollection> enumerate_maximal_collections(int max_size = 4, int max_multiplicity = 3)
{
    std::vector<TripleCollection> out;
    for (auto& coll : enumerate_collections(max_size, max_multiplicity))
        if (is_maximal(coll)) out.push_back(coll);
    return out;
}

struct ExhaustiveScan {
    std::size_t collections = 0;
    std::size_t non_certifiable = 0;
    std::vector<TripleCollection> maximal;
    /// Non-certifiable collections not contained in any listed case.
    std::vector<TripleCollection> uncovered;
    /// Maximal collections that are not one of the listed cases.
    std::vector<TripleCollection> extra_maximal;
    /// Listed cases the scan did not find as maximal.
    std::vector<int> missing_cases;

    bool ok() const { return uncovered.empty() && extra_maximal.empty() && missing_cases.empty(); }
};

/// Compare the exhaustive enumeration against `cases`.
inline ExhaustiveScan exhaustive_scan(const std::vector<CaseSpec>& cases, int max_size = 4, int max_multiplicity = 3)
{
    ExhaustiveScan scan;
    auto sorted = [](TripleCollection c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    std::vector<TripleCollection> listed;
    for (const CaseSpec& cs : cases) listed.push_back(sorted(cs.triples));
    std::vector<bool> seen(cases.size(), false);
    for (const TripleCollection& coll : enumerate_collections(max_size, max_multiplicity)) {
        ++scan.collections;
        if (contains_certifiable_mom(coll)) continue;
        ++scan.non_certifiable;
        bool covered = std::any_of(listed.begin(), listed.end(),
                                   [&](const TripleCollection& big) { return is_submultiset(coll, big); });
        if (!covered) scan.uncovered.push_back(coll);
        if (!is_maximal(coll)) continue;
        scan.maximal.push_back(coll);
        auto it = std::find(listed.begin(), listed.end(), coll);
        if (it == listed.end()) scan.extra_maximal.push_back(coll);
        else seen[static_cast<std::size_t>(it - listed.begin())] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) scan.missing_cases.push_back(cases[i].id);
    return scan;
}

} // namespace momcert
