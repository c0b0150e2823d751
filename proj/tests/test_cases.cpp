#include "momcert/cases.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace momcert;

namespace {

using T = TripleType;
const T t112{1, 1, 2}, t113{1, 1, 3}, t122{1, 2, 2}, t133{1, 3, 3}, t223{2, 2, 3}, t233{2, 3, 3}, t123{1, 2, 3};

/// Direct reading of the definition over every sub-multiset (bitmask scan).
bool oracle_certifiable(const TripleCollection& coll)
{
    const unsigned n = static_cast<unsigned>(coll.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size != 2 && size != 3) continue;
        std::set<int> idx;
        std::map<std::array<int, 3>, int> count;
        for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                for (int v : coll[i].indices()) idx.insert(v);
                ++count[coll[i].indices()];
            }
        if (static_cast<int>(idx.size()) > size) continue;
        if (size == 2) return true;
        bool friendly = true;
        for (const auto& [ix, c] : count)
            if (ix[0] != ix[1] && ix[1] != ix[2] && c == 2) friendly = false;
        if (friendly) return true;
    }
    return false;
}

} // namespace

TEST(MomN, Examples)
{
    EXPECT_TRUE(is_geometric_mom_n({t113, t133}, 2));
    EXPECT_FALSE(is_geometric_mom_n({t112, t113}, 2));
    EXPECT_TRUE(is_geometric_mom_n({t112, t113, t123}, 3));
    EXPECT_FALSE(is_geometric_mom_n({t112, t113}, 3));
    EXPECT_THROW(is_geometric_mom_n({t112}, 4), std::invalid_argument);
}

TEST(TorusFriendly, Examples)
{
    EXPECT_TRUE(is_torus_friendly({t112, t113, t123}));
    EXPECT_FALSE(is_torus_friendly({t112, t123, t123}));
    EXPECT_TRUE(is_torus_friendly({t123, t123, t123}));
    for (const auto& a : triple_types_123())
        for (const auto& b : triple_types_123())
            if (is_geometric_mom_n({a, b}, 2)) { EXPECT_TRUE(is_torus_friendly({a, b})); }
}

TEST(TorusFriendly, RejectsNonMom)
{
    EXPECT_THROW(is_torus_friendly({t112, t113}), std::invalid_argument);
    EXPECT_THROW(is_torus_friendly({t112}), std::invalid_argument);
}

TEST(TorusFriendly, PermutationInvariant)
{
    auto types = triple_types_123();
    for (const auto& a : types)
        for (const auto& b : types)
            for (const auto& c : types) {
                TripleCollection coll{a, b, c};
                if (!is_geometric_mom_n(coll, 3)) continue;
                bool ref = is_torus_friendly(coll);
                std::sort(coll.begin(), coll.end());
                do {
                    EXPECT_EQ(is_torus_friendly(coll), ref);
                } while (std::next_permutation(coll.begin(), coll.end()));
            }
}

TEST(Certifiable, Examples)
{
    EXPECT_TRUE(contains_certifiable_mom({t112, t122}));
    EXPECT_FALSE(contains_certifiable_mom({t123, t123}));
    EXPECT_TRUE(contains_certifiable_mom({t123, t123, t123}));
    EXPECT_FALSE(contains_certifiable_mom({}));
}

TEST(Certifiable, MatchesSubsetOracle)
{
    for (const auto& coll : enumerate_collections(4, 3)) EXPECT_EQ(contains_certifiable_mom(coll), oracle_certifiable(coll));
}

TEST(Triples, NoRepeatedIndexType)
{
    for (int n = 1; n <= 4; ++n) EXPECT_THROW(TripleType(n, n, n), std::invalid_argument);
    EXPECT_THROW(TripleType(0, 1, 2), std::invalid_argument);
    EXPECT_THROW(TripleType(1, 2, 5), std::invalid_argument);
    auto types = triple_types_123();
    EXPECT_EQ(types.size(), 7u);
    for (const auto& t : types) EXPECT_FALSE(t.p() == t.q() && t.q() == t.r());
    EXPECT_EQ(TripleType(3, 1, 2), t123);
}

TEST(Cases, ListShape)
{
    auto cases = the_18_cases();
    ASSERT_EQ(cases.size(), 18u);
    for (std::size_t i = 0; i < cases.size(); ++i) EXPECT_EQ(cases[i].id, static_cast<int>(i + 1));
    EXPECT_EQ(cases.front().triples, (TripleCollection{t112, t113}));
    EXPECT_EQ(cases.back().triples, (TripleCollection{t233, t123, t123}));
    EXPECT_EQ(case_by_id(13).triples, (TripleCollection{t112, t123, t123}));
    EXPECT_EQ(case_by_id(13).str(), "{(1,1,2),(1,2,3),(1,2,3)}");
    EXPECT_THROW(case_by_id(0), std::out_of_range);
    EXPECT_THROW(case_by_id(19), std::out_of_range);
}

TEST(Cases, NoneCertifiableAllMaximal)
{
    for (const auto& cs : the_18_cases()) {
        EXPECT_FALSE(contains_certifiable_mom(cs.triples)) << cs.str();
        EXPECT_FALSE(oracle_certifiable(cs.triples)) << cs.str();
        EXPECT_TRUE(verify_maximality(cs)) << cs.str();
    }
}

TEST(Cases, MaximalityExamples)
{
    TripleCollection c1 = case_by_id(1).triples;
    c1.push_back(t122);
    EXPECT_TRUE(contains_certifiable_mom(c1));
    EXPECT_TRUE(is_geometric_mom_n({t112, t122}, 2));
    EXPECT_FALSE(is_maximal({t112}));
    EXPECT_FALSE(contains_certifiable_mom({t112, t113}));
}

TEST(Cases, ExhaustiveScanReproducesTheList)
{
    auto scan = exhaustive_scan(the_18_cases());
    EXPECT_TRUE(scan.ok());
    EXPECT_EQ(scan.maximal.size(), 18u);
    EXPECT_TRUE(scan.uncovered.empty());
    EXPECT_TRUE(scan.extra_maximal.empty());
    EXPECT_TRUE(scan.missing_cases.empty());
    EXPECT_GT(scan.non_certifiable, 18u);
}

TEST(Cases, ScanFlagsAShortenedList)
{
    auto cases = the_18_cases();
    cases.pop_back();
    auto scan = exhaustive_scan(cases);
    EXPECT_FALSE(scan.ok());
    EXPECT_EQ(scan.extra_maximal.size(), 1u);
    EXPECT_FALSE(scan.uncovered.empty());
}

TEST(Cases, SizeCapIsSufficient)
{
    // every collection of five triples is certifiable, so the size-4 scan is complete
    for (const auto& coll : enumerate_collections(5, 3))
        if (coll.size() == 5) { EXPECT_TRUE(contains_certifiable_mom(coll)); }
    for (const auto& t : triple_types_123()) EXPECT_TRUE(contains_certifiable_mom({t, t, t}));
}

TEST(Cases, EnumerationCounts)
{
    // multisets of size k over 7 types with multiplicity <= 3
    std::size_t expect = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= 3; ++d)
                    for (int e = 0; e <= 3; ++e)
                        for (int f = 0; f <= 3; ++f)
                            for (int g = 0; g <= 3; ++g)
                                if (a + b + c + d + e + f + g <= 4) ++expect;
    EXPECT_EQ(enumerate_collections(4, 3).size(), expect);
}
