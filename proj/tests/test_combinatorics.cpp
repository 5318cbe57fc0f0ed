#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ds/combinatorics.hpp"

using namespace ds;

namespace {

// Brute-force partition counter, independent of the enumerator under test.
long count_partitions(int n, int maxpart) {
    if (n == 0) return 1;
    long c = 0;
    for (int p = std::min(n, maxpart); p >= 1; --p) c += count_partitions(n - p, p);
    return c;
}

// Independent cocharge labeler for permutation words: label(1)=0 and the
// label increments exactly when the next value sits further left.
int permutation_cocharge(const Word& w) {
    int n = (int)w.size();
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[w[i]] = i;
    int total = 0, label = 0;
    for (int v = 2; v <= n; ++v) {
        if (pos[v] < pos[v - 1]) ++label;
        total += label;
    }
    return total;
}

} // namespace

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});
    CHECK(enumerate_partitions(3) ==
          std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
    CHECK(enumerate_partitions(7).size() == 15);
    for (int n = 1; n <= 9; ++n) {
        auto ps = enumerate_partitions(n);
        CHECK((long)ps.size() == count_partitions(n, n));
        std::set<Partition> distinct(ps.begin(), ps.end());
        CHECK(distinct.size() == ps.size());
        for (auto& p : ps) CHECK(p.size() == n);
        // reverse lexicographic: each successor is lexicographically smaller
        for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i].parts < ps[i - 1].parts);
    }
    CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
}

TEST_CASE("filling enumeration") {
    CHECK(enumerate_standard(Partition({2, 1})).size() == 2);
    CHECK(enumerate_bijective(Partition({2, 1})).size() == 6);
    auto ssyt = enumerate_semistandard_content(Partition({2, 2}), Partition({2, 2}));
    REQUIRE(ssyt.size() == 1);
    CHECK(ssyt[0] == Tableau::from_string("1 1 / 2 2"));
    CHECK_THROWS_AS(enumerate_semistandard_content(Partition({2, 2}), Partition({2, 1})),
                    std::invalid_argument);
    // hook-length sanity at n=5: 5 + ... known SYT counts
    std::map<Partition, size_t> counts;
    for (auto& sh : enumerate_partitions(5)) counts[sh] = enumerate_standard(sh).size();
    CHECK(counts[Partition({5})] == 1);
    CHECK(counts[Partition({4, 1})] == 4);
    CHECK(counts[Partition({3, 2})] == 5);
    CHECK(counts[Partition({3, 1, 1})] == 6);
    CHECK(counts[Partition({2, 2, 1})] == 5);
    CHECK(counts[Partition({2, 1, 1, 1})] == 4);
    CHECK(counts[Partition({1, 1, 1, 1, 1})] == 1);
    // |Tab(lambda)| = n!
    CHECK(enumerate_bijective(Partition({2, 2})).size() == 24);
}

TEST_CASE("reading word") {
    CHECK(Tableau::from_string("1 3 6 9 / 2 5 / 4 8 / 7").reading_word() ==
          Word{7, 4, 8, 2, 5, 1, 3, 6, 9});
    CHECK(Tableau::from_string("1 2 3").reading_word() == Word{1, 2, 3});
    CHECK(Tableau::from_string("1 2 4 / 3 5 / 6 7").reading_word() == Word{6, 7, 3, 5, 1, 2, 4});
}

TEST_CASE("standardize") {
    for (auto& sh : enumerate_partitions(4))
        for (auto& T : enumerate_standard(sh)) CHECK(standardize(T) == T);
    CHECK(standardize(Tableau::from_string("1 1 / 2 2")) == Tableau::from_string("1 2 / 3 4"));
    // the pair-tableau example
    Tableau ssyt = Tableau::from_string("1 1 1 2 3 / 2 3 3 4 / 5 5 6 6 / 6 6");
    Tableau want = Tableau::from_string("1 2 3 5 8 / 4 6 7 9 / 10 11 14 15 / 12 13");
    CHECK(standardize(ssyt) == want);
    CHECK_THROWS_AS(standardize(Tableau::from_string("2 1 / 3 4")), std::invalid_argument);
}

TEST_CASE("rsk insertion") {
    CHECK(rsk_insert({5, 6, 8, 9, 1, 3, 4, 7, 2}) ==
          Tableau::from_string("1 2 4 7 / 3 6 8 9 / 5"));
    CHECK(rsk_insert({1, 2, 3, 4}) == Tableau::from_string("1 2 3 4"));
    CHECK(rsk_insert({4, 3, 2, 1}) == Tableau::from_string("1 / 2 / 3 / 4"));
    // semistandard output for every short word over a small alphabet
    for (int len = 1; len <= 6; ++len) {
        long total = 1;
        for (int i = 0; i < len; ++i) total *= 4;
        for (long code = 0; code < total; ++code) {
            Word w;
            long c = code;
            for (int i = 0; i < len; ++i) {
                w.push_back((int)(c % 4) + 1);
                c /= 4;
            }
            CHECK(rsk_insert(w).is_semistandard());
        }
    }
}

TEST_CASE("descents and maj") {
    DescentData d = descent_data(Tableau::from_string("1 3 6 9 / 2 5 / 4 8 / 7"));
    CHECK(d.descents == std::set<int>{1, 3, 6});
    CHECK(d.maj == 10);
    CHECK(d.des == 3);
    CHECK(descent_data(Tableau::from_string("1 2 3")).maj == 0);
    CHECK(descent_data(Tableau::from_string("1 / 2 / 3 / 4")).maj == 6);
    CHECK_THROWS_AS(descent_data(Tableau::from_string("2 1 / 3 4")), std::invalid_argument);
}

TEST_CASE("maj/comaj on ranges") {
    Tableau S = Tableau::from_string("1 2 4 / 3 5 / 6 7");
    CHECK(maj_comaj_range(S, 1, 4).first == 2);
    CHECK(maj_comaj_range(S, 4, 7).second == 5);
    CHECK(maj_comaj_range(S, 3, 3) == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(maj_comaj_range(S, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(maj_comaj_range(S, 5, 3), std::invalid_argument);
}

TEST_CASE("cocharge") {
    CochargeLabeling c = cocharge({2, 5, 3, 1, 4});
    CHECK(c.labels == std::vector<int>{1, 2, 1, 0, 1});
    CHECK(c.total == 5);
    CHECK(cocharge({4, 3, 3, 1, 1, 1, 2, 2, 2, 4, 4, 2, 3, 1, 1}).total == 12);
    CHECK(cocharge({1, 2, 3, 4, 5}).total == 0);
    CHECK_THROWS_AS(cocharge({1, 3, 3}), std::invalid_argument); // content (1,0,2) not a partition
    // independent labeler oracle on all permutations of n <= 6
    for (int n = 1; n <= 6; ++n) {
        Word w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
            CHECK(cocharge(w).total == permutation_cocharge(w));
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("flip and reverse") {
    CHECK(flip({8, 3, 6, 7, 9, 1, 2, 4, 5}) == Word{2, 7, 4, 3, 1, 9, 8, 6, 5});
    CHECK(reverse_word({2, 7, 4, 3, 1, 9, 8, 6, 5}) == Word{5, 6, 8, 9, 1, 3, 4, 7, 2});
    Word w{3, 1, 4, 2};
    CHECK(flip(flip(w)) == w);
    CHECK(reverse_word(reverse_word(w)) == w);
    CHECK_THROWS_AS(flip({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("phi bijection") {
    Tableau T = Tableau::from_string("1 2 4 5 / 3 6 7 9 / 8");
    CHECK(phi(T) == Tableau::from_string("1 2 4 7 / 3 6 8 9 / 5"));
    CHECK(phi(Tableau::from_string("1 2 3")) == Tableau::from_string("1 2 3"));
    for (int n = 1; n <= 6; ++n)
        for (auto& sh : enumerate_partitions(n)) {
            auto syt = enumerate_standard(sh);
            std::set<Tableau> images;
            for (auto& U : syt) {
                Tableau V = phi(U);
                CHECK(V.shape == sh);
                CHECK(cocharge(V.reading_word()).total == descent_data(U).maj);
                CHECK(descent_data(V).des == descent_data(U).des);
                images.insert(V);
            }
            CHECK(images.size() == syt.size());
        }
}

TEST_CASE("cocharge constant on RSK fibers") {
    for (int n = 1; n <= 6; ++n) {
        Word w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
            CHECK(cocharge(w).total == cocharge(rsk_insert(w).reading_word()).total);
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("mu-cocharge tableaux") {
    Tableau S = Tableau::from_string("1 2 4 / 3 5 / 6 7");
    MuCochargePair cc = mu_cocharge_tableaux(S, 4);
    CHECK(cc.cc_tab == std::vector<std::vector<int>>{{0, 0, 0}, {0, 1}, {2, 2}});
    CHECK(cc.cc_tab_prime == std::vector<std::vector<int>>{{1, 1, 0}, {0, 0}, {0, 0}});
    CHECK(cc.cc_mu == 5);
    CHECK(cc.cc_mu_prime == 2);

    // k=1: the forward labels are identically zero
    MuCochargePair k1 = mu_cocharge_tableaux(S, 1);
    for (auto& row : k1.cc_tab)
        for (int v : row) CHECK(v == 0);
    CHECK(k1.cc_mu == 0);

    // the n=16, k=9 figure: forward labels minus reverse labels superimposed
    Tableau big = Tableau::from_string("1 2 3 5 10 11 / 4 7 8 9 13 / 6 14 15 / 12 16");
    MuCochargePair bc = mu_cocharge_tableaux(big, 9);
    std::vector<std::vector<int>> super{
        {-2, -2, -2, -1, 0, 0}, {-1, 0, 0, 0, 1}, {0, 2, 2}, {1, 3}};
    for (size_t r = 0; r < super.size(); ++r)
        for (size_t cidx = 0; cidx < super[r].size(); ++cidx)
            CHECK(bc.cc_tab[r][cidx] - bc.cc_tab_prime[r][cidx] == super[r][cidx]);

    CHECK_THROWS_AS(mu_cocharge_tableaux(S, 0), std::invalid_argument);
    CHECK_THROWS_AS(mu_cocharge_tableaux(S, 8), std::invalid_argument);
}

TEST_CASE("mu-cocharge pair tableau is semistandard") {
    // forward and reverse labels have disjoint nonzero supports, and the
    // superimposed values (reverse negated) form rows weakly increasing and
    // columns strictly increasing
    for (int n = 1; n <= 6; ++n)
        for (auto& sh : enumerate_partitions(n))
            for (auto& S : enumerate_standard(sh))
                for (int k = 1; k <= n; ++k) {
                    MuCochargePair cc = mu_cocharge_tableaux(S, k);
                    std::vector<std::vector<int>> v;
                    for (size_t r = 0; r < cc.cc_tab.size(); ++r) {
                        v.push_back({});
                        for (size_t c = 0; c < cc.cc_tab[r].size(); ++c) {
                            CHECK((cc.cc_tab[r][c] == 0 || cc.cc_tab_prime[r][c] == 0));
                            v[r].push_back(cc.cc_tab[r][c] - cc.cc_tab_prime[r][c]);
                        }
                    }
                    for (auto& row : v)
                        for (size_t c = 1; c < row.size(); ++c) CHECK(row[c - 1] <= row[c]);
                    for (size_t r = 1; r < v.size(); ++r)
                        for (size_t c = 0; c < v[r].size(); ++c) CHECK(v[r - 1][c] < v[r][c]);
                }
}

TEST_CASE("maj and cocharge equidistribute per shape") {
    for (int n = 1; n <= 7; ++n)
        for (auto& sh : enumerate_partitions(n)) {
            std::multiset<int> majs, ccs;
            for (auto& T : enumerate_standard(sh)) {
                majs.insert(descent_data(T).maj);
                ccs.insert(cocharge(T.reading_word()).total);
            }
            CHECK(majs == ccs);
        }
}

TEST_CASE("tableau string round trip") {
    Tableau T = Tableau::from_string("1 2 4 / 3 5 / 6 7");
    CHECK(T.to_string() == "1 2 4 / 3 5 / 6 7");
    CHECK(Tableau::from_string(T.to_string()) == T);
    CHECK(T.shape == Partition({3, 2, 2}));
    CHECK(T.is_standard());
    Tableau G = Tableau::from_string("2 8 4 5 / 7 1 6 / 3");
    CHECK(G.is_bijective());
    CHECK_FALSE(G.is_standard());
}
