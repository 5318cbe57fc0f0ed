#include "ds/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ds/parallel.hpp"
#include "ds/specht.hpp"

namespace ds {

namespace {

std::string fmt_bd(std::pair<int, int> bd) {
    return "(" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ")";
}

Poly var_poly(int n, int i, char set) {
    Monomial m(n);
    (set == 'x' ? m.x[i - 1] : m.y[i - 1]) = 1;
    return Poly::monomial(m);
}

// Rank of a family of polynomials in the ambient ring, with columns indexed
// by the canonical monomial order.
int ambient_rank(const std::vector<Poly>& ps) {
    std::map<Monomial, int> cols;
    for (const Poly& f : ps)
        for (auto& [m, c] : f.terms()) cols.emplace(m, 0);
    int next = 0;
    for (auto& [m, idx] : cols) idx = next++;
    EchelonBasis ech;
    for (const Poly& f : ps) {
        SparseRow row;
        for (auto& [m, c] : f.terms()) row.push_back({cols.at(m), c});
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(std::move(row));
    }
    return ech.rank();
}

// All (T,S) pairs of standard tableaux of equal shape of n, in a fixed order.
std::vector<std::pair<Tableau, Tableau>> same_shape_pairs(int n) {
    std::vector<std::pair<Tableau, Tableau>> out;
    for (const Partition& sh : enumerate_partitions(n)) {
        auto syt = enumerate_standard(sh);
        for (const Tableau& T : syt)
            for (const Tableau& S : syt) out.push_back({T, S});
    }
    return out;
}

int tableau_cocharge(const Tableau& T) { return cocharge(T.reading_word()).total; }

} // namespace

Partition hook_shape(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("hook_shape: need 1 <= k <= n");
    std::vector<int> parts{n - k + 1};
    for (int i = 1; i < k; ++i) parts.push_back(1);
    return Partition(parts);
}

VerifyResult verify_bijection(int n) {
    VerifyResult r{"bijection " + std::to_string(n)};
    for (const Partition& sh : enumerate_partitions(n)) {
        auto syt = enumerate_standard(sh);
        std::set<Tableau> images;
        for (const Tableau& T : syt) {
            Tableau U = phi(T);
            if (!(U.shape == sh)) {
                r.fail("phi not shape-preserving at " + T.to_string());
                continue;
            }
            images.insert(U);
            DescentData dT = descent_data(T), dU = descent_data(U);
            if (tableau_cocharge(U) != dT.maj)
                r.fail("cc(phi(T)) != maj(T) at " + T.to_string());
            if (dU.des != dT.des) r.fail("des not preserved at " + T.to_string());
        }
        if (images.size() != syt.size())
            r.fail("phi not injective on SYT" + sh.to_string());
    }
    return r;
}

VerifyResult verify_degrees(int n) {
    VerifyResult r{"degrees " + std::to_string(n)};
    for (const Partition& sh : enumerate_partitions(n))
        for (const Tableau& S : enumerate_standard(sh))
            for (int k = 1; k <= n; ++k) {
                MuCochargePair cc = mu_cocharge_tableaux(S, k);
                auto [maj_lo, comaj_lo] = maj_comaj_range(S, 1, n - k + 1);
                auto [maj_hi, comaj_hi] = maj_comaj_range(S, n - k + 1, n);
                if (cc.cc_mu != comaj_hi || cc.cc_mu_prime != maj_lo)
                    r.fail("statistic mismatch at k=" + std::to_string(k) + ", S=" +
                           S.to_string());
            }
    return r;
}

VerifyResult verify_hook_basis(int n, int k) {
    VerifyResult r{"hook-basis " + std::to_string(n) + " " + std::to_string(k)};
    Int nfact = factorial(n);
    auto pairs = same_shape_pairs(n);
    if (Int((long)pairs.size()) != nfact) {
        r.fail("pair count != n!");
        return r;
    }
    std::vector<Poly> polys(pairs.size());
    parallel_for(pairs.size(), [&](size_t i) {
        polys[i] = hook_higher_specht(pairs[i].first, pairs[i].second, k);
    });

    if (n <= 4) {
        // generator route: exact reduction against the hook ideal
        IdealSpec I = ideal_spec(IdealKind::Hook, n, k);
        auto [indep, rank] = independent_mod(polys, I);
        if (!indep) r.fail("rank mod hook ideal is " + std::to_string(rank));
        long total = 0;
        for (auto& [bd, d] : engine_for(I).hilbert_certified()) total += d;
        if (Int(total) != nfact) r.fail("quotient dimension " + std::to_string(total));
        r.note("route: ideal generators; rank " + std::to_string(rank));
    } else {
        // apolar route: f lies in I_mu iff the f-derivative kills Delta_mu,
        // so independence mod I_mu = independence of the derivative images
        Poly delta = delta_mu(hook_shape(n, k));
        std::vector<Poly> images(polys.size());
        parallel_for(polys.size(), [&](size_t i) { images[i] = apply_diff(polys[i], delta); });
        int rank = ambient_rank(images);
        if (Int((long)rank) != nfact) r.fail("derivative-image rank " + std::to_string(rank));
        int hdim = harmonic_dim(delta);
        if (Int((long)hdim) != nfact) r.fail("harmonic dimension " + std::to_string(hdim));
        r.note("route: apolar pairing against Delta_mu; rank " + std::to_string(rank));
    }
    return r;
}

VerifyResult verify_pk_basis(int n, int k, int bound) {
    if (bound < 0) bound = n;
    VerifyResult r{"pk-basis " + std::to_string(n) + " " + std::to_string(k) +
                   " (window " + std::to_string(bound) + ")"};
    IdealSpec I = ideal_spec(IdealKind::Pk, n, k);

    // Multiplier shapes nu with parts in 1..n-1 (a part equal to n would give
    // the trivial factor e_0(y)=1) and total e_nu^(k)-degree within the window.
    auto part_weight = [&](int d) { return d <= k - 1 ? d : n - d; };
    std::vector<Partition> nus;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxpart, int degleft) -> void {
        nus.push_back(Partition(cur));
        for (int d = std::min(maxpart, n - 1); d >= 1; --d) {
            if (part_weight(d) > degleft) continue;
            cur.push_back(d);
            self(self, d, degleft - part_weight(d));
            cur.pop_back();
        }
    };
    rec(rec, n - 1, bound);

    auto pairs = same_shape_pairs(n);
    std::vector<Poly> base(pairs.size());
    parallel_for(pairs.size(), [&](size_t i) {
        base[i] = hook_higher_specht(pairs[i].first, pairs[i].second, k);
    });

    std::vector<Poly> products;
    std::map<std::pair<int, int>, long> counts;
    for (const Partition& nu : nus) {
        Poly e = hook_e(nu, k, n);
        for (const Poly& f : base) {
            Poly p = f * e;
            auto bd = bidegrees_of(p);
            if (bd.size() != 1) {
                r.fail("product not bihomogeneous");
                continue;
            }
            if (bd[0].first + bd[0].second > bound) continue;
            ++counts[bd[0]];
            products.push_back(std::move(p));
        }
    }

    // piece-by-piece count = quotient dimension on the covered window
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b) {
            long have = counts.count({a, b}) ? counts[{a, b}] : 0;
            int want = quotient_dim(I, a, b);
            if (have != want)
                r.fail("piece " + fmt_bd({a, b}) + ": " + std::to_string(have) +
                       " products vs quotient dim " + std::to_string(want));
        }

    auto [indep, rank] = independent_mod(products, I);
    if (!indep)
        r.fail("products dependent: rank " + std::to_string(rank) + " of " +
               std::to_string(products.size()));
    r.note(std::to_string(products.size()) + " products checked");
    return r;
}

VerifyResult verify_dr(int n) {
    VerifyResult r{"dr " + std::to_string(n)};
    IdealSpec I = ideal_spec(IdealKind::Diagonal, n);
    auto dims = engine_for(I).hilbert_certified();
    long total = 0;
    for (auto& [bd, d] : dims) total += d;

    if (n == 2) {
        if (total != 3) r.fail("dim DR_2 = " + std::to_string(total));
        std::map<std::pair<int, int>, int> want{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}};
        if (dims != want) r.fail("DR_2 Hilbert table mismatch");
        std::vector<Poly> basis{Poly::constant(2, 1), var_poly(2, 2, 'x') - var_poly(2, 1, 'x'),
                                var_poly(2, 2, 'y') - var_poly(2, 1, 'y')};
        auto [indep, rank] = independent_mod(basis, I);
        if (!indep) r.fail("explicit DR_2 basis dependent, rank " + std::to_string(rank));
    } else if (n == 3) {
        if (total != 16) r.fail("dim DR_3 = " + std::to_string(total));
        Tableau A = Tableau::from_string("1 2 / 3");
        Tableau B = Tableau::from_string("1 3 / 2");
        Tableau C = Tableau::from_string("1 / 2 / 3");
        auto mono = [&](std::vector<int> xe, std::vector<int> ye) {
            return Poly::monomial(Monomial(std::move(xe), std::move(ye)));
        };
        std::vector<Poly> basis{
            Poly::constant(3, 1),
            var_poly(3, 2, 'x') - var_poly(3, 1, 'x'),
            var_poly(3, 3, 'x') - var_poly(3, 1, 'x'),
            var_poly(3, 2, 'y') - var_poly(3, 1, 'y'),
            var_poly(3, 3, 'y') - var_poly(3, 1, 'y'),
            epsilon_apply(C, mono({0, 0, 1}, {1, 0, 0})),
            epsilon_apply(A, mono({0, 0, 1}, {0, 1, 0})),
            epsilon_apply(B, mono({0, 1, 0}, {0, 0, 1})),
            epsilon_apply(A, mono({0, 1, 1}, {0, 0, 0})),
            epsilon_apply(B, mono({0, 1, 1}, {0, 0, 0})),
            epsilon_apply(A, mono({0, 0, 0}, {0, 1, 1})),
            epsilon_apply(B, mono({0, 0, 0}, {0, 1, 1})),
            specht_poly(C),
            (var_poly(3, 3, 'y') - var_poly(3, 2, 'y')) *
                (var_poly(3, 3, 'y') - var_poly(3, 1, 'y')) *
                (var_poly(3, 2, 'y') - var_poly(3, 1, 'y')),
            epsilon_apply(C, mono({0, 0, 2}, {1, 0, 0})),
            epsilon_apply(C, mono({0, 0, 1}, {2, 0, 0})),
        };
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i].is_zero()) r.fail("fixture polynomial " + std::to_string(i) + " is zero");
        auto [indep, rank] = independent_mod(basis, I);
        if (!indep) r.fail("fixture basis dependent, rank " + std::to_string(rank));
        SchurSeries qf = quotient_frobenius(I, 3, 3);
        auto rep = compare_series(qf, nabla_e3_fixture(), false);
        if (!rep.equal) {
            r.fail("DR_3 character differs from the fixed degree-3 expansion");
            for (auto& d : rep.differences) r.note(d);
        }
    } else {
        long want = 1;
        for (int i = 0; i < n - 1; ++i) want *= n + 1;
        if (total != want)
            r.fail("dim DR_" + std::to_string(n) + " = " + std::to_string(total) + ", expected " +
                   std::to_string(want));
    }
    r.note("total dimension " + std::to_string(total));
    return r;
}

VerifyResult verify_apolar(int n) {
    VerifyResult r{"apolar " + std::to_string(n)};
    for (int k = 1; k <= n; ++k) {
        Poly delta = delta_mu(hook_shape(n, k));
        IdealSpec I = ideal_spec(IdealKind::Hook, n, k);
        QuotientEngine& eng = engine_for(I);
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b) {
                auto kern = apolar_kernel(delta, a, b);
                int ideal_rank = (int)monomials_of_bidegree(n, a, b).size() -
                                 eng.quotient_dim(a, b);
                if ((int)kern.size() != ideal_rank) {
                    r.fail("k=" + std::to_string(k) + " piece " + fmt_bd({a, b}) +
                           ": kernel dim " + std::to_string(kern.size()) + " vs ideal rank " +
                           std::to_string(ideal_rank));
                    continue;
                }
                for (const Poly& f : kern)
                    if (!eng.contains(f)) {
                        r.fail("k=" + std::to_string(k) + " piece " + fmt_bd({a, b}) +
                               ": kernel element outside the generator ideal");
                        break;
                    }
            }
        int hdim = harmonic_dim(delta);
        if (Int((long)hdim) != factorial(n))
            r.fail("k=" + std::to_string(k) + ": harmonic dim " + std::to_string(hdim));
    }
    return r;
}

VerifyResult verify_psi(int n) {
    VerifyResult r{"psi " + std::to_string(n)};
    auto pairs = same_shape_pairs(n);
    for (int k = 1; k <= n; ++k) {
        std::vector<char> ok(pairs.size(), 1);
        parallel_for(pairs.size(), [&](size_t i) {
            const auto& [T, S] = pairs[i];
            MuCochargePair cc = mu_cocharge_tableaux(S, k);
            int q = 0;
            for (auto& row : cc.cc_tab_prime)
                for (int v : row) q = std::max(q, v);
            Poly lhs = psi_shift(hook_higher_specht(T, S, k), q);
            ok[i] = lhs == aty_higher_specht(T, S);
        });
        for (size_t i = 0; i < pairs.size(); ++i)
            if (!ok[i])
                r.fail("k=" + std::to_string(k) + ": mismatch at T=" +
                       pairs[i].first.to_string() + ", S=" + pairs[i].second.to_string());
    }
    return r;
}

VerifyResult verify_paper_examples() {
    VerifyResult r{"paper-examples"};

    // cocharge of words
    CochargeLabeling c1 = cocharge({2, 5, 3, 1, 4});
    if (c1.total != 5 || c1.labels != std::vector<int>{1, 2, 1, 0, 1})
        r.fail("cc(25314) labels/total");
    if (cocharge({4, 3, 3, 1, 1, 1, 2, 2, 2, 4, 4, 2, 3, 1, 1}).total != 12)
        r.fail("cc(433111222442311) != 12");

    // flip / reverse / phi worked example
    if (flip({8, 3, 6, 7, 9, 1, 2, 4, 5}) != Word{2, 7, 4, 3, 1, 9, 8, 6, 5})
        r.fail("flip example");
    if (reverse_word({2, 7, 4, 3, 1, 9, 8, 6, 5}) != Word{5, 6, 8, 9, 1, 3, 4, 7, 2})
        r.fail("reverse example");
    {
        Tableau T = Tableau::from_string("1 2 4 5 / 3 6 7 9 / 8");
        Tableau want = Tableau::from_string("1 2 4 7 / 3 6 8 9 / 5");
        Tableau got = phi(T);
        DescentData dT = descent_data(T);
        if (!(got == want)) r.fail("phi(T) tableau mismatch");
        if (dT.maj != 14 || dT.descents != std::set<int>{2, 5, 7}) r.fail("maj(T) != 14");
        if (tableau_cocharge(got) != 14) r.fail("cc(phi(T)) != 14");
        if (descent_data(got).des != dT.des) r.fail("des not preserved in phi example");
    }

    // middle tableau of the descent example
    {
        DescentData d = descent_data(Tableau::from_string("1 3 6 9 / 2 5 / 4 8 / 7"));
        if (d.descents != std::set<int>{1, 3, 6} || d.maj != 10)
            r.fail("descents/maj of the 9-cell example");
    }

    // mu-cocharge tables at n=7, k=4
    {
        Tableau S = Tableau::from_string("1 2 4 / 3 5 / 6 7");
        MuCochargePair cc = mu_cocharge_tableaux(S, 4);
        std::vector<std::vector<int>> tab{{0, 0, 0}, {0, 1}, {2, 2}};
        std::vector<std::vector<int>> tabp{{1, 1, 0}, {0, 0}, {0, 0}};
        if (cc.cc_tab != tab || cc.cc_tab_prime != tabp) r.fail("ccTab tables at n=7,k=4");
        if (cc.cc_mu != 5 || cc.cc_mu_prime != 2) r.fail("cc_mu/cc'_mu at n=7,k=4");
        auto [maj14, co14] = maj_comaj_range(S, 1, 4);
        auto [maj47, co47] = maj_comaj_range(S, 4, 7);
        if (maj14 != 2 || co47 != 5) r.fail("maj_{1,4}/comaj_{4,7} at n=7,k=4");
    }

    // mu-monomial examples
    {
        Tableau T = Tableau::from_string("1 3 7 / 2 4 / 5 6");
        Tableau S = Tableau::from_string("1 2 4 / 3 5 / 6 7");
        Monomial want({0, 0, 0, 1, 2, 2, 0}, {1, 0, 1, 0, 0, 0, 0});
        if (!(mu_monomial(T, S, 4) == want)) r.fail("xy_T^S at n=7,k=4");
    }
    {
        Tableau T = Tableau::from_string("1 2 / 3 4");
        Tableau S = Tableau::from_string("1 3 / 2 4");
        MuCochargePair cc = mu_cocharge_tableaux(S, 2);
        std::vector<std::vector<int>> tab{{0, 0}, {0, 1}};
        std::vector<std::vector<int>> tabp{{1, 0}, {0, 0}};
        if (cc.cc_tab != tab || cc.cc_tab_prime != tabp) r.fail("ccTab tables at n=4,k=2");
        Monomial want({0, 0, 0, 1}, {1, 0, 0, 0});
        if (!(mu_monomial(T, S, 2) == want)) r.fail("xy_T^S = x_4 y_1 at n=4,k=2");

        // the printed 16-term expansion of F_T^S
        Poly expect(4);
        auto add = [&](int xi, int yi, int c) {
            Monomial m(4);
            m.x[xi - 1] = 1;
            m.y[yi - 1] = 1;
            expect.add_term(m, c);
        };
        add(4, 1, 1); add(3, 1, 1); add(4, 2, 1); add(3, 2, 1);
        add(2, 1, -2); add(1, 2, -2); add(4, 3, -2); add(3, 4, -2);
        add(1, 4, 1); add(1, 3, 1); add(2, 4, 1); add(2, 3, 1);
        if (!(hook_higher_specht(T, S, 2) == expect)) r.fail("16-term F_T^S expansion");
    }

    // Specht polynomial figure
    {
        Tableau T = Tableau::from_string("2 8 4 5 / 7 1 6 / 3");
        Poly want = (var_poly(8, 3, 'x') - var_poly(8, 7, 'x')) *
                    (var_poly(8, 7, 'x') - var_poly(8, 2, 'x')) *
                    (var_poly(8, 3, 'x') - var_poly(8, 2, 'x')) *
                    (var_poly(8, 1, 'x') - var_poly(8, 8, 'x')) *
                    (var_poly(8, 6, 'x') - var_poly(8, 4, 'x'));
        if (!(specht_poly(T) == want)) r.fail("Specht polynomial figure");
    }

    return r;
}

VerifyResult verify_frobenius_hooks(int n) {
    VerifyResult r{"frobenius hooks " + std::to_string(n)};
    for (int k = 1; k <= n; ++k) {
        IdealSpec I = ideal_spec(IdealKind::Hook, n, k);
        auto dims = engine_for(I).hilbert_certified();
        int D1 = 0, D2 = 0;
        for (auto& [bd, d] : dims) {
            D1 = std::max(D1, bd.first);
            D2 = std::max(D2, bd.second);
        }
        SchurSeries qf = quotient_frobenius(I, D1, D2);
        SchurSeries stem = stembridge_series(n, k);
        SchurSeries ccs = cc_mu_series(n, k);
        auto rs = compare_series(qf, stem, true);
        auto rc = compare_series(qf, ccs, true);
        if (!rs.equal && !rs.equal_after_swap)
            r.fail("k=" + std::to_string(k) + ": quotient series differs from the maj/comaj series");
        if (!rc.equal && !rc.equal_after_swap)
            r.fail("k=" + std::to_string(k) + ": quotient series differs from the cc/cc' series");
        r.note("k=" + std::to_string(k) + ": maj/comaj " + rs.verdict() + "; cc/cc' " +
               rc.verdict());
        auto sh = series_hilbert(qf);
        if (sh != dims)
            r.fail("k=" + std::to_string(k) + ": character-level Hilbert differs from rank-level");
    }
    return r;
}

VerifyResult verify_classical(int n) {
    VerifyResult r{"classical " + std::to_string(n)};
    IdealSpec I = ideal_spec(IdealKind::Onevar, n);
    auto dims = engine_for(I).hilbert_certified();
    // q-factorial [n]_q! coefficients
    std::vector<long> qfact{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<long> next(qfact.size() + m - 1, 0);
        for (size_t i = 0; i < qfact.size(); ++i)
            for (int j = 0; j < m; ++j) next[i + j] += qfact[i];
        qfact = std::move(next);
    }
    std::map<std::pair<int, int>, int> want;
    for (size_t d = 0; d < qfact.size(); ++d)
        if (qfact[d]) want[{(int)d, 0}] = (int)qfact[d];
    if (dims != want) r.fail("Hilbert series != q-factorial");
    SchurSeries qf = quotient_frobenius(I, n * (n - 1) / 2, 0);
    if (!compare_series(qf, lusztig_stanley_series(n), false).equal)
        r.fail("character series != maj generating series");
    return r;
}

} // namespace ds
