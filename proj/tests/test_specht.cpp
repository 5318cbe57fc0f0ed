#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "ds/specht.hpp"

using namespace ds;

namespace {

Poly xvar(int n, int i) {
    Monomial m(n);
    m.x[i - 1] = 1;
    return Poly::monomial(m);
}
Poly yvar(int n, int i) {
    Monomial m(n);
    m.y[i - 1] = 1;
    return Poly::monomial(m);
}

// Index the union of all monomials (canonical order) and echelonize.
struct SpanTester {
    std::map<Monomial, int> index;
    EchelonBasis ech;

    void register_monomials(const std::vector<Poly>& fs) {
        for (const Poly& f : fs)
            for (auto& [m, c] : f.terms()) index.emplace(m, 0);
        int id = 0;
        for (auto& [m, i] : index) i = id++;
    }
    SparseRow row(const Poly& f) const {
        SparseRow r;
        for (auto& [m, c] : f.terms()) r.emplace_back(index.at(m), c);
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    }
};

int span_rank(const std::vector<Poly>& fs) {
    SpanTester st;
    st.register_monomials(fs);
    for (const Poly& f : fs) st.ech.insert(st.row(f));
    return st.ech.rank();
}

Permutation adjacent(int n, int i) { // swap i, i+1
    std::vector<int> im(n);
    for (int j = 0; j < n; ++j) im[j] = j + 1;
    std::swap(im[i - 1], im[i]);
    return Permutation(im);
}

std::vector<GarnirSpec> all_garnir_specs(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    std::vector<GarnirSpec> out;
    for (int a = 1; a < conj.length(); ++a)
        for (int b = a + 1; b <= conj.length(); ++b)
            for (int t = 1; t <= conj.parts[b - 1]; ++t) out.push_back({a, b, t});
    return out;
}

} // namespace

TEST_CASE("row and column group sizes") {
    auto [R1, C1] = row_column_groups(Tableau::from_string("1 2 / 3"));
    CHECK(R1.size() == 2);
    CHECK(C1.size() == 2);
    Tableau big = enumerate_standard(Partition({4, 3, 1})).front();
    auto [R2, C2] = row_column_groups(big);
    CHECK(R2.size() == 144); // 4! * 3! * 1!
    CHECK(C2.size() == 24);  // conjugate (3,2,2,1): 3! * 2! * 2! * 1!
    Tableau ssyt = Tableau::from_string("1 1");
    CHECK_THROWS_AS(row_column_groups(ssyt), std::invalid_argument);
}

TEST_CASE("symmetrizer on constants and the Specht leading monomial") {
    // tall column: rows are singletons, antisymmetrizing a constant kills it
    Tableau col = Tableau::from_string("1 / 2 / 3");
    CHECK(epsilon_apply(col, Poly::constant(3, 1)).is_zero());
    // single row: pure row-symmetrization scales the constant by |R| = 3!
    Tableau row = Tableau::from_string("1 2 3");
    CHECK(epsilon_apply(row, Poly::constant(3, 1)) == Poly::constant(3, 6));
    // shape (2,1): column antisymmetrization of x_3 gives F_T = x_3 - x_1,
    // then the row group sums its two images
    Tableau T = Tableau::from_string("1 2 / 3");
    Poly xc = xvar(3, 3);
    CHECK(epsilon_apply(T, xc) == (xvar(3, 3) - xvar(3, 1)) + (xvar(3, 3) - xvar(3, 2)));
    // parallel and serial paths agree
    std::mt19937 rng(9);
    for (auto& lambda : enumerate_partitions(4))
        for (auto& U : enumerate_standard(lambda)) {
            Monomial m(4);
            for (int i = 0; i < 4; ++i) {
                m.x[i] = rng() % 3;
                m.y[i] = rng() % 2;
            }
            Poly f = Poly::monomial(m);
            CHECK(epsilon_apply(U, f) == epsilon_apply_serial(U, f));
        }
    CHECK_THROWS_AS(epsilon_apply(T, Poly::constant(4, 1)), std::invalid_argument);
}

TEST_CASE("Specht polynomial product formula") {
    Tableau T = Tableau::from_string("2 8 4 5 / 7 1 6 / 3");
    int n = 8;
    Poly want = (xvar(n, 7) - xvar(n, 2)) * (xvar(n, 3) - xvar(n, 2)) *
                (xvar(n, 3) - xvar(n, 7)) * (xvar(n, 1) - xvar(n, 8)) *
                (xvar(n, 6) - xvar(n, 4));
    CHECK(specht_poly(T) == want);
    CHECK(specht_poly(Tableau::from_string("1 2 3")) == Poly::constant(3, 1));
    // column tableau gives the Vandermonde determinant
    Tableau col = Tableau::from_string("1 / 2 / 3");
    CHECK(specht_poly(col) ==
          (xvar(3, 2) - xvar(3, 1)) * (xvar(3, 3) - xvar(3, 1)) * (xvar(3, 3) - xvar(3, 2)));
}

TEST_CASE("higher Specht with staircase x-exponents is the row-group orbit sum of F_T") {
    // The column antisymmetrizer sends the staircase monomial x_T exactly to
    // the Specht polynomial, so epsilon_T(x_T) = sum over the row group of
    // sigma . F_T. In particular it is nonzero.
    for (int n = 2; n <= 4; ++n)
        for (auto& lambda : enumerate_partitions(n))
            for (auto& T : enumerate_standard(lambda)) {
                std::vector<int> c, d;
                for (const Cell& cell : T.cells_reading_order()) {
                    c.push_back(cell.row - 1);
                    d.push_back(0);
                }
                Poly f = higher_specht(T, c, d);
                auto [R, C] = row_column_groups(T);
                Poly want(n);
                for (const Permutation& s : R) want = want + diagonal_act(s, specht_poly(T));
                CHECK(f == want);
                CHECK(!f.is_zero());
            }
}

TEST_CASE("diagonal action maps each higher Specht polynomial into its tableau span") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto& lambda : enumerate_partitions(n))
                for (auto& S : enumerate_standard(lambda)) {
                    std::vector<Poly> span;
                    for (auto& U : enumerate_standard(lambda))
                        span.push_back(hook_higher_specht(U, S, k));
                    SpanTester st;
                    std::vector<Poly> everything = span;
                    for (auto& T : enumerate_standard(lambda))
                        for (int i = 1; i < n; ++i)
                            everything.push_back(
                                diagonal_act(adjacent(n, i), hook_higher_specht(T, S, k)));
                    st.register_monomials(everything);
                    for (size_t i = 0; i < span.size(); ++i) st.ech.insert(st.row(span[i]));
                    CHECK(st.ech.rank() == (int)span.size());
                    for (size_t i = span.size(); i < everything.size(); ++i)
                        CHECK(st.ech.reduce(st.row(everything[i])).empty());
                }
}

TEST_CASE("Garnir operator basics") {
    Tableau T = Tableau::from_string("1 2 / 3 4");
    // antisymmetrizing a symmetric polynomial gives zero
    CHECK(garnir_apply({1, 2, 1}, T, elementary_symmetric(1, 'x', 4)).is_zero());
    // two-element block on x_1: antisymmetrize values {3, 2} (column 1 above row 1
    // plus column 2 row 1) and values {1} stays put -> explicit small expansion
    Tableau T21 = Tableau::from_string("1 2 / 3");
    Poly f = xvar(3, 1);
    // spec (a=1,b=2,t=1): values {1,3} from column 1 rows 1..2 and {2} from column 2
    Poly g = garnir_apply({1, 2, 1}, T21, f);
    // antisymmetrization of x_1 over arrangements of {1,2,3}
    Poly want(3);
    for (const Permutation& w : all_permutations(3))
        want = w.sign() > 0 ? want + diagonal_act(w, f) : want - diagonal_act(w, f);
    CHECK(g == want);
    CHECK_THROWS_AS(garnir_apply({2, 1, 1}, T, f), std::invalid_argument);
    CHECK_THROWS_AS(garnir_apply({1, 2, 3}, T, f), std::invalid_argument);
}

TEST_CASE("Garnir operators annihilate Specht and higher Specht polynomials") {
    for (int n = 2; n <= 4; ++n)
        for (auto& lambda : enumerate_partitions(n))
            for (auto& T : enumerate_standard(lambda))
                for (const GarnirSpec& spec : all_garnir_specs(lambda)) {
                    CHECK(garnir_apply(spec, T, specht_poly(T)).is_zero());
                    for (int k = 1; k <= n; ++k)
                        for (auto& S : enumerate_standard(lambda))
                            CHECK(garnir_apply(spec, T, hook_higher_specht(T, S, k)).is_zero());
                }
}

TEST_CASE("straightening") {
    // standard tableaux are fixed points
    for (auto& lambda : enumerate_partitions(4))
        for (auto& T : enumerate_standard(lambda)) {
            SpechtExpansion e = straighten(T);
            REQUIRE(e.coeffs.size() == 1);
            CHECK(e.coeffs.begin()->first == T);
            CHECK(e.coeffs.begin()->second == 1);
        }
    // shape (2,1): swapping the column entries flips the sign
    SpechtExpansion e = straighten(Tableau::from_string("3 2 / 1"));
    REQUIRE(e.coeffs.size() == 1);
    CHECK(e.coeffs.begin()->first == Tableau::from_string("1 2 / 3"));
    CHECK(e.coeffs.begin()->second == -1);
    CHECK_THROWS_AS(straighten(Tableau::from_string("1 1")), std::invalid_argument);
    // oracle: the expansion reproduces the Specht polynomial exactly
    for (int n = 2; n <= 4; ++n)
        for (auto& lambda : enumerate_partitions(n))
            for (auto& T : enumerate_bijective(lambda)) {
                SpechtExpansion ex = straighten(T);
                Poly rebuilt(n);
                for (auto& [U, c] : ex.coeffs) {
                    CHECK(U.is_standard());
                    rebuilt = rebuilt + specht_poly(U) * c;
                }
                CHECK(rebuilt == specht_poly(T));
            }
}

TEST_CASE("representation matrices") {
    Partition l21({2, 1});
    CHECK(rep_matrix(l21, Permutation::identity(3)) == RationalMatrix::identity(2));
    // sign representation on the single column
    Partition l111({1, 1, 1});
    for (const Permutation& p : all_permutations(3)) {
        RationalMatrix M = rep_matrix(l111, p);
        REQUIRE(M.rows() == 1);
        CHECK(M.at(0, 0) == p.sign());
    }
    // characters of the (2,1) irreducible: 2 on id, 0 on transpositions, -1 on 3-cycles
    for (const Permutation& p : all_permutations(3)) {
        RationalMatrix M = rep_matrix(l21, p);
        Rat tr = M.at(0, 0) + M.at(1, 1);
        auto ct = p.cycle_type();
        if (ct == Partition({1, 1, 1}))
            CHECK(tr == 2);
        else if (ct == Partition({2, 1}))
            CHECK(tr == 0);
        else
            CHECK(tr == -1);
    }
    // homomorphism property on random pairs, shape (2,2)
    std::mt19937 rng(31);
    auto perms = all_permutations(4);
    std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 15; ++trial) {
        const Permutation &p = perms[pick(rng)], &q = perms[pick(rng)];
        CHECK(rep_matrix(Partition({2, 2}), p.compose(q)) ==
              rep_matrix(Partition({2, 2}), p) * rep_matrix(Partition({2, 2}), q));
    }
    CHECK_THROWS_AS(rep_matrix(l21, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("character table orthogonality") {
    for (int n = 2; n <= 5; ++n) {
        auto& table = character_table(n);
        auto classes = conjugacy_classes(n);
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (size_t s = 0; s < table.size(); ++s)
            for (size_t t = 0; t < table.size(); ++t) {
                Rat acc = 0;
                for (size_t c = 0; c < classes.size(); ++c)
                    acc += Rat(classes[c].second) * table[s][c] * table[t][c];
                CHECK(acc == (s == t ? Rat(fact) : Rat(0)));
            }
        // dimension column: chi(id) = #SYT
        auto shapes = enumerate_partitions(n);
        size_t id_col = 0;
        while (id_col < classes.size() && !(classes[id_col].first == Permutation::identity(n)))
            ++id_col;
        REQUIRE(id_col < classes.size());
        for (size_t s = 0; s < shapes.size(); ++s)
            CHECK(table[s][id_col] == (long)enumerate_standard(shapes[s]).size());
    }
}

TEST_CASE("leading monomial of a hook higher Specht polynomial survives") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto& lambda : enumerate_partitions(n))
                for (auto& T : enumerate_standard(lambda))
                    for (auto& S : enumerate_standard(lambda)) {
                        Monomial lead = mu_monomial(T, S, k);
                        CHECK(coefficient_of(hook_higher_specht(T, S, k), lead) != 0);
                    }
}

TEST_CASE("one-variable specialization") {
    // no y variables: q = 0 leaves the polynomial unchanged
    Poly f = xvar(2, 1) * xvar(2, 1) + xvar(2, 2);
    CHECK(psi_shift(f, 0) == f);
    // y_1 with shift 1 becomes x_2 (n = 2)
    CHECK(psi_shift(yvar(2, 1), 1) == xvar(2, 2));
    // insufficient shift reports the needed exponent
    Poly y2 = yvar(2, 1) * yvar(2, 1);
    CHECK_THROWS_AS(psi_shift(y2, 1), std::invalid_argument);
    CHECK(psi_shift(y2, 2) == Poly::monomial(Monomial({0, 2}, {0, 0})));
}

TEST_CASE("cocharge reading labels") {
    // labels of the reading word, in reading order
    Tableau S = Tableau::from_string("1 2 4 / 3 5 / 6 7");
    // reading word 6 7 3 5 1 2 4 has cocharge labels per letter
    CochargeLabeling cc = cocharge(S.reading_word());
    CHECK(cctab_reading(S) == cc.labels);
    CHECK_THROWS_AS(cctab_reading(Tableau::from_string("2 1")), std::invalid_argument);
}

TEST_CASE("higher Specht polynomials are linearly independent") {
    for (int n = 2; n <= 5; ++n) {
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        std::vector<Poly> all;
        for (auto& lambda : enumerate_partitions(n)) {
            auto syt = enumerate_standard(lambda);
            for (auto& S : syt) {
                std::vector<Poly> fixed_s;
                for (auto& T : syt) fixed_s.push_back(aty_higher_specht(T, S));
                CHECK(span_rank(fixed_s) == (int)syt.size());
                for (auto& f : fixed_s) all.push_back(f);
            }
        }
        CHECK(span_rank(all) == fact);
    }
}
