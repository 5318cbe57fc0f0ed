#ifndef DS_POLY_HPP
#define DS_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "ds/combinatorics.hpp"
#include "ds/rational.hpp"

namespace ds {

// Monomial in x_1..x_n, y_1..y_n. Canonical order: total degree, then the
// x-exponent vector lexicographically, then y. Fixes serialization and pivots.
struct Monomial {
    std::vector<int> x, y;

    Monomial() = default;
    explicit Monomial(int n) : x(n, 0), y(n, 0) {}
    Monomial(std::vector<int> xe, std::vector<int> ye);

    int n() const { return (int)x.size(); }
    int xdeg() const;
    int ydeg() const;
    std::pair<int, int> bidegree() const { return {xdeg(), ydeg()}; }

    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return x == o.x && y == o.y; }
    bool operator<(const Monomial& o) const;

    std::string to_string() const; // "x1^2 x3 y2" etc., "1" for the unit
};

struct Permutation {
    std::vector<int> images; // 1-based: images[i-1] = pi(i)

    Permutation() = default;
    explicit Permutation(std::vector<int> im);
    static Permutation identity(int n);

    int n() const { return (int)images.size(); }
    int operator()(int i) const { return images[i - 1]; }
    Permutation compose(const Permutation& o) const; // (this*o)(i) = this(o(i))
    Permutation inverse() const;
    int sign() const;
    Partition cycle_type() const;
    bool operator==(const Permutation& o) const { return images == o.images; }
    bool operator<(const Permutation& o) const { return images < o.images; }
};

std::vector<Permutation> all_permutations(int n);
// One representative per conjugacy class (indexed by cycle type), plus class size.
std::vector<std::pair<Permutation, Int>> conjugacy_classes(int n);

// Sparse exact-rational polynomial in two sets of n variables.
class Poly {
public:
    Poly() = default;
    explicit Poly(int n) : n_(n) {}
    static Poly constant(int n, const Rat& c);
    static Poly monomial(const Monomial& m, const Rat& c = 1);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    int n_ = 0;
    std::map<Monomial, Rat> terms_;
};

Poly diagonal_act(const Permutation& pi, const Poly& f);
Monomial act_monomial(const Permutation& pi, const Monomial& m);

Poly elementary_symmetric(int d, char varset, int n); // varset 'x' or 'y'
Poly polarized_power_sum(int a, int b, int n);

// Exponent lists c, d aligned to the cells of sh(T) in reading order.
Monomial tableau_monomial(const Tableau& T, const std::vector<int>& c, const std::vector<int>& d);
Monomial mu_monomial(const Tableau& T, const Tableau& S, int k);

Poly delta_mu(const Partition& mu);

// d/dx-operator of f applied to g; the pairing <f,g> is the constant term.
Poly apply_diff(const Poly& f, const Poly& g);
Rat diff_pairing(const Poly& f, const Poly& g);

Poly hook_e_single(int d, int k, int n); // e_d^{(k)}
Poly hook_e(const Partition& nu, int k, int n);

Poly homogeneous_component(const Poly& f, int d1, int d2);
Rat coefficient_of(const Poly& f, const Monomial& m);
// Distinct bidegrees appearing in f.
std::vector<std::pair<int, int>> bidegrees_of(const Poly& f);

std::string poly_to_json(const Poly& f);

} // namespace ds

#endif
