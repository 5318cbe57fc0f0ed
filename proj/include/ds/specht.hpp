#ifndef DS_SPECHT_HPP
#define DS_SPECHT_HPP

#include <map>
#include <vector>

#include "ds/combinatorics.hpp"
#include "ds/linalg.hpp"
#include "ds/poly.hpp"

namespace ds {

// Partial antisymmetrizer data: columns a < b, row t in column b.
struct GarnirSpec {
    int a = 0;
    int b = 0;
    int t = 0;
};

// Rational expansion of a Specht polynomial in the SYT basis of its shape.
struct SpechtExpansion {
    std::map<Tableau, Rat> coeffs;
};

std::pair<std::vector<Permutation>, std::vector<Permutation>> row_column_groups(const Tableau& T);

// epsilon_T = alpha(C(T)) beta(R(T)) applied by direct expansion.
Poly epsilon_apply(const Tableau& T, const Poly& f);
Poly epsilon_apply_serial(const Tableau& T, const Poly& f); // reference path

Poly specht_poly(const Tableau& T);

Poly higher_specht(const Tableau& T, const std::vector<int>& c, const std::vector<int>& d);
Poly hook_higher_specht(const Tableau& T, const Tableau& S, int k);
Poly aty_higher_specht(const Tableau& T, const Tableau& S);

// Ordinary cocharge labels of the reading word of S, laid out per cell in
// reading order (exponent list for the one-variable construction).
std::vector<int> cctab_reading(const Tableau& S);

Poly garnir_apply(const GarnirSpec& spec, const Tableau& T, const Poly& f);

SpechtExpansion straighten(const Tableau& T);

RationalMatrix rep_matrix(const Partition& lambda, const Permutation& pi);

// Irreducible characters as traces of straightening-built matrices:
// table[shape index][class index], shapes and classes both in
// enumerate_partitions order. Cached per n.
const std::vector<std::vector<Rat>>& character_table(int n);

Poly psi_shift(const Poly& f, int q);

} // namespace ds

#endif
