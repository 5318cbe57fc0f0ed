#ifndef DS_FROBENIUS_HPP
#define DS_FROBENIUS_HPP

#include <map>
#include <string>
#include <vector>

#include "ds/combinatorics.hpp"
#include "ds/quotient.hpp"

namespace ds {

// Bigraded formal sum of Schur symbols: (d1,d2) -> (partition -> multiplicity).
// Zero multiplicities are never stored.
struct SchurSeries {
    std::map<std::pair<int, int>, std::map<Partition, long>> data;

    void add(int d1, int d2, const Partition& nu, long mult);
    SchurSeries qt_swap() const; // transpose every bidegree
    bool operator==(const SchurSeries& o) const { return data == o.data; }

    std::string to_string() const; // q,t-polynomial in Schur symbols
    std::string to_json() const;   // {"(d1,d2)": {"2,1": 1, ...}}
};

// Tableau-statistic formulas, all computed by enumeration.
SchurSeries stembridge_series(int n, int k);      // q^{maj_{1,n-k+1}} t^{comaj_{n-k+1,n}}
SchurSeries cc_mu_series(int n, int k);           // q^{cc_mu} t^{cc'_mu}
SchurSeries lusztig_stanley_series(int n);        // q^{maj}, t-degree 0
SchurSeries ls_cocharge_series(const Partition& mu); // q^{cc} over SSYT of content mu

std::map<std::pair<int, int>, int> series_hilbert(const SchurSeries& s);

// Character-level decomposition of a graded quotient over the window
// [0,D1] x [0,D2]. Throws on non-integral or negative multiplicity.
SchurSeries quotient_frobenius(const IdealSpec& I, int D1, int D2);

// Same decomposition for a harmonic (derivative-span) space.
SchurSeries harmonic_frobenius(const HarmonicSpace& H, int n);

struct SeriesCompareReport {
    bool equal = false;
    bool equal_after_swap = false;
    std::vector<std::string> differences; // located diffs of the direct comparison
    std::string verdict() const;
};

SeriesCompareReport compare_series(const SchurSeries& a, const SchurSeries& b,
                                   bool allow_qt_swap);

// The degree-3 diagonal-coinvariant character, embedded as a literal fixture.
SchurSeries nabla_e3_fixture();

} // namespace ds

#endif
