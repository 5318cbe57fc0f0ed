#include "ds/frobenius.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ds/parallel.hpp"
#include "ds/specht.hpp"

namespace ds {

void SchurSeries::add(int d1, int d2, const Partition& nu, long mult) {
    if (mult == 0) return;
    auto& slot = data[{d1, d2}];
    long& m = slot[nu];
    m += mult;
    if (m == 0) {
        slot.erase(nu);
        if (slot.empty()) data.erase({d1, d2});
    }
}

SchurSeries SchurSeries::qt_swap() const {
    SchurSeries out;
    for (auto& [bd, terms] : data) out.data[{bd.second, bd.first}] = terms;
    return out;
}

namespace {

std::string partition_key(const Partition& nu) {
    std::string s;
    for (size_t i = 0; i < nu.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(nu.parts[i]);
    }
    return s;
}

std::string qt_monomial(int d1, int d2) {
    std::string s;
    if (d1 == 1) s += "q";
    else if (d1 > 1) s += "q^" + std::to_string(d1);
    if (d2 >= 1) {
        if (!s.empty()) s += " ";
        s += d2 == 1 ? "t" : "t^" + std::to_string(d2);
    }
    return s;
}

} // namespace

std::string SchurSeries::to_string() const {
    if (data.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [bd, terms] : data)
        for (auto& [nu, m] : terms) {
            if (!first) os << " + ";
            first = false;
            if (m != 1) os << m << "*";
            std::string qt = qt_monomial(bd.first, bd.second);
            if (!qt.empty()) os << qt << " ";
            os << "s" << nu.to_string();
        }
    return os.str();
}

std::string SchurSeries::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (auto& [bd, terms] : data) {
        std::string key = "(" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ")";
        nlohmann::ordered_json inner = nlohmann::ordered_json::object();
        for (auto& [nu, m] : terms) inner[partition_key(nu)] = m;
        j[key] = std::move(inner);
    }
    return j.dump();
}

SchurSeries stembridge_series(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("stembridge_series: bad parameters");
    SchurSeries s;
    for (const Partition& sh : enumerate_partitions(n))
        for (const Tableau& T : enumerate_standard(sh)) {
            int q = maj_comaj_range(T, 1, n - k + 1).first;
            int t = maj_comaj_range(T, n - k + 1, n).second;
            s.add(q, t, sh, 1);
        }
    return s;
}

SchurSeries cc_mu_series(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("cc_mu_series: bad parameters");
    SchurSeries s;
    for (const Partition& sh : enumerate_partitions(n))
        for (const Tableau& S : enumerate_standard(sh)) {
            MuCochargePair cc = mu_cocharge_tableaux(S, k);
            s.add(cc.cc_mu, cc.cc_mu_prime, sh, 1);
        }
    return s;
}

SchurSeries lusztig_stanley_series(int n) {
    if (n < 1) throw std::invalid_argument("lusztig_stanley_series: n must be positive");
    SchurSeries s;
    for (const Partition& sh : enumerate_partitions(n))
        for (const Tableau& T : enumerate_standard(sh)) s.add(descent_data(T).maj, 0, sh, 1);
    return s;
}

SchurSeries ls_cocharge_series(const Partition& mu) {
    int n = mu.size();
    if (n < 1) throw std::invalid_argument("ls_cocharge_series: empty content");
    SchurSeries s;
    for (const Partition& sh : enumerate_partitions(n))
        for (const Tableau& T : enumerate_semistandard_content(sh, mu))
            s.add(cocharge(T.reading_word()).total, 0, sh, 1);
    return s;
}

std::map<std::pair<int, int>, int> series_hilbert(const SchurSeries& s) {
    std::map<Partition, long> fdim;
    std::map<std::pair<int, int>, int> out;
    for (auto& [bd, terms] : s.data) {
        long total = 0;
        for (auto& [nu, m] : terms) {
            auto it = fdim.find(nu);
            if (it == fdim.end())
                it = fdim.emplace(nu, (long)enumerate_standard(nu).size()).first;
            total += m * it->second;
        }
        out[bd] = (int)total;
    }
    return out;
}

namespace {

// Decompose piecewise traces into Schur multiplicities by character
// orthogonality: m_nu = (1/n!) sum_classes |c| chi_nu(c) tr(c).
SchurSeries decompose_traces(int n, const std::vector<std::pair<int, int>>& bids,
                             const std::function<Rat(const Permutation&, int, int)>& tracefn) {
    auto classes = conjugacy_classes(n);
    auto shapes = enumerate_partitions(n);
    const auto& chi = character_table(n);
    Int nfact = factorial(n);

    std::vector<std::vector<Rat>> traces(bids.size(), std::vector<Rat>(classes.size()));
    parallel_for(bids.size() * classes.size(), [&](size_t idx) {
        size_t b = idx / classes.size(), c = idx % classes.size();
        traces[b][c] = tracefn(classes[c].first, bids[b].first, bids[b].second);
    });

    SchurSeries out;
    for (size_t b = 0; b < bids.size(); ++b)
        for (size_t s = 0; s < shapes.size(); ++s) {
            Rat acc = 0;
            for (size_t c = 0; c < classes.size(); ++c)
                acc += Rat(classes[c].second) * chi[s][c] * traces[b][c];
            Rat m = acc / Rat(nfact);
            if (m == 0) continue;
            if (m.get_den() != 1 || m < 0)
                throw std::runtime_error("character decomposition produced multiplicity " +
                                         rat_to_string(m) + " for " + shapes[s].to_string() +
                                         " at bidegree (" + std::to_string(bids[b].first) + "," +
                                         std::to_string(bids[b].second) + ")");
            out.add(bids[b].first, bids[b].second, shapes[s], m.get_num().get_si());
        }
    return out;
}

} // namespace

SchurSeries quotient_frobenius(const IdealSpec& I, int D1, int D2) {
    QuotientEngine& eng = engine_for(I);
    auto dims = eng.hilbert_table(D1, D2);
    std::vector<std::pair<int, int>> bids;
    for (auto& [bd, d] : dims)
        if (d > 0) bids.push_back(bd);
    return decompose_traces(I.n, bids,
                            [&](const Permutation& pi, int d1, int d2) { return eng.trace(pi, d1, d2); });
}

SchurSeries harmonic_frobenius(const HarmonicSpace& H, int n) {
    std::vector<std::pair<int, int>> bids;
    for (auto& [bd, d] : H.hilbert()) bids.push_back(bd);
    return decompose_traces(n, bids,
                            [&](const Permutation& pi, int d1, int d2) { return H.trace(pi, d1, d2); });
}

std::string SeriesCompareReport::verdict() const {
    if (equal) return "equal";
    if (equal_after_swap) return "equal after q<->t swap";
    return "unequal";
}

SeriesCompareReport compare_series(const SchurSeries& a, const SchurSeries& b, bool allow_qt_swap) {
    SeriesCompareReport r;
    r.equal = a == b;
    if (!r.equal && allow_qt_swap) r.equal_after_swap = a.qt_swap() == b;
    if (!r.equal) {
        std::set<std::pair<int, int>> bids;
        for (auto& [bd, t] : a.data) bids.insert(bd);
        for (auto& [bd, t] : b.data) bids.insert(bd);
        for (auto bd : bids) {
            static const std::map<Partition, long> empty;
            auto ita = a.data.find(bd);
            auto itb = b.data.find(bd);
            const auto& ta = ita == a.data.end() ? empty : ita->second;
            const auto& tb = itb == b.data.end() ? empty : itb->second;
            if (ta == tb) continue;
            std::set<Partition> shapes;
            for (auto& [nu, m] : ta) shapes.insert(nu);
            for (auto& [nu, m] : tb) shapes.insert(nu);
            for (auto& nu : shapes) {
                long ma = ta.count(nu) ? ta.at(nu) : 0;
                long mb = tb.count(nu) ? tb.at(nu) : 0;
                if (ma != mb)
                    r.differences.push_back("(" + std::to_string(bd.first) + "," +
                                            std::to_string(bd.second) + ") s" + nu.to_string() + ": " +
                                            std::to_string(ma) + " vs " + std::to_string(mb));
            }
        }
    }
    return r;
}

SchurSeries nabla_e3_fixture() {
    SchurSeries s;
    Partition p3({3}), p21({2, 1}), p111({1, 1, 1});
    s.add(0, 0, p3, 1);
    s.add(1, 0, p21, 1);
    s.add(0, 1, p21, 1);
    s.add(2, 0, p21, 1);
    s.add(1, 1, p21, 1);
    s.add(0, 2, p21, 1);
    s.add(1, 1, p111, 1);
    s.add(3, 0, p111, 1);
    s.add(2, 1, p111, 1);
    s.add(1, 2, p111, 1);
    s.add(0, 3, p111, 1);
    return s;
}

} // namespace ds
