#include "ds/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ds {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts.empty()) return Partition{};
    c.resize(parts[0], 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(c);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Tableau::Tableau(Partition sh, std::vector<std::vector<int>> r)
    : shape(std::move(sh)), rows(std::move(r)) {
    if ((int)rows.size() != shape.length())
        throw std::invalid_argument("tableau row count does not match shape");
    for (int i = 0; i < shape.length(); ++i)
        if ((int)rows[i].size() != shape.parts[i])
            throw std::invalid_argument("tableau row length does not match shape");
}

std::vector<Cell> Tableau::cells_reading_order() const {
    std::vector<Cell> cells;
    for (int r = shape.length(); r >= 1; --r)
        for (int c = 1; c <= shape.parts[r - 1]; ++c) cells.push_back({r, c});
    return cells;
}

Word Tableau::reading_word() const {
    Word w;
    for (const Cell& c : cells_reading_order()) w.push_back(entry(c));
    return w;
}

std::vector<int> Tableau::content() const {
    int mx = 0;
    for (auto& row : rows)
        for (int v : row) mx = std::max(mx, v);
    std::vector<int> m(mx, 0);
    for (auto& row : rows)
        for (int v : row) {
            if (v <= 0) throw std::invalid_argument("tableau entries must be positive");
            m[v - 1]++;
        }
    return m;
}

Cell Tableau::cell_of(int value) const {
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.parts[r - 1]; ++c)
            if (rows[r - 1][c - 1] == value) return {r, c};
    throw std::invalid_argument("value not present in tableau");
}

bool Tableau::is_semistandard() const {
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.parts[r - 1]; ++c) {
            int v = rows[r - 1][c - 1];
            if (v <= 0) return false;
            if (c > 1 && rows[r - 1][c - 2] > v) return false;
            if (r > 1 && (int)rows[r - 2].size() >= c && rows[r - 2][c - 1] >= v) return false;
        }
    return true;
}

bool Tableau::is_bijective() const {
    int n = size();
    std::vector<char> seen(n + 1, 0);
    for (auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = 1;
        }
    return true;
}

bool Tableau::is_standard() const { return is_bijective() && is_semistandard(); }

bool Tableau::operator<(const Tableau& o) const {
    if (!(shape == o.shape)) return shape < o.shape;
    return reading_word() < o.reading_word();
}

std::string Tableau::to_string() const {
    std::string s;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) s += " / ";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) s += " ";
            s += std::to_string(rows[r][c]);
        }
    }
    return s;
}

Tableau Tableau::from_string(const std::string& s) {
    std::vector<std::vector<int>> rows;
    std::vector<int> parts;
    std::string seg;
    std::stringstream ss(s);
    std::vector<std::string> segs;
    {
        std::string cur;
        for (char ch : s) {
            if (ch == '/') {
                segs.push_back(cur);
                cur.clear();
            } else
                cur += ch;
        }
        segs.push_back(cur);
    }
    for (auto& sg : segs) {
        std::stringstream rs(sg);
        std::vector<int> row;
        int v;
        while (rs >> v) row.push_back(v);
        if (row.empty()) throw std::invalid_argument("empty tableau row");
        rows.push_back(row);
        parts.push_back((int)row.size());
    }
    return Tableau(Partition(parts), rows);
}

Tableau Tableau::from_reading_word(const Partition& shape, const Word& w) {
    if ((int)w.size() != shape.size())
        throw std::invalid_argument("word length does not match shape size");
    std::vector<std::vector<int>> rows(shape.length());
    size_t idx = 0;
    for (int r = shape.length(); r >= 1; --r) {
        rows[r - 1].assign(w.begin() + idx, w.begin() + idx + shape.parts[r - 1]);
        idx += shape.parts[r - 1];
    }
    return Tableau(shape, rows);
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // reverse lexicographic: always extend with the largest allowed part first
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Tableau> enumerate_standard(const Partition& shape) {
    int n = shape.size();
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape.parts[r], 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(Tableau(shape, rows));
            return;
        }
        for (int r = 0; r < shape.length(); ++r)
            for (int c = 0; c < shape.parts[r]; ++c) {
                if (rows[r][c] != 0) continue;
                if (c > 0 && rows[r][c - 1] == 0) break;
                if (r > 0 && rows[r - 1][c] == 0) continue;
                rows[r][c] = v;
                self(self, v + 1);
                rows[r][c] = 0;
                break; // only the leftmost empty cell of each row is addable
            }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
    return out;
}

std::vector<Tableau> enumerate_bijective(const Partition& shape) {
    int n = shape.size();
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Tableau> out;
    do {
        out.push_back(Tableau::from_reading_word(shape, w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out; // already sorted by reading word
}

std::vector<Tableau> enumerate_semistandard_content(const Partition& shape,
                                                    const Partition& content) {
    if (content.size() != shape.size())
        throw std::invalid_argument("content size does not match shape size");
    Word w;
    for (int i = 0; i < content.length(); ++i)
        for (int j = 0; j < content.parts[i]; ++j) w.push_back(i + 1);
    std::sort(w.begin(), w.end());
    std::vector<Tableau> out;
    do {
        Tableau T = Tableau::from_reading_word(shape, w);
        if (T.is_semistandard()) out.push_back(T);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Word reading_word(const Tableau& T) { return T.reading_word(); }

Tableau standardize(const Tableau& T) {
    if (!T.is_semistandard()) throw std::invalid_argument("standardize requires a semistandard tableau");
    auto cells = T.cells_reading_order();
    std::vector<std::pair<std::pair<int, int>, Cell>> order; // ((value, reading idx), cell)
    for (size_t i = 0; i < cells.size(); ++i)
        order.push_back({{T.entry(cells[i]), (int)i}, cells[i]});
    std::sort(order.begin(), order.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    Tableau R = T;
    int v = 1;
    for (auto& [key, cell] : order) R.entry(cell) = v++;
    return R;
}

Tableau rsk_insert(const Word& w) {
    if (w.empty()) throw std::invalid_argument("rsk_insert requires a nonempty word");
    std::vector<std::vector<int>> rows;
    for (int a : w) {
        int cur = a;
        size_t r = 0;
        while (true) {
            if (r == rows.size()) {
                rows.push_back({cur});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), cur);
            if (it == row.end()) {
                row.push_back(cur);
                break;
            }
            std::swap(cur, *it);
            ++r;
        }
    }
    std::vector<int> parts;
    for (auto& row : rows) parts.push_back((int)row.size());
    return Tableau(Partition(parts), rows);
}

DescentData descent_data(const Tableau& T) {
    if (!T.is_standard()) throw std::invalid_argument("descent_data requires a standard tableau");
    int n = T.size();
    DescentData d;
    for (int i = 1; i < n; ++i) {
        Cell a = T.cell_of(i), b = T.cell_of(i + 1);
        if (b.col <= a.col) {
            d.descents.insert(i);
            d.maj += i;
        }
    }
    d.des = (int)d.descents.size();
    return d;
}

std::pair<int, int> maj_comaj_range(const Tableau& T, int i, int j) {
    int n = T.size();
    if (i < 1 || j > n || i > j) throw std::invalid_argument("maj_comaj_range: indices out of range");
    DescentData dd = descent_data(T);
    int maj = 0, comaj = 0;
    for (int d : dd.descents)
        if (i <= d && d < j) {
            maj += d;
            comaj += n - d;
        }
    return {maj, comaj};
}

CochargeLabeling cocharge(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cocharge requires a nonempty word");
    int n = (int)w.size();
    int mx = 0;
    for (int v : w) {
        if (v <= 0) throw std::invalid_argument("cocharge: letters must be positive");
        mx = std::max(mx, v);
    }
    std::vector<int> mult(mx + 1, 0);
    for (int v : w) mult[v]++;
    for (int v = 1; v < mx; ++v)
        if (mult[v] < mult[v + 1] || mult[v] == 0)
            throw std::invalid_argument("cocharge requires partition content");

    CochargeLabeling out;
    out.labels.assign(n, -1);
    out.subword_ids.assign(n, 0);
    std::vector<char> used(n, 0);
    int remaining = n, sub = 0;
    while (remaining > 0) {
        ++sub;
        // rightmost unused 1
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (!used[i] && w[i] == 1) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("cocharge: malformed content");
        used[p] = 1;
        out.labels[p] = 0;
        out.subword_ids[p] = sub;
        --remaining;
        int label = 0, v = 1;
        while (true) {
            // cyclic leftward search from p for an unused v+1
            int q = -1;
            for (int step = 1; step < n; ++step) {
                int i = (p - step % n + n) % n;
                if (!used[i] && w[i] == v + 1) {
                    q = i;
                    break;
                }
            }
            if (q < 0) break; // v was the largest available: subword complete
            if (q < p) ++label; // no wrap
            used[q] = 1;
            out.labels[q] = label;
            out.subword_ids[q] = sub;
            --remaining;
            p = q;
            ++v;
        }
    }
    out.total = std::accumulate(out.labels.begin(), out.labels.end(), 0);
    return out;
}

Word flip(const Word& w) {
    int n = (int)w.size();
    std::vector<char> seen(n + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("flip requires a permutation word");
        seen[v] = 1;
    }
    Word out;
    out.reserve(n);
    for (int v : w) out.push_back(n + 1 - v);
    return out;
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

Tableau phi(const Tableau& T) {
    if (!T.is_standard()) throw std::invalid_argument("phi requires a standard tableau");
    return rsk_insert(reverse_word(flip(T.reading_word())));
}

MuCochargePair mu_cocharge_tableaux(const Tableau& S, int k) {
    if (!S.is_standard()) throw std::invalid_argument("mu_cocharge_tableaux requires a standard tableau");
    int n = S.size();
    if (k < 1 || k > n) throw std::invalid_argument("mu_cocharge_tableaux: k out of range");
    Word w = S.reading_word();
    std::vector<int> pos(n + 1, 0); // position in the reading word, 1-based
    for (int i = 0; i < n; ++i) pos[w[i]] = i + 1;

    std::vector<int> lab(n + 1, 0), labp(n + 1, 0);
    // ccTab_mu: start at n-k+1 with 0, go up; increment when not wrapping leftward
    int start = n - k + 1;
    int cur = 0;
    for (int v = start; v < n; ++v) {
        if (pos[v + 1] < pos[v]) ++cur;
        lab[v + 1] = cur;
    }
    // ccTab'_mu: start at n-k+1 with 0, go down; increment when not wrapping rightward
    cur = 0;
    for (int v = start; v > 1; --v) {
        if (pos[v - 1] > pos[v]) ++cur;
        labp[v - 1] = cur;
    }
    labp[start] = 0; // cells of n-k+1..n carry zero in ccTab'

    MuCochargePair out;
    out.cc_tab.resize(S.shape.length());
    out.cc_tab_prime.resize(S.shape.length());
    for (int r = 0; r < S.shape.length(); ++r) {
        out.cc_tab[r].assign(S.shape.parts[r], 0);
        out.cc_tab_prime[r].assign(S.shape.parts[r], 0);
    }
    for (int v = 1; v <= n; ++v) {
        Cell c = S.cell_of(v);
        if (v >= start) out.cc_tab[c.row - 1][c.col - 1] = lab[v];
        if (v <= start) out.cc_tab_prime[c.row - 1][c.col - 1] = labp[v];
        out.cc_mu += (v >= start) ? lab[v] : 0;
        out.cc_mu_prime += (v <= start) ? labp[v] : 0;
    }
    return out;
}

} // namespace ds
