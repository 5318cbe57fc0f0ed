#include "ds/specht.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "ds/parallel.hpp"

namespace ds {

namespace {

// Permutations of {1..n} acting arbitrarily within each listed value block.
std::vector<Permutation> block_permutations(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> out;
    std::vector<std::vector<std::vector<int>>> per_block; // arrangements per block
    for (auto& blk : blocks) {
        std::vector<int> v = blk;
        std::sort(v.begin(), v.end());
        std::vector<std::vector<int>> arr;
        do {
            arr.push_back(v);
        } while (std::next_permutation(v.begin(), v.end()));
        per_block.push_back(std::move(arr));
    }
    std::vector<size_t> pick(blocks.size(), 0);
    while (true) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        for (size_t b = 0; b < blocks.size(); ++b) {
            std::vector<int> sorted = blocks[b];
            std::sort(sorted.begin(), sorted.end());
            for (size_t i = 0; i < sorted.size(); ++i) im[sorted[i] - 1] = per_block[b][pick[b]][i];
        }
        out.push_back(Permutation(im));
        size_t b = 0;
        while (b < pick.size() && ++pick[b] == per_block[b].size()) pick[b++] = 0;
        if (b == pick.size()) break;
    }
    return out;
}

std::vector<std::vector<int>> column_blocks(const Tableau& T) {
    Partition conj = T.shape.conjugate();
    std::vector<std::vector<int>> cols(conj.length());
    for (int r = 1; r <= T.shape.length(); ++r)
        for (int c = 1; c <= T.shape.parts[r - 1]; ++c) cols[c - 1].push_back(T.entry({r, c}));
    return cols;
}

} // namespace

std::pair<std::vector<Permutation>, std::vector<Permutation>> row_column_groups(const Tableau& T) {
    if (!T.is_bijective()) throw std::invalid_argument("row_column_groups requires a bijective filling");
    int n = T.size();
    std::vector<std::vector<int>> rows = T.rows;
    return {block_permutations(n, rows), block_permutations(n, column_blocks(T))};
}

// Column antisymmetrization is applied to f first, then row symmetrization.
// This is the order that reproduces the reference expansions of F_T^S.
Poly epsilon_apply_serial(const Tableau& T, const Poly& f) {
    if (T.size() != f.n()) throw std::invalid_argument("epsilon_apply: size mismatch");
    auto [R, C] = row_column_groups(T);
    Poly g(f.n());
    for (const Permutation& t : C) {
        Poly h = diagonal_act(t, f);
        g = t.sign() > 0 ? g + h : g - h;
    }
    Poly out(f.n());
    for (const Permutation& s : R) out = out + diagonal_act(s, g);
    return out;
}

Poly epsilon_apply(const Tableau& T, const Poly& f) {
    if (T.size() != f.n()) throw std::invalid_argument("epsilon_apply: size mismatch");
    auto [R, C] = row_column_groups(T);
    Poly g(f.n());
    for (const Permutation& t : C) {
        Poly h = diagonal_act(t, f);
        g = t.sign() > 0 ? g + h : g - h;
    }
    std::vector<Poly> slot(R.size());
    parallel_for(R.size(), [&](size_t i) { slot[i] = diagonal_act(R[i], g); });
    Poly out(f.n());
    for (auto& p : slot) out = out + p;
    return out;
}

Poly specht_poly(const Tableau& T) {
    if (!T.is_bijective()) throw std::invalid_argument("specht_poly requires a bijective filling");
    int n = T.size();
    Poly out = Poly::constant(n, 1);
    for (auto& col : column_blocks(T)) {
        // col lists entries bottom to top; i above j contributes x_i - x_j
        for (size_t lo = 0; lo < col.size(); ++lo)
            for (size_t hi = lo + 1; hi < col.size(); ++hi) {
                Poly diff(n);
                Monomial mi(n), mj(n);
                mi.x[col[hi] - 1] = 1;
                mj.x[col[lo] - 1] = 1;
                diff.add_term(mi, 1);
                diff.add_term(mj, -1);
                out = out * diff;
            }
    }
    return out;
}

Poly higher_specht(const Tableau& T, const std::vector<int>& c, const std::vector<int>& d) {
    return epsilon_apply(T, Poly::monomial(tableau_monomial(T, c, d)));
}

Poly hook_higher_specht(const Tableau& T, const Tableau& S, int k) {
    return epsilon_apply(T, Poly::monomial(mu_monomial(T, S, k)));
}

std::vector<int> cctab_reading(const Tableau& S) {
    if (!S.is_standard()) throw std::invalid_argument("cctab_reading requires a standard tableau");
    CochargeLabeling cc = cocharge(S.reading_word());
    return cc.labels; // labels are aligned to the reading word, i.e. reading order
}

Poly aty_higher_specht(const Tableau& T, const Tableau& S) {
    if (!(T.shape == S.shape)) throw std::invalid_argument("aty_higher_specht: shape mismatch");
    std::vector<int> c = cctab_reading(S);
    std::vector<int> d(c.size(), 0);
    return higher_specht(T, c, d);
}

Poly garnir_apply(const GarnirSpec& spec, const Tableau& T, const Poly& f) {
    Partition conj = T.shape.conjugate();
    if (spec.a < 1 || spec.b <= spec.a || spec.b > conj.length())
        throw std::invalid_argument("garnir_apply: invalid column pair");
    if (spec.t < 1 || spec.t > conj.parts[spec.b - 1])
        throw std::invalid_argument("garnir_apply: invalid row index");
    std::vector<int> vals;
    for (int r = spec.t; r <= conj.parts[spec.a - 1]; ++r) vals.push_back(T.entry({r, spec.a}));
    for (int r = 1; r <= spec.t; ++r) vals.push_back(T.entry({r, spec.b}));
    Poly out(f.n());
    for (const Permutation& w : block_permutations(T.size(), {vals}))
        out = w.sign() > 0 ? out + diagonal_act(w, f) : out - diagonal_act(w, f);
    return out;
}

namespace {

// Sort every column ascending (bottom to top); returns the sign of the sort.
std::pair<Tableau, int> column_sort(const Tableau& T) {
    Tableau R = T;
    Partition conj = T.shape.conjugate();
    int sign = 1;
    for (int c = 1; c <= conj.length(); ++c) {
        std::vector<int> col;
        for (int r = 1; r <= conj.parts[c - 1]; ++r) col.push_back(R.entry({r, c}));
        for (size_t i = 0; i < col.size(); ++i)
            for (size_t j = i + 1; j < col.size(); ++j)
                if (col[i] > col[j]) sign = -sign;
        std::sort(col.begin(), col.end());
        for (int r = 1; r <= conj.parts[c - 1]; ++r) R.entry({r, c}) = col[r - 1];
    }
    return {R, sign};
}

// First row violation in reading order of a column-strict tableau, or nullopt.
bool find_violation(const Tableau& T, GarnirSpec& out) {
    for (const Cell& cell : T.cells_reading_order()) {
        if (cell.col >= T.shape.parts[cell.row - 1]) continue;
        if (T.entry(cell) > T.entry({cell.row, cell.col + 1})) {
            out = {cell.col, cell.col + 1, cell.row};
            return true;
        }
    }
    return false;
}

class Straightener {
public:
    std::map<Tableau, Rat> run(const Tableau& T) {
        auto [S, sign] = column_sort(T);
        std::map<Tableau, Rat> out;
        for (auto& [U, c] : expand(S)) out[U] = c * sign;
        return out;
    }

private:
    std::map<Tableau, std::map<Tableau, Rat>> memo_;

    const std::map<Tableau, Rat>& expand(const Tableau& T) {
        auto it = memo_.find(T);
        if (it != memo_.end()) return it->second;
        std::map<Tableau, Rat> result;
        GarnirSpec g;
        if (!find_violation(T, g)) {
            result[T] = 1;
        } else {
            // Garnir relation at the violation: sum over all arrangements of
            // the affected entries, each re-sorted columnwise.
            Partition conj = T.shape.conjugate();
            std::vector<Cell> cells;
            for (int r = g.t; r <= conj.parts[g.a - 1]; ++r) cells.push_back({r, g.a});
            for (int r = 1; r <= g.t; ++r) cells.push_back({r, g.b});
            std::vector<int> vals;
            for (const Cell& c : cells) vals.push_back(T.entry(c));
            std::vector<int> sorted = vals;
            std::sort(sorted.begin(), sorted.end());
            std::map<Tableau, Rat> relation; // sum sgn * F_U = 0
            std::vector<int> arr = sorted;
            do {
                Tableau U = T;
                std::vector<int> im(T.size());
                std::iota(im.begin(), im.end(), 1);
                for (size_t i = 0; i < cells.size(); ++i) {
                    U.entry(cells[i]) = arr[i];
                    im[vals[i] - 1] = arr[i];
                }
                int sgn = Permutation(im).sign();
                auto [V, s2] = column_sort(U);
                relation[V] += sgn * s2;
            } while (std::next_permutation(arr.begin(), arr.end()));
            for (auto rit = relation.begin(); rit != relation.end();)
                rit = rit->second == 0 ? relation.erase(rit) : std::next(rit);
            Rat self = relation.at(T);
            for (auto& [U, c] : relation) {
                if (U == T || c == 0) continue;
                Rat factor = -c / self;
                for (auto& [W, cw] : expand(U)) {
                    result[W] += factor * cw;
                    if (result[W] == 0) result.erase(W);
                }
            }
        }
        return memo_.emplace(T, std::move(result)).first->second;
    }
};

} // namespace

SpechtExpansion straighten(const Tableau& T) {
    if (!T.is_bijective()) throw std::invalid_argument("straighten requires a bijective filling");
    Straightener st;
    SpechtExpansion e;
    for (auto& [U, c] : st.run(T))
        if (c != 0) e.coeffs[U] = c;
    return e;
}

RationalMatrix rep_matrix(const Partition& lambda, const Permutation& pi) {
    if (lambda.size() != pi.n()) throw std::invalid_argument("rep_matrix: size mismatch");
    std::vector<Tableau> syt = enumerate_standard(lambda);
    std::map<Tableau, int> index;
    for (size_t i = 0; i < syt.size(); ++i) index[syt[i]] = (int)i;
    RationalMatrix M((int)syt.size(), (int)syt.size());
    Straightener st;
    for (size_t j = 0; j < syt.size(); ++j) {
        Tableau piT = syt[j];
        for (auto& row : piT.rows)
            for (int& v : row) v = pi(v);
        for (auto& [U, c] : st.run(piT)) M.at(index.at(U), (int)j) = c;
    }
    return M;
}

const std::vector<std::vector<Rat>>& character_table(int n) {
    static std::map<int, std::vector<std::vector<Rat>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto shapes = enumerate_partitions(n);
    auto classes = conjugacy_classes(n);
    std::vector<std::vector<Rat>> table(shapes.size(), std::vector<Rat>(classes.size(), 0));
    for (size_t s = 0; s < shapes.size(); ++s)
        for (size_t c = 0; c < classes.size(); ++c) {
            RationalMatrix M = rep_matrix(shapes[s], classes[c].first);
            Rat tr = 0;
            for (int i = 0; i < M.rows(); ++i) tr += M.at(i, i);
            table[s][c] = tr;
        }
    return cache.emplace(n, std::move(table)).first->second;
}

Poly psi_shift(const Poly& f, int q) {
    int maxy = 0;
    for (auto& [m, c] : f.terms())
        for (int e : m.y) maxy = std::max(maxy, e);
    if (q < maxy)
        throw std::invalid_argument("psi_shift: q too small, need q >= " + std::to_string(maxy));
    Poly out(f.n());
    for (auto& [m, c] : f.terms()) {
        Monomial r(f.n());
        for (int i = 0; i < f.n(); ++i) r.x[i] = m.x[i] - m.y[i] + q;
        out.add_term(r, c);
    }
    return out;
}

} // namespace ds
