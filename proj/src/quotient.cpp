#include "ds/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "ds/parallel.hpp"

namespace ds {

std::vector<Poly> IdealSpec::all_generators() const {
    std::vector<Poly> out;
    for (const Monomial& m : monomial_generators) out.push_back(Poly::monomial(m));
    for (const Poly& p : poly_generators) out.push_back(p);
    return out;
}

namespace {

void squarefree_products(int n, int count, char varset, std::vector<Monomial>& out) {
    std::vector<int> idx(count);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == count) {
            Monomial m(n);
            for (int i : idx) (varset == 'x' ? m.x[i] : m.y[i]) = 1;
            out.push_back(m);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (count >= 1 && count <= n) rec(rec, 0, 0);
}

bool divides(const Monomial& a, const Monomial& b) { // a | b
    for (int i = 0; i < a.n(); ++i)
        if (b.x[i] < a.x[i] || b.y[i] < a.y[i]) return false;
    return true;
}

} // namespace

IdealSpec ideal_spec(IdealKind kind, int n, int k) {
    if (n < 1) throw std::invalid_argument("ideal_spec: n must be positive");
    IdealSpec I;
    I.n = n;
    I.k = k;
    I.kind = kind;
    switch (kind) {
        case IdealKind::Hook:
        case IdealKind::Pk: {
            if (k < 1 || k > n) throw std::invalid_argument("ideal_spec: k out of range");
            squarefree_products(n, k, 'x', I.monomial_generators);
            squarefree_products(n, n - k + 1, 'y', I.monomial_generators);
            for (int i = 0; i < n; ++i) {
                Monomial m(n);
                m.x[i] = 1;
                m.y[i] = 1;
                I.monomial_generators.push_back(m);
            }
            if (kind == IdealKind::Hook) {
                for (int d = 1; d <= n; ++d) I.poly_generators.push_back(elementary_symmetric(d, 'x', n));
                for (int d = 1; d <= n; ++d) I.poly_generators.push_back(elementary_symmetric(d, 'y', n));
                I.label = "hook(" + std::to_string(n) + "," + std::to_string(k) + ")";
            } else {
                I.label = "pk(" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
            break;
        }
        case IdealKind::Diagonal: {
            for (int s = 1; s <= n; ++s)
                for (int a = s; a >= 0; --a) I.poly_generators.push_back(polarized_power_sum(a, s - a, n));
            I.label = "diagonal(" + std::to_string(n) + ")";
            break;
        }
        case IdealKind::Onevar: {
            for (int d = 1; d <= n; ++d) I.poly_generators.push_back(elementary_symmetric(d, 'x', n));
            I.label = "onevar(" + std::to_string(n) + ")";
            break;
        }
        case IdealKind::Custom:
            throw std::invalid_argument("use custom_ideal for custom generator lists");
    }
    return I;
}

IdealSpec custom_ideal(int n, std::vector<Poly> gens, std::string label) {
    IdealSpec I;
    I.n = n;
    I.kind = IdealKind::Custom;
    I.label = std::move(label);
    for (Poly& g : gens) {
        if (g.is_zero()) continue;
        auto bd = bidegrees_of(g);
        if (bd.size() != 1) throw std::invalid_argument("custom_ideal: generators must be bihomogeneous");
        if (g.terms().size() == 1 && g.terms().begin()->second == 1)
            I.monomial_generators.push_back(g.terms().begin()->first);
        else
            I.poly_generators.push_back(std::move(g));
    }
    return I;
}

std::vector<std::vector<int>> exponent_vectors(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> monomials_of_bidegree(int n, int d1, int d2) {
    std::vector<Monomial> out;
    auto xs = exponent_vectors(n, d1);
    auto ys = exponent_vectors(n, d2);
    out.reserve(xs.size() * ys.size());
    for (auto& xv : xs)
        for (auto& yv : ys) out.push_back(Monomial(xv, yv));
    return out;
}

std::vector<Monomial> QuotientEngine::Piece::standard_monomials() const {
    std::vector<Monomial> out;
    for (size_t i = 0; i < ambient.size(); ++i) {
        if (dead[i]) continue;
        if (ech.has_pivot((int)i)) continue;
        out.push_back(ambient[i]);
    }
    return out;
}

std::unique_ptr<QuotientEngine::Piece> QuotientEngine::build_piece(int d1, int d2) const {
    auto p = std::make_unique<Piece>();
    p->bidegree = {d1, d2};
    p->ambient = monomials_of_bidegree(spec_.n, d1, d2);
    for (size_t i = 0; i < p->ambient.size(); ++i) p->index[p->ambient[i]] = (int)i;
    p->dead.assign(p->ambient.size(), 0);
    for (size_t i = 0; i < p->ambient.size(); ++i)
        for (const Monomial& g : spec_.monomial_generators)
            if (divides(g, p->ambient[i])) {
                p->dead[i] = 1;
                ++p->n_dead;
                break;
            }
    for (const Poly& g : spec_.poly_generators) {
        auto [a, b] = g.terms().begin()->first.bidegree();
        if (a > d1 || b > d2) continue;
        for (const Monomial& m : monomials_of_bidegree(spec_.n, d1 - a, d2 - b)) {
            SparseRow row;
            for (auto& [mg, c] : g.terms()) {
                Monomial prod = mg * m;
                int idx = p->index.at(prod);
                if (p->dead[idx]) continue;
                row.push_back({idx, c});
            }
            if (row.empty()) continue;
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            p->ech.insert(std::move(row));
        }
    }
    return p;
}

const QuotientEngine::Piece& QuotientEngine::piece(int d1, int d2) {
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = pieces_.find({d1, d2});
        if (it != pieces_.end()) return *it->second;
    }
    auto built = build_piece(d1, d2);
    std::lock_guard<std::mutex> lock(mtx_);
    auto [it, inserted] = pieces_.emplace(std::make_pair(d1, d2), std::move(built));
    return *it->second; // first writer wins; identical values either way
}

GradedPieceBasis QuotientEngine::graded_basis(int d1, int d2) {
    const Piece& p = piece(d1, d2);
    GradedPieceBasis out;
    out.bidegree = {d1, d2};
    out.ambient_monomials = p.ambient;
    out.quotient_dim = p.quotient_dim();
    // dead unit rows and echelon rows merge, sorted by pivot, into an RREF
    std::vector<SparseRow> rows;
    for (size_t i = 0; i < p.ambient.size(); ++i)
        if (p.dead[i]) rows.push_back({{(int)i, Rat(1)}});
    for (const SparseRow& r : p.ech.rows()) rows.push_back(r);
    std::sort(rows.begin(), rows.end(),
              [](const SparseRow& a, const SparseRow& b) { return a[0].first < b[0].first; });
    RationalMatrix M((int)rows.size(), (int)p.ambient.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto& [c, v] : rows[i]) M.at((int)i, c) = v;
    out.ideal_rowspace = std::move(M);
    return out;
}

Poly QuotientEngine::normal_form(const Poly& f) {
    if (!f.is_zero() && f.n() != spec_.n) throw std::invalid_argument("normal_form: size mismatch");
    Poly out(spec_.n);
    for (auto [d1, d2] : bidegrees_of(f)) {
        const Piece& p = piece(d1, d2);
        SparseRow row;
        for (auto& [m, c] : f.terms()) {
            if (m.bidegree() != std::make_pair(d1, d2)) continue;
            int idx = p.index.at(m);
            if (p.dead[idx]) continue;
            row.push_back({idx, c});
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        row = p.ech.reduce(std::move(row));
        for (auto& [idx, c] : row) out.add_term(p.ambient[idx], c);
    }
    return out;
}

std::pair<bool, int> QuotientEngine::independent_mod(const std::vector<Poly>& polys) {
    std::vector<Poly> nfs(polys.size());
    parallel_for(polys.size(), [&](size_t i) { nfs[i] = normal_form(polys[i]); });
    std::map<Monomial, int> cols;
    for (const Poly& f : nfs)
        for (auto& [m, c] : f.terms()) cols.emplace(m, 0);
    int next = 0;
    for (auto& [m, idx] : cols) idx = next++;
    EchelonBasis ech;
    int rank = 0;
    for (const Poly& f : nfs) {
        SparseRow row;
        for (auto& [m, c] : f.terms()) row.push_back({cols.at(m), c});
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        if (ech.insert(std::move(row))) ++rank;
    }
    return {rank == (int)polys.size(), rank};
}

Rat QuotientEngine::trace(const Permutation& pi, int d1, int d2) {
    const Piece& p = piece(d1, d2);
    Rat tr = 0;
    for (size_t i = 0; i < p.ambient.size(); ++i) {
        if (p.dead[i] || p.ech.has_pivot((int)i)) continue;
        Monomial img = act_monomial(pi, p.ambient[i]);
        int j = p.index.at(img);
        if (p.dead[j]) continue;
        if (!p.ech.has_pivot(j)) {
            if (j == (int)i) tr += 1;
            continue;
        }
        SparseRow r = p.ech.reduce({{j, Rat(1)}});
        for (auto& [c, v] : r)
            if (c == (int)i) {
                tr += v;
                break;
            }
    }
    return tr;
}

std::map<std::pair<int, int>, int> QuotientEngine::hilbert_table(int D1, int D2) {
    std::vector<std::pair<int, int>> bids;
    for (int a = 0; a <= D1; ++a)
        for (int b = 0; b <= D2; ++b) bids.push_back({a, b});
    std::vector<int> dims(bids.size());
    parallel_for(bids.size(), [&](size_t i) { dims[i] = quotient_dim(bids[i].first, bids[i].second); });
    std::map<std::pair<int, int>, int> out;
    for (size_t i = 0; i < bids.size(); ++i) out[bids[i]] = dims[i];
    return out;
}

std::map<std::pair<int, int>, int> QuotientEngine::hilbert_certified(int safety_cap) {
    if (!spec_.finite_dimensional())
        throw std::invalid_argument("hilbert_certified requires a finite-dimensional quotient");
    // onevar ideals leave the y variables untouched; only the y-degree-0 axis
    // is finite, and that is the axis the classical statements live on.
    bool x_axis_only = spec_.kind == IdealKind::Onevar;
    std::map<std::pair<int, int>, int> out;
    for (int s = 0; s <= safety_cap; ++s) {
        std::vector<std::pair<int, int>> bids;
        if (x_axis_only) bids.push_back({s, 0});
        else
            for (int a = 0; a <= s; ++a) bids.push_back({a, s - a});
        std::vector<int> dims(bids.size());
        parallel_for(bids.size(), [&](size_t i) { dims[i] = quotient_dim(bids[i].first, bids[i].second); });
        bool all_zero = true;
        for (size_t i = 0; i < bids.size(); ++i) {
            if (dims[i] != 0) {
                all_zero = false;
                out[bids[i]] = dims[i];
            }
        }
        if (all_zero && s > 0) return out;
    }
    throw std::runtime_error("hilbert_certified: no zero antidiagonal below the safety cap");
}

QuotientEngine& engine_for(const IdealSpec& spec) {
    static std::map<std::string, std::unique_ptr<QuotientEngine>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(spec.label);
    if (it == cache.end())
        it = cache.emplace(spec.label, std::make_unique<QuotientEngine>(spec)).first;
    return *it->second;
}

GradedPieceBasis graded_ideal_basis(const IdealSpec& I, int d1, int d2) {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("graded_ideal_basis: negative bidegree");
    return engine_for(I).graded_basis(d1, d2);
}
int quotient_dim(const IdealSpec& I, int d1, int d2) { return engine_for(I).quotient_dim(d1, d2); }
std::map<std::pair<int, int>, int> hilbert_table(const IdealSpec& I, int D1, int D2) {
    return engine_for(I).hilbert_table(D1, D2);
}
Poly normal_form(const Poly& f, const IdealSpec& I) { return engine_for(I).normal_form(f); }
std::pair<bool, int> independent_mod(const std::vector<Poly>& polys, const IdealSpec& I) {
    return engine_for(I).independent_mod(polys);
}
Rat quotient_trace(const IdealSpec& I, const Permutation& pi, int d1, int d2) {
    return engine_for(I).trace(pi, d1, d2);
}

std::vector<Poly> apolar_kernel(const Poly& delta, int d1, int d2) {
    if (delta.is_zero()) throw std::invalid_argument("apolar_kernel: delta must be nonzero");
    int n = delta.n();
    auto ambient = monomials_of_bidegree(n, d1, d2);
    std::vector<Poly> images(ambient.size());
    parallel_for(ambient.size(), [&](size_t i) {
        images[i] = apply_diff(Poly::monomial(ambient[i]), delta);
    });
    std::map<Monomial, int> cols;
    for (const Poly& f : images)
        for (auto& [m, c] : f.terms()) cols.emplace(m, 0);
    int next = 0;
    for (auto& [m, idx] : cols) idx = next++;
    RationalMatrix A((int)cols.size(), (int)ambient.size()); // columns = coefficient vectors
    for (size_t i = 0; i < images.size(); ++i)
        for (auto& [m, c] : images[i].terms()) A.at(cols.at(m), (int)i) = c;
    std::vector<Poly> out;
    for (auto& v : A.kernel()) {
        Poly f(n);
        for (size_t i = 0; i < ambient.size(); ++i)
            if (v[i] != 0) f.add_term(ambient[i], v[i]);
        out.push_back(std::move(f));
    }
    return out;
}

HarmonicSpace::HarmonicSpace(const Poly& delta) {
    if (delta.is_zero()) throw std::invalid_argument("HarmonicSpace: delta must be nonzero");
    n_ = delta.n();
    auto bds = bidegrees_of(delta);
    // per-piece echelon over a local monomial index
    struct Work {
        std::map<Monomial, int> index;
        std::vector<Monomial> mons;
        EchelonBasis ech;
    };
    std::map<std::pair<int, int>, Work> work;
    std::map<std::pair<int, int>, std::vector<Poly>> pending;
    for (auto bd : bds) pending[bd].push_back(homogeneous_component(delta, bd.first, bd.second));

    auto insert_poly = [&](std::pair<int, int> bd, const Poly& f) -> bool {
        Work& w = work[bd];
        SparseRow row;
        for (auto& [m, c] : f.terms()) {
            auto it = w.index.find(m);
            if (it == w.index.end()) {
                // columns are discovered on the fly; assign by registration
                // order, which does not affect rank
                it = w.index.emplace(m, (int)w.mons.size()).first;
                w.mons.push_back(m);
            }
            row.push_back({it->second, c});
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return w.ech.insert(std::move(row));
    };

    // process bidegrees in decreasing total degree
    while (!pending.empty()) {
        auto it = std::max_element(pending.begin(), pending.end(),
                                   [](const auto& a, const auto& b) {
                                       return a.first.first + a.first.second <
                                              b.first.first + b.first.second;
                                   });
        auto bd = it->first;
        std::vector<Poly> batch = std::move(it->second);
        pending.erase(it);
        std::vector<Poly> added;
        for (const Poly& f : batch)
            if (insert_poly(bd, f)) added.push_back(f);
        if (added.empty() && work.find(bd) == work.end()) continue;
        // derive
        for (const Poly& f : added) {
            for (int i = 0; i < n_; ++i)
                for (int isY = 0; isY < 2; ++isY) {
                    Monomial d(n_);
                    (isY ? d.y[i] : d.x[i]) = 1;
                    Poly g = apply_diff(Poly::monomial(d), f);
                    if (g.is_zero()) continue;
                    auto gb = std::make_pair(bd.first - (isY ? 0 : 1), bd.second - (isY ? 1 : 0));
                    pending[gb].push_back(std::move(g));
                }
        }
        // Re-queue nothing for this bidegree: derivatives of everything added
        // at bd were queued above, and bd has strictly larger total degree
        // than anything still pending, so it is finished.
        Work& w = work[bd];
        if (w.ech.rank() == 0) continue;
        PieceBasis pb;
        for (const SparseRow& r : w.ech.rows()) {
            Poly f(n_);
            for (auto& [c, v] : r) f.add_term(w.mons[c], v);
            pb.pivots.push_back(w.mons[r[0].first]);
            pb.polys.push_back(std::move(f));
        }
        total_dim_ += (int)pb.polys.size();
        pieces_.emplace(bd, std::move(pb));
    }
}

std::map<std::pair<int, int>, int> HarmonicSpace::hilbert() const {
    std::map<std::pair<int, int>, int> out;
    for (auto& [bd, pb] : pieces_) out[bd] = (int)pb.polys.size();
    return out;
}

const std::vector<Poly>& HarmonicSpace::piece_basis(int d1, int d2) const {
    static const std::vector<Poly> empty;
    auto it = pieces_.find({d1, d2});
    return it == pieces_.end() ? empty : it->second.polys;
}

Rat HarmonicSpace::trace(const Permutation& pi, int d1, int d2) const {
    auto it = pieces_.find({d1, d2});
    if (it == pieces_.end()) return 0;
    const PieceBasis& pb = it->second;
    // rows are reduced echelon: the coordinate of v along row i is v[pivot_i]
    Rat tr = 0;
    for (size_t i = 0; i < pb.polys.size(); ++i) {
        Monomial target = pb.pivots[i];
        Permutation inv = pi.inverse();
        // coefficient of target in pi . poly = coefficient of pi^{-1} . target in poly
        tr += coefficient_of(pb.polys[i], act_monomial(inv, target));
    }
    return tr;
}

int harmonic_dim(const Poly& delta) { return HarmonicSpace(delta).dim(); }

} // namespace ds
