#include "ds/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ds {

Monomial::Monomial(std::vector<int> xe, std::vector<int> ye) : x(std::move(xe)), y(std::move(ye)) {
    if (x.size() != y.size()) throw std::invalid_argument("monomial exponent vectors must have equal length");
    for (int e : x)
        if (e < 0) throw std::invalid_argument("negative exponent");
    for (int e : y)
        if (e < 0) throw std::invalid_argument("negative exponent");
}

int Monomial::xdeg() const { return std::accumulate(x.begin(), x.end(), 0); }
int Monomial::ydeg() const { return std::accumulate(y.begin(), y.end(), 0); }

Monomial Monomial::operator*(const Monomial& o) const {
    if (n() != o.n()) throw std::invalid_argument("monomial size mismatch");
    Monomial r = *this;
    for (int i = 0; i < n(); ++i) {
        r.x[i] += o.x[i];
        r.y[i] += o.y[i];
    }
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = xdeg() + ydeg(), db = o.xdeg() + o.ydeg();
    if (da != db) return da < db;
    if (x != o.x) return x < o.x;
    return y < o.y;
}

std::string Monomial::to_string() const {
    std::string s;
    auto emit = [&](char v, int i, int e) {
        if (e == 0) return;
        if (!s.empty()) s += " ";
        s += v;
        s += std::to_string(i + 1);
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (int i = 0; i < n(); ++i) emit('x', i, x[i]);
    for (int i = 0; i < n(); ++i) emit('y', i, y[i]);
    return s.empty() ? "1" : s;
}

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<char> seen(images.size() + 1, 0);
    for (int v : images) {
        if (v < 1 || v > (int)images.size() || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(im);
}

Permutation Permutation::compose(const Permutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> im(n());
    for (int i = 1; i <= n(); ++i) im[i - 1] = (*this)(o(i));
    return Permutation(im);
}

Permutation Permutation::inverse() const {
    std::vector<int> im(n());
    for (int i = 1; i <= n(); ++i) im[(*this)(i)-1] = i;
    return Permutation(im);
}

int Permutation::sign() const {
    std::vector<char> vis(n() + 1, 0);
    int s = 1;
    for (int i = 1; i <= n(); ++i) {
        if (vis[i]) continue;
        int len = 0, j = i;
        while (!vis[j]) {
            vis[j] = 1;
            j = (*this)(j);
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Partition Permutation::cycle_type() const {
    std::vector<char> vis(n() + 1, 0);
    std::vector<int> lens;
    for (int i = 1; i <= n(); ++i) {
        if (vis[i]) continue;
        int len = 0, j = i;
        while (!vis[j]) {
            vis[j] = 1;
            j = (*this)(j);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(lens);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<std::pair<Permutation, Int>> conjugacy_classes(int n) {
    std::vector<std::pair<Permutation, Int>> out;
    for (const Partition& mu : enumerate_partitions(n)) {
        // representative: consecutive cycles
        std::vector<int> im(n);
        int base = 0;
        for (int p : mu.parts) {
            for (int i = 0; i < p; ++i) im[base + i] = base + 1 + (i + 1) % p;
            base += p;
        }
        // class size n! / z_mu, z_mu = prod(part) * prod(mult!)
        Int z = 1;
        std::map<int, int> mult;
        for (int p : mu.parts) {
            z *= p;
            mult[p]++;
        }
        for (auto& [p, m] : mult) z *= factorial(m);
        Int size = factorial(n) / z;
        out.push_back({Permutation(im), size});
    }
    return out;
}

Poly Poly::constant(int n, const Rat& c) {
    Poly p(n);
    p.add_term(Monomial(n), c);
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
    Poly p(m.n());
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (m.n() != n_) throw std::invalid_argument("monomial size mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial size mismatch");
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial size mismatch");
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial size mismatch");
    Poly r(n_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(n_);
    if (c == 0) return r;
    for (auto& [m, co] : terms_) r.add_term(m, co * c);
    return r;
}

Poly Poly::operator-() const { return (*this) * Rat(-1); }

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
        std::string cs = rat_to_string(c);
        if (!s.empty()) {
            if (cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else
                s += " + ";
        }
        std::string ms = m.to_string();
        if (ms == "1")
            s += cs;
        else if (cs == "1")
            s += ms;
        else if (cs == "-1")
            s += "-" + ms;
        else
            s += cs + " " + ms;
    }
    return s;
}

Monomial act_monomial(const Permutation& pi, const Monomial& m) {
    Monomial r(m.n());
    for (int i = 1; i <= m.n(); ++i) {
        r.x[pi(i) - 1] = m.x[i - 1];
        r.y[pi(i) - 1] = m.y[i - 1];
    }
    return r;
}

Poly diagonal_act(const Permutation& pi, const Poly& f) {
    if (pi.n() != f.n()) throw std::invalid_argument("diagonal_act: size mismatch");
    Poly r(f.n());
    for (auto& [m, c] : f.terms()) r.add_term(act_monomial(pi, m), c);
    return r;
}

Poly elementary_symmetric(int d, char varset, int n) {
    if (d < 0) throw std::invalid_argument("elementary_symmetric: d < 0");
    Poly r(n);
    if (d > n) return r; // zero polynomial
    std::vector<int> idx(d);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == d) {
            Monomial m(n);
            for (int i : idx) {
                if (varset == 'x')
                    m.x[i] = 1;
                else
                    m.y[i] = 1;
            }
            r.add_term(m, 1);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (d == 0) {
        r.add_term(Monomial(n), 1);
    } else {
        rec(rec, 0, 0);
    }
    return r;
}

Poly polarized_power_sum(int a, int b, int n) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("polarized_power_sum requires a,b >= 0 and a+b >= 1");
    Poly r(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(n);
        m.x[i] = a;
        m.y[i] = b;
        r.add_term(m, 1);
    }
    return r;
}

Monomial tableau_monomial(const Tableau& T, const std::vector<int>& c, const std::vector<int>& d) {
    int n = T.size();
    if ((int)c.size() != n || (int)d.size() != n)
        throw std::invalid_argument("tableau_monomial: exponent list length mismatch");
    if (!T.is_bijective()) throw std::invalid_argument("tableau_monomial requires a bijective filling");
    Monomial m(n);
    auto cells = T.cells_reading_order();
    for (int i = 0; i < n; ++i) {
        int v = T.entry(cells[i]);
        m.x[v - 1] += c[i];
        m.y[v - 1] += d[i];
    }
    return m;
}

Monomial mu_monomial(const Tableau& T, const Tableau& S, int k) {
    if (!(T.shape == S.shape)) throw std::invalid_argument("mu_monomial: shape mismatch");
    MuCochargePair cc = mu_cocharge_tableaux(S, k);
    auto cells = S.cells_reading_order();
    std::vector<int> c, d;
    for (const Cell& b : cells) {
        c.push_back(cc.cc_tab[b.row - 1][b.col - 1]);
        d.push_back(cc.cc_tab_prime[b.row - 1][b.col - 1]);
    }
    return tableau_monomial(T, c, d);
}

Poly delta_mu(const Partition& mu) {
    int n = mu.size();
    if (n < 1) throw std::invalid_argument("delta_mu requires a nonempty partition");
    // cell coordinates (row-1, col-1), cells listed bottom row first; the x
    // exponent tracks the row so single-column shapes give the x-Vandermonde
    std::vector<std::pair<int, int>> ab;
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = 1; c <= mu.parts[r - 1]; ++c) ab.push_back({r - 1, c - 1});
    // Leibniz expansion of det(x_i^{a_j} y_i^{b_j}); n <= 8 at desk scale
    Poly det(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sgn = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sgn = -sgn;
        Monomial m(n);
        for (int i = 0; i < n; ++i) {
            m.x[i] = ab[perm[i]].first;
            m.y[i] = ab[perm[i]].second;
        }
        det.add_term(m, sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Poly apply_diff(const Poly& f, const Poly& g) {
    if (f.n() != g.n()) throw std::invalid_argument("apply_diff: size mismatch");
    int n = f.n();
    Poly r(n);
    for (auto& [mf, cf] : f.terms()) {
        for (auto& [mg, cg] : g.terms()) {
            Rat coeff = cf * cg;
            Monomial m(n);
            bool dead = false;
            for (int i = 0; i < n && !dead; ++i) {
                if (mg.x[i] < mf.x[i] || mg.y[i] < mf.y[i]) {
                    dead = true;
                    break;
                }
                m.x[i] = mg.x[i] - mf.x[i];
                m.y[i] = mg.y[i] - mf.y[i];
                for (int e = mg.x[i]; e > m.x[i]; --e) coeff *= e;
                for (int e = mg.y[i]; e > m.y[i]; --e) coeff *= e;
            }
            if (!dead) r.add_term(m, coeff);
        }
    }
    return r;
}

Rat diff_pairing(const Poly& f, const Poly& g) {
    return coefficient_of(apply_diff(f, g), Monomial(f.n()));
}

Poly hook_e_single(int d, int k, int n) {
    if (d < 1 || d > n) throw std::invalid_argument("hook_e: d out of range");
    if (k < 1 || k > n) throw std::invalid_argument("hook_e: k out of range");
    return d <= k - 1 ? elementary_symmetric(d, 'x', n) : elementary_symmetric(n - d, 'y', n);
}

Poly hook_e(const Partition& nu, int k, int n) {
    Poly r = Poly::constant(n, 1);
    for (int p : nu.parts) r = r * hook_e_single(p, k, n);
    return r;
}

Poly homogeneous_component(const Poly& f, int d1, int d2) {
    Poly r(f.n());
    for (auto& [m, c] : f.terms())
        if (m.xdeg() == d1 && m.ydeg() == d2) r.add_term(m, c);
    return r;
}

Rat coefficient_of(const Poly& f, const Monomial& m) {
    auto it = f.terms().find(m);
    return it == f.terms().end() ? Rat(0) : it->second;
}

std::vector<std::pair<int, int>> bidegrees_of(const Poly& f) {
    std::set<std::pair<int, int>> s;
    for (auto& [m, c] : f.terms()) s.insert(m.bidegree());
    return {s.begin(), s.end()};
}

std::string poly_to_json(const Poly& f) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto& [m, c] : f.terms()) {
        if (!first) os << ",";
        first = false;
        os << "{\"coeff\":\"" << rat_to_string(c) << "\",\"x\":[";
        for (int i = 0; i < m.n(); ++i) os << (i ? "," : "") << m.x[i];
        os << "],\"y\":[";
        for (int i = 0; i < m.n(); ++i) os << (i ? "," : "") << m.y[i];
        os << "]}";
    }
    os << "]";
    return os.str();
}

} // namespace ds
