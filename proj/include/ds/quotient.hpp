#ifndef DS_QUOTIENT_HPP
#define DS_QUOTIENT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ds/linalg.hpp"
#include "ds/poly.hpp"

namespace ds {

enum class IdealKind { Hook, Pk, Diagonal, Onevar, Custom };

// Homogeneous generator list; monomial generators are split out so graded
// pieces can prune dead monomials before any elimination.
struct IdealSpec {
    int n = 0;
    int k = 0; // hook/pk parameter
    IdealKind kind = IdealKind::Custom;
    std::string label;
    std::vector<Monomial> monomial_generators;
    std::vector<Poly> poly_generators;

    std::vector<Poly> all_generators() const;
    bool finite_dimensional() const { return kind != IdealKind::Pk; }
};

IdealSpec ideal_spec(IdealKind kind, int n, int k = 0);
IdealSpec custom_ideal(int n, std::vector<Poly> gens, std::string label);

struct GradedPieceBasis {
    std::pair<int, int> bidegree;
    std::vector<Monomial> ambient_monomials;
    RationalMatrix ideal_rowspace; // reduced row echelon form
    int quotient_dim = 0;
};

std::vector<std::vector<int>> exponent_vectors(int n, int d); // lex ascending
std::vector<Monomial> monomials_of_bidegree(int n, int d1, int d2);

// Per-ideal engine with a write-once per-bidegree memo; pieces may be
// computed concurrently.
class QuotientEngine {
public:
    explicit QuotientEngine(IdealSpec spec) : spec_(std::move(spec)) {}

    struct Piece {
        std::pair<int, int> bidegree;
        std::vector<Monomial> ambient;
        std::map<Monomial, int> index;
        std::vector<char> dead; // killed by a monomial generator
        int n_dead = 0;
        EchelonBasis ech; // rows of the non-monomial generator span, over surviving columns
        int rank() const { return n_dead + ech.rank(); }
        int quotient_dim() const { return (int)ambient.size() - rank(); }
        std::vector<Monomial> standard_monomials() const;
    };

    const IdealSpec& spec() const { return spec_; }
    const Piece& piece(int d1, int d2);
    int quotient_dim(int d1, int d2) { return piece(d1, d2).quotient_dim(); }

    GradedPieceBasis graded_basis(int d1, int d2);
    Poly normal_form(const Poly& f);
    bool contains(const Poly& f) { return normal_form(f).is_zero(); }
    std::pair<bool, int> independent_mod(const std::vector<Poly>& polys);
    Rat trace(const Permutation& pi, int d1, int d2);

    // Rectangle [0,D1] x [0,D2].
    std::map<std::pair<int, int>, int> hilbert_table(int D1, int D2);
    // Scans antidiagonals until one is entirely zero (finite quotients only).
    std::map<std::pair<int, int>, int> hilbert_certified(int safety_cap = 64);

private:
    IdealSpec spec_;
    std::map<std::pair<int, int>, std::unique_ptr<Piece>> pieces_;
    std::mutex mtx_;
    std::unique_ptr<Piece> build_piece(int d1, int d2) const;
};

// Process-wide engine cache keyed by ideal label.
QuotientEngine& engine_for(const IdealSpec& spec);

// Convenience one-shot wrappers over the cached engine.
GradedPieceBasis graded_ideal_basis(const IdealSpec& I, int d1, int d2);
int quotient_dim(const IdealSpec& I, int d1, int d2);
std::map<std::pair<int, int>, int> hilbert_table(const IdealSpec& I, int D1, int D2);
Poly normal_form(const Poly& f, const IdealSpec& I);
std::pair<bool, int> independent_mod(const std::vector<Poly>& polys, const IdealSpec& I);
Rat quotient_trace(const IdealSpec& I, const Permutation& pi, int d1, int d2);

// Apolar machinery for Delta_mu.
std::vector<Poly> apolar_kernel(const Poly& delta, int d1, int d2);

// Span of all iterated partial derivatives of delta, closed bidegree by
// bidegree; basis rows kept in reduced echelon form per piece.
class HarmonicSpace {
public:
    explicit HarmonicSpace(const Poly& delta);

    int dim() const { return total_dim_; }
    std::map<std::pair<int, int>, int> hilbert() const;
    const std::vector<Poly>& piece_basis(int d1, int d2) const;
    // Trace of pi acting on the (d1,d2) piece.
    Rat trace(const Permutation& pi, int d1, int d2) const;

private:
    struct PieceBasis {
        std::vector<Poly> polys;     // reduced echelon rows
        std::vector<Monomial> pivots; // pivot monomial of each row
    };
    int n_ = 0;
    int total_dim_ = 0;
    std::map<std::pair<int, int>, PieceBasis> pieces_;
};

int harmonic_dim(const Poly& delta);

} // namespace ds

#endif
