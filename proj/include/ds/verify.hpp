#ifndef DS_VERIFY_HPP
#define DS_VERIFY_HPP

#include <string>
#include <vector>

#include "ds/frobenius.hpp"

namespace ds {

struct VerifyResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& msg) {
        pass = false;
        notes.push_back(msg);
    }
    void note(const std::string& msg) { notes.push_back(msg); }
};

Partition hook_shape(int n, int k);

// phi is a shape-preserving bijection sending maj to cocharge, des to des.
VerifyResult verify_bijection(int n);
// cc_mu = comaj_{n-k+1,n} and cc'_mu = maj_{1,n-k+1} over SYT(n), all k.
VerifyResult verify_degrees(int n);
// The n! polynomials F_T^S are independent mod hook(n,k) and the quotient
// has total dimension n!.
VerifyResult verify_hook_basis(int n, int k);
// Bounded window check that {F_T^S e_nu^(k)} matches the pk(n,k) quotient
// piece by piece and is independent; window: total degree <= bound.
VerifyResult verify_pk_basis(int n, int k, int bound = -1);
// Diagonal coinvariants: dimensions, explicit bases (n=2,3), character match.
VerifyResult verify_dr(int n);
// Hook ideal pieces = apolar kernel pieces of Delta_mu (d1+d2 <= 4) and
// harmonic_dim = n!, for all k.
VerifyResult verify_apolar(int n);
// psi_shift recovers the one-variable construction for all pairs, all k.
VerifyResult verify_psi(int n);
// Worked-example goldens.
VerifyResult verify_paper_examples();

// Frobenius agreement for hook(n,k): quotient series vs the two printed
// formulas under the recorded q/t orientation; Hilbert consistency.
VerifyResult verify_frobenius_hooks(int n);
// onevar(n): Hilbert = q-factorial, series = Lusztig-Stanley.
VerifyResult verify_classical(int n);

} // namespace ds

#endif
