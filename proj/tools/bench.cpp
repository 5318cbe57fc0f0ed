#include <chrono>
#include <iostream>

#include "ds/parallel.hpp"
#include "ds/quotient.hpp"
#include "ds/specht.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 6;
    int k = argc > 2 ? std::atoi(argv[2]) : 3;
    std::cout << "benchmark: serial reference vs parallel kernels, n=" << n << " k=" << k << "\n";

    // symmetrizer kernel on the largest-column shape of size n
    ds::Partition lambda = ds::enumerate_partitions(n)[n > 1 ? 1 : 0]; // (n-1,1)
    ds::Tableau T = ds::enumerate_standard(lambda).front();
    ds::Monomial m(n);
    for (int i = 0; i < n; ++i) m.x[i] = i;
    ds::Poly f = ds::Poly::monomial(m);

    auto t0 = Clock::now();
    ds::Poly serial = ds::epsilon_apply_serial(T, f);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    ds::Poly parallel = ds::epsilon_apply(T, f);
    double tp = seconds_since(t0);

    if (!(serial == parallel)) {
        std::cerr << "MISMATCH: symmetrizer kernels disagree\n";
        return 1;
    }
    std::cout << "  symmetrizer " << lambda.to_string() << ": serial " << ts << "s, parallel "
              << tp << "s (x" << (tp > 0 ? ts / tp : 0) << ")\n";

    // graded-piece evaluation across a Hilbert window
    ds::IdealSpec I = ds::ideal_spec(ds::IdealKind::Hook, n, k);
    int D = n * (n - 1) / 2;

    ds::set_worker_count(1);
    ds::QuotientEngine serial_engine(I);
    t0 = Clock::now();
    auto dims_serial = serial_engine.hilbert_table(D, 2);
    ts = seconds_since(t0);

    ds::set_worker_count(0);
    ds::QuotientEngine parallel_engine(I);
    t0 = Clock::now();
    auto dims_parallel = parallel_engine.hilbert_table(D, 2);
    tp = seconds_since(t0);

    if (dims_serial != dims_parallel) {
        std::cerr << "MISMATCH: Hilbert tables disagree\n";
        return 1;
    }
    std::cout << "  hilbert window " << D << "x2 of " << I.label << ": serial " << ts
              << "s, parallel " << tp << "s (x" << (tp > 0 ? ts / tp : 0) << ")\n";
    return 0;
}
