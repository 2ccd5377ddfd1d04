// Times the determinant strategies on the twisted Fox matrices of two
// reference specs and checks that parallel and serial evaluation agree.
#include <chrono>
#include <cstdio>
#include <functional>

#include "slicesieve/obstruct.hpp"

using namespace slicesieve;

namespace {

double time_of(const std::function<LaurentPoly()>& f, LaurentPoly& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench(long n, long m, long p, bool with_cofactor) {
    PretzelKnot knot(n, m, +1);
    PolyMatrix mat = twisted_fox_matrix(knot, CharacterData{p, {0, 2}, 1});
    std::printf("%s, p = %ld: %zu x %zu\n", knot.name().c_str(), p, mat.rows(), mat.cols());

    LaurentPoly parallel, serial, bareiss, cofactor;
    double tp = time_of([&] { return mat_det(mat, DetStrategy::EvalInterp); }, parallel);
    std::printf("  eval-interp (parallel) %8.3fs\n", tp);
    double ts = time_of([&] { return mat_det_eval_serial(mat); }, serial);
    std::printf("  eval-interp (serial)   %8.3fs\n", ts);
    double tb = time_of([&] { return mat_det(mat, DetStrategy::Bareiss); }, bareiss);
    std::printf("  bareiss                %8.3fs\n", tb);
    if (with_cofactor) {
        double tc = time_of([&] { return mat_det(mat, DetStrategy::Cofactor); }, cofactor);
        std::printf("  cofactor               %8.3fs\n", tc);
        if (cofactor != parallel) {
            std::printf("  MISMATCH: cofactor disagrees\n");
            std::exit(1);
        }
    }
    if (serial != parallel || bareiss != parallel) {
        std::printf("  MISMATCH between strategies\n");
        std::exit(1);
    }
    std::printf("  all strategies agree\n");
}

}  // namespace

int main() {
    bench(2, 3, 3, true);
    bench(6, 11, 11, false);
    return 0;
}
