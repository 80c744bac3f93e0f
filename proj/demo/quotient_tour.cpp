// Prints the two point-stabiliser quotient matrices for a given order,
// their spectra, and the structural facts that hold for each: both have
// constant row sums, the full-set quotient is Robinson and centrosymmetric,
// the restricted-set quotient is neither.
//
//   ./quotient_tour [n]     (default n = 8)

#include <cstdlib>
#include <iostream>

#include <ffj/ffj.hpp>

namespace {

void show(const char* title, const ffj::IntMatrix& q) {
    std::cout << title << " (order " << q.rows() << ", row sum "
              << q.row_sum(0) << ")\n";
    for (int i = 0; i < q.rows(); ++i) {
        for (int j = 0; j < q.cols(); ++j)
            std::cout << (j ? " " : "  ") << q(i, j);
        std::cout << '\n';
    }
    const ffj::Spectrum s = ffj::symmetric_eigen(q, false);
    std::cout << "  eigenvalues:";
    for (double x : s.values()) std::cout << ' ' << x;
    std::cout << "\n  mu_2 of the Laplacian form: "
              << ffj::symmetric_eigen(ffj::laplacian(q), false).mu(2) << '\n';

    const ffj::StructureReport rob = ffj::is_robinson(q);
    std::cout << "  " << rob.describe() << '\n';
    const ffj::StructureReport cen = ffj::is_centrosymmetric(q);
    std::cout << "  " << cen.describe() << "\n\n";
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 8;
    if (n < 4 || n > 300) {
        std::cerr << "usage: quotient_tour [n in 4..300]\n";
        return 2;
    }
    show("full-set quotient", ffj::closed_form_Q(n));
    show("restricted-set quotient", ffj::closed_form_Qprime(n));
    return 0;
}
