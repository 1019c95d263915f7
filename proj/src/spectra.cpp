#include "pinning/spectra.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "pinning/error.hpp"

namespace pinning {

namespace {

constexpr double kSymmetryTol = 1e-12;

void check_symmetric(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", not square");
    if (m.rows() == 0) throw Error("matrix is empty");
    if (!m.allFinite()) throw Error("matrix has non-finite entries");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > kSymmetryTol)
                throw Error("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

Spectrum to_spectrum(const Eigen::VectorXd& v) {
    return {std::vector<double>(v.data(), v.data() + v.size())};
}

}  // namespace

Spectrum eig_sym(const Matrix& m) {
    check_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
    return to_spectrum(solver.eigenvalues());
}

EigenPairs eig_sym_vectors(const Matrix& m) {
    check_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
    return {to_spectrum(solver.eigenvalues()), solver.eigenvectors()};
}

double lambda1(const Matrix& m) { return eig_sym(m).smallest(); }

double star_grounded_lambda1(std::size_t n, StarPin pinned) {
    if (n <= 2) throw Error("star needs more than 2 nodes, got " + std::to_string(n));
    if (pinned == StarPin::center) return 1.0;
    const double nn = static_cast<double>(n);
    // (n - sqrt(n^2-4))/2 rewritten as 2/(n + sqrt(n^2-4)) to avoid cancellation
    return 2.0 / (nn + std::sqrt(nn * nn - 4.0));
}

Spectrum complete_grounded_spectrum(std::size_t n, std::size_t l) {
    if (l < 1 || l >= n)
        throw Error("pin count " + std::to_string(l) + " outside 1.." + std::to_string(n == 0 ? 0 : n - 1));
    Spectrum s;
    s.values.assign(n - l, static_cast<double>(n));
    s.values.front() = static_cast<double>(l);
    return s;
}

}  // namespace pinning
