#pragma once

#include <cstddef>
#include <vector>

#include "pinning/graph.hpp"

namespace pinning {

/// Eigenvalues of a symmetric matrix, ascending. lambda(1) is the smallest.
struct Spectrum {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    /// 1-based: lambda(1) <= lambda(2) <= ... <= lambda(size()).
    double lambda(std::size_t i) const { return values.at(i - 1); }
    double smallest() const { return values.front(); }
    double largest() const { return values.back(); }
};

struct EigenPairs {
    Spectrum spectrum;
    Matrix vectors;  // column j belongs to spectrum.values[j]
};

/// All eigenvalues of a dense symmetric matrix. Throws pinning::Error when the
/// input has non-finite entries or is asymmetric by more than 1e-12.
Spectrum eig_sym(const Matrix& m);

/// Eigenvalues together with orthonormal eigenvectors.
EigenPairs eig_sym_vectors(const Matrix& m);

/// Smallest eigenvalue.
double lambda1(const Matrix& m);

enum class StarPin { center, leaf };

/// lambda1 of the star S_n grounded at one node: 1 for the center,
/// (n - sqrt(n^2 - 4)) / 2 for a leaf. Requires n > 2.
double star_grounded_lambda1(std::size_t n, StarPin pinned);

/// Spectrum of K_n grounded at any l nodes: l once, then n with
/// multiplicity n - l - 1. Requires 1 <= l <= n - 1.
Spectrum complete_grounded_spectrum(std::size_t n, std::size_t l);

}  // namespace pinning
