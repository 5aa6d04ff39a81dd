#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace twk {

// All complex roots of p (with multiplicity, in no particular grouping) as
// companion-matrix eigenvalues, sorted by (re, im) for determinism.
std::vector<std::complex<double>> float_roots(const CPoly& p);

// Best rational approximation to x with denominator at most max_den
// (continued-fraction convergents).
Rational rationalize(double x, long max_den);

struct RootSplit {
  std::vector<GaussianRational> roots;  // exactly verified roots, one each
  QPoly residual;                       // monic; no Gaussian-rational root was found in it
};

// Splits off every Gaussian-rational root of a monic squarefree polynomial
// that the search can certify. Candidates come from float roots rationalized
// by continued fractions plus a small exhaustive low-height sweep; a
// candidate is accepted only when exact evaluation vanishes, so every
// reported root is a certificate.
RootSplit extract_rational_roots(const QPoly& squarefree_monic);

// Greedy grouping of approximate roots into (representative, count) clusters;
// the float backend's stand-in for multiplicity detection.
std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    std::vector<std::complex<double>> roots, double tol = 1e-7);

}  // namespace twk
