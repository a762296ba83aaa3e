#pragma once

#include <gmpxx.h>

#include "spinblocks/config.hpp"
#include "spinblocks/partition.hpp"

namespace spinblocks {

/// Arbitrary-precision signed integer. All degrees and group orders use it.
using ExactInteger = mpz_class;

ExactInteger factorial(int n);

/// 2-adic valuation of n!, computed as n minus the binary digit sum of n.
int val2_factorial(int n);

/// Largest e with 2^e dividing x. Throws std::invalid_argument for x = 0.
int val2(const ExactInteger& x);

/// f^lambda = n! / prod(hooks). Throws std::logic_error if the hook product
/// fails to divide n!.
ExactInteger hook_degree(const Partition& lambda);

/// Number of standard Young tableaux, by recursive removal of corner cells.
/// Throws std::domain_error above config::syt_cap.
ExactInteger syt_count(const Partition& lambda);

/// Degree of the spin character labelled by mu (Schur's formula):
///   2^floor((n-m)/2) * n!/(mu_1!...mu_m!) * prod_{i<j} (mu_i-mu_j)/(mu_i+mu_j).
/// The product is formed as a single fraction and must reduce to a positive
/// integer; anything else throws std::logic_error.
ExactInteger spin_degree(const BarPartition& mu);

}  // namespace spinblocks
