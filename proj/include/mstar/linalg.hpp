#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mstar/scalar.hpp"

namespace mstar {

/// Exact linear algebra over Q(i). Maps are given column-wise: column k is
/// the image of the k-th unit vector, so all columns share one length.
std::size_t rank(const std::vector<Vec>& vectors);

/// Greedy left-to-right choice of indices whose vectors form a basis of the span.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors);

/// Basis of the kernel of the map with the given columns, in reduced form
/// (each basis vector has a 1 at its own free coordinate).
std::vector<Vec> nullspace(const std::vector<Vec>& columns, std::size_t codomain_dim);

/// Coefficients expressing `target` in the span of `vectors`, if possible.
/// With dependent inputs the free coefficients are set to zero.
std::optional<Vec> solve_in_span(const std::vector<Vec>& vectors, const Vec& target);

}  // namespace mstar
