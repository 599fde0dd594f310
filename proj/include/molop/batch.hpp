#pragma once

#include "molop/fou.hpp"
#include "molop/reduction.hpp"

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

namespace molop {

enum class Exec;

namespace batch {

/// Runs fn(0..count-1), optionally across OpenMP threads. Every index writes
/// its own slot, so serial and parallel execution produce identical results.
/// The first exception thrown by any index is rethrown on the caller thread.
void for_each_index(std::size_t count, Exec exec, const std::function<void(std::size_t)>& fn);

/// Centroids of many FOUs on a shared grid.
std::vector<CentroidInterval> centroids(std::span<const IT2TrapezoidFOU> fous,
                                        const DomainGrid& grid, Exec exec);

/// Row-major |a| x |b| Jaccard similarity matrix.
std::vector<double> similarity_matrix(std::span<const IT2TrapezoidFOU> a,
                                      std::span<const IT2TrapezoidFOU> b, const DomainGrid& grid,
                                      Exec exec);

} // namespace batch
} // namespace molop
