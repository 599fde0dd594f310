#include "molop/batch.hpp"

#include "molop/scheduler.hpp"

#include <atomic>
#include <mutex>

#ifdef MOLOP_HAVE_OPENMP
#include <omp.h>
#endif

namespace molop::batch {

void for_each_index(std::size_t count, Exec exec, const std::function<void(std::size_t)>& fn) {
#ifdef MOLOP_HAVE_OPENMP
    if (exec == Exec::Parallel && count > 1) {
        std::exception_ptr first_error = nullptr;
        std::mutex error_mutex;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            if (failed.load(std::memory_order_relaxed))
                continue;
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
        if (first_error)
            std::rethrow_exception(first_error);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i)
        fn(i);
}

std::vector<CentroidInterval> centroids(std::span<const IT2TrapezoidFOU> fous,
                                        const DomainGrid& grid, Exec exec) {
    std::vector<CentroidInterval> out(fous.size());
    for_each_index(fous.size(), exec, [&](std::size_t i) { out[i] = centroid_ekm(fous[i], grid); });
    return out;
}

std::vector<double> similarity_matrix(std::span<const IT2TrapezoidFOU> a,
                                      std::span<const IT2TrapezoidFOU> b, const DomainGrid& grid,
                                      Exec exec) {
    std::vector<double> out(a.size() * b.size());
    for_each_index(a.size(), exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i * b.size() + j] = jaccard_similarity(a[i], b[j], grid);
    });
    return out;
}

} // namespace molop::batch
