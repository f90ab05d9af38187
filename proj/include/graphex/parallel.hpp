#ifndef GRAPHEX_PARALLEL_HPP
#define GRAPHEX_PARALLEL_HPP

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphex {

enum class Schedule { Serial, Parallel };

/// A replicate threw; carries the lowest failing replicate index.
class ReplicateFailure : public std::runtime_error {
public:
    ReplicateFailure(std::size_t replicate, const std::string& what)
        : std::runtime_error("replicate " + std::to_string(replicate) + " failed: " + what),
          replicate_(replicate),
          cause_(what) {}

    std::size_t replicate() const noexcept { return replicate_; }
    /// Message of the original exception.
    const std::string& cause() const noexcept { return cause_; }

private:
    std::size_t replicate_;
    std::string cause_;
};

/// Worker count used by Schedule::Parallel; 0 means the OpenMP default.
void set_thread_cap(int threads);
int thread_cap();
int available_threads();

/// Sum with pairwise (tree) reduction in index order; result depends only
/// on the values, never on the schedule that produced them.
double pairwise_sum(std::span<const double> values);

namespace detail {
int omp_threads_for(int cap);
}

/// Evaluates task(i) for i in [0, n) into a preallocated vector. Each task
/// must derive its randomness from i alone, so both schedules return
/// identical results. Exceptions are caught per replicate; the lowest
/// failing index is rethrown as ReplicateFailure.
template <class T, class Task>
std::vector<T> run_replicates(std::size_t n, const Task& task, Schedule schedule = Schedule::Parallel) {
    std::vector<T> out(n);
    std::vector<std::optional<std::string>> errors(n);
    auto one = [&](std::size_t i) {
        try {
            out[i] = task(i);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        } catch (...) {
            errors[i] = "unknown exception";
        }
    };
    if (schedule == Schedule::Serial) {
        for (std::size_t i = 0; i < n; ++i) one(i);
    } else {
        const auto count = static_cast<std::int64_t>(n);
        const int threads = detail::omp_threads_for(thread_cap());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::int64_t i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (errors[i]) throw ReplicateFailure(i, *errors[i]);
    return out;
}

}  // namespace graphex

#endif  // GRAPHEX_PARALLEL_HPP
