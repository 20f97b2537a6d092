#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace qcs {

// Parallel-map capability handed to the scanning modules. Work is split into
// caller-defined tasks; results always come back in task order, so any fold
// over them is independent of the worker count.
class Executor {
 public:
  explicit Executor(unsigned threads = 1) : threads_(std::max(1u, threads)) {}

  unsigned threads() const { return threads_; }

  template <class Fn>
  auto map(std::size_t count, Fn&& fn) const
      -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<std::optional<Result>> slots(count);
    const auto workers =
        static_cast<std::size_t>(std::min<std::size_t>(threads_, count));

    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      auto worker = [&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            slots[i].emplace(fn(i));
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(count);
            return;
          }
        }
      };
      {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
      }
      if (failure) std::rethrow_exception(failure);
    }

    std::vector<Result> out;
    out.reserve(count);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
  }

 private:
  unsigned threads_;
};

// Number of items per scan task. Fixed so that chunk boundaries, and hence
// floating-point reduction order, never depend on the thread count.
inline constexpr std::size_t kScanChunk = 2048;

inline std::size_t chunk_count(std::size_t items) {
  return (items + kScanChunk - 1) / kScanChunk;
}

}  // namespace qcs
