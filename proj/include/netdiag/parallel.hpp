#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace netdiag {

/// Worker count from an explicit request, the NETDIAG_WORKERS environment
/// variable, or hardware concurrency, in that order. Always >= 1.
int resolve_workers(int requested);

/// Runs step(state, i) for i in 0..count-1, worker w taking the strided
/// indices w, w+W, w+2W, ... in ascending order, then folds the per-worker
/// states with merge in worker order. With a commutative, associative merge
/// the result is independent of the worker count.
template <typename State, typename Step, typename Merge>
State strided_reduce(std::uint64_t count, int workers, State init, Step&& step, Merge&& merge) {
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > count && count > 0) {
    workers = static_cast<int>(count);
  }
  if (workers <= 1 || count == 0) {
    State state = init;
    for (std::uint64_t i = 0; i < count; ++i) step(state, i);
    return state;
  }

  std::vector<State> states(static_cast<std::size_t>(workers), init);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        State& state = states[static_cast<std::size_t>(w)];
        for (std::uint64_t i = static_cast<std::uint64_t>(w); i < count;
             i += static_cast<std::uint64_t>(workers)) {
          step(state, i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  State result = std::move(states[0]);
  for (int w = 1; w < workers; ++w) merge(result, states[static_cast<std::size_t>(w)]);
  return result;
}

}  // namespace netdiag
