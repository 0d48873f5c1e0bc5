#pragma once

// Replica-level worker pool: runs fn(replica_index, stream) for each replica
// on up to `threads` workers, collecting results by replica index so output
// order never depends on scheduling.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "plancherel/rng.hpp"

namespace plancherel {

int default_thread_count();

template <typename T, typename Fn>
std::vector<T> run_replicas(int replicas, int threads, std::uint64_t master_seed, Fn&& fn) {
    std::vector<T> results(static_cast<std::size_t>(replicas));
    if (threads <= 0) threads = default_thread_count();
    threads = std::min(threads, replicas);
    if (threads <= 1) {
        for (int r = 0; r < replicas; ++r) {
            RandomStream stream(master_seed, static_cast<std::uint64_t>(r));
            results[static_cast<std::size_t>(r)] = fn(r, stream);
        }
        return results;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            int r = next.fetch_add(1);
            if (r >= replicas) return;
            try {
                RandomStream stream(master_seed, static_cast<std::uint64_t>(r));
                results[static_cast<std::size_t>(r)] = fn(r, stream);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(replicas);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace plancherel
