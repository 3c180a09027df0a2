#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace wbar {

/// Worker count: hardware concurrency, capped by WORKBENCH_THREADS if set.
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WORKBENCH_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

/// Runs check(i) for i in [0, count). check returns an empty string on
/// success. Returns the message of the failure with the smallest index, so
/// the outcome does not depend on scheduling.
template <class Check>
std::optional<std::string> first_failure(std::size_t count, Check&& check) {
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, count / 64)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            std::string msg = check(i);
            if (!msg.empty()) return msg;
        }
        return std::nullopt;
    }

    std::atomic<std::size_t> best{count};
    std::vector<std::string> messages(workers);
    std::vector<std::size_t> where(workers, count);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < count; i += workers) {
                if (i >= best.load(std::memory_order_relaxed)) break;
                std::string msg = check(i);
                if (!msg.empty()) {
                    messages[w] = std::move(msg);
                    where[w] = i;
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
          } catch (...) {
            errors[w] = std::current_exception();
            best.store(0);
          }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    const auto it = std::min_element(where.begin(), where.end());
    if (*it == count) return std::nullopt;
    return messages[static_cast<std::size_t>(it - where.begin())];
}

/// Streaming variant: enumerate(visit) calls visit(x) for each item and stops
/// when visit returns false. Items are checked in batches with
/// first_failure, so memory stays bounded by the batch size.
template <class S, class Enumerate, class Check>
std::optional<std::string> batched_first_failure(Enumerate&& enumerate, Check&& check, std::size_t& visited,
                                                 std::size_t batch = std::size_t{1} << 14) {
    std::vector<S> buffer;
    buffer.reserve(batch);
    std::optional<std::string> bad;
    const auto flush = [&] {
        if (!bad && !buffer.empty()) bad = first_failure(buffer.size(), [&](std::size_t i) { return check(buffer[i]); });
        visited += buffer.size();
        buffer.clear();
    };
    enumerate([&](const S& x) {
        buffer.push_back(x);
        if (buffer.size() == batch) flush();
        return !bad;
    });
    flush();
    return bad;
}

}  // namespace wbar
