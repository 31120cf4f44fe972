#include "interplab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace interplab {
namespace {
std::atomic<std::size_t> g_workers{0};
}

std::size_t worker_count() {
    if (const std::size_t w = g_workers.load(); w > 0) return w;
    if (const char* env = std::getenv("INTERPLAB_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void set_worker_count(std::size_t workers) { g_workers.store(workers); }

}  // namespace interplab
