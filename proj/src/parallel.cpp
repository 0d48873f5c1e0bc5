#include "plancherel/parallel.hpp"

#include <cstdlib>

namespace plancherel {

int default_thread_count() {
    if (const char* env = std::getenv("PLANCHEREL_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace plancherel
