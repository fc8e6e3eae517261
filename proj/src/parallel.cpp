#include "hf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hf {

int worker_count() {
    if (const char* env = std::getenv("HECKE_FUSION_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            // unparsable: fall through to the default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace hf
