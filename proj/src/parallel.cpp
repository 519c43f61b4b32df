#include "lvmb/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lvmb {

int max_threads() {
#ifdef _OPENMP
    int t = omp_get_max_threads();
#else
    int t = 1;
#endif
    if (const char* env = std::getenv("LVMB_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) t = std::min(t, cap);
        } catch (...) {
            // unparsable cap: ignore
        }
    }
    return std::max(t, 1);
}

}  // namespace lvmb
