#include "tfkit/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace tfkit::fft {

namespace {

// FFTW's planner is not thread-safe; execution on distinct buffers is.
// Plans are created once per (length, sign) with FFTW_UNALIGNED so they can
// run on plain std::vector storage.
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void run(cvec& x, int sign) {
    if (x.empty()) throw std::invalid_argument("fft: empty input");
    if (x.size() == 1) return;
    fftw_plan p = cache().get(x.size(), sign);
    auto* buf = reinterpret_cast<fftw_complex*>(x.data());
    fftw_execute_dft(p, buf, buf);
}

}  // namespace

void forward(cvec& x) { run(x, FFTW_FORWARD); }
void backward(cvec& x) { run(x, FFTW_BACKWARD); }

cvec forward_copy(const cvec& x) {
    cvec y = x;
    forward(y);
    return y;
}

cvec backward_copy(const cvec& x) {
    cvec y = x;
    backward(y);
    return y;
}

}  // namespace tfkit::fft
