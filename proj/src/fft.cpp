#include "gaussreg/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

namespace gaussreg::fft {

namespace {

// FFTW plan creation is not thread-safe; execution via fftw_execute_dft on
// caller-owned buffers is. Plans are cached per (size, direction) and created
// under a lock; buffers are per-invocation fftw_malloc allocations so
// concurrent transforms never share scratch.
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = (static_cast<std::uint64_t>(n) << 1) | (sign == FFTW_BACKWARD ? 1u : 0u);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        fftw_complex* buf = fftw_alloc_complex(n);
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, FFTW_ESTIMATE);
        fftw_free(buf);
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mu_;
    std::unordered_map<std::uint64_t, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {}
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    fftw_complex* data;
};

void execute(std::span<const std::complex<double>> in, std::vector<std::complex<double>>& out,
             int sign) {
    const std::size_t n = in.size();
    fftw_plan plan = cache().get(n, sign);
    FftwBuffer buf(n);
    for (std::size_t i = 0; i < n; ++i) {
        buf.data[i][0] = in[i].real();
        buf.data[i][1] = in[i].imag();
    }
    fftw_execute_dft(plan, buf.data, buf.data);
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::complex<double>(buf.data[i][0], buf.data[i][1]);
    }
}

}  // namespace

void forward(std::span<const double> x, std::vector<std::complex<double>>& out) {
    std::vector<std::complex<double>> in(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) in[i] = x[i];
    execute(in, out, FFTW_FORWARD);
}

void inverse(std::span<const std::complex<double>> w, std::vector<std::complex<double>>& out) {
    execute(w, out, FFTW_BACKWARD);
}

}  // namespace gaussreg::fft
