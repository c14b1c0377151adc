// Micro-benchmark for the shifted-OR kernels and the sumset built on them.
//
//   ./bench_kernels [words] [iters]
//
// Reports effective throughput per kernel on a dense accumulation loop, then
// times one large sumset end to end with the runtime-selected kernel.

#include "powsem/kernels.hpp"
#include "powsem/natural_set.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
    const std::size_t words = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : (1u << 16);
    const std::size_t iters = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 400;

    std::mt19937_64 rng(99);
    std::vector<std::uint64_t> src(words);
    for (auto& w : src) w = rng();
    std::vector<std::uint64_t> shifts(iters);
    for (auto& s : shifts) s = rng() % 512;

    for (const auto& entry : powsem::kernels::available_kernels()) {
        std::vector<std::uint64_t> dst(words + 10, 0);
        const auto t0 = Clock::now();
        for (std::size_t i = 0; i < iters; ++i) {
            entry.fn(dst.data(), src.data(), words, shifts[i]);
        }
        const double sec = std::chrono::duration<double>(Clock::now() - t0).count();
        const double gib = double(words) * 8.0 * double(iters) / (1u << 30) / sec;
        std::printf("%-8s %8.1f MiB buffer  %6.2f GiB/s  (%.3f s, checksum %016llx)\n",
                    std::string(entry.name).c_str(), double(words) * 8.0 / (1u << 20), gib, sec,
                    static_cast<unsigned long long>(dst[words / 2]));
    }

    // end-to-end: two dense sets with a wide span
    std::vector<std::uint64_t> a, b;
    for (std::uint64_t x = 0; x < (1u << 21); x += 2) a.push_back(x);
    for (std::uint64_t x = 1; x < (1u << 18); x += 3) b.push_back(x);
    const powsem::NaturalSet x(std::move(a)), y(std::move(b));
    const auto t0 = Clock::now();
    const powsem::NaturalSet s = x + y;
    const double sec = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("sumset   |X|=%zu |Y|=%zu -> |X+Y|=%zu in %.3f s (kernel %s)\n", x.size(),
                y.size(), s.size(), sec,
                std::string(powsem::kernels::active_kernel_name()).c_str());
    return 0;
}
