#include "mastermind/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace mastermind::kernels {

bool cpu_supports_avx2() noexcept
{
#if defined(MASTERMIND_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

std::atomic<int> g_forced{-1}; // -1 = auto

Backend detect() noexcept
{
    return cpu_supports_avx2() ? Backend::avx2 : Backend::scalar;
}

} // namespace

Backend active_backend() noexcept
{
    int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0)
        return static_cast<Backend>(forced);
    return detect();
}

std::string_view backend_name(Backend b) noexcept
{
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void set_backend(std::optional<Backend> forced)
{
    if (!forced) {
        g_forced.store(-1, std::memory_order_relaxed);
        return;
    }
    if (*forced == Backend::avx2 && !cpu_supports_avx2())
        throw std::invalid_argument("avx2 backend not supported on this CPU");
    g_forced.store(static_cast<int>(*forced), std::memory_order_relaxed);
}

void score_many(const PackedGuess& guess,
                std::span<const std::uint32_t> positions,
                std::span<const std::uint64_t> tallies,
                std::span<std::uint8_t> out)
{
#if defined(MASTERMIND_HAVE_AVX2_KERNEL)
    if (active_backend() == Backend::avx2) {
        score_many_avx2(guess, positions, tallies, out);
        return;
    }
#endif
    score_many_scalar(guess, positions, tallies, out);
}

} // namespace mastermind::kernels
