#include "eea/rng.hpp"

namespace eea {

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) noexcept
{
    std::uint64_t h = mix64(base);
    for (std::uint64_t part : path) {
        h = mix64(h ^ mix64(part + 0x632be59bd9b4e019ULL));
    }
    return h;
}

} // namespace eea
