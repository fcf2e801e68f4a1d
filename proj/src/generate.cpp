#include "aaf/generate.hpp"

#include "aaf/errors.hpp"

namespace aaf {

namespace {

std::vector<ArgumentId> numbered_args(int n) {
    std::vector<ArgumentId> args;
    args.reserve(n);
    for (int i = 1; i <= n; ++i)
        args.push_back(ArgumentId::plain("x" + std::to_string(i)));
    return args;
}

} // namespace

AF random_af(int n, double p, uint64_t seed) {
    if (n < 1)
        throw BadParameter("random_af needs n >= 1");
    if (p < 0.0 || p > 1.0)
        throw BadParameter("attack probability must be in [0,1]");
    std::vector<ArgumentId> args = numbered_args(n);
    SplitMix64 rng(seed);
    std::vector<Attack> attacks;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.chance(p))
                attacks.push_back({args[i], args[j]});
    return AF(std::move(args), std::move(attacks));
}

std::vector<AF> enumerate_all_afs(int n, bool allow_large) {
    if (n < 1)
        throw BadParameter("enumerate_all_afs needs n >= 1");
    if (n > 4 || (n == 4 && !allow_large))
        throw BadParameter("enumerate_all_afs is limited to n <= 3 (n = 4 with override)");
    std::vector<ArgumentId> args = numbered_args(n);
    uint64_t total = uint64_t(1) << (n * n);
    std::vector<AF> out;
    out.reserve(total);
    for (uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Attack> attacks;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((mask >> (i * n + j)) & 1u)
                    attacks.push_back({args[i], args[j]});
        out.push_back(AF(args, std::move(attacks)));
    }
    return out;
}

} // namespace aaf
