#include "bipdeg/gen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace bipdeg {

namespace {

std::string describe(const GenSpec& s) {
    return "n=" + std::to_string(s.n) + " d1=" + std::to_string(s.d1) +
           " dn=" + std::to_string(s.dn);
}

void check_spec(const GenSpec& s) {
    if (s.dn < 1 || s.dn > s.d1 || s.d1 > s.n - 1)
        throw GenerationFailure("infeasible spec " + describe(s) +
                                ": need 1 <= dn <= d1 <= n - 1");
    // Only one term to pin and two different extremes.
    if (s.n < 2 || (s.n == 2 && s.d1 != s.dn))
        throw GenerationFailure("infeasible spec " + describe(s));
    // All terms equal: parity of n*d1 decides.
    if (s.d1 == s.dn && (static_cast<long long>(s.n) * s.d1) % 2 != 0)
        throw GenerationFailure("infeasible spec " + describe(s) + ": odd degree sum");
    if (s.count < 0) throw GenerationFailure("negative count");
}

}  // namespace

SequenceGenerator::SequenceGenerator(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {
    check_spec(spec_);
}

DegreeSequence SequenceGenerator::next() {
    const auto n = static_cast<std::size_t>(spec_.n);
    std::uniform_int_distribution<int> term(spec_.dn, spec_.d1);
    std::vector<int> xs(n);
    for (long attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
        xs[0] = spec_.d1;
        xs[1] = spec_.dn;
        long long sum = spec_.d1 + spec_.dn;
        for (std::size_t i = 2; i < n; ++i) {
            xs[i] = term(rng_);
            sum += xs[i];
        }
        if (sum % 2 != 0) {
            if (n <= 2 || spec_.d1 == spec_.dn) continue;
            std::uniform_int_distribution<std::size_t> pick(2, n - 1);
            int& t = xs[pick(rng_)];
            if (t < spec_.d1 && (t == spec_.dn || std::bernoulli_distribution(0.5)(rng_)))
                ++t;
            else
                --t;
        }
        std::vector<int> sorted = xs;
        std::ranges::sort(sorted, std::greater<>());
        DegreeSequence d(std::move(sorted));
        if (is_graphical(d)) return d;
    }
    throw GenerationFailure("no graphical sequence found for " + describe(spec_) + " after " +
                            std::to_string(kMaxGenerationAttempts) + " attempts");
}

DegreeSequence random_graphical(const GenSpec& spec) { return SequenceGenerator(spec).next(); }

std::vector<DegreeSequence> random_graphical_batch(const GenSpec& spec) {
    SequenceGenerator gen(spec);
    std::vector<DegreeSequence> out;
    out.reserve(static_cast<std::size_t>(std::max(0, spec.count)));
    for (int i = 0; i < spec.count; ++i) out.push_back(gen.next());
    return out;
}

GenSpec hard_spec(int n, std::mt19937_64& rng) {
    GenSpec s;
    s.n = n;
    const int d1_lo = static_cast<int>(std::ceil(0.5 * n));
    const int d1_hi = std::max(d1_lo, static_cast<int>(std::floor(0.6 * n)));
    const int dn_hi = std::max(1, static_cast<int>(std::floor(0.1 * n)));
    s.d1 = std::uniform_int_distribution<int>(d1_lo, d1_hi)(rng);
    s.dn = std::uniform_int_distribution<int>(1, dn_hi)(rng);
    s.seed = rng();
    return s;
}

}  // namespace bipdeg
