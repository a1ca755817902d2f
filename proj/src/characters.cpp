#include <map>

#include "skewlab/error.hpp"
#include "skewlab/symfunc.hpp"

namespace skewlab {

namespace {

// Skew Murnaghan-Nakayama: strip rim hooks of sizes nu_1, nu_2, ... off the
// outer partition while staying above the inner one. Beta numbers make the
// removal and its sign a lookup.
class RimHookStripper {
public:
    RimHookStripper(const Partition& inner, const Partition& nu) : inner_(inner), nu_(nu) {}

    Integer run(const Partition& outer) { return chi(outer.vec(), 0); }

private:
    Integer chi(const std::vector<int>& lam, std::size_t step) {
        if (step == nu_.length()) return Partition(lam) == inner_ ? 1 : 0;
        auto key = std::make_pair(lam, step);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int r = nu_[step];
        const int len = static_cast<int>(lam.size());
        std::vector<int> beta(lam.size());
        for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + len - 1 - i;

        Integer total = 0;
        for (int i = 0; i < len; ++i) {
            const int from = beta[static_cast<std::size_t>(i)];
            const int to = from - r;
            if (to < 0) continue;
            if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
            int crossed = 0;
            for (int b : beta)
                if (b > to && b < from) ++crossed;
            std::vector<int> next = beta;
            next[static_cast<std::size_t>(i)] = to;
            std::sort(next.begin(), next.end(), std::greater<>());
            for (int k = 0; k < len; ++k) next[static_cast<std::size_t>(k)] -= len - 1 - k;
            while (!next.empty() && next.back() == 0) next.pop_back();
            if (!contains(next)) continue;
            const Integer sub = chi(next, step + 1);
            if (crossed % 2) total -= sub;
            else total += sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    bool contains(const std::vector<int>& lam) const {
        if (inner_.length() > lam.size()) return false;
        for (std::size_t i = 0; i < inner_.length(); ++i)
            if (inner_[i] > lam[i]) return false;
        return true;
    }

    Partition inner_;
    Partition nu_;
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo_;
};

} // namespace

Integer character(const SkewShape& d, const Partition& nu) {
    if (nu.weight() != d.size())
        fail(ErrorKind::WeightMismatch,
             "class " + nu.str() + " has weight " + std::to_string(nu.weight()) + " but the diagram has " +
                 std::to_string(d.size()) + " cells");
    return RimHookStripper(d.inner(), nu).run(d.outer());
}

CharacterVector characters(const SkewShape& d) {
    CharacterVector out;
    for (const Partition& nu : partitions_of(d.size())) out.add(nu, character(d, nu));
    return out;
}

} // namespace skewlab
