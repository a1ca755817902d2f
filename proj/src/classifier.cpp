#include "skewlab/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "skewlab/diagram_ops.hpp"
#include "skewlab/error.hpp"
#include "skewlab/invariants.hpp"
#include "skewlab/staircase.hpp"
#include "skewlab/symfunc.hpp"

#ifndef SKEWLAB_FIXTURE_DIR
#define SKEWLAB_FIXTURE_DIR "fixtures"
#endif

namespace skewlab {

bool EquivalenceClass::power_of_two() const noexcept {
    const std::size_t s = members.size();
    return s != 0 && (s & (s - 1)) == 0;
}

bool EquivalenceClass::contains_ribbon() const {
    return std::any_of(members.begin(), members.end(), [](const SkewShape& d) { return d.is_ribbon(); });
}

bool EquivalenceClass::all_ribbons() const {
    return std::all_of(members.begin(), members.end(), [](const SkewShape& d) { return d.is_ribbon(); });
}

namespace {

struct Fingerprinted {
    std::size_t index;
    SchurVector fp;
    std::uint64_t hash;
};

// Split one bucket of diagram indices into fingerprint classes.
std::vector<std::vector<Fingerprinted>> split_bucket(const DiagramList& all, const std::vector<std::size_t>& bucket) {
    std::map<std::uint64_t, std::vector<std::vector<Fingerprinted>>> by_hash;
    for (std::size_t idx : bucket) {
        Fingerprinted f{idx, fingerprint(all[idx]), 0};
        f.hash = fingerprint_hash(f.fp);
        auto& groups = by_hash[f.hash];
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.front().fp == f.fp; });
        if (it == groups.end())
            groups.push_back({std::move(f)});
        else
            it->push_back(std::move(f));
    }
    std::vector<std::vector<Fingerprinted>> out;
    for (auto& [h, groups] : by_hash)
        for (auto& g : groups) out.push_back(std::move(g));
    return out;
}

} // namespace

ClassificationReport classify(int n, const ClassifyOptions& options) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "classify needs n >= 1");
    ClassificationReport report;
    report.n = n;
    const DiagramList all = enumerate_connected(n);
    report.total_diagrams = all.size();

    std::vector<std::vector<std::size_t>> buckets;
    if (options.prefilter) {
        std::map<std::vector<Partition>, std::vector<std::size_t>> keyed;
        for (std::size_t i = 0; i < all.size(); ++i) keyed[prefilter_key(all[i])].push_back(i);
        for (auto& [key, members] : keyed) buckets.push_back(std::move(members));
    } else {
        std::vector<std::size_t> everything(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) everything[i] = i;
        buckets.push_back(std::move(everything));
    }

    std::vector<std::vector<std::vector<Fingerprinted>>> results(buckets.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next++; b < buckets.size(); b = next++) results[b] = split_bucket(all, buckets[b]);
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (auto& bucket : results) {
        for (auto& group : bucket) {
            EquivalenceClass cls;
            cls.size_n = n;
            cls.fingerprint = group.front().fp;
            for (const auto& f : group) cls.members.push_back(all[f.index]);
            std::sort(cls.members.begin(), cls.members.end());
            report.classes.push_back(std::move(cls));
        }
    }
    std::sort(report.classes.begin(), report.classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.members.front() < b.members.front();
    });

    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        EquivalenceClass& cls = report.classes[i];
        cls.rank = frobenius_rank(cls.members.front());
        const std::set<SkewShape> members(cls.members.begin(), cls.members.end());
        cls.closed_under_rotation = std::all_of(members.begin(), members.end(),
                                                [&](const SkewShape& d) { return members.count(rotate180(d)) > 0; });
        cls.closed_under_transpose = std::all_of(
            members.begin(), members.end(), [&](const SkewShape& d) { return members.count(transpose(d)) > 0; });
        ++report.histogram[cls.size()];
        if (!cls.power_of_two()) report.power_of_two_violations.push_back(i);
    }
    return report;
}

std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("SKEWLAB_FIXTURES"); env && *env) return env;
    return SKEWLAB_FIXTURE_DIR;
}

std::pair<SkewShape, SkewShape> read_fixture_pair(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail(ErrorKind::ParseError, "cannot open fixture " + file.string());
    std::vector<std::string> blocks(1);
    std::string line;
    while (std::getline(in, line)) {
        const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            if (!blocks.back().empty()) blocks.emplace_back();
            continue;
        }
        blocks.back() += line + "\n";
    }
    if (blocks.back().empty()) blocks.pop_back();
    if (blocks.size() != 2) fail(ErrorKind::ParseError, file.string() + ": expected two diagrams separated by a blank line");
    return {parse_ascii(blocks[0]), parse_ascii(blocks[1])};
}

SporadicResult compare_pair(int pair_id, const SkewShape& a, const SkewShape& b) {
    SporadicResult r;
    r.pair_id = pair_id;
    r.a = a;
    r.b = b;
    r.equal = fingerprint(a) == fingerprint(b);
    r.rotations_equal = fingerprint(rotate180(a)) == fingerprint(rotate180(b));
    r.conjugates_equal = fingerprint(transpose(a)) == fingerprint(transpose(b));
    return r;
}

std::vector<SporadicResult> verify_sporadics(const std::filesystem::path& dir, bool strict) {
    std::vector<SporadicResult> out;
    for (int id = 1; id <= 6; ++id) {
        const auto [a, b] = read_fixture_pair(dir / "sporadic" / ("pair" + std::to_string(id) + ".txt"));
        out.push_back(compare_pair(id, a, b));
        const SporadicResult& r = out.back();
        if (strict && !(r.equal && r.rotations_equal && r.conjugates_equal))
            fail(ErrorKind::FixtureMismatch, "sporadic pair " + std::to_string(id) + " is not skew-equivalent");
    }
    return out;
}

namespace {

class DiagramCache {
public:
    static DiagramCache& get() {
        static DiagramCache cache;
        return cache;
    }

    const DiagramList& connected(int n) {
        std::lock_guard lock(mutex_);
        auto it = connected_.find(n);
        if (it == connected_.end()) it = connected_.emplace(n, enumerate_connected(n)).first;
        return it->second;
    }

    // Ribbons of |alpha| cells sharing alpha's fingerprint, alpha excluded.
    std::vector<Composition> ribbon_partners(const Composition& alpha) {
        const int n = alpha.weight();
        std::lock_guard lock(mutex_);
        auto it = ribbon_classes_.find(n);
        if (it == ribbon_classes_.end()) {
            std::map<std::string, std::vector<Composition>> classes;
            for (const Composition& c : compositions_of(n))
                classes[fingerprint(ribbon_to_shape(c)).str("s")].push_back(c);
            it = ribbon_classes_.emplace(n, std::move(classes)).first;
        }
        std::vector<Composition> out;
        for (const Composition& c : it->second.at(fingerprint(ribbon_to_shape(alpha)).str("s")))
            if (c != alpha) out.push_back(c);
        return out;
    }

private:
    std::mutex mutex_;
    std::map<int, DiagramList> connected_;
    std::map<int, std::map<std::string, std::vector<Composition>>> ribbon_classes_;
};

} // namespace

std::vector<std::pair<SkewShape, std::string>> generator_images(const SkewShape& d, const ExplainOptions& options) {
    std::vector<std::pair<SkewShape, std::string>> out;
    auto emit = [&](SkewShape image, std::string name) {
        if (image != d) out.emplace_back(std::move(image), std::move(name));
    };
    DiagramCache& cache = DiagramCache::get();
    const int n = d.size();

    emit(rotate180(d), "rotate");

    // alpha o E and E o beta with both factors of at least two cells.
    for (int e = 2; e <= n / 2; ++e) {
        if (n % e) continue;
        const int k = n / e;
        for (const SkewShape& piece : cache.connected(e)) {
            for (const Composition& alpha : compositions_of(k)) {
                if (compose_alpha_D(alpha, piece) == d) {
                    for (const Composition& other : cache.ribbon_partners(alpha))
                        emit(compose_alpha_D(other, piece), "ribbon-swap " + alpha.str() + "->" + other.str());
                    emit(compose_alpha_D(alpha, rotate180(piece)), "rotate-inner " + alpha.str());
                }
                try {
                    if (compose_D_beta(piece, alpha) == d)
                        for (const Composition& other : cache.ribbon_partners(alpha))
                            emit(compose_D_beta(piece, other), "ribbon-swap-outer " + alpha.str() + "->" + other.str());
                } catch (const SkewError&) {
                }
            }
        }
    }

    // alpha o_omega E: n = k|E| - (k-1)|omega| for k = |alpha| >= 2.
    for (int e = 2; e <= std::min(n - 1, options.max_amalgam_piece); ++e) {
        for (const SkewShape& piece : cache.connected(e)) {
            for (const Composition& omega : protrusion(piece, End::top)) {
                const int w = omega.weight();
                if (e - w <= 0 || (n - w) % (e - w)) continue;
                const int k = (n - w) / (e - w);
                if (k < 2) continue;
                if (!check_hypotheses(piece, omega).ok()) continue;
                for (const Composition& alpha : compositions_of(k)) {
                    SkewShape built;
                    try {
                        built = amalgamated_compose(alpha, piece, omega);
                    } catch (const SkewError&) {
                        continue;
                    }
                    if (built != d) continue;
                    const std::string tag = alpha.str() + "," + omega.str();
                    try {
                        emit(amalgamated_compose(alpha.reversed(), piece, omega), "amalgam-reverse " + tag);
                    } catch (const SkewError&) {
                    }
                    try {
                        emit(amalgamated_compose(alpha, rotate180(piece), omega.reversed()), "amalgam-rotate " + tag);
                    } catch (const SkewError&) {
                    }
                }
            }
        }
    }

    for (Side side : {Side::se, Side::nw}) {
        try {
            if (auto p = detect_staircase(d, side)) {
                StaircasePresentation q = *p;
                q.nesting = p->nesting.reversed();
                emit(build_from_staircase(q), std::string("nesting-reverse ") + (side == Side::se ? "se" : "nw"));
            }
        } catch (const SkewError&) {
        }
    }
    return out;
}

std::vector<Explanation> explain_by_generators(const EquivalenceClass& cls, const ExplainOptions& options) {
    std::vector<Explanation> out;
    if (cls.members.size() < 2) return out;
    const SkewShape& root = cls.members.front();

    // Breadth-first search from the root, remembering how each diagram was reached.
    std::map<SkewShape, std::pair<SkewShape, std::string>> parent;
    std::map<SkewShape, int> depth{{root, 0}};
    std::deque<SkewShape> queue{root};
    while (!queue.empty()) {
        const SkewShape cur = queue.front();
        queue.pop_front();
        if (depth[cur] >= options.depth) continue;
        for (auto& [image, name] : generator_images(cur, options)) {
            if (depth.count(image)) continue;
            depth[image] = depth[cur] + 1;
            parent[image] = {cur, name};
            queue.push_back(image);
        }
    }

    for (std::size_t i = 1; i < cls.members.size(); ++i) {
        Explanation e;
        e.from = root;
        e.to = cls.members[i];
        if (depth.count(e.to)) {
            e.explained = true;
            for (SkewShape at = e.to; at != root; at = parent.at(at).first) e.steps.push_back(parent.at(at).second);
            std::reverse(e.steps.begin(), e.steps.end());
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace skewlab
