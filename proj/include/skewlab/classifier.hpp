#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "skewlab/shape.hpp"
#include "skewlab/sparse.hpp"

namespace skewlab {

struct EquivalenceClass {
    DiagramList members;  // sorted
    SchurVector fingerprint;
    int size_n = 0;
    int rank = 0;
    bool closed_under_rotation = false;
    bool closed_under_transpose = false;

    std::size_t size() const noexcept { return members.size(); }
    bool power_of_two() const noexcept;
    bool contains_ribbon() const;
    bool all_ribbons() const;
};

struct SporadicResult {
    int pair_id = 0;
    SkewShape a;
    SkewShape b;
    bool equal = false;
    bool rotations_equal = false;
    bool conjugates_equal = false;
};

struct ClassificationReport {
    int n = 0;
    std::size_t total_diagrams = 0;
    std::vector<EquivalenceClass> classes;
    std::map<std::size_t, std::size_t> histogram;  // class size -> number of classes
    std::vector<std::size_t> power_of_two_violations;  // indices into classes
    std::vector<SporadicResult> sporadics;
};

struct ClassifyOptions {
    unsigned jobs = 1;
    bool prefilter = true;
};

ClassificationReport classify(int n, const ClassifyOptions& options = {});

/// Directory holding sporadic/pairN.txt; SKEWLAB_FIXTURES overrides the built-in path.
std::filesystem::path fixture_dir();

/// A fixture file: two ASCII diagrams separated by a blank line.
std::pair<SkewShape, SkewShape> read_fixture_pair(const std::filesystem::path& file);

SporadicResult compare_pair(int pair_id, const SkewShape& a, const SkewShape& b);

/// Checks the six sporadic pairs. With `strict`, a failing pair throws FixtureMismatch.
std::vector<SporadicResult> verify_sporadics(const std::filesystem::path& dir = fixture_dir(), bool strict = true);

/// How one member of a class is reached from another by known equivalence
/// moves: antipodal rotation, ribbon replacement in alpha o D and D o beta,
/// conjugation of D in alpha o D, the amalgamated-composition symmetries and
/// staircase nesting reversal.
struct Explanation {
    SkewShape from;
    SkewShape to;
    bool explained = false;
    std::vector<std::string> steps;
};

struct ExplainOptions {
    int depth = 2;
    /// Largest inner diagram tried when undoing an amalgamated composition.
    int max_amalgam_piece = 9;
};

/// One diagram's images under single moves, each tagged with the move's name.
std::vector<std::pair<SkewShape, std::string>> generator_images(const SkewShape& d, const ExplainOptions& options = {});

/// Explanations linking the first member to each other member.
std::vector<Explanation> explain_by_generators(const EquivalenceClass& cls, const ExplainOptions& options = {});

} // namespace skewlab
