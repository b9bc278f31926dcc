#pragma once

#include <cstddef>
#include <vector>

#include "bergstab/group.hpp"

namespace bergstab {

/// One enumerated group element: reduced word, its matrix in the group's
/// native model, and the disc-model displacement 1 - |gamma(0)|.
struct BallElement {
    Word word;
    MoebiusMap map;
    double displacement;
};

struct EnumerationOptions {
    std::size_t cap = 10'000'000;
    bool prune = false;       // skip subtrees whose terms provably stay below prune_tol
    double prune_tol = 0.0;
};

/// All reduced words of length <= max_len in deterministic order
/// (length shell, then lexicographic), with prefix-incremental matrices.
struct EnumerationBall {
    int max_len = 0;
    bool pruned = false;
    std::vector<BallElement> elements;
    /// shell_offsets[l] = index of the first word of length l;
    /// shell_offsets[max_len + 1] = elements.size().
    std::vector<std::size_t> shell_offsets;

    std::size_t size() const { return elements.size(); }
    std::size_t shell_begin(int len) const { return shell_offsets[static_cast<std::size_t>(len)]; }
    std::size_t shell_end(int len) const { return shell_offsets[static_cast<std::size_t>(len) + 1]; }

    /// Sum of displacements over one length shell.
    double shell_displacement_sum(int len) const;
};

EnumerationBall enumerate_ball(const GroupSpec& g, int max_len,
                               const EnumerationOptions& opts = {});

/// Closed-form count of reduced words of length <= max_len.
unsigned long long reduced_word_count(int rank, int max_len);

/// Ordered product of generator matrices/inverses for the word's letters.
MoebiusMap word_to_matrix(const GroupSpec& g, const Word& w);

/// Disc-model displacement 1 - |gamma(0)| computed cancellation-free from
/// the matrix entries (half-plane maps are measured through the Cayley
/// transform).
double disc_displacement(const MoebiusMap& m);

} // namespace bergstab
