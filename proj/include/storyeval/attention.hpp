#pragma once

#include <cstddef>
#include <vector>

#include "storyeval/mask.hpp"

namespace storyeval {

/// Pixel-by-word cross-attention weight matrix, row-major P x W.
/// All entries must be nonnegative and finite.
struct AttentionMap {
    int pixels = 0; // P
    int words = 0;  // W
    std::vector<double> values;

    AttentionMap() = default;
    AttentionMap(int p, int w); // zero-filled; throws DomainError unless p,w >= 1

    double at(int p, int w) const {
        return values[static_cast<std::size_t>(p) * words + w];
    }
    double& at(int p, int w) {
        return values[static_cast<std::size_t>(p) * words + w];
    }
};

void validate(const AttentionMap& m); // throws NegativeInput / NonFiniteInput

/// One character's prompt words C_i and target pixels S_i (the complement
/// of S_i is implied). Indices are canonicalized to sorted unique order.
struct CharacterRegion {
    std::vector<int> word_indices;  // C_i, into [0, W)
    std::vector<int> target_pixels; // S_i, into [0, P)
};

struct RegionSpec {
    std::vector<CharacterRegion> characters;
};

/// Flatten a mask's foreground to pixel indices (row-major) for use as S_i.
std::vector<int> target_pixels_from_mask(const BinaryMask& mask);

/// Region attention loss:
///   L = sum_i sum_{w in C_i} sum_{p in S_i} M[p,w]
///     + lambda * sum_i sum_{w in C_i} sum_{p not in S_i} M[p,w]
/// with both triple sums accumulated sequentially in index order.
/// Throws IndexOutOfRange, NegativeInput (lambda < 0).
double mask_attention_loss(const AttentionMap& m, const RegionSpec& r, double lambda);

/// Inputs for the constant-map construction. The mask lives on the pixel
/// axis and may be relaxed to real values in [0,1].
struct ConstantMapParams {
    int word_count_sum = 1; // number of words in the prompt, >= 1
    std::vector<double> mask;
};

ConstantMapParams constant_map_params_from_mask(const BinaryMask& mask,
                                                int word_count_sum);

/// result[p,w] = zero_base[p,w] + mask[p] * (1/word_count_sum) for w in
/// word_indices, untouched elsewhere. Built from addition and
/// multiplication only, so the construction stays differentiable in a
/// relaxed mask. zero_base must be all zeros. Throws ShapeMismatch,
/// IndexOutOfRange, DomainError.
AttentionMap build_constant_map(const AttentionMap& zero_base,
                                const ConstantMapParams& params,
                                const std::vector<int>& word_indices);

} // namespace storyeval
