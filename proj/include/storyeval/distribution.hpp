#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "storyeval/mask.hpp"

namespace storyeval {

/// n x d matrix of per-image feature vectors, 64-bit internal precision.
struct EmbeddingSet {
    Eigen::MatrixXd rows;

    std::int64_t n() const { return rows.rows(); }
    std::int64_t dim() const { return rows.cols(); }
};

struct GaussianStats {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
    bool single_sample = false; // n was 1; covariance forced to zero
};

struct FrechetResult {
    double fid = 0.0;
    double mean_term = 0.0;  // ||mu1 - mu2||^2
    double trace_term = 0.0; // Tr(S1 + S2 - 2 (S1 S2)^(1/2))
    bool regularization_applied = false;
};

struct CvcDiagnostics {
    bool regularization_applied = false;
    std::vector<std::string> warnings;
};

/// Column means plus unbiased sample covariance (divisor n-1), symmetrized
/// as (C + C^T)/2. n = 1 yields a zero covariance and sets single_sample.
/// Throws NonFiniteInput.
GaussianStats fit_gaussian(const EmbeddingSet& e);

/// Principal square root of a symmetric PSD matrix via symmetric
/// eigendecomposition, S = V diag(sqrt(lambda)) V^T. Eigenvalues in
/// [-1e-8, 0) are clamped to zero. Throws NotSymmetric, IndefiniteMatrix.
Eigen::MatrixXd sqrtm_psd(const Eigen::MatrixXd& m);

/// Frechet distance between two Gaussians,
///   fid = ||mu1-mu2||^2 + Tr(S1 + S2 - 2 sqrtm(S1 S2)),
/// with the trace evaluated through the symmetric form
/// sqrtm(S1^(1/2) S2 S1^(1/2)). When either covariance has an eigenvalue
/// below epsilon, epsilon*I is added to both and regularization_applied is
/// set. A total within -1e-8 of zero is clamped to 0; anything more
/// negative throws Error. Throws DimensionMismatch.
FrechetResult frechet_distance(const GaussianStats& g1, const GaussianStats& g2,
                               double epsilon = 1e-6);

/// FID between Gaussians fitted to the two embedding sets. Warns through
/// diag when n < d (rank-deficient covariance).
double cvc_score(const EmbeddingSet& gen, const EmbeddingSet& ref,
                 double epsilon = 1e-6, CvcDiagnostics* diag = nullptr);

/// Mean of dot(a,b)/(|a| |b|) over the pairs, accumulated left to right.
/// Throws EmptyInput, ZeroVector and DimensionMismatch naming the pair index.
double mean_cosine_similarity(
    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& pairs);

/// Deterministic stand-in feature vector for hermetic pipeline tests:
/// the masked image crop (bounding box of the foreground, background
/// zeroed) bilinearly resampled to 8x8 grayscale and flattened, d = 64.
/// Not comparable to any published feature-extractor magnitudes.
std::vector<double> naive_embedding(const GrayImage& image, const BinaryMask& mask);

/// Embedding file loaders. The binary format is "EMB1", two 4-byte
/// little-endian unsigned counts n and d, then n*d little-endian float32,
/// row-major; the byte length must match exactly. CSV is one row per
/// sample with an optional header (detected by a non-numeric first line).
EmbeddingSet load_embeddings_emb1(const std::uint8_t* bytes, std::size_t size);
EmbeddingSet load_embeddings_csv(const std::string& text);

/// Reads a file and dispatches on the EMB1 magic. Throws FileError.
EmbeddingSet load_embeddings_file(const std::string& path);

} // namespace storyeval
