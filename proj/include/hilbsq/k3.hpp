#pragma once

// The input K3 surface: its Picard lattice, a primitive embedding into the
// fixed K3 lattice basis, the transcendental complement and the
// diagonal-class coefficient matrix mu (the inverse Gram of the K3 lattice).

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/lattice.hpp"
#include "hilbsq/matrix.hpp"
#include "hilbsq/snf.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace hilbsq {

inline constexpr std::size_t kK3Rank = 22;

// Coefficients mu_{i,j} of the diagonal class: the unique solution of
// sum_{i,j} mu_{i,j} G_{ik} G_{jl} = G_{kl}, i.e. the inverse Gram matrix of
// the K3 lattice. Integral by unimodularity, with even diagonal.
struct MuMatrix {
    IntMat entries;  // 22 x 22, symmetric

    const Int& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

inline const MuMatrix& diagonal_coefficients() {
    static const MuMatrix mu = [] {
        RatMat inv = inverse_gram(k3_lattice());
        return MuMatrix{to_int(inv)};
    }();
    return mu;
}

// A projective K3 surface with known Picard group: the Picard Gram matrix,
// the coordinates of a Picard basis b_1..b_r in the fixed alpha-basis of the
// K3 lattice, and the (untestable) hypothesis that the surface is general in
// its rank. Construct through generic_surface or surface_from_embedding;
// both enforce the invariants.
class K3Config {
public:
    std::size_t pic_rank() const { return pic_gram_.rows(); }
    const IntMat& pic_gram() const { return pic_gram_; }
    const IntMat& embedding() const { return embedding_; }
    bool assume_general() const { return assume_general_; }

    // Picard basis vector b_i as a 22-vector (0-based i).
    std::vector<Int> picard_row(std::size_t i) const {
        std::vector<Int> v(kK3Rank);
        for (std::size_t j = 0; j < kK3Rank; ++j) v[j] = embedding_(i, j);
        return v;
    }

private:
    friend K3Config surface_from_embedding(IntMat, IntMat, bool);
    K3Config(IntMat pic_gram, IntMat embedding, bool assume_general)
        : pic_gram_(std::move(pic_gram)),
          embedding_(std::move(embedding)),
          assume_general_(assume_general) {}

    IntMat pic_gram_;
    IntMat embedding_;
    bool assume_general_;
};

// Validating constructor. Rejects rank outside 1..19, Gram-incompatible or
// non-primitive embeddings, and Picard forms of the wrong signature.
inline K3Config surface_from_embedding(IntMat pic_gram, IntMat embedding,
                                       bool assume_general) {
    if (!pic_gram.is_square() || !pic_gram.is_symmetric())
        throw GramMismatch("GramMismatch: pic_gram must be a symmetric square matrix");
    const std::size_t r = pic_gram.rows();
    if (r < 1 || r > 19)
        throw RankOutOfRange("RankOutOfRange: Picard rank " + std::to_string(r) +
                             " outside 1..19");
    if (embedding.rows() != r || embedding.cols() != kK3Rank)
        throw GramMismatch("GramMismatch: embedding must be " + std::to_string(r) + "x22");

    IntMat product = embedding * k3_lattice().gram() * embedding.transpose();
    if (!(product == pic_gram))
        throw GramMismatch("GramMismatch: embedding * G_K3 * embedding^T != pic_gram");

    if (!is_primitive_span(embedding))
        throw NotPrimitive("NotPrimitive: embedding rows span a non-primitive sublattice");

    std::pair<std::size_t, std::size_t> sig;
    try {
        sig = signature(IntLattice(pic_gram));
    } catch (const DegenerateLattice&) {
        throw WrongSignature("WrongSignature: pic_gram is degenerate");
    }
    if (sig.first != 1 || sig.second != r - 1)
        throw WrongSignature("WrongSignature: pic_gram has signature (" +
                             std::to_string(sig.first) + "," + std::to_string(sig.second) +
                             "), expected (1," + std::to_string(r - 1) + ")");

    return K3Config(std::move(pic_gram), std::move(embedding), assume_general);
}

// Generic K3 surface of degree 2t: Picard rank 1, generated by an ample
// class of square 2t, embedded as alpha_17 + t*alpha_18.
inline K3Config generic_surface(const Int& t) {
    if (t < 1) throw InvalidDegree("InvalidDegree: t must be >= 1, got " + t.str());
    IntMat pic(1, 1);
    pic(0, 0) = 2 * t;
    IntMat emb(1, kK3Rank);
    emb(0, 16) = 1;
    emb(0, 17) = t;
    return surface_from_embedding(std::move(pic), std::move(emb), true);
}

// Saturated basis of the orthogonal complement of the Picard lattice inside
// the K3 lattice; 22 - r rows.
inline IntMat transcendental_basis(const K3Config& cfg) {
    return orthogonal_complement(k3_lattice(), cfg.embedding());
}

}  // namespace hilbsq
