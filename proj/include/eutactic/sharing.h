#ifndef EUTACTIC_SHARING_H
#define EUTACTIC_SHARING_H

#include <cstddef>
#include <optional>
#include <vector>

#include "eutactic/frames.h"

namespace eutactic {

template <FieldScalar T>
class Codebook;

/// Validates orthonormality. Throws NotOrthonormal naming the offending pair and its inner
/// product, DimensionMismatch on mixed dimensions, DomainError when fewer than two codewords.
template <FieldScalar T>
Codebook<T> make_codebook(std::vector<Vector<T>> vectors, double tol = kDefaultTolerance);

template <FieldScalar To, FieldScalar From>
Codebook<To> convert_codebook(const Codebook<From> &book);

/// k pairwise orthonormal message states (codewords) in R^m.
template <FieldScalar T>
class Codebook {
   public:
    std::size_t dim() const {
        return dim_;
    }
    std::size_t size() const {
        return messages_.size();
    }
    const std::vector<Vector<T>> &messages() const {
        return messages_;
    }
    const Vector<T> &operator[](std::size_t i) const {
        return messages_[i];
    }

    template <FieldScalar U>
    friend Codebook<U> make_codebook(std::vector<Vector<U>> vectors, double tol);
    template <FieldScalar U, FieldScalar V>
    friend Codebook<U> convert_codebook(const Codebook<V> &book);

   private:
    Codebook(std::size_t dim, std::vector<Vector<T>> messages) : dim_(dim), messages_(std::move(messages)) {
    }

    std::size_t dim_;
    std::vector<Vector<T>> messages_;
};

template <FieldScalar To, FieldScalar From>
Codebook<To> convert_codebook(const Codebook<From> &book) {
    std::vector<Vector<To>> messages;
    for (const auto &v : book.messages()) {
        messages.push_back(convert<To>(v));
    }
    return Codebook<To>(book.dim(), std::move(messages));
}

/// Partition of the m coordinates among parties.
class ShareSplit {
   public:
    /// Throws DomainError unless the kept sets are pairwise disjoint and cover every coordinate.
    ShareSplit(std::size_t dim, std::vector<CoordinateProjector> parts);

    std::size_t dim() const {
        return dim_;
    }
    const std::vector<CoordinateProjector> &parts() const {
        return parts_;
    }

   private:
    std::size_t dim_;
    std::vector<CoordinateProjector> parts_;
};

/// What one party holds: its projector applied to every codeword (full-dimensional fragments).
template <FieldScalar T>
struct Share {
    std::size_t party;  // 0-based
    CoordinateProjector projector;
    std::vector<Vector<T>> fragments;

    friend bool operator==(const Share &, const Share &) = default;
};

template <FieldScalar T>
Vector<T> encode(std::size_t message, const Codebook<T> &book);

template <FieldScalar T>
std::vector<Share<T>> split(const Codebook<T> &book, const ShareSplit &parts);

/// Coherent per-message sum of fragments. Throws IncompleteShares unless the projectors
/// partition the identity; DimensionMismatch if the shares disagree on dimension or message count.
template <FieldScalar T>
std::vector<Vector<T>> recombine(std::span<const Share<T>> shares);

/// Index of the codeword with the largest |overlap|. The match must carry the whole norm
/// (overlap^2 >= (1 - tol) |state|^2) and every other overlap must vanish (runner-up^2 <= tol |state|^2);
/// the exact backend requires both exactly. Throws AmbiguousDecode or DomainError (zero state).
template <FieldScalar T>
std::size_t decode(const Vector<T> &state, const Codebook<T> &book, double tol = kDefaultTolerance);

template <FieldScalar T>
struct CommeasurabilityWitness {
    bool noncommeasurable;
    /// Commutator of the first non-commuting fragment pair, when one exists.
    std::optional<Matrix<T>> witness;
    std::size_t first = 0;
    std::size_t second = 0;
};

/// Checks whether some pair of fragment dyads fails to commute.
/// Throws DomainError when the share has fewer than two nonzero fragments.
template <FieldScalar T>
CommeasurabilityWitness<T> noncommeasurability_check(const Share<T> &share, double tol = kDefaultTolerance);

}  // namespace eutactic

#endif
