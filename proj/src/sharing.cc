#include "eutactic/sharing.h"

#include <algorithm>
#include <string>

namespace eutactic {

template <FieldScalar T>
Codebook<T> make_codebook(std::vector<Vector<T>> vectors, double tol) {
    if (vectors.size() < 2) {
        throw DomainError("a codebook needs at least two codewords, got " + std::to_string(vectors.size()));
    }
    const std::size_t dim = vectors.front().dim();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].dim() != dim) {
            throw DimensionMismatch("codeword " + std::to_string(i + 1) + " has dimension " +
                                    std::to_string(vectors[i].dim()) + ", expected " + std::to_string(dim));
        }
    }
    if (vectors.size() > dim) {
        throw NotOrthonormal(std::to_string(vectors.size()) + " codewords cannot be orthonormal in R^" +
                             std::to_string(dim));
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i; j < vectors.size(); ++j) {
            T ip = inner(vectors[i], vectors[j]);
            if (!ScalarTraits<T>::is_zero(ip - T(i == j ? 1 : 0), tol)) {
                if (i == j) {
                    throw NotOrthonormal("codeword " + std::to_string(i + 1) + " has squared norm " + format_scalar(ip));
                }
                throw NotOrthonormal("codewords " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                     " have inner product " + format_scalar(ip));
            }
        }
    }
    return Codebook<T>(dim, std::move(vectors));
}

ShareSplit::ShareSplit(std::size_t dim, std::vector<CoordinateProjector> parts) : dim_(dim), parts_(std::move(parts)) {
    std::vector<int> owners(dim_, 0);
    for (const auto &p : parts_) {
        if (p.dim() != dim_) {
            throw DimensionMismatch("split part of dimension " + std::to_string(p.dim()) + " in a split of R^" +
                                    std::to_string(dim_));
        }
        for (std::size_t k : p.kept()) {
            ++owners[k];
        }
    }
    for (std::size_t k = 0; k < dim_; ++k) {
        if (owners[k] != 1) {
            throw DomainError("coordinate " + std::to_string(k + 1) + " is held by " + std::to_string(owners[k]) +
                              " parties; a split must partition the coordinates");
        }
    }
}

template <FieldScalar T>
Vector<T> encode(std::size_t message, const Codebook<T> &book) {
    if (message >= book.size()) {
        throw DomainError("message " + std::to_string(message) + " out of range for a " + std::to_string(book.size()) +
                          "-message codebook");
    }
    return book[message];
}

template <FieldScalar T>
std::vector<Share<T>> split(const Codebook<T> &book, const ShareSplit &parts) {
    if (book.dim() != parts.dim()) {
        throw DimensionMismatch("codebook in R^" + std::to_string(book.dim()) + " split in R^" +
                                std::to_string(parts.dim()));
    }
    std::vector<Share<T>> shares;
    shares.reserve(parts.parts().size());
    for (std::size_t s = 0; s < parts.parts().size(); ++s) {
        const auto &projector = parts.parts()[s];
        std::vector<Vector<T>> fragments;
        fragments.reserve(book.size());
        for (const auto &codeword : book.messages()) {
            fragments.push_back(projector.apply(codeword));
        }
        shares.push_back({s, projector, std::move(fragments)});
    }
    return shares;
}

template <FieldScalar T>
std::vector<Vector<T>> recombine(std::span<const Share<T>> shares) {
    if (shares.empty()) {
        throw IncompleteShares("no shares to recombine");
    }
    const std::size_t dim = shares.front().projector.dim();
    const std::size_t k = shares.front().fragments.size();
    std::vector<int> owners(dim, 0);
    for (const auto &share : shares) {
        if (share.projector.dim() != dim) {
            throw DimensionMismatch("shares disagree on dimension");
        }
        if (share.fragments.size() != k) {
            throw DimensionMismatch("shares disagree on the number of messages");
        }
        for (std::size_t c : share.projector.kept()) {
            ++owners[c];
        }
    }
    for (std::size_t c = 0; c < dim; ++c) {
        if (owners[c] != 1) {
            throw IncompleteShares("coordinate " + std::to_string(c + 1) + " is covered by " +
                                   std::to_string(owners[c]) +
                                   " shares; the projectors do not sum to the identity");
        }
    }
    std::vector<Vector<T>> recovered(k, Vector<T>(dim));
    for (const auto &share : shares) {
        for (std::size_t mu = 0; mu < k; ++mu) {
            recovered[mu] += share.fragments[mu];
        }
    }
    return recovered;
}

template <FieldScalar T>
std::size_t decode(const Vector<T> &state, const Codebook<T> &book, double tol) {
    if (state.dim() != book.dim()) {
        throw DimensionMismatch("state of dimension " + std::to_string(state.dim()) + " for a codebook in R^" +
                                std::to_string(book.dim()));
    }
    T norm2 = squared_norm(state);
    if (ScalarTraits<T>::is_zero(norm2, 0)) {
        throw DomainError("cannot decode the zero state");
    }
    std::vector<T> overlaps2;
    overlaps2.reserve(book.size());
    for (const auto &codeword : book.messages()) {
        T o = inner(state, codeword);
        overlaps2.push_back(o * o);
    }
    auto best = static_cast<std::size_t>(std::max_element(overlaps2.begin(), overlaps2.end()) - overlaps2.begin());
    T runner_up(0);
    for (std::size_t mu = 0; mu < overlaps2.size(); ++mu) {
        if (mu != best && overlaps2[mu] > runner_up) {
            runner_up = overlaps2[mu];
        }
    }
    bool ok;
    if constexpr (backend_of<T> == Backend::exact) {
        ok = overlaps2[best] == norm2 && runner_up.is_zero();
    } else {
        ok = overlaps2[best] >= (1 - tol) * norm2 && runner_up <= tol * norm2;
    }
    if (!ok) {
        throw AmbiguousDecode("state overlaps codeword " + std::to_string(best + 1) + " with squared overlap " +
                              format_scalar(overlaps2[best]) + " of " + format_scalar(norm2) +
                              "; runner-up squared overlap " + format_scalar(runner_up));
    }
    return best;
}

template <FieldScalar T>
CommeasurabilityWitness<T> noncommeasurability_check(const Share<T> &share, double tol) {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < share.fragments.size(); ++i) {
        if (!share.fragments[i].is_zero(tol)) {
            nonzero.push_back(i);
        }
    }
    if (nonzero.size() < 2) {
        throw DomainError("share has " + std::to_string(nonzero.size()) +
                          " nonzero fragments; at least two are needed");
    }
    for (std::size_t a = 0; a < nonzero.size(); ++a) {
        for (std::size_t b = a + 1; b < nonzero.size(); ++b) {
            Matrix<T> c = commutator(dyad(share.fragments[nonzero[a]]), dyad(share.fragments[nonzero[b]]));
            if (!c.is_zero(tol)) {
                return {true, std::move(c), nonzero[a], nonzero[b]};
            }
        }
    }
    return {false, std::nullopt, 0, 0};
}

#define EUTACTIC_INSTANTIATE_SHARING(T)                                                              \
    template Codebook<T> make_codebook<T>(std::vector<Vector<T>>, double);                           \
    template Vector<T> encode<T>(std::size_t, const Codebook<T> &);                                  \
    template std::vector<Share<T>> split<T>(const Codebook<T> &, const ShareSplit &);                \
    template std::vector<Vector<T>> recombine<T>(std::span<const Share<T>>);                         \
    template std::size_t decode<T>(const Vector<T> &, const Codebook<T> &, double);                  \
    template CommeasurabilityWitness<T> noncommeasurability_check<T>(const Share<T> &, double);

EUTACTIC_INSTANTIATE_SHARING(double)
EUTACTIC_INSTANTIATE_SHARING(QuadScalar)

}  // namespace eutactic
