#ifndef AGFILT_GF_HPP
#define AGFILT_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace agfilt {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// An element of GF(p^k), stored as the reduced coefficient vector of a
/// polynomial of degree < k (rep[i] is the coefficient of x^i, 0 <= rep[i] < p).
/// Elements are immutable values; equality is structural.
class FieldElement {
  public:
    FieldElement() = default;  // detached element; usable only as a placeholder

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<std::uint32_t>& rep() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;

    /// Position in the canonical enumeration order: sum of rep[i] * p^i.
    std::uint64_t index() const;

    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  private:
    friend class FieldSpec;
    FieldElement(FieldSpecPtr spec, std::vector<std::uint32_t> rep);

    FieldSpecPtr spec_;
    std::vector<std::uint32_t> rep_;
};

/// A validated description of GF(p^k): p prime, and for k > 1 a monic
/// irreducible modulus polynomial of degree k over GF(p). Specs are shared,
/// immutable, and structurally comparable; construct through field_new().
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint64_t q() const { return q_; }

    /// Monic modulus, rep'd as k+1 coefficients (constant term first).
    /// Empty for prime fields (k == 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x in GF(p)[x]/(modulus); requires k > 1.
    FieldElement gen() const;

    /// Embeds an integer through GF(p) (reduced mod p; negatives allowed).
    FieldElement from_int(std::int64_t v) const;
    /// Element with the given coefficients (low degree first, size <= k),
    /// entries reduced mod p.
    FieldElement from_coeffs(const std::vector<std::int64_t>& coeffs) const;
    /// Inverse of FieldElement::index(); idx < q.
    FieldElement from_index(std::uint64_t idx) const;

    /// All q elements in canonical order (index 0, 1, ..., q-1).
    std::vector<FieldElement> enumerate() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b);

  private:
    friend FieldSpecPtr field_new(std::uint32_t, std::uint32_t,
                                  std::optional<std::vector<std::uint32_t>>);
    FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus,
              std::uint64_t q)
        : p_(p), k_(k), q_(q), modulus_(std::move(modulus)) {}

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
};

/// Builds GF(p^k). For k > 1, `modulus` must be a monic irreducible polynomial
/// of degree k given as k+1 coefficients (constant first); when omitted the
/// lexicographically least irreducible monic polynomial is found by search.
/// Field sizes are capped at q = p^k <= 2^16.
///
/// Throws CompositeModulus when p is not prime, ReducibleModulus when the
/// modulus fails the irreducibility check.
FieldSpecPtr field_new(std::uint32_t p, std::uint32_t k = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

}  // namespace agfilt

#endif
