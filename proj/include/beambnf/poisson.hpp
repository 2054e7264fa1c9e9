#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "beambnf/spectrum.hpp"

namespace beambnf {

/// Sparse algebra of paired polynomials in (z, conj z): every monomial
/// carries each index with an even total exponent, i.e. it factors into
/// z_l^s z_l^s' pairs.  This structure is preserved by products and Poisson
/// brackets and is the backbone of the normal-form construction.

class PairedMonomial {
  public:
    struct Slot {
        std::uint32_t index = 0;  // 1-based mode index
        std::uint8_t up = 0;      // exponent of z_index
        std::uint8_t down = 0;    // exponent of conj(z_index)
        friend bool operator==(const Slot&, const Slot&) = default;
    };
    static constexpr int kMaxSlots = 8;

    PairedMonomial() = default;
    // Slots need not be sorted or merged; zero slots are dropped.
    explicit PairedMonomial(const std::vector<Slot>& slots);

    // Appends one z_l^a z_l^b pair (a, b = +1 for z, -1 for conj z).
    void push_pair(int index, int sign_a, int sign_b);

    int degree() const;
    int n_slots() const { return n_; }
    const Slot& slot(int t) const { return slots_[static_cast<std::size_t>(t)]; }
    bool is_paired() const;  // every slot has even up+down
    bool is_action() const;  // up == down on every slot
    int max_index() const { return n_ ? static_cast<int>(slots_[static_cast<std::size_t>(n_ - 1)].index) : 0; }

    // sum_l (up_l - down_l) omega_l; omega is 1-based via omega[l-1].
    double small_divisor(const std::vector<double>& omega) const;
    // sum_l (up_l - down_l) l^2, exact integer arithmetic
    long long net_index_square() const;
    bool net_signs_zero() const;

    PairedMonomial conjugated() const;  // swaps up/down everywhere

    friend bool operator==(const PairedMonomial& a, const PairedMonomial& b);
    bool operator<(const PairedMonomial& other) const;  // degree, then slot-lex

    struct Hash {
        std::size_t operator()(const PairedMonomial& mono) const;
    };

    // Merges (up, down) into the slot for `index`, keeping slots sorted;
    // removes the slot if both exponents reach zero.
    void insert_merged(std::uint32_t index, int up, int down);

  private:
    std::array<Slot, kMaxSlots> slots_{};
    std::uint8_t n_ = 0;
};

class PairedPolynomial {
  public:
    using Coeff = std::complex<double>;
    using TermMap = std::unordered_map<PairedMonomial, Coeff, PairedMonomial::Hash>;

    PairedPolynomial() = default;

    void add(const PairedMonomial& mono, Coeff c);
    std::size_t n_terms() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Coeff coefficient(const PairedMonomial& mono) const;

    // Terms in canonical order (degree, then slot-lexicographic); use this
    // wherever iteration order must be reproducible.
    std::vector<std::pair<PairedMonomial, Coeff>> sorted_terms() const;

    double max_abs_coefficient() const;
    int max_index() const;
    int min_degree() const;
    int max_degree() const;
    bool is_paired() const;
    // coeff(alpha,beta) == conj(coeff(beta,alpha)) within tol, so the
    // polynomial is real-valued on states.
    bool is_real_valued(double tol = 1e-12) const;

    PairedPolynomial operator*(double s) const;
    PairedPolynomial operator+(const PairedPolynomial& other) const;
    PairedPolynomial operator-(const PairedPolynomial& other) const;

  private:
    TermMap terms_;
};

// {F, G} = i sum_j (dF/dz_j dG/dconj z_j - dF/dconj z_j dG/dz_j).
// Paired in, paired out; degree drops by 2 per term pair.
PairedPolynomial bracket(const PairedPolynomial& F, const PairedPolynomial& G);

PairedPolynomial multiply(const PairedPolynomial& F, const PairedPolynomial& G);

// Pointwise value; throws std::out_of_range if a monomial index exceeds the
// state's truncation.
std::complex<double> evaluate(const PairedPolynomial& P, const ModeState& z);

// Hamiltonian vector field X^h = i dP/dconj z_h evaluated at z.
ModeState hamiltonian_field(const PairedPolynomial& P, const ModeState& z);

// Flattened field representation for repeated evaluation (flow integration).
class CompiledField {
  public:
    CompiledField() = default;
    CompiledField(const PairedPolynomial& P, int n_trunc);
    void apply(const ModeState& z, ModeState& out) const;  // out = X_P(z)
    int n_trunc() const { return n_; }

  private:
    struct Term {
        std::uint32_t component;  // h, 1-based
        std::complex<double> coeff;
        std::array<PairedMonomial::Slot, PairedMonomial::kMaxSlots> slots;
        std::uint8_t n_slots;
    };
    std::vector<Term> terms_;
    int n_ = 0;
};

// Certified upper bound on |P|_{r,w} = r^{-1} sup_{|z|_w <= r} |X_majorant|_w.
// Two certified estimates are computed (a grouped simplex bound exploiting
// the even-exponent structure, and a per-monomial corner bound) and the
// smaller is returned.  Monotone in |coefficients|; exact power scaling in r
// for homogeneous input.
double norm_upper_bound(const PairedPolynomial& P, double r, const WeightSequence& w);

// Restriction to action monomials (degree must be exactly 4).
PairedPolynomial project_integrable4(const PairedPolynomial& P);
// Restriction to the structurally resonant set at this m (degree exactly 6):
// action monomials, plus integer-vanishing combinations when m == 0.
PairedPolynomial project_integrable6(const PairedPolynomial& P, double m);

PairedPolynomial truncate_degree(const PairedPolynomial& P, int d_max);

// One line per monomial: "coeff  idx:ss idx:ss ...", canonical order.
std::string dump(const PairedPolynomial& P);

}  // namespace beambnf
