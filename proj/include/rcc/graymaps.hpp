#ifndef RCC_GRAYMAPS_HPP
#define RCC_GRAYMAPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rcc/codes.hpp"
#include "rcc/ring_r.hpp"

namespace rcc {

/// An F_p-linear functional on R, as the weights of (a_0, ..., a_k).
struct GrayComponent {
    std::string label;
    std::vector<Residue> weights;

    Residue apply(const RingElem& x) const;
};

/// Component list read literally: -a_k, then a_j for odd j in [1, k-1], then 2a_0 + a_k.
/// Words are laid out block-major: position t*m + i holds component t of coordinate i.
class GrayLayout {
public:
    explicit GrayLayout(RingContext ctx);

    const RingContext& context() const noexcept { return ctx_; }
    const std::vector<GrayComponent>& components() const noexcept { return components_; }
    std::size_t width() const noexcept { return components_.size(); }

private:
    RingContext ctx_;
    std::vector<GrayComponent> components_;
};

FpVector gray_map(const RingElem& x, const GrayLayout& layout);
FpVector gray_map(const RWord& v, const GrayLayout& layout);

/// Inverse of the k = 2 map: a_2 = -w_0, a_1 = w_1, a_0 = 2^{-1}(w_2 + w_0).
RingElem gray_inverse(const FpVector& w, RingContext ctx);
RWord gray_inverse_word(const FpVector& w, RingContext ctx, std::size_t m);

/// Image of an R-code: the span of the Gray images of its F_p basis.
LinearCodeFp gray_image(const ConstaCodeR& code, const GrayLayout& layout);

/// A nonzero element of R with zero Gray image, if the map is not injective.
std::optional<RingElem> gray_kernel_witness(const GrayLayout& layout);

/// Bijection on {0, ..., n-1}; apply(v)[i] = v[image[i]].
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return image_.size(); }
    const std::vector<std::size_t>& image() const noexcept { return image_; }
    std::size_t operator()(std::size_t i) const { return image_.at(i); }

    Permutation compose(const Permutation& inner) const;  // (this o inner)(i) = this(inner(i))
    Permutation inverse() const;
    bool is_identity() const noexcept;

    FpVector apply(const FpVector& v) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

/// (1, m+1)(3, m+3)...(m-2, 2m-2) on {0, ..., 2m-1}; m odd.
Permutation nechaev_psi(std::size_t m);

/// psi on the first 2m of 3m positions, identity on the rest.
Permutation nechaev_rho_permutation(std::size_t m);
FpVector nechaev_rho(const FpVector& w, std::size_t m);

LinearCodeFp permute_code(const LinearCodeFp& code, const Permutation& perm);

}  // namespace rcc

#endif
