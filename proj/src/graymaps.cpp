#include "rcc/graymaps.hpp"

#include <algorithm>
#include <optional>

namespace rcc {

Residue GrayComponent::apply(const RingElem& x) const {
    const Residue p = x.context().p;
    Residue acc = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) acc = fp::add(acc, fp::mul(weights[j], x.coeffs()[j], p), p);
    return acc;
}

GrayLayout::GrayLayout(RingContext ctx) : ctx_(ctx) {
    require(ctx.k >= 1, ErrorKind::InvalidParameter, "Gray layout needs k >= 1");
    const std::size_t width = static_cast<std::size_t>(ctx.k) + 1;
    const auto k = static_cast<std::size_t>(ctx.k);
    {
        std::vector<Residue> w(width, 0);
        w[k] = fp::neg(1, ctx.p);
        components_.push_back({"-a" + std::to_string(k), std::move(w)});
    }
    for (std::size_t j = 1; j + 1 <= k; j += 2) {
        std::vector<Residue> w(width, 0);
        w[j] = 1;
        components_.push_back({"a" + std::to_string(j), std::move(w)});
    }
    std::vector<Residue> w(width, 0);
    w[0] = 2 % ctx.p;
    w[k] = fp::add(w[k], 1, ctx.p);
    components_.push_back({"2a0+a" + std::to_string(k), std::move(w)});
}

namespace {

void check_layout(const RingContext& ctx, const GrayLayout& layout) {
    if (!(ctx == layout.context())) throw Error(ErrorKind::ContextMismatch, "Gray layout built for another ring");
}

}  // namespace

FpVector gray_map(const RingElem& x, const GrayLayout& layout) {
    check_layout(x.context(), layout);
    FpVector out(x.context().p, layout.width());
    for (std::size_t t = 0; t < layout.width(); ++t) out.set(t, layout.components()[t].apply(x));
    return out;
}

FpVector gray_map(const RWord& v, const GrayLayout& layout) {
    const std::size_t m = v.size();
    const std::size_t n = layout.width();
    FpVector out(layout.context().p, n * m);
    for (std::size_t i = 0; i < m; ++i) {
        check_layout(v[i].context(), layout);
        for (std::size_t t = 0; t < n; ++t) out.set(t * m + i, layout.components()[t].apply(v[i]));
    }
    return out;
}

RingElem gray_inverse(const FpVector& w, RingContext ctx) {
    if (ctx.k != 2)
        throw Error(ErrorKind::Precondition,
                    "Gray map is invertible only for k = 2 (k = " + std::to_string(ctx.k) + " requested)");
    if (w.size() != 3 || w.modulus() != ctx.p) throw Error(ErrorKind::ContextMismatch, "Gray inverse needs 3 entries mod p");
    const Residue p = ctx.p;
    const Residue a2 = fp::neg(w[0], p);
    const Residue a1 = w[1];
    const Residue a0 = fp::mul(fp::inv(2, p), fp::add(w[2], w[0], p), p);
    return RingElem(ctx, std::vector<Residue>{a0, a1, a2});
}

RWord gray_inverse_word(const FpVector& w, RingContext ctx, std::size_t m) {
    if (w.size() != 3 * m) throw Error(ErrorKind::ContextMismatch, "Gray inverse word needs length 3m");
    RWord out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) out.push_back(gray_inverse(FpVector(ctx.p, {w[i], w[m + i], w[2 * m + i]}), ctx));
    return out;
}

LinearCodeFp gray_image(const ConstaCodeR& code, const GrayLayout& layout) {
    std::vector<FpVector> rows;
    for (const auto& w : code.basis_words()) rows.push_back(gray_map(w, layout));
    return LinearCodeFp(code.context().p, layout.width() * code.length(), std::move(rows));
}

std::optional<RingElem> gray_kernel_witness(const GrayLayout& layout) {
    const RingContext& ctx = layout.context();
    const std::size_t width = static_cast<std::size_t>(ctx.k) + 1;
    std::vector<linalg::Row> rows;
    for (const auto& c : layout.components()) rows.push_back(c.weights);
    const auto kernel = linalg::null_space(linalg::rref(ctx.p, width, std::move(rows)));
    if (kernel.empty()) return std::nullopt;
    return RingElem(ctx, kernel.front());
}

// ---------------------------------------------------------------- permutations

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto i : image_) {
        if (i >= image_.size() || seen[i]) throw Error(ErrorKind::Precondition, "image array is not a bijection");
        seen[i] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (inner.size() != size()) throw Error(ErrorKind::ContextMismatch, "composing permutations of different sizes");
    std::vector<std::size_t> img(size());
    for (std::size_t i = 0; i < size(); ++i) img[i] = image_[inner.image_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> img(size());
    for (std::size_t i = 0; i < size(); ++i) img[image_[i]] = i;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

FpVector Permutation::apply(const FpVector& v) const {
    if (v.size() != size())
        throw Error(ErrorKind::ContextMismatch, "permutation of size " + std::to_string(size()) +
                                                    " applied to a vector of length " + std::to_string(v.size()));
    FpVector out(v.modulus(), v.size());
    for (std::size_t i = 0; i < size(); ++i) out.set(i, v[image_[i]]);
    return out;
}

Permutation nechaev_psi(std::size_t m) {
    if (m % 2 == 0) throw Error(ErrorKind::Precondition, "Nechaev permutation needs odd m");
    std::vector<std::size_t> img(2 * m);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = i;
    for (std::size_t j = 1; j + 2 <= m; j += 2) std::swap(img[j], img[m + j]);
    return Permutation(std::move(img));
}

Permutation nechaev_rho_permutation(std::size_t m) {
    const Permutation psi = nechaev_psi(m);
    std::vector<std::size_t> img(3 * m);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = i < 2 * m ? psi(i) : i;
    return Permutation(std::move(img));
}

FpVector nechaev_rho(const FpVector& w, std::size_t m) {
    if (m % 2 == 0) throw Error(ErrorKind::Precondition, "Nechaev permutation needs odd m");
    if (w.size() != 3 * m) throw Error(ErrorKind::ContextMismatch, "Nechaev permutation acts on length 3m");
    return nechaev_rho_permutation(m).apply(w);
}

LinearCodeFp permute_code(const LinearCodeFp& code, const Permutation& perm) {
    if (perm.size() != code.length()) throw Error(ErrorKind::ContextMismatch, "permutation length differs from code length");
    std::vector<FpVector> rows;
    for (const auto& b : code.basis()) rows.push_back(perm.apply(b));
    return LinearCodeFp(code.modulus(), code.length(), std::move(rows));
}

}  // namespace rcc
