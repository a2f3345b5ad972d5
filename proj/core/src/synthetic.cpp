#include "textscale/synthetic.hpp"

#include <cmath>
#include <string>

#include "textscale/errors.hpp"

namespace textscale {
namespace {

// expm1(x)/x and log1p(x)/x, continuous through x = 0. They make the
// integral of k^(-s) and its inverse smooth across s = 1.
double ratio_expm1(double x) { return x == 0.0 ? 1.0 : std::expm1(x) / x; }
double ratio_log1p(double x) { return x == 0.0 ? 1.0 : std::log1p(x) / x; }

} // namespace

ZipfSampler::ZipfSampler(std::uint64_t vocab_size, double exponent, Strategy strategy)
    : vocab_size_(vocab_size), exponent_(exponent), strategy_(strategy) {
    if (vocab_size_ < 1) throw Error("vocab_size must be >= 1");
    if (!(exponent_ >= 0.0)) throw Error("zipf_exponent must be >= 0");

    if (strategy_ == Strategy::auto_select) {
        strategy_ =
            (exponent_ == 0.0 || vocab_size_ <= kMaxTableSize) ? Strategy::cdf_table
                                                               : Strategy::rejection;
    }

    if (strategy_ == Strategy::cdf_table) {
        if (exponent_ == 0.0) return; // uniform ranks, no table needed
        if (vocab_size_ > kMaxTableSize) {
            throw Error("cdf_table strategy limited to " + std::to_string(kMaxTableSize) +
                        " ranks");
        }
        cdf_.resize(vocab_size_);
        double acc = 0.0;
        for (std::uint64_t k = 1; k <= vocab_size_; ++k) {
            acc += std::pow(static_cast<double>(k), -exponent_);
            cdf_[k - 1] = acc;
        }
        for (double& v : cdf_) v /= acc;
        cdf_.back() = 1.0;
    } else {
        const auto h_integral = [this](double x) {
            const double lx = std::log(x);
            return ratio_expm1((1.0 - exponent_) * lx) * lx;
        };
        h_x1_ = h_integral(1.5) - 1.0;
        h_n_ = h_integral(static_cast<double>(vocab_size_) + 0.5);
        const double h2 = std::exp(-exponent_ * std::log(2.0));
        double t = (h_integral(2.5) - h2) * (1.0 - exponent_);
        if (t < -1.0) t = -1.0;
        s_ = 2.0 - std::exp(ratio_log1p(t) * (h_integral(2.5) - h2));
    }
}

std::uint64_t ZipfSampler::draw_from_table(Rng& rng) const {
    if (exponent_ == 0.0) return 1 + rng.below(vocab_size_);
    const double u = rng.uniform01();
    // First index whose cumulative weight exceeds u.
    std::size_t lo = 0;
    std::size_t hi = cdf_.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cdf_[mid] <= u) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo + 1;
}

std::uint64_t ZipfSampler::draw_rejection(Rng& rng) const {
    // Rejection-inversion for bounded Zipf (Hormann & Derflinger 1996):
    // invert the integral of the continuous envelope, round to the nearest
    // rank, and accept against the exact discrete mass.
    const auto h_integral = [this](double x) {
        const double lx = std::log(x);
        return ratio_expm1((1.0 - exponent_) * lx) * lx;
    };
    const auto h = [this](double x) { return std::exp(-exponent_ * std::log(x)); };
    const auto h_integral_inverse = [this](double y) {
        double t = y * (1.0 - exponent_);
        if (t < -1.0) t = -1.0;
        return std::exp(ratio_log1p(t) * y);
    };

    for (;;) {
        const double u = h_n_ + rng.uniform01() * (h_x1_ - h_n_);
        const double x = h_integral_inverse(u);
        auto k = static_cast<std::uint64_t>(x + 0.5);
        if (k < 1) {
            k = 1;
        } else if (k > vocab_size_) {
            k = vocab_size_;
        }
        if (static_cast<double>(k) - x <= s_ ||
            u >= h_integral(static_cast<double>(k) + 0.5) - h(static_cast<double>(k))) {
            return k;
        }
    }
}

std::uint64_t ZipfSampler::draw(Rng& rng) const {
    if (vocab_size_ == 1) return 1;
    if (strategy_ == Strategy::cdf_table) return draw_from_table(rng);
    if (exponent_ == 0.0) return 1 + rng.below(vocab_size_);
    return draw_rejection(rng);
}

TokenSequence generate(const SyntheticSpec& spec) {
    if (spec.length < 1) throw Error("synthetic length must be >= 1");
    ZipfSampler sampler(spec.vocab_size, spec.zipf_exponent);
    Rng rng(spec.seed);

    auto vocab = std::make_shared<Vocabulary>();
    std::vector<std::uint32_t> ids;
    ids.reserve(spec.length);
    std::uint64_t byte_length = 0;
    std::string word;
    for (std::uint64_t i = 0; i < spec.length; ++i) {
        word = "w" + std::to_string(sampler.draw(rng));
        ids.push_back(vocab->intern(word));
        byte_length += word.size() + 1;
    }
    byte_length -= 1;

    std::string source = "synthetic:v" + std::to_string(spec.vocab_size) + ":e" +
                         std::to_string(spec.zipf_exponent) + ":n" +
                         std::to_string(spec.length) + ":seed" + std::to_string(spec.seed);
    return TokenSequence(std::move(vocab), std::move(ids), std::move(source), byte_length, 0);
}

TokenSequence shuffle(const TokenSequence& seq, std::uint64_t seed) {
    if (seq.empty()) throw EmptyDocument(seq.source_id());
    std::vector<std::uint32_t> ids(seq.view().ids.begin(), seq.view().ids.end());
    Rng rng(seed);
    for (std::size_t i = ids.size() - 1; i > 0; --i) {
        const std::size_t j = rng.below(i + 1);
        std::swap(ids[i], ids[j]);
    }
    return TokenSequence(seq.vocab_ptr(), std::move(ids),
                         seq.source_id() + "|shuffled:" + std::to_string(seed),
                         seq.byte_length(), seq.utf8_replacements());
}

} // namespace textscale
