#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace fourbell {

using cdouble = std::complex<double>;

/// The eight optical modes of the four-photon scheme: spatial paths
/// 1, 1', 2, 2' times polarizations x, y. Paths 1 and 2 carry the Bell
/// photons, 1' and 2' the selector photons that meet at the beam splitter.
enum class Spatial : int { path1 = 0, path1p = 1, path2 = 2, path2p = 3 };
enum class Pol : int { x = 0, y = 1 };

/// Fixed total ordering: index = 2*spatial + pol, i.e.
/// 1x, 1y, 1'x, 1'y, 2x, 2y, 2'x, 2'y.
struct ModeIndex {
    Spatial spatial;
    Pol pol;

    constexpr int value() const {
        return 2 * static_cast<int>(spatial) + static_cast<int>(pol);
    }
};

inline constexpr int n_modes = 8;

constexpr int mode(Spatial sp, Pol p) {
    return 2 * static_cast<int>(sp) + static_cast<int>(p);
}

/// Occupation numbers of the eight modes, each capped at 2 photons.
/// Packed into a nibble per mode so it can key a map directly.
class Occupation {
  public:
    Occupation() = default;
    explicit Occupation(std::uint32_t packed) : packed_(packed) {}

    int operator[](int m) const { return int((packed_ >> (4 * m)) & 0xF); }

    Occupation with(int m, int n) const {
        if (n < 0 || n > max_per_mode)
            throw std::out_of_range("Occupation: mode occupancy outside [0,2]");
        std::uint32_t cleared = packed_ & ~(std::uint32_t(0xF) << (4 * m));
        return Occupation(cleared | (std::uint32_t(n) << (4 * m)));
    }

    int total() const {
        int t = 0;
        for (int m = 0; m < n_modes; ++m) t += (*this)[m];
        return t;
    }

    std::array<int, n_modes> counts() const {
        std::array<int, n_modes> c{};
        for (int m = 0; m < n_modes; ++m) c[m] = (*this)[m];
        return c;
    }

    std::uint32_t packed() const { return packed_; }
    auto operator<=>(const Occupation&) const = default;

    static constexpr int max_per_mode = 2;

  private:
    std::uint32_t packed_ = 0;
};

/// Superposition over occupation-number basis states. Amplitudes are kept
/// in a sorted map; terms below `prune_eps` are dropped on insertion.
class FockState {
  public:
    using Terms = std::map<Occupation, cdouble>;

    FockState() = default;

    static FockState vacuum() {
        FockState s;
        s.terms_[Occupation{}] = 1.0;
        return s;
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    cdouble amplitude(const Occupation& occ) const {
        auto it = terms_.find(occ);
        return it == terms_.end() ? cdouble(0.0) : it->second;
    }

    void add(const Occupation& occ, cdouble amp) {
        auto [it, inserted] = terms_.try_emplace(occ, amp);
        if (!inserted) it->second += amp;
        if (std::abs(it->second) < prune_eps) terms_.erase(it);
    }

    double norm_squared() const {
        double n2 = 0.0;
        for (const auto& [occ, amp] : terms_) n2 += std::norm(amp);
        return n2;
    }

    FockState& operator*=(cdouble c) {
        for (auto& [occ, amp] : terms_) amp *= c;
        return *this;
    }

    FockState& operator+=(const FockState& other) {
        for (const auto& [occ, amp] : other.terms_) add(occ, amp);
        return *this;
    }

    /// Rescales to unit norm; throws on the zero state.
    FockState& normalize() {
        const double n2 = norm_squared();
        if (n2 <= 0.0) throw std::domain_error("FockState: cannot normalize zero state");
        return (*this) *= 1.0 / std::sqrt(n2);
    }

    /// True when every term carries exactly `n` photons in total.
    bool has_uniform_photon_number(int n) const {
        for (const auto& [occ, amp] : terms_)
            if (occ.total() != n) return false;
        return !terms_.empty();
    }

    /// a_m^dagger applied to every term; rejects occupancies above the cap.
    FockState apply_creation(int m) const {
        FockState out;
        for (const auto& [occ, amp] : terms_) {
            const int n = occ[m];
            out.add(occ.with(m, n + 1), amp * std::sqrt(double(n + 1)));
        }
        return out;
    }

    /// a_m applied to every term.
    FockState apply_annihilation(int m) const {
        FockState out;
        for (const auto& [occ, amp] : terms_) {
            const int n = occ[m];
            if (n == 0) continue;
            out.add(occ.with(m, n - 1), amp * std::sqrt(double(n)));
        }
        return out;
    }

    static constexpr double prune_eps = 1e-300;

  private:
    Terms terms_;
};

inline FockState operator*(cdouble c, FockState s) {
    s *= c;
    return s;
}

namespace detail {

inline cdouble ipow(cdouble base, int e) {
    cdouble out = 1.0;
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}

inline constexpr double factorial[5] = {1.0, 1.0, 2.0, 6.0, 24.0};

inline constexpr double binom(int n, int k) {
    return factorial[n] / (factorial[k] * factorial[n - k]);
}

}  // namespace detail

/// Rewrites creation operators of two modes by a 2x2 linear substitution:
///   a_ma^dag -> m00*a_ma^dag + m10*a_mb^dag
///   a_mb^dag -> m01*a_ma^dag + m11*a_mb^dag
/// Unitary matrices preserve the norm; this is the primitive behind both
/// the beam-splitter action and polarization-basis rotations.
inline FockState mix_modes(const FockState& state, int ma, int mb,
                           cdouble m00, cdouble m10, cdouble m01, cdouble m11) {
    using detail::binom;
    using detail::factorial;
    using detail::ipow;
    FockState out;
    for (const auto& [occ, amp] : state.terms()) {
        const int na = occ[ma];
        const int nb = occ[mb];
        // Work with the raw monomial coefficient: amp = coef * sqrt(na! nb!).
        const cdouble coef = amp / std::sqrt(factorial[na] * factorial[nb]);
        // Binomial expansion of (m00 A + m10 B)^na (m01 A + m11 B)^nb.
        for (int i = 0; i <= na; ++i) {
            for (int j = 0; j <= nb; ++j) {
                const cdouble c = coef * binom(na, i) * binom(nb, j) *
                                  ipow(m00, i) * ipow(m10, na - i) *
                                  ipow(m01, j) * ipow(m11, nb - j);
                const int new_a = i + j;
                const int new_b = (na - i) + (nb - j);
                if (new_a > Occupation::max_per_mode || new_b > Occupation::max_per_mode)
                    throw std::domain_error("mix_modes: occupancy cap exceeded");
                out.add(occ.with(ma, new_a).with(mb, new_b),
                        c * std::sqrt(factorial[new_a] * factorial[new_b]));
            }
        }
    }
    return out;
}

}  // namespace fourbell
