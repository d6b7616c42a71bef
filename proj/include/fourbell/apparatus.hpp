#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fourbell {

inline constexpr double pi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / pi; }

/// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double rad) {
    double w = std::fmod(rad, 2.0 * pi);
    return w < 0.0 ? w + 2.0 * pi : w;
}

/// Lossless beam splitter described by amplitude transmittances and
/// reflectances per polarization. t_q^2 + r_q^2 = 1 must hold for each
/// polarization q; the reflected amplitude carries a factor i wherever the
/// splitter enters a field operator.
class BeamSplitter {
  public:
    BeamSplitter(double t_x, double t_y, double r_x, double r_y)
        : t_x_(t_x), t_y_(t_y), r_x_(r_x), r_y_(r_y) {
        check_amplitude(t_x_);
        check_amplitude(t_y_);
        check_amplitude(r_x_);
        check_amplitude(r_y_);
        if (std::abs(t_x_ * t_x_ + r_x_ * r_x_ - 1.0) > unitarity_tol ||
            std::abs(t_y_ * t_y_ + r_y_ * r_y_ - 1.0) > unitarity_tol)
            throw std::invalid_argument("BeamSplitter: t^2 + r^2 != 1");
    }

    /// Near-normal incidence: intensity reflectivity R identical for both
    /// polarizations, T = 1 - R.
    static BeamSplitter from_reflectivity(double big_r) {
        if (!(big_r >= 0.0 && big_r <= 1.0))
            throw std::invalid_argument("BeamSplitter: R outside [0,1]");
        const double r = std::sqrt(big_r);
        const double t = std::sqrt(1.0 - big_r);
        return BeamSplitter(t, t, r, r);
    }

    /// rho = R/T parameterization; rho = R/(1-R), so R = rho/(1+rho).
    static BeamSplitter from_rho(double rho) {
        if (!(rho >= 0.0))
            throw std::invalid_argument("BeamSplitter: rho must be >= 0");
        return from_reflectivity(rho / (1.0 + rho));
    }

    static BeamSplitter symmetric() { return from_reflectivity(0.5); }

    double t_x() const { return t_x_; }
    double t_y() const { return t_y_; }
    double r_x() const { return r_x_; }
    double r_y() const { return r_y_; }

    bool polarization_independent() const {
        return std::abs(t_x_ - t_y_) < unitarity_tol &&
               std::abs(r_x_ - r_y_) < unitarity_tol;
    }

    // Intensity coefficients for the polarization-independent case.
    double big_t() const { return t_x_ * t_x_; }
    double big_r() const { return r_x_ * r_x_; }
    /// Amplitude asymmetry rho = R/T of the gated two-photon state.
    double rho() const { return big_r() / big_t(); }
    /// Gating normalization s = T^2/(R^2 + T^2).
    double s() const {
        const double t2 = big_t(), r2 = big_r();
        return t2 * t2 / (r2 * r2 + t2 * t2);
    }

    static constexpr double unitarity_tol = 1e-9;

  private:
    static void check_amplitude(double q) {
        if (!(q >= 0.0 && q <= 1.0))
            throw std::invalid_argument("BeamSplitter: amplitude outside [0,1]");
    }

    double t_x_, t_y_, r_x_, r_y_;
};

/// Polarizer orientations, radians. a1/a2 are the two analyzer settings in
/// front of detector D1, b1/b2 those for D2. alpha and beta orient the
/// selector polarizers P1' and P2'; the gating configuration of the scheme
/// is alpha = 90 deg, beta = 0.
struct AnalyzerSettings {
    double a1 = 0.0;
    double a2 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double alpha = pi / 2.0;
    double beta = 0.0;

    static AnalyzerSettings from_degrees(double a1_deg, double a2_deg,
                                         double b1_deg, double b2_deg,
                                         double alpha_deg = 90.0,
                                         double beta_deg = 0.0) {
        return {deg2rad(a1_deg), deg2rad(a2_deg), deg2rad(b1_deg),
                deg2rad(b2_deg), deg2rad(alpha_deg), deg2rad(beta_deg)};
    }
};

/// Pinhole-averaged fringe visibility: v = v_e * sinc^2(pi*dz/L).
inline double combined_visibility(double v_e, double delta_z, double fringe_spacing) {
    if (!(v_e >= 0.0 && v_e <= 1.0))
        throw std::invalid_argument("combined_visibility: v_e outside [0,1]");
    if (!(fringe_spacing > 0.0))
        throw std::invalid_argument("combined_visibility: fringe spacing must be > 0");
    if (!(delta_z >= 0.0))
        throw std::invalid_argument("combined_visibility: pinhole width must be >= 0");
    if (delta_z == 0.0) return v_e;
    const double x = pi * delta_z / fringe_spacing;
    const double sinc = std::sin(x) / x;
    return v_e * sinc * sinc;
}

/// Fringe phase and visibility of the fourth-order interference.
/// The cross term of every coincidence probability is weighted by
/// v*cos(phi); v is either supplied directly or combined from the
/// packet-overlap factor v_e and the pinhole geometry.
struct InterferenceModel {
    double phi = 0.0;  // fringe phase, 2*pi*(z2-z1)/L
    double v_e = 1.0;  // packet-overlap visibility
    double v = 1.0;    // combined visibility

    static InterferenceModel from_visibility(double v, double phi = 0.0) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("InterferenceModel: v outside [0,1]");
        return {phi, v, v};
    }

    static InterferenceModel from_packet(double v_e, double delta_z,
                                         double fringe_spacing, double phi = 0.0) {
        return {phi, v_e, combined_visibility(v_e, delta_z, fringe_spacing)};
    }

    static InterferenceModel ideal() { return {0.0, 1.0, 1.0}; }
};

/// Detector with per-photon efficiency eta; a detector fires when at least
/// one of the incident photons is detected.
struct DetectorModel {
    double eta = 1.0;

    explicit DetectorModel(double eta_) : eta(eta_) {
        if (!(eta >= 0.0 && eta <= 1.0))
            throw std::invalid_argument("DetectorModel: eta outside [0,1]");
    }

    double fire_probability(int n_incident) const {
        if (n_incident < 0) throw std::invalid_argument("negative photon count");
        return 1.0 - std::pow(1.0 - eta, n_incident);
    }
};

}  // namespace fourbell
