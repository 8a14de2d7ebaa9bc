#pragma once

#include <vector>

#include "riscrb/types.hpp"

namespace riscrb::scene {

enum class PathlossModel { kFreeSpaceAmplitude, kUnitGain, kUserTable };

/// Full description of a localization scene: geometry of the RIS plate,
/// anchor/agent positions, carrier, pilot and noise/EMI parameters.
/// Distances in meters, powers in linear watts unless a field name says dB.
struct SceneConfig {
  double frequency = 30e9;                   // Hz
  std::vector<Vec3> anchor_positions;        // known receiver positions
  Vec3 agent_position{0.0, 0.0, 20.0};       // source position (q3 > 0)
  int ris_rows = 1;                          // elements along y
  int ris_cols = 1;                          // elements along x
  double element_len_y = 0.01;               // l1
  double element_len_x = 0.01;               // l2
  double element_spacing = 0.01;             // gap between adjacent elements
  int pilot_count = 64;                      // T
  double pilot_energy_per_sample = 1.0;
  RVector sigma2;                            // per-anchor thermal noise, W
  double emi_flux_dbw_per_m2 = -70.0;
  PathlossModel pathloss_model = PathlossModel::kFreeSpaceAmplitude;
  double anchor_gain_dbi = 40.0;             // receive gain toward the RIS
  // Overrides used when pathloss_model == kUserTable (one entry per anchor).
  CVector alpha_override, beta_override, zeta_override;

  double wavelength() const { return kSpeedOfLight / frequency; }
  double wavenumber() const { return 2.0 * M_PI / wavelength(); }
  int num_elements() const { return ris_rows * ris_cols; }
  int num_anchors() const { return static_cast<int>(anchor_positions.size()); }
  double pilot_energy() const { return pilot_count * pilot_energy_per_sample; }

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

/// Element centers on the z = 0 plane, regular lattice centered at the
/// origin. Row-major ordering: element n = row * cols + col, with rows
/// advancing along y and columns along x.
struct RisGrid {
  RVector t;        // x coordinates, size N
  RVector u;        // y coordinates, size N
  double pitch_x = 0.0;
  double pitch_y = 0.0;
  int rows = 0;
  int cols = 0;
  int size() const { return rows * cols; }
};

struct GeometryTables {
  RVector rho;      // N, element -> agent
  RVector r;        // M, anchor -> agent
  RMatrix d;        // M x N, anchor -> element
  RMatrix drho_dq;  // N x 3, each row the unit vector d(rho_n)/dq
  RMatrix dr_dq;    // M x 3, each row the unit vector d(r_m)/dq
};

/// Per-anchor channel pieces. Row m of each matrix belongs to anchor m.
struct ChannelSet {
  CVector alpha;    // M, cascaded-path amplitude
  CVector beta;     // M, direct-path amplitude
  CVector zeta;     // M, RIS -> anchor amplitude
  CVector a1;       // N, agent-side steering e^{-j k0 rho_n}
  CMatrix a2;       // M x N, anchor-side steering e^{-j k0 d_mn}
  CMatrix h_ris;    // M x N, alpha_m * (a1 .* a2_m)
  CVector h_dp;     // M, beta_m e^{-j k0 r_m}
  CMatrix h2;       // M x N, zeta_m * a2_m
};

struct EmiModel {
  RMatrix R;                  // N x N spatial correlation, linear power
  double emi_flux_linear = 0.0;   // W / m^2
  double effective_area = 0.0;    // l1 * l2
  double element_power() const { return emi_flux_linear * effective_area; }
};

struct Scene {
  SceneConfig cfg;
  RisGrid grid;
  GeometryTables geom;
  ChannelSet channels;
  EmiModel emi;
};

RisGrid build_grid(const SceneConfig& cfg);
GeometryTables geometry(const SceneConfig& cfg, const RisGrid& grid);
ChannelSet channels(const SceneConfig& cfg, const RisGrid& grid,
                    const GeometryTables& geom);
EmiModel emi_correlation(const SceneConfig& cfg, const RisGrid& grid);

/// Builds every scene artifact at once.
Scene build_scene(const SceneConfig& cfg);

/// General noise power at anchor m for reflection coefficients w:
/// P_m = w^T H2^T R H2^* w^* + sigma2_m. Requires |w_n| = 1.
double noise_power(const CVector& w, const Scene& sc, int m);

/// All P_m at once; emi_aware=false returns plain sigma2.
RVector noise_powers(const CVector& w, const Scene& sc, bool emi_aware = true);

/// sin(pi x) / (pi x), 1 at x = 0.
double sinc(double x);

}  // namespace riscrb::scene
