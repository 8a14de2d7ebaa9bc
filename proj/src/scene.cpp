#include "riscrb/scene.hpp"

#include <cmath>

namespace riscrb::scene {

namespace {
constexpr double kMinDistance = 1e-9;  // coincident-point guard, meters
}

void SceneConfig::validate() const {
  if (frequency <= 0.0) throw ConfigError("frequency must be > 0");
  if (ris_rows <= 0 || ris_cols <= 0)
    throw ConfigError("ris_rows and ris_cols must be positive");
  if (element_len_x <= 0.0 || element_len_y <= 0.0 || element_spacing < 0.0)
    throw ConfigError("element dimensions must be positive");
  if (pilot_count < 1) throw ConfigError("pilot_count must be >= 1");
  if (pilot_energy_per_sample <= 0.0)
    throw ConfigError("pilot_energy_per_sample must be > 0");
  if (anchor_positions.empty()) throw ConfigError("need at least one anchor");
  if (agent_position.z() <= 0.0)
    throw ConfigError("agent must be in front of the RIS plane (q3 > 0)");
  if (sigma2.size() != num_anchors())
    throw ConfigError("sigma2 must list one noise variance per anchor");
  for (int m = 0; m < sigma2.size(); ++m)
    if (sigma2[m] <= 0.0) throw ConfigError("sigma2 entries must be > 0");
  if (pathloss_model == PathlossModel::kUserTable) {
    const int M = num_anchors();
    if (alpha_override.size() != M || beta_override.size() != M ||
        zeta_override.size() != M)
      throw ConfigError("user_table pathloss needs alpha/beta/zeta per anchor");
  }
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = M_PI * x;
  return std::sin(px) / px;
}

RisGrid build_grid(const SceneConfig& cfg) {
  cfg.validate();
  RisGrid grid;
  grid.rows = cfg.ris_rows;
  grid.cols = cfg.ris_cols;
  grid.pitch_x = cfg.element_len_x + cfg.element_spacing;
  grid.pitch_y = cfg.element_len_y + cfg.element_spacing;
  const int n = grid.size();
  grid.t.resize(n);
  grid.u.resize(n);
  for (int row = 0; row < grid.rows; ++row) {
    const double y = (row - (grid.rows - 1) / 2.0) * grid.pitch_y;
    for (int col = 0; col < grid.cols; ++col) {
      const int idx = row * grid.cols + col;
      grid.t[idx] = (col - (grid.cols - 1) / 2.0) * grid.pitch_x;
      grid.u[idx] = y;
    }
  }
  return grid;
}

GeometryTables geometry(const SceneConfig& cfg, const RisGrid& grid) {
  const int n = grid.size();
  const int m_count = cfg.num_anchors();
  const Vec3 q = cfg.agent_position;

  GeometryTables g;
  g.rho.resize(n);
  g.drho_dq.resize(n, 3);
  for (int i = 0; i < n; ++i) {
    const Vec3 delta(q.x() - grid.t[i], q.y() - grid.u[i], q.z());
    const double dist = delta.norm();
    if (dist < kMinDistance)
      throw DegenerateSceneError("agent coincides with RIS element " +
                                     std::to_string(i),
                                 1.0 / kMinDistance);
    g.rho[i] = dist;
    g.drho_dq.row(i) = (delta / dist).transpose();
  }

  g.r.resize(m_count);
  g.dr_dq.resize(m_count, 3);
  g.d.resize(m_count, n);
  for (int m = 0; m < m_count; ++m) {
    const Vec3& p = cfg.anchor_positions[m];
    const Vec3 delta = q - p;
    const double dist = delta.norm();
    if (dist < kMinDistance)
      throw DegenerateSceneError("agent coincides with anchor " +
                                     std::to_string(m),
                                 1.0 / kMinDistance);
    g.r[m] = dist;
    g.dr_dq.row(m) = (delta / dist).transpose();
    for (int i = 0; i < n; ++i) {
      const Vec3 de(p.x() - grid.t[i], p.y() - grid.u[i], p.z());
      const double dmn = de.norm();
      if (dmn < kMinDistance)
        throw DegenerateSceneError("anchor " + std::to_string(m) +
                                       " coincides with element " +
                                       std::to_string(i),
                                   1.0 / kMinDistance);
      g.d(m, i) = dmn;
    }
  }
  return g;
}

ChannelSet channels(const SceneConfig& cfg, const RisGrid& grid,
                    const GeometryTables& geom) {
  const int n = grid.size();
  const int m_count = cfg.num_anchors();
  const double k0 = cfg.wavenumber();
  const double lambda0 = cfg.wavelength();
  const Complex j(0.0, 1.0);

  ChannelSet ch;
  ch.a1 = (-j * k0 * geom.rho).array().exp();
  ch.a2.resize(m_count, n);
  for (int m = 0; m < m_count; ++m)
    ch.a2.row(m) = (-j * k0 * geom.d.row(m).transpose()).array().exp().transpose();

  ch.alpha.resize(m_count);
  ch.beta.resize(m_count);
  ch.zeta.resize(m_count);
  switch (cfg.pathloss_model) {
    case PathlossModel::kUnitGain:
      ch.alpha.setOnes();
      ch.beta.setOnes();
      ch.zeta.setOnes();
      break;
    case PathlossModel::kUserTable:
      ch.alpha = cfg.alpha_override;
      ch.beta = cfg.beta_override;
      ch.zeta = cfg.zeta_override;
      break;
    case PathlossModel::kFreeSpaceAmplitude: {
      // Free-space amplitudes with the anchor's receive gain applied to the
      // RIS -> anchor hop (it points at the plate; the direct path arrives
      // through the sidelobes and gets no gain). The cascaded amplitude
      // carries a per-element aperture factor sqrt(l1 l2).
      const double gain_amp = std::pow(10.0, cfg.anchor_gain_dbi / 20.0);
      const double rho_bar = cfg.agent_position.norm();  // agent -> centroid
      const double aperture = std::sqrt(cfg.element_len_y * cfg.element_len_x);
      for (int m = 0; m < m_count; ++m) {
        const double d_bar = cfg.anchor_positions[m].norm();  // centroid -> anchor
        ch.beta[m] = lambda0 / (4.0 * M_PI * geom.r[m]);
        ch.zeta[m] = gain_amp * lambda0 / (4.0 * M_PI * d_bar);
        ch.alpha[m] = ch.zeta[m] * aperture / (4.0 * M_PI * rho_bar);
      }
      break;
    }
  }

  ch.h_ris.resize(m_count, n);
  ch.h2.resize(m_count, n);
  ch.h_dp.resize(m_count);
  for (int m = 0; m < m_count; ++m) {
    ch.h_ris.row(m) =
        ch.alpha[m] * (ch.a1.transpose().array() * ch.a2.row(m).array());
    ch.h2.row(m) = ch.zeta[m] * ch.a2.row(m);
    ch.h_dp[m] = ch.beta[m] * std::exp(-j * k0 * geom.r[m]);
  }
  return ch;
}

EmiModel emi_correlation(const SceneConfig& cfg, const RisGrid& grid) {
  const int n = grid.size();
  EmiModel emi;
  emi.emi_flux_linear = db_to_linear(cfg.emi_flux_dbw_per_m2);
  emi.effective_area = cfg.element_len_y * cfg.element_len_x;
  const double pe = emi.element_power();
  const double lambda0 = cfg.wavelength();
  emi.R.resize(n, n);
  for (int a = 0; a < n; ++a) {
    emi.R(a, a) = pe;
    for (int b = a + 1; b < n; ++b) {
      const double dx = grid.t[a] - grid.t[b];
      const double dy = grid.u[a] - grid.u[b];
      const double dist = std::sqrt(dx * dx + dy * dy);
      const double val = pe * sinc(2.0 * dist / lambda0);
      emi.R(a, b) = val;
      emi.R(b, a) = val;
    }
  }
  return emi;
}

Scene build_scene(const SceneConfig& cfg) {
  Scene sc;
  sc.cfg = cfg;
  sc.grid = build_grid(cfg);
  sc.geom = geometry(cfg, sc.grid);
  sc.channels = channels(cfg, sc.grid, sc.geom);
  sc.emi = emi_correlation(cfg, sc.grid);
  return sc;
}

double noise_power(const CVector& w, const Scene& sc, int m) {
  const CVector z = w.array() * sc.channels.h2.row(m).transpose().array();
  const CVector rz = sc.emi.R * z;
  // z^T R z^* with real symmetric R; the imaginary residue is roundoff.
  const Complex quad = z.dot(rz);  // = sum conj(z_i) (R z)_i = z^T R z^* conj'd: real part identical
  const double sigma2 = sc.cfg.sigma2[m];
  if (quad.real() < -1e-10 * sigma2)
    throw DegenerateSceneError("emi correlation (non-PSD quadratic form)",
                               quad.real());
  return quad.real() + sigma2;
}

RVector noise_powers(const CVector& w, const Scene& sc, bool emi_aware) {
  const int m_count = sc.cfg.num_anchors();
  if (!emi_aware) return sc.cfg.sigma2;
  RVector p(m_count);
  for (int m = 0; m < m_count; ++m) p[m] = noise_power(w, sc, m);
  return p;
}

}  // namespace riscrb::scene
