// Copyright 2026 The qtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtele/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "qtele/algebra.hpp"
#include "qtele/channel.hpp"
#include "qtele/circuit.hpp"
#include "qtele/deformation.hpp"
#include "qtele/errors.hpp"
#include "qtele/qnum.hpp"
#include "qtele/random.hpp"

namespace qtele {

namespace {

constexpr double kLimitS = 1e-8;
constexpr double kLimitTol = 1e-6;
constexpr std::array<double, 4> kAlgebraPoints = {0.0, 0.3, 0.7, 1.0};
constexpr std::array<Protocol, 3> kProtocols = {Protocol::kPlain, Protocol::kCase1,
                                                Protocol::kCase2};

std::string fmt(const char* pattern, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string fmt2(const char* pattern, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

class Suite {
 public:
  Suite(const VerifyOptions& options, VerifyReport& report)
      : opts_(options), report_(report), rng_(options.seed) {}

  void run() {
    qnum_suite();
    deformation_suite();
    algebra_suite();
    circuit_suite();
    fidelity_suite();
    channel_suite();
  }

 private:
  void add(std::string name, bool ok, std::string detail) {
    report_.lines.push_back({std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail,
                             std::move(detail)});
  }
  void info(std::string name, std::string detail) {
    report_.lines.push_back({std::move(name), CheckStatus::kInfo, std::move(detail)});
  }
  void max_err(const std::string& name, double err, double tol) {
    add(name, err <= tol, fmt("max error %.3e", err));
  }

  DeformationParam random_param(double lo = 0.0) {
    return DeformationParam::from_s(rng_.uniform(lo, 1.0));
  }

  // Normalized 2x2 amplitudes; half of the draws are product states.
  AmplitudeMatrix random_amplitudes(bool* product = nullptr) {
    const bool make_product = rng_.coin();
    if (product) *product = make_product;
    if (make_product) {
      const double t1 = rng_.uniform(0.0, 2 * std::numbers::pi);
      const double t2 = rng_.uniform(0.0, 2 * std::numbers::pi);
      return {std::cos(t1) * std::cos(t2), std::cos(t1) * std::sin(t2),
              std::sin(t1) * std::cos(t2), std::sin(t1) * std::sin(t2)};
    }
    std::array<double, 4> v{};
    double n = 0.0;
    for (double& x : v) {
      x = rng_.uniform(-1.0, 1.0);
      n += x * x;
    }
    n = std::sqrt(n);
    return {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
  }

  void qnum_suite() {
    double odd = 0.0, closed = 0.0, limit = 0.0, inverse = 0.0;
    bool monotone = true;
    for (int d = 0; d < opts_.draws; ++d) {
      const DeformationParam p = random_param();
      const double x = rng_.uniform(-10.0, 10.0);
      const double qx = qnumber(x, p);
      odd = std::max(odd, std::fabs(qnumber(-x, p) + qx) / std::max(1.0, std::fabs(qx)));
      if (p.s() > 0.05) {
        const double q = p.q();
        const double raw = (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
        closed = std::max(closed, std::fabs(qx - raw) / std::max(1.0, std::fabs(qx)));
      }
      const DeformationParam tiny = DeformationParam::from_s(kLimitS);
      limit = std::max(limit, std::fabs(qnumber(x, tiny) - x));
      const double y = x + rng_.uniform(1e-6, 1.0);
      if (p.s() > 0 && !(qnumber(y, p) > qx)) monotone = false;
      const double u = rng_.uniform(-1.0, 1.0);
      inverse = std::max(inverse, std::fabs(qnumber_inverse(qnumber(u, p), p) - u));
    }
    max_err("qnum.odd", odd, opts_.tolerance);
    max_err("qnum.closed_form", closed, opts_.tolerance);
    max_err("qnum.limit_s_to_0", limit, kLimitTol);
    add("qnum.monotone", monotone, "");
    max_err("qnum.inverse_roundtrip", inverse, opts_.tolerance);
  }

  void deformation_suite() {
    double unit = 0.0, product_limit = 0.0, split = 0.0, norm = 0.0;
    bool positive = true;
    for (int d = 0; d < opts_.draws; ++d) {
      const double kappa = rng_.uniform(-2.0, 2.0);
      const DeformationProfile f{ProfileKind::kPower, kappa, 1.0};
      unit = std::max(unit, std::fabs(eval(f, DeformationParam()) - 1.0));
      const DeformationParam p = random_param();
      if (!(eval(f, p) > 0.0)) positive = false;

      const AmplitudeMatrix a = random_amplitudes();
      const DeformationParam tiny = DeformationParam::from_s(kLimitS);
      product_limit = std::max({product_limit, std::fabs(product_for_state(a, tiny) - 1.0),
                                std::fabs(product_for_bell_basis(tiny) - 1.0)});
      const double big_p = product_for_state(a, p);
      const auto [g, h] = split_product(big_p, kappa);
      split = std::max(split, std::fabs(eval(g, p) * eval(h, p) - big_p) / big_p);
      norm = std::max(norm, std::fabs(deformed_bipartite_state(a, p).squared_norm() - 1.0));
    }
    max_err("deformation.profile_unit_at_q1", unit, opts_.tolerance);
    add("deformation.profile_positive", positive, "");
    max_err("deformation.products_limit", product_limit, kLimitTol);
    max_err("deformation.split_product", split, opts_.tolerance);
    max_err("deformation.bound_state_norm", norm, opts_.tolerance);
  }

  void algebra_suite() {
    for (double s : kAlgebraPoints) {
      const auto checks = verify_generator_algebra(DeformationParam::from_s(s), opts_.tolerance);
      double worst = 0.0;
      int failed = 0;
      for (const auto& c : checks) {
        worst = std::max(worst, c.max_error);
        if (!c.passed) ++failed;
      }
      add("algebra.generators(s=" + fmt("%.1f", s) + ")", failed == 0,
          std::to_string(checks.size()) + " identities, max error " + fmt("%.3e", worst));
    }

    int det_disagree = 0, q_disagree = 0;
    for (int d = 0; d < opts_.draws; ++d) {
      const AmplitudeMatrix a = random_amplitudes();
      // Factorization oracle: take the heavier row as the second factor.
      const auto& e = a.entries();
      const double r0 = e[0] * e[0] + e[1] * e[1];
      const double r1 = e[2] * e[2] + e[3] * e[3];
      const std::size_t row = r0 >= r1 ? 0 : 2;
      const double rn = std::sqrt(std::max(r0, r1));
      const double y0 = e[row] / rn, y1 = e[row + 1] / rn;
      const double x0 = e[0] * y0 + e[1] * y1, x1 = e[2] * y0 + e[3] * y1;
      const double resid = std::max({std::fabs(e[0] - x0 * y0), std::fabs(e[1] - x0 * y1),
                                     std::fabs(e[2] - x1 * y0), std::fabs(e[3] - x1 * y1)});
      const bool factorizes = resid <= opts_.tolerance;
      if (is_entangled(a) == factorizes) ++det_disagree;

      const DeformationParam p = random_param(0.05);
      const bool det_q_zero = std::abs(q_amplitude_matrix(a, p).det()) <= opts_.tolerance;
      if (q_unentangled_check(a, p) != det_q_zero) ++q_disagree;
    }
    // Constructed solutions of the deformed condition: a00 = a01, a10 = a11.
    for (int d = 0; d < opts_.draws; ++d) {
      const double t = rng_.uniform(0.0, 2 * std::numbers::pi);
      const double u = std::cos(t) * kInvSqrt2, v = std::sin(t) * kInvSqrt2;
      const AmplitudeMatrix a(u, u, v, v);
      const DeformationParam p = random_param(0.05);
      const bool det_q_zero = std::abs(q_amplitude_matrix(a, p).det()) <= opts_.tolerance;
      if (!q_unentangled_check(a, p) || !det_q_zero) ++q_disagree;
    }
    add("algebra.det_criterion_vs_factorization", det_disagree == 0,
        std::to_string(det_disagree) + " disagreements");
    add("algebra.q_unentangled_vs_det_Aq", q_disagree == 0,
        std::to_string(q_disagree) + " disagreements");

    double ortho = 0.0, decomp = 0.0, limit = 0.0;
    for (int d = 0; d < opts_.draws; ++d) {
      const DeformationParam p = random_param();
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          const double expect = i == j ? 1.0 : 0.0;
          ortho = std::max(ortho, std::fabs(bell_q_state(i, p).inner(bell_q_state(j, p)) - expect));
        }
      }
      const double a00 = rng_.uniform(0.05, 0.95) * (rng_.coin() ? 1 : -1);
      const double a11 = std::sqrt(1.0 - a00 * a00);
      const PureState mu = deformed_diagonal_state(a00, a11, p);
      decomp = std::max(decomp, bell_q_reconstruct(bell_q_decompose(mu, p), p).max_abs_diff(mu));

      const DeformationParam tiny = DeformationParam::from_s(kLimitS);
      const AmplitudeMatrix a = random_amplitudes();
      const PureState plain({a.a00(), a.a01(), a.a10(), a.a11()});
      limit = std::max(limit, deformed_bipartite_state(a, tiny).max_abs_diff(plain));
      for (int i = 0; i < 4; ++i) {
        limit = std::max(limit, bell_q_state(i, tiny).max_abs_diff(bell_state(i)));
        limit = std::max(limit, bell_q_matrix(i, tiny).max_abs_diff(bell_matrix(i)));
      }
      for (int n1 = 0; n1 < 2; ++n1) {
        limit = std::max(limit, js_qubit(n1, true, tiny, {ProfileKind::kPower, 1.0, 1.0})
                                    .max_abs_diff(js_qubit(n1, false, tiny)));
      }
    }
    max_err("algebra.bell_q_orthonormal", ortho, opts_.tolerance);
    max_err("algebra.bell_q_decomposition", decomp, opts_.tolerance);
    max_err("algebra.limit_s_to_0", limit, kLimitTol);
  }

  struct Draw {
    InfoQubit info;
    ChannelSpec channel;
    ProfileSet profiles;
  };

  Draw random_draw(Protocol protocol, double s_lo = 0.0) {
    const double alpha0 = rng_.uniform(0.05, 0.95) * (rng_.coin() ? 1 : -1);
    const double a = rng_.uniform(0.05, 0.95);
    const auto shape = static_cast<ChannelShape>(static_cast<int>(rng_.unit() * 4));
    const bool deformed = protocol != Protocol::kPlain;
    const DeformationParam p = deformed ? random_param(s_lo) : DeformationParam();
    const InfoQubit info = InfoQubit::from_alpha0(alpha0);
    const ChannelSpec channel = make_channel(shape, a, deformed, p);
    const double kappa = rng_.uniform(0.2, 1.0) * (rng_.coin() ? 1 : -1);
    return {info, channel, bind_profiles(info, channel, protocol, kappa)};
  }

  void circuit_suite() {
    for (Protocol protocol : kProtocols) {
      const std::string tag(to_string(protocol));
      double closed = 0.0, product = 0.0, total = 0.0;
      bool deterministic = true;
      for (int d = 0; d < opts_.draws; ++d) {
        const Draw dr = random_draw(protocol);
        const TeleportRecord rec = teleport(dr.info, dr.channel, dr.profiles, protocol);
        double sum = 0.0;
        const double ref = rec.branches[0].m0 * rec.branches[0].m1;
        for (AliceOutcome o : AliceOutcome::all()) {
          const auto [m0, m1] = bob_stats(rec, o);
          const auto [c0, c1] = bob_stats_closed(dr.info, dr.channel, dr.profiles, protocol, o);
          closed = std::max({closed, std::fabs(m0 - c0), std::fabs(m1 - c1)});
          product = std::max(product, std::fabs(m0 * m1 - ref));
          sum += m0 + m1;
        }
        total = std::max(total, std::fabs(sum - 1.0));
        const TeleportRecord again = teleport(dr.info, dr.channel, dr.profiles, protocol);
        if (!(again.final_state == rec.final_state)) deterministic = false;
      }
      max_err("circuit." + tag + ".closed_form_vs_simulation", closed, opts_.tolerance);
      max_err("circuit." + tag + ".m0m1_basis_invariant", product, opts_.tolerance);
      max_err("circuit." + tag + ".total_probability", total, opts_.tolerance);
      add("circuit." + tag + ".deterministic", deterministic, "");
    }

    double limit = 0.0;
    const DeformationParam tiny = DeformationParam::from_s(kLimitS);
    for (int d = 0; d < opts_.draws; ++d) {
      const Draw dr = random_draw(Protocol::kPlain);
      const ChannelSpec plain_channel = dr.channel;
      const TeleportRecord plain = teleport(dr.info, plain_channel, {}, Protocol::kPlain);
      ChannelSpec deformed = plain_channel;
      deformed.deformed = true;
      deformed.p = tiny;
      for (Protocol protocol : {Protocol::kCase1, Protocol::kCase2}) {
        const ProfileSet profiles = bind_profiles(dr.info, deformed, protocol, 0.5);
        const TeleportRecord rec = teleport(dr.info, deformed, profiles, protocol);
        limit = std::max(limit, rec.final_state.max_abs_diff(plain.final_state));
      }
    }
    max_err("circuit.limit_s_to_0", limit, kLimitTol);
  }

  void fidelity_suite() {
    double at_max = 0.0, at_min = 0.0, grad_max = 0.0, grad_min = 0.0;
    int curv_max_bad = 0, curv_min_bad = 0, n_max = 0, n_min = 0;
    for (int d = 0; d < opts_.draws; ++d) {
      const FidelityExtrema ex = fidelity_extrema(rng_.uniform(0.05, 0.95));
      const double det2 = ex.alpha0 * ex.alpha0 * ex.alpha1 * ex.alpha1;
      for (const CriticalPoint& cp : ex.points) {
        ++(cp.claimed_is_max ? n_max : n_min);
        if (cp.claimed_is_max) {
          at_max = std::max(at_max, std::fabs(cp.fidelity - 1.0));
          grad_max = std::max(grad_max, std::fabs(cp.fd_gradient));
          if (!(cp.fd_curvature < 0.0) ||
              std::fabs(cp.fd_curvature - cp.claimed_curvature) > 1e-4 * std::fabs(cp.claimed_curvature)) {
            ++curv_max_bad;
          }
        } else {
          at_min = std::max(at_min, std::fabs(cp.fidelity - 4.0 * det2));
          grad_min = std::max(grad_min, std::fabs(cp.fd_gradient));
          if (!(cp.fd_curvature > 0.0)) ++curv_min_bad;
        }
      }
    }
    max_err("fidelity.max_is_1_at_pm_alpha0", at_max, opts_.tolerance);
    max_err("fidelity.value_4det2_at_pm_alpha1", at_min, opts_.tolerance);
    add("fidelity.stationary_at_pm_alpha0", grad_max < 1e-6, fmt("max |dF/da00| %.3e", grad_max));
    add("fidelity.curvature_at_pm_alpha0", curv_max_bad == 0,
        std::to_string(curv_max_bad) + "/" + std::to_string(n_max) + " points disagree with -2/alpha1^2");
    add("fidelity.stationary_at_pm_alpha1", grad_min < 1e-6, fmt("max |dF/da00| %.3e", grad_min));
    add("fidelity.curvature_positive_at_pm_alpha1", curv_min_bad == 0,
        std::to_string(curv_min_bad) + "/" + std::to_string(n_min) + " points have non-positive curvature");

    const FidelityExtrema maximal = fidelity_extrema(kInvSqrt2);
    double worst = 0.0;
    for (const CriticalPoint& cp : maximal.points) worst = std::max(worst, std::fabs(cp.fidelity - 1.0));
    worst = std::max(worst, std::fabs(maximal.f_min - 1.0));
    max_err("fidelity.maximal_channel_gives_1", worst, opts_.tolerance);

    // Closed-form fidelity next to the literal 3-qubit overlap.
    for (double alpha0 : {0.6, 0.8, kInvSqrt2}) {
      const InfoQubit q = InfoQubit::from_alpha0(alpha0);
      const ChannelSpec c = make_channel(ChannelShape::kNu, alpha0, false, {});
      const double closed = fidelity_closed(q, c, {}, Protocol::kPlain);
      const double overlap = fidelity_overlap(teleport(q, c, {}, Protocol::kPlain));
      info("fidelity.definition(alpha0=" + fmt("%.4f", alpha0) + ",a00=alpha0)",
           fmt2("closed-form %.12f, literal overlap %.12f", closed, overlap));
    }
  }

  void channel_suite() {
    double roundtrip = 0.0, sign = 0.0;
    int failures = 0;
    for (int d = 0; d < opts_.draws; ++d) {
      for (Protocol protocol : kProtocols) {
        const Draw dr = random_draw(protocol);
        const TeleportRecord rec = teleport(dr.info, dr.channel, dr.profiles, protocol);
        const AliceOutcome basis(static_cast<int>(rng_.unit() * 4));
        const auto [m0, m1] = bob_stats(rec, basis);
        const ClassicalPayload payload = make_payload(dr.info, dr.channel, dr.profiles, protocol, basis);
        try {
          const RecoveryResult r = recover_amplitudes(m0, m1, payload);
          roundtrip = std::max({roundtrip, std::fabs(r.abs_alpha0 - std::fabs(dr.info.alpha0())),
                                std::fabs(r.abs_alpha1 - std::fabs(dr.info.alpha1()))});
          const InfoQubit flipped(-dr.info.alpha0(), -dr.info.alpha1());
          const auto [f0, f1] = bob_stats(teleport(flipped, dr.channel, dr.profiles, protocol), basis);
          const RecoveryResult rf = recover_amplitudes(f0, f1, payload);
          sign = std::max({sign, std::fabs(rf.abs_alpha0 - r.abs_alpha0),
                           std::fabs(rf.abs_alpha1 - r.abs_alpha1)});
        } catch (const Error&) {
          ++failures;
        }
      }
    }
    add("channel.recovery_roundtrip", failures == 0 && roundtrip <= kRecoveryTol,
        fmt("max error %.3e", roundtrip) + ", " + std::to_string(failures) + " failures");
    max_err("channel.sign_blind", sign, opts_.tolerance);

    key_necessity();
    codec();
  }

  void key_necessity() {
    struct Field {
      const char* name;
      std::function<void(ClassicalPayload&, double)> perturb;
      bool (*applies)(Protocol);
    };
    const std::array<Field, 4> fields = {{
        {"det_abs", [](ClassicalPayload& p, double f) { p.det_abs *= f; },
         [](Protocol) { return true; }},
        {"s", [](ClassicalPayload& p, double f) { p.s = std::min(1.0, p.s * f); },
         [](Protocol pr) { return pr != Protocol::kPlain; }},
        {"kappa_omega", [](ClassicalPayload& p, double f) { p.profile_kappas[0] *= f; },
         [](Protocol pr) { return pr != Protocol::kPlain; }},
        {"kappa_gamma", [](ClassicalPayload& p, double f) { p.profile_kappas[2] *= f; },
         [](Protocol pr) { return pr == Protocol::kCase2; }},
    }};
    for (const Field& field : fields) {
      int trials = 0, rejected = 0;
      for (int d = 0; d < opts_.draws; ++d) {
        for (Protocol protocol : kProtocols) {
          if (!field.applies(protocol)) continue;
          const Draw dr = random_draw(protocol, 0.2);
          if (dr.channel.maximal()) continue;
          const AliceOutcome basis(static_cast<int>(rng_.unit() * 4));
          const auto [m0, m1] = bob_stats(teleport(dr.info, dr.channel, dr.profiles, protocol), basis);
          const ClassicalPayload truth = make_payload(dr.info, dr.channel, dr.profiles, protocol, basis);
          for (double factor : {0.95, 1.05}) {
            ClassicalPayload bad = truth;
            field.perturb(bad, factor);
            if (bad == truth) continue;
            ++trials;
            if (!validate_key(m0, m1, bad)) ++rejected;
          }
        }
      }
      const double rate = trials ? static_cast<double>(rejected) / trials : 1.0;
      add(std::string("channel.key_necessity.") + field.name, rate >= 0.95,
          fmt("%.4f of perturbed keys rejected", rate));
    }
  }

  void codec() {
    int mismatches = 0, accepted_mutations = 0;
    for (int d = 0; d < opts_.draws; ++d) {
      ClassicalPayload p;
      p.protocol = kProtocols[static_cast<std::size_t>(rng_.unit() * 3)];
      p.alice_basis = AliceOutcome(static_cast<int>(rng_.unit() * 4));
      p.channel_shape = static_cast<ChannelShape>(static_cast<int>(rng_.unit() * 4));
      p.det_abs = rng_.uniform(0.0, 0.5);
      p.s = rng_.unit();
      for (std::size_t k = 0; k < expected_kappa_count(p.protocol); ++k) {
        p.profile_kappas.push_back(rng_.uniform(-3.0, 3.0));
      }
      if (rng_.coin()) p.measured = std::make_pair(rng_.unit(), rng_.unit());
      const std::string bytes = encode(p);
      if (!(decode(bytes) == p)) ++mismatches;

      std::string mutated = bytes;
      const auto at = static_cast<std::size_t>(rng_.unit() * static_cast<double>(bytes.size()));
      mutated[at] = static_cast<char>(mutated[at] ^ (1 + static_cast<int>(rng_.unit() * 127)));
      try {
        const ClassicalPayload back = decode(mutated);
        if (encode(back) != mutated) ++accepted_mutations;
      } catch (const Error&) {
      }
    }
    add("channel.codec_roundtrip", mismatches == 0, std::to_string(mismatches) + " mismatches");
    add("channel.codec_rejects_noncanonical", accepted_mutations == 0,
        std::to_string(accepted_mutations) + " non-canonical mutations accepted");
  }

  const VerifyOptions& opts_;
  VerifyReport& report_;
  Rng rng_;
};

const char* status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kInfo: return "INFO";
  }
  return "INFO";
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::none_of(lines.begin(), lines.end(),
                      [](const CheckLine& l) { return l.status == CheckStatus::kFail; });
}

std::string VerifyReport::render() const {
  std::string out;
  int pass = 0, fail = 0;
  for (const auto& l : lines) {
    out += status_label(l.status);
    out += "  " + l.name;
    if (!l.detail.empty()) out += "  " + l.detail;
    out += '\n';
    if (l.status == CheckStatus::kPass) ++pass;
    if (l.status == CheckStatus::kFail) ++fail;
  }
  out += std::to_string(pass) + " passed, " + std::to_string(fail) + " failed\n";
  return out;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.draws < 1) throw RangeError("draws must be at least 1");
  VerifyReport report;
  Suite(options, report).run();
  return report;
}

}  // namespace qtele
