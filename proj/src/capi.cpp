// capi.cpp - extern "C" surface over the kinf core
#include "kinf.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "kinf/blaschke.hpp"
#include "kinf/complex_disk.hpp"
#include "kinf/criteria.hpp"
#include "kinf/linalg.hpp"
#include "kinf/majorant.hpp"
#include "kinf/model_space.hpp"
#include "kinf/quadrature.hpp"
#include "kinf/seeded_instances.hpp"
#include "kinf/sequence_lab.hpp"
#include "kinf/zero_sequence.hpp"

struct kinf_sequence {
  kinf::ZeroSequence impl;
};

struct kinf_blaschke {
  kinf::BlaschkeData impl;
};

struct kinf_majorant {
  kinf::Majorant impl;
};

namespace {

thread_local std::string g_error;

template <typename F>
kinf_status guarded(F&& fn) noexcept {
  try {
    fn();
    g_error.clear();
    return KINF_OK;
  } catch (const std::out_of_range& e) {
    g_error = e.what();
    return KINF_ERR_INDEX;
  } catch (const std::domain_error& e) {
    g_error = e.what();
    return KINF_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return KINF_ERR_ARGUMENT;
  } catch (const kinf::SingularMatrixError& e) {
    g_error = e.what();
    return KINF_ERR_SINGULAR;
  } catch (const kinf::QuadratureError& e) {
    g_error = e.what();
    return KINF_ERR_NUMERIC;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return KINF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return KINF_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return KINF_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<kinf::Complex> pack_complex(const double* re, const double* im, int n) {
  require(re != nullptr, "real input array is null");
  require(n >= 0, "negative length");
  std::vector<kinf::Complex> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = kinf::Complex{re[i], im ? im[i] : 0.0};
  return v;
}

void unpack_complex(const std::vector<kinf::Complex>& v, double* re, double* im) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (re) re[i] = v[i].real();
    if (im) im[i] = v[i].imag();
  }
}

void write_complex(kinf::Complex v, double* re, double* im) {
  require(re != nullptr && im != nullptr, "output pointer is null");
  *re = v.real();
  *im = v.imag();
}

kinf::DiskPoint point_from(double gap, double phase) {
  if (gap == 0.0) return kinf::DiskPoint::circle(phase);
  return kinf::DiskPoint::interior(gap, phase);
}

kinf::ProductMode mode_from(kinf_product_mode mode) {
  switch (mode) {
    case KINF_PRODUCT_AUTO:
      return kinf::ProductMode::kAuto;
    case KINF_PRODUCT_DIRECT:
      return kinf::ProductMode::kDirect;
    case KINF_PRODUCT_LOG:
      return kinf::ProductMode::kLogDomain;
  }
  throw std::invalid_argument("unknown product mode");
}

}  // namespace

extern "C" {

const char* kinf_version(void) { return "kinf 1.0.0"; }

const char* kinf_last_error(void) { return g_error.c_str(); }

void kinf_string_free(char* s) { delete[] s; }

kinf_status kinf_sequence_create(const double* gaps, const double* phases, int n,
                                 kinf_sequence** out) {
  return guarded([&] {
    require(gaps != nullptr && phases != nullptr, "input array is null");
    require(out != nullptr, "output handle is null");
    require(n >= 1, "sequence length must be positive");
    std::vector<kinf::DiskPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) pts.push_back(kinf::DiskPoint::interior(gaps[j], phases[j]));
    *out = new kinf_sequence{kinf::ZeroSequence(std::move(pts))};
  });
}

kinf_status kinf_sequence_from_json(const char* text, kinf_sequence** out) {
  return guarded([&] {
    require(text != nullptr, "JSON text is null");
    require(out != nullptr, "output handle is null");
    *out = new kinf_sequence{kinf::sequence_from_json(text)};
  });
}

kinf_status kinf_sequence_to_json(const kinf_sequence* seq, char** out) {
  return guarded([&] {
    require(seq != nullptr, "sequence handle is null");
    require(out != nullptr, "output pointer is null");
    std::string text = kinf::to_json(seq->impl);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

kinf_status kinf_sequence_radial_dyadic(int n, kinf_sequence** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = new kinf_sequence{kinf::radial_dyadic(n)};
  });
}

kinf_status kinf_sequence_radial_geometric(int n, double ratio, kinf_sequence** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = new kinf_sequence{kinf::radial_geometric(n, ratio)};
  });
}

kinf_status kinf_sequence_tangential(int n, double kappa, kinf_sequence** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = new kinf_sequence{kinf::tangential(n, kappa)};
  });
}

kinf_status kinf_sequence_seeded(uint64_t seed, int index, kinf_sequence** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = new kinf_sequence{kinf::seeded_sequence(seed, index)};
  });
}

kinf_status kinf_sequence_truncate(const kinf_sequence* seq, int n, kinf_sequence** out) {
  return guarded([&] {
    require(seq != nullptr, "sequence handle is null");
    require(out != nullptr, "output handle is null");
    require(n >= 1 && n <= seq->impl.n(), "truncation length out of range");
    std::vector<kinf::DiskPoint> pts(seq->impl.points().begin(),
                                     seq->impl.points().begin() + n);
    *out = new kinf_sequence{kinf::ZeroSequence(std::move(pts))};
  });
}

int kinf_sequence_n(const kinf_sequence* seq) { return seq ? seq->impl.n() : 0; }

kinf_status kinf_sequence_point(const kinf_sequence* seq, int j, double* gap,
                                double* phase) {
  return guarded([&] {
    require(seq != nullptr, "sequence handle is null");
    require(gap != nullptr && phase != nullptr, "output pointer is null");
    const kinf::DiskPoint& p = seq->impl.at(j);
    *gap = p.gap;
    *phase = p.phase;
  });
}

void kinf_sequence_free(kinf_sequence* seq) { delete seq; }

kinf_status kinf_seeded_targets(uint64_t seed, int index, int n, double* re, double* im) {
  return guarded([&] {
    require(re != nullptr && im != nullptr, "output array is null");
    unpack_complex(kinf::seeded_targets(seed, index, n), re, im);
  });
}

kinf_status kinf_pseudohyperbolic(double gap_a, double phase_a, double gap_b,
                                  double phase_b, double* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = kinf::pseudohyperbolic(point_from(gap_a, phase_a), point_from(gap_b, phase_b));
  });
}

kinf_status kinf_blaschke_factor(double gap_a, double phase_a, double gap_z,
                                 double phase_z, double* re, double* im) {
  return guarded([&] {
    write_complex(kinf::blaschke_factor(point_from(gap_a, phase_a), point_from(gap_z, phase_z)),
                  re, im);
  });
}

kinf_status kinf_blaschke_create(const kinf_sequence* seq, kinf_blaschke** out) {
  return guarded([&] {
    require(seq != nullptr, "sequence handle is null");
    require(out != nullptr, "output handle is null");
    *out = new kinf_blaschke{kinf::BlaschkeData(seq->impl)};
  });
}

void kinf_blaschke_free(kinf_blaschke* b) { delete b; }

int kinf_blaschke_n(const kinf_blaschke* b) { return b ? b->impl.n() : 0; }

kinf_status kinf_blaschke_delta(const kinf_blaschke* b, double* out) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(out != nullptr, "output pointer is null");
    *out = b->impl.delta();
  });
}

kinf_status kinf_blaschke_interp_constant(const kinf_blaschke* b, double* out) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(out != nullptr, "output pointer is null");
    *out = b->impl.interpolation_constant();
  });
}

kinf_status kinf_blaschke_origin_value(const kinf_blaschke* b, double* re, double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(b->impl.value_at_origin(), re, im);
  });
}

kinf_status kinf_blaschke_subproduct_at_zero(const kinf_blaschke* b, int j, double* re,
                                             double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(b->impl.subproduct_at_zero(j), re, im);
  });
}

kinf_status kinf_blaschke_derivative_at_zero(const kinf_blaschke* b, int j, double* re,
                                             double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(b->impl.derivative_at_zero(j), re, im);
  });
}

kinf_status kinf_blaschke_eval(const kinf_blaschke* b, double gap, double phase,
                               kinf_product_mode mode, double* re, double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(kinf::blaschke_eval(b->impl, point_from(gap, phase), mode_from(mode)), re,
                  im);
  });
}

kinf_status kinf_subproduct_eval(const kinf_blaschke* b, int j, double gap, double phase,
                                 kinf_product_mode mode, double* re, double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(
        kinf::subproduct_eval(b->impl, j, point_from(gap, phase), mode_from(mode)), re, im);
  });
}

kinf_status kinf_numeric_derivative(const kinf_blaschke* b, double gap, double phase,
                                    double step, double* re, double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(kinf::numeric_derivative(b->impl, point_from(gap, phase), step), re, im);
  });
}

kinf_status kinf_frostman_sum(const kinf_sequence* seq, double phase, double* out) {
  return guarded([&] {
    require(seq != nullptr, "sequence handle is null");
    require(out != nullptr, "output pointer is null");
    *out = kinf::frostman_sum(seq->impl, kinf::DiskPoint::circle(phase));
  });
}

kinf_status kinf_frostman_sup(const kinf_sequence* seq, int grid,
                              kinf_frostman_estimate* out) {
  return guarded([&] {
    require(seq != nullptr, "sequence handle is null");
    require(out != nullptr, "output pointer is null");
    kinf::FrostmanEstimate est = kinf::frostman_sup(seq->impl, grid);
    out->sup = est.sup;
    out->argmax_phase = est.argmax_phase;
    out->grid = est.grid;
  });
}

kinf_status kinf_min_separation(const kinf_sequence* seq, double* out) {
  return guarded([&] {
    require(seq != nullptr, "sequence handle is null");
    require(out != nullptr, "output pointer is null");
    *out = kinf::min_separation(seq->impl);
  });
}

kinf_status kinf_make_report(const kinf_blaschke* b, int frostman_grid,
                             kinf_sequence_report* out) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(out != nullptr, "output pointer is null");
    kinf::SequenceReport rep = kinf::make_report(b->impl, frostman_grid);
    out->delta = rep.delta;
    out->interp_const = rep.interp_const;
    out->min_separation = rep.min_separation;
    out->frostman_sup = rep.frostman_sup;
    out->frostman_grid = rep.frostman_grid;
  });
}

kinf_status kinf_gamma_coeffs(const kinf_blaschke* b, const double* w_re,
                              const double* w_im, double* g_re, double* g_im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(g_re != nullptr && g_im != nullptr, "output array is null");
    unpack_complex(kinf::gamma_coeffs(b->impl, pack_complex(w_re, w_im, b->impl.n())), g_re,
                   g_im);
  });
}

kinf_status kinf_cauchy_series_eval(const kinf_blaschke* b, const double* g_re,
                                    const double* g_im, double gap, double phase,
                                    double* re, double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(kinf::cauchy_series_eval(b->impl, pack_complex(g_re, g_im, b->impl.n()),
                                           point_from(gap, phase)),
                  re, im);
  });
}

kinf_status kinf_interpolant_eval(const kinf_blaschke* b, const double* w_re,
                                  const double* w_im, double gap, double phase, double* re,
                                  double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(kinf::interpolant_eval(b->impl, pack_complex(w_re, w_im, b->impl.n()),
                                         point_from(gap, phase)),
                  re, im);
  });
}

kinf_status kinf_interpolant_boundary(const kinf_blaschke* b, const double* w_re,
                                      const double* w_im, int grid, double* out_re,
                                      double* out_im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(grid >= 8, "boundary grid needs at least 8 points");
    require(out_re != nullptr && out_im != nullptr, "output array is null");
    std::vector<kinf::Complex> w = pack_complex(w_re, w_im, b->impl.n());
    for (int k = 0; k < grid; ++k) {
      kinf::Complex v =
          kinf::interpolant_eval(b->impl, w, kinf::DiskPoint::circle(kinf::kTwoPi * k / grid));
      out_re[k] = v.real();
      out_im[k] = v.imag();
    }
  });
}

kinf_status kinf_involution_boundary(const kinf_blaschke* b, const double* f_re,
                                     const double* f_im, int grid, double* out_re,
                                     double* out_im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(out_re != nullptr && out_im != nullptr, "output array is null");
    unpack_complex(kinf::involution_boundary(b->impl, pack_complex(f_re, f_im, grid)),
                   out_re, out_im);
  });
}

kinf_status kinf_k2_interpolant(const kinf_blaschke* b, const double* w_re,
                                const double* w_im, double* c_re, double* c_im,
                                kinf_kernel_info* info) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(c_re != nullptr && c_im != nullptr, "output array is null");
    kinf::KernelExpansion exp =
        kinf::k2_interpolant(b->impl, pack_complex(w_re, w_im, b->impl.n()));
    unpack_complex(exp.coeffs, c_re, c_im);
    if (info) {
      info->condition_estimate = exp.condition_estimate;
      info->ill_conditioned = exp.ill_conditioned ? 1 : 0;
    }
  });
}

kinf_status kinf_kernel_expansion_eval(const kinf_blaschke* b, const double* c_re,
                                       const double* c_im, double gap, double phase,
                                       double* re, double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    write_complex(kinf::kernel_expansion_eval(b->impl, pack_complex(c_re, c_im, b->impl.n()),
                                              point_from(gap, phase)),
                  re, im);
  });
}

kinf_status kinf_sup_norm_estimate(kinf_boundary_fn f, void* ctx, int grid, int refine,
                                   kinf_sup_norm* out) {
  return guarded([&] {
    require(f != nullptr, "boundary callback is null");
    require(out != nullptr, "output pointer is null");
    kinf::Evaluable wrapped = [f, ctx](const kinf::DiskPoint& z) {
      double re = 0.0;
      double im = 0.0;
      if (f(ctx, z.phase, &re, &im) != KINF_OK)
        throw std::runtime_error("boundary callback reported failure");
      return kinf::Complex{re, im};
    };
    kinf::SupNormEstimate est = kinf::sup_norm_estimate(wrapped, grid, refine != 0);
    out->value = est.value;
    out->grid = est.grid;
    out->converged = est.converged ? 1 : 0;
  });
}

kinf_status kinf_constant_trace_eval(const kinf_blaschke* b, double gap, double phase,
                                     double* re, double* im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    kinf::Complex value = 1.0 - std::conj(b->impl.value_at_origin()) *
                                    kinf::blaschke_eval(b->impl, point_from(gap, phase));
    write_complex(value, re, im);
  });
}

kinf_status kinf_dual_transform(const kinf_blaschke* b, const double* w_re,
                                const double* w_im, double* t_re, double* t_im) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(t_re != nullptr && t_im != nullptr, "output array is null");
    unpack_complex(kinf::dual_transform(b->impl, pack_complex(w_re, w_im, b->impl.n())),
                   t_re, t_im);
  });
}

kinf_status kinf_criterion_sup(const kinf_blaschke* b, const double* w_re,
                               const double* w_im, double* out) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(out != nullptr, "output pointer is null");
    *out = kinf::criterion_sup(b->impl, pack_complex(w_re, w_im, b->impl.n()));
  });
}

kinf_status kinf_consistency_check(const kinf_blaschke* b, const double* w_re,
                                   const double* w_im, double* out) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(out != nullptr, "output pointer is null");
    *out = kinf::consistency_check(b->impl, pack_complex(w_re, w_im, b->impl.n()));
  });
}

kinf_status kinf_weighted_p_sum(const kinf_blaschke* b, const double* w_re,
                                const double* w_im, double p, double* out) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(out != nullptr, "output pointer is null");
    *out = kinf::weighted_p_sum(b->impl, pack_complex(w_re, w_im, b->impl.n()), p);
  });
}

kinf_status kinf_criterion_summary_compute(const kinf_blaschke* b, const double* w_re,
                                           const double* w_im,
                                           kinf_criterion_summary* out) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(out != nullptr, "output pointer is null");
    kinf::CriterionReport rep =
        kinf::criterion_report(b->impl, pack_complex(w_re, w_im, b->impl.n()));
    out->sup_T = rep.sup_T;
    out->ell1_bound = rep.ell1_bound;
    out->carleson_sum_1 = rep.carleson_sum_1;
    out->carleson_sum_dual = rep.carleson_sum_dual;
  });
}

kinf_status kinf_radial_counterexample(const kinf_blaschke* b, const double* beta,
                                       double* w, double* s, double* prefix,
                                       kinf_counterexample_summary* out) {
  return guarded([&] {
    require(b != nullptr, "product handle is null");
    require(beta != nullptr, "beta array is null");
    std::vector<double> bv(beta, beta + b->impl.n());
    kinf::CounterexampleReport rep = kinf::radial_counterexample(b->impl, bv);
    for (int j = 0; j < b->impl.n(); ++j) {
      if (w) w[j] = rep.w[static_cast<std::size_t>(j)];
      if (s) s[j] = rep.s[static_cast<std::size_t>(j)];
      if (prefix) prefix[j] = rep.prefix[static_cast<std::size_t>(j)];
    }
    if (out) {
      out->s_last = rep.s.back();
      out->prefix_last = rep.prefix.back();
      out->ratio_last = rep.ratio_last;
      out->domination_ok = rep.domination_ok ? 1 : 0;
      out->weight_bound_ok = rep.weight_bound_ok ? 1 : 0;
    }
  });
}

kinf_status kinf_majorant_parse(const char* spec, kinf_majorant** out) {
  return guarded([&] {
    require(spec != nullptr, "majorant spec is null");
    require(out != nullptr, "output handle is null");
    *out = new kinf_majorant{kinf::Majorant::parse(spec)};
  });
}

void kinf_majorant_free(kinf_majorant* m) { delete m; }

kinf_status kinf_majorant_eval(const kinf_majorant* m, double t, double* out) {
  return guarded([&] {
    require(m != nullptr, "majorant handle is null");
    require(out != nullptr, "output pointer is null");
    *out = m->impl(t);
  });
}

kinf_status kinf_majorant_at_dyadic(const kinf_majorant* m, int level, double* out) {
  return guarded([&] {
    require(m != nullptr, "majorant handle is null");
    require(out != nullptr, "output pointer is null");
    *out = m->impl.at_dyadic(level);
  });
}

kinf_status kinf_majorant_validate(const kinf_majorant* m, kinf_majorant_validation* out) {
  return guarded([&] {
    require(m != nullptr, "majorant handle is null");
    require(out != nullptr, "output pointer is null");
    kinf::MajorantValidation v = kinf::validate_majorant(m->impl);
    out->ok = v.ok ? 1 : 0;
    out->t_low = v.t_low;
    out->t_high = v.t_high;
    std::snprintf(out->which, sizeof(out->which), "%s", v.which.c_str());
  });
}

kinf_status kinf_upper_type_estimate(const kinf_majorant* m, double gamma,
                                     kinf_upper_type* out) {
  return guarded([&] {
    require(m != nullptr, "majorant handle is null");
    require(out != nullptr, "output pointer is null");
    kinf::UpperTypeEstimate est = kinf::upper_type_estimate(m->impl, gamma);
    out->gamma = est.gamma;
    out->c = est.c;
    out->valid = est.valid ? 1 : 0;
  });
}

kinf_status kinf_dyadic_sum(const kinf_majorant* m, int levels, double* partial) {
  return guarded([&] {
    require(m != nullptr, "majorant handle is null");
    require(partial != nullptr, "output array is null");
    std::vector<double> sums = kinf::dyadic_sum(m->impl, levels);
    for (std::size_t i = 0; i < sums.size(); ++i) partial[i] = sums[i];
  });
}

kinf_status kinf_integral_test_run(const kinf_majorant* m, int levels, double quad_tol,
                                   double* dyadic_partial, double* integral_partial,
                                   kinf_integral_test* out) {
  return guarded([&] {
    require(m != nullptr, "majorant handle is null");
    require(out != nullptr, "output pointer is null");
    kinf::IntegralTest t = kinf::integral_test(m->impl, levels, quad_tol);
    if (dyadic_partial)
      for (std::size_t i = 0; i < t.dyadic_partial.size(); ++i)
        dyadic_partial[i] = t.dyadic_partial[i];
    if (integral_partial)
      for (std::size_t i = 0; i < t.integral_partial.size(); ++i)
        integral_partial[i] = t.integral_partial[i];
    out->integral = t.integral;
    out->converged = t.converged ? 1 : 0;
    out->sandwich_ok = t.sandwich_ok ? 1 : 0;
    out->first_violation = t.first_violation;
  });
}

kinf_status kinf_xphi_norm(const kinf_sequence* seq, const double* w_re,
                           const double* w_im, const kinf_majorant* m, double* out) {
  return guarded([&] {
    require(seq != nullptr, "sequence handle is null");
    require(m != nullptr, "majorant handle is null");
    require(out != nullptr, "output pointer is null");
    *out = kinf::xphi_norm(seq->impl, pack_complex(w_re, w_im, seq->impl.n()), m->impl);
  });
}

}  // extern "C"
