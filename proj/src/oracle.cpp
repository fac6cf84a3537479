#include "gausspack/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <unsupported/Eigen/FFT>
#include <vector>

#include "gausspack/errors.hpp"

namespace gausspack::oracle {

namespace {

using std::numbers::pi;

// Kronrod abscissae (descending), Kronrod weights and the weights of the
// embedded 7-point Gauss rule, which uses every other Kronrod node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Segment& a, const Segment& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;
  }
};

Segment gauss_kronrod(const RealFunction& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(mid);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(mid - dx) + f(mid + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

cplx stencil_first(const std::function<cplx(double)>& g, double x, double h) {
  return (-g(x + 2 * h) + 8.0 * g(x + h) - 8.0 * g(x - h) + g(x - 2 * h)) /
         (12.0 * h);
}

double grid_spacing(const Eigen::ArrayXd& xs) {
  if (xs.size() < 4) throw ArgumentError("grid needs at least 4 points");
  const double dx = xs[1] - xs[0];
  if (!(dx > 0.0)) throw ArgumentError("grid must be increasing");
  for (Eigen::Index i = 1; i < xs.size(); ++i) {
    const double expected = xs[0] + dx * static_cast<double>(i);
    if (std::abs(xs[i] - expected) > 1e-9 * dx * static_cast<double>(xs.size())) {
      throw ArgumentError("grid must be uniform");
    }
  }
  return dx;
}

// Integrands built from finite differences carry ~1e-11 relative noise, so
// their quadrature cannot be asked for more than this.
constexpr double kFiniteDifferenceRelTol = 1e-9;

QuadratureSpec fd_spec(QuadratureSpec spec) {
  spec.rel_tol = std::max(spec.rel_tol, kFiniteDifferenceRelTol);
  return spec;
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

// Signed FFT frequency index for bin k.
double signed_bin(Eigen::Index k, Eigen::Index n) {
  return static_cast<double>(k < (n + 1) / 2 ? k : k - n);
}

}  // namespace

QuadratureResult integrate(const RealFunction& f, double lo, double hi,
                           const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0)) {
    throw ArgumentError("quadrature tolerances must be positive");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ArgumentError("quadrature limits must be finite");
  }
  if (lo == hi) return {};
  const double sign = lo < hi ? 1.0 : -1.0;
  if (lo > hi) std::swap(lo, hi);

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  heap.push(gauss_kronrod(f, lo, hi));
  double value = heap.top().value;
  double error = heap.top().error;
  int subdivisions = 0;
  const double min_width = (hi - lo) * 1e-13;

  while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
    const Segment worst = heap.top();
    if (subdivisions >= spec.max_subdivisions || worst.hi - worst.lo < min_width) {
      throw AccuracyError("adaptive quadrature did not converge",
                          sign * value, error);
    }
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = gauss_kronrod(f, worst.lo, mid);
    const Segment right = gauss_kronrod(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // Re-sum in spatial order so the result does not depend on the history of
  // running updates.
  std::vector<Segment> parts;
  parts.reserve(heap.size());
  while (!heap.empty()) {
    parts.push_back(heap.top());
    heap.pop();
  }
  std::sort(parts.begin(), parts.end(),
            [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  double total = 0.0;
  double total_error = 0.0;
  for (const Segment& s : parts) {
    total += s.value;
    total_error += s.error;
  }
  return {sign * total, total_error, subdivisions};
}

Window quadrature_window(const PacketState& state, const QuadratureSpec& spec) {
  if (!(spec.window_sigmas >= 6.0)) {
    throw ArgumentError("window_sigmas must be at least 6");
  }
  const double w = spec.window_sigmas * state.spread();
  return {state.center - w, state.center + w};
}

std::pair<QuadratureResult, QuadratureResult> split_integrals(
    const RealFunction& f, const PacketState& state, const QuadratureSpec& spec) {
  const Window w = quadrature_window(state, spec);
  return {integrate(f, w.xmin, state.center, spec),
          integrate(f, state.center, w.xmax, spec)};
}

cplx fd_derivative(const PsiSampler& psi, double x, double t, double h) {
  return stencil_first([&](double y) { return psi(y, t); }, x, h);
}

cplx fd_second_derivative(const PsiSampler& psi, double x, double t, double h) {
  return (-psi(x + 2 * h, t) + 16.0 * psi(x + h, t) - 30.0 * psi(x, t) +
          16.0 * psi(x - h, t) - psi(x - 2 * h, t)) /
         (12.0 * h * h);
}

cplx fd_time_derivative(const PsiSampler& psi, double x, double t, double h) {
  return stencil_first([&](double s) { return psi(x, s); }, t, h);
}

double local_length_scale(const PacketState& state, const QuadratureSpec& spec) {
  const double reach = spec.window_sigmas * state.spread();
  const double kmax =
      std::abs(state.lin_phase) + 2.0 * std::abs(state.quad_coeff) * reach;
  return std::min(state.spread(), 1.0 / kmax);
}

double schrodinger_residual(const SystemSpec& system, const PacketParams& params,
                            double x, double t, double hx, double ht) {
  const PsiSampler psi = [&](double y, double s) {
    return eval_psi(system, params, y, s);
  };
  const double hbar = params.hbar();
  const double m = params.mass();
  const cplx lhs = cplx(0.0, hbar) * fd_time_derivative(psi, x, t, ht);
  const cplx rhs = -hbar * hbar / (2.0 * m) * fd_second_derivative(psi, x, t, hx) +
                   potential(system, params.constants(), x) * psi(x, t);
  return std::abs(lhs - rhs);
}

QuadratureResult norm_integral(const SystemSpec& system,
                               const PacketParams& params, double t,
                               const QuadratureSpec& spec) {
  const PacketState st = state_at(system, params, t);
  const Window w = quadrature_window(st, spec);
  return integrate([&](double x) { return std::norm(st.psi(x)); }, w.xmin,
                   w.xmax, spec);
}

QuadratureResult kinetic_ibp(const SystemSpec& system, const PacketParams& params,
                             double t, const QuadratureSpec& spec) {
  const PacketState st = state_at(system, params, t);
  const Window w = quadrature_window(st, spec);
  const double h = 5e-3 * local_length_scale(st, spec);
  const PsiSampler psi = [&st](double y, double) { return st.psi(y); };
  const double c = -params.hbar() * params.hbar() / (2.0 * params.mass());
  return integrate(
      [&](double x) {
        return c * (std::conj(st.psi(x)) * fd_second_derivative(psi, x, t, h)).real();
      },
      w.xmin, w.xmax, fd_spec(spec));
}

QuadratureResult kinetic_density_integral(const SystemSpec& system,
                                          const PacketParams& params, double t,
                                          const QuadratureSpec& spec) {
  const PacketState st = state_at(system, params, t);
  const Window w = quadrature_window(st, spec);
  return integrate(
      [&](double x) { return kinetic_density(st, params.constants(), x); },
      w.xmin, w.xmax, spec);
}

EnergySplit half_energies_quadrature(const SystemSpec& system,
                                     const PacketParams& params, double t,
                                     const QuadratureSpec& spec) {
  const PacketState st = state_at(system, params, t);
  const double h = 1e-3 * local_length_scale(st, spec);
  const PsiSampler psi = [&st](double y, double) { return st.psi(y); };
  const double c = params.hbar() * params.hbar() / (2.0 * params.mass());
  const auto [left, right] = split_integrals(
      [&](double x) { return c * std::norm(fd_derivative(psi, x, t, h)); }, st,
      fd_spec(spec));
  EnergySplit split;
  split.t = t;
  split.plus = right.value;
  split.minus = left.value;
  split.total = split.plus + split.minus;
  split.r_plus = split.plus / split.total;
  split.r_minus = split.minus / split.total;
  return split;
}

MomentumGrid momentum_transform(const Eigen::ArrayXd& xs,
                                const Eigen::ArrayXcd& psi, double hbar) {
  if (xs.size() != psi.size()) throw ArgumentError("grid/psi size mismatch");
  const double dx = grid_spacing(xs);
  const Eigen::Index n = xs.size();

  std::vector<cplx> in(psi.data(), psi.data() + n);
  std::vector<cplx> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, in);

  const double dp = 2.0 * pi * hbar / (static_cast<double>(n) * dx);
  const double scale = dx / std::sqrt(2.0 * pi * hbar);
  const Eigen::Index shift = n / 2;  // bin of the most negative momentum

  MomentumGrid grid;
  grid.xmin = xs[0];
  grid.dx = dx;
  grid.ps.resize(n);
  grid.phi.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index k = (j + shift + (n % 2)) % n;
    const double p = dp * signed_bin(k, n);
    grid.ps[j] = p;
    grid.phi[j] = scale * std::polar(1.0, -p * xs[0] / hbar) *
                  out[static_cast<std::size_t>(k)];
  }

  const double peak = grid.phi.abs().maxCoeff();
  const Eigen::Index edge = std::max<Eigen::Index>(1, n / 32);
  const double tail = std::max(grid.phi.head(edge).abs().maxCoeff(),
                               grid.phi.tail(edge).abs().maxCoeff());
  if (tail > 1e-12 * peak) {
    throw ResolutionError("momentum spectrum reaches the band edge (aliasing)");
  }
  return grid;
}

Eigen::ArrayXcd position_transform(const MomentumGrid& grid, double hbar) {
  const Eigen::Index n = grid.phi.size();
  const Eigen::Index shift = n / 2;
  std::vector<cplx> in(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index k = (j + shift + (n % 2)) % n;
    in[static_cast<std::size_t>(k)] =
        std::polar(1.0, grid.ps[j] * grid.xmin / hbar) * grid.phi[j];
  }
  std::vector<cplx> out;
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.inv(out, in);
  const double dp = 2.0 * pi * hbar / (static_cast<double>(n) * grid.dx);
  const double scale = dp / std::sqrt(2.0 * pi * hbar);
  Eigen::ArrayXcd psi(n);
  for (Eigen::Index j = 0; j < n; ++j) psi[j] = scale * out[static_cast<std::size_t>(j)];
  return psi;
}

Eigen::ArrayXd propagator_grid(const PropagatorSpec& spec) {
  if (!is_power_of_two(spec.n_grid)) {
    throw ArgumentError("n_grid must be a power of two");
  }
  if (!(spec.domain.xmin < spec.domain.xmax)) {
    throw ArgumentError("domain requires xmin < xmax");
  }
  const double dx =
      (spec.domain.xmax - spec.domain.xmin) / static_cast<double>(spec.n_grid);
  return spec.domain.xmin +
         dx * Eigen::ArrayXd::LinSpaced(spec.n_grid, 0.0,
                                        static_cast<double>(spec.n_grid - 1));
}

namespace {

void check_boundary(const Eigen::ArrayXd& xs, const Eigen::ArrayXcd& psi,
                    const Window& domain) {
  const Eigen::ArrayXd rho = psi.abs2();
  const double mass = rho.sum();
  const double mean = (xs * rho).sum() / mass;
  const double var = ((xs - mean).square() * rho).sum() / mass;
  const double reach = 4.0 * std::sqrt(var);
  if (mean - reach < domain.xmin || mean + reach > domain.xmax) {
    throw BoundaryError("packet came within 4 Delta x of the domain edge");
  }
}

}  // namespace

PropagationResult propagate(const Eigen::ArrayXcd& initial,
                            const PropagatorSpec& spec, double t_final) {
  const Eigen::ArrayXd xs = propagator_grid(spec);
  const Eigen::Index n = spec.n_grid;
  if (initial.size() != n) throw ArgumentError("initial psi size != n_grid");
  if (!(spec.dt > 0.0)) throw ArgumentError("dt must be positive");
  if (!(t_final >= 0.0)) throw ArgumentError("t_final must be non-negative");
  validate(spec.potential);

  const double hbar = spec.constants.hbar;
  const double m = spec.constants.mass;
  const long steps =
      t_final == 0.0 ? 0 : std::max(1L, std::lround(std::ceil(t_final / spec.dt - 1e-9)));
  const double dt = steps == 0 ? 0.0 : t_final / static_cast<double>(steps);

  const double dx = xs[1] - xs[0];
  const double dp = 2.0 * pi * hbar / (static_cast<double>(n) * dx);
  Eigen::ArrayXcd kick(n);
  Eigen::ArrayXcd drift(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double v = potential(spec.potential, spec.constants, xs[j]);
    kick[j] = std::polar(1.0, -v * dt / (2.0 * hbar));
    const double p = dp * signed_bin(j, n);
    drift[j] = std::polar(1.0, -p * p * dt / (2.0 * m * hbar));
  }

  Eigen::FFT<double> fft;
  std::vector<cplx> work(initial.data(), initial.data() + n);
  std::vector<cplx> spectrum;
  constexpr long kCheckEvery = 64;
  for (long s = 0; s < steps; ++s) {
    for (Eigen::Index j = 0; j < n; ++j) work[static_cast<std::size_t>(j)] *= kick[j];
    fft.fwd(spectrum, work);
    for (Eigen::Index j = 0; j < n; ++j) spectrum[static_cast<std::size_t>(j)] *= drift[j];
    fft.inv(work, spectrum);
    for (Eigen::Index j = 0; j < n; ++j) work[static_cast<std::size_t>(j)] *= kick[j];
    if ((s + 1) % kCheckEvery == 0) {
      check_boundary(xs, Eigen::Map<const Eigen::ArrayXcd>(work.data(), n),
                     spec.domain);
    }
  }

  PropagationResult result;
  result.psi = Eigen::Map<const Eigen::ArrayXcd>(work.data(), n);
  check_boundary(xs, result.psi, spec.domain);
  result.t = t_final;
  result.steps = steps;
  return result;
}

double l2_distance(const Eigen::ArrayXcd& a, const Eigen::ArrayXcd& b,
                   double dx) {
  if (a.size() != b.size()) throw ArgumentError("size mismatch");
  return std::sqrt((a - b).abs2().sum() * dx);
}

double l2_distance_mod_phase(const Eigen::ArrayXcd& a, const Eigen::ArrayXcd& b,
                             double dx) {
  if (a.size() != b.size()) throw ArgumentError("size mismatch");
  const cplx overlap = (a.conjugate() * b).sum();
  const cplx align =
      std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : cplx(1.0);
  return l2_distance(a, b * align, dx);
}

}  // namespace gausspack::oracle
