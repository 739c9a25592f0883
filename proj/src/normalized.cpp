#include "arcflow/normalized.hpp"

#include "arcflow/smith.hpp"
#include "arcflow/volume.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace arcflow {

namespace {

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat factorial(int d) {
  Rat f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace

GValue g_value(const SliceContext& slice, const RatVec& phi_slice, int d,
               const OccupancyParams& occ) {
  if (d != slice.d) throw DomainError("g_value: d must equal the slice dimension");
  RatVec b = beta(slice, phi_slice);
  for (const IntVec& r : slice.c_star.rays)
    if (dot(b, r) <= 0)
      throw BoundaryError("g diverges at the slice boundary (beta vanishes on a dual ray)");

  GValue out;
  out.phi_slice = phi_slice;
  out.d = d;
  out.volume = pyramid_volume(slice.c_star, b);

  if (d == 1) {
    out.radicand = 2 * out.volume;
    out.exact = true;
    out.value = out.radicand;
    out.approx = out.value.get_d();
    return out;
  }

  // d >= 2: exact volume, estimated occupancy of P = C* cap beta^-1(1),
  // measured against the hyperplane lattice Lambda* cap beta^-1(0)
  IntVec beta_int = primitivize(b);
  IntMat beta_row(1, beta_int.size());
  beta_row.row(0) = beta_int.transpose();
  IntMat ker = kernel_basis(beta_row);
  Lattice hyper{beta_int.size(), hermite_row_basis(IntMat(ker.transpose()))};

  std::vector<RatVec> pverts;
  for (const IntVec& r : slice.c_star.rays) {
    RatVec p = to_rat(r);
    p /= dot(b, r);
    pverts.push_back(p);
  }
  RatVec base = pverts.front();
  for (RatVec& p : pverts) p -= base;  // translate into beta^-1(0)
  OccupancyResult oc = occupancy(hyper, pverts, occ);

  out.minocc_estimate = oc.value;
  out.uncertified_occupancy = true;
  out.radicand = Rat(d + 1) * out.volume / oc.value;
  out.exact = false;
  out.value = 0;
  out.approx = std::pow(out.radicand.get_d(), 1.0 / d);
  return out;
}

Rat simplex_covolume(const RatMat& vertices) {
  if (vertices.rows() != vertices.cols())
    throw DomainError("simplex_covolume: need d+1 vertices in d+1 coordinates");
  const Eigen::Index n = vertices.rows();
  // fraction-free elimination on a rational copy
  RatMat a = vertices;
  Rat det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    Rat p = a(c, c);
    a.row(c) /= p;
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      a.row(i) -= a(i, c) * a.row(c);
    }
  }
  return abs_rat(det);
}

SimplexG simplex_g(const RatVec& alphas, const Rat& covolume, int d,
                   const std::optional<Rat>& o_d) {
  if (alphas.size() != d + 1) throw DomainError("simplex_g: need d+1 barycentric coordinates");
  Rat sum = 0, prod = 1;
  for (Eigen::Index i = 0; i < alphas.size(); ++i) {
    if (alphas[i] <= 0) throw DomainError("simplex_g: alpha outside the open simplex");
    sum += alphas[i];
    prod *= alphas[i];
  }
  if (sum != 1) throw DomainError("simplex_g: barycentric coordinates must sum to 1");
  if (covolume <= 0) throw DomainError("simplex_g: covolume must be positive");

  SimplexG out;
  out.d = d;
  Rat od = 1;
  if (d >= 2) {
    if (!o_d) throw DomainError("simplex_g: O_d is unknown for d >= 2; supply an estimate");
    od = *o_d;
    out.uncertified = true;
  }
  out.radicand = Rat(1) / (od * factorial(d) * covolume * prod);
  if (d == 1) {
    out.exact = true;
    out.value = out.radicand;
    out.approx = out.value.get_d();
  } else {
    out.exact = false;
    out.approx = std::pow(out.radicand.get_d(), 1.0 / d);
  }
  return out;
}

ShapeTransport shape_transport(const SliceContext& s1, const SliceContext& s2, const RatMat& iso,
                               const std::vector<RatVec>& samples_slice1, int d) {
  const Eigen::Index k = s1.lambda.rank();
  if (s2.lambda.rank() != k || iso.rows() != k || iso.cols() != k)
    throw DomainError("shape_transport: dimension mismatch");
  Rat det = simplex_covolume(iso);  // |det iso|
  if (det == 0) throw DomainError("shape_transport: iso is singular");

  auto apply = [&](const RatVec& c) {
    RatVec out = RatVec::Zero(k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) out[i] += iso(i, j) * c[j];
    return out;
  };

  // extreme points of Omega_1 must land on extreme points of Omega_2
  if (s1.c.rays.size() != s2.c.rays.size())
    throw DomainError("shape_transport: iso does not match the slices");
  for (const IntVec& r : s1.c.rays) {
    RatVec omega = to_rat(r);
    omega /= norm_value(s1, omega);
    RatVec img = apply(omega);
    if (norm_value(s2, img) != 1)
      throw DomainError("shape_transport: iso does not map Omega_1 onto Omega_2");
    bool on_ray = false;
    for (const IntVec& r2 : s2.c.rays) {
      // img parallel to r2 with positive factor
      RatVec rr = to_rat(r2);
      bool parallel = true;
      Rat factor = 0;
      for (Eigen::Index i = 0; i < k && parallel; ++i) {
        if ((rr[i] == 0) != (img[i] == 0)) parallel = false;
        else if (rr[i] != 0) {
          Rat f = img[i] / rr[i];
          if (factor == 0)
            factor = f;
          else if (f != factor)
            parallel = false;
        }
      }
      if (parallel && factor > 0) {
        on_ray = true;
        break;
      }
    }
    if (!on_ray) throw DomainError("shape_transport: iso does not map Omega_1 onto Omega_2");
  }

  ShapeTransport out;
  out.theta = Rat(1) / det;

  for (const RatVec& phi : samples_slice1) {
    GValue g1 = g_value(s1, phi, d);
    GValue g2 = g_value(s2, apply(phi), d);
    if (d == 1) {
      if (g2.value != out.theta * g1.value)
        throw DomainError("shape_transport: scaling law failed at a sample point");
    } else {
      // exact on the volume factor
      if (g2.volume != out.theta * g1.volume)
        throw DomainError("shape_transport: scaling law failed at a sample point");
    }
  }
  return out;
}

std::pair<RatVec, RatVec> interval_endpoints(const SliceContext& slice) {
  if (slice.d != 1) throw DomainError("interval_endpoints: slice is not 1-dimensional");
  if (slice.c.rays.size() != 2) throw DomainError("interval_endpoints: cone is not an interval");
  RatVec a = to_rat(slice.c.rays[0]);
  RatVec b = to_rat(slice.c.rays[1]);
  a /= norm_value(slice, a);
  b /= norm_value(slice, b);
  return {a, b};
}

RatVec interval_point(const SliceContext& slice, const Rat& t) {
  auto [w1, w2] = interval_endpoints(slice);
  Rat c1 = (Rat(1) + t) / 2, c2 = (Rat(1) - t) / 2;
  RatVec out(w1.size());
  for (Eigen::Index i = 0; i < w1.size(); ++i) out[i] = c1 * w1[i] + c2 * w2[i];
  return out;
}

namespace {

// reduced rationals p/q with |p/q| < 1 and 1 <= q <= depth, ascending
std::vector<Rat> farey_interior(int depth) {
  std::vector<Rat> out;
  for (int q = 1; q <= depth; ++q) {
    for (int p = -q + 1; p <= q - 1; ++p) {
      if (std::gcd(std::abs(p), q) != 1) continue;
      if (p == 0 && q != 1) continue;
      Rat r(p, q);
      r.canonicalize();
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ScanRow make_row(const FlowArtifacts& art, const SliceContext& slice, const RatVec& phi_slice,
                 std::string label, int d, const OccupancyParams& occ) {
  ScanRow row;
  row.point = std::move(label);
  row.phi_slice = phi_slice;
  row.d = d;
  MuResult m = mu(art, slice, ambient_coords(slice, phi_slice), d);
  row.norm = m.norm;
  row.ell = m.ell;
  row.mu_exact = m.exact;
  row.mu = m.exact ? m.mu_exact : m.radicand;
  GValue g = g_value(slice, phi_slice, d, occ);
  row.g_exact = g.exact;
  row.g = g.exact ? g.value : g.radicand;
  row.gap = (row.mu_exact && row.g_exact) ? Rat(row.g - row.mu) : Rat(0);
  return row;
}

}  // namespace

std::vector<ScanRow> scan(const FlowArtifacts& art, const SliceContext& slice, int depth, int d,
                          const OccupancyParams& occ) {
  if (depth < 1) throw DomainError("scan: depth must be at least 1");
  if (d != slice.d) throw DomainError("scan: d must equal the slice dimension");
  std::vector<ScanRow> rows;
  if (d == 1) {
    for (const Rat& t : farey_interior(depth)) {
      RatVec phi = interval_point(slice, t);
      rows.push_back(make_row(art, slice, phi, to_string(t), d, occ));
    }
    return rows;
  }
  // d >= 2: simplex slices via barycentric Farey coordinates
  if (static_cast<int>(slice.c.rays.size()) != d + 1)
    throw DomainError("scan: dimension >= 2 supported for simplex slices only");
  std::vector<RatVec> omegas;
  for (const IntVec& r : slice.c.rays) {
    RatVec w = to_rat(r);
    w /= norm_value(slice, w);
    omegas.push_back(w);
  }
  std::vector<Rat> ticks;
  for (int q = 1; q <= depth; ++q)
    for (int p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) {
        Rat r(p, q);
        r.canonicalize();
        ticks.push_back(r);
      }
  std::sort(ticks.begin(), ticks.end());
  ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());

  std::vector<Rat> alpha(d + 1);
  std::function<void(int, Rat)> rec = [&](int i, Rat used) {
    if (i == d) {
      alpha[d] = Rat(1) - used;
      if (alpha[d] <= 0) return;
      if (alpha[d].get_den() > depth) return;
      RatVec phi = RatVec::Zero(omegas[0].size());
      std::string label;
      for (int j = 0; j <= d; ++j) {
        for (Eigen::Index c = 0; c < phi.size(); ++c) phi[c] += alpha[j] * omegas[j][c];
        if (j) label += ":";
        label += to_string(alpha[j]);
      }
      rows.push_back(make_row(art, slice, phi, label, d, occ));
      return;
    }
    for (const Rat& t : ticks) {
      if (used + t >= 1) break;
      alpha[i] = t;
      rec(i + 1, used + t);
    }
  };
  rec(0, Rat(0));
  return rows;
}

std::vector<ConvergenceRow> convergence_scan(const FlowArtifacts& art, const SliceContext& slice,
                                             const RatVec& target, const RatVec& dir, long kmin,
                                             long kmax, int d) {
  if (kmin > kmax) throw DomainError("convergence_scan: empty range");
  if (target.size() != dir.size()) throw DomainError("convergence_scan: target and dir dimensions differ");
  // pairwise distinct classes need a direction transverse to the target ray
  IntVec t0 = primitivize(target);
  IntVec d0;
  bool proportional = false;
  try {
    d0 = primitivize(dir);
    proportional = lex_eq(t0, d0) || lex_eq(t0, IntVec(-d0));
  } catch (const DomainError&) {
    proportional = true;  // zero direction
  }
  if (proportional)
    throw DomainError("convergence_scan: sequence must consist of pairwise distinct classes");

  std::vector<ConvergenceRow> rows;
  for (long k = kmin; k <= kmax; ++k) {
    RatVec phi = target * Rat(static_cast<long>(k));
    phi += dir;
    ConvergenceRow row;
    row.k = k;
    MuResult m = mu(art, slice, phi, d);
    row.phi_bar = m.phi_bar;
    row.norm = m.norm;
    row.ell = m.ell;
    row.mu = m.exact ? m.mu_exact : m.radicand;
    RatVec coords = slice_coords(slice, to_rat(m.phi_bar));
    RatVec omega = coords;
    omega /= norm_value(slice, coords);
    GValue g = g_value(slice, omega, d);
    row.g = g.exact ? g.value : g.radicand;
    row.gap = row.g - row.mu;
    if (row.gap < 0) row.gap = -row.gap;
    row.ratio = row.g == 0 ? Rat(0) : Rat(row.gap / row.g);
    if (d == 1) {
      auto [w1, w2] = interval_endpoints(slice);
      // recover the interval parameter from omega = ((1+t)/2) w1 + ((1-t)/2) w2
      RatVec diff = w1 - w2;
      Rat num = 0, den = 0;
      for (Eigen::Index i = 0; i < diff.size(); ++i) {
        if (diff[i] == 0) continue;
        num = 2 * omega[i] - w1[i] - w2[i];
        den = diff[i];
        break;
      }
      row.t = den == 0 ? Rat(0) : Rat(num / den);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string render_cell(const Rat& r, bool exact, bool with_float, int d) {
  if (exact) {
    std::string s = to_string(r);
    if (with_float) s += " (" + std::to_string(r.get_d()) + ")";
    return s;
  }
  std::ostringstream os;
  os << to_string(r) << "^(1/" << d << ")";
  if (with_float) os << " (" << std::pow(r.get_d(), 1.0 / d) << ")";
  return os.str();
}

}  // namespace

std::string render_scan_csv(const std::vector<ScanRow>& rows, char sep, bool with_float) {
  std::ostringstream os;
  os << "point" << sep << "norm" << sep << "ell" << sep << "mu" << sep << "g" << sep << "gap"
     << "\n";
  for (const ScanRow& r : rows) {
    os << r.point << sep << to_string(r.norm) << sep << to_string(r.ell) << sep
       << render_cell(r.mu, r.mu_exact, with_float, r.d) << sep
       << render_cell(r.g, r.g_exact, with_float, r.d) << sep << to_string(r.gap) << "\n";
  }
  return os.str();
}

std::string render_convergence_csv(const std::vector<ConvergenceRow>& rows, char sep,
                                   bool with_float) {
  std::ostringstream os;
  os << "k" << sep << "point" << sep << "norm" << sep << "ell" << sep << "mu" << sep << "g" << sep
     << "gap" << sep << "gap_over_g"
     << "\n";
  for (const ConvergenceRow& r : rows) {
    os << r.k << sep << to_string(r.t) << sep << to_string(r.norm) << sep << to_string(r.ell)
       << sep << render_cell(r.mu, true, with_float, 1) << sep
       << render_cell(r.g, true, with_float, 1) << sep << to_string(r.gap) << sep
       << to_string(r.ratio) << "\n";
  }
  return os.str();
}

}  // namespace arcflow
