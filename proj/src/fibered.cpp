#include "arcflow/fibered.hpp"

#include "arcflow/smith.hpp"

#include <algorithm>
#include <sstream>

namespace arcflow {

FiberedConeData fibered_cone(const FlowGraph& fg, const std::vector<MinimalCycle>& cycles) {
  if (cycles.empty()) throw ValidationError("no minimal cycles; not a layered flow graph");
  FiberedConeData fc;
  for (const MinimalCycle& c : cycles) fc.drifts.push_back(c.drift);
  std::sort(fc.drifts.begin(), fc.drifts.end(), lex_less);
  fc.drifts.erase(std::unique(fc.drifts.begin(), fc.drifts.end(), lex_eq), fc.drifts.end());
  fc.cone_b = make_cone(fg.rank, fc.drifts);
  if (cone_dim(fc.cone_b) != fg.rank)
    throw ValidationError("minimal-cycle drifts do not span; the cone over the fibered face "
                          "would be degenerate");
  std::vector<IntVec> neg;
  for (const IntVec& b : fc.drifts) neg.push_back(IntVec(-b));
  fc.dual = dual_cone(make_cone(fg.rank, neg));
  return fc;
}

bool fibered_interior(const FiberedConeData& fc, const RatVec& phi) {
  for (const IntVec& b : fc.drifts)
    if (dot(phi, b) >= 0) return false;
  return true;
}

bool fibered_closure(const FiberedConeData& fc, const RatVec& phi) {
  for (const IntVec& b : fc.drifts)
    if (dot(phi, b) > 0) return false;
  return true;
}

IntVec primitivize(const RatVec& phi) {
  Int den = 1;
  for (Eigen::Index i = 0; i < phi.size(); ++i) den = lcm(den, phi[i].get_den());
  IntVec v(phi.size());
  bool zero = true;
  for (Eigen::Index i = 0; i < phi.size(); ++i) {
    Rat scaled = phi[i] * Rat(den);
    v[i] = scaled.get_num();
    if (v[i] != 0) zero = false;
  }
  if (zero) throw DomainError("primitivize: zero class");
  return primitive(v);
}

SliceContext make_slice(const RatMat& basis, const RatVec& norm, const FiberedConeData& fibered,
                        const std::optional<IntMat>& lattice_override) {
  SliceContext s;
  s.ambient = basis.cols();
  if (!fibered.drifts.empty() && fibered.drifts.front().size() != s.ambient)
    throw DomainError("slice basis has " + std::to_string(basis.cols()) +
                      " columns but the homology rank is " +
                      std::to_string(fibered.drifts.front().size()));
  Lattice sat = saturate(basis, Lattice::standard(s.ambient));
  s.d = static_cast<int>(sat.rank()) - 1;
  if (s.d < 1) throw DomainError("make_slice: slice must have dimension at least 1");
  if (norm.size() != sat.rank()) throw DomainError("make_slice: norm has wrong dimension");

  if (lattice_override) {
    if (lattice_override->cols() != s.ambient || lattice_override->rows() != sat.rank())
      throw DomainError("make_slice: lattice override has wrong shape");
    // must be a finite-index sublattice of the saturation
    RatMat sb = to_rat(sat.basis);
    for (Eigen::Index i = 0; i < lattice_override->rows(); ++i) {
      RatVec coords = solve_left(sb, to_rat(IntVec(lattice_override->row(i).transpose())));
      for (Eigen::Index j = 0; j < coords.size(); ++j)
        if (coords[j].get_den() != 1)
          throw DomainError("make_slice: lattice override is not a sublattice");
    }
    IntMat h = hermite_row_basis(*lattice_override);
    if (h.rows() != sat.rank()) throw DomainError("make_slice: lattice override not full rank");
    s.lambda = Lattice{s.ambient, h};
  } else {
    s.lambda = sat;
  }
  s.norm_coeffs = norm;

  // p(b) = (lambda_i(b))_i in Lambda*-coordinates
  const Eigen::Index k = s.lambda.rank();
  for (const IntVec& b : fibered.drifts) {
    IntVec pb(k);
    for (Eigen::Index i = 0; i < k; ++i)
      pb[i] = dot(IntVec(s.lambda.basis.row(i).transpose()), b);
    s.p_of_b.push_back(pb);
  }

  std::vector<IntVec> neg;
  for (const IntVec& pb : s.p_of_b) neg.push_back(IntVec(-pb));
  s.c_star = make_cone(k, neg);
  if (!cone_is_pointed(s.c_star))
    throw DomainError("make_slice: slice does not meet the interior of the fibered cone");
  s.c = dual_cone(s.c_star);

  // mutual duality in the Lambda / Lambda* pairing: recompute the dual of C
  // from scratch and compare ray sets
  {
    std::vector<IntVec> back = dual_generators(k, s.c.rays);
    if (back.size() != s.c_star.rays.size())
      throw DomainError("make_slice: duality verification failed");
    for (size_t i = 0; i < back.size(); ++i)
      if (!lex_eq(back[i], s.c_star.rays[i]))
        throw DomainError("make_slice: duality verification failed");
    for (const IntVec& r : s.c.rays)
      for (const IntVec& pb : s.p_of_b)
        if (dot(r, pb) > 0) throw DomainError("make_slice: duality verification failed");
  }

  // norm must be positive on C minus the origin
  for (const IntVec& r : s.c.rays)
    if (dot(s.norm_coeffs, r) <= 0)
      throw DomainError("make_slice: norm is not positive on the slice cone");
  return s;
}

RatVec slice_coords(const SliceContext& s, const RatVec& phi) {
  return solve_left(to_rat(s.lambda.basis), phi);
}

RatVec ambient_coords(const SliceContext& s, const RatVec& c) {
  RatMat basis = to_rat(s.lambda.basis);
  RatVec out = RatVec::Zero(s.ambient);
  for (Eigen::Index i = 0; i < basis.rows(); ++i)
    for (Eigen::Index j = 0; j < s.ambient; ++j) out[j] += c[i] * basis(i, j);
  return out;
}

RatVec beta(const SliceContext&, const RatVec& phi_slice_coords) {
  // in Lambda-basis coordinates, beta_phi on Sigma* is the coordinate vector
  // of phi itself
  return phi_slice_coords;
}

Rat norm_value(const SliceContext& s, const RatVec& phi_slice_coords) {
  return dot(s.norm_coeffs, phi_slice_coords);
}

bool slice_interior(const SliceContext& s, const RatVec& phi_slice_coords) {
  return cone_contains_interior(s.c, phi_slice_coords);
}

SliceFile parse_slice_file(const std::string& text) {
  SliceFile sf;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_dim = false, have_norm = false;
  std::vector<RatVec> basis_rows;
  std::vector<IntVec> lattice_rows;
  auto fail = [&](const std::string& msg) {
    throw ParseError("slice file line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "dim") {
      if (!(ls >> sf.d) || sf.d < 1) fail("bad dimension");
      have_dim = true;
    } else if (kw == "basis") {
      std::vector<Rat> row;
      std::string tok;
      while (ls >> tok) row.push_back(parse_rat(tok));
      if (row.empty()) fail("empty basis row");
      RatVec v(static_cast<Eigen::Index>(row.size()));
      for (size_t i = 0; i < row.size(); ++i) v[static_cast<Eigen::Index>(i)] = row[i];
      basis_rows.push_back(std::move(v));
    } else if (kw == "norm") {
      std::vector<Rat> row;
      std::string tok;
      while (ls >> tok) row.push_back(parse_rat(tok));
      if (row.empty()) fail("empty norm row");
      sf.norm = RatVec(static_cast<Eigen::Index>(row.size()));
      for (size_t i = 0; i < row.size(); ++i) sf.norm[static_cast<Eigen::Index>(i)] = row[i];
      have_norm = true;
    } else if (kw == "lattice") {
      std::vector<Int> row;
      std::string tok;
      while (ls >> tok) {
        try {
          row.emplace_back(tok);
        } catch (const std::invalid_argument&) {
          fail("bad integer '" + tok + "'");
        }
      }
      if (row.empty()) fail("empty lattice row");
      IntVec v(static_cast<Eigen::Index>(row.size()));
      for (size_t i = 0; i < row.size(); ++i) v[static_cast<Eigen::Index>(i)] = row[i];
      lattice_rows.push_back(std::move(v));
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
  if (!have_dim) throw ParseError("slice file: missing dim");
  if (!have_norm) throw ParseError("slice file: missing norm");
  if (basis_rows.size() != static_cast<size_t>(sf.d) + 1)
    throw ParseError("slice file: need d+1 basis rows");
  const Eigen::Index n = basis_rows[0].size();
  sf.basis = RatMat(static_cast<Eigen::Index>(basis_rows.size()), n);
  for (size_t i = 0; i < basis_rows.size(); ++i) {
    if (basis_rows[i].size() != n) throw ParseError("slice file: ragged basis rows");
    sf.basis.row(static_cast<Eigen::Index>(i)) = basis_rows[i].transpose();
  }
  if (sf.norm.size() != sf.d + 1) throw ParseError("slice file: norm must have d+1 entries");
  if (!lattice_rows.empty()) {
    IntMat lat(static_cast<Eigen::Index>(lattice_rows.size()), n);
    for (size_t i = 0; i < lattice_rows.size(); ++i) {
      if (lattice_rows[i].size() != n) throw ParseError("slice file: ragged lattice rows");
      lat.row(static_cast<Eigen::Index>(i)) = lattice_rows[i].transpose();
    }
    sf.lattice = lat;
  }
  return sf;
}

}  // namespace arcflow
