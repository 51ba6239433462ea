#include <chrono>
#include <cmath>
#include <set>

#include "properlie/checker.hpp"
#include "properlie/errors.hpp"

namespace properlie {

namespace {

std::vector<std::int64_t> to_int64(const RationalVector& v, const mpz_class& scale) {
  std::vector<std::int64_t> out;
  for (const auto& q : v) {
    const Rational s = q * scale;
    if (s.get_den() != 1 || !s.get_num().fits_slong_p()) throw Error("coordinate does not fit a 64-bit integer");
    out.push_back(s.get_num().get_si());
  }
  return out;
}

std::int64_t dot64(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s == 0 ? 0 : (s > 0 ? 1 : -1);
}

// Orbit W.A_j scaled to integers; membership in a plane only needs the sign
// of each functional.
struct IntOrbit {
  std::vector<std::vector<std::int64_t>> points;
};

IntOrbit integer_orbit(const RootSystem& rs, const RationalVector& a) {
  const mpz_class scale = clear_denominators(a).multiplier;
  IntOrbit o;
  for (const auto& p : orbit_points(rs, a)) o.points.push_back(to_int64(p, scale));
  return o;
}

std::vector<std::vector<std::int64_t>> integer_annihilator(const Subspace& s) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& f : s.annihilator()) {
    const auto sc = clear_denominators(f);
    std::vector<std::int64_t> row;
    for (const auto& e : sc.entries) {
      if (!e.fits_slong_p()) throw Error("plane equation does not fit a 64-bit integer");
      row.push_back(e.get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool meets(const IntOrbit& o, const std::vector<std::vector<std::int64_t>>& eqs) {
  for (const auto& p : o.points) {
    bool inside = true;
    for (const auto& f : eqs)
      if (dot64(f, p) != 0) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

void require_hypotheses(const RealForm& rf) {
  if (rf.complex_system.type().components.size() != 1)
    throw ValidationError(rf.name + ": the 2-plane procedure needs an absolutely simple g");
  if (const int ah = a_hyperbolic_rank(rf); ah <= 1)
    throw ValidationError(rf.name + ": a-hyperbolic rank " + std::to_string(ah) +
                          " <= 1, outside the hypotheses of the 2-plane procedure");
}

}  // namespace

TwoPlaneCandidates two_plane_candidate_set(const RealForm& rf) {
  TwoPlaneCandidates c;
  c.reduced = collinearity_reduce(neutral_elements(rf));
  if (c.reduced.empty()) throw ValidationError(rf.name + ": no neutral elements");
  const RootSystem& rs = rf.restricted;
  const auto n = static_cast<std::size_t>(rs.rank());
  const RationalVector& a1 = c.reduced[0].h;
  const RationalVector minus_a1 = Rational(-1) * a1;
  c.bound = (c.reduced.size() + 1) * (weyl_order(rs) - 1);
  std::set<std::string> seen;
  for (const auto& h : c.reduced) {
    for (const auto& x : orbit_points(rs, h.h)) {
      ++c.x_size;
      if (x == a1 || x == minus_a1) continue;
      ++c.raw_count;
      auto plane = Subspace::span(n, {a1, x});
      if (plane.dim() == 2 && seen.insert(plane.key()).second) c.planes.push_back(std::move(plane));
    }
  }
  return c;
}

TwoPlaneReport two_plane_scan(const RealForm& rf) {
  const auto start = std::chrono::steady_clock::now();
  require_hypotheses(rf);
  TwoPlaneReport r;
  r.form = rf.name;
  r.candidates = two_plane_candidate_set(rf);
  const auto& hs = r.candidates.reduced;
  std::vector<IntOrbit> orbits;
  for (const auto& h : hs) orbits.push_back(integer_orbit(rf.restricted, h.h));
  r.decided_by.assign(hs.size(), 0);
  r.all_c3 = true;
  for (const auto& plane : r.candidates.planes) {
    ++r.planes_checked;
    const auto eqs = integer_annihilator(plane);
    // W.A_1 always meets the plane through A_1.
    std::size_t j = 1;
    while (j < orbits.size() && meets(orbits[j], eqs)) ++j;
    if (j < orbits.size()) {
      ++r.decided_by[j];
      continue;
    }
    r.all_c3 = false;
    r.failing_plane = plane;
    for (const auto& h : hs) {
      ScanOptions serial;
      serial.mode = ScanMode::serial;
      r.failing_witnesses.push_back(*orbit_meets_subspace(rf.restricted, h.h, plane, serial).witness);
    }
    break;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double straightforward_log10_cost(const RealForm& rf) {
  const auto hs = collinearity_reduce(neutral_elements(rf));
  double cost = 0;
  for (std::size_t j = 1; j < hs.size(); ++j)
    cost += std::log10(static_cast<double>(orbit_size(rf.restricted, hs[j].h)));
  return cost;
}

void require_straightforward_feasible(const RealForm& rf, double log10_bound) {
  if (const double c = straightforward_log10_cost(rf); c > log10_bound)
    throw Error(rf.name + ": the direct search needs about 10^" + std::to_string(static_cast<int>(c)) +
                " operations, above the bound 10^" + std::to_string(static_cast<int>(log10_bound)));
}

}  // namespace properlie
