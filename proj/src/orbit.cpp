#include "properlie/orbit.hpp"

#include <omp.h>

#include <array>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>

#include "properlie/errors.hpp"

namespace properlie {

namespace {

using Vec = std::array<std::int64_t, kMaxRank>;

struct Node {
  Vec x{};  // root coordinates, scaled
  Vec p{};  // coroot pairings, scaled
};

// Integer form of one traversal: the dominant point scaled to integers and the
// subspace as integer annihilating functionals.
struct Kernel {
  int n = 0;
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> cartan{};
  std::vector<Vec> functionals;
  Node root;
  Rational scale = 1;
  std::vector<int> seed_word;

  // Child of `node` through s_i, if s_i(node) has node as its tree parent.
  bool child(const Node& node, int i, Node& out) const {
    const std::int64_t pi = node.p[static_cast<std::size_t>(i)];
    if (pi <= 0) return false;
    const auto& row = cartan[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j)
      if (node.p[static_cast<std::size_t>(j)] - pi * row[static_cast<std::size_t>(j)] < 0) return false;
    out = node;
    out.x[static_cast<std::size_t>(i)] -= pi;
    for (int j = 0; j < n; ++j) out.p[static_cast<std::size_t>(j)] -= pi * row[static_cast<std::size_t>(j)];
    return true;
  }

  bool member(const Node& node) const {
    for (const auto& f : functionals) {
      __int128 s = 0;
      for (int k = 0; k < n; ++k) s += static_cast<__int128>(f[static_cast<std::size_t>(k)]) * node.x[static_cast<std::size_t>(k)];
      if (s != 0) return false;
    }
    return true;
  }

  RationalVector point(const Node& node) const {
    RationalVector v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      v[static_cast<std::size_t>(k)] = Rational(mpz_class(static_cast<long>(node.x[static_cast<std::size_t>(k)]))) / scale;
      v[static_cast<std::size_t>(k)].canonicalize();
    }
    return v;
  }

  OrbitWitness witness(const Node& node, const std::vector<int>& path) const {
    OrbitWitness w{point(node), seed_word};
    w.word.insert(w.word.end(), path.begin(), path.end());
    return w;
  }
};

constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 58;

std::int64_t to_int64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p() || abs(z) >= kCoordinateLimit)
    throw Error(std::string("orbit traversal: ") + what + " too large for 64-bit kernel");
  return z.get_si();
}

Kernel make_kernel(const RootSystem& rs, const RationalVector& v, const Subspace* s) {
  const int n = rs.rank();
  if (v.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("orbit seed has wrong length");
  if (s && s->ambient_dim() != static_cast<std::size_t>(n)) throw DimensionMismatch("subspace lives in a different space");
  Kernel k;
  k.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rs.cartan(i, j);

  auto dom = dominant_representative(rs, v);
  k.seed_word = std::move(dom.word);
  const auto scaled = clear_denominators(dom.point);
  k.scale = Rational(scaled.multiplier);
  // Coordinates of every w.mu lie between those of mu and w0.mu = -tau(mu),
  // and pairings are bounded by the highest coroot (coefficients <= 6).
  mpz_class pair_sum = 0;
  for (int i = 0; i < n; ++i) {
    k.root.x[static_cast<std::size_t>(i)] = to_int64(scaled.entries[static_cast<std::size_t>(i)], "coordinate");
    const Rational pi = rs.coroot_pairing(dom.point, i) * k.scale;
    k.root.p[static_cast<std::size_t>(i)] = to_int64(pi.get_num(), "pairing");
    pair_sum += pi.get_num();
  }
  to_int64(8 * pair_sum, "pairing bound");

  if (s)
    for (const auto& f : s->annihilator()) {
      const auto fi = clear_denominators(f);
      Vec row{};
      for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = to_int64(fi.entries[static_cast<std::size_t>(i)], "functional");
      k.functionals.push_back(row);
    }
  return k;
}

// Preorder walk of the subtree at `root`. `path` holds the word from the
// dominant point to root and is extended in place.
template <class Visit>
bool walk_subtree(const Kernel& k, const Node& root, std::vector<int>& path, Visit&& visit) {
  if (!visit(root, path)) return false;
  struct Frame {
    Node node;
    int next;
  };
  std::vector<Frame> stack;
  stack.reserve(64);
  stack.push_back({root, 0});
  const std::size_t base = path.size();
  Node c;
  while (!stack.empty()) {
    Frame& f = stack.back();
    int i = f.next;
    while (i < k.n && !k.child(f.node, i, c)) ++i;
    if (i == k.n) {
      stack.pop_back();
      if (path.size() > base) path.pop_back();
      continue;
    }
    f.next = i + 1;
    path.push_back(i);
    if (!visit(c, path)) return false;
    stack.push_back({c, 0});
  }
  return true;
}

struct Unit {
  Node node;
  std::vector<int> path;
  bool subtree;
};

// Cuts the traversal tree at some depth: nodes above the cut become single
// units, nodes on it whole-subtree units. Listing units in preorder keeps
// the serial visiting order.
std::vector<Unit> make_units(const Kernel& k, std::size_t target) {
  std::vector<Unit> units;
  for (int depth = 0; depth < 400; ++depth) {
    units.clear();
    std::size_t subtrees = 0;
    std::vector<int> path;
    auto gen = [&](auto&& self, const Node& node, int d) -> void {
      if (d == depth) {
        units.push_back({node, path, true});
        ++subtrees;
        return;
      }
      units.push_back({node, path, false});
      Node c;
      for (int i = 0; i < k.n; ++i)
        if (k.child(node, i, c)) {
          path.push_back(i);
          self(self, c, d + 1);
          path.pop_back();
        }
    };
    gen(gen, k.root, 0);
    if (subtrees >= target || subtrees == 0) break;
  }
  return units;
}

OrbitScanResult scan_serial(const Kernel& k, const ScanOptions& opt) {
  OrbitScanResult res;
  std::vector<int> path;
  bool aborted = false;
  walk_subtree(k, k.root, path, [&](const Node& node, const std::vector<int>& w) {
    if (opt.budget && res.points_visited >= opt.budget) {
      aborted = true;
      return false;
    }
    ++res.points_visited;
    if (opt.progress && opt.progress_interval && res.points_visited % opt.progress_interval == 0)
      opt.progress(res.points_visited);
    if (!k.member(node)) return true;
    auto wit = k.witness(node, w);
    if (opt.accept && !opt.accept(wit)) return true;
    res.witness = std::move(wit);
    return false;
  });
  if (res.witness)
    res.outcome = ScanOutcome::witness_found;
  else
    res.outcome = aborted ? ScanOutcome::aborted : ScanOutcome::empty_intersection;
  return res;
}

OrbitScanResult scan_parallel(const Kernel& k, const ScanOptions& opt) {
  const auto threads = static_cast<std::size_t>(omp_get_max_threads());
  const std::vector<Unit> units = make_units(k, 64 * threads);
  const long count = static_cast<long>(units.size());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  enum class Status { pending, clear, hit, aborted };
  std::vector<Status> status(units.size(), Status::pending);
  std::vector<std::optional<OrbitWitness>> found(units.size());
  std::atomic<std::size_t> best{kNone};
  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> over_budget{false};
  std::exception_ptr error;
  std::mutex error_mutex, progress_mutex;
  const std::uint64_t flush_every = opt.budget ? std::min<std::uint64_t>(1024, opt.budget) : 1024;

  auto flush = [&](std::uint64_t n) {
    if (!n) return;
    const std::uint64_t before = total.fetch_add(n);
    const std::uint64_t after = before + n;
    if (opt.budget && after > opt.budget) over_budget = true;
    if (opt.progress && opt.progress_interval && before / opt.progress_interval != after / opt.progress_interval) {
      std::lock_guard lock(progress_mutex);
      opt.progress(after);
    }
  };

#pragma omp parallel for schedule(dynamic, 1)
  for (long u = 0; u < count; ++u) {
    const auto ui = static_cast<std::size_t>(u);
    if (ui > best.load() || over_budget.load()) {
      status[ui] = Status::aborted;
      continue;
    }
    try {
      std::uint64_t local = 0;
      Status st = Status::clear;
      auto visit = [&](const Node& node, const std::vector<int>& w) {
        if (++local == flush_every) {
          flush(local);
          local = 0;
          if (over_budget.load() || ui > best.load()) {
            st = Status::aborted;
            return false;
          }
        }
        if (!k.member(node)) return true;
        auto wit = k.witness(node, w);
        if (opt.accept && !opt.accept(wit)) return true;
        found[ui] = std::move(wit);
        st = Status::hit;
        std::size_t cur = best.load();
        while (ui < cur && !best.compare_exchange_weak(cur, ui)) {
        }
        return false;
      };
      std::vector<int> path = units[ui].path;
      if (units[ui].subtree)
        walk_subtree(k, units[ui].node, path, visit);
      else
        visit(units[ui].node, path);
      flush(local);
      status[ui] = st;
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      status[ui] = Status::aborted;
      best = 0;
    }
  }
  if (error) std::rethrow_exception(error);

  OrbitScanResult res;
  res.points_visited = total.load();
  res.outcome = ScanOutcome::empty_intersection;
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (status[u] == Status::clear) continue;
    if (status[u] == Status::hit) {
      res.outcome = ScanOutcome::witness_found;
      res.witness = std::move(found[u]);
    } else {
      res.outcome = ScanOutcome::aborted;
    }
    break;
  }
  return res;
}

}  // namespace

RationalVector apply_word(const RootSystem& rs, std::span<const int> word, RationalVector v) {
  for (int i : word) v = rs.reflect(i, v);
  return v;
}

DominantRepresentative dominant_representative(const RootSystem& rs, const RationalVector& v) {
  if (v.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("vector length differs from root system rank");
  DominantRepresentative d{v, {}};
  for (;;) {
    int i = 0;
    while (i < rs.rank() && rs.coroot_pairing(d.point, i) >= 0) ++i;
    if (i == rs.rank()) return d;
    d.point = rs.reflect(i, d.point);
    d.word.push_back(i);
  }
}

bool same_orbit(const RootSystem& rs, const RationalVector& u, const RationalVector& v) {
  return dominant_representative(rs, u).point == dominant_representative(rs, v).point;
}

std::uint64_t orbit_size(const RootSystem& rs, const RationalVector& v) {
  const auto dom = dominant_representative(rs, v).point;
  std::vector<int> fixed;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.coroot_pairing(dom, i) == 0) fixed.push_back(i);
  RationalMatrix sub(fixed.size(), fixed.size());
  for (std::size_t a = 0; a < fixed.size(); ++a)
    for (std::size_t b = 0; b < fixed.size(); ++b) sub(a, b) = rs.gram()(fixed[a], fixed[b]);
  const auto stab = RootSystem::from_gram(sub, {});
  return weyl_order(rs) / weyl_order(stab);
}

TraversalSummary orbit_iterate(const RootSystem& rs, const RationalVector& v, const OrbitVisitor& visit) {
  const Kernel k = make_kernel(rs, v, nullptr);
  TraversalSummary sum;
  std::vector<int> path;
  sum.stopped = !walk_subtree(k, k.root, path, [&](const Node& node, const std::vector<int>& w) {
    ++sum.visited;
    const auto wit = k.witness(node, w);
    return visit(wit.point, wit.word);
  });
  return sum;
}

std::vector<RationalVector> orbit_points(const RootSystem& rs, const RationalVector& v) {
  const Kernel k = make_kernel(rs, v, nullptr);
  std::vector<RationalVector> pts;
  std::vector<int> path;
  walk_subtree(k, k.root, path, [&](const Node& node, const std::vector<int>&) {
    pts.push_back(k.point(node));
    return true;
  });
  return pts;
}

OrbitScanResult orbit_meets_subspace(const RootSystem& rs, const RationalVector& v, const Subspace& s,
                                     const ScanOptions& options) {
  const Kernel k = make_kernel(rs, v, &s);
  return options.mode == ScanMode::serial ? scan_serial(k, options) : scan_parallel(k, options);
}

}  // namespace properlie
