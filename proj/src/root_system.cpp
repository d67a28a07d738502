#include "aslw/root_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "aslw/errors.hpp"

namespace aslw {

namespace {

struct CartanSpec {
  Mat cartan;
  Vec sym;
  Coeffs theta;
};

Mat path_cartan(int n) {
  Mat a(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
  return a;
}

CartanSpec family_data(Family family, int rank) {
  int n = rank;
  CartanSpec s;
  switch (family) {
    case Family::A: {
      if (n < 1) throw configuration_error("type A requires rank >= 1");
      s.cartan = path_cartan(n);
      s.sym = Vec(n, 1);
      s.theta = Coeffs(n, 1);
      break;
    }
    case Family::B: {
      if (n < 2) throw configuration_error("type B requires rank >= 2");
      s.cartan = path_cartan(n);
      s.cartan[n - 1][n - 2] = -2;
      s.sym = Vec(n, 2);
      s.sym[n - 1] = 1;
      s.theta = Coeffs(n, 2);
      s.theta[0] = 1;
      break;
    }
    case Family::C: {
      if (n < 2) throw configuration_error("type C requires rank >= 2");
      s.cartan = path_cartan(n);
      s.cartan[n - 2][n - 1] = -2;
      s.sym = Vec(n, 1);
      s.sym[n - 1] = 2;
      s.theta = Coeffs(n, 2);
      s.theta[n - 1] = 1;
      break;
    }
    case Family::D: {
      if (n < 4) throw configuration_error("type D requires rank >= 4");
      s.cartan = path_cartan(n - 1);
      for (auto& row : s.cartan) row.push_back(0);
      s.cartan.push_back(Vec(n, 0));
      s.cartan[n - 1][n - 1] = 2;
      s.cartan[n - 3][n - 1] = -1;
      s.cartan[n - 1][n - 3] = -1;
      s.sym = Vec(n, 1);
      s.theta = Coeffs(n, 2);
      s.theta[0] = 1;
      s.theta[n - 2] = 1;
      s.theta[n - 1] = 1;
      break;
    }
    case Family::E: {
      if (n < 6 || n > 8) throw configuration_error("type E requires rank 6, 7 or 8");
      // Path on nodes 1..n-1 with node n attached to a middle node.
      s.cartan = path_cartan(n - 1);
      for (auto& row : s.cartan) row.push_back(0);
      s.cartan.push_back(Vec(n, 0));
      s.cartan[n - 1][n - 1] = 2;
      int attach = (n == 8) ? 4 : 2;  // 0-based: node 5 for E8, node 3 for E6/E7
      s.cartan[attach][n - 1] = -1;
      s.cartan[n - 1][attach] = -1;
      s.sym = Vec(n, 1);
      if (n == 6) s.theta = {1, 2, 3, 2, 1, 2};
      if (n == 7) s.theta = {2, 3, 4, 3, 2, 1, 2};
      if (n == 8) s.theta = {2, 3, 4, 5, 6, 4, 2, 3};
      break;
    }
    case Family::F: {
      if (n != 4) throw configuration_error("type F requires rank 4");
      s.cartan = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      s.sym = {2, 2, 1, 1};
      s.theta = {2, 3, 4, 2};
      break;
    }
    case Family::G: {
      if (n != 2) throw configuration_error("type G requires rank 2");
      s.cartan = {{2, -1}, {-3, 2}};
      s.sym = {3, 1};
      s.theta = {2, 3};
      break;
    }
    default:
      throw configuration_error("unknown family");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(s.sym[i] * s.cartan[i][j] == s.sym[j] * s.cartan[j][i],
              "symmetrizer does not symmetrize the Cartan matrix");
  return s;
}

std::vector<Coeffs> enumerate_positive_roots(const Mat& cartan) {
  int n = static_cast<int>(cartan.size());
  std::set<Coeffs> roots;
  std::vector<std::vector<Coeffs>> by_height(2);
  for (int i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    roots.insert(e);
    by_height[1].push_back(e);
  }
  for (size_t h = 1; h < by_height.size(); ++h) {
    for (const Coeffs& c : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        // Root string through c in the direction of simple root i:
        // q = p - <c, coroot_i> steps up, p steps down.
        int64_t p = 0;
        Coeffs down = c;
        while (true) {
          down[i] -= 1;
          bool negative = down[i] < 0;
          if (negative || !roots.count(down)) break;
          ++p;
        }
        int64_t ci = 0;
        for (int j = 0; j < n; ++j) ci += cartan[i][j] * c[j];
        int64_t q = p - ci;
        if (q > 0) {
          Coeffs up = c;
          up[i] += 1;
          if (!roots.count(up)) {
            roots.insert(up);
            if (by_height.size() <= h + 1) by_height.resize(h + 2);
            by_height[h + 1].push_back(up);
          }
        }
      }
    }
  }
  std::vector<Coeffs> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const Coeffs& a, const Coeffs& b) {
    int64_t ha = 0, hb = 0;
    for (int64_t x : a) ha += x;
    for (int64_t x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

}  // namespace

bool FiniteRootSystem::is_root(const Coeffs& c) const {
  if (positive_set.count(c)) return true;
  Coeffs neg(c.size());
  for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  return positive_set.count(neg) != 0;
}

std::string FiniteRootSystem::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

FiniteRootSystem build_system(Family family, int rank) {
  CartanSpec spec = family_data(family, rank);
  FiniteRootSystem sys;
  sys.family = family;
  sys.rank = rank;
  sys.cartan = spec.cartan;
  sys.sym = spec.sym;
  sys.positive_roots = enumerate_positive_roots(spec.cartan);
  sys.positive_set.insert(sys.positive_roots.begin(), sys.positive_roots.end());
  sys.highest_root = sys.positive_roots.back();
  require(sys.highest_root == spec.theta, "enumerated highest root disagrees with tabulated one");
  sys.marks.assign(rank + 1, 0);
  sys.marks[0] = 1;
  for (int i = 0; i < rank; ++i) sys.marks[i + 1] = sys.highest_root[i];
  sys.delta_height = 0;
  for (int64_t m : sys.marks) sys.delta_height += m;
  return sys;
}

FiniteRootSystem build_system(const std::string& name) {
  if (name.size() < 2) throw configuration_error("system name must be a family letter plus rank, e.g. G2");
  char f = name[0];
  if (f < 'A' || f > 'G') throw configuration_error("unknown family letter: " + name);
  int rank;
  try {
    size_t pos = 0;
    rank = std::stoi(name.substr(1), &pos);
    if (pos != name.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw configuration_error("bad rank in system name: " + name);
  }
  return build_system(static_cast<Family>(f), rank);
}

int64_t pairing(const FiniteRootSystem& sys, const Coeffs& x, const Coeffs& y) {
  require(x.size() == static_cast<size_t>(sys.rank) && y.size() == static_cast<size_t>(sys.rank),
          "pairing expects finite coordinates");
  int64_t acc = 0;
  for (int i = 0; i < sys.rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < sys.rank; ++j)
      acc += x[i] * sys.sym[i] * sys.cartan[i][j] * y[j];
  }
  return acc;
}

Coeffs projection(const FiniteRootSystem& sys, const AffineCoeffs& v) {
  require(v.size() == static_cast<size_t>(sys.rank + 1), "affine coordinates have size rank+1");
  Coeffs f(sys.rank);
  for (int i = 0; i < sys.rank; ++i) f[i] = v[i + 1] - v[0] * sys.highest_root[i];
  return f;
}

Classified classify(const FiniteRootSystem& sys, const AffineCoeffs& v) {
  Classified out;
  out.finite = projection(sys, v);
  out.level = v[0];
  bool all_zero = true, all_nonneg = true, all_nonpos = true;
  for (int64_t c : v) {
    if (c != 0) all_zero = false;
    if (c < 0) all_nonneg = false;
    if (c > 0) all_nonpos = false;
  }
  bool finite_zero = std::all_of(out.finite.begin(), out.finite.end(), [](int64_t c) { return c == 0; });
  if (all_zero) {
    out.kind = RootKind::not_a_root;
  } else if (finite_zero) {
    out.kind = RootKind::imaginary;
  } else if (sys.is_root(out.finite)) {
    out.kind = RootKind::real;
  } else {
    out.kind = RootKind::not_a_root;
  }
  out.positive = !all_zero && all_nonneg;
  if (out.kind != RootKind::not_a_root)
    require(all_nonneg || all_nonpos, "a root must have coordinates of a single sign");
  return out;
}

int64_t affine_height(const AffineCoeffs& v) {
  int64_t h = 0;
  for (int64_t c : v) h += c;
  return h;
}

AffineCoeffs delta_coords(const FiniteRootSystem& sys) {
  return AffineCoeffs(sys.marks.begin(), sys.marks.end());
}

AffineCoeffs simple_root_affine(const FiniteRootSystem& sys, int letter) {
  if (letter < 0 || letter > sys.rank) throw usage_error("letter outside the extended alphabet");
  AffineCoeffs v(sys.rank + 1, 0);
  v[letter] = 1;
  return v;
}

AffineCoeffs add(const AffineCoeffs& a, const AffineCoeffs& b) {
  require(a.size() == b.size(), "coordinate size mismatch");
  AffineCoeffs out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

AffineCoeffs sub(const AffineCoeffs& a, const AffineCoeffs& b) {
  require(a.size() == b.size(), "coordinate size mismatch");
  AffineCoeffs out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

AffineCoeffs add_delta(const FiniteRootSystem& sys, const AffineCoeffs& a, int64_t k) {
  AffineCoeffs out = a;
  for (int i = 0; i <= sys.rank; ++i) out[i] += k * sys.marks[i];
  return out;
}

std::vector<std::pair<AffineCoeffs, AffineCoeffs>> decompositions(
    const FiniteRootSystem& sys, const AffineCoeffs& v) {
  Classified cv = classify(sys, v);
  if (cv.kind == RootKind::not_a_root || !cv.positive)
    throw usage_error("decompositions expects a positive affine root");
  std::set<std::pair<AffineCoeffs, AffineCoeffs>> seen;
  auto consider = [&](const AffineCoeffs& a) {
    AffineCoeffs b(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      b[i] = v[i] - a[i];
      if (b[i] < 0) return;
    }
    Classified cb = classify(sys, b);
    if (cb.kind == RootKind::not_a_root || !cb.positive) return;
    if (a <= b)
      seen.insert({a, b});
    else
      seen.insert({b, a});
  };
  // Positive real candidates at level j: j*delta plus a finite root (any sign
  // of the finite part; level 0 needs the finite part positive).
  for (int64_t j = 0; j <= v[0]; ++j) {
    for (const Coeffs& g : sys.positive_roots) {
      for (int sign : {1, -1}) {
        if (j == 0 && sign < 0) continue;
        AffineCoeffs a(sys.rank + 1);
        a[0] = j;
        bool ok = true;
        for (int i = 0; i < sys.rank; ++i) {
          a[i + 1] = j * sys.highest_root[i] + sign * g[i];
          if (a[i + 1] < 0) ok = false;
        }
        if (ok) consider(a);
      }
    }
    if (j >= 1) consider(add_delta(sys, AffineCoeffs(sys.rank + 1, 0), j));
  }
  return {seen.begin(), seen.end()};
}

std::optional<int> span_index(const std::vector<Coeffs>& vectors, const Coeffs& target) {
  Mat basis;
  for (size_t i = 0; i < vectors.size(); ++i) {
    basis.push_back(vectors[i]);
    if (linalg::in_span(basis, target)) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::string coords_to_string(const AffineCoeffs& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

AffineCoeffs coords_from_string(const std::string& s, int expected_size) {
  AffineCoeffs out;
  std::istringstream is(s);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(piece, &pos));
      if (pos != piece.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw usage_error("bad coordinate value: '" + piece + "'");
    }
  }
  if (expected_size >= 0 && static_cast<int>(out.size()) != expected_size)
    throw usage_error("expected " + std::to_string(expected_size) + " comma-separated coordinates, got " +
                      std::to_string(out.size()));
  return out;
}

}  // namespace aslw
