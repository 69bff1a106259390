#include "lielab/gcm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "lielab/errors.hpp"

namespace lielab {

std::string to_string(GcmBucket b) {
  switch (b) {
    case GcmBucket::Finite: return "FINITE";
    case GcmBucket::Affine: return "AFFINE";
    case GcmBucket::IndefiniteHyperbolic: return "INDEFINITE_HYPERBOLIC";
    case GcmBucket::IndefiniteNonHyperbolic: return "INDEFINITE_NON_HYPERBOLIC";
  }
  return "?";
}

GcmBucket bucket_from_string(std::string_view s) {
  for (auto b : {GcmBucket::Finite, GcmBucket::Affine, GcmBucket::IndefiniteHyperbolic,
                 GcmBucket::IndefiniteNonHyperbolic})
    if (to_string(b) == s) return b;
  throw UnknownName("unknown GCM bucket '" + std::string(s) + "'");
}

void validate_gcm(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw NotAGCM("empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (a[i].size() != n) throw NotAGCM("matrix is not square (row " + std::to_string(i + 1) + ")");
  auto at = [](std::size_t i, std::size_t j) { return "A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"; };
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw NotAGCM(at(i, i) + " = " + std::to_string(a[i][i]) + ", diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw NotAGCM(at(i, j) + " = " + std::to_string(a[i][j]) + ", off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw NotAGCM(at(i, j) + " = " + std::to_string(a[i][j]) + " but " + at(j, i) + " = " +
                      std::to_string(a[j][i]) + ", zero pattern must be symmetric");
    }
  }
}

std::vector<std::vector<int>> component_vertices(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && a[v][w] != 0 && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

IntMatrix principal_submatrix(const IntMatrix& a, const std::vector<int>& vertices) {
  IntMatrix m(vertices.size(), std::vector<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j) m[i][j] = a[vertices[i]][vertices[j]];
  return m;
}

std::vector<IntMatrix> components(const IntMatrix& a) {
  std::vector<IntMatrix> out;
  for (const auto& c : component_vertices(a)) out.push_back(principal_submatrix(a, c));
  return out;
}

Integer integer_determinant(const IntMatrix& a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return n == 0 ? Integer(1) : Integer(sign * m[n - 1][n - 1]);
}

namespace {

constexpr int kMaxClassifySize = 16;

std::vector<int> mask_vertices(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) v.push_back(i);
  return v;
}

bool connected_mask(const IntMatrix& a, unsigned mask) {
  const auto v = mask_vertices(mask);
  unsigned seen = 1u << v.front();
  std::vector<int> stack{v.front()};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : v)
      if (!(seen >> y & 1) && a[x][y] != 0) {
        seen |= 1u << y;
        stack.push_back(y);
      }
  }
  return seen == mask;
}

}  // namespace

GcmBucket classify_indecomposable(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n > kMaxClassifySize)
    throw SizeLimitExceeded("GCM classification is limited to size " + std::to_string(kMaxClassifySize));
  const unsigned full = (1u << n) - 1;
  // all_pos[S]: every principal minor of A_S (including det A_S) is positive.
  std::vector<int> det_sign(full + 1, 1);
  std::vector<char> all_pos(full + 1, 1), proper_pos(full + 1, 1);
  for (unsigned s = 1; s <= full; ++s) {
    det_sign[s] = sgn(integer_determinant(principal_submatrix(a, mask_vertices(s))));
    bool proper = true;
    for (unsigned rest = s; rest; rest &= rest - 1) {
      const unsigned smaller = s & ~(rest & -rest);
      if (smaller && !all_pos[smaller]) proper = false;
    }
    proper_pos[s] = proper;
    all_pos[s] = proper && det_sign[s] > 0;
  }
  auto finite_or_affine = [&](unsigned s) { return all_pos[s] || (proper_pos[s] && det_sign[s] == 0); };
  if (all_pos[full]) return GcmBucket::Finite;
  if (proper_pos[full] && det_sign[full] == 0) return GcmBucket::Affine;
  for (unsigned s = 1; s < full; ++s)
    if (connected_mask(a, s) && !finite_or_affine(s)) return GcmBucket::IndefiniteNonHyperbolic;
  return GcmBucket::IndefiniteHyperbolic;
}

std::string GcmVerdict::name() const {
  std::string out;
  for (const auto& c : components) {
    if (c.name.empty()) return "";
    out += (out.empty() ? "" : " x ") + c.name;
  }
  return out;
}

GcmVerdict classify(const IntMatrix& a) {
  validate_gcm(a);
  GcmVerdict v;
  for (const auto& vertices : component_vertices(a)) {
    ComponentVerdict c;
    c.vertices = vertices;
    c.matrix = principal_submatrix(a, vertices);
    c.bucket = classify_indecomposable(c.matrix);
    if (c.bucket == GcmBucket::Finite || c.bucket == GcmBucket::Affine) c.name = gcm_name(c.matrix);
    v.bucket = std::max(v.bucket, c.bucket);
    v.components.push_back(std::move(c));
  }
  return v;
}

namespace {

struct NamedGcm {
  std::string name;
  IntMatrix matrix;
};

// Cartan matrix from a Dynkin graph: every listed edge (i, j) gets a_ij = a_ji = -1
// unless overridden by (i, j, a_ij) in `weights`.
IntMatrix dynkin(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<std::tuple<int, int, int>>& weights = {}) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (auto [i, j] : edges) m[i][j] = m[j][i] = -1;
  for (auto [i, j, w] : weights) m[i][j] = w;
  return m;
}

std::vector<std::pair<int, int>> chain(int from, int to) {
  std::vector<std::pair<int, int>> e;
  for (int i = from; i < to; ++i) e.emplace_back(i, i + 1);
  return e;
}

std::vector<std::pair<int, int>> plus(std::vector<std::pair<int, int>> e, std::initializer_list<std::pair<int, int>> more) {
  e.insert(e.end(), more);
  return e;
}

// Kac's conventions, a_ij = <α_i^∨, α_j>. Affine node 0 comes first.
std::vector<NamedGcm> build_name_table() {
  constexpr int kMaxRank = 10;
  std::vector<NamedGcm> t;
  auto add = [&](std::string name, IntMatrix m) { t.push_back({std::move(name), std::move(m)}); };
  for (int l = 1; l <= kMaxRank; ++l) add("A" + std::to_string(l), dynkin(l, chain(0, l - 1)));
  // B2 and C2 coincide up to relabeling; the table keeps the name C2.
  for (int l = 2; l <= kMaxRank; ++l) add("C" + std::to_string(l), dynkin(l, chain(0, l - 1), {{l - 2, l - 1, -2}}));
  for (int l = 3; l <= kMaxRank; ++l) add("B" + std::to_string(l), dynkin(l, chain(0, l - 1), {{l - 1, l - 2, -2}}));
  for (int l = 4; l <= kMaxRank; ++l) add("D" + std::to_string(l), dynkin(l, plus(chain(0, l - 2), {{l - 3, l - 1}})));
  // Bourbaki numbering 1-3-4-5-6-7-8 with 2 on 4, shifted to 0-based.
  for (int l = 6; l <= 8; ++l) {
    std::vector<std::pair<int, int>> e{{0, 2}, {1, 3}};
    for (int i = 2; i < l - 1; ++i) e.emplace_back(i, i + 1);
    add("E" + std::to_string(l), dynkin(l, e));
  }
  add("F4", dynkin(4, chain(0, 3), {{1, 2, -2}}));
  add("G2", dynkin(2, chain(0, 1), {{1, 0, -3}}));

  add("A1^(1)", dynkin(2, chain(0, 1), {{0, 1, -2}, {1, 0, -2}}));
  for (int l = 2; l < kMaxRank; ++l) add("A" + std::to_string(l) + "^(1)", dynkin(l + 1, plus(chain(0, l), {{l, 0}})));
  for (int l = 3; l < kMaxRank; ++l)
    add("B" + std::to_string(l) + "^(1)", dynkin(l + 1, plus(chain(1, l), {{0, 2}}), {{l, l - 1, -2}}));
  for (int l = 2; l < kMaxRank; ++l)
    add("C" + std::to_string(l) + "^(1)", dynkin(l + 1, chain(0, l), {{1, 0, -2}, {l - 1, l, -2}}));
  for (int l = 4; l < kMaxRank; ++l)
    add("D" + std::to_string(l) + "^(1)", dynkin(l + 1, plus(chain(1, l - 1), {{0, 2}, {l - 2, l}})));
  add("E6^(1)", dynkin(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}));
  add("E7^(1)", dynkin(8, plus(chain(0, 6), {{3, 7}})));
  add("E8^(1)", dynkin(9, plus(chain(0, 7), {{5, 8}})));
  add("F4^(1)", dynkin(5, chain(0, 4), {{3, 2, -2}}));
  add("G2^(1)", dynkin(3, chain(0, 2), {{2, 1, -3}}));
  add("A2^(2)", dynkin(2, chain(0, 1), {{0, 1, -4}}));
  for (int l = 2; l < kMaxRank / 2; ++l)
    add("A" + std::to_string(2 * l) + "^(2)", dynkin(l + 1, chain(0, l), {{0, 1, -2}, {l - 1, l, -2}}));
  for (int l = 3; l < kMaxRank / 2; ++l)
    add("A" + std::to_string(2 * l - 1) + "^(2)", dynkin(l + 1, plus(chain(1, l), {{0, 2}}), {{l - 1, l, -2}}));
  for (int l = 2; l < kMaxRank; ++l)
    add("D" + std::to_string(l + 1) + "^(2)", dynkin(l + 1, chain(0, l), {{0, 1, -2}, {l, l - 1, -2}}));
  add("E6^(2)", dynkin(5, chain(0, 4), {{2, 3, -2}}));
  add("D4^(3)", dynkin(3, chain(0, 2), {{1, 2, -3}}));
  return t;
}

bool permutation_isomorphic(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  auto signature = [n](const IntMatrix& m, int i) {
    std::vector<int> row, col;
    for (int j = 0; j < n; ++j)
      if (j != i) row.push_back(m[i][j]), col.push_back(m[j][i]);
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    return std::make_pair(row, col);
  };
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    const auto sig = signature(a, i);
    for (int k = 0; k < n; ++k) {
      if (used[k] || signature(b, k) != sig) continue;
      bool ok = a[i][i] == b[k][k];
      for (int j = 0; j < i && ok; ++j) ok = a[i][j] == b[k][perm[j]] && a[j][i] == b[perm[j]][k];
      if (!ok) continue;
      perm[i] = k;
      used[k] = 1;
      if (extend(i + 1)) return true;
      used[k] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace

std::string gcm_name(const IntMatrix& a) {
  static const std::vector<NamedGcm> table = build_name_table();
  for (const auto& entry : table)
    if (permutation_isomorphic(a, entry.matrix)) return entry.name;
  return "";
}

IntMatrix parse_gcm(std::string_view text) {
  IntMatrix rows;
  std::string row;
  std::string s(text);
  std::replace(s.begin(), s.end(), '\n', ';');
  std::istringstream in(s);
  int line = 0;
  while (std::getline(in, row, ';')) {
    ++line;
    std::istringstream fields(row);
    std::vector<int> r;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(line, "expected an integer matrix entry, got '" + tok + "'");
      }
    }
    if (r.empty()) continue;
    if (!rows.empty() && r.size() != rows.front().size())
      throw ParseError(line, "row has " + std::to_string(r.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_gcm(const IntMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < a[i].size(); ++j) out += (j ? " " : "") + std::to_string(a[i][j]);
  }
  return out;
}

nlohmann::ordered_json to_json(const GcmVerdict& v) {
  nlohmann::ordered_json j;
  j["bucket"] = to_string(v.bucket);
  j["name"] = v.name();
  j["decomposable"] = v.decomposable();
  auto comps = nlohmann::ordered_json::array();
  for (const auto& c : v.components) {
    nlohmann::ordered_json cj;
    std::vector<int> one_based;
    for (int x : c.vertices) one_based.push_back(x + 1);
    cj["vertices"] = one_based;
    cj["matrix"] = c.matrix;
    cj["bucket"] = to_string(c.bucket);
    cj["name"] = c.name;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

}  // namespace lielab
