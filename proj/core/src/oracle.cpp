#include "kissing/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "kissing/combinatorics.hpp"
#include "kissing/errors.hpp"
#include "kissing/lsq.hpp"

namespace kissing {
namespace {

using nlohmann::json;

SimplexPair face_of(const SimplexPair& pair, std::uint32_t p_mask,
                    std::uint32_t q_mask) {
  SimplexPair face;
  face.k = pair.k;
  for (std::size_t i = 0; i < pair.p.size(); ++i) {
    if (p_mask >> i & 1) face.p.push_back(pair.p[i]);
  }
  for (std::size_t i = 0; i < pair.q.size(); ++i) {
    if (q_mask >> i & 1) face.q.push_back(pair.q[i]);
  }
  return face;
}

std::vector<std::vector<int>> lattice_points(int d, int k) {
  std::vector<std::vector<int>> points;
  std::vector<int> p(static_cast<std::size_t>(d), 0);
  for (;;) {
    points.push_back(p);
    // low-index coordinate most significant: points come out in
    // lexicographic order
    int i = d - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == k) {
      p[static_cast<std::size_t>(i--)] = 0;
    }
    if (i < 0) return points;
    ++p[static_cast<std::size_t>(i)];
  }
}

}  // namespace

BigRational simplex_distance_squared(const SimplexPair& pair) {
  validate(pair);
  if (pair.p.size() > 20 || pair.q.size() > 20) {
    throw ResourceGuardError(
        "simplex_distance_squared: too many vertices for face enumeration");
  }
  const std::uint32_t p_full = (1u << pair.p.size()) - 1;
  const std::uint32_t q_full = (1u << pair.q.size()) - 1;
  BigRational best;
  bool have = false;
  for (std::uint32_t pm = 1; pm <= p_full; ++pm) {
    for (std::uint32_t qm = 1; qm <= q_full; ++qm) {
      const SimplexPair face = face_of(pair, pm, qm);
      const PairSystem s = make_system(face);
      const AffineSolution sol = affine_distance(s);
      // Singular faces are covered by their own sub-faces; skip.
      if (sol.singular) continue;
      if (!sharpness_check(sol, s.split)) continue;
      if (!have || sol.squared_distance < best) {
        best = sol.squared_distance;
        have = true;
      }
    }
  }
  // Vertex-vertex faces are never singular and always feasible, so at
  // least one candidate exists.
  return best;
}

BruteForceResult brute_force_epsilon(int d, int k) {
  if (d < 2 || k < 1) {
    throw std::invalid_argument("brute_force_epsilon: need d >= 2, k >= 1");
  }
  u128 count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<unsigned>(k) + 1;
  const unsigned subset_size = static_cast<unsigned>(d) + 1;
  if (count > 1000000 ||
      binomial_u128(static_cast<unsigned>(count), subset_size) > 1000000) {
    throw ResourceGuardError(
        "brute_force_epsilon: more than 10^6 point subsets; "
        "use the row-list search instead");
  }
  const auto points = lattice_points(d, k);
  const unsigned n_points = static_cast<unsigned>(points.size());

  std::optional<BruteForceResult> best;
  std::vector<int> subset(subset_size);
  for (unsigned i = 0; i < subset_size; ++i) subset[i] = static_cast<int>(i);
  do {
    for (int n = 0; n <= (d - 1) / 2; ++n) {
      // choose which n+1 of the subset's points form P; the rest are Q
      std::vector<int> p_pos(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) p_pos[static_cast<std::size_t>(i)] = i;
      do {
        SimplexPair pair;
        pair.k = k;
        std::size_t next = 0;
        for (unsigned pos = 0; pos < subset_size; ++pos) {
          const auto& point = points[static_cast<std::size_t>(
              subset[pos])];
          if (next < p_pos.size() &&
              p_pos[next] == static_cast<int>(pos)) {
            pair.p.push_back(point);
            ++next;
          } else {
            pair.q.push_back(point);
          }
        }
        const BigRational dist = simplex_distance_squared(pair);
        if (dist.sign() > 0 && (!best || dist < best->squared)) {
          best = BruteForceResult{dist, std::move(pair)};
        }
      } while (next_combination(p_pos, subset_size));
    }
  } while (next_combination(subset, n_points));

  if (!best) {
    throw NoCandidateError("brute_force_epsilon: no disjoint pair found");
  }
  return *best;
}

namespace {

std::vector<std::vector<int>> parse_vertices(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_array() || j[name].empty()) {
    throw ParseError(std::string("witness JSON: missing vertex array ") + name);
  }
  std::vector<std::vector<int>> vertices;
  for (const auto& row : j[name]) {
    if (!row.is_array() || row.empty()) {
      throw ParseError("witness JSON: vertex is not a non-empty array");
    }
    std::vector<int> v;
    for (const auto& c : row) {
      if (!c.is_number_integer()) {
        throw ParseError("witness JSON: non-integer coordinate");
      }
      v.push_back(c.get<int>());
    }
    vertices.push_back(std::move(v));
  }
  return vertices;
}

BigInt parse_big(const json& j) {
  try {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<long>());
  } catch (const std::invalid_argument&) {
  }
  throw ParseError("witness JSON: expected a decimal integer");
}

WitnessFixture parse_fixture(const json& j) {
  const json& pair_obj = j.contains("witness") ? j.at("witness") : j;
  WitnessFixture f;
  f.pair.p = parse_vertices(pair_obj, "P");
  f.pair.q = parse_vertices(pair_obj, "Q");
  f.d = static_cast<int>(f.pair.p.front().size());

  int max_coord = 1;
  for (const auto* list : {&f.pair.p, &f.pair.q}) {
    for (const auto& v : *list) {
      for (const int c : v) max_coord = std::max(max_coord, c);
    }
  }
  f.k = j.contains("k") && j["k"].is_number_integer() ? j["k"].get<int>()
                                                      : max_coord;
  f.pair.k = f.k;
  if (j.contains("d") && j["d"].is_number_integer() &&
      j["d"].get<int>() != f.d) {
    throw ParseError("witness JSON: d does not match vertex dimension");
  }
  if (j.contains("expected_inv_sq")) {
    const BigInt expected = parse_big(j["expected_inv_sq"]);
    if (expected.sign() <= 0) {
      throw ParseError("witness JSON: expected_inv_sq must be positive");
    }
    f.expected_inv_squared = expected;
  }
  try {
    validate(f.pair);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("witness JSON: ") + e.what());
  }
  return f;
}

}  // namespace

std::vector<WitnessFixture> parse_witness_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("witness JSON: not an object");
  std::vector<WitnessFixture> fixtures;
  if (doc.contains("fixtures")) {
    if (!doc["fixtures"].is_array()) {
      throw ParseError("witness JSON: fixtures is not an array");
    }
    for (const auto& item : doc["fixtures"]) fixtures.push_back(parse_fixture(item));
  } else {
    fixtures.push_back(parse_fixture(doc));
  }
  return fixtures;
}

std::vector<WitnessFixture> witness_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  auto fixtures = parse_witness_json(text.str());
  for (const auto& f : fixtures) {
    if (!f.expected_inv_squared) {
      throw ParseError("catalog fixture without expected_inv_sq in " + path);
    }
  }
  return fixtures;
}

std::vector<WitnessFixture> witness_catalog() {
  if (const char* env = std::getenv("KISSING_CATALOG")) {
    return witness_catalog(std::string(env));
  }
  return witness_catalog(KISSING_DEFAULT_CATALOG);
}

}  // namespace kissing
