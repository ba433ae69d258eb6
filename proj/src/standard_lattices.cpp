#include <string>
#include <vector>

#include "dlat/lattice.hpp"

namespace dlat {
namespace standard {

FiniteLattice boolean(int n) {
  if (n < 0 || n > 8) throw PreconditionError("boolean:n supports 0 <= n <= 8");
  const int size = 1 << n;
  OrderRelation leq(size);
  std::vector<std::string> names;
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) leq.set(a, b, (a & b) == a);
    std::string s = "{";
    for (int i = 0; i < n; ++i) {
      if (a & (1 << i)) {
        if (s.size() > 1) s += ',';
        s += std::to_string(i + 1);
      }
    }
    names.push_back(s + "}");
  }
  return FiniteLattice::build(leq, std::move(names));
}

FiniteLattice chain(int n) {
  if (n < 1 || n > 256) throw PreconditionError("chain:n supports 1 <= n <= 256");
  OrderRelation leq(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq.set(a, b);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(std::to_string(a));
  return FiniteLattice::build(leq, std::move(names));
}

namespace {

FiniteLattice from_covers(int n, std::initializer_list<std::pair<int, int>> below,
                          std::vector<std::string> names) {
  OrderRelation leq(n);
  for (auto [lo, hi] : below) leq.set(lo, hi);
  leq.close_reflexive_transitive();
  return FiniteLattice::build(leq, std::move(names));
}

}  // namespace

FiniteLattice m3() {
  return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

// 0 < a < b < 1 on one side, 0 < c < 1 on the other.
FiniteLattice n5() {
  return from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  const int na = a.size(), nb = b.size();
  if (static_cast<long>(na) * nb > 512) throw PreconditionError("product: more than 512 elements");
  OrderRelation leq(na * nb);
  std::vector<std::string> names;
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) leq.set(x, y, a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb));
    names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
  }
  return FiniteLattice::build(leq, std::move(names));
}

FiniteLattice divisors(long m) {
  if (m < 1 || m > 100000000) throw PreconditionError("divisors:m supports 1 <= m <= 1e8");
  std::vector<long> ds;
  for (long d = 1; d <= m; ++d) {
    if (d * d > m) break;
    if (m % d == 0) ds.push_back(d);
  }
  for (auto i = ds.size(); i-- > 0;)
    if (ds[i] * ds[i] != m) ds.push_back(m / ds[i]);
  const int n = static_cast<int>(ds.size());
  OrderRelation leq(n);
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) leq.set(x, y, ds[y] % ds[x] == 0);
    names.push_back(std::to_string(ds[x]));
  }
  return FiniteLattice::build(leq, std::move(names));
}

}  // namespace standard

namespace {

int parse_size(const std::string& family, const std::string& text) {
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw PreconditionError("bad size in lattice family '" + family + "'");
  }
}

}  // namespace

FiniteLattice make_standard(const std::string& family) {
  if (family.rfind("product(", 0) == 0 && family.back() == ')') {
    std::string inner = family.substr(8, family.size() - 9);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        return standard::product(make_standard(inner.substr(0, i)), make_standard(inner.substr(i + 1)));
      }
    }
    throw PreconditionError("product(...) needs two comma-separated families");
  }
  if (family == "m3") return standard::m3();
  if (family == "n5") return standard::n5();
  auto colon = family.find(':');
  if (colon != std::string::npos) {
    std::string name = family.substr(0, colon);
    std::string size = family.substr(colon + 1);
    if (name == "boolean") return standard::boolean(parse_size(family, size));
    if (name == "chain") return standard::chain(parse_size(family, size));
    if (name == "divisors") return standard::divisors(parse_size(family, size));
  }
  throw PreconditionError("unknown lattice family '" + family + "'");
}

}  // namespace dlat
